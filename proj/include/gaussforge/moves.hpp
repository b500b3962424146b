#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace gaussforge {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

inline char const* to_string(MoveKind k) {
	switch (k) {
	case MoveKind::R1Insert: return "R1_insert";
	case MoveKind::R1Delete: return "R1_delete";
	case MoveKind::R2Insert: return "R2_insert";
	case MoveKind::R2Delete: return "R2_delete";
	case MoveKind::R3: return "R3";
	}
	return "?";
}

// gaps: insertion gaps (gap g sits before slot g).
// arrows: affected arrow ids; for R3 the roles are top->middle, top->bottom, middle->bottom.
// R1Insert variant: 0 tail first, 1 head first.
// R2Insert variant: 0 tail block first, 1 head block first (only differs when both gaps coincide).
// R2Insert sign is the sign of the first arrow; the second gets the opposite sign.
struct MoveInstance {
	MoveKind kind = MoveKind::R1Insert;
	std::vector<int> gaps;
	std::vector<int> arrows;
	int sign = 1;
	int variant = 0;

	auto operator<=>(MoveInstance const&) const = default;

	std::string describe() const {
		std::string s = to_string(kind);
		for (int g : gaps) { s += " gap " + std::to_string(g); }
		for (int a : arrows) { s += " arrow " + std::to_string(a + 1); }
		if (kind == MoveKind::R1Insert || kind == MoveKind::R2Insert) {
			s += sign > 0 ? " sign +" : " sign -";
			s += " variant " + std::to_string(variant);
		}
		return s;
	}
};

struct MoveResult {
	GaussDiagram diagram;
	std::vector<int> correspondence; // old id -> new id, -1 if removed
	std::vector<int> affected;       // new ids of the arrows created or changed, in role order
};

namespace detail {

inline int gap_count(GaussDiagram const& d) {
	int len = d.endpoint_count();
	return d.host() == Host::Circle ? std::max(1, len) : len + 1;
}

inline int next_slot(GaussDiagram const& d, int s) {
	int len = d.endpoint_count();
	if (s + 1 < len) { return s + 1; }
	return d.host() == Host::Circle ? 0 : -1;
}

inline bool adjacent_endpoints(GaussDiagram const& d, Arrow const& a) {
	return next_slot(d, a.tail) == a.head || next_slot(d, a.head) == a.tail;
}

inline bool r2_pair(GaussDiagram const& d, int x, int y) {
	auto const& a = d.arrow(x);
	auto const& b = d.arrow(y);
	return x != y && a.sign == -b.sign && a.sign != 0 && next_slot(d, a.tail) == b.tail && next_slot(d, a.head) == b.head;
}

// Braid-like third move: all signs equal; pattern 1 has the pairs
// (tail a, tail b), (head a, tail c), (head b, head c) consecutive;
// pattern 2 has each pair reversed.
inline bool r3_pattern(GaussDiagram const& d, int a, int b, int c, bool second) {
	if (a == b || b == c || a == c) { return false; }
	auto const& A = d.arrow(a);
	auto const& B = d.arrow(b);
	auto const& C = d.arrow(c);
	if (A.sign != B.sign || B.sign != C.sign || A.sign == 0) { return false; }
	auto nx = [&](int s) { return next_slot(d, s); };
	if (!second) { return nx(A.tail) == B.tail && nx(A.head) == C.tail && nx(B.head) == C.head; }
	return nx(B.tail) == A.tail && nx(C.tail) == A.head && nx(C.head) == B.head;
}

// Word with extra endpoints spliced in before slot `gap`, tracking keys.
struct Splice {
	int gap;
	int order; // tie-break among splices at the same gap
	std::vector<Endpoint> endpoints;
};

inline MoveResult rebuild(GaussDiagram const& d, std::vector<Endpoint> const& word, std::vector<ArrowAttr> const& attrs,
                          std::vector<int> const& affected_keys) {
	std::vector<int> index;
	MoveResult r;
	r.diagram = GaussDiagram::from_word(d.host(), word, attrs, d.directed(), &index);
	r.correspondence.assign(d.size(), -1);
	for (int i = 0; i < d.size(); ++i) {
		if (i < static_cast<int>(index.size())) { r.correspondence[i] = index[i]; }
	}
	for (int k : affected_keys) { r.affected.push_back(index[k]); }
	return r;
}

inline MoveResult insert_blocks(GaussDiagram const& d, std::vector<Splice> splices, std::vector<ArrowAttr> extra) {
	auto attrs = attrs_of(d);
	int base = static_cast<int>(attrs.size());
	std::vector<int> affected;
	for (std::size_t i = 0; i < extra.size(); ++i) {
		attrs.push_back(extra[i]);
		affected.push_back(base + static_cast<int>(i));
	}
	std::sort(splices.begin(), splices.end(), [](auto const& x, auto const& y) {
		return x.gap != y.gap ? x.gap < y.gap : x.order < y.order;
	});
	std::vector<Endpoint> word;
	std::size_t sp = 0;
	for (int s = 0; s <= d.endpoint_count(); ++s) {
		while (sp < splices.size() && splices[sp].gap == s) {
			for (auto e : splices[sp].endpoints) {
				e.arrow += base;
				word.push_back(e);
			}
			++sp;
		}
		if (s < d.endpoint_count()) { word.push_back(d.slot(s)); }
	}
	auto r = rebuild(d, word, attrs, affected);
	r.correspondence.resize(d.size());
	return r;
}

inline MoveResult remove_arrows(GaussDiagram const& d, std::vector<int> const& ids) {
	std::vector<char> drop(d.size(), 0);
	for (int id : ids) { drop[id] = 1; }
	std::vector<int> keep;
	for (int i = 0; i < d.size(); ++i) {
		if (!drop[i]) { keep.push_back(i); }
	}
	std::vector<int> index;
	MoveResult r;
	r.diagram = restrict_to(d, keep, &index);
	r.correspondence.assign(d.size(), -1);
	for (std::size_t k = 0; k < keep.size(); ++k) { r.correspondence[keep[k]] = index[k]; }
	return r;
}

} // namespace detail

inline std::vector<MoveInstance> enumerate_moves(GaussDiagram const& d) {
	std::vector<MoveInstance> out;
	if (!d.directed()) { throw ValidationError("moves need a directed diagram"); }
	int gaps = detail::gap_count(d);
	int n = d.size();
	for (int g = 0; g < gaps; ++g) {
		for (int sign : {1, -1}) {
			for (int v : {0, 1}) { out.push_back({MoveKind::R1Insert, {g}, {}, sign, v}); }
		}
	}
	for (int i = 0; i < n; ++i) {
		if (detail::adjacent_endpoints(d, d.arrow(i))) { out.push_back({MoveKind::R1Delete, {}, {i}, 0, 0}); }
	}
	for (int gt = 0; gt < gaps; ++gt) {
		for (int gh = 0; gh < gaps; ++gh) {
			for (int sign : {1, -1}) {
				out.push_back({MoveKind::R2Insert, {gt, gh}, {}, sign, 0});
				if (gt == gh) { out.push_back({MoveKind::R2Insert, {gt, gh}, {}, sign, 1}); }
			}
		}
	}
	for (int x = 0; x < n; ++x) {
		auto nt = detail::next_slot(d, d.arrow(x).tail);
		if (nt < 0) { continue; }
		int y = d.slot(nt).arrow;
		if (!d.slot(nt).head && detail::r2_pair(d, x, y)) { out.push_back({MoveKind::R2Delete, {}, {x, y}, 0, 0}); }
	}
	for (int a = 0; a < n; ++a) {
		auto const& A = d.arrow(a);
		// pattern 1: b's tail follows a's tail; pattern 2: a's tail follows b's tail.
		int s1 = detail::next_slot(d, A.tail);
		if (s1 >= 0 && !d.slot(s1).head) {
			int b = d.slot(s1).arrow;
			int s2 = detail::next_slot(d, A.head);
			if (s2 >= 0 && !d.slot(s2).head) {
				int c = d.slot(s2).arrow;
				if (detail::r3_pattern(d, a, b, c, false)) { out.push_back({MoveKind::R3, {}, {a, b, c}, 0, 0}); }
			}
		}
		for (int b = 0; b < n; ++b) {
			if (b == a || detail::next_slot(d, d.arrow(b).tail) != A.tail) { continue; }
			for (int c = 0; c < n; ++c) {
				if (c != a && c != b && detail::next_slot(d, d.arrow(c).tail) == A.head &&
				    detail::r3_pattern(d, a, b, c, true)) {
					out.push_back({MoveKind::R3, {}, {a, b, c}, 0, 1});
				}
			}
		}
	}
	return out;
}

inline MoveResult apply_move_tracked(GaussDiagram const& d, MoveInstance const& mv) {
	auto stale = [&] { return ValidationError("stale move site: " + mv.describe()); };
	int gaps = detail::gap_count(d);
	auto gap_ok = [&](int g) { return g >= 0 && g < gaps; };
	switch (mv.kind) {
	case MoveKind::R1Insert: {
		if (mv.gaps.size() != 1 || !gap_ok(mv.gaps[0]) || (mv.sign != 1 && mv.sign != -1)) { throw stale(); }
		std::vector<Endpoint> e = {{0, false}, {0, true}};
		if (mv.variant == 1) { std::swap(e[0], e[1]); }
		return detail::insert_blocks(d, {{mv.gaps[0], 0, e}}, {{mv.sign, Label{}}});
	}
	case MoveKind::R1Delete: {
		if (mv.arrows.size() != 1 || mv.arrows[0] < 0 || mv.arrows[0] >= d.size() ||
		    !detail::adjacent_endpoints(d, d.arrow(mv.arrows[0]))) {
			throw stale();
		}
		return detail::remove_arrows(d, mv.arrows);
	}
	case MoveKind::R2Insert: {
		if (mv.gaps.size() != 2 || !gap_ok(mv.gaps[0]) || !gap_ok(mv.gaps[1]) || (mv.sign != 1 && mv.sign != -1)) {
			throw stale();
		}
		detail::Splice tails{mv.gaps[0], mv.variant == 0 ? 0 : 1, {{0, false}, {1, false}}};
		detail::Splice heads{mv.gaps[1], mv.variant == 0 ? 1 : 0, {{0, true}, {1, true}}};
		return detail::insert_blocks(d, {tails, heads}, {{mv.sign, Label{}}, {-mv.sign, Label{}}});
	}
	case MoveKind::R2Delete: {
		if (mv.arrows.size() != 2 || mv.arrows[0] < 0 || mv.arrows[1] < 0 || mv.arrows[0] >= d.size() ||
		    mv.arrows[1] >= d.size() || !detail::r2_pair(d, mv.arrows[0], mv.arrows[1])) {
			throw stale();
		}
		return detail::remove_arrows(d, mv.arrows);
	}
	case MoveKind::R3: {
		if (mv.arrows.size() != 3) { throw stale(); }
		for (int a : mv.arrows) {
			if (a < 0 || a >= d.size()) { throw stale(); }
		}
		int a = mv.arrows[0], b = mv.arrows[1], c = mv.arrows[2];
		if (!detail::r3_pattern(d, a, b, c, mv.variant == 1)) { throw stale(); }
		auto word = detail::word_of(d);
		auto swap_pair = [&](int s) { std::swap(word[s], word[detail::next_slot(d, s)]); };
		auto const& A = d.arrow(a);
		auto const& B = d.arrow(b);
		auto const& C = d.arrow(c);
		if (mv.variant == 0) {
			swap_pair(A.tail);
			swap_pair(A.head);
			swap_pair(B.head);
		} else {
			swap_pair(B.tail);
			swap_pair(C.tail);
			swap_pair(C.head);
		}
		return detail::rebuild(d, word, detail::attrs_of(d), {a, b, c});
	}
	}
	throw stale();
}

inline GaussDiagram apply_move(GaussDiagram const& d, MoveInstance const& mv) { return apply_move_tracked(d, mv).diagram; }

// Reverses direction and negates sign.
inline GaussDiagram switch_arrow(GaussDiagram const& d, int id) {
	d.check_id(id);
	return with_attrs(d, [&](int i, Arrow& a) {
		if (i == id) {
			std::swap(a.tail, a.head);
			a.sign = -a.sign;
		}
	});
}

// Reverses direction only.
inline GaussDiagram flip_arrow(GaussDiagram const& d, int id) {
	d.check_id(id);
	return with_attrs(d, [&](int i, Arrow& a) {
		if (i == id) { std::swap(a.tail, a.head); }
	});
}

struct WalkOptions {
	int max_arrows = 16;
};

// Picks a move kind uniformly among the kinds available, then an instance
// uniformly within it. Insertions are rarely chosen at or above the cap.
inline std::vector<GaussDiagram> random_walk(GaussDiagram const& start, int steps, std::uint64_t seed,
                                             WalkOptions const& opt = {}, std::vector<MoveInstance>* moves = nullptr) {
	std::mt19937_64 rng(seed);
	std::vector<GaussDiagram> path{start};
	GaussDiagram cur = start;
	for (int step = 0; step < steps; ++step) {
		auto all = enumerate_moves(cur);
		std::array<std::vector<int>, 5> by_kind;
		for (int i = 0; i < static_cast<int>(all.size()); ++i) { by_kind[static_cast<int>(all[i].kind)].push_back(i); }
		bool capped = cur.size() >= opt.max_arrows;
		std::array<std::uint64_t, 5> weight{};
		std::uint64_t total = 0;
		for (int k = 0; k < 5; ++k) {
			if (by_kind[k].empty()) { continue; }
			bool insertion = k == static_cast<int>(MoveKind::R1Insert) || k == static_cast<int>(MoveKind::R2Insert);
			weight[k] = insertion && capped ? 1 : 20;
			total += weight[k];
		}
		std::uint64_t r = rng() % total;
		int kind = 0;
		while (r >= weight[kind]) {
			r -= weight[kind];
			++kind;
		}
		auto const& pool = by_kind[kind];
		auto const& mv = all[pool[rng() % pool.size()]];
		cur = apply_move(cur, mv);
		path.push_back(cur);
		if (moves) { moves->push_back(mv); }
	}
	return path;
}

} // namespace gaussforge
