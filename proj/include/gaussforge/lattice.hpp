#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "diagram_sum.hpp"
#include "exact_rank.hpp"

namespace gaussforge {

enum class RelationKind { Q1, Q2, Q3, OneT, NS, TwoT, FourT, SixT };

inline char const* to_string(RelationKind k) {
	switch (k) {
	case RelationKind::Q1: return "Q1";
	case RelationKind::Q2: return "Q2";
	case RelationKind::Q3: return "Q3";
	case RelationKind::OneT: return "1T";
	case RelationKind::NS: return "NS";
	case RelationKind::TwoT: return "2T";
	case RelationKind::FourT: return "4T";
	case RelationKind::SixT: return "6T";
	}
	return "?";
}

enum class Flavor { DirectedQ, UndirectedQbar, SixTOneT, TwoTOneT, FourTOneT, Polyak };

inline char const* to_string(Flavor f) {
	switch (f) {
	case Flavor::DirectedQ: return "directed_Q";
	case Flavor::UndirectedQbar: return "undirected_Qbar";
	case Flavor::SixTOneT: return "sixT_oneT";
	case Flavor::TwoTOneT: return "twoT_oneT";
	case Flavor::FourTOneT: return "fourT_oneT";
	case Flavor::Polyak: return "polyak";
	}
	return "?";
}

inline Flavor parse_flavor(std::string const& s) {
	for (auto f : {Flavor::DirectedQ, Flavor::UndirectedQbar, Flavor::SixTOneT, Flavor::TwoTOneT, Flavor::FourTOneT,
	               Flavor::Polyak}) {
		if (s == to_string(f)) { return f; }
	}
	throw ValidationError("unknown flavor '" + s + "'");
}

// Which diagrams span the free group: arrow counts in [min_arrows, max_arrows],
// labels 1..m+1 (only m+1 when polyak), signs +- (or 0 when unsigned).
struct BasisSpec {
	int min_arrows = 0;
	int max_arrows = 0;
	int m = 1;
	bool directed = true;
	bool is_signed = true;
	bool polyak = false;

	std::vector<Label> labels() const {
		std::vector<Label> out;
		for (int l = polyak ? m + 1 : 1; l <= m + 1; ++l) { out.push_back(Label::of(l)); }
		return out;
	}
	std::vector<int> signs() const { return is_signed ? std::vector<int>{1, -1} : std::vector<int>{0}; }
};

class GeneratorBasis {
public:
	explicit GeneratorBasis(BasisSpec spec) : spec_(spec) {}

	BasisSpec const& spec() const { return spec_; }
	std::vector<GaussDiagram> const& generators() const { return gens_; }
	int size() const { return static_cast<int>(gens_.size()); }
	int find(GaussDiagram const& d) const {
		auto it = index_.find(d);
		return it == index_.end() ? -1 : it->second;
	}
	void push(GaussDiagram d) {
		index_.emplace(d, static_cast<int>(gens_.size()));
		gens_.push_back(std::move(d));
	}

private:
	BasisSpec spec_;
	std::vector<GaussDiagram> gens_;
	std::map<GaussDiagram, int> index_;
};

inline std::int64_t double_factorial_odd(int k) { // (2k-1)!!
	std::int64_t r = 1;
	for (int i = 1; i <= 2 * k - 1; i += 2) { r *= i; }
	return r;
}

inline std::int64_t generator_count(BasisSpec const& s) {
	std::int64_t total = 0;
	std::int64_t per = (s.directed ? 2 : 1) * static_cast<std::int64_t>(s.signs().size()) * static_cast<std::int64_t>(s.labels().size());
	for (int a = s.min_arrows; a <= s.max_arrows; ++a) {
		std::int64_t term = double_factorial_odd(a);
		for (int i = 0; i < a; ++i) {
			term *= per;
			if (term > (std::int64_t{1} << 50)) { return INT64_MAX; }
		}
		total += term;
	}
	return total;
}

// Every line diagram with exactly a arrows of the given kind, each once, canonical.
inline void for_each_diagram(int a, BasisSpec const& s, std::function<void(GaussDiagram const&)> const& fn) {
	int len = 2 * a;
	std::vector<int> mate(len, -1);
	std::vector<std::pair<int, int>> chords;
	auto labels = s.labels();
	auto signs = s.signs();
	std::function<void(int, std::vector<Arrow>&)> decorate = [&](int i, std::vector<Arrow>& arrows) {
		if (i == a) {
			fn(GaussDiagram(Host::Line, arrows, s.directed));
			return;
		}
		for (int dir = 0; dir < (s.directed ? 2 : 1); ++dir) {
			for (int sg : signs) {
				for (auto l : labels) {
					auto [p, q] = chords[i];
					arrows[i] = Arrow{dir ? q : p, dir ? p : q, sg, l};
					decorate(i + 1, arrows);
				}
			}
		}
	};
	std::function<void()> match = [&] {
		int first = -1;
		for (int i = 0; i < len; ++i) {
			if (mate[i] < 0) {
				first = i;
				break;
			}
		}
		if (first < 0) {
			std::vector<Arrow> arrows(a);
			decorate(0, arrows);
			return;
		}
		for (int j = first + 1; j < len; ++j) {
			if (mate[j] >= 0) { continue; }
			mate[first] = j;
			mate[j] = first;
			chords.emplace_back(first, j);
			match();
			chords.pop_back();
			mate[first] = mate[j] = -1;
		}
	};
	match();
}

inline GeneratorBasis make_basis(BasisSpec const& s, std::int64_t max_generators = 50000) {
	auto count = generator_count(s);
	if (count > max_generators) {
		throw BudgetExceeded("basis would have " + (count == INT64_MAX ? std::string("too many") : std::to_string(count)) +
		                     " generators (budget " + std::to_string(max_generators) + ")");
	}
	GeneratorBasis b(s);
	for (int a = s.min_arrows; a <= s.max_arrows; ++a) {
		for_each_diagram(a, s, [&](GaussDiagram const& d) { b.push(d); });
	}
	return b;
}

// Directed, signed, labels 1..m+1, at most t arrows.
inline GeneratorBasis enumerate_generators(int t, int m, bool directed, std::int64_t max_generators = 50000) {
	if (t < 0 || m < 1) { throw ValidationError("generators need t >= 0 and m >= 1"); }
	return make_basis({0, t, m, directed, true, false}, max_generators);
}

// ---------------------------------------------------------------- fragments

// Local relation pictures. A fragment has up to three strands (segments),
// each a short run of endpoints of the fragment's own arrows; a term lists the
// endpoints present on each strand, in order.
struct FragToken {
	int arrow;
	bool head;
};

struct FragTerm {
	std::int64_t coef;
	std::vector<std::vector<FragToken>> strands;
};

struct Fragment {
	std::vector<ArrowAttr> attrs;
	std::vector<FragTerm> terms;
};

struct RelationInstance {
	RelationKind kind;
	DiagramSum sum;
};

namespace detail {

inline bool q3_labels_ok(Label i, Label j, Label k, Label top) {
	if (i == top && j == top && k == top) { return true; }
	return (i > j && j == k) || (j > i && i == k) || (k > i && i == j);
}

// Third-move strands: top carries tails of a (top->middle) and b (top->bottom),
// middle carries head of a and tail of c (middle->bottom), bottom carries heads
// of b and c. before = pattern with a's endpoints first on top, etc.
inline std::vector<std::vector<FragToken>> r3_strands(std::vector<char> const& present, bool after) {
	std::vector<std::vector<FragToken>> s = {
	    {{0, false}, {1, false}},
	    {{0, true}, {2, false}},
	    {{1, true}, {2, true}},
	};
	if (after) {
		for (auto& v : s) { std::reverse(v.begin(), v.end()); }
	}
	for (auto& v : s) {
		v.erase(std::remove_if(v.begin(), v.end(), [&](FragToken const& t) { return !present[t.arrow]; }), v.end());
	}
	return s;
}

inline std::vector<Fragment> fragments(RelationKind kind, BasisSpec const& s) {
	std::vector<Fragment> out;
	auto labels = s.labels();
	auto signs = s.signs();
	Label top = Label::of(s.m + 1);
	switch (kind) {
	case RelationKind::Q1:
	case RelationKind::OneT:
		for (int sg : signs) {
			for (int v = 0; v < (s.directed ? 2 : 1); ++v) {
				Fragment f;
				f.attrs = {{sg, top}};
				f.terms.push_back({1, {{{0, v == 1}, {0, v == 0}}}});
				out.push_back(f);
			}
		}
		break;
	case RelationKind::Q2:
	case RelationKind::NS:
		if (!s.is_signed) { throw ValidationError("second-move relations need signed diagrams"); }
		for (int sg : {1, -1}) {
			for (auto l : labels) {
				Fragment f;
				f.attrs = {{sg, l}, {-sg, l}};
				f.terms.push_back({1, {{{0, false}}, {{0, true}}}});
				f.terms.push_back({1, {{{1, false}}, {{1, true}}}});
				if (kind == RelationKind::Q2) { f.terms.push_back({1, {{{0, false}, {1, false}}, {{0, true}, {1, true}}}}); }
				out.push_back(f);
			}
		}
		break;
	case RelationKind::Q3:
	case RelationKind::SixT:
	case RelationKind::FourT:
	case RelationKind::TwoT:
		for (int sg : signs) {
			for (auto x : labels) {
				for (auto y : labels) {
					for (auto z : labels) {
						if (kind != RelationKind::TwoT && !q3_labels_ok(x, y, z, top)) { continue; }
						if (kind == RelationKind::TwoT && x != labels.front()) { continue; }
						Fragment f;
						f.attrs = {{sg, x}, {sg, y}, {sg, z}};
						std::vector<std::vector<char>> subsets;
						if (kind == RelationKind::Q3) {
							subsets = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
						} else if (kind == RelationKind::SixT) {
							subsets = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
						} else if (kind == RelationKind::FourT) {
							subsets = {{1, 1, 0}, {1, 0, 1}};
						} else {
							subsets = {{0, 1, 1}};
						}
						for (auto const& p : subsets) {
							f.terms.push_back({1, r3_strands(p, true)});
							f.terms.push_back({-1, r3_strands(p, false)});
						}
						out.push_back(f);
					}
				}
			}
		}
		break;
	}
	return out;
}

// Smallest and largest term sizes of a relation kind.
inline std::pair<int, int> term_sizes(RelationKind kind) {
	switch (kind) {
	case RelationKind::Q1:
	case RelationKind::OneT: return {1, 1};
	case RelationKind::Q2: return {1, 2};
	case RelationKind::NS: return {1, 1};
	case RelationKind::Q3: return {2, 3};
	default: return {2, 2};
	}
}

} // namespace detail

// Embeds fragment f into context c at every placement of its strands.
inline void embed_fragment(Fragment const& f, GaussDiagram const& c, BasisSpec const& s,
                           std::function<void(DiagramSum const&)> const& fn) {
	int r = static_cast<int>(f.terms.front().strands.size());
	int len = c.endpoint_count() + r;
	auto ctx_attrs = detail::attrs_of(c);
	std::vector<int> perm(r);
	for_each_combination(len, r, [&](std::vector<int> const& pos) {
		std::iota(perm.begin(), perm.end(), 0);
		do {
			DiagramSum sum;
			for (auto const& term : f.terms) {
				std::vector<int> key(f.attrs.size(), -1);
				auto attrs = ctx_attrs;
				std::vector<Endpoint> word;
				word.reserve(len + 4);
				int ci = 0;
				int si = 0;
				for (int p = 0; p < len; ++p) {
					if (si < r && pos[si] == p) {
						for (auto const& tk : term.strands[perm[si]]) {
							if (key[tk.arrow] < 0) {
								key[tk.arrow] = static_cast<int>(attrs.size());
								attrs.push_back(f.attrs[tk.arrow]);
							}
							word.push_back({key[tk.arrow], tk.head});
						}
						++si;
					} else {
						word.push_back(c.slot(ci++));
					}
				}
				int size = static_cast<int>(attrs.size());
				if (size < s.min_arrows || size > s.max_arrows) { continue; }
				sum.add_canonical(GaussDiagram::from_word(Host::Line, word, attrs, s.directed), term.coef);
			}
			if (!sum.empty()) { fn(sum); }
		} while (std::next_permutation(perm.begin(), perm.end()));
	});
}

// All instances of the given kinds inside the basis described by s.
inline std::vector<RelationInstance> relation_instances(BasisSpec const& s, std::vector<RelationKind> const& kinds) {
	std::vector<RelationInstance> out;
	for (auto kind : kinds) {
		auto frags = detail::fragments(kind, s);
		auto [lo, hi] = detail::term_sizes(kind);
		int max_ctx = s.max_arrows - lo;
		int min_ctx = std::max(0, s.min_arrows - hi);
		for (int a = min_ctx; a <= max_ctx; ++a) {
			for_each_diagram(a, s, [&](GaussDiagram const& c) {
				for (auto const& f : frags) {
					embed_fragment(f, c, s, [&](DiagramSum const& sum) { out.push_back({kind, sum}); });
				}
			});
		}
	}
	return out;
}

// Directed relation instances at arrow bound t (the spec's t, m, kinds form).
inline std::vector<RelationInstance> relation_instances(int t, int m, std::vector<RelationKind> const& kinds) {
	return relation_instances(BasisSpec{0, t, m, true, true, false}, kinds);
}

// ---------------------------------------------------------------- maps

inline GaussDiagram bar(GaussDiagram const& d) {
	std::vector<Arrow> arrows = d.arrows();
	return canonicalize(GaussDiagram(d.host(), std::move(arrows), false));
}

inline DiagramSum bar_map(DiagramSum const& s) {
	DiagramSum out;
	for (auto const& [d, c] : s.terms()) {
		if (!d.directed()) { throw ValidationError("Bar needs directed diagrams"); }
		out.add(bar(d), c);
	}
	return out;
}

inline DiagramSum mu_map(DiagramSum const& s) {
	DiagramSum out;
	for (auto const& [d, c] : s.terms()) {
		if (d.directed()) { throw ValidationError("the average map needs chord diagrams"); }
		int n = d.size();
		for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
			auto arrows = d.arrows();
			for (int i = 0; i < n; ++i) {
				if (mask >> i & 1U) { std::swap(arrows[i].tail, arrows[i].head); }
			}
			out.add(GaussDiagram(d.host(), std::move(arrows), true), c);
		}
	}
	return out;
}

// Relabels labels above n+1 to n+1.
inline DiagramSum d_map(DiagramSum const& s, int m, int n) {
	if (n > m || n < 1) { throw ValidationError("d[m->n] needs 1 <= n <= m"); }
	DiagramSum out;
	for (auto const& [d, c] : s.terms()) {
		auto e = with_attrs(d, [&](int, Arrow& a) {
			if (a.label.present() && !a.label.is_infinite() && a.label.value() > m + 1) {
				throw ValidationError("label above m+1 in d-map input");
			}
			if (a.label > Label::of(n + 1)) { a.label = Label::of(n + 1); }
		});
		out.add(e, c);
	}
	return out;
}

// Drops terms with more than t-1 arrows.
inline DiagramSum pi_map(DiagramSum const& s, int t) {
	DiagramSum out;
	for (auto const& [d, c] : s.terms()) {
		if (d.size() <= t - 1) { out.add_canonical(d, c); }
	}
	return out;
}

// ---------------------------------------------------------------- bounds

inline BigInt big_binomial(int n, int k) {
	if (k < 0 || n < 0 || k > n) { return 0; }
	BigInt r = 1;
	for (int i = 1; i <= k; ++i) { r = r * (n - k + i) / i; }
	return r;
}

inline BigInt big_double_factorial_odd(int k) { // (2k-1)!!, with (-1)!! = 1
	BigInt r = 1;
	for (int i = 1; i <= 2 * k - 1; i += 2) { r *= i; }
	return r;
}

inline BigInt big_pow(BigInt b, int e) {
	BigInt r = 1;
	while (e-- > 0) { r *= b; }
	return r;
}

inline BigInt omega_upper(int t, int m) {
	if (t < 1 || m < 1) { throw ValidationError("the upper bound needs t, m >= 1"); }
	BigInt total = 4 * BigInt(m);
	total += big_double_factorial_odd(t) * big_pow(2, t) * big_pow(m + 1, t);
	for (int j = 1; j <= (2 * t + 1) / 3; ++j) {
		total -= big_binomial(2 * (t - j) + 1, j) * big_double_factorial_odd(t - j) * big_pow(2, t) * big_pow(m, t - j);
	}
	for (int k = 2; k <= t - 1; ++k) {
		total += big_double_factorial_odd(k) * big_pow(2, 2 * k) * big_pow(m + 1, k);
		for (int j = 1; j <= (2 * k + 1) / 3; ++j) {
			total -= big_binomial(2 * (k - j) + 1, j) * big_double_factorial_odd(k - j) * big_pow(2, 2 * k) * big_pow(m, k - j);
		}
	}
	return total;
}

inline BigInt rank_lower(int t, int m) {
	if (t < 1 || m < 1) { throw ValidationError("the lower bound needs t, m >= 1"); }
	BigInt num = BigInt(t + 1) * big_binomial(m + t, t + 1);
	if (num % m != 0) { throw std::logic_error("lower bound is not an integer"); }
	return num / m;
}

// ---------------------------------------------------------------- presentations

struct PresentedGroup {
	BasisSpec spec;
	int generators = 0;  // free generators in this block
	int killed = 0;      // generators set to zero by one-term relations
	int relations = 0;   // distinct nonzero relation rows, one-term rows included
	int matrix_rank = 0;
	bool used_bigint = false;
	int rank() const { return generators - matrix_rank; }
};

namespace detail {

inline bool has_isolated_top_arrow(GaussDiagram const& d, Label top) {
	for (auto const& a : d.arrows()) {
		if (a.label == top && a.second() - a.first() == 1) { return true; }
	}
	return false;
}

inline SparseRow to_row(DiagramSum const& sum, GeneratorBasis const& basis, std::vector<int> const& column) {
	SparseRow row;
	for (auto const& [d, c] : sum.terms()) {
		int g = basis.find(d);
		if (g < 0) { throw std::logic_error("relation term outside the basis: " + serialize(d)); }
		if (column[g] >= 0) { row.emplace_back(column[g], c); }
	}
	std::sort(row.begin(), row.end());
	if (row.empty()) { return row; }
	std::int64_t g = 0;
	for (auto const& e : row) { g = std::gcd(g, e.second < 0 ? -e.second : e.second); }
	if (row.front().second < 0) { g = -g; }
	for (auto& e : row) { e.second /= g; }
	return row;
}

} // namespace detail

// Quotient of the free group on s by the given kinds. One-term relations
// (Q1, 1T) are applied by deleting the generators they kill.
inline PresentedGroup present(BasisSpec const& s, std::vector<RelationKind> kinds, std::int64_t max_generators = 50000,
                              std::vector<SparseRow>* rows_out = nullptr, GeneratorBasis* basis_out = nullptr) {
	auto basis = make_basis(s, max_generators);
	bool one_term = false;
	kinds.erase(std::remove_if(kinds.begin(), kinds.end(),
	                           [&](RelationKind k) {
		                           bool ot = k == RelationKind::Q1 || k == RelationKind::OneT;
		                           one_term |= ot;
		                           return ot;
	                           }),
	            kinds.end());
	PresentedGroup g;
	g.spec = s;
	g.generators = basis.size();
	std::vector<int> column(basis.size(), -1);
	int cols = 0;
	Label top = Label::of(s.m + 1);
	for (int i = 0; i < basis.size(); ++i) {
		if (one_term && detail::has_isolated_top_arrow(basis.generators()[i], top)) {
			++g.killed;
		} else {
			column[i] = cols++;
		}
	}
	std::set<SparseRow> rows;
	for (auto const& inst : relation_instances(s, kinds)) {
		auto row = detail::to_row(inst.sum, basis, column);
		if (!row.empty()) { rows.insert(std::move(row)); }
	}
	std::vector<SparseRow> list(rows.begin(), rows.end());
	auto rk = exact_rank(list, cols);
	g.relations = static_cast<int>(list.size()) + g.killed;
	g.matrix_rank = rk.rank + g.killed;
	g.used_bigint = rk.used_bigint;
	if (rows_out) { *rows_out = std::move(list); }
	if (basis_out) { *basis_out = std::move(basis); }
	return g;
}

struct RankReport {
	Flavor flavor = Flavor::DirectedQ;
	int t = 0;
	int m = 1;
	std::int64_t generators = 0;
	std::int64_t relations = 0;
	std::int64_t rank = 0;
	bool used_bigint = false;
};

inline RankReport group_rank(int t, int m, Flavor flavor, std::int64_t max_generators = 50000) {
	if (t < 0 || m < 1) { throw ValidationError("rank needs t >= 0 and m >= 1"); }
	RankReport r{flavor, t, m};
	auto add = [&](PresentedGroup const& g) {
		r.generators += g.generators;
		r.relations += g.relations;
		r.rank += g.rank();
		r.used_bigint |= g.used_bigint;
	};
	using K = RelationKind;
	switch (flavor) {
	case Flavor::DirectedQ: add(present({0, t, m, true, true, false}, {K::Q1, K::Q2, K::Q3}, max_generators)); break;
	case Flavor::UndirectedQbar: add(present({0, t, m, false, true, false}, {K::Q1, K::Q2, K::Q3}, max_generators)); break;
	case Flavor::Polyak: add(present({0, t, m, true, true, true}, {K::Q1, K::Q2, K::Q3}, max_generators)); break;
	case Flavor::SixTOneT:
	case Flavor::TwoTOneT:
	case Flavor::FourTOneT: {
		K main = flavor == Flavor::SixTOneT ? K::SixT : (flavor == Flavor::TwoTOneT ? K::TwoT : K::FourT);
		for (int k = 0; k <= t; ++k) { add(present({k, k, m, false, false, false}, {main, K::OneT}, max_generators)); }
		break;
	}
	}
	return r;
}

} // namespace gaussforge
