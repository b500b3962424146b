#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace gaussforge {

namespace detail {

// Builds a line diagram from a sequence of chord keys. The first occurrence
// of chord k is its tail unless reversed[k] is set.
inline GaussDiagram chords_to_diagram(std::vector<int> const& seq, std::vector<int> const& signs,
                                      std::vector<char> const& reversed) {
	std::vector<char> seen(signs.size(), 0);
	std::vector<Endpoint> word;
	for (int k : seq) {
		bool second = seen[k]++;
		word.push_back({k, second != static_cast<bool>(reversed[k])});
	}
	std::vector<ArrowAttr> attrs;
	for (int s : signs) { attrs.push_back({s, Label{}}); }
	return GaussDiagram::from_word(Host::Line, word, attrs);
}

} // namespace detail

// Chords 1..2k in order, twice: every pair alternates.
inline GaussDiagram complete_graph_diagram(int k) {
	if (k < 1) { throw ValidationError("complete graph diagram needs k >= 1"); }
	std::vector<int> seq;
	for (int r = 0; r < 2; ++r) {
		for (int j = 0; j < 2 * k; ++j) { seq.push_back(j); }
	}
	return detail::chords_to_diagram(seq, std::vector<int>(2 * k, 1), std::vector<char>(2 * k, 0));
}

namespace detail {

// Earring code 1 2 1 3 2 ... w (w-1) w, with keys offset by `base`.
inline std::vector<int> earring_code(int w, int base = 0) {
	std::vector<int> seq{base};
	for (int i = 1; i < w; ++i) {
		seq.push_back(base + i);
		seq.push_back(base + i - 1);
	}
	seq.push_back(base + w - 1);
	return seq;
}

} // namespace detail

inline GaussDiagram earring(int w) {
	if (w < 1) { throw ValidationError("earring needs width >= 1"); }
	return detail::chords_to_diagram(detail::earring_code(w), std::vector<int>(w, 1), std::vector<char>(w, 0));
}

namespace detail {

struct EarringLayout {
	std::vector<int> seq;
	std::vector<char> central; // per chord key
	std::vector<int> central_number; // 1-based D_k number, 0 for earring chords
};

// D_k with a width m-1 earring hung on every chord. An odd chord gets the
// earring just left of its left endpoint, the last earring endpoint just
// after it; an even chord gets the mirror image around its right endpoint.
inline EarringLayout earring_layout(int m, int k) {
	if (m < 1 || k < 1) { throw ValidationError("earring diagram needs m >= 1 and k >= 1"); }
	int w = m - 1;
	int n = 2 * k;
	EarringLayout out;
	out.central.assign(n, 1);
	out.central_number.resize(n);
	for (int j = 0; j < n; ++j) { out.central_number[j] = j + 1; }
	std::vector<int> base(n);
	for (int j = 0; j < n; ++j) {
		base[j] = static_cast<int>(out.central.size());
		for (int i = 0; i < w; ++i) {
			out.central.push_back(0);
			out.central_number.push_back(0);
		}
	}
	for (int pass = 0; pass < 2; ++pass) {
		for (int j = 0; j < n; ++j) {
			bool odd = (j + 1) % 2 == 1;
			if (w == 0 || odd != (pass == 0)) {
				out.seq.push_back(j);
				continue;
			}
			auto code = earring_code(w, base[j]);
			code.pop_back(); // the final endpoint of the last earring chord
			int last = base[j] + w - 1;
			if (odd) {
				out.seq.insert(out.seq.end(), code.begin(), code.end());
				out.seq.push_back(j);
				out.seq.push_back(last);
			} else {
				out.seq.push_back(last);
				out.seq.push_back(j);
				out.seq.insert(out.seq.end(), code.rbegin(), code.rend());
			}
		}
	}
	return out;
}

} // namespace detail

// D_{m,k}: all signs +, all chords left to right.
inline GaussDiagram earring_diagram(int m, int k) {
	auto l = detail::earring_layout(m, k);
	return detail::chords_to_diagram(l.seq, std::vector<int>(l.central.size(), 1), std::vector<char>(l.central.size(), 0));
}

// Directed D_{m,k}: odd central chords left to right, even ones right to left,
// earring chords left to right, all signs +.
inline GaussDiagram directed_earring_diagram(int m, int k) {
	auto l = detail::earring_layout(m, k);
	std::vector<char> rev(l.central.size(), 0);
	for (std::size_t c = 0; c < l.central.size(); ++c) {
		if (l.central[c] && l.central_number[c] % 2 == 0) { rev[c] = 1; }
	}
	return detail::chords_to_diagram(l.seq, std::vector<int>(l.central.size(), 1), rev);
}

// Ids of the central D_k chords inside D_{m,k} (same ids in the directed version).
inline std::vector<int> earring_diagram_core(int m, int k) {
	auto l = detail::earring_layout(m, k);
	std::vector<int> key(l.central.size(), -1);
	std::vector<char> seen(l.central.size(), 0);
	int next = 0;
	for (int c : l.seq) {
		if (!seen[c]++) { key[c] = next++; }
	}
	std::vector<int> ids;
	for (std::size_t c = 0; c < l.central.size(); ++c) {
		if (l.central[c]) { ids.push_back(key[c]); }
	}
	std::sort(ids.begin(), ids.end());
	return ids;
}

// L_m: D_{m,2} with the 2m-1 arrows whose left endpoints are rightmost signed -.
inline GaussDiagram theta_witness(int m) {
	auto d = earring_diagram(m, 2);
	int neg = 2 * m - 1;
	return with_attrs(d, [&](int i, Arrow& a) {
		if (i >= d.size() - neg) { a.sign = -1; }
	});
}

// Closure of a braid word, cut at the bottom of strand 0. Generator +i crosses
// strands i and i+1 (1-based) with the strand coming from position i over,
// sign +; for -i the strand from position i+1 is over, sign -.
inline GaussDiagram braid_closure(int strands, std::vector<int> const& word) {
	for (int g : word) {
		if (g == 0 || std::abs(g) >= strands) { throw ValidationError("braid generator out of range"); }
	}
	std::vector<Endpoint> seq;
	std::vector<ArrowAttr> attrs;
	for (int g : word) { attrs.push_back({g > 0 ? 1 : -1, Label{}}); }
	int pos = 0;
	int guard = 0;
	do {
		for (int c = 0; c < static_cast<int>(word.size()); ++c) {
			int i = std::abs(word[c]) - 1;
			bool over_from_left = word[c] > 0;
			if (pos == i) {
				seq.push_back({c, !over_from_left});
				pos = i + 1;
			} else if (pos == i + 1) {
				seq.push_back({c, over_from_left});
				pos = i;
			}
		}
		if (++guard > strands) { throw ValidationError("braid closure is not a knot"); }
	} while (pos != 0);
	if (seq.size() != 2 * word.size()) { throw ValidationError("braid closure is not a knot"); }
	return GaussDiagram::from_word(Host::Line, seq, attrs);
}

inline std::map<std::string, GaussDiagram> stock_diagrams() {
	return {
	    {"empty", GaussDiagram{}},
	    {"trefoil", braid_closure(2, {1, 1, 1})},
	    {"figure_eight", braid_closure(3, {1, -2, 1, -2})},
	    {"cinquefoil", braid_closure(2, {1, 1, 1, 1, 1})},
	    {"virtual_trefoil", parse_gauss_code("1T+ 2T+ 1H+ 2H+")},
	    {"virtual_earring", directed_earring_diagram(2, 1)},
	};
}

inline GaussDiagram stock_diagram(std::string const& name) {
	auto all = stock_diagrams();
	auto it = all.find(name);
	if (it == all.end()) { throw ValidationError("unknown stock diagram '" + name + "'"); }
	return it->second;
}

} // namespace gaussforge
