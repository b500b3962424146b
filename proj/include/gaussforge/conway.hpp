#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "moves.hpp"
#include "parity.hpp"

namespace gaussforge {

// Coefficients of z^0, z^2, ...; keys are the even exponents.
class EvenPolynomial {
public:
	EvenPolynomial() = default;

	void set(int exponent, std::int64_t c) {
		if (exponent < 0 || exponent % 2) { throw ValidationError("EvenPolynomial exponents must be even and >= 0"); }
		if (c == 0) {
			coeffs_.erase(exponent);
		} else {
			coeffs_[exponent] = c;
		}
	}
	std::int64_t coefficient(int exponent) const {
		auto it = coeffs_.find(exponent);
		return it == coeffs_.end() ? 0 : it->second;
	}
	std::map<int, std::int64_t> const& coefficients() const { return coeffs_; }
	bool operator==(EvenPolynomial const&) const = default;

	std::string to_string() const {
		if (coeffs_.empty()) { return "0"; }
		std::string out;
		for (auto const& [e, c] : coeffs_) {
			std::int64_t a = c < 0 ? -c : c;
			if (out.empty()) {
				out += c < 0 ? "-" : "";
			} else {
				out += c < 0 ? " - " : " + ";
			}
			out += std::to_string(a);
			if (e > 0) { out += "*z^" + std::to_string(e); }
		}
		return out;
	}

private:
	std::map<int, std::int64_t> coeffs_;
};

namespace detail {

// Walks the long boundary component of the Seifert smoothing of the
// subdiagram on `keep`. Returns {one component, ascending}.
inline std::pair<bool, bool> seifert_scan(GaussDiagram const& d, std::vector<int> const& keep) {
	int k = static_cast<int>(keep.size());
	if (k == 0) { return {true, true}; }
	thread_local std::vector<int> local;
	local.assign(d.size(), -1);
	for (int i = 0; i < k; ++i) { local[keep[i]] = i; }
	std::vector<int> arrow(2 * k);
	std::vector<char> head(2 * k);
	std::vector<int> pos(2 * k, -1);
	int len = 0;
	for (auto const& e : d.slots()) {
		int a = local[e.arrow];
		if (a < 0) { continue; }
		arrow[len] = a;
		head[len] = e.head;
		if (pos[2 * a] < 0) {
			pos[2 * a] = len;
		} else {
			pos[2 * a + 1] = len;
		}
		++len;
	}
	std::vector<char> met(k, 0);
	bool ascending = true;
	int visited = 0;
	for (int p = 0; p < len;) {
		int a = arrow[p];
		if (!met[a]) {
			met[a] = 1;
			if (head[p]) { ascending = false; }
		}
		++visited;
		int q = pos[2 * a] == p ? pos[2 * a + 1] : pos[2 * a];
		p = q + 1;
	}
	bool one = visited == len;
	return {one, one && ascending};
}

} // namespace detail

inline bool is_one_component(GaussDiagram const& d) { return boundary_components(d) == 1; }

// Along the long boundary component of the Seifert smoothing, every arrow is
// met first at its tail.
inline bool is_ascending(GaussDiagram const& d) {
	if (d.host() != Host::Line) { throw ValidationError("ascending is defined for line diagrams"); }
	std::vector<int> all(d.size());
	for (int i = 0; i < d.size(); ++i) { all[i] = i; }
	return detail::seifert_scan(d, all).second;
}

inline std::int64_t c2n_classical(GaussDiagram const& d, int n) {
	if (d.host() != Host::Line) { throw ValidationError("Conway coefficients need a line diagram"); }
	std::int64_t total = 0;
	for_each_combination(d.size(), 2 * n, [&](std::vector<int> const& e) {
		if (!detail::seifert_scan(d, e).second) { return; }
		std::int64_t w = 1;
		for (int id : e) { w *= d.arrow(id).sign; }
		total += w;
	});
	return total;
}

// Even part: all f^inf labels infinite. Odd part: some f^m label below m+1.
inline std::int64_t c2n_m(GaussDiagram const& d, int n, Bound m, std::vector<Label> const& inf_labels) {
	if (d.host() != Host::Line) { throw ValidationError("Conway coefficients need a line diagram"); }
	std::int64_t total = 0;
	for_each_combination(d.size(), 2 * n, [&](std::vector<int> const& e) {
		bool even = true;
		bool odd = false;
		for (int id : e) {
			auto l = inf_labels[id];
			if (!l.is_infinite()) { even = false; }
			if (truncate_label(l, m) < m.top()) { odd = true; }
		}
		if (!even && !odd) { return; }
		if (!detail::seifert_scan(d, e).second) { return; }
		std::int64_t w = 1;
		for (int id : e) { w *= d.arrow(id).sign; }
		total += w;
	});
	return total;
}

inline std::int64_t c2n_m(GaussDiagram const& d, int n, Bound m) {
	return c2n_m(d, n, m, f_labels(d, Bound::infinite()));
}

inline EvenPolynomial nabla_m(GaussDiagram const& d, Bound m, int max_degree) {
	if (max_degree < 0 || max_degree % 2) { throw ValidationError("max degree must be even and >= 0"); }
	auto labels = f_labels(d, Bound::infinite());
	EvenPolynomial p;
	for (int n = 0; 2 * n <= max_degree; ++n) { p.set(2 * n, c2n_m(d, n, m, labels)); }
	return p;
}

inline EvenPolynomial nabla_classical(GaussDiagram const& d, int max_degree) {
	if (max_degree < 0 || max_degree % 2) { throw ValidationError("max degree must be even and >= 0"); }
	EvenPolynomial p;
	for (int n = 0; 2 * n <= max_degree; ++n) { p.set(2 * n, c2n_classical(d, n)); }
	return p;
}

// ---------------------------------------------------------------- skein

struct SkeinQuintuple {
	GaussDiagram base;
	int x = 0;
	int y = 1;
	// variants[i][j]: x has sign (i == 0 ? + : -), y has sign (j == 0 ? + : -).
	// A sign change is a crossing switch: direction reversed too.
	GaussDiagram variants[2][2];
	GaussDiagram k00;
	std::vector<int> k00_map; // base id -> id in k00, -1 for x and y
};

inline SkeinQuintuple build_quintuple(GaussDiagram const& d, int x, int y) {
	if (d.host() != Host::Line) { throw ValidationError("skein quintuples need a line diagram"); }
	d.check_id(x);
	d.check_id(y);
	if (x == y) { throw ValidationError("the two designated arrows must differ"); }
	if (!linked(d, x, y)) { throw ValidationError("designated arrows are not linked"); }
	if (d.arrow(x).sign == 0 || d.arrow(y).sign == 0) { throw ValidationError("designated arrows must be signed"); }
	SkeinQuintuple q;
	q.base = d;
	q.x = x;
	q.y = y;
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			GaussDiagram v = d;
			if (d.arrow(x).sign != (i == 0 ? 1 : -1)) { v = switch_arrow(v, x); }
			if (d.arrow(y).sign != (j == 0 ? 1 : -1)) { v = switch_arrow(v, y); }
			q.variants[i][j] = v;
		}
	}
	auto s = oriented_smoothing(d, {x, y});
	if (s.components.size() != 1) { throw ValidationError("smoothing the designated pair does not give one component"); }
	q.k00 = s.components[0];
	q.k00_map.assign(d.size(), -1);
	for (int i = 0; i < d.size(); ++i) {
		if (i != x && i != y) { q.k00_map[i] = s.arrow_map[i].second; }
	}
	return q;
}

struct SkeinHypotheses {
	bool ok = true;
	std::vector<std::string> failures;
};

inline SkeinHypotheses check_skein_hypotheses(SkeinQuintuple const& q, Bound) {
	SkeinHypotheses h;
	auto fail = [&](std::string msg) {
		h.ok = false;
		h.failures.push_back(std::move(msg));
	};
	auto l00 = f_labels(q.k00, Bound::infinite());
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			auto const& v = q.variants[i][j];
			if (!linked(v, q.x, q.y)) { fail("designated arrows unlinked"); }
			auto l = f_labels(v, Bound::infinite());
			if (!l[q.x].is_infinite() || !l[q.y].is_infinite()) {
				fail("designated arrows are not both f-labelled infinity");
			}
			for (int a = 0; a < v.size(); ++a) {
				if (a == q.x || a == q.y) { continue; }
				if (l[a] != l00[q.k00_map[a]]) {
					fail("smoothing changes the label of arrow " + std::to_string(a + 1));
				}
			}
		}
	}
	std::sort(h.failures.begin(), h.failures.end());
	h.failures.erase(std::unique(h.failures.begin(), h.failures.end()), h.failures.end());
	return h;
}

struct SkeinRow {
	int degree = 0; // 2k
	std::int64_t lhs = 0;
	std::int64_t rhs = 0;
};

struct SkeinReport {
	bool holds = true;
	std::vector<SkeinRow> rows;
};

// c_{2k}(K++) - c_{2k}(K+-) - c_{2k}(K-+) + c_{2k}(K--) = c_{2k-2}(K00)
inline SkeinReport verify_skein(SkeinQuintuple const& q, Bound m, int max_degree) {
	if (max_degree < 0 || max_degree % 2) { throw ValidationError("max degree must be even and >= 0"); }
	auto h = check_skein_hypotheses(q, m);
	if (!h.ok) { throw ValidationError("skein hypotheses fail: " + h.failures.front()); }
	std::vector<Label> lv[2][2];
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) { lv[i][j] = f_labels(q.variants[i][j], Bound::infinite()); }
	}
	auto l00 = f_labels(q.k00, Bound::infinite());
	SkeinReport r;
	for (int k = 0; 2 * k <= max_degree; ++k) {
		SkeinRow row;
		row.degree = 2 * k;
		row.lhs = c2n_m(q.variants[0][0], k, m, lv[0][0]) - c2n_m(q.variants[0][1], k, m, lv[0][1]) -
		          c2n_m(q.variants[1][0], k, m, lv[1][0]) + c2n_m(q.variants[1][1], k, m, lv[1][1]);
		row.rhs = k == 0 ? 0 : c2n_m(q.k00, k - 1, m, l00);
		if (row.lhs != row.rhs) { r.holds = false; }
		r.rows.push_back(row);
	}
	return r;
}

} // namespace gaussforge
