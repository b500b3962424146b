#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "parity.hpp"

namespace gaussforge {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
	if (k < 0 || n < 0 || k > n) { return 0; }
	k = std::min(k, n - k);
	std::int64_t r = 1;
	for (std::int64_t i = 1; i <= k; ++i) { r = r * (n - k + i) / i; }
	return r;
}

inline std::int64_t ipow(std::int64_t b, int e) {
	std::int64_t r = 1;
	while (e-- > 0) { r *= b; }
	return r;
}

// Signed count of arrows labelled k.
inline std::int64_t theta_single(LabelledDiagram const& l, int k) {
	if (l.m.is_infinite()) { throw ValidationError("theta needs a finite label bound"); }
	if (k < 1 || k > l.m.value()) {
		throw ValidationError("theta label " + std::to_string(k) + " outside 1.." + std::to_string(l.m.value()));
	}
	std::int64_t s = 0;
	for (auto const& a : l.diagram.arrows()) {
		if (a.label == Label::of(k)) { s += a.sign; }
	}
	return s;
}

struct ThetaTerm {
	int exponent = 1;
	int label = 1;
};

// prod_j theta[m|k_j]^{t_j}
struct ThetaSpec {
	int m = 1;
	std::vector<ThetaTerm> terms;

	void validate() const {
		if (m < 1) { throw ValidationError("theta spec needs m >= 1"); }
		if (terms.empty()) { throw ValidationError("theta spec has no factors"); }
		std::set<int> seen;
		for (auto const& t : terms) {
			if (t.exponent < 1) { throw ValidationError("theta exponents must be >= 1"); }
			if (t.label < 1 || t.label > m) {
				throw ValidationError("theta label " + std::to_string(t.label) + " outside 1.." + std::to_string(m));
			}
			if (!seen.insert(t.label).second) { throw ValidationError("theta labels must be distinct"); }
		}
	}
	int degree() const {
		int d = 0;
		for (auto const& t : terms) { d += t.exponent; }
		return d;
	}
	std::string to_string() const {
		std::string s;
		for (auto const& t : terms) {
			if (!s.empty()) { s += ","; }
			s += std::to_string(t.exponent) + "@" + std::to_string(t.label);
		}
		return s;
	}
};

// "t1@k1,t2@k2" -> spec
inline ThetaSpec parse_theta_spec(std::string const& text, int m) {
	ThetaSpec spec;
	spec.m = m;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		auto end = text.find(',', pos);
		if (end == std::string::npos) { end = text.size(); }
		auto item = text.substr(pos, end - pos);
		auto at = item.find('@');
		try {
			if (at == std::string::npos) { throw std::invalid_argument("missing @"); }
			std::size_t used1 = 0, used2 = 0;
			int t = std::stoi(item.substr(0, at), &used1);
			int k = std::stoi(item.substr(at + 1), &used2);
			if (used1 != at || used2 != item.size() - at - 1) { throw std::invalid_argument("junk"); }
			spec.terms.push_back({t, k});
		} catch (std::exception const&) {
			throw ValidationError("malformed theta factor '" + item + "' (expected t@k)");
		}
		pos = end + 1;
	}
	spec.validate();
	return spec;
}

inline std::int64_t theta_product(LabelledDiagram const& l, ThetaSpec const& spec) {
	spec.validate();
	if (l.m != Bound(spec.m)) { throw ValidationError("label bound of diagram does not match the spec"); }
	std::int64_t r = 1;
	for (auto const& t : spec.terms) { r *= ipow(theta_single(l, t.label), t.exponent); }
	return r;
}

// Per label k_j: (count of + arrows, count of - arrows), flattened.
using CountVector = std::vector<int>;
using CountFunction = std::function<std::int64_t(CountVector const&)>;

inline CountVector count_vector(LabelledDiagram const& l, ThetaSpec const& spec) {
	CountVector n(2 * spec.terms.size(), 0);
	for (auto const& a : l.diagram.arrows()) {
		for (std::size_t j = 0; j < spec.terms.size(); ++j) {
			if (a.label == Label::of(spec.terms[j].label)) { ++n[2 * j + (a.sign > 0 ? 0 : 1)]; }
		}
	}
	return n;
}

inline CountFunction theta_count_function(ThetaSpec const& spec) {
	return [spec](CountVector const& a) {
		std::int64_t r = 1;
		for (std::size_t j = 0; j < spec.terms.size(); ++j) { r *= ipow(a[2 * j] - a[2 * j + 1], spec.terms[j].exponent); }
		return r;
	};
}

namespace detail {

// Calls fn on every b with 0 <= b <= a componentwise.
inline void for_each_below(CountVector const& a, std::function<void(CountVector const&)> const& fn) {
	CountVector b(a.size(), 0);
	while (true) {
		fn(b);
		std::size_t i = 0;
		while (i < b.size() && b[i] == a[i]) { b[i++] = 0; }
		if (i == b.size()) { return; }
		++b[i];
	}
}

} // namespace detail

// Iterated forward difference in the given multi-direction.
inline CountFunction discrete_derivative(CountFunction g, CountVector direction) {
	return [g = std::move(g), direction = std::move(direction)](CountVector const& x) {
		std::int64_t total = 0;
		int order = 0;
		for (int d : direction) { order += d; }
		detail::for_each_below(direction, [&](CountVector const& b) {
			std::int64_t w = 1;
			int size = 0;
			CountVector y = x;
			for (std::size_t i = 0; i < b.size(); ++i) {
				w *= binomial(direction[i], b[i]);
				size += b[i];
				y[i] += b[i];
			}
			total += ((order - size) % 2 ? -w : w) * g(y);
		});
		return total;
	};
}

using FormulaCoefficients = std::map<CountVector, std::int64_t>;

// c(a) = (d^a g)(0) for |a| <= degree; zero coefficients are not stored.
inline FormulaCoefficients formula_coefficients(ThetaSpec const& spec) {
	spec.validate();
	int dims = 2 * static_cast<int>(spec.terms.size());
	int deg = spec.degree();
	auto g = theta_count_function(spec);
	FormulaCoefficients out;
	CountVector zero(dims, 0);
	CountVector a(dims, 0);
	std::function<void(int, int)> rec = [&](int i, int left) {
		if (i == dims) {
			auto c = discrete_derivative(g, a)(zero);
			if (c != 0) { out[a] = c; }
			return;
		}
		for (int v = 0; v <= left; ++v) {
			a[i] = v;
			rec(i + 1, left - v);
		}
		a[i] = 0;
	};
	rec(0, deg);
	return out;
}

inline std::int64_t coefficient(FormulaCoefficients const& c, CountVector const& a) {
	auto it = c.find(a);
	return it == c.end() ? 0 : it->second;
}

inline std::int64_t evaluate_formula(ThetaSpec const& spec, FormulaCoefficients const& coeffs, LabelledDiagram const& l) {
	if (l.m != Bound(spec.m)) { throw ValidationError("label bound of diagram does not match the spec"); }
	auto n = count_vector(l, spec);
	std::int64_t total = 0;
	for (auto const& [a, c] : coeffs) {
		std::int64_t w = c;
		for (std::size_t i = 0; i < a.size(); ++i) { w *= binomial(n[i], a[i]); }
		total += w;
	}
	return total;
}

inline std::int64_t evaluate_formula(ThetaSpec const& spec, LabelledDiagram const& l) {
	return evaluate_formula(spec, formula_coefficients(spec), l);
}

// theta spec evaluated on an unlabelled diagram through the f^m labelling.
inline std::int64_t theta_invariant(GaussDiagram const& d, ThetaSpec const& spec) {
	return theta_product(lambda_m(d, Bound(spec.m)), spec);
}

} // namespace gaussforge
