#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "diagram.hpp"

namespace gaussforge {

// Finite integer combination of canonical diagrams. Zero coefficients are never stored.
class DiagramSum {
public:
	using Terms = std::map<GaussDiagram, std::int64_t>;

	DiagramSum() = default;
	explicit DiagramSum(GaussDiagram const& d, std::int64_t c = 1) { add(d, c); }

	void add(GaussDiagram const& d, std::int64_t c = 1) {
		if (c == 0) { return; }
		add_canonical(d.is_canonical() ? d : canonicalize(d), c);
	}
	// Caller promises d is canonical.
	void add_canonical(GaussDiagram const& d, std::int64_t c) {
		if (c == 0) { return; }
		auto [it, fresh] = terms_.try_emplace(d, c);
		if (!fresh) {
			it->second += c;
			if (it->second == 0) { terms_.erase(it); }
		}
	}

	Terms const& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool empty() const { return terms_.empty(); }
	std::int64_t coefficient(GaussDiagram const& d) const {
		auto it = terms_.find(canonicalize(d));
		return it == terms_.end() ? 0 : it->second;
	}

	DiagramSum& operator+=(DiagramSum const& o) {
		for (auto const& [d, c] : o.terms_) { add_canonical(d, c); }
		return *this;
	}
	DiagramSum& operator-=(DiagramSum const& o) {
		for (auto const& [d, c] : o.terms_) { add_canonical(d, -c); }
		return *this;
	}
	DiagramSum& operator*=(std::int64_t k) {
		if (k == 0) {
			terms_.clear();
		} else {
			for (auto& [d, c] : terms_) { c *= k; }
		}
		return *this;
	}
	friend DiagramSum operator+(DiagramSum a, DiagramSum const& b) { return a += b; }
	friend DiagramSum operator-(DiagramSum a, DiagramSum const& b) { return a -= b; }
	friend DiagramSum operator*(std::int64_t k, DiagramSum a) { return a *= k; }
	bool operator==(DiagramSum const&) const = default;

	template <typename F>
	DiagramSum map_terms(F&& f) const {
		DiagramSum out;
		for (auto const& [d, c] : terms_) { out += c * f(d); }
		return out;
	}

	std::string to_string() const {
		if (terms_.empty()) { return "0"; }
		std::string out;
		bool first = true;
		for (auto const& [d, c] : terms_) {
			if (!first) { out += c < 0 ? " - " : " + "; }
			else if (c < 0) { out += "-"; }
			first = false;
			auto a = c < 0 ? -c : c;
			out += std::to_string(a) + "*[" + serialize(d) + "]";
		}
		return out;
	}

private:
	Terms terms_;
};

// The subdiagram map: sum of all 2^n subdiagrams.
inline DiagramSum subdiagram_sum(GaussDiagram const& d) {
	DiagramSum s;
	for_each_subdiagram(d, [&](auto const&, GaussDiagram const& sub) { s.add_canonical(sub, 1); });
	return s;
}

} // namespace gaussforge
