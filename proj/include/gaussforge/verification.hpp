#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagram.hpp"
#include "moves.hpp"

namespace gaussforge {

using Invariant = std::function<std::int64_t(GaussDiagram const&)>;

struct FuzzViolation {
	int base = 0;
	int walk = 0;
	int step = 0;
	std::string move;
	std::string before;
	std::string after;
	std::int64_t value_before = 0;
	std::int64_t value_after = 0;
};

struct FuzzReport {
	int walks = 0;
	int steps = 0;
	std::vector<FuzzViolation> violations;
	bool passed() const { return violations.empty(); }
};

inline std::uint64_t walk_seed(std::uint64_t seed, int base, int walk) {
	std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(base + 1)) ^
	                  (0xBF58476D1CE4E5B9ULL * static_cast<std::uint64_t>(walk + 1));
	x ^= x >> 31;
	return x;
}

// Evaluates inv along seeded walks; records every move that changes the value.
inline FuzzReport invariance_fuzz(Invariant const& inv, std::vector<GaussDiagram> const& bases, int walks, int steps,
                                  std::uint64_t seed, WalkOptions const& opt = {}) {
	FuzzReport r;
	for (int b = 0; b < static_cast<int>(bases.size()); ++b) {
		for (int w = 0; w < walks; ++w) {
			std::vector<MoveInstance> moves;
			auto path = random_walk(bases[b], steps, walk_seed(seed, b, w), opt, &moves);
			++r.walks;
			auto prev = inv(path[0]);
			for (int i = 1; i < static_cast<int>(path.size()); ++i) {
				auto v = inv(path[i]);
				++r.steps;
				if (v != prev) {
					r.violations.push_back({b, w, i, moves[i - 1].describe(), serialize(path[i - 1]), serialize(path[i]), prev, v});
				}
				prev = v;
			}
		}
	}
	return r;
}

struct DegreeReport {
	int order = 0;
	bool vanishes = true;               // every (order+1)-subset sum is zero
	std::vector<int> counterexample;    // a subset with nonzero sum, if any
	std::int64_t counterexample_sum = 0;
	bool witness = false;               // some order-subset sum is nonzero
	std::vector<int> witness_subset;
	std::int64_t witness_sum = 0;
};

// sum over S in T of (-1)^{|S|} inv(D with the arrows of S switched)
inline std::int64_t alternating_switch_sum(Invariant const& inv, GaussDiagram const& d, std::vector<int> const& subset) {
	std::int64_t total = 0;
	int k = static_cast<int>(subset.size());
	for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
		GaussDiagram e = d;
		int bits = 0;
		for (int i = 0; i < k; ++i) {
			if (mask >> i & 1U) {
				e = switch_arrow(e, subset[i]);
				++bits;
			}
		}
		auto v = inv(e);
		total += bits % 2 ? -v : v;
	}
	return total;
}

inline DegreeReport kauffman_degree_check(Invariant const& inv, GaussDiagram const& d, int order) {
	if (order < 0) { throw ValidationError("order must be >= 0"); }
	DegreeReport r;
	r.order = order;
	for_each_combination(d.size(), order + 1, [&](std::vector<int> const& t) {
		if (!r.vanishes) { return; }
		auto s = alternating_switch_sum(inv, d, t);
		if (s != 0) {
			r.vanishes = false;
			r.counterexample = t;
			r.counterexample_sum = s;
		}
	});
	for_each_combination(d.size(), order, [&](std::vector<int> const& t) {
		if (r.witness) { return; }
		auto s = alternating_switch_sum(inv, d, t);
		if (s != 0) {
			r.witness = true;
			r.witness_subset = t;
			r.witness_sum = s;
		}
	});
	return r;
}

inline nlohmann::ordered_json to_json(FuzzViolation const& v) {
	nlohmann::ordered_json j;
	j["base"] = v.base;
	j["walk"] = v.walk;
	j["step"] = v.step;
	j["move"] = v.move;
	j["before"] = v.before;
	j["after"] = v.after;
	j["value_before"] = v.value_before;
	j["value_after"] = v.value_after;
	return j;
}

} // namespace gaussforge
