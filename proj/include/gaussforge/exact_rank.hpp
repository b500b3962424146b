#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaussforge {

using BigInt = boost::multiprecision::cpp_int;

using SparseRow = std::vector<std::pair<int, std::int64_t>>; // sorted by column, no zeros

struct RankResult {
	int rank = 0;
	bool used_bigint = false;
};

namespace detail {

struct Overflow : std::exception {};

struct CheckedOps {
	using T = std::int64_t;
	static T mul(T a, T b) {
		T r;
		if (__builtin_mul_overflow(a, b, &r)) { throw Overflow{}; }
		return r;
	}
	static T sub(T a, T b) {
		T r;
		if (__builtin_sub_overflow(a, b, &r)) { throw Overflow{}; }
		return r;
	}
	static T gcd(T a, T b) { return std::gcd(a, b); }
	static T abs(T a) {
		if (a == INT64_MIN) { throw Overflow{}; }
		return a < 0 ? -a : a;
	}
};

struct BigOps {
	using T = BigInt;
	static T mul(T const& a, T const& b) { return a * b; }
	static T sub(T const& a, T const& b) { return a - b; }
	static T gcd(T const& a, T const& b) { return boost::multiprecision::gcd(a, b); }
	static T abs(T const& a) { return a < 0 ? T(-a) : a; }
};

// Incremental row echelon form. Each stored row is reduced against all pivots
// created before it, so eliminating pivots in creation order terminates.
template <typename Ops>
class Echelon {
public:
	using T = typename Ops::T;
	using Row = std::vector<std::pair<int, T>>;

	Echelon(int cols, std::vector<int> col_weight) : time_(cols, -1), weight_(std::move(col_weight)) {}

	int rank() const { return static_cast<int>(rows_.size()); }

	bool add(Row r) {
		while (true) {
			int best = -1;
			int best_time = -1;
			for (int i = 0; i < static_cast<int>(r.size()); ++i) {
				int tm = time_[r[i].first];
				if (tm >= 0 && (best < 0 || tm < best_time)) {
					best = i;
					best_time = tm;
				}
			}
			if (best < 0) { break; }
			eliminate(r, r[best].second, best_time);
			if (r.empty()) { return false; }
		}
		if (r.empty()) { return false; }
		int pick = 0;
		for (int i = 1; i < static_cast<int>(r.size()); ++i) {
			auto key = [&](int k) {
				bool unit = Ops::abs(r[k].second) == T(1);
				return std::make_pair(weight_[r[k].first], unit ? 0 : 1);
			};
			if (key(i) < key(pick)) { pick = i; }
		}
		time_[r[pick].first] = static_cast<int>(rows_.size());
		pivot_.push_back(r[pick].first);
		rows_.push_back(std::move(r));
		return true;
	}

private:
	void eliminate(Row& r, T v, int tm) {
		auto const& p = rows_[tm];
		int col = pivot_[tm];
		T pv{};
		for (auto const& e : p) {
			if (e.first == col) {
				pv = e.second;
				break;
			}
		}
		T g = Ops::gcd(Ops::abs(pv), Ops::abs(v));
		T a = pv / g; // r <- a*r - b*p
		T b = v / g;
		Row out;
		out.reserve(r.size() + p.size());
		std::size_t i = 0, j = 0;
		while (i < r.size() || j < p.size()) {
			if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
				out.emplace_back(r[i].first, Ops::mul(a, r[i].second));
				++i;
			} else if (i == r.size() || p[j].first < r[i].first) {
				out.emplace_back(p[j].first, Ops::sub(T(0), Ops::mul(b, p[j].second)));
				++j;
			} else {
				T x = Ops::sub(Ops::mul(a, r[i].second), Ops::mul(b, p[j].second));
				if (x != 0) { out.emplace_back(r[i].first, x); }
				++i;
				++j;
			}
		}
		T content(0);
		for (auto const& e : out) {
			content = Ops::gcd(content, Ops::abs(e.second));
			if (content == T(1)) { break; }
		}
		if (content > T(1)) {
			for (auto& e : out) { e.second /= content; }
		}
		r = std::move(out);
	}

	std::vector<Row> rows_;
	std::vector<int> pivot_;
	std::vector<int> time_;
	std::vector<int> weight_;
};

template <typename Ops>
int echelon_rank(std::vector<SparseRow> const& rows, int cols) {
	std::vector<int> weight(cols, 0);
	for (auto const& r : rows) {
		for (auto const& e : r) { ++weight[e.first]; }
	}
	std::vector<int> order(rows.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rows[a].size() < rows[b].size(); });
	Echelon<Ops> ech(cols, weight);
	for (int i : order) {
		typename Echelon<Ops>::Row r;
		r.reserve(rows[i].size());
		for (auto const& e : rows[i]) { r.emplace_back(e.first, typename Ops::T(e.second)); }
		ech.add(std::move(r));
		if (ech.rank() == cols) { break; }
	}
	return ech.rank();
}

} // namespace detail

// Rank over Q of the matrix whose rows are given. Entries are exact; a 64-bit
// pass is tried first and redone with arbitrary precision on overflow.
inline RankResult exact_rank(std::vector<SparseRow> const& rows, int cols) {
	try {
		return {detail::echelon_rank<detail::CheckedOps>(rows, cols), false};
	} catch (detail::Overflow const&) {
		return {detail::echelon_rank<detail::BigOps>(rows, cols), true};
	}
}

inline RankResult exact_rank_bigint(std::vector<SparseRow> const& rows, int cols) {
	return {detail::echelon_rank<detail::BigOps>(rows, cols), true};
}

// Rank over Z/p, p prime < 2^31. A lower bound for the rank over Q.
inline int rank_mod_p(std::vector<SparseRow> const& rows, int cols, std::int64_t p = 2147483629) {
	auto inv = [p](std::int64_t a) {
		std::int64_t r = 1, e = p - 2;
		a %= p;
		while (e) {
			if (e & 1) { r = r * a % p; }
			a = a * a % p;
			e >>= 1;
		}
		return r;
	};
	std::vector<std::vector<std::int64_t>> piv(cols);
	int rank = 0;
	for (auto const& sr : rows) {
		std::vector<std::int64_t> r(cols, 0);
		for (auto const& e : sr) { r[e.first] = ((e.second % p) + p) % p; }
		for (int c = 0; c < cols; ++c) {
			if (!r[c]) { continue; }
			if (piv[c].empty()) {
				auto k = inv(r[c]);
				for (auto& x : r) { x = x * k % p; }
				piv[c] = std::move(r);
				++rank;
				break;
			}
			auto f = r[c];
			for (int k = c; k < cols; ++k) { r[k] = ((r[k] - f * piv[c][k]) % p + p) % p; }
		}
	}
	return rank;
}

} // namespace gaussforge
