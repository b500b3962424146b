#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gaussforge {

class BitRow {
public:
	BitRow() = default;
	explicit BitRow(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

	int size() const { return bits_; }
	bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
	void set(int i, bool v = true) {
		std::uint64_t mask = std::uint64_t{1} << (i & 63);
		if (v) {
			words_[i >> 6] |= mask;
		} else {
			words_[i >> 6] &= ~mask;
		}
	}
	void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
	int count() const {
		int c = 0;
		for (auto w : words_) { c += std::popcount(w); }
		return c;
	}
	bool any() const {
		for (auto w : words_) {
			if (w) { return true; }
		}
		return false;
	}
	BitRow& operator^=(BitRow const& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) { words_[i] ^= o.words_[i]; }
		return *this;
	}
	bool operator==(BitRow const&) const = default;

private:
	int bits_ = 0;
	std::vector<std::uint64_t> words_;
};

inline int gf2_rank(std::vector<BitRow> rows) {
	int rank = 0;
	int cols = rows.empty() ? 0 : rows.front().size();
	for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
		int pivot = -1;
		for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
			if (rows[r].test(c)) {
				pivot = r;
				break;
			}
		}
		if (pivot < 0) { continue; }
		std::swap(rows[rank], rows[pivot]);
		for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
			if (r != rank && rows[r].test(c)) { rows[r] ^= rows[rank]; }
		}
		++rank;
	}
	return rank;
}

inline int gf2_nullity(std::vector<BitRow> const& square) {
	return static_cast<int>(square.size()) - gf2_rank(square);
}

} // namespace gaussforge
