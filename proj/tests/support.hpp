#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <gaussforge/diagram.hpp>

namespace test {

// Uniform endpoint word with n arrows and random signs (or given sign).
template <typename Rng>
gaussforge::GaussDiagram random_diagram(Rng& rng, int n, int sign = 0, gaussforge::Host host = gaussforge::Host::Line) {
	std::vector<gaussforge::Endpoint> word;
	for (int i = 0; i < n; ++i) {
		word.push_back({i, false});
		word.push_back({i, true});
	}
	std::shuffle(word.begin(), word.end(), rng);
	std::vector<gaussforge::ArrowAttr> attrs;
	for (int i = 0; i < n; ++i) {
		int s = sign ? sign : (rng() % 2 ? 1 : -1);
		attrs.push_back({s, {}});
	}
	return gaussforge::GaussDiagram::from_word(host, word, attrs);
}

// Every signed line diagram with n arrows, as canonical forms without repeats.
inline std::vector<gaussforge::GaussDiagram> all_diagrams(int n) {
	std::vector<gaussforge::GaussDiagram> out;
	std::vector<gaussforge::Endpoint> word(2 * n);
	std::vector<int> used(n, 0);
	auto emit = [&] {
		for (unsigned mask = 0; mask < (1U << n); ++mask) {
			std::vector<gaussforge::ArrowAttr> attrs;
			for (int i = 0; i < n; ++i) { attrs.push_back({mask >> i & 1U ? -1 : 1, {}}); }
			out.push_back(gaussforge::GaussDiagram::from_word(gaussforge::Host::Line, word, attrs));
		}
	};
	// arrows are opened in id order so each word appears once up to renaming
	auto rec = [&](auto&& self, int pos, int opened) -> void {
		if (pos == 2 * n) {
			emit();
			return;
		}
		if (opened < n) {
			for (bool head : {false, true}) {
				word[pos] = {opened, head};
				used[opened] = 1;
				self(self, pos + 1, opened + 1);
				used[opened] = 0;
			}
		}
		for (int a = 0; a < opened; ++a) {
			if (used[a] == 1) {
				bool first_head = false;
				for (int q = 0; q < pos; ++q) {
					if (word[q].arrow == a) { first_head = word[q].head; }
				}
				word[pos] = {a, !first_head};
				used[a] = 2;
				self(self, pos + 1, opened);
				used[a] = 1;
			}
		}
	};
	rec(rec, 0, 0);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

} // namespace test
