#include <catch_amalgamated.hpp>

#include <random>

#include <gaussforge/conway.hpp>
#include <gaussforge/generators.hpp>

#include "oracles/fox.hpp"
#include "support.hpp"

using namespace gaussforge;

namespace {

EvenPolynomial from_map(std::map<int, std::int64_t> const& m, int max_degree) {
	EvenPolynomial p;
	for (auto const& [e, c] : m) {
		if (e <= max_degree) { p.set(e, c); }
	}
	return p;
}

// Random braid words whose closure is a knot.
std::vector<int> random_knot_braid(std::mt19937_64& rng, int strands, int length) {
	for (int attempt = 0;; ++attempt) {
		if (attempt % 50 == 49) { ++length; }
		std::vector<int> w;
		for (int i = 0; i < length; ++i) {
			int g = 1 + static_cast<int>(rng() % (strands - 1));
			w.push_back(rng() % 2 ? g : -g);
		}
		try {
			braid_closure(strands, w);
			return w;
		} catch (ValidationError const&) {
		}
	}
}

} // namespace

TEST_CASE("ascending", "[conway]") {
	CHECK(is_ascending(GaussDiagram{}));
	CHECK(is_ascending(parse_gauss_code("1T+ 2H+ 1H+ 2T+")));
	// one component, but the second arrow is first met at its head
	CHECK(is_one_component(parse_gauss_code("1T+ 2T+ 1H+ 2H+")));
	CHECK_FALSE(is_ascending(parse_gauss_code("1T+ 2T+ 1H+ 2H+")));
	CHECK_FALSE(is_ascending(parse_gauss_code("1H+ 1T+")));
	CHECK_FALSE(is_ascending(parse_gauss_code("1T+ 1H+")));
	CHECK_FALSE(is_one_component(parse_gauss_code("1T+ 1H+")));
}

TEST_CASE("the unique two-arrow ascending pattern", "[conway]") {
	int found = 0;
	for (auto const& d : test::all_diagrams(2)) {
		bool plus = d.arrow(0).sign > 0 && d.arrow(1).sign > 0;
		if (plus && is_ascending(d)) {
			++found;
			CHECK(serialize(d) == "1T+ 2H+ 1H+ 2T+");
			CHECK(c2n_classical(d, 1) == 1);
			CHECK(c2n_m(d, 1, Bound(1)) == 1);
		}
	}
	CHECK(found == 1);
}

TEST_CASE("classical diagrams agree with the Alexander oracle", "[conway]") {
	for (auto name : {"empty", "trefoil", "figure_eight", "cinquefoil"}) {
		auto d = stock_diagram(name);
		INFO(name);
		CHECK(nabla_classical(d, 6) == from_map(oracle::conway_from_alexander(d), 6));
	}
	CHECK(nabla_classical(stock_diagram("trefoil"), 4).to_string() == "1 + 1*z^2");
	CHECK(nabla_classical(stock_diagram("figure_eight"), 4).to_string() == "1 - 1*z^2");
	CHECK(nabla_classical(stock_diagram("cinquefoil"), 4).to_string() == "1 + 3*z^2 + 1*z^4");

	std::mt19937_64 rng(37);
	for (int trial = 0; trial < 40; ++trial) {
		int strands = 2 + trial % 3;
		auto w = random_knot_braid(rng, strands, 3 + trial % 6);
		auto d = braid_closure(strands, w);
		INFO(serialize(d));
		CHECK(nabla_classical(d, 8) == from_map(oracle::conway_from_alexander(d), 8));
	}
}

TEST_CASE("f^m Conway restricts to the classical polynomial", "[conway]") {
	for (int m = 1; m <= 3; ++m) {
		CHECK(nabla_m(stock_diagram("trefoil"), Bound(m), 4).to_string() == "1 + 1*z^2");
		CHECK(nabla_m(GaussDiagram{}, Bound(m), 4).to_string() == "1");
	}
	std::mt19937_64 rng(41);
	for (int trial = 0; trial < 20; ++trial) {
		auto d = braid_closure(3, random_knot_braid(rng, 3, 4 + trial % 5));
		for (int m = 1; m <= 3; ++m) { CHECK(nabla_m(d, Bound(m), 6) == nabla_classical(d, 6)); }
	}
}

TEST_CASE("c2n_m basics", "[conway]") {
	std::mt19937_64 rng(43);
	for (int trial = 0; trial < 100; ++trial) {
		auto d = test::random_diagram(rng, trial % 7);
		for (int m = 1; m <= 3; ++m) {
			CHECK(c2n_m(d, 0, Bound(m)) == 1);
			CHECK(c2n_m(d, d.size() / 2 + 1, Bound(m)) == 0);
		}
		CHECK(c2n_m(d, 1, Bound::infinite()) == c2n_classical(d, 1));
	}
}

TEST_CASE("Conway distinctness on the directed earring diagrams", "[conway]") {
	for (int m = 2; m <= 4; ++m) {
		auto d = directed_earring_diagram(m, 2);
		for (int n = 1; n < m; ++n) {
			CHECK(c2n_m(d, 1, Bound(m)) - c2n_m(d, 1, Bound(n)) >= 1);
			CHECK(nabla_m(d, Bound(m), 2) != nabla_m(d, Bound(n), 2));
		}
	}
}

TEST_CASE("polynomial printing", "[conway]") {
	EvenPolynomial p;
	CHECK(p.to_string() == "0");
	p.set(0, 1);
	p.set(2, -2);
	CHECK(p.to_string() == "1 - 2*z^2");
	CHECK_THROWS_AS(p.set(3, 1), ValidationError);
}

TEST_CASE("skein quintuples", "[conway]") {
	auto q = build_quintuple(parse_gauss_code("1T+ 2T+ 1H+ 2H+"), 0, 1);
	CHECK(q.k00.empty());
	CHECK_FALSE(check_skein_hypotheses(q, Bound(1)).ok);
	CHECK_THROWS_AS(verify_skein(q, Bound(1), 4), ValidationError);
	CHECK_THROWS_AS(build_quintuple(parse_gauss_code("1T+ 1H+ 2T+ 2H+"), 0, 1), ValidationError);
	CHECK_THROWS_AS(build_quintuple(parse_gauss_code("1T+ 2T+ 1H+ 2H+"), 0, 0), ValidationError);

	auto t = stock_diagram("trefoil");
	auto tq = build_quintuple(t, 0, 1);
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) { CHECK(tq.variants[i][j].size() == 3); }
	}
	REQUIRE(check_skein_hypotheses(tq, Bound(1)).ok);
	auto r = verify_skein(tq, Bound(1), 4);
	CHECK(r.holds);
	REQUIRE(r.rows.size() == 3);
	CHECK(r.rows[0].lhs == 0);
}

TEST_CASE("skein identity on random quintuples", "[conway]") {
	std::mt19937_64 rng(47);
	int passing = 0, failing = 0;
	for (int trial = 0; trial < 400 && passing < 40; ++trial) {
		auto d = test::random_diagram(rng, 2 + trial % 7);
		std::vector<std::pair<int, int>> pairs;
		for (int x = 0; x < d.size(); ++x) {
			for (int y = x + 1; y < d.size(); ++y) {
				if (linked(d, x, y)) { pairs.push_back({x, y}); }
			}
		}
		if (pairs.empty()) { continue; }
		auto [x, y] = pairs[rng() % pairs.size()];
		auto q = build_quintuple(d, x, y);
		if (!check_skein_hypotheses(q, Bound(2)).ok) {
			++failing;
			continue;
		}
		++passing;
		for (int m : {1, 2, 3}) {
			INFO(serialize(d) << " x=" << x + 1 << " y=" << y + 1 << " m=" << m);
			CHECK(verify_skein(q, Bound(m), 4).holds);
		}
	}
	CHECK(passing >= 20);
	CHECK(failing > 0);
}
