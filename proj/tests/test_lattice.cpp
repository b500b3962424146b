#include <catch_amalgamated.hpp>

#include <gaussforge/lattice.hpp>

using namespace gaussforge;
using K = RelationKind;

namespace {

// Explicit rows of all instances over the full basis (no column deletion).
std::vector<SparseRow> full_rows(GeneratorBasis const& basis, std::vector<RelationInstance> const& inst) {
	std::vector<int> column(basis.size());
	for (int i = 0; i < basis.size(); ++i) { column[i] = i; }
	std::set<SparseRow> rows;
	for (auto const& r : inst) {
		auto row = detail::to_row(r.sum, basis, column);
		if (!row.empty()) { rows.insert(row); }
	}
	return {rows.begin(), rows.end()};
}

int rank_of(std::vector<SparseRow> const& rows, int cols) { return exact_rank(rows, cols).rank; }

bool same_span(std::vector<SparseRow> a, std::vector<SparseRow> const& b, int cols) {
	int ra = rank_of(a, cols);
	int rb = rank_of(b, cols);
	a.insert(a.end(), b.begin(), b.end());
	return ra == rb && rank_of(a, cols) == ra;
}

bool in_span(std::vector<SparseRow> rows, SparseRow const& v, int cols) {
	int r = rank_of(rows, cols);
	rows.push_back(v);
	return rank_of(rows, cols) == r;
}

} // namespace

TEST_CASE("generator counts", "[lattice]") {
	CHECK(enumerate_generators(0, 1, true).size() == 1);
	CHECK(enumerate_generators(1, 1, true).size() == 9);
	CHECK(enumerate_generators(2, 1, true).size() == 201);
	for (int t = 0; t <= 2; ++t) {
		for (int m = 1; m <= 3; ++m) {
			for (bool dir : {true, false}) {
				BasisSpec s{0, t, m, dir, true, false};
				std::int64_t want = 0;
				for (int a = 0; a <= t; ++a) {
					std::int64_t term = double_factorial_odd(a);
					for (int i = 0; i < a; ++i) { term *= (dir ? 4 : 2) * (m + 1); }
					want += term;
				}
				auto b = make_basis(s);
				CHECK(b.size() == want);
				CHECK(generator_count(s) == want);
				std::set<GaussDiagram> distinct(b.generators().begin(), b.generators().end());
				CHECK(static_cast<int>(distinct.size()) == b.size());
				for (auto const& g : b.generators()) { CHECK(g.is_canonical()); }
			}
		}
	}
	CHECK_THROWS_AS(make_basis({0, 4, 3, true, true, false}, 1000), BudgetExceeded);
}

TEST_CASE("relation instance shapes", "[lattice]") {
	auto q1 = relation_instances(1, 1, {K::Q1});
	CHECK(q1.size() == 4);
	for (auto const& r : q1) { CHECK(r.sum.size() == 1); }

	BasisSpec s{0, 3, 2, true, true, false};
	for (auto const& f : detail::fragments(K::Q2, s)) { CHECK(f.terms.size() == 3); }
	for (auto const& f : detail::fragments(K::Q3, s)) {
		CHECK(f.terms.size() == 8);
		auto top = Label::of(3);
		CHECK(detail::q3_labels_ok(f.attrs[0].label, f.attrs[1].label, f.attrs[2].label, top));
	}
	CHECK(detail::q3_labels_ok(Label::of(3), Label::of(3), Label::of(3), Label::of(3)));
	CHECK_FALSE(detail::q3_labels_ok(Label::of(1), Label::of(1), Label::of(1), Label::of(3)));
	CHECK_FALSE(detail::q3_labels_ok(Label::of(1), Label::of(2), Label::of(3), Label::of(3)));
	CHECK(detail::q3_labels_ok(Label::of(2), Label::of(1), Label::of(1), Label::of(3)));

	for (auto const& r : relation_instances(2, 1, {K::Q2, K::Q3})) {
		CHECK(r.sum.size() <= (r.kind == K::Q2 ? 3u : 8u));
		for (auto const& [d, c] : r.sum.terms()) { CHECK(d.size() <= 2); }
	}
}

TEST_CASE("one-term relations by column deletion span the same space", "[lattice]") {
	for (auto [t, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
		BasisSpec s{0, t, m, true, true, false};
		auto basis = make_basis(s);
		auto rows = full_rows(basis, relation_instances(s, {K::Q1, K::Q2, K::Q3}));
		int explicit_rank = basis.size() - rank_of(rows, basis.size());
		CHECK(present(s, {K::Q1, K::Q2, K::Q3}).rank() == explicit_rank);
		CHECK(group_rank(t, m, Flavor::DirectedQ).rank == explicit_rank);
	}
}

TEST_CASE("rank of the empty degree", "[lattice]") {
	for (auto f : {Flavor::DirectedQ, Flavor::UndirectedQbar, Flavor::SixTOneT, Flavor::TwoTOneT, Flavor::FourTOneT,
	               Flavor::Polyak}) {
		CHECK(group_rank(0, 1, f).rank == 1);
		CHECK(parse_flavor(to_string(f)) == f);
	}
	CHECK_THROWS_AS(parse_flavor("sevenT"), ValidationError);
}

TEST_CASE("rank sandwich", "[lattice]") {
	for (auto [t, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}}) {
		auto r = group_rank(t, m, Flavor::DirectedQ);
		CHECK(rank_lower(t, m) <= r.rank);
		CHECK(BigInt(r.rank) <= omega_upper(t, m));
	}
}

TEST_CASE("closed-form bounds", "[lattice]") {
	for (int m = 1; m <= 6; ++m) { CHECK(omega_upper(1, m) == 6 * m); }
	CHECK(rank_lower(1, 1) == 2);
	CHECK(rank_lower(2, 2) == 6);
	for (int t = 1; t <= 12; ++t) {
		CHECK(rank_lower(t, 1) == t + 1);
		for (int m = 1; m <= 12; ++m) {
			BigInt sum = 1;
			for (int k = 1; k <= t; ++k) { sum += big_binomial(m + k - 1, k); }
			CHECK(sum == big_binomial(m + t, t));
			CHECK(rank_lower(t, m) == big_binomial(m + t, t));
		}
	}
}

TEST_CASE("two-term and six-term groups agree", "[lattice]") {
	for (auto [t, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
		auto six = group_rank(t, m, Flavor::SixTOneT).rank;
		auto two = group_rank(t, m, Flavor::TwoTOneT).rank;
		CHECK(six == two);
		CHECK(BigInt(two) == big_binomial(m + t, t));
	}
}

TEST_CASE("polyak flavor does not depend on m", "[lattice]") {
	for (int t = 1; t <= 2; ++t) {
		auto base = group_rank(t, 1, Flavor::Polyak).rank;
		for (int m = 2; m <= 3; ++m) { CHECK(group_rank(t, m, Flavor::Polyak).rank == base); }
	}
}

TEST_CASE("Bar and the average map", "[lattice]") {
	for (int n = 0; n <= 3; ++n) {
		for (int m = 1; m <= 2; ++m) {
			auto basis = make_basis({n, n, m, false, true, false});
			for (auto const& g : basis.generators()) {
				DiagramSum s;
				s.add(g, 1);
				auto back = bar_map(mu_map(s));
				CHECK(back.size() == 1);
				CHECK(back.coefficient(g) == (std::int64_t{1} << n));
				if (n == 1) { CHECK(mu_map(s).size() == 2); }
			}
		}
	}
	auto d = parse_gauss_code("1T+ 2H- 1H+ 2T-");
	CHECK(bar(d) == parse_gauss_code("1C+ 2C- 1C+ 2C-"));
	CHECK_THROWS_AS(mu_map(DiagramSum(d)), ValidationError);
}

TEST_CASE("Bar descends to the undirected presentation", "[lattice]") {
	for (auto [t, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
		BasisSpec dir{0, t, m, true, true, false};
		BasisSpec und{0, t, m, false, true, false};
		auto ubasis = make_basis(und);
		auto urows = full_rows(ubasis, relation_instances(und, {K::Q1, K::Q2, K::Q3}));
		std::vector<RelationInstance> images;
		for (auto const& r : relation_instances(dir, {K::Q1, K::Q2, K::Q3})) { images.push_back({r.kind, bar_map(r.sum)}); }
		auto brows = full_rows(ubasis, images);
		CHECK(same_span(urows, brows, ubasis.size()));
	}
}

TEST_CASE("the average of a four-term relation is a six-term consequence", "[lattice]") {
	int const m = 1;
	BasisSpec und{2, 2, m, false, false, false};
	BasisSpec dir{2, 2, m, true, false, false};
	auto dbasis = make_basis(dir);
	auto six = full_rows(dbasis, relation_instances(dir, {K::SixT}));
	int checked = 0;
	for (auto const& r : relation_instances(und, {K::FourT})) {
		RelationInstance image{K::FourT, mu_map(r.sum)};
		auto row = full_rows(dbasis, {image});
		if (row.empty()) { continue; }
		CHECK(in_span(six, row[0], dbasis.size()));
		++checked;
	}
	CHECK(checked > 0);
}

TEST_CASE("relabel and truncate commute", "[lattice]") {
	for (int t = 1; t <= 2; ++t) {
		for (int m = 1; m <= 3; ++m) {
			auto basis = enumerate_generators(t, m, true);
			for (int n = 1; n <= m; ++n) {
				auto target = enumerate_generators(t - 1, n, true);
				std::set<GaussDiagram> hit;
				for (auto const& g : basis.generators()) {
					DiagramSum s;
					s.add(g, 1);
					auto a = d_map(pi_map(s, t), m, n);
					auto b = pi_map(d_map(s, m, n), t);
					CHECK(a.terms() == b.terms());
					for (auto const& [d, c] : a.terms()) { hit.insert(d); }
					if (n == m) { CHECK(d_map(s, m, m).terms() == s.terms()); }
				}
				CHECK(static_cast<int>(hit.size()) == target.size());
			}
		}
	}
	auto one = parse_gauss_code("1T+:3 1H+:3");
	CHECK(d_map(DiagramSum(one), 2, 1).coefficient(parse_gauss_code("1T+:2 1H+:2")) == 1);
	CHECK_THROWS_AS(d_map(DiagramSum(one), 1, 2), ValidationError);
}

TEST_CASE("relabelling maps one-term relations to one-term relations", "[lattice]") {
	for (int m = 2; m <= 3; ++m) {
		auto src = relation_instances(2, m, {K::Q1});
		for (int n = 1; n < m; ++n) {
			std::set<std::vector<std::pair<GaussDiagram, std::int64_t>>> targets;
			for (auto const& r : relation_instances(2, n, {K::Q1})) {
				targets.insert({r.sum.terms().begin(), r.sum.terms().end()});
			}
			for (auto const& r : src) {
				auto img = d_map(r.sum, m, n);
				CHECK(targets.count({img.terms().begin(), img.terms().end()}) == 1);
			}
		}
	}
}
