#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gaussforge/cli.hpp>

namespace {

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = gaussforge::cli::run(std::move(args), out, err);
	return {code, out.str(), err.str()};
}

std::string sample(std::string const& name) { return std::string(GAUSSFORGE_SAMPLES) + "/" + name; }

nlohmann::json last_json(std::string const& text) {
	auto trimmed = text.substr(0, text.find_last_not_of('\n') + 1);
	auto nl = trimmed.rfind('\n');
	return nlohmann::json::parse(nl == std::string::npos ? trimmed : trimmed.substr(nl + 1));
}

} // namespace

TEST_CASE("parse and conway on samples", "[cli]") {
	auto p = run({"parse", sample("trefoil.gd")});
	CHECK(p.code == 0);
	CHECK(p.out == "1T+ 2H+ 3T+ 1H+ 2T+ 3H+\n");

	auto j = run({"parse", "--json", "stock:trefoil"});
	CHECK(j.code == 0);
	CHECK(nlohmann::json::parse(j.out)["arrows"].size() == 3);

	auto c = run({"conway", "--m", "1", "--max-degree", "4", sample("trefoil.gd")});
	CHECK(c.code == 0);
	CHECK(c.out == "1 + 1*z^2\n");

	auto cj = run({"--json", "conway", "--m", "inf", sample("figure_eight.gd")});
	CHECK(cj.code == 0);
	CHECK(nlohmann::json::parse(cj.out)["coefficients"]["2"] == -1);
}

TEST_CASE("bad input exits 1", "[cli]") {
	CHECK(run({"parse", sample("bad.gd")}).code == 1);
	CHECK(run({"parse", sample("missing.gd")}).code == 1);
	CHECK(run({"frobnicate"}).code == 1);
	CHECK(run({"conway", "--bogus", sample("trefoil.gd")}).code == 1);
	CHECK(run({}).code == 1);
	CHECK(run({"conway", "--max-degree", "3", sample("trefoil.gd")}).code == 1);
	CHECK(run({"eval", "--invariant", "theta", "--m", "2", "--spec", "1@3", sample("trefoil.gd")}).code == 1);
	CHECK(run({"generate", "--family", "nope"}).code == 1);
	CHECK(run({"conway", "--max-arrows", "2", sample("trefoil.gd")}).code == 1);
	auto h = run({"--help"});
	CHECK(h.code == 0);
	CHECK(h.out.find("skein-check") != std::string::npos);
}

TEST_CASE("eval methods agree", "[cli]") {
	auto d = run({"eval", "--invariant", "theta", "--m", "2", "--spec", "2@2", "--method", "both", sample("witness_l2.gd")});
	CHECK(d.code == 0);
	CHECK(d.out == "4\n");
	auto f = run({"eval", "--invariant", "theta", "--m", "2", "--spec", "1@1", "--method", "formula", sample("witness_l2.gd")});
	CHECK(f.code == 0);
	CHECK(f.out == "0\n");
	CHECK(run({"eval", "--invariant", "theta", "--m", "2", "--spec", "1@1", "--method", "guess", sample("witness_l2.gd")}).code
	      == 1);
}

TEST_CASE("rank and bounds", "[cli]") {
	auto b = run({"bounds", "--t", "1", "--m", "1"});
	CHECK(b.code == 0);
	CHECK(b.out == "lower 2\nupper 6\n");

	auto r = run({"rank", "--t", "1", "--m", "2"});
	CHECK(r.code == 0);
	auto j = nlohmann::json::parse(r.out);
	CHECK(j["schema"] == 1);
	CHECK(j["flavor"] == "directed_Q");
	CHECK(j["lower"].get<std::int64_t>() <= j["rank"].get<std::int64_t>());
	CHECK(j["rank"].get<std::int64_t>() <= j["upper"].get<std::int64_t>());

	CHECK(run({"rank", "--t", "2", "--m", "1", "--max-generators", "10"}).code == 1);
	CHECK(run({"rank", "--t", "1", "--m", "inf"}).code == 1);
}

TEST_CASE("generate", "[cli]") {
	auto e = run({"generate", "--family", "earring", "--params", "w=3"});
	CHECK(e.code == 0);
	CHECK(e.out == "1T+ 2T+ 1H+ 3T+ 2H+ 3H+\n");
	auto l = run({"generate", "--family", "lm", "--params", "m=2", "--format", "json"});
	CHECK(l.code == 0);
	CHECK(nlohmann::json::parse(l.out)["arrows"].size() == 8);
	std::ifstream in(sample("witness_l2.gd"));
	std::string line, last;
	while (std::getline(in, line)) { last = line; }
	CHECK(run({"generate", "--family", "lm", "--params", "m=2"}).out == last + "\n");
	CHECK(run({"generate", "--family", "lm", "--params", "m"}).code == 1);
}

TEST_CASE("skein-check", "[cli]") {
	auto bad = run({"skein-check", "--x", "1", "--y", "2", "--m", "1", sample("virtual_trefoil.gd")});
	CHECK(bad.code == 1);
	CHECK(bad.err.find("hypothesis") != std::string::npos);
	auto ok = run({"skein-check", "--x", "1", "--y", "2", "--m", "1", "stock:trefoil"});
	CHECK(ok.code == 0);
	CHECK(ok.out.find("!=") == std::string::npos);
	CHECK(run({"skein-check", "--x", "1", "--y", "9", "stock:trefoil"}).code == 1);
}

TEST_CASE("fuzz is deterministic", "[cli]") {
	std::vector<std::string> args{"fuzz", "--invariant", "conway", "--m", "1", "--n", "1", "--walks", "2", "--steps", "100",
	                              "--seed", "5", sample("trefoil.gd"), sample("figure_eight.gd")};
	auto a = run(args);
	auto b = run(args);
	CHECK(a.code == 0);
	CHECK(a.out == b.out);
	auto s = last_json(a.out);
	CHECK(s["violations"] == 0);
	CHECK(s["walks"] == 4);
	CHECK(s["steps"] == 400);

	// a non-invariant is caught and reported
	auto c = run({"fuzz", "--invariant", "count", "--walks", "1", "--steps", "50", sample("trefoil.gd")});
	CHECK(c.code == 2);
	CHECK(last_json(c.out)["violations"].get<int>() > 0);
	auto first = nlohmann::json::parse(c.out.substr(0, c.out.find('\n')));
	CHECK(first["base_name"] == sample("trefoil.gd"));
}

TEST_CASE("degree-check", "[cli]") {
	auto v = run({"--json", "degree-check", "--invariant", "conway", "--m", "1", "--n", "1", "--order", "2", sample("figure_eight.gd")});
	CHECK(v.code == 0);
	CHECK(nlohmann::json::parse(v.out)["vanishes"] == true);
	auto w = run({"degree-check", "--invariant", "conway", "--m", "1", "--n", "1", "--order", "2", "--require-witness",
	              sample("figure_eight.gd")});
	CHECK(w.code == 0);
	CHECK(w.out == "order 2 vanishes, witness found\n");
	CHECK(run({"degree-check", "--invariant", "conway", "--m", "1", "--order", "1", sample("figure_eight.gd")}).code == 2);
	CHECK(run({"degree-check", "--invariant", "constant", "--order", "1", "--require-witness", sample("trefoil.gd")}).code == 2);
}

TEST_CASE("config precedence: file, then environment, then flags", "[cli]") {
	auto conf = (std::filesystem::temp_directory_path() / "gaussforge_test.conf").string();
	{
		std::ofstream f(conf);
		f << "# test\nm = 2\nmax_degree=2\n";
	}
	auto earring = sample("directed_earring_2_2.json");
	::unsetenv("GAUSSFORGE_M");
	CHECK(run({"conway", earring}).out == "1\n");
	CHECK(run({"--config", conf, "conway", earring}).out == "1 + 3*z^2\n");
	::setenv("GAUSSFORGE_M", "1", 1);
	CHECK(run({"--config", conf, "conway", earring}).out == "1\n");
	CHECK(run({"--config", conf, "conway", "--m", "2", earring}).out == "1 + 3*z^2\n");
	::setenv("GAUSSFORGE_M", "zero", 1);
	CHECK(run({"conway", earring}).code == 1);
	::unsetenv("GAUSSFORGE_M");
	{
		std::ofstream f(conf);
		f << "colour = blue\n";
	}
	CHECK(run({"--config", conf, "conway", earring}).code == 1);
	std::remove(conf.c_str());
	CHECK(run({"--config", sample("gaussforge.conf"), "conway", earring}).code == 0);
}
