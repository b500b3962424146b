#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conway.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "lattice.hpp"
#include "theta.hpp"
#include "verification.hpp"

namespace gaussforge::cli {

using Json = nlohmann::ordered_json;

struct Config {
	int max_arrows = 16;
	std::int64_t max_generators = 50000;
	int m = 1;
	int max_degree = 4;
	std::uint64_t seed = 1;

	void set(std::string const& key, std::string const& value) {
		try {
			std::size_t used = 0;
			if (key == "max_arrows") {
				max_arrows = std::stoi(value, &used);
			} else if (key == "max_generators") {
				max_generators = std::stoll(value, &used);
			} else if (key == "m") {
				m = std::stoi(value, &used);
			} else if (key == "max_degree") {
				max_degree = std::stoi(value, &used);
			} else if (key == "seed") {
				seed = std::stoull(value, &used);
			} else {
				throw ValidationError("unknown config key '" + key + "'");
			}
			if (used != value.size()) { throw std::invalid_argument("junk"); }
		} catch (std::logic_error const&) {
			throw ValidationError("bad value '" + value + "' for config key '" + key + "'");
		}
	}

	void validate() const {
		if (max_arrows < 1 || max_generators < 1 || m < 1) { throw ValidationError("config limits must be positive"); }
		if (max_degree < 0 || max_degree % 2) { throw ValidationError("config max_degree must be even and >= 0"); }
	}
};

inline std::string trim(std::string s) {
	auto b = s.find_first_not_of(" \t\r\n");
	if (b == std::string::npos) { return ""; }
	auto e = s.find_last_not_of(" \t\r\n");
	return s.substr(b, e - b + 1);
}

// key=value lines, '#' comments.
inline void apply_config_text(Config& c, std::string const& text) {
	std::istringstream in(text);
	std::string line;
	int n = 0;
	while (std::getline(in, line)) {
		++n;
		auto hash = line.find('#');
		if (hash != std::string::npos) { line.resize(hash); }
		line = trim(line);
		if (line.empty()) { continue; }
		auto eq = line.find('=');
		if (eq == std::string::npos) { throw ValidationError("config line " + std::to_string(n) + ": expected key=value"); }
		c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
	}
}

inline void apply_env(Config& c) {
	for (char const* key : {"max_arrows", "max_generators", "m", "max_degree", "seed"}) {
		std::string name = "GAUSSFORGE_";
		for (char const* p = key; *p; ++p) { name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p))); }
		if (char const* v = std::getenv(name.c_str())) { c.set(key, trim(v)); }
	}
}

inline std::string read_text(std::string const& path) {
	if (path == "-") {
		std::ostringstream s;
		s << std::cin.rdbuf();
		return s.str();
	}
	std::ifstream f(path);
	if (!f) { throw ValidationError("cannot read '" + path + "'"); }
	std::ostringstream s;
	s << f.rdbuf();
	return s.str();
}

// A file path, "-" for stdin, or stock:<name>.
inline GaussDiagram load_diagram(std::string const& path) {
	if (path.rfind("stock:", 0) == 0) { return stock_diagram(path.substr(6)); }
	return read_diagram(read_text(path));
}

inline Bound parse_bound(std::string const& s) {
	if (s == "inf" || s == "infinity") { return Bound::infinite(); }
	try {
		std::size_t used = 0;
		int m = std::stoi(s, &used);
		if (used == s.size() && m >= 1) { return Bound(m); }
	} catch (std::logic_error const&) {
	}
	throw ValidationError("bad label bound '" + s + "' (positive integer or inf)");
}

inline Json big_json(BigInt const& v) {
	if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) { return static_cast<std::int64_t>(v); }
	return v.str();
}

inline std::map<std::string, std::string> parse_params(std::string const& text) {
	std::map<std::string, std::string> out;
	std::stringstream in(text);
	std::string item;
	while (std::getline(in, item, ',')) {
		item = trim(item);
		if (item.empty()) { continue; }
		auto eq = item.find('=');
		if (eq == std::string::npos) { throw ValidationError("bad parameter '" + item + "' (expected key=value)"); }
		out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
	}
	return out;
}

inline int int_param(std::map<std::string, std::string> const& p, std::string const& key, std::optional<int> fallback = {}) {
	auto it = p.find(key);
	if (it == p.end()) {
		if (fallback) { return *fallback; }
		throw ValidationError("missing parameter '" + key + "'");
	}
	try {
		std::size_t used = 0;
		int v = std::stoi(it->second, &used);
		if (used == it->second.size()) { return v; }
	} catch (std::logic_error const&) {
	}
	throw ValidationError("parameter '" + key + "' must be an integer");
}

struct InvariantArgs {
	std::string name = "theta";
	std::string m;
	std::string spec = "1@1";
	int n = 1;
};

inline Invariant make_invariant(InvariantArgs const& a, Config const& cfg) {
	std::string ms = a.m.empty() ? std::to_string(cfg.m) : a.m;
	if (a.name == "theta") {
		Bound b = parse_bound(ms);
		if (b.is_infinite()) { throw ValidationError("theta needs a finite m"); }
		auto spec = parse_theta_spec(a.spec, b.value());
		return [spec](GaussDiagram const& d) { return theta_invariant(d, spec); };
	}
	if (a.name == "conway") {
		Bound b = parse_bound(ms);
		if (a.n < 0) { throw ValidationError("--n must be >= 0"); }
		return [b, n = a.n](GaussDiagram const& d) { return c2n_m(d, n, b); };
	}
	if (a.name == "classical") {
		if (a.n < 0) { throw ValidationError("--n must be >= 0"); }
		return [n = a.n](GaussDiagram const& d) { return c2n_classical(d, n); };
	}
	if (a.name == "count") {
		return [](GaussDiagram const& d) { return static_cast<std::int64_t>(d.size()); };
	}
	if (a.name == "constant") {
		return [](GaussDiagram const&) { return std::int64_t{1}; };
	}
	throw ValidationError("unknown invariant '" + a.name + "' (theta, conway, classical, count, constant)");
}

inline void add_invariant_options(CLI::App* sub, InvariantArgs& a) {
	sub->add_option("--invariant", a.name, "theta | conway | classical | count | constant");
	sub->add_option("--m", a.m, "label bound (integer, or inf for conway)");
	sub->add_option("--spec", a.spec, "theta factors t1@k1,t2@k2,...");
	sub->add_option("--n", a.n, "coefficient index for conway/classical (z^{2n})");
}

inline void check_size(GaussDiagram const& d, Config const& cfg) {
	if (d.size() > cfg.max_arrows) {
		throw BudgetExceeded("diagram has " + std::to_string(d.size()) + " arrows, limit is " + std::to_string(cfg.max_arrows));
	}
}

inline GaussDiagram generate(std::string const& family, std::map<std::string, std::string> const& p) {
	if (family == "complete") { return complete_graph_diagram(int_param(p, "k")); }
	if (family == "earring") { return earring(int_param(p, "w")); }
	if (family == "dmk") {
		int m = int_param(p, "m");
		int k = int_param(p, "k");
		return int_param(p, "directed", 0) ? directed_earring_diagram(m, k) : earring_diagram(m, k);
	}
	if (family == "lm") { return theta_witness(int_param(p, "m")); }
	if (family == "stock") {
		auto it = p.find("name");
		if (it == p.end()) { throw ValidationError("missing parameter 'name'"); }
		return stock_diagram(it->second);
	}
	throw ValidationError("unknown family '" + family + "' (complete, earring, dmk, lm, stock)");
}

// Returns the process exit code: 0 ok, 1 bad input, 2 the property checked fails.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Gauss diagram invariants and lattice ranks", "gaussforge"};
	app.require_subcommand(1, 1);
	app.fallthrough();
	std::string config_path;
	bool json = false;
	app.add_option("--config", config_path, "key=value config file");
	app.add_flag("--json", json, "machine-readable output");

	std::string file;
	std::vector<std::string> files;
	std::string m_text;
	int max_degree = -1;
	int t = 1;
	std::string flavor = "directed_Q";
	std::string family;
	std::string params;
	std::string method = "direct";
	std::string format = "text";
	int x = 0, y = 0;
	int walks = 4;
	int steps = 1000;
	std::optional<std::uint64_t> seed;
	std::optional<int> max_arrows;
	std::optional<std::int64_t> max_generators;
	int order = 1;
	bool require_witness = false;
	InvariantArgs inv;

	auto* parse = app.add_subcommand("parse", "validate a diagram and print its canonical form");
	parse->add_option("file", file, "diagram file, - for stdin, stock:<name>")->required();

	auto* eval = app.add_subcommand("eval", "evaluate an invariant");
	eval->add_option("file", file)->required();
	add_invariant_options(eval, inv);
	eval->add_option("--method", method, "direct | formula | both (theta only)");

	auto* conway = app.add_subcommand("conway", "truncated f^m-Conway polynomial");
	conway->add_option("file", file)->required();
	conway->add_option("--m", m_text, "label bound, or inf");
	conway->add_option("--max-degree", max_degree);
	conway->add_option("--max-arrows", max_arrows);

	auto* skein = app.add_subcommand("skein-check", "check the skein identity on a quintuple");
	skein->add_option("file", file)->required();
	skein->add_option("--x", x, "first designated arrow id")->required();
	skein->add_option("--y", y, "second designated arrow id")->required();
	skein->add_option("--m", m_text);
	skein->add_option("--max-degree", max_degree);

	auto* rank = app.add_subcommand("rank", "rank of a lattice group");
	rank->add_option("--t", t)->required();
	rank->add_option("--m", m_text)->required();
	rank->add_option("--flavor", flavor);
	rank->add_option("--max-generators", max_generators);

	auto* bounds = app.add_subcommand("bounds", "closed-form rank bounds");
	bounds->add_option("--t", t)->required();
	bounds->add_option("--m", m_text)->required();

	auto* gen = app.add_subcommand("generate", "emit a stock diagram family member");
	gen->add_option("--family", family)->required();
	gen->add_option("--params", params, "comma separated key=value");
	gen->add_option("--format", format, "text | json");

	auto* fuzz = app.add_subcommand("fuzz", "Reidemeister invariance fuzzing");
	fuzz->add_option("files", files, "base diagrams (default: every stock diagram)");
	add_invariant_options(fuzz, inv);
	fuzz->add_option("--walks", walks);
	fuzz->add_option("--steps", steps);
	fuzz->add_option("--seed", seed);
	fuzz->add_option("--max-arrows", max_arrows);

	auto* degree = app.add_subcommand("degree-check", "alternating switch sums");
	degree->add_option("file", file)->required();
	add_invariant_options(degree, inv);
	degree->add_option("--order", order)->required();
	degree->add_flag("--require-witness", require_witness, "exit 2 unless some order-subset sum is nonzero");
	degree->add_option("--max-arrows", max_arrows);

	try {
		std::reverse(args.begin(), args.end());
		app.parse(args);
	} catch (CLI::ParseError const& e) {
		if (e.get_exit_code() == 0) {
			app.exit(e, out, err);
			return 0;
		}
		err << "error: " << e.what() << "\n" << app.help();
		return 1;
	}

	try {
		Config cfg;
		if (!config_path.empty()) { apply_config_text(cfg, read_text(config_path)); }
		apply_env(cfg);
		if (max_arrows) { cfg.max_arrows = *max_arrows; }
		if (max_generators) { cfg.max_generators = *max_generators; }
		if (seed) { cfg.seed = *seed; }
		if (max_degree >= 0) { cfg.max_degree = max_degree; }
		cfg.validate();
		Bound mb = m_text.empty() ? Bound(cfg.m) : parse_bound(m_text);

		if (*parse) {
			auto d = load_diagram(file);
			if (json) {
				out << to_json(d).dump() << "\n";
			} else {
				out << serialize(d) << "\n";
			}
			return 0;
		}
		if (*eval) {
			auto d = load_diagram(file);
			std::int64_t value = 0;
			if (inv.name == "theta" && method != "direct") {
				std::string ms = inv.m.empty() ? std::to_string(cfg.m) : inv.m;
				Bound b = parse_bound(ms);
				if (b.is_infinite()) { throw ValidationError("theta needs a finite m"); }
				auto spec = parse_theta_spec(inv.spec, b.value());
				auto l = lambda_m(d, b);
				value = evaluate_formula(spec, l);
				if (method == "both") {
					auto direct = theta_product(l, spec);
					if (direct != value) {
						err << "formula " << value << " != direct " << direct << "\n";
						return 2;
					}
				} else if (method != "formula") {
					throw ValidationError("unknown method '" + method + "'");
				}
			} else {
				value = make_invariant(inv, cfg)(d);
			}
			if (json) {
				out << Json{{"schema", 1}, {"invariant", inv.name}, {"value", value}}.dump() << "\n";
			} else {
				out << value << "\n";
			}
			return 0;
		}
		if (*conway) {
			auto d = load_diagram(file);
			check_size(d, cfg);
			auto p = nabla_m(d, mb, cfg.max_degree);
			if (json) {
				Json c = Json::object();
				for (auto const& [e, v] : p.coefficients()) { c[std::to_string(e)] = v; }
				out << Json{{"schema", 1}, {"m", mb.to_string()}, {"max_degree", cfg.max_degree}, {"coefficients", c}, {"text", p.to_string()}}
				           .dump()
				    << "\n";
			} else {
				out << p.to_string() << "\n";
			}
			return 0;
		}
		if (*skein) {
			auto d = load_diagram(file);
			check_size(d, cfg);
			auto q = build_quintuple(d, x - 1, y - 1);
			auto h = check_skein_hypotheses(q, mb);
			if (!h.ok) {
				if (json) {
					out << Json{{"schema", 1}, {"hypotheses", false}, {"failures", h.failures}}.dump() << "\n";
				}
				for (auto const& f : h.failures) { err << "hypothesis fails: " << f << "\n"; }
				return 1;
			}
			auto r = verify_skein(q, mb, cfg.max_degree);
			if (json) {
				Json rows = Json::array();
				for (auto const& row : r.rows) { rows.push_back({{"degree", row.degree}, {"lhs", row.lhs}, {"rhs", row.rhs}}); }
				out << Json{{"schema", 1}, {"hypotheses", true}, {"holds", r.holds}, {"rows", rows}}.dump() << "\n";
			} else {
				for (auto const& row : r.rows) {
					out << "z^" << row.degree << ": " << row.lhs << " " << (row.lhs == row.rhs ? "==" : "!=") << " " << row.rhs << "\n";
				}
			}
			return r.holds ? 0 : 2;
		}
		if (*rank || *bounds) {
			if (mb.is_infinite()) { throw ValidationError("rank needs a finite m"); }
			int m = mb.value();
			if (t < 0) { throw ValidationError("--t must be >= 0"); }
			auto lo = rank_lower(t, m);
			auto hi = omega_upper(t, m);
			if (*bounds) {
				if (json) {
					out << Json{{"schema", 1}, {"t", t}, {"m", m}, {"lower", big_json(lo)}, {"upper", big_json(hi)}}.dump() << "\n";
				} else {
					out << "lower " << lo << "\nupper " << hi << "\n";
				}
				return 0;
			}
			auto f = parse_flavor(flavor);
			auto r = group_rank(t, m, f, cfg.max_generators);
			out << Json{{"schema", 1},
			            {"flavor", to_string(f)},
			            {"t", t},
			            {"m", m},
			            {"generators", r.generators},
			            {"relations", r.relations},
			            {"rank", r.rank},
			            {"lower", big_json(lo)},
			            {"upper", big_json(hi)},
			            {"bigint", r.used_bigint}}
			           .dump()
			    << "\n";
			if (f == Flavor::DirectedQ && (BigInt(r.rank) < lo || BigInt(r.rank) > hi)) { return 2; }
			return 0;
		}
		if (*gen) {
			auto d = generate(family, parse_params(params));
			if (format == "json" || json) {
				out << to_json(d).dump(2) << "\n";
			} else if (format == "text") {
				out << serialize(d) << "\n";
			} else {
				throw ValidationError("unknown format '" + format + "'");
			}
			return 0;
		}
		if (*fuzz) {
			auto f = make_invariant(inv, cfg);
			std::vector<GaussDiagram> bases;
			std::vector<std::string> names;
			if (files.empty()) {
				for (auto const& [name, d] : stock_diagrams()) {
					bases.push_back(d);
					names.push_back("stock:" + name);
				}
			} else {
				for (auto const& p : files) {
					bases.push_back(load_diagram(p));
					names.push_back(p);
				}
			}
			if (walks < 1 || steps < 0) { throw ValidationError("--walks must be >= 1 and --steps >= 0"); }
			auto r = invariance_fuzz(f, bases, walks, steps, cfg.seed, WalkOptions{cfg.max_arrows});
			for (auto const& v : r.violations) {
				auto j = to_json(v);
				j["base_name"] = names[v.base];
				out << j.dump() << "\n";
			}
			out << Json{{"schema", 1},
			            {"invariant", inv.name},
			            {"seed", cfg.seed},
			            {"walks", r.walks},
			            {"steps", r.steps},
			            {"violations", r.violations.size()}}
			           .dump()
			    << "\n";
			return r.passed() ? 0 : 2;
		}
		if (*degree) {
			auto d = load_diagram(file);
			check_size(d, cfg);
			auto r = kauffman_degree_check(make_invariant(inv, cfg), d, order);
			Json j{{"schema", 1}, {"invariant", inv.name}, {"order", order}, {"vanishes", r.vanishes}};
			auto ids = [](std::vector<int> v) {
				for (auto& i : v) { ++i; }
				return v;
			};
			if (!r.vanishes) {
				j["counterexample"] = ids(r.counterexample);
				j["counterexample_sum"] = r.counterexample_sum;
			}
			j["witness"] = r.witness;
			if (r.witness) {
				j["witness_subset"] = ids(r.witness_subset);
				j["witness_sum"] = r.witness_sum;
			}
			if (json) {
				out << j.dump() << "\n";
			} else {
				out << "order " << order << (r.vanishes ? " vanishes" : " does not vanish") << ", witness "
				    << (r.witness ? "found" : "none") << "\n";
			}
			return r.vanishes && (r.witness || !require_witness) ? 0 : 2;
		}
	} catch (ValidationError const& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	} catch (BudgetExceeded const& e) {
		err << "refused: " << e.what() << "\n";
		return 1;
	} catch (nlohmann::json::exception const& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}

} // namespace gaussforge::cli
