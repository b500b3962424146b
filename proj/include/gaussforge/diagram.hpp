#pragma once

#include <algorithm>
#include <cctype>
#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "gf2.hpp"

namespace gaussforge {

enum class Host { Line, Circle };

// Optional arrow decoration: absent, a positive integer, or the infinity sentinel.
// Ordered absent < 1 < 2 < ... < infinity.
class Label {
public:
	constexpr Label() = default;
	static constexpr Label of(int v) { return Label{v}; }
	static constexpr Label infinity() { return Label{INT_MAX}; }

	constexpr bool present() const { return raw_ != 0; }
	constexpr bool is_infinite() const { return raw_ == INT_MAX; }
	constexpr int value() const { return raw_; }

	constexpr auto operator<=>(Label const&) const = default;

	std::string to_string() const {
		if (!present()) { return ""; }
		return is_infinite() ? "inf" : std::to_string(raw_);
	}

private:
	constexpr explicit Label(int raw) : raw_(raw) {}
	int raw_ = 0;
};

// The ambient label bound m, possibly infinite.
class Bound {
public:
	constexpr explicit Bound(int m) : raw_(m) {}
	static constexpr Bound infinite() { return Bound{INT_MAX}; }

	constexpr bool is_infinite() const { return raw_ == INT_MAX; }
	constexpr int value() const { return raw_; }
	// The label given to arrows that survive: m+1, or infinity.
	constexpr Label top() const { return is_infinite() ? Label::infinity() : Label::of(raw_ + 1); }

	constexpr auto operator<=>(Bound const&) const = default;

	std::string to_string() const { return is_infinite() ? "inf" : std::to_string(raw_); }

private:
	int raw_;
};

struct Arrow {
	int tail = 0;
	int head = 0;
	int sign = 1; // +1, -1, or 0 for unsigned lattice diagrams
	Label label;

	int first() const { return std::min(tail, head); }
	int second() const { return std::max(tail, head); }
	auto operator<=>(Arrow const&) const = default;
};

struct Endpoint {
	int arrow = 0;
	bool head = false;
	auto operator<=>(Endpoint const&) const = default;
};

struct ArrowAttr {
	int sign = 1;
	Label label;
	auto operator<=>(ArrowAttr const&) const = default;
};

class GaussDiagram;
std::string serialize(GaussDiagram const& d);

// Arrow ids are 0-based indices into arrows(); the text format prints id+1.
// An undirected diagram is a chord diagram: tail < head always holds and the
// endpoints are printed as 'C'.
class GaussDiagram {
public:
	GaussDiagram() = default;

	GaussDiagram(Host host, std::vector<Arrow> arrows, bool directed = true)
	    : host_(host), directed_(directed), arrows_(std::move(arrows)) {
		int slots = 2 * static_cast<int>(arrows_.size());
		slots_.assign(slots, Endpoint{-1, false});
		for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
			auto& a = arrows_[i];
			if (!directed_ && a.tail > a.head) { std::swap(a.tail, a.head); }
			if (a.tail < 0 || a.head < 0 || a.tail >= slots || a.head >= slots || a.tail == a.head) {
				throw ValidationError("arrow " + std::to_string(i + 1) + " has invalid endpoints");
			}
			if (a.sign < -1 || a.sign > 1) { throw ValidationError("invalid sign"); }
			for (int s : {a.tail, a.head}) {
				if (slots_[s].arrow >= 0) { throw ValidationError("slot " + std::to_string(s) + " used twice"); }
				slots_[s] = Endpoint{i, s == a.head};
			}
		}
	}

	// Builds a canonical diagram from an endpoint word. word[i].arrow indexes attrs.
	// key_to_index, if given, receives the canonical index of every attrs entry.
	static GaussDiagram from_word(Host host, std::vector<Endpoint> const& word, std::vector<ArrowAttr> const& attrs,
	                              bool directed = true, std::vector<int>* key_to_index = nullptr);

	Host host() const { return host_; }
	bool directed() const { return directed_; }
	int size() const { return static_cast<int>(arrows_.size()); }
	bool empty() const { return arrows_.empty(); }
	int endpoint_count() const { return static_cast<int>(slots_.size()); }
	std::vector<Arrow> const& arrows() const { return arrows_; }
	Arrow const& arrow(int id) const { return arrows_.at(id); }
	std::vector<Endpoint> const& slots() const { return slots_; }
	Endpoint const& slot(int s) const { return slots_[s]; }
	int partner(int s) const {
		auto const& a = arrows_[slots_[s].arrow];
		return a.tail == s ? a.head : a.tail;
	}

	void check_id(int id) const {
		if (id < 0 || id >= size()) { throw ValidationError("unknown arrow id " + std::to_string(id + 1)); }
	}

	bool is_canonical() const;

	bool operator==(GaussDiagram const& o) const {
		return host_ == o.host_ && directed_ == o.directed_ && arrows_ == o.arrows_;
	}
	auto operator<=>(GaussDiagram const& o) const {
		if (auto c = host_ <=> o.host_; c != 0) { return c; }
		if (auto c = directed_ <=> o.directed_; c != 0) { return c; }
		if (auto c = arrows_.size() <=> o.arrows_.size(); c != 0) { return c; }
		return arrows_ <=> o.arrows_;
	}

private:
	Host host_ = Host::Line;
	bool directed_ = true;
	std::vector<Arrow> arrows_;
	std::vector<Endpoint> slots_;
};

namespace detail {

inline std::vector<Endpoint> word_of(GaussDiagram const& d) { return d.slots(); }

inline std::vector<ArrowAttr> attrs_of(GaussDiagram const& d) {
	std::vector<ArrowAttr> out;
	out.reserve(d.size());
	for (auto const& a : d.arrows()) { out.push_back({a.sign, a.label}); }
	return out;
}

// Renumbers by first occurrence without any rotation.
inline GaussDiagram linear_canonical(Host host, std::vector<Endpoint> const& word, std::vector<ArrowAttr> const& attrs,
                                     bool directed, std::vector<int>* key_to_index) {
	std::vector<int> index(attrs.size(), -1);
	std::vector<int> seen(attrs.size(), 0);
	std::vector<int> heads(attrs.size(), 0);
	std::vector<Arrow> arrows;
	arrows.reserve(attrs.size());
	for (int s = 0; s < static_cast<int>(word.size()); ++s) {
		auto const& e = word[s];
		if (e.arrow < 0 || e.arrow >= static_cast<int>(attrs.size())) { throw ValidationError("endpoint refers to unknown arrow"); }
		int k = e.arrow;
		if (++seen[k] > 2) { throw ValidationError("arrow " + std::to_string(k + 1) + " has more than two endpoints"); }
		if (directed && e.head && ++heads[k] > 1) { throw ValidationError("arrow " + std::to_string(k + 1) + " has two heads"); }
		if (index[k] < 0) {
			index[k] = static_cast<int>(arrows.size());
			Arrow a;
			a.sign = attrs[k].sign;
			a.label = attrs[k].label;
			a.tail = a.head = -1;
			arrows.push_back(a);
		}
		auto& a = arrows[index[k]];
		bool as_head = directed ? e.head : (a.tail >= 0);
		(as_head ? a.head : a.tail) = s;
	}
	for (std::size_t k = 0; k < attrs.size(); ++k) {
		if (seen[k] != 2) { throw ValidationError("arrow " + std::to_string(k + 1) + " does not have two endpoints"); }
		if (directed && heads[k] != 1) { throw ValidationError("arrow " + std::to_string(k + 1) + " needs one head and one tail"); }
	}
	if (key_to_index) { *key_to_index = index; }
	return GaussDiagram(host, std::move(arrows), directed);
}

} // namespace detail

// Canonical form. perm, if given, receives old id -> new id.
inline GaussDiagram canonicalize(GaussDiagram const& d, std::vector<int>* perm = nullptr) {
	auto word = detail::word_of(d);
	auto attrs = detail::attrs_of(d);
	if (d.host() == Host::Line || d.empty()) {
		return detail::linear_canonical(d.host(), word, attrs, d.directed(), perm);
	}
	int len = static_cast<int>(word.size());
	GaussDiagram best;
	std::string best_text;
	std::vector<int> best_perm;
	std::vector<Endpoint> rotated(len);
	for (int r = 0; r < len; ++r) {
		for (int i = 0; i < len; ++i) { rotated[i] = word[(i + r) % len]; }
		std::vector<int> p;
		auto cand = detail::linear_canonical(Host::Circle, rotated, attrs, d.directed(), &p);
		auto text = serialize(cand);
		if (r == 0 || text < best_text) {
			best = std::move(cand);
			best_text = std::move(text);
			best_perm = std::move(p);
		}
	}
	if (perm) { *perm = best_perm; }
	return best;
}

inline GaussDiagram GaussDiagram::from_word(Host host, std::vector<Endpoint> const& word,
                                            std::vector<ArrowAttr> const& attrs, bool directed,
                                            std::vector<int>* key_to_index) {
	std::vector<int> first;
	auto lin = detail::linear_canonical(host, word, attrs, directed, &first);
	if (host == Host::Line) {
		if (key_to_index) { *key_to_index = first; }
		return lin;
	}
	std::vector<int> second;
	auto c = canonicalize(lin, &second);
	if (key_to_index) {
		key_to_index->resize(first.size());
		for (std::size_t k = 0; k < first.size(); ++k) { (*key_to_index)[k] = second[first[k]]; }
	}
	return c;
}

inline bool GaussDiagram::is_canonical() const { return canonicalize(*this) == *this; }

// ---------------------------------------------------------------- text format

inline std::string serialize(GaussDiagram const& d) {
	std::string out;
	if (d.host() == Host::Circle) { out = "circle:"; }
	for (int s = 0; s < d.endpoint_count(); ++s) {
		auto const& e = d.slot(s);
		auto const& a = d.arrow(e.arrow);
		if (s > 0 || d.host() == Host::Circle) { out += ' '; }
		out += std::to_string(e.arrow + 1);
		out += d.directed() ? (e.head ? 'H' : 'T') : 'C';
		out += a.sign > 0 ? '+' : (a.sign < 0 ? '-' : '0');
		if (a.label.present()) {
			out += ':';
			out += a.label.to_string();
		}
	}
	return out;
}

struct ParsedDiagram {
	GaussDiagram diagram;
	std::map<int, int> id_map; // id as written -> canonical 0-based index
};

inline ParsedDiagram parse_gauss_code_ids(std::string_view text) {
	std::string body(text);
	Host host = Host::Line;
	auto lead = body.find_first_not_of(" \t\r\n");
	if (lead != std::string::npos && body.compare(lead, 7, "circle:") == 0) {
		host = Host::Circle;
		body = body.substr(lead + 7);
	}
	std::istringstream in(body);
	std::string tok;
	std::vector<Endpoint> word;
	std::vector<ArrowAttr> attrs;
	std::map<int, int> key;
	std::map<int, int> seen_heads, seen_tails;
	int directed_tokens = 0;
	int chord_tokens = 0;
	while (in >> tok) {
		std::size_t p = 0;
		while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) { ++p; }
		if (p == 0 || p > 9 || p + 2 > tok.size()) { throw ParseError("malformed token '" + tok + "'"); }
		int id = std::stoi(tok.substr(0, p));
		if (id <= 0) { throw ParseError("arrow ids must be positive: '" + tok + "'"); }
		char kind = tok[p];
		char sc = tok[p + 1];
		if (kind != 'H' && kind != 'T' && kind != 'C') { throw ParseError("expected H, T or C in '" + tok + "'"); }
		int sign = 0;
		if (sc == '+') {
			sign = 1;
		} else if (sc == '-') {
			sign = -1;
		} else if (sc != '0') {
			throw ParseError("expected sign in '" + tok + "'");
		}
		Label label;
		if (p + 2 < tok.size()) {
			if (tok[p + 2] != ':' || p + 3 == tok.size()) { throw ParseError("malformed label in '" + tok + "'"); }
			auto lt = tok.substr(p + 3);
			if (lt == "inf") {
				label = Label::infinity();
			} else {
				if (lt.size() > 9 || !std::all_of(lt.begin(), lt.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
					throw ParseError("malformed label in '" + tok + "'");
				}
				int v = std::stoi(lt);
				if (v <= 0) { throw ParseError("labels must be positive: '" + tok + "'"); }
				label = Label::of(v);
			}
		}
		(kind == 'C' ? chord_tokens : directed_tokens)++;
		auto [it, fresh] = key.try_emplace(id, static_cast<int>(attrs.size()));
		if (fresh) {
			attrs.push_back({sign, label});
		} else if (attrs[it->second].sign != sign) {
			throw ParseError("sign mismatch for arrow " + std::to_string(id));
		} else if (attrs[it->second].label != label) {
			throw ParseError("label mismatch for arrow " + std::to_string(id));
		}
		if (kind == 'H' && ++seen_heads[id] > 1) { throw ParseError("arrow " + std::to_string(id) + " has two heads"); }
		if (kind == 'T' && ++seen_tails[id] > 1) { throw ParseError("arrow " + std::to_string(id) + " has two tails"); }
		if (kind == 'C' && ++seen_tails[id] > 2) { throw ParseError("chord " + std::to_string(id) + " has more than two endpoints"); }
		word.push_back({it->second, kind == 'H'});
	}
	if (directed_tokens > 0 && chord_tokens > 0) { throw ParseError("cannot mix directed (H/T) and chord (C) endpoints"); }
	bool directed = chord_tokens == 0;
	for (auto const& [id, k] : key) {
		bool ok = directed ? (seen_heads[id] == 1 && seen_tails[id] == 1) : seen_tails[id] == 2;
		if (!ok) { throw ParseError("arrow " + std::to_string(id) + " is missing an endpoint"); }
	}
	std::vector<int> index;
	ParsedDiagram out;
	try {
		out.diagram = GaussDiagram::from_word(host, word, attrs, directed, &index);
	} catch (ValidationError const& e) {
		throw ParseError(e.what());
	}
	for (auto const& [id, k] : key) { out.id_map[id] = index[k]; }
	return out;
}

inline GaussDiagram parse_gauss_code(std::string_view text) { return parse_gauss_code_ids(text).diagram; }

// ---------------------------------------------------------------- JSON format

inline nlohmann::ordered_json to_json(GaussDiagram const& d) {
	nlohmann::ordered_json j;
	j["host"] = d.host() == Host::Line ? "line" : "circle";
	if (!d.directed()) { j["directed"] = false; }
	auto arrows = nlohmann::ordered_json::array();
	for (int i = 0; i < d.size(); ++i) {
		auto const& a = d.arrow(i);
		nlohmann::ordered_json ja;
		ja["id"] = i + 1;
		ja["tail"] = a.tail;
		ja["head"] = a.head;
		ja["sign"] = a.sign;
		if (a.label.present()) {
			if (a.label.is_infinite()) {
				ja["label"] = "inf";
			} else {
				ja["label"] = a.label.value();
			}
		}
		arrows.push_back(std::move(ja));
	}
	j["arrows"] = std::move(arrows);
	return j;
}

inline GaussDiagram from_json(nlohmann::json const& j) {
	try {
		Host host = Host::Line;
		auto hs = j.at("host").get<std::string>();
		if (hs == "circle") {
			host = Host::Circle;
		} else if (hs != "line") {
			throw ParseError("unknown host '" + hs + "'");
		}
		bool directed = j.contains("directed") ? j.at("directed").get<bool>() : true;
		std::vector<std::pair<int, Arrow>> byid;
		for (auto const& ja : j.at("arrows")) {
			Arrow a;
			a.tail = ja.at("tail").get<int>();
			a.head = ja.at("head").get<int>();
			a.sign = ja.at("sign").get<int>();
			if (ja.contains("label")) {
				auto const& l = ja.at("label");
				if (l.is_string()) {
					if (l.get<std::string>() != "inf") { throw ParseError("label must be an integer or \"inf\""); }
					a.label = Label::infinity();
				} else {
					int v = l.get<int>();
					if (v <= 0) { throw ParseError("labels must be positive"); }
					a.label = Label::of(v);
				}
			}
			byid.emplace_back(ja.at("id").get<int>(), a);
		}
		std::sort(byid.begin(), byid.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
		for (std::size_t i = 1; i < byid.size(); ++i) {
			if (byid[i].first == byid[i - 1].first) { throw ParseError("duplicate arrow id"); }
		}
		std::vector<Arrow> arrows;
		for (auto& p : byid) { arrows.push_back(p.second); }
		return canonicalize(GaussDiagram(host, std::move(arrows), directed));
	} catch (nlohmann::json::exception const& e) {
		throw ParseError(std::string("bad diagram JSON: ") + e.what());
	} catch (ParseError const&) {
		throw;
	} catch (ValidationError const& e) {
		throw ParseError(e.what());
	}
}

// Reads either format: JSON if the first non-blank character is '{'.
inline GaussDiagram read_diagram(std::string const& text) {
	auto p = text.find_first_not_of(" \t\r\n");
	if (p != std::string::npos && text[p] == '{') {
		nlohmann::json j;
		try {
			j = nlohmann::json::parse(text);
		} catch (nlohmann::json::exception const& e) {
			throw ParseError(std::string("bad JSON: ") + e.what());
		}
		return from_json(j);
	}
	// Allow '#' comments in text files.
	std::string clean;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		auto h = line.find('#');
		if (h != std::string::npos) { line.resize(h); }
		clean += line;
		clean += ' ';
	}
	return parse_gauss_code(clean);
}

// ---------------------------------------------------------------- structure

inline bool linked(GaussDiagram const& d, int a, int b) {
	auto const& x = d.arrow(a);
	auto const& y = d.arrow(b);
	int lo = x.first(), hi = x.second();
	bool in1 = y.tail > lo && y.tail < hi;
	bool in2 = y.head > lo && y.head < hi;
	return in1 != in2;
}

class InterlacementGraph {
public:
	explicit InterlacementGraph(int n) : rows_(n, BitRow(n)) {}

	int size() const { return static_cast<int>(rows_.size()); }
	bool adjacent(int a, int b) const { return rows_[a].test(b); }
	int degree(int a) const { return rows_[a].count(); }
	std::vector<BitRow> const& matrix() const { return rows_; }
	void connect(int a, int b) {
		rows_[a].set(b);
		rows_[b].set(a);
	}

private:
	std::vector<BitRow> rows_;
};

inline InterlacementGraph interlacement(GaussDiagram const& d) {
	InterlacementGraph g(d.size());
	// Sweep: an arrow opened and not yet closed when b's second endpoint is met,
	// and opened after b's first endpoint, alternates with b.
	std::vector<int> open_at(d.size(), -1);
	std::vector<int> open;
	for (int s = 0; s < d.endpoint_count(); ++s) {
		int a = d.slot(s).arrow;
		if (open_at[a] < 0) {
			open_at[a] = s;
			open.push_back(a);
			continue;
		}
		open.erase(std::find(open.begin(), open.end(), a));
		for (int b : open) {
			if (open_at[b] > open_at[a]) { g.connect(a, b); }
		}
	}
	return g;
}

inline int boundary_components(GaussDiagram const& d) { return gf2_nullity(interlacement(d).matrix()) + 1; }

// Keeps the arrows listed in keep (any order) and returns the canonical result.
// key_to_index, if given, maps position in keep -> new id.
inline GaussDiagram restrict_to(GaussDiagram const& d, std::vector<int> const& keep, std::vector<int>* key_to_index = nullptr) {
	std::vector<int> key(d.size(), -1);
	std::vector<ArrowAttr> attrs;
	for (int id : keep) {
		d.check_id(id);
		if (key[id] >= 0) { throw ValidationError("arrow listed twice"); }
		key[id] = static_cast<int>(attrs.size());
		attrs.push_back({d.arrow(id).sign, d.arrow(id).label});
	}
	std::vector<Endpoint> word;
	word.reserve(2 * keep.size());
	for (auto const& e : d.slots()) {
		if (key[e.arrow] >= 0) { word.push_back({key[e.arrow], e.head}); }
	}
	return GaussDiagram::from_word(d.host(), word, attrs, d.directed(), key_to_index);
}

inline GaussDiagram delete_arrows(GaussDiagram const& d, std::set<int> const& ids) {
	for (int id : ids) { d.check_id(id); }
	std::vector<int> keep;
	for (int i = 0; i < d.size(); ++i) {
		if (!ids.count(i)) { keep.push_back(i); }
	}
	return restrict_to(d, keep);
}

inline void for_each_subdiagram(GaussDiagram const& d, std::function<void(std::vector<int> const&, GaussDiagram const&)> const& fn) {
	int n = d.size();
	if (n > 30) { throw BudgetExceeded("too many arrows to enumerate subdiagrams"); }
	std::vector<int> keep;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
		keep.clear();
		for (int i = 0; i < n; ++i) {
			if (mask >> i & 1U) { keep.push_back(i); }
		}
		fn(keep, restrict_to(d, keep));
	}
}

inline std::vector<GaussDiagram> subdiagrams(GaussDiagram const& d) {
	std::vector<GaussDiagram> out;
	for_each_subdiagram(d, [&](auto const&, GaussDiagram const& s) { out.push_back(s); });
	return out;
}

// Calls fn on every k-subset of {0..n-1}, in lexicographic order.
inline void for_each_combination(int n, int k, std::function<void(std::vector<int> const&)> const& fn) {
	if (k < 0 || k > n) { return; }
	std::vector<int> c(k);
	for (int i = 0; i < k; ++i) { c[i] = i; }
	while (true) {
		fn(c);
		int i = k - 1;
		while (i >= 0 && c[i] == n - k + i) { --i; }
		if (i < 0) { return; }
		++c[i];
		for (int j = i + 1; j < k; ++j) { c[j] = c[j - 1] + 1; }
	}
}

// ---------------------------------------------------------------- smoothing

struct Smoothing {
	std::vector<GaussDiagram> components; // components[0] is the long one
	// Original id -> (component, id there); {-1,-1} for smoothed arrows and for
	// arrows whose endpoints end up on different components.
	std::vector<std::pair<int, int>> arrow_map;
};

namespace detail {

// Walks the smoothed traversal. Returns, per component, the sequence of slots
// passed (arrival states). Smoothed slots appear too, so callers can filter.
inline std::vector<std::vector<int>> smoothing_walk(GaussDiagram const& d, std::vector<char> const& smoothed_arrow) {
	int len = d.endpoint_count();
	std::vector<char> visited(len, 0);
	std::vector<std::vector<int>> comps;
	auto step = [&](int p) {
		return smoothed_arrow[d.slot(p).arrow] ? d.partner(p) + 1 : p + 1;
	};
	comps.emplace_back();
	for (int p = 0; p < len; p = step(p)) {
		visited[p] = 1;
		comps.back().push_back(p);
	}
	for (int start = 0; start < len; ++start) {
		if (visited[start]) { continue; }
		comps.emplace_back();
		int p = start;
		while (!visited[p]) {
			visited[p] = 1;
			comps.back().push_back(p);
			p = step(p);
		}
	}
	return comps;
}

} // namespace detail

inline Smoothing oriented_smoothing(GaussDiagram const& d, std::set<int> const& ids) {
	if (d.host() != Host::Line) { throw ValidationError("oriented smoothing needs a line diagram"); }
	std::vector<char> sm(d.size(), 0);
	for (int id : ids) {
		d.check_id(id);
		sm[id] = 1;
	}
	auto walk = detail::smoothing_walk(d, sm);
	std::vector<int> comp_of(d.endpoint_count(), -1);
	for (int c = 0; c < static_cast<int>(walk.size()); ++c) {
		for (int p : walk[c]) { comp_of[p] = c; }
	}
	Smoothing out;
	out.arrow_map.assign(d.size(), {-1, -1});
	for (int c = 0; c < static_cast<int>(walk.size()); ++c) {
		std::vector<int> key(d.size(), -1);
		std::vector<int> keys_to_ids;
		std::vector<ArrowAttr> attrs;
		std::vector<Endpoint> word;
		for (int p : walk[c]) {
			auto const& e = d.slot(p);
			if (sm[e.arrow] || comp_of[d.partner(p)] != c) { continue; }
			if (key[e.arrow] < 0) {
				key[e.arrow] = static_cast<int>(attrs.size());
				keys_to_ids.push_back(e.arrow);
				attrs.push_back({d.arrow(e.arrow).sign, d.arrow(e.arrow).label});
			}
			word.push_back({key[e.arrow], e.head});
		}
		std::vector<int> index;
		out.components.push_back(GaussDiagram::from_word(c == 0 ? Host::Line : Host::Circle, word, attrs, d.directed(), &index));
		for (std::size_t k = 0; k < keys_to_ids.size(); ++k) { out.arrow_map[keys_to_ids[k]] = {c, index[k]}; }
	}
	return out;
}

// Component count of the full Seifert smoothing, computed by traversal.
inline int seifert_component_count(GaussDiagram const& d) {
	std::vector<char> all(d.size(), 1);
	return static_cast<int>(detail::smoothing_walk(d, all).size());
}

// ---------------------------------------------------------------- edits

inline GaussDiagram with_attrs(GaussDiagram const& d, std::function<void(int, Arrow&)> const& edit) {
	auto arrows = d.arrows();
	for (int i = 0; i < d.size(); ++i) { edit(i, arrows[i]); }
	GaussDiagram out(d.host(), std::move(arrows), d.directed());
	return d.host() == Host::Line ? out : canonicalize(out);
}

inline GaussDiagram with_labels(GaussDiagram const& d, std::vector<Label> const& labels) {
	return with_attrs(d, [&](int i, Arrow& a) { a.label = labels.at(i); });
}

inline GaussDiagram without_labels(GaussDiagram const& d) {
	return with_attrs(d, [](int, Arrow& a) { a.label = Label{}; });
}

inline std::vector<Label> labels_of(GaussDiagram const& d) {
	std::vector<Label> out;
	for (auto const& a : d.arrows()) { out.push_back(a.label); }
	return out;
}

} // namespace gaussforge
