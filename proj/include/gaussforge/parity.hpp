#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "moves.hpp"

namespace gaussforge {

using ParityAssignment = std::vector<int>; // 0 or 1 per arrow id
using Parity = std::function<ParityAssignment(GaussDiagram const&)>;

inline ParityAssignment gaussian_parity(GaussDiagram const& d) {
	auto g = interlacement(d);
	ParityAssignment p(d.size());
	for (int i = 0; i < d.size(); ++i) { p[i] = g.degree(i) & 1; }
	return p;
}

inline GaussDiagram f_map(GaussDiagram const& d, Parity const& parity = gaussian_parity) {
	auto p = parity(d);
	std::vector<int> keep;
	for (int i = 0; i < d.size(); ++i) {
		if (!p[i]) { keep.push_back(i); }
	}
	return restrict_to(d, keep);
}

struct LabelledDiagram {
	GaussDiagram diagram;
	Bound m{1};
};

// Per arrow: the first iteration of f that deletes it, or m.top().
inline std::vector<Label> f_labels(GaussDiagram const& d, Bound m, Parity const& parity = gaussian_parity) {
	std::vector<Label> labels(d.size(), m.top());
	std::vector<int> alive(d.size());
	for (int i = 0; i < d.size(); ++i) { alive[i] = i; }
	for (int iter = 1; m.is_infinite() || iter <= m.value(); ++iter) {
		std::vector<int> index;
		auto sub = restrict_to(d, alive, &index);
		auto p = parity(sub);
		std::vector<int> next;
		for (std::size_t k = 0; k < alive.size(); ++k) {
			if (p[index[k]]) {
				labels[alive[k]] = Label::of(iter);
			} else {
				next.push_back(alive[k]);
			}
		}
		if (next.size() == alive.size()) { break; }
		alive = std::move(next);
	}
	return labels;
}

inline LabelledDiagram lambda_m(GaussDiagram const& d, Bound m, Parity const& parity = gaussian_parity) {
	return {with_labels(d, f_labels(d, m, parity)), m};
}

// Lowers an f^inf label to the f^m label.
inline Label truncate_label(Label inf_label, Bound m) { return std::min(inf_label, m.top()); }

// Checks the four parity axioms on a move D -> D'. Returns the violations.
inline std::vector<std::string> parity_axiom_check(GaussDiagram const& d, MoveInstance const& mv,
                                                   Parity const& parity = gaussian_parity) {
	std::vector<std::string> bad;
	auto r = apply_move_tracked(d, mv);
	auto const& e = r.diagram;
	auto p = parity(d);
	auto q = parity(e);
	for (int i = 0; i < d.size(); ++i) {
		bool involved = false;
		if (mv.kind == MoveKind::R1Delete || mv.kind == MoveKind::R2Delete || mv.kind == MoveKind::R3) {
			involved = std::find(mv.arrows.begin(), mv.arrows.end(), i) != mv.arrows.end();
		}
		if (!involved && r.correspondence[i] >= 0 && p[i] != q[r.correspondence[i]]) {
			bad.push_back("axiom 4: unaffected arrow " + std::to_string(i + 1) + " changed parity");
		}
	}
	auto check_r1 = [&](ParityAssignment const& pg, int id) {
		if (pg[id] != 0) { bad.push_back("axiom 1: isolated arrow " + std::to_string(id + 1) + " is odd"); }
	};
	auto check_r2 = [&](ParityAssignment const& pg, int x, int y) {
		if (pg[x] != pg[y]) { bad.push_back("axiom 2: second-move pair has different parities"); }
	};
	switch (mv.kind) {
	case MoveKind::R1Insert: check_r1(q, r.affected[0]); break;
	case MoveKind::R1Delete: check_r1(p, mv.arrows[0]); break;
	case MoveKind::R2Insert: check_r2(q, r.affected[0], r.affected[1]); break;
	case MoveKind::R2Delete: check_r2(p, mv.arrows[0], mv.arrows[1]); break;
	case MoveKind::R3: {
		int odd = 0;
		for (int k = 0; k < 3; ++k) {
			odd += p[mv.arrows[k]];
			if (p[mv.arrows[k]] != q[r.affected[k]]) { bad.push_back("axiom 3: third-move arrow changed parity"); }
		}
		if (odd != 0 && odd != 2) { bad.push_back("axiom 3: " + std::to_string(odd) + " odd arrows in the triple"); }
		break;
	}
	}
	return bad;
}

} // namespace gaussforge
