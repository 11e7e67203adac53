#pragma once

// Deterministic text, JSON, DOT and CSV renderings of engine results.
// Identical inputs must produce byte-identical output.

#include "nashblow/contfrac.hpp"
#include "nashblow/lattice.hpp"
#include "nashblow/resolution.hpp"

#include <string>
#include <vector>

namespace nashblow {

std::string format_vec(Vec2 v);
std::string format_vec_list(const std::vector<Vec2>& vs, const char* sep = " ");
std::string format_fraction(const HJFraction& f);
std::string format_shape(const FractionShape& s);

// Report for one cone: normal form, Hilbert basis, fraction, shape,
// boundary edge count, self-intersections.
std::string hilbert_report(const Cone2& c);

// One line per blowup chart: vertex, pair, raw generators, minimal
// generators, classification.
std::string blowup_report(const GeneratorSet& g);

std::string tree_text(const ResolutionTree& t);
std::string tree_json(const ResolutionTree& t);
std::string tree_dot(const ResolutionTree& t);

// Header p,q,theta_edges,depth,status; rows ordered by q then p; newline
// line terminators; depth empty when unresolved.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace nashblow
