#pragma once

#include <string>
#include <vector>

#include "rgc/family.hpp"

namespace rgc {

struct SliceSpec {
  FamilySpec fam;
  int g = 0, m = 1, n = 0, w = 0;
};

// All isomorphism classes of valid generators with the given invariants,
// zero-by-symmetry classes excluded, ordered by canonical key.  The weight w
// counts unlabelled white vertices for RGraphs and black vertices for the
// directed families; RGra/RGraOr require w == 0.  Exhaustive: enumeration
// over degree sequences, stub matchings and rotation systems, then
// deduplication by canonical form.
std::vector<std::string> generate_basis(const SliceSpec& s);

// Fully general enumeration by vertex counts (used by the interpolating
// family, whose weight alone does not determine the slice).
std::vector<std::string> enumerate_graphs(const FamilySpec& f, int genus, int m,
                                          int n, int blacks, int whites);

// Every generator of the family with exactly E edges, across all (g, m, n)
// and vertex counts (finite for fixed E).
std::vector<std::string> enumerate_by_edges(const FamilySpec& f, int E);

}  // namespace rgc
