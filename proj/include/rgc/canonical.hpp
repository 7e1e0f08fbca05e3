#pragma once

#include <string>
#include <vector>

#include "rgc/ribbon_graph.hpp"

namespace rgc {

// Canonical form of a generator.  Two generators related by an isomorphism of
// labelled ribbon graphs get the same key; their signs differ by the Koszul
// sign of the isomorphism's action on the orientation data.  sign == 0 means
// some automorphism acts by -1, so the generator is zero.
struct CanonResult {
  std::string key;
  int sign = 1;
};

CanonResult canonicalize(const FamilySpec& f, const Gen& gen);

// The canonical representative for a key (identity orientation word, edges
// then unlabelled vertices in canonical order).
Gen decode_key(const FamilySpec& f, const std::string& key);

// All automorphisms of the graph, as permutations of half-edges (identity
// included).  Exhaustive; used both internally and as a test oracle surface.
std::vector<std::vector<int>> automorphisms(const FamilySpec& f, const RibbonGraph& g);

// Koszul sign of the permutation taking `word` to the normal form (edges
// ascending, then unlabelled vertices ascending).  `edge_parity[e]` and
// `vertex_parity[v]` give the mod-2 degrees.  Pure helper, exposed for tests.
int word_sort_sign(const std::vector<OriSym>& word,
                   const std::vector<int>& edge_target_pos,
                   const std::vector<int>& vertex_target_pos,
                   const std::vector<int>& edge_par,
                   const std::vector<int>& vertex_par);

// Isomorphism-class key ignoring boundary labels and (optionally) edge
// directions; used to deduplicate raw enumeration output before the
// expensive decorated canonical form.
std::string structural_key(const RibbonGraph& g, bool with_directions);

}  // namespace rgc
