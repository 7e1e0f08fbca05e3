#pragma once

#include "rgc/graph_vector.hpp"

namespace rgc {

// Orientation-word conventions for gluing.  The composite's word is the
// concatenation of the two factors' words; these flags fix the order and how
// a substituted unlabelled vertex leaves the word.  Calibrated once against
// the delta^2 = 0 battery and then left alone.
namespace conv {
inline bool inner_word_first = true;   // [inner][outer] instead of [outer][inner]
inline bool subst_inner_first = true;  // same, for unlabelled-vertex substitution
inline bool drop_to_front = true;      // removed vertex exits the word at the front
// graded sign (-1)^{|Gamma|} on the vertex-splitting sum of the directed
// differentials (the undirected formula carries it explicitly)
inline bool directed_split_graded = true;
}  // namespace conv

Gen unit_gen();

// X i∘j Y: substitute boundary j of Y into the i-labelled vertex of X,
// summing over all reattachments of the half-edges formerly at that vertex
// onto the corners of the boundary that respect both cyclic orders.
// Result labels: X's boundaries keep 1..m_X, Y's remaining follow; X's
// remaining vertex labels come first, Y's after.
std::vector<Term> compose_terms(const FamilySpec& f, const Gen& X, int i,
                                const Gen& Y, int j);
GraphVector compose(const FamilySpec& f, const GraphVector& X, int i,
                    const GraphVector& Y, int j);

// G ∘_v S: substitute the unique boundary of S into the unlabelled vertex
// with index v_index (labels of G are untouched).
std::vector<Term> subst_terms(const FamilySpec& f, const Gen& G, int v_index,
                              const Gen& S);

// Plain relabelings; boundary and vertex labels carry no Koszul signs.
void relabel_faces(Gen& gen, const std::vector<int>& old_to_new);
void relabel_vertex_labels(Gen& gen, const std::vector<int>& old_to_new);

int symbol_parity(const FamilySpec& f, const RibbonGraph& g, const OriSym& s);

}  // namespace rgc
