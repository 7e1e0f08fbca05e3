#pragma once

#include "rgc/compose.hpp"
#include "rgc/graph_vector.hpp"

namespace rgc {

// Building blocks.  The unlabelled vertex is white in undirected families and
// black in directed ones.
Gen pendant_gen(const FamilySpec& f, bool into_label);  // u->1 or 1->u
Gen splitter_gen(const FamilySpec& f);                  // the one-edge two-vertex graph
// Black source with k unlabelled white targets (interpolating family).
Gen white_corolla_gen(const FamilySpec& f, int k);
// Black source with one labelled target "1" and k unlabelled white targets.
Gen gamma_term_gen(const FamilySpec& f, int k);

// gamma truncated at K: terms k = 0..K, each coefficient 1, degree 1.
GraphVector gamma_vector(const FamilySpec& f, int K);

// The family differential.  Exact for RGraphs/RGraphsOr/ORGraphs (K ignored);
// for ORGraphsInterp both infinite sums (the corolla part of delta_bullet and
// gamma) are truncated at K and the result is complete on all terms with at
// most edges(Gamma) + K edges.
GraphVector differential(const FamilySpec& f, const Gen& gen, int K = 0);
GraphVector differential(const FamilySpec& f, const GraphVector& x, int K = 0);

// The two pieces of the interpolating differential.
GraphVector delta_bullet(const FamilySpec& f, const Gen& gen, int K);
GraphVector d_gamma(const FamilySpec& f, const Gen& gen, int K);

// Largest edge count up to which an interpolating-differential output is
// complete when gamma and the corolla sum are truncated at K.
inline int interp_complete_edges(int edges_in, int K) { return edges_in + K; }

}  // namespace rgc
