#include "rgc/graph_vector.hpp"

namespace rgc {

SliceMeta slice_meta(const RibbonGraph& g, const FamilySpec& f) {
  // cheap: trusts the label invariants instead of re-walking faces
  SliceMeta s;
  s.m = g.num_faces();
  s.n = g.num_labelled();
  int twice = 2 - g.num_vertices() + g.num_edges() - s.m;
  if (twice < 0 || twice % 2) throw invalid_graph_error("bad Euler characteristic");
  s.genus = twice / 2;
  s.deg = degree(g, f);
  return s;
}

GraphVector normalize(const FamilySpec& f, const std::vector<Term>& terms,
                      bool check_meta) {
  GraphVector out;
  out.fam = f;
  bool have_meta = false;
  SliceMeta meta;
  for (const Term& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (f.black_targets_zero() && has_black_target(t.gen.g)) continue;
    if (check_meta) {
      SliceMeta m = slice_meta(t.gen.g, f);
      if (!have_meta) {
        meta = m;
        have_meta = true;
      } else if (!(m == meta)) {
        throw dimension_mismatch_error("normalize: mixed (m,n,g,degree)");
      }
    }
    CanonResult c = canonicalize(f, t.gen);
    if (c.sign == 0) continue;
    out.add(c.key, t.coeff * c.sign);
  }
  return out;
}

}  // namespace rgc
