#include "rgc/compose.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rgc {

namespace {

struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One reattachment: for each half-edge of the removed vertex (indexed by its
// position in the vertex's rotation vector) the corner it enters and its rank
// within that corner.
using Assignment = std::vector<std::pair<int, int>>;

std::vector<Assignment> enumerate_assignments(int k, int l) {
  std::vector<Assignment> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::set<Assignment> seen;
  if (l == 0) {
    Assignment a(k);
    for (int t = 0; t < k; ++t) a[t] = {0, t};
    out.push_back(a);
    return out;
  }
  // weak composition of k into l parts, walked for every cyclic rotation
  std::vector<int> parts(l, 0);
  auto emit = [&](int r) {
    Assignment a(k);
    int idx = 0;
    for (int t = 0; t < l; ++t)
      for (int q = 0; q < parts[t]; ++q, ++idx) a[(r + idx) % k] = {t, q};
    if (seen.insert(a).second) out.push_back(a);
  };
  // enumerate compositions recursively
  std::vector<int> stack;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == l - 1) {
      parts[pos] = left;
      for (int r = 0; r < k; ++r) emit(r);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      parts[pos] = take;
      rec(pos + 1, left - take);
    }
  };
  rec(0, k);
  return out;
}

// Koszul sign of removing word position `pos` (moving it to the end or the
// front first, per convention).
int removal_sign(const FamilySpec& f, const RibbonGraph& g,
                 const std::vector<OriSym>& word, size_t pos) {
  int p = symbol_parity(f, g, word[pos]);
  if (!p) return 1;
  int odd = 0;
  if (conv::drop_to_front) {
    for (size_t i = 0; i < pos; ++i) odd += symbol_parity(f, g, word[i]);
  } else {
    for (size_t i = pos + 1; i < word.size(); ++i) odd += symbol_parity(f, g, word[i]);
  }
  return odd % 2 ? -1 : 1;
}

// Shared gluing: remove vertex va of A, attach its half-edges to the corners
// of B's face with label fb.
std::vector<Term> glue(const FamilySpec& f, const Gen& A, int va, const Gen& B,
                       int fb, bool inner_first) {
  const RibbonGraph& ga = A.g;
  const RibbonGraph& gb = B.g;
  const int HA = ga.num_halves();
  const int EA = ga.num_edges();
  const int VA = ga.num_vertices();
  auto mb = graph_maps(gb);

  // corners of B's face fb: (vertex, insert-after half), in walk order
  std::vector<std::pair<int, int>> corners;
  int iso_vertex_b = -1;
  {
    bool found = false;
    for (auto& fc : boundary_cycles(gb)) {
      if (fc.label != fb) continue;
      found = true;
      if (fc.isolated_vertex >= 0) {
        iso_vertex_b = fc.isolated_vertex;
      } else {
        for (int x : fc.walk) {
          int a = mb.iota[x];
          corners.push_back({mb.vertex_of[a], a});
        }
      }
    }
    if (!found) throw std::invalid_argument("glue: no such boundary label");
  }
  const std::vector<int>& rot_v = ga.vertices[va].rot;
  const int k = static_cast<int>(rot_v.size());
  const int l = static_cast<int>(corners.size());

  // Koszul sign of taking va out of A's word (unlabelled va only).
  int pre_sign = 1;
  std::vector<OriSym> wordA;
  for (size_t i = 0; i < A.o.word.size(); ++i) {
    const OriSym& s = A.o.word[i];
    if (!s.is_edge && s.id == va) {
      pre_sign = removal_sign(f, ga, A.o.word, i);
      continue;
    }
    wordA.push_back(s);
  }

  // vertex index remaps
  auto amap = [&](int v) { return v < va ? v : v - 1; };
  const int bshift_v = VA - 1;
  const int bshift_h = HA;
  const int bshift_e = EA;

  // vertex label remaps ("Y's labels after X's")
  const int label_va = ga.vertices[va].color == Color::Lab ? ga.vertices[va].label : 0;
  const int nA = ga.num_labelled();
  auto new_label_a = [&](int lbl) { return label_va && lbl > label_va ? lbl - 1 : lbl; };
  auto new_label_b = [&](int lbl) { return nA - (label_va ? 1 : 0) + lbl; };

  // face label remaps
  const int mA = ga.num_faces();
  auto new_flabel_a = [&](int lbl) { return lbl; };
  auto new_flabel_b = [&](int lbl) { return mA + lbl - (lbl > fb ? 1 : 0); };

  // the label A carries on the face at va when va is isolated
  int iso_label_a = -1;
  for (auto& [v, lbl] : ga.isolated_faces)
    if (v == va) iso_label_a = lbl;

  std::vector<Term> out;
  for (const Assignment& asg : enumerate_assignments(k, l)) {
    RibbonGraph g;
    g.vertices.reserve(VA - 1 + gb.num_vertices());
    for (int v = 0; v < VA; ++v) {
      if (v == va) continue;
      RibbonGraph::Vertex nv = ga.vertices[v];
      if (nv.color == Color::Lab) nv.label = new_label_a(nv.label);
      g.vertices.push_back(std::move(nv));
    }
    // blocks per corner, ordered by rank
    std::vector<std::vector<int>> block(std::max(l, 1));
    {
      std::vector<std::vector<std::pair<int, int>>> tmp(std::max(l, 1));
      for (int pos = 0; pos < k; ++pos)
        tmp[asg[pos].first].push_back({asg[pos].second, rot_v[pos]});
      for (int t = 0; t < std::max(l, 1); ++t) {
        std::sort(tmp[t].begin(), tmp[t].end());
        for (auto& [rank, h] : tmp[t]) block[t].push_back(h);
      }
    }
    for (int v = 0; v < gb.num_vertices(); ++v) {
      RibbonGraph::Vertex nv;
      nv.color = gb.vertices[v].color;
      nv.label = nv.color == Color::Lab ? new_label_b(gb.vertices[v].label) : 0;
      if (l == 0 && v == iso_vertex_b) {
        nv.rot = block[0];  // all half-edges land on the isolated vertex
      } else {
        for (int x : gb.vertices[v].rot) {
          nv.rot.push_back(x + bshift_h);
          for (int t = 0; t < l; ++t)
            if (corners[t].first == v && corners[t].second == x)
              for (int h : block[t]) nv.rot.push_back(h);
        }
      }
      g.vertices.push_back(std::move(nv));
    }
    for (auto& e : ga.edges) g.edges.push_back(e);
    for (auto& e : gb.edges) g.edges.push_back({e.src + bshift_h, e.tgt + bshift_h});

    // faces: recompute orbits, then derive each label from the old ones
    const int H = HA + gb.num_halves();
    g.face_label_of_half.assign(H, 0);
    auto mm = graph_maps(g);
    std::vector<char> seen_half(H, 0);
    int faces_found = 0;
    bool dead = false;
    for (int h0 = 0; h0 < H && !dead; ++h0) {
      if (seen_half[h0]) continue;
      std::vector<int> orbit;
      int h = h0;
      do {
        seen_half[h] = 1;
        orbit.push_back(h);
        h = mm.sigma[mm.iota[h]];
      } while (h != h0);
      int side = -1, lbl = -1;
      bool clash = false;
      for (int x : orbit) {
        int s, ll;
        if (x < HA) {
          s = 0;
          ll = ga.face_label_of_half[x];
        } else {
          ll = gb.face_label_of_half[x - bshift_h];
          if (ll == fb) continue;
          s = 1;
        }
        if (side < 0) {
          side = s;
          lbl = ll;
        } else if (side != s || lbl != ll) {
          clash = true;
        }
      }
      if (clash) throw internal_error("glue: face accounting failed (merge)");
      if (side < 0) {
        if (iso_label_a < 0) throw internal_error("glue: unlabeled face");
        side = 0;
        lbl = iso_label_a;
      }
      int nl = side == 0 ? new_flabel_a(lbl) : new_flabel_b(lbl);
      for (int x : orbit) g.face_label_of_half[x] = nl;
      ++faces_found;
    }
    // isolated faces: only the all-isolated corner case produces one
    for (auto& [v, lbl] : ga.isolated_faces) {
      if (v == va) continue;
      g.isolated_faces.emplace_back(amap(v), new_flabel_a(lbl));
      ++faces_found;
    }
    for (auto& [v, lbl] : gb.isolated_faces) {
      if (lbl == fb) {
        if (k == 0) {
          g.isolated_faces.emplace_back(v + bshift_v,
                                        iso_label_a >= 0 ? new_flabel_a(iso_label_a) : 1);
          ++faces_found;
        }
        continue;  // otherwise the vertex received half-edges
      }
      g.isolated_faces.emplace_back(v + bshift_v, new_flabel_b(lbl));
      ++faces_found;
    }
    if (faces_found != mA + gb.num_faces() - 1)
      throw internal_error("glue: face count mismatch");

    // orientation word
    Orientation o;
    auto push_a = [&](const OriSym& s) {
      o.word.push_back(s.is_edge ? OriSym{true, s.id} : OriSym{false, amap(s.id)});
    };
    auto push_b = [&](const OriSym& s) {
      o.word.push_back(s.is_edge ? OriSym{true, s.id + bshift_e}
                                 : OriSym{false, s.id + bshift_v});
    };
    if (inner_first) {
      for (auto& s : B.o.word) push_b(s);
      for (auto& s : wordA) push_a(s);
    } else {
      for (auto& s : wordA) push_a(s);
      for (auto& s : B.o.word) push_b(s);
    }
    out.push_back({Gen{std::move(g), std::move(o)}, Rat(pre_sign)});
  }
  return out;
}

}  // namespace

int symbol_parity(const FamilySpec& f, const RibbonGraph& g, const OriSym& s) {
  if (s.is_edge) return parity(f.edge_degree());
  Color c = g.vertices[s.id].color;
  if (c == Color::Lab) return 0;
  return parity(c == Color::Black ? f.black_degree() : f.white_degree());
}

Gen unit_gen() {
  Gen gen;
  RibbonGraph::Vertex v;
  v.color = Color::Lab;
  v.label = 1;
  gen.g.vertices.push_back(v);
  gen.g.isolated_faces.emplace_back(0, 1);
  return gen;
}

std::vector<Term> compose_terms(const FamilySpec& f, const Gen& X, int i,
                                const Gen& Y, int j) {
  int va = -1;
  for (int v = 0; v < X.g.num_vertices(); ++v)
    if (X.g.vertices[v].color == Color::Lab && X.g.vertices[v].label == i) va = v;
  if (va < 0) throw std::invalid_argument("compose: no such vertex label");
  if (j < 1 || j > Y.g.num_faces())
    throw std::invalid_argument("compose: boundary label out of range");
  return glue(f, X, va, Y, j, conv::inner_word_first);
}

GraphVector compose(const FamilySpec& f, const GraphVector& X, int i,
                    const GraphVector& Y, int j) {
  std::vector<Term> all;
  for (auto& [kx, cx] : X.coef) {
    Gen gx = decode_key(f, kx);
    for (auto& [ky, cy] : Y.coef) {
      Gen gy = decode_key(f, ky);
      for (Term& t : compose_terms(f, gx, i, gy, j)) {
        t.coeff *= cx * cy;
        all.push_back(std::move(t));
      }
    }
  }
  return normalize(f, all);
}

std::vector<Term> subst_terms(const FamilySpec& f, const Gen& G, int v_index,
                              const Gen& S) {
  if (G.g.vertices[v_index].color == Color::Lab)
    throw std::invalid_argument("subst: vertex is labelled");
  if (S.g.num_faces() != 1)
    throw std::invalid_argument("subst: inserted graph must have one boundary");
  return glue(f, G, v_index, S, 1, conv::subst_inner_first);
}

void relabel_faces(Gen& gen, const std::vector<int>& old_to_new) {
  for (int& l : gen.g.face_label_of_half) l = old_to_new[l];
  for (auto& [v, l] : gen.g.isolated_faces) l = old_to_new[l];
}

void relabel_vertex_labels(Gen& gen, const std::vector<int>& old_to_new) {
  for (auto& v : gen.g.vertices)
    if (v.color == Color::Lab) v.label = old_to_new[v.label];
}

}  // namespace rgc
