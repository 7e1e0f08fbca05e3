#include "rgc/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "rgc/canonical.hpp"
#include "rgc/ribbon_graph.hpp"

namespace rgc {

namespace {

// Stub-matching enumeration over a fixed degree sequence.  Rotation systems
// are realized by the slot order at each vertex; all combinatorial maps with
// the sequence arise this way up to isomorphism.  Untouched unlabelled
// vertices of equal (color, valence) are interchangeable, so only the first
// of each class may receive its first stub, and only on its 0-slot.
struct DegSeq {
  std::vector<Color> color;  // per vertex
  std::vector<int> label;    // per vertex (Lab only)
  std::vector<int> val;
};

struct MatchRun {
  const DegSeq& seq;
  bool no_loops;
  int S = 0;
  std::vector<int> slot_vertex, voffset, vclass, touched, partner, sigma;
  int nclasses = 0;
  std::function<void(const std::vector<int>&)> leaf;  // partner array

  explicit MatchRun(const DegSeq& s, bool noloops) : seq(s), no_loops(noloops) {
    int V = static_cast<int>(s.val.size());
    std::map<std::pair<int, int>, int> classes;
    for (int v = 0; v < V; ++v) {
      voffset.push_back(S);
      for (int t = 0; t < s.val[v]; ++t) slot_vertex.push_back(v);
      if (s.color[v] == Color::Lab) {
        vclass.push_back(-1);
      } else {
        auto key = std::make_pair(static_cast<int>(s.color[v]), s.val[v]);
        auto [it, fresh] = classes.emplace(key, nclasses);
        if (fresh) ++nclasses;
        vclass.push_back(it->second);
      }
      S += s.val[v];
    }
    touched.assign(V, 0);
    partner.assign(S, -1);
    sigma.assign(S, 0);
    for (int v = 0; v < V; ++v)
      for (int t = 0; t < s.val[v]; ++t)
        sigma[voffset[v] + t] = voffset[v] + (t + 1) % s.val[v];
  }

  bool connected() const {
    int V = static_cast<int>(seq.val.size());
    if (V <= 1) return true;
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < seq.val[v]; ++t) {
        int w = slot_vertex[partner[voffset[v] + t]];
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
      }
    }
    return cnt == V;
  }

  int face_count() const {
    std::vector<char> seen(S, 0);
    int faces = 0;
    for (int h0 = 0; h0 < S; ++h0) {
      if (seen[h0]) continue;
      ++faces;
      int h = h0;
      do {
        seen[h] = 1;
        h = sigma[partner[h]];
      } while (h != h0);
    }
    return faces;
  }

  void rec() {
    int s = -1;
    for (int i = 0; i < S; ++i)
      if (partner[i] < 0) {
        s = i;
        break;
      }
    if (s < 0) {
      if (connected()) leaf(partner);
      return;
    }
    int vs = slot_vertex[s];
    std::vector<char> class_used(nclasses, 0);
    for (int t = s + 1; t < S; ++t) {
      if (partner[t] >= 0) continue;
      int v = slot_vertex[t];
      if (no_loops && v == vs) continue;
      if (v != vs && touched[v] == 0 && vclass[v] >= 0) {
        if (t != voffset[v]) continue;
        if (class_used[vclass[v]]) continue;
        class_used[vclass[v]] = 1;
      }
      partner[s] = t;
      partner[t] = s;
      touched[vs]++;
      touched[v]++;
      rec();
      touched[vs]--;
      touched[v]--;
      partner[s] = -1;
      partner[t] = -1;
    }
  }
};

// Build the graph of a matching; face labels are assigned 1..m in the order
// faces are discovered (a base labeling, permuted later).
RibbonGraph build_graph(const DegSeq& seq, const std::vector<int>& partner,
                        const std::vector<int>& voffset) {
  RibbonGraph g;
  int V = static_cast<int>(seq.val.size());
  for (int v = 0; v < V; ++v) {
    RibbonGraph::Vertex vx;
    vx.color = seq.color[v];
    vx.label = seq.color[v] == Color::Lab ? seq.label[v] : 0;
    for (int t = 0; t < seq.val[v]; ++t) vx.rot.push_back(voffset[v] + t);
    g.vertices.push_back(std::move(vx));
  }
  int S = static_cast<int>(partner.size());
  for (int h = 0; h < S; ++h)
    if (h < partner[h]) g.edges.push_back({h, partner[h]});
  g.face_label_of_half.assign(S, 0);
  auto m = graph_maps(g);
  int next = 1;
  for (int h0 = 0; h0 < S; ++h0) {
    if (g.face_label_of_half[h0]) continue;
    int h = h0;
    do {
      g.face_label_of_half[h] = next;
      h = m.sigma[m.iota[h]];
    } while (h != h0);
    ++next;
  }
  return g;
}

bool direction_constraints_ok(const FamilySpec& f, const RibbonGraph& g) {
  if (f.black_targets_zero() && has_black_target(g)) return false;
  if (f.requires_acyclic() && has_directed_cycle(g)) return false;
  return true;
}

// Enumerate the structurally valid direction assignments of a class
// representative; sink constraints are applied per edge, global constraints
// at the leaves.
void enumerate_directions(const FamilySpec& f, RibbonGraph& g,
                          const std::function<void(const RibbonGraph&)>& emit) {
  auto m = graph_maps(g);
  auto is_sink = [&](int v) {
    Color c = g.vertices[v].color;
    return (c == Color::Lab && f.labelled_are_sinks()) ||
           (c == Color::White && (f.white_are_sinks() || !f.directed()));
  };
  int E = g.num_edges();
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      if (direction_constraints_ok(f, g)) emit(g);
      return;
    }
    int a = g.edges[e].src, b = g.edges[e].tgt;
    int va = m.vertex_of[a], vb = m.vertex_of[b];
    if (!is_sink(va)) {
      g.edges[e] = {a, b};
      rec(e + 1);
    }
    if (!is_sink(vb)) {
      g.edges[e] = {b, a};
      rec(e + 1);
    }
    g.edges[e] = {a, b};
  };
  rec(0);
}

void permute_face_labels(RibbonGraph& g, const std::vector<int>& perm) {
  // perm maps base label-1 to new label
  for (int& l : g.face_label_of_half) l = perm[l - 1];
  for (auto& [v, l] : g.isolated_faces) l = perm[l - 1];
}

std::vector<std::string> single_vertex_generators(const FamilySpec& f, int genus,
                                                  int m, int n, int blacks,
                                                  int whites) {
  std::vector<std::string> out;
  if (genus != 0 || m != 1) return out;
  if (n + blacks + whites != 1) return out;
  Gen gen;
  RibbonGraph::Vertex v;
  if (n == 1) {
    v.color = Color::Lab;
    v.label = 1;
  } else if (blacks == 1) {
    if (!f.allows_black() || f.black_targets_zero()) return out;
    v.color = Color::Black;
  } else {
    if (!f.allows_white() || f.trivalent_whites()) return out;
    v.color = Color::White;
  }
  gen.g.vertices.push_back(v);
  gen.g.isolated_faces.emplace_back(0, 1);
  gen.o = default_orientation(gen.g);
  out.push_back(canonicalize(f, gen).key);
  return out;
}

// non-increasing valence sequences of length k, each in [lo, hi], given sum
void valence_partitions(int k, int sum, int lo, int hi,
                        std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int left, int remaining, int cap) {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(cap, remaining - lo * (left - 1)); v >= lo; --v) {
      cur.push_back(v);
      rec(left - 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(k, sum, hi);
}

}  // namespace

std::vector<std::string> enumerate_graphs(const FamilySpec& f, int genus, int m,
                                          int n, int blacks, int whites) {
  if (blacks > 0 && !f.allows_black()) return {};
  if (whites > 0 && !f.allows_white()) return {};
  int V = n + blacks + whites;
  int E = V + 2 * genus - 2 + m;
  if (V < 1 || m < 1 || genus < 0 || E < 0) return {};
  if (E == 0) {
    auto keys = single_vertex_generators(f, genus, m, n, blacks, whites);
    std::sort(keys.begin(), keys.end());
    return keys;
  }
  if (f.directed() && V == 1) return {};  // loops are closed directed paths

  const int min_white = f.trivalent_whites() ? 3 : 1;
  const int min_lab = V == 1 ? 2 * E : 1;
  const int S = 2 * E;

  std::set<std::string> struct_seen;
  std::vector<RibbonGraph> reps;

  // labelled valences are ordered tuples, unlabelled ones non-increasing
  std::vector<std::vector<int>> lab_seqs;
  {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int budget) {
      if (left == 0) {
        lab_seqs.push_back(cur);
        return;
      }
      for (int v = min_lab; v <= budget - min_lab * (left - 1); ++v) {
        cur.push_back(v);
        rec(left - 1, budget - v);
        cur.pop_back();
      }
    };
    rec(n, S - blacks * 1 - whites * min_white);
  }

  for (auto& lab : lab_seqs) {
    int used = 0;
    for (int v : lab) used += v;
    int rest = S - used;
    for (int bsum = blacks; bsum <= rest - whites * min_white; ++bsum) {
      if (blacks == 0 && bsum != 0) break;
      int wsum = rest - bsum;
      std::vector<std::vector<int>> bs, ws;
      valence_partitions(blacks, bsum, 1, S, bs);
      valence_partitions(whites, wsum, min_white, S, ws);
      for (auto& b : bs) {
        for (auto& w : ws) {
          DegSeq seq;
          for (int i = 0; i < n; ++i) {
            seq.color.push_back(Color::Lab);
            seq.label.push_back(i + 1);
            seq.val.push_back(lab[i]);
          }
          for (int x : b) {
            seq.color.push_back(Color::Black);
            seq.label.push_back(0);
            seq.val.push_back(x);
          }
          for (int x : w) {
            seq.color.push_back(Color::White);
            seq.label.push_back(0);
            seq.val.push_back(x);
          }
          MatchRun run(seq, f.directed());
          run.leaf = [&](const std::vector<int>& partner) {
            if (run.face_count() != m) return;
            RibbonGraph g = build_graph(seq, partner, run.voffset);
            std::string sk = structural_key(g, false);
            if (struct_seen.insert(sk).second) reps.push_back(std::move(g));
          };
          run.rec();
        }
      }
    }
  }

  // decorate: boundary labels, then directions, then canonical dedup
  std::set<std::string> keys;
  std::vector<int> perm(m);
  for (RibbonGraph& rep : reps) {
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    do {
      RibbonGraph g = rep;
      permute_face_labels(g, perm);
      auto finish = [&](const RibbonGraph& gg) {
        Gen gen{gg, default_orientation(gg)};
        CanonResult c = canonicalize(f, gen);
        if (c.sign != 0) keys.insert(c.key);
      };
      if (f.directed())
        enumerate_directions(f, g, finish);
      else
        finish(g);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {keys.begin(), keys.end()};
}

std::vector<std::string> generate_basis(const SliceSpec& s) {
  const FamilySpec& f = s.fam;
  switch (f.family) {
    case Family::RGra:
    case Family::RGraOr:
      if (s.w != 0) return {};
      return enumerate_graphs(f, s.g, s.m, s.n, 0, 0);
    case Family::RGraphs:
      return enumerate_graphs(f, s.g, s.m, s.n, 0, s.w);
    case Family::RGraphsOr:
    case Family::ORGraphs:
      return enumerate_graphs(f, s.g, s.m, s.n, s.w, 0);
    case Family::ORGraphsInterp:
      throw std::invalid_argument(
          "generate_basis: the interpolating family is not sliced by weight; "
          "use enumerate_graphs/enumerate_by_edges");
  }
  return {};
}

std::vector<std::string> enumerate_by_edges(const FamilySpec& f, int E) {
  std::set<std::string> keys;
  for (int g = 0; 2 * g <= E + 1; ++g) {
    for (int m = 1; m <= E + 2; ++m) {
      int V = E + 2 - 2 * g - m;
      if (V < 1) continue;
      for (int n = 0; n <= V; ++n) {
        for (int blacks = 0; blacks <= V - n; ++blacks) {
          int whites = V - n - blacks;
          for (auto& k : enumerate_graphs(f, g, m, n, blacks, whites))
            keys.insert(k);
        }
      }
    }
  }
  return {keys.begin(), keys.end()};
}

}  // namespace rgc
