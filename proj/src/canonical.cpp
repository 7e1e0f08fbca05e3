#include "rgc/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace rgc {

namespace {

int vertex_code(const RibbonGraph::Vertex& v) {
  switch (v.color) {
    case Color::White: return 1;
    case Color::Black: return 2;
    case Color::Lab: return 100 + v.label;
  }
  return 0;
}

int color_parity(Color c, const FamilySpec& f) {
  int deg = (c == Color::Black) ? f.black_degree() : f.white_degree();
  return parity(deg);
}

void append_int(std::string& s, long long v) {
  char buf[16];
  int n = 0;
  if (v == 0) buf[n++] = '0';
  bool neg = v < 0;
  if (neg) v = -v;
  while (v) {
    buf[n++] = static_cast<char>('0' + v % 10);
    v /= 10;
  }
  if (neg) buf[n++] = '-';
  while (n) s.push_back(buf[--n]);
}

// Reusable scratch for the root-labeling search.
struct Scratch {
  std::vector<int> new2old, old2new, enc, best;
  std::vector<std::vector<int>> ties;  // old -> new labelings matching best
};

thread_local Scratch g_scratch;

// Encodes the graph relabeled from `root`, comparing against `best` as it
// goes.  Returns -1/0/+1 like a three-way compare; on -1 `best` is replaced.
// The BFS discovery order assigns labels; the record of position t can be
// completed as soon as step t's neighbors are assigned.
int encode_root(const RibbonGraph& g, const GraphMaps& m, int root, int rec,
                bool dir, bool use_flabels, Scratch& s, bool track_best) {
  const int H = g.num_halves();
  s.new2old.assign(H, -1);
  s.old2new.assign(H, -1);
  s.enc.resize(static_cast<size_t>(H) * rec);
  int cnt = 0;
  s.new2old[cnt] = root;
  s.old2new[root] = cnt++;
  int verdict = s.best.empty() ? -1 : 0;  // -1: new best, 0: tie so far
  for (int t = 0; t < H; ++t) {
    if (t >= cnt) throw invalid_graph_error("disconnected graph");
    int h = s.new2old[t];
    int a = m.sigma[h];
    if (s.old2new[a] < 0) {
      s.old2new[a] = cnt;
      s.new2old[cnt++] = a;
    }
    int b = m.iota[h];
    if (s.old2new[b] < 0) {
      s.old2new[b] = cnt;
      s.new2old[cnt++] = b;
    }
    int* r = &s.enc[static_cast<size_t>(t) * rec];
    r[0] = s.old2new[a];
    r[1] = s.old2new[b];
    r[2] = vertex_code(g.vertices[m.vertex_of[h]]);
    r[3] = use_flabels ? g.face_label_of_half[h] : 0;
    if (dir) r[4] = (g.edges[m.edge_of[h]].src == h) ? 1 : 0;
    if (verdict == 0 && track_best) {
      const int* q = &s.best[static_cast<size_t>(t) * rec];
      for (int i = 0; i < rec; ++i) {
        if (r[i] < q[i]) {
          verdict = -1;
          break;
        }
        if (r[i] > q[i]) return 1;
      }
    }
  }
  return verdict;
}

// Full min-encoding search; fills s.best and s.ties.
void min_encoding(const RibbonGraph& g, const GraphMaps& m, int rec, bool dir,
                  bool use_flabels, Scratch& s, bool want_ties) {
  const int H = g.num_halves();
  s.best.clear();
  s.ties.clear();
  for (int root = 0; root < H; ++root) {
    int v = encode_root(g, m, root, rec, dir, use_flabels, s, true);
    if (v > 0) continue;
    if (v < 0) {
      s.best = s.enc;
      if (want_ties) {
        s.ties.clear();
        s.ties.push_back(s.old2new);
      }
    } else if (want_ties) {
      s.ties.push_back(s.old2new);
    }
  }
}

std::string enc_to_key(int E, const std::vector<int>& enc) {
  std::string key;
  key.reserve(4 + enc.size() * 3);
  append_int(key, E);
  for (int v : enc) {
    key.push_back(',');
    append_int(key, v);
  }
  return key;
}

}  // namespace

int word_sort_sign(const std::vector<OriSym>& word,
                   const std::vector<int>& edge_target_pos,
                   const std::vector<int>& vertex_target_pos,
                   const std::vector<int>& edge_par,
                   const std::vector<int>& vertex_par) {
  struct Item {
    int target;
    int par;
  };
  std::vector<Item> items;
  items.reserve(word.size());
  int nedges = static_cast<int>(edge_target_pos.size());
  for (auto& s : word) {
    if (s.is_edge)
      items.push_back({edge_target_pos[s.id], edge_par[s.id]});
    else
      items.push_back({nedges + vertex_target_pos[s.id], vertex_par[s.id]});
  }
  int inv = 0;
  for (size_t i = 0; i < items.size(); ++i)
    for (size_t j = i + 1; j < items.size(); ++j)
      if (items[i].target > items[j].target && items[i].par && items[j].par) ++inv;
  return inv % 2 ? -1 : 1;
}

CanonResult canonicalize(const FamilySpec& f, const Gen& gen) {
  const RibbonGraph& g = gen.g;
  const int H = g.num_halves();
  if (H == 0) {
    if (g.num_vertices() != 1 || g.isolated_faces.size() != 1)
      throw invalid_graph_error("edgeless graph must be a single vertex");
    std::string key = "iso,";
    append_int(key, vertex_code(g.vertices[0]));
    key.push_back(',');
    append_int(key, g.isolated_faces[0].second);
    return {key, 1};
  }
  auto m = graph_maps(g);
  const bool dir = f.directed();
  const int rec = dir ? 5 : 4;
  Scratch& s = g_scratch;
  min_encoding(g, m, rec, dir, true, s, /*want_ties=*/true);
  const std::vector<int> best = s.best;
  const std::vector<std::vector<int>> ties = s.ties;
  const std::vector<int>& L0 = ties.front();

  // canonical edges (by min half) and vertices (cycles of canonical sigma)
  std::vector<int> ciota(H), csigma(H);
  for (int x = 0; x < H; ++x) {
    csigma[x] = best[static_cast<size_t>(x) * rec + 0];
    ciota[x] = best[static_cast<size_t>(x) * rec + 1];
  }
  const int E = g.num_edges();
  std::vector<int> cedge_of(H, -1), cedge_min;
  cedge_min.reserve(E);
  for (int x = 0; x < H; ++x)
    if (x < ciota[x]) {
      cedge_of[x] = cedge_of[ciota[x]] = static_cast<int>(cedge_min.size());
      cedge_min.push_back(x);
    }
  std::vector<int> cvert_of(H, -1);
  std::vector<int> cvert_head;
  std::vector<Color> cvert_color;
  for (int x = 0; x < H; ++x) {
    if (cvert_of[x] >= 0) continue;
    int id = static_cast<int>(cvert_head.size());
    cvert_head.push_back(x);
    int y = x;
    do {
      cvert_of[y] = id;
      y = csigma[y];
    } while (y != x);
    int code = best[static_cast<size_t>(x) * rec + 2];
    cvert_color.push_back(code == 1 ? Color::White
                                    : (code == 2 ? Color::Black : Color::Lab));
  }
  std::vector<int> cvert_rank(cvert_head.size(), -1);
  int nunlab = 0;
  for (size_t v = 0; v < cvert_head.size(); ++v)
    if (cvert_color[v] != Color::Lab) cvert_rank[v] = nunlab++;

  std::vector<int> edge_target(E), edge_par(E, parity(f.edge_degree()));
  int flips = 0;
  for (int e = 0; e < E; ++e) {
    int a = L0[g.edges[e].src], b = L0[g.edges[e].tgt];
    edge_target[e] = cedge_of[std::min(a, b)];
    if (!dir && a > b) ++flips;
  }
  std::vector<int> vertex_target(g.num_vertices(), -1), vertex_par(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.vertices[v].color == Color::Lab) continue;
    int cv = cvert_of[L0[g.vertices[v].rot.front()]];
    vertex_target[v] = cvert_rank[cv];
    vertex_par[v] = color_parity(g.vertices[v].color, f);
  }
  int sign = word_sort_sign(gen.o.word, edge_target, vertex_target, edge_par, vertex_par);
  if (!dir && flips % 2 && f.flip_sign() < 0) sign = -sign;

  // automorphisms in canonical coordinates: beta = L o L0^{-1}
  const int epar = parity(f.edge_degree());
  std::vector<int> beta(H), eperm(E);
  for (size_t t = 1; t < ties.size(); ++t) {
    const std::vector<int>& L = ties[t];
    for (int h = 0; h < H; ++h) beta[L0[h]] = L[h];
    int aflips = 0;
    for (int i = 0; i < E; ++i) {
      int y = beta[cedge_min[i]];
      eperm[i] = cedge_of[y];
      if (y > ciota[y]) ++aflips;
    }
    int asign = 1;
    if (epar) {
      int inv = 0;
      for (int i = 0; i < E; ++i)
        for (int j = i + 1; j < E; ++j)
          if (eperm[i] > eperm[j]) ++inv;
      if (inv % 2) asign = -asign;
    }
    if (!dir && aflips % 2 && f.flip_sign() < 0) asign = -asign;
    std::vector<std::pair<int, int>> vperm;
    for (size_t v = 0; v < cvert_head.size(); ++v) {
      if (cvert_color[v] == Color::Lab) continue;
      int y = beta[cvert_head[v]];
      vperm.push_back({cvert_rank[cvert_of[y]], color_parity(cvert_color[v], f)});
    }
    int inv = 0;
    for (size_t i = 0; i < vperm.size(); ++i)
      for (size_t j = i + 1; j < vperm.size(); ++j)
        if (vperm[i].first > vperm[j].first && vperm[i].second && vperm[j].second)
          ++inv;
    if (inv % 2) asign = -asign;
    if (asign < 0) return {enc_to_key(E, best), 0};
  }
  return {enc_to_key(E, best), sign};
}

std::string structural_key(const RibbonGraph& g, bool with_directions) {
  int H = g.num_halves();
  if (H == 0) {
    std::string key = "iso,";
    append_int(key, vertex_code(g.vertices.at(0)));
    return key;
  }
  auto m = graph_maps(g);
  const int rec = with_directions ? 5 : 4;
  Scratch& s = g_scratch;
  min_encoding(g, m, rec, with_directions, false, s, /*want_ties=*/false);
  return enc_to_key(g.num_edges(), s.best);
}

Gen decode_key(const FamilySpec& f, const std::string& key) {
  Gen gen;
  std::vector<std::string> toks;
  {
    std::istringstream is(key);
    std::string t;
    while (std::getline(is, t, ',')) toks.push_back(t);
  }
  if (toks.empty()) throw invalid_graph_error("empty key");
  if (toks[0] == "iso") {
    int code = std::stoi(toks.at(1));
    int flabel = std::stoi(toks.at(2));
    RibbonGraph::Vertex v;
    if (code == 1)
      v.color = Color::White;
    else if (code == 2)
      v.color = Color::Black;
    else {
      v.color = Color::Lab;
      v.label = code - 100;
    }
    gen.g.vertices.push_back(v);
    gen.g.isolated_faces.emplace_back(0, flabel);
    gen.o = default_orientation(gen.g);
    return gen;
  }
  const bool dir = f.directed();
  const int rec = dir ? 5 : 4;
  int E = std::stoi(toks[0]);
  int H = 2 * E;
  if (static_cast<int>(toks.size()) != 1 + H * rec)
    throw invalid_graph_error("bad key length");
  std::vector<int> csigma(H), ciota(H), vcode(H), flab(H), dbit(H, 0);
  for (int x = 0; x < H; ++x) {
    csigma[x] = std::stoi(toks[1 + x * rec + 0]);
    ciota[x] = std::stoi(toks[1 + x * rec + 1]);
    vcode[x] = std::stoi(toks[1 + x * rec + 2]);
    flab[x] = std::stoi(toks[1 + x * rec + 3]);
    if (dir) dbit[x] = std::stoi(toks[1 + x * rec + 4]);
  }
  std::vector<int> vert_of(H, -1);
  for (int x = 0; x < H; ++x) {
    if (vert_of[x] >= 0) continue;
    RibbonGraph::Vertex v;
    int code = vcode[x];
    if (code == 1)
      v.color = Color::White;
    else if (code == 2)
      v.color = Color::Black;
    else {
      v.color = Color::Lab;
      v.label = code - 100;
    }
    int y = x;
    do {
      vert_of[y] = static_cast<int>(gen.g.vertices.size());
      v.rot.push_back(y);
      y = csigma[y];
    } while (y != x);
    gen.g.vertices.push_back(std::move(v));
  }
  for (int x = 0; x < H; ++x) {
    if (x > ciota[x]) continue;
    RibbonGraph::Edge e;
    if (dir) {
      e.src = dbit[x] ? x : ciota[x];
      e.tgt = dbit[x] ? ciota[x] : x;
    } else {
      e.src = x;
      e.tgt = ciota[x];
    }
    gen.g.edges.push_back(e);
  }
  gen.g.face_label_of_half = flab;
  gen.o = default_orientation(gen.g);
  return gen;
}

std::vector<std::vector<int>> automorphisms(const FamilySpec& f, const RibbonGraph& g) {
  int H = g.num_halves();
  std::vector<std::vector<int>> out;
  if (H == 0) {
    out.push_back({});
    return out;
  }
  auto m = graph_maps(g);
  const bool dir = f.directed();
  const int rec = dir ? 5 : 4;
  Scratch s;
  min_encoding(g, m, rec, dir, true, s, /*want_ties=*/true);
  const std::vector<int>& L0 = s.ties.front();
  for (auto& L : s.ties) {
    std::vector<int> alpha(H);  // old -> old, alpha = L^{-1} o L0
    std::vector<int> Linv(H);
    for (int h = 0; h < H; ++h) Linv[L[h]] = h;
    for (int h = 0; h < H; ++h) alpha[h] = Linv[L0[h]];
    out.push_back(std::move(alpha));
  }
  return out;
}

}  // namespace rgc
