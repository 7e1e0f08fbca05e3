#include "rgc/ribbon_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rgc {

int RibbonGraph::num_faces() const {
  // boundary labels are exactly 1..m
  int m = 0;
  for (int l : face_label_of_half) m = std::max(m, l);
  for (auto& [v, l] : isolated_faces) m = std::max(m, l);
  return m;
}

int RibbonGraph::num_labelled() const {
  int n = 0;
  for (auto& v : vertices)
    if (v.color == Color::Lab) ++n;
  return n;
}

int RibbonGraph::count_color(Color c) const {
  int n = 0;
  for (auto& v : vertices)
    if (v.color == c) ++n;
  return n;
}

GraphMaps graph_maps(const RibbonGraph& g) {
  GraphMaps m;
  int H = g.num_halves();
  m.sigma.assign(H, -1);
  m.iota.assign(H, -1);
  m.vertex_of.assign(H, -1);
  m.edge_of.assign(H, -1);
  for (int vi = 0; vi < g.num_vertices(); ++vi) {
    auto& rot = g.vertices[vi].rot;
    int k = static_cast<int>(rot.size());
    for (int t = 0; t < k; ++t) {
      m.sigma[rot[t]] = rot[(t + 1) % k];
      m.vertex_of[rot[t]] = vi;
    }
  }
  for (int ei = 0; ei < g.num_edges(); ++ei) {
    m.iota[g.edges[ei].src] = g.edges[ei].tgt;
    m.iota[g.edges[ei].tgt] = g.edges[ei].src;
    m.edge_of[g.edges[ei].src] = ei;
    m.edge_of[g.edges[ei].tgt] = ei;
  }
  return m;
}

std::vector<FaceCycle> boundary_cycles(const RibbonGraph& g) {
  auto m = graph_maps(g);
  int H = g.num_halves();
  std::vector<char> seen(H, 0);
  std::vector<FaceCycle> out;
  for (int h0 = 0; h0 < H; ++h0) {
    if (seen[h0]) continue;
    FaceCycle f;
    f.label = g.face_label_of_half[h0];
    int h = h0;
    do {
      seen[h] = 1;
      f.walk.push_back(h);
      h = m.sigma[m.iota[h]];
    } while (h != h0);
    out.push_back(std::move(f));
  }
  for (auto& [v, l] : g.isolated_faces) {
    FaceCycle f;
    f.label = l;
    f.isolated_vertex = v;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const FaceCycle& a, const FaceCycle& b) { return a.label < b.label; });
  return out;
}

bool is_connected(const RibbonGraph& g) {
  int V = g.num_vertices();
  if (V <= 1) return true;
  auto m = graph_maps(g);
  std::vector<char> seen(V, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : g.vertices[v].rot) {
      int w = m.vertex_of[m.iota[h]];
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
  }
  return cnt == V;
}

int genus(const RibbonGraph& g) {
  if (!is_connected(g)) throw invalid_graph_error("disconnected graph");
  int V = g.num_vertices();
  int E = g.num_edges();
  int B = static_cast<int>(boundary_cycles(g).size());
  int twice = 2 - V + E - B;
  if (twice < 0 || twice % 2 != 0)
    throw invalid_graph_error("invalid Euler characteristic");
  return twice / 2;
}

void check_structure(const RibbonGraph& g) {
  int H = g.num_halves();
  std::vector<int> cover(H, 0);
  for (auto& v : g.vertices)
    for (int h : v.rot) {
      if (h < 0 || h >= H) throw invalid_graph_error("half-edge out of range");
      cover[h]++;
    }
  for (int h = 0; h < H; ++h)
    if (cover[h] != 1) throw invalid_graph_error("rotations do not partition half-edges");
  std::vector<int> ecover(H, 0);
  for (auto& e : g.edges) {
    if (e.src < 0 || e.src >= H || e.tgt < 0 || e.tgt >= H || e.src == e.tgt)
      throw invalid_graph_error("bad edge");
    ecover[e.src]++;
    ecover[e.tgt]++;
  }
  for (int h = 0; h < H; ++h)
    if (ecover[h] != 1) throw invalid_graph_error("involution not fixed-point-free");
  if (static_cast<int>(g.face_label_of_half.size()) != H)
    throw invalid_graph_error("face label array size mismatch");
  // labelled vertices carry 1..n exactly once
  std::set<int> labs;
  for (auto& v : g.vertices) {
    if (v.color == Color::Lab) {
      if (v.label < 1 || !labs.insert(v.label).second)
        throw invalid_graph_error("bad vertex labels");
    }
    if (v.color != Color::Lab && v.label != 0)
      throw invalid_graph_error("unlabelled vertex carries a label");
  }
  int n = static_cast<int>(labs.size());
  if (!labs.empty() && *labs.rbegin() != n)
    throw invalid_graph_error("vertex labels not 1..n");
  // isolated faces match isolated vertices
  std::set<int> iso;
  for (auto& [v, l] : g.isolated_faces) {
    if (v < 0 || v >= g.num_vertices() || !g.vertices[v].rot.empty())
      throw invalid_graph_error("isolated face at non-isolated vertex");
    if (!iso.insert(v).second) throw invalid_graph_error("duplicate isolated face");
  }
  for (int vi = 0; vi < g.num_vertices(); ++vi)
    if (g.vertices[vi].rot.empty() && !iso.count(vi))
      throw invalid_graph_error("isolated vertex without boundary");
  // face labels constant on phi-orbits and exactly 1..m
  auto m = graph_maps(g);
  std::set<int> flabels;
  for (int h = 0; h < H; ++h) {
    if (g.face_label_of_half[h] != g.face_label_of_half[m.sigma[m.iota[h]]])
      throw invalid_graph_error("face labels not constant on boundaries");
    flabels.insert(g.face_label_of_half[h]);
  }
  int orbits = 0;
  {
    std::vector<char> seen(H, 0);
    for (int h0 = 0; h0 < H; ++h0) {
      if (seen[h0]) continue;
      ++orbits;
      int h = h0;
      do {
        seen[h] = 1;
        h = m.sigma[m.iota[h]];
      } while (h != h0);
    }
  }
  for (auto& [v, l] : g.isolated_faces) flabels.insert(l);
  int B = orbits + static_cast<int>(g.isolated_faces.size());
  if (static_cast<int>(flabels.size()) != B)
    throw invalid_graph_error("face labels not distinct per boundary");
  if (B > 0 && (*flabels.begin() != 1 || *flabels.rbegin() != B))
    throw invalid_graph_error("face labels not 1..m");
}

bool has_black_target(const RibbonGraph& g) {
  auto m = graph_maps(g);
  for (int vi = 0; vi < g.num_vertices(); ++vi) {
    if (g.vertices[vi].color != Color::Black) continue;
    bool out = false;
    for (int h : g.vertices[vi].rot)
      if (g.edges[m.edge_of[h]].src == h) {
        out = true;
        break;
      }
    if (!out) return true;
  }
  return false;
}

bool has_directed_cycle(const RibbonGraph& g) {
  auto m = graph_maps(g);
  int V = g.num_vertices();
  std::vector<std::vector<int>> adj(V);
  std::vector<int> indeg(V, 0);
  for (auto& e : g.edges) {
    int a = m.vertex_of[e.src], b = m.vertex_of[e.tgt];
    adj[a].push_back(b);
    indeg[b]++;
  }
  std::vector<int> q;
  for (int v = 0; v < V; ++v)
    if (indeg[v] == 0) q.push_back(v);
  int done = 0;
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    ++done;
    for (int w : adj[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  return done != V;
}

std::vector<std::string> validate(const RibbonGraph& g, const FamilySpec& f) {
  std::vector<std::string> bad;
  try {
    check_structure(g);
  } catch (const invalid_graph_error& e) {
    bad.push_back(std::string("structure: ") + e.what());
    return bad;
  }
  if (!is_connected(g)) bad.push_back("disconnected");
  auto m = graph_maps(g);
  if (!f.allows_white() && g.count_color(Color::White) > 0)
    bad.push_back("unlabelled white vertex not allowed");
  if (!f.allows_black() && g.count_color(Color::Black) > 0)
    bad.push_back("black vertex not allowed");
  if (f.trivalent_whites()) {
    for (auto& v : g.vertices)
      if (v.color == Color::White && v.rot.size() < 3) {
        bad.push_back("unlabelled vertex of valency < 3");
        break;
      }
  }
  if (f.requires_acyclic() && has_directed_cycle(g))
    bad.push_back("closed directed path");
  if (f.labelled_are_sinks() || f.white_are_sinks()) {
    for (int vi = 0; vi < g.num_vertices(); ++vi) {
      auto c = g.vertices[vi].color;
      bool must_sink = (c == Color::Lab && f.labelled_are_sinks()) ||
                       (c == Color::White && f.white_are_sinks());
      if (!must_sink) continue;
      for (int h : g.vertices[vi].rot)
        if (g.edges[m.edge_of[h]].src == h) {
          bad.push_back(c == Color::Lab ? "outgoing edge at labelled vertex"
                                        : "outgoing edge at white vertex");
          break;
        }
    }
  }
  if (f.black_targets_zero() && has_black_target(g)) bad.push_back("black target");
  return bad;
}

int degree(const RibbonGraph& g, const FamilySpec& f) {
  int deg = f.edge_degree() * g.num_edges();
  deg += f.black_degree() * g.count_color(Color::Black);
  deg += f.white_degree() * g.count_color(Color::White);
  return deg;
}

Orientation default_orientation(const RibbonGraph& g) {
  Orientation o;
  for (int e = 0; e < g.num_edges(); ++e) o.word.push_back({true, e});
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.vertices[v].color != Color::Lab) o.word.push_back({false, v});
  return o;
}

static std::string color_token(const RibbonGraph::Vertex& v) {
  switch (v.color) {
    case Color::Lab: return "L" + std::to_string(v.label);
    case Color::White: return "W";
    case Color::Black: return "B";
  }
  return "?";
}

std::string serialize_graph(const Gen& gen, const FamilySpec& f, int g_genus) {
  const RibbonGraph& g = gen.g;
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.num_faces() << ' '
     << g_genus << ' ' << f.d << ' ' << f.name() << '\n';
  for (auto& v : g.vertices) {
    os << color_token(v);
    for (int h : v.rot) os << ' ' << h;
    os << '\n';
  }
  for (auto& e : g.edges)
    os << e.src << ' ' << e.tgt << ' ' << (f.directed() ? 'D' : 'U') << '\n';
  auto faces = boundary_cycles(g);
  os << "boundaries:";
  for (auto& fc : faces) {
    os << ' ' << fc.label << ':';
    if (fc.isolated_vertex >= 0)
      os << 'v' << fc.isolated_vertex;
    else
      for (size_t i = 0; i < fc.walk.size(); ++i)
        os << (i ? "," : "") << fc.walk[i];
  }
  os << '\n';
  os << "orientation:";
  for (auto& s : gen.o.word) os << ' ' << (s.is_edge ? 'e' : 'v') << s.id;
  os << '\n';
  return os.str();
}

Gen parse_graph(const std::string& text, FamilySpec* fam_out) {
  std::istringstream is(text);
  int V, E, B, gg, d;
  std::string famname;
  if (!(is >> V >> E >> B >> gg >> d >> famname))
    throw invalid_graph_error("bad graph header");
  FamilySpec fam{family_from_string(famname), d};
  if (fam_out) *fam_out = fam;
  Gen gen;
  gen.g.vertices.resize(V);
  std::string line;
  std::getline(is, line);
  for (int v = 0; v < V; ++v) {
    if (!std::getline(is, line)) throw invalid_graph_error("missing vertex line");
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    auto& vx = gen.g.vertices[v];
    if (tok == "W")
      vx.color = Color::White;
    else if (tok == "B")
      vx.color = Color::Black;
    else if (!tok.empty() && tok[0] == 'L') {
      vx.color = Color::Lab;
      vx.label = std::stoi(tok.substr(1));
    } else
      throw invalid_graph_error("bad vertex color token");
    int h;
    while (ls >> h) vx.rot.push_back(h);
  }
  gen.g.edges.resize(E);
  for (int e = 0; e < E; ++e) {
    if (!std::getline(is, line)) throw invalid_graph_error("missing edge line");
    std::istringstream ls(line);
    char dir;
    if (!(ls >> gen.g.edges[e].src >> gen.g.edges[e].tgt >> dir))
      throw invalid_graph_error("bad edge line");
  }
  if (!std::getline(is, line) || line.rfind("boundaries:", 0) != 0)
    throw invalid_graph_error("missing boundaries line");
  gen.g.face_label_of_half.assign(2 * E, 0);
  {
    std::istringstream ls(line.substr(std::string("boundaries:").size()));
    std::string item;
    while (ls >> item) {
      auto colon = item.find(':');
      int label = std::stoi(item.substr(0, colon));
      std::string rest = item.substr(colon + 1);
      if (!rest.empty() && rest[0] == 'v') {
        gen.g.isolated_faces.emplace_back(std::stoi(rest.substr(1)), label);
      } else {
        std::istringstream ws(rest);
        std::string num;
        while (std::getline(ws, num, ','))
          gen.g.face_label_of_half[std::stoi(num)] = label;
      }
    }
  }
  if (!std::getline(is, line) || line.rfind("orientation:", 0) != 0)
    throw invalid_graph_error("missing orientation line");
  {
    std::istringstream ls(line.substr(std::string("orientation:").size()));
    std::string item;
    while (ls >> item)
      gen.o.word.push_back({item[0] == 'e', std::stoi(item.substr(1))});
  }
  check_structure(gen.g);
  return gen;
}

}  // namespace rgc
