#include "rgc/differential.hpp"

namespace rgc {

namespace {

Color unlabelled_color(const FamilySpec& f) {
  return f.directed() ? Color::Black : Color::White;
}

// merged boundary takes label i, the rest of Gamma's labels are restored
void restore_face_labels(Gen& gen, int i, int m) {
  std::vector<int> map(m + 1, 0);
  map[1] = i;
  for (int c = 2; c <= m; ++c) map[c] = (c <= i ? c - 1 : c);
  relabel_faces(gen, map);
}

// the grafted labelled vertex takes label j, Gamma's labels are restored
void restore_vertex_labels(Gen& gen, int j, int n) {
  std::vector<int> map(n + 1, 0);
  map[n] = j;
  for (int c = 1; c < n; ++c) map[c] = (c < j ? c : c + 1);
  relabel_vertex_labels(gen, map);
}

void append_scaled(std::vector<Term>& all, std::vector<Term>&& terms, const Rat& c) {
  for (Term& t : terms) {
    t.coeff *= c;
    all.push_back(std::move(t));
  }
}

}  // namespace

Gen pendant_gen(const FamilySpec& f, bool into_label) {
  Gen gen;
  RibbonGraph::Vertex u, lab;
  u.color = unlabelled_color(f);
  u.rot = {0};
  lab.color = Color::Lab;
  lab.label = 1;
  lab.rot = {1};
  gen.g.vertices = {u, lab};
  gen.g.edges.push_back(into_label ? RibbonGraph::Edge{0, 1} : RibbonGraph::Edge{1, 0});
  gen.g.face_label_of_half = {1, 1};
  gen.o = default_orientation(gen.g);
  return gen;
}

Gen splitter_gen(const FamilySpec& f) {
  Gen gen;
  RibbonGraph::Vertex a, b;
  a.color = b.color = unlabelled_color(f);
  a.rot = {0};
  b.rot = {1};
  gen.g.vertices = {a, b};
  gen.g.edges.push_back({0, 1});
  gen.g.face_label_of_half = {1, 1};
  gen.o = default_orientation(gen.g);
  return gen;
}

static Gen corolla(const FamilySpec& f, int k, bool first_labelled) {
  Gen gen;
  RibbonGraph::Vertex center;
  center.color = Color::Black;
  for (int t = 0; t < k; ++t) center.rot.push_back(t);
  gen.g.vertices.push_back(center);
  for (int t = 0; t < k; ++t) {
    RibbonGraph::Vertex w;
    if (t == 0 && first_labelled) {
      w.color = Color::Lab;
      w.label = 1;
    } else {
      w.color = Color::White;
    }
    w.rot = {k + t};
    gen.g.vertices.push_back(w);
    gen.g.edges.push_back({t, k + t});
  }
  gen.g.face_label_of_half.assign(2 * k, 1);
  gen.o = default_orientation(gen.g);
  return gen;
}

Gen white_corolla_gen(const FamilySpec& f, int k) { return corolla(f, k, false); }
Gen gamma_term_gen(const FamilySpec& f, int k) { return corolla(f, k + 1, true); }

GraphVector gamma_vector(const FamilySpec& f, int K) {
  std::vector<Term> terms;
  for (int k = 0; k <= K; ++k) terms.push_back({gamma_term_gen(f, k), Rat(1)});
  return normalize(f, terms, /*check_meta=*/false);
}

static std::vector<Term> pendant_terms(const FamilySpec& f, const Gen& gen) {
  // first two sums of the splitting-of-vertices formula
  const int m = gen.g.num_faces();
  const int n = gen.g.num_labelled();
  const int deg = degree(gen.g, f);
  std::vector<Term> all;
  std::vector<std::pair<Gen, Rat>> pendants;
  pendants.push_back({pendant_gen(f, true), Rat(1)});
  if (f.family == Family::RGraphsOr)
    pendants.push_back({pendant_gen(f, false), Rat(f.neg_one_pow_d())});
  for (auto& [P, w] : pendants) {
    for (int i = 1; i <= m; ++i) {
      auto terms = compose_terms(f, P, 1, gen, i);
      for (Term& t : terms) restore_face_labels(t.gen, i, m);
      append_scaled(all, std::move(terms), w);
    }
    for (int j = 1; j <= n; ++j) {
      auto terms = compose_terms(f, gen, j, P, 1);
      for (Term& t : terms) restore_vertex_labels(t.gen, j, n);
      append_scaled(all, std::move(terms), -Rat(neg_one_pow(deg)) * w);
    }
  }
  return all;
}

GraphVector differential(const FamilySpec& f, const Gen& gen, int K) {
  std::vector<Term> all;
  const int deg = degree(gen.g, f);
  switch (f.family) {
    case Family::RGra:
    case Family::RGraOr:
      break;  // non-differential properads
    case Family::RGraphs: {
      all = pendant_terms(f, gen);
      Gen S = splitter_gen(f);
      for (int v = 0; v < gen.g.num_vertices(); ++v)
        if (gen.g.vertices[v].color == Color::White)
          append_scaled(all, subst_terms(f, gen, v, S),
                        -Rat(neg_one_pow(deg)) / 2);
      break;
    }
    case Family::RGraphsOr:
    case Family::ORGraphs: {
      all = pendant_terms(f, gen);
      Gen S = splitter_gen(f);
      Rat c = conv::directed_split_graded ? -Rat(neg_one_pow(deg)) : Rat(-1);
      for (int v = 0; v < gen.g.num_vertices(); ++v)
        if (gen.g.vertices[v].color == Color::Black)
          append_scaled(all, subst_terms(f, gen, v, S), c);
      break;
    }
    case Family::ORGraphsInterp: {
      GraphVector out = delta_bullet(f, gen, K);
      out += d_gamma(f, gen, K);
      return out;
    }
  }
  return normalize(f, all);
}

GraphVector delta_bullet(const FamilySpec& f, const Gen& gen, int K) {
  if (f.family != Family::ORGraphsInterp)
    throw std::invalid_argument("delta_bullet: interpolating family only");
  std::vector<Term> all;
  // color change, white -> black; the vertex symbol leaves its slot and
  // re-enters at the end of the word with its new parity
  for (int v = 0; v < gen.g.num_vertices(); ++v) {
    if (gen.g.vertices[v].color != Color::White) continue;
    Gen t = gen;
    int sign = 1;
    {
      std::vector<OriSym> w;
      size_t pos = 0;
      for (size_t i = 0; i < t.o.word.size(); ++i)
        if (!t.o.word[i].is_edge && t.o.word[i].id == v) pos = i;
      int odd = 0;
      if (conv::drop_to_front)
        for (size_t i = 0; i < pos; ++i) odd += symbol_parity(f, gen.g, t.o.word[i]);
      else
        for (size_t i = pos + 1; i < t.o.word.size(); ++i)
          odd += symbol_parity(f, gen.g, t.o.word[i]);
      if (parity(f.white_degree()) && odd % 2) sign = -sign;
      for (size_t i = 0; i < t.o.word.size(); ++i)
        if (i != pos) w.push_back(t.o.word[i]);
      if (conv::drop_to_front)
        w.insert(w.begin(), OriSym{false, v});
      else
        w.push_back(OriSym{false, v});
      t.o.word = std::move(w);
    }
    t.g.vertices[v].color = Color::Black;
    all.push_back({std::move(t), Rat(-sign)});
  }
  // corolla insertion at white vertices, coefficient 1/k
  for (int v = 0; v < gen.g.num_vertices(); ++v) {
    if (gen.g.vertices[v].color != Color::White) continue;
    for (int k = 1; k <= K; ++k)
      append_scaled(all, subst_terms(f, gen, v, white_corolla_gen(f, k)),
                    Rat(-1) / k);
  }
  // black splitting
  Gen S = splitter_gen(f);
  for (int v = 0; v < gen.g.num_vertices(); ++v)
    if (gen.g.vertices[v].color == Color::Black)
      append_scaled(all, subst_terms(f, gen, v, S), Rat(-1));
  return normalize(f, all);
}

GraphVector d_gamma(const FamilySpec& f, const Gen& gen, int K) {
  if (f.family != Family::ORGraphsInterp)
    throw std::invalid_argument("d_gamma: interpolating family only");
  const int m = gen.g.num_faces();
  const int n = gen.g.num_labelled();
  const int deg = degree(gen.g, f);
  std::vector<Term> all;
  for (int k = 0; k <= K; ++k) {
    Gen gk = gamma_term_gen(f, k);
    for (int i = 1; i <= m; ++i) {
      auto terms = compose_terms(f, gk, 1, gen, i);
      for (Term& t : terms) restore_face_labels(t.gen, i, m);
      append_scaled(all, std::move(terms), Rat(1));
    }
    for (int j = 1; j <= n; ++j) {
      auto terms = compose_terms(f, gen, j, gk, 1);
      for (Term& t : terms) restore_vertex_labels(t.gen, j, n);
      append_scaled(all, std::move(terms), -Rat(neg_one_pow(deg)));  // |gamma| = 1
    }
  }
  return normalize(f, all);
}

GraphVector differential(const FamilySpec& f, const GraphVector& x, int K) {
  GraphVector out;
  out.fam = f;
  for (auto& [k, c] : x.coef) {
    GraphVector d = differential(f, decode_key(f, k), K);
    d *= c;
    out += d;
  }
  return out;
}

}  // namespace rgc
