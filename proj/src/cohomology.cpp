#include "rgc/cohomology.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rgc/differential.hpp"

namespace rgc {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string wrap_payload(const std::string& payload) {
  std::ostringstream os;
  os << "rgc-cache " << Cache::format_version << ' ' << fnv1a(payload) << '\n'
     << payload;
  return os.str();
}

// returns payload, empty optional on miss/version-mismatch; throws on
// checksum failure
std::optional<std::string> unwrap_file(const std::filesystem::path& p) {
  std::ifstream is(p);
  if (!is) return std::nullopt;
  std::string header;
  std::getline(is, header);
  std::istringstream hs(header);
  std::string tag;
  int version = 0;
  uint64_t sum = 0;
  if (!(hs >> tag >> version >> sum) || tag != "rgc-cache") return std::nullopt;
  if (version != Cache::format_version) return std::nullopt;
  std::stringstream body;
  body << is.rdbuf();
  std::string payload = body.str();
  if (fnv1a(payload) != sum)
    throw corrupt_cache_error("cache checksum failure: " + p.string());
  return payload;
}

}  // namespace

std::filesystem::path Cache::dir_of(const SliceSpec& s) const {
  return root_ / s.fam.name() / std::to_string(s.fam.d) /
         (std::to_string(s.g) + "_" + std::to_string(s.m) + "_" + std::to_string(s.n));
}

std::optional<std::vector<std::string>> Cache::load_basis(const SliceSpec& s) const {
  auto payload = unwrap_file(dir_of(s) / (std::to_string(s.w) + ".basis"));
  if (!payload) return std::nullopt;
  std::istringstream is(*payload);
  std::string fam;
  int d, g, m, n, w;
  size_t count;
  if (!(is >> fam >> d >> g >> m >> n >> w >> count)) return std::nullopt;
  if (fam != s.fam.name() || d != s.fam.d || g != s.g || m != s.m || n != s.n ||
      w != s.w)
    return std::nullopt;
  std::string line;
  std::getline(is, line);
  std::vector<std::string> keys;
  std::string block;
  while (std::getline(is, line)) {
    if (line == "---") {
      if (!block.empty()) {
        Gen gen = parse_graph(block);
        keys.push_back(canonicalize(s.fam, gen).key);
        block.clear();
      }
    } else {
      block += line;
      block += '\n';
    }
  }
  if (keys.size() != count) throw corrupt_cache_error("basis count mismatch");
  return keys;
}

void Cache::store_basis(const SliceSpec& s, const std::vector<std::string>& keys) const {
  std::ostringstream os;
  os << s.fam.name() << ' ' << s.fam.d << ' ' << s.g << ' ' << s.m << ' ' << s.n
     << ' ' << s.w << ' ' << keys.size() << '\n';
  for (auto& k : keys) {
    Gen gen = decode_key(s.fam, k);
    os << serialize_graph(gen, s.fam, s.g) << "---\n";
  }
  std::filesystem::create_directories(dir_of(s));
  std::ofstream f(dir_of(s) / (std::to_string(s.w) + ".basis"));
  f << wrap_payload(os.str());
}

std::optional<SparseIntMatrix> Cache::load_matrix(const SliceSpec& s) const {
  auto payload = unwrap_file(dir_of(s) / (std::to_string(s.w) + ".matrix"));
  if (!payload) return std::nullopt;
  std::istringstream is(*payload);
  return read_matrix(is);
}

void Cache::store_matrix(const SliceSpec& s, const SparseIntMatrix& M) const {
  std::ostringstream os;
  write_matrix(os, M);
  std::filesystem::create_directories(dir_of(s));
  std::ofstream f(dir_of(s) / (std::to_string(s.w) + ".matrix"));
  f << wrap_payload(os.str());
}

std::vector<std::string> Cache::list() const {
  std::vector<std::string> out;
  if (!std::filesystem::exists(root_)) return out;
  for (auto& e : std::filesystem::recursive_directory_iterator(root_))
    if (e.is_regular_file())
      out.push_back(std::filesystem::relative(e.path(), root_).string());
  std::sort(out.begin(), out.end());
  return out;
}

void Cache::gc() const {
  if (!std::filesystem::exists(root_)) return;
  std::vector<std::filesystem::path> doomed;
  for (auto& e : std::filesystem::recursive_directory_iterator(root_)) {
    if (!e.is_regular_file()) continue;
    try {
      if (!unwrap_file(e.path())) doomed.push_back(e.path());
    } catch (const corrupt_cache_error&) {
      doomed.push_back(e.path());
    }
  }
  for (auto& p : doomed) std::filesystem::remove(p);
}

int slice_degree(const FamilySpec& f, int g, int m, int n, int w) {
  return (1 - f.d) * (n + 2 * g - 2 + m) + w;
}

int rgraphs_weight_bound(int g, int m, int n) {
  return std::max(0, 2 * n + 4 * g + 2 * m - 4);
}

namespace {

std::vector<std::string> basis_cached(const SliceSpec& s, const Cache* cache,
                                      bool* hit) {
  if (cache) {
    if (auto b = cache->load_basis(s)) {
      if (hit) *hit = true;
      return *b;
    }
  }
  auto b = generate_basis(s);
  if (cache) cache->store_basis(s, b);
  return b;
}

}  // namespace

CohomologyReport cohomology_dims(const FamilySpec& f, int g, int m, int n,
                                 int w_max, const Cache* cache,
                                 const RankPolicy& policy) {
  if (w_max < 1) throw std::invalid_argument("cohomology_dims: w_max >= 1");
  if (f.family == Family::ORGraphsInterp)
    throw std::invalid_argument(
        "cohomology_dims: interpolating family slices are not finite per degree");
  CohomologyReport rep;
  rep.fam = f;
  rep.g = g;
  rep.m = m;
  rep.n = n;
  rep.w_max = w_max;

  bool finite = false;
  int wcap = w_max;
  if (f.family == Family::RGraphs) {
    int bound = rgraphs_weight_bound(g, m, n);
    if (bound <= w_max) {
      wcap = bound;
      finite = true;
    }
  }

  std::vector<std::vector<std::string>> bases(wcap + 1);
  bool all_hit = true;
  for (int w = 0; w <= wcap; ++w) {
    bool hit = false;
    bases[w] = basis_cached({f, g, m, n, w}, cache, &hit);
    all_hit = all_hit && hit;
  }
  rep.from_cache = all_hit;

  auto apply = [&](const std::string& key) {
    return differential(f, decode_key(f, key));
  };

  std::vector<int> rank_out(wcap + 1, 0);
  for (int w = 0; w <= wcap; ++w) {
    if (bases[w].empty()) continue;
    SparseIntMatrix M;
    bool cached_matrix = false;
    if (w < wcap) {
      if (cache) {
        if (auto cm = cache->load_matrix({f, g, m, n, w})) {
          M = *cm;
          cached_matrix = true;
        }
      }
      if (!cached_matrix) {
        try {
          M = matrix_of_map(bases[w], bases[w + 1], apply);
        } catch (const image_outside_codomain_error& e) {
          throw truncation_leak_error(e.what());
        }
        if (cache) cache->store_matrix({f, g, m, n, w}, M);
      }
    } else if (finite) {
      // the differential must vanish identically on the top weight
      for (auto& key : bases[w])
        if (!apply(key).empty())
          throw truncation_leak_error("nonzero differential at the weight bound");
    } else {
      // codomain discovered from the images; enough for the rank
      std::map<std::string, int> rows;
      for (auto& key : bases[w]) {
        GraphVector v = apply(key);
        for (auto& [k2, c] : v.coef) rows.emplace(k2, 0);
      }
      std::vector<std::string> codomain;
      for (auto& [k2, idx] : rows) codomain.push_back(k2);
      M = matrix_of_map(bases[w], codomain, apply);
    }
    rank_out[w] = rank_auto(M, policy);
  }

  for (int w = 0; w <= wcap; ++w) {
    DegreeLine line;
    line.w = w;
    line.deg = slice_degree(f, g, m, n, w);
    line.dim = static_cast<int>(bases[w].size());
    line.rank_out = rank_out[w];
    line.rank_in = w > 0 ? rank_out[w - 1] : 0;
    line.dim_h = line.dim - line.rank_out - line.rank_in;
    if (line.dim_h < 0) throw std::logic_error("negative cohomology dimension");
    line.exact = finite || w <= w_max - 1;
    rep.lines.push_back(line);
  }
  return rep;
}

CompareReport compare_main_theorem(int d, int g, int m, int n, int w_max,
                                   const Cache* cache, const RankPolicy& policy) {
  if (m < 1 || n < 1) throw std::invalid_argument("compare: m, n >= 1");
  CompareReport rep;
  rep.d = d;
  rep.g = g;
  rep.m = m;
  rep.n = n;
  rep.w_max = w_max;
  rep.oriented =
      cohomology_dims({Family::ORGraphs, d + 1}, g, m, n, w_max, cache, policy);
  rep.undirected =
      cohomology_dims({Family::RGraphs, d}, g, m, n, w_max, cache, policy);
  std::map<int, std::pair<int, bool>> or_deg, rg_deg;
  for (auto& l : rep.oriented.lines) or_deg[l.deg] = {l.dim_h, l.exact};
  for (auto& l : rep.undirected.lines) rg_deg[l.deg] = {l.dim_h, l.exact};
  // degrees below the weight-0 line of either complex are exact zeros, and a
  // finite RGraphs complex is exactly zero above its window too
  const int min_or = slice_degree({Family::ORGraphs, d + 1}, g, m, n, 0);
  const int min_rg = slice_degree({Family::RGraphs, d}, g, m, n, 0);
  const bool rg_finite = rgraphs_weight_bound(g, m, n) <= w_max;
  std::set<int> degs;
  for (auto& [k, v] : or_deg) degs.insert(k);
  for (auto& [k, v] : rg_deg) degs.insert(k);
  for (int deg : degs) {
    CompareLine cl;
    cl.deg = deg;
    if (auto it = or_deg.find(deg); it != or_deg.end()) {
      cl.dim_or = it->second.first;
      cl.exact_or = it->second.second;
    } else if (deg < min_or) {
      cl.dim_or = 0;
      cl.exact_or = true;
    }
    if (auto it = rg_deg.find(deg); it != rg_deg.end()) {
      cl.dim_rg = it->second.first;
      cl.exact_rg = it->second.second;
    } else if (deg < min_rg || rg_finite) {
      cl.dim_rg = 0;
      cl.exact_rg = true;
    }
    cl.comparable = cl.exact_or && cl.exact_rg && cl.dim_or >= 0 && cl.dim_rg >= 0;
    cl.agree = cl.comparable && cl.dim_or == cl.dim_rg;
    if (cl.comparable && !cl.agree) rep.all_agree = false;
    rep.lines.push_back(cl);
  }
  return rep;
}

const std::vector<RefEntry>& reference_table() {
  static const std::vector<RefEntry> table = {
      {0, 3, {{0, 1}}, "M_{0,3} is a point; H_c^0 = Q"},
      {0, 4, {{1, 2}, {2, 1}},
       "M_{0,4} = P^1 minus {0,1,inf}; H^0=Q, H^1=Q^2, Poincare duality in "
       "real dimension 2"},
      {1, 1, {{2, 1}}, "M_{1,1}: H^* = Q in degree 0; Poincare duality in real "
                       "dimension 2"},
      {1, 2, {{4, 1}},
       "M_{1,2}: H^* = Q in degree 0 (the elliptic involution kills the fiber "
       "H^1); Poincare duality in real dimension 4"},
  };
  return table;
}

const RefEntry& reference_lookup(int g, int N) {
  if (2 * g + N < 3) throw not_in_table_error("unstable (g,N)");
  for (auto& e : reference_table())
    if (e.g == g && e.N == N) return e;
  throw not_in_table_error("no reference entry for (g,N)=(" + std::to_string(g) +
                           "," + std::to_string(N) + ")");
}

std::map<int, int> expected_rgraphs_dims(int d, int g, int m, int n) {
  std::map<int, int> out;
  if (2 * g + m + n < 3) return out;
  const RefEntry& e = reference_lookup(g, m + n);
  for (auto& [k, dim] : e.dims) out[k + m - d * (2 * g - 2 + m + n)] = dim;
  return out;
}

std::string report_json_lines(const CohomologyReport& r) {
  std::ostringstream os;
  for (auto& l : r.lines) {
    os << "{\"family\":\"" << r.fam.name() << "\",\"d\":" << r.fam.d
       << ",\"g\":" << r.g << ",\"m\":" << r.m << ",\"n\":" << r.n
       << ",\"w\":" << l.w << ",\"degree\":" << l.deg << ",\"dim\":" << l.dim
       << ",\"rank_out\":" << l.rank_out << ",\"rank_in\":" << l.rank_in
       << ",\"dim_h\":" << l.dim_h << ",\"exact\":" << (l.exact ? "true" : "false")
       << ",\"provenance\":\"" << (r.from_cache ? "cache" : "fresh") << "\"}\n";
  }
  return os.str();
}

std::string report_text(const CohomologyReport& r) {
  std::ostringstream os;
  os << "family " << r.fam.name() << " d=" << r.fam.d << " (g,m,n)=(" << r.g << ','
     << r.m << ',' << r.n << ") w_max=" << r.w_max
     << (r.from_cache ? " [cache]" : " [fresh]") << '\n';
  os << "  w   degree   dim   rank_out   dim_H   window\n";
  for (auto& l : r.lines) {
    os << "  " << l.w << "   " << l.deg << "   " << l.dim << "   " << l.rank_out
       << "   " << l.dim_h << "   " << (l.exact ? "exact" : "boundary-of-window")
       << '\n';
  }
  return os.str();
}

std::string compare_json_lines(const CompareReport& r) {
  std::ostringstream os;
  for (auto& l : r.lines) {
    os << "{\"d\":" << r.d << ",\"g\":" << r.g << ",\"m\":" << r.m
       << ",\"n\":" << r.n << ",\"degree\":" << l.deg << ",\"dim_orgraphs\":"
       << l.dim_or << ",\"dim_rgraphs\":" << l.dim_rg << ",\"comparable\":"
       << (l.comparable ? "true" : "false")
       << ",\"agree\":" << (l.agree ? "true" : "false") << "}\n";
  }
  return os.str();
}

std::string compare_text(const CompareReport& r) {
  std::ostringstream os;
  os << "main-theorem comparison d=" << r.d << " (g,m,n)=(" << r.g << ',' << r.m
     << ',' << r.n << ") w_max=" << r.w_max << '\n';
  os << "  degree   dim ORGraphs_{d+1}   dim RGraphs_d   status\n";
  for (auto& l : r.lines) {
    os << "  " << l.deg << "   ";
    if (l.dim_or >= 0)
      os << l.dim_or;
    else
      os << '-';
    os << "   ";
    if (l.dim_rg >= 0)
      os << l.dim_rg;
    else
      os << '-';
    os << "   "
       << (l.comparable ? (l.agree ? "AGREE" : "DISAGREE") : "outside-window")
       << '\n';
  }
  return os.str();
}

}  // namespace rgc
