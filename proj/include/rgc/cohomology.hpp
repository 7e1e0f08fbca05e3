#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgc/enumerate.hpp"
#include "rgc/linalg.hpp"

namespace rgc {

struct corrupt_cache_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct truncation_leak_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_in_table_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Content-addressed store for bases and differential matrices,
// cache/<family>/<d>/<g>_<m>_<n>/<w>.basis|.matrix, with a version+checksum
// header.  A version mismatch reads as a miss; a checksum failure throws.
class Cache {
 public:
  static constexpr int format_version = 1;
  explicit Cache(std::filesystem::path root) : root_(std::move(root)) {}
  const std::filesystem::path& root() const { return root_; }

  std::optional<std::vector<std::string>> load_basis(const SliceSpec& s) const;
  void store_basis(const SliceSpec& s, const std::vector<std::string>& keys) const;
  std::optional<SparseIntMatrix> load_matrix(const SliceSpec& s) const;
  void store_matrix(const SliceSpec& s, const SparseIntMatrix& M) const;

  std::vector<std::string> list() const;
  void gc() const;  // drop entries whose version or checksum no longer match

 private:
  std::filesystem::path dir_of(const SliceSpec& s) const;
  std::filesystem::path root_;
};

struct DegreeLine {
  int w = 0;
  int deg = 0;
  int dim = 0;       // dim of the slice
  int rank_out = 0;  // rank of delta leaving this weight
  int rank_in = 0;   // rank of delta entering it
  int dim_h = 0;
  bool exact = false;
};

struct CohomologyReport {
  FamilySpec fam;
  int g = 0, m = 0, n = 0, w_max = 0;
  bool from_cache = false;
  std::vector<DegreeLine> lines;  // indexed by w
};

// Cohomological degree of the weight-w part of the (g,m,n) slice.
int slice_degree(const FamilySpec& f, int g, int m, int n, int w);
// Weight bound of the finite RGraphs complex (trivalence).
int rgraphs_weight_bound(int g, int m, int n);

CohomologyReport cohomology_dims(const FamilySpec& f, int g, int m, int n,
                                 int w_max, const Cache* cache = nullptr,
                                 const RankPolicy& policy = {});

struct CompareLine {
  int deg = 0;
  int dim_or = -1, dim_rg = -1;  // -1: degree outside the computed window
  bool exact_or = false, exact_rg = false;
  bool comparable = false;  // both sides exact
  bool agree = false;
};

struct CompareReport {
  int d = 0, g = 0, m = 0, n = 0, w_max = 0;
  CohomologyReport oriented, undirected;
  std::vector<CompareLine> lines;
  bool all_agree = true;  // over comparable degrees
};

// ORGraphs at parameter d+1 against RGraphs at parameter d on one (g,m,n).
CompareReport compare_main_theorem(int d, int g, int m, int n, int w_max,
                                   const Cache* cache = nullptr,
                                   const RankPolicy& policy = {});

struct RefEntry {
  int g = 0, N = 0;
  std::map<int, int> dims;  // degree -> dim of H_c^k(M_{g,N})
  std::string source;
};
const std::vector<RefEntry>& reference_table();
const RefEntry& reference_lookup(int g, int N);  // throws not_in_table_error

// dims of H^*(RGraphs_d(m,n))_g predicted by the reference table:
// H^k = H_c^{k - m + d(2g-2+m+n)}(M_{g,m+n}).
std::map<int, int> expected_rgraphs_dims(int d, int g, int m, int n);

std::string report_json_lines(const CohomologyReport& r);
std::string report_text(const CohomologyReport& r);
std::string compare_json_lines(const CompareReport& r);
std::string compare_text(const CompareReport& r);

}  // namespace rgc
