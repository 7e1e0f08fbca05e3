#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rgc/graph_vector.hpp"

namespace rgc {

struct SparseIntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, Rat>> trip;  // sorted by (row, col), unique
};

struct image_outside_codomain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column j holds the coefficients of apply(domain[j]) in the codomain basis.
SparseIntMatrix matrix_of_map(
    const std::vector<std::string>& domain, const std::vector<std::string>& codomain,
    const std::function<GraphVector(const std::string&)>& apply);

// Rank over Q by fraction-free elimination with big integers.
int rank_exact(const SparseIntMatrix& M);

// Rank over F_p; a lower bound on the rational rank.  Throws
// std::invalid_argument when p is not prime and bad_prime_error when some
// denominator vanishes mod p.
struct bad_prime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
int rank_mod(const SparseIntMatrix& M, uint64_t p);

// Default policy: modular rank at two distinct random 30-bit primes,
// escalating to the exact rank on disagreement.
struct RankPolicy {
  uint64_t seed = 0x5eed5eedULL;
  int primes = 2;
};
int rank_auto(const SparseIntMatrix& M, const RankPolicy& policy = {});

uint64_t random_prime_30bit(uint64_t seed, int index);

void write_matrix(std::ostream& os, const SparseIntMatrix& M);
SparseIntMatrix read_matrix(std::istream& is);

}  // namespace rgc
