#include "rgc/linalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <map>
#include <ostream>
#include <istream>
#include <random>

namespace rgc {

SparseIntMatrix matrix_of_map(
    const std::vector<std::string>& domain, const std::vector<std::string>& codomain,
    const std::function<GraphVector(const std::string&)>& apply) {
  SparseIntMatrix M;
  M.rows = static_cast<int>(codomain.size());
  M.cols = static_cast<int>(domain.size());
  std::map<std::string, int> row_of;
  for (int i = 0; i < M.rows; ++i) row_of[codomain[i]] = i;
  for (int j = 0; j < M.cols; ++j) {
    GraphVector v = apply(domain[j]);
    for (auto& [key, c] : v.coef) {
      auto it = row_of.find(key);
      if (it == row_of.end())
        throw image_outside_codomain_error("image key not in codomain basis: " + key);
      M.trip.emplace_back(it->second, j, c);
    }
  }
  std::sort(M.trip.begin(), M.trip.end(),
            [](const auto& a, const auto& b) {
              return std::make_pair(std::get<0>(a), std::get<1>(a)) <
                     std::make_pair(std::get<0>(b), std::get<1>(b));
            });
  return M;
}

int rank_exact(const SparseIntMatrix& M) {
  // clear denominators row by row, then fraction-free Gaussian elimination
  int r = M.rows, c = M.cols;
  if (r == 0 || c == 0 || M.trip.empty()) return 0;
  std::vector<std::vector<BigInt>> A(r, std::vector<BigInt>(c, 0));
  std::vector<BigInt> den(r, 1);
  for (auto& [i, j, q] : M.trip) den[i] = lcm(den[i], BigInt(denominator(q)));
  for (auto& [i, j, q] : M.trip)
    A[i][j] = BigInt(numerator(q)) * (den[i] / BigInt(denominator(q)));

  int rank = 0;
  BigInt prev(1);
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (!A[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[rank]);
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j)
        A[i][j] = (A[rank][col] * A[i][j] - A[i][col] * A[rank][j]) / prev;
      A[i][col] = 0;
    }
    prev = A[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

uint64_t rat_mod(const Rat& q, uint64_t p) {
  BigInt num = numerator(q), den = denominator(q);
  uint64_t n = static_cast<uint64_t>(((num % p) + p) % p);
  uint64_t d = static_cast<uint64_t>(((den % p) + p) % p);
  if (d == 0) throw bad_prime_error("denominator vanishes mod p");
  return mulmod(n, invmod(d, p), p);
}

}  // namespace

int rank_mod(const SparseIntMatrix& M, uint64_t p) {
  {
    boost::multiprecision::cpp_int bp(p);
    std::mt19937_64 gen(12345);
    if (p < 2 || !boost::multiprecision::miller_rabin_test(bp, 25, gen))
      throw std::invalid_argument("rank_mod: p is not prime");
  }
  // incremental row reduction; rows kept as sorted (col, value) vectors
  std::vector<std::vector<std::pair<int, uint64_t>>> pivots;  // by pivot col order
  std::map<int, int> pivot_of_col;
  // gather rows
  std::map<int, std::vector<std::pair<int, uint64_t>>> rows;
  for (auto& [i, j, q] : M.trip) {
    uint64_t v = rat_mod(q, p);
    if (v) rows[i].push_back({j, v});
  }
  int rank = 0;
  std::vector<std::pair<int, uint64_t>> work, tmp;
  for (auto& [i, row] : rows) {
    work = row;
    std::sort(work.begin(), work.end());
    for (;;) {
      if (work.empty()) break;
      int lead = work.front().first;
      auto it = pivot_of_col.find(lead);
      if (it == pivot_of_col.end()) break;
      const auto& pv = pivots[it->second];
      uint64_t factor = mulmod(work.front().second, invmod(pv.front().second, p), p);
      // work -= factor * pv (merge)
      tmp.clear();
      size_t a = 0, b = 0;
      while (a < work.size() || b < pv.size()) {
        if (b == pv.size() || (a < work.size() && work[a].first < pv[b].first)) {
          tmp.push_back(work[a++]);
        } else if (a == work.size() || pv[b].first < work[a].first) {
          uint64_t sub = mulmod(factor, pv[b].second, p);
          if (sub) tmp.push_back({pv[b].first, p - sub});
          ++b;
        } else {
          uint64_t sub = mulmod(factor, pv[b].second, p);
          uint64_t nv = (work[a].second + p - sub) % p;
          if (nv) tmp.push_back({work[a].first, nv});
          ++a;
          ++b;
        }
      }
      work.swap(tmp);
    }
    if (!work.empty()) {
      pivot_of_col[work.front().first] = static_cast<int>(pivots.size());
      pivots.push_back(work);
      ++rank;
    }
  }
  return rank;
}

uint64_t random_prime_30bit(uint64_t seed, int index) {
  std::mt19937_64 gen(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  std::uniform_int_distribution<uint64_t> dist(1ULL << 29, (1ULL << 30) - 1);
  std::mt19937_64 mrgen(seed ^ 0xabcdef);
  for (;;) {
    uint64_t cand = dist(gen) | 1;
    boost::multiprecision::cpp_int bp(cand);
    if (boost::multiprecision::miller_rabin_test(bp, 25, mrgen)) return cand;
  }
}

int rank_auto(const SparseIntMatrix& M, const RankPolicy& policy) {
  if (M.trip.empty()) return 0;
  std::vector<int> ranks;
  int idx = 0;
  for (int k = 0; k < policy.primes; ++k) {
    for (;;) {
      uint64_t p = random_prime_30bit(policy.seed, idx++);
      try {
        ranks.push_back(rank_mod(M, p));
        break;
      } catch (const bad_prime_error&) {
        continue;  // denominator hit, draw another prime
      }
    }
  }
  bool agree = std::all_of(ranks.begin(), ranks.end(),
                           [&](int r) { return r == ranks.front(); });
  if (agree) return ranks.front();
  return rank_exact(M);
}

void write_matrix(std::ostream& os, const SparseIntMatrix& M) {
  os << M.rows << ' ' << M.cols << ' ' << M.trip.size() << '\n';
  for (auto& [i, j, q] : M.trip)
    os << i + 1 << ' ' << j + 1 << ' ' << rat_to_string(q) << '\n';
}

SparseIntMatrix read_matrix(std::istream& is) {
  SparseIntMatrix M;
  size_t nnz = 0;
  if (!(is >> M.rows >> M.cols >> nnz)) throw std::runtime_error("bad matrix header");
  for (size_t k = 0; k < nnz; ++k) {
    int i, j;
    std::string q;
    if (!(is >> i >> j >> q)) throw std::runtime_error("bad matrix triplet");
    M.trip.emplace_back(i - 1, j - 1, rat_from_string(q));
  }
  return M;
}

}  // namespace rgc
