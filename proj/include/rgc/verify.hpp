#pragma once

#include <map>
#include <string>

#include "rgc/differential.hpp"

namespace rgc {

// Memoizing differential: each canonical generator is expanded once.  A
// verification sweep over a slice reuses the expansions of the shared image
// generators, which is where almost all the work sits.
class DeltaCache {
 public:
  DeltaCache(FamilySpec f, int K = 0) : f_(f), K_(K) {}

  const GraphVector& delta(const std::string& key) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GraphVector d = differential(f_, decode_key(f_, key), K_);
    return cache_.emplace(key, std::move(d)).first->second;
  }

  GraphVector delta(const GraphVector& v) {
    GraphVector out;
    out.fam = f_;
    for (auto& [k, c] : v.coef) {
      for (auto& [k2, c2] : delta(k).coef) out.add(k2, c * c2);
    }
    return out;
  }

  size_t size() const { return cache_.size(); }
  const FamilySpec& fam() const { return f_; }

 private:
  FamilySpec f_;
  int K_;
  std::map<std::string, GraphVector> cache_;
};

struct D2Report {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;  // offending generator key
};

// delta^2 on every basis element of the given slice, by direct expansion.
template <typename Keys>
D2Report d2_check(DeltaCache& dc, const Keys& basis) {
  D2Report rep;
  for (const std::string& key : basis) {
    const GraphVector& d1 = dc.delta(key);
    GraphVector d2 = dc.delta(d1);
    ++rep.checked;
    if (!d2.empty()) {
      if (!rep.failed) rep.first_failure = key;
      ++rep.failed;
    }
  }
  return rep;
}

}  // namespace rgc
