#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgc/canonical.hpp"
#include "rgc/ribbon_graph.hpp"

namespace rgc {

struct dimension_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invariants shared by all keys of a GraphVector.
struct SliceMeta {
  int m = 0, n = 0, genus = 0, deg = 0;
  bool operator==(const SliceMeta&) const = default;
};

SliceMeta slice_meta(const RibbonGraph& g, const FamilySpec& f);

// A finite formal rational combination of canonical graph generators.
struct GraphVector {
  FamilySpec fam;
  std::map<std::string, Rat> coef;

  bool empty() const { return coef.empty(); }
  size_t size() const { return coef.size(); }
  void add(const std::string& key, const Rat& c) {
    auto it = coef.find(key);
    if (it == coef.end()) {
      if (!c.is_zero()) coef.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coef.erase(it);
    }
  }
  GraphVector& operator+=(const GraphVector& o) {
    for (auto& [k, c] : o.coef) add(k, c);
    return *this;
  }
  GraphVector& operator-=(const GraphVector& o) {
    for (auto& [k, c] : o.coef) add(k, -c);
    return *this;
  }
  GraphVector& operator*=(const Rat& c) {
    if (c.is_zero()) {
      coef.clear();
      return *this;
    }
    for (auto& [k, v] : coef) v *= c;
    return *this;
  }
  bool operator==(const GraphVector& o) const { return coef == o.coef; }
};

// Canonicalize, apply signs, drop zero-by-symmetry generators, merge like
// terms.  For ORGraphs, graphs with a black target are dropped (they are zero
// in the quotient).  With check_meta, mixed (m,n,g,degree) raises
// dimension_mismatch_error.
GraphVector normalize(const FamilySpec& f, const std::vector<Term>& terms,
                      bool check_meta = true);

}  // namespace rgc
