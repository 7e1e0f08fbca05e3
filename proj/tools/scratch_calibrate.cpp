// Convention calibration: sweep word-order conventions and check delta^2 = 0
// on small slices of every differential family, for both parities of d.
#include <cstdio>
#include <map>

#include "rgc/differential.hpp"
#include "rgc/enumerate.hpp"

using namespace rgc;

static GraphVector delta(const FamilySpec& f, const GraphVector& v) {
  return differential(f, v);
}

static bool check_family(const FamilySpec& f, int g, int m, int n, int wmax,
                         int* checked) {
  for (int w = 0; w <= wmax; ++w) {
    SliceSpec s{f, g, m, n, w};
    for (auto& key : generate_basis(s)) {
      GraphVector x;
      x.fam = f;
      x.add(key, Rat(1));
      GraphVector dd = delta(f, delta(f, x));
      ++*checked;
      if (!dd.empty()) {
        std::printf("    d2 != 0: family=%s d=%d (g,m,n,w)=(%d,%d,%d,%d) terms=%zu\n",
                    f.name().c_str(), f.d, g, m, n, w, dd.coef.size());
        return false;
      }
    }
  }
  return true;
}

int main() {
  struct Conv {
    bool inner_first, subst_inner_first, drop_front, split_graded;
  };
  std::vector<Conv> convs;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) convs.push_back({!!a, !!b, !!c, !!e});

  for (auto& cv : convs) {
    conv::inner_word_first = cv.inner_first;
    conv::subst_inner_first = cv.subst_inner_first;
    conv::drop_to_front = cv.drop_front;
    conv::directed_split_graded = cv.split_graded;
    bool ok = true;
    int checked = 0;
    for (int d = 0; d <= 3 && ok; ++d) {
      ok = ok && check_family({Family::RGraphs, d}, 0, 1, 2, 2, &checked);
      ok = ok && check_family({Family::RGraphs, d}, 0, 2, 1, 2, &checked);
      ok = ok && check_family({Family::RGraphs, d}, 1, 1, 0, 2, &checked);
      ok = ok && check_family({Family::RGraphs, d}, 1, 1, 1, 2, &checked);
      ok = ok && check_family({Family::RGraphsOr, d}, 0, 1, 1, 2, &checked);
      ok = ok && check_family({Family::RGraphsOr, d}, 0, 1, 2, 2, &checked);
      ok = ok && check_family({Family::RGraphsOr, d}, 1, 1, 1, 2, &checked);
      ok = ok && check_family({Family::ORGraphs, d}, 0, 1, 1, 3, &checked);
      ok = ok && check_family({Family::ORGraphs, d}, 0, 1, 2, 2, &checked);
      ok = ok && check_family({Family::ORGraphs, d}, 1, 1, 1, 2, &checked);
    }
    std::printf("conv inner_first=%d subst_inner_first=%d drop_front=%d split_graded=%d : %s (%d gens)\n",
                cv.inner_first, cv.subst_inner_first, cv.drop_front, cv.split_graded,
                ok ? "PASS" : "fail", checked);
  }
  return 0;
}
