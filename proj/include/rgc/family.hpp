#pragma once

#include <stdexcept>
#include <string>

namespace rgc {

// The graph properad families.  The integer parameter follows the family's
// own convention: for RGra/RGraphs edges weigh 1-d and unlabelled (white)
// vertices d; the directed families RGraOr/RGraphsOr/ORGraphs taken at
// parameter d give edges 1-d and black vertices d; ORGraphsInterp at
// parameter d gives edges -d, black vertices d+1 and unlabelled white
// vertices d.
enum class Family {
  RGra,
  RGraphs,
  RGraOr,
  RGraphsOr,
  ORGraphs,
  ORGraphsInterp,
};

std::string family_name(Family f);
Family family_from_string(const std::string& s);

struct FamilySpec {
  Family family = Family::RGraphs;
  int d = 0;

  bool directed() const {
    return family == Family::RGraOr || family == Family::RGraphsOr ||
           family == Family::ORGraphs || family == Family::ORGraphsInterp;
  }
  bool twisted() const {
    return family == Family::RGraphs || family == Family::RGraphsOr ||
           family == Family::ORGraphs || family == Family::ORGraphsInterp;
  }
  int edge_degree() const {
    return family == Family::ORGraphsInterp ? -d : 1 - d;
  }
  int black_degree() const {
    return family == Family::ORGraphsInterp ? d + 1 : d;
  }
  int white_degree() const { return d; }

  // Sign picked up when one edge direction is flipped (undirected families
  // only; in directed families directions are structural).
  int flip_sign() const { return neg_one_pow_d(); }
  int neg_one_pow_d() const { return (d % 2 == 0) ? 1 : -1; }

  bool allows_white() const {
    return family == Family::RGraphs || family == Family::ORGraphsInterp;
  }
  bool allows_black() const {
    return family == Family::RGraphsOr || family == Family::ORGraphs ||
           family == Family::ORGraphsInterp;
  }
  // RGraphs basis constraint: unlabelled white vertices at least trivalent.
  bool trivalent_whites() const { return family == Family::RGraphs; }
  bool requires_acyclic() const { return directed(); }
  bool labelled_are_sinks() const {
    return family == Family::ORGraphs || family == Family::ORGraphsInterp;
  }
  bool white_are_sinks() const { return family == Family::ORGraphsInterp; }
  // Graphs with a black vertex having no outgoing edge are zero.
  bool black_targets_zero() const { return family == Family::ORGraphs; }

  std::string name() const { return family_name(family); }

  bool operator==(const FamilySpec&) const = default;
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::RGra: return "rgra";
    case Family::RGraphs: return "rgraphs";
    case Family::RGraOr: return "rgraor";
    case Family::RGraphsOr: return "rgraphsor";
    case Family::ORGraphs: return "orgraphs";
    case Family::ORGraphsInterp: return "orgraphsinterp";
  }
  throw std::logic_error("bad family");
}

inline Family family_from_string(const std::string& s) {
  if (s == "rgra") return Family::RGra;
  if (s == "rgraphs") return Family::RGraphs;
  if (s == "rgraor") return Family::RGraOr;
  if (s == "rgraphsor") return Family::RGraphsOr;
  if (s == "orgraphs") return Family::ORGraphs;
  if (s == "orgraphsinterp") return Family::ORGraphsInterp;
  throw std::invalid_argument("unknown family: " + s);
}

}  // namespace rgc
