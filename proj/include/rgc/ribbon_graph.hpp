#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rgc/family.hpp"
#include "rgc/rational.hpp"

namespace rgc {

enum class Color : uint8_t { Lab, White, Black };

// A connected ribbon graph as a combinatorial map.  Half-edges are the
// integers 0..2E-1; each vertex stores its half-edges in counterclockwise
// rotation order (the starting point of the list is not structural).  Edges
// pair half-edges and carry a (source, target) orientation which is
// structural in directed families and orientation data in undirected ones.
// Boundaries are the cycles of the face permutation phi = sigma o iota; every
// half-edge records the label of its face, and an isolated vertex carries one
// explicit length-0 boundary.
struct RibbonGraph {
  struct Vertex {
    Color color = Color::Lab;
    int label = 0;  // 1..n when color == Lab
    std::vector<int> rot;
  };
  struct Edge {
    int src = -1;
    int tgt = -1;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<int> face_label_of_half;             // size 2E
  std::vector<std::pair<int, int>> isolated_faces;  // (vertex, label)

  int num_halves() const { return 2 * static_cast<int>(edges.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_faces() const;  // = m
  int num_labelled() const;
  int count_color(Color c) const;
};

// Derived permutation arrays of a graph.
struct GraphMaps {
  std::vector<int> sigma;      // next half-edge around its vertex
  std::vector<int> iota;       // partner across the edge
  std::vector<int> vertex_of;  // half -> vertex index
  std::vector<int> edge_of;    // half -> edge index
};
GraphMaps graph_maps(const RibbonGraph& g);

struct FaceCycle {
  int label = 0;
  std::vector<int> walk;      // half-edges of the phi-orbit; empty if isolated
  int isolated_vertex = -1;
};

// Faces sorted by label 1..m.
std::vector<FaceCycle> boundary_cycles(const RibbonGraph& g);

bool is_connected(const RibbonGraph& g);
// (2 - V + E - B)/2; throws invalid_graph_error if negative/non-integer or
// the graph is disconnected.
int genus(const RibbonGraph& g);

struct invalid_graph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural sanity of the combinatorial map itself (permutation data, label
// ranges, face-label consistency).  Throws invalid_graph_error.
void check_structure(const RibbonGraph& g);

// Family constraints; violations are returned as data, not thrown.
std::vector<std::string> validate(const RibbonGraph& g, const FamilySpec& f);

int degree(const RibbonGraph& g, const FamilySpec& f);

bool has_black_target(const RibbonGraph& g);
bool has_directed_cycle(const RibbonGraph& g);

// Orientation word: every edge and every unlabelled vertex appears exactly
// once.  Koszul parities come from the family's degree weights.
struct OriSym {
  bool is_edge = true;
  int id = 0;
  bool operator==(const OriSym&) const = default;
};
struct Orientation {
  std::vector<OriSym> word;
};

Orientation default_orientation(const RibbonGraph& g);

struct Gen {
  RibbonGraph g;
  Orientation o;
};

struct Term {
  Gen gen;
  Rat coeff;
};

// Text serialization per the workbench's file format; bit-exact round trip.
std::string serialize_graph(const Gen& gen, const FamilySpec& f, int g_genus);
Gen parse_graph(const std::string& text, FamilySpec* fam_out = nullptr);

}  // namespace rgc
