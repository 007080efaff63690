#pragma once

// Finite simple graphs and the simplicial structure they carry: the
// k-simplices are the complete subgraphs K_{k+1}. Every simplex is stored
// as its ascending vertex tuple, which is also its reference orientation.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcalc {

using Simplex = std::vector<int>;

class Graph {
 public:
  Graph() = default;
  // Rejects loops, out-of-range endpoints and repeated edges.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted, each pair with first < second.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int a, int b) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Subgraph generated by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

class ComplexOfGraph {
 public:
  // Enumerates cliques up to dimension max_dim (all when unset).
  explicit ComplexOfGraph(Graph g, std::optional<int> max_dim = std::nullopt);

  const Graph& graph() const { return graph_; }
  // Highest degree with at least one simplex; -1 for the empty graph.
  int top_degree() const { return static_cast<int>(simplices_.size()) - 1; }
  // False when max_dim cut off higher-dimensional cliques.
  bool complete() const { return complete_; }

  std::size_t count(int k) const;
  std::vector<std::size_t> f_vector() const;
  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, std::size_t i) const { return simplices(k)[i]; }

  // Position of an ascending tuple within degree |s|-1.
  std::optional<std::size_t> find(std::span<const int> sorted) const;
  std::size_t index_of(std::span<const int> sorted) const;

  // Forms over all degrees live in one vector; degree k starts at offset(k).
  std::size_t total() const;
  std::size_t offset(int k) const;

 private:
  Graph graph_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  bool complete_ = true;
};

inline ComplexOfGraph build_complex(Graph g, std::optional<int> max_dim = std::nullopt) {
  return ComplexOfGraph(std::move(g), max_dim);
}

// Sorts an oriented tuple in place and returns the sign of the permutation
// (0 if a vertex repeats).
int sort_with_sign(std::vector<int>& tuple);

// ---------------------------------------------------------------------------
// Generators

enum class Family {
  Complete,     // K_n, n vertices
  Cycle,        // C_n, n >= 3
  Wheel,        // W_n: hub 0 and rim cycle 1..n, n >= 4
  Star,         // S_n: hub 0 and rays 1..n, n >= 1
  Linear,       // L_n: path with n+1 vertices and n edges
  Path,         // path with n vertices
  Octahedron,
  Icosahedron,
  Cube,
  Mobius,       // triangles (i,i+1,i+2) mod n, odd n >= 7 (one-sided)
  Band,         // same construction with even n >= 8 (annulus)
  HexPatch,     // triangular lattice hexagon of radius n (a flat disc)
  Annulus,      // hexagon of radius n with its center vertex removed
};

Graph generate(Family family, int n = 0);
// "cycle:7", "octahedron", "mobius" (defaults to 9), ...
Graph generate(std::string_view text);

// ---------------------------------------------------------------------------
// Unit spheres and classification

struct UnitSphere {
  Graph graph;
  std::vector<int> to_parent;  // sphere vertex -> vertex of the complex
};

UnitSphere unit_sphere(const ComplexOfGraph& c, int v);

enum class Shape { Curve, Surface, Solid, Other };

struct Classification {
  Shape shape = Shape::Other;
  std::vector<int> boundary;
  std::vector<int> interior;
  bool flat = false;  // surface whose interior spheres are all C_6
};

Classification classify(const ComplexOfGraph& c);
std::string to_string(Shape s);

// Sphere predicates used by the classifier.
bool is_path_graph(const Graph& g);            // P_m, m >= 2
bool is_cycle_graph(const Graph& g, int min);  // C_n, n >= min
bool is_disc(const Graph& g);
bool is_two_sphere(const Graph& g);

// ---------------------------------------------------------------------------
// Orientation

// Signs (+1/-1) relative to the ascending reference orientation.
struct Orientation {
  int degree = 0;
  std::vector<std::size_t> simplices;
  std::vector<int> signs;
};

struct OrientedRegion {
  Orientation region;
  Orientation boundary;  // free faces with the induced orientation
};

// Propagates a consistent orientation over a connected set of k-simplices
// (adjacent when sharing a (k-1)-face). Throws NonOrientable on a sign clash
// or a face shared by more than two region simplices, DomainError when the
// region is disconnected.
OrientedRegion orient_region(const ComplexOfGraph& c, int k, std::span<const std::size_t> region);

// Edges of the walk v0 -> v1 -> ... with signs following the direction of travel.
Orientation walk_orientation(const ComplexOfGraph& c, std::span<const int> walk);

// ---------------------------------------------------------------------------
// Level curves

struct LevelCurve {
  Graph graph;
  std::vector<std::size_t> edges;  // vertex i of the curve is edge edges[i]
};

// Edges where f - cut changes sign, joined when they share a triangle.
LevelCurve level_curve(const ComplexOfGraph& c, std::span<const double> f, double cut);

}  // namespace dcalc
