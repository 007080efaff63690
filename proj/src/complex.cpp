#include "dcalc/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dcalc/error.hpp"

namespace dcalc {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count)
    throw DomainError("label count does not match vertex count");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw DomainError("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& n : adjacency_) std::sort(n.begin(), n.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

bool Graph::adjacent(int a, int b) const {
  const auto& n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> local(static_cast<std::size_t>(vertex_count_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= vertex_count_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    if (local[v] >= 0) throw DomainError("repeated vertex in induced subgraph");
    local[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges_)
    if (local[a] >= 0 && local[b] >= 0) e.emplace_back(local[a], local[b]);
  std::vector<std::string> lab;
  if (!labels_.empty())
    for (int v : vertices) lab.push_back(labels_[v]);
  return Graph(static_cast<int>(vertices.size()), std::move(e), std::move(lab));
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count_), false);
  for (int s = 0; s < vertex_count_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : adjacency_[comp[i]])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return vertex_count_ > 0 && components().size() == 1; }

// ---------------------------------------------------------------------------

ComplexOfGraph::ComplexOfGraph(Graph g, std::optional<int> max_dim) : graph_(std::move(g)) {
  if (max_dim && *max_dim < 0) throw DomainError("max_dim must be nonnegative");
  const std::size_t cap = max_dim ? static_cast<std::size_t>(*max_dim) + 1 : SIZE_MAX;

  // Depth-first clique extension: a clique grows only by vertices larger than
  // its last one that are adjacent to every member.
  std::vector<int> clique;
  auto extend = [&](auto&& self, const std::vector<int>& candidates) -> void {
    const std::size_t k = clique.size() - 1;
    if (simplices_.size() <= k) simplices_.resize(k + 1);
    simplices_[k].push_back(clique);
    if (clique.size() == cap) {
      if (!candidates.empty()) complete_ = false;
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int w = candidates[i];
      const auto& nw = graph_.neighbors(w);
      std::vector<int> next;
      std::set_intersection(candidates.begin() + static_cast<long>(i) + 1, candidates.end(), nw.begin(), nw.end(),
                            std::back_inserter(next));
      clique.push_back(w);
      self(self, next);
      clique.pop_back();
    }
  };
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const auto& nv = graph_.neighbors(v);
    std::vector<int> larger(std::upper_bound(nv.begin(), nv.end(), v), nv.end());
    clique = {v};
    extend(extend, larger);
  }

  index_.resize(simplices_.size());
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    std::sort(simplices_[k].begin(), simplices_[k].end());
    for (std::size_t i = 0; i < simplices_[k].size(); ++i) index_[k].emplace(simplices_[k][i], i);
  }
}

std::size_t ComplexOfGraph::count(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return simplices_[k].size();
}

std::vector<std::size_t> ComplexOfGraph::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& s : simplices_) f.push_back(s.size());
  return f;
}

const std::vector<Simplex>& ComplexOfGraph::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k > top_degree()) return empty;
  return simplices_[k];
}

std::optional<std::size_t> ComplexOfGraph::find(std::span<const int> sorted) const {
  if (sorted.empty()) return std::nullopt;
  const int k = static_cast<int>(sorted.size()) - 1;
  if (k > top_degree()) return std::nullopt;
  const auto it = index_[k].find(Simplex(sorted.begin(), sorted.end()));
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

std::size_t ComplexOfGraph::index_of(std::span<const int> sorted) const {
  if (auto i = find(sorted)) return *i;
  std::string s;
  for (int v : sorted) s += (s.empty() ? "" : "-") + std::to_string(v);
  throw DomainError("not a simplex: " + s);
}

std::size_t ComplexOfGraph::total() const { return offset(top_degree() + 1); }

std::size_t ComplexOfGraph::offset(int k) const {
  std::size_t o = 0;
  for (int j = 0; j < k && j <= top_degree(); ++j) o += simplices_[j].size();
  return o;
}

int sort_with_sign(std::vector<int>& tuple) {
  int sign = 1;
  // Insertion sort counts transpositions.
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) return 0;
  return sign;
}

// ---------------------------------------------------------------------------

UnitSphere unit_sphere(const ComplexOfGraph& c, int v) {
  UnitSphere s;
  s.to_parent = c.graph().neighbors(v);
  s.graph = c.graph().induced(s.to_parent);
  return s;
}

namespace {

long euler_of(const ComplexOfGraph& c) {
  long chi = 0;
  for (int k = 0; k <= c.top_degree(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.count(k));
  return chi;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(static_cast<int>(g.neighbors(v).size()));
  return d;
}

enum class SphereType { Point, TwoPoints, Path, Cycle, Disc, TwoSphere, Other };

SphereType sphere_type(const Graph& g, Shape wanted) {
  switch (wanted) {
    case Shape::Curve:
      if (g.edge_count() != 0) return SphereType::Other;
      if (g.vertex_count() == 1) return SphereType::Point;
      if (g.vertex_count() == 2) return SphereType::TwoPoints;
      return SphereType::Other;
    case Shape::Surface:
      if (is_path_graph(g)) return SphereType::Path;
      if (is_cycle_graph(g, 4)) return SphereType::Cycle;
      return SphereType::Other;
    case Shape::Solid:
      if (is_disc(g)) return SphereType::Disc;
      if (is_two_sphere(g)) return SphereType::TwoSphere;
      return SphereType::Other;
    case Shape::Other:
      break;
  }
  return SphereType::Other;
}

bool is_boundary_type(SphereType t) {
  return t == SphereType::Point || t == SphereType::Path || t == SphereType::Disc;
}

}  // namespace

bool is_path_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || static_cast<int>(g.edge_count()) != n - 1 || !g.connected()) return false;
  const auto d = degrees(g);
  return *std::max_element(d.begin(), d.end()) <= 2;
}

bool is_cycle_graph(const Graph& g, int min) {
  const int n = g.vertex_count();
  if (n < std::max(min, 3) || static_cast<int>(g.edge_count()) != n || !g.connected()) return false;
  const auto d = degrees(g);
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

bool is_disc(const Graph& g) {
  if (!g.connected()) return false;
  const ComplexOfGraph c(g);
  const Classification k = classify(c);
  return k.shape == Shape::Surface && !k.boundary.empty() && euler_of(c) == 1;
}

bool is_two_sphere(const Graph& g) {
  if (!g.connected()) return false;
  const ComplexOfGraph c(g);
  const Classification k = classify(c);
  return k.shape == Shape::Surface && k.boundary.empty() && euler_of(c) == 2;
}

Classification classify(const ComplexOfGraph& c) {
  Classification out;
  const int n = c.graph().vertex_count();
  if (n == 0) return out;
  std::vector<Graph> spheres;
  for (int v = 0; v < n; ++v) spheres.push_back(unit_sphere(c, v).graph);

  for (Shape shape : {Shape::Curve, Shape::Surface, Shape::Solid}) {
    std::vector<SphereType> types;
    bool ok = true;
    for (const Graph& s : spheres) {
      const SphereType t = sphere_type(s, shape);
      if (t == SphereType::Other) {
        ok = false;
        break;
      }
      types.push_back(t);
    }
    if (!ok) continue;
    out.shape = shape;
    for (int v = 0; v < n; ++v) (is_boundary_type(types[v]) ? out.boundary : out.interior).push_back(v);
    if (shape == Shape::Surface)
      out.flat = std::all_of(out.interior.begin(), out.interior.end(),
                             [&](int v) { return spheres[v].vertex_count() == 6; });
    return out;
  }
  return out;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Curve:
      return "curve";
    case Shape::Surface:
      return "surface";
    case Shape::Solid:
      return "solid";
    case Shape::Other:
      break;
  }
  return "other";
}

// ---------------------------------------------------------------------------

OrientedRegion orient_region(const ComplexOfGraph& c, int k, std::span<const std::size_t> region) {
  if (k < 1) throw DomainError("orientation needs degree at least 1");
  OrientedRegion out;
  out.region.degree = k;
  out.boundary.degree = k - 1;
  if (region.empty()) return out;

  const auto& simp = c.simplices(k);
  std::vector<std::size_t> cells(region.begin(), region.end());
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) throw DomainError("repeated simplex in region");
  for (std::size_t s : cells)
    if (s >= simp.size()) throw DomainError("simplex index out of range");

  // face -> list of (position in cells, induced sign (-1)^i)
  std::map<std::size_t, std::vector<std::pair<std::size_t, int>>> faces;
  for (std::size_t p = 0; p < cells.size(); ++p) {
    const Simplex& s = simp[cells[p]];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      faces[c.index_of(f)].emplace_back(p, i % 2 == 0 ? 1 : -1);
    }
  }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(cells.size());  // (neighbor, face)
  for (const auto& [f, inc] : faces) {
    if (inc.size() > 2) throw NonOrientable("face shared by more than two simplices of the region");
    if (inc.size() == 2) {
      adj[inc[0].first].emplace_back(inc[1].first, f);
      adj[inc[1].first].emplace_back(inc[0].first, f);
    }
  }
  auto induced = [&](std::size_t f, std::size_t p) {
    for (const auto& [q, e] : faces.at(f))
      if (q == p) return e;
    return 0;
  };

  std::vector<int> sign(cells.size(), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& [q, f] : adj[p]) {
      // Neighbors induce opposite orientations on the shared face.
      const int want = -sign[p] * induced(f, p) * induced(f, q);
      if (sign[q] == 0) {
        sign[q] = want;
        queue.push_back(q);
      } else if (sign[q] != want) {
        throw NonOrientable("orientation clash across a shared face");
      }
    }
  }
  if (std::find(sign.begin(), sign.end(), 0) != sign.end()) throw DomainError("region is not connected");

  out.region.simplices = cells;
  out.region.signs = sign;
  for (const auto& [f, inc] : faces)
    if (inc.size() == 1) {
      out.boundary.simplices.push_back(f);
      out.boundary.signs.push_back(sign[inc[0].first] * inc[0].second);
    }
  return out;
}

Orientation walk_orientation(const ComplexOfGraph& c, std::span<const int> walk) {
  Orientation o;
  o.degree = 1;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const int a = walk[i], b = walk[i + 1];
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int e[2] = {lo, hi};
    const auto idx = c.find(e);
    if (!idx) throw DomainError("walk step " + std::to_string(a) + "->" + std::to_string(b) + " is not an edge");
    o.simplices.push_back(*idx);
    o.signs.push_back(a < b ? 1 : -1);
  }
  return o;
}

// ---------------------------------------------------------------------------

LevelCurve level_curve(const ComplexOfGraph& c, std::span<const double> f, double cut) {
  const int n = c.graph().vertex_count();
  if (static_cast<int>(f.size()) != n) throw DomainError("function length does not match vertex count");
  std::vector<double> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("function is not injective");
  if (std::binary_search(sorted.begin(), sorted.end(), cut)) throw DomainError("cut value equals a function value");

  LevelCurve out;
  const auto& edges = c.simplices(1);
  std::vector<int> local(edges.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double a = f[edges[e][0]] - cut, b = f[edges[e][1]] - cut;
    if ((a < 0) != (b < 0)) {
      local[e] = static_cast<int>(out.edges.size());
      out.edges.push_back(e);
    }
  }
  std::vector<std::pair<int, int>> links;
  for (const Simplex& t : c.simplices(2)) {
    std::vector<int> hit;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const int e[2] = {t[i], t[j]};
      const int l = local[c.index_of(e)];
      if (l >= 0) hit.push_back(l);
    }
    // A triangle crossed by the level set has exactly two crossing edges.
    if (hit.size() == 2) links.emplace_back(hit[0], hit[1]);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  out.graph = Graph(static_cast<int>(out.edges.size()), std::move(links));
  return out;
}

}  // namespace dcalc
