#include "dcalc/topology.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "dcalc/error.hpp"

namespace dcalc {

long euler_characteristic(const ComplexOfGraph& c) {
  if (!c.complete()) throw DomainError("complex was truncated below its top degree");
  long chi = 0;
  for (int k = 0; k <= c.top_degree(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.count(k));
  return chi;
}

long exact_rank(const IntMatrix& m) {
  const auto rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m(i, j));

  // Bareiss: every intermediate entry is a minor, so divisions are exact.
  long rank = 0;
  Integer prev = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<long> betti(const ComplexOfGraph& c) {
  if (!c.complete()) throw DomainError("complex was truncated below its top degree");
  const int top = c.top_degree();
  std::vector<long> rank(static_cast<std::size_t>(top + 1), 0);  // rank(d_k)
  for (int k = 0; k < top; ++k) rank[k] = exact_rank(exterior_derivative(c, k).entries);
  std::vector<long> b;
  for (int k = 0; k <= top; ++k) b.push_back(static_cast<long>(c.count(k)) - rank[k] - (k > 0 ? rank[k - 1] : 0));
  return b;
}

Rational curvature(const ComplexOfGraph& c, int x) {
  const ComplexOfGraph sphere(unit_sphere(c, x).graph);
  Rational k = 1;
  for (int j = 0; j <= sphere.top_degree(); ++j) {
    const Rational term(static_cast<long>(sphere.count(j)), j + 2);
    if (j % 2 == 0) {
      k -= term;
    } else {
      k += term;
    }
  }
  k.canonicalize();
  return k;
}

std::vector<Rational> curvatures(const ComplexOfGraph& c) {
  std::vector<Rational> out;
  for (int x = 0; x < c.graph().vertex_count(); ++x) out.push_back(curvature(c, x));
  return out;
}

namespace {

void require_injective(const ComplexOfGraph& c, std::span<const double> f) {
  if (static_cast<int>(f.size()) != c.graph().vertex_count()) throw DomainError("function length does not match vertex count");
  std::vector<double> s(f.begin(), f.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("function is not injective");
}

std::vector<int> lower_neighbors(const ComplexOfGraph& c, std::span<const double> f, int x) {
  std::vector<int> low;
  for (int y : c.graph().neighbors(x))
    if (f[y] < f[x]) low.push_back(y);
  return low;
}

long chi_of(const Graph& g) {
  const ComplexOfGraph k(g);
  long chi = 0;
  for (int j = 0; j <= k.top_degree(); ++j) chi += (j % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(j));
  return chi;
}

bool is_path_or_point(const Graph& g) {
  if (g.vertex_count() == 1) return true;
  return is_path_graph(g);
}

}  // namespace

int index(const ComplexOfGraph& c, std::span<const double> f, int x) {
  require_injective(c, f);
  return static_cast<int>(1 - chi_of(c.graph().induced(lower_neighbors(c, f, x))));
}

CriticalPoint classify_critical(const ComplexOfGraph& c, std::span<const double> f, int x) {
  require_injective(c, f);
  const Graph low = c.graph().induced(lower_neighbors(c, f, x));
  CriticalPoint p;
  p.index = static_cast<int>(1 - chi_of(low));
  if (low.vertex_count() == 0) {
    p.kind = CriticalKind::Minimum;
    return p;
  }
  if (is_cycle_graph(low, 3)) {
    p.kind = CriticalKind::Maximum;
    return p;
  }
  const auto comps = low.components();
  const bool all_paths = std::all_of(comps.begin(), comps.end(), [&](const std::vector<int>& v) {
    return is_path_or_point(low.induced(v));
  });
  if (comps.size() >= 2 && all_paths) {
    p.multiplicity = static_cast<int>(comps.size());
    p.kind = comps.size() == 3 ? CriticalKind::Monkey : CriticalKind::Saddle;
    return p;
  }
  p.kind = p.index == 0 ? CriticalKind::Regular : CriticalKind::Other;
  return p;
}

std::string to_string(const CriticalPoint& p) {
  switch (p.kind) {
    case CriticalKind::Regular:
      return "regular";
    case CriticalKind::Minimum:
      return "min";
    case CriticalKind::Maximum:
      return "max";
    case CriticalKind::Saddle:
      return "saddle(" + std::to_string(p.multiplicity) + ")";
    case CriticalKind::Monkey:
      return "monkey";
    case CriticalKind::Other:
      break;
  }
  return "other";
}

IndexReport poincare_hopf(const ComplexOfGraph& c, std::span<const double> f) {
  require_injective(c, f);
  IndexReport r;
  for (int x = 0; x < c.graph().vertex_count(); ++x) {
    r.points.push_back(classify_critical(c, f, x));
    r.total += r.points.back().index;
  }
  return r;
}

namespace {

// The simplices of each unit sphere as bitmasks over vertices of the graph,
// with sign (-1)^dim. chi(S^-(x)) is the signed count of masks inside the
// lower set of x.
struct SphereMasks {
  std::vector<std::vector<std::pair<std::uint32_t, int>>> cells;

  explicit SphereMasks(const ComplexOfGraph& c) {
    for (int x = 0; x < c.graph().vertex_count(); ++x) {
      const UnitSphere s = unit_sphere(c, x);
      const ComplexOfGraph k(s.graph);
      std::vector<std::pair<std::uint32_t, int>> m;
      for (int j = 0; j <= k.top_degree(); ++j)
        for (const Simplex& t : k.simplices(j)) {
          std::uint32_t mask = 0;
          for (int v : t) mask |= 1u << s.to_parent[v];
          m.emplace_back(mask, j % 2 == 0 ? 1 : -1);
        }
      cells.push_back(std::move(m));
    }
  }

  // Adds i_f(x) to acc[x] for the ordering given by rank.
  void accumulate(const std::vector<int>& rank, std::vector<long long>& acc) const {
    const int n = static_cast<int>(rank.size());
    for (int x = 0; x < n; ++x) {
      std::uint32_t below = 0;
      for (int y = 0; y < n; ++y)
        if (rank[y] < rank[x]) below |= 1u << y;
      long chi = 0;
      for (const auto& [mask, sign] : cells[x])
        if ((mask & ~below) == 0) chi += sign;
      acc[x] += 1 - chi;
    }
  }
};

}  // namespace

std::vector<Rational> index_expectation(const ComplexOfGraph& c, const ExpectationOptions& opt) {
  const int n = c.graph().vertex_count();
  if (n == 0) return {};
  if (n > 32) throw DomainError("index expectation supports at most 32 vertices");
  if (!opt.samples && n > 10) throw DomainError("exhaustive index expectation is limited to 10 vertices; use sampling");
  const SphereMasks masks(c);
  std::vector<long long> acc(static_cast<std::size_t>(n), 0);
  Integer count = 0;

  if (opt.samples) {
    if (*opt.samples == 0) throw DomainError("sample count must be positive");
    std::mt19937_64 rng(opt.seed);
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    for (std::uint64_t s = 0; s < *opt.samples; ++s) {
      std::shuffle(rank.begin(), rank.end(), rng);
      masks.accumulate(rank, acc);
    }
    count = static_cast<unsigned long>(*opt.samples);
  } else {
    // Orderings are split by the rank of vertex 0; each part is summed
    // independently, so the integer totals do not depend on scheduling.
    auto part = [&](int first, std::vector<long long>& out) {
      std::vector<int> rest;
      for (int r = 0; r < n; ++r)
        if (r != first) rest.push_back(r);
      std::vector<int> rank(static_cast<std::size_t>(n));
      do {
        rank[0] = first;
        std::copy(rest.begin(), rest.end(), rank.begin() + 1);
        masks.accumulate(rank, out);
      } while (std::next_permutation(rest.begin(), rest.end()));
    };
    std::vector<std::vector<long long>> parts(static_cast<std::size_t>(n), std::vector<long long>(acc.size(), 0));
    if (opt.parallel) {
      std::vector<std::thread> pool;
      for (int first = 0; first < n; ++first) pool.emplace_back(part, first, std::ref(parts[first]));
      for (auto& t : pool) t.join();
    } else {
      for (int first = 0; first < n; ++first) part(first, parts[first]);
    }
    for (const auto& p : parts)
      for (int x = 0; x < n; ++x) acc[x] += p[x];
    mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(n));
  }

  std::vector<Rational> out;
  for (int x = 0; x < n; ++x) out.push_back(make_rational(Integer(static_cast<long>(acc[x])), count));
  return out;
}

Rational umlaufsatz_sum(const ComplexOfGraph& c) {
  const Classification k = classify(c);
  if (k.shape != Shape::Surface || !k.flat) throw DomainError("not a flat surface");
  if (k.boundary.empty()) throw DomainError("surface has no boundary");
  Rational s = 0;
  for (int x : k.boundary) s += curvature(c, x);
  return s;
}

}  // namespace dcalc
