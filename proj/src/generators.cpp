#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <map>

#include "dcalc/complex.hpp"
#include "dcalc/error.hpp"

namespace dcalc {
namespace {

using Edges = std::vector<std::pair<int, int>>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Graph hexagonal(int radius, bool hole) {
  // Axial coordinates of the triangular lattice, ordered by ring then position.
  std::vector<std::array<int, 2>> cells;
  for (int q = -radius; q <= radius; ++q)
    for (int r = -radius; r <= radius; ++r)
      if (std::abs(q + r) <= radius && !(hole && q == 0 && r == 0)) cells.push_back({q, r});
  auto ring = [](const std::array<int, 2>& p) { return std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[0] + p[1])}); };
  std::stable_sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) { return ring(a) < ring(b); });
  std::map<std::array<int, 2>, int> id;
  for (std::size_t i = 0; i < cells.size(); ++i) id[cells[i]] = static_cast<int>(i);
  Edges e;
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, -1}};
  for (const auto& p : cells)
    for (const auto& s : steps) {
      const auto it = id.find({p[0] + s[0], p[1] + s[1]});
      if (it != id.end()) e.emplace_back(id[p], it->second);
    }
  return Graph(static_cast<int>(cells.size()), std::move(e));
}

Graph square_of_cycle(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, (i + 2) % n);
  }
  return Graph(n, std::move(e));
}

}  // namespace

Graph generate(Family family, int n) {
  Edges e;
  switch (family) {
    case Family::Complete:
      require(n >= 1, "complete graph needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
      return Graph(n, std::move(e));
    case Family::Cycle:
      require(n >= 3, "cycle graph needs n >= 3");
      for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      return Graph(n, std::move(e));
    case Family::Wheel:
      require(n >= 4, "wheel graph needs n >= 4");
      for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % n + 1);
      }
      return Graph(n + 1, std::move(e));
    case Family::Star:
      require(n >= 1, "star graph needs n >= 1");
      for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
      return Graph(n + 1, std::move(e));
    case Family::Linear:
      require(n >= 0, "linear graph needs n >= 0");
      for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
      return Graph(n + 1, std::move(e));
    case Family::Path:
      require(n >= 1, "path graph needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return Graph(n, std::move(e));
    case Family::Octahedron:
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          if (!(i % 2 == 0 && j == i + 1)) e.emplace_back(i, j);
      return Graph(6, std::move(e));
    case Family::Icosahedron:
      // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
      for (int i = 1; i <= 5; ++i) {
        const int next = i % 5 + 1;
        e.emplace_back(0, i);
        e.emplace_back(i, next);
        e.emplace_back(5 + i, 5 + next);
        e.emplace_back(11, 5 + i);
        e.emplace_back(i, 5 + i);
        e.emplace_back(i, 5 + next);
      }
      return Graph(12, std::move(e));
    case Family::Cube:
      for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
          if ((v & bit) == 0) e.emplace_back(v, v | bit);
      return Graph(8, std::move(e));
    case Family::Mobius:
      require(n >= 7 && n % 2 == 1, "Moebius strip needs odd n >= 7");
      return square_of_cycle(n);
    case Family::Band:
      require(n >= 8 && n % 2 == 0, "band needs even n >= 8");
      return square_of_cycle(n);
    case Family::HexPatch:
      require(n >= 1, "hexagonal patch needs radius >= 1");
      return hexagonal(n, false);
    case Family::Annulus:
      require(n >= 2, "annulus needs radius >= 2");
      return hexagonal(n, true);
  }
  throw DomainError("unknown graph family");
}

Graph generate(std::string_view text) {
  static const std::map<std::string, std::pair<Family, int>, std::less<>> families = {
      {"complete", {Family::Complete, -1}},   {"cycle", {Family::Cycle, -1}},
      {"wheel", {Family::Wheel, -1}},         {"star", {Family::Star, -1}},
      {"linear", {Family::Linear, -1}},       {"path", {Family::Path, -1}},
      {"octahedron", {Family::Octahedron, 0}}, {"icosahedron", {Family::Icosahedron, 0}},
      {"cube", {Family::Cube, 0}},            {"mobius", {Family::Mobius, 9}},
      {"band", {Family::Band, 10}},           {"hexpatch", {Family::HexPatch, 2}},
      {"annulus", {Family::Annulus, 2}},
  };
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto it = families.find(name);
  if (it == families.end()) throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
  int n = it->second.second;
  if (colon != std::string_view::npos) {
    const std::string_view arg = text.substr(colon + 1);
    const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || end != arg.data() + arg.size() || arg.empty())
      throw ParseError("bad graph parameter '" + std::string(arg) + "'", colon + 1);
  } else if (n < 0) {
    throw ParseError("graph family '" + std::string(name) + "' needs a parameter, e.g. " + std::string(name) + ":5",
                     text.size());
  }
  return generate(it->second.first, n);
}

}  // namespace dcalc
