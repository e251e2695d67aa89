#include "sigmat/small_graph.hpp"

#include <cstdlib>
#include <numeric>

namespace sigmat {

std::vector<int> SmallGraph::degree_list() const {
  std::vector<int> deg(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }
  return deg;
}

DegreeSequence SmallGraph::degree_sequence() const { return DegreeSequence(degree_list()); }

bool SmallGraph::is_connected() const {
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<size_t>(ru)] = rv;
      --components;
    }
  }
  return components == 1;
}

long long irr(const SmallGraph& g) {
  const std::vector<int> deg = g.degree_list();
  long long acc = 0;
  for (const auto& [u, v] : g.edges)
    acc += std::abs(deg[static_cast<size_t>(u)] - deg[static_cast<size_t>(v)]);
  return acc;
}

long long sigma(const SmallGraph& g) {
  const std::vector<int> deg = g.degree_list();
  long long acc = 0;
  for (const auto& [u, v] : g.edges) {
    const long long d = deg[static_cast<size_t>(u)] - deg[static_cast<size_t>(v)];
    acc += d * d;
  }
  return acc;
}

}  // namespace sigmat
