#ifndef PCST_TESTS_FIXTURES_HPP
#define PCST_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcst/generators.hpp"
#include "pcst/instance.hpp"

namespace pcst::fixture {

struct V {
  std::string id;
  long cost;
  long penalty;
  long profit = -1;  // -1: none
};

inline Instance make(const std::vector<V>& vs, const std::string& root,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  bool profits = !vs.empty() && vs.front().profit >= 0;
  std::vector<Instance::VertexData> data;
  for (const auto& v : vs) {
    std::optional<Rational> p;
    if (profits) p = Rational(v.profit);
    data.push_back({v.id, Rational(v.cost), Rational(v.penalty), p});
  }
  return Instance::create(std::move(data), root, edges);
}

inline std::vector<std::string> ids(const Instance& inst, const VertexSet& set) {
  std::vector<std::string> out;
  for (Vertex v : set) out.push_back(inst.id(v));
  return out;
}

inline VertexSet set_of(const Instance& inst, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(*inst.index_of(n));
  normalize(out);
  return out;
}

// Small independent reference: grow connected sets from the root by DFS over
// frontier choices, visiting each connected rooted set exactly once.
struct Reference {
  const Instance& inst;
  Rational best;
  bool found = false;
  std::vector<bool> in;

  explicit Reference(const Instance& g) : inst(g), in(g.size(), false) {}

  Rational value() const {
    Rational total = 0;
    for (Vertex v = 0; v < inst.size(); ++v) total += in[v] ? inst.cost(v) : inst.penalty(v);
    return total;
  }

  // Classic enumeration of connected induced subgraphs containing a seed:
  // extend by a candidate or ban it for the rest of this branch.
  void grow(std::vector<Vertex> candidates, std::vector<bool> banned) {
    Rational here = value();
    if (!found || here < best) {
      best = here;
      found = true;
    }
    while (!candidates.empty()) {
      Vertex v = candidates.back();
      candidates.pop_back();
      if (banned[v] || in[v]) continue;
      in[v] = true;
      std::vector<Vertex> next = candidates;
      for (Vertex w : inst.neighbours(v)) {
        if (!in[w] && !banned[w]) next.push_back(w);
      }
      grow(next, banned);
      in[v] = false;
      banned[v] = true;
    }
  }

  static Rational solve(const Instance& g) {
    Reference ref(g);
    ref.in[g.root()] = true;
    std::vector<Vertex> start(g.neighbours(g.root()).begin(), g.neighbours(g.root()).end());
    ref.grow(start, std::vector<bool>(g.size(), false));
    return ref.best;
  }
};

inline RandomSpec spec(unsigned n, Rational p, std::uint64_t seed, unsigned max_cost = 10,
                       unsigned max_penalty = 10, unsigned max_profit = 0) {
  RandomSpec s;
  s.n = n;
  s.edge_prob = p;
  s.seed = seed;
  s.max_cost = max_cost;
  s.max_penalty = max_penalty;
  s.max_profit = max_profit;
  return s;
}

// Terminals (cheap, high penalty) and Steiner vertices (expensive) on a
// random tree plus a few chords; the root's neighbours are made expensive so
// that components grow, merge and meet before touching the root.
inline Instance structured(std::uint64_t seed, unsigned n) {
  std::mt19937_64 rng(seed);
  std::vector<Instance::VertexData> vs;
  vs.push_back({"r", 0, 0, std::nullopt});
  for (unsigned i = 1; i < n; ++i) {
    bool terminal = rng() % 2;
    long c = terminal ? static_cast<long>(rng() % 3) : 1 + static_cast<long>(rng() % 20);
    long p = terminal ? 1 + static_cast<long>(rng() % 20) : static_cast<long>(rng() % 3);
    vs.push_back({std::to_string(i), Rational(c), Rational(p), std::nullopt});
  }
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i < n; ++i) edges.insert({static_cast<Vertex>(rng() % i), i});
  unsigned chords = static_cast<unsigned>(rng() % n);
  for (unsigned k = 0; k < chords; ++k) {
    Vertex a = rng() % n;
    Vertex b = rng() % n;
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : edges) {
    if (a == 0) {
      vs[b].cost = 10 + static_cast<long>(rng() % 30);
      vs[b].penalty = 0;
    }
  }
  return Instance::create(std::move(vs), Vertex{0}, {edges.begin(), edges.end()});
}

}  // namespace pcst::fixture

#endif  // PCST_TESTS_FIXTURES_HPP
