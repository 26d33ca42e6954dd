#include "pcst/generators.hpp"

#include <random>
#include <string>

#include "pcst/error.hpp"

namespace pcst {

Instance gen_counterexample(unsigned n) {
  if (n == 0) throw PreconditionError("counterexample family needs n >= 1");
  const Rational big(n);
  std::vector<Instance::VertexData> vs;
  vs.push_back({"r", 0, 0, std::nullopt});
  vs.push_back({"x", 2, 0, std::nullopt});
  for (unsigned i = 1; i <= n; ++i) vs.push_back({"u" + std::to_string(i), 0, big, std::nullopt});
  for (unsigned i = 1; i <= n; ++i) vs.push_back({"v" + std::to_string(i), big + 1, 0, std::nullopt});
  for (unsigned i = 1; i <= n; ++i) vs.push_back({"w" + std::to_string(i), 0, big, std::nullopt});

  auto u = [](unsigned i) -> Vertex { return 1 + i; };
  auto v = [n](unsigned i) -> Vertex { return 1 + n + i; };
  auto w = [n](unsigned i) -> Vertex { return 1 + 2 * n + i; };
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, u(1)}};
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) edges.emplace_back(u(i), v(j));
    edges.emplace_back(w(i), v(i));
  }
  return Instance::create(std::move(vs), Vertex{0}, std::move(edges));
}

namespace {

// Plain modulo so the mapping does not depend on the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Instance gen_random(const RandomSpec& spec) {
  if (spec.n == 0) throw PreconditionError("random instance needs n >= 1");
  if (spec.edge_prob < 0 || spec.edge_prob > 1) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  if (!spec.edge_prob.get_den().fits_ulong_p()) {
    throw PreconditionError("edge probability denominator too large");
  }
  const std::uint64_t num = spec.edge_prob.get_num().get_ui();
  const std::uint64_t den = spec.edge_prob.get_den().get_ui();

  std::mt19937_64 rng(spec.seed);
  std::vector<Instance::VertexData> vs;
  vs.reserve(spec.n);
  for (unsigned i = 0; i < spec.n; ++i) {
    Rational cost(static_cast<unsigned long>(draw(rng, spec.max_cost + 1ULL)));
    Rational penalty(static_cast<unsigned long>(draw(rng, spec.max_penalty + 1ULL)));
    std::optional<Rational> profit;
    if (spec.max_profit > 0) profit = Rational(static_cast<unsigned long>(draw(rng, spec.max_profit + 1ULL)));
    vs.push_back({std::to_string(i), std::move(cost), std::move(penalty), std::move(profit)});
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < spec.n; ++a) {
    for (Vertex b = a + 1; b < spec.n; ++b) {
      if (draw(rng, den) < num) edges.emplace_back(a, b);
    }
  }
  return Instance::create(std::move(vs), Vertex{0}, std::move(edges));
}

Instance gen_from_set_cover(unsigned element_count, const std::vector<CoverSet>& sets) {
  std::vector<bool> covered(element_count + 1, false);
  Rational big = 1;
  for (const auto& s : sets) {
    if (s.cost < 0) throw PreconditionError("negative set cost");
    big += s.cost;
    for (unsigned e : s.elements) {
      if (e == 0 || e > element_count) {
        throw PreconditionError("element " + std::to_string(e) + " out of range");
      }
      covered[e] = true;
    }
  }
  for (unsigned e = 1; e <= element_count; ++e) {
    if (!covered[e]) throw PreconditionError("element " + std::to_string(e) + " is in no set");
  }

  std::vector<Instance::VertexData> vs;
  vs.push_back({"r", 0, 0, std::nullopt});
  for (std::size_t i = 0; i < sets.size(); ++i) {
    vs.push_back({"s" + std::to_string(i + 1), sets[i].cost, 0, std::nullopt});
  }
  for (unsigned e = 1; e <= element_count; ++e) {
    vs.push_back({"e" + std::to_string(e), 0, big, std::nullopt});
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Vertex sv = 1 + i;
    edges.emplace_back(0, sv);
    VertexSet elems(sets[i].elements.begin(), sets[i].elements.end());
    normalize(elems);
    for (Vertex e : elems) edges.emplace_back(sv, sets.size() + e);
  }
  return Instance::create(std::move(vs), Vertex{0}, std::move(edges));
}

}  // namespace pcst
