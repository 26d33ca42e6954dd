#include "pcst/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

#include "pcst/error.hpp"

namespace pcst {

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* env = std::getenv("PCST_MAX_ORACLE_N")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') {
      limits.max_vertices = value;
      limits.max_dual_vertices = value;
    }
  }
  return limits;
}

namespace {

// Non-root vertices as bit positions; adjacency as masks over those bits.
struct BitGraph {
  std::vector<Vertex> vertex;  // bit -> vertex
  std::vector<std::uint64_t> adj;
  std::uint64_t root_adj = 0;

  explicit BitGraph(const Instance& inst) {
    std::vector<int> bit(inst.size(), -1);
    for (Vertex v = 0; v < inst.size(); ++v) {
      if (v == inst.root()) continue;
      bit[v] = static_cast<int>(vertex.size());
      vertex.push_back(v);
    }
    adj.assign(vertex.size(), 0);
    for (auto [a, b] : inst.edges()) {
      if (a == inst.root()) {
        root_adj |= std::uint64_t{1} << bit[b];
      } else if (b == inst.root()) {
        root_adj |= std::uint64_t{1} << bit[a];
      } else {
        adj[bit[a]] |= std::uint64_t{1} << bit[b];
        adj[bit[b]] |= std::uint64_t{1} << bit[a];
      }
    }
  }

  // True iff {r} ∪ mask induces a connected subgraph.
  bool rooted_connected(std::uint64_t mask) const {
    std::uint64_t reached = root_adj & mask;
    std::uint64_t frontier = reached;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctzll(f)];
      next &= mask & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached == mask;
  }

  VertexSet with_root(std::uint64_t mask, Vertex root) const {
    VertexSet out{root};
    for (std::size_t i = 0; i < vertex.size(); ++i) {
      if (mask >> i & 1) out.push_back(vertex[i]);
    }
    normalize(out);
    return out;
  }
};

void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw LimitError(std::string(what) + ": size " + std::to_string(size) + " exceeds cap " +
                     std::to_string(cap) + " (set PCST_MAX_ORACLE_N to override)");
  }
}

}  // namespace

OracleResult brute_pcst(const Instance& inst, const OracleLimits& limits) {
  check_cap(inst.size(), std::min<std::size_t>(limits.max_vertices, 63), "brute_pcst");
  BitGraph bg(inst);
  const std::size_t m = bg.vertex.size();
  Rational all_penalty = inst.penalty_of(bg.vertex);

  std::optional<OracleResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!bg.rooted_connected(mask)) continue;
    Rational value = inst.cost(inst.root()) + all_penalty;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) value += inst.cost(bg.vertex[i]) - inst.penalty(bg.vertex[i]);
    }
    if (!best || value < best->value) best = OracleResult{value, bg.with_root(mask, inst.root())};
  }
  return *best;
}

std::optional<OracleResult> brute_quota(const Instance& inst, const Rational& quota,
                                        const OracleLimits& limits) {
  if (!inst.has_profits()) throw PreconditionError("quota oracle needs profits");
  check_cap(inst.size(), std::min<std::size_t>(limits.max_vertices, 63), "brute_quota");
  BitGraph bg(inst);
  const std::size_t m = bg.vertex.size();

  std::optional<OracleResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Rational profit = inst.profit(inst.root());
    Rational cost = inst.cost(inst.root());
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        profit += inst.profit(bg.vertex[i]);
        cost += inst.cost(bg.vertex[i]);
      }
    }
    if (profit < quota || (best && cost >= best->value)) continue;
    if (!bg.rooted_connected(mask)) continue;
    best = OracleResult{cost, bg.with_root(mask, inst.root())};
  }
  return best;
}

std::vector<DualViolation> exhaustive_dual_check(const ReducedInstance& reduced, const DualSolution& dual,
                                                 const OracleLimits& limits) {
  const Instance& g = reduced.graph();
  check_cap(reduced.non_root.size(), std::min<std::size_t>(limits.max_dual_vertices, 30),
            "exhaustive_dual_check");
  BitGraph bg(g);
  const std::size_t m = bg.vertex.size();
  std::vector<int> bit(g.size(), -1);
  for (std::size_t i = 0; i < m; ++i) bit[bg.vertex[i]] = static_cast<int>(i);

  std::vector<DualViolation> out;
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  std::vector<Rational> load(g.size());
  for (const auto& e : dual) {
    if (e.y < 0) out.push_back({DualViolation::Kind::Negative, e.set, e.y, 0});
    if (e.set.empty() || contains(e.set, g.root())) {
      out.push_back({DualViolation::Kind::Domain, e.set, e.y, 0});
      continue;
    }
    std::uint64_t mask = 0;
    for (Vertex v : e.set) mask |= std::uint64_t{1} << bit[v];
    entries.emplace_back(mask, e.y);
    for (Vertex v : g.boundary(e.set)) load[v] += e.y;
  }
  for (Vertex v : reduced.non_root) {
    if (load[v] > reduced.reduced_cost[v]) {
      out.push_back({DualViolation::Kind::Cost, {v}, load[v], reduced.reduced_cost[v]});
    }
  }
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    Rational inside = 0;
    for (const auto& [mask, y] : entries) {
      if ((mask & ~s) == 0) inside += y;
    }
    Rational cap = 0;
    for (std::uint64_t f = s; f; f &= f - 1) cap += reduced.reduced_penalty[bg.vertex[__builtin_ctzll(f)]];
    if (inside > cap) {
      out.push_back({DualViolation::Kind::Penalty, bg.with_root(s, g.root()), inside, cap});
      auto& where = out.back().where;
      where.erase(std::find(where.begin(), where.end(), g.root()));
    }
  }
  return out;
}

}  // namespace pcst
