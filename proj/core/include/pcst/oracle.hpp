#ifndef PCST_ORACLE_HPP
#define PCST_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pcst/dual.hpp"
#include "pcst/instance.hpp"

namespace pcst {

struct OracleResult {
  Rational value;
  VertexSet witness;
};

/// Size caps for the exhaustive routines. PCST_MAX_ORACLE_N, when set,
/// overrides both.
struct OracleLimits {
  std::size_t max_vertices = 20;
  std::size_t max_dual_vertices = 12;  // |V'| for exhaustive_dual_check

  static OracleLimits from_environment();
};

/// min c(S) + π(V \ S) over connected S ∋ r, by enumerating subsets of V'.
/// Ties keep the first witness in binary counting order.
OracleResult brute_pcst(const Instance& inst, const OracleLimits& limits = OracleLimits::from_environment());

/// min c(S) over connected S ∋ r with profit(S) >= quota; nullopt if none.
std::optional<OracleResult> brute_quota(const Instance& inst, const Rational& quota,
                                        const OracleLimits& limits = OracleLimits::from_environment());

/// Checks the reduced-dual penalty constraint at every S ⊆ V' and the cost
/// constraint at every vertex. Works for any family, laminar or not.
std::vector<DualViolation> exhaustive_dual_check(const ReducedInstance& reduced,
                                                 const DualSolution& dual,
                                                 const OracleLimits& limits = OracleLimits::from_environment());

}  // namespace pcst

#endif  // PCST_ORACLE_HPP
