#pragma once

#include <vector>

#include "cbn/chain.hpp"
#include "cbn/distribution.hpp"
#include "cbn/graph.hpp"
#include "cbn/linalg.hpp"
#include "cbn/model.hpp"

namespace cbn {

/// Largest graph accepted by dsep_by_paths.
inline constexpr std::size_t kMaxPathEnumerationNodes = 7;

/// gamma_0..gamma_N with gamma_{i+1} = Next(B, C, gamma_i) restricted to C.
struct IterationTrace {
    VariableSet cutset;
    std::vector<JointDistribution> steps;
    /// cesaro[i] = average of steps[0..i].
    std::vector<JointDistribution> cesaro;
    Rational tolerance;
    /// Total variation between the last two steps is within tolerance.
    bool converged = false;
    /// Same for the last two Cesaro averages.
    bool cesaro_converged = false;
};

/// Exact iteration of Next, computed directly from the dissection (without
/// the transition matrix). Requires steps >= 1.
IterationTrace iterate_next(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0,
                            std::size_t steps, const Rational& tolerance = Rational(1, 1000000000));

/// d-separation by listing every simple undirected path and applying the
/// chain, fork and collider rules to it. CapacityError above
/// kMaxPathEnumerationNodes nodes.
bool dsep_by_paths(const DiGraph& g, const VariableSet& xs, const VariableSet& ys, const VariableSet& zs);

/// Exact Cesaro average (1/(N+1)) sum_{i<=N} gamma0 P^i.
Vector power_iteration(const Matrix& p, const Vector& gamma0, std::size_t n);
JointDistribution power_iteration(const CutsetChain& chain, const JointDistribution& gamma0, std::size_t n);

/// Cesaro averages at each of the ascending checkpoints, from a single pass.
std::vector<Vector> power_iteration_checkpoints(const Matrix& p, const Vector& gamma0,
                                                const std::vector<std::size_t>& checkpoints);

}  // namespace cbn
