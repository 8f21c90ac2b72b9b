#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbn/graph.hpp"
#include "cbn/linalg.hpp"
#include "cbn/model.hpp"
#include "cbn/semantics.hpp"

namespace cbn {

/// Default limit on |C| for cutset chains (2^16 states).
inline constexpr std::size_t kMaxCutsetSize = 16;

/// The C-dissection of a GBN: every cutset node Y gets a fresh copy Y' that
/// takes over Y's incoming edges and CPT, and the initial distribution
/// becomes iota (x) gamma.
struct DissectedGbn {
    Gbn gbn;
    VariableSet cutset;
    VariableSet primed;
    /// Y -> Y'
    std::map<std::string, std::string> prime_of;
};

/// Throws NotACutsetError, or InvalidArgument if gamma is not over exactly
/// the cutset or the cutset contains an initial node.
DissectedGbn dissect(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma);

/// Next(B, C, gamma): the dissection's joint restricted to (V \ C) u C',
/// with primed copies renamed back.
JointDistribution next_dist(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma);

/// Extend(B, C, gamma): the dissection's joint restricted to V.
JointDistribution extend(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma);

/// Structure of a finite Markov chain with an exact transition matrix.
struct MarkovAnalysis {
    Matrix p;
    SccDecomposition scc;
    /// Indices into scc.components of the bottom SCCs, in condensation order.
    std::vector<std::size_t> bsccs;
    /// Period of each BSCC.
    std::vector<std::size_t> periods;
    /// Long-run frequency vector of each BSCC, zero outside it.
    std::vector<Vector> lrf;
    /// absorption(s, k): probability of reaching BSCC k from state s.
    Matrix absorption;
};

/// Throws InvalidArgument if p is not square and row-stochastic.
MarkovAnalysis analyze_chain(const Matrix& p);

/// Probability of reaching each BSCC from gamma0 (same order as bsccs).
Vector reach_probs(const MarkovAnalysis& chain, const Vector& gamma0);

/// sum_D reach(D) * lrf_D: the Cesaro limit of gamma0 P^n.
Vector reach_weighted_lrf(const MarkovAnalysis& chain, const Vector& gamma0);

struct CutsetChain {
    VariableSet cutset;
    MarkovAnalysis analysis;

    const Matrix& p() const { return analysis.p; }
    std::size_t num_states() const { return analysis.p.rows(); }
    /// Members of BSCC k as assignments over the cutset.
    std::vector<Assignment> bscc_states(std::size_t k) const;
};

/// P(b, c) = Next(B, C, Dirac(b))(c). CapacityError if |C| > max_cutset_size.
CutsetChain cutset_mc(const Gbn& g, const VariableSet& cutset, std::size_t max_cutset_size = kMaxCutsetSize);

/// Stationary distributions of the chain: Unique, or Infinite with the BSCC
/// lrf vectors as extreme points.
SemanticsFamily stationary_set(const CutsetChain& chain);

Vector reach_probs(const CutsetChain& chain, const JointDistribution& gamma0);

JointDistribution mcs(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0);
JointDistribution mcs(const Gbn& g, const CutsetChain& chain, const JointDistribution& gamma0);

struct LimStatus {
    bool defined = false;
    std::optional<JointDistribution> value;
    /// Periods of the periodic BSCCs reached from gamma0 (when undefined).
    std::vector<std::size_t> periods;
};

/// Limit of gamma0 P^n, extended to V, when the sequence converges.
LimStatus lim(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0);
LimStatus lim(const Gbn& g, const CutsetChain& chain, const JointDistribution& gamma0);

/// Same value as mcs.
JointDistribution lim_avg(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0);

enum class Cardinality { One, Infinite };
std::string to_string(Cardinality c);

/// One iff the cutset chain has a single BSCC.
Cardinality semantics_cardinality(const Gbn& g, const VariableSet& cutset);

/// Every CPT entry and every iota value lies in (0,1). An iota over the
/// empty set is exempt.
bool is_smooth(const Gbn& g);

}  // namespace cbn
