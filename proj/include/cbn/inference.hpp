#pragma once

#include <string>
#include <vector>

#include "cbn/distribution.hpp"
#include "cbn/model.hpp"

namespace cbn {

/// Largest variable count for the bounded independence enumerations.
inline constexpr std::size_t kMaxIndependenceEnumerationVariables = 8;

/// (x _|_ y | z) with pairwise disjoint sets.
struct IndependenceTriple {
    VariableSet x;
    VariableSet y;
    VariableSet z;

    /// Throws InvalidArgument unless the sets are pairwise disjoint.
    void check_disjoint() const;
    std::string to_string() const;

    bool operator==(const IndependenceTriple&) const = default;
    auto operator<=>(const IndependenceTriple&) const = default;
};

/// Standard BN semantics: iota(b_Init) * prod_X Pr(b_X | b_Pre(X)).
/// Throws CyclicGraphError if the graph has a cycle.
JointDistribution chain_rule_dist(const Gbn& g);

/// True iff mu(a | b, c) = mu(a | c) for all a, b, c with mu(b, c) > 0.
bool check_independence(const JointDistribution& mu, const IndependenceTriple& t);

/// All d-separation triples of g with singleton x < y and any z over the
/// remaining nodes. CapacityError above kMaxIndependenceEnumerationVariables.
std::vector<IndependenceTriple> enumerate_dsep_triples(const DiGraph& g);

/// Checks that every triple of enumerate_dsep_triples(close(G)) holds in
/// chain_rule_dist(g).
bool dsep_implies_indep_check(const Gbn& g);

}  // namespace cbn
