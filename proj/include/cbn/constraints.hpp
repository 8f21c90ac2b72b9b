#pragma once

#include <string_view>
#include <vector>

#include "cbn/inference.hpp"
#include "cbn/linalg.hpp"
#include "cbn/model.hpp"
#include "cbn/semantics.hpp"

namespace cbn {

/// Homogeneous CPT equations over the joint (one column per full assignment
/// in canonical order). Rows: each non-initial node in canonical order with
/// its parent rows in index order, then one iota equation per initial
/// assignment (omitted when there are no initial nodes, where it would
/// repeat the next row), then sum mu = 1.
LinearSystem build_cpt_system(const Gbn& g);

/// One marginal equation mu(X=T) = sum_c mu(c) Pr(X=T | c) per non-initial
/// node, then iota and normalization rows as in build_cpt_system.
LinearSystem build_wcpt_system(const Gbn& g);

/// Classifies the Cpt or WCpt solution polytope. Other kinds throw InvalidArgument.
SemanticsFamily solve_family(const Gbn& g, SemanticsKind kind);

enum class ConsistencyMode { Strong, Weak };

/// Throws InvalidArgument if the node is unknown or initial, or mu is not
/// over the GBN's variables.
bool check_consistency(const JointDistribution& mu, const Gbn& g, std::string_view node, ConsistencyMode mode);

/// Strong consistency at every non-initial node, mu restricted to the
/// initial nodes equals iota, and mu(b) mu(b_W) = mu(b_{X u W}) mu(b_{U u W})
/// for every triple (X _|_ U | W) and every assignment b.
bool check_cpt_i_member(const JointDistribution& mu, const Gbn& g, const std::vector<IndependenceTriple>& triples);

/// Intersection of the cutset-chain semantics over the given cutsets. Every
/// node must lie outside at least one cutset. Unsupported if any family is
/// infinite.
SemanticsFamily cpt_i_via_cutsets(const Gbn& g, const std::vector<VariableSet>& cutsets);

}  // namespace cbn
