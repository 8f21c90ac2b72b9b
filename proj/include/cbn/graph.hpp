#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cbn/variables.hpp"

namespace cbn {

using Edge = std::pair<std::string, std::string>;
using Adjacency = std::vector<std::vector<std::size_t>>;

/// Largest node count accepted by enumerate_cutsets.
inline constexpr std::size_t kMaxCutsetEnumerationNodes = 20;

/// Directed graph over named nodes. Node indices follow the canonical order
/// of the node set. Self-loops are allowed and count as cycles of length 1.
class DiGraph {
public:
    DiGraph() = default;
    DiGraph(VariableSet nodes, const std::vector<Edge>& edges);

    const VariableSet& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    /// Sorted by (source, target).
    std::vector<Edge> edges() const;
    std::size_t num_edges() const;
    bool has_edge(std::string_view from, std::string_view to) const;

    /// Pre(X)
    VariableSet parents(std::string_view node) const;
    VariableSet children(std::string_view node) const;
    /// Init(G): nodes without parents.
    VariableSet initial_nodes() const;
    /// Post*(X): nodes reachable from X by a path with at least one edge.
    VariableSet reachable_from(std::string_view node) const;

    bool is_acyclic() const;

    const Adjacency& successors() const { return succ_; }
    const Adjacency& predecessors() const { return pred_; }

    bool operator==(const DiGraph&) const = default;

private:
    VariableSet nodes_;
    Adjacency succ_;
    Adjacency pred_;
};

struct SccDecomposition {
    /// Components in topological order of the condensation (sources first);
    /// members of each component ascending.
    std::vector<std::vector<std::size_t>> components;
    /// bottom[k]: no edge leaves components[k].
    std::vector<bool> bottom;
    /// component_of[v]: index into components.
    std::vector<std::size_t> component_of;

    std::vector<std::size_t> bottom_components() const;
};

SccDecomposition scc_decompose(const Adjacency& successors);
SccDecomposition scc_decompose(const DiGraph& g);

/// True iff every cycle of g contains a node of `cutset`.
bool is_cutset(const DiGraph& g, const VariableSet& cutset);

/// All (or all inclusion-minimal) cutsets ordered by size, then
/// lexicographically. Throws CapacityError above kMaxCutsetEnumerationNodes.
std::vector<VariableSet> enumerate_cutsets(const DiGraph& g, bool minimal_only);

/// Close(G): adds both edges between every pair of distinct initial nodes.
DiGraph close(const DiGraph& g);

/// G[C]: drops every edge whose target lies in the cutset. Throws
/// NotACutsetError if `cutset` is not a cutset of g.
DiGraph cut_restrict(const DiGraph& g, const VariableSet& cutset);

/// d-separation of node sets xs and ys given zs (pairwise disjoint). Works on
/// cyclic graphs; colliders are open iff they or one of their descendants
/// lies in zs.
bool d_separated(const DiGraph& g, const VariableSet& xs, const VariableSet& ys, const VariableSet& zs);

}  // namespace cbn
