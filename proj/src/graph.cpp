#include "cbn/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cbn/errors.hpp"

namespace cbn {

namespace {

VariableSet nodes_at(const VariableSet& nodes, const std::vector<std::size_t>& positions) {
    std::vector<std::string> names;
    names.reserve(positions.size());
    for (auto p : positions) names.push_back(nodes[p]);
    return VariableSet(std::move(names));
}

// Kahn's algorithm on the subgraph induced by `keep`.
bool acyclic_without(const Adjacency& succ, const std::vector<bool>& removed) {
    const std::size_t n = succ.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        if (removed[u]) continue;
        for (auto v : succ[u]) {
            if (!removed[v]) ++indegree[v];
        }
    }
    std::vector<std::size_t> stack;
    std::size_t alive = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (removed[u]) continue;
        ++alive;
        if (indegree[u] == 0) stack.push_back(u);
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        ++seen;
        for (auto v : succ[u]) {
            if (!removed[v] && --indegree[v] == 0) stack.push_back(v);
        }
    }
    return seen == alive;
}

std::vector<bool> mask_of(const DiGraph& g, const VariableSet& subset) {
    std::vector<bool> mask(g.size(), false);
    for (const auto& name : subset) mask[g.nodes().position_of(name)] = true;
    return mask;
}

}  // namespace

DiGraph::DiGraph(VariableSet nodes, const std::vector<Edge>& edges)
    : nodes_(std::move(nodes)), succ_(nodes_.size()), pred_(nodes_.size()) {
    for (const auto& [from, to] : edges) {
        auto u = nodes_.find(from);
        auto v = nodes_.find(to);
        if (!u || !v) throw InvalidArgument("edge " + from + "->" + to + " references an unknown node");
        succ_[*u].push_back(*v);
        pred_[*v].push_back(*u);
    }
    for (auto* adj : {&succ_, &pred_}) {
        for (auto& list : *adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }
}

std::vector<Edge> DiGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < succ_.size(); ++u) {
        for (auto v : succ_[u]) out.emplace_back(nodes_[u], nodes_[v]);
    }
    return out;
}

std::size_t DiGraph::num_edges() const {
    std::size_t count = 0;
    for (const auto& list : succ_) count += list.size();
    return count;
}

bool DiGraph::has_edge(std::string_view from, std::string_view to) const {
    const auto& list = succ_[nodes_.position_of(from)];
    return std::binary_search(list.begin(), list.end(), nodes_.position_of(to));
}

VariableSet DiGraph::parents(std::string_view node) const { return nodes_at(nodes_, pred_[nodes_.position_of(node)]); }

VariableSet DiGraph::children(std::string_view node) const { return nodes_at(nodes_, succ_[nodes_.position_of(node)]); }

VariableSet DiGraph::initial_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < pred_.size(); ++v) {
        if (pred_[v].empty()) out.push_back(v);
    }
    return nodes_at(nodes_, out);
}

VariableSet DiGraph::reachable_from(std::string_view node) const {
    const std::size_t n = size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack(succ_[nodes_.position_of(node)]);
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        if (seen[u]) continue;
        seen[u] = true;
        for (auto v : succ_[u]) {
            if (!seen[v]) stack.push_back(v);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) out.push_back(v);
    }
    return nodes_at(nodes_, out);
}

bool DiGraph::is_acyclic() const { return acyclic_without(succ_, std::vector<bool>(size(), false)); }

std::vector<std::size_t> SccDecomposition::bottom_components() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < bottom.size(); ++k) {
        if (bottom[k]) out.push_back(k);
    }
    return out;
}

// Iterative Tarjan. Tarjan emits components sinks-first; they are reversed
// at the end so that sources come first.
SccDecomposition scc_decompose(const Adjacency& successors) {
    constexpr auto kUnvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = successors.size();
    std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> found;
    std::size_t counter = 0;

    struct Frame {
        std::size_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& frame = call.back();
            const auto u = frame.node;
            if (frame.next_edge < successors[u].size()) {
                const auto v = successors[u][frame.next_edge++];
                if (index[v] == kUnvisited) {
                    index[v] = lowlink[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.push_back({v, 0});
                } else if (on_stack[v]) {
                    lowlink[u] = std::min(lowlink[u], index[v]);
                }
                continue;
            }
            if (lowlink[u] == index[u]) {
                std::vector<std::size_t> component;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != u);
                std::sort(component.begin(), component.end());
                found.push_back(std::move(component));
            }
            call.pop_back();
            if (!call.empty()) {
                auto parent = call.back().node;
                lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
            }
        }
    }

    SccDecomposition out;
    out.components.assign(found.rbegin(), found.rend());
    out.component_of.assign(n, 0);
    for (std::size_t k = 0; k < out.components.size(); ++k) {
        for (auto v : out.components[k]) out.component_of[v] = k;
    }
    out.bottom.assign(out.components.size(), true);
    for (std::size_t u = 0; u < n; ++u) {
        for (auto v : successors[u]) {
            if (out.component_of[u] != out.component_of[v]) out.bottom[out.component_of[u]] = false;
        }
    }
    return out;
}

SccDecomposition scc_decompose(const DiGraph& g) { return scc_decompose(g.successors()); }

bool is_cutset(const DiGraph& g, const VariableSet& cutset) {
    return acyclic_without(g.successors(), mask_of(g, cutset));
}

std::vector<VariableSet> enumerate_cutsets(const DiGraph& g, bool minimal_only) {
    const std::size_t n = g.size();
    if (n > kMaxCutsetEnumerationNodes) {
        throw CapacityError("cutset enumeration is limited to " + std::to_string(kMaxCutsetEnumerationNodes) +
                            " nodes, graph has " + std::to_string(n));
    }
    std::vector<std::uint64_t> minimal;  // bit p set <=> node position p in the set
    std::vector<VariableSet> out;
    auto contains_known = [&](std::uint64_t mask) {
        return std::any_of(minimal.begin(), minimal.end(), [&](auto m) { return (mask & m) == m; });
    };

    // Combinations of size k in lexicographic order of positions, which is
    // lexicographic order of the sorted name lists.
    std::vector<std::size_t> combo;
    for (std::size_t k = 0; k <= n; ++k) {
        combo.resize(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (auto p : combo) mask |= std::uint64_t{1} << p;
            bool cut;
            bool known = contains_known(mask);
            if (known) {
                cut = true;
            } else {
                std::vector<bool> removed(n, false);
                for (auto p : combo) removed[p] = true;
                cut = acyclic_without(g.successors(), removed);
                if (cut) minimal.push_back(mask);
            }
            if (cut && (!minimal_only || !known)) out.push_back(nodes_at(g.nodes(), combo));

            // advance to the next combination
            std::size_t i = k;
            while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

DiGraph close(const DiGraph& g) {
    auto edges = g.edges();
    const auto init = g.initial_nodes();
    for (const auto& a : init) {
        for (const auto& b : init) {
            if (a != b) edges.emplace_back(a, b);
        }
    }
    return DiGraph(g.nodes(), edges);
}

DiGraph cut_restrict(const DiGraph& g, const VariableSet& cutset) {
    if (!cutset.is_subset_of(g.nodes())) {
        throw InvalidArgument("cutset " + cutset.to_string() + " is not a subset of " + g.nodes().to_string());
    }
    if (!is_cutset(g, cutset)) throw NotACutsetError(cutset.to_string() + " is not a cutset");
    std::vector<Edge> kept;
    for (auto& e : g.edges()) {
        if (!cutset.contains(e.second)) kept.push_back(std::move(e));
    }
    return DiGraph(g.nodes(), kept);
}

// Reachability over (node, direction) states ("Bayes ball"). A state is
// entered either from a child (moving up) or from a parent (moving down).
bool d_separated(const DiGraph& g, const VariableSet& xs, const VariableSet& ys, const VariableSet& zs) {
    for (const auto* s : {&xs, &ys, &zs}) {
        if (!s->is_subset_of(g.nodes())) throw InvalidArgument(s->to_string() + " contains unknown nodes");
    }
    if (!xs.is_disjoint_from(ys) || !xs.is_disjoint_from(zs) || !ys.is_disjoint_from(zs)) {
        throw InvalidArgument("d-separation sets must be pairwise disjoint");
    }
    const std::size_t n = g.size();
    const auto& succ = g.successors();
    const auto& pred = g.predecessors();
    const auto observed = mask_of(g, zs);

    // Nodes with a descendant-or-self in zs: colliders there are open.
    std::vector<bool> opens_collider(observed);
    {
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < n; ++v) {
            if (observed[v]) stack.push_back(v);
        }
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto p : pred[v]) {
                if (!opens_collider[p]) {
                    opens_collider[p] = true;
                    stack.push_back(p);
                }
            }
        }
    }

    enum Dir : std::size_t { kUp = 0, kDown = 1 };
    std::vector<bool> visited(2 * n, false);
    std::deque<std::pair<std::size_t, Dir>> queue;
    for (const auto& x : xs) queue.emplace_back(g.nodes().position_of(x), kUp);
    const auto targets = mask_of(g, ys);

    while (!queue.empty()) {
        auto [v, dir] = queue.front();
        queue.pop_front();
        if (visited[2 * v + dir]) continue;
        visited[2 * v + dir] = true;
        if (!observed[v] && targets[v]) return false;

        if (dir == kUp) {
            if (observed[v]) continue;
            for (auto p : pred[v]) queue.emplace_back(p, kUp);
            for (auto c : succ[v]) queue.emplace_back(c, kDown);
        } else {
            if (!observed[v]) {
                for (auto c : succ[v]) queue.emplace_back(c, kDown);
            }
            if (opens_collider[v]) {
                for (auto p : pred[v]) queue.emplace_back(p, kUp);
            }
        }
    }
    return true;
}

}  // namespace cbn
