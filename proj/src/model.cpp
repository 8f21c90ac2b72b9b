#include "cbn/model.hpp"

#include "cbn/errors.hpp"

namespace cbn {

Cpt::Cpt(std::string node_, VariableSet parents_)
    : node(std::move(node_)), parents(std::move(parents_)), rows(parents.num_assignments()) {}

Cpt::Cpt(std::string node_, VariableSet parents_, std::vector<Rational> values)
    : node(std::move(node_)), parents(std::move(parents_)) {
    if (values.size() != parents.num_assignments()) {
        throw InvalidArgument("CPT of " + node + " needs " + std::to_string(parents.num_assignments()) +
                              " rows, got " + std::to_string(values.size()));
    }
    for (auto& v : values) v.canonicalize();
    rows.assign(values.begin(), values.end());
}

const Rational& Cpt::prob_true(std::uint64_t parent_index) const {
    if (parent_index >= rows.size() || !rows[parent_index]) {
        throw InvalidArgument("CPT of " + node + " has no row " + index_bitstring(parent_index, parents.size()));
    }
    return *rows[parent_index];
}

Rational Cpt::prob(bool value, std::uint64_t parent_index) const {
    const auto& p = prob_true(parent_index);
    return value ? p : Rational(1 - p);
}

Gbn::Gbn(DiGraph graph, std::map<std::string, Cpt> cpts, VariableSet iota_variables,
         std::vector<Rational> iota_values)
    : graph_(std::move(graph)),
      cpts_(std::move(cpts)),
      iota_variables_(std::move(iota_variables)),
      iota_values_(std::move(iota_values)) {
    for (auto& v : iota_values_) v.canonicalize();
    for (auto& [name, cpt] : cpts_) {
        for (auto& row : cpt.rows) {
            if (row) row->canonicalize();
        }
    }
}

Gbn::Gbn(DiGraph graph, std::map<std::string, Cpt> cpts, const JointDistribution& iota)
    : Gbn(std::move(graph), std::move(cpts), iota.variables(),
          std::vector<Rational>(iota.probabilities().begin(), iota.probabilities().end())) {}

const Cpt& Gbn::cpt(std::string_view node) const {
    auto it = cpts_.find(std::string(node));
    if (it == cpts_.end()) throw InvalidArgument("node " + std::string(node) + " has no CPT");
    return it->second;
}

JointDistribution Gbn::iota() const { return JointDistribution(iota_variables_, iota_values_); }

std::string to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::MissingCpt: return "MissingCpt";
        case IssueKind::UnexpectedCpt: return "UnexpectedCpt";
        case IssueKind::ParentMismatch: return "ParentMismatch";
        case IssueKind::MissingCptRow: return "MissingCptRow";
        case IssueKind::OutOfRange: return "OutOfRange";
        case IssueKind::NotNormalized: return "NotNormalized";
        case IssueKind::IotaDomainMismatch: return "IotaDomainMismatch";
    }
    return "Unknown";
}

std::vector<ValidationIssue> validate_gbn(const Gbn& g) {
    std::vector<ValidationIssue> issues;
    const auto& graph = g.graph();
    const auto init = graph.initial_nodes();

    for (const auto& [name, cpt] : g.cpts()) {
        if (!graph.nodes().contains(name)) {
            issues.push_back({name, IssueKind::UnexpectedCpt, "CPT for unknown node"});
        } else if (init.contains(name)) {
            issues.push_back({name, IssueKind::UnexpectedCpt, "initial node carries a CPT"});
        }
    }
    for (const auto& node : graph.nodes()) {
        if (init.contains(node)) continue;
        auto it = g.cpts().find(node);
        if (it == g.cpts().end()) {
            issues.push_back({node, IssueKind::MissingCpt, "non-initial node without CPT"});
            continue;
        }
        const auto& cpt = it->second;
        const auto expected = graph.parents(node);
        if (cpt.parents != expected) {
            issues.push_back({node, IssueKind::ParentMismatch,
                              "CPT parents " + cpt.parents.to_string() + ", graph parents " + expected.to_string()});
            continue;
        }
        if (cpt.rows.size() != expected.num_assignments()) {
            issues.push_back({node, IssueKind::MissingCptRow,
                              std::to_string(cpt.rows.size()) + " of " +
                                  std::to_string(expected.num_assignments()) + " rows present"});
            continue;
        }
        for (std::uint64_t r = 0; r < cpt.rows.size(); ++r) {
            const auto key = index_bitstring(r, expected.size());
            if (!cpt.rows[r]) {
                issues.push_back({node, IssueKind::MissingCptRow, "row '" + key + "' missing"});
            } else if (!in_unit_interval(*cpt.rows[r])) {
                issues.push_back({node, IssueKind::OutOfRange, "row '" + key + "' = " + to_string(*cpt.rows[r])});
            }
        }
    }

    if (g.iota_variables() != init) {
        issues.push_back({"", IssueKind::IotaDomainMismatch,
                          "iota over " + g.iota_variables().to_string() + ", initial nodes " + init.to_string()});
    } else if (g.iota_values().size() != init.num_assignments()) {
        issues.push_back({"", IssueKind::IotaDomainMismatch,
                          "iota has " + std::to_string(g.iota_values().size()) + " entries, expected " +
                              std::to_string(init.num_assignments())});
    } else {
        Rational sum = 0;
        bool in_range = true;
        for (std::size_t i = 0; i < g.iota_values().size(); ++i) {
            const auto& v = g.iota_values()[i];
            if (!in_unit_interval(v)) {
                in_range = false;
                issues.push_back({"", IssueKind::OutOfRange,
                                  "iota '" + index_bitstring(i, init.size()) + "' = " + to_string(v)});
            }
            sum += v;
        }
        if (in_range && sum != 1) {
            issues.push_back({"", IssueKind::NotNormalized, "iota sums to " + to_string(sum)});
        }
    }
    return issues;
}

void require_valid(const Gbn& g) {
    auto issues = validate_gbn(g);
    if (issues.empty()) return;
    const auto& first = issues.front();
    throw InvalidArgument("invalid GBN: " + to_string(first.kind) + (first.node.empty() ? "" : " at " + first.node) +
                          ": " + first.detail);
}

}  // namespace cbn
