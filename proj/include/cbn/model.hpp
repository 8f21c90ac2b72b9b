#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbn/distribution.hpp"
#include "cbn/graph.hpp"

namespace cbn {

/// Conditional probability table of one node: Pr(node = T | row) for every
/// assignment of the parent set, indexed canonically. Rows may be missing
/// while a model is under construction; validate_gbn reports them.
struct Cpt {
    std::string node;
    VariableSet parents;
    std::vector<std::optional<Rational>> rows;

    Cpt() = default;
    /// All rows left missing.
    Cpt(std::string node, VariableSet parents);
    Cpt(std::string node, VariableSet parents, std::vector<Rational> rows);

    /// Throws InvalidArgument if the row is absent or out of range.
    const Rational& prob_true(std::uint64_t parent_index) const;
    /// Pr(node = value | parents = parent_index).
    Rational prob(bool value, std::uint64_t parent_index) const;

    bool operator==(const Cpt&) const = default;
};

/// A generalized Bayesian network: a possibly cyclic graph, a CPT for every
/// node with parents, and a joint distribution iota over the initial nodes.
///
/// Construction does not validate; call validate_gbn or require_valid.
class Gbn {
public:
    Gbn() = default;
    Gbn(DiGraph graph, std::map<std::string, Cpt> cpts, VariableSet iota_variables,
        std::vector<Rational> iota_values);
    Gbn(DiGraph graph, std::map<std::string, Cpt> cpts, const JointDistribution& iota);

    const DiGraph& graph() const { return graph_; }
    const VariableSet& variables() const { return graph_.nodes(); }
    const std::map<std::string, Cpt>& cpts() const { return cpts_; }
    /// Throws InvalidArgument if the node carries no CPT.
    const Cpt& cpt(std::string_view node) const;

    const VariableSet& iota_variables() const { return iota_variables_; }
    const std::vector<Rational>& iota_values() const { return iota_values_; }
    /// iota as a checked distribution; throws InvalidArgument if malformed.
    JointDistribution iota() const;

    bool operator==(const Gbn&) const = default;

private:
    DiGraph graph_;
    std::map<std::string, Cpt> cpts_;
    VariableSet iota_variables_;
    std::vector<Rational> iota_values_;
};

enum class IssueKind {
    MissingCpt,
    UnexpectedCpt,
    ParentMismatch,
    MissingCptRow,
    OutOfRange,
    NotNormalized,
    IotaDomainMismatch,
};

std::string to_string(IssueKind kind);

struct ValidationIssue {
    /// Offending node, or "" for iota-level issues.
    std::string node;
    IssueKind kind;
    std::string detail;
};

/// Empty iff g is a well-formed GBN.
std::vector<ValidationIssue> validate_gbn(const Gbn& g);

/// Throws InvalidArgument describing the first issue, if any.
void require_valid(const Gbn& g);

}  // namespace cbn
