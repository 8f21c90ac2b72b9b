#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cbn/rational.hpp"
#include "cbn/variables.hpp"

namespace cbn {

/// A probability distribution over all assignments of a variable set, stored
/// densely by canonical index. Entries lie in [0,1] and sum to exactly 1.
class JointDistribution {
public:
    /// Throws InvalidArgument if the size, range, or normalization is wrong.
    JointDistribution(VariableSet variables, std::vector<Rational> probabilities);

    const VariableSet& variables() const { return variables_; }
    std::span<const Rational> probabilities() const { return probabilities_; }
    std::size_t size() const { return probabilities_.size(); }

    const Rational& operator[](std::uint64_t index) const { return probabilities_[index]; }
    /// Probability of a full assignment over exactly variables().
    const Rational& at(const Assignment& full) const;

    std::string to_string() const;

    bool operator==(const JointDistribution&) const = default;

private:
    VariableSet variables_;
    std::vector<Rational> probabilities_;
};

/// Marginal mu|_subset.
JointDistribution restrict(const JointDistribution& mu, const VariableSet& subset);

/// mu(d): total mass of all completions of the partial assignment d.
Rational partial_prob(const JointDistribution& mu, const Assignment& partial);

/// mu (x) nu over the disjoint union of their variable sets.
JointDistribution product(const JointDistribution& mu, const JointDistribution& nu);

JointDistribution dirac(const Assignment& b);

JointDistribution uniform(const VariableSet& variables);

/// Same distribution with variables renamed; names absent from `renames`
/// are kept. Entries are reordered to the new canonical order.
JointDistribution rename_variables(const JointDistribution& mu,
                                   const std::map<std::string, std::string>& renames);

/// Convex combination sum_i weights[i] * parts[i]; all parts share one variable set.
JointDistribution mix(std::span<const Rational> weights, std::span<const JointDistribution> parts);

}  // namespace cbn
