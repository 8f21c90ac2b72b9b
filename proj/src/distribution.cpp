#include "cbn/distribution.hpp"

#include "cbn/errors.hpp"

namespace cbn {

JointDistribution::JointDistribution(VariableSet variables, std::vector<Rational> probabilities)
    : variables_(std::move(variables)), probabilities_(std::move(probabilities)) {
    for (auto& p : probabilities_) p.canonicalize();
    if (probabilities_.size() != variables_.num_assignments()) {
        throw InvalidArgument("distribution over " + variables_.to_string() + " needs " +
                              std::to_string(variables_.num_assignments()) + " entries, got " +
                              std::to_string(probabilities_.size()));
    }
    Rational sum = 0;
    for (const auto& p : probabilities_) {
        if (!in_unit_interval(p)) {
            throw InvalidArgument("probability " + cbn::to_string(p) + " outside [0,1]");
        }
        sum += p;
    }
    if (sum != 1) {
        throw InvalidArgument("distribution over " + variables_.to_string() + " sums to " +
                              cbn::to_string(sum));
    }
}

const Rational& JointDistribution::at(const Assignment& full) const {
    if (full.variables() != variables_) {
        throw InvalidArgument("assignment " + full.to_string() + " is not over " + variables_.to_string());
    }
    return probabilities_[full.index()];
}

std::string JointDistribution::to_string() const {
    std::string out = variables_.to_string() + " ";
    return out + cbn::to_string(std::span<const Rational>(probabilities_));
}

JointDistribution restrict(const JointDistribution& mu, const VariableSet& subset) {
    if (!subset.is_subset_of(mu.variables())) {
        throw InvalidArgument("cannot restrict " + mu.variables().to_string() + " to " + subset.to_string());
    }
    if (subset == mu.variables()) return mu;
    Projection proj(mu.variables(), subset);
    std::vector<Rational> out(subset.num_assignments(), Rational(0));
    for (std::uint64_t i = 0; i < mu.size(); ++i) {
        if (mu[i] != 0) out[proj(i)] += mu[i];
    }
    return JointDistribution(subset, std::move(out));
}

Rational partial_prob(const JointDistribution& mu, const Assignment& partial) {
    const auto& vars = partial.variables();
    if (!vars.is_subset_of(mu.variables())) {
        throw InvalidArgument("partial assignment " + partial.to_string() + " mentions variables outside " +
                              mu.variables().to_string());
    }
    Projection proj(mu.variables(), vars);
    Rational sum = 0;
    for (std::uint64_t i = 0; i < mu.size(); ++i) {
        if (proj(i) == partial.index()) sum += mu[i];
    }
    return sum;
}

JointDistribution product(const JointDistribution& mu, const JointDistribution& nu) {
    if (!mu.variables().is_disjoint_from(nu.variables())) {
        throw InvalidArgument("product of overlapping variable sets " + mu.variables().to_string() + " and " +
                              nu.variables().to_string());
    }
    VariableSet joint = set_union(mu.variables(), nu.variables());
    Projection left(joint, mu.variables());
    Projection right(joint, nu.variables());
    std::vector<Rational> out(joint.num_assignments());
    for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = mu[left(i)] * nu[right(i)];
    return JointDistribution(std::move(joint), std::move(out));
}

JointDistribution dirac(const Assignment& b) {
    std::vector<Rational> out(b.variables().num_assignments(), Rational(0));
    out[b.index()] = 1;
    return JointDistribution(b.variables(), std::move(out));
}

JointDistribution uniform(const VariableSet& variables) {
    const auto n = variables.num_assignments();
    return JointDistribution(variables, std::vector<Rational>(n, Rational(1, n)));
}

JointDistribution rename_variables(const JointDistribution& mu,
                                   const std::map<std::string, std::string>& renames) {
    std::vector<std::string> names;
    for (const auto& name : mu.variables()) {
        auto it = renames.find(name);
        names.push_back(it == renames.end() ? name : it->second);
    }
    VariableSet renamed(names);
    // Position i of the old set corresponds to renamed.position_of(names[i]).
    const std::size_t n = names.size();
    std::vector<std::uint64_t> target_bit(n);
    for (std::size_t i = 0; i < n; ++i) target_bit[i] = position_bit(renamed.position_of(names[i]), n);
    std::vector<Rational> out(mu.size());
    for (std::uint64_t i = 0; i < mu.size(); ++i) {
        std::uint64_t j = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (i & position_bit(p, n)) j |= target_bit[p];
        }
        out[j] = mu[i];
    }
    return JointDistribution(std::move(renamed), std::move(out));
}

JointDistribution mix(std::span<const Rational> weights, std::span<const JointDistribution> parts) {
    if (weights.size() != parts.size() || parts.empty()) throw InvalidArgument("mix: bad arguments");
    const auto& vars = parts.front().variables();
    std::vector<Rational> out(parts.front().size(), Rational(0));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].variables() != vars) throw InvalidArgument("mix: variable sets differ");
        if (weights[k] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[k] * parts[k][i];
    }
    return JointDistribution(vars, std::move(out));
}

}  // namespace cbn
