#pragma once

#include <vector>

#include "cbn/model.hpp"

namespace cbn::detail {

/// Chain-rule evaluation of an acyclic GBN, one initial assignment at a time.
/// The GBN must already be valid; its iota variables are its initial nodes.
class ChainRuleEvaluator {
public:
    explicit ChainRuleEvaluator(const Gbn& g);

    const VariableSet& variables() const { return vars_; }
    const VariableSet& initial() const { return init_; }

    /// out[target(b)] += weight * prod_X Pr(b_X | b_Pre(X)) for every full
    /// assignment b extending the initial assignment `init_index`.
    void accumulate(std::uint64_t init_index, const Rational& weight, const Projection& target,
                    std::vector<Rational>& out) const;

private:
    struct Factor {
        std::uint64_t bit;
        Projection parents;
        std::vector<Rational> prob_true;
    };
    VariableSet vars_;
    VariableSet init_;
    std::vector<Factor> factors_;
    Projection init_proj_;
    std::vector<std::uint64_t> rest_embed_;  // rest index -> full index bits
};

}  // namespace cbn::detail
