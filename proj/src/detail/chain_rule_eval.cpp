#include "detail/chain_rule_eval.hpp"

namespace cbn::detail {

ChainRuleEvaluator::ChainRuleEvaluator(const Gbn& g)
    : vars_(g.variables()), init_(g.iota_variables()), init_proj_(vars_, init_) {
    const auto rest = set_difference(vars_, init_);
    for (const auto& node : rest) {
        const auto& cpt = g.cpt(node);
        Factor f{position_bit(vars_.position_of(node), vars_.size()), Projection(vars_, cpt.parents), {}};
        for (std::uint64_t r = 0; r < cpt.rows.size(); ++r) f.prob_true.push_back(cpt.prob_true(r));
        factors_.push_back(std::move(f));
    }
    Projection rest_proj(vars_, rest);
    const auto count = rest.num_assignments();
    rest_embed_.resize(count);
    for (std::uint64_t j = 0; j < count; ++j) rest_embed_[j] = rest_proj.embed(j);
}

void ChainRuleEvaluator::accumulate(std::uint64_t init_index, const Rational& weight, const Projection& target,
                                    std::vector<Rational>& out) const {
    if (weight == 0) return;
    const std::uint64_t base = init_proj_.embed(init_index);
    Rational p;
    for (auto bits : rest_embed_) {
        const std::uint64_t b = base | bits;
        p = weight;
        for (const auto& f : factors_) {
            const auto& t = f.prob_true[f.parents(b)];
            if (b & f.bit) {
                p *= t;
            } else {
                p *= 1 - t;
            }
            if (p == 0) break;
        }
        if (p != 0) out[target(b)] += p;
    }
}

}  // namespace cbn::detail
