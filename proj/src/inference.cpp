#include "cbn/inference.hpp"

#include "cbn/errors.hpp"
#include "detail/chain_rule_eval.hpp"

namespace cbn {

void IndependenceTriple::check_disjoint() const {
    if (!x.is_disjoint_from(y) || !x.is_disjoint_from(z) || !y.is_disjoint_from(z)) {
        throw InvalidArgument("triple " + to_string() + " is not pairwise disjoint");
    }
}

std::string IndependenceTriple::to_string() const {
    auto inner = [](const VariableSet& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
        return out;
    };
    return "(" + inner(x) + " _|_ " + inner(y) + " | " + inner(z) + ")";
}

JointDistribution chain_rule_dist(const Gbn& g) {
    require_valid(g);
    if (!g.graph().is_acyclic()) throw CyclicGraphError("chain rule needs an acyclic graph");

    const auto iota = g.iota();
    const detail::ChainRuleEvaluator eval(g);
    const auto& vars = g.variables();
    const Projection identity(vars, vars);
    std::vector<Rational> out(vars.num_assignments(), Rational(0));
    for (std::uint64_t i = 0; i < iota.size(); ++i) eval.accumulate(i, iota[i], identity, out);
    return JointDistribution(vars, std::move(out));
}

bool check_independence(const JointDistribution& mu, const IndependenceTriple& t) {
    t.check_disjoint();
    const auto xyz = set_union(set_union(t.x, t.y), t.z);
    if (!xyz.is_subset_of(mu.variables())) {
        throw InvalidArgument("triple " + t.to_string() + " mentions variables outside " + mu.variables().to_string());
    }
    const auto joint = restrict(mu, xyz);
    const auto yz = restrict(joint, set_union(t.y, t.z));
    const auto xz = restrict(joint, set_union(t.x, t.z));
    const auto z = restrict(joint, t.z);

    Projection to_yz(xyz, yz.variables());
    Projection to_xz(xyz, xz.variables());
    Projection to_z(xyz, t.z);
    for (std::uint64_t abc = 0; abc < joint.size(); ++abc) {
        const auto& p_bc = yz[to_yz(abc)];
        if (p_bc == 0) continue;
        // p_c >= p_bc > 0
        if (joint[abc] / p_bc != xz[to_xz(abc)] / z[to_z(abc)]) return false;
    }
    return true;
}

std::vector<IndependenceTriple> enumerate_dsep_triples(const DiGraph& g) {
    const auto& nodes = g.nodes();
    const std::size_t n = nodes.size();
    if (n > kMaxIndependenceEnumerationVariables) {
        throw CapacityError("independence enumeration is limited to " +
                            std::to_string(kMaxIndependenceEnumerationVariables) + " variables");
    }
    std::vector<IndependenceTriple> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::string> others;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i && k != j) others.push_back(nodes[k]);
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
                std::vector<std::string> zs;
                for (std::size_t k = 0; k < others.size(); ++k) {
                    if (mask & (std::uint64_t{1} << k)) zs.push_back(others[k]);
                }
                IndependenceTriple t{VariableSet{nodes[i]}, VariableSet{nodes[j]}, VariableSet(zs)};
                if (d_separated(g, t.x, t.y, t.z)) out.push_back(std::move(t));
            }
        }
    }
    return out;
}

bool dsep_implies_indep_check(const Gbn& g) {
    if (!g.graph().is_acyclic()) throw CyclicGraphError("d-separation independence check needs an acyclic graph");
    const auto triples = enumerate_dsep_triples(close(g.graph()));
    const auto mu = chain_rule_dist(g);
    for (const auto& t : triples) {
        if (!check_independence(mu, t)) return false;
    }
    return true;
}

}  // namespace cbn
