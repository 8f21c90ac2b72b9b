#include "cbn/chain.hpp"

#include <algorithm>
#include <numeric>

#include "cbn/errors.hpp"
#include "cbn/inference.hpp"
#include "detail/chain_rule_eval.hpp"

namespace cbn {

namespace {

void check_cutset_preconditions(const Gbn& g, const VariableSet& cutset) {
    require_valid(g);
    if (!cutset.is_subset_of(g.variables())) {
        throw InvalidArgument("cutset " + cutset.to_string() + " is not a subset of " + g.variables().to_string());
    }
    if (!is_cutset(g.graph(), cutset)) throw NotACutsetError(cutset.to_string() + " is not a cutset");
    const auto shared = set_intersection(cutset, g.graph().initial_nodes());
    if (!shared.empty()) {
        throw InvalidArgument("cutset " + cutset.to_string() + " contains initial nodes " + shared.to_string());
    }
}

std::map<std::string, std::string> unprime_map(const DissectedGbn& d) {
    std::map<std::string, std::string> out;
    for (const auto& [plain, primed] : d.prime_of) out[primed] = plain;
    return out;
}

}  // namespace

DissectedGbn dissect(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma) {
    check_cutset_preconditions(g, cutset);
    if (gamma.variables() != cutset) {
        throw InvalidArgument("gamma is over " + gamma.variables().to_string() + ", cutset is " + cutset.to_string());
    }
    DissectedGbn out;
    out.cutset = cutset;
    const auto& vars = g.variables();
    std::vector<std::string> all(vars.names());
    std::vector<std::string> primed;
    for (const auto& y : cutset) {
        std::string name = y + "'";
        while (vars.contains(name) || std::find(primed.begin(), primed.end(), name) != primed.end()) name += "'";
        primed.push_back(name);
        all.push_back(name);
        out.prime_of[y] = name;
    }
    out.primed = VariableSet(primed);

    std::vector<Edge> edges;
    for (const auto& [from, to] : g.graph().edges()) {
        edges.emplace_back(from, cutset.contains(to) ? out.prime_of[to] : to);
    }
    std::map<std::string, Cpt> cpts;
    for (const auto& [node, cpt] : g.cpts()) {
        if (cutset.contains(node)) {
            const auto& name = out.prime_of[node];
            cpts[name] = Cpt{name, cpt.parents};
            cpts[name].rows = cpt.rows;
        } else {
            cpts[node] = cpt;
        }
    }
    out.gbn = Gbn(DiGraph(VariableSet(all), edges), std::move(cpts), product(g.iota(), gamma));
    if (!out.gbn.graph().is_acyclic()) throw Error("internal: dissection is cyclic");
    return out;
}

JointDistribution next_dist(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma) {
    const auto d = dissect(g, cutset, gamma);
    const auto joint = chain_rule_dist(d.gbn);
    const auto kept = set_union(set_difference(g.variables(), cutset), d.primed);
    return rename_variables(restrict(joint, kept), unprime_map(d));
}

JointDistribution extend(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma) {
    const auto d = dissect(g, cutset, gamma);
    return restrict(chain_rule_dist(d.gbn), g.variables());
}

MarkovAnalysis analyze_chain(const Matrix& p) {
    const std::size_t n = p.rows();
    if (p.cols() != n) throw InvalidArgument("transition matrix is not square");
    Adjacency succ(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (p(i, j) < 0) throw InvalidArgument("negative transition probability");
            if (p(i, j) != 0) succ[i].push_back(j);
            sum += p(i, j);
        }
        if (sum != 1) throw InvalidArgument("row " + std::to_string(i) + " sums to " + to_string(sum));
    }

    MarkovAnalysis out;
    out.p = p;
    out.scc = scc_decompose(succ);
    out.bsccs = out.scc.bottom_components();

    std::vector<long> depth(n, -1);
    for (auto k : out.bsccs) {
        const auto& members = out.scc.components[k];
        // Period: gcd of depth(u) + 1 - depth(v) over edges inside the BSCC.
        std::vector<std::size_t> queue{members.front()};
        depth[members.front()] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto v : succ[u]) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        long g = 0;
        for (auto u : members) {
            for (auto v : succ[u]) g = std::gcd(g, std::labs(depth[u] + 1 - depth[v]));
        }
        out.periods.push_back(g == 0 ? 1 : static_cast<std::size_t>(g));

        Matrix restricted(members.size(), members.size());
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) restricted(a, b) = p(members[a], members[b]);
        }
        const auto space = null_space_left(restricted);
        if (space.empty() || space.dimension() != 0) throw Error("internal: BSCC stationary vector not unique");
        Vector lrf(n, Rational(0));
        for (std::size_t a = 0; a < members.size(); ++a) lrf[members[a]] = (*space.particular)[a];
        out.lrf.push_back(std::move(lrf));
    }

    // Absorption probabilities: 1 inside the BSCC, 0 in the others, and
    // h = P_TT h + P_TD 1 on the transient states T.
    const std::size_t kb = out.bsccs.size();
    out.absorption = Matrix(n, kb);
    std::vector<long> bscc_of(n, -1);
    for (std::size_t k = 0; k < kb; ++k) {
        for (auto s : out.scc.components[out.bsccs[k]]) {
            bscc_of[s] = static_cast<long>(k);
            out.absorption(s, k) = 1;
        }
    }
    std::vector<std::size_t> transient;
    std::vector<long> t_index(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (bscc_of[s] < 0) {
            t_index[s] = static_cast<long>(transient.size());
            transient.push_back(s);
        }
    }
    if (!transient.empty()) {
        const std::size_t t = transient.size();
        Matrix aug(t, t + kb);
        for (std::size_t a = 0; a < t; ++a) {
            const auto s = transient[a];
            aug(a, a) = 1;
            for (auto v : succ[s]) {
                if (t_index[v] >= 0) {
                    aug(a, static_cast<std::size_t>(t_index[v])) -= p(s, v);
                } else {
                    aug(a, t + static_cast<std::size_t>(bscc_of[v])) += p(s, v);
                }
            }
        }
        const auto pivots = rref(aug, t);
        if (pivots.size() != t) throw Error("internal: singular absorption system");
        for (std::size_t a = 0; a < t; ++a) {
            for (std::size_t k = 0; k < kb; ++k) out.absorption(transient[a], k) = aug(a, t + k);
        }
    }
    return out;
}

Vector reach_probs(const MarkovAnalysis& chain, const Vector& gamma0) {
    if (gamma0.size() != chain.p.rows()) throw InvalidArgument("gamma0 has the wrong number of states");
    return vec_mat(gamma0, chain.absorption);
}

Vector reach_weighted_lrf(const MarkovAnalysis& chain, const Vector& gamma0) {
    const auto lambda = reach_probs(chain, gamma0);
    Vector out(chain.p.rows(), Rational(0));
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] == 0) continue;
        for (std::size_t s = 0; s < out.size(); ++s) out[s] += lambda[k] * chain.lrf[k][s];
    }
    return out;
}

std::vector<Assignment> CutsetChain::bscc_states(std::size_t k) const {
    std::vector<Assignment> out;
    for (auto s : analysis.scc.components.at(analysis.bsccs.at(k))) out.emplace_back(cutset, s);
    return out;
}

CutsetChain cutset_mc(const Gbn& g, const VariableSet& cutset, std::size_t max_cutset_size) {
    if (cutset.size() > max_cutset_size) {
        throw CapacityError("cutset " + cutset.to_string() + " exceeds the limit of " +
                            std::to_string(max_cutset_size) + " nodes");
    }
    const auto d = dissect(g, cutset, uniform(cutset));
    const detail::ChainRuleEvaluator eval(d.gbn);
    const auto iota = g.iota();
    const auto& init_d = eval.initial();
    const Projection from_iota(init_d, iota.variables());
    const Projection from_cutset(init_d, cutset);
    const Projection to_primed(d.gbn.variables(), d.primed);
    const auto unprime = unprime_map(d);

    const std::size_t states = cutset.num_assignments();
    Matrix p(states, states);
    for (std::uint64_t b = 0; b < states; ++b) {
        std::vector<Rational> row(states, Rational(0));
        const std::uint64_t cut_bits = from_cutset.embed(b);
        for (std::uint64_t i = 0; i < iota.size(); ++i) {
            eval.accumulate(from_iota.embed(i) | cut_bits, iota[i], to_primed, row);
        }
        const auto next = rename_variables(JointDistribution(d.primed, std::move(row)), unprime);
        for (std::uint64_t c = 0; c < states; ++c) p(b, c) = next[c];
    }
    return CutsetChain{cutset, analyze_chain(p)};
}

SemanticsFamily stationary_set(const CutsetChain& chain) {
    SemanticsFamily out;
    out.kind = SemanticsKind::McC;
    out.variables = chain.cutset;
    for (const auto& v : chain.analysis.lrf) out.members.emplace_back(chain.cutset, v);
    out.status = out.members.size() == 1 ? FamilyStatus::Unique : FamilyStatus::Infinite;
    out.notes = "extreme points are the long-run frequencies of the " + std::to_string(out.members.size()) +
                " bottom SCCs";
    return out;
}

Vector reach_probs(const CutsetChain& chain, const JointDistribution& gamma0) {
    if (gamma0.variables() != chain.cutset) {
        throw InvalidArgument("gamma0 is over " + gamma0.variables().to_string() + ", cutset is " +
                              chain.cutset.to_string());
    }
    return reach_probs(chain.analysis, Vector(gamma0.probabilities().begin(), gamma0.probabilities().end()));
}

JointDistribution mcs(const Gbn& g, const CutsetChain& chain, const JointDistribution& gamma0) {
    reach_probs(chain, gamma0);  // domain check
    const Vector v(gamma0.probabilities().begin(), gamma0.probabilities().end());
    return extend(g, chain.cutset, JointDistribution(chain.cutset, reach_weighted_lrf(chain.analysis, v)));
}

JointDistribution mcs(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0) {
    return mcs(g, cutset_mc(g, cutset), gamma0);
}

LimStatus lim(const Gbn& g, const CutsetChain& chain, const JointDistribution& gamma0) {
    const auto lambda = reach_probs(chain, gamma0);
    const auto& a = chain.analysis;
    std::vector<std::size_t> periodic;
    std::size_t d = 1;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] > 0 && a.periods[k] > 1) {
            periodic.push_back(a.periods[k]);
            d = std::lcm(d, a.periods[k]);
        }
    }
    LimStatus out;
    if (periodic.empty()) {
        out.defined = true;
        out.value = mcs(g, chain, gamma0);
        return out;
    }
    // gamma0 P^(md) converges to l0 as m grows; the full sequence converges
    // iff l0 is a fixed point of P.
    const Vector v(gamma0.probabilities().begin(), gamma0.probabilities().end());
    const auto l0 = reach_weighted_lrf(analyze_chain(mat_pow(a.p, d)), v);
    if (vec_mat(l0, a.p) == l0) {
        out.defined = true;
        out.value = extend(g, chain.cutset, JointDistribution(chain.cutset, l0));
    } else {
        out.periods = std::move(periodic);
    }
    return out;
}

LimStatus lim(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0) {
    return lim(g, cutset_mc(g, cutset), gamma0);
}

JointDistribution lim_avg(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0) {
    return mcs(g, cutset, gamma0);
}

std::string to_string(Cardinality c) { return c == Cardinality::One ? "1" : "infinite"; }

Cardinality semantics_cardinality(const Gbn& g, const VariableSet& cutset) {
    return cutset_mc(g, cutset).analysis.bsccs.size() == 1 ? Cardinality::One : Cardinality::Infinite;
}

bool is_smooth(const Gbn& g) {
    require_valid(g);
    for (const auto& [node, cpt] : g.cpts()) {
        for (const auto& row : cpt.rows) {
            if (!in_open_unit_interval(*row)) return false;
        }
    }
    if (g.iota_variables().empty()) return true;
    for (const auto& v : g.iota_values()) {
        if (!in_open_unit_interval(v)) return false;
    }
    return true;
}

}  // namespace cbn
