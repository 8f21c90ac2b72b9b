#include "cbn/oracle.hpp"

#include <functional>

#include "cbn/errors.hpp"

namespace cbn {

IterationTrace iterate_next(const Gbn& g, const VariableSet& cutset, const JointDistribution& gamma0,
                            std::size_t steps, const Rational& tolerance) {
    if (steps < 1) throw InvalidArgument("iterate_next needs at least one step");
    IterationTrace out;
    out.cutset = cutset;
    out.tolerance = tolerance;
    out.steps.push_back(gamma0);
    out.cesaro.push_back(gamma0);
    std::vector<Rational> sum(gamma0.probabilities().begin(), gamma0.probabilities().end());
    for (std::size_t i = 0; i < steps; ++i) {
        out.steps.push_back(restrict(next_dist(g, cutset, out.steps.back()), cutset));
        const auto& latest = out.steps.back();
        std::vector<Rational> avg(sum.size());
        for (std::size_t s = 0; s < sum.size(); ++s) {
            sum[s] += latest[s];
            avg[s] = sum[s] / Rational(static_cast<long>(i + 2));
        }
        out.cesaro.emplace_back(cutset, std::move(avg));
    }
    const auto n = out.steps.size();
    out.converged = total_variation(out.steps[n - 1].probabilities(), out.steps[n - 2].probabilities()) <= tolerance;
    out.cesaro_converged =
        total_variation(out.cesaro[n - 1].probabilities(), out.cesaro[n - 2].probabilities()) <= tolerance;
    return out;
}

bool dsep_by_paths(const DiGraph& g, const VariableSet& xs, const VariableSet& ys, const VariableSet& zs) {
    const std::size_t n = g.size();
    if (n > kMaxPathEnumerationNodes) {
        throw CapacityError("path enumeration is limited to " + std::to_string(kMaxPathEnumerationNodes) + " nodes");
    }
    if (!xs.is_disjoint_from(ys) || !xs.is_disjoint_from(zs) || !ys.is_disjoint_from(zs)) {
        throw InvalidArgument("d-separation sets must be pairwise disjoint");
    }
    const auto& nodes = g.nodes();
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (const auto& [from, to] : g.edges()) edge[nodes.position_of(from)][nodes.position_of(to)] = true;
    std::vector<bool> in_z(n, false), in_y(n, false);
    for (const auto& z : zs) in_z[nodes.position_of(z)] = true;
    for (const auto& y : ys) in_y[nodes.position_of(y)] = true;

    // Post*(v): nodes reachable from v by at least one edge.
    std::vector<std::vector<bool>> post(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> stack{v};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (edge[u][w] && !post[v][w]) {
                    post[v][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    auto collider_open = [&](std::size_t w) {
        if (in_z[w]) return true;
        for (std::size_t d = 0; d < n; ++d) {
            if (post[w][d] && in_z[d]) return true;
        }
        return false;
    };

    // A path is a node sequence plus, for each step, whether it follows the
    // edge forwards (w_i -> w_{i+1}) or backwards (w_i <- w_{i+1}).
    std::vector<std::size_t> path;
    std::vector<bool> forward;
    std::vector<bool> on_path(n, false);

    auto blocked = [&]() {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const bool in = forward[i - 1];   // w_{i-1} -> w_i
            const bool out = forward[i];      // w_i -> w_{i+1}
            const auto w = path[i];
            if (in && !out) {
                if (!collider_open(w)) return true;
            } else if (in_z[w]) {
                return true;  // chain or fork through an observed node
            }
        }
        return false;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t u) -> bool {
        if (path.size() > 1 && in_y[u]) return !blocked();
        for (std::size_t v = 0; v < n; ++v) {
            if (on_path[v]) continue;
            for (bool fwd : {true, false}) {
                if (fwd ? !edge[u][v] : !edge[v][u]) continue;
                path.push_back(v);
                forward.push_back(fwd);
                on_path[v] = true;
                const bool open = extend(v);
                on_path[v] = false;
                forward.pop_back();
                path.pop_back();
                if (open) return true;
            }
        }
        return false;
    };

    for (const auto& x : xs) {
        const auto start = nodes.position_of(x);
        path = {start};
        forward.clear();
        on_path.assign(n, false);
        on_path[start] = true;
        if (extend(start)) return false;
    }
    return true;
}

namespace {

mpz_class lcm_of_denominators(const Vector& v, mpz_class acc = 1) {
    for (const auto& x : v) acc = lcm(acc, mpz_class(x.get_den()));
    return acc;
}

}  // namespace

std::vector<Vector> power_iteration_checkpoints(const Matrix& p, const Vector& gamma0,
                                                const std::vector<std::size_t>& checkpoints) {
    const std::size_t s = p.rows();
    if (p.cols() != s || gamma0.size() != s) throw InvalidArgument("power_iteration: size mismatch");
    // Scale to integers: P = M / d and gamma0 = w / e, so that
    // gamma0 P^i = w M^i / (e d^i).
    mpz_class d = 1;
    for (std::size_t i = 0; i < s; ++i) d = lcm_of_denominators(p.row(i), d);
    const mpz_class e = lcm_of_denominators(gamma0);
    std::vector<mpz_class> m(s * s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            m[i * s + j] = p(i, j).get_num() * (d / p(i, j).get_den());
        }
    }
    std::vector<mpz_class> w(s), acc(s), next(s);
    for (std::size_t i = 0; i < s; ++i) {
        w[i] = gamma0[i].get_num() * (e / gamma0[i].get_den());
        acc[i] = w[i];
    }
    // acc_n / (e d^n) = sum_{i<=n} gamma_i
    mpz_class scale = e;
    std::vector<Vector> out;
    std::size_t step = 0;
    auto emit = [&] {
        Vector avg(s);
        const mpz_class denom = scale * static_cast<unsigned long>(step + 1);
        for (std::size_t i = 0; i < s; ++i) {
            avg[i] = Rational(acc[i], denom);
            avg[i].canonicalize();
        }
        out.push_back(std::move(avg));
    };
    for (auto target : checkpoints) {
        if (target < step) throw InvalidArgument("checkpoints must ascend");
        while (step < target) {
            for (std::size_t j = 0; j < s; ++j) next[j] = 0;
            for (std::size_t i = 0; i < s; ++i) {
                if (w[i] == 0) continue;
                for (std::size_t j = 0; j < s; ++j) {
                    const auto& mij = m[i * s + j];
                    if (mij != 0) mpz_addmul(next[j].get_mpz_t(), w[i].get_mpz_t(), mij.get_mpz_t());
                }
            }
            w.swap(next);
            for (std::size_t i = 0; i < s; ++i) {
                acc[i] *= d;
                acc[i] += w[i];
            }
            scale *= d;
            ++step;
        }
        emit();
    }
    return out;
}

Vector power_iteration(const Matrix& p, const Vector& gamma0, std::size_t n) {
    if (n < 1) throw InvalidArgument("power_iteration needs N >= 1");
    return power_iteration_checkpoints(p, gamma0, {n}).front();
}

JointDistribution power_iteration(const CutsetChain& chain, const JointDistribution& gamma0, std::size_t n) {
    if (gamma0.variables() != chain.cutset) throw InvalidArgument("gamma0 is not over the cutset");
    const Vector v(gamma0.probabilities().begin(), gamma0.probabilities().end());
    return JointDistribution(chain.cutset, power_iteration(chain.p(), v, n));
}

}  // namespace cbn
