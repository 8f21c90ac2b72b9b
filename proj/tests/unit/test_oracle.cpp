#include <doctest.h>

#include <random>

#include "cbn/chain.hpp"
#include "cbn/errors.hpp"
#include "cbn/oracle.hpp"
#include "fixtures.hpp"
#include "random_gbn.hpp"

using namespace cbn;
using namespace cbn::testing;

namespace {

Vector values(const JointDistribution& mu) { return Vector(mu.probabilities().begin(), mu.probabilities().end()); }

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("iterate_next cycles with period four") {
    const VariableSet xy{"X", "Y"};
    const JointDistribution g0(xy, {q(1, 10), q(1, 5), q(3, 10), q(2, 5)});
    const auto trace = iterate_next(two_cycle_cycle4(), xy, g0, 8);
    REQUIRE(trace.steps.size() == 9);
    CHECK(trace.steps[4] == g0);
    CHECK(trace.steps[8] == g0);
    CHECK(trace.steps[1] != g0);
    CHECK_FALSE(trace.converged);
    CHECK(trace.cesaro[3] == uniform(xy));
    CHECK_THROWS_AS(iterate_next(two_cycle_cycle4(), xy, g0, 0), InvalidArgument);
}

TEST_CASE("stationary start gives a constant trace") {
    const VariableSet xy{"X", "Y"};
    const JointDistribution s(xy, {q(48, 121), q(18, 121), q(40, 121), q(15, 121)});
    const auto trace = iterate_next(two_cycle_chain(), xy, s, 5);
    for (const auto& st : trace.steps) CHECK(st == s);
    CHECK(trace.converged);
    CHECK(trace.cesaro_converged);
}

TEST_CASE("property: trace equals powers of the chain matrix") {
    std::mt19937_64 rng(71);
    RandomGbnOptions opt;
    opt.min_vars = 2;
    opt.max_vars = 4;
    opt.smooth = false;
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_gbn(rng, opt);
        const auto cutsets = usable_cutsets(g, 1, 2);
        if (cutsets.empty()) continue;
        const auto& c = pick(rng, cutsets);
        const auto chain = cutset_mc(g, c);
        const auto g0 = random_distribution(rng, c, false);
        const auto trace = iterate_next(g, c, g0, 6);
        Vector v = values(g0);
        Vector sum(v.size(), Rational(0));
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            CHECK(values(trace.steps[i]) == v);
            for (std::size_t j = 0; j < v.size(); ++j) sum[j] += v[j];
            Vector avg = sum;
            for (auto& a : avg) a /= static_cast<long>(i + 1);
            CHECK(values(trace.cesaro[i]) == avg);
            v = vec_mat(v, chain.p());
        }
    }
}

TEST_CASE("dsep_by_paths on small graphs") {
    CHECK(dsep_by_paths(four_cycle(), {"W"}, {"Y"}, {"X", "Z"}));
    CHECK_FALSE(dsep_by_paths(four_cycle(), {"W"}, {"Y"}, {"X"}));
    DiGraph collider(VariableSet{"A", "B", "C"}, {{"A", "B"}, {"C", "B"}});
    CHECK(dsep_by_paths(collider, {"A"}, {"C"}, {}));
    CHECK_FALSE(dsep_by_paths(collider, {"A"}, {"C"}, {"B"}));
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i) names.push_back(node_name(static_cast<std::size_t>(i)));
    CHECK_THROWS_AS(dsep_by_paths(DiGraph(VariableSet(names), {}), {"A"}, {"B"}, {}), CapacityError);
}

TEST_CASE("property: Bayes ball agrees with path enumeration") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_digraph(rng, 2 + trial % 6, 0.3, trial % 3 == 0);
        std::vector<std::string> xs, ys, zs;
        for (const auto& v : g.nodes()) {
            switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
                case 0: xs.push_back(v); break;
                case 1: ys.push_back(v); break;
                case 2: zs.push_back(v); break;
                default: break;
            }
        }
        if (xs.empty() || ys.empty()) continue;
        const VariableSet x(xs), y(ys), z(zs);
        CHECK(d_separated(g, x, y, z) == dsep_by_paths(g, x, y, z));
    }
}

TEST_CASE("power iteration") {
    const Vector g0{q(1, 5), q(4, 5)};
    CHECK(power_iteration(Matrix::identity(2), g0, 7) == g0);

    const VariableSet xy{"X", "Y"};
    const auto cyc = cutset_mc(two_cycle_cycle4(), xy);
    const Vector d{q(1), q(0), q(0), q(0)};
    for (std::size_t n : {10U, 11U, 99U}) {
        const auto avg = power_iteration(cyc.p(), d, n);
        CHECK(total_variation(avg, Vector(4, q(1, 4))) <= Rational(1, static_cast<long>(n)));
    }
    const auto chain = cutset_mc(two_cycle_chain(), xy);
    const auto cps = power_iteration_checkpoints(chain.p(), d, {1, 5, 20});
    REQUIRE(cps.size() == 3);
    CHECK(cps[0] == power_iteration(chain.p(), d, 1));
    CHECK(cps[1] == power_iteration(chain.p(), d, 5));
    CHECK(cps[2] == power_iteration(chain.p(), d, 20));
    CHECK(values(power_iteration(chain, dirac(Assignment(xy, 0)), 5)) == cps[1]);
}

TEST_CASE("four-state chain: iterates and averages approach the stationary vector") {
    const VariableSet xy{"X", "Y"};
    const Vector stationary{q(48, 121), q(18, 121), q(40, 121), q(15, 121)};
    const auto g = two_cycle_chain();
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto trace = iterate_next(g, xy, dirac(Assignment(xy, s)), 80);
        CHECK(total_variation(values(trace.steps.back()), stationary) <= q(1, 1000000000));
        CHECK(trace.converged);
    }
    const auto chain = cutset_mc(g, xy);
    const auto avg = power_iteration(chain, dirac(Assignment(xy, 3)), 10000);
    const auto d = total_variation(values(avg), stationary);
    CHECK(d <= q(1, 1000));
    CHECK(d > q(1, 1000000000));  // averages converge like 1/N
}
