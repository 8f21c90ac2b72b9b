#include <doctest.h>

#include <random>

#include "cbn/errors.hpp"
#include "cbn/inference.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_gbn.hpp"

using namespace cbn;
using namespace cbn::testing;

TEST_CASE("chain rule on a two-node network") {
    const auto g = two_node_bn(Rational(1, 3), Rational(1, 4), Rational(1, 2));
    const auto mu = chain_rule_dist(g);
    CHECK(mu[0] == Rational(2, 3) * Rational(3, 4));
    CHECK(mu[1] == Rational(2, 3) * Rational(1, 4));
    CHECK(mu[2] == Rational(1, 3) * Rational(1, 2));
    CHECK(mu[3] == Rational(1, 3) * Rational(1, 2));
}

TEST_CASE("chain rule rejects cycles and invalid models") {
    CHECK_THROWS_AS(chain_rule_dist(two_cycle_unique()), CyclicGraphError);
    auto bn = two_node_bn(Rational(1, 3), 0, 1);
    auto cpts = bn.cpts();
    cpts["Y"].rows[0].reset();
    CHECK_THROWS_AS(chain_rule_dist(Gbn(bn.graph(), cpts, bn.iota())), InvalidArgument);
}

TEST_CASE("independence checks") {
    VariableSet xy{"X", "Y"};
    const auto indep = product(JointDistribution(VariableSet{"X"}, {Rational(1, 3), Rational(2, 3)}),
                               JointDistribution(VariableSet{"Y"}, {Rational(1, 4), Rational(3, 4)}));
    CHECK(check_independence(indep, {{"X"}, {"Y"}, {}}));
    JointDistribution corr(xy, {Rational(1, 2), 0, 0, Rational(1, 2)});
    CHECK_FALSE(check_independence(corr, {{"X"}, {"Y"}, {}}));
    CHECK_THROWS_AS(check_independence(corr, {{"X"}, {"X"}, {}}), InvalidArgument);
    CHECK(IndependenceTriple{{"X"}, {"Y"}, {"Z"}}.to_string() == "(X _|_ Y | Z)");
}

TEST_CASE("d-sep triples of a chain") {
    DiGraph chain(VariableSet{"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    const auto triples = enumerate_dsep_triples(chain);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == IndependenceTriple{{"A"}, {"C"}, {"B"}});
}

TEST_CASE("property: chain rule matches the naive product and is Markov") {
    std::mt19937_64 rng(41);
    RandomGbnOptions opt;
    opt.acyclic = true;
    opt.min_vars = 2;
    opt.max_vars = 5;
    opt.smooth = false;
    opt.correlated_iota = true;
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_gbn(rng, opt);
        const auto mu = chain_rule_dist(g);
        CHECK(Vector(mu.probabilities().begin(), mu.probabilities().end()) == oracle::chain_rule(g));
        CHECK(restrict(mu, g.iota_variables()) == g.iota());
        CHECK(dsep_implies_indep_check(g));
    }
}
