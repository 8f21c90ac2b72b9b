#include <doctest.h>

#include <random>

#include "cbn/chain.hpp"
#include "cbn/document.hpp"
#include "cbn/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
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

Vector quarter() { return Vector(4, q(1, 4)); }

}  // namespace

TEST_CASE("dissection structure") {
    const auto g = two_cycle_unique();
    const auto d = dissect(g, VariableSet{"X"}, uniform(VariableSet{"X"}));
    CHECK(d.primed == VariableSet{"X'"});
    CHECK(d.prime_of.at("X") == "X'");
    const auto& dg = d.gbn.graph();
    CHECK(dg.nodes() == VariableSet{"X", "X'", "Y"});
    CHECK(dg.has_edge("X", "Y"));
    CHECK(dg.has_edge("Y", "X'"));
    CHECK_FALSE(dg.has_edge("Y", "X"));
    CHECK(dg.is_acyclic());
    CHECK(dg.initial_nodes() == VariableSet{"X"});
    CHECK(d.gbn.cpt("X'").rows == g.cpt("X").rows);
    CHECK(validate_gbn(d.gbn).empty());
}

TEST_CASE("primed names avoid collisions") {
    DiGraph graph(VariableSet{"A", "A'"}, {{"A", "A'"}, {"A'", "A"}});
    std::map<std::string, Cpt> cpts;
    cpts.emplace("A", Cpt("A", VariableSet{"A'"}, {q(1, 3), q(1, 2)}));
    cpts.emplace("A'", Cpt("A'", VariableSet{"A"}, {q(1, 4), q(2, 3)}));
    Gbn g(graph, cpts, VariableSet{}, {q(1)});
    const auto d = dissect(g, VariableSet{"A"}, uniform(VariableSet{"A"}));
    CHECK(d.prime_of.at("A") == "A''");
    CHECK(d.gbn.variables().size() == 3);
}

TEST_CASE("dissection preconditions") {
    const auto g = three_node();
    CHECK_THROWS_AS(dissect(g, VariableSet{"X"}, uniform(VariableSet{"X"})), NotACutsetError);
    CHECK_THROWS_AS(dissect(g, VariableSet{"Y"}, uniform(VariableSet{"Z"})), InvalidArgument);
    const auto bn = two_node_bn(q(1, 3), 0, 1);
    CHECK_THROWS_AS(dissect(bn, VariableSet{"X"}, uniform(VariableSet{"X"})), InvalidArgument);
    CHECK_THROWS_AS(cutset_mc(g, VariableSet{"X", "Y", "Z"}, 2), CapacityError);
}

TEST_CASE("cutset chain of the four-state example") {
    const auto chain = cutset_mc(two_cycle_chain(), VariableSet{"X", "Y"});
    Matrix expected(0, 4);
    expected.append_row({q(3, 8), q(3, 8), q(1, 8), q(1, 8)});
    expected.append_row({q(0), q(0), q(1, 2), q(1, 2)});
    expected.append_row({q(3, 4), q(0), q(1, 4), q(0)});
    expected.append_row({q(0), q(0), q(1), q(0)});
    CHECK(chain.p() == expected);
    REQUIRE(chain.analysis.bsccs.size() == 1);
    CHECK(chain.analysis.periods[0] == 1);
    CHECK(chain.analysis.lrf[0] == Vector{q(48, 121), q(18, 121), q(40, 121), q(15, 121)});
    CHECK(stationary_set(chain).status == FamilyStatus::Unique);
    const auto mu = mcs(two_cycle_chain(), VariableSet{"X", "Y"}, dirac(Assignment{{"X", true}, {"Y", true}}));
    CHECK(values(mu) == Vector{q(48, 121), q(18, 121), q(40, 121), q(15, 121)});
}

TEST_CASE("period-four chain and the limit") {
    const auto g = two_cycle_cycle4();
    const VariableSet xy{"X", "Y"};
    const auto chain = cutset_mc(g, xy);
    REQUIRE(chain.analysis.bsccs.size() == 1);
    CHECK(chain.analysis.periods[0] == 4);
    CHECK(chain.analysis.lrf[0] == quarter());
    const auto tt = dirac(Assignment{{"X", true}, {"Y", true}});
    const auto l = lim(g, xy, tt);
    CHECK_FALSE(l.defined);
    CHECK(l.periods == std::vector<std::size_t>{4});
    const auto lu = lim(g, xy, uniform(xy));
    REQUIRE(lu.defined);
    CHECK(values(*lu.value) == quarter());
    CHECK(values(lim_avg(g, xy, tt)) == quarter());
    // a non-uniform mixture of a rotation-invariant pair is a fixed point only if invariant
    const JointDistribution half(xy, {q(1, 2), q(0), q(1, 2), q(0)});
    CHECK(lim(g, xy, half).defined == (restrict(next_dist(g, xy, half), xy) == half));
}

TEST_CASE("analyze_chain on hand-built matrices") {
    Matrix p(0, 3);
    p.append_row({q(1, 2), q(1, 2), q(0)});
    p.append_row({q(0), q(1), q(0)});
    p.append_row({q(0), q(0), q(1)});
    const auto a = analyze_chain(p);
    CHECK(a.bsccs.size() == 2);
    const auto r = reach_probs(a, {q(1), q(0), q(0)});
    CHECK(r[0] + r[1] == 1);
    CHECK(reach_weighted_lrf(a, {q(1), q(0), q(0)}) == Vector{q(0), q(1), q(0)});
    Matrix bad(0, 2);
    bad.append_row({q(1, 2), q(1, 3)});
    bad.append_row({q(0), q(1)});
    CHECK_THROWS_AS(analyze_chain(bad), InvalidArgument);
}

TEST_CASE("cardinality and smoothness") {
    CHECK(semantics_cardinality(two_cycle_unique(), VariableSet{"X"}) == Cardinality::One);
    CHECK(semantics_cardinality(two_cycle_infinite(), VariableSet{"X", "Y"}) == Cardinality::Infinite);
    CHECK(to_string(Cardinality::Infinite) == "infinite");
    CHECK(is_smooth(two_cycle_unique()));
    CHECK_FALSE(is_smooth(two_cycle_chain()));
    CHECK_FALSE(is_smooth(two_node_bn(q(1), q(1, 2), q(1, 2))));
    CHECK(is_smooth(two_node_bn(q(1, 3), q(1, 2), q(1, 2))));
}

TEST_CASE("property: chain matrix matches the naive sum and is row-stochastic") {
    std::mt19937_64 rng(61);
    RandomGbnOptions opt;
    opt.min_vars = 2;
    opt.max_vars = 4;
    opt.smooth = false;
    opt.correlated_iota = true;
    for (int trial = 0; trial < 80; ++trial) {
        const auto g = random_gbn(rng, opt);
        const auto cutsets = usable_cutsets(g, 0, 3);
        if (cutsets.empty()) continue;
        const auto& c = pick(rng, cutsets);
        const auto chain = cutset_mc(g, c);
        CHECK(chain.p() == oracle::transition_matrix(g, c));
        for (std::size_t i = 0; i < chain.num_states(); ++i) {
            Rational sum = 0;
            for (std::size_t j = 0; j < chain.num_states(); ++j) {
                CHECK(chain.p()(i, j) >= 0);
                sum += chain.p()(i, j);
            }
            CHECK(sum == 1);
        }
        const auto gamma = random_distribution(rng, c, false);
        CHECK(values(restrict(next_dist(g, c, gamma), c)) == vec_mat(values(gamma), chain.p()));
        CHECK(values(extend(g, c, gamma)) == oracle::extend(g, c, values(gamma)));
        // restriction of the extension to the cutset is the input distribution
        CHECK(restrict(extend(g, c, gamma), c) == gamma);

        const auto mu = mcs(g, chain, gamma);
        const auto lrf = reach_weighted_lrf(chain.analysis, values(gamma));
        CHECK(vec_mat(lrf, chain.p()) == lrf);
        CHECK(mu == extend(g, c, JointDistribution(c, lrf)));
        const auto l = lim(g, chain, gamma);
        if (l.defined) CHECK(*l.value == mu);
        CHECK(lim_avg(g, c, gamma) == mu);
    }
}

TEST_CASE("property: every stationary extreme point is fixed by the chain") {
    std::mt19937_64 rng(62);
    RandomGbnOptions opt;
    opt.min_vars = 2;
    opt.max_vars = 4;
    opt.smooth = false;
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_gbn(rng, opt);
        const auto cutsets = usable_cutsets(g, 0, 3);
        if (cutsets.empty()) continue;
        const auto chain = cutset_mc(g, pick(rng, cutsets));
        const auto fam = stationary_set(chain);
        CHECK(fam.members.size() == chain.analysis.bsccs.size());
        CHECK((fam.status == FamilyStatus::Unique) == (chain.analysis.bsccs.size() == 1));
        for (const auto& m : fam.members) CHECK(vec_mat(values(m), chain.p()) == values(m));
    }
}

TEST_CASE("lim is defined when the sequence settles inside a periodic class") {
    const auto g = load_gbn_file(data_path("lim_transient.json"));
    REQUIRE(validate_gbn(g).empty());
    const VariableSet bc{"B", "C"};
    const auto chain = cutset_mc(g, bc);
    const auto g0 = dirac(Assignment{{"B", false}, {"C", false}});
    const auto reach = reach_probs(chain, g0);
    bool periodic_reached = false;
    for (std::size_t k = 0; k < reach.size(); ++k) {
        periodic_reached = periodic_reached || (reach[k] > 0 && chain.analysis.periods[k] > 1);
    }
    CHECK(periodic_reached);
    CHECK(restrict(next_dist(g, bc, g0), bc) != g0);
    const auto l = lim(g, chain, g0);
    REQUIRE(l.defined);
    CHECK(*l.value == mcs(g, chain, g0));
    const auto step1 = restrict(next_dist(g, bc, g0), bc);
    CHECK(restrict(next_dist(g, bc, step1), bc) == step1);
    CHECK(*l.value == extend(g, bc, step1));
}
