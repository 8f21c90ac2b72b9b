#include <doctest.h>

#include <algorithm>

#include "cbn/errors.hpp"
#include "cbn/model.hpp"
#include "fixtures.hpp"

using namespace cbn;
using namespace cbn::testing;

namespace {

bool has_issue(const std::vector<ValidationIssue>& issues, IssueKind kind, const std::string& node) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.kind == kind && i.node == node; });
}

}  // namespace

TEST_CASE("Cpt lookups") {
    Cpt cpt("X", VariableSet{"Y"}, {Rational(3, 4), Rational(1, 2)});
    CHECK(cpt.prob_true(0) == Rational(3, 4));
    CHECK(cpt.prob(false, 0) == Rational(1, 4));
    CHECK(cpt.prob(true, 1) == Rational(1, 2));
    Cpt empty("X", VariableSet{"Y"});
    CHECK(empty.rows.size() == 2);
    CHECK_THROWS_AS(empty.prob_true(0), InvalidArgument);
}

TEST_CASE("well-formed models validate cleanly") {
    CHECK(validate_gbn(two_cycle_unique()).empty());
    CHECK(validate_gbn(three_node()).empty());
    CHECK(validate_gbn(two_node_bn(Rational(1, 3), 0, 1)).empty());
    CHECK_NOTHROW(require_valid(two_cycle_empty()));
}

TEST_CASE("validation reports each kind of defect") {
    const auto base = two_cycle_unique();
    auto cpts = base.cpts();

    SUBCASE("missing CPT") {
        cpts.erase("X");
        CHECK(has_issue(validate_gbn(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)})), IssueKind::MissingCpt, "X"));
    }
    SUBCASE("CPT for an unknown node") {
        cpts.emplace("Q", Cpt("Q", VariableSet{}, {Rational(1, 2)}));
        CHECK(has_issue(validate_gbn(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)})), IssueKind::UnexpectedCpt,
                        "Q"));
    }
    SUBCASE("parent mismatch") {
        cpts["X"] = Cpt("X", VariableSet{}, {Rational(1, 2)});
        CHECK(has_issue(validate_gbn(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)})), IssueKind::ParentMismatch,
                        "X"));
    }
    SUBCASE("missing row") {
        cpts["X"].rows[1].reset();
        const auto issues = validate_gbn(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)}));
        CHECK(has_issue(issues, IssueKind::MissingCptRow, "X"));
        CHECK_THROWS_AS(require_valid(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)})), InvalidArgument);
    }
    SUBCASE("out of range") {
        cpts["Y"].rows[0] = Rational(3, 2);
        CHECK(has_issue(validate_gbn(Gbn(base.graph(), cpts, VariableSet{}, {Rational(1)})), IssueKind::OutOfRange, "Y"));
    }
    SUBCASE("iota not normalized") {
        const auto bn = two_node_bn(Rational(1, 2), 0, 1);
        Gbn bad(bn.graph(), bn.cpts(), VariableSet{"X"}, {Rational(1, 2), Rational(2, 5)});
        CHECK(has_issue(validate_gbn(bad), IssueKind::NotNormalized, ""));
        CHECK_THROWS_AS(bad.iota(), InvalidArgument);
    }
    SUBCASE("iota over the wrong variables") {
        const auto bn = two_node_bn(Rational(1, 2), 0, 1);
        Gbn bad(bn.graph(), bn.cpts(), VariableSet{"Y"}, {Rational(1, 2), Rational(1, 2)});
        CHECK(has_issue(validate_gbn(bad), IssueKind::IotaDomainMismatch, ""));
    }
}

TEST_CASE("an initial node must not carry a CPT") {
    const auto bn = two_node_bn(Rational(1, 2), 0, 1);
    auto cpts = bn.cpts();
    cpts.emplace("X", Cpt("X", VariableSet{}, {Rational(1, 2)}));
    CHECK(has_issue(validate_gbn(Gbn(bn.graph(), cpts, bn.iota())), IssueKind::UnexpectedCpt, "X"));
}
