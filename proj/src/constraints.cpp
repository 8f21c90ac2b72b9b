#include "cbn/constraints.hpp"

#include "cbn/chain.hpp"
#include "cbn/errors.hpp"

namespace cbn {

namespace {

void add_iota_and_normalization(const Gbn& g, LinearSystem& sys) {
    const auto& vars = g.variables();
    const auto n = vars.num_assignments();
    const auto iota = g.iota();
    if (!iota.variables().empty()) {
        Projection to_init(vars, iota.variables());
        for (std::uint64_t i = 0; i < iota.size(); ++i) {
            Vector row(n, Rational(0));
            for (std::uint64_t b = 0; b < n; ++b) {
                if (to_init(b) == i) row[b] = 1;
            }
            sys.add_equation(row, iota[i]);
        }
    }
    sys.add_equation(Vector(n, Rational(1)), 1);
    sys.nonnegative.assign(n, true);
}

JointDistribution as_distribution(const VariableSet& vars, const Vector& x) { return JointDistribution(vars, x); }

}  // namespace

LinearSystem build_cpt_system(const Gbn& g) {
    require_valid(g);
    const auto& vars = g.variables();
    const auto n = vars.num_assignments();
    LinearSystem sys;
    sys.a = Matrix(0, n);
    for (const auto& node : set_difference(vars, g.graph().initial_nodes())) {
        const auto& cpt = g.cpt(node);
        const auto bit = position_bit(vars.position_of(node), vars.size());
        Projection to_parents(vars, cpt.parents);
        for (std::uint64_t c = 0; c < cpt.rows.size(); ++c) {
            const auto& p = cpt.prob_true(c);
            Vector row(n, Rational(0));
            for (std::uint64_t b = 0; b < n; ++b) {
                if (to_parents(b) == c) row[b] = p - ((b & bit) ? 1 : 0);
            }
            sys.add_equation(row, 0);
        }
    }
    add_iota_and_normalization(g, sys);
    return sys;
}

LinearSystem build_wcpt_system(const Gbn& g) {
    require_valid(g);
    const auto& vars = g.variables();
    const auto n = vars.num_assignments();
    LinearSystem sys;
    sys.a = Matrix(0, n);
    for (const auto& node : set_difference(vars, g.graph().initial_nodes())) {
        const auto& cpt = g.cpt(node);
        const auto bit = position_bit(vars.position_of(node), vars.size());
        Projection to_parents(vars, cpt.parents);
        Vector row(n);
        for (std::uint64_t b = 0; b < n; ++b) row[b] = cpt.prob_true(to_parents(b)) - ((b & bit) ? 1 : 0);
        sys.add_equation(row, 0);
    }
    add_iota_and_normalization(g, sys);
    return sys;
}

SemanticsFamily solve_family(const Gbn& g, SemanticsKind kind) {
    LinearSystem sys;
    if (kind == SemanticsKind::Cpt) {
        sys = build_cpt_system(g);
    } else if (kind == SemanticsKind::WCpt) {
        sys = build_wcpt_system(g);
    } else {
        throw InvalidArgument("solve_family handles cpt and wcpt only, got " + to_string(kind));
    }
    SemanticsFamily out;
    out.kind = kind;
    out.variables = g.variables();
    out.polytope = classify_polytope(solve_affine(sys));
    switch (out.polytope->kind) {
        case PolytopeClass::Kind::Empty:
            out.status = FamilyStatus::Empty;
            break;
        case PolytopeClass::Kind::Point:
            out.status = FamilyStatus::Unique;
            out.members.push_back(as_distribution(out.variables, out.polytope->witness));
            break;
        case PolytopeClass::Kind::Infinite:
            out.status = FamilyStatus::Infinite;
            out.members.push_back(as_distribution(out.variables, out.polytope->witness));
            out.notes = "solution space of dimension " + std::to_string(out.polytope->space.dimension()) +
                        "; member is one feasible vertex";
            break;
    }
    return out;
}

bool check_consistency(const JointDistribution& mu, const Gbn& g, std::string_view node, ConsistencyMode mode) {
    require_valid(g);
    const auto& vars = g.variables();
    if (mu.variables() != vars) {
        throw InvalidArgument("distribution over " + mu.variables().to_string() + ", GBN over " + vars.to_string());
    }
    if (!vars.contains(node)) throw InvalidArgument("unknown node " + std::string(node));
    if (g.graph().initial_nodes().contains(node)) {
        throw InvalidArgument("node " + std::string(node) + " is initial and has no CPT");
    }
    const auto& cpt = g.cpt(node);
    const auto bit = position_bit(vars.position_of(node), vars.size());
    Projection to_parents(vars, cpt.parents);
    // mass[c] = mu(c), mass_true[c] = mu(X=T, c)
    std::vector<Rational> mass(cpt.rows.size(), Rational(0)), mass_true(cpt.rows.size(), Rational(0));
    for (std::uint64_t b = 0; b < mu.size(); ++b) {
        if (mu[b] == 0) continue;
        const auto c = to_parents(b);
        mass[c] += mu[b];
        if (b & bit) mass_true[c] += mu[b];
    }
    if (mode == ConsistencyMode::Strong) {
        for (std::uint64_t c = 0; c < mass.size(); ++c) {
            if (mass_true[c] != mass[c] * cpt.prob_true(c)) return false;
        }
        return true;
    }
    Rational lhs = 0, rhs = 0;
    for (std::uint64_t c = 0; c < mass.size(); ++c) {
        lhs += mass_true[c];
        rhs += mass[c] * cpt.prob_true(c);
    }
    return lhs == rhs;
}

bool check_cpt_i_member(const JointDistribution& mu, const Gbn& g, const std::vector<IndependenceTriple>& triples) {
    for (const auto& t : triples) {
        t.check_disjoint();
        if (t.x.empty() || t.y.empty()) throw InvalidArgument("triple " + t.to_string() + " has an empty side");
        if (!set_union(set_union(t.x, t.y), t.z).is_subset_of(g.variables())) {
            throw InvalidArgument("triple " + t.to_string() + " mentions unknown variables");
        }
    }
    for (const auto& node : set_difference(g.variables(), g.graph().initial_nodes())) {
        if (!check_consistency(mu, g, node, ConsistencyMode::Strong)) return false;
    }
    if (restrict(mu, g.iota_variables()) != g.iota()) return false;
    for (const auto& t : triples) {
        const auto xw = set_union(t.x, t.z);
        const auto uw = set_union(t.y, t.z);
        const auto all = set_union(xw, t.y);
        const auto joint = restrict(mu, all);
        const auto m_w = restrict(joint, t.z);
        const auto m_xw = restrict(joint, xw);
        const auto m_uw = restrict(joint, uw);
        Projection to_w(all, t.z), to_xw(all, xw), to_uw(all, uw);
        for (std::uint64_t b = 0; b < joint.size(); ++b) {
            if (joint[b] * m_w[to_w(b)] != m_xw[to_xw(b)] * m_uw[to_uw(b)]) return false;
        }
    }
    return true;
}

SemanticsFamily cpt_i_via_cutsets(const Gbn& g, const std::vector<VariableSet>& cutsets) {
    require_valid(g);
    for (const auto& node : g.variables()) {
        bool covered = false;
        for (const auto& c : cutsets) covered = covered || !c.contains(node);
        if (!covered) throw InvalidArgument("every cutset contains " + node);
    }
    SemanticsFamily out;
    out.kind = SemanticsKind::CptI;
    out.variables = g.variables();
    std::vector<JointDistribution> singletons;
    for (const auto& c : cutsets) {
        const auto chain = cutset_mc(g, c);
        const auto stationary = stationary_set(chain);
        if (stationary.status != FamilyStatus::Unique) {
            out.status = FamilyStatus::Unsupported;
            out.notes = "cutset " + c.to_string() + " has an infinite chain semantics; no intersection algorithm";
            return out;
        }
        singletons.push_back(extend(g, c, stationary.unique()));
    }
    for (const auto& mu : singletons) {
        if (mu != singletons.front()) {
            out.status = FamilyStatus::Empty;
            out.notes = "chain semantics differ between cutsets";
            return out;
        }
    }
    out.status = FamilyStatus::Unique;
    out.members.push_back(singletons.front());
    return out;
}

}  // namespace cbn
