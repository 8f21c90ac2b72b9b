#include "cbn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbn/chain.hpp"
#include "cbn/constraints.hpp"
#include "cbn/document.hpp"
#include "cbn/errors.hpp"
#include "cbn/inference.hpp"
#include "cbn/oracle.hpp"

namespace cbn::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kOrderNote =
    "bitstrings over the listed variables in sorted-name order; first variable is the most significant bit; 0=F, 1=T";

json rational_array(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json order_json(const VariableSet& vars) {
    json assignments = json::array();
    const auto n = vars.num_assignments();
    for (std::uint64_t i = 0; i < n; ++i) assignments.push_back(index_bitstring(i, vars.size()));
    return {{"variables", vars.names()}, {"assignments", assignments}, {"note", kOrderNote}};
}

json family_json(const SemanticsFamily& f) {
    json out = {{"kind", to_string(f.kind)}, {"status", to_string(f.status)}, {"order", order_json(f.variables)}};
    if (f.status == FamilyStatus::Unique) {
        out["vector"] = rational_array(f.unique().probabilities());
    } else if (!f.members.empty()) {
        json members = json::array();
        for (const auto& m : f.members) members.push_back(rational_array(m.probabilities()));
        out["members"] = members;
    }
    if (f.polytope) out["dimension"] = f.polytope->space.dimension();
    if (!f.notes.empty()) out["notes"] = f.notes;
    return out;
}

bool is_scalar_like(const json& j) {
    if (j.is_primitive()) return true;
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

std::string render_scalar(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string out;
        for (const auto& e : j) out += (out.empty() ? "" : " ") + render_scalar(e);
        return out;
    }
    return j.dump();
}

void pretty(const json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar_like(value)) {
                out << pad << key << ": " << render_scalar(value) << "\n";
            } else {
                out << pad << key << ":\n";
                pretty(value, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_scalar_like(e)) {
                out << pad << "- " << render_scalar(e) << "\n";
            } else {
                out << pad << "-\n";
                pretty(e, out, indent + 2);
            }
        }
    } else {
        out << pad << render_scalar(j) << "\n";
    }
}

JointDistribution parse_gamma0(const std::string& text, const VariableSet& cutset) {
    if (text == "uniform") return uniform(cutset);
    if (text.rfind("dirac:", 0) == 0) {
        const std::string body = text.substr(6);
        if (body.find('=') == std::string::npos) return dirac(Assignment::from_bitstring(cutset, body));
        // X=T,Y=F
        std::uint64_t index = 0;
        std::vector<std::string> seen;
        std::stringstream items(body);
        std::string item;
        while (std::getline(items, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("gamma0: expected NAME=T|F, got '" + item + "'");
            const auto name = item.substr(0, eq);
            const auto value = item.substr(eq + 1);
            if (value != "T" && value != "F") throw InvalidArgument("gamma0: value of " + name + " must be T or F");
            if (value == "T") index |= position_bit(cutset.position_of(name), cutset.size());
            seen.push_back(name);
        }
        if (VariableSet(seen) != cutset) throw InvalidArgument("gamma0: assignment must cover " + cutset.to_string());
        return dirac(Assignment(cutset, index));
    }
    std::ifstream in(text);
    if (!in) throw InvalidArgument("gamma0: expected uniform, dirac:BITS or a readable file, got '" + text + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_distribution_document(buffer.str(), cutset);
}

Gbn load_valid(const std::string& path) {
    auto g = load_gbn_file(path);
    require_valid(g);
    return g;
}

VariableSet single_cutset(const std::vector<std::string>& cutsets) {
    if (cutsets.size() != 1) throw InvalidArgument("exactly one --cutset is required");
    return parse_variable_list(cutsets.front());
}

json chain_json(const CutsetChain& chain) {
    const auto& a = chain.analysis;
    json matrix = json::array();
    for (std::size_t i = 0; i < chain.num_states(); ++i) matrix.push_back(rational_array(a.p.row(i)));
    json bsccs = json::array();
    for (std::size_t k = 0; k < a.bsccs.size(); ++k) {
        json states = json::array();
        for (const auto& s : chain.bscc_states(k)) states.push_back(s.bitstring());
        bsccs.push_back({{"states", states}, {"period", a.periods[k]}, {"lrf", rational_array(a.lrf[k])}});
    }
    return {{"cutset", chain.cutset.names()}, {"order", order_json(chain.cutset)}, {"matrix", matrix},
            {"bsccs", bsccs}};
}

struct Settings {
    std::string format = "machine";
    std::string file;
    bool minimal = false;
    std::string x, y, given;
    std::string kind;
    std::vector<std::string> cutsets;
    std::string gamma0 = "uniform";
    bool gamma0_given = false;
    std::size_t steps = 10;
};

int execute(CLI::App& app, const Settings& s, std::ostream& out, std::ostream& err) {
    json result;
    int status = kExitOk;
    auto sub = [&](const char* name) { return app.got_subcommand(name); };

    if (sub("validate")) {
        const auto g = load_gbn_file(s.file);
        const auto issues = validate_gbn(g);
        json list = json::array();
        for (const auto& i : issues) list.push_back({{"node", i.node}, {"kind", to_string(i.kind)}, {"detail", i.detail}});
        result = {{"valid", issues.empty()}, {"issues", list}};
        if (!issues.empty()) {
            status = kExitInvalid;
            err << "validation failed: " << issues.size() << " issue(s)\n";
        }
    } else if (sub("dsep")) {
        const auto g = load_valid(s.file);
        const auto xs = parse_variable_list(s.x), ys = parse_variable_list(s.y), zs = parse_variable_list(s.given);
        result = {{"x", xs.names()}, {"y", ys.names()}, {"given", zs.names()},
                  {"d_separated", d_separated(g.graph(), xs, ys, zs)}};
    } else if (sub("cutsets")) {
        const auto g = load_valid(s.file);
        json list = json::array();
        for (const auto& c : enumerate_cutsets(g.graph(), s.minimal)) list.push_back(c.names());
        result = {{"minimal", s.minimal}, {"cutsets", list}};
    } else if (sub("chain")) {
        const auto g = load_valid(s.file);
        result = chain_json(cutset_mc(g, single_cutset(s.cutsets)));
    } else if (sub("semantics")) {
        const auto g = load_valid(s.file);
        const auto& k = s.kind;
        if (k == "bn") {
            if (!g.graph().is_acyclic()) {
                result = {{"kind", "bn"}, {"status", "Empty"}, {"notes", "graph has cycles"}};
            } else {
                SemanticsFamily f;
                f.kind = SemanticsKind::Bn;
                f.status = FamilyStatus::Unique;
                f.variables = g.variables();
                f.members.push_back(chain_rule_dist(g));
                result = family_json(f);
            }
        } else if (k == "cpt" || k == "wcpt") {
            result = family_json(solve_family(g, k == "cpt" ? SemanticsKind::Cpt : SemanticsKind::WCpt));
        } else if (k == "cpti") {
            std::vector<VariableSet> cutsets;
            for (const auto& c : s.cutsets) cutsets.push_back(parse_variable_list(c));
            if (cutsets.empty()) cutsets = enumerate_cutsets(g.graph(), true);
            const auto f = cpt_i_via_cutsets(g, cutsets);
            result = family_json(f);
            json used = json::array();
            for (const auto& c : cutsets) used.push_back(c.names());
            result["cutsets"] = used;
            if (f.status == FamilyStatus::Unsupported) {
                status = kExitUnsupported;
                err << "unsupported: " << f.notes << "\n";
            }
        } else {
            const auto cutset = single_cutset(s.cutsets);
            const auto chain = cutset_mc(g, cutset);
            const auto gamma0 = parse_gamma0(s.gamma0, cutset);
            result = {{"kind", k}, {"cutset", cutset.names()}, {"gamma0", rational_array(gamma0.probabilities())}};
            if (k == "mc" || k == "limavg") {
                const auto mu = mcs(g, chain, gamma0);
                result["status"] = "Defined";
                result["cardinality"] = chain.analysis.bsccs.size() == 1 ? "1" : "infinite";
                result["order"] = order_json(mu.variables());
                result["vector"] = rational_array(mu.probabilities());
            } else {
                const auto l = lim(g, chain, gamma0);
                if (l.defined) {
                    result["status"] = "Defined";
                    result["order"] = order_json(l.value->variables());
                    result["vector"] = rational_array(l.value->probabilities());
                } else {
                    result["status"] = "UndefinedPeriodic";
                    result["periods"] = l.periods;
                }
            }
        }
    } else if (sub("classify")) {
        const auto g = load_valid(s.file);
        const auto cutset = single_cutset(s.cutsets);
        const auto chain = cutset_mc(g, cutset);
        const auto& periods = chain.analysis.periods;
        result = {{"cutset", cutset.names()},
                  {"cardinality", chain.analysis.bsccs.size() == 1 ? "1" : "infinite"},
                  {"bsccs", chain.analysis.bsccs.size()},
                  {"periods", periods},
                  {"smooth", is_smooth(g)},
                  {"lim_defined_for_every_gamma0",
                   std::all_of(periods.begin(), periods.end(), [](auto p) { return p == 1; })}};
        if (s.gamma0_given) result["lim_defined"] = lim(g, chain, parse_gamma0(s.gamma0, cutset)).defined;
    } else if (app.got_subcommand("oracle")) {
        const auto g = load_valid(s.file);
        const auto cutset = single_cutset(s.cutsets);
        const auto trace = iterate_next(g, cutset, parse_gamma0(s.gamma0, cutset), s.steps);
        json steps = json::array();
        for (const auto& st : trace.steps) steps.push_back(rational_array(st.probabilities()));
        result = {{"cutset", cutset.names()},
                  {"order", order_json(cutset)},
                  {"steps", steps},
                  {"cesaro", rational_array(trace.cesaro.back().probabilities())},
                  {"converged", trace.converged},
                  {"cesaro_converged", trace.cesaro_converged}};
    }

    if (s.format == "pretty") {
        pretty(result, out, 0);
    } else {
        out << result.dump(2) << "\n";
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact semantics for Bayesian networks with cycles", "cbn"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"pretty", "machine"}));

    auto file_arg = [&](CLI::App* c) { c->add_option("file", s.file, "GBN document")->required(); };
    auto cutset_opt = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--cutset", s.cutsets, "Cutset as X,Y (repeatable for cpti)");
        if (required) o->required();
    };
    auto gamma0_opt = [&](CLI::App* c) {
        c->add_option("--gamma0", s.gamma0, "uniform | dirac:BITS | dirac:X=T,Y=F | distribution file");
    };

    auto* validate = app.add_subcommand("validate", "Check a GBN document");
    file_arg(validate);

    auto* dsep = app.add_subcommand("dsep", "d-separation query");
    file_arg(dsep);
    dsep->add_option("--x", s.x, "First node set")->required();
    dsep->add_option("--y", s.y, "Second node set")->required();
    dsep->add_option("--given", s.given, "Conditioning set");

    auto* cutsets = app.add_subcommand("cutsets", "Enumerate cutsets");
    file_arg(cutsets);
    cutsets->add_flag("--minimal", s.minimal, "Only inclusion-minimal cutsets");

    auto* chain = app.add_subcommand("chain", "Cutset Markov chain");
    file_arg(chain);
    cutset_opt(chain, true);

    auto* semantics = app.add_subcommand("semantics", "Compute a semantics");
    file_arg(semantics);
    semantics->add_option("--kind", s.kind, "Semantics kind")
        ->required()
        ->check(CLI::IsMember({"bn", "cpt", "wcpt", "cpti", "mc", "lim", "limavg"}));
    cutset_opt(semantics, false);
    gamma0_opt(semantics);

    auto* classify = app.add_subcommand("classify", "Cardinality, smoothness and limit definedness");
    file_arg(classify);
    cutset_opt(classify, true);
    gamma0_opt(classify);

    auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
    oracle->require_subcommand(1);
    auto* iterate = oracle->add_subcommand("iterate", "Iterate Next exactly");
    file_arg(iterate);
    cutset_opt(iterate, true);
    gamma0_opt(iterate);
    iterate->add_option("--steps", s.steps, "Number of steps")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    s.gamma0_given = classify->count("--gamma0") > 0;

    try {
        return execute(app, s, out, err);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace cbn::cli
