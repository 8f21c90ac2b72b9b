#include "cbn/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cbn/errors.hpp"

namespace cbn {

namespace {

using nlohmann::json;

Rational read_rational(const json& value, const std::string& where) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw InvalidArgument(where + ": expected a rational string or integer");
}

std::vector<std::string> read_names(const json& value, const std::string& where) {
    if (!value.is_array()) throw InvalidArgument(where + ": expected an array of names");
    std::vector<std::string> out;
    for (const auto& v : value) {
        if (!v.is_string()) throw InvalidArgument(where + ": names must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::uint64_t read_key(const std::string& key, const VariableSet& over, const std::string& where) {
    try {
        return Assignment::from_bitstring(over, key).index();
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(where + ": " + e.what());
    }
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<Rational> read_table(const json& obj, const VariableSet& over, const std::string& where) {
    if (!obj.is_object()) throw InvalidArgument(where + ": expected an object of bitstring keys");
    std::vector<Rational> values(over.num_assignments(), Rational(0));
    for (const auto& [key, value] : obj.items()) values[read_key(key, over, where)] = read_rational(value, where);
    return values;
}

}  // namespace

Gbn parse_gbn_document(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InvalidArgument("GBN document must be a JSON object");
    if (!doc.contains("variables")) throw InvalidArgument("GBN document lacks \"variables\"");
    const VariableSet vars(read_names(doc["variables"], "variables"));

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InvalidArgument("edges: expected an array of pairs");
        for (const auto& e : doc["edges"]) {
            auto pair = read_names(e, "edges");
            if (pair.size() != 2) throw InvalidArgument("edges: each edge is a [from, to] pair");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    DiGraph graph(vars, edges);

    std::map<std::string, Cpt> cpts;
    if (doc.contains("cpts")) {
        if (!doc["cpts"].is_object()) throw InvalidArgument("cpts: expected an object");
        for (const auto& [node, entry] : doc["cpts"].items()) {
            const std::string where = "cpts." + node;
            if (!entry.is_object()) throw InvalidArgument(where + ": expected an object");
            VariableSet parents = entry.contains("parents") ? VariableSet(read_names(entry["parents"], where + ".parents"))
                                  : vars.contains(node)    ? graph.parents(node)
                                                           : VariableSet{};
            Cpt cpt(node, parents);
            if (entry.contains("rows")) {
                if (!entry["rows"].is_object()) throw InvalidArgument(where + ".rows: expected an object");
                for (const auto& [key, value] : entry["rows"].items()) {
                    cpt.rows[read_key(key, parents, where + ".rows")] = read_rational(value, where + ".rows");
                }
            }
            cpts.emplace(node, std::move(cpt));
        }
    }

    const auto init = graph.initial_nodes();
    std::vector<Rational> iota;
    if (doc.contains("iota")) {
        iota = read_table(doc["iota"], init, "iota");
    } else if (init.empty()) {
        iota = {Rational(1)};
    } else {
        iota.assign(init.num_assignments(), Rational(0));
    }
    return Gbn(std::move(graph), std::move(cpts), init, std::move(iota));
}

Gbn load_gbn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_gbn_document(buffer.str());
}

std::string serialize_gbn(const Gbn& g) {
    json doc;
    doc["variables"] = g.variables().names();
    json edges = json::array();
    for (const auto& [from, to] : g.graph().edges()) edges.push_back({from, to});
    doc["edges"] = edges;
    json cpts = json::object();
    for (const auto& [node, cpt] : g.cpts()) {
        json rows = json::object();
        for (std::uint64_t r = 0; r < cpt.rows.size(); ++r) {
            if (cpt.rows[r]) rows[index_bitstring(r, cpt.parents.size())] = to_string(*cpt.rows[r]);
        }
        cpts[node] = {{"parents", cpt.parents.names()}, {"rows", rows}};
    }
    doc["cpts"] = cpts;
    json iota = json::object();
    for (std::size_t i = 0; i < g.iota_values().size(); ++i) {
        iota[index_bitstring(i, g.iota_variables().size())] = to_string(g.iota_values()[i]);
    }
    doc["iota"] = iota;
    return doc.dump(2) + "\n";
}

JointDistribution parse_distribution_document(std::string_view text, const VariableSet& variables) {
    const json doc = parse_json(text);
    if (doc.is_object() && doc.contains("probabilities")) {
        if (doc.contains("variables") && VariableSet(read_names(doc["variables"], "variables")) != variables) {
            throw InvalidArgument("distribution document is not over " + variables.to_string());
        }
        return JointDistribution(variables, read_table(doc["probabilities"], variables, "probabilities"));
    }
    return JointDistribution(variables, read_table(doc, variables, "distribution"));
}

}  // namespace cbn
