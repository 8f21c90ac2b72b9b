#pragma once

#include <string>

#include "cbn/model.hpp"

namespace cbn::testing {

/// Two-node cycle X <-> Y, no initial nodes.
/// Pr(X=T | Y=F) = s1, Pr(X=T | Y=T) = s2, Pr(Y=T | X=F) = t1, Pr(Y=T | X=T) = t2.
inline Gbn two_cycle(const Rational& s1, const Rational& s2, const Rational& t1, const Rational& t2) {
    DiGraph graph(VariableSet{"X", "Y"}, {{"X", "Y"}, {"Y", "X"}});
    std::map<std::string, Cpt> cpts;
    cpts.emplace("X", Cpt("X", VariableSet{"Y"}, {s1, s2}));
    cpts.emplace("Y", Cpt("Y", VariableSet{"X"}, {t1, t2}));
    return Gbn(graph, cpts, VariableSet{}, {Rational(1)});
}

inline Gbn two_cycle_unique() { return two_cycle(Rational(3, 4), Rational(1, 2), Rational(3, 4), Rational(1, 2)); }
inline Gbn two_cycle_empty() { return two_cycle(0, 1, 1, 0); }
inline Gbn two_cycle_infinite() { return two_cycle(0, 1, 0, 1); }
/// The parameters behind the four-state chain with stationary vector (48, 18, 40, 15)/121.
inline Gbn two_cycle_chain() { return two_cycle(Rational(1, 4), 1, Rational(1, 2), 0); }
/// Deterministic 4-cycle of the states.
inline Gbn two_cycle_cycle4() { return two_cycle(1, 0, 0, 1); }

/// Three nodes, strongly connected: Y->X, Y->Z, Z->Y, X->Z.
inline DiGraph three_node_graph() {
    return DiGraph(VariableSet{"X", "Y", "Z"}, {{"Y", "X"}, {"Y", "Z"}, {"Z", "Y"}, {"X", "Z"}});
}

inline Gbn three_node() {
    std::map<std::string, Cpt> cpts;
    cpts.emplace("X", Cpt("X", VariableSet{"Y"}, {Rational(1, 3), Rational(3, 4)}));
    cpts.emplace("Y", Cpt("Y", VariableSet{"Z"}, {Rational(1, 2), Rational(2, 3)}));
    cpts.emplace("Z", Cpt("Z", VariableSet{"X", "Y"}, {Rational(1, 4), Rational(1, 2), Rational(2, 3), Rational(1, 5)}));
    return Gbn(three_node_graph(), cpts, VariableSet{}, {Rational(1)});
}

/// W->X->Y->Z->W
inline DiGraph four_cycle() {
    return DiGraph(VariableSet{"W", "X", "Y", "Z"}, {{"W", "X"}, {"X", "Y"}, {"Y", "Z"}, {"Z", "W"}});
}

/// X -> Y with Pr(X=T) = px and Pr(Y=T | X=F) = q0, Pr(Y=T | X=T) = q1.
inline Gbn two_node_bn(const Rational& px, const Rational& q0, const Rational& q1) {
    DiGraph graph(VariableSet{"X", "Y"}, {{"X", "Y"}});
    std::map<std::string, Cpt> cpts;
    cpts.emplace("Y", Cpt("Y", VariableSet{"X"}, {q0, q1}));
    return Gbn(graph, cpts, VariableSet{"X"}, {Rational(1 - px), px});
}

inline std::string data_path(const std::string& name) { return std::string(CBN_TEST_DATA_DIR) + "/" + name; }

}  // namespace cbn::testing
