#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbn/distribution.hpp"
#include "cbn/linalg.hpp"

namespace cbn {

enum class SemanticsKind { Bn, Cpt, WCpt, CptI, McC, Lim, LimAvg };

enum class FamilyStatus { Empty, Unique, Infinite, Unsupported };

std::string to_string(SemanticsKind kind);
std::string to_string(FamilyStatus status);

/// A set of distributions produced by one of the semantics.
struct SemanticsFamily {
    SemanticsKind kind = SemanticsKind::Cpt;
    FamilyStatus status = FamilyStatus::Empty;
    VariableSet variables;
    /// Unique: the single member. Infinite: witnesses or extreme points.
    std::vector<JointDistribution> members;
    /// Set for the constraint semantics.
    std::optional<PolytopeClass> polytope;
    std::string notes;

    /// Throws InvalidArgument unless status is Unique.
    const JointDistribution& unique() const;
};

}  // namespace cbn
