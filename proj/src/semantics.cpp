#include "cbn/semantics.hpp"

#include "cbn/errors.hpp"

namespace cbn {

std::string to_string(SemanticsKind kind) {
    switch (kind) {
        case SemanticsKind::Bn: return "bn";
        case SemanticsKind::Cpt: return "cpt";
        case SemanticsKind::WCpt: return "wcpt";
        case SemanticsKind::CptI: return "cpti";
        case SemanticsKind::McC: return "mc";
        case SemanticsKind::Lim: return "lim";
        case SemanticsKind::LimAvg: return "limavg";
    }
    return "unknown";
}

std::string to_string(FamilyStatus status) {
    switch (status) {
        case FamilyStatus::Empty: return "Empty";
        case FamilyStatus::Unique: return "Unique";
        case FamilyStatus::Infinite: return "Infinite";
        case FamilyStatus::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

const JointDistribution& SemanticsFamily::unique() const {
    if (status != FamilyStatus::Unique || members.size() != 1) {
        throw InvalidArgument("family is " + to_string(status) + ", not Unique");
    }
    return members.front();
}

}  // namespace cbn
