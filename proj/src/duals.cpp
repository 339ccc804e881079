#include "seqspace/duals.hpp"

namespace seqspace {

Condition parse_condition(const std::string& name) {
    if (name == "4.1") return Condition::c4_1;
    if (name == "4.2") return Condition::c4_2;
    if (name == "4.3") return Condition::c4_3;
    if (name == "4.4") return Condition::c4_4;
    if (name == "4.5") return Condition::c4_5;
    throw DomainError("unknown condition '" + name + "' (expected 4.1 .. 4.5)");
}

DualKind parse_dual(const std::string& name) {
    if (name == "alpha") return DualKind::alpha;
    if (name == "beta") return DualKind::beta;
    if (name == "gamma") return DualKind::gamma;
    throw DomainError("unknown dual '" + name + "' (expected alpha, beta or gamma)");
}

} // namespace seqspace
