#include "seqspace/discrepancy.hpp"

namespace seqspace {

PrintedVariant parse_variant(const std::string& name) {
    if (name == "lemma3" || name == "lemma3_as_printed") return PrintedVariant::lemma3_as_printed;
    if (name == "theorem4" || name == "theorem4_as_printed") return PrintedVariant::theorem4_as_printed;
    if (name == "eq21" || name == "eq21_as_printed") return PrintedVariant::eq21_as_printed;
    if (name == "theta" || name == "theta_as_printed") return PrintedVariant::theta_as_printed;
    throw DomainError("unknown printed-formula variant '" + name + "' (expected lemma3, theorem4, eq21 or theta)");
}

} // namespace seqspace
