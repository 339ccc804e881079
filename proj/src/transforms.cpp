#include "seqspace/transforms.hpp"

namespace seqspace {

SequenceSpace parse_space(const std::string& name) {
    if (name == "c0") return SequenceSpace::c0;
    if (name == "c") return SequenceSpace::c;
    if (name == "linf" || name == "l_inf") return SequenceSpace::l_inf;
    if (name == "lp" || name == "l_p") return SequenceSpace::l_p;
    throw DomainError("unknown sequence space '" + name + "' (expected c0, c, linf or lp)");
}

} // namespace seqspace
