#include "loopforge/cert.hpp"

#include "loopforge/error.hpp"

namespace loopforge {

const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::length_bound: return "length_bound";
        case CertKind::disc_inclusion: return "disc_inclusion";
        case CertKind::base_incidence: return "base_incidence";
        case CertKind::graph_degree: return "graph_degree";
        case CertKind::covering: return "covering";
        case CertKind::simplicity: return "simplicity";
        case CertKind::continuity: return "continuity";
    }
    return "unknown";
}

CertKind cert_kind_from_name(const std::string& name) {
    for (int k = 0; k <= static_cast<int>(CertKind::continuity); ++k)
        if (name == cert_kind_name(static_cast<CertKind>(k))) return static_cast<CertKind>(k);
    throw IoError("unknown certificate kind: " + name);
}

} // namespace loopforge
