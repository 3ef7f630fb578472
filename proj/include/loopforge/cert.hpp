#pragma once

#include <map>
#include <string>
#include <vector>

namespace loopforge {

enum class CertKind {
    length_bound,
    disc_inclusion,
    base_incidence,
    graph_degree,
    covering,
    simplicity,
    continuity,
};

const char* cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& name);

/// One independently re-checkable invariant. `values` carries every number
/// needed to re-run the check from the serialized artifact alone (bounds,
/// achieved maxima, sampling densities, witness indices).
struct Certificate {
    CertKind kind;
    bool pass = false;
    std::string note;
    std::map<std::string, double> values;

    static Certificate passed(CertKind k, std::string note = {},
                              std::map<std::string, double> values = {}) {
        return Certificate{k, true, std::move(note), std::move(values)};
    }
    static Certificate failed(CertKind k, std::string note = {},
                              std::map<std::string, double> values = {}) {
        return Certificate{k, false, std::move(note), std::move(values)};
    }
};

inline bool all_pass(const std::vector<Certificate>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

} // namespace loopforge
