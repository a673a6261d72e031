#pragma once

#include <string>
#include <vector>

namespace skewtor {

// Outcome of one exact identity check. detail carries the first nonzero
// residual entry (or the computed value) for reports.
struct Residual {
    std::string name;
    bool ok = false;
    std::string detail;
};

inline bool allOk(const std::vector<Residual>& rs) {
    for (const auto& r : rs)
        if (!r.ok) return false;
    return true;
}

} // namespace skewtor
