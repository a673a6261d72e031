#pragma once

// Verification suites behind `skewtor verify`. Check groups run in parallel;
// the report keeps a fixed order.

#include "skewtor/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewtor {

// exterior, clifford, section2, slformula, g2, equivariant, contact,
// hermitian, examples, all
const std::vector<std::string>& suiteNames();
// nullopt for an unknown suite name.
std::optional<Report> runSuite(const std::string& name);

// Pinned sign and orientation conventions, each with the identity that pins it.
std::string conventionLedger();

} // namespace skewtor
