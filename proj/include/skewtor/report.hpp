#pragma once

// Verification reports: an ordered list of checks with status, computed value
// and the expected value with its provenance (PAPER, DERIVED or TRIVIAL).

#include "skewtor/check.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewtor {

enum class Status { Pass, Fail, Skip };

std::string statusName(Status s);
Status parseStatus(const std::string& s);

struct Check {
    std::string id;
    std::string anchor;      // what the check pins down, in words
    Status status = Status::Fail;
    std::string value;       // computed value, or the exact residual on failure
    std::string expected;
    std::string provenance;  // PAPER, DERIVED, TRIVIAL; empty for SKIP
    bool operator==(const Check&) const = default;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    int count(Status s) const;
    // 0 when nothing failed, 1 otherwise.
    int exitCode() const;
    const Check* find(const std::string& id) const;
    bool operator==(const Report&) const = default;
};

struct ReportFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string toJson(const Report& r, int indent = 2);
Report reportFromJson(const std::string& text);
std::string toText(const Report& r);

// Check builders used by the suites.
Check expectTrue(std::string id, std::string anchor, std::string provenance, bool ok, std::string value,
                 std::string expected);
Check expectEqual(std::string id, std::string anchor, std::string provenance, const std::string& value,
                  const std::string& expected);
Check fromResidual(std::string id, std::string anchor, std::string provenance, const Residual& r);
Check skipped(std::string id, std::string anchor, std::string reason);

} // namespace skewtor
