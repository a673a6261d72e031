#include "skewtor/report.hpp"

#include <json.hpp>

#include <sstream>

namespace skewtor {

using json = nlohmann::ordered_json;

std::string statusName(Status s) {
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
    }
    return "FAIL";
}

Status parseStatus(const std::string& s) {
    if (s == "PASS") return Status::Pass;
    if (s == "FAIL") return Status::Fail;
    if (s == "SKIP") return Status::Skip;
    throw ReportFormatError("unknown status '" + s + "'");
}

int Report::count(Status s) const {
    int c = 0;
    for (const auto& ch : checks)
        if (ch.status == s) ++c;
    return c;
}

int Report::exitCode() const { return count(Status::Fail) == 0 ? 0 : 1; }

const Check* Report::find(const std::string& id) const {
    for (const auto& ch : checks)
        if (ch.id == id) return &ch;
    return nullptr;
}

std::string toJson(const Report& r, int indent) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"status", statusName(c.status)},
                          {"value", c.value},
                          {"expected", c.expected},
                          {"provenance", c.provenance}});
    json doc = {{"suite", r.suite},
                {"summary",
                 {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skip", r.count(Status::Skip)}}},
                {"checks", checks}};
    return doc.dump(indent);
}

Report reportFromJson(const std::string& text) {
    try {
        json doc = json::parse(text);
        Report r;
        r.suite = doc.at("suite").get<std::string>();
        for (const auto& c : doc.at("checks")) {
            Check ch;
            ch.id = c.at("id").get<std::string>();
            ch.anchor = c.at("anchor").get<std::string>();
            ch.status = parseStatus(c.at("status").get<std::string>());
            ch.value = c.at("value").get<std::string>();
            ch.expected = c.at("expected").get<std::string>();
            ch.provenance = c.at("provenance").get<std::string>();
            r.checks.push_back(std::move(ch));
        }
        return r;
    } catch (const json::exception& e) {
        throw ReportFormatError(e.what());
    }
}

std::string toText(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << statusName(c.status) << "  " << c.id;
        if (c.status == Status::Skip) {
            os << "  (" << c.value << ")";
        } else if (c.status == Status::Fail) {
            os << "\n      got:      " << c.value << "\n      expected: " << c.expected << " [" << c.provenance
               << "]";
        }
        os << "\n";
    }
    os << r.suite << ": " << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, "
       << r.count(Status::Skip) << " skipped\n";
    return os.str();
}

Check expectTrue(std::string id, std::string anchor, std::string provenance, bool ok, std::string value,
                 std::string expected) {
    return {std::move(id),    std::move(anchor),   ok ? Status::Pass : Status::Fail,
            std::move(value), std::move(expected), std::move(provenance)};
}

Check expectEqual(std::string id, std::string anchor, std::string provenance, const std::string& value,
                  const std::string& expected) {
    return expectTrue(std::move(id), std::move(anchor), std::move(provenance), value == expected, value, expected);
}

Check fromResidual(std::string id, std::string anchor, std::string provenance, const Residual& r) {
    return expectTrue(std::move(id), std::move(anchor), std::move(provenance), r.ok, r.ok ? "0" : r.detail, "0");
}

Check skipped(std::string id, std::string anchor, std::string reason) {
    return {std::move(id), std::move(anchor), Status::Skip, std::move(reason), "", ""};
}

} // namespace skewtor
