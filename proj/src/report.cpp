#include "schubert/report.hpp"

#include <set>
#include <sstream>

namespace schubert {

using nlohmann::json;

namespace {

std::string group_name(const VerificationReport& r)
{
    return std::string(1, series_letter(r.series)) + std::to_string(r.rank);
}

json witness_json(const VerificationReport& r, const Witness& w)
{
    json j = {{"check", w.check}, {"group", group_name(r)}};
    for (const auto& [k, v] : w.data.items())
        j[k] = v;
    return j;
}

bool per_triple(Suite s) { return s == Suite::ConjD || s == Suite::CrossPaths; }

// Number of distinct (u, v[, w]) instances named by the witnesses.
std::size_t flagged_instances(const SuiteResult& s)
{
    std::set<std::string> keys;
    auto add = [&](const Witness& w) {
        std::string key;
        for (const char* f : {"u", "v", "w"})
            if (w.data.contains(f))
                key += w.data[f].get<std::string>() + "|";
        keys.insert(key);
    };
    for (const auto& w : s.violations)
        add(w);
    for (const auto& w : s.hard_failures)
        add(w);
    return keys.size();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

json report_to_json(const VerificationReport& r)
{
    json suites = json::array();
    std::size_t violations = 0, hard = 0;
    for (const auto& s : r.suites) {
        json checks = json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"name", c.name}, {"hard", c.hard}, {"instances", c.instances}, {"failures", c.failures}});
        json vio = json::array(), hf = json::array();
        for (const auto& w : s.violations)
            vio.push_back(witness_json(r, w));
        for (const auto& w : s.hard_failures)
            hf.push_back(witness_json(r, w));
        violations += s.violations.size();
        hard += s.hard_failures.size();
        suites.push_back({{"name", suite_name(s.suite)},
                          {"status", s.status()},
                          {"unit", per_triple(s.suite) ? "triple" : "pair"},
                          {"instances_checked", s.instances_checked},
                          {"predicted_instances", s.predicted_instances},
                          {"checks", std::move(checks)},
                          {"violations", std::move(vio)},
                          {"hard_failures", std::move(hf)},
                          {"notes", s.notes},
                          {"elapsed_ms", s.elapsed_ms}});
    }
    json meta = json::array();
    for (const auto& m : r.meta)
        meta.push_back({{"name", m.name}, {"status", m.status}, {"detail", m.detail}});
    json requested = json::array();
    for (const auto& s : r.suites)
        requested.push_back(suite_name(s.suite));
    return {{"schema_version", kReportSchemaVersion},
            {"tool", {{"name", "csmverify"}, {"version", r.tool_version}}},
            {"group",
             {{"series", std::string(1, series_letter(r.series))},
              {"rank", r.rank},
              {"name", group_name(r)},
              {"order", r.order}}},
            {"options",
             {{"suites", requested}, {"max_length", r.max_length ? json(*r.max_length) : json(nullptr)}}},
            {"cache", {{"format_version", kCacheFormatVersion}, {"csm_convention", r.csm_convention}}},
            {"suites", std::move(suites)},
            {"meta_checks", std::move(meta)},
            {"summary", {{"exit_code", r.exit_code()}, {"violations", violations}, {"hard_failures", hard}}},
            {"elapsed_ms", r.elapsed_ms}};
}

std::string report_to_csv(const VerificationReport& r)
{
    std::ostringstream out;
    out << "group,suite,suite_status,check,hard,instances,failures\n";
    for (const auto& s : r.suites)
        for (const auto& c : s.checks)
            out << group_name(r) << ',' << suite_name(s.suite) << ',' << s.status() << ',' << csv_field(c.name) << ','
                << (c.hard ? "true" : "false") << ',' << c.instances << ',' << c.failures << '\n';
    for (const auto& m : r.meta)
        out << group_name(r) << ",meta," << m.status << ',' << csv_field(m.name) << ",true,"
            << (m.status == "NOT_APPLICABLE" ? 0 : 1) << ',' << (m.status == "FAIL" ? 1 : 0) << '\n';
    return out.str();
}

std::string render_report(const VerificationReport& r, ReportFormat f)
{
    if (f == ReportFormat::Csv)
        return report_to_csv(r);
    return report_to_json(r).dump(2) + "\n";
}

std::string report_summary(const VerificationReport& r)
{
    std::ostringstream out;
    for (const auto& s : r.suites) {
        const std::string unit = per_triple(s.suite) ? "triples" : "pairs";
        const std::size_t bad = flagged_instances(s);
        const std::size_t good = s.instances_checked >= bad ? s.instances_checked - bad : 0;
        out << suite_name(s.suite) << ": " << good << '/' << s.instances_checked << ' ' << unit << " pass";
        if (!s.violations.empty())
            out << ", " << s.violations.size() << " violation(s)";
        if (!s.hard_failures.empty())
            out << ", " << s.hard_failures.size() << " HARD FAILURE(S)";
        if (s.instances_checked != s.predicted_instances)
            out << " (predicted " << s.predicted_instances << ")";
        out << '\n';
    }
    for (const auto& m : r.meta)
        out << "meta " << m.name << ": " << m.status << " (" << m.detail << ")\n";
    return out.str();
}

json without_timings(json j)
{
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items())
            v = without_timings(v);
    } else if (j.is_array()) {
        for (auto& v : j)
            v = without_timings(v);
    }
    return j;
}

} // namespace schubert
