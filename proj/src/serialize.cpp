#include "circind/serialize.hpp"

#include <sstream>

#include "circind/format.hpp"

namespace circind {

nlohmann::ordered_json to_json(const CheckCertificate& cert) {
    nlohmann::ordered_json j;
    j["type"] = "certificate";
    j["version"] = kToolVersion;
    j["statement_id"] = cert.statement_id;
    nlohmann::ordered_json params;
    for (const auto& [key, value] : cert.parameters) params[key] = value;
    j["parameters"] = std::move(params);
    j["mode"] = cert.mode;
    j["seed"] = cert.seed;
    j["instances_checked"] = cert.instances_checked;
    j["passed"] = cert.passed;
    if (cert.counterexample) {
        j["counterexample"] = {{"set", cert.counterexample->set},
                               {"observed", cert.counterexample->observed}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["evidence"] = cert.evidence;
    j["evidence_digest"] = cert.evidence_digest;
    return j;
}

nlohmann::ordered_json to_json(const ZeroRecord& record) {
    nlohmann::ordered_json j;
    j["type"] = "zero_class";
    j["n"] = record.n;
    j["representative"] = record.representative;
    j["orbit_size"] = record.orbit_size;
    j["fvector"] = record.fvector.counts;
    j["chi"] = record.chi;
    if (record.matched_reference_entry)
        j["matched_reference_entry"] = *record.matched_reference_entry;
    return j;
}

nlohmann::ordered_json to_json(const SearchSummary& summary) {
    nlohmann::ordered_json j;
    j["type"] = "summary";
    j["format_version"] = summary.format_version;
    j["n"] = summary.n;
    j["classes_total"] = summary.classes_total;
    j["subsets_total"] = summary.subsets_total;
    j["zero_classes"] = summary.zero_classes;
    j["last_class"] = summary.last_class;
    return j;
}

nlohmann::ordered_json to_json(const ReconcileReport& report) {
    nlohmann::ordered_json j;
    j["type"] = "reconciliation";
    j["version"] = kToolVersion;
    j["n"] = report.n;
    nlohmann::ordered_json matched = nlohmann::ordered_json::array();
    for (const auto& m : report.matched)
        matched.push_back({{"table_entry", m.table_entry},
                           {"representative", m.representative},
                           {"orbit_size", m.orbit_size}});
    j["matched"] = std::move(matched);
    j["unmatched_table_entries"] = report.unmatched_table_entries;
    nlohmann::ordered_json extras = nlohmann::ordered_json::array();
    for (const auto& extra : report.unmatched_classes)
        extras.push_back({{"representative", extra.representative},
                          {"same_fvector_entries", extra.same_fvector_entries}});
    j["classes_not_in_table"] = std::move(extras);
    j["fully_attributed"] = report.fully_attributed();
    return j;
}

ZeroRecord zero_record_from_json(const nlohmann::json& j) {
    ZeroRecord record;
    record.n = j.at("n").get<int>();
    record.representative = j.at("representative").get<std::vector<int>>();
    record.orbit_size = j.at("orbit_size").get<int>();
    record.fvector.counts = j.at("fvector").get<std::vector<std::int64_t>>();
    record.chi = j.at("chi").get<std::int64_t>();
    if (j.contains("matched_reference_entry") && !j["matched_reference_entry"].is_null())
        record.matched_reference_entry = j["matched_reference_entry"].get<std::vector<int>>();
    return record;
}

std::string certificate_text(const CheckCertificate& cert) {
    std::ostringstream out;
    out << "certificate " << cert.statement_id << " (";
    for (std::size_t i = 0; i < cert.parameters.size(); ++i) {
        if (i) out << ", ";
        out << cert.parameters[i].first << '=' << cert.parameters[i].second;
    }
    out << ")\n";
    out << "  mode: " << cert.mode;
    if (cert.mode == "sampled") out << " (seed " << cert.seed << ")";
    out << "\n  instances checked: " << cert.instances_checked << "\n";
    for (const auto& line : cert.evidence) out << "  evidence: " << line << "\n";
    out << "  evidence digest: " << cert.evidence_digest << "\n";
    if (cert.counterexample)
        out << "  counterexample: " << render_set_braced(cert.counterexample->set) << " ("
            << cert.counterexample->observed << ")\n";
    out << "  result: " << (cert.passed ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

}  // namespace circind
