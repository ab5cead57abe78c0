#pragma once

#include <json.hpp>

#include "circind/checks.hpp"
#include "circind/search.hpp"

namespace circind {

// Structured records are JSON objects with stable key order; one object per
// line when streamed. Wall time and worker counts never appear, so equal
// inputs serialize byte-identically.
nlohmann::ordered_json to_json(const CheckCertificate& cert);
nlohmann::ordered_json to_json(const ZeroRecord& record);
nlohmann::ordered_json to_json(const SearchSummary& summary);
nlohmann::ordered_json to_json(const ReconcileReport& report);

ZeroRecord zero_record_from_json(const nlohmann::json& j);

std::string certificate_text(const CheckCertificate& cert);

}  // namespace circind
