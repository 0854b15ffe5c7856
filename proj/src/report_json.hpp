#pragma once

// JSON views of library results, shared by the report serializers and the CLI.

#include "tbn/io.hpp"

#include <json.hpp>

namespace tbn::detail {

using Json = nlohmann::ordered_json;

Json polymer_json(const Polymer& polymer, int count);
Json configuration_json(const Configuration& config);
Json stable_json(const StableReport& report, const StableReportOptions& options);
Json gap_json(const EntropyGapReport& report);
Json verify_json(const VerifyReport& report);
Json basis_json(const PolymerBasis& basis);

std::string dump(const Json& json);

} // namespace tbn::detail
