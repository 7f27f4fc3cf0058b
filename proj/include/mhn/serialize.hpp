#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "mhn/polystruct.hpp"
#include "mhn/spectral.hpp"
#include "mhn/wave.hpp"

namespace mhn {

/// Cache entries and provenance strings carry this version; bumping it
/// invalidates previously cached representations.
inline constexpr const char* kEngineVersion = "1.0.0";

/// One exact result with enough context to audit where it came from.
/// timestamp stays empty unless explicitly requested (deterministic output
/// is the default).
struct ResultRecord {
    std::string key;
    std::string value;       // canonical rational: "p/q", or "p" when q = 1
    std::string provenance;  // pipeline name + engine version
    std::string timestamp;

    bool operator==(const ResultRecord& o) const {
        return key == o.key && value == o.value && provenance == o.provenance &&
               timestamp == o.timestamp;
    }
};

/// {"g":..,"n":..,"terms":[{"k":[..],"c":".."}]} with one term per
/// symmetric orbit (weakly decreasing exponents); exact rational strings.
nlohmann::json omega_to_json(const PoleBasisDifferential& w);
PoleBasisDifferential omega_from_json(const nlohmann::json& j);

/// {"g":..,"n":..,"monomials":[{"a":[..],"c":".."}]} with symmetrized
/// monomials listed once (weakly decreasing exponents).
nlohmann::json tensor_to_json(const CoefficientTensor& t);
CoefficientTensor tensor_from_json(const nlohmann::json& j);

/// Flat map {"g,(mu)": "p/q"} for persisting computed Hurwitz values.
nlohmann::json hurwitz_map_to_json(
    const std::map<std::pair<unsigned, Partition>, Rational>& values);
std::map<std::pair<unsigned, Partition>, Rational> hurwitz_map_from_json(
    const nlohmann::json& j);

/// "d,m,coefficient" rows over the valid grid, header included.
std::string wave_to_csv(const BivariateSeries& z);

nlohmann::json record_to_json(const ResultRecord& r);
ResultRecord record_from_json(const nlohmann::json& j);

/// Deterministic rendering: sorted object keys, two-space indent, newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace mhn
