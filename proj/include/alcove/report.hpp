#pragma once

#include <json.hpp>

#include "alcove/verify.hpp"

namespace alcove {

inline constexpr const char* kSchemaVersion = "1.0";

using Json = nlohmann::ordered_json;

// Full structural report for one type: lattice data, alcove geometry, the
// alcove symmetry group, K-theory ranks, stabilizers at the special point by
// both methods, sampled fibers, the component table, and the check suite.
// Output is deterministic byte for byte for fixed options.
Json report_document(const CartanType& t, const VerifyOptions& opt);

// Extended-quotient view: component table plus fibers over the special point
// and over sampled points.
Json extquot_document(const CartanType& t, const VerifyOptions& opt);

Json verify_document(const std::vector<CheckResult>& results,
                     const VerifyOptions& opt);

std::string render_report(const Json& doc);
std::string render_extquot(const Json& doc);
std::string render_verify(const Json& doc);

// dump(2) with a trailing newline; the single serialization point.
std::string to_bytes(const Json& doc);

}  // namespace alcove
