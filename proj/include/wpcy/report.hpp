// Copyright 2026 The wpcy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WPCY_REPORT_HPP_
#define WPCY_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "wpcy/efunction.hpp"
#include "wpcy/mirror_verify.hpp"
#include "wpcy/stringy.hpp"
#include "wpcy/weights.hpp"

namespace wpcy::report {

using nlohmann::json;

/// A polynomial E-function renders as a string; anything else as
/// {"terms": [{"u": a, "v": b, "numerator": ..., "denominator": ...}]}.
json EFunctionJson(const EFunction& e);
json HodgeJson(const HodgeTable& h);

json Analyze(const WeightVector& wv);
json Stringy(const WeightVector& wv, bool per_l, const StringyOptions& opts);
json Orbifold(const WeightVector& wv, bool per_l);
json MirrorCheck(const VerificationReport& r);
/// One scan row: the mirror-check document without the detail fields.
json ScanRow(const VerificationReport& r);

/// "key: value" lines; nested objects are indented, Hodge grids printed
/// as rows.
std::string ToText(const json& doc);

/// Header plus one row of the scalar fields of `doc`, in key order.
std::string ToCsv(const json& doc);

/// Fixed scan columns.
std::string ScanCsvHeader();
std::string ScanCsvRow(const json& row);

/// Parses "1,5,12,18". Throws Error(kInvalidArgument) on malformed text and
/// Error(kEmptyInput) on an empty list.
std::vector<long> ParseWeights(const std::string& text);

}  // namespace wpcy::report

#endif  // WPCY_REPORT_HPP_
