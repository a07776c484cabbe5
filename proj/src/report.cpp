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

#include "wpcy/report.hpp"

#include <charconv>
#include <sstream>

#include "wpcy/bipoly.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/face_epoly.hpp"
#include "wpcy/orbifold.hpp"

namespace wpcy::report {

namespace {

json IntegerJson(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json OptionalHodge(const EFunction& e, long dim, json& doc) {
  if (!e.is_polynomial()) return nullptr;
  try {
    return HodgeJson(ExtractHodge(e.to_polynomial(), dim));
  } catch (const Error& err) {
    doc["hodge_error"] = err.what();
    return nullptr;
  }
}

json PerLJson(const WeightVector& wv, const std::vector<EFunction>& pieces) {
  json out = json::array();
  for (const auto& e : wv.elements()) {
    out.push_back({{"l", e.l},
                   {"age", e.age},
                   {"size", e.size},
                   {"e", EFunctionJson(pieces[static_cast<std::size_t>(e.l)])}});
  }
  return out;
}

bool IsGrid(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& row) {
           return row.is_array() &&
                  std::all_of(row.begin(), row.end(), [](const json& x) { return !x.is_structured(); });
         });
}

std::string Scalar(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string Inline(const json& obj) {
  std::string s;
  for (const auto& [k, v] : obj.items()) {
    if (!s.empty()) s += " ";
    s += k + "=" + (v.is_structured() ? v.dump() : Scalar(v));
  }
  return s;
}

void Text(const json& doc, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, v] : doc.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      Text(v, indent + "  ", os);
    } else if (IsGrid(v)) {
      os << indent << key << ":\n";
      for (const auto& row : v) {
        os << indent << " ";
        for (const auto& x : row) os << " " << Scalar(x);
        os << "\n";
      }
    } else if (v.is_array()) {
      const bool flat =
          std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
      if (flat) {
        std::string joined;
        for (const auto& x : v) joined += (joined.empty() ? "" : ", ") + Scalar(x);
        os << indent << key << ": " << joined << "\n";
      } else {
        os << indent << key << ":\n";
        for (const auto& x : v) os << indent << "  " << (x.is_object() ? Inline(x) : x.dump()) << "\n";
      }
    } else {
      os << indent << key << ": " << Scalar(v) << "\n";
    }
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string CsvScalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return CsvField(v.get<std::string>());
  return v.dump();
}

std::string JoinWeights(const json& weights) {
  std::string s;
  for (const auto& x : weights) s += (s.empty() ? "" : ",") + x.dump();
  return s;
}

}  // namespace

json EFunctionJson(const EFunction& e) {
  if (e.is_polynomial()) return e.to_polynomial().to_string();
  json terms = json::array();
  for (const auto& [k, r] : e.terms()) {
    terms.push_back({{"u", k.first},
                     {"v", k.second},
                     {"numerator", r.expanded_numerator().to_string("(u*v)")},
                     {"denominator", r.expanded_denominator().to_string("(u*v)")}});
  }
  return {{"terms", terms}};
}

json HodgeJson(const HodgeTable& h) {
  json grid = json::array();
  for (const auto& row : h.h) {
    json r = json::array();
    for (const auto& x : row) r.push_back(IntegerJson(x));
    grid.push_back(r);
  }
  return grid;
}

json Analyze(const WeightVector& wv) {
  json doc;
  doc["weights"] = wv.weights();
  doc["w"] = wv.degree();
  json charges = json::array();
  for (std::size_t i = 0; i < wv.size(); ++i) charges.push_back(ToString(wv.charge(i)));
  doc["charges"] = charges;
  doc["well_formed"] = true;
  doc["ip"] = wv.ip();
  doc["transverse"] = wv.transverse();
  json census = json::array();
  for (const auto& [key, count] : ComputeCensus(wv)) {
    census.push_back({{"size", key.first}, {"age", key.second}, {"count", count}});
  }
  doc["census"] = census;
  doc["psi"] = Psi(wv);
  doc["milnor"] = ToString(MilnorNumber(wv));
  return doc;
}

json Stringy(const WeightVector& wv, bool per_l, const StringyOptions& opts) {
  json doc;
  doc["weights"] = wv.weights();
  doc["w"] = wv.degree();
  doc["ip"] = wv.ip();
  doc["transverse"] = wv.transverse();
  const EFunction e = StringyE(wv, opts);
  const auto pieces = StringyEPerL(wv, opts);
  doc["stringy_polynomial"] = e.is_polynomial();
  doc["no_mirror"] = !e.is_polynomial();
  doc["e_str"] = EFunctionJson(e);
  doc["hodge"] = OptionalHodge(e, wv.dim() - 1, doc);
  doc["euler_str"] = ToString(StringyEuler(wv, opts));
  doc["untwisted_euler"] = ToString(pieces.front().value_at_one());
  if (per_l) doc["per_l"] = PerLJson(wv, pieces);
  return doc;
}

json Orbifold(const WeightVector& wv, bool per_l) {
  json doc;
  doc["weights"] = wv.weights();
  doc["w"] = wv.degree();
  doc["ip"] = wv.ip();
  doc["transverse"] = wv.transverse();
  const auto result = MirrorOrbifoldE(wv);
  const long n = wv.dim() - 1;
  doc["formal"] = result.formal;
  doc["mirror_e"] = EFunctionJson(result.value);
  doc["euler_mirror"] = ToString(result.euler);
  doc["euler_orb"] = ToString(VafaEuler(wv));
  doc["e_orb"] = nullptr;
  doc["hodge"] = nullptr;
  if (result.value.is_polynomial()) {
    try {
      const BiPoly e_orb = MirrorTransform(result.value.to_polynomial(), n);
      doc["e_orb"] = e_orb.to_string();
      doc["hodge"] = HodgeJson(ExtractHodge(e_orb, n));
    } catch (const Error& err) {
      doc["hodge_error"] = err.what();
    }
  }
  try {
    doc["poincare"] = VafaPoincare(wv).to_string();
  } catch (const Error&) {
    doc["poincare"] = nullptr;
  }
  doc["q_identity"] = QIdentityCheck(wv);
  if (per_l) doc["per_l"] = PerLJson(wv, result.per_l);
  return doc;
}

json MirrorCheck(const VerificationReport& r) {
  json doc = ScanRow(r);
  doc["global_identity"] = r.global_identity;
  doc["per_l_failures"] = r.per_l_failures;
  doc["euler_consistent"] = r.euler_consistent;
  doc["poincare_agrees"] = r.poincare_agrees ? json(*r.poincare_agrees) : json(nullptr);
  doc["no_mirror"] = r.no_mirror();
  doc["e_orb_mirror"] = EFunctionJson(r.orbifold);
  doc["hodge_orbifold"] = r.hodge_orbifold ? HodgeJson(*r.hodge_orbifold) : json(nullptr);
  json pairs = json::array();
  for (const auto& h : r.hodge_mirror_pairs) {
    pairs.push_back({{"p", h.p},
                     {"q", h.q},
                     {"mirror", IntegerJson(h.mirror)},
                     {"orbifold", IntegerJson(h.orbifold)},
                     {"ok", h.ok}});
  }
  doc["hodge_pairs"] = pairs;
  if (!r.hodge_error.empty()) doc["hodge_error"] = r.hodge_error;
  return doc;
}

json ScanRow(const VerificationReport& r) {
  json doc;
  doc["weights"] = r.weights;
  doc["w"] = r.degree;
  doc["ip"] = r.ip;
  doc["transverse"] = r.transverse;
  doc["stringy_polynomial"] = r.stringy_polynomial;
  doc["e_str"] = EFunctionJson(r.stringy);
  doc["hodge"] = r.hodge_mirror ? HodgeJson(*r.hodge_mirror) : json(nullptr);
  doc["euler_str"] = ToString(r.euler_str);
  doc["euler_orb"] = ToString(r.euler_orb);
  doc["mirror_check"] = r.status();
  return doc;
}

std::string ToText(const json& doc) {
  std::ostringstream os;
  Text(doc, "", os);
  return os.str();
}

std::string ToCsv(const json& doc) {
  std::vector<std::string> header;
  std::vector<std::string> row;
  for (const auto& [key, v] : doc.items()) {
    if (key == "weights") {
      row.push_back(CsvField(JoinWeights(v)));
    } else if (v.is_structured()) {
      continue;
    } else {
      row.push_back(CsvScalar(v));
    }
    header.push_back(key);
  }
  auto join = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
  };
  return join(header) + join(row);
}

std::string ScanCsvHeader() {
  return "weights,w,ip,transverse,stringy_polynomial,h11,h21,euler_str,euler_orb,mirror_check\n";
}

std::string ScanCsvRow(const json& row) {
  std::string h11;
  std::string h21;
  const json& hodge = row.at("hodge");
  if (hodge.is_array()) {
    const std::size_t n = hodge.size() - 1;
    if (n >= 1) h11 = hodge[1][1].dump();
    if (n >= 2) h21 = hodge[2][1].dump();
  }
  std::ostringstream os;
  os << CsvField(JoinWeights(row.at("weights"))) << ',' << row.at("w").dump() << ','
     << CsvScalar(row.at("ip")) << ',' << CsvScalar(row.at("transverse")) << ','
     << CsvScalar(row.at("stringy_polynomial")) << ',' << h11 << ',' << h21 << ','
     << CsvScalar(row.at("euler_str")) << ',' << CsvScalar(row.at("euler_orb")) << ','
     << CsvScalar(row.at("mirror_check")) << '\n';
  return os.str();
}

std::vector<long> ParseWeights(const std::string& text) {
  std::vector<long> out;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t") == std::string::npos) {
    throw Error(ErrorKind::kEmptyInput, "no weights given");
  }
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument, "empty entry in weight list \"" + text + "\"");
    }
    item = item.substr(first, last - first + 1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::kInvalidArgument, "not an integer weight: \"" + item + "\"");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

}  // namespace wpcy::report
