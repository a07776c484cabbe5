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

// Command-line front end: analyze, stringy, orbifold, mirror-check, scan.
//
// Exit codes: 0 success (a missing mirror is a finding, not an error),
// 2 invalid input, 3 weight vector without the IP property, 4 internal
// failure, including a mirror check that does not pass.

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "wpcy/errors.hpp"
#include "wpcy/mirror_verify.hpp"
#include "wpcy/report.hpp"
#include "wpcy/weights.hpp"

namespace {

using wpcy::Error;
using wpcy::ErrorKind;
using wpcy::report::json;

constexpr long kMaxScanDim = 6;
constexpr long kMaxScanDegree = 256;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyInput:
    case ErrorKind::kNotWellFormed:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kOutOfRange:
    case ErrorKind::kNonIntegerMilnor:
      return 2;
    case ErrorKind::kNotIP:
      return 3;
    default:
      return 4;
  }
}

struct Settings {
  std::string weights;
  std::string format = "text";
  bool assume_transverse = false;
  bool per_l = false;
  std::optional<long> guard;
  long dim = 0;
  long wmax = 0;
  long skip = 0;
};

wpcy::WeightVector Load(const Settings& s) {
  auto wv = wpcy::WeightVector::Validate(wpcy::report::ParseWeights(s.weights));
  return s.assume_transverse ? wv.assuming_transverse() : wv;
}

void Emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << wpcy::report::ToCsv(doc);
  } else {
    std::cout << wpcy::report::ToText(doc);
  }
}

// Sorted weight vectors of length n with sum <= wmax, in lexicographic order.
void ForEachCandidate(long n, long wmax, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long lo, long budget) {
    if (static_cast<long>(cur.size()) == n) {
      f(cur);
      return;
    }
    const long left = n - static_cast<long>(cur.size());
    for (long x = lo; x * left <= budget; ++x) {
      cur.push_back(x);
      rec(x, budget - x);
      cur.pop_back();
    }
  };
  rec(1, wmax);
}

std::optional<json> ScanOne(const std::vector<long>& weights) {
  std::optional<wpcy::WeightVector> wv;
  try {
    wv = wpcy::WeightVector::Validate(weights);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotWellFormed) return std::nullopt;
    throw;
  }
  if (!wv->ip()) return std::nullopt;
  return wpcy::report::ScanRow(wpcy::Verify(*wv));
}

int RunScan(const Settings& s) {
  if (s.dim < 1 || s.dim > kMaxScanDim) {
    throw Error(ErrorKind::kInvalidArgument,
                "--dim must lie in [1, " + std::to_string(kMaxScanDim) + "]");
  }
  if (s.wmax > kMaxScanDegree) {
    throw Error(ErrorKind::kInvalidArgument,
                "--wmax may not exceed " + std::to_string(kMaxScanDegree));
  }
  if (s.skip < 0) throw Error(ErrorKind::kInvalidArgument, "--skip must be non-negative");

  const std::size_t batch =
      4 * std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const bool as_json = s.format == "json";
  long seen = 0;
  bool header = false;
  std::vector<std::vector<long>> pending;

  auto flush = [&] {
    std::vector<std::future<std::optional<json>>> jobs;
    jobs.reserve(pending.size());
    for (const auto& w : pending) jobs.push_back(std::async(std::launch::async, ScanOne, w));
    for (auto& job : jobs) {
      auto row = job.get();
      if (!row) continue;
      if (seen++ < s.skip) continue;
      if (as_json) {
        std::cout << row->dump() << "\n";
      } else {
        if (!header) std::cout << wpcy::report::ScanCsvHeader();
        header = true;
        std::cout << wpcy::report::ScanCsvRow(*row);
      }
      std::cout.flush();
    }
    pending.clear();
  };

  ForEachCandidate(s.dim + 1, s.wmax, [&](const std::vector<long>& w) {
    pending.push_back(w);
    if (pending.size() >= batch) flush();
  });
  flush();
  return 0;
}

int Run(const std::string& command, const Settings& s) {
  if (command == "scan") return RunScan(s);
  wpcy::StringyOptions opts;
  opts.guard = s.guard;
  const auto wv = Load(s);
  if (command == "analyze") {
    Emit(wpcy::report::Analyze(wv), s.format);
  } else if (command == "stringy") {
    Emit(wpcy::report::Stringy(wv, s.per_l, opts), s.format);
  } else if (command == "orbifold") {
    Emit(wpcy::report::Orbifold(wv, s.per_l), s.format);
  } else {
    const auto report = wpcy::Verify(wv, opts);
    json doc = wpcy::report::MirrorCheck(report);
    if (s.per_l) {
      json pieces = json::array();
      for (const auto& e : wv.elements()) {
        pieces.push_back({{"l", e.l},
                          {"ok", std::find(report.per_l_failures.begin(),
                                           report.per_l_failures.end(),
                                           e.l) == report.per_l_failures.end()}});
      }
      doc["per_l"] = pieces;
    }
    if (s.format == "text") {
      std::string status = report.status();
      std::transform(status.begin(), status.end(), status.begin(),
                     [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      std::cout << status << "  euler_str=" << wpcy::ToString(report.euler_str)
                << " euler_orb=" << wpcy::ToString(report.euler_orb) << "\n";
    }
    Emit(doc, s.format);
    if (report.status() == "fail") return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stringy and orbifold E-functions of weighted Calabi-Yau hypersurfaces"};
  app.require_subcommand(1);
  Settings s;
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto single = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("weights", s.weights, "comma-separated weights, e.g. 1,5,12,18")->required();
    sub->add_option("--format", s.format, "text, json or csv")->check(CLI::IsMember(formats));
    sub->add_flag("--assume-transverse", s.assume_transverse,
                  "treat the weights as transverse regardless of the built-in test");
    return sub;
  };
  single("analyze", "weights, charges, IP and transversality, census, Milnor number");
  for (auto* sub : {single("stringy", "stringy E-function of the mirror"),
                    single("orbifold", "orbifold E-function and Poincare polynomial"),
                    single("mirror-check", "verify the mirror identity")}) {
    sub->add_flag("--per-l", s.per_l, "include the per-element decomposition");
  }
  for (const char* name : {"stringy", "mirror-check"}) {
    app.get_subcommand(name)->add_option("--guard", s.guard,
                                         "extra series terms certifying each bracket");
  }
  auto* scan = app.add_subcommand("scan", "verify every IP weight vector in a range");
  scan->add_option("--dim", s.dim, "number of weights minus one")->required();
  scan->add_option("--wmax", s.wmax, "largest degree w")->required();
  scan->add_option("--skip", s.skip, "number of leading rows to omit");
  scan->add_option("--format", s.format, "csv (also for text) or json lines")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Run(command, s);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
