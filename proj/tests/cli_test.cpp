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

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result Run(const std::string& args, const std::string& env = "") {
  const std::string err_path = "wpcy_cli_test_stderr.txt";
  const std::string cmd = env + " " + WPCY_CLI_PATH + " " + args + " 2>" + err_path;
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  r.err = ss.str();
  std::remove(err_path.c_str());
  return r;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze") {
  auto r = Run("analyze 1,5,12,18");
  CHECK(r.code == 0);
  CHECK(r.out.find("ip: yes\n") != std::string::npos);
  CHECK(r.out.find("transverse: yes\n") != std::string::npos);
  CHECK(r.out.find("w: 36\n") != std::string::npos);
  CHECK(r.out.find("milnor: 434\n") != std::string::npos);

  r = Run("analyze 1,1,2,4,5 --format json");
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("ip") == true);
  CHECK(doc.at("transverse") == false);

  r = Run("analyze 2,2,4");
  CHECK(r.code == 2);
  CHECK(r.err.find("NotWellFormed") != std::string::npos);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(Run("analyze 1,x,3").code == 2);
  CHECK(Run("analyze 1,-2,3").code == 2);
  CHECK(Run("analyze").code == 2);
  CHECK(Run("frobnicate 1,2,3").code == 2);
  CHECK(Run("stringy 1,5,12,18 --format yaml").code == 2);
  CHECK(Run("scan --dim 9 --wmax 10").code == 2);
  CHECK(Run("--help").code == 0);
}

TEST_CASE("stringy") {
  auto r = Run("stringy 1,5,12,18 --format json");
  CHECK(r.code == 0);
  CHECK(r.out == ReadFile(std::string(WPCY_GOLDEN_DIR) + "/stringy_1_5_12_18.json"));
  const json doc = json::parse(r.out);
  CHECK(doc.at("e_str") == "1 + u^2 + 20*u*v + v^2 + (u*v)^2");
  CHECK(doc.dump(2) + "\n" == r.out);

  r = Run("stringy 1,1,2,4,5");
  CHECK(r.code == 0);
  CHECK(r.out.find("untwisted_euler: 1092/5\n") != std::string::npos);
  CHECK(r.out.find("stringy_polynomial: no\n") != std::string::npos);
  CHECK(r.out.find("no_mirror: yes\n") != std::string::npos);

  r = Run("stringy 1,1,1,5");
  CHECK(r.code == 3);
  CHECK(r.err.find("NotIP") != std::string::npos);
}

TEST_CASE("guard band settings give the same result") {
  const auto base = Run("stringy 1,1,2,2,2 --format json").out;
  CHECK(Run("stringy 1,1,2,2,2 --format json --guard 0").out == base);
  CHECK(Run("stringy 1,1,2,2,2 --format json", "MIRROR_STRINGY_GUARD=2").out == base);
}

TEST_CASE("orbifold") {
  auto r = Run("orbifold 1,1,1,1,1 --format json");
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("poincare") == "1 + 101*u*v + u^3 + u^2*v + u*v^2 + v^3 + 101*(u*v)^2 + (u*v)^3");
  CHECK(doc.at("euler_orb") == "-200");
  CHECK(doc.at("q_identity") == true);
  CHECK(doc.at("hodge")[2][1] == 101);
  CHECK(doc.at("hodge")[1][1] == 1);
  // Defined without the IP property as well.
  CHECK(Run("orbifold 1,1,1,5").code == 0);
}

TEST_CASE("mirror-check") {
  auto r = Run("mirror-check 1,1,2,2,2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS  euler_str=168 euler_orb=-168\n", 0) == 0);
  r = Run("mirror-check 1,1,2,4,5 --format json --per-l");
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("mirror_check") == "n/a");
  CHECK(doc.at("no_mirror") == true);
  CHECK(doc.at("global_identity") == true);
  CHECK(doc.at("per_l").size() == 13);
  r = Run("mirror-check 1,5,12,18 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("formats carry the same values") {
  const json doc = json::parse(Run("stringy 1,5,12,18 --format json").out);
  const auto text = Run("stringy 1,5,12,18").out;
  const auto csv = Run("stringy 1,5,12,18 --format csv").out;
  for (const char* key : {"euler_str", "untwisted_euler"}) {
    const std::string value = doc.at(key).get<std::string>();
    CHECK(text.find(std::string(key) + ": " + value + "\n") != std::string::npos);
    CHECK(csv.find("," + value + ",") != std::string::npos);
  }
}

TEST_CASE("scan") {
  auto r = Run("scan --dim 4 --wmax 10");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("weights,w,ip,transverse,stringy_polynomial,h11,h21,euler_str,euler_orb,mirror_check\n", 0) == 0);
  CHECK(r.out.find("\"1,1,1,1,1\",5,true,true,true,101,1,200,-200,pass\n") != std::string::npos);

  r = Run("scan --dim 3 --wmax 36 --format json");
  CHECK(r.code == 0);
  bool found = false;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::vector<long>> order;
  while (std::getline(lines, line)) {
    const json row = json::parse(line);
    CHECK(row.dump() == line);
    order.push_back(row.at("weights").get<std::vector<long>>());
    if (row.at("weights") == json({1, 5, 12, 18})) {
      found = true;
      CHECK(row.at("euler_str") == "24");
    }
    CHECK(row.at("mirror_check") == "pass");
  }
  CHECK(found);
  CHECK(std::is_sorted(order.begin(), order.end()));

  r = Run("scan --dim 3 --wmax 3");
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  const auto full = Run("scan --dim 3 --wmax 20 --format json").out;
  const auto skipped = Run("scan --dim 3 --wmax 20 --format json --skip 2").out;
  std::size_t cut = 0;
  for (int i = 0; i < 2; ++i) cut = full.find('\n', cut) + 1;
  CHECK(full.substr(cut) == skipped);
}
