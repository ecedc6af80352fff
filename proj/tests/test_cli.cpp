/*
   Copyright 2026 The polarcore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polarcore/cli.hpp"
#include "polarcore/json_io.hpp"

using namespace polarcore;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polarcore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() / ("polarcore_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  out << j.dump(2);
}

}  // namespace

TEST_CASE("documented invocations") {
  const Run s = run({"spectrum", "--kind", "parabolic", "-n", "5", "-q", "3"});
  REQUIRE(s.code == 0);
  const Json j = s.json();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "spectrum");
  CHECK(j["result"]["pairs"] == Json::parse("[[80,1],[8,90],[-1,80],[-10,72]]"));
  CHECK(j["result"]["hoffman"] == "27");
  CHECK(j["result"]["graph"] == "VO5(3^1)");
  CHECK(j["config"]["n"] == 5);

  const Run o = run({"ovoid", "search", "--quadric", "parabolic", "-n", "5", "-q", "3"});
  REQUIRE(o.code == 0);
  CHECK(o.json()["result"]["size"] == 10);
  CHECK(o.json()["result"]["is_ovoid"] == true);

  const Run m = run({"map", "verify", "--example", "exa5", "-q", "3", "--mode", "exhaustive"});
  REQUIRE(m.code == 0);
  CHECK(m.json()["result"]["report"]["violations"] == 0);
  CHECK(m.json()["result"]["report"]["pairs_checked"] == 9720);
  CHECK(m.json()["result"]["report"]["image_size"] == 9);
}

TEST_CASE("field elements are strings") {
  const Run r = run({"field", "-q", "9", "--elements"});
  REQUIRE(r.code == 0);
  const std::string text = r.out;
  CHECK(text.find("\"t+1\"") != std::string::npos);
  const Run c = run({"classify", "-q", "3", "--kind", "hyperbolic", "-n", "4"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["result"]["class"]["kind"] == "hyperbolic");
  CHECK(c.json()["result"]["isotropic_vectors"] == 33);
}

TEST_CASE("spectrum cross-check") {
  const Run r = run({"spectrum", "--kind", "elliptic", "-n", "4", "-q", "3", "--method", "all"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  REQUIRE(j["result"]["cross_check"].size() == 3);
  for (const auto& c : j["result"]["cross_check"]) CHECK(c["agrees"] == true);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::vector<std::string>> cmds{
      {"spectrum", "--kind", "hyperbolic", "-n", "4", "-q", "3", "--method", "all"},
      {"mis", "-q", "3", "--kind", "elliptic", "-n", "4", "--core"},
      {"ovoid", "search", "--quadric", "parabolic", "-n", "5", "-q", "3", "--audit"},
      {"map", "verify", "--example", "dim6_kantor", "-q", "11", "--mode", "sampled", "--samples", "2000",
       "--seed", "17"},
      {"map", "verdict", "-q", "3", "-n", "5"},
  };
  for (const auto& c : cmds) {
    CAPTURE(c[0]);
    const Run a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const Json s = run(cmds[3]).json();
  CHECK(s["result"]["report"]["seed"] == 17);
  CHECK(s["config"]["seed"] == 17);
}

TEST_CASE("emitted certificates re-verify") {
  TempDir dir;
  struct Case {
    std::vector<std::string> build;
    std::vector<std::string> verify;
  };
  const std::vector<Case> cases{
      {{"clique", "-q", "3", "--kind", "parabolic", "-n", "5"}, {"clique", "--verify"}},
      {{"mis", "-q", "3", "--kind", "hyperbolic", "-n", "4"}, {"mis", "--verify"}},
      {{"mis", "-q", "3", "--kind", "hyperbolic", "-n", "4", "--core"}, {"mis", "--verify"}},
      {{"mis", "-q", "3", "--kind", "parabolic", "-n", "5", "--quadric-graph"}, {"mis", "--verify"}},
      {{"ovoid", "search", "--quadric", "parabolic", "-n", "5", "-q", "3"}, {"ovoid", "verify", "--in"}},
      {{"ovoid", "construct", "--example", "primer1", "-q", "3"}, {"ovoid", "verify", "--in"}},
      {{"ovoid", "transfer", "--quadric", "parabolic", "-n", "5", "-q", "3"}, {"ovoid", "verify", "--in"}},
      {{"map", "build", "semilinear", "-q", "3", "-n", "4", "--a", "2", "--matrix", "anti-lorentz", "--x0", "1,0,0,0"},
       {"map", "verify", "--in"}},
      {{"map", "build", "factor", "-q", "3", "-n", "5", "--construction", "primer1"}, {"map", "verify", "--in"}},
      {{"map", "build", "example", "--example", "dim3", "-q", "3"}, {"map", "verify", "--in"}},
  };
  int i = 0;
  for (const auto& c : cases) {
    CAPTURE(c.build[0]);
    CAPTURE(i);
    const std::string path = dir.file("cert" + std::to_string(i++) + ".json");
    auto build = c.build;
    build.insert(build.end(), {"--out", path});
    const Run b = run(build);
    REQUIRE(b.code == 0);
    CHECK(b.out.empty());
    auto verify = c.verify;
    verify.push_back(path);
    const Run v = run(verify);
    CHECK(v.code == 0);
    const Json j = v.json();
    if (j["result"].contains("certificates_checked")) {
      CHECK(j["result"]["certificates_checked"].get<int>() >= 1);
      CHECK(j["result"]["valid"] == true);
    } else {
      CHECK(j["result"]["report"]["passed"] == true);
    }
  }
}

TEST_CASE("tampered certificates exit with 2") {
  TempDir dir;
  const std::string path = dir.file("clique.json");
  REQUIRE(run({"clique", "-q", "3", "--kind", "parabolic", "-n", "5", "--out", path}).code == 0);
  Json j = read_json(path);
  auto& vs = j["result"]["vertices"];
  REQUIRE(vs.size() == 9);
  vs[1] = Json::parse(R"(["1","0","0","0","0"])");
  write_json(path, j);
  const Run v = run({"clique", "--verify", path});
  CHECK(v.code == 2);
  CHECK(v.json()["result"]["valid"] == false);

  const std::string opath = dir.file("ovoid.json");
  REQUIRE(run({"ovoid", "search", "--quadric", "parabolic", "-n", "5", "-q", "3", "--out", opath}).code == 0);
  Json o = read_json(opath);
  o["result"]["points"][0] = o["result"]["points"][1];
  write_json(opath, o);
  CHECK(run({"ovoid", "verify", "--in", opath}).code == 2);

  const std::string mpath = dir.file("map.json");
  REQUIRE(run({"map", "build", "semilinear", "-q", "3", "-n", "4", "--a", "2", "--matrix", "anti-lorentz", "--out",
               mpath}).code == 0);
  Json m = read_json(mpath);
  m["result"]["map"]["P"][2] = Json::parse(R"(["0","0","1","0"])");
  write_json(mpath, m);
  const Run mv = run({"map", "verify", "--in", mpath});
  CHECK(mv.code == 2);
  CHECK(mv.json()["result"]["results"][0]["reason"].get<std::string>().find("NotIsometry") == 0);

  const std::string fpath = dir.file("factor.json");
  REQUIRE(run({"map", "build", "factor", "-q", "3", "-n", "5", "--construction", "primer1", "--out", fpath}).code == 0);
  Json f = read_json(fpath);
  f["result"]["map"]["indep"][3] = f["result"]["map"]["indep"][4];
  write_json(fpath, f);
  CHECK(run({"map", "verify", "--in", fpath}).code == 2);
}

TEST_CASE("usage and configuration errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"spectrum", "--kind", "parabolic", "-q", "3"}).code == 1);
  CHECK(run({"spectrum", "--kind", "parabolic", "-n", "5", "-q", "3", "--bogus"}).code == 1);
  CHECK(run({"spectrum", "--kind", "parabolic", "-n", "5", "-q", "3", "--method", "guess"}).code == 1);
  const Run f = run({"spectrum", "--field", "9", "--kind", "elliptic", "-n", "2"});
  CHECK(f.code == 1);
  const Json e = Json::parse(f.err);
  CHECK(e["error"] == "NonPrime");
  CHECK(run({"map", "build", "semilinear", "-q", "5", "-n", "4", "--a", "1", "--matrix", "identity"}).code == 1);
  CHECK(run({"clique", "--verify", "/nonexistent/cert.json"}).code == 1);
}

TEST_CASE("pretty output") {
  const Run r = run({"graph", "-q", "3", "--kind", "elliptic", "-n", "4", "--pretty"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("schema") == 0);
  CHECK(r.out.find("result.") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}
