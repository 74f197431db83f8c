// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"
#include "vardecomp/image_io.hpp"
#include "vardecomp_cli/cli.hpp"

using namespace vardecomp;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "vardecomp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> keys(const Json& j) {
  std::set<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.insert(it.key());
  return k;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("synth writes components, previews and a spec echo") {
    testutil::TempDir dir("synth");
    const Result r = run({"synth", "--out", dir.path().string(), "-q"});
    REQUIRE(r.code == cli::kOk);
    for (const char* f : {"u0.raw", "v0.raw", "w0.raw", "f0.raw", "u0.pgm", "v0.pgm", "w0.pgm", "f0.pgm", "spec.json"}) {
      CHECK(std::filesystem::exists(dir / f));
    }
    const Json j = Json::parse(r.out);
    CHECK(j["kind"] == "synth");
    CHECK(j["spec"]["noise"]["sigma"] == 20.0);
    CHECK(r.err.empty());
  }

  TEST_CASE("synth is reproducible and the seed only moves the noise") {
    testutil::TempDir a("sa");
    testutil::TempDir b("sb");
    testutil::TempDir c("sc");
    REQUIRE(run({"synth", "--out", a.path().string(), "-q"}).code == 0);
    REQUIRE(run({"synth", "--out", b.path().string(), "-q"}).code == 0);
    REQUIRE(run({"synth", "--out", c.path().string(), "--seed", "5", "-q"}).code == 0);
    for (const char* f : {"u0.raw", "v0.raw", "w0.raw", "f0.raw"}) {
      CHECK(testutil::file_bytes(a / f) == testutil::file_bytes(b / f));
    }
    CHECK(testutil::file_bytes(a / "u0.raw") == testutil::file_bytes(c / "u0.raw"));
    CHECK(testutil::file_bytes(a / "v0.raw") == testutil::file_bytes(c / "v0.raw"));
    CHECK(testutil::file_bytes(a / "w0.raw") != testutil::file_bytes(c / "w0.raw"));
  }

  TEST_CASE("synth with sigma 0 writes a zero noise image") {
    testutil::TempDir d("s0");
    REQUIRE(run({"synth", "--out", d.path().string(), "--sigma", "0", "-q"}).code == 0);
    CHECK(max_abs(read_raw_float(d / "w0.raw")) == 0.0);
  }

  TEST_CASE("rof on a constant image writes a zero texture") {
    testutil::TempDir d("rof");
    write_raw_float(Image(16, 16, 90.0), d / "c.raw");
    const Result r = run({"decompose", "--input", (d / "c.raw").string(), "--model", "rof", "--lambda", "5",
                          "--out", (d / "run").string(), "-q"});
    REQUIRE(r.code == cli::kOk);
    CHECK(max_abs(read_raw_float(d / "run/v.raw")) == 0.0);
    CHECK(!std::filesystem::exists(d / "run/w.raw"));
    const Json j = Json::parse(r.out);
    CHECK(j["params"]["model"] == "rof");
    CHECK(j["params"]["lambda"] == 5.0);
  }

  TEST_CASE("validation errors exit with 1 and name the missing flag") {
    testutil::TempDir d("val");
    Result r = run({"decompose", "--model", "bv-g-g", "--lambda", "10", "--mu1", "1000", "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
    CHECK(r.err.find("--mu2") != std::string::npos);
    CHECK(r.out.empty());
    r = run({"decompose", "--model", "bv-q", "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
    r = run({"decompose", "--paper-preset", "Co", "--model", "rof", "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
    CHECK(r.err.find("conflicts") != std::string::npos);
    r = run({"decompose", "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
    r = run({"decompose", "--model", "rof", "--lambda", "abc", "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
    r = run({"frobnicate"});
    CHECK(r.code == cli::kValidation);
    r = run({"decompose", "--model", "bv-g-co", "--lambda", "1", "--mu", "1", "--delta", "1", "--dirs", "8,6",
             "--out", d.path().string()});
    CHECK(r.code == cli::kValidation);
  }

  TEST_CASE("missing files exit with 2") {
    testutil::TempDir d("io");
    Result r = run({"decompose", "--input", (d / "none.raw").string(), "--model", "rof", "--lambda", "1", "--out",
                    (d / "o").string()});
    CHECK(r.code == cli::kIo);
    r = run({"eval", "--reference", (d / "nothing").string(), "--u", "a.raw", "--v", "b.raw"});
    CHECK(r.code == cli::kIo);
  }

  TEST_CASE("help exits with 0") {
    const Result r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("decompose") != std::string::npos);
  }

  TEST_CASE("non-convergence exits with 3 after writing outputs") {
    testutil::TempDir d("nc");
    write_raw_float(testutil::random_image(32, 32, 1, 0.0, 255.0), d / "f.raw");
    const Result r = run({"decompose", "--input", (d / "f.raw").string(), "--model", "bv-g", "--lambda", "10",
                          "--mu", "50", "--n-step", "1", "--epsilon", "1e-9", "--out", (d / "o").string(), "-q"});
    CHECK(r.code == cli::kNotConverged);
    CHECK(std::filesystem::exists(d / "o/report.json"));
    CHECK(Json::parse(r.out)["converged"] == false);
  }

  TEST_CASE("evaluating the phantom against itself gives zeros") {
    testutil::TempDir d("self");
    REQUIRE(run({"synth", "--out", (d / "ref").string(), "-q"}).code == 0);
    const auto ref = (d / "ref").string();
    const Result r = run({"eval", "--reference", ref, "--u", ref + "/u0.raw", "--v", ref + "/v0.raw", "--w",
                          ref + "/w0.raw", "--out", (d / "m.json").string(), "-q"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["err_u"] == 0.0);
    CHECK(j["err_v"] == 0.0);
    CHECK(j["residue"] == 0.0);
    CHECK(Json::parse(testutil::file_bytes(d / "m.json")) == j);

    const Result csv = run({"eval", "--reference", ref, "--u", ref + "/u0.raw", "--v", ref + "/v0.raw",
                            "--format", "csv", "-q"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "run,err_u,err_v,residue,seconds\ncomponents,0,0,,0\n");
  }

  TEST_CASE("three-part runs give reports with identical schema") {
    testutil::TempDir d("schema");
    REQUIRE(run({"synth", "--out", (d / "ref").string(), "-q"}).code == 0);
    std::vector<Json> reports;
    for (const char* preset : {"JG", "AC2", "Co"}) {
      const auto out = (d / preset).string();
      const Result dec = run({"decompose", "--input", (d / "ref/f0.raw").string(), "--paper-preset", preset,
                              "--n-step", "2", "--out", out, "-q"});
      REQUIRE(dec.code != cli::kValidation);
      REQUIRE(dec.code != cli::kIo);
      const Result ev = run({"eval", "--reference", (d / "ref").string(), "--run", out, "-q"});
      REQUIRE(ev.code == 0);
      reports.push_back(Json::parse(ev.out));
      CHECK(std::filesystem::exists(d / preset / "metrics.json"));
    }
    for (const Json& j : reports) {
      CHECK(keys(j) == keys(reports.front()));
      CHECK(j["residue"].is_number());
      CHECK(keys(j["context"]) == keys(reports.front()["context"]));
    }
    CHECK(reports[0]["context"]["nu_weighted"] == true);
  }

  TEST_CASE("sweep emits the ten-row table") {
    Result r = run({"eval", "--sweep", "--jobs", "2", "-q"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["rows"].size() == 10);
    CHECK(j["fit"]["r_squared"].get<double>() > 0.99);
    r = run({"eval", "--sweep", "--format", "csv", "-q"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
    r = run({"eval", "--sweep", "--jobs", "0"});
    CHECK(r.code == cli::kValidation);
  }

  TEST_CASE("coefficient dump names bands by scale and direction") {
    testutil::TempDir d("dump");
    write_raw_float(testutil::random_image(64, 64, 3, 0.0, 255.0), d / "f.raw");
    const Result r = run({"decompose", "--input", (d / "f.raw").string(), "--model", "bv-g-co", "--lambda", "1",
                          "--mu", "100", "--delta", "5", "--n-step", "1", "--out", (d / "o").string(),
                          "--dump-coefficients", (d / "c").string(), "-q"});
    CHECK(r.code != cli::kValidation);
    CHECK(std::filesystem::exists(d / "c/ct_approx.raw"));
    CHECK(std::filesystem::exists(d / "c/ct_j0_k7.raw"));
    CHECK(std::filesystem::exists(d / "c/ct_j2_k3.raw"));
  }
}
