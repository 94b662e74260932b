#include "parind/report.hpp"
#include "parind/selftest.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace parind;
using report::Json;
using report::RunConfig;

TEST_CASE("envelopes are byte-stable for a fixed config") {
  RunConfig cfg;
  auto r = classify::classify(3, 1, chars::Case::unramified, 2, classify::Nu{QScalar(3)});
  std::string once = report::envelope(cfg, "classify", report::report_json(r)).dump();
  std::string twice = report::envelope(cfg, "classify", report::report_json(r)).dump();
  CHECK(once == twice);
  CHECK(once.find("timestamp") == std::string::npos);  // opt-in only

  cfg.timestamp = true;
  std::string stamped = report::envelope(cfg, "classify", Json::object()).dump();
  CHECK(stamped.find("timestamp") != std::string::npos);
}

TEST_CASE("report fields") {
  auto r = classify::classify(3, 1, chars::Case::unramified, 2, classify::Nu{QScalar(3)});
  Json j = report::report_json(r);
  CHECK(j["reducible"] == true);
  CHECK(j["delta_p_zeta"]["num"] == "1");
  CHECK(j["delta_p_zeta"]["den"] == "9");
  CHECK(j["gamma_set"].size() == 3);
  CHECK(j["hecke"]["gamma"]["radicand"] == 3);
  CHECK(j["nu_zeta"]["num"] == "3");

  auto comm = classify::classify(3, 2, chars::Case::unramified, 1, classify::Nu{QScalar(1)});
  Json jc = report::report_json(comm);
  CHECK(jc["hecke"].is_null());
  CHECK(jc["commutative_case"] == true);
  CHECK(jc["gamma_set"].empty());
}

TEST_CASE("config from environment") {
  setenv("PARIND_CACHE", "/tmp/parind-test-cache", 1);
  RunConfig cfg = RunConfig::from_environment();
  CHECK(cfg.cache_dir == "/tmp/parind-test-cache");
  unsetenv("PARIND_CACHE");
  CHECK(RunConfig::from_environment().cache_dir.empty());
}

TEST_CASE("selftest filter selects by id substring") {
  selftest::AcceptanceOptions opts;
  opts.only = "delta";
  auto results = selftest::run_acceptance(opts);
  REQUIRE(results.size() == 1);
  CHECK(results[0].id == "c7-classify-delta-p");
  CHECK(results[0].pass);
}
