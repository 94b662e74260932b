#pragma once

#include "parind/classify.hpp"
#include "parind/gf.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace parind::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "parind";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr uint64_t kDefaultSeed = 0x5eedf1e1d;

enum class Backend { exact, floating };

struct RunConfig {
  std::string cache_dir;  // empty: caching disabled
  Backend backend = Backend::exact;
  double tolerance = 1e-9;
  int parallelism = 1;
  std::string output = "json";  // json | table
  uint64_t seed = kDefaultSeed;
  bool timestamp = false;  // opt-in: default output is byte-stable across runs

  static RunConfig from_environment();
  Json to_json() const;
};

Json envelope(const RunConfig& config, const std::string& command, Json payload);
Json error_envelope(const RunConfig& config, const std::string& command,
                    const std::string& message);

/// JSON forms of the domain values.
Json rational_json(const Rational& r);
Json qscalar_json(const QScalar& s);
Json nu_json(const classify::Nu& nu);
Json report_json(const classify::ReducibilityReport& r);
Json field_json(const gf::FieldDescriptor& f);  // {p, k, modulus: [c0..ck]}

}  // namespace parind::report
