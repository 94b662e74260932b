#include "parind/report.hpp"

#include <chrono>
#include <cstdlib>

namespace parind::report {

RunConfig RunConfig::from_environment() {
  RunConfig c;
  if (const char* dir = std::getenv("PARIND_CACHE")) c.cache_dir = dir;
  return c;
}

Json RunConfig::to_json() const {
  Json j;
  j["cache_dir"] = cache_dir;
  j["backend"] = backend == Backend::exact ? "exact" : "float";
  j["tolerance"] = tolerance;
  j["parallelism"] = parallelism;
  j["output"] = output;
  j["seed"] = seed;
  return j;
}

namespace {
std::string iso_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}
}  // namespace

Json envelope(const RunConfig& config, const std::string& command, Json payload) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config.to_json();
  if (config.timestamp) j["timestamp"] = iso_now();
  j["payload"] = std::move(payload);
  return j;
}

Json error_envelope(const RunConfig& config, const std::string& command,
                    const std::string& message) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config.to_json();
  if (config.timestamp) j["timestamp"] = iso_now();
  j["error"] = message;
  return j;
}

Json field_json(const gf::FieldDescriptor& f) {
  Json j;
  j["p"] = f.p;
  j["k"] = f.k;
  j["modulus"] = f.modulus;
  return j;
}

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = numerator(r).str();
  j["den"] = denominator(r).str();
  return j;
}

Json qscalar_json(const QScalar& s) {
  Json j;
  j["num"] = numerator(s.rational_part()).str();
  j["den"] = denominator(s.rational_part()).str();
  j["sqrtq_num"] = numerator(s.sqrt_part()).str();
  j["sqrtq_den"] = denominator(s.sqrt_part()).str();
  if (!s.is_rational()) j["radicand"] = s.radicand();
  return j;
}

Json nu_json(const classify::Nu& nu) {
  if (std::holds_alternative<QScalar>(nu)) return qscalar_json(std::get<QScalar>(nu));
  auto z = std::get<std::complex<double>>(nu);
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json report_json(const classify::ReducibilityReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["case"] = chars::to_string(r.kind);
  j["theta"] = r.theta_a;
  j["nu_zeta"] = nu_json(r.nu_zeta);
  j["theta_order"] = r.theta_order;
  j["regular"] = r.regular;
  j["condition"] = r.condition;
  j["parity_ok"] = r.parity_ok;
  j["commutative_case"] = r.commutative_case;
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
  j["witness_agrees"] = r.witness_agrees;
  if (r.hecke) {
    Json h;
    h["lambda"] = rational_json(r.hecke->lambda);
    h["gamma"] = qscalar_json(r.hecke->gamma);
    h["relation_coefficient"] = qscalar_json(r.hecke->rel_coeff);
    j["hecke"] = h;
  } else {
    j["hecke"] = nullptr;
  }
  j["delta_p_zeta"] = rational_json(r.delta_p_zeta);
  Json gs = Json::array();
  for (const auto& g : r.gamma_set) gs.push_back(qscalar_json(g));
  j["gamma_set"] = gs;
  j["nu_in_gamma_set"] = r.nu_in_gamma_set;
  j["reducible"] = r.reducible;
  return j;
}

}  // namespace parind::report
