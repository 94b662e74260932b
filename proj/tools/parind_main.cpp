// parind: reducibility calculator for depth-zero Siegel parabolic induction
// on U(n,n), with finite-group Hecke verification and an abstract module
// oracle. Subcommands mirror the library modules; machine output is JSON.

#include "parind/classify.hpp"
#include "parind/dihecke.hpp"
#include "parind/finhecke.hpp"
#include "parind/finrep.hpp"
#include "parind/report.hpp"
#include "parind/selftest.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace parind;
using report::Json;
using report::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitRelation = 4;

classify::Nu parse_nu(const std::string& text) {
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    return classify::Nu{std::complex<double>(std::stod(text), 0.0)};
  }
  auto slash = text.find('/');
  if (slash == std::string::npos) return classify::Nu{QScalar(Rational(BigInt(text)))};
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  return classify::Nu{QScalar(Rational(num, den))};
}

fingrp::FiniteGroup build_group_cached(const fingrp::FormSpec& spec, const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) {
    std::filesystem::create_directories(cfg.cache_dir);
    std::string path = cfg.cache_dir + "/" + fingrp::cache_file_name(spec);
    if (auto cached = fingrp::load_group_cache(spec, path)) return std::move(*cached);
    fingrp::FiniteGroup G = fingrp::build_group(spec);
    fingrp::save_group_cache(G, path);
    return G;
  }
  return fingrp::build_group(spec);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_chars_enumerate(const RunConfig& cfg, int64_t q, int n, const std::string& case_s,
                        const std::string& filter_s) {
  auto c = chars::case_from_string(case_s);
  auto f = chars::filter_from_string(filter_s);
  if (!c || !f) throw CLI::ValidationError("invalid --case or --filter");
  Json arr = Json::array();
  for (const auto& ch : chars::enumerate_characters(q, n, *c, *f)) {
    Json e;
    e["a"] = ch.a;
    e["order"] = ch.order();
    e["regular"] = chars::is_regular(ch);
    e["condition"] = chars::condition_theta(ch);
    auto w = chars::condition_witness(ch);
    if (w)
      e["witness"] = *w;
    else
      e["witness"] = nullptr;
    arr.push_back(e);
  }
  emit(report::envelope(cfg, "chars enumerate", arr));
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, int64_t q, int n, const std::string& case_s,
                 const std::string& theta_s, const std::string& nu_s, bool json_out) {
  auto c = chars::case_from_string(case_s);
  if (!c) throw CLI::ValidationError("invalid --case");
  std::vector<int64_t> thetas;
  if (theta_s == "all") {
    for (const auto& ch : chars::enumerate_characters(q, n, *c, chars::Filter::all))
      thetas.push_back(ch.a);
  } else {
    std::stringstream ss(theta_s);
    std::string tok;
    while (std::getline(ss, tok, ',')) thetas.push_back(std::stoll(tok));
  }
  std::vector<classify::Nu> nus;
  {
    std::stringstream ss(nu_s);
    std::string tok;
    while (std::getline(ss, tok, ',')) nus.push_back(parse_nu(tok));
  }
  Json arr = Json::array();
  for (int64_t a : thetas)
    for (const auto& nu : nus)
      arr.push_back(report::report_json(classify::classify(q, n, *c, a, nu)));
  if (json_out || cfg.output == "json") {
    emit(report::envelope(cfg, "classify", arr.size() == 1 ? arr[0] : arr));
  } else {
    for (const auto& r : arr) {
      std::cout << "q=" << r["q"] << " n=" << r["n"] << " case=" << r["case"].get<std::string>()
                << " theta=" << r["theta"] << " regular=" << r["regular"]
                << " condition=" << r["condition"] << " reducible=" << r["reducible"] << "\n";
    }
  }
  return kExitOk;
}

int cmd_group_build(const RunConfig& cfg, const std::string& type_s, int n, int64_t q) {
  auto kind = fingrp::form_kind_from_string(type_s);
  if (!kind || *kind == fingrp::FormKind::gl)
    throw CLI::ValidationError("--type must be gu, sp or oj");
  fingrp::FormSpec spec{*kind, n, q};
  fingrp::FiniteGroup G = build_group_cached(spec, cfg);
  fingrp::ParabolicData pd = fingrp::siegel_parabolic(G);
  Json j;
  j["type"] = type_s;
  j["n"] = n;
  j["q"] = q;
  j["order"] = G.order();
  j["entry_field"] = report::field_json(G.field->desc);
  j["P"] = pd.P.size();
  j["L"] = pd.L.size();
  j["U"] = pd.U.size();
  j["num_double_cosets"] = pd.num_double_cosets();
  if (*kind == fingrp::FormKind::oj) {
    Json dist = Json::array();
    for (auto [det, count] : fingrp::determinant_distribution(G)) {
      Json d;
      d["det"] = det;
      d["count"] = count;
      dist.push_back(d);
    }
    j["det_distribution"] = dist;
  }
  emit(report::envelope(cfg, "group build", j));
  return kExitOk;
}

int cmd_rep_cuspidal(const RunConfig& cfg, int64_t q, int64_t theta, bool model,
                     const std::string& out_path) {
  fingrp::FiniteGroup gl2 = fingrp::build_group(fingrp::FormSpec{fingrp::FormKind::gl, 2, q});
  auto th = chars::make_char(q, 2, chars::Case::ramified, theta);
  auto chi = finrep::cuspidal_character_gl2(gl2, th);
  Json classes = Json::array();
  std::vector<uint32_t> all(gl2.order());
  for (uint32_t i = 0; i < gl2.order(); ++i) all[i] = i;
  for (const auto& cls : fingrp::conjugacy_classes(gl2, all)) {
    const auto& m = gl2.elems[cls[0]];
    Json e;
    e["size"] = cls.size();
    e["trace"] = (m.at(0, 0) + m.at(1, 1)) % q;
    e["det"] = fingrp::mat_det(*gl2.field, m);
    e["chi_re"] = chi.v[cls[0]].real();
    e["chi_im"] = chi.v[cls[0]].imag();
    classes.push_back(e);
  }
  Json j;
  j["q"] = q;
  j["theta"] = th.a;
  j["dimension"] = chi.v[0].real();
  j["classes"] = classes;
  if (model) {
    auto rep = finrep::realize_cuspidal_gl2(gl2, th);
    Json mats = Json::array();
    for (uint32_t g = 0; g < gl2.order(); ++g) {
      Json entry = Json::array();
      for (int r = 0; r < rep.dim; ++r)
        for (int col = 0; col < rep.dim; ++col) {
          Json z;
          z["re"] = rep.mats[g](r, col).real();
          z["im"] = rep.mats[g](r, col).imag();
          entry.push_back(z);
        }
      mats.push_back(entry);
    }
    Json file;
    file["q"] = q;
    file["theta"] = th.a;
    file["dim"] = rep.dim;
    file["matrices"] = mats;
    std::ofstream out(out_path);
    out << file.dump(2) << "\n";
    j["model_file"] = out_path;
  }
  emit(report::envelope(cfg, "rep cuspidal", j));
  return kExitOk;
}

int cmd_hecke_verify(const RunConfig& cfg, const std::string& group_s, int n, int64_t q,
                     int64_t theta) {
  auto kind = fingrp::form_kind_from_string(group_s);
  if (!kind || *kind == fingrp::FormKind::gl)
    throw CLI::ValidationError("--group must be gu, sp or oj");
  if ((*kind == fingrp::FormKind::gu && n != 1) || (*kind != fingrp::FormKind::gu && n != 2))
    throw TooLargeError("supported verification targets: gu with n=1, sp/oj with n=2");
  fingrp::FormSpec spec{*kind, n, q};
  fingrp::FiniteGroup G = build_group_cached(spec, cfg);
  fingrp::FiniteGroup gl = fingrp::build_group(fingrp::levi_gl_spec(spec));
  fingrp::ParabolicData pd = fingrp::siegel_parabolic(G);
  finrep::MatrixRep rep;
  if (*kind == fingrp::FormKind::gu) {
    rep = finrep::character_rep_gl1(gl, chars::make_char(q, 1, chars::Case::unramified, theta));
  } else {
    rep = finrep::realize_cuspidal_gl2(gl, chars::make_char(q, 2, chars::Case::ramified, theta));
  }
  finrep::ParabolicRep prep = finrep::inflate_to_parabolic(rep, pd);
  int dim = finhecke::hecke_dimension(prep);

  Json j;
  j["group"] = group_s;
  j["n"] = n;
  j["q"] = q;
  j["theta"] = theta;
  j["order"] = G.order();
  j["dimension"] = dim;
  double expected = (*kind == fingrp::FormKind::gu) ? std::pow(static_cast<double>(q), n)
                                                    : std::pow(static_cast<double>(q), n / 2.0);
  j["paper_expected_lambda"] = expected;
  if (dim < 2) {
    j["note"] = "induced representation irreducible at finite level";
    j["pass"] = true;
    emit(report::envelope(cfg, "hecke verify", j));
    return kExitOk;
  }
  uint32_t w = G.index_of(fingrp::form_matrix(spec, *G.field));
  auto rel = finhecke::quadratic_relation(prep, pd.coset_id[w], expected, 1e-6);
  j["raw"] = {{"a", rel.a}, {"b", rel.b}};
  j["lambda"] = rel.lambda;
  j["normalized"] = {{"coefficient", rel.lambda - 1}, {"constant", rel.lambda}};
  j["parahoric_index"] = fingrp::parahoric_index(pd, pd.coset_id[w]);
  j["pass"] = true;
  emit(report::envelope(cfg, "hecke verify", j));
  return kExitOk;
}

int cmd_module_oracle(const RunConfig& cfg, int64_t q, int n, const std::string& case_s,
                      const std::string& scan) {
  auto c = chars::case_from_string(case_s);
  if (!c) throw CLI::ValidationError("invalid --case");
  auto hp = classify::hecke_params(q, n, *c);
  Json j;
  j["q"] = q;
  j["n"] = n;
  j["case"] = case_s;
  if (!hp) {
    j["commutative_case"] = true;
    j["locus"] = Json::array();
    emit(report::envelope(cfg, "module oracle", j));
    return kExitOk;
  }
  j["commutative_case"] = false;
  j["gamma"] = report::qscalar_json(hp->gamma);
  auto locus = dihecke::gamma_set_oracle(hp->gamma, q);
  Json larr = Json::array();
  for (const auto& v : locus) larr.push_back(report::qscalar_json(v));
  j["locus"] = larr;
  auto closed = classify::gamma_set(q, n, *c);
  bool agree = closed.size() == locus.size();
  for (const auto& x : closed) {
    bool found = false;
    for (const auto& y : locus) found = found || (x == y);
    agree = agree && found;
  }
  j["matches_closed_form"] = agree;
  if (!scan.empty()) {
    double lo, hi;
    int steps;
    if (std::sscanf(scan.c_str(), "%lf:%lf:%d", &lo, &hi, &steps) != 3 || steps < 2)
      throw CLI::ValidationError("--scan expects lo:hi:steps");
    std::complex<double> gamma = hp->gamma.to_complex();
    int extra = 0, on_locus = 0;
    for (int k = 0; k < steps; ++k) {
      double x = lo + (hi - lo) * k / (steps - 1);
      if (std::abs(x) < 1e-12) continue;
      auto mod = dihecke::induced_module<std::complex<double>>({x, 0}, gamma);
      bool simple = dihecke::is_simple(mod, 0, 1e-6);
      double dist = 1e300;
      for (const auto& g : locus) dist = std::min(dist, std::abs(x - g.to_complex()));
      if (!simple && dist < 1e-6)
        ++on_locus;
      else if (!simple)
        ++extra;
    }
    Json s;
    s["steps"] = steps;
    s["non_simple_on_locus"] = on_locus;
    s["non_simple_extra"] = extra;
    j["scan"] = s;
    if (extra > 0) {
      emit(report::error_envelope(cfg, "module oracle", "scan found extra non-simple points"));
      return 1;
    }
  }
  emit(report::envelope(cfg, "module oracle", j));
  return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, const std::string& only) {
  selftest::AcceptanceOptions opts;
  opts.only = only;
  opts.backend = cfg.backend;
  opts.cache_dir = cfg.cache_dir;
  opts.seed = cfg.seed;
  auto results = selftest::run_acceptance(opts);
  Json arr = Json::array();
  bool all_pass = !results.empty();
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["pass"] = r.pass;
    e["detail"] = r.detail;
    e["millis"] = r.millis;
    arr.push_back(e);
    all_pass = all_pass && r.pass;
  }
  Json j;
  j["criteria"] = arr;
  j["all_pass"] = all_pass;
  emit(report::envelope(cfg, "selftest", j));
  return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reducibility of depth-zero parabolic induction on U(n,n)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand, per the docs

  RunConfig cfg = RunConfig::from_environment();
  std::string backend_s = "exact";
  app.add_option("--cache", cfg.cache_dir, "group cache directory (env PARIND_CACHE)");
  app.add_option("--backend", backend_s, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", cfg.tolerance, "float comparison tolerance");
  app.add_option("--parallelism", cfg.parallelism, "worker hint (recorded)");
  app.add_option("--output", cfg.output, "json|table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "seed for randomized spot checks");
  app.add_flag("--timestamp", cfg.timestamp, "include a timestamp in the envelope");

  auto* chars_cmd = app.add_subcommand("chars", "character calculus");
  auto* enumerate = chars_cmd->add_subcommand("enumerate", "list character exponents");
  int64_t q = 3;
  int n = 1;
  std::string case_s = "unramified", filter_s = "all";
  enumerate->add_option("--q", q)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--case", case_s)->required();
  enumerate->add_option("--filter", filter_s);

  auto* classify_cmd = app.add_subcommand("classify", "reducibility verdict for one twist family");
  int64_t cq = 3;
  int cn = 1;
  std::string ccase = "unramified", ctheta = "0", cnu = "1";
  bool cjson = false;
  classify_cmd->add_option("--q", cq)->required();
  classify_cmd->add_option("--n", cn)->required();
  classify_cmd->add_option("--case", ccase)->required();
  classify_cmd->add_option("--theta", ctheta, "exponent, comma list, or 'all'")->required();
  classify_cmd->add_option("--nu", cnu, "nu(zeta): integer, rational a/b, or decimal")->required();
  classify_cmd->add_flag("--json", cjson);

  auto* group_cmd = app.add_subcommand("group", "finite matrix groups");
  auto* build = group_cmd->add_subcommand("build", "build and summarize a group");
  std::string gtype = "gu";
  int gn = 1;
  int64_t gq = 3;
  build->add_option("--type", gtype)->required();
  build->add_option("--n", gn)->required();
  build->add_option("--q", gq)->required();

  auto* rep_cmd = app.add_subcommand("rep", "cuspidal representation data");
  auto* cuspidal = rep_cmd->add_subcommand("cuspidal", "GL_2 cuspidal character/model");
  int64_t rq = 3, rtheta = 2;
  bool model = false;
  std::string out_path = "cuspidal_model.json";
  cuspidal->add_option("--q", rq)->required();
  cuspidal->add_option("--theta", rtheta)->required();
  cuspidal->add_flag("--model", model);
  cuspidal->add_option("--out", out_path);

  std::string hgroup = "gu";
  int hn = 1;
  int64_t hq = 3, htheta = 2;
  auto* hecke_cmd = app.add_subcommand("hecke", "finite Hecke algebra");
  auto* verify = hecke_cmd->add_subcommand("verify", "verify the quadratic relation");
  verify->add_option("--group", hgroup)->required();
  verify->add_option("--n", hn)->required();
  verify->add_option("--q", hq)->required();
  verify->add_option("--theta", htheta)->required();
  auto* verify_alias = app.add_subcommand("verify", "alias for 'hecke verify'");
  verify_alias->add_option("--group", hgroup)->required();
  verify_alias->add_option("--n", hn)->required();
  verify_alias->add_option("--q", hq)->required();
  verify_alias->add_option("--theta", htheta)->required();

  auto* module_cmd = app.add_subcommand("module", "abstract Hecke module oracle");
  auto* oracle = module_cmd->add_subcommand("oracle", "non-simple locus of induced modules");
  int64_t oq = 3;
  int on = 1;
  std::string ocase = "unramified", oscan;
  oracle->add_option("--q", oq)->required();
  oracle->add_option("--n", on)->required();
  oracle->add_option("--case", ocase)->required();
  oracle->add_option("--scan", oscan, "lo:hi:steps float sweep");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  std::string only;
  selftest_cmd->add_option("--only", only, "substring filter on criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  cfg.backend = backend_s == "float" ? report::Backend::floating : report::Backend::exact;
  std::string command;
  for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

  try {
    if (enumerate->parsed()) return cmd_chars_enumerate(cfg, q, n, case_s, filter_s);
    if (classify_cmd->parsed()) return cmd_classify(cfg, cq, cn, ccase, ctheta, cnu, cjson);
    if (build->parsed()) return cmd_group_build(cfg, gtype, gn, gq);
    if (cuspidal->parsed()) return cmd_rep_cuspidal(cfg, rq, rtheta, model, out_path);
    if (verify->parsed() || verify_alias->parsed())
      return cmd_hecke_verify(cfg, hgroup, hn, hq, htheta);
    if (oracle->parsed()) return cmd_module_oracle(cfg, oq, on, ocase, oscan);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, only);
    std::cerr << app.help() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitUsage;
  } catch (const NonPrimeError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitUsage;
  } catch (const DomainMismatchError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitUsage;
  } catch (const TooLargeError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitCap;
  } catch (const DegreeTooLargeError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitCap;
  } catch (const RelationMismatchError& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return kExitRelation;
  } catch (const std::exception& e) {
    emit(report::error_envelope(cfg, command, e.what()));
    return 1;
  }
}
