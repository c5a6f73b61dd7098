// drg: command-line front end for the distance-regular graph toolkit.
//
// Exit codes: 0 ok, 1 input error, 2 theorem or consistency violation,
// 3 size limit exceeded.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drg/drg.hpp"

namespace {

using drg::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitSize = 3;

struct Options {
  bool json = false;
  bool pretty = false;
  std::string delta = "1/9";
  int max_n = drg::kDefaultMaxN;
};

int exit_code_for(drg::ErrorCode code)
{
  switch (code) {
    case drg::ErrorCode::TheoremViolation: return kExitViolation;
    case drg::ErrorCode::SizeLimitExceeded: return kExitSize;
    default: return kExitInput;
  }
}

// Flattens scalars into "path  value" rows.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows)
{
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void print_table(const Json& j)
{
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

void emit(const Json& j, const Options& opt)
{
  if (opt.json || !opt.pretty) std::cout << j.dump() << '\n';
  if (opt.pretty) print_table(j);
}

// Spectra are memoised as JSON files when DRG_SPECTRUM_CACHE names a directory.
drg::Spectrum cached_spectrum(const drg::IntersectionArray& arr)
{
  const char* dir = std::getenv("DRG_SPECTRUM_CACHE");
  if (!dir || !*dir) return drg::eigen_spectrum(arr);
  std::string key = arr.str();
  for (char& ch : key)
    if (ch == '{' || ch == '}' || ch == ';' || ch == ',') ch = '_';
  const auto path = std::filesystem::path(dir) / ("spectrum" + key + ".json");
  try {
    if (std::ifstream in(path); in) {
      const Json j = Json::parse(in);
      drg::Spectrum s;
      for (const auto& e : j.at("eigenvalues"))
        s.eigenvalues.push_back({e.at("value").get<double>(), e.at("multiplicity").get<std::int64_t>()});
      s.xi = j.at("xi").get<double>();
      s.theta_min = j.at("theta_min").get<double>();
      return s;
    }
  } catch (const std::exception&) {
    // unreadable cache entry: recompute below
  }
  const auto s = drg::eigen_spectrum(arr);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (std::ofstream out(path); out) out << drg::json_value(s).dump() << '\n';
  return s;
}

struct Input {
  std::string id;
  drg::RawArray raw;
  bool primitive = false;
};

Input resolve_input(const std::string& name, const std::string& file)
{
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) drg::fail(drg::ErrorCode::ParseError, "cannot open " + file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      drg::fail(drg::ErrorCode::ParseError, std::string("invalid JSON in ") + file + ": " + e.what());
    }
    return {file, drg::raw_array_from_json(j), j.value("primitive", false)};
  }
  if (!name.empty() && name.front() == '{') {
    Json j;
    try {
      j = Json::parse(name);
    } catch (const nlohmann::json::exception& e) {
      drg::fail(drg::ErrorCode::ParseError, std::string("invalid JSON array: ") + e.what());
    }
    return {"inline", drg::raw_array_from_json(j), j.value("primitive", false)};
  }
  if (const auto* e = drg::find_catalog(name)) return {e->id, e->array.raw(), e->primitive};
  drg::fail(drg::ErrorCode::ParseError, "unknown catalog id '" + name + "' (and no --file given)");
}

Json imprimitive_section(const drg::IntersectionArray& arr)
{
  const auto prof = drg::detect(arr);
  Json out{{"profile", drg::json_value(prof)}};
  Json analyses = Json::object();
  const int d = arr.diameter();
  auto attempt = [&](const char* key, auto&& fn) {
    try {
      analyses[key] = fn();
    } catch (const drg::Error& e) {
      if (e.code() == drg::ErrorCode::TheoremViolation) throw;
      analyses[key] = Json{{"error", std::string(drg::to_string(e.code()))}, {"message", e.what()}};
    }
  };
  if (prof.is_bipartite && d == 3) attempt("bip3", [&] { return drg::json_value(drg::bip3_analysis(arr)); });
  if (prof.is_antipodal && d == 3) attempt("antip3", [&] { return drg::json_value(drg::antip3_analysis(arr)); });
  if (prof.is_bipartite && prof.is_antipodal && d == 4)
    attempt("bip_antip4", [&] {
      const auto r = drg::bip_antip4_analysis(arr);
      Json j = drg::json_value(r.verdict);
      j["m"] = r.m;
      j["eq1"] = r.eq1;
      j["eq2"] = r.eq2;
      j["proof_choice"] = r.proof_choice;
      j["at_least_0.15n"] = r.at_least_015n;
      return j;
    });
  if (prof.is_bipartite && d >= 4)
    attempt("bipartite_d4", [&] {
      const auto r = drg::bipartite_d4_bound(arr);
      return Json{{"gamma", drg::json_value(r.gamma)}, {"bound", r.bound}, {"ledger", r.ledger}};
    });
  if (prof.is_bipartite)
    attempt("bipartite_spectral", [&] {
      return Json(drg::bipartite_motion_bound(drg::derive_parameters(arr), cached_spectrum(arr)));
    });
  out["analyses"] = analyses;
  const auto transfer = drg::reduction_motion_transfer(drg::Rational(1), prof, d);
  out["composition"] = Json{{"branch", transfer.branch}, {"exceptions", transfer.exceptions}, {"steps", transfer.steps}};
  return out;
}

int cmd_analyze(const std::string& name, const std::string& file, bool imprimitive, bool attest_primitive,
                const Options& opt)
{
  const Input in = resolve_input(name, file);
  const auto violations = drg::feasibility_report(in.raw);
  if (!violations.empty()) {
    Json v = Json::array();
    for (const auto& x : violations) v.push_back(Json{{"code", std::string(drg::to_string(x.code))}, {"message", x.message}});
    std::cerr << Json{{"error", std::string(drg::to_string(violations.front().code))}, {"violations", v}}.dump() << '\n';
    return kExitInput;
  }
  const drg::IntersectionArray arr(in.raw);
  const auto table = drg::derive_parameters(arr);
  const auto spec = cached_spectrum(arr);
  const auto prof = drg::detect(arr);
  const bool primitive = attest_primitive || in.primitive;
  const auto motion = drg::motion_report(table, spec, prof.is_bipartite, primitive);
  const auto delta = drg::parse_rational(opt.delta);

  Json out{{"id", in.id}, {"parameters", drg::json_value(table)}, {"spectrum", drg::json_value(spec)}};
  out["motion"] = drg::json_value(motion);
  out["primitive_attested"] = primitive;
  out["dichotomy"] = [&] {
    const auto v = drg::spectral_gap_dichotomy(arr);
    Json j{{"branch", v.expanding() ? "ExpandingIndex" : "SpectralGap"}, {"eps", v.eps}, {"eta", v.eta}, {"xi", v.xi}};
    j["index"] = v.expanding() ? Json(v.index) : Json(nullptr);
    if (!v.expanding()) j["xi_cap"] = v.xi_cap;
    return j;
  }();
  {
    const auto c = drg::derived_constants(arr.diameter(), delta);
    out["constants"] = Json{{"delta", delta.str()}, {"eps_delta", drg::to_double(c.eps)}, {"eta", c.eta.convert_to<double>()}};
  }
  Json tradeoff = Json::array();
  for (const auto& r : drg::tradeoff_sweep(arr)) tradeoff.push_back(drg::json_value(r));
  out["tradeoff"] = tradeoff;
  out["imprimitivity"] = drg::json_value(prof);
  if (imprimitive) out["imprimitive"] = imprimitive_section(arr);
  emit(out, opt);
  return kExitOk;
}

int cmd_family(const std::string& kind, const std::vector<std::int64_t>& params, const Options& opt)
{
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      drg::fail(drg::ErrorCode::ParseError, kind + " takes " + std::to_string(n) + " parameter(s)");
  };
  std::optional<drg::IntersectionArray> built;
  std::vector<drg::Eigenvalue> closed;
  auto binom = [](std::int64_t m, std::int64_t k) { return k < 0 || k > m ? std::int64_t{0} : drg::detail::binomial(int(m), int(k)); };
  if (kind == "johnson") {
    need(2);
    const auto m = params[0], d = params[1];
    built = drg::johnson_array(m, d);
    for (std::int64_t j = 0; j <= d; ++j)
      closed.push_back({double((d - j) * (m - d - j) - j), binom(m, j) - binom(m, j - 1)});
  } else if (kind == "hamming") {
    need(2);
    const auto d = params[0], q = params[1];
    built = drg::hamming_array(d, q);
    for (std::int64_t j = 0; j <= d; ++j) {
      std::int64_t mult = binom(d, j);
      for (std::int64_t t = 0; t < j; ++t) mult *= q - 1;
      closed.push_back({double((q - 1) * d - q * j), mult});
    }
  } else if (kind == "cocktail") {
    need(1);
    const auto m = params[0];
    built = drg::cocktail_party_array(m);
    closed = {{double(2 * m - 2), 1}, {0.0, m}, {-2.0, m - 1}};
  } else {
    drg::fail(drg::ErrorCode::ParseError, "unknown family '" + kind + "' (johnson, hamming, cocktail)");
  }
  const drg::IntersectionArray& arr = *built;
  const auto spec = cached_spectrum(arr);
  Json out{{"family", kind}, {"params", params}, {"array", drg::json_value(arr)}};
  out["parameters"] = drg::json_value(drg::derive_parameters(arr));
  out["spectrum"] = drg::json_value(spec);
  out["closed_form_spectrum"] = drg::json_value(closed);
  const bool agrees = drg::same_spectrum(spec.eigenvalues, closed);
  out["closed_form_agrees"] = agrees;
  emit(out, opt);
  return agrees ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, const Options& opt)
{
  drg::Suite lines;
  if (suite == "tradeoff") {
    lines = drg::verify_tradeoff();
  } else if (suite == "sequences") {
    lines = drg::verify_sequences(drg::parse_rational(opt.delta));
  } else if (suite == "dichotomy") {
    lines = drg::verify_dichotomy();
  } else if (suite == "oracle") {
    lines = drg::verify_oracle(opt.max_n);
  } else if (suite == "all") {
    lines = drg::verify_all(opt.max_n);
  } else {
    drg::fail(drg::ErrorCode::ParseError, "unknown suite '" + suite + "' (tradeoff, sequences, dichotomy, oracle, all)");
  }
  std::size_t failed = 0;
  for (const auto& l : lines) {
    failed += !l.holds;
    std::cout << l.json().dump() << '\n';
  }
  std::cout << Json{{"suite", suite}, {"checks", lines.size()}, {"failed", failed}}.dump() << '\n';
  return failed == 0 ? kExitOk : kExitViolation;
}

int cmd_oracle(const std::string& target, bool motion, bool spectrum, bool check_array, bool fold, bool halve,
               const Options& opt)
{
  auto named = drg::named_graph(target);
  drg::ConcreteGraph g;
  if (named) {
    g = std::move(*named);
  } else if (std::filesystem::exists(target)) {
    g = drg::read_edge_list(target);
  } else {
    drg::fail(drg::ErrorCode::ParseError, "'" + target + "' is neither a known graph nor a readable edge-list file");
  }
  g.distances();
  Json out{{"graph", target}, {"n", g.order()}, {"edges", g.edge_count()}, {"diameter", g.diameter()}};
  const bool any = motion || spectrum || fold || halve;
  if (check_array || !any) {
    const auto chk = drg::check_distance_regular(g);
    if (chk.distance_regular()) {
      out["distance_regular"] = true;
      out["array"] = drg::json_value(*chk.array);
    } else {
      out["distance_regular"] = false;
      out["verdict"] = "not distance-regular";
      out["witness"] = chk.witness;
    }
  }
  if (spectrum) out["spectrum"] = drg::json_value(drg::adjacency_spectrum(g));
  if (halve) {
    const auto h = drg::check_distance_regular(drg::halved_graph(g));
    out["halved"] = h.distance_regular() ? drg::json_value(*h.array) : Json(h.witness);
  }
  if (fold) {
    const auto f = drg::check_distance_regular(drg::folded_graph(g));
    out["folded"] = f.distance_regular() ? drg::json_value(*f.array) : Json(f.witness);
  }
  if (motion) {
    const auto s = drg::automorphism_summary(g, opt.max_n);
    out["automorphisms"] = drg::json_value(s);
    out["motion"] = s.motion ? Json(*s.motion) : Json(nullptr);
    const auto dvals = drg::distinguishing_exact(g);
    out["d_min"] = drg::json_value(*std::min_element(dvals.begin(), dvals.end()));
  }
  emit(out, opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Distance-regular graph toolkit: parameters, spectra, tradeoffs, motion bounds, oracles"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--json", opt.json, "JSON output (default unless --pretty)");
  app.add_flag("--pretty", opt.pretty, "aligned text table");
  app.add_option("--delta", opt.delta, "delta for the FE/BE sequences, as p/q or a decimal")->capture_default_str();
  app.add_option("--max-n", opt.max_n, "vertex cap for automorphism searches")->capture_default_str()->check(CLI::PositiveNumber);

  std::string name, file;
  bool imprimitive = false, attest = false;
  auto* analyze = app.add_subcommand("analyze", "full report for a catalog id, inline JSON array, or --file");
  analyze->add_option("input", name, "catalog id or inline {\"b\":[..],\"c\":[..]}");
  analyze->add_option("--file", file, "JSON file holding {\"b\":[..],\"c\":[..]}");
  analyze->add_flag("--imprimitive", imprimitive, "run the bipartite/antipodal reductions and analyses");
  analyze->add_flag("--primitive", attest, "attest that the graph is primitive (enables the classifier)");

  std::string kind;
  std::vector<std::int64_t> params;
  auto* family = app.add_subcommand("family", "generator array with closed-form spectrum cross-check");
  family->add_option("kind", kind, "johnson | hamming | cocktail")->required();
  family->add_option("params", params, "johnson m d | hamming d q | cocktail m")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite, one JSON line per check");
  verify->add_option("suite", suite, "tradeoff | sequences | dichotomy | oracle | all")->required();

  std::string target;
  bool motion = false, spectrum = false, check_array = false, fold = false, halve = false;
  auto* oracle = app.add_subcommand("oracle", "brute-force facts about a concrete graph");
  oracle->add_option("target", target, "named graph (petersen, johnson-5-2, cycle-8, ...) or edge-list file")->required();
  oracle->add_flag("--motion", motion, "automorphism group order and exact motion");
  oracle->add_flag("--spectrum", spectrum, "adjacency spectrum");
  oracle->add_flag("--check-array", check_array, "distance-regularity and the extracted array");
  oracle->add_flag("--fold", fold, "array of the folded graph");
  oracle->add_flag("--halve", halve, "array of the halved graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      if (name.empty() && file.empty()) drg::fail(drg::ErrorCode::ParseError, "analyze needs an input or --file");
      return cmd_analyze(name, file, imprimitive, attest, opt);
    }
    if (*family) return cmd_family(kind, params, opt);
    if (*verify) return cmd_verify(suite, opt);
    if (*oracle) return cmd_oracle(target, motion, spectrum, check_array, fold, halve, opt);
  } catch (const drg::Error& e) {
    std::cerr << Json{{"error", std::string(drg::to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "InputError"}, {"message", e.what()}}.dump() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
