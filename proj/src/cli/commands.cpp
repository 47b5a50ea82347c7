/*
   Copyright 2026 The cremona Authors

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

#include "cremona/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <future>
#include <thread>

#include "cremona/picard/coxeter.hpp"
#include "cremona/spectra/cyclotomic.hpp"

namespace cremona::cli {

using construct::CoxeterConstruction;
using construct::Q;

std::string_view to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  throw InvalidInput("unknown backend '" + std::string(name) + "' (expected exact or float)");
}

namespace {

int parse_int(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw InvalidInput("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

void RunConfig::validate() const {
  static const std::vector<std::string> commands{"degree", "construct", "verify", "picard", "report"};
  if (std::ranges::find(commands, command) == commands.end()) throw InvalidInput("unknown command '" + command + "'");
  if (k < 2) throw InvalidInput("k must be at least 2");
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (family != Family::lines && m != 1) throw InvalidInput("-m only applies to the lines family");
  if (precision_bits < arith::kMinPrecisionBits)
    throw InvalidInput("precision must be at least " + std::to_string(arith::kMinPrecisionBits) + " bits");
  if (samples < 1) throw InvalidInput("samples must be at least 1");
  if (perturb && command != "verify") throw InvalidInput("--perturb only applies to verify");
  if ((!lengths.empty() || !sigma.empty()) && command != "picard")
    throw InvalidInput("--lengths and --sigma only apply to picard");
  if (sweep) {
    if (sweep->k_min < 2 || sweep->n_min < 1) throw InvalidInput("sweep ranges need k >= 2 and n >= 1");
    if (command == "picard" && (!lengths.empty() || !sigma.empty()))
      throw InvalidInput("a sweep cannot be combined with explicit orbit data");
  }
}

long default_precision() {
  const char* env = std::getenv("CREMONA_PRECISION");
  if (env == nullptr || *env == '\0') return arith::kDefaultPrecisionBits;
  const long bits = parse_int(env);
  if (bits < arith::kMinPrecisionBits)
    throw InvalidInput("CREMONA_PRECISION must be at least " + std::to_string(arith::kMinPrecisionBits));
  return bits;
}

namespace {

Json header(const RunConfig& c) {
  return {{"schema", kSchemaVersion},
          {"command", c.command},
          {"config",
           {{"family", std::string(to_string(c.family))},
            {"k", c.k},
            {"n", c.n},
            {"m", c.m},
            {"backend", std::string(to_string(c.backend))},
            {"precision_bits", c.precision_bits},
            {"samples", c.samples},
            {"seed", c.seed}}}};
}

CoxeterConstruction build(const RunConfig& c) {
  if (c.family == Family::lines) return construct::construct_lines(c.k, c.m, c.n, c.precision_bits);
  return construct::construct(c.family, c.k, c.n, c.precision_bits);
}

/// T(m+1, k+1, n(k+1)) for the lines family.
picard::CoxeterElement lines_coxeter(const RunConfig& c) {
  return picard::coxeter_element_tpqr(c.m + 1, c.k + 1, c.n * (c.k + 1), c.precision_bits);
}

Json degree_section(const RunConfig& c, bool& exceptional, std::optional<spectra::IsolatedRoot>& delta) {
  if (c.family != Family::lines) {
    const auto r = spectra::classify_exceptional(c.family, c.k, c.n, c.precision_bits);
    exceptional = r.exceptional;
    delta = r.delta;
    return spectral_json(r);
  }
  const auto cox = lines_coxeter(c);
  const auto split = spectra::strip_cyclotomic(cox.char_poly);
  exceptional = !cox.leading_root.has_value();
  delta = cox.leading_root;
  Json factors = Json::array();
  for (const auto& f : split.factors) factors.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
  return {{"family", "lines"},
          {"k", c.k},
          {"n", c.n},
          {"m", c.m},
          {"diagram", {c.m + 1, c.k + 1, c.n * (c.k + 1)}},
          {"polynomial", polynomial_json(cox.char_poly)},
          {"cyclotomic_factors", std::move(factors)},
          {"salem_factor", split.core_is_constant() ? Json(nullptr) : polynomial_json(split.core)},
          {"delta", cox.leading_root ? root_json(*cox.leading_root) : Json(nullptr)},
          {"exceptional", exceptional}};
}

struct VerifySection {
  Json json;
  bool passed = false;
  std::optional<verify::OrbitCheckReport<Q>> exact_orbit;
};

VerifySection verify_section(const RunConfig& c, const CoxeterConstruction& con) {
  const auto embedding = construct::real_embedding(con, c.precision_bits);
  VerifySection out;
  out.json = {{"backend", std::string(to_string(c.backend))}};
  if (c.family == Family::lines) {
    auto map = con.map;
    if (c.perturb) map = verify::perturb_beta(map, 1, *c.perturb);
    const int steps = con.lines->orbit_length - 1;
    if (c.backend == Backend::exact) {
      const auto r = verify::verify_lines_orbit(con.field, map, steps);
      out.json["lines_orbit"] = lines_orbit_json(r);
      out.passed = r.passed();
    } else {
      const arith::FloatField ff(c.precision_bits);
      const auto r = verify::verify_lines_orbit(ff, construct::embed(map, embedding), steps);
      out.json["lines_orbit"] = lines_orbit_json(r);
      out.passed = r.passed();
    }
    out.json["passed"] = out.passed;
    return out;
  }

  auto map = con.map;
  if (c.perturb) {
    map = verify::perturb_beta(map, 1, *c.perturb);
    out.json["perturbation"] = {{"beta_index", 1}, {"shift", rational_json(*c.perturb)}};
  }
  if (c.backend == Backend::exact) {
    auto orbit = verify::verify_orbit(con.field, map);
    const auto curve = verify::verify_curve_invariance(con.field, map, c.samples, c.seed);
    const auto distinct = verify::verify_distinctness(con.field, map);
    out.json["orbit"] = orbit_json(orbit, embedding);
    out.json["curve_invariance"] = curve_json(curve, embedding);
    out.json["distinctness"] = distinctness_json(distinct, embedding);
    out.json["max_residual"] = orbit.max_residual;
    out.passed = orbit.passed() && curve.passed() && distinct.distinct;
    out.exact_orbit = std::move(orbit);
  } else {
    const arith::FloatField ff(c.precision_bits);
    const auto fmap = construct::embed(map, embedding);
    const auto orbit = verify::verify_orbit(ff, fmap);
    const auto curve = verify::verify_curve_invariance(ff, fmap, c.samples, c.seed);
    const auto distinct = verify::verify_distinctness(ff, fmap);
    out.json["orbit"] = orbit_json(orbit, embedding);
    out.json["curve_invariance"] = curve_json(curve, embedding);
    out.json["distinctness"] = distinctness_json(distinct, embedding);
    out.json["max_residual"] = orbit.max_residual;
    out.passed = orbit.passed() && curve.passed() && distinct.distinct;
  }
  out.json["passed"] = out.passed;
  return out;
}

struct PicardSection {
  Json json;
  bool passed = false;
  std::optional<spectra::IsolatedRoot> radius;
};

picard::OrbitData orbit_data(const RunConfig& c) {
  picard::OrbitData d = picard::OrbitData::coxeter(c.k, c.n);
  if (!c.lengths.empty()) d.lengths = c.lengths;
  if (!c.sigma.empty()) d.sigma = c.sigma;
  d.validate(c.k);
  return d;
}

bool is_coxeter_data(const RunConfig& c, const picard::OrbitData& d) {
  const auto ref = picard::OrbitData::coxeter(c.k, d.lengths.back());
  return d.lengths == ref.lengths && d.sigma == ref.sigma;
}

Json spectral_comparison(const arith::IntegerPolynomial& matrix_poly, const arith::IntegerPolynomial& family_poly,
                         const std::optional<spectra::IsolatedRoot>& radius,
                         const std::optional<spectra::IsolatedRoot>& delta, long precision_bits) {
  const bool plus = matrix_poly == family_poly;
  const bool minus = matrix_poly == -family_poly;
  Json out = {{"family_polynomial", polynomial_json(family_poly)},
              {"matches", plus || minus},
              {"sign", plus ? Json(1) : minus ? Json(-1) : Json(nullptr)}};
  if (radius && delta) {
    const auto diff = arith::abs(radius->midpoint - delta->midpoint);
    out["radius_minus_delta"] = diff.to_string(6);
    out["radius_agrees"] = diff < arith::BigFloat::exp2(-precision_bits / 2, precision_bits);
  } else {
    out["radius_agrees"] = !radius && !delta;
  }
  return out;
}

PicardSection picard_section(const RunConfig& c) {
  using picard::operator==;
  PicardSection out;
  if (c.family == Family::lines) {
    const auto cox = lines_coxeter(c);
    out.radius = cox.leading_root;
    out.json = {{"diagram", {c.m + 1, c.k + 1, c.n * (c.k + 1)}},
                {"root_gram", int_matrix_json(cox.root_gram)},
                {"action", int_matrix_json(cox.matrix)},
                {"char_poly", polynomial_json(cox.char_poly)},
                {"spectral_radius", cox.leading_root ? root_json(*cox.leading_root) : Json(nullptr)}};
    out.passed = true;
    out.json["passed"] = true;
    return out;
  }

  const auto orbits = orbit_data(c);
  const int n_long = orbits.lengths.back();
  const arith::IntegerPolynomial x_minus_one{-1, 1};
  if (c.family == Family::biproj) {
    const picard::PicardLattice lattice(c.k, orbits, picard::LatticeKind::biprojective);
    const auto action = picard::biproj_pic_action(c.k, orbits);
    const auto cp = picard::characteristic_polynomial(action);
    const auto canonical = lattice.canonical();
    out.radius = picard::spectral_root(action, c.precision_bits);
    const bool k_invariant = action * canonical == canonical;
    out.json = {{"basis", lattice.labels()},
                {"action", int_matrix_json(action)},
                {"char_poly", polynomial_json(cp)},
                {"spectral_radius", out.radius ? root_json(*out.radius) : Json(nullptr)},
                {"canonical_class_invariant", k_invariant}};
    out.passed = k_invariant;
    if (is_coxeter_data(c, orbits)) {
      const auto spectrum = spectra::classify_exceptional(Family::biproj, c.k, n_long, c.precision_bits);
      auto cmp = spectral_comparison(cp, spectrum.full_poly, out.radius, spectrum.delta, c.precision_bits);
      out.passed = out.passed && cmp["matches"].get<bool>() && cmp["radius_agrees"].get<bool>();
      out.json["comparison"] = std::move(cmp);
    }
    out.json["passed"] = out.passed;
    return out;
  }

  const picard::PicardLattice lattice(c.k, orbits);
  const auto gram = lattice.gram();
  const auto action = picard::coxeter_action(lattice);
  const auto pullback = picard::geometric_pullback(lattice);
  const auto cp = picard::characteristic_polynomial(action);
  const auto pairings = picard::canonical_pairings(c.k, orbits);
  out.radius = picard::spectral_root(action, c.precision_bits);
  const bool preserves = picard::transpose(action) * gram * action == gram;
  const bool pullback_preserves = picard::transpose(pullback) * gram * pullback == gram;
  const auto canonical = lattice.canonical();
  const bool k_invariant = action * canonical == canonical;
  const bool same_charpoly = picard::characteristic_polynomial(pullback) == cp;

  out.json = {{"basis", lattice.labels()},
              {"orbit_lengths", orbits.lengths},
              {"sigma", orbits.sigma},
              {"gram", int_matrix_json(gram)},
              {"root_gram", int_matrix_json(lattice.root_gram())},
              {"action", int_matrix_json(action)},
              {"char_poly", polynomial_json(cp)},
              {"spectral_radius", out.radius ? root_json(*out.radius) : Json(nullptr)},
              {"preserves_form", preserves},
              {"geometric_pullback_preserves_form", pullback_preserves},
              {"geometric_pullback_same_char_poly", same_charpoly},
              {"canonical_class_invariant", k_invariant},
              {"canonical_self_intersection", integer_json(pairings.self_gram)},
              {"canonical_dot_curve", integer_json(pairings.curve_degrees)},
              {"canonical_pairings_agree", pairings.agree}};
  out.passed = preserves && pullback_preserves && k_invariant && same_charpoly && pairings.agree;
  if (is_coxeter_data(c, orbits)) {
    const auto spectrum = spectra::classify_exceptional(Family::pk, c.k, n_long, c.precision_bits);
    auto cmp = spectral_comparison(x_minus_one * cp, spectrum.full_poly, out.radius, spectrum.delta, c.precision_bits);
    out.passed = out.passed && cmp["matches"].get<bool>() && cmp["radius_agrees"].get<bool>();
    out.json["comparison"] = std::move(cmp);
  }
  out.json["passed"] = out.passed;
  return out;
}

CommandResult run_single(const RunConfig& c);

}  // namespace

CommandResult cmd_degree(const RunConfig& c) {
  CommandResult r{header(c), kOk};
  bool exceptional = false;
  std::optional<spectra::IsolatedRoot> delta;
  r.report["degree"] = degree_section(c, exceptional, delta);
  return r;
}

CommandResult cmd_construct(const RunConfig& c) {
  CommandResult r{header(c), kOk};
  const auto con = build(c);
  r.report["construction"] = construction_json(con, construct::real_embedding(con, c.precision_bits));
  if (!con.all_checks_hold()) r.exit_code = kVerificationFailed;
  return r;
}

CommandResult cmd_verify(const RunConfig& c) {
  CommandResult r{header(c), kOk};
  const auto con = build(c);
  auto section = verify_section(c, con);
  r.report["verify"] = std::move(section.json);
  if (!section.passed) r.exit_code = kVerificationFailed;
  return r;
}

CommandResult cmd_picard(const RunConfig& c) {
  CommandResult r{header(c), kOk};
  auto section = picard_section(c);
  r.report["picard"] = std::move(section.json);
  if (!section.passed) r.exit_code = kVerificationFailed;
  return r;
}

CommandResult cmd_report(const RunConfig& c) {
  CommandResult r{header(c), kOk};
  bool exceptional = false;
  std::optional<spectra::IsolatedRoot> degree_root;
  r.report["degree"] = degree_section(c, exceptional, degree_root);
  if (exceptional) {
    r.report["stopped"] = "exceptional pair: the multiplier would be a root of unity, so no construction exists";
    r.exit_code = kExceptionalPair;
    return r;
  }
  const auto con = build(c);
  const auto embedding = construct::real_embedding(con, c.precision_bits);
  r.report["construction"] = construction_json(con, embedding);
  auto verified = verify_section(c, con);
  r.report["verify"] = verified.json;
  auto pic = picard_section(c);
  r.report["picard"] = pic.json;

  // δ from each stage.
  const arith::BigFloat tol = arith::BigFloat::exp2(-c.precision_bits / 2, c.precision_bits);
  const arith::BigFloat delta = embedding(con.map.delta);
  Json deltas = {{"construct", decimal_json(delta)}};
  bool agree = true;
  auto compare = [&](const std::string& name, const std::optional<arith::BigFloat>& value) {
    if (!value) {
      deltas[name] = nullptr;
      agree = false;
      return;
    }
    deltas[name] = decimal_json(*value);
    agree = agree && arith::abs(*value - delta) < tol;
  };
  compare("degree", degree_root ? std::optional(degree_root->midpoint) : std::nullopt);
  std::optional<arith::BigFloat> measured;
  if (verified.exact_orbit && verified.exact_orbit->multiplier_measured)
    measured = embedding(*verified.exact_orbit->multiplier_measured);
  if (c.family == Family::lines) {
    // The lines map contracts the curve law by 1/α; its orbit report carries no multiplier.
    measured = arith::BigFloat(1, c.precision_bits) / embedding(con.map.law_multiplier);
  } else if (c.backend == Backend::floating) {
    measured = embedding(con.map.law_multiplier);
  }
  compare("verify", measured);
  compare("picard", pic.radius ? std::optional(pic.radius->midpoint) : std::nullopt);

  Json cross = {{"delta", std::move(deltas)}, {"delta_agrees", agree}};
  bool trace_ok = true;
  if (c.family == Family::pk && verified.exact_orbit && verified.passed) {
    const auto tr = picard::trace_compatibility(con, *verified.exact_orbit);
    cross["trace_compatibility"] = trace_json(tr, embedding);
    trace_ok = tr.passed();
  } else {
    cross["trace_compatibility"] = nullptr;
  }
  r.report["cross_check"] = std::move(cross);
  if (!(con.all_checks_hold() && verified.passed && pic.passed && agree && trace_ok)) r.exit_code = kVerificationFailed;
  return r;
}

namespace {

Json error_report(const RunConfig& c, int code, const std::string& message) {
  Json j = header(c);
  j["error"] = {{"exit_code", code}, {"message", message}};
  return j;
}

CommandResult run_single(const RunConfig& c) {
  try {
    c.validate();
    if (c.command == "degree") return cmd_degree(c);
    if (c.command == "construct") return cmd_construct(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "picard") return cmd_picard(c);
    return cmd_report(c);
  } catch (const InvalidInput& e) {
    return {error_report(c, kInvalidInput, e.what()), kInvalidInput};
  } catch (const ExceptionalPair& e) {
    return {error_report(c, kExceptionalPair, e.what()), kExceptionalPair};
  } catch (const verify::PrecisionExhausted& e) {
    return {error_report(c, kVerificationFailed, e.what()), kVerificationFailed};
  } catch (const picard::UnverifiedConstruction& e) {
    return {error_report(c, kVerificationFailed, e.what()), kVerificationFailed};
  } catch (const std::exception& e) {
    return {error_report(c, kInternalError, std::string("internal error: ") + e.what()), kInternalError};
  }
}

}  // namespace

CommandResult run(const RunConfig& config) {
  if (!config.sweep) return run_single(config);
  try {
    config.validate();
  } catch (const InvalidInput& e) {
    return {error_report(config, kInvalidInput, e.what()), kInvalidInput};
  }
  const auto& s = *config.sweep;
  std::vector<RunConfig> cells;
  for (int k = s.k_min; k <= s.k_max; ++k)
    for (int n = s.n_min; n <= s.n_max; ++n) {
      RunConfig cell = config;
      cell.sweep.reset();
      cell.k = k;
      cell.n = n;
      cells.push_back(std::move(cell));
    }

  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CommandResult> results(cells.size());
  for (std::size_t start = 0; start < cells.size(); start += workers) {
    std::vector<std::future<CommandResult>> batch;
    for (std::size_t i = start; i < std::min(cells.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, [&cell = cells[i]] { return run_single(cell); }));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  CommandResult out{header(config), kOk};
  out.report["sweep"] = {{"k", {s.k_min, s.k_max}}, {"n", {s.n_min, s.n_max}}};
  Json list = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    results[i].report.erase("schema");
    list.push_back({{"k", cells[i].k}, {"n", cells[i].n}, {"exit_code", results[i].exit_code},
                    {"report", std::move(results[i].report)}});
    out.exit_code = std::max(out.exit_code, results[i].exit_code);
  }
  out.report["cells"] = std::move(list);
  return out;
}

std::string summary(const RunConfig& c, const CommandResult& r) {
  std::string head = c.command + " " + std::string(to_string(c.family));
  if (c.sweep) {
    head += " sweep k=" + std::to_string(c.sweep->k_min) + ".." + std::to_string(c.sweep->k_max) +
            " n=" + std::to_string(c.sweep->n_min) + ".." + std::to_string(c.sweep->n_max);
  } else {
    head += " k=" + std::to_string(c.k) + " n=" + std::to_string(c.n);
    if (c.family == Family::lines) head += " m=" + std::to_string(c.m);
  }
  if (r.report.contains("error")) return head + ": " + r.report["error"]["message"].get<std::string>();
  std::string status = r.exit_code == kOk ? "ok" : r.exit_code == kExceptionalPair ? "exceptional" : "FAILED";
  if (r.report.contains("degree") && r.report["degree"].value("exceptional", false)) status = "exceptional";
  if (r.report.contains("degree") && r.report["degree"].contains("delta") && !r.report["degree"]["delta"].is_null())
    status += ", delta = " + r.report["degree"]["delta"]["decimal"].get<std::string>();
  return head + ": " + status;
}

}  // namespace cremona::cli
