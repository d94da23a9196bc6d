// Command-line front end for the singmon library.  Every subcommand has a
// plain-text form and a --json form; both are byte-deterministic (doubles are
// always formatted with %.12g).
//
// Exit codes: 0 success, 1 a verification ran and failed, 2 bad input.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <singmon/catalog.hpp>
#include <singmon/cyclotomic.hpp>
#include <singmon/errors.hpp>
#include <singmon/frame_shape.hpp>
#include <singmon/int_poly.hpp>
#include <singmon/mckay.hpp>
#include <singmon/monodromy.hpp>
#include <singmon/numbers.hpp>
#include <singmon/seifert.hpp>

namespace {

using nlohmann::ordered_json;
using namespace singmon;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ordered_json complex_json(std::complex<double> z) {
  return {{"re", fmt_double(z.real())}, {"im", fmt_double(z.imag())}};
}

std::string complex_text(std::complex<double> z) {
  return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         fmt_double(std::abs(z.imag())) + "i";
}

ordered_json int_json(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

ordered_json shape_json(const FrameShape& s) {
  ordered_json chi = ordered_json::array();
  for (const auto& [m, e] : s.exponents()) chi.push_back({m, e});
  return {{"chi", chi}, {"text", format_frame_shape(s)}};
}

ordered_json poly_json(const IntPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(int_json(c));
  return {{"coeffs", coeffs}};
}

ordered_json series_json(const PowerSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(int_json(c));
  return coeffs;
}

std::string series_text(const PowerSeries& s) {
  std::string out;
  for (const auto& c : s.coeffs()) {
    if (!out.empty()) out += ' ';
    out += c.str();
  }
  return out;
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

void emit(bool json, const ordered_json& doc, const std::string& text) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

WeightSystem make_system(const std::vector<std::int64_t>& weights,
                         const std::vector<std::int64_t>& degrees) {
  WeightSystem ws{weights, degrees};
  ws.validate();
  return ws;
}

void require_three(const std::vector<std::int64_t>& weights,
                   const std::vector<std::int64_t>& degrees) {
  if (weights.size() != 3 || degrees.size() != 1)
    throw InvalidGeometry("this command needs exactly three weights and one degree");
}

// Catalog-style entry for any A/D/E label, generated for ranks beyond the
// shipped table.
CatalogEntry entry_for_root(const std::string& label) {
  const RootSystem rs = root_system(label);
  switch (rs.family) {
    case 'A': return kleinian_a(rs.rank);
    case 'D': return kleinian_d(rs.rank);
    default: return lookup(rs.name);
  }
}

struct VerifyItem {
  std::string name;
  bool ok = false;
};

void report_entry_checks(const std::string& suite, const CatalogReport& report,
                         std::vector<VerifyItem>& items) {
  for (const auto& c : report.checks) items.push_back({suite + " " + c.name, c.ok});
}

std::vector<std::array<std::int64_t, 3>> brieskorn_triples(std::uint64_t seed,
                                                           int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(2, 9);
  std::vector<std::array<std::int64_t, 3>> out;
  while (static_cast<int>(out.size()) < count) {
    const std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (gcd64(a, b) != 1 || gcd64(a, c) != 1 || gcd64(b, c) != 1) continue;
    out.push_back({a, b, c});
  }
  return out;
}

FrameShape random_polynomial_shape(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> period(1, 24);
  std::uniform_int_distribution<std::int64_t> exp(1, 3);
  std::uniform_int_distribution<int> factors(1, 4);
  FrameShape s;
  const int n = factors(rng);
  for (int i = 0; i < n; ++i) s.add_factor(period(rng), exp(rng));
  return s;
}

int run_verify(const std::string& suite, std::int64_t max_index, std::uint64_t seed,
               std::size_t terms, int count, bool json) {
  std::vector<VerifyItem> items;
  const bool all = suite == "all";

  if (all || suite == "kleinian")
    report_entry_checks("kleinian", validate_all(kleinian_entries(max_index, max_index)),
                        items);
  if (all || suite == "elliptic")
    report_entry_checks("elliptic", validate_all(elliptic_entries()), items);

  if (all || suite == "duality") {
    for (const auto& e : default_entries()) {
      if (e.weights.size() != 3) continue;
      const auto check = theorem_hypersurface_verify(e.weights[0], e.weights[1],
                                                     e.weights[2], e.degrees[0]);
      items.push_back({"duality " + e.name, check.ok});
    }
    for (const auto& [a, b, c] : brieskorn_triples(seed, count)) {
      const WeightSystem ws = brieskorn_weights(a, b, c);
      const auto check = theorem_hypersurface_verify(ws.weights[0], ws.weights[1],
                                                     ws.weights[2], ws.degrees[0]);
      items.push_back({"duality brieskorn(" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")",
                       check.ok});
    }
  }

  if (all || suite == "intersection") {
    const CatalogEntry quadric = lookup("D~5");
    const auto check = theorem_quadric_verify(
        parse_frame_shape(quadric.pi_a), quadric.degrees[0], quadric.degrees[1],
        quadric.genus, parse_frame_shape(*quadric.pi_m));
    items.push_back({"intersection quadric D~5", check.ok});
    std::mt19937_64 rng(seed);
    for (const std::int64_t q : {2, 4, 6, 8}) {
      bool ok = flat_suspension(FrameShape{}, 2, q) == flat_codimension2(FrameShape{});
      for (int i = 0; i < 8; ++i) {
        const FrameShape s = random_polynomial_shape(rng);
        ok = ok && flat_suspension(s, 2, q) == flat_codimension2(s);
      }
      items.push_back({"intersection flat suspension q=" + std::to_string(q), ok});
    }
  }

  if (all || suite == "mckay") {
    std::vector<std::string> labels;
    for (std::int64_t l = 1; l <= max_index; ++l) labels.push_back("A" + std::to_string(l));
    for (std::int64_t l = 4; l <= max_index; ++l) labels.push_back("D" + std::to_string(l));
    labels.insert(labels.end(), {"E6", "E7", "E8"});
    for (const auto& label : labels) {
      const CatalogEntry e = entry_for_root(label);
      const auto report = mckay_verify(root_system(label), e.weights[0], e.weights[1],
                                       e.weights[2], e.degrees[0], terms);
      items.push_back({"mckay " + label, report.ok});
    }
  }

  if (items.empty()) throw ParseError("verify: unknown suite \"" + suite + "\"");

  int passed = 0;
  for (const auto& item : items) passed += item.ok;
  const bool ok = passed == static_cast<int>(items.size());
  if (json) {
    ordered_json results = ordered_json::array();
    for (const auto& item : items) results.push_back({{"name", item.name}, {"ok", item.ok}});
    emit(true,
         {{"suite", suite},
          {"results", results},
          {"passed", passed},
          {"total", items.size()},
          {"ok", ok}},
         "");
  } else {
    std::string text;
    for (const auto& item : items)
      text += std::string(item.ok ? "[PASS] " : "[FAIL] ") + item.name + "\n";
    text += "summary: " + std::to_string(passed) + "/" + std::to_string(items.size()) +
            " passed\n";
    emit(false, {}, text);
  }
  return ok ? 0 : 1;
}

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["name"] = e.name;
  j["group"] = e.group;
  j["weights"] = e.weights;
  j["degrees"] = e.degrees;
  j["alphas"] = e.alphas;
  j["g"] = e.genus;
  if (e.b)
    j["b"] = *e.b;
  else
    j["b"] = nullptr;
  j["R"] = e.exponent;
  j["pi_A"] = e.pi_a;
  if (e.pi_m)
    j["pi_M"] = *e.pi_m;
  else
    j["pi_M"] = nullptr;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of quasihomogeneous surface singularities"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  int rc = 0;
  std::vector<std::int64_t> weights, degrees;
  std::vector<std::int64_t> coeffs;
  std::int64_t degree = 0, level = 0, alpha = 0, p_fold = 2, root_index = 1;
  std::int64_t max_index = 8;
  std::uint64_t seed = 12345;
  std::size_t terms = 12;
  int count = 100, xi_base = 1;
  bool want_bundle = false, use_oracle = false;
  std::string shape_text, phi_text, phi_prime_text = "1^0", root_label, what = "verify";
  std::string suite = "all", catalog_file;

  auto* poincare = app.add_subcommand("poincare", "Poincare series of a weight system");
  poincare->add_option("--weights", weights, "weights q1,q2,...")->required()->delimiter(',');
  poincare->add_option("--degrees", degrees, "degrees d1,d2,...")->required()->delimiter(',');
  poincare->add_option("--terms", terms, "series order (default 12)");
  poincare->add_flag("--bundle", want_bundle, "also print psi, phi, phi-tilde (3 weights)");
  poincare->callback([&] {
    const WeightSystem ws = make_system(weights, degrees);
    const FrameShape p = poincare_series(ws);
    const PowerSeries series = expand_series(p, terms);
    ordered_json j;
    std::string text;
    j["p"] = shape_json(p);
    text += "p = " + format_frame_shape(p) + "\n";
    if (want_bundle) {
      require_three(weights, degrees);
      const PoincareBundle b = bundle(weights[0], weights[1], weights[2], degrees[0]);
      j["psi"] = shape_json(b.psi);
      j["phi"] = shape_json(b.phi);
      j["phi_tilde"] = shape_json(b.phi_tilde);
      j["alphas"] = b.alphas;
      j["genus"] = b.genus;
      j["exponent"] = b.exponent;
      text += "psi = " + format_frame_shape(b.psi) + "\n";
      text += "phi = " + format_frame_shape(b.phi) + "\n";
      text += "phi_tilde = " + format_frame_shape(b.phi_tilde) + "\n";
      text += "alphas = " + list_text(b.alphas) + "\n";
      text += "genus = " + std::to_string(b.genus) + "\n";
      text += "exponent = " + std::to_string(b.exponent) + "\n";
    }
    j["series"] = series_json(series);
    text += "series = " + series_text(series) + "\n";
    emit(json, j, text);
  });

  auto* orbit = app.add_subcommand("orbit", "Seifert orbit invariants of a hypersurface");
  orbit->add_option("--weights", weights, "weights q1,q2,q3")->required()->delimiter(',');
  orbit->add_option("--degree", degree, "degree d")->required();
  orbit->callback([&] {
    if (weights.size() != 3)
      throw InvalidGeometry("orbit: needs exactly three weights");
    const auto alphas = orbit_invariants(weights[0], weights[1], weights[2], degree);
    const std::int64_t g = genus(weights[0], weights[1], weights[2], degree, alphas);
    const std::int64_t R = exponent(weights[0], weights[1], weights[2], degree);
    ordered_json j;
    std::string text;
    j["alphas"] = alphas;
    j["genus"] = g;
    j["exponent"] = R;
    text += "alphas = " + list_text(alphas) + "\n";
    text += "genus = " + std::to_string(g) + "\n";
    text += "exponent = " + std::to_string(R) + "\n";
    if (R != 0) {
      const SeifertData data = seifert_completion(alphas, R, g);
      ordered_json pairs = ordered_json::array();
      std::string pair_text;
      for (const auto& pr : data.pairs) {
        pairs.push_back({pr.alpha, pr.beta});
        if (!pair_text.empty()) pair_text += ' ';
        pair_text += "(" + std::to_string(pr.alpha) + "," + std::to_string(pr.beta) + ")";
      }
      j["b"] = int_json(data.b);
      j["pairs"] = pairs;
      j["virtual_degree"] = {{"num", int_json(data.virtual_degree.numerator())},
                             {"den", int_json(data.virtual_degree.denominator())}};
      text += "b = " + data.b.str() + "\n";
      text += "pairs = " + pair_text + "\n";
      text += "virtual_degree = " + data.virtual_degree.numerator().str() + "/" +
              data.virtual_degree.denominator().str() + "\n";
    }
    emit(json, j, text);
  });

  auto* monodromy = app.add_subcommand("monodromy", "characteristic polynomial of the monodromy");
  monodromy->add_option("--weights", weights, "weights q1,q2,q3")->required()->delimiter(',');
  monodromy->add_option("--degree", degree, "degree d")->required();
  monodromy->add_flag("--oracle", use_oracle, "use the exponent-expansion route");
  monodromy->callback([&] {
    if (weights.size() != 3)
      throw InvalidGeometry("monodromy: needs exactly three weights");
    const MonodromyResult res =
        use_oracle ? charpoly_oracle(weights[0], weights[1], weights[2], degree)
                   : charpoly_hypersurface(weights[0], weights[1], weights[2], degree);
    ordered_json lambdas = ordered_json::array();
    std::string lambda_text;
    for (const auto& [k, v] : res.lambdas) {
      lambdas.push_back({k, v});
      if (!lambda_text.empty()) lambda_text += ' ';
      lambda_text += std::to_string(k) + ":" + std::to_string(v);
    }
    emit(json,
         {{"charpoly", shape_json(res.charpoly)}, {"mu", res.mu}, {"lambdas", lambdas}},
         "charpoly = " + format_frame_shape(res.charpoly) + "\nmu = " +
             std::to_string(res.mu) + "\nlambdas = " + lambda_text + "\n");
  });

  auto* dual = app.add_subcommand("dual", "Saito dual of a frame shape");
  dual->add_option("--shape", shape_text, "shape, e.g. 2*3^2/1*6")->required();
  auto* level_opt = dual->add_option("--level", level, "dual level (default: lcm of periods)");
  dual->callback([&] {
    const FrameShape s = parse_frame_shape(shape_text);
    const FrameShape d = level_opt->count() ? saito_dual(s, level) : saito_dual(s);
    emit(json, {{"dual", shape_json(d)}}, "dual = " + format_frame_shape(d) + "\n");
  });

  auto* factor = app.add_subcommand("factor", "factor a cyclotomic product into a shape");
  factor->add_option("--coeffs", coeffs, "coefficients c0,c1,...")->required()->delimiter(',');
  factor->callback([&] {
    std::vector<Integer> c(coeffs.begin(), coeffs.end());
    const FrameShape s = factor_cyclotomic(IntPoly(std::move(c)));
    emit(json, {{"shape", shape_json(s)}}, "shape = " + format_frame_shape(s) + "\n");
  });

  auto* susp = app.add_subcommand("suspension", "monodromy shape of a p-fold suspension");
  susp->add_option("--phi", phi_text, "shape of the singularity")->required();
  susp->add_option("--phi-prime", phi_prime_text, "shape of its hypersurface section");
  susp->add_option("--p", p_fold, "suspension fold (at least 2)")->required();
  susp->callback([&] {
    if (p_fold < 2) throw InvalidGeometry("suspension: p must be at least 2");
    const FrameShape s = suspension(parse_frame_shape(phi_text),
                                    parse_frame_shape(phi_prime_text), p_fold);
    emit(json, {{"suspension", shape_json(s)}},
         "suspension = " + format_frame_shape(s) + "\n");
  });

  auto* mckay = app.add_subcommand("mckay", "McKay correspondence checks for a root system");
  mckay->add_option("--root", root_label, "label A<l>, D<l>, E6, E7 or E8")->required();
  mckay->add_option("--what", what, "coxeter, affine, series or verify (default verify)")
      ->check(CLI::IsMember({"coxeter", "affine", "series", "verify"}));
  mckay->add_option("--terms", terms, "series order (default 12)");
  mckay->callback([&] {
    const RootSystem rs = root_system(root_label);
    if (what == "coxeter") {
      const FrameShape s = coxeter_charpoly(rs);
      emit(json, {{"coxeter", shape_json(s)}}, "coxeter = " + format_frame_shape(s) + "\n");
      return;
    }
    if (what == "affine") {
      const FrameShape s = affine_coxeter_charpoly(rs);
      emit(json, {{"affine", shape_json(s)}}, "affine = " + format_frame_shape(s) + "\n");
      return;
    }
    if (what == "series") {
      const IntPoly det = recursion_determinant(rs);
      const IntPoly det0 = recursion_determinant_0(rs);
      const PowerSeries series = PowerSeries::divide(det0, det, terms);
      emit(json,
           {{"det", poly_json(det)}, {"det_0", poly_json(det0)}, {"series", series_json(series)}},
           "det = " + det.str() + "\ndet_0 = " + det0.str() + "\nseries = " +
               series_text(series) + "\n");
      return;
    }
    const CatalogEntry e = entry_for_root(root_label);
    const McKayReport r = mckay_verify(rs, e.weights[0], e.weights[1], e.weights[2],
                                       e.degrees[0], terms);
    const std::vector<std::int64_t> dims = kac_dims(rs);
    ordered_json j;
    std::string text;
    j["nu"] = r.nu;
    j["dims"] = dims;
    j["series_cramer_matches"] = r.series_cramer_matches;
    j["series_poincare_matches"] = r.series_poincare_matches;
    text += "nu = " + std::to_string(r.nu) + "\n";
    text += "dims = " + list_text(dims) + "\n";
    text += std::string("series_cramer_matches = ") +
            (r.series_cramer_matches ? "true" : "false") + "\n";
    text += std::string("series_poincare_matches = ") +
            (r.series_poincare_matches ? "true" : "false") + "\n";
    if (r.nu == 2) {
      j["coxeter_is_phi"] = r.coxeter_is_phi;
      j["affine_is_psi"] = r.affine_is_psi;
      j["quotient_is_poincare"] = r.quotient_is_poincare;
      text += std::string("coxeter_is_phi = ") + (r.coxeter_is_phi ? "true" : "false") + "\n";
      text += std::string("affine_is_psi = ") + (r.affine_is_psi ? "true" : "false") + "\n";
      text += std::string("quotient_is_poincare = ") +
              (r.quotient_is_poincare ? "true" : "false") + "\n";
    } else {
      j["dual_differs"] = r.dual_differs;
      text += std::string("dual_differs = ") + (r.dual_differs ? "true" : "false") + "\n";
    }
    j["ok"] = r.ok;
    text += std::string("ok = ") + (r.ok ? "true" : "false") + "\n";
    emit(json, j, text);
    if (!r.ok) rc = 1;
  });

  auto* residue = app.add_subcommand("residue", "residue of the Poincare series at a root of unity");
  residue->add_option("--weights", weights, "weights q1,q2,q3")->required()->delimiter(',');
  residue->add_option("--degree", degree, "degree d")->required();
  residue->add_option("--alpha", alpha, "pole order alpha")->required();
  residue->add_option("--root-index", root_index, "numerator of the root angle (default 1)");
  residue->callback([&] {
    if (weights.size() != 3)
      throw InvalidGeometry("residue: needs exactly three weights");
    const WeightSystem ws = make_system(weights, {degree});
    const ResidueResult res = residue_exact(poincare_series(ws), alpha, root_index);
    emit(json,
         {{"alpha", alpha},
          {"root_index", root_index},
          {"xi", complex_json(res.xi)},
          {"value", complex_json(res.value)}},
         "xi = " + complex_text(res.xi) + "\nresidue = " + complex_text(res.value) + "\n");
  });

  auto* wagreich = app.add_subcommand("wagreich3", "structure conditions on a Poincare series");
  wagreich->add_option("--weights", weights, "weights q1,q2,q3")->required()->delimiter(',');
  wagreich->add_option("--degree", degree, "degree d")->required();
  wagreich->add_option("--xi-base", xi_base, "power of xi in the stated sum (default 1)");
  wagreich->callback([&] {
    if (weights.size() != 3)
      throw InvalidGeometry("wagreich3: needs exactly three weights");
    const Wagreich3Report rep =
        wagreich3_check(weights[0], weights[1], weights[2], degree, xi_base);
    ordered_json residues = ordered_json::array();
    std::string text;
    text += std::string("weights_coprime = ") + (rep.weights_coprime ? "true" : "false") + "\n";
    text += std::string("genus_integral = ") + (rep.genus_integral ? "true" : "false") + "\n";
    text += "genus = " + std::to_string(rep.genus) + "\n";
    text += "exponent = " + std::to_string(rep.exponent) + "\n";
    text += std::string("pair_gcds_divide = ") + (rep.pair_gcds_divide ? "true" : "false") + "\n";
    for (const auto& r : rep.residues) {
      residues.push_back({{"alpha", r.alpha},
                          {"weights_divisible", r.weights_divisible},
                          {"residue", complex_json(r.residue)},
                          {"case_value", complex_json(r.case_value)},
                          {"stated_sum", complex_json(r.stated_sum)},
                          {"residue_matches_case", r.residue_matches_case},
                          {"stated_matches_case", r.stated_matches_case}});
      text += "alpha " + std::to_string(r.alpha) + ": divides " +
              std::to_string(r.weights_divisible) + ", residue " + complex_text(r.residue) +
              ", case " + complex_text(r.case_value) + ", match " +
              (r.residue_matches_case ? "true" : "false") + "\n";
    }
    text += std::string("ok = ") + (rep.ok ? "true" : "false") + "\n";
    emit(json,
         {{"weights_coprime", rep.weights_coprime},
          {"genus_integral", rep.genus_integral},
          {"genus", rep.genus},
          {"exponent", rep.exponent},
          {"pair_gcds_divide", rep.pair_gcds_divide},
          {"residues", residues},
          {"ok", rep.ok}},
         text);
    if (!rep.ok) rc = 1;
  });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "kleinian, elliptic, duality, intersection, mckay or all (default all)")
      ->check(CLI::IsMember({"kleinian", "elliptic", "duality", "intersection", "mckay", "all"}));
  verify->add_option("--max-index", max_index, "largest A/D rank checked (default 8)");
  verify->add_option("--seed", seed, "seed for randomized cases (default 12345)");
  verify->add_option("--count", count, "number of random triples (default 100)");
  auto* verify_terms = verify->add_option("--terms", terms, "series order (default 60)");
  verify->callback([&] {
    rc = run_verify(suite, max_index, seed, verify_terms->count() ? terms : 60, count, json);
  });

  auto* catalog = app.add_subcommand("catalog", "tabulated singularities");
  auto* list = catalog->add_subcommand("list", "print the catalog");
  list->add_option("--file", catalog_file, "read entries from a JSON file instead");
  catalog->require_subcommand(1);
  list->callback([&] {
    const auto entries =
        catalog_file.empty() ? default_entries() : load_catalog_file(catalog_file);
    ordered_json j = ordered_json::array();
    std::string text;
    for (const auto& e : entries) {
      j.push_back(entry_json(e));
      text += e.name + "  group=" + (e.group.empty() ? "-" : e.group) +
              "  weights=" + list_text(e.weights) + "  degrees=" + list_text(e.degrees) +
              "  alphas=" + (e.alphas.empty() ? "-" : list_text(e.alphas)) +
              "  g=" + std::to_string(e.genus) +
              "  b=" + (e.b ? std::to_string(*e.b) : "-") +
              "  R=" + std::to_string(e.exponent) + "  pi_A=" + e.pi_a +
              "  pi_M=" + (e.pi_m ? *e.pi_m : "-") + "\n";
    }
    emit(json, j, text);
  });
  auto* validate = catalog->add_subcommand("validate", "recompute every entry and compare");
  validate->add_option("--file", catalog_file, "read entries from a JSON file instead");
  validate->callback([&] {
    const auto entries =
        catalog_file.empty() ? default_entries() : load_catalog_file(catalog_file);
    const CatalogReport report = validate_all(entries);
    ordered_json j;
    ordered_json checks = ordered_json::array();
    std::string text;
    int passed = 0;
    for (const auto& c : report.checks) {
      checks.push_back(ordered_json{{"name", c.name},
                                    {"exponent", c.exponent_matches},
                                    {"alphas", c.alphas_match},
                                    {"genus", c.genus_matches},
                                    {"b", c.b_matches},
                                    {"phi", c.phi_matches},
                                    {"duality", c.duality_ok},
                                    {"pi_m", c.pi_m_matches},
                                    {"ok", c.ok}});
      text += std::string(c.ok ? "[PASS] " : "[FAIL] ") + c.name + "\n";
      if (c.ok) ++passed;
    }
    j["checks"] = checks;
    j["passed"] = passed;
    j["total"] = static_cast<int>(report.checks.size());
    j["ok"] = report.ok;
    text += "summary: " + std::to_string(passed) + "/" +
            std::to_string(report.checks.size()) + " entries validated\n";
    emit(json, j, text);
    if (!report.ok) rc = 1;
  });

  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
