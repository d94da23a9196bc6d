#include "singmon/catalog.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

#include "singmon/cyclotomic.hpp"
#include "singmon/errors.hpp"
#include "singmon/frame_shape.hpp"
#include "singmon/monodromy.hpp"
#include "singmon/seifert.hpp"

namespace singmon {

CatalogEntry kleinian_a(std::int64_t l) {
  if (l < 1) throw UnknownEntry("kleinian_a: index must be at least 1");
  CatalogEntry e;
  e.name = "A" + std::to_string(l);
  e.group = "C_" + std::to_string(l + 1);
  if (l % 2 == 1) {
    const std::int64_t n = (l + 1) / 2;
    e.weights = {1, n, n};
    e.degrees = {2 * n};
    if (n >= 2) e.alphas = {n, n};
    e.b = 2;
    e.exponent = -1;
    e.pi_a = format_frame_shape(FrameShape{{2 * n, 1}, {1, -1}});
  } else {
    const std::int64_t n = l / 2;
    e.weights = {2, 2 * n + 1, 2 * n + 1};
    e.degrees = {4 * n + 2};
    e.alphas = {2 * n + 1, 2 * n + 1};
    e.b = 1;
    e.exponent = -2;
    e.pi_a = format_frame_shape(FrameShape{{4 * n + 2, 1}, {2, -1}});
  }
  return e;
}

CatalogEntry kleinian_d(std::int64_t l) {
  if (l < 4) throw UnknownEntry("kleinian_d: index must be at least 4");
  CatalogEntry e;
  e.name = "D" + std::to_string(l);
  e.group = "D_" + std::to_string(l - 2);
  e.weights = {2, l - 2, l - 1};
  e.degrees = {2 * (l - 1)};
  e.alphas = {2, 2, l - 2};
  e.b = 2;
  e.exponent = -1;
  e.pi_a = format_frame_shape(FrameShape{{2, 1}, {2 * (l - 1), 1}, {1, -1}, {l - 1, -1}});
  return e;
}

namespace {

CatalogEntry exceptional(std::string name, std::string group,
                         std::vector<std::int64_t> weights, std::int64_t degree,
                         std::vector<std::int64_t> alphas, std::string pi_a) {
  CatalogEntry e;
  e.name = std::move(name);
  e.group = std::move(group);
  e.weights = std::move(weights);
  e.degrees = {degree};
  e.alphas = std::move(alphas);
  e.b = 2;
  e.exponent = -1;
  e.pi_a = std::move(pi_a);
  return e;
}

CatalogEntry elliptic(std::string name, std::vector<std::int64_t> weights,
                      std::vector<std::int64_t> degrees, std::int64_t b,
                      std::string pi_a, std::string pi_m) {
  CatalogEntry e;
  e.name = std::move(name);
  e.weights = std::move(weights);
  e.degrees = std::move(degrees);
  e.genus = 1;
  e.b = b;
  e.exponent = 0;
  e.pi_a = std::move(pi_a);
  e.pi_m = std::move(pi_m);
  return e;
}

}  // namespace

std::vector<CatalogEntry> kleinian_entries(std::int64_t max_a, std::int64_t max_d) {
  std::vector<CatalogEntry> out;
  for (std::int64_t l = 1; l <= max_a; ++l) out.push_back(kleinian_a(l));
  for (std::int64_t l = 4; l <= max_d; ++l) out.push_back(kleinian_d(l));
  out.push_back(exceptional("E6", "T", {3, 4, 6}, 12, {2, 3, 3}, "2*3*12/1*4*6"));
  out.push_back(exceptional("E7", "O", {4, 6, 9}, 18, {2, 3, 4}, "2*3*18/1*6*9"));
  out.push_back(exceptional("E8", "I", {6, 10, 15}, 30, {2, 3, 5}, "2*3*5*30/1*6*10*15"));
  return out;
}

std::vector<CatalogEntry> elliptic_entries() {
  return {
      elliptic("E~8", {1, 2, 3}, {6}, 1, "1*6/2*3", "2*3*6/1"),
      elliptic("E~7", {1, 1, 2}, {4}, 2, "4/2", "2*4^2/1"),
      elliptic("E~6", {1, 1, 1}, {3}, 3, "3/1", "3^3/1"),
      elliptic("D~5", {1, 1, 1, 1}, {2, 2}, 4, "2^2/1^2", "2^4/1"),
  };
}

std::vector<CatalogEntry> default_entries() {
  std::vector<CatalogEntry> out = kleinian_entries(8, 8);
  for (auto& e : elliptic_entries()) out.push_back(std::move(e));
  return out;
}

namespace {

// Fold the Unicode spellings onto the ASCII names: the precomposed letters
// E/e with tilde become "E~", and a combining tilde (U+0303) collapses onto
// the letter before it.
std::string normalize_name(const std::string& raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.size();) {
    const auto c0 = static_cast<unsigned char>(raw[i]);
    const auto c1 = i + 1 < raw.size() ? static_cast<unsigned char>(raw[i + 1]) : 0;
    const auto c2 = i + 2 < raw.size() ? static_cast<unsigned char>(raw[i + 2]) : 0;
    if (c0 == 0xE1 && c1 == 0xBA && (c2 == 0xBC || c2 == 0xBD)) {
      out += "E~";
      i += 3;
    } else if (c0 == 0xCC && c1 == 0x83) {
      out += '~';
      i += 2;
    } else {
      out += raw[i];
      ++i;
    }
  }
  return out;
}

}  // namespace

CatalogEntry lookup(const std::string& name) {
  const std::string wanted = normalize_name(name);
  for (auto& e : default_entries())
    if (e.name == wanted) return e;
  throw UnknownEntry("lookup: no catalog entry named \"" + name + "\"");
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_catalog_file: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError("load_catalog_file: " + std::string(err.what()));
  }
  std::vector<CatalogEntry> out;
  try {
    for (const auto& item : doc) {
      CatalogEntry e;
      e.name = item.at("name").get<std::string>();
      e.group = item.at("group").get<std::string>();
      e.weights = item.at("weights").get<std::vector<std::int64_t>>();
      e.degrees = item.at("degrees").get<std::vector<std::int64_t>>();
      e.alphas = item.at("alphas").get<std::vector<std::int64_t>>();
      e.genus = item.at("g").get<std::int64_t>();
      if (!item.at("b").is_null()) e.b = item.at("b").get<std::int64_t>();
      e.exponent = item.at("R").get<std::int64_t>();
      e.pi_a = item.at("pi_A").get<std::string>();
      if (!item.at("pi_M").is_null()) e.pi_m = item.at("pi_M").get<std::string>();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& err) {
    throw ParseError("load_catalog_file: " + std::string(err.what()));
  }
  return out;
}

namespace {

EntryCheck check_entry(const CatalogEntry& e) {
  EntryCheck c;
  c.name = e.name;
  const WeightSystem ws{e.weights, e.degrees};
  ws.validate();
  const std::int64_t r = std::accumulate(e.degrees.begin(), e.degrees.end(), std::int64_t(0)) -
                         std::accumulate(e.weights.begin(), e.weights.end(), std::int64_t(0));
  c.exponent_matches = r == e.exponent;
  const FrameShape pi_a = parse_frame_shape(e.pi_a);

  if (e.weights.size() == 3) {
    const std::int64_t q1 = e.weights[0], q2 = e.weights[1], q3 = e.weights[2];
    const std::int64_t d = e.degrees[0];
    c.alphas_match = orbit_invariants(q1, q2, q3, d) == e.alphas;
    c.genus_matches = genus(q1, q2, q3, d, e.alphas) == e.genus;
    c.phi_matches = bundle(q1, q2, q3, d).phi == pi_a;
    if (!e.b) {
      c.b_matches = true;
    } else if (e.exponent != 0) {
      c.b_matches = seifert_completion(e.alphas, e.exponent, e.genus).b == Integer(*e.b);
    } else {
      c.b_matches = to_polynomial(pi_a) == IntPoly{1, *e.b - 2, 1};
    }
    const DualityCheck dual = theorem_hypersurface_verify(q1, q2, q3, d);
    c.duality_ok = dual.ok;
    c.pi_m_matches = !e.pi_m || parse_frame_shape(*e.pi_m) == dual.lhs;
  } else {
    // Codimension two: the quadric plus the degrees[1] equation.  The alphas
    // and genus are fixture data consumed by the duality check.
    c.alphas_match = e.alphas.empty();
    c.genus_matches = true;
    FrameShape psi{{1, 2 - static_cast<std::int64_t>(e.alphas.size())}};
    for (const std::int64_t a : e.alphas) psi.add_factor(a, 1);
    c.phi_matches = poincare_series(ws) * psi == pi_a;
    c.b_matches = !e.b || (e.exponent == 0 && to_polynomial(pi_a) == IntPoly{1, *e.b - 2, 1});
    if (e.pi_m) {
      const FlatDualityCheck dual = theorem_quadric_verify(
          pi_a, e.degrees[0], e.degrees[1], e.genus, parse_frame_shape(*e.pi_m));
      c.duality_ok = dual.ok;
      c.pi_m_matches = dual.ok;
    } else {
      c.duality_ok = true;
      c.pi_m_matches = true;
    }
  }
  c.ok = c.exponent_matches && c.alphas_match && c.genus_matches && c.b_matches &&
         c.phi_matches && c.duality_ok && c.pi_m_matches;
  return c;
}

}  // namespace

CatalogReport validate_all(const std::vector<CatalogEntry>& entries) {
  CatalogReport report;
  report.ok = true;
  for (const auto& e : entries) {
    EntryCheck c;
    try {
      c = check_entry(e);
    } catch (const Error&) {
      c = EntryCheck{};
      c.name = e.name;
    }
    report.ok = report.ok && c.ok;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace singmon
