#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace singmon {

// One tabulated singularity: weights and degrees of its equation(s), the
// orbit invariants of its Seifert fibration, and the frame shapes of its
// reduced characteristic polynomial pi_A and monodromy pi_M (when tabulated).
struct CatalogEntry {
  std::string name;   // "A1".."A8", "D4".."D8", "E6".."E8", "E~6".."E~8", "D~5"
  std::string group;  // binary polyhedral group: "C_<k>", "D_<k>", "T", "O", "I"
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> alphas;
  std::int64_t genus = 0;
  std::optional<std::int64_t> b;
  std::int64_t exponent = 0;  // R = sum of degrees - sum of weights
  std::string pi_a;
  std::optional<std::string> pi_m;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// The A_l entry.  Odd l = 2n-1 has weights (1, n, n) of degree 2n; even
// l = 2n has weights (2, 2n+1, 2n+1) of degree 4n+2.
CatalogEntry kleinian_a(std::int64_t l);
// The D_l entry, l >= 4: weights (2, l-2, l-1) of degree 2(l-1).
CatalogEntry kleinian_d(std::int64_t l);

// A1..A<max_a>, D4..D<max_d>, then E6, E7, E8.
std::vector<CatalogEntry> kleinian_entries(std::int64_t max_a, std::int64_t max_d);

// The four simply elliptic entries E~8, E~7, E~6, D~5 (genus one, R = 0).
std::vector<CatalogEntry> elliptic_entries();

// kleinian_entries(8, 8) followed by elliptic_entries().
std::vector<CatalogEntry> default_entries();

// Find an entry of default_entries() by name.  Accepts the ASCII names and
// their Unicode spellings (precomposed or combining tilde).  Throws
// UnknownEntry when nothing matches.
CatalogEntry lookup(const std::string& name);

// Parse a JSON catalog file with the same schema as data/catalog.json.
// Throws ParseError on malformed input.
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

// Result of recomputing one entry from its weight system.
struct EntryCheck {
  std::string name;
  bool exponent_matches = false;
  bool alphas_match = false;
  bool genus_matches = false;
  bool b_matches = false;    // via completion (R != 0) or 1 + (b-2)t + t^2 (R = 0)
  bool phi_matches = false;  // recomputed phi_A against pi_A
  bool duality_ok = false;   // dual of phi-tilde against the monodromy
  bool pi_m_matches = false; // tabulated pi_M against that dual; true if absent
  bool ok = false;

  friend bool operator==(const EntryCheck&, const EntryCheck&) = default;
};

struct CatalogReport {
  std::vector<EntryCheck> checks;
  bool ok = false;
};

// Recompute every entry from scratch and compare with the tabulated data.
CatalogReport validate_all(const std::vector<CatalogEntry>& entries);

}  // namespace singmon
