#include "singmon/mckay.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "singmon/cyclotomic.hpp"
#include "singmon/errors.hpp"
#include "singmon/seifert.hpp"

namespace singmon {

namespace {

IntMatrix cartan_from_edges(std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix c(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& [a, b] : edges) {
    c[a][b] = -1;
    c[b][a] = -1;
  }
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> finite_edges(char family,
                                                              std::int64_t rank) {
  const auto l = static_cast<std::size_t>(rank);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      for (std::size_t i = 0; i + 3 < l; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(l - 2, l - 3);
      edges.emplace_back(l - 1, l - 3);
      break;
    default:  // 'E', Bourbaki numbering shifted to 0-based
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (std::size_t i = 4; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> affine_edges(char family,
                                                               std::int64_t rank) {
  const auto l = static_cast<std::size_t>(rank);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (family) {
    case 'A': {
      // Cycle on l+1 vertices.  For l odd the cycle positions are assigned
      // alternately to the index blocks 0..n-1 and n..l, which makes each
      // block an independent set as required for the affine Coxeter element.
      const std::size_t count = l + 1;
      std::vector<std::size_t> pos(count);
      if (l % 2 == 1) {
        const std::size_t n = count / 2;
        for (std::size_t i = 0; i < count; ++i)
          pos[i] = i < n ? 2 * i : 2 * (i - n) + 1;
      } else {
        std::iota(pos.begin(), pos.end(), 0);
      }
      std::vector<std::size_t> at(count);
      for (std::size_t i = 0; i < count; ++i) at[pos[i]] = i;
      for (std::size_t p = 0; p < count; ++p)
        edges.emplace_back(at[p], at[(p + 1) % count]);
      break;
    }
    case 'D':
      edges = {{0, 2}, {1, 2}};
      for (std::size_t i = 2; i + 2 < l; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(l - 1, l - 2);
      edges.emplace_back(l, l - 2);
      break;
    default:
      // Shift the finite Bourbaki edges by one and attach vertex 0 to the
      // end of the longest tail: alpha_2 for E6, alpha_1 for E7, alpha_8 for E8.
      for (auto [a, b] : finite_edges('E', rank)) edges.emplace_back(a + 1, b + 1);
      edges.emplace_back(0, rank == 6 ? 2 : rank == 7 ? 1 : 8);
      break;
  }
  return edges;
}

}  // namespace

RootSystem root_system(char family, std::int64_t rank) {
  const bool supported = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
                         (family == 'E' && rank >= 6 && rank <= 8);
  if (!supported) {
    std::ostringstream msg;
    msg << "root_system: no simply laced system " << family << rank;
    throw UnsupportedLabel(msg.str());
  }
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.name = family + std::to_string(rank);
  rs.cartan = cartan_from_edges(static_cast<std::size_t>(rank), finite_edges(family, rank));
  if (family == 'A' && rank == 1) {
    rs.affine_cartan = {{2, -2}, {-2, 2}};  // double bond of the A1 cycle
  } else {
    rs.affine_cartan =
        cartan_from_edges(static_cast<std::size_t>(rank) + 1, affine_edges(family, rank));
  }
  rs.mckay = rs.affine_cartan;
  for (auto& row : rs.mckay)
    for (auto& x : row) x = -x;
  for (std::size_t i = 0; i < rs.mckay.size(); ++i) rs.mckay[i][i] += 2;
  return rs;
}

RootSystem root_system(const std::string& label) {
  if (label.size() < 2) throw UnsupportedLabel("root_system: bad label \"" + label + "\"");
  const char family = label[0];
  std::int64_t rank = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9')
      throw UnsupportedLabel("root_system: bad label \"" + label + "\"");
    rank = rank * 10 + (label[i] - '0');
    if (rank > 1000) throw UnsupportedLabel("root_system: rank too large in \"" + label + "\"");
  }
  return root_system(family, rank);
}

IntPoly reflection_product_charpoly(const IntMatrix& cartan,
                                    const std::vector<std::size_t>& order) {
  const std::size_t n = cartan.size();
  std::vector<std::size_t> seq = order;
  if (seq.empty()) {
    seq.resize(n);
    std::iota(seq.begin(), seq.end(), 0);
  }
  // Accumulate the product of the reflections s_i, where s_i acts as the
  // identity except on row i: (s_i)_{ij} = delta_{ij} - C_{ji}.
  std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  for (std::size_t step : seq) {
    if (step >= n) throw std::invalid_argument("reflection order index out of range");
    std::vector<std::vector<Integer>> s(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) s[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) s[step][j] -= cartan[j][step];
    std::vector<std::vector<Integer>> next(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (c[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += c[i][k] * s[k][j];
      }
    c = std::move(next);
  }
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = IntPoly::monomial(0, -c[i][j]);
      if (i == j) m[i][j] += IntPoly::monomial(1);
    }
  return determinant(std::move(m));
}

FrameShape coxeter_charpoly(const RootSystem& rs) {
  return factor_cyclotomic(reflection_product_charpoly(rs.cartan));
}

namespace {

std::vector<std::vector<IntPoly>> recursion_matrix(const RootSystem& rs) {
  const std::size_t n = rs.mckay.size();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = IntPoly::monomial(1, -rs.mckay[i][j]);
      if (i == j) m[i][j] += IntPoly{1, 0, 1};
    }
  return m;
}

}  // namespace

IntPoly recursion_determinant(const RootSystem& rs) {
  return determinant(recursion_matrix(rs));
}

IntPoly recursion_determinant_0(const RootSystem& rs) {
  auto m = recursion_matrix(rs);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][0] = IntPoly{i == 0 ? 1 : 0};
  return determinant(std::move(m));
}

FrameShape affine_coxeter_charpoly(const RootSystem& rs) {
  const IntPoly det = recursion_determinant(rs);
  std::vector<Integer> even((det.coeffs().size() + 1) / 2);
  for (std::size_t k = 0; k < det.coeffs().size(); ++k) {
    if (k % 2 == 1 && det.coeffs()[k] != 0) {
      std::ostringstream msg;
      msg << "affine_coxeter_charpoly: " << rs.name << " determinant has odd power t^" << k;
      throw OddPowerPresent(msg.str());
    }
    if (k % 2 == 0) even[k / 2] = det.coeffs()[k];
  }
  return factor_cyclotomic(IntPoly(std::move(even)));
}

std::optional<std::vector<std::size_t>> bipartite_order(const RootSystem& rs) {
  const std::size_t n = rs.affine_cartan.size();
  std::vector<int> color(n, -1);
  std::deque<std::size_t> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || rs.affine_cartan[v][w] == 0) continue;
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::size_t> order;
  for (int c : {0, 1})
    for (std::size_t v = 0; v < n; ++v)
      if (color[v] == c) order.push_back(v);
  return order;
}

std::vector<std::vector<std::int64_t>> rep_multiplicities(const RootSystem& rs,
                                                          std::size_t order) {
  const std::size_t n = rs.mckay.size();
  std::vector<std::vector<std::int64_t>> v;
  v.reserve(order + 1);
  v.push_back(std::vector<std::int64_t>(n));
  v[0][0] = 1;
  for (std::size_t m = 0; m < order; ++m) {
    std::vector<std::int64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += rs.mckay[i][j] * v[m][j];
      if (m > 0) acc -= v[m - 1][i];
      next[i] = acc;
    }
    v.push_back(std::move(next));
  }
  return v;
}

std::vector<std::int64_t> kac_dims(const RootSystem& rs) {
  // Null vector of B - 2I by exact elimination.
  const std::size_t n = rs.mckay.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = Rational(rs.mckay[i][j] - (i == j ? 2 : 0));

  // Heterogeneous rational/int comparisons are avoided on purpose; the sign
  // of the numerator is the reliable zero test for boost::rational.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col].numerator() == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][col];
    for (std::size_t j = col; j < n; ++j) m[row][j] /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].numerator() == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1)
    throw NonIntegralDims("kac_dims: affine matrix does not have corank 1");
  // The single free column gives the null vector.
  std::size_t free_col = n - 1;
  for (std::size_t col = 0, r = 0; col < n; ++col) {
    if (r < pivot_col.size() && pivot_col[r] == col) {
      ++r;
      continue;
    }
    free_col = col;
    break;
  }
  std::vector<Rational> x(n);
  x[free_col] = Rational(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free_col];

  if (x[0].numerator() == 0) throw NonIntegralDims("kac_dims: vertex 0 entry vanishes");
  std::vector<std::int64_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scaled = x[i] / x[0];
    if (!is_integral(scaled) || scaled.numerator() <= 0) {
      std::ostringstream msg;
      msg << "kac_dims: entry " << i << " scales to " << scaled;
      throw NonIntegralDims(msg.str());
    }
    dims[i] = scaled.numerator().convert_to<std::int64_t>();
  }
  return dims;
}

McKayReport mckay_verify(const RootSystem& rs, std::int64_t q1, std::int64_t q2,
                         std::int64_t q3, std::int64_t d, std::size_t order) {
  const PoincareBundle b = bundle(q1, q2, q3, d);
  if (b.exponent != -1 && b.exponent != -2)
    throw InvalidGeometry("mckay_verify: weights are not Kleinian (exponent " +
                          std::to_string(b.exponent) + ")");
  McKayReport report;
  report.nu = -2 / b.exponent;
  const auto nu = static_cast<std::size_t>(report.nu);

  const PowerSeries cramer =
      PowerSeries::divide(recursion_determinant_0(rs), recursion_determinant(rs), order);
  const auto reps = rep_multiplicities(rs, order);
  const PowerSeries poincare = expand_series(b.p, order / nu);
  report.series_cramer_matches = true;
  report.series_poincare_matches = true;
  for (std::size_t k = 0; k <= order; ++k) {
    const Integer comp0 = reps[k][0];
    if (cramer.at(k) != comp0) report.series_cramer_matches = false;
    const Integer expected = k % nu == 0 ? poincare.at(k / nu) : Integer(0);
    if (comp0 != expected) report.series_poincare_matches = false;
  }

  if (b.exponent == -1) {
    report.coxeter_is_phi = coxeter_charpoly(rs) == b.phi;
    report.affine_is_psi = affine_coxeter_charpoly(rs) == b.psi;
    report.quotient_is_poincare = b.phi * b.psi.inverse() == b.p;
    report.ok = report.series_cramer_matches && report.series_poincare_matches &&
                report.coxeter_is_phi && report.affine_is_psi && report.quotient_is_poincare;
  } else {
    report.dual_differs = saito_dual(b.phi, d) != b.phi;
    report.ok = report.series_cramer_matches && report.series_poincare_matches &&
                report.dual_differs;
  }
  return report;
}

}  // namespace singmon
