#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singmon/frame_shape.hpp"
#include "singmon/int_poly.hpp"

namespace singmon {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// A simply laced irreducible root system together with its affine extension.
// Vertex 0 of the affine diagram is the added vertex (the trivial
// representation under the McKay correspondence).  For A_l with l odd the
// affine cycle is numbered so that vertices 0..(l-1)/2 are pairwise
// non-adjacent, matching the numbering used for the affine Coxeter element.
struct RootSystem {
  std::string name;
  char family = 0;       // 'A', 'D' or 'E'
  std::int64_t rank = 0;
  IntMatrix cartan;         // l x l
  IntMatrix affine_cartan;  // (l+1) x (l+1)
  IntMatrix mckay;          // B = 2I - affine_cartan
};

// Labels "A1".."A<l>", "D4".., "E6", "E7", "E8"; throws UnsupportedLabel.
RootSystem root_system(const std::string& label);
RootSystem root_system(char family, std::int64_t rank);

// det(tI - s_1 ... s_n) for the reflections s_i of an arbitrary Cartan-like
// matrix, multiplied in the given order (0..n-1 when order is empty).
IntPoly reflection_product_charpoly(const IntMatrix& cartan,
                                    const std::vector<std::size_t>& order = {});

// Characteristic polynomial of the Coxeter element as a shape.  The result
// does not depend on the order of the reflections.
FrameShape coxeter_charpoly(const RootSystem& rs);

// (1+t^2)I - tB and its first-column variant, and their determinants.
IntPoly recursion_determinant(const RootSystem& rs);    // det M(t)
IntPoly recursion_determinant_0(const RootSystem& rs);  // det M_0(t)

// Characteristic polynomial of the affine Coxeter element, recovered from
// det M(t) = det(s I - c_a) with s = t^2.  Throws OddPowerPresent when
// det M(t) has an odd power (the A_{2n} cycle), NotCyclotomicProduct when
// the even part does not factor.
FrameShape affine_coxeter_charpoly(const RootSystem& rs);

// Two-coloring of the affine diagram with vertex 0 in the first class, or
// nullopt when the diagram is not bipartite (A_l with l even).  Vertices are
// listed first class first, each class in increasing index order; this is
// the reflection order whose product is the bipartite affine Coxeter element.
std::optional<std::vector<std::size_t>> bipartite_order(const RootSystem& rs);

// Multiplicities v_m of the irreducible components of the m-th symmetric
// power of the defining representation, m = 0..order, from the recursion
// v_{m+1} = B v_m - v_{m-1} with v_0 = e_0.
std::vector<std::vector<std::int64_t>> rep_multiplicities(const RootSystem& rs,
                                                          std::size_t order);

// Dimensions of the irreducible representations: the minimal positive
// integral vector with B dims = 2 dims and dims_0 = 1.
std::vector<std::int64_t> kac_dims(const RootSystem& rs);

struct McKayReport {
  std::int64_t nu = 0;  // -2/R of the matching Kleinian singularity
  bool series_cramer_matches = false;     // det M_0/det M = recursion component 0
  bool series_poincare_matches = false;   // component 0 = p_A(t^nu)
  bool coxeter_is_phi = false;            // R = -1 only
  bool affine_is_psi = false;             // R = -1 only
  bool quotient_is_poincare = false;      // R = -1 only
  bool dual_differs = false;              // R = -2 only: dual(phi_A) != phi_A
  bool ok = false;
};

// Cross-checks the representation series and characteristic polynomials of
// the root system against the Kleinian singularity with the given weights.
McKayReport mckay_verify(const RootSystem& rs, std::int64_t q1, std::int64_t q2,
                         std::int64_t q3, std::int64_t d, std::size_t order);

}  // namespace singmon
