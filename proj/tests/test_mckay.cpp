#include <doctest.h>

#include <singmon/errors.hpp>
#include <singmon/mckay.hpp>
#include <singmon/seifert.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace singmon;

TEST_CASE("root system construction") {
  const RootSystem a1 = root_system("A1");
  CHECK(a1.name == "A1");
  CHECK(a1.family == 'A');
  CHECK(a1.rank == 1);
  CHECK(a1.cartan == IntMatrix{{2}});
  CHECK(a1.affine_cartan == IntMatrix{{2, -2}, {-2, 2}});
  CHECK(a1.mckay == IntMatrix{{0, 2}, {2, 0}});

  const RootSystem a2 = root_system("A2");
  CHECK(a2.affine_cartan == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

  const RootSystem d4 = root_system("D4");
  // The affine diagram is the star: vertex 2 carries all four leaves.
  for (std::size_t leaf : {0u, 1u, 3u, 4u}) {
    CHECK(d4.affine_cartan[2][leaf] == -1);
    CHECK(d4.affine_cartan[leaf][2] == -1);
  }
  CHECK(d4.affine_cartan[0][1] == 0);

  const RootSystem e8 = root_system("E8");
  CHECK(e8.rank == 8);
  CHECK(e8.cartan.size() == 8);
  CHECK(e8.affine_cartan.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(e8.affine_cartan[i][i] == 2);
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(e8.affine_cartan[i][j] == e8.affine_cartan[j][i]);
      CHECK(e8.mckay[i][j] == (i == j ? 0 : -e8.affine_cartan[i][j]));
    }
  }

  CHECK(root_system('A', 3).cartan == root_system("A3").cartan);
  CHECK(root_system('A', 3).affine_cartan == root_system("A3").affine_cartan);

  for (const char* bad : {"B3", "A0", "E9", "E5", "D3", "X1", "A", "", "A1x", "A1001"})
    CHECK_THROWS_AS(root_system(bad), UnsupportedLabel);
}

TEST_CASE("reflection product characteristic polynomial") {
  CHECK(reflection_product_charpoly({{2}}) == IntPoly{1, 1});

  // The Coxeter element's class does not depend on the reflection order.
  const RootSystem e6 = root_system("E6");
  const IntPoly base = reflection_product_charpoly(e6.cartan);
  std::vector<std::size_t> order(6);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  CHECK(reflection_product_charpoly(e6.cartan, order) == base);
  const std::vector<std::size_t> shuffled{3, 0, 5, 1, 4, 2};
  CHECK(reflection_product_charpoly(e6.cartan, shuffled) == base);
}

TEST_CASE("coxeter element characteristic polynomials") {
  CHECK(coxeter_charpoly(root_system("E8")) ==
        parse_frame_shape("2*3*5*30/1*6*10*15"));
  CHECK(coxeter_charpoly(root_system("E7")) == parse_frame_shape("2*3*18/1*6*9"));
  CHECK(coxeter_charpoly(root_system("E6")) == parse_frame_shape("2*3*12/1*4*6"));
  CHECK(coxeter_charpoly(root_system("A1")) == parse_frame_shape("2/1"));
  // A2 differs from the Kleinian phi_A = 6/2; the Coxeter polynomial is t^2+t+1.
  CHECK(coxeter_charpoly(root_system("A2")) == parse_frame_shape("3/1"));

  for (const char* label : {"A3", "D4", "D6", "E6"}) {
    const RootSystem rs = root_system(label);
    const FrameShape shape = coxeter_charpoly(rs);
    CHECK(shape.degree() == rs.rank);
  }
}

TEST_CASE("affine recursion determinants") {
  const RootSystem a1 = root_system("A1");
  CHECK(recursion_determinant(a1) == IntPoly{1, 0, -2, 0, 1});
  CHECK(recursion_determinant_0(a1) == IntPoly{1, 0, 1});

  // det M_0/det M = (1+t^2)/(1-t^2)^2 = 1 + 3t^2 + 5t^4 + ...
  const PowerSeries p =
      PowerSeries::divide(recursion_determinant_0(a1), recursion_determinant(a1), 6);
  const std::int64_t expect[] = {1, 0, 3, 0, 5, 0, 7};
  for (std::size_t k = 0; k <= 6; ++k) CHECK(p.at(k) == expect[k]);
}

TEST_CASE("affine coxeter characteristic polynomials") {
  CHECK(affine_coxeter_charpoly(root_system("A1")) == parse_frame_shape("1^2"));
  CHECK(affine_coxeter_charpoly(root_system("A3")) == parse_frame_shape("2^2"));
  CHECK(affine_coxeter_charpoly(root_system("D4")) == parse_frame_shape("2^3/1"));
  CHECK(affine_coxeter_charpoly(root_system("D6")) == parse_frame_shape("2^2*4/1"));
  CHECK(affine_coxeter_charpoly(root_system("E6")) == parse_frame_shape("2*3^2/1"));
  CHECK(affine_coxeter_charpoly(root_system("E7")) == parse_frame_shape("2*3*4/1"));
  CHECK(affine_coxeter_charpoly(root_system("E8")) == parse_frame_shape("2*3*5/1"));

  CHECK_THROWS_AS(affine_coxeter_charpoly(root_system("A2")), OddPowerPresent);
  CHECK_THROWS_AS(affine_coxeter_charpoly(root_system("A4")), OddPowerPresent);
}

TEST_CASE("odd cycles admit no two-coloring") {
  const auto a3 = bipartite_order(root_system("A3"));
  REQUIRE(a3.has_value());
  CHECK(*a3 == std::vector<std::size_t>{0, 1, 2, 3});

  const auto a1 = bipartite_order(root_system("A1"));
  REQUIRE(a1.has_value());
  CHECK(*a1 == std::vector<std::size_t>{0, 1});

  const auto d4 = bipartite_order(root_system("D4"));
  REQUIRE(d4.has_value());
  CHECK(*d4 == std::vector<std::size_t>{0, 1, 3, 4, 2});

  CHECK(!bipartite_order(root_system("A2")).has_value());
  CHECK(!bipartite_order(root_system("A4")).has_value());
}

TEST_CASE("bipartite reflection order gives the affine polynomial") {
  const RootSystem a3 = root_system("A3");
  const IntPoly direct =
      reflection_product_charpoly(a3.affine_cartan, *bipartite_order(a3));
  CHECK(direct == IntPoly{1, 0, -2, 0, 1});
}

TEST_CASE("representation recursion") {
  const auto a1 = rep_multiplicities(root_system("A1"), 6);
  const std::int64_t comp0[] = {1, 0, 3, 0, 5, 0, 7};
  REQUIRE(a1.size() == 7);
  for (std::size_t m = 0; m <= 6; ++m) CHECK(a1[m][0] == comp0[m]);
  CHECK(a1[1] == std::vector<std::int64_t>{0, 2});

  const auto a2 = rep_multiplicities(root_system("A2"), 4);
  const std::int64_t a2comp0[] = {1, 0, 1, 2, 1};
  for (std::size_t m = 0; m <= 4; ++m) CHECK(a2[m][0] == a2comp0[m]);
  // v_m sums to the dimension m+1 of Sym^m for the cyclic group.
  for (std::size_t m = 0; m <= 4; ++m)
    CHECK(std::accumulate(a2[m].begin(), a2[m].end(), std::int64_t(0)) ==
          static_cast<std::int64_t>(m) + 1);
}

TEST_CASE("kac dimension vectors") {
  CHECK(kac_dims(root_system("E8")) ==
        std::vector<std::int64_t>{1, 2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(kac_dims(root_system("E7")) ==
        std::vector<std::int64_t>{1, 2, 2, 3, 4, 3, 2, 1});
  CHECK(kac_dims(root_system("E6")) == std::vector<std::int64_t>{1, 1, 2, 2, 3, 2, 1});
  CHECK(kac_dims(root_system("D4")) == std::vector<std::int64_t>{1, 1, 2, 1, 1});
  CHECK(kac_dims(root_system("A5")) == std::vector<std::int64_t>(6, 1));

  // Sum of squares is the order of the binary polyhedral group.
  const auto group_order = [](const RootSystem& rs) {
    std::int64_t n = 0;
    for (std::int64_t dim : kac_dims(rs)) n += dim * dim;
    return n;
  };
  for (std::int64_t l = 1; l <= 8; ++l)
    CHECK(group_order(root_system('A', l)) == l + 1);
  for (std::int64_t l = 4; l <= 8; ++l)
    CHECK(group_order(root_system('D', l)) == 4 * (l - 2));
  CHECK(group_order(root_system("E6")) == 24);
  CHECK(group_order(root_system("E7")) == 48);
  CHECK(group_order(root_system("E8")) == 120);
}

TEST_CASE("mckay verification reports") {
  const McKayReport e8 = mckay_verify(root_system("E8"), 6, 10, 15, 30, 24);
  CHECK(e8.ok);
  CHECK(e8.nu == 2);
  CHECK(e8.series_cramer_matches);
  CHECK(e8.series_poincare_matches);
  CHECK(e8.coxeter_is_phi);
  CHECK(e8.affine_is_psi);
  CHECK(e8.quotient_is_poincare);
  CHECK(!e8.dual_differs);

  const McKayReport a1 = mckay_verify(root_system("A1"), 1, 1, 1, 2, 24);
  CHECK(a1.ok);
  CHECK(a1.nu == 2);

  const McKayReport a2 = mckay_verify(root_system("A2"), 2, 3, 3, 6, 24);
  CHECK(a2.ok);
  CHECK(a2.nu == 1);
  CHECK(a2.series_cramer_matches);
  CHECK(a2.series_poincare_matches);
  CHECK(a2.dual_differs);
  CHECK(!a2.coxeter_is_phi);

  CHECK_THROWS_AS(mckay_verify(root_system("E8"), 1, 1, 1, 3, 8), InvalidGeometry);
}
