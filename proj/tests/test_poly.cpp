#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "eqalg/poly.hpp"

using namespace eqalg;

TEST_CASE("binomial coefficients, including negative upper argument") {
  CHECK(binomial(Int(4), 2) == 6);
  CHECK(binomial(Int(0), 0) == 1);
  CHECK(binomial(Int(3), 5) == 0);
  CHECK(binomial(Int(-1), 2) == 1);
  CHECK(binomial(Int(-2), 3) == -4);
  CHECK(binomial(Int(7), 1) == 7);
}

TEST_CASE("simplex grids have the right cardinality") {
  CHECK(simplex_points(1, 3).size() == 4);
  CHECK(simplex_points(2, 2).size() == 6);
  CHECK(simplex_points(3, 2).size() == 10);  // C(5,2)
  CHECK(simplex_points(2, 0).size() == 1);
  for (const auto& p : simplex_points(3, 4)) {
    int s = 0;
    for (int v : p) s += v;
    CHECK(s <= 4);
  }
  CHECK(product_grid({{1, 2}, {1, 2}}).size() == 9);
  CHECK(product_grid({{2, 1}, {1, 3}}).size() == 12);
}

TEST_CASE("interpolation recovers binomial-basis coefficients") {
  // x(x-1)/2 = C(x,2)
  PolyMap p = interpolate(1, 1, 2, [](const std::vector<Int>& x) {
    return Vec{x[0] * (x[0] - 1) / 2};
  });
  REQUIRE(p.coeff.size() == 1);
  CHECK(p.coeff.at({2}) == Vec{1});
  CHECK(p.eval({Int(10)})[0] == 45);
  CHECK(p.eval({Int(-3)})[0] == 6);

  // x*y has the single mixed coefficient
  PolyMap q = interpolate(2, 1, 2, [](const std::vector<Int>& x) { return Vec{x[0] * x[1]}; });
  REQUIRE(q.coeff.size() == 1);
  CHECK(q.coeff.at({1, 1}) == Vec{1});

  // C(x+y,2) = C(x,2) + C(y,2) + xy
  PolyMap r = interpolate(2, 1, 2, [](const std::vector<Int>& x) {
    Int s = x[0] + x[1];
    return Vec{s * (s - 1) / 2};
  });
  CHECK(r.coeff.size() == 3);
  CHECK(r.coeff.at({2, 0}) == Vec{1});
  CHECK(r.coeff.at({0, 2}) == Vec{1});
  CHECK(r.coeff.at({1, 1}) == Vec{1});
  CHECK(r.degree() == 2);

  // vector-valued: (x, x^2) with x^2 = x + 2*C(x,2)
  PolyMap v = interpolate(1, 2, 2, [](const std::vector<Int>& x) {
    return Vec{x[0], x[0] * x[0]};
  });
  CHECK(v.coeff.at({1}) == Vec{1, 1});
  CHECK(v.coeff.at({2}) == Vec{0, 2});
}

TEST_CASE("interpolation agrees with the function everywhere, even off the grid") {
  auto f = [](const std::vector<Int>& x) {
    // an integer-valued polynomial with non-integer monomial coefficients
    return Vec{binomial(x[0], 3) * x[1] + binomial(x[1], 2) - 5 * x[0]};
  };
  PolyMap p = interpolate(2, 1, 4, f);
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    std::vector<Int> x = {Int((int)(rng() % 41) - 20), Int((int)(rng() % 41) - 20)};
    CHECK(p.eval(x) == f(x));
  }
}

TEST_CASE("zero detection and arithmetic") {
  PolyMap z = interpolate(2, 1, 3, [](const std::vector<Int>&) { return Vec{0}; });
  CHECK(z.is_zero());

  PolyMap a = interpolate(1, 1, 2, [](const std::vector<Int>& x) { return Vec{x[0] * x[0]}; });
  PolyMap b = polymap_add(a, polymap_neg(a));
  CHECK(b.is_zero());
  CHECK(polymap_equal(a, a));
  CHECK_FALSE(polymap_equal(a, b));

  PolyMap c = interpolate(1, 1, 1, [](const std::vector<Int>& x) { return Vec{3 * x[0]}; });
  PolyMap s = polymap_add(a, c);
  CHECK(s.eval({Int(4)})[0] == 16 + 12);
}
