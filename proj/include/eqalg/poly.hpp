#pragma once

#include <functional>
#include <map>

#include "eqalg/ints.hpp"

namespace eqalg {

// all multi-indices a in Z^n with a_i >= 0 and sum a_i <= d, in lexicographic order;
// evaluating binomial-basis polynomials of total degree <= d on these points is
// unisolvent (the evaluation matrix is triangular with unit diagonal)
std::vector<std::vector<int>> simplex_points(int n, int d);

// cartesian product of per-block simplices; blocks are (coordinates, degree)
std::vector<std::vector<int>> product_grid(const std::vector<std::pair<int, int>>& blocks);

// integer-valued polynomial map Z^nin -> Z^nout in the binomial basis:
// f(x) = sum_a coeff[a] * prod_i C(x_i, a_i)
struct PolyMap {
  int nin = 0, nout = 0;
  std::map<std::vector<int>, Vec> coeff;

  Vec eval(const std::vector<Int>& x) const;
  Vec eval_ints(const std::vector<int>& x) const;
  bool is_zero() const { return coeff.empty(); }
  int degree() const;
};

// exact interpolation of an integer-valued polynomial of total degree <= deg
// from its values on the simplex grid (iterated finite differences)
PolyMap interpolate(int nin, int nout, int deg,
                    const std::function<Vec(const std::vector<Int>&)>& f);

bool polymap_equal(const PolyMap& a, const PolyMap& b);
PolyMap polymap_add(const PolyMap& a, const PolyMap& b);
PolyMap polymap_neg(const PolyMap& a);

}  // namespace eqalg
