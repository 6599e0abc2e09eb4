#include "eqalg/poly.hpp"

#include <stdexcept>

namespace eqalg {

static void simplex_rec(int n, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= d; ++v) {
    cur.push_back(v);
    simplex_rec(n, d - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> simplex_points(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  simplex_rec(n, d, cur, out);
  return out;
}

std::vector<std::vector<int>> product_grid(const std::vector<std::pair<int, int>>& blocks) {
  std::vector<std::vector<int>> out = {{}};
  for (auto& [n, d] : blocks) {
    std::vector<std::vector<int>> part = simplex_points(n, d);
    std::vector<std::vector<int>> next;
    next.reserve(out.size() * part.size());
    for (const auto& pre : out)
      for (const auto& ext : part) {
        std::vector<int> v = pre;
        v.insert(v.end(), ext.begin(), ext.end());
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

Vec PolyMap::eval(const std::vector<Int>& x) const {
  if ((int)x.size() != nin) throw std::invalid_argument("PolyMap::eval: wrong arity");
  Vec out = zero_vec(nout);
  for (const auto& [a, c] : coeff) {
    Int term = 1;
    for (int i = 0; i < nin && term != 0; ++i)
      if (a[i] > 0) term *= binomial(x[i], a[i]);
    if (term == 0) continue;
    for (int j = 0; j < nout; ++j) out[j] += c[j] * term;
  }
  return out;
}

Vec PolyMap::eval_ints(const std::vector<int>& x) const {
  std::vector<Int> xi(x.begin(), x.end());
  return eval(xi);
}

int PolyMap::degree() const {
  int d = 0;
  for (const auto& [a, c] : coeff) {
    int s = 0;
    for (int v : a) s += v;
    d = std::max(d, s);
  }
  return d;
}

PolyMap interpolate(int nin, int nout, int deg,
                    const std::function<Vec(const std::vector<Int>&)>& f) {
  std::vector<std::vector<int>> pts = simplex_points(nin, deg);
  std::map<std::vector<int>, Vec> values;
  for (const auto& p : pts) {
    std::vector<Int> x(p.begin(), p.end());
    Vec v = f(x);
    if ((int)v.size() != nout) throw std::invalid_argument("interpolate: evaluator arity mismatch");
    values[p] = std::move(v);
  }
  PolyMap out;
  out.nin = nin;
  out.nout = nout;
  for (const auto& a : pts) {
    // c_a = sum_{b <= a} (-1)^{|a|-|b|} prod_i C(a_i, b_i) * f(b)
    Vec c = zero_vec(nout);
    std::vector<int> b(nin, 0);
    while (true) {
      Int w = 1;
      int drop = 0;
      for (int i = 0; i < nin; ++i) {
        w *= binomial(Int(a[i]), b[i]);
        drop += a[i] - b[i];
      }
      if (drop % 2) w = -w;
      const Vec& fb = values.at(b);
      for (int j = 0; j < nout; ++j) c[j] += w * fb[j];
      int i = nin - 1;
      while (i >= 0) {
        if (++b[i] <= a[i]) break;
        b[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    if (!vec_is_zero(c)) out.coeff[a] = std::move(c);
  }
  return out;
}

bool polymap_equal(const PolyMap& a, const PolyMap& b) {
  return a.nin == b.nin && a.nout == b.nout && a.coeff == b.coeff;
}

PolyMap polymap_add(const PolyMap& a, const PolyMap& b) {
  if (a.nin != b.nin || a.nout != b.nout) throw std::invalid_argument("polymap_add: arity mismatch");
  PolyMap out = a;
  for (const auto& [k, v] : b.coeff) {
    auto it = out.coeff.find(k);
    if (it == out.coeff.end()) {
      out.coeff[k] = v;
    } else {
      it->second = vec_add(it->second, v);
      if (vec_is_zero(it->second)) out.coeff.erase(it);
    }
  }
  return out;
}

PolyMap polymap_neg(const PolyMap& a) {
  PolyMap out = a;
  for (auto& [k, v] : out.coeff) v = vec_scale(Int(-1), v);
  return out;
}

}  // namespace eqalg
