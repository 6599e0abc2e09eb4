#include "eqalg/tambara.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mackey_internal.hpp"
#include "tambara_internal.hpp"

namespace eqalg {

using tambara_detail::proper_concrete_pairs;

// --- polynomial maps between presented groups --------------------------------

static Vec int_point(const std::vector<int>& alpha) {
  Vec x(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) x[i] = alpha[i];
  return x;
}

PolyHom poly_from_function(const PresentedAb& src, const PresentedAb& dst, int degree,
                           const std::function<Vec(const Vec&)>& f, bool shell_check) {
  if (degree < 0) throw std::invalid_argument("poly_from_function: negative degree");
  PolyHom p;
  p.src = src;
  p.dst = dst;
  p.degree = degree;
  p.poly = interpolate(src.ngens(), dst.ngens(), degree, f);
  if (shell_check && src.ngens() > 0) {
    for (const auto& alpha : simplex_points(src.ngens(), degree + 1)) {
      int total = 0;
      for (int v : alpha) total += v;
      if (total != degree + 1) continue;
      Vec xpt = int_point(alpha);
      if (!dst.equal(f(xpt), p.apply(xpt)))
        throw std::logic_error("poly_from_function: not polynomial of the stated degree");
    }
  }
  return p;
}

bool poly_equal(const PolyHom& p, const PolyHom& q) {
  if (p.src.ngens() != q.src.ngens() || p.dst.ngens() != q.dst.ngens()) return false;
  int d = std::max(p.degree, q.degree);
  for (const auto& alpha : simplex_points(p.src.ngens(), d)) {
    Vec x = int_point(alpha);
    if (!p.dst.equal(p.apply(x), q.apply(x))) return false;
  }
  return true;
}

PolyHom poly_linear(const AbHom& h) {
  PolyHom p;
  p.src = h.src;
  p.dst = h.dst;
  p.degree = 1;
  p.poly.nin = h.src.ngens();
  p.poly.nout = h.dst.ngens();
  for (int i = 0; i < h.src.ngens(); ++i) {
    Vec c = h.mat.col(i);
    if (vec_is_zero(c)) continue;
    std::vector<int> alpha(h.src.ngens(), 0);
    alpha[i] = 1;
    p.poly.coeff[alpha] = c;
  }
  return p;
}

// --- TambaraFunctor basics ---------------------------------------------------

const PolyHom& TambaraFunctor::norm_map(int H, int K) const {
  auto it = norm.find({H, K});
  if (it == norm.end())
    throw std::invalid_argument("TambaraFunctor::norm_map: no norm stored at (" +
                                mackey_sub_label(group(), H) + "," + mackey_sub_label(group(), K) +
                                ")");
  return it->second;
}

Vec TambaraFunctor::apply_norm(int H, int K, const Vec& x) const {
  if (H == K) return x;
  return norm_map(H, K).apply(x);
}

void attach_norms(TambaraFunctor& T, const std::function<Vec(int, int, const Vec&)>& stored_norm,
                  bool shell_check) {
  const GroupPtr& G = T.group();
  T.norm.clear();
  for (auto [H, K] : proper_concrete_pairs(G)) {
    int d = G->subgroup_order(K) / G->subgroup_order(H);
    const PresentedAb& src = T.mac().level[G->class_of_subgroup(H)];
    const PresentedAb& dst = T.mac().level[G->class_of_subgroup(K)];
    auto f = [&stored_norm, H = H, K = K](const Vec& x) { return stored_norm(H, K, x); };
    T.norm.emplace(std::pair<int, int>{H, K}, poly_from_function(src, dst, d, f, shell_check));
  }
}

// --- validation ---------------------------------------------------------------

Report validate_tambara(const TambaraFunctor& T) {
  Report rep;
  rep.merge(validate_green(T.R), "green");
  const GroupPtr& G = T.group();
  const MackeyFunctor& M = T.mac();
  auto pairs = proper_concrete_pairs(G);
  auto cls = [&](int s) { return G->class_of_subgroup(s); };
  auto plabel = [&](int H, int K) {
    return "(" + mackey_sub_label(G, H) + "<" + mackey_sub_label(G, K) + ")";
  };
  auto aggregate = [&rep](const std::string& id, const std::string& anchor, bool pass, long count,
                          const std::string& witness) {
    rep.add(id, anchor, pass, pass ? std::to_string(count) + " instances" : witness);
  };

  // shape: exactly one polynomial norm of the right degree per proper pair
  {
    bool pass = true;
    std::string w;
    for (auto [H, K] : pairs) {
      auto it = T.norm.find({H, K});
      if (it == T.norm.end()) {
        pass = false;
        w = "missing norm at " + plabel(H, K);
        break;
      }
      const PolyHom& p = it->second;
      int d = G->subgroup_order(K) / G->subgroup_order(H);
      if (p.src.ngens() != M.level[cls(H)].ngens() || p.dst.ngens() != M.level[cls(K)].ngens() ||
          p.degree != d) {
        pass = false;
        w = "wrong shape or degree at " + plabel(H, K);
        break;
      }
    }
    if (pass && T.norm.size() != pairs.size()) {
      pass = false;
      w = "extra norm entries stored";
    }
    rep.add("tambara.norm_shape", "one degree-[K:H] polynomial norm per proper pair H<K", pass,
            pass ? std::to_string(pairs.size()) + " pairs" : w);
    if (!pass) return rep;  // the remaining audits dereference the tables
  }

  // well-definedness: N(x + relator) = N(x) in the target group
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = T.norm_map(H, K);
      const Mat& rel = p.src.rel();
      int d = p.degree;
      auto grid = simplex_points(p.src.ngens(), d);
      for (int j = 0; j < rel.cols() && pass; ++j) {
        Vec rho = rel.col(j);
        for (const auto& alpha : grid) {
          Vec a = int_point(alpha);
          ++count;
          if (!p.dst.equal(p.apply(vec_add(a, rho)), p.apply(a))) {
            pass = false;
            w = "norm not constant on relator " + std::to_string(j) + " at " + plabel(H, K) +
                " point " + vec_str(a);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("tambara.norm_welldef", "norms descend to the presented levels", pass, count, w);
  }

  // normalization: N(1) = 1
  {
    bool pass = true;
    std::string w;
    for (auto [H, K] : pairs) {
      const PolyHom& p = T.norm_map(H, K);
      if (!p.dst.equal(p.apply(T.R.unit[cls(H)]), T.R.unit[cls(K)])) {
        pass = false;
        w = "N(1) != 1 at " + plabel(H, K);
        break;
      }
    }
    aggregate("tambara.norm_unit", "norms preserve the unit", pass, (long)pairs.size(), w);
  }

  // multiplicativity: N(xy) = N(x)N(y), degree 2d in (x,y)
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = T.norm_map(H, K);
      int r = p.src.ngens(), d = p.degree;
      int cH = cls(H), cK = cls(K);
      // both sides have degree <= d in x for fixed y and vice versa, so the
      // product of two degree-d simplices certifies the identity blockwise
      for (const auto& alpha : product_grid({{r, d}, {r, d}})) {
        Vec x = int_point({alpha.begin(), alpha.begin() + r});
        Vec y = int_point({alpha.begin() + r, alpha.end()});
        ++count;
        Vec lhs = p.apply(T.R.multiply(cH, x, y));
        Vec rhs = T.R.multiply(cK, p.apply(x), p.apply(y));
        if (!p.dst.equal(lhs, rhs)) {
          pass = false;
          w = "N(xy) != N(x)N(y) at " + plabel(H, K) + " x=" + vec_str(x) + " y=" + vec_str(y);
          break;
        }
      }
      if (!pass) break;
    }
    aggregate("tambara.norm_mult", "norms are multiplicative", pass, count, w);
  }

  // transitivity along chains H < L < K
  {
    bool pass = true;
    std::string w;
    long count = 0;
    int ns = (int)G->subgroups().size();
    for (auto [H, K] : pairs) {
      for (int L = 0; L < ns && pass; ++L) {
        if (L == H || L == K) continue;
        if (!G->subgroup_contains(L, H) || !G->subgroup_contains(K, L)) continue;
        const PolyHom& p = T.norm_map(H, K);
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          Vec lhs = T.apply_norm(L, K, T.apply_norm(H, L, x));
          if (!p.dst.equal(lhs, p.apply(x))) {
            pass = false;
            w = "N_L^K N_H^L != N_H^K at " + plabel(H, L) + plabel(L, K) + " x=" + vec_str(x);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("tambara.norm_trans", "norms compose along chains of subgroups", pass, count, w);
  }

  // conjugation equivariance: c_g N_H^K = N_{gHg^-1}^{gKg^-1} c_g
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = T.norm_map(H, K);
      for (int g = 0; g < G->size() && pass; ++g) {
        int H2 = G->conjugate_subgroup(g, H), K2 = G->conjugate_subgroup(g, K);
        const AbHom& cgH = M.conj_map(g, H);
        const AbHom& cgK = M.conj_map(g, K);
        const PresentedAb& tgt = M.level[cls(K2)];
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          Vec lhs = cgK.apply(p.apply(x));
          Vec rhs = T.apply_norm(H2, K2, cgH.apply(x));
          if (!tgt.equal(lhs, rhs)) {
            pass = false;
            w = "conjugation fails at " + plabel(H, K) + " g=" + G->name(g) + " x=" + vec_str(x);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("tambara.norm_conj", "norms commute with conjugation", pass, count, w);
  }

  // restriction: res^K_L N_H^K = prod_{LgH} N^L_{L cap gHg^-1} c_g res^H_{H cap g^-1Lg}
  {
    bool pass = true;
    std::string w;
    long count = 0;
    int ns = (int)G->subgroups().size();
    for (auto [H, K] : pairs) {
      const PolyHom& p = T.norm_map(H, K);
      for (int L = 0; L < ns && pass; ++L) {
        if (L == K || !G->subgroup_contains(K, L)) continue;
        int cL = cls(L);
        const PresentedAb& tgt = M.level[cL];
        const AbHom& resKL = M.res_map(K, L);
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          Vec lhs = resKL.apply(p.apply(x));
          Vec rhs = T.R.unit[cL];
          for (int g : G->double_coset_reps(K, L, H)) {
            int A = intersect_subgroups(G, L, G->conjugate_subgroup(g, H));
            int B = G->conjugate_subgroup(G->inv(g), A);
            Vec arg = M.conj_map(g, B).apply(M.res_map(H, B).apply(x));
            rhs = T.R.multiply(cL, rhs, T.apply_norm(A, L, arg));
          }
          if (!tgt.equal(lhs, rhs)) {
            pass = false;
            w = "double coset formula fails at " + plabel(H, K) + " L=" + mackey_sub_label(G, L) +
                " x=" + vec_str(x);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("tambara.norm_res", "restriction of a norm expands over double cosets", pass, count,
              w);
  }

  return rep;
}

// --- Burnside Tambara functor --------------------------------------------------

// #{ k in K/Q : P <= k Q k^-1 }, the mark of the coset space K/Q at P
static Int coset_fixed(const GroupPtr& G, int K, int Q, int P) {
  Int c = 0;
  for (int k : G->coset_reps(K, Q))
    if (G->subgroup_contains(G->conjugate_subgroup(k, Q), P)) ++c;
  return c;
}

TambaraFunctor burnside_tambara(const GroupPtr& G) {
  BurnsideGreen bg = burnside_green(G);
  TambaraFunctor T;
  T.R = bg.R;
  const auto& basis = bg.basis;

  auto stored_norm = [&](int H, int K, const Vec& x) -> Vec {
    int cH = G->class_of_subgroup(H), cK = G->class_of_subgroup(K);
    int gH = G->conjugator_to_rep(H), gK = G->conjugator_to_rep(K);
    int repK = G->classes()[cK].rep;
    // decode: stored x means the concrete H-set  sum_i x_i [H / Q_i]
    std::vector<int> Q(basis[cH].size());
    for (size_t i = 0; i < Q.size(); ++i) Q[i] = G->conjugate_subgroup(G->inv(gH), basis[cH][i]);
    auto mark = [&](int P) {  // # of P-fixed points of the H-set x
      Int m = 0;
      for (size_t i = 0; i < Q.size(); ++i)
        if (x[i] != 0) m += x[i] * coset_fixed(G, H, Q[i], P);
      return m;
    };
    // K-conjugacy classes of subgroups of K, canonical rep = smallest index
    std::vector<int> canon;
    {
      std::vector<int> seen;
      for (int L = 0; L < (int)G->subgroups().size(); ++L) {
        if (!G->subgroup_contains(K, L)) continue;
        int c = L;
        for (int k : G->subgroup(K)) c = std::min(c, G->conjugate_subgroup(k, L));
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
      }
      canon = seen;
    }
    std::sort(canon.begin(), canon.end(),
              [&](int a, int b) { return G->subgroup_order(a) > G->subgroup_order(b); });
    // fixed points of Map_H(K, x) at each class: product of marks over double cosets
    // solved against the table of marks of K in descending order
    std::vector<Int> mult(canon.size());
    for (size_t ci = 0; ci < canon.size(); ++ci) {
      int L = canon[ci];
      Int nu = 1;
      for (int g : G->double_coset_reps(K, H, L)) {
        nu *= mark(intersect_subgroups(G, H, G->conjugate_subgroup(g, L)));
        if (nu == 0) break;
      }
      for (size_t dj = 0; dj < ci; ++dj) nu -= mult[dj] * coset_fixed(G, K, canon[dj], L);
      Int w = coset_fixed(G, K, L, L);  // Weyl group order, > 0
      if (nu % w != 0) throw std::logic_error("burnside_tambara: marks solve not integral");
      mult[ci] = nu / w;
    }
    // encode as stored coordinates at class cK
    Vec out = zero_vec(basis[cK].size());
    for (size_t ci = 0; ci < canon.size(); ++ci) {
      if (mult[ci] == 0) continue;
      int P = G->conjugate_subgroup(gK, canon[ci]);  // subgroup of rep_cK
      int slot = -1;
      for (size_t j = 0; j < basis[cK].size() && slot < 0; ++j)
        for (int t : G->subgroup(repK))
          if (G->conjugate_subgroup(t, P) == basis[cK][j]) {
            slot = (int)j;
            break;
          }
      if (slot < 0) throw std::logic_error("burnside_tambara: basis slot not found");
      out[slot] += mult[ci];
    }
    return out;
  };

  attach_norms(T, stored_norm, true);
  return T;
}

// --- rings and fixed-point Tambara functors ------------------------------------

std::string check_ring(const RingData& A) {
  int n = A.A.ngens();
  if (A.mul.a.ngens() != n || A.mul.b.ngens() != n || A.mul.c.ngens() != n)
    return "multiplication table shape mismatch";
  if ((int)A.unit.size() != n) return "unit has wrong size";
  if (!A.mul.well_defined()) return "multiplication not well defined on relations";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!A.A.equal(A.mul.table[i][j], A.mul.table[j][i])) return "multiplication not commutative";
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i);
    if (!A.A.equal(A.mul.apply(A.unit, ei), ei)) return "unit law fails";
    for (int j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j);
      for (int k = 0; k < n; ++k) {
        Vec ek = unit_vec(n, k);
        if (!A.A.equal(A.mul.apply(A.mul.apply(ei, ej), ek), A.mul.apply(ei, A.mul.apply(ej, ek))))
          return "multiplication not associative";
      }
    }
  }
  return "";
}

RingData ring_cyclic(const Int& n) {
  RingData A;
  A.A = PresentedAb::cyclic(n);
  A.mul.a = A.mul.b = A.mul.c = A.A;
  A.mul.table = {{Vec{1}}};
  A.unit = Vec{1};
  return A;
}

RingData ring_pointwise(int k, const Int& n) {
  RingData A;
  Mat rel(k, n == 0 ? 0 : k);
  if (n != 0)
    for (int i = 0; i < k; ++i) rel(i, i) = n;
  A.A = PresentedAb(k, rel);
  A.mul.a = A.mul.b = A.mul.c = A.A;
  A.mul.table.assign(k, std::vector<Vec>(k, zero_vec(k)));
  for (int i = 0; i < k; ++i) A.mul.table[i][i] = unit_vec(k, i);
  A.unit = Vec(k, Int(1));
  return A;
}

static Vec express_or_throw(const PresentedAb& amb, const Mat& gens, const Vec& y,
                            const char* what) {
  auto e = express_in_subgroup(amb, gens, y);
  if (!e) throw std::logic_error(std::string("fixed_point_tambara: ") + what +
                                 ": value does not lie in the invariants");
  return *e;
}

TambaraFunctor fixed_point_tambara(const GroupPtr& G, const RingData& A,
                                   const std::function<Mat(int)>& rho, const std::string& name) {
  std::string msg = check_ring(A);
  if (!msg.empty()) throw std::invalid_argument("fixed_point_tambara: " + msg);
  int n = A.A.ngens();
  for (int g = 0; g < G->size(); ++g) {
    Mat Rg = rho(g);
    AbHom h(A.A, A.A, Rg);
    if (!h.well_defined())
      throw std::invalid_argument("fixed_point_tambara: rho(" + G->name(g) +
                                  ") is not well defined");
    if (!A.A.equal(Rg * A.unit, A.unit))
      throw std::invalid_argument("fixed_point_tambara: rho(" + G->name(g) +
                                  ") does not fix the unit");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!A.A.equal(Rg * A.mul.table[i][j], A.mul.apply(Rg.col(i), Rg.col(j))))
          throw std::invalid_argument("fixed_point_tambara: rho(" + G->name(g) +
                                      ") is not multiplicative");
  }

  FixedPointMackey fp = fixed_point_mackey_data(G, A.A, rho, name);
  TambaraFunctor T;
  T.R.mackey = fp.M;
  int nc = (int)T.R.mackey.level.size();
  for (int c = 0; c < nc; ++c) {
    int rep = G->classes()[c].rep;
    const AbHom& incl = fp.kers[rep].incl;
    BilinearMap bm;
    bm.a = bm.b = bm.c = T.R.mackey.level[c];
    int m = bm.a.ngens();
    bm.table.assign(m, std::vector<Vec>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        bm.table[i][j] = express_or_throw(
            A.A, incl.mat, A.mul.apply(incl.mat.col(i), incl.mat.col(j)), "product");
    T.R.mul.push_back(std::move(bm));
    T.R.unit.push_back(express_or_throw(A.A, incl.mat, A.unit, "unit"));
  }

  auto stored_norm = [&](int H, int K, const Vec& x) -> Vec {
    int repH = G->classes()[G->class_of_subgroup(H)].rep;
    int repK = G->classes()[G->class_of_subgroup(K)].rep;
    int gH = G->conjugator_to_rep(H), gK = G->conjugator_to_rep(K);
    Vec a = fp.kers[repH].incl.mat * x;  // the element of A, fixed by rep_H
    Vec acc = A.unit;
    for (int k : G->coset_reps(K, H)) {
      int t = G->mul(gK, G->mul(k, G->inv(gH)));
      acc = A.mul.apply(acc, rho(t) * a);
    }
    return express_or_throw(A.A, fp.kers[repK].incl.mat, acc, "norm");
  };
  attach_norms(T, stored_norm, true);
  return T;
}

TambaraFunctor tambara_product(const TambaraFunctor& A, const TambaraFunctor& B) {
  TambaraFunctor T;
  std::vector<DirectSum> split;
  T.R.mackey = tambara_detail::direct_sum_mackey(
      A.mac(), B.mac(), &split, "(" + A.mac().name + ")x(" + B.mac().name + ")");
  const GroupPtr& G = T.group();
  int nc = (int)T.R.mackey.level.size();
  for (int c = 0; c < nc; ++c) {
    const DirectSum& ds = split[c];
    BilinearMap bm;
    bm.a = bm.b = bm.c = T.R.mackey.level[c];
    int m = bm.a.ngens();
    bm.table.assign(m, std::vector<Vec>(m, zero_vec(m)));
    int na = A.mac().level[c].ngens(), nb = B.mac().level[c].ngens();
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        bm.table[ds.offsets[0] + i][ds.offsets[0] + j] = ds.inject(0, A.R.mul[c].table[i][j]);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        bm.table[ds.offsets[1] + i][ds.offsets[1] + j] = ds.inject(1, B.R.mul[c].table[i][j]);
    T.R.mul.push_back(std::move(bm));
    T.R.unit.push_back(vec_add(ds.inject(0, A.R.unit[c]), ds.inject(1, B.R.unit[c])));
  }
  auto stored_norm = [&](int H, int K, const Vec& x) -> Vec {
    int cH = G->class_of_subgroup(H), cK = G->class_of_subgroup(K);
    return vec_add(split[cK].inject(0, A.apply_norm(H, K, split[cH].project(0, x))),
                   split[cK].inject(1, B.apply_norm(H, K, split[cH].project(1, x))));
  };
  attach_norms(T, stored_norm, true);
  return T;
}

}  // namespace eqalg
