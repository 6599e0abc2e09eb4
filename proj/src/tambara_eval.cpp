#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqalg/tambara.hpp"
#include "mackey_internal.hpp"
#include "tambara_internal.hpp"

namespace eqalg {

using tambara_detail::proper_concrete_pairs;

namespace {

Vec int_point(const std::vector<int>& alpha) {
  Vec v(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) v[i] = alpha[i];
  return v;
}

Vec unit_vec(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

void add_term(PolyMap& p, const std::vector<int>& key, const Vec& c) {
  auto it = p.coeff.find(key);
  if (it == p.coeff.end()) {
    if (!vec_is_zero(c)) p.coeff.emplace(key, c);
    return;
  }
  it->second = vec_add(it->second, c);
  if (vec_is_zero(it->second)) p.coeff.erase(it);
}

// matrix of the projection total -> part of a direct sum
Mat split_project_mat(const DirectSum& ds, int part) {
  int n = ds.total.ngens();
  std::vector<Vec> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = ds.project(part, unit_vec(n, j));
  int rows = n == 0 ? (int)ds.project(part, Vec{}).size() : (int)cols[0].size();
  return Mat::from_cols(cols, rows);
}

// matrix of the injection part -> total of a direct sum
Mat split_inject_mat(const DirectSum& ds, int part, int part_ngens) {
  std::vector<Vec> cols(part_ngens);
  for (int j = 0; j < part_ngens; ++j) cols[j] = ds.inject(part, unit_vec(part_ngens, j));
  return Mat::from_cols(cols, ds.total.ngens());
}

Vec nonunital_norm(const NonUnitalTambara& I, int H, int K, const Vec& x) {
  if (H == K) return x;
  auto it = I.norm.find({H, K});
  if (it == I.norm.end()) throw std::invalid_argument("nonunital norm: pair not stored");
  return it->second.apply(x);
}

}  // namespace

// --- multiplicative transport ---------------------------------------------------

Vec norm_along(const TambaraFunctor& T, const GSetLevel& LU, const GSetLevel& LV, const GMap& g,
               const Vec& y) {
  const MackeyFunctor& M = T.mac();
  const GroupPtr& G = M.G;
  if (!same_gset(g.src, LU.X) || !same_gset(g.dst, LV.X))
    throw std::invalid_argument("norm_along: map endpoints do not match the levels");
  if ((int)y.size() != LU.total.ngens()) throw std::invalid_argument("norm_along: input length");
  Vec out(LV.total.ngens(), Int(0));
  for (int j = 0; j < (int)LV.dec.orbits.size(); ++j) {
    const Orbit& ov = LV.dec.orbits[j];
    int Kv = mackey_rep_of_class(G, ov.class_id);
    int v = ov.rep;
    // product over the Kv-orbits of the fiber over v; empty fiber -> unit
    Vec acc = T.R.unit[ov.class_id];
    SubOrbits so = orbits_under_subgroup(LU.X, Kv);
    for (int u : so.reps) {
      if (g.map[u] != v) continue;
      int i = LU.dec.orbit_of[u];
      int a = LU.dec.conj_of[u];
      int Srep = mackey_rep_of_class(G, LU.dec.orbits[i].class_id);
      Vec val = M.conj_map(a, Srep).apply(LU.sum.project(i, y));
      int Su = LU.X.stabilizer(u);  // contained in Kv since g is equivariant
      acc = T.R.multiply(ov.class_id, acc, T.apply_norm(Su, Kv, val));
    }
    out = vec_add(out, LV.sum.inject(j, acc));
  }
  return out;
}

Vec eval_bispan(const TambaraFunctor& T, const Bispan& p, const Vec& x) {
  std::string err = check_bispan(p);
  if (!err.empty()) throw std::invalid_argument("eval_bispan: " + err);
  const MackeyFunctor& M = T.mac();
  GSetLevel LS = evaluate_at_gset(M, p.s);
  GSetLevel LU = evaluate_at_gset(M, p.u);
  GSetLevel LV = evaluate_at_gset(M, p.v);
  GSetLevel LT = evaluate_at_gset(M, p.t);
  if ((int)x.size() != LS.total.ngens()) throw std::invalid_argument("eval_bispan: input length");
  Vec y = transport_R(M, LU, LS, p.f).apply(x);
  Vec z = norm_along(T, LU, LV, p.g, y);
  return transport_T(M, LV, LT, p.h).apply(z);
}

// --- norm of a sum ---------------------------------------------------------------

Report check_norm_of_sum(const TambaraFunctor& T, int H_sub) {
  Report rep;
  const MackeyFunctor& M = T.mac();
  const GroupPtr& G = M.G;
  NormSumDiagram D = norm_sum_diagram(G, H_sub);
  int d = D.base.size();  // index [G:H]

  bool shape = (int)D.pieces.size() == d + 1;
  rep.add("tambara.normsum.pieces", "one graded piece per degree 0..[G:H]", shape,
          shape ? std::to_string(d + 1) + " pieces"
                : "expected " + std::to_string(d + 1) + " pieces, found " +
                      std::to_string(D.pieces.size()));
  if (!shape) return rep;

  GSetLevel L2 = evaluate_at_gset(M, D.two_copies);
  GSetLevel LX = evaluate_at_gset(M, D.base);
  GSetLevel LP = evaluate_at_gset(M, point_gset(G));
  AbHom foldT = transport_T(M, L2, LX, D.fold);
  GMap pt = to_point(D.base);

  struct Piece {
    GSetLevel LXT, LT;
    AbHom hR, fT;
    const GMap* g;
  };
  std::vector<Piece> ps;
  for (const NormSumPiece& pc : D.pieces) {
    Piece q;
    q.LXT = evaluate_at_gset(M, pc.g_k.src);
    q.LT = evaluate_at_gset(M, pc.Tk);
    q.hR = transport_R(M, q.LXT, L2, pc.h_k);
    q.fT = transport_T(M, q.LT, LP, pc.f_k);
    q.g = &pc.g_k;
    ps.push_back(std::move(q));
  }

  // both sides are polynomial of total degree <= [G:H] in the coordinates of
  // T(X+X), so agreement on the degree-[G:H] simplex certifies the identity
  bool pass = true;
  std::string w;
  long count = 0;
  int r2 = L2.total.ngens();
  for (const auto& alpha : simplex_points(r2, d)) {
    Vec ab = int_point(alpha);
    ++count;
    Vec lhs = norm_along(T, LX, LP, pt, foldT.apply(ab));
    Vec rhs(LP.total.ngens(), Int(0));
    for (const Piece& q : ps)
      rhs = vec_add(rhs, q.fT.apply(norm_along(T, q.LXT, q.LT, *q.g, q.hR.apply(ab))));
    if (!LP.total.equal(lhs, rhs)) {
      pass = false;
      w = "mismatch at (a,b)=" + vec_str(ab);
      break;
    }
  }
  rep.add("tambara.normsum.grid", "N(a+b) equals the sum of the graded pieces", pass,
          pass ? std::to_string(count) + " grid points" : w);
  return rep;
}

// --- square-zero extension -------------------------------------------------------

SquareZero square_zero(const TambaraFunctor& R, const GreenModule& M) {
  if (M.ring != &R.R) throw std::invalid_argument("square_zero: module is not over the given ring");
  const GroupPtr& G = R.group();
  int nc = (int)G->classes().size();

  SquareZero out;
  out.T = std::make_shared<TambaraFunctor>();
  TambaraFunctor& T = *out.T;
  T.R.mackey = tambara_detail::direct_sum_mackey(R.mac(), M.mod, &out.split,
                                                 R.mac().name + "|x " + M.mod.name);

  // products (r,m)(r',m') = (rr', rm' + r'm) and unit (1,0)
  T.R.mul.resize(nc);
  T.R.unit.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const PresentedAb& L = T.R.mackey.level[c];
    int nr = R.mac().level[c].ngens(), nm = M.mod.level[c].ngens();
    BilinearMap bm;
    bm.a = bm.b = bm.c = L;
    bm.table.assign(nr + nm, std::vector<Vec>(nr + nm));
    for (int i = 0; i < nr + nm; ++i)
      for (int j = 0; j < nr + nm; ++j) {
        if (i < nr && j < nr)
          bm.table[i][j] = out.split[c].inject(0, R.R.mul[c].table[i][j]);
        else if (i < nr && j >= nr)
          bm.table[i][j] = out.split[c].inject(1, M.act[c].table[i][j - nr]);
        else if (i >= nr && j < nr)
          bm.table[i][j] = out.split[c].inject(1, M.act[c].table[j][i - nr]);
        else
          bm.table[i][j] = Vec(L.ngens(), Int(0));
      }
    T.R.mul[c] = std::move(bm);
    T.R.unit[c] = out.split[c].inject(0, R.R.unit[c]);
  }

  // norms N(r,m) = (N r, tr(nu(r).m)); nu is interpolated once per pair from
  // the off-diagonal restriction-norm composite on the underlying ring
  for (auto [H, K] : proper_concrete_pairs(G)) {
    int cH = G->class_of_subgroup(H), cK = G->class_of_subgroup(K);
    int d = G->subgroup_order(K) / G->subgroup_order(H);
    int nr = R.mac().level[cH].ngens(), nm = M.mod.level[cH].ngens();

    OffDiagonal od = off_diagonal(G, H, K);
    GSetLevel LD = evaluate_at_gset(R.mac(), od.D);
    GSetLevel LGH = evaluate_at_gset(R.mac(), od.d1.dst);
    AbHom rd = transport_R(R.mac(), LD, LGH, od.d1);
    int pH = point_with_stabilizer(od.d1.dst, H);
    if (pH < 0) throw std::logic_error("square_zero: coset point with exact stabilizer missing");
    int i0 = LGH.dec.orbit_of[pH];
    int a = LGH.dec.conj_of[pH];
    int repH = mackey_rep_of_class(G, cH);
    int gam = G->conjugator_to_rep(H);
    // translate stored class coordinates to the value at the coset point eH
    // and back (conjugation twists along the chosen base points)
    Mat embM = R.mac().conj_map(G->inv(a), H).mat * R.mac().conj_map(G->inv(gam), repH).mat;
    Mat extM = R.mac().conj_map(gam, H).mat * R.mac().conj_map(a, repH).mat;

    auto nu = [&](const Vec& r) {
      Vec w = rd.apply(LGH.sum.inject(i0, embM * r));
      Vec nv = norm_along(R, LD, LGH, od.d2, w);
      return Vec(extM * LGH.sum.project(i0, nv));
    };
    PolyHom nup = poly_from_function(R.mac().level[cH], R.mac().level[cH], d - 1, nu, true);

    const PresentedAb& srcL = T.R.mackey.level[cH];
    const PresentedAb& dstL = T.R.mackey.level[cK];
    PolyHom P;
    P.src = srcL;
    P.dst = dstL;
    P.degree = d;
    P.poly = PolyMap{srcL.ngens(), dstL.ngens(), {}};
    const PolyHom& NR = R.norm_map(H, K);
    for (const auto& [alpha, cvec] : NR.poly.coeff) {
      std::vector<int> key(nr + nm, 0);
      for (int t = 0; t < nr; ++t) key[t] = alpha[t];
      add_term(P.poly, key, out.split[cK].inject(0, cvec));
    }
    const Mat& trM = M.mod.tr_map(H, K).mat;
    for (const auto& [alpha, cvec] : nup.poly.coeff) {
      for (int jm = 0; jm < nm; ++jm) {
        Vec val = trM * M.act[cH].apply(cvec, unit_vec(nm, jm));
        if (vec_is_zero(val)) continue;
        std::vector<int> key(nr + nm, 0);
        for (int t = 0; t < nr; ++t) key[t] = alpha[t];
        key[nr + jm] = 1;
        add_term(P.poly, key, out.split[cK].inject(1, val));
      }
    }
    T.norm.emplace(std::pair<int, int>{H, K}, std::move(P));
  }

  // augmentation and section
  out.aug.src = &T.R.mackey;
  out.aug.dst = &R.mac();
  out.sec.src = &R.mac();
  out.sec.dst = &T.R.mackey;
  for (int c = 0; c < nc; ++c) {
    int nr = R.mac().level[c].ngens();
    out.aug.comp.emplace_back(T.R.mackey.level[c], R.mac().level[c],
                              split_project_mat(out.split[c], 0));
    out.sec.comp.emplace_back(R.mac().level[c], T.R.mackey.level[c],
                              split_inject_mat(out.split[c], 0, nr));
  }
  return out;
}

// --- morphisms of Tambara functors ------------------------------------------------

Report check_tambara_hom(const TambaraFunctor& C, const TambaraFunctor& B, const MackeyHom& h) {
  Report rep;
  const GroupPtr& G = C.group();
  int nc = (int)G->classes().size();
  bool wired = h.src == &C.mac() && h.dst == &B.mac() && (int)h.comp.size() == nc;
  rep.add("tambara.hom.wiring", "morphism connects the two given functors", wired,
          wired ? "" : "source/target wiring mismatch");
  if (!wired) return rep;
  rep.merge(check_mackey_hom(h), "tambara.hom");

  // unit
  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c)
      if (!B.mac().level[c].equal(h.comp[c].apply(C.R.unit[c]), B.R.unit[c])) {
        pass = false;
        w = "unit not preserved at class " + std::to_string(c);
      }
    rep.add("tambara.hom.unit", "h(1) = 1 levelwise", pass, w);
  }

  // multiplication on generator pairs (bilinearity does the rest)
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int c = 0; c < nc && pass; ++c) {
      int n = C.mac().level[c].ngens();
      for (int i = 0; i < n && pass; ++i)
        for (int j = 0; j < n; ++j) {
          ++count;
          Vec lhs = h.comp[c].apply(C.R.mul[c].table[i][j]);
          Vec rhs = B.R.multiply(c, h.comp[c].apply(unit_vec(n, i)), h.comp[c].apply(unit_vec(n, j)));
          if (!B.mac().level[c].equal(lhs, rhs)) {
            pass = false;
            w = "h(xy) != h(x)h(y) at class " + std::to_string(c) + " generators (" +
                std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
        }
    }
    rep.add("tambara.hom.mult", "h is multiplicative levelwise", pass,
            pass ? std::to_string(count) + " instances" : w);
  }

  // norm commutation h(N x) = N(h x) on the degree grid
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : proper_concrete_pairs(G)) {
      int cH = G->class_of_subgroup(H), cK = G->class_of_subgroup(K);
      const PolyHom& NC = C.norm_map(H, K);
      for (const auto& alpha : simplex_points(C.mac().level[cH].ngens(), NC.degree)) {
        Vec x = int_point(alpha);
        ++count;
        Vec lhs = h.comp[cK].apply(NC.apply(x));
        Vec rhs = B.apply_norm(H, K, h.comp[cH].apply(x));
        if (!B.mac().level[cK].equal(lhs, rhs)) {
          pass = false;
          w = "h(Nx) != N(hx) at (" + mackey_sub_label(G, H) + "<" + mackey_sub_label(G, K) +
              ") x=" + vec_str(x);
          break;
        }
      }
      if (!pass) break;
    }
    rep.add("tambara.hom.norm", "h commutes with the norms", pass,
            pass ? std::to_string(count) + " instances" : w);
  }
  return rep;
}

TambaraHomSearch hom_tambara(const TambaraFunctor& C, const TambaraFunctor& B,
                             const MackeyHom* augC, const MackeyHom* augB, const MackeyHom* etaC,
                             const MackeyHom* etaB, const Int& cap) {
  MackeyHomSpace S = mackey_hom_space(C.mac(), B.mac());
  if (!S.sols.group.is_finite())
    throw std::invalid_argument("hom_tambara: infinitely many additive transformations");
  if (S.sols.group.order() > cap)
    throw std::invalid_argument("hom_tambara: additive transformation group exceeds the cap");
  int nc = (int)C.mac().level.size();
  TambaraHomSearch out;
  for (const Vec& v : S.sols.group.enumerate(cap)) {
    MackeyHom h = S.materialize(v);
    if (!check_tambara_hom(C, B, h).ok()) continue;
    bool keep = true;
    if (augC && augB)
      for (int c = 0; c < nc && keep; ++c)
        keep = hom_compose(augB->comp[c], h.comp[c]).equal_hom(augC->comp[c]);
    if (keep && etaC && etaB)
      for (int c = 0; c < nc && keep; ++c)
        keep = hom_compose(h.comp[c], etaC->comp[c]).equal_hom(etaB->comp[c]);
    if (keep) out.homs.push_back(std::move(h));
  }
  return out;
}

// --- restriction to a subgroup ------------------------------------------------------

RestrictedTambara restrict_to_subgroup(const TambaraFunctor& R, const SubgroupAsGroup& H) {
  const GroupPtr& G = R.group();
  RestrictedTambara out;
  out.H = H;
  out.T.R.mackey = restrict_mackey(R.mac(), H).M;
  const GroupPtr& Hg = H.group;
  int nc = (int)Hg->classes().size();

  // the restricted level at an H-class is the parent level at the class of the
  // embedded representative, so ring data carries over verbatim
  out.T.R.mul.resize(nc);
  out.T.R.unit.resize(nc);
  for (int dcl = 0; dcl < nc; ++dcl) {
    int cg = G->class_of_subgroup(embed_subgroup(G, H, mackey_rep_of_class(Hg, dcl)));
    const PresentedAb& L = out.T.R.mackey.level[dcl];
    BilinearMap bm;
    bm.a = bm.b = bm.c = L;
    bm.table = R.R.mul[cg].table;
    out.T.R.mul[dcl] = std::move(bm);
    out.T.R.unit[dcl] = R.R.unit[cg];
  }

  for (auto [S, K] : proper_concrete_pairs(Hg)) {
    int dS = Hg->class_of_subgroup(S), dK = Hg->class_of_subgroup(K);
    int embS = embed_subgroup(G, H, S), embK = embed_subgroup(G, H, K);
    int d = Hg->subgroup_order(K) / Hg->subgroup_order(S);
    int repS = embed_subgroup(G, H, mackey_rep_of_class(Hg, dS));
    int gS = Hg->conjugator_to_rep(S), gK = Hg->conjugator_to_rep(K);
    Mat fromS = R.mac().conj_map(H.embed[Hg->inv(gS)], repS).mat;
    Mat toK = R.mac().conj_map(H.embed[gK], embK).mat;
    auto f = [&R, fromS, toK, embS, embK](const Vec& x) {
      return Vec(toK * R.apply_norm(embS, embK, Vec(fromS * x)));
    };
    out.T.norm.emplace(std::pair<int, int>{S, K},
                       poly_from_function(out.T.R.mackey.level[dS], out.T.R.mackey.level[dK], d, f,
                                          true));
  }
  return out;
}

RestrictedTambara restrict_to_subgroup(const TambaraFunctor& R, int sub_idx) {
  return restrict_to_subgroup(R, subgroup_as_group(R.group(), sub_idx));
}

MackeyHom restrict_hom(const MackeyFunctor& rsrc, const MackeyFunctor& rdst,
                       const SubgroupAsGroup& H, const GroupPtr& parent, const MackeyHom& f) {
  MackeyHom out;
  out.src = &rsrc;
  out.dst = &rdst;
  int nc = (int)H.group->classes().size();
  for (int dcl = 0; dcl < nc; ++dcl) {
    int cg = parent->class_of_subgroup(embed_subgroup(parent, H, mackey_rep_of_class(H.group, dcl)));
    out.comp.emplace_back(rsrc.level[dcl], rdst.level[dcl], f.comp[cg].mat);
  }
  return out;
}

// --- non-unital Tambara functors -----------------------------------------------------

Report validate_non_unital(const NonUnitalTambara& I) {
  Report rep;
  rep.merge(validate_mackey(I.mackey), "mackey");
  const GroupPtr& G = I.mackey.G;
  const MackeyFunctor& M = I.mackey;
  int nc = (int)G->classes().size();
  int ns = (int)G->subgroups().size();
  auto cls = [&](int s) { return G->class_of_subgroup(s); };
  auto plabel = [&](int H, int K) {
    return "(" + mackey_sub_label(G, H) + "<" + mackey_sub_label(G, K) + ")";
  };
  auto aggregate = [&rep](const std::string& id, const std::string& anchor, bool pass, long count,
                          const std::string& witness) {
    rep.add(id, anchor, pass, pass ? std::to_string(count) + " instances" : witness);
  };

  // products: shape, well-definedness, commutativity, associativity
  {
    bool pass = (int)I.mul.size() == nc;
    std::string w = pass ? "" : "wrong number of product tables";
    for (int c = 0; c < nc && pass; ++c) {
      int n = M.level[c].ngens();
      const BilinearMap& bm = I.mul[c];
      if (bm.a.ngens() != n || bm.b.ngens() != n || bm.c.ngens() != n ||
          (int)bm.table.size() != n) {
        pass = false;
        w = "product shape at class " + std::to_string(c);
        break;
      }
      if (!bm.well_defined()) {
        pass = false;
        w = "product not well defined at class " + std::to_string(c);
      }
    }
    rep.add("nonunital.mul.shape", "one well-defined product per level", pass, w);
    if (!pass) return rep;
  }
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int c = 0; c < nc && pass; ++c) {
      int n = M.level[c].ngens();
      for (int i = 0; i < n && pass; ++i)
        for (int j = 0; j < n && pass; ++j) {
          ++count;
          if (!M.level[c].equal(I.mul[c].table[i][j], I.mul[c].table[j][i])) {
            pass = false;
            w = "xy != yx at class " + std::to_string(c);
          }
          for (int k = 0; k < n && pass; ++k) {
            Vec lhs = I.mul[c].apply(unit_vec(n, i), I.mul[c].table[j][k]);
            Vec rhs = I.mul[c].apply(I.mul[c].table[i][j], unit_vec(n, k));
            if (!M.level[c].equal(lhs, rhs)) {
              pass = false;
              w = "(xy)z != x(yz) at class " + std::to_string(c);
            }
          }
        }
    }
    aggregate("nonunital.mul.ring", "products are commutative and associative", pass, count, w);
  }

  // res and conj are multiplicative; Frobenius reciprocity for tr
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int S = 0; S < ns && pass; ++S) {
        if (!G->subgroup_contains(K, S)) continue;
        const AbHom& r = M.res_map(K, S);
        int cK = cls(K), cS = cls(S);
        int n = M.level[cK].ngens();
        for (int i = 0; i < n && pass; ++i)
          for (int j = 0; j < n && pass; ++j) {
            ++count;
            Vec lhs = r.apply(I.mul[cK].table[i][j]);
            Vec rhs = I.mul[cS].apply(r.apply(unit_vec(n, i)), r.apply(unit_vec(n, j)));
            if (!M.level[cS].equal(lhs, rhs)) {
              pass = false;
              w = "res not multiplicative at " + plabel(S, K);
            }
          }
      }
    for (int g = 0; g < G->size() && pass; ++g)
      for (int S = 0; S < ns && pass; ++S) {
        const AbHom& cg = M.conj_map(g, S);
        int cS = cls(S), cT = cls(G->conjugate_subgroup(g, S));
        int n = M.level[cS].ngens();
        for (int i = 0; i < n && pass; ++i)
          for (int j = 0; j < n && pass; ++j) {
            ++count;
            Vec lhs = cg.apply(I.mul[cS].table[i][j]);
            Vec rhs = I.mul[cT].apply(cg.apply(unit_vec(n, i)), cg.apply(unit_vec(n, j)));
            if (!M.level[cT].equal(lhs, rhs)) {
              pass = false;
              w = "conj not multiplicative at " + mackey_sub_label(G, S) + " g=" + G->name(g);
            }
          }
      }
    aggregate("nonunital.res_conj_mult", "res and conj are multiplicative", pass, count, w);
  }
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int S = 0; S < ns && pass; ++S) {
        if (S == K || !G->subgroup_contains(K, S)) continue;
        const AbHom& r = M.res_map(K, S);
        const AbHom& t = M.tr_map(S, K);
        int cK = cls(K), cS = cls(S);
        int nS = M.level[cS].ngens(), nK = M.level[cK].ngens();
        for (int i = 0; i < nS && pass; ++i)
          for (int j = 0; j < nK && pass; ++j) {
            ++count;
            Vec lhs = t.apply(I.mul[cS].apply(unit_vec(nS, i), r.apply(unit_vec(nK, j))));
            Vec rhs = I.mul[cK].apply(t.apply(unit_vec(nS, i)), unit_vec(nK, j));
            if (!M.level[cK].equal(lhs, rhs)) {
              pass = false;
              w = "Frobenius fails at " + plabel(S, K);
            }
          }
      }
    aggregate("nonunital.frobenius", "tr(x . res y) = tr(x) . y", pass, count, w);
  }

  auto pairs = proper_concrete_pairs(G);

  // norm shape
  {
    bool pass = true;
    std::string w;
    for (auto [H, K] : pairs) {
      auto it = I.norm.find({H, K});
      if (it == I.norm.end()) {
        pass = false;
        w = "missing norm at " + plabel(H, K);
        break;
      }
      int d = G->subgroup_order(K) / G->subgroup_order(H);
      if (it->second.src.ngens() != M.level[cls(H)].ngens() ||
          it->second.dst.ngens() != M.level[cls(K)].ngens() || it->second.degree != d) {
        pass = false;
        w = "wrong shape or degree at " + plabel(H, K);
        break;
      }
    }
    rep.add("nonunital.norm_shape", "one degree-[K:H] polynomial norm per proper pair", pass, w);
    if (!pass) return rep;
  }

  // well-definedness on relators
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = I.norm.at({H, K});
      const Mat& rel = p.src.rel();
      auto grid = simplex_points(p.src.ngens(), p.degree);
      for (int j = 0; j < rel.cols() && pass; ++j) {
        Vec rho = rel.col(j);
        for (const auto& alpha : grid) {
          Vec x = int_point(alpha);
          ++count;
          if (!p.dst.equal(p.apply(vec_add(x, rho)), p.apply(x))) {
            pass = false;
            w = "norm not constant on relator " + std::to_string(j) + " at " + plabel(H, K);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("nonunital.norm_welldef", "norms descend to the presented levels", pass, count, w);
  }

  // multiplicativity
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = I.norm.at({H, K});
      int r = p.src.ngens(), d = p.degree;
      int cH = cls(H), cK = cls(K);
      for (const auto& alpha : product_grid({{r, d}, {r, d}})) {
        Vec x = int_point({alpha.begin(), alpha.begin() + r});
        Vec y = int_point({alpha.begin() + r, alpha.end()});
        ++count;
        Vec lhs = p.apply(I.mul[cH].apply(x, y));
        Vec rhs = I.mul[cK].apply(p.apply(x), p.apply(y));
        if (!p.dst.equal(lhs, rhs)) {
          pass = false;
          w = "N(xy) != N(x)N(y) at " + plabel(H, K) + " x=" + vec_str(x) + " y=" + vec_str(y);
          break;
        }
      }
      if (!pass) break;
    }
    aggregate("nonunital.norm_mult", "norms are multiplicative", pass, count, w);
  }

  // transitivity
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      for (int L = 0; L < ns && pass; ++L) {
        if (L == H || L == K) continue;
        if (!G->subgroup_contains(L, H) || !G->subgroup_contains(K, L)) continue;
        const PolyHom& p = I.norm.at({H, K});
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          Vec lhs = nonunital_norm(I, L, K, nonunital_norm(I, H, L, x));
          if (!p.dst.equal(lhs, p.apply(x))) {
            pass = false;
            w = "N_L^K N_H^L != N_H^K at " + plabel(H, L) + plabel(L, K);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("nonunital.norm_trans", "norms compose along chains", pass, count, w);
  }

  // conjugation equivariance
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = I.norm.at({H, K});
      for (int g = 0; g < G->size() && pass; ++g) {
        int H2 = G->conjugate_subgroup(g, H), K2 = G->conjugate_subgroup(g, K);
        const AbHom& cgH = M.conj_map(g, H);
        const AbHom& cgK = M.conj_map(g, K);
        const PresentedAb& tgt = M.level[cls(K2)];
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          if (!tgt.equal(cgK.apply(p.apply(x)), nonunital_norm(I, H2, K2, cgH.apply(x)))) {
            pass = false;
            w = "conjugation fails at " + plabel(H, K) + " g=" + G->name(g);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("nonunital.norm_conj", "norms commute with conjugation", pass, count, w);
  }

  // double coset formula; every double-coset product here is nonempty, so the
  // product is seeded with its first factor instead of a unit
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : pairs) {
      const PolyHom& p = I.norm.at({H, K});
      for (int L = 0; L < ns && pass; ++L) {
        if (L == K || !G->subgroup_contains(K, L)) continue;
        int cL = cls(L);
        const PresentedAb& tgt = M.level[cL];
        const AbHom& resKL = M.res_map(K, L);
        for (const auto& alpha : simplex_points(p.src.ngens(), p.degree)) {
          Vec x = int_point(alpha);
          ++count;
          Vec lhs = resKL.apply(p.apply(x));
          bool first = true;
          Vec rhs;
          for (int g : G->double_coset_reps(K, L, H)) {
            int A = intersect_subgroups(G, L, G->conjugate_subgroup(g, H));
            int B = G->conjugate_subgroup(G->inv(g), A);
            Vec arg = M.conj_map(g, B).apply(M.res_map(H, B).apply(x));
            Vec factor = nonunital_norm(I, A, L, arg);
            rhs = first ? factor : I.mul[cL].apply(rhs, factor);
            first = false;
          }
          if (first || !tgt.equal(lhs, rhs)) {
            pass = false;
            w = "double coset formula fails at " + plabel(H, K) + " L=" + mackey_sub_label(G, L);
            break;
          }
        }
      }
      if (!pass) break;
    }
    aggregate("nonunital.norm_res", "restriction of a norm expands over double cosets", pass,
              count, w);
  }
  return rep;
}

Report validate_ideal_action(const NonUnitalTambara& I, const TambaraFunctor& R,
                             const std::vector<BilinearMap>& act) {
  Report rep;
  const GroupPtr& G = I.mackey.G;
  const MackeyFunctor& M = I.mackey;
  const MackeyFunctor& RM = R.mac();
  int nc = (int)G->classes().size();
  int ns = (int)G->subgroups().size();
  auto cls = [&](int s) { return G->class_of_subgroup(s); };
  auto aggregate = [&rep](const std::string& id, const std::string& anchor, bool pass, long count,
                          const std::string& witness) {
    rep.add(id, anchor, pass, pass ? std::to_string(count) + " instances" : witness);
  };

  {
    bool pass = (int)act.size() == nc;
    std::string w = pass ? "" : "wrong number of action tables";
    for (int c = 0; c < nc && pass; ++c) {
      if (act[c].a.ngens() != RM.level[c].ngens() || act[c].b.ngens() != M.level[c].ngens() ||
          act[c].c.ngens() != M.level[c].ngens()) {
        pass = false;
        w = "action shape at class " + std::to_string(c);
        break;
      }
      if (!act[c].well_defined()) {
        pass = false;
        w = "action not well defined at class " + std::to_string(c);
      }
    }
    rep.add("ideal.act.shape", "well-defined ambient action per level", pass, w);
    if (!pass) return rep;
  }

  // module axioms: unitality and mixed associativity on generators
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int c = 0; c < nc && pass; ++c) {
      int nr = RM.level[c].ngens(), ni = M.level[c].ngens();
      for (int j = 0; j < ni && pass; ++j) {
        ++count;
        if (!M.level[c].equal(act[c].apply(R.R.unit[c], unit_vec(ni, j)), unit_vec(ni, j))) {
          pass = false;
          w = "1 . x != x at class " + std::to_string(c);
        }
      }
      for (int i = 0; i < nr && pass; ++i)
        for (int j = 0; j < nr && pass; ++j)
          for (int k = 0; k < ni && pass; ++k) {
            ++count;
            Vec lhs = act[c].apply(unit_vec(nr, i), act[c].apply(unit_vec(nr, j), unit_vec(ni, k)));
            Vec rhs = act[c].apply(R.R.mul[c].table[i][j], unit_vec(ni, k));
            if (!M.level[c].equal(lhs, rhs)) {
              pass = false;
              w = "r.(s.x) != (rs).x at class " + std::to_string(c);
            }
          }
    }
    aggregate("ideal.act.module", "unital associative module structure", pass, count, w);
  }

  // compatibility with res, conj, and Frobenius reciprocity
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int S = 0; S < ns && pass; ++S) {
        if (!G->subgroup_contains(K, S)) continue;
        int cK = cls(K), cS = cls(S);
        const AbHom& rR = RM.res_map(K, S);
        const AbHom& rI = M.res_map(K, S);
        int nr = RM.level[cK].ngens(), ni = M.level[cK].ngens();
        for (int i = 0; i < nr && pass; ++i)
          for (int j = 0; j < ni && pass; ++j) {
            ++count;
            Vec lhs = rI.apply(act[cK].apply(unit_vec(nr, i), unit_vec(ni, j)));
            Vec rhs = act[cS].apply(rR.apply(unit_vec(nr, i)), rI.apply(unit_vec(ni, j)));
            if (!M.level[cS].equal(lhs, rhs)) {
              pass = false;
              w = "res(r.x) != res(r).res(x) at classes " + std::to_string(cK) + "," +
                  std::to_string(cS);
            }
          }
        if (S == K) continue;
        const AbHom& tI = M.tr_map(S, K);
        int niS = M.level[cS].ngens();
        for (int i = 0; i < nr && pass; ++i)
          for (int j = 0; j < niS && pass; ++j) {
            ++count;
            Vec lhs = act[cK].apply(unit_vec(nr, i), tI.apply(unit_vec(niS, j)));
            Vec rhs = tI.apply(act[cS].apply(rR.apply(unit_vec(nr, i)), unit_vec(niS, j)));
            if (!M.level[cK].equal(lhs, rhs)) {
              pass = false;
              w = "r.tr(x) != tr(res(r).x) at classes " + std::to_string(cK) + "," +
                  std::to_string(cS);
            }
          }
      }
    for (int g = 0; g < G->size() && pass; ++g)
      for (int S = 0; S < ns && pass; ++S) {
        int cS = cls(S), cT = cls(G->conjugate_subgroup(g, S));
        const AbHom& cR = RM.conj_map(g, S);
        const AbHom& cI = M.conj_map(g, S);
        int nr = RM.level[cS].ngens(), ni = M.level[cS].ngens();
        for (int i = 0; i < nr && pass; ++i)
          for (int j = 0; j < ni && pass; ++j) {
            ++count;
            Vec lhs = cI.apply(act[cS].apply(unit_vec(nr, i), unit_vec(ni, j)));
            Vec rhs = act[cT].apply(cR.apply(unit_vec(nr, i)), cI.apply(unit_vec(ni, j)));
            if (!M.level[cT].equal(lhs, rhs)) {
              pass = false;
              w = "conj(r.x) != conj(r).conj(x) at class " + std::to_string(cS);
            }
          }
      }
    aggregate("ideal.act.compat", "action commutes with res, tr, conj", pass, count, w);
  }

  // projection formula N(r.x) = N(r).N(x) on the joint degree grid
  {
    bool pass = true;
    std::string w;
    long count = 0;
    for (auto [H, K] : proper_concrete_pairs(G)) {
      int cH = cls(H), cK = cls(K);
      const PolyHom& p = I.norm.at({H, K});
      int d = p.degree;
      int nr = RM.level[cH].ngens(), ni = M.level[cH].ngens();
      for (const auto& alpha : product_grid({{nr, d}, {ni, d}})) {
        Vec r = int_point({alpha.begin(), alpha.begin() + nr});
        Vec x = int_point({alpha.begin() + nr, alpha.end()});
        ++count;
        Vec lhs = p.apply(act[cH].apply(r, x));
        Vec rhs = act[cK].apply(R.apply_norm(H, K, r), p.apply(x));
        if (!M.level[cK].equal(lhs, rhs)) {
          pass = false;
          w = "N(r.x) != N(r).N(x) at (" + mackey_sub_label(G, H) + "<" + mackey_sub_label(G, K) +
              ") r=" + vec_str(r) + " x=" + vec_str(x);
          break;
        }
      }
      if (!pass) break;
    }
    aggregate("ideal.act.projection", "norms satisfy the projection formula", pass, count, w);
  }
  return rep;
}

// --- augmentation ideals ---------------------------------------------------------------

AugmentationIdeal augmentation_ideal(const TambaraFunctor& B, const MackeyHom& aug) {
  const GroupPtr& G = B.group();
  int nc = (int)G->classes().size();
  if (aug.src != &B.mac() || (int)aug.comp.size() != nc)
    throw std::invalid_argument("augmentation_ideal: aug must be a transformation out of B");

  AugmentationIdeal out;
  out.I.mackey.G = G;
  out.I.mackey.name = B.mac().name + " ideal";
  std::vector<KernelData> kd;
  for (int c = 0; c < nc; ++c) {
    if (!quotient_presentation(aug.comp[c].dst, aug.comp[c].mat).quot.is_trivial())
      throw std::invalid_argument("augmentation_ideal: aug is not levelwise surjective");
    kd.push_back(hom_kernel(aug.comp[c]));
    out.I.mackey.level.push_back(kd[c].ker);
    out.incl.push_back(kd[c].incl);
  }

  auto express = [&](int c, const Vec& y, const char* what) {
    auto e = express_in_subgroup(B.mac().level[c], kd[c].incl.mat, y);
    if (!e)
      throw std::logic_error(std::string("augmentation_ideal: ") + what +
                             " does not land in the ideal");
    return *e;
  };
  auto cls = [&](int s) { return G->class_of_subgroup(s); };

  // structure maps: corestrict B's maps to the kernels
  for (const auto& [key, f] : B.mac().res) {
    int cs = cls(key.first), cd = cls(key.second);
    std::vector<Vec> cols;
    for (int j = 0; j < kd[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * kd[cs].incl.mat.col(j), "restriction"));
    out.I.mackey.res.emplace(key, AbHom(out.I.mackey.level[cs], out.I.mackey.level[cd],
                                        Mat::from_cols(cols, out.I.mackey.level[cd].ngens())));
  }
  for (const auto& [key, f] : B.mac().tr) {
    int cs = cls(key.first), cd = cls(key.second);
    std::vector<Vec> cols;
    for (int j = 0; j < kd[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * kd[cs].incl.mat.col(j), "transfer"));
    out.I.mackey.tr.emplace(key, AbHom(out.I.mackey.level[cs], out.I.mackey.level[cd],
                                       Mat::from_cols(cols, out.I.mackey.level[cd].ngens())));
  }
  for (const auto& [key, f] : B.mac().conj) {
    int cs = cls(key.second), cd = cls(G->conjugate_subgroup(key.first, key.second));
    std::vector<Vec> cols;
    for (int j = 0; j < kd[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * kd[cs].incl.mat.col(j), "conjugation"));
    out.I.mackey.conj.emplace(key, AbHom(out.I.mackey.level[cs], out.I.mackey.level[cd],
                                         Mat::from_cols(cols, out.I.mackey.level[cd].ngens())));
  }

  // products and ambient action
  out.I.mul.resize(nc);
  out.act.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int ni = out.I.mackey.level[c].ngens(), nb = B.mac().level[c].ngens();
    BilinearMap bm;
    bm.a = bm.b = bm.c = out.I.mackey.level[c];
    bm.table.assign(ni, std::vector<Vec>(ni));
    for (int i = 0; i < ni; ++i)
      for (int j = 0; j < ni; ++j)
        bm.table[i][j] = express(
            c, B.R.multiply(c, kd[c].incl.mat.col(i), kd[c].incl.mat.col(j)), "product");
    out.I.mul[c] = std::move(bm);

    BilinearMap am;
    am.a = B.mac().level[c];
    am.b = am.c = out.I.mackey.level[c];
    am.table.assign(nb, std::vector<Vec>(ni));
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < ni; ++j)
        am.table[i][j] =
            express(c, B.R.multiply(c, unit_vec(nb, i), kd[c].incl.mat.col(j)), "action");
    out.act[c] = std::move(am);
  }

  // norms restrict to the ideal: aug(N x) = N(aug x) = N(0) = 0
  for (auto [H, K] : proper_concrete_pairs(G)) {
    int cH = cls(H), cK = cls(K);
    int d = G->subgroup_order(K) / G->subgroup_order(H);
    const Mat inc = kd[cH].incl.mat;
    auto f = [&B, &express, inc, H = H, K = K, cK](const Vec& x) {
      return express(cK, B.apply_norm(H, K, inc * x), "norm");
    };
    out.I.norm.emplace(
        std::pair<int, int>{H, K},
        poly_from_function(out.I.mackey.level[cH], out.I.mackey.level[cK], d, f, true));
  }
  return out;
}

IdealModuleIso ideal_module_iso(const AugmentationIdeal& I, const SquareZero& sz,
                                const GreenModule& M) {
  const MackeyFunctor& T = sz.T->R.mackey;
  int nc = (int)T.level.size();
  IdealModuleIso out;
  out.fwd.src = &I.I.mackey;
  out.fwd.dst = &M.mod;
  out.bwd.src = &M.mod;
  out.bwd.dst = &I.I.mackey;
  for (int c = 0; c < nc; ++c) {
    int nI = I.I.mackey.level[c].ngens(), nM = M.mod.level[c].ngens();
    std::vector<Vec> fcols;
    for (int j = 0; j < nI; ++j) fcols.push_back(sz.split[c].project(1, I.incl[c].mat.col(j)));
    out.fwd.comp.emplace_back(I.I.mackey.level[c], M.mod.level[c], Mat::from_cols(fcols, nM));
    std::vector<Vec> bcols;
    for (int j = 0; j < nM; ++j) {
      auto e = express_in_subgroup(T.level[c], I.incl[c].mat,
                                   sz.split[c].inject(1, unit_vec(nM, j)));
      if (!e) throw std::logic_error("ideal_module_iso: module element missing from the ideal");
      bcols.push_back(*e);
    }
    out.bwd.comp.emplace_back(M.mod.level[c], I.I.mackey.level[c], Mat::from_cols(bcols, nI));
  }
  return out;
}

// --- localization -----------------------------------------------------------------------

Localization localize(const TambaraFunctor& R, const Vec& s_top, int depth) {
  const GroupPtr& G = R.group();
  int nc = (int)G->classes().size();
  int top = G->full_subgroup();
  int ctop = G->class_of_subgroup(top);
  if ((int)s_top.size() != R.mac().level[ctop].ngens())
    throw std::invalid_argument("localize: element length does not match the top level");

  // multiplication by res(s), levelwise
  std::vector<Mat> ms(nc);
  for (int c = 0; c < nc; ++c) {
    int repc = mackey_rep_of_class(G, c);
    Vec sc = R.mac().res_map(top, repc).apply(s_top);
    int n = R.mac().level[c].ngens();
    std::vector<Vec> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = R.R.multiply(c, sc, unit_vec(n, j));
    ms[c] = Mat::from_cols(cols, n);
  }

  // ascending chain of s-power-torsion kernels; once two consecutive kernels
  // agree at every level they agree forever
  Localization out;
  std::vector<Mat> kernel(nc);
  for (int c = 0; c < nc; ++c) kernel[c] = Mat(R.mac().level[c].ngens(), 0);
  std::vector<Mat> pw = ms;
  for (int k = 1; k <= depth && out.stabilized_at < 0; ++k) {
    std::vector<Mat> next(nc);
    bool same = true;
    for (int c = 0; c < nc; ++c) {
      next[c] = hom_kernel(AbHom(R.mac().level[c], R.mac().level[c], pw[c])).incl.mat;
      for (int j = 0; same && j < next[c].cols(); ++j)
        if (!express_in_subgroup(R.mac().level[c], kernel[c], next[c].col(j))) same = false;
    }
    if (same) {
      out.stabilized_at = k - 1;
      break;
    }
    kernel = std::move(next);
    for (int c = 0; c < nc; ++c) pw[c] = ms[c] * pw[c];
  }

  // quotient levels keep the generators, so every structure matrix carries over
  out.Q = std::make_shared<TambaraFunctor>();
  TambaraFunctor& Q = *out.Q;
  Q.R.mackey.G = G;
  Q.R.mackey.name = R.mac().name + " mod s-torsion";
  for (int c = 0; c < nc; ++c)
    Q.R.mackey.level.push_back(quotient_presentation(R.mac().level[c], kernel[c]).quot);
  auto cls = [&](int s) { return G->class_of_subgroup(s); };
  for (const auto& [key, f] : R.mac().res) {
    AbHom h(Q.R.mackey.level[cls(key.first)], Q.R.mackey.level[cls(key.second)], f.mat);
    if (!h.well_defined()) throw std::logic_error("localize: torsion kernel not res-stable");
    Q.R.mackey.res.emplace(key, std::move(h));
  }
  for (const auto& [key, f] : R.mac().tr) {
    AbHom h(Q.R.mackey.level[cls(key.first)], Q.R.mackey.level[cls(key.second)], f.mat);
    if (!h.well_defined()) throw std::logic_error("localize: torsion kernel not tr-stable");
    Q.R.mackey.tr.emplace(key, std::move(h));
  }
  for (const auto& [key, f] : R.mac().conj) {
    AbHom h(Q.R.mackey.level[cls(key.second)],
            Q.R.mackey.level[cls(G->conjugate_subgroup(key.first, key.second))], f.mat);
    if (!h.well_defined()) throw std::logic_error("localize: torsion kernel not conj-stable");
    Q.R.mackey.conj.emplace(key, std::move(h));
  }
  Q.R.mul.resize(nc);
  Q.R.unit.resize(nc);
  for (int c = 0; c < nc; ++c) {
    BilinearMap bm;
    bm.a = bm.b = bm.c = Q.R.mackey.level[c];
    bm.table = R.R.mul[c].table;
    if (!bm.well_defined()) throw std::logic_error("localize: torsion kernel is not an ideal");
    Q.R.mul[c] = std::move(bm);
    Q.R.unit[c] = R.R.unit[c];
  }
  for (const auto& [key, p] : R.norm) {
    PolyHom q = p;
    q.src = Q.R.mackey.level[cls(key.first)];
    q.dst = Q.R.mackey.level[cls(key.second)];
    Q.norm.emplace(key, std::move(q));
  }

  out.proj.src = &R.mac();
  out.proj.dst = &Q.R.mackey;
  for (int c = 0; c < nc; ++c)
    out.proj.comp.emplace_back(R.mac().level[c], Q.R.mackey.level[c],
                               Mat::identity(R.mac().level[c].ngens()));
  out.s_image = Q.R.mackey.level[ctop].reduce(s_top);

  // is multiplication by s already invertible on Q?
  out.element_inverted = true;
  for (int c = 0; c < nc && out.element_inverted; ++c)
    if (!hom_inverse(AbHom(Q.R.mackey.level[c], Q.R.mackey.level[c], ms[c])))
      out.element_inverted = false;

  // is the multiplication map Q box_R Q -> Q an isomorphism?
  {
    GreenModule QM;
    QM.ring = &R.R;
    QM.mod = Q.R.mackey;
    QM.act.resize(nc);
    for (int c = 0; c < nc; ++c) {
      BilinearMap am;
      am.a = R.mac().level[c];
      am.b = am.c = Q.R.mackey.level[c];
      am.table = R.R.mul[c].table;
      QM.act[c] = std::move(am);
    }
    BoxOver bo = box_over(R.R, QM, QM);
    DressPairing pair;
    pair.Q = &Q.R.mackey;
    pair.beta = [&Q](int S, int i, int j) {
      return Q.R.mul[Q.R.mackey.G->class_of_subgroup(S)].table[i][j];
    };
    MackeyHom mm = box_induced_hom(bo.box, QM.mod, QM.mod, pair);
    out.mult_iso = check_mackey_hom(mm).ok() && is_mackey_iso(mm);
  }
  return out;
}

}  // namespace eqalg
