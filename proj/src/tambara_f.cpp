#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqalg/tambara.hpp"
#include "mackey_internal.hpp"
#include "tambara_internal.hpp"

namespace eqalg {

namespace {

Vec unit_vec(int n, int i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

// matrix of the projection total -> part of a direct sum
Mat ds_project_mat(const DirectSum& ds, int part) {
  int n = ds.total.ngens();
  std::vector<Vec> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = ds.project(part, unit_vec(n, j));
  int rows = n == 0 ? (int)ds.project(part, Vec{}).size() : (int)cols[0].size();
  return Mat::from_cols(cols, rows);
}

// matrix of the injection part -> total of a direct sum
Mat ds_inject_mat(const DirectSum& ds, int part, int part_ngens) {
  std::vector<Vec> cols(part_ngens);
  for (int j = 0; j < part_ngens; ++j) cols[j] = ds.inject(part, unit_vec(part_ngens, j));
  return Mat::from_cols(cols, ds.total.ngens());
}

// Shared scaffolding for Tambara functors whose level at G/S is the value of
// a base functor B on a G-set X_S naturally attached to S (a product with a
// fixed set, or a restricted orbit).  The caches are keyed by the concrete
// subgroup; the canonical base point of orbit_gset(G, S) is the identity
// coset, so the induced orbit maps below are the honest coset projections
// G/S -> G/K and translations G/S -> G/gSg^{-1}.
struct LevelCache {
  std::map<int, GSet> orb;  // orbit_gset(G, S)
  std::map<int, int> base;  // identity coset point of orb[S]

  const GSet& orbit(const GroupPtr& G, int s) {
    auto it = orb.find(s);
    if (it == orb.end()) {
      it = orb.emplace(s, orbit_gset(G, s)).first;
      base[s] = point_with_stabilizer(it->second, s);
    }
    return it->second;
  }

  // canonical projection G/S -> G/K for S <= K
  GMap proj(const GroupPtr& G, int S, int K) {
    const GSet& A = orbit(G, S);
    const GSet& B = orbit(G, K);
    return induced_orbit_map(A, B, base[S], base[K]);
  }

  // the translation G/S -> G/gSg^{-1}, xS -> x g^{-1} (gSg^{-1})
  GMap translation(const GroupPtr& G, int g, int S) {
    int S2 = G->conjugate_subgroup(g, S);
    const GSet& A = orbit(G, S);
    const GSet& B = orbit(G, S2);
    return induced_orbit_map(A, B, base[S], B.apply(G->inv(g), base[S2]));
  }
};

// Green structure of B evaluated at a G-set: orbitwise products and units in
// the class levels of B (orbit representatives carry exactly the class
// representative as stabilizer, so components are plain class coordinates).
BilinearMap blockwise_mul(const GreenData& B, const GSetLevel& L) {
  BilinearMap bm;
  bm.a = bm.b = bm.c = L.total;
  int n = L.total.ngens();
  bm.table.assign(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec out(n, Int(0));
      for (int o = 0; o < (int)L.dec.orbits.size(); ++o) {
        int c = L.dec.orbits[o].class_id;
        Vec p = B.multiply(c, L.sum.project(o, unit_vec(n, i)), L.sum.project(o, unit_vec(n, j)));
        out = vec_add(out, L.sum.inject(o, p));
      }
      bm.table[i][j] = out;
    }
  return bm;
}

Vec blockwise_unit(const GreenData& B, const GSetLevel& L) {
  Vec out(L.total.ngens(), Int(0));
  for (int o = 0; o < (int)L.dec.orbits.size(); ++o)
    out = vec_add(out, L.sum.inject(o, B.unit[L.dec.orbits[o].class_id]));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Function object B(T x -)
// ---------------------------------------------------------------------------

FLevel f_level(const TambaraFunctor& B, const GSet& T) {
  const GroupPtr& G = B.group();
  if (!T.G || T.G != G) throw std::invalid_argument("f_level: T must be a G-set over B's group");
  int nc = (int)G->classes().size();

  LevelCache cache;
  std::map<int, Product> prod;   // T x G/S
  std::map<int, GSetLevel> lev;  // B(T x G/S)
  auto ensure = [&](int s) {
    if (prod.count(s)) return;
    prod.emplace(s, product_gset(T, cache.orbit(G, s)));
    lev.emplace(s, evaluate_at_gset(B.mac(), prod.at(s).total));
  };
  auto idT = [&]() { return gmap_identity(T); };

  MackeyBuilder bld;
  bld.G = G;
  bld.name = "F(T," + B.mac().name + ")";
  bld.level_of = [&](int s) {
    ensure(s);
    return lev.at(s).total;
  };
  bld.res_of = [&](int K, int S) {
    ensure(S);
    ensure(K);
    GMap pf = tambara_detail::product_map(prod.at(S), prod.at(K), idT(), cache.proj(G, S, K));
    return transport_R(B.mac(), lev.at(S), lev.at(K), pf).mat;
  };
  bld.tr_of = [&](int S, int K) {
    ensure(S);
    ensure(K);
    GMap pf = tambara_detail::product_map(prod.at(S), prod.at(K), idT(), cache.proj(G, S, K));
    return transport_T(B.mac(), lev.at(S), lev.at(K), pf).mat;
  };
  bld.conj_of = [&](int g, int S) {
    int S2 = G->conjugate_subgroup(g, S);
    ensure(S);
    ensure(S2);
    GMap pf = tambara_detail::product_map(prod.at(S), prod.at(S2), idT(), cache.translation(G, g, S));
    return transport_T(B.mac(), lev.at(S), lev.at(S2), pf).mat;
  };

  TambaraFunctor TF;
  TF.R.mackey = build_mackey(bld);
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    ensure(rep);
    TF.R.mul.push_back(blockwise_mul(B.R, lev.at(rep)));
    TF.R.unit.push_back(blockwise_unit(B.R, lev.at(rep)));
  }

  std::map<std::pair<int, int>, Mat> twist;  // cached concrete translation transports
  auto twist_mat = [&](int g, int S) -> const Mat& {
    auto key = std::make_pair(g, S);
    auto it = twist.find(key);
    if (it == twist.end()) it = twist.emplace(key, bld.conj_of(g, S)).first;
    return it->second;
  };
  auto stored_norm = [&](int H, int K, const Vec& x) -> Vec {
    ensure(H);
    ensure(K);
    int repH = mackey_rep_of_class(G, G->class_of_subgroup(H));
    int repK = mackey_rep_of_class(G, G->class_of_subgroup(K));
    Vec xc = x;
    if (H != repH) xc = twist_mat(G->inv(G->conjugator_to_rep(H)), repH) * xc;
    GMap pf = tambara_detail::product_map(prod.at(H), prod.at(K), idT(), cache.proj(G, H, K));
    Vec y = norm_along(B, lev.at(H), lev.at(K), pf, xc);
    if (K != repK) y = twist_mat(G->conjugator_to_rep(K), K) * y;
    return y;
  };
  attach_norms(TF, stored_norm);

  FLevel out;
  out.T = T;
  out.BT = std::make_shared<TambaraFunctor>(std::move(TF));

  out.unit.src = &B.mac();
  out.unit.dst = &out.BT->R.mackey;
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    GSetLevel Lorb = evaluate_at_gset(B.mac(), cache.orbit(G, rep));
    Mat pull = transport_R(B.mac(), lev.at(rep), Lorb, prod.at(rep).pr2).mat;
    Mat mat = pull * ds_inject_mat(Lorb.sum, 0, B.mac().level[c].ngens());
    out.unit.comp.push_back(AbHom(B.mac().level[c], out.BT->R.mackey.level[c], mat));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coinduction
// ---------------------------------------------------------------------------

TambaraFunctor coinduce(const GroupPtr& G, const SubgroupAsGroup& H, const TambaraFunctor& B) {
  if (B.group() != H.group)
    throw std::invalid_argument("coinduce: B must live over the subgroup group");
  int nc = (int)G->classes().size();

  LevelCache cache;
  std::map<int, GSet> rx;        // (G/S)|_H
  std::map<int, GSetLevel> lev;  // B((G/S)|_H)
  auto ensure = [&](int s) {
    if (rx.count(s)) return;
    rx.emplace(s, restrict_gset_over(cache.orbit(G, s), H));
    lev.emplace(s, evaluate_at_gset(B.mac(), rx.at(s)));
  };
  auto restricted = [&](const GMap& f, int S, int K_or_S2) {
    return GMap(rx.at(S), rx.at(K_or_S2), f.map);
  };

  MackeyBuilder bld;
  bld.G = G;
  bld.name = "CoInd(" + B.mac().name + ")";
  bld.level_of = [&](int s) {
    ensure(s);
    return lev.at(s).total;
  };
  bld.res_of = [&](int K, int S) {
    ensure(S);
    ensure(K);
    return transport_R(B.mac(), lev.at(S), lev.at(K), restricted(cache.proj(G, S, K), S, K)).mat;
  };
  bld.tr_of = [&](int S, int K) {
    ensure(S);
    ensure(K);
    return transport_T(B.mac(), lev.at(S), lev.at(K), restricted(cache.proj(G, S, K), S, K)).mat;
  };
  bld.conj_of = [&](int g, int S) {
    int S2 = G->conjugate_subgroup(g, S);
    ensure(S);
    ensure(S2);
    return transport_T(B.mac(), lev.at(S), lev.at(S2),
                       restricted(cache.translation(G, g, S), S, S2))
        .mat;
  };

  TambaraFunctor TF;
  TF.R.mackey = build_mackey(bld);
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    ensure(rep);
    TF.R.mul.push_back(blockwise_mul(B.R, lev.at(rep)));
    TF.R.unit.push_back(blockwise_unit(B.R, lev.at(rep)));
  }

  std::map<std::pair<int, int>, Mat> twist;
  auto twist_mat = [&](int g, int S) -> const Mat& {
    auto key = std::make_pair(g, S);
    auto it = twist.find(key);
    if (it == twist.end()) it = twist.emplace(key, bld.conj_of(g, S)).first;
    return it->second;
  };
  auto stored_norm = [&](int Hs, int Ks, const Vec& x) -> Vec {
    ensure(Hs);
    ensure(Ks);
    int repH = mackey_rep_of_class(G, G->class_of_subgroup(Hs));
    int repK = mackey_rep_of_class(G, G->class_of_subgroup(Ks));
    Vec xc = x;
    if (Hs != repH) xc = twist_mat(G->inv(G->conjugator_to_rep(Hs)), repH) * xc;
    Vec y = norm_along(B, lev.at(Hs), lev.at(Ks), restricted(cache.proj(G, Hs, Ks), Hs, Ks), xc);
    if (Ks != repK) y = twist_mat(G->conjugator_to_rep(Ks), Ks) * y;
    return y;
  };
  attach_norms(TF, stored_norm);
  return TF;
}

MackeyHom coinduction_unit(const TambaraFunctor& R, const SubgroupAsGroup& H,
                           const RestrictedTambara& RH, const TambaraFunctor& CI) {
  const GroupPtr& G = R.group();
  if (CI.group() != G) throw std::invalid_argument("coinduction_unit: CI must live over G");
  if (RH.T.group() != H.group)
    throw std::invalid_argument("coinduction_unit: RH must live over the subgroup group");
  int nc = (int)G->classes().size();

  MackeyHom u;
  u.src = &R.mac();
  u.dst = &CI.mac();
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    GSet X = orbit_gset(G, rep);
    GSetLevel LG = evaluate_at_gset(R.mac(), X);
    GSet Xr = restrict_gset_over(X, H);
    GSetLevel LH = evaluate_at_gset(RH.T.mac(), Xr);
    int n = R.mac().level[c].ngens();
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i) {
      Vec e = unit_vec(n, i);
      Vec out(LH.total.ngens(), Int(0));
      for (int j = 0; j < (int)LH.dec.orbits.size(); ++j) {
        int p = LH.dec.orbits[j].rep;
        // value of e at the point p, tagged at its G-stabilizer ...
        Vec val = R.mac().conj_map(LG.dec.conj_of[p], rep).apply(LG.sum.project(0, e));
        // ... then restricted to the embedded H-stabilizer
        int embS = embed_subgroup(G, H, Xr.stabilizer(p));
        Vec dn = R.mac().res_map(X.stabilizer(p), embS).apply(val);
        out = vec_add(out, LH.sum.inject(j, dn));
      }
      cols.push_back(out);
    }
    u.comp.push_back(
        AbHom(R.mac().level[c], CI.mac().level[c], Mat::from_cols(cols, LH.total.ngens())));
  }
  return u;
}

// ---------------------------------------------------------------------------
// Relative function object: the levelwise pullback of B(T x -) -> R(T x -) <- R
// ---------------------------------------------------------------------------

FRelative f_relative(const GSet& T, const TambaraFunctor& B, const MackeyHom& aug,
                     const TambaraFunctor& R) {
  const GroupPtr& G = B.group();
  if (R.group() != G || !T.G || T.G != G)
    throw std::invalid_argument("f_relative: T, B, R must share one group");
  if (aug.src != &B.mac() || aug.dst != &R.mac())
    throw std::invalid_argument("f_relative: aug must be a transformation B -> R");
  int nc = (int)G->classes().size();

  FRelative out;
  out.T = T;
  out.BT = std::make_shared<FLevel>(f_level(B, T));
  out.RT = std::make_shared<FLevel>(f_level(R, T));
  const TambaraFunctor& BT = *out.BT->BT;
  const TambaraFunctor& RT = *out.RT->BT;

  // ambient direct sum BT + R with the induced Mackey structure
  std::vector<DirectSum> split;
  MackeyFunctor DS = tambara_detail::direct_sum_mackey(BT.mac(), R.mac(), &split,
                                                       "F(T," + B.mac().name + ") ambient");

  // rho_c : BT.level[c] -> RT.level[c], the augmentation applied orbitwise
  // over T x G/rep_c, and eta_c : R.level[c] -> RT.level[c]
  TambaraFunctor TF;
  TF.R.mackey.G = G;
  TF.R.mackey.name = "F(T," + B.mac().name + "|" + R.mac().name + ")";
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    GSet X = orbit_gset(G, rep);
    Product P = product_gset(T, X);
    GSetLevel LB = evaluate_at_gset(B.mac(), P.total);
    GSetLevel LR = evaluate_at_gset(R.mac(), P.total);
    int nb = BT.mac().level[c].ngens();
    std::vector<Vec> rho_cols;
    for (int j = 0; j < nb; ++j) {
      Vec outv(LR.total.ngens(), Int(0));
      for (int o = 0; o < (int)LB.dec.orbits.size(); ++o) {
        int cl = LB.dec.orbits[o].class_id;
        outv = vec_add(outv,
                       LR.sum.inject(o, aug.comp[cl].apply(LB.sum.project(o, unit_vec(nb, j)))));
      }
      rho_cols.push_back(outv);
    }
    Mat rho = Mat::from_cols(rho_cols, RT.mac().level[c].ngens());
    Mat eta = out.RT->unit.comp[c].mat;
    AbHom h(split[c].total, RT.mac().level[c],
            rho * ds_project_mat(split[c], 0) - eta * ds_project_mat(split[c], 1));
    out.lev.push_back(hom_kernel(h));
    TF.R.mackey.level.push_back(out.lev[c].ker);
  }

  auto express = [&](int c, const Vec& y, const char* what) {
    auto e = express_in_subgroup(split[c].total, out.lev[c].incl.mat, y);
    if (!e)
      throw std::logic_error(std::string("f_relative: ") + what +
                             " does not stay in the pullback");
    return *e;
  };
  auto cls = [&](int s) { return G->class_of_subgroup(s); };

  for (const auto& [key, f] : DS.res) {
    int cs = cls(key.first), cd = cls(key.second);
    std::vector<Vec> cols;
    for (int j = 0; j < out.lev[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * out.lev[cs].incl.mat.col(j), "restriction"));
    TF.R.mackey.res.emplace(key, AbHom(TF.R.mackey.level[cs], TF.R.mackey.level[cd],
                                       Mat::from_cols(cols, TF.R.mackey.level[cd].ngens())));
  }
  for (const auto& [key, f] : DS.tr) {
    int cs = cls(key.first), cd = cls(key.second);
    std::vector<Vec> cols;
    for (int j = 0; j < out.lev[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * out.lev[cs].incl.mat.col(j), "transfer"));
    TF.R.mackey.tr.emplace(key, AbHom(TF.R.mackey.level[cs], TF.R.mackey.level[cd],
                                      Mat::from_cols(cols, TF.R.mackey.level[cd].ngens())));
  }
  for (const auto& [key, f] : DS.conj) {
    int cs = cls(key.second), cd = cls(G->conjugate_subgroup(key.first, key.second));
    std::vector<Vec> cols;
    for (int j = 0; j < out.lev[cs].incl.mat.cols(); ++j)
      cols.push_back(express(cd, f.mat * out.lev[cs].incl.mat.col(j), "conjugation"));
    TF.R.mackey.conj.emplace(key, AbHom(TF.R.mackey.level[cs], TF.R.mackey.level[cd],
                                        Mat::from_cols(cols, TF.R.mackey.level[cd].ngens())));
  }

  for (int c = 0; c < nc; ++c) {
    int nf = TF.R.mackey.level[c].ngens();
    int nb = BT.mac().level[c].ngens(), nr = R.mac().level[c].ngens();
    Mat pb = ds_project_mat(split[c], 0), pr = ds_project_mat(split[c], 1);
    Mat ib = ds_inject_mat(split[c], 0, nb), ir = ds_inject_mat(split[c], 1, nr);
    BilinearMap bm;
    bm.a = bm.b = bm.c = TF.R.mackey.level[c];
    bm.table.assign(nf, std::vector<Vec>(nf));
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) {
        Vec xi = out.lev[c].incl.mat.col(i), xj = out.lev[c].incl.mat.col(j);
        Vec big = vec_add(ib * BT.R.multiply(c, pb * xi, pb * xj),
                          ir * R.R.multiply(c, pr * xi, pr * xj));
        bm.table[i][j] = express(c, big, "product");
      }
    TF.R.mul.push_back(bm);
    TF.R.unit.push_back(
        express(c, vec_add(ib * BT.R.unit[c], ir * R.R.unit[c]), "unit"));
  }

  auto stored_norm = [&](int Hs, int Ks, const Vec& x) -> Vec {
    int cH = cls(Hs), cK = cls(Ks);
    Vec big = out.lev[cH].incl.mat * x;
    Vec nb = BT.apply_norm(Hs, Ks, split[cH].project(0, big));
    Vec nr = R.apply_norm(Hs, Ks, split[cH].project(1, big));
    return express(cK, vec_add(split[cK].inject(0, nb), split[cK].inject(1, nr)), "norm");
  };

  out.F = std::make_shared<TambaraFunctor>(std::move(TF));
  attach_norms(*out.F, stored_norm);

  out.to_R.src = &out.F->R.mackey;
  out.to_R.dst = &R.mac();
  for (int c = 0; c < nc; ++c)
    out.to_R.comp.push_back(AbHom(out.F->R.mackey.level[c], R.mac().level[c],
                                  ds_project_mat(split[c], 1) * out.lev[c].incl.mat));
  return out;
}

// ---------------------------------------------------------------------------
// Exponential identity F(T1 x T2, B) ~= F(T2, F(T1, B))
// ---------------------------------------------------------------------------

MackeyHom f_assoc_iso(const Product& T12, const FRelative& F12, const FRelative& F1,
                      const FRelative& F2, const TambaraFunctor& B, const TambaraFunctor& R) {
  const GroupPtr& G = B.group();
  const GSet& T1 = T12.pr1.dst;
  const GSet& T2 = T12.pr2.dst;
  if (!same_gset(F12.T, T12.total) || !same_gset(F1.T, T1) || !same_gset(F2.T, T2))
    throw std::invalid_argument("f_assoc_iso: mismatched parameter sets");
  if (F12.BT->unit.src != &B.mac() || F1.BT->unit.src != &B.mac() ||
      F2.BT->unit.src != &F1.F->mac())
    throw std::invalid_argument("f_assoc_iso: F2 must be built over F(T1, B)");
  int nc = (int)G->classes().size();

  // per-class ambient layouts, reconstructed the way f_relative lays them out
  std::vector<DirectSum> s12, s1, s2;
  for (int c = 0; c < nc; ++c) {
    s12.push_back(direct_sum({F12.BT->BT->mac().level[c], R.mac().level[c]}));
    s1.push_back(direct_sum({F1.BT->BT->mac().level[c], R.mac().level[c]}));
    s2.push_back(direct_sum({F2.BT->BT->mac().level[c], R.mac().level[c]}));
  }

  MackeyHom iso;
  iso.src = &F12.F->mac();
  iso.dst = &F2.F->mac();
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    GSet X = orbit_gset(G, rep);
    Product PA = product_gset(T12.total, X);
    Product P2X = product_gset(T2, X);
    Product PB = product_gset(T1, P2X.total);
    GSetLevel LA = evaluate_at_gset(B.mac(), PA.total);
    GSetLevel LBB = evaluate_at_gset(B.mac(), PB.total);
    GSetLevel LRX = evaluate_at_gset(R.mac(), X);

    // the shuffle (T1 x T2) x X -> T1 x (T2 x X)
    std::vector<int> m(PA.total.size());
    for (int a = 0; a < T1.size(); ++a)
      for (int b = 0; b < T2.size(); ++b)
        for (int x = 0; x < X.size(); ++x)
          m[PA.index[T12.index[a][b]][x]] = PB.index[a][P2X.index[b][x]];
    GMap sigma(PA.total, PB.total, std::move(m));
    Mat shuffle = transport_T(B.mac(), LA, LBB, sigma).mat;

    // value of F(T1, B) at T2 x X, orbit by orbit
    GSetLevel L2F1 = evaluate_at_gset(F1.F->mac(), P2X.total);
    int norb = (int)L2F1.dec.orbits.size();
    std::vector<Mat> bmap(norb), rmap(norb);
    std::vector<int> dcls(norb);
    for (int j = 0; j < norb; ++j) {
      int u = L2F1.dec.orbits[j].rep;
      int Sj = P2X.total.stabilizer(u);
      dcls[j] = L2F1.dec.orbits[j].class_id;
      GSet orbSj = orbit_gset(G, Sj);
      int pd = point_with_stabilizer(orbSj, Sj);
      GMap iota = induced_orbit_map(orbSj, P2X.total, pd, u);
      Product P1Sj = product_gset(T1, orbSj);
      GSetLevel L1Sj = evaluate_at_gset(B.mac(), P1Sj.total);
      GMap idxi = tambara_detail::product_map(P1Sj, PB, gmap_identity(T1), iota);
      bmap[j] = transport_R(B.mac(), L1Sj, LBB, idxi).mat;
      GSetLevel LRSj = evaluate_at_gset(R.mac(), orbSj);
      Mat rtrans = transport_R(R.mac(), LRSj, LRX, gmap_compose(P2X.pr2, iota)).mat;
      rmap[j] = ds_project_mat(LRSj.sum, 0) * rtrans *
                ds_inject_mat(LRX.sum, 0, R.mac().level[c].ngens());
    }

    int n12 = F12.F->mac().level[c].ngens();
    std::vector<Vec> cols;
    for (int i = 0; i < n12; ++i) {
      Vec amb = F12.lev[c].incl.mat.col(i);
      Vec bb = shuffle * s12[c].project(0, amb);
      Vec r = s12[c].project(1, amb);
      Vec out1(L2F1.total.ngens(), Int(0));
      for (int j = 0; j < norb; ++j) {
        int d = dcls[j];
        Vec pair = vec_add(s1[d].inject(0, bmap[j] * bb), s1[d].inject(1, rmap[j] * r));
        auto e = express_in_subgroup(s1[d].total, F1.lev[d].incl.mat, pair);
        if (!e) throw std::logic_error("f_assoc_iso: component escapes the inner pullback");
        out1 = vec_add(out1, L2F1.sum.inject(j, *e));
      }
      Vec big2 = vec_add(s2[c].inject(0, out1), s2[c].inject(1, r));
      auto e2 = express_in_subgroup(s2[c].total, F2.lev[c].incl.mat, big2);
      if (!e2) throw std::logic_error("f_assoc_iso: value escapes the outer pullback");
      cols.push_back(*e2);
    }
    iso.comp.push_back(AbHom(F12.F->mac().level[c], F2.F->mac().level[c],
                             Mat::from_cols(cols, F2.F->mac().level[c].ngens())));
  }
  return iso;
}

// ---------------------------------------------------------------------------
// External transfer F(T, B) -> B
// ---------------------------------------------------------------------------

MackeyHom external_transfer(const FRelative& F, const TambaraFunctor& B) {
  const GroupPtr& G = B.group();
  if (F.BT->unit.src != &B.mac())
    throw std::invalid_argument("external_transfer: F must be built over B");
  int nc = (int)G->classes().size();

  MackeyHom t;
  t.src = &F.F->mac();
  t.dst = &B.mac();
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    GSet X = orbit_gset(G, rep);
    Product P = product_gset(F.T, X);
    GSetLevel LTX = evaluate_at_gset(B.mac(), P.total);
    GSetLevel LX = evaluate_at_gset(B.mac(), X);
    Mat push = ds_project_mat(LX.sum, 0) * transport_T(B.mac(), LTX, LX, P.pr2).mat;
    DirectSum amb = direct_sum({F.BT->BT->mac().level[c], F.to_R.dst->level[c]});
    Mat mat = push * ds_project_mat(amb, 0) * F.lev[c].incl.mat;
    t.comp.push_back(AbHom(F.F->mac().level[c], B.mac().level[c], mat));
  }
  return t;
}

}  // namespace eqalg
