#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

#include "eqalg/mackey.hpp"
#include "mackey_internal.hpp"

namespace eqalg {

// --- box product -------------------------------------------------------------

namespace {
struct BoxLayout {
  std::vector<std::array<int, 3>> gens;        // (S, i, j)
  std::map<std::array<int, 3>, int> index;
};

BoxLayout box_layout(const GroupPtr& G, const MackeyFunctor& M, const MackeyFunctor& N, int K) {
  BoxLayout L;
  int ns = (int)G->subgroups().size();
  for (int S = 0; S < ns; ++S) {
    if (!G->subgroup_contains(K, S)) continue;
    int c = G->class_of_subgroup(S);
    int m = M.level[c].ngens(), n = N.level[c].ngens();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        L.index[{S, i, j}] = (int)L.gens.size();
        L.gens.push_back({S, i, j});
      }
  }
  return L;
}

// presentation of (M box N)(G/K): symbols modulo tensored level relations,
// Frobenius exchange across proper subgroup inclusions, and K-conjugation
Mat box_relations(const GroupPtr& G, const MackeyFunctor& M, const MackeyFunctor& N, int K,
                  const BoxLayout& L) {
  std::vector<Vec> cols;
  int ng = (int)L.gens.size();
  int ns = (int)G->subgroups().size();
  std::vector<int> subs;
  for (int S = 0; S < ns; ++S)
    if (G->subgroup_contains(K, S)) subs.push_back(S);

  for (int S : subs) {
    int c = G->class_of_subgroup(S);
    int m = M.level[c].ngens(), n = N.level[c].ngens();
    const Mat& mrel = M.level[c].rel();
    for (int t = 0; t < mrel.cols(); ++t)
      for (int j = 0; j < n; ++j) {
        Vec v = zero_vec(ng);
        for (int i = 0; i < m; ++i) v[L.index.at({S, i, j})] += mrel(i, t);
        cols.push_back(v);
      }
    const Mat& nrel = N.level[c].rel();
    for (int t = 0; t < nrel.cols(); ++t)
      for (int i = 0; i < m; ++i) {
        Vec v = zero_vec(ng);
        for (int j = 0; j < n; ++j) v[L.index.at({S, i, j})] += nrel(j, t);
        cols.push_back(v);
      }
  }

  for (int S : subs)
    for (int L0 : subs) {
      if (L0 == S || !G->subgroup_contains(S, L0)) continue;
      int cS = G->class_of_subgroup(S), cL = G->class_of_subgroup(L0);
      int mS = M.level[cS].ngens(), nS = N.level[cS].ngens();
      int mL = M.level[cL].ngens(), nL = N.level[cL].ngens();
      const Mat& trM = M.tr_map(L0, S).mat;
      const Mat& resN = N.res_map(S, L0).mat;
      for (int ip = 0; ip < mL; ++ip)
        for (int j = 0; j < nS; ++j) {
          Vec v = zero_vec(ng);
          for (int i = 0; i < mS; ++i) v[L.index.at({S, i, j})] += trM(i, ip);
          for (int jp = 0; jp < nL; ++jp) v[L.index.at({L0, ip, jp})] -= resN(jp, j);
          cols.push_back(v);
        }
      const Mat& trN = N.tr_map(L0, S).mat;
      const Mat& resM = M.res_map(S, L0).mat;
      for (int i = 0; i < mS; ++i)
        for (int jp = 0; jp < nL; ++jp) {
          Vec v = zero_vec(ng);
          for (int j = 0; j < nS; ++j) v[L.index.at({S, i, j})] += trN(j, jp);
          for (int ip = 0; ip < mL; ++ip) v[L.index.at({L0, ip, jp})] -= resM(ip, i);
          cols.push_back(v);
        }
    }

  for (int k : G->subgroup(K)) {
    if (k == G->identity()) continue;
    for (int S : subs) {
      int S2 = G->conjugate_subgroup(k, S);
      const Mat& cm = M.conj_map(k, S).mat;
      const Mat& cn = N.conj_map(k, S).mat;
      int c = G->class_of_subgroup(S);
      int m = M.level[c].ngens(), n = N.level[c].ngens();
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          Vec v = zero_vec(ng);
          v[L.index.at({S, i, j})] += 1;
          for (int a = 0; a < cm.rows(); ++a) {
            if (cm(a, i) == 0) continue;
            for (int b = 0; b < cn.rows(); ++b)
              v[L.index.at({S2, a, b})] -= cm(a, i) * cn(b, j);
          }
          cols.push_back(v);
        }
    }
  }
  return Mat::from_cols(cols, ng);
}
}  // namespace

BoxProduct box_product(const MackeyFunctor& M, const MackeyFunctor& N) {
  const GroupPtr& G = M.G;
  if (N.G != G) throw std::invalid_argument("box_product: different groups");
  int ns = (int)G->subgroups().size();
  int nc = (int)G->classes().size();

  auto layouts = std::make_shared<std::vector<BoxLayout>>(ns);
  auto levels = std::make_shared<std::vector<PresentedAb>>(ns);
  for (int K = 0; K < ns; ++K) {
    (*layouts)[K] = box_layout(G, M, N, K);
    (*levels)[K] = PresentedAb((int)(*layouts)[K].gens.size(),
                               box_relations(G, M, N, K, (*layouts)[K]));
  }

  const MackeyFunctor* Mp = &M;
  const MackeyFunctor* Np = &N;
  MackeyBuilder b;
  b.G = G;
  b.name = M.name + " box " + N.name;
  b.level_of = [levels](int K) { return (*levels)[K]; };
  b.tr_of = [layouts](int S, int K) {
    const BoxLayout& LS = (*layouts)[S];
    const BoxLayout& LK = (*layouts)[K];
    Mat mat((int)LK.gens.size(), (int)LS.gens.size());
    for (int u = 0; u < (int)LS.gens.size(); ++u) mat(LK.index.at(LS.gens[u]), u) = 1;
    return mat;
  };
  b.res_of = [layouts, Mp, Np, G](int K, int H) {
    const BoxLayout& LK = (*layouts)[K];
    const BoxLayout& LH = (*layouts)[H];
    Mat mat((int)LH.gens.size(), (int)LK.gens.size());
    for (int u = 0; u < (int)LK.gens.size(); ++u) {
      auto [S, i, j] = LK.gens[u];
      for (int g : G->double_coset_reps(K, H, S)) {
        int A = intersect_subgroups(G, H, G->conjugate_subgroup(g, S));
        int B = G->conjugate_subgroup(G->inv(g), A);  // = g^-1 H g cap S
        Vec mv = Mp->conj_map(g, B).mat * Mp->res_map(S, B).mat.col(i);
        Vec nv = Np->conj_map(g, B).mat * Np->res_map(S, B).mat.col(j);
        for (int a = 0; a < (int)mv.size(); ++a) {
          if (mv[a] == 0) continue;
          for (int bb = 0; bb < (int)nv.size(); ++bb)
            mat(LH.index.at({A, a, bb}), u) += mv[a] * nv[bb];
        }
      }
    }
    return mat;
  };
  b.conj_of = [layouts, Mp, Np, G](int g, int K) {
    const BoxLayout& LK = (*layouts)[K];
    const BoxLayout& L2 = (*layouts)[G->conjugate_subgroup(g, K)];
    Mat mat((int)L2.gens.size(), (int)LK.gens.size());
    for (int u = 0; u < (int)LK.gens.size(); ++u) {
      auto [S, i, j] = LK.gens[u];
      int S2 = G->conjugate_subgroup(g, S);
      Vec mv = Mp->conj_map(g, S).mat.col(i);
      Vec nv = Np->conj_map(g, S).mat.col(j);
      for (int a = 0; a < (int)mv.size(); ++a) {
        if (mv[a] == 0) continue;
        for (int bb = 0; bb < (int)nv.size(); ++bb)
          mat(L2.index.at({S2, a, bb}), u) += mv[a] * nv[bb];
      }
    }
    return mat;
  };

  BoxProduct out;
  out.P = build_mackey(b);
  out.gens.resize(nc);
  out.gen_index.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int rep = mackey_rep_of_class(G, c);
    out.gens[c] = (*layouts)[rep].gens;
    out.gen_index[c] = (*layouts)[rep].index;
  }
  return out;
}

Vec box_pure(const BoxProduct& box, const MackeyFunctor& M, const MackeyFunctor& N, int K, int S,
             const Vec& m, const Vec& n) {
  const GroupPtr& G = M.G;
  if (!G->subgroup_contains(K, S)) throw std::invalid_argument("box_pure: S not inside K");
  int g = G->conjugator_to_rep(K);
  int c = G->class_of_subgroup(K);
  int S2 = G->conjugate_subgroup(g, S);
  Vec mv = M.conj_map(g, S).mat * m;
  Vec nv = N.conj_map(g, S).mat * n;
  Vec out = zero_vec(box.P.level[c].ngens());
  const auto& idx = box.gen_index[c];
  for (int a = 0; a < (int)mv.size(); ++a) {
    if (mv[a] == 0) continue;
    for (int bb = 0; bb < (int)nv.size(); ++bb) out[idx.at({S2, a, bb})] += mv[a] * nv[bb];
  }
  return out;
}

// --- box structure isomorphisms -----------------------------------------------

BoxUnitIso box_unit_iso(const BoxProduct& box, const BurnsideMackey& A, const MackeyFunctor& N) {
  const GroupPtr& G = N.G;
  int nc = (int)G->classes().size();
  BoxUnitIso iso;
  iso.fwd.src = &box.P;
  iso.fwd.dst = &N;
  iso.bwd.src = &N;
  iso.bwd.dst = &box.P;
  for (int c = 0; c < nc; ++c) {
    int K = mackey_rep_of_class(G, c);
    // forward: [K, S, a (x) n] -> tr^K_S(a . n), with [S'/P] . n = tr^S'_P res^S'_P n
    Mat fmat(N.level[c].ngens(), box.P.level[c].ngens());
    for (int u = 0; u < (int)box.gens[c].size(); ++u) {
      auto [S, i, j] = box.gens[c][u];
      int cS = G->class_of_subgroup(S);
      int Sp = mackey_rep_of_class(G, cS);
      int P = A.basis[cS][i];
      Vec r = N.res_map(Sp, P).mat.col(j);
      Vec v = N.tr_map(P, Sp).mat * r;
      Vec col = N.tr_map(S, K).mat * v;
      fmat.set_col(u, col);
    }
    iso.fwd.comp.emplace_back(box.P.level[c], N.level[c], fmat);
    // backward: n -> [K, K, 1 (x) n]
    Mat bmat(box.P.level[c].ngens(), N.level[c].ngens());
    int i0 = -1;
    for (int i = 0; i < (int)A.basis[c].size(); ++i)
      if (A.basis[c][i] == K) i0 = i;
    if (i0 < 0) throw std::logic_error("box_unit_iso: unit class not found");
    for (int j = 0; j < N.level[c].ngens(); ++j)
      bmat(box.gen_index[c].at({K, i0, j}), j) = 1;
    iso.bwd.comp.emplace_back(N.level[c], box.P.level[c], bmat);
  }
  return iso;
}

MackeyHom box_swap_iso(const BoxProduct& mn, const BoxProduct& nm, const MackeyFunctor& M,
                       const MackeyFunctor& N) {
  const GroupPtr& G = M.G;
  MackeyHom f;
  f.src = &mn.P;
  f.dst = &nm.P;
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    Mat mat(nm.P.level[c].ngens(), mn.P.level[c].ngens());
    for (int u = 0; u < (int)mn.gens[c].size(); ++u) {
      auto [S, i, j] = mn.gens[c][u];
      mat(nm.gen_index[c].at({S, j, i}), u) = 1;
    }
    f.comp.emplace_back(mn.P.level[c], nm.P.level[c], mat);
  }
  return f;
}

MackeyHom box_assoc_iso(const BoxProduct& mn, const BoxProduct& mn_p, const BoxProduct& np,
                        const BoxProduct& m_np, const MackeyFunctor& M, const MackeyFunctor& N,
                        const MackeyFunctor& P) {
  const GroupPtr& G = M.G;
  MackeyHom f;
  f.src = &mn_p.P;
  f.dst = &m_np.P;
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    int K = mackey_rep_of_class(G, c);
    Mat mat(m_np.P.level[c].ngens(), mn_p.P.level[c].ngens());
    for (int u = 0; u < (int)mn_p.gens[c].size(); ++u) {
      auto [S, w, k] = mn_p.gens[c][u];
      int cS = G->class_of_subgroup(S);
      int Sp = mackey_rep_of_class(G, cS);
      auto [T, i, j] = mn.gens[cS][w];
      int cT = G->class_of_subgroup(T);
      // [S, [T, m (x) n] (x) p] -> [T, m (x) [T, n (x) res p]] transferred up
      Vec pvec = P.res_map(Sp, T).mat.col(k);
      Vec npv = box_pure(np, N, P, T, T, unit_vec(N.level[cT].ngens(), j), pvec);
      Vec val =
          box_pure(m_np, M, np.P, Sp, T, unit_vec(M.level[cT].ngens(), i), npv);
      Vec col = m_np.P.tr_map(S, K).mat * val;
      mat.set_col(u, col);
    }
    f.comp.emplace_back(mn_p.P.level[c], m_np.P.level[c], mat);
  }
  return f;
}

bool is_mackey_iso(const MackeyHom& f) {
  for (const AbHom& h : f.comp)
    if (!hom_inverse(h)) return false;
  return true;
}

MackeyHom box_induced_hom(const BoxProduct& box, const MackeyFunctor& M, const MackeyFunctor& N,
                          const DressPairing& pair) {
  const GroupPtr& G = M.G;
  const MackeyFunctor& Q = *pair.Q;
  MackeyHom f;
  f.src = &box.P;
  f.dst = pair.Q;
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    int K = mackey_rep_of_class(G, c);
    Mat mat(Q.level[c].ngens(), box.P.level[c].ngens());
    for (int u = 0; u < (int)box.gens[c].size(); ++u) {
      auto [S, i, j] = box.gens[c][u];
      Vec w = pair.beta(S, i, j);
      mat.set_col(u, Q.tr_map(S, K).mat * w);
    }
    f.comp.emplace_back(box.P.level[c], Q.level[c], mat);
  }
  return f;
}

// --- Green functors ------------------------------------------------------------

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(c.ngens());
  for (int i = 0; i < (int)x.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < (int)y.size(); ++j) {
      if (y[j] == 0) continue;
      out = vec_add(out, vec_scale(x[i] * y[j], table[i][j]));
    }
  }
  return out;
}

bool BilinearMap::well_defined() const {
  if ((int)table.size() != a.ngens()) return false;
  for (const auto& row : table) {
    if ((int)row.size() != b.ngens()) return false;
    for (const Vec& v : row)
      if ((int)v.size() != c.ngens()) return false;
  }
  for (int t = 0; t < a.rel().cols(); ++t)
    for (int j = 0; j < b.ngens(); ++j) {
      Vec v = zero_vec(c.ngens());
      for (int i = 0; i < a.ngens(); ++i) v = vec_add(v, vec_scale(a.rel()(i, t), table[i][j]));
      if (!c.is_zero(v)) return false;
    }
  for (int t = 0; t < b.rel().cols(); ++t)
    for (int i = 0; i < a.ngens(); ++i) {
      Vec v = zero_vec(c.ngens());
      for (int j = 0; j < b.ngens(); ++j) v = vec_add(v, vec_scale(b.rel()(j, t), table[i][j]));
      if (!c.is_zero(v)) return false;
    }
  return true;
}

Report validate_green(const GreenData& R) {
  Report rep;
  rep.merge(validate_mackey(R.mackey));
  const GroupPtr& G = R.mackey.G;
  int nc = (int)G->classes().size();

  bool shape = (int)R.mul.size() == nc && (int)R.unit.size() == nc;
  for (int c = 0; c < nc && shape; ++c)
    shape = R.mul[c].well_defined() && (int)R.unit[c].size() == R.mackey.level[c].ngens();
  rep.add("green.bilinear", "multiplication tables are well-defined and bilinear", shape,
          shape ? "" : "bad table shape or ill-defined");
  if (!shape) return rep;

  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c) {
      const PresentedAb& L = R.mackey.level[c];
      for (int i = 0; i < L.ngens() && pass; ++i)
        for (int j = 0; j < L.ngens(); ++j)
          if (!L.equal(R.mul[c].table[i][j], R.mul[c].table[j][i])) {
            pass = false;
            w = "class " + std::to_string(c);
            break;
          }
    }
    rep.add("green.comm", "multiplication is commutative", pass, w);
  }
  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c) {
      const PresentedAb& L = R.mackey.level[c];
      for (int i = 0; i < L.ngens() && pass; ++i)
        for (int j = 0; j < L.ngens() && pass; ++j)
          for (int k = 0; k < L.ngens(); ++k) {
            Vec lhs = R.mul[c].apply(R.mul[c].table[i][j], unit_vec(L.ngens(), k));
            Vec rhs = R.mul[c].apply(unit_vec(L.ngens(), i), R.mul[c].table[j][k]);
            if (!L.equal(lhs, rhs)) {
              pass = false;
              w = "class " + std::to_string(c);
              break;
            }
          }
    }
    rep.add("green.assoc", "multiplication is associative", pass, w);
  }
  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c) {
      const PresentedAb& L = R.mackey.level[c];
      for (int j = 0; j < L.ngens(); ++j)
        if (!L.equal(R.mul[c].apply(R.unit[c], unit_vec(L.ngens(), j)), unit_vec(L.ngens(), j))) {
          pass = false;
          w = "class " + std::to_string(c);
          break;
        }
    }
    rep.add("green.unit", "unit element is neutral", pass, w);
  }
  // res and conj are ring maps
  {
    bool pass = true;
    std::string w;
    auto ring_map = [&](const Mat& F, int c1, int c2, const std::string& tag) {
      const PresentedAb& L1 = R.mackey.level[c1];
      const PresentedAb& L2 = R.mackey.level[c2];
      if (!L2.equal(F * R.unit[c1], R.unit[c2])) {
        pass = false;
        w = tag + " unit";
        return;
      }
      for (int i = 0; i < L1.ngens() && pass; ++i)
        for (int j = 0; j < L1.ngens(); ++j) {
          Vec lhs = F * R.mul[c1].table[i][j];
          Vec rhs = R.mul[c2].apply(F.col(i), F.col(j));
          if (!L2.equal(lhs, rhs)) {
            pass = false;
            w = tag + " products";
            break;
          }
        }
    };
    for (const auto& kv : R.mackey.res) {
      if (!pass) break;
      ring_map(kv.second.mat, G->class_of_subgroup(kv.first.first),
               G->class_of_subgroup(kv.first.second),
               "res(" + std::to_string(kv.first.first) + "," + std::to_string(kv.first.second) +
                   ")");
    }
    for (const auto& kv : R.mackey.conj) {
      if (!pass) break;
      ring_map(kv.second.mat, G->class_of_subgroup(kv.first.second),
               G->class_of_subgroup(G->conjugate_subgroup(kv.first.first, kv.first.second)),
               "conj(" + G->name(kv.first.first) + "," + std::to_string(kv.first.second) + ")");
    }
    rep.add("green.res_conj_ring", "res and conj are unital ring homomorphisms", pass, w);
  }
  // Frobenius reciprocity
  {
    bool pass = true;
    std::string w;
    for (const auto& kv : R.mackey.tr) {
      int S = kv.first.first, K = kv.first.second;
      int cS = G->class_of_subgroup(S), cK = G->class_of_subgroup(K);
      const Mat& t = kv.second.mat;
      const Mat& r = R.mackey.res.at({K, S}).mat;
      const PresentedAb& LK = R.mackey.level[cK];
      for (int a = 0; a < LK.ngens() && pass; ++a)
        for (int bq = 0; bq < R.mackey.level[cS].ngens(); ++bq) {
          Vec lhs = R.mul[cK].apply(unit_vec(LK.ngens(), a), t.col(bq));
          Vec rhs = t * R.mul[cS].apply(r.col(a), unit_vec(R.mackey.level[cS].ngens(), bq));
          if (!LK.equal(lhs, rhs)) {
            pass = false;
            w = "tr(" + std::to_string(S) + "," + std::to_string(K) + ")";
            break;
          }
        }
      if (!pass) break;
    }
    rep.add("green.frobenius", "a . tr(b) = tr(res(a) . b)", pass, w);
  }
  return rep;
}

Report validate_green_module(const GreenModule& Mo) {
  Report rep;
  if (!Mo.ring) {
    rep.add("module.ring", "module carries a Green functor reference", false, "null ring");
    return rep;
  }
  const GreenData& R = *Mo.ring;
  rep.merge(validate_mackey(Mo.mod));
  const GroupPtr& G = R.mackey.G;
  int nc = (int)G->classes().size();

  bool shape = Mo.mod.G == G && (int)Mo.act.size() == nc;
  for (int c = 0; c < nc && shape; ++c) shape = Mo.act[c].well_defined();
  rep.add("module.bilinear", "action tables are well-defined and bilinear", shape,
          shape ? "" : "bad table shape or ill-defined");
  if (!shape) return rep;

  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c) {
      const PresentedAb& L = Mo.mod.level[c];
      for (int m = 0; m < L.ngens(); ++m)
        if (!L.equal(Mo.act[c].apply(R.unit[c], unit_vec(L.ngens(), m)), unit_vec(L.ngens(), m))) {
          pass = false;
          w = "class " + std::to_string(c);
          break;
        }
    }
    rep.add("module.unit", "the unit acts as the identity", pass, w);
  }
  {
    bool pass = true;
    std::string w;
    for (int c = 0; c < nc && pass; ++c) {
      const PresentedAb& LR = R.mackey.level[c];
      const PresentedAb& LM = Mo.mod.level[c];
      for (int r = 0; r < LR.ngens() && pass; ++r)
        for (int s = 0; s < LR.ngens() && pass; ++s)
          for (int m = 0; m < LM.ngens(); ++m) {
            Vec lhs = Mo.act[c].apply(R.mul[c].table[r][s], unit_vec(LM.ngens(), m));
            Vec rhs = Mo.act[c].apply(unit_vec(LR.ngens(), r), Mo.act[c].table[s][m]);
            if (!LM.equal(lhs, rhs)) {
              pass = false;
              w = "class " + std::to_string(c);
              break;
            }
          }
    }
    rep.add("module.assoc", "(r s) m = r (s m)", pass, w);
  }
  {
    bool pass = true;
    std::string w;
    auto compat = [&](const Mat& FR, const Mat& FM, int c1, int c2, const std::string& tag) {
      const PresentedAb& L2 = Mo.mod.level[c2];
      for (int r = 0; r < R.mackey.level[c1].ngens() && pass; ++r)
        for (int m = 0; m < Mo.mod.level[c1].ngens(); ++m) {
          Vec lhs = FM * Mo.act[c1].table[r][m];
          Vec rhs = Mo.act[c2].apply(FR.col(r), FM.col(m));
          if (!L2.equal(lhs, rhs)) {
            pass = false;
            w = tag;
            break;
          }
        }
    };
    for (const auto& kv : Mo.mod.res) {
      if (!pass) break;
      compat(R.mackey.res.at(kv.first).mat, kv.second.mat, G->class_of_subgroup(kv.first.first),
             G->class_of_subgroup(kv.first.second), "res");
    }
    for (const auto& kv : Mo.mod.conj) {
      if (!pass) break;
      compat(R.mackey.conj.at(kv.first).mat, kv.second.mat, G->class_of_subgroup(kv.first.second),
             G->class_of_subgroup(G->conjugate_subgroup(kv.first.first, kv.first.second)), "conj");
    }
    rep.add("module.res_conj", "res and conj are action maps", pass, w);
  }
  {
    bool pass = true;
    std::string w;
    for (const auto& kv : Mo.mod.tr) {
      int S = kv.first.first, K = kv.first.second;
      int cS = G->class_of_subgroup(S), cK = G->class_of_subgroup(K);
      const Mat& tM = kv.second.mat;
      const Mat& tR = R.mackey.tr.at(kv.first).mat;
      const Mat& rM = Mo.mod.res.at({K, S}).mat;
      const Mat& rR = R.mackey.res.at({K, S}).mat;
      const PresentedAb& LK = Mo.mod.level[cK];
      for (int r = 0; r < R.mackey.level[cK].ngens() && pass; ++r)
        for (int m = 0; m < Mo.mod.level[cS].ngens(); ++m) {
          Vec lhs = Mo.act[cK].apply(unit_vec(R.mackey.level[cK].ngens(), r), tM.col(m));
          Vec rhs = tM * Mo.act[cS].apply(rR.col(r), unit_vec(Mo.mod.level[cS].ngens(), m));
          if (!LK.equal(lhs, rhs)) {
            pass = false;
            w = "r tr(m) at tr(" + std::to_string(S) + "," + std::to_string(K) + ")";
            break;
          }
        }
      for (int r = 0; r < R.mackey.level[cS].ngens() && pass; ++r)
        for (int m = 0; m < Mo.mod.level[cK].ngens(); ++m) {
          Vec lhs = Mo.act[cK].apply(tR.col(r), unit_vec(Mo.mod.level[cK].ngens(), m));
          Vec rhs = tM * Mo.act[cS].apply(unit_vec(R.mackey.level[cS].ngens(), r), rM.col(m));
          if (!LK.equal(lhs, rhs)) {
            pass = false;
            w = "tr(r) m at tr(" + std::to_string(S) + "," + std::to_string(K) + ")";
            break;
          }
        }
      if (!pass) break;
    }
    rep.add("module.frobenius", "r . tr(m) = tr(res(r) . m) and tr(r) . m = tr(r . res(m))", pass,
            w);
  }
  return rep;
}

BurnsideGreen burnside_green(const GroupPtr& G) {
  BurnsideGreen out;
  BurnsideMackey bm = burnside_mackey_data(G);
  out.basis = bm.basis;
  out.R.mackey = bm.M;
  int nc = (int)G->classes().size();
  for (int c = 0; c < nc; ++c) {
    int K = mackey_rep_of_class(G, c);
    const std::vector<int>& basis = bm.basis[c];
    auto slot_of = [&](int P) {
      int mn = P;
      for (int k : G->subgroup(K)) mn = std::min(mn, G->conjugate_subgroup(k, P));
      auto it = std::find(basis.begin(), basis.end(), mn);
      if (it == basis.end()) throw std::logic_error("burnside_green: class rep not in basis");
      return (int)(it - basis.begin());
    };
    BilinearMap mul;
    mul.a = mul.b = mul.c = bm.M.level[c];
    mul.table.assign(basis.size(), std::vector<Vec>(basis.size(), zero_vec((int)basis.size())));
    for (int i = 0; i < (int)basis.size(); ++i)
      for (int j = 0; j < (int)basis.size(); ++j)
        for (int g : G->double_coset_reps(K, basis[i], basis[j])) {
          int A = intersect_subgroups(G, basis[i], G->conjugate_subgroup(g, basis[j]));
          mul.table[i][j][slot_of(A)] += 1;
        }
    out.R.mul.push_back(mul);
    out.R.unit.push_back(unit_vec((int)basis.size(), slot_of(K)));
  }
  return out;
}

GreenModule green_as_module(const GreenData& R) {
  GreenModule m;
  m.ring = &R;
  m.mod = R.mackey;
  m.act = R.mul;
  return m;
}

// --- box product over a Green functor ------------------------------------------

BoxOver box_over(const GreenData& S, const GreenModule& M, const GreenModule& N) {
  if (!M.ring || !N.ring) throw std::invalid_argument("box_over: modules lack a ring");
  const GroupPtr& G = S.mackey.G;
  BoxOver out;
  out.S = &S;
  out.box = box_product(M.mod, N.mod);
  MackeyFunctor& P = out.box.P;

  int nc = (int)G->classes().size();
  std::vector<PresentedAb> newlev(nc);
  for (int c = 0; c < nc; ++c) {
    int K = mackey_rep_of_class(G, c);
    std::vector<Vec> extra;
    int ng = P.level[c].ngens();
    for (int T = 0; T < (int)G->subgroups().size(); ++T) {
      if (!G->subgroup_contains(K, T)) continue;
      int cT = G->class_of_subgroup(T);
      int ngS = S.mackey.level[cT].ngens();
      int ngM = M.mod.level[cT].ngens();
      int ngN = N.mod.level[cT].ngens();
      for (int s = 0; s < ngS; ++s)
        for (int m = 0; m < ngM; ++m)
          for (int n = 0; n < ngN; ++n) {
            const Vec& u = M.act[cT].table[s][m];  // s . m
            const Vec& v = N.act[cT].table[s][n];  // s . n
            Vec rel = zero_vec(ng);
            for (int a = 0; a < ngM; ++a) rel[out.box.gen_index[c].at({T, a, n})] += u[a];
            for (int bq = 0; bq < ngN; ++bq) rel[out.box.gen_index[c].at({T, m, bq})] -= v[bq];
            extra.push_back(rel);
          }
    }
    newlev[c] = quotient_presentation(P.level[c], Mat::from_cols(extra, ng)).quot;
  }

  auto retype = [&](std::map<std::pair<int, int>, AbHom>& table, auto classes_of) {
    for (auto& kv : table) {
      auto [c1, c2] = classes_of(kv.first);
      AbHom h(newlev[c1], newlev[c2], kv.second.mat);
      if (!h.well_defined())
        throw std::logic_error("box_over: structure map does not descend to the quotient");
      kv.second = std::move(h);
    }
  };
  retype(P.res, [&](std::pair<int, int> k) {
    return std::pair<int, int>{G->class_of_subgroup(k.first), G->class_of_subgroup(k.second)};
  });
  retype(P.tr, [&](std::pair<int, int> k) {
    return std::pair<int, int>{G->class_of_subgroup(k.first), G->class_of_subgroup(k.second)};
  });
  retype(P.conj, [&](std::pair<int, int> k) {
    return std::pair<int, int>{G->class_of_subgroup(k.second),
                               G->class_of_subgroup(G->conjugate_subgroup(k.first, k.second))};
  });
  P.level = newlev;
  P.name = M.mod.name + " box_" + S.mackey.name + " " + N.mod.name;
  return out;
}

// --- internal hom of modules ----------------------------------------------------

namespace {
struct IHLevel {
  RestrictedMackey rm, rn;
  HomLayout lay;
  SolutionSpace sols;
};

// G-subgroup (contained in the subgroup H stands for) as a subgroup of H.group
int to_subgroup_of(const GroupPtr& G, const SubgroupAsGroup& H, int g_sub) {
  Subgroup s;
  for (int x : G->subgroup(g_sub)) s.push_back(H.from_parent.at(x));
  std::sort(s.begin(), s.end());
  int idx = H.group->subgroup_index(s);
  if (idx < 0) throw std::logic_error("to_subgroup_of: subgroup not found in subgroup lattice");
  return idx;
}

// matrix of the component of a hom (given per-H-class) at the concrete
// H-subgroup Pp, as a map M.level[cG(emb P)] -> N.level[cG(emb P)]
Mat component_at(const GroupPtr& G, const MackeyFunctor& M, const MackeyFunctor& N,
                 const SubgroupAsGroup& H, const std::vector<Mat>& mats, int Pp) {
  const GroupPtr& HG = H.group;
  int d = HG->class_of_subgroup(Pp);
  int kp = HG->conjugator_to_rep(Pp);
  int g = H.embed[kp];
  int embP = embed_subgroup(G, H, Pp);
  int embRep = embed_subgroup(G, H, HG->classes()[d].rep);
  return N.conj_map(G->inv(g), embRep).mat * (mats[d] * M.conj_map(g, embP).mat);
}
}  // namespace

InternalHomModule internal_hom_module(const GreenData& R, const GreenModule& M,
                                      const GreenModule& N) {
  const GroupPtr& G = R.mackey.G;
  int ns = (int)G->subgroups().size();
  int nc = (int)G->classes().size();

  auto per = std::make_shared<std::vector<IHLevel>>(ns);
  for (int Hs = 0; Hs < ns; ++Hs) {
    IHLevel& ld = (*per)[Hs];
    ld.rm = restrict_mackey(M.mod, Hs);
    ld.rn = restrict_mackey(N.mod, Hs);
    ld.lay = hom_layout(ld.rm.M, ld.rn.M);
    auto cons = mackey_hom_constraints(ld.rm.M, ld.rn.M, ld.lay);

    const GroupPtr& HG = ld.rm.H.group;
    for (int d = 0; d < (int)HG->classes().size(); ++d) {
      int P = embed_subgroup(G, ld.rm.H, HG->classes()[d].rep);
      int cP = G->class_of_subgroup(P);
      int ngR = R.mackey.level[cP].ngens();
      int ngM = M.mod.level[cP].ngens();
      int ngN = N.mod.level[cP].ngens();
      const Mat& nrel = N.mod.level[cP].rel();
      for (int s = 0; s < ngR; ++s)
        for (int m = 0; m < ngM; ++m) {
          const Vec& u = M.act[cP].table[s][m];
          Congruence cg;
          cg.C = Mat(ngN, ld.lay.total);
          for (int a = 0; a < ngN; ++a) {
            for (int i = 0; i < ngM; ++i) cg.C(a, ld.lay.offset[d] + a * ngM + i) += u[i];
            for (int bq = 0; bq < ngN; ++bq)
              cg.C(a, ld.lay.offset[d] + bq * ngM + m) -= N.act[cP].table[s][bq][a];
          }
          cg.modrel = nrel;
          cons.push_back(cg);
        }
    }
    ld.sols = solve_homogeneous(ld.lay.total, cons, zero_hom_lattice(ld.rm.M, ld.rn.M, ld.lay));
    if (ld.sols.group.ngens() != ld.sols.basis.cols())
      throw std::logic_error("internal_hom_module: unexpected solution presentation");
  }

  auto mats_from = [per](int Hs, const Vec& z) {
    const IHLevel& ld = (*per)[Hs];
    std::vector<Mat> mats;
    for (int d = 0; d < (int)ld.rm.M.level.size(); ++d) {
      int m = ld.rm.M.level[d].ngens(), n = ld.rn.M.level[d].ngens();
      Mat mat(n, m);
      for (int a = 0; a < n; ++a)
        for (int i = 0; i < m; ++i) mat(a, i) = z[ld.lay.offset[d] + a * m + i];
      mats.push_back(mat);
    }
    return mats;
  };
  auto gen_mats = [per, mats_from](int Hs, int t) {
    return mats_from(Hs, (*per)[Hs].sols.basis.col(t));
  };

  const MackeyFunctor* Mm = &M.mod;
  const MackeyFunctor* Nm = &N.mod;

  MackeyBuilder b;
  b.G = G;
  b.name = "hom(" + M.mod.name + "," + N.mod.name + ")";
  b.level_of = [per](int Hs) { return (*per)[Hs].sols.group; };
  b.res_of = [per, G, gen_mats, Mm, Nm](int K, int L) {
    const IHLevel& lk = (*per)[K];
    const IHLevel& ll = (*per)[L];
    std::vector<Vec> cols;
    for (int t = 0; t < lk.sols.group.ngens(); ++t) {
      std::vector<Mat> mats = gen_mats(K, t);
      Vec z = zero_vec(ll.lay.total);
      const GroupPtr& LG = ll.rm.H.group;
      for (int d2 = 0; d2 < (int)LG->classes().size(); ++d2) {
        int embedded = embed_subgroup(G, ll.rm.H, LG->classes()[d2].rep);
        Mat psi = component_at(G, *Mm, *Nm, lk.rm.H, mats, to_subgroup_of(G, lk.rm.H, embedded));
        int m = psi.cols();
        for (int a = 0; a < psi.rows(); ++a)
          for (int i = 0; i < m; ++i) z[ll.lay.offset[d2] + a * m + i] = psi(a, i);
      }
      cols.push_back(ll.sols.express(z));
    }
    return Mat::from_cols(cols, ll.sols.group.ngens());
  };
  b.conj_of = [per, G, gen_mats, Mm, Nm](int g, int Hs) {
    int H2 = G->conjugate_subgroup(g, Hs);
    const IHLevel& lh = (*per)[Hs];
    const IHLevel& l2 = (*per)[H2];
    std::vector<Vec> cols;
    for (int t = 0; t < lh.sols.group.ngens(); ++t) {
      std::vector<Mat> mats = gen_mats(Hs, t);
      Vec z = zero_vec(l2.lay.total);
      const GroupPtr& HG2 = l2.rm.H.group;
      for (int d2 = 0; d2 < (int)HG2->classes().size(); ++d2) {
        int Qstar = embed_subgroup(G, l2.rm.H, HG2->classes()[d2].rep);
        int Q = G->conjugate_subgroup(G->inv(g), Qstar);
        Mat theta = component_at(G, *Mm, *Nm, lh.rm.H, mats, to_subgroup_of(G, lh.rm.H, Q));
        Mat psi = Nm->conj_map(g, Q).mat * (theta * Mm->conj_map(G->inv(g), Qstar).mat);
        int m = psi.cols();
        for (int a = 0; a < psi.rows(); ++a)
          for (int i = 0; i < m; ++i) z[l2.lay.offset[d2] + a * m + i] = psi(a, i);
      }
      cols.push_back(l2.sols.express(z));
    }
    return Mat::from_cols(cols, l2.sols.group.ngens());
  };
  b.tr_of = [per, G, gen_mats, Mm, Nm](int Hs, int K) {
    const IHLevel& lh = (*per)[Hs];
    const IHLevel& lk = (*per)[K];
    std::vector<Vec> cols;
    for (int t = 0; t < lh.sols.group.ngens(); ++t) {
      std::vector<Mat> mats = gen_mats(Hs, t);
      Vec z = zero_vec(lk.lay.total);
      const GroupPtr& KG = lk.rm.H.group;
      for (int d2 = 0; d2 < (int)KG->classes().size(); ++d2) {
        int Sstar = embed_subgroup(G, lk.rm.H, KG->classes()[d2].rep);
        int cS = G->class_of_subgroup(Sstar);
        Mat psi(Nm->level[cS].ngens(), Mm->level[cS].ngens());
        for (int g : G->double_coset_reps(K, Sstar, Hs)) {
          int A = intersect_subgroups(G, Sstar, G->conjugate_subgroup(g, Hs));
          int Bq = G->conjugate_subgroup(G->inv(g), A);
          Mat theta = component_at(G, *Mm, *Nm, lh.rm.H, mats, to_subgroup_of(G, lh.rm.H, Bq));
          Mat term = Nm->tr_map(A, Sstar).mat *
                     (Nm->conj_map(g, Bq).mat * theta * Mm->conj_map(G->inv(g), A).mat) *
                     Mm->res_map(Sstar, A).mat;
          psi = psi + term;
        }
        int m = psi.cols();
        for (int a = 0; a < psi.rows(); ++a)
          for (int i = 0; i < m; ++i) z[lk.lay.offset[d2] + a * m + i] = psi(a, i);
      }
      cols.push_back(lk.sols.express(z));
    }
    return Mat::from_cols(cols, lk.sols.group.ngens());
  };

  InternalHomModule out;
  out.H = build_mackey(b);
  out.data.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const IHLevel& ld = (*per)[mackey_rep_of_class(G, c)];
    out.data[c].rm = ld.rm;
    out.data[c].rn = ld.rn;
    out.data[c].offset = ld.lay.offset;
    out.data[c].sols = ld.sols;
  }
  return out;
}

std::vector<Mat> InternalHomModule::element_maps(int c, const Vec& coords) const {
  const InternalHomLevel& ld = data.at(c);
  Vec z = ld.sols.basis * coords;
  std::vector<Mat> mats;
  for (int d = 0; d < (int)ld.rm.M.level.size(); ++d) {
    int m = ld.rm.M.level[d].ngens(), n = ld.rn.M.level[d].ngens();
    Mat mat(n, m);
    int off = ld.offset[d];
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i) mat(a, i) = z[off + a * m + i];
    mats.push_back(mat);
  }
  return mats;
}

}  // namespace eqalg
