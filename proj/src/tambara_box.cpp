#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqalg/tambara.hpp"
#include "tambara_internal.hpp"

// The box square R box_S R carries norms because every element of a box level
// is a sum of transfers of pure tensors, and the Tambara distributivity laws
// determine the norm of such a sum: norms of pure tensors are componentwise
// norms in R, a norm of a transfer passes through the exponential diagram of
// the transfer, and a norm of a sum passes through the exponential diagram of
// the fold map.  The engine below runs that expansion on formal atom lists
// [A, u (x) v] (a transfer tr^Amb_A of a pure tensor) and only at the very end
// projects back into box coordinates.  The recursion terminates because every
// recursive call either lowers the norm degree [K:H] (mixed-section orbits of
// the fold diagram have strictly smaller fibers) or keeps the degree and
// shortens the atom list.

namespace eqalg {
namespace {

Vec unit_vec(int n, int i, const Int& c) {
  Vec v(n, Int(0));
  v[i] = c;
  return v;
}

// tr^{Amb}_{sub}(u (x) v): u, v stored coordinates tagged `sub` in the levels
// of R at class(sub).  The ambient subgroup is carried by the caller.
struct Atom {
  int sub;
  Vec u, v;
};
using AtomList = std::vector<Atom>;

struct NormEngine {
  const TambaraFunctor* R = nullptr;
  GroupPtr G;
  long steps = 0;

  std::map<int, GSet> orbit_cache;
  std::map<int, int> base_cache;
  std::map<std::array<int, 3>, ExponentialDiagram> single_ed_cache;
  struct SumED {
    ExponentialDiagram ed;
    std::vector<std::pair<int, int>> from;  // total point of X|_|X -> (copy, x)
  };
  std::map<std::pair<int, int>, SumED> sum_ed_cache;

  const MackeyFunctor& M() const { return R->R.mackey; }

  void tick() {
    if (++steps > 5000000)
      throw std::logic_error("box norm expansion exceeded its step budget");
  }

  const GSet& orbit(int S) {
    auto it = orbit_cache.find(S);
    if (it == orbit_cache.end()) {
      it = orbit_cache.emplace(S, orbit_gset(G, S)).first;
      base_cache[S] = point_with_stabilizer(it->second, S);
    }
    return it->second;
  }
  int base(int S) {
    orbit(S);
    return base_cache.at(S);
  }
  GMap proj(int S, int K) {
    return induced_orbit_map(orbit(S), orbit(K), base(S), base(K));
  }

  // some group element moving `from` to `to` inside a transitive G-set
  int mover(const GSet& X, int from, int to) const {
    for (int g = 0; g < G->size(); ++g)
      if (X.apply(g, from) == to) return g;
    throw std::logic_error("mover: points in different orbits");
  }

  Atom conj_atom(int g, const Atom& a) const {
    AbHom c = M().conj_map(g, a.sub);
    return {G->conjugate_subgroup(g, a.sub), c.apply(a.u), c.apply(a.v)};
  }

  // res^{Amb}_C tr^{Amb}_{a.sub}(u (x) v) as a list at ambient C
  AtomList res_atom(int Amb, int C, const Atom& a) {
    AtomList out;
    for (int g : G->double_coset_reps(Amb, C, a.sub)) {
      tick();
      int D = intersect_subgroups(G, C, G->conjugate_subgroup(g, a.sub));
      int B = G->conjugate_subgroup(G->inv(g), D);
      Mat cr = M().conj_map(g, B).mat * M().res_map(a.sub, B).mat;
      out.push_back({D, cr * a.u, cr * a.v});
    }
    return out;
  }
  AtomList res_list(int Amb, int C, const AtomList& L) {
    AtomList out;
    for (const Atom& a : L) {
      AtomList r = res_atom(Amb, C, a);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  // tr_{a.sub}(u_a (x) v_a) . tr_{b.sub}(u_b (x) v_b) at a common ambient
  AtomList mul_atoms(int Amb, const Atom& a, const Atom& b) {
    AtomList out;
    for (int g : G->double_coset_reps(Amb, a.sub, b.sub)) {
      tick();
      int D = intersect_subgroups(G, a.sub, G->conjugate_subgroup(g, b.sub));
      int B = G->conjugate_subgroup(G->inv(g), D);
      Mat cr = M().conj_map(g, B).mat * M().res_map(b.sub, B).mat;
      Mat ra = M().res_map(a.sub, D).mat;
      int cd = G->class_of_subgroup(D);
      out.push_back({D, R->R.multiply(cd, ra * a.u, cr * b.u),
                     R->R.multiply(cd, ra * a.v, cr * b.v)});
    }
    return out;
  }
  AtomList mul_lists(int Amb, const AtomList& L1, const AtomList& L2) {
    AtomList out;
    for (const Atom& a : L1)
      for (const Atom& b : L2) {
        AtomList p = mul_atoms(Amb, a, b);
        out.insert(out.end(), p.begin(), p.end());
      }
    return out;
  }

  AtomList unit_list(int Amb) const {
    int c = G->class_of_subgroup(Amb);
    return {{Amb, R->R.unit[c], R->R.unit[c]}};
  }

  const ExponentialDiagram& single_ed(int A, int H, int K) {
    std::array<int, 3> key{A, H, K};
    auto it = single_ed_cache.find(key);
    if (it == single_ed_cache.end())
      it = single_ed_cache.emplace(key, exponential_diagram(proj(H, K), proj(A, H))).first;
    return it->second;
  }
  const SumED& sum_ed(int H, int K) {
    auto it = sum_ed_cache.find({H, K});
    if (it == sum_ed_cache.end()) {
      const GSet& X = orbit(H);
      Coproduct du = disjoint_union({X, X});
      std::vector<int> fold(du.total.size());
      SumED s{ExponentialDiagram{}, std::vector<std::pair<int, int>>(du.total.size())};
      for (int copy = 0; copy < 2; ++copy)
        for (int x = 0; x < X.size(); ++x) {
          int p = du.inject[copy].map[x];
          fold[p] = x;
          s.from[p] = {copy, x};
        }
      s.ed = exponential_diagram(proj(H, K), GMap(du.total, X, fold));
      it = sum_ed_cache.emplace(std::make_pair(H, K), std::move(s)).first;
    }
    return it->second;
  }

  // Sum over the kept orbits of ed.pi of the transfer-of-norm-of-restriction
  // piece: per orbit rep t, the product over the suborbits of the g'-fiber of
  // norm_atoms applied to the value list at the evaluation point, translated
  // back to the base point of G/K.  value_at(q, C) is the value of the input
  // element at q in ed.h.src, restricted to C <= Stab(q), as a list at
  // ambient C.
  AtomList ed_apply(const ExponentialDiagram& ed, int K,
                    const std::function<bool(const std::vector<int>&)>& keep,
                    const std::function<AtomList(int, int)>& value_at) {
    OrbitDecomposition dpi = orbit_decompose(ed.pi);
    const GSet& T = ed.g.dst;
    int baseK = base(K);
    AtomList out;
    for (const Orbit& ot : dpi.orbits) {
      int t = ot.rep;
      std::vector<int> fiber;
      for (int p = 0; p < ed.pb.size(); ++p)
        if (ed.g_prime.map[p] == t) fiber.push_back(p);
      std::vector<int> imgs;
      imgs.reserve(fiber.size());
      for (int p : fiber) imgs.push_back(ed.f_prime.map[p]);
      if (!keep(imgs)) continue;
      int T0 = ed.pi.stabilizer(t);
      SubOrbits so = orbits_under_subgroup(ed.pb, T0);
      AtomList acc = unit_list(T0);
      for (int u : so.reps) {
        if (ed.g_prime.map[u] != t) continue;
        int Su = ed.pb.stabilizer_in(T0, u);
        acc = mul_lists(T0, acc, norm_atoms(Su, T0, value_at(ed.f_prime.map[u], Su)));
      }
      int b = mover(T, baseK, ed.h_prime.map[t]);
      int bi = G->inv(b);
      for (const Atom& a : acc) out.push_back(conj_atom(bi, a));
    }
    return out;
  }

  // N^K_H of the element represented by L (ambient H), as a list at ambient K.
  AtomList norm_atoms(int H, int K, const AtomList& L) {
    tick();
    if (H == K) return L;
    if (L.empty()) return {};
    if (L.size() == 1) {
      const Atom& a = L[0];
      if (a.sub == H)
        return {{K, R->apply_norm(H, K, a.u), R->apply_norm(H, K, a.v)}};
      // norm of a transfer: exponential diagram of G/A -> G/H -> G/K.  The
      // input is the pure tensor at level G/A, so every evaluation below is
      // a restriction of a pure value and the inner norms are immediate.
      const ExponentialDiagram& ed = single_ed(a.sub, H, K);
      const GSet& XA = orbit(a.sub);
      int baseA = base(a.sub);
      auto value_at = [&](int q, int C) -> AtomList {
        int g0 = mover(XA, baseA, q);
        return res_list(G->conjugate_subgroup(g0, a.sub), C, {conj_atom(g0, a)});
      };
      return ed_apply(ed, K, [](const std::vector<int>&) { return true; }, value_at);
    }
    // norm of a sum: head + rest through the fold map's exponential diagram.
    // The two single-copy section orbits contribute exactly N(head) and
    // N(rest); the mixed-section orbits have fibers that split between the
    // copies, so their suborbits are strictly smaller than [K:H].
    AtomList head{L[0]};
    AtomList rest(L.begin() + 1, L.end());
    AtomList out = norm_atoms(H, K, head);
    AtomList nr = norm_atoms(H, K, rest);
    out.insert(out.end(), nr.begin(), nr.end());
    const SumED& sed = sum_ed(H, K);
    const GSet& X = orbit(H);
    int baseH = base(H);
    auto keep = [&](const std::vector<int>& imgs) {
      bool c0 = false, c1 = false;
      for (int q : imgs) (sed.from[q].first ? c1 : c0) = true;
      return c0 && c1;
    };
    auto value_at = [&](int q, int C) -> AtomList {
      auto [copy, x] = sed.from[q];
      int g0 = mover(X, baseH, x);
      AtomList moved;
      for (const Atom& a : (copy ? rest : head)) moved.push_back(conj_atom(g0, a));
      return res_list(G->conjugate_subgroup(g0, H), C, moved);
    };
    AtomList mix = ed_apply(sed.ed, K, keep, value_at);
    out.insert(out.end(), mix.begin(), mix.end());
    return out;
  }
};

}  // namespace

GreenModule module_via_base(const GreenData& S, const GreenData& R, const MackeyHom& eta) {
  if (eta.src != &S.mackey || eta.dst != &R.mackey)
    throw std::invalid_argument("module_via_base: eta must map the given S into the given R");
  GreenModule out;
  out.ring = &S;
  out.mod = R.mackey;
  int nc = (int)R.mackey.level.size();
  for (int c = 0; c < nc; ++c) {
    BilinearMap bm;
    bm.a = S.mackey.level[c];
    bm.b = R.mackey.level[c];
    bm.c = R.mackey.level[c];
    int na = bm.a.ngens(), nb = bm.b.ngens();
    bm.table.assign(na, std::vector<Vec>(nb));
    for (int s = 0; s < na; ++s) {
      Vec es = eta.comp[c].apply(unit_vec(na, s, 1));
      for (int m = 0; m < nb; ++m)
        bm.table[s][m] = R.multiply(c, es, unit_vec(nb, m, 1));
    }
    out.act.push_back(std::move(bm));
  }
  return out;
}

MackeyHom burnside_unit_map(const BurnsideGreen& A, const GreenData& R) {
  const GroupPtr& G = R.mackey.G;
  if (A.R.mackey.G != G)
    throw std::invalid_argument("burnside_unit_map: group mismatch");
  MackeyHom u;
  u.src = &A.R.mackey;
  u.dst = &R.mackey;
  int nc = (int)G->classes().size();
  for (int c = 0; c < nc; ++c) {
    int K0 = G->classes()[c].rep;
    int na = A.R.mackey.level[c].ngens();
    int nr = R.mackey.level[c].ngens();
    Mat m(nr, na);
    for (int j = 0; j < na; ++j) {
      int P = A.basis[c][j];
      Vec val = R.mackey.tr_map(P, K0).apply(R.mackey.res_map(K0, P).apply(R.unit[c]));
      for (int i = 0; i < nr; ++i) m(i, j) = val[i];
    }
    u.comp.push_back(AbHom(A.R.mackey.level[c], R.mackey.level[c], m));
  }
  return u;
}

BoxTambara box_tambara(const GreenData& S, const TambaraFunctor& Rt, const GreenModule& RmodS) {
  const GroupPtr& G = Rt.R.mackey.G;
  if (RmodS.ring != &S)
    throw std::invalid_argument("box_tambara: the module is not over the given base");
  if (S.mackey.G != G || RmodS.mod.G != G)
    throw std::invalid_argument("box_tambara: group mismatch");
  int nc = (int)G->classes().size();
  for (int c = 0; c < nc; ++c)
    if (RmodS.mod.level[c].ngens() != Rt.R.mackey.level[c].ngens())
      throw std::invalid_argument("box_tambara: module levels do not match the Tambara functor");

  BoxTambara out;
  out.box = box_over(S, RmodS, RmodS);
  const BoxProduct& bx = out.box.box;
  const MackeyFunctor& mod = RmodS.mod;

  NormEngine eng;
  eng.R = &Rt;
  eng.G = G;

  auto encode = [&](int K, const AtomList& L) -> Vec {
    int cK = G->class_of_subgroup(K);
    Vec acc(bx.P.level[cK].ngens(), Int(0));
    for (const Atom& a : L) {
      Vec w = box_pure(bx, mod, mod, K, a.sub, a.u, a.v);
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += w[i];
    }
    return acc;
  };
  auto decode = [&](int H, const Vec& x) -> AtomList {
    int cH = G->class_of_subgroup(H);
    int gi = G->inv(G->conjugator_to_rep(H));
    AtomList L;
    for (size_t p = 0; p < x.size(); ++p) {
      if (x[p] == 0) continue;
      auto [sub, i, j] = bx.gens[cH][p];
      AbHom cm = mod.conj_map(gi, sub);
      int ns = mod.level[G->class_of_subgroup(sub)].ngens();
      L.push_back({G->conjugate_subgroup(gi, sub), cm.apply(unit_vec(ns, i, x[p])),
                   cm.apply(unit_vec(ns, j, 1))});
    }
    return L;
  };

  out.T = std::make_shared<TambaraFunctor>();
  TambaraFunctor& TF = *out.T;
  TF.R.mackey = bx.P;
  for (int c = 0; c < nc; ++c) {
    int K0 = G->classes()[c].rep;
    const auto& gens = bx.gens[c];
    int ng = (int)gens.size();
    BilinearMap bm;
    bm.a = bm.b = bm.c = bx.P.level[c];
    bm.table.assign(ng, std::vector<Vec>(ng));
    for (int p = 0; p < ng; ++p) {
      auto [A, i, j] = gens[p];
      int nA = mod.level[G->class_of_subgroup(A)].ngens();
      Atom ap{A, unit_vec(nA, i, 1), unit_vec(nA, j, 1)};
      for (int q = 0; q < ng; ++q) {
        auto [B, k, l] = gens[q];
        int nB = mod.level[G->class_of_subgroup(B)].ngens();
        Atom bq{B, unit_vec(nB, k, 1), unit_vec(nB, l, 1)};
        bm.table[p][q] = encode(K0, eng.mul_atoms(K0, ap, bq));
      }
    }
    TF.R.mul.push_back(std::move(bm));
    TF.R.unit.push_back(box_pure(bx, mod, mod, K0, K0, Rt.R.unit[c], Rt.R.unit[c]));
  }

  attach_norms(TF, [&](int H, int K, const Vec& x) -> Vec {
    return encode(K, eng.norm_atoms(H, K, decode(H, x)));
  });

  // multiplication back to R and the two unit inclusions
  out.mul_map.src = &out.T->R.mackey;
  out.mul_map.dst = &Rt.R.mackey;
  out.eta_left.src = &Rt.R.mackey;
  out.eta_left.dst = &out.T->R.mackey;
  out.eta_right.src = &Rt.R.mackey;
  out.eta_right.dst = &out.T->R.mackey;
  for (int c = 0; c < nc; ++c) {
    int K0 = G->classes()[c].rep;
    const auto& gens = bx.gens[c];
    int nb = bx.P.level[c].ngens();
    int nr = Rt.R.mackey.level[c].ngens();
    Mat mm(nr, nb);
    for (int p = 0; p < (int)gens.size(); ++p) {
      auto [A, i, j] = gens[p];
      int cA = G->class_of_subgroup(A);
      int nA = mod.level[cA].ngens();
      Vec val = Rt.R.mackey.tr_map(A, K0).apply(
          Rt.R.multiply(cA, unit_vec(nA, i, 1), unit_vec(nA, j, 1)));
      for (int r = 0; r < nr; ++r) mm(r, p) = val[r];
    }
    out.mul_map.comp.push_back(AbHom(bx.P.level[c], Rt.R.mackey.level[c], mm));
    Mat ml(nb, nr), mr(nb, nr);
    for (int s = 0; s < nr; ++s) {
      Vec es = unit_vec(nr, s, 1);
      Vec l = box_pure(bx, mod, mod, K0, K0, es, Rt.R.unit[c]);
      Vec r = box_pure(bx, mod, mod, K0, K0, Rt.R.unit[c], es);
      for (int b = 0; b < nb; ++b) {
        ml(b, s) = l[b];
        mr(b, s) = r[b];
      }
    }
    out.eta_left.comp.push_back(AbHom(Rt.R.mackey.level[c], bx.P.level[c], ml));
    out.eta_right.comp.push_back(AbHom(Rt.R.mackey.level[c], bx.P.level[c], mr));
  }
  return out;
}

}  // namespace eqalg
