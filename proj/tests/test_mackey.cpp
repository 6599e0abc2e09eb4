#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>

#include "doctest.h"
#include "eqalg/gset.hpp"
#include "eqalg/mackey.hpp"

using namespace eqalg;

static int sub_of_order(const GroupPtr& G, int order, int which = 0) {
  int seen = 0;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == order && seen++ == which) return i;
  throw std::runtime_error("no such subgroup");
}

static std::function<Mat(int)> trivial_rho(int rank) {
  return [rank](int) { return Mat::identity(rank); };
}

// the subgroup of G matching a subgroup of H.group
static int embed_sub(const GroupPtr& G, const SubgroupAsGroup& H, int s) {
  Subgroup elems;
  for (int x : H.group->subgroup(s)) elems.push_back(H.embed[x]);
  std::sort(elems.begin(), elems.end());
  int idx = G->subgroup_index(elems);
  REQUIRE(idx >= 0);
  return idx;
}

// canonical module structure of the Burnside Green functor on any Mackey
// functor: [K/P] . n = tr^K_P res^K_P n
static GreenModule burnside_module(const BurnsideGreen& A, const MackeyFunctor& M) {
  GreenModule mod;
  mod.ring = &A.R;
  mod.mod = M;
  const GroupPtr& G = M.G;
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    int K = G->classes()[c].rep;
    BilinearMap act;
    act.a = A.R.mackey.level[c];
    act.b = act.c = M.level[c];
    act.table.resize(act.a.ngens());
    for (int i = 0; i < act.a.ngens(); ++i) {
      int P = A.basis[c][i];
      Mat op = M.tr_map(P, K).mat * M.res_map(K, P).mat;
      for (int j = 0; j < act.b.ngens(); ++j) act.table[i].push_back(op.col(j));
    }
    mod.act.push_back(act);
  }
  return mod;
}

// the constant Green functor Z (fixed points of the trivial action on Z)
static GreenData constant_green(const GroupPtr& G) {
  GreenData R;
  R.mackey = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zc");
  for (size_t c = 0; c < G->classes().size(); ++c) {
    BilinearMap mul;
    mul.a = mul.b = mul.c = R.mackey.level[c];
    mul.table = {{Vec{1}}};
    R.mul.push_back(mul);
    R.unit.push_back(Vec{1});
  }
  return R;
}

TEST_CASE("burnside functor over C2: frozen values and axioms") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);

  BurnsideMackey A = burnside_mackey_data(G);
  CHECK(A.M.level[ce].ngens() == 1);
  CHECK(A.M.level[ct].ngens() == 2);
  CHECK(A.basis[ct] == std::vector<int>{triv, full});
  CHECK(A.basis[ce] == std::vector<int>{triv});

  // res [C2/e] = 2[e/e], res [C2/C2] = [e/e]; tr [e/e] = [C2/e]
  CHECK(A.M.res_map(full, triv).mat == Mat(1, 2, {2, 1}));
  CHECK(A.M.tr_map(triv, full).mat == Mat(2, 1, {1, 0}));

  Report rep = validate_mackey(A.M);
  INFO(rep.summary());
  CHECK(rep.ok());

  CHECK(validate_mackey(zero_mackey(G)).ok());
}

TEST_CASE("doubled transfer violates exactly the double coset formula") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup();

  MackeyBuilder b;
  b.G = G;
  b.name = "bad";
  b.level_of = [=](int S) { return PresentedAb::free_group(S == triv ? 1 : 2); };
  b.res_of = [=](int K, int S) {
    if (K == S) return Mat::identity(K == triv ? 1 : 2);
    return Mat(1, 2, {2, 1});
  };
  b.tr_of = [=](int S, int K) {
    if (K == S) return Mat::identity(K == triv ? 1 : 2);
    return Mat(2, 1, {2, 0});  // doubled: tr(1) = 2 [C2/e]
  };
  b.conj_of = [=](int, int S) { return Mat::identity(S == triv ? 1 : 2); };

  MackeyFunctor bad = build_mackey(b);
  Report rep = validate_mackey(bad);
  CHECK(!rep.ok());
  for (const CheckItem& it : rep.items) {
    if (it.id == "mackey.double_coset")
      CHECK(!it.pass);
    else
      CHECK(it.pass);
  }
}

TEST_CASE("burnside functor over S3: frozen restriction to C3") {
  GroupPtr G = symmetric3();
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int c2 = sub_of_order(G, 2), c3 = sub_of_order(G, 3);

  BurnsideMackey A = burnside_mackey_data(G);
  int ct = G->class_of_subgroup(full);
  CHECK(A.M.level[ct].ngens() == 4);
  CHECK(A.basis[ct] == std::vector<int>{triv, c2, c3, full});

  // restriction of the four basis elements of A(G/G) to C3:
  //   [S3/e] -> 2[C3/e], [S3/C2] -> [C3/e], [S3/C3] -> 2[C3/C3], [S3/S3] -> [C3/C3]
  CHECK(A.M.res_map(full, c3).mat == Mat(2, 4, {2, 1, 0, 0, 0, 0, 2, 1}));
  // restriction to a C2: [S3/e] -> 3[C2/e], [S3/C2] -> [C2/e]+[C2/C2],
  //   [S3/C3] -> [C2/e], [S3/S3] -> [C2/C2]
  CHECK(A.M.res_map(full, c2).mat == Mat(2, 4, {3, 1, 1, 0, 0, 1, 0, 1}));

  Report rep = validate_mackey(A.M);
  INFO(rep.first_failure());
  CHECK(rep.ok());
}

TEST_CASE("fixed point functors: trivial, sign, and regular representation") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);

  MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
  CHECK(validate_mackey(FP).ok());
  CHECK(FP.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(FP.level[ct].invariant_factors() == std::vector<Int>{0});
  CHECK(FP.res_map(full, triv).mat == Mat(1, 1, {1}));
  CHECK(FP.tr_map(triv, full).mat == Mat(1, 1, {2}));

  // sign representation: no fixed points at the top level
  auto sign = [G](int g) { return g == G->identity() ? Mat::identity(1) : Mat(1, 1, {-1}); };
  MackeyFunctor SG = fixed_point_mackey_free(G, 1, sign, "Zsgn");
  CHECK(validate_mackey(SG).ok());
  CHECK(SG.level[ct].is_trivial());
  CHECK(SG.level[ce].invariant_factors() == std::vector<Int>{0});

  // regular representation Z[C2]: res then tr is the norm 1 + swap
  auto reg = [G](int g) {
    return g == G->identity() ? Mat::identity(2) : Mat(2, 2, {0, 1, 1, 0});
  };
  MackeyFunctor RG = fixed_point_mackey_free(G, 2, reg, "ZC2");
  CHECK(validate_mackey(RG).ok());
  CHECK(RG.level[ct].invariant_factors() == std::vector<Int>{0});
  CHECK(RG.level[ce].invariant_factors() == std::vector<Int>{0, 0});
  Mat rt = RG.tr_map(triv, full).mat * RG.res_map(full, triv).mat;
  CHECK(rt == Mat(1, 1, {2}));  // tr res = multiplication by the index

  // finite coefficients: Z/4 with the sign action has fixed points Z/2 at C2
  auto sgn4 = [G](int g) { return g == G->identity() ? Mat::identity(1) : Mat(1, 1, {-1}); };
  MackeyFunctor F4 = fixed_point_mackey(G, PresentedAb::cyclic(4), sgn4, "Z4sgn");
  CHECK(validate_mackey(F4).ok());
  CHECK(F4.level[ce].invariant_factors() == std::vector<Int>{4});
  CHECK(F4.level[ct].invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("evaluation at G-sets: additivity and transport against stored maps") {
  GroupPtr G = symmetric3();
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int c2 = sub_of_order(G, 2), c3 = sub_of_order(G, 3);
  MackeyFunctor A = burnside_mackey(G);

  // single free orbit: M(G) = level at the trivial subgroup, transports are
  // exactly the stored tr and res
  GSet X = regular_gset(G);
  GSetLevel LX = evaluate_at_gset(A, X);
  CHECK(LX.total.ngens() == A.level[G->class_of_subgroup(triv)].ngens());
  GSetLevel LP = evaluate_at_gset(A, point_gset(G));
  GMap f = to_point(X);
  CHECK(transport_T(A, LX, LP, f).mat == A.tr_map(triv, full).mat);
  CHECK(transport_R(A, LX, LP, f).mat == A.res_map(full, triv).mat);

  // additivity over orbits
  Coproduct cp = disjoint_union({orbit_gset(G, c2), orbit_gset(G, c3)});
  GSetLevel L2 = evaluate_at_gset(A, cp.total);
  CHECK(L2.total.ngens() == A.level[G->class_of_subgroup(c2)].ngens() +
                                A.level[G->class_of_subgroup(c3)].ngens());
  CHECK(L2.sum.offsets.size() == 2);
  // injections transport to the coordinate inclusions
  GSetLevel Lc2 = evaluate_at_gset(A, orbit_gset(G, c2));
  AbHom j1 = transport_T(A, Lc2, L2, cp.inject[0]);
  for (int i = 0; i < Lc2.total.ngens(); ++i) {
    Vec v = j1.apply(unit_vec(Lc2.total.ngens(), i));
    CHECK(v == L2.sum.inject(0, unit_vec(Lc2.total.ngens(), i)));
  }
}

TEST_CASE("mackey hom space: naturality cut out exactly, with brute force oracle") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);
  MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");

  MackeyHomSpace HS = mackey_hom_space(FP, FP);
  CHECK(HS.sols.group.invariant_factors() == std::vector<Int>{0});

  // oracle: a natural endomorphism (a at level e, b at level C2) must satisfy
  // a = b (from res and from tr); count integer pairs in [-3,3]^2 both ways
  int lattice_count = 0, direct_count = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      bool nat = (a == b);
      if (nat) ++direct_count;
      Vec z = zero_vec(2);
      z[HS.offset[ce]] = a;
      z[HS.offset[ct]] = b;
      bool in_lattice = true;
      try {
        HS.sols.express(z);
      } catch (const std::exception&) {
        in_lattice = false;
      }
      if (in_lattice) ++lattice_count;
      CHECK(in_lattice == nat);
    }
  CHECK(lattice_count == direct_count);
  CHECK(direct_count == 7);

  // materialized basis homs really are Mackey homs
  for (int t = 0; t < HS.sols.group.ngens(); ++t) {
    MackeyHom h = HS.materialize(unit_vec(HS.sols.group.ngens(), t));
    CHECK(check_mackey_hom(h).ok());
  }

  // endomorphisms of the Burnside functor form Z^2 (Yoneda: A(G/G))
  MackeyFunctor A = burnside_mackey(G);
  MackeyHomSpace HA = mackey_hom_space(A, A);
  CHECK(HA.sols.group.invariant_factors() == std::vector<Int>{0, 0});
}

TEST_CASE("box product of two constant functors over C2 is constant") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);
  MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");

  BoxProduct box = box_product(FP, FP);
  CHECK(validate_mackey(box.P).ok());
  CHECK(box.P.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(box.P.level[ct].invariant_factors() == std::vector<Int>{0});

  // the top level is <U = [C2, u@u], V = [e, v@v] | V = 2U>
  REQUIRE(box.gens[ct].size() == 2);
  CHECK(box.gens[ct][0] == std::array<int, 3>{triv, 0, 0});
  CHECK(box.gens[ct][1] == std::array<int, 3>{full, 0, 0});
  CHECK(box.P.level[ct].is_zero(Vec{1, -2}));   // V - 2U
  CHECK(!box.P.level[ct].is_zero(Vec{1, -1}));
  CHECK(!box.P.level[ct].is_zero(Vec{1, 0}));

  // multiplication pairing induces the isomorphism to the constant functor
  DressPairing pr;
  pr.Q = &FP;
  pr.beta = [](int, int, int) { return Vec{1}; };
  MackeyHom h = box_induced_hom(box, FP, FP, pr);
  CHECK(check_mackey_hom(h).ok());
  CHECK(is_mackey_iso(h));
  CHECK(h.comp[ct].mat == Mat(1, 2, {2, 1}));  // V -> 2, U -> 1
  CHECK(h.comp[ce].mat == Mat(1, 1, {1}));

  // the induced hom lies in the hom lattice (universal property: it is the
  // unique hom determined by the pairing values on the symbol generators)
  MackeyHomSpace HS = mackey_hom_space(box.P, FP);
  Vec z = zero_vec(2 * 1 + 1 * 1);
  z[HS.offset[ce]] = h.comp[ce].mat(0, 0);
  for (int u = 0; u < 2; ++u) z[HS.offset[ct] + u] = h.comp[ct].mat(0, u);
  CHECK_NOTHROW(HS.sols.express(z));
}

TEST_CASE("box unit isomorphism over C2 and S3") {
  auto run = [](const GroupPtr& G, const MackeyFunctor& N) {
    BurnsideMackey A = burnside_mackey_data(G);
    BoxProduct box = box_product(A.M, N);
    BoxUnitIso iso = box_unit_iso(box, A, N);
    Report rf = check_mackey_hom(iso.fwd);
    INFO(rf.summary());
    CHECK(rf.ok());
    CHECK(check_mackey_hom(iso.bwd).ok());
    for (size_t c = 0; c < G->classes().size(); ++c) {
      CHECK(hom_compose(iso.fwd.comp[c], iso.bwd.comp[c]).equal_hom(hom_identity(N.level[c])));
      CHECK(hom_compose(iso.bwd.comp[c], iso.fwd.comp[c])
                .equal_hom(hom_identity(box.P.level[c])));
    }
  };
  {
    GroupPtr G = cyclic_group(2);
    run(G, fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp"));
    run(G, burnside_mackey(G));
  }
  {
    GroupPtr G = symmetric3();
    run(G, fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp"));
    run(G, burnside_mackey(G));
  }
}

TEST_CASE("box product symmetry isomorphism") {
  auto run = [](const GroupPtr& G, const MackeyFunctor& M, const MackeyFunctor& N) {
    BoxProduct mn = box_product(M, N);
    BoxProduct nm = box_product(N, M);
    MackeyHom sw = box_swap_iso(mn, nm, M, N);
    CHECK(check_mackey_hom(sw).ok());
    CHECK(is_mackey_iso(sw));
    // swapping twice gives the identity
    MackeyHom sw2 = box_swap_iso(nm, mn, N, M);
    for (size_t c = 0; c < G->classes().size(); ++c)
      CHECK(hom_compose(sw2.comp[c], sw.comp[c]).equal_hom(hom_identity(mn.P.level[c])));
  };
  {
    GroupPtr G = cyclic_group(2);
    run(G, burnside_mackey(G), fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp"));
  }
  {
    GroupPtr G = symmetric3();
    run(G, burnside_mackey(G), fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp"));
  }
}

TEST_CASE("box product associativity isomorphism") {
  auto run = [](const GroupPtr& G, const MackeyFunctor& M, const MackeyFunctor& N,
                const MackeyFunctor& P) {
    BoxProduct mn = box_product(M, N);
    BoxProduct mn_p = box_product(mn.P, P);
    BoxProduct np = box_product(N, P);
    BoxProduct m_np = box_product(M, np.P);
    MackeyHom as = box_assoc_iso(mn, mn_p, np, m_np, M, N, P);
    Report r = check_mackey_hom(as);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(is_mackey_iso(as));
  };
  {
    GroupPtr G = cyclic_group(2);
    MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
    run(G, burnside_mackey(G), FP, FP);
  }
  {
    GroupPtr G = symmetric3();
    MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
    run(G, FP, FP, FP);
  }
}

TEST_CASE("restriction to a subgroup commutes with the box product") {
  GroupPtr G = symmetric3();
  MackeyFunctor M = burnside_mackey(G);
  MackeyFunctor N = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
  BoxProduct boxG = box_product(M, N);

  for (int H : {sub_of_order(G, 2), sub_of_order(G, 3)}) {
    SubgroupAsGroup Hsub = subgroup_as_group(G, H);
    RestrictedMackey rM = restrict_mackey(M, Hsub);
    RestrictedMackey rN = restrict_mackey(N, Hsub);
    RestrictedMackey rbox = restrict_mackey(boxG.P, Hsub);
    CHECK(validate_mackey(rM.M).ok());
    CHECK(validate_mackey(rbox.M).ok());

    BoxProduct small = box_product(rM.M, rN.M);
    const GroupPtr& HG = rM.H.group;

    // canonical comparison: symbol [S, m (x) n] over H maps to the same
    // symbol inside the restricted G-level
    MackeyHom cmp;
    cmp.src = &small.P;
    cmp.dst = &rbox.M;
    for (int d = 0; d < (int)HG->classes().size(); ++d) {
      int K = embed_sub(G, rM.H, HG->classes()[d].rep);
      Mat mat(rbox.M.level[d].ngens(), small.P.level[d].ngens());
      for (int u = 0; u < (int)small.gens[d].size(); ++u) {
        auto [SH, i, j] = small.gens[d][u];
        int SG = embed_sub(G, rM.H, SH);
        int cS = G->class_of_subgroup(SG);
        Vec col = box_pure(boxG, M, N, K, SG, unit_vec(M.level[cS].ngens(), i),
                           unit_vec(N.level[cS].ngens(), j));
        mat.set_col(u, col);
      }
      cmp.comp.emplace_back(small.P.level[d], rbox.M.level[d], mat);
    }
    Report r = check_mackey_hom(cmp);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(is_mackey_iso(cmp));
  }
}

TEST_CASE("burnside Green functor: frozen products and ring axioms") {
  {
    GroupPtr G = cyclic_group(2);
    int ct = G->class_of_subgroup(G->full_subgroup());
    BurnsideGreen A = burnside_green(G);
    Report r = validate_green(A.R);
    INFO(r.summary());
    CHECK(r.ok());
    // [C2/e]^2 = 2[C2/e], [C2/e].[C2/C2] = [C2/e], unit = [C2/C2]
    CHECK(A.R.mackey.level[ct].equal(A.R.mul[ct].table[0][0], Vec{2, 0}));
    CHECK(A.R.mackey.level[ct].equal(A.R.mul[ct].table[0][1], Vec{1, 0}));
    CHECK(A.R.unit[ct] == Vec{0, 1});
    CHECK(validate_green_module(green_as_module(A.R)).ok());
  }
  {
    GroupPtr G = symmetric3();
    int ct = G->class_of_subgroup(G->full_subgroup());
    BurnsideGreen A = burnside_green(G);
    CHECK(validate_green(A.R).ok());
    const PresentedAb& L = A.R.mackey.level[ct];
    // basis order (e, C2, C3, S3); frozen multiplication table entries:
    CHECK(L.equal(A.R.mul[ct].table[1][1], Vec{1, 1, 0, 0}));  // [S3/C2]^2
    CHECK(L.equal(A.R.mul[ct].table[2][2], Vec{0, 0, 2, 0}));  // [S3/C3]^2
    CHECK(L.equal(A.R.mul[ct].table[1][2], Vec{1, 0, 0, 0}));  // [S3/C2].[S3/C3]
    CHECK(L.equal(A.R.mul[ct].table[0][0], Vec{6, 0, 0, 0}));  // [S3/e]^2
    CHECK(A.R.unit[ct] == Vec{0, 0, 0, 1});
  }
}

TEST_CASE("constant Green functor and burnside modules") {
  GroupPtr G = cyclic_group(2);
  GreenData Zc = constant_green(G);
  Report r = validate_green(Zc);
  INFO(r.summary());
  CHECK(r.ok());

  BurnsideGreen A = burnside_green(G);
  MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
  GreenModule fpm = burnside_module(A, FP);
  Report rm = validate_green_module(fpm);
  INFO(rm.summary());
  CHECK(rm.ok());
  GreenModule am = burnside_module(A, A.R.mackey);
  CHECK(validate_green_module(am).ok());
}

TEST_CASE("box product over a Green functor") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);

  // A box_A A = A
  BurnsideGreen A = burnside_green(G);
  GreenModule modA = green_as_module(A.R);
  BoxOver bo = box_over(A.R, modA, modA);
  CHECK(validate_mackey(bo.box.P).ok());
  CHECK(bo.box.P.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(bo.box.P.level[ct].invariant_factors() == std::vector<Int>{0, 0});

  // the unit isomorphism descends to the quotient
  BurnsideMackey bmv{A.R.mackey, A.basis};
  BoxUnitIso iso = box_unit_iso(bo.box, bmv, A.R.mackey);
  CHECK(check_mackey_hom(iso.fwd).ok());
  CHECK(check_mackey_hom(iso.bwd).ok());
  for (size_t c = 0; c < G->classes().size(); ++c) {
    CHECK(hom_compose(iso.fwd.comp[c], iso.bwd.comp[c])
              .equal_hom(hom_identity(A.R.mackey.level[c])));
    CHECK(hom_compose(iso.bwd.comp[c], iso.fwd.comp[c])
              .equal_hom(hom_identity(bo.box.P.level[c])));
  }

  // over the constant Green functor Z, constant box constant stays constant
  GreenData Zc = constant_green(G);
  GreenModule f1 = green_as_module(Zc);
  BoxOver bz = box_over(Zc, f1, f1);
  CHECK(bz.box.P.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(bz.box.P.level[ct].invariant_factors() == std::vector<Int>{0});
}

TEST_CASE("internal hom of modules") {
  GroupPtr G = cyclic_group(2);
  int triv = G->trivial_subgroup(), full = G->full_subgroup();
  int ce = G->class_of_subgroup(triv), ct = G->class_of_subgroup(full);

  BurnsideGreen A = burnside_green(G);
  GreenModule modA = green_as_module(A.R);
  MackeyFunctor FP = fixed_point_mackey_free(G, 1, trivial_rho(1), "Zfp");
  GreenModule fpm = burnside_module(A, FP);

  // Hom_A(A, M) = M by evaluation at the unit
  InternalHomModule ihm = internal_hom_module(A.R, modA, fpm);
  Report r = validate_mackey(ihm.H);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(ihm.H.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(ihm.H.level[ct].invariant_factors() == std::vector<Int>{0});

  MackeyHom ev;
  ev.src = &ihm.H;
  ev.dst = &FP;
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    const GroupPtr& HG = ihm.data[c].rm.H.group;
    int dtop = HG->class_of_subgroup(HG->full_subgroup());
    Mat mat(FP.level[c].ngens(), ihm.H.level[c].ngens());
    for (int t = 0; t < ihm.H.level[c].ngens(); ++t) {
      std::vector<Mat> mats = ihm.element_maps(c, unit_vec(ihm.H.level[c].ngens(), t));
      mat.set_col(t, mats[dtop] * A.R.unit[c]);
    }
    ev.comp.emplace_back(ihm.H.level[c], FP.level[c], mat);
  }
  CHECK(check_mackey_hom(ev).ok());
  CHECK(is_mackey_iso(ev));

  // Hom_R(0, N) = 0 and Hom_R(N, 0) = 0
  GreenModule zmod;
  zmod.ring = &A.R;
  zmod.mod = zero_mackey(G);
  for (int c = 0; c < (int)G->classes().size(); ++c) {
    BilinearMap act;
    act.a = A.R.mackey.level[c];
    act.b = act.c = PresentedAb::zero();
    act.table.assign(act.a.ngens(), {});
    zmod.act.push_back(act);
  }
  InternalHomModule ihz = internal_hom_module(A.R, zmod, fpm);
  for (const PresentedAb& L : ihz.H.level) CHECK(L.is_trivial());
  InternalHomModule ihz2 = internal_hom_module(A.R, fpm, zmod);
  for (const PresentedAb& L : ihz2.H.level) CHECK(L.is_trivial());

  // Hom_Z(Z, Z) over the constant Green functor is the constant functor again
  GreenData Zc = constant_green(G);
  GreenModule f1 = green_as_module(Zc);
  InternalHomModule ihf = internal_hom_module(Zc, f1, f1);
  CHECK(validate_mackey(ihf.H).ok());
  CHECK(ihf.H.level[ce].invariant_factors() == std::vector<Int>{0});
  CHECK(ihf.H.level[ct].invariant_factors() == std::vector<Int>{0});
  Mat res = ihf.H.res_map(full, triv).mat;
  Mat tr = ihf.H.tr_map(triv, full).mat;
  CHECK(iabs(res(0, 0)) == 1);
  CHECK((res * tr)(0, 0) == 2);
  CHECK((tr * res)(0, 0) == 2);
}

TEST_CASE("restriction of a Mackey functor is a Mackey functor") {
  GroupPtr G = symmetric3();
  MackeyFunctor A = burnside_mackey(G);
  for (int H : {sub_of_order(G, 2), sub_of_order(G, 3), G->trivial_subgroup()}) {
    RestrictedMackey r = restrict_mackey(A, H);
    CHECK(r.M.G == r.H.group);
    CHECK(validate_mackey(r.M).ok());
  }
  // levels of the restriction are the original G-levels
  RestrictedMackey r3 = restrict_mackey(A, sub_of_order(G, 3));
  const GroupPtr& HG = r3.H.group;
  int dt = HG->class_of_subgroup(HG->full_subgroup());
  CHECK(r3.M.level[dt].ngens() ==
        A.level[G->class_of_subgroup(sub_of_order(G, 3))].ngens());
}
