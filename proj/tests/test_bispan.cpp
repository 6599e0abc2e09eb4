#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>
#include <random>

#include "doctest.h"
#include "eqalg/bispan.hpp"

using namespace eqalg;

static GMap swap_map(const GSet& X, const GroupPtr& G) {
  // right translation by the non-identity element of a two-element group acting on itself
  std::vector<int> m(X.size());
  for (int x = 0; x < X.size(); ++x) m[x] = X.apply(1, x);
  return GMap(X, X, m);
}

static std::optional<GMap> random_gmap(const GSet& X, const GSet& Y, std::mt19937& rng) {
  OrbitDecomposition d = orbit_decompose(X);
  std::vector<int> m(X.size(), -1);
  for (const Orbit& o : d.orbits) {
    const Subgroup& S = X.G->subgroup(X.stabilizer(o.rep));
    std::vector<int> cands;
    for (int y = 0; y < Y.size(); ++y) {
      bool fix = true;
      for (int s : S)
        if (Y.apply(s, y) != y) {
          fix = false;
          break;
        }
      if (fix) cands.push_back(y);
    }
    if (cands.empty()) return std::nullopt;
    int y0 = cands[rng() % cands.size()];
    for (int pnt : o.points) m[pnt] = Y.apply(d.conj_of[pnt], y0);
  }
  GMap out(X, Y, m);
  REQUIRE(check_equivariant(out) == "");
  return out;
}

// random generator bispan leaving X; returns the bispan and its target
static Bispan random_generator_step(const GSet& X, const std::vector<GSet>& pool, std::mt19937& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const GSet& Y = pool[rng() % pool.size()];
    int kind = rng() % 3;
    if (kind == 0) {
      auto m = random_gmap(Y, X, rng);  // restriction travels backwards
      if (m) return generator(GenKind::R, *m);
    } else {
      auto m = random_gmap(X, Y, rng);
      if (m) return generator(kind == 1 ? GenKind::N : GenKind::T, *m);
    }
  }
  return identity_bispan(X);
}

TEST_CASE("generator shapes") {
  GroupPtr C2 = cyclic_group(2);
  GSet X = regular_gset(C2);
  GMap pi = to_point(X);

  Bispan T = generator(GenKind::T, pi);
  CHECK(check_bispan(T) == "");
  CHECK(T.s.size() == 2);
  CHECK(T.u.size() == 2);
  CHECK(T.v.size() == 2);
  CHECK(T.t.size() == 1);
  CHECK(T.g.is_bijective());

  Bispan N = generator(GenKind::N, pi);
  CHECK(check_bispan(N) == "");
  CHECK(N.u.size() == 2);
  CHECK(N.v.size() == 1);
  CHECK(N.h.is_bijective());

  Bispan R = generator(GenKind::R, pi);
  CHECK(check_bispan(R) == "");
  CHECK(R.s.size() == 1);  // from the point down to the free orbit
  CHECK(R.t.size() == 2);

  Bispan I = identity_bispan(X);
  CHECK(iso_equal(I, generator(GenKind::R, gmap_identity(X))));
}

TEST_CASE("restriction of a transfer is identity plus translation") {
  GroupPtr C2 = cyclic_group(2);
  GSet X = regular_gset(C2);
  GMap pi = to_point(X);
  Bispan comp = compose(generator(GenKind::R, pi), generator(GenKind::T, pi));
  CHECK(check_bispan(comp) == "");
  CHECK(comp.u.size() == 4);
  CHECK(comp.v.size() == 4);

  // expected normal form: X <- X+X = X+X -> X with legs (id,id) and (id,swap)
  Coproduct cp = disjoint_union({X, X});
  GMap fold_id = fold_map(cp, X, {gmap_identity(X), gmap_identity(X)});
  GMap fold_tw = fold_map(cp, X, {gmap_identity(X), swap_map(X, C2)});
  Bispan expect{X, cp.total, cp.total, X, fold_id, gmap_identity(cp.total), fold_tw};
  REQUIRE(check_bispan(expect) == "");
  CHECK(iso_equal(comp, expect));

  // with the transfer leg untwisted the diagrams are NOT isomorphic
  Bispan wrong{X, cp.total, cp.total, X, fold_id, gmap_identity(cp.total), fold_id};
  CHECK_FALSE(iso_equal(comp, wrong));
}

TEST_CASE("norm of a sum composes through the function set") {
  for (auto [G, sub_order] : {std::pair<GroupPtr, int>{cyclic_group(2), 1},
                              std::pair<GroupPtr, int>{symmetric3(), 2}}) {
    int H = -1;
    for (int i = 0; i < (int)G->subgroups().size(); ++i)
      if (G->subgroup_order(i) == sub_order) {
        H = i;
        break;
      }
    GSet X = orbit_gset(G, H);
    Coproduct two = disjoint_union({X, X});
    GMap fold = fold_map(two, X, {gmap_identity(X), gmap_identity(X)});
    GMap pi = to_point(X);
    Bispan comp = compose(generator(GenKind::N, pi), generator(GenKind::T, fold));
    CHECK(check_bispan(comp) == "");

    // direct construction through the two-valued function set
    FunctionGSet F = function_gset(X, 2);
    Product P = product_gset(X, F.total);
    std::vector<int> fm(P.total.size());
    for (int x = 0; x < X.size(); ++x)
      for (int s = 0; s < F.total.size(); ++s)
        fm[P.index[x][s]] = two.inject[F.values[s][x]].map[x];
    Bispan expect{two.total, P.total, F.total, point_gset(G),
                  GMap(P.total, two.total, fm), P.pr2, to_point(F.total)};
    REQUIRE(check_bispan(expect) == "");
    CHECK(iso_equal(comp, expect));

    // and the graded pieces assemble to the same bispan
    NormSumDiagram D = norm_sum_diagram(G, H);
    std::vector<GSet> us, vs;
    for (auto& piece : D.pieces) {
      us.push_back(piece.g_k.src);
      vs.push_back(piece.Tk);
    }
    Coproduct CU = disjoint_union(us);
    Coproduct CV = disjoint_union(vs);
    std::vector<GMap> flegs, glegs;
    for (size_t k = 0; k < D.pieces.size(); ++k) {
      flegs.push_back(D.pieces[k].h_k);
      glegs.push_back(gmap_compose(CV.inject[k], D.pieces[k].g_k));
    }
    Bispan assembled{two.total, CU.total, CV.total, point_gset(G),
                     fold_map(CU, two.total, flegs),
                     fold_map(CU, CV.total, glegs), to_point(CV.total)};
    REQUIRE(check_bispan(assembled) == "");
    CHECK(iso_equal(comp, assembled));
  }
}

TEST_CASE("iso_equal separates the generator kinds") {
  GroupPtr C2 = cyclic_group(2);
  GSet X = regular_gset(C2);
  GMap pi = to_point(X);
  CHECK_FALSE(iso_equal(generator(GenKind::N, pi), generator(GenKind::T, pi)));
  CHECK(iso_equal(generator(GenKind::N, pi), generator(GenKind::N, pi)));

  // relabelled points: conjugate the U set by the swap
  Bispan N = generator(GenKind::N, pi);
  GMap sw = swap_map(X, C2);
  Bispan relab{N.s, N.u, N.v, N.t, gmap_compose(N.f, sw), gmap_compose(N.g, sw), N.h};
  REQUIRE(check_bispan(relab) == "");
  CHECK(iso_equal(N, relab));
}

TEST_CASE("units and self-decomposition") {
  GroupPtr G = symmetric3();
  int c2 = -1, c3 = -1;
  for (int i = 0; i < (int)G->subgroups().size(); ++i) {
    if (G->subgroup_order(i) == 2 && c2 < 0) c2 = i;
    if (G->subgroup_order(i) == 3) c3 = i;
  }
  GSet X = orbit_gset(G, c2);
  GSet Y = orbit_gset(G, c3);
  std::mt19937 rng(7);
  auto m1 = random_gmap(regular_gset(G), X, rng);
  auto m2 = random_gmap(regular_gset(G), Y, rng);
  REQUIRE(m1.has_value());
  REQUIRE(m2.has_value());
  // a genuinely three-legged bispan: X <- G -> Y -> *
  Bispan p{X, regular_gset(G), Y, point_gset(G), *m1, *m2, to_point(Y)};
  REQUIRE(check_bispan(p) == "");

  CHECK(iso_equal(compose(identity_bispan(p.t), p), p));
  CHECK(iso_equal(compose(p, identity_bispan(p.s)), p));

  // every bispan is the composite of its own three generators
  Bispan built = compose(generator(GenKind::T, p.h),
                         compose(generator(GenKind::N, p.g), generator(GenKind::R, p.f)));
  CHECK(iso_equal(built, p));
}

TEST_CASE("composition is associative on random generator words") {
  for (GroupPtr G : {cyclic_group(2), cyclic_group(3), symmetric3()}) {
    std::vector<GSet> pool;
    pool.push_back(point_gset(G));
    for (const auto& cl : G->classes()) {
      GSet orb = orbit_gset(G, cl.rep);
      if (orb.size() <= 3) pool.push_back(orb);
    }
    pool.push_back(disjoint_union({point_gset(G), pool.back()}).total);

    std::mt19937 rng(20240 + G->size());
    int trials = 25;
    for (int trial = 0; trial < trials; ++trial) {
      const GSet& X0 = pool[rng() % pool.size()];
      Bispan a = random_generator_step(X0, pool, rng);
      Bispan b = random_generator_step(a.t, pool, rng);
      Bispan c = random_generator_step(b.t, pool, rng);
      Bispan left = compose(c, compose(b, a));
      Bispan right = compose(compose(c, b), a);
      REQUIRE(check_bispan(left) == "");
      REQUIRE(check_bispan(right) == "");
      CHECK(iso_equal(left, right));
    }
  }
}

TEST_CASE("wide subcategory flags") {
  GroupPtr C2 = cyclic_group(2);
  GSet X = regular_gset(C2);
  GMap pi = to_point(X);

  SubcatFlags fT = subcat_flags(generator(GenKind::T, pi));
  CHECK(fT.iso);
  CHECK(fT.epi);
  CHECK(fT.gr);

  SubcatFlags fN = subcat_flags(generator(GenKind::N, pi));
  CHECK(fN.epi);
  CHECK_FALSE(fN.gr);
  CHECK_FALSE(fN.iso);

  Coproduct two = disjoint_union({X, X});
  GMap fold = fold_map(two, X, {gmap_identity(X), gmap_identity(X)});
  SubcatFlags fFold = subcat_flags(generator(GenKind::N, fold));
  CHECK(fFold.epi);
  CHECK(fFold.gr);
  CHECK_FALSE(fFold.iso);

  // non-epi norm leg
  Coproduct xp = disjoint_union({X, point_gset(C2)});
  SubcatFlags fInj = subcat_flags(generator(GenKind::N, xp.inject[0]));
  CHECK_FALSE(fInj.epi);
  CHECK(fInj.gr);

  // multiplicativity of flags over random composable pairs
  for (GroupPtr G : {cyclic_group(2), symmetric3()}) {
    std::vector<GSet> pool;
    pool.push_back(point_gset(G));
    for (const auto& cl : G->classes()) {
      GSet orb = orbit_gset(G, cl.rep);
      if (orb.size() <= 3) pool.push_back(orb);
    }
    std::mt19937 rng(99 + G->size());
    for (int trial = 0; trial < 25; ++trial) {
      const GSet& X0 = pool[rng() % pool.size()];
      Bispan a = random_generator_step(X0, pool, rng);
      Bispan b = random_generator_step(a.t, pool, rng);
      SubcatFlags fa = subcat_flags(a), fb = subcat_flags(b), fc = subcat_flags(compose(b, a));
      if (fa.epi && fb.epi) CHECK(fc.epi);
      if (fa.gr && fb.gr) CHECK(fc.gr);
      if (fa.iso && fb.iso) CHECK(fc.iso);
    }
  }
}

TEST_CASE("composition glues isomorphic endpoints and rejects others") {
  GroupPtr G = symmetric3();
  int c2 = -1;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == 2) {
      c2 = i;
      break;
    }
  GSet X = orbit_gset(G, c2);
  // target of q: relabelled copy of X
  std::vector<int> perm = {2, 0, 1};
  std::vector<int> act(X.act.size());
  for (int g = 0; g < G->size(); ++g)
    for (int x = 0; x < X.size(); ++x) act[g * X.size() + perm[x]] = perm[X.apply(g, x)];
  GSet Xr(G, {"a", "b", "c"}, act);
  REQUIRE(Xr.check_valid() == "");

  std::vector<int> qm(X.size());
  for (int x = 0; x < X.size(); ++x) qm[x] = perm[x];
  Bispan q = generator(GenKind::T, GMap(X, Xr, qm));
  Bispan p = generator(GenKind::N, to_point(X));
  Bispan comp = compose(p, q);  // glues Xr against X through an isomorphism
  CHECK(check_bispan(comp) == "");
  CHECK(comp.t.size() == 1);

  Bispan bad = generator(GenKind::N, to_point(regular_gset(G)));
  CHECK_THROWS_AS(compose(bad, q), std::invalid_argument);
}
