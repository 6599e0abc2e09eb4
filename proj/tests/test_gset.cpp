#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "eqalg/gset.hpp"

using namespace eqalg;

static int sub_of_order(const GroupPtr& G, int order, int which = 0) {
  int seen = 0;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == order && seen++ == which) return i;
  throw std::runtime_error("no such subgroup");
}

// brute-force: all equivariant maps X -> A whose image at x is restricted to allowed(x, a)
static std::vector<std::vector<int>> constrained_maps(const GSet& X, const GSet& A,
                                                      std::function<bool(int, int)> allowed) {
  std::vector<std::vector<int>> choices(X.size());
  for (int x = 0; x < X.size(); ++x)
    for (int a = 0; a < A.size(); ++a)
      if (allowed(x, a)) choices[x].push_back(a);
  std::vector<std::vector<int>> out;
  std::vector<int> pick(X.size(), 0);
  if (X.size() == 0) return {std::vector<int>{}};
  while (true) {
    std::vector<int> m(X.size());
    bool ok = true;
    for (int x = 0; x < X.size() && ok; ++x) {
      if (choices[x].empty()) ok = false;
      else m[x] = choices[x][pick[x]];
    }
    if (ok) {
      bool eq = true;
      for (int g = 0; g < X.G->size() && eq; ++g)
        for (int x = 0; x < X.size() && eq; ++x)
          if (m[X.apply(g, x)] != A.apply(g, m[x])) eq = false;
      if (eq) out.push_back(m);
    }
    int i = X.size() - 1;
    while (i >= 0) {
      if (!choices[i].empty() && ++pick[i] < (int)choices[i].size()) break;
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

TEST_CASE("orbit sets and validity") {
  GroupPtr G = symmetric3();
  int c2 = sub_of_order(G, 2);
  GSet X = orbit_gset(G, c2);
  CHECK(X.size() == 3);
  CHECK(X.check_valid() == "");
  OrbitDecomposition d = orbit_decompose(X);
  REQUIRE(d.orbits.size() == 1);
  CHECK(d.orbits[0].class_id == G->class_of_subgroup(c2));
  // representative has stabilizer exactly the class representative subgroup
  CHECK(X.stabilizer(d.orbits[0].rep) == G->classes()[d.orbits[0].class_id].rep);

  GSet R = regular_gset(G);
  OrbitDecomposition dr = orbit_decompose(R);
  REQUIRE(dr.orbits.size() == 1);
  CHECK(dr.orbits[0].class_id == G->class_of_subgroup(G->trivial_subgroup()));

  GSet T = trivial_gset(G, 3);
  CHECK(orbit_decompose(T).orbits.size() == 3);

  // corrupt action: g acts but identity does not fix
  std::vector<int> bad = R.act;
  std::swap(bad[0], bad[1]);
  GSet B(G, R.names, bad);
  CHECK(B.check_valid() != "");
}

TEST_CASE("orbit decomposition transports points from representatives") {
  GroupPtr G = symmetric3();
  Product P = product_gset(orbit_gset(G, sub_of_order(G, 2)), orbit_gset(G, sub_of_order(G, 2, 1)));
  for (const GSet& X : {P.total, regular_gset(G), orbit_gset(G, sub_of_order(G, 3))}) {
    OrbitDecomposition d = orbit_decompose(X);
    for (int y = 0; y < X.size(); ++y) {
      const Orbit& orb = d.orbits[d.orbit_of[y]];
      CHECK(X.apply(d.conj_of[y], orb.rep) == y);
      CHECK(X.stabilizer(orb.rep) == G->classes()[orb.class_id].rep);
    }
  }
}

TEST_CASE("products decompose as expected over the symmetric group") {
  GroupPtr G = symmetric3();
  int c2 = sub_of_order(G, 2);
  GSet X = orbit_gset(G, c2);
  Product P = product_gset(X, X);
  CHECK(P.total.size() == 9);
  CHECK(check_equivariant(P.pr1) == "");
  CHECK(check_equivariant(P.pr2) == "");
  OrbitDecomposition d = orbit_decompose(P.total);
  REQUIRE(d.orbits.size() == 2);
  std::multiset<int> classes{d.orbits[0].class_id, d.orbits[1].class_id};
  std::multiset<int> want{G->class_of_subgroup(c2), G->class_of_subgroup(G->trivial_subgroup())};
  CHECK(classes == want);

  // and the abstract isomorphism with G/C2 + G/e is found
  Coproduct cp = disjoint_union({orbit_gset(G, c2), regular_gset(G)});
  for (const GMap& inj : cp.inject) CHECK(check_equivariant(inj) == "");
  auto iso = find_iso(P.total, cp.total);
  REQUIRE(iso.has_value());
  CHECK(iso->is_bijective());
  CHECK(check_equivariant(*iso) == "");
}

TEST_CASE("pullback of the double cover of the coset line") {
  GroupPtr G = symmetric3();
  int c2 = sub_of_order(G, 2);
  GSet E = regular_gset(G);
  GSet Xq = orbit_gset(G, c2);
  // projection G -> G/C2
  std::vector<int> proj(6);
  for (int g = 0; g < 6; ++g) {
    // G/C2 point names come from coset reps; act on the identity coset instead
    proj[g] = Xq.apply(g, 0);
  }
  GMap p(E, Xq, proj);
  REQUIRE(check_equivariant(p) == "");
  Pullback pb = pullback(p, p);
  CHECK(pb.total.size() == 12);
  OrbitDecomposition d = orbit_decompose(pb.total);
  CHECK(d.orbits.size() == 2);
  for (const Orbit& o : d.orbits) CHECK(o.points.size() == 6);
  CHECK(check_equivariant(pb.pr1) == "");
  // universal square commutes
  for (int q = 0; q < pb.total.size(); ++q)
    CHECK(p.map[pb.pr1.map[q]] == p.map[pb.pr2.map[q]]);
}

TEST_CASE("sub-G-set requires closure") {
  GroupPtr G = cyclic_group(4);
  GSet R = regular_gset(G);
  CHECK_THROWS_AS(sub_gset(R, {0, 1}), std::invalid_argument);
  SubGSet ok = sub_gset(R, {0, 1, 2, 3});
  CHECK(ok.sub.size() == 4);
}

TEST_CASE("function sets carry the shifted action") {
  GroupPtr G = cyclic_group(2);
  GSet X = regular_gset(G);
  FunctionGSet F = function_gset(X, 2);
  CHECK(F.total.size() == 4);
  CHECK(F.total.check_valid() == "");
  OrbitDecomposition d = orbit_decompose(F.total);
  CHECK(d.orbits.size() == 3);
  int fixed = 0, free = 0;
  for (const Orbit& o : d.orbits) (o.points.size() == 1 ? fixed : free)++;
  CHECK(fixed == 2);
  CHECK(free == 1);
}

TEST_CASE("norm-of-sum decomposition diagrams") {
  struct Case {
    GroupPtr G;
    int sub_order;
    std::vector<int> sizes;
  };
  GroupPtr C2 = cyclic_group(2);
  GroupPtr S3 = symmetric3();
  std::vector<Case> cases = {
      {C2, 1, {1, 2, 1}},
      {S3, 2, {1, 3, 3, 1}},
      {cyclic_group(4), 2, {1, 2, 1}},
  };
  for (auto& c : cases) {
    int H = sub_of_order(c.G, c.sub_order);
    NormSumDiagram D = norm_sum_diagram(c.G, H);
    int nx = D.base.size();
    REQUIRE((int)D.pieces.size() == nx + 1);
    long total = 0;
    std::vector<int> sizes;
    for (auto& piece : D.pieces) {
      sizes.push_back(piece.Tk.size());
      total += piece.Tk.size();
      CHECK(piece.Tk.check_valid() == "");
      CHECK(check_equivariant(piece.g_k) == "");
      CHECK(check_equivariant(piece.h_k) == "");
      CHECK(check_equivariant(piece.cover_map) == "");
      // the cover is a k-fold cover of Tk
      CHECK(piece.cover.size() == piece.k * piece.Tk.size());
      std::map<int, int> fib;
      for (int p = 0; p < piece.cover.size(); ++p) fib[piece.cover_map.map[p]]++;
      for (auto& [t, cnt] : fib) CHECK(cnt == piece.k);
      // folding h_k recovers the first projection (the product is row-major),
      // and the number of points classified into the second copy matches the cover
      int in_second = 0;
      for (int q = 0; q < piece.g_k.src.size(); ++q) {
        int x = piece.Tk.size() ? q / piece.Tk.size() : 0;
        CHECK(D.fold.map[piece.h_k.map[q]] == x);
        if (piece.h_k.map[q] >= nx) ++in_second;
      }
      CHECK(in_second == piece.cover.size());
    }
    long expect = 1;
    for (int i = 0; i < nx; ++i) expect *= 2;
    CHECK(total == expect);
    CHECK(sizes == c.sizes);
  }
}

TEST_CASE("off-diagonal part of the relative square") {
  GroupPtr G = symmetric3();
  int c2 = sub_of_order(G, 2);
  OffDiagonal od = off_diagonal(G, c2, G->full_subgroup());
  CHECK(od.D.size() == 6);
  OrbitDecomposition d = orbit_decompose(od.D);
  REQUIRE(d.orbits.size() == 1);
  CHECK(d.orbits[0].class_id == G->class_of_subgroup(G->trivial_subgroup()));
  CHECK(check_equivariant(od.d1) == "");
  CHECK(check_equivariant(od.d2) == "");
  CHECK(od.d1.is_surjective());
  for (int p = 0; p < od.D.size(); ++p) CHECK(od.d1.map[p] != od.d2.map[p]);

  // equal subgroups leave nothing off the diagonal
  CHECK(off_diagonal(G, c2, c2).D.size() == 0);

  // index-two inclusion in the cyclic group of order four
  GroupPtr C4 = cyclic_group(4);
  int h2 = sub_of_order(C4, 2);
  OffDiagonal od2 = off_diagonal(C4, h2, C4->full_subgroup());
  CHECK(od2.D.size() == 2);
  OrbitDecomposition d2 = orbit_decompose(od2.D);
  REQUIRE(d2.orbits.size() == 1);
  CHECK(d2.orbits[0].class_id == C4->class_of_subgroup(h2));

  CHECK_THROWS_AS(off_diagonal(G, G->full_subgroup(), c2), std::invalid_argument);
}

TEST_CASE("dependent product is right adjoint to pullback") {
  // over the one-point base: sections of h over all of S
  for (GroupPtr G : {cyclic_group(2), symmetric3()}) {
    int c2 = sub_of_order(G, G->size() == 2 ? 1 : 2);
    GSet S = orbit_gset(G, c2);
    GSet T = point_gset(G);
    GMap g(S, T, std::vector<int>(S.size(), 0));
    Product A2 = product_gset(S, trivial_gset(G, 2));
    GMap h = A2.pr1;  // A -> S with two-point fibers

    ExponentialDiagram E = exponential_diagram(g, h);
    CHECK(E.pi.check_valid() == "");
    CHECK(check_equivariant(E.h_prime) == "");
    CHECK(check_equivariant(E.f_prime) == "");
    CHECK(check_equivariant(E.g_prime) == "");
    CHECK(E.pi.size() == (1 << S.size()));
    // evaluation lives over S
    for (int q = 0; q < E.pb.size(); ++q) {
      int s = -1;
      // recover the S-leg of the pullback via f_prime and h
      s = h.map[E.f_prime.map[q]];
      CHECK(g.map[s] == E.h_prime.map[E.g_prime.map[q]]);
    }

    // test object B, with its structure map to T
    GSet B = (G->size() == 2) ? regular_gset(G) : orbit_gset(G, sub_of_order(G, 3));
    GMap beta(B, T, std::vector<int>(B.size(), 0));

    // left side: maps S x_T B -> A over S
    Pullback SxB = pullback(g, beta);
    auto lhs = constrained_maps(SxB.total, A2.total, [&](int q, int a) {
      return h.map[a] == SxB.pr1.map[q];
    });
    // right side: maps B -> Pi with h' after the map equal to beta
    auto rhs = constrained_maps(B, E.pi, [&](int b, int p) {
      return E.h_prime.map[p] == beta.map[b];
    });
    CHECK(lhs.size() == rhs.size());

    // transposition sends the right side bijectively onto the left side
    std::set<std::vector<int>> lhs_set(lhs.begin(), lhs.end());
    std::set<std::vector<int>> transposed;
    for (const auto& phi : rhs) {
      std::vector<int> q(SxB.total.size());
      for (int p = 0; p < SxB.total.size(); ++p) {
        int s = SxB.pr1.map[p];
        int pi_pt = phi[SxB.pr2.map[p]];
        // locate (s, pi_pt) in the exponential pullback and evaluate
        int found = -1;
        for (int u = 0; u < E.pb.size(); ++u)
          if (E.g_prime.map[u] == pi_pt && h.map[E.f_prime.map[u]] == s) {
            found = u;
            break;
          }
        REQUIRE(found >= 0);
        q[p] = E.f_prime.map[found];
      }
      CHECK(lhs_set.count(q) == 1);
      transposed.insert(q);
    }
    CHECK(transposed.size() == rhs.size());
  }
}

TEST_CASE("dependent product along a non-trivial base") {
  // g: G/e -> G/C2 for the cyclic group of order 4; h: two-point fibers over G/e
  GroupPtr G = cyclic_group(4);
  GSet S = regular_gset(G);
  GSet Tq = orbit_gset(G, sub_of_order(G, 2));
  std::vector<int> proj(4);
  for (int x = 0; x < 4; ++x) proj[x] = Tq.apply(x, 0);
  GMap g(S, Tq, proj);
  REQUIRE(check_equivariant(g) == "");
  Product A2 = product_gset(S, trivial_gset(G, 2));
  ExponentialDiagram E = exponential_diagram(g, A2.pr1);
  // each fiber of g has two points with two choices each: 4 sections per base point
  CHECK(E.pi.size() == 8);
  CHECK(E.pi.check_valid() == "");
  CHECK(check_equivariant(E.h_prime) == "");
  for (int t = 0; t < Tq.size(); ++t) {
    int cnt = 0;
    for (int p = 0; p < E.pi.size(); ++p)
      if (E.h_prime.map[p] == t) ++cnt;
    CHECK(cnt == 4);
  }
}

TEST_CASE("restriction and induction of group actions") {
  GroupPtr G = symmetric3();
  int c3 = sub_of_order(G, 3);
  int c2 = sub_of_order(G, 2);

  RestrictedGSet r = restrict_gset(orbit_gset(G, c2), c3);
  CHECK(r.XH.check_valid() == "");
  OrbitDecomposition d = orbit_decompose(r.XH);
  REQUIRE(d.orbits.size() == 1);  // the subgroup of order three acts simply transitively
  CHECK(d.orbits[0].points.size() == 3);

  // inducing the regular action of the subgroup gives the regular action of G
  SubgroupAsGroup H = subgroup_as_group(G, c3);
  InducedGSet ind = induce_gset(G, H, regular_gset(H.group));
  CHECK(ind.total.size() == 6);
  CHECK(ind.total.check_valid() == "");
  auto iso = find_iso(ind.total, regular_gset(G));
  CHECK(iso.has_value());

  // counit: G x_H X|_H -> X is equivariant with fibers of size [G:H]
  ThetaMap tm = induction_counit(orbit_gset(G, c2), c2);
  CHECK(tm.ind.total.size() == 9);
  CHECK(check_equivariant(tm.theta) == "");
  CHECK(tm.theta.is_surjective());
  std::map<int, int> fib;
  for (int p = 0; p < tm.ind.total.size(); ++p) fib[tm.theta.map[p]]++;
  for (auto& [x, cnt] : fib) CHECK(cnt == 3);
}

TEST_CASE("orbits under a subgroup and relative stabilizers") {
  GroupPtr G = symmetric3();
  GSet R = regular_gset(G);
  int c3 = sub_of_order(G, 3);
  SubOrbits so = orbits_under_subgroup(R, c3);
  CHECK(so.orbits.size() == 2);
  for (auto& o : so.orbits) CHECK(o.size() == 3);

  GSet X = orbit_gset(G, sub_of_order(G, 2));
  CHECK(X.stabilizer_in(c3, 0) == G->trivial_subgroup());
  CHECK(G->subgroup_order(X.stabilizer(0)) == 2);
}

TEST_CASE("isomorphism finder distinguishes stabilizer classes") {
  GroupPtr V = klein_four();
  int a = sub_of_order(V, 2, 0), b = sub_of_order(V, 2, 1);
  CHECK_FALSE(find_iso(orbit_gset(V, a), orbit_gset(V, b)).has_value());
  CHECK(find_iso(orbit_gset(V, a), orbit_gset(V, a)).has_value());

  // same orbit type, relabelled points
  GSet X = orbit_gset(V, a);
  std::vector<int> perm = {1, 0};
  std::vector<int> act(X.act.size());
  for (int g = 0; g < V->size(); ++g)
    for (int x = 0; x < 2; ++x) act[g * 2 + perm[x]] = perm[X.apply(g, x)];
  GSet Y(V, {"p", "q"}, act);
  REQUIRE(Y.check_valid() == "");
  auto iso = find_iso(X, Y);
  REQUIRE(iso.has_value());
  CHECK(check_equivariant(*iso) == "");
}

TEST_CASE("fold and injection bookkeeping") {
  GroupPtr G = cyclic_group(3);
  GSet X = regular_gset(G);
  Coproduct cp = disjoint_union({X, X});
  GMap fold = fold_map(cp, X, {gmap_identity(X), gmap_identity(X)});
  CHECK(check_equivariant(fold) == "");
  for (int i = 0; i < X.size(); ++i) {
    CHECK(fold.map[cp.inject[0].map[i]] == i);
    CHECK(fold.map[cp.inject[1].map[i]] == i);
  }
  GMap pt = to_point(cp.total);
  CHECK(pt.dst.size() == 1);
  CHECK(check_equivariant(pt) == "");
}
