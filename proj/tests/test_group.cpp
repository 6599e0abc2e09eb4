#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "eqalg/group.hpp"

using namespace eqalg;

// independent oracle: a finite subset containing e and closed under
// multiplication is a subgroup, so count closed subsets directly
static int count_subgroups_bruteforce(const GroupPtr& G) {
  int n = G->size();
  int cnt = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & (1u << G->identity()))) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      if (mask & (1u << a))
        for (int b = 0; b < n && closed; ++b)
          if ((mask & (1u << b)) && !(mask & (1u << G->mul(a, b)))) closed = false;
    if (closed) ++cnt;
  }
  return cnt;
}

static std::vector<int> subgroup_orders(const GroupPtr& G) {
  std::vector<int> out;
  for (const auto& s : G->subgroups()) out.push_back((int)s.size());
  return out;
}

TEST_CASE("group axioms and basic queries") {
  for (const GroupPtr& G : {cyclic_group(1), cyclic_group(4), klein_four(), symmetric3(),
                            product_group(cyclic_group(2), cyclic_group(3))}) {
    CHECK(G->check_valid() == "");
    for (int g = 0; g < G->size(); ++g) {
      CHECK(G->mul(g, G->inv(g)) == G->identity());
      CHECK(G->mul(G->identity(), g) == g);
      for (int a = 0; a < G->size(); ++a)
        CHECK(G->conj(g, a) == G->mul(G->mul(g, a), G->inv(g)));
    }
  }
  GroupPtr C4 = cyclic_group(4);
  CHECK(C4->element_by_name("e") == 0);
  CHECK(C4->element_by_name("g") == 1);
  CHECK(C4->element_by_name("g3") == 3);
  CHECK_THROWS_AS(C4->element_by_name("nope"), std::invalid_argument);
}

TEST_CASE("invalid multiplication tables are rejected") {
  // associativity failure: (g.g).g2 != g.(g.g2)
  std::vector<int> bad = {0, 1, 2, 3, 1, 3, 2, 0, 2, 3, 0, 1, 3, 0, 1, 2};
  CHECK_THROWS_AS(FiniteGroup({"e", "g", "g2", "g3"}, bad), std::invalid_argument);
  // missing inverse: a*a = a
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {0, 1, 1, 1}), std::invalid_argument);
  // wrong table size
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("subgroup enumeration matches brute-force closed-subset oracle") {
  auto C2xC2xC2 = product_group(cyclic_group(2), klein_four());
  struct Case {
    GroupPtr G;
    int nclasses;
  };
  std::vector<Case> cases = {
      {cyclic_group(2), 2}, {cyclic_group(3), 2},  {cyclic_group(4), 3},
      {cyclic_group(6), 4}, {klein_four(), 5},     {symmetric3(), 4},
      {C2xC2xC2, 16},
  };
  for (auto& c : cases) {
    CAPTURE(c.G->group_name);
    CHECK((int)c.G->subgroups().size() == count_subgroups_bruteforce(c.G));
    CHECK((int)c.G->classes().size() == c.nclasses);
    // every class rep has itself as conjugator target
    for (const auto& cl : c.G->classes()) {
      CHECK(c.G->class_of_subgroup(cl.rep) == cl.id);
      CHECK(c.G->conjugate_subgroup(c.G->conjugator_to_rep(cl.rep), cl.rep) == cl.rep);
      CHECK((int)c.G->subgroup(cl.rep).size() == cl.order);
    }
  }
}

TEST_CASE("symmetric group on three letters: lattice detail") {
  GroupPtr G = symmetric3();
  auto orders = subgroup_orders(G);
  std::vector<int> expect = {1, 2, 2, 2, 3, 6};
  CHECK(orders == expect);
  CHECK(G->classes().size() == 4);

  // labels follow the H<order><letter> convention
  std::vector<std::string> labels;
  for (const auto& c : G->classes()) labels.push_back(c.label);
  std::vector<std::string> expl = {"H1a", "H2a", "H3a", "H6a"};
  CHECK(labels == expl);

  // Weyl orders |N(H)|/|H|
  std::vector<int> weyl;
  for (const auto& c : G->classes()) weyl.push_back(c.weyl_order);
  std::vector<int> expw = {6, 1, 2, 1};
  CHECK(weyl == expw);

  // the three order-2 subgroups are one class; conjugators are valid
  std::vector<int> ord2;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == 2) ord2.push_back(i);
  REQUIRE(ord2.size() == 3);
  int cls = G->class_of_subgroup(ord2[0]);
  for (int i : ord2) {
    CHECK(G->class_of_subgroup(i) == cls);
    int gamma = G->conjugator_to_rep(i);
    CHECK(G->conjugate_subgroup(gamma, i) == G->classes()[cls].rep);
  }
  // conjugation by a 3-cycle moves a reflection subgroup
  int r = G->element_by_name("r");
  CHECK(G->conjugate_subgroup(r, ord2[0]) != ord2[0]);

  // normalizers
  int c3 = -1;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == 3) c3 = i;
  REQUIRE(c3 >= 0);
  CHECK(G->subgroup_order(G->normalizer(c3)) == 6);
  CHECK(G->subgroup_order(G->normalizer(ord2[0])) == 2);
  CHECK(G->normalizer(G->trivial_subgroup()) == G->full_subgroup());

  // witness subgroups and subconjugacy
  int cls_triv = G->class_of_subgroup(G->trivial_subgroup());
  int cls_c2 = cls;
  int cls_c3 = G->class_of_subgroup(c3);
  int cls_full = G->class_of_subgroup(G->full_subgroup());
  CHECK(G->witness_subgroup(cls_c2, cls_full) == ord2[0]);
  CHECK(G->witness_subgroup(cls_c3, cls_c2) == -1);
  CHECK(G->witness_subgroup(cls_c2, cls_c3) == -1);
  CHECK(G->witness_subgroup(cls_triv, cls_c2) == G->trivial_subgroup());
  CHECK(G->subconjugate(ord2[1], G->full_subgroup()));
  CHECK(G->subconjugate(ord2[1], ord2[0]));  // conjugate order-2s
  CHECK_FALSE(G->subconjugate(c3, ord2[0]));
}

TEST_CASE("cosets and double cosets") {
  GroupPtr G = symmetric3();
  int c2 = -1, c3 = -1;
  for (int i = 0; i < (int)G->subgroups().size(); ++i) {
    if (G->subgroup_order(i) == 2 && c2 < 0) c2 = i;
    if (G->subgroup_order(i) == 3) c3 = i;
  }
  auto reps = G->coset_reps(G->full_subgroup(), c2);
  CHECK(reps.size() == 3);
  // reps hit pairwise-disjoint cosets covering G
  std::set<int> seen;
  for (int rep : reps)
    for (int h : G->subgroup(c2)) {
      int t = G->mul(rep, h);
      CHECK(seen.insert(t).second);
    }
  CHECK((int)seen.size() == G->size());

  // cosets of the trivial subgroup inside C3 are exactly its elements
  auto inner = G->coset_reps(c3, G->trivial_subgroup());
  std::set<int> inner_set(inner.begin(), inner.end());
  const Subgroup& c3elts = G->subgroup(c3);
  CHECK(inner_set == std::set<int>(c3elts.begin(), c3elts.end()));

  // C2 \ S3 / C2 has two classes, of sizes 2 and 4
  auto dreps = G->double_coset_reps(G->full_subgroup(), c2, c2);
  CHECK(dreps.size() == 2);
  std::set<int> all;
  std::vector<int> sizes;
  for (int d : dreps) {
    std::set<int> dc;
    for (int k : G->subgroup(c2))
      for (int h : G->subgroup(c2)) dc.insert(G->mul(G->mul(k, d), h));
    sizes.push_back((int)dc.size());
    all.insert(dc.begin(), dc.end());
  }
  CHECK((int)all.size() == G->size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 4});

  // abelian case: double cosets of C2 in C4 are plain cosets
  GroupPtr C4 = cyclic_group(4);
  int h2 = -1;
  for (int i = 0; i < (int)C4->subgroups().size(); ++i)
    if (C4->subgroup_order(i) == 2) h2 = i;
  CHECK(C4->double_coset_reps(C4->full_subgroup(), h2, h2).size() == 2);
}

TEST_CASE("subgroup viewed as a group in its own right") {
  GroupPtr G = symmetric3();
  int c3 = -1;
  for (int i = 0; i < (int)G->subgroups().size(); ++i)
    if (G->subgroup_order(i) == 3) c3 = i;
  SubgroupAsGroup H = subgroup_as_group(G, c3);
  CHECK(H.group->size() == 3);
  CHECK(H.group->check_valid() == "");
  for (int i = 0; i < 3; ++i) {
    CHECK(H.from_parent.at(H.embed[i]) == i);
    for (int j = 0; j < 3; ++j)
      CHECK(H.embed[H.group->mul(i, j)] == G->mul(H.embed[i], H.embed[j]));
  }
  CHECK(H.group->identity() == H.from_parent.at(G->identity()));
}

TEST_CASE("product groups") {
  GroupPtr C6 = product_group(cyclic_group(2), cyclic_group(3));
  CHECK(C6->size() == 6);
  CHECK(C6->check_valid() == "");
  CHECK(C6->classes().size() == 4);  // isomorphic to the cyclic group of order 6
  GroupPtr V = klein_four();
  std::vector<int> weyl;
  for (const auto& c : V->classes()) weyl.push_back(c.weyl_order);
  CHECK(weyl == std::vector<int>{4, 2, 2, 2, 1});
}
