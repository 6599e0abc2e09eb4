#pragma once

// Random composable words of bispan generators over a fixed group, shared by
// the functoriality tests.  Objects are orbit G-sets and small disjoint
// unions; maps are built orbitwise from random admissible base points.

#include <optional>
#include <random>
#include <vector>

#include "eqalg/bispan.hpp"
#include "eqalg/gset.hpp"

namespace eqalg_test {

inline eqalg::GSet random_object(const eqalg::GroupPtr& G, std::mt19937& rng) {
  int ns = (int)G->subgroups().size();
  eqalg::GSet a = eqalg::orbit_gset(G, (int)(rng() % ns));
  if (rng() % 3 == 0) {
    eqalg::GSet b = eqalg::orbit_gset(G, (int)(rng() % ns));
    return eqalg::disjoint_union({a, b}).total;
  }
  return a;
}

// random equivariant map A -> B, or nullopt when some orbit has no target
inline std::optional<eqalg::GMap> random_equivariant(const eqalg::GSet& A, const eqalg::GSet& B,
                                                     std::mt19937& rng) {
  const eqalg::GroupPtr& G = A.G;
  eqalg::OrbitDecomposition dec = eqalg::orbit_decompose(A);
  std::vector<int> m(A.size(), -1);
  for (const eqalg::Orbit& ob : dec.orbits) {
    std::vector<int> cands;
    for (int b = 0; b < B.size(); ++b)
      if (G->subgroup_contains(B.stabilizer(b), A.stabilizer(ob.rep))) cands.push_back(b);
    if (cands.empty()) return std::nullopt;
    int b0 = cands[rng() % cands.size()];
    for (int g = 0; g < G->size(); ++g) m[A.apply(g, ob.rep)] = B.apply(g, b0);
  }
  return eqalg::GMap(A, B, std::move(m));
}

// a word of composable generators starting at `start`; legs apply in order
inline std::vector<eqalg::Bispan> random_word(const eqalg::GroupPtr& G, const eqalg::GSet& start,
                                              int len, std::mt19937& rng) {
  std::vector<eqalg::Bispan> legs;
  eqalg::GSet cur = start;
  for (int i = 0; i < len; ++i) {
    for (int attempt = 0;; ++attempt) {
      int kind = (int)(rng() % 3);
      if (kind == 0) {
        // restriction along f : next -> cur; a free orbit always maps in
        eqalg::GSet nxt = attempt > 6 ? eqalg::orbit_gset(G, G->trivial_subgroup())
                                      : random_object(G, rng);
        auto f = random_equivariant(nxt, cur, rng);
        if (!f) continue;
        legs.push_back(eqalg::generator(eqalg::GenKind::R, *f));
        cur = nxt;
        break;
      }
      // norm or transfer along f : cur -> next; the point always receives
      eqalg::GSet nxt = attempt > 6 ? eqalg::point_gset(G) : random_object(G, rng);
      auto f = random_equivariant(cur, nxt, rng);
      if (!f) continue;
      legs.push_back(
          eqalg::generator(kind == 1 ? eqalg::GenKind::N : eqalg::GenKind::T, *f));
      cur = nxt;
      break;
    }
  }
  return legs;
}

}  // namespace eqalg_test
