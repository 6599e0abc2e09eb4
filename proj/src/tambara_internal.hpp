#pragma once

// Shared helpers for the Tambara-functor implementation files.

#include <map>
#include <utility>
#include <vector>

#include "eqalg/mackey.hpp"
#include "eqalg/tambara.hpp"
#include "mackey_internal.hpp"

namespace eqalg {
namespace tambara_detail {

// All concrete subgroup pairs (H, K) with H a proper subgroup of K.
inline std::vector<std::pair<int, int>> proper_concrete_pairs(const GroupPtr& G) {
  std::vector<std::pair<int, int>> out;
  for (int K = 0; K < (int)G->subgroups().size(); ++K)
    for (int H = 0; H < (int)G->subgroups().size(); ++H)
      if (H != K && G->subgroup_contains(K, H)) out.push_back({H, K});
  return out;
}

// Levelwise direct sum of two Mackey functors over the same group, with all
// structure maps block-diagonal.  The summand layout per class is returned in
// *split.  Assembled directly on the stored data: the stored maps of A and B
// compose exactly like concrete maps, so their block sums satisfy every axiom
// the inputs do, and no re-conjugation pass is wanted.
inline MackeyFunctor direct_sum_mackey(const MackeyFunctor& A, const MackeyFunctor& B,
                                       std::vector<DirectSum>* split,
                                       const std::string& name) {
  if (A.G != B.G) throw std::invalid_argument("direct_sum_mackey: different groups");
  MackeyFunctor M;
  M.G = A.G;
  M.name = name;
  int nc = (int)A.level.size();
  split->clear();
  for (int c = 0; c < nc; ++c) {
    split->push_back(direct_sum({A.level[c], B.level[c]}));
    M.level.push_back(split->back().total);
  }
  auto cls = [&](int s) { return A.G->class_of_subgroup(s); };
  for (const auto& [key, f] : A.res) {
    const AbHom& g = B.res.at(key);
    M.res.emplace(key, AbHom(M.level[cls(key.first)], M.level[cls(key.second)],
                             block_diag({f.mat, g.mat})));
  }
  for (const auto& [key, f] : A.tr) {
    const AbHom& g = B.tr.at(key);
    M.tr.emplace(key, AbHom(M.level[cls(key.first)], M.level[cls(key.second)],
                            block_diag({f.mat, g.mat})));
  }
  for (const auto& [key, f] : A.conj) {
    const AbHom& g = B.conj.at(key);
    int src = cls(key.second);
    int dst = cls(A.G->conjugate_subgroup(key.first, key.second));
    M.conj.emplace(key, AbHom(M.level[src], M.level[dst], block_diag({f.mat, g.mat})));
  }
  return M;
}

// The equivariant map f1 x f2 between product G-sets (componentwise).
inline GMap product_map(const Product& P, const Product& Q, const GMap& f1, const GMap& f2) {
  std::vector<int> m(P.total.size());
  for (int p = 0; p < P.total.size(); ++p)
    m[p] = Q.index[f1.map[P.pr1.map[p]]][f2.map[P.pr2.map[p]]];
  return GMap(P.total, Q.total, std::move(m));
}

// The off-diagonal restriction-norm composite nu : R(G/H) -> R(G/H) for a
// proper containment H < K.  Stored-H coordinates in and out; degree [K:H]-1.
// nu(r) multiplies to the cross term in N(r + m) for a square-zero summand m,
// and more generally linearizes the norm: d(N_H^K a) = tr(nu(a) . d(a)).
PolyHom off_diagonal_norm(const TambaraFunctor& R, int H, int K);

}  // namespace tambara_detail
}  // namespace eqalg
