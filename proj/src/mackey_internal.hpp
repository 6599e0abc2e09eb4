#pragma once

// Helpers shared between the Mackey core and the box-product/Green-functor
// translation units.  Not part of the public interface.

#include "eqalg/mackey.hpp"

namespace eqalg {

int intersect_subgroups(const GroupPtr& G, int S, int T);
int embed_subgroup(const GroupPtr& G, const SubgroupAsGroup& H, int sub_in_H);
int mackey_rep_of_class(const GroupPtr& G, int c);
std::string mackey_sub_label(const GroupPtr& G, int s);

// layout of the unknowns of a hom space: one (dst x src) matrix block per class
struct HomLayout {
  std::vector<int> offset;
  int total = 0;
};

HomLayout hom_layout(const MackeyFunctor& M, const MackeyFunctor& N);
std::vector<Congruence> mackey_hom_constraints(const MackeyFunctor& M, const MackeyFunctor& N,
                                               const HomLayout& L);
Mat zero_hom_lattice(const MackeyFunctor& M, const MackeyFunctor& N, const HomLayout& L);

}  // namespace eqalg
