#pragma once

#include <optional>

#include "eqalg/group.hpp"

namespace eqalg {

// Finite left G-set: points 0..n-1 with a full action table.
struct GSet {
  GroupPtr G;
  std::vector<std::string> names;
  std::vector<int> act;  // act[g*n + x]

  GSet() {}
  GSet(GroupPtr g, std::vector<std::string> nm, std::vector<int> a);

  int size() const { return (int)names.size(); }
  int apply(int g, int x) const { return act[size_t(g) * names.size() + x]; }
  std::string check_valid() const;  // empty if a genuine action

  // stabilizer of x as a subgroup index of G
  int stabilizer(int x) const;
  // {k in subgroup : k x = x} as a subgroup index
  int stabilizer_in(int sub_idx, int x) const;
};

bool same_gset(const GSet& X, const GSet& Y);  // identical tables and names

struct GMap {
  GSet src, dst;
  std::vector<int> map;

  GMap() {}
  GMap(GSet s, GSet d, std::vector<int> m);
  int operator()(int x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  // stab(f(x)) = stab(x) for all x
  bool preserves_stabilizers() const;
};

GMap gmap_identity(const GSet& X);
GMap gmap_compose(const GMap& g, const GMap& f);  // g after f
std::string check_equivariant(const GMap& f);     // empty if fine

// --- orbits ---
struct Orbit {
  int rep;       // point whose stabilizer is exactly the class representative
  int class_id;  // subgroup class of the stabilizer
  std::vector<int> points;
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
  std::vector<int> orbit_of;  // point -> orbit index
  std::vector<int> conj_of;   // point -> some a with point = a . rep
};

OrbitDecomposition orbit_decompose(const GSet& X);

// orbits under the action of a subgroup only (reps arbitrary)
struct SubOrbits {
  std::vector<std::vector<int>> orbits;
  std::vector<int> reps;
};
SubOrbits orbits_under_subgroup(const GSet& X, int sub_idx);

// --- constructions ---
GSet empty_gset(const GroupPtr& G);
GSet point_gset(const GroupPtr& G);
GSet trivial_gset(const GroupPtr& G, int npoints);
GSet orbit_gset(const GroupPtr& G, int sub_idx);  // G/H with coset points
// X for the regular action (= G/e with element names)
GSet regular_gset(const GroupPtr& G);

struct Coproduct {
  GSet total;
  std::vector<GMap> inject;
};
Coproduct disjoint_union(const std::vector<GSet>& parts);

struct Product {
  GSet total;
  GMap pr1, pr2;
  std::vector<std::vector<int>> index;  // index[x][y] -> point
};
Product product_gset(const GSet& X, const GSet& Y);

// sub-G-set spanned by the given points (must be action-closed)
struct SubGSet {
  GSet sub;
  GMap incl;
  std::vector<int> from_parent;  // parent point -> sub point or -1
};
SubGSet sub_gset(const GSet& X, const std::vector<int>& pts);

struct Pullback {
  GSet total;
  GMap pr1, pr2;  // to X and Y
};
Pullback pullback(const GMap& f, const GMap& g);  // f: X->T, g: Y->T

// the unique map X -> point
GMap to_point(const GSet& X);
GMap fold_map(const Coproduct& cp, const GSet& target, const std::vector<GMap>& legs);

// dependent product along g: S -> T of h: A -> S; sections of h over each fiber
struct DependentProduct {
  GSet pi;                    // Pi_g A
  GMap h_prime;               // Pi_g A -> T
  std::vector<std::vector<int>> fiber; // for each T-point, the g-fiber (sorted)
  std::vector<std::vector<int>> section;  // for each Pi-point, values on fiber of its T-point
  std::vector<int> base;               // Pi-point -> T-point
};
DependentProduct dependent_product(const GMap& h, const GMap& g, long cap = 500000);

struct ExponentialDiagram {
  GMap g;        // S -> T
  GMap h;        // A -> S
  GSet pi;       // Pi_g A
  GMap h_prime;  // Pi_g A -> T
  GSet pb;       // S x_T Pi_g A
  GMap f_prime;  // pb -> A, evaluation
  GMap g_prime;  // pb -> Pi_g A
};
ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h, long cap = 500000);

// all functions X -> {0..m-1} with (g.f)(x) = f(g^-1 x)
struct FunctionGSet {
  GSet total;
  std::vector<std::vector<int>> values;  // point -> function table
};
FunctionGSet function_gset(const GSet& X, int m, long cap = 500000);

// graded pieces of the norm-of-sum decomposition for H <= G (H = subgroup index)
struct NormSumPiece {
  int k;
  GSet Tk;        // functions of degree k
  GMap f_k;       // Tk -> point
  GMap g_k;       // X x Tk -> Tk
  GMap h_k;       // X x Tk -> X + X  (x, f) -> copy f(x)
  GSet cover;     // {(x,f) : f(x) = 1}
  GMap cover_map; // cover -> Tk, a k-fold cover
};
struct NormSumDiagram {
  GSet base;        // X = G/H
  GSet two_copies;  // X + X
  GMap fold;        // X + X -> X
  std::vector<NormSumPiece> pieces;
};
NormSumDiagram norm_sum_diagram(const GroupPtr& G, int H_sub);

// (G/S x_{G/K} G/S) minus the diagonal, with its two projections to G/S
struct OffDiagonal {
  GSet D;
  GMap d1, d2;  // D -> G/S
};
OffDiagonal off_diagonal(const GroupPtr& G, int S_sub, int K_sub);

// equivariant bijection, if one exists
std::optional<GMap> find_iso(const GSet& X, const GSet& Y);

// some point of X whose stabilizer is exactly the given subgroup; -1 if none
int point_with_stabilizer(const GSet& X, int sub_idx);

// The equivariant map sending g.x0 to g.y0, defined on the orbit of x0
// (X must be transitive); requires Stab(x0) <= Stab(y0).
GMap induced_orbit_map(const GSet& X, const GSet& Y, int x0, int y0);

// restriction of a G-set to a caller-provided subgroup group (same points)
GSet restrict_gset_over(const GSet& X, const SubgroupAsGroup& H);

// restriction of a G-set to a subgroup (as a set over subgroup_as_group)
struct RestrictedGSet {
  SubgroupAsGroup H;
  GSet XH;  // same points, action of H only
};
RestrictedGSet restrict_gset(const GSet& X, int sub_idx);

// G x_H Y for an H-set Y (H given by subgroup_as_group data)
struct InducedGSet {
  GSet total;
  std::vector<int> coset_rep;              // block -> representative element of G
  std::vector<std::pair<int, int>> parts;  // point -> (block, Y-point)
  std::vector<std::vector<int>> index;     // [block][ypt] -> point
};
InducedGSet induce_gset(const GroupPtr& G, const SubgroupAsGroup& H, const GSet& Y);

// action map G x_H (X restricted to H) -> X
struct ThetaMap {
  InducedGSet ind;
  GMap theta;
};
ThetaMap induction_counit(const GSet& X, int sub_idx);

}  // namespace eqalg
