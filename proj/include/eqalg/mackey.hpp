#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqalg/group.hpp"
#include "eqalg/gset.hpp"
#include "eqalg/presented.hpp"
#include "eqalg/report.hpp"

namespace eqalg {

// ---------------------------------------------------------------------------
// Mackey functor over a finite group G.
//
// Data is stored once per conjugacy class of subgroups: level[c] is the value
// at G/S for S the representative subgroup of class c.  Structure maps are
// stored for every concrete pair of subgroups, expressed in the class-level
// presentations via the canonical conjugators gamma_S (gamma_S S gamma_S^{-1}
// = class representative), so that M(G/S) is identified with level[class(S)].
//
//   res[(K,S)]  : level(class K) -> level(class S)   for S <= K
//   tr[(S,K)]   : level(class S) -> level(class K)   for S <= K
//   conj[(g,S)] : level(class S) -> level(class gSg^{-1})
// ---------------------------------------------------------------------------
struct MackeyFunctor {
  GroupPtr G;
  std::string name;
  std::vector<PresentedAb> level;                  // indexed by subgroup class
  std::map<std::pair<int, int>, AbHom> res;        // key (K,S), S <= K
  std::map<std::pair<int, int>, AbHom> tr;         // key (S,K), S <= K
  std::map<std::pair<int, int>, AbHom> conj;       // key (g,S)

  const PresentedAb& at_class(int c) const { return level.at(c); }
  const PresentedAb& at_subgroup(int s) const {
    return level.at(G->class_of_subgroup(s));
  }
  const AbHom& res_map(int K, int S) const;   // throws if S is not <= K
  const AbHom& tr_map(int S, int K) const;
  const AbHom& conj_map(int g, int S) const;
};

// Constructor input: presentations and maps are supplied for concrete
// subgroups in their own right; build_mackey conjugates everything into the
// class-representative presentations.
struct MackeyBuilder {
  GroupPtr G;
  std::string name;
  // presentation of M(G/S) for concrete subgroup index S
  std::function<PresentedAb(int)> level_of;
  // matrix of res^K_S : M(G/K) -> M(G/S) in the concrete presentations
  std::function<Mat(int, int)> res_of;   // args (K, S)
  // matrix of tr^K_S : M(G/S) -> M(G/K)
  std::function<Mat(int, int)> tr_of;    // args (S, K)
  // matrix of g_* : M(G/S) -> M(G/gSg^{-1})
  std::function<Mat(int, int)> conj_of;  // args (g, S)
};

// Assemble the stored form.  Verifies that every structure map is a
// well-defined homomorphism of the presented groups; throws otherwise.
MackeyFunctor build_mackey(const MackeyBuilder& b);

// Full axiom audit: identities, conjugation cocycle, triviality of inner
// conjugations, transitivity of res and tr, res/tr/conj compatibility, and
// the double coset formula for every pair of subgroups.
Report validate_mackey(const MackeyFunctor& M);

// --- constructors ----------------------------------------------------------

MackeyFunctor zero_mackey(const GroupPtr& G);

// Burnside ring Mackey functor: level at K is free on conjugacy classes of
// subgroups of K; res is the double coset expansion, tr is induction.
// basis[c][i] is the subgroup index (minimal in its rep_c-conjugacy class)
// that generator i of level[c] stands for, where rep_c is the representative
// subgroup of class c.
struct BurnsideMackey {
  MackeyFunctor M;
  std::vector<std::vector<int>> basis;
};
BurnsideMackey burnside_mackey_data(const GroupPtr& G);
MackeyFunctor burnside_mackey(const GroupPtr& G);

// Fixed points of a G-action on a presented abelian group A.
// rho(g) must be the matrix of a well-defined automorphism of A with
// rho(g)rho(h) = rho(gh).  Level at H is the subgroup {a : rho(h)a = a}.
MackeyFunctor fixed_point_mackey(const GroupPtr& G, const PresentedAb& A,
                                 const std::function<Mat(int)>& rho,
                                 const std::string& name);

// Same, keeping the invariant subgroups: kers[S] presents A^S with its
// inclusion into A, for every concrete subgroup index S.
struct FixedPointMackey {
  MackeyFunctor M;
  std::vector<KernelData> kers;
};
FixedPointMackey fixed_point_mackey_data(const GroupPtr& G, const PresentedAb& A,
                                         const std::function<Mat(int)>& rho,
                                         const std::string& name);

// Fixed points of the integral permutation/linear action given by rho on Z^r.
MackeyFunctor fixed_point_mackey_free(const GroupPtr& G, int rank,
                                      const std::function<Mat(int)>& rho,
                                      const std::string& name);

// --- evaluation at arbitrary finite G-sets --------------------------------

struct GSetLevel {
  GSet X;
  OrbitDecomposition dec;
  DirectSum sum;           // one summand per orbit, summand i = level(class of stab)
  PresentedAb total;
};

GSetLevel evaluate_at_gset(const MackeyFunctor& M, const GSet& X);

// Covariant transport M(X) -> M(Y) along an equivariant map f : X -> Y
// (transfer direction), and contravariant transport M(Y) -> M(X)
// (restriction direction).
AbHom transport_T(const MackeyFunctor& M, const GSetLevel& LX,
                  const GSetLevel& LY, const GMap& f);
AbHom transport_R(const MackeyFunctor& M, const GSetLevel& LX,
                  const GSetLevel& LY, const GMap& f);

// --- morphisms -------------------------------------------------------------

struct MackeyHom {
  const MackeyFunctor* src = nullptr;
  const MackeyFunctor* dst = nullptr;
  std::vector<AbHom> comp;  // one per subgroup class
};

Report check_mackey_hom(const MackeyHom& f);

// All Mackey natural transformations M -> N: solution space in the unknowns
// (entries of the per-class matrices), with a materializer.
struct MackeyHomSpace {
  SolutionSpace sols;
  std::vector<int> offset;  // offset of class c's matrix block in the unknowns
  const MackeyFunctor* src = nullptr;
  const MackeyFunctor* dst = nullptr;
  MackeyHom materialize(const Vec& coords) const;  // coords in sols.basis
};

MackeyHomSpace mackey_hom_space(const MackeyFunctor& M, const MackeyFunctor& N);

// --- restriction to a subgroup --------------------------------------------

struct RestrictedMackey {
  SubgroupAsGroup H;        // H as a group in its own right
  MackeyFunctor M;          // Mackey functor over H.group
};

RestrictedMackey restrict_mackey(const MackeyFunctor& M, int sub_idx);
// variant sharing a caller-provided subgroup group, so that several
// restrictions land over the same GroupPtr
RestrictedMackey restrict_mackey(const MackeyFunctor& M, const SubgroupAsGroup& H);

// --- box product -----------------------------------------------------------

// Symbol [S, i (x) j] at level K: S a concrete subgroup of K, i a generator of
// M at class(S), j a generator of N at class(S).  index tables record the
// generator layout of each level presentation.
struct BoxProduct {
  MackeyFunctor P;
  // for each class c of subgroups of G: list of (sub, i, j) triples giving the
  // generator layout of P.level[c]; sub ranges over concrete subgroups of the
  // class representative of c.
  std::vector<std::vector<std::array<int, 3>>> gens;
  // gen_index[c][(sub,i,j)] -> position
  std::vector<std::map<std::array<int, 3>, int>> gen_index;
};

BoxProduct box_product(const MackeyFunctor& M, const MackeyFunctor& N);

// The canonical image of a pure tensor: m at class(S) (coords in M's level),
// n likewise, placed at level class(K) for S <= K.  Returns coordinates in
// box.P.level[class(K)].
Vec box_pure(const BoxProduct& box, const MackeyFunctor& M,
             const MackeyFunctor& N, int K, int S, const Vec& m, const Vec& n);

// Unit: box(Burnside, N) ~= N, with explicit mutually inverse Mackey homs.
// fwd sends [K, S, a (x) n] to tr^K_S(a . n) where [S/P] . n = tr res n.
struct BoxUnitIso {
  MackeyHom fwd;  // box(A, N) -> N
  MackeyHom bwd;  // N -> box(A, N)
};
BoxUnitIso box_unit_iso(const BoxProduct& box, const BurnsideMackey& A,
                        const MackeyFunctor& N);

// Symmetry: box(M,N) -> box(N,M), [S, m (x) n] -> [S, n (x) m].
MackeyHom box_swap_iso(const BoxProduct& mn, const BoxProduct& nm,
                       const MackeyFunctor& M, const MackeyFunctor& N);

// Associativity: box(box(M,N),P) -> box(M,box(N,P)) on pure tensors.
MackeyHom box_assoc_iso(const BoxProduct& mn, const BoxProduct& mn_p,
                        const BoxProduct& np, const BoxProduct& m_np,
                        const MackeyFunctor& M, const MackeyFunctor& N,
                        const MackeyFunctor& P);

// Verify that a MackeyHom is an isomorphism (each component invertible).
bool is_mackey_iso(const MackeyHom& f);

// Dress pairing / universal property oracle: given a family of bilinear maps
// beta_S : M(G/S) x N(G/S) -> Q(G/S) compatible with res, conj, and Frobenius
// reciprocity, there is a unique Mackey hom box(M,N) -> Q with
// [K, S, m (x) n] -> tr^K_S beta_S(m, n).  Returns the induced hom; the
// uniqueness statement is checked by check_mackey_hom on the result.
struct DressPairing {
  const MackeyFunctor* Q = nullptr;
  // beta(S, i, j): value in Q at class(S) of (gen i of M) x (gen j of N),
  // for each concrete subgroup S
  std::function<Vec(int, int, int)> beta;
};
MackeyHom box_induced_hom(const BoxProduct& box, const MackeyFunctor& M,
                          const MackeyFunctor& N, const DressPairing& pair);

// --- Green functors and modules -------------------------------------------

// bilinear multiplication at one level: table[i][j] = product of generators
struct BilinearMap {
  PresentedAb a, b, c;                  // map a x b -> c
  std::vector<std::vector<Vec>> table;  // a.ngens x b.ngens, entries in c
  Vec apply(const Vec& x, const Vec& y) const;
  bool well_defined() const;            // kills relations in both slots
};

// Commutative Green functor: Mackey functor with per-level multiplication and
// unit, Frobenius reciprocity, and multiplicative res/conj.
struct GreenData {
  MackeyFunctor mackey;
  std::vector<BilinearMap> mul;   // one per class: level[c] x level[c] -> level[c]
  std::vector<Vec> unit;          // unit element per class
  Vec multiply(int c, const Vec& x, const Vec& y) const {
    return mul.at(c).apply(x, y);
  }
};

Report validate_green(const GreenData& R);

// Module over a Green functor.
struct GreenModule {
  const GreenData* ring = nullptr;
  MackeyFunctor mod;
  std::vector<BilinearMap> act;   // ring.level[c] x mod.level[c] -> mod.level[c]
  Vec act_on(int c, const Vec& r, const Vec& m) const {
    return act.at(c).apply(r, m);
  }
};

Report validate_green_module(const GreenModule& M);

// Burnside ring as a Green functor: [K/S].[K/T] = sum over S\K/T of
// [K/(S cap gTg^{-1})], unit [K/K].
struct BurnsideGreen {
  GreenData R;
  std::vector<std::vector<int>> basis;  // as in BurnsideMackey
};
BurnsideGreen burnside_green(const GroupPtr& G);

// A Green functor regarded as a module over itself (action = multiplication).
GreenModule green_as_module(const GreenData& R);

// Box product over a Green functor S: coequalizer of the two actions,
// box(M,N) / ([T, (s m) (x) n] - [T, m (x) (s n)]).
struct BoxOver {
  BoxProduct box;      // underlying box product with quotiented presentation
  const GreenData* S = nullptr;
};
BoxOver box_over(const GreenData& S, const GreenModule& M, const GreenModule& N);

// Internal hom of R-modules: level at G/H is the group of i_H^* R-module
// homomorphisms i_H^* M -> i_H^* N, with transfer given by the adjoint of the
// identity (sum over double cosets of conjugated-restricted components).
struct InternalHomLevel {
  RestrictedMackey rm, rn;   // i_H^* M, i_H^* N over the subgroup
  std::vector<int> offset;   // unknown-block offsets, one per H-subgroup class
  SolutionSpace sols;        // module homs (naturality + linearity)
};

struct InternalHomModule {
  MackeyFunctor H;                           // the resulting Mackey functor
  std::vector<InternalHomLevel> data;        // one per subgroup class of G
  // materialize an element: class c, coords in H.level[c] ->
  // per-H-subgroup-class matrices of the hom i_H^* M -> i_H^* N
  std::vector<Mat> element_maps(int c, const Vec& coords) const;
};

InternalHomModule internal_hom_module(const GreenData& R, const GreenModule& M,
                                      const GreenModule& N);

}  // namespace eqalg
