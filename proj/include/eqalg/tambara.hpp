#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqalg/bispan.hpp"
#include "eqalg/gset.hpp"
#include "eqalg/mackey.hpp"
#include "eqalg/poly.hpp"
#include "eqalg/presented.hpp"
#include "eqalg/report.hpp"

namespace eqalg {

// ---------------------------------------------------------------------------
// Polynomial maps between presented abelian groups: a PolyMap on the raw
// coordinates together with the source and target presentations.
//
// Certification principle: the binomial basis is unisolvent on the simplex
// {alpha : |alpha| <= d}, and if all simplex values of a degree-<= d map lie
// in a subgroup L <= Z^m then so do all its Newton coefficients, hence all
// its values on Z^r.  A finite grid therefore certifies an identity between
// degree-bounded maps modulo the relations of the target presentation.
// ---------------------------------------------------------------------------
struct PolyHom {
  PresentedAb src, dst;
  int degree = 0;
  PolyMap poly;  // raw-coordinate model, src.ngens() -> dst.ngens()

  Vec apply(const Vec& x) const { return poly.eval(x); }
};

// Exact Newton interpolation of f on the simplex of the given degree.  When
// shell_check is set, f is additionally compared against the model on the
// shell |alpha| = degree+1 modulo dst's relations; a mismatch means f was not
// a polynomial map of the promised degree and raises logic_error.
PolyHom poly_from_function(const PresentedAb& src, const PresentedAb& dst, int degree,
                           const std::function<Vec(const Vec&)>& f, bool shell_check = true);

// Equality as maps into dst: all simplex values of p - q vanish modulo dst's
// relations (degrees may differ; the larger simplex is used).
bool poly_equal(const PolyHom& p, const PolyHom& q);

// The degree-1 model of a homomorphism.
PolyHom poly_linear(const AbHom& h);

// ---------------------------------------------------------------------------
// Tambara functor: a commutative Green functor together with multiplicative
// norm maps N_H^K for every proper containment of subgroups H < K, stored as
// polynomial maps level[class(H)] -> level[class(K)] of degree [K:H] on the
// class-representative coordinates (same gamma-twist convention as the
// underlying Mackey functor's res/tr/conj tables).
// ---------------------------------------------------------------------------
struct TambaraFunctor {
  GreenData R;
  std::map<std::pair<int, int>, PolyHom> norm;  // key (H, K), H < K proper

  const GroupPtr& group() const { return R.mackey.G; }
  const MackeyFunctor& mac() const { return R.mackey; }
  const PolyHom& norm_map(int H, int K) const;   // throws unless H < K stored
  Vec apply_norm(int H, int K, const Vec& x) const;  // identity when H == K
};

// Build the norm tables of T from a closure on stored coordinates:
// stored_norm(H, K, x) must return the stored-coordinate value of N_H^K(x).
// Each proper pair is interpolated on its degree-[K:H] simplex.
void attach_norms(TambaraFunctor& T, const std::function<Vec(int, int, const Vec&)>& stored_norm,
                  bool shell_check = true);

// Green audit plus the norm axioms, each certified on its degree grid:
// well-definedness on level relations, N(1) = 1, multiplicativity,
// transitivity N_L^K N_H^L = N_H^K, conjugation equivariance, and the
// restriction (double coset) formula
//   res^K_L N_H^K = prod_{g in L\K/H} N^L_{L cap gHg^-1} c_g res^H_{H cap g^-1Lg}.
Report validate_tambara(const TambaraFunctor& T);

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

// Burnside Tambara functor: the Burnside Green functor with norms given by
// dependent products, N_H^K[X] = [Map_H(K, X)].  Computed exactly through
// fixed-point counts (marks): |Map_H(K,X)^L| = prod over double cosets HkL of
// |X^{H cap kLk^-1}|, then solved against the table of marks of K.
TambaraFunctor burnside_tambara(const GroupPtr& G);

// A finitely generated commutative ring carried by a presented abelian group.
struct RingData {
  PresentedAb A;
  BilinearMap mul;  // A x A -> A
  Vec unit;
};

// Commutativity, associativity, unitality, and well-definedness on relations;
// empty string when all hold.
std::string check_ring(const RingData& A);

// Z/n (n = 0 gives Z), multiplication of residues.
RingData ring_cyclic(const Int& n);
// (Z/n)^k with coordinatewise multiplication and unit (1,...,1); n = 0 gives Z^k.
RingData ring_pointwise(int k, const Int& n);

// Fixed points of a G-action on the ring A by ring automorphisms rho(g):
// level at H is the invariant subring A^H, norms are the multiplicative
// transfers N_H^K(a) = prod_{kH in K/H} rho(k) a.  Throws invalid_argument if
// A is not a ring or rho is not a ring action.
TambaraFunctor fixed_point_tambara(const GroupPtr& G, const RingData& A,
                                   const std::function<Mat(int)>& rho, const std::string& name);

// Product of two Tambara functors over the same group (levelwise products).
TambaraFunctor tambara_product(const TambaraFunctor& A, const TambaraFunctor& B);

// ---------------------------------------------------------------------------
// Evaluation: multiplicative transport along equivariant maps and bispans
// ---------------------------------------------------------------------------

// Multiplicative transport T(U) -> T(V) along g : U -> V.  The component at a
// V-orbit with representative v (stabilizer K_v) is the product over the
// K_v-orbits of the fiber g^{-1}(v) of N^{K_v}_{Stab(u)} applied to the value
// of y at a point u of the suborbit; an empty fiber contributes the unit.
Vec norm_along(const TambaraFunctor& T, const GSetLevel& LU, const GSetLevel& LV, const GMap& g,
               const Vec& y);

// Evaluate a bispan [S <- U -> V -> T] on x in T(S): restriction transport
// along U -> S, then norm_along U -> V, then transfer transport V -> T.
Vec eval_bispan(const TambaraFunctor& T, const Bispan& p, const Vec& x);

// The norm-of-sum decomposition at H <= G: N_H^G(a+b) expanded into the graded
// pieces T_{f_k} N_{g_k} R_{h_k}(a, b) of the function-space decomposition,
// verified exactly on the degree-[G:H] grid in the two variables.
Report check_norm_of_sum(const TambaraFunctor& T, int H_sub);

// ---------------------------------------------------------------------------
// Square-zero extension R |x M
// ---------------------------------------------------------------------------

// Carrier R + M with products (r,m)(r',m') = (rr', rm' + r'm), unit (1,0),
// and norms N_H^K(r,m) = (N_H^K r, tr_H^K(nu(r) . m)) where nu(r) is the norm
// of the restriction of r along the two projections of the complement of the
// diagonal in G/H x_{G/K} G/H.  The module summand is an ideal with zero
// products and zero proper norms.
struct SquareZero {
  std::shared_ptr<TambaraFunctor> T;  // R |x M
  std::vector<DirectSum> split;       // per class: summand 0 = R, summand 1 = M
  MackeyHom aug;  // *T -> R, projection (a map of Tambara functors)
  MackeyHom sec;  // R -> *T, section (a map of Tambara functors); aug o sec = id
};
SquareZero square_zero(const TambaraFunctor& R, const GreenModule& M);

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

// Mackey naturality plus levelwise ring maps (unit and generator products)
// plus norm commutation h(N x) = N(h x) on the degree grid per proper pair.
Report check_tambara_hom(const TambaraFunctor& C, const TambaraFunctor& B, const MackeyHom& h);

// All Tambara morphisms C -> B, by exhaustive enumeration of the (necessarily
// finite) group of Mackey natural transformations followed by filtering.
// Optional filters: commutation with augmentations (augB o h = augC) and with
// structure maps from a common base (h o etaC = etaB).  Throws
// invalid_argument when the natural-transformation group is infinite or
// larger than cap.
struct TambaraHomSearch {
  std::vector<MackeyHom> homs;
};
TambaraHomSearch hom_tambara(const TambaraFunctor& C, const TambaraFunctor& B,
                             const MackeyHom* augC = nullptr, const MackeyHom* augB = nullptr,
                             const MackeyHom* etaC = nullptr, const MackeyHom* etaB = nullptr,
                             const Int& cap = 1 << 20);

// ---------------------------------------------------------------------------
// Restriction to a subgroup
// ---------------------------------------------------------------------------
struct RestrictedTambara {
  SubgroupAsGroup H;
  TambaraFunctor T;
};
RestrictedTambara restrict_to_subgroup(const TambaraFunctor& R, int sub_idx);
RestrictedTambara restrict_to_subgroup(const TambaraFunctor& R, const SubgroupAsGroup& H);

// Restriction of a Mackey natural transformation to a subgroup: the component
// at an H-class is the component at the corresponding class of the parent
// (naturality makes the gamma twists cancel).  rsrc/rdst must come from
// restrict_mackey / restrict_to_subgroup over the same SubgroupAsGroup.
MackeyHom restrict_hom(const MackeyFunctor& rsrc, const MackeyFunctor& rdst,
                       const SubgroupAsGroup& H, const GroupPtr& parent, const MackeyHom& f);

// ---------------------------------------------------------------------------
// Non-unital Tambara functors and augmentation ideals
// ---------------------------------------------------------------------------
struct NonUnitalTambara {
  MackeyFunctor mackey;
  std::vector<BilinearMap> mul;                  // per class, no unit required
  std::map<std::pair<int, int>, PolyHom> norm;   // proper pairs, degree [K:H]
};

// Mackey validity, bilinearity/commutativity/associativity of the products,
// Frobenius reciprocity, multiplicativity and the structural norm axioms on
// degree grids (everything of validate_tambara that does not mention a unit).
Report validate_non_unital(const NonUnitalTambara& I);

// For an ideal inside an ambient Tambara functor: the ambient module action
// act[c] : R.level[c] x I.level[c] -> I.level[c] satisfies the projection
// formula N(r . x) = N(r) . N(x) on the joint degree grid.
Report validate_ideal_action(const NonUnitalTambara& I, const TambaraFunctor& R,
                             const std::vector<BilinearMap>& act);

// Kernel of a surjective Tambara morphism aug : B -> R, with the inherited
// (non-unital) products, norms, and ambient B-action.
struct AugmentationIdeal {
  NonUnitalTambara I;
  std::vector<AbHom> incl;         // level inclusion into B, per class
  std::vector<BilinearMap> act;    // B.level[c] x I.level[c] -> I.level[c]
};
AugmentationIdeal augmentation_ideal(const TambaraFunctor& B, const MackeyHom& aug);

// The explicit isomorphism between the augmentation ideal of R |x M and M.
struct IdealModuleIso {
  MackeyHom fwd;  // ideal -> M.mod
  MackeyHom bwd;  // M.mod -> ideal
};
IdealModuleIso ideal_module_iso(const AugmentationIdeal& I, const SquareZero& sz,
                                const GreenModule& M);

// ---------------------------------------------------------------------------
// Localization at an element s of the top level
// ---------------------------------------------------------------------------
//
// The s-power-torsion levels ker(. s^k) form an ascending chain of sub-Mackey
// functors; once it stabilizes, the union is the kernel of R -> R[1/s] and is
// compatible with products and norms, so the quotient Q = R / ker carries an
// induced Tambara structure with s acting injectively.  Three certificates
// are reported: chain stabilization, whether multiplication by the image of s
// is already invertible on Q (then Q = R[1/s] on the nose), and whether the
// multiplication map Q box_R Q -> Q is an isomorphism.
struct Localization {
  std::shared_ptr<TambaraFunctor> Q;
  MackeyHom proj;             // R -> Q
  Vec s_image;                // image of s in Q's top level
  int stabilized_at = -1;     // least k with ker(s^k) = ker(s^{k+1}); -1 = not reached
  bool element_inverted = false;
  bool mult_iso = false;
};
Localization localize(const TambaraFunctor& R, const Vec& s_top, int depth = 8);

// ---------------------------------------------------------------------------
// Function objects B(T x -), coinduction, and relative function objects
// ---------------------------------------------------------------------------

// The Tambara functor X |-> B(T x X), with the canonical morphism
// B -> B(T x -) given by restriction along the projections T x X -> X.
struct FLevel {
  GSet T;
  std::shared_ptr<TambaraFunctor> BT;
  MackeyHom unit;  // B -> *BT
};
FLevel f_level(const TambaraFunctor& B, const GSet& T);

// Coinduction of a Tambara functor over the subgroup H: levels B(X|_H) with
// structure maps at restricted G-maps.  B must live over H.group.
TambaraFunctor coinduce(const GroupPtr& G, const SubgroupAsGroup& H, const TambaraFunctor& B);

// The unit R -> CoInd_H i_H^* R (restriction of values along the counit
// G x_H X|_H -> X followed by the induction-evaluation identification).
// RH must be restrict_to_subgroup(R, H) and CI = coinduce(G, H, RH.T).
MackeyHom coinduction_unit(const TambaraFunctor& R, const SubgroupAsGroup& H,
                           const RestrictedTambara& RH, const TambaraFunctor& CI);

// Relative function object F(T, B) for B augmented to R: the levelwise
// pullback of B(T x -) -> R(T x -) <- R, a Tambara functor augmented to R by
// the second projection.
struct FRelative {
  GSet T;
  std::shared_ptr<TambaraFunctor> F;
  MackeyHom to_R;                  // *F -> R
  std::shared_ptr<FLevel> BT, RT;  // underlying function objects
  std::vector<KernelData> lev;     // per class: kernel inside BT.level + R.level
};
FRelative f_relative(const GSet& T, const TambaraFunctor& B, const MackeyHom& aug,
                     const TambaraFunctor& R);

// The exponential identity F(T1 x T2, B) ~= F(T2, F(T1, B)), as an explicit
// isomorphism of Mackey functors (and of Tambara functors; certify with
// check_tambara_hom + is_mackey_iso).  T12 must be product_gset(T1, T2), F12 =
// f_relative(T12.total, ...), F1 = f_relative(T1, ...), F2 built over F1 with
// augmentation F1.to_R.
MackeyHom f_assoc_iso(const Product& T12, const FRelative& F12, const FRelative& F1,
                      const FRelative& F2, const TambaraFunctor& B, const TambaraFunctor& R);

// The external transfer F(T, B) -> B: include into B(T x -) and push forward
// along the projection T x X -> X.  For T = G/H this is the adjoint of the
// identity of the H-restriction.
MackeyHom external_transfer(const FRelative& F, const TambaraFunctor& B);

// ---------------------------------------------------------------------------
// The box square R box_S R as a Tambara functor
// ---------------------------------------------------------------------------

// R as a module over a base Green functor S through eta : S -> R.
GreenModule module_via_base(const GreenData& S, const GreenData& R, const MackeyHom& eta);

// The canonical (unique) Green morphism from the Burnside functor:
// the basis class [rep_c/P] goes to tr^{rep_c}_P res^{rep_c}_P 1.
MackeyHom burnside_unit_map(const BurnsideGreen& A, const GreenData& R);

// R box_S R with its ring structure, its two unit maps, its multiplication
// map to R, and its norms.  Norms of box elements are computed by the
// universal expansion: every element is a sum of transfers of pure tensors;
// norms of pure tensors are componentwise, norms of transfers pass through
// the exponential diagram, and norms of sums pass through the fold map's
// exponential diagram, recursively.
struct BoxTambara {
  BoxOver box;
  std::shared_ptr<TambaraFunctor> T;
  MackeyHom mul_map;    // *T -> R
  MackeyHom eta_left;   // R -> *T
  MackeyHom eta_right;  // R -> *T
};
BoxTambara box_tambara(const GreenData& S, const TambaraFunctor& Rt, const GreenModule& RmodS);

}  // namespace eqalg
