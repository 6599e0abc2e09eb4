#pragma once

#include <optional>

#include "eqalg/smith.hpp"

namespace eqalg {

// Finitely generated abelian group presented as coker(rel): Z^ngens / colspan(rel).
// Elements are integer coordinate vectors of length ngens; two vectors represent
// the same element iff their difference lies in the column span of rel.
class PresentedAb {
 public:
  PresentedAb() : ngens_(0), rel_(0, 0) { init(); }
  PresentedAb(int ngens, Mat rel);
  static PresentedAb free_group(int ngens) { return PresentedAb(ngens, Mat(ngens, 0)); }
  static PresentedAb cyclic(const Int& n);
  static PresentedAb zero() { return free_group(0); }

  int ngens() const { return ngens_; }
  const Mat& rel() const { return rel_; }
  const SmithForm& snf() const { return snf_; }

  // Invariant factors > 1, then one 0 per free rank (e.g. Z/2 + Z -> {2, 0}).
  std::vector<Int> invariant_factors() const;
  int free_rank() const { return ngens_ - snf_.rank; }
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const;
  Int order() const;  // throws if infinite

  Vec reduce(const Vec& x) const;  // canonical representative of x's class
  bool is_zero(const Vec& x) const;
  bool equal(const Vec& x, const Vec& y) const;

  // All elements as canonical representatives; throws if infinite or above cap.
  std::vector<Vec> enumerate(const Int& cap) const;

  bool contains_in_rel(const Vec& x) const { return is_zero(x); }

 private:
  void init();
  int ngens_;
  Mat rel_;
  SmithForm snf_;
};

struct AbHom {
  PresentedAb src, dst;
  Mat mat;  // dst.ngens x src.ngens

  AbHom() {}
  AbHom(PresentedAb s, PresentedAb d, Mat m);
  Vec apply(const Vec& x) const { return mat * x; }
  bool well_defined() const;
  bool is_zero_map() const;
  bool equal_hom(const AbHom& o) const;
};

AbHom hom_identity(const PresentedAb& A);
AbHom hom_compose(const AbHom& g, const AbHom& f);  // g after f
AbHom hom_add(const AbHom& f, const AbHom& g);
AbHom hom_sub(const AbHom& f, const AbHom& g);

// Subgroup of `amb` generated by the columns of gens, presented on those
// generators; incl embeds it back into amb.
struct SubPresentation {
  PresentedAb sub;
  AbHom incl;
};
SubPresentation subgroup_presentation(const PresentedAb& amb, const Mat& gens);

// Express y (an element of amb known to lie in the subgroup spanned by gens)
// in subgroup coordinates; nullopt if y is not in the subgroup.
std::optional<Vec> express_in_subgroup(const PresentedAb& amb, const Mat& gens, const Vec& y);

struct QuotPresentation {
  PresentedAb quot;
  AbHom proj;
};
QuotPresentation quotient_presentation(const PresentedAb& amb, const Mat& extra_relators);

struct KernelData {
  PresentedAb ker;
  AbHom incl;
};
KernelData hom_kernel(const AbHom& f);

struct ImageData {
  PresentedAb img;
  AbHom incl;
};
ImageData hom_image(const AbHom& f);

struct CokernelData {
  PresentedAb coker;
  AbHom proj;
};
CokernelData hom_cokernel(const AbHom& f);

// A (x) B with generator (i,j) at index i*B.ngens+j.
struct TensorData {
  PresentedAb prod;
  int a_gens, b_gens;
  int index(int i, int j) const { return i * b_gens + j; }
  Vec pure(const Vec& x, const Vec& y) const;  // x (x) y
};
TensorData tensor(const PresentedAb& A, const PresentedAb& B);

// Direct sum with coordinate bookkeeping.
struct DirectSum {
  PresentedAb total;
  std::vector<int> offsets;  // offsets[i] = first coordinate of summand i
  std::vector<int> sizes;
  Vec inject(int i, const Vec& x) const;
  Vec project(int i, const Vec& x) const;
};
DirectSum direct_sum(const std::vector<PresentedAb>& parts);

// Invertibility over the presentations: returns the inverse hom if f is an
// isomorphism, nullopt otherwise.
std::optional<AbHom> hom_inverse(const AbHom& f);

// ---------------------------------------------------------------------------
// General integer congruence solver.
//
// Unknown z in Z^n subject to homogeneous constraints C_i z = 0 mod colspan(R_i).
// The solution lattice L is returned with a basis; `group` presents L / L0
// where L0 is a caller-specified sublattice of trivial solutions (must itself
// satisfy the constraints).
// ---------------------------------------------------------------------------
struct Congruence {
  Mat C;       // e x n
  Mat modrel;  // e x k (may have 0 columns)
};

struct SolutionSpace {
  int nunknowns = 0;
  Mat basis;          // n x s: columns form a basis of the solution lattice
  PresentedAb group;  // solutions modulo the trivial sublattice
  // Coordinates of a solution vector in `basis` (exact; throws if not in lattice).
  Vec express(const Vec& z) const;
};

SolutionSpace solve_homogeneous(int nunknowns, const std::vector<Congruence>& cons,
                                const Mat& trivial_lattice);

// One solution of the affine system C_i z = b_i mod colspan(R_i), if any.
struct AffineCongruence {
  Mat C;
  Vec b;
  Mat modrel;
};
std::optional<Vec> solve_affine(int nunknowns, const std::vector<AffineCongruence>& cons);

}  // namespace eqalg
