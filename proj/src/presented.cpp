#include "eqalg/presented.hpp"

#include <cstdlib>

namespace eqalg {

PresentedAb::PresentedAb(int ngens, Mat rel) : ngens_(ngens), rel_(std::move(rel)) {
  if (rel_.rows() != ngens_) throw std::invalid_argument("PresentedAb: relation rows != ngens");
  init();
}

void PresentedAb::init() { snf_ = smith_normal_form(rel_); }

PresentedAb PresentedAb::cyclic(const Int& n) {
  Mat r(1, 1);
  r(0, 0) = n;
  return PresentedAb(1, r);
}

std::vector<Int> PresentedAb::invariant_factors() const {
  std::vector<Int> out;
  for (auto& d : snf_.diag)
    if (d > 1) out.push_back(d);
  for (int i = 0; i < free_rank(); ++i) out.push_back(0);
  return out;
}

bool PresentedAb::is_trivial() const {
  for (auto& d : snf_.diag)
    if (d > 1) return false;
  return free_rank() == 0;
}

Int PresentedAb::order() const {
  if (!is_finite()) throw std::runtime_error("order: group is infinite");
  Int o = 1;
  for (auto& d : snf_.diag) o *= d;
  return o;
}

Vec PresentedAb::reduce(const Vec& x) const {
  if ((int)x.size() != ngens_) throw std::invalid_argument("reduce: size mismatch");
  Vec y = snf_.U * x;
  for (int i = 0; i < snf_.rank; ++i) {
    Int m = y[i] % snf_.diag[i];
    if (m < 0) m += snf_.diag[i];
    y[i] = m;
  }
  return snf_.Uinv * y;
}

bool PresentedAb::is_zero(const Vec& x) const {
  Vec y = snf_.U * x;
  for (int i = 0; i < ngens_; ++i) {
    if (i < snf_.rank) {
      if (y[i] % snf_.diag[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

bool PresentedAb::equal(const Vec& x, const Vec& y) const { return is_zero(vec_sub(x, y)); }

std::vector<Vec> PresentedAb::enumerate(const Int& cap) const {
  if (!is_finite()) throw std::runtime_error("enumerate: group is infinite");
  Int o = order();
  if (o > cap) throw std::runtime_error("enumerate: order " + o.str() + " exceeds cap " + cap.str());
  std::vector<Vec> out;
  out.reserve((size_t)(unsigned long)o);
  Vec idx(snf_.rank, Int(0));
  for (;;) {
    Vec y(ngens_, Int(0));
    for (int i = 0; i < snf_.rank; ++i) y[i] = idx[i];
    out.push_back(reduce(snf_.Uinv * y));
    int i = 0;
    for (; i < snf_.rank; ++i) {
      idx[i] += 1;
      if (idx[i] < snf_.diag[i]) break;
      idx[i] = 0;
    }
    if (i == snf_.rank) break;
    if (snf_.rank == 0) break;
  }
  if (snf_.rank == 0) out = {Vec(ngens_, Int(0))};
  return out;
}

AbHom::AbHom(PresentedAb s, PresentedAb d, Mat m)
    : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
  if (mat.rows() != dst.ngens() || mat.cols() != src.ngens())
    throw std::invalid_argument("AbHom: matrix shape mismatch");
}

bool AbHom::well_defined() const {
  // each relator of the source must map into the relation span of the target
  Mat img = mat * src.rel();
  for (int j = 0; j < img.cols(); ++j)
    if (!dst.is_zero(img.col(j))) return false;
  return true;
}

bool AbHom::is_zero_map() const {
  for (int j = 0; j < mat.cols(); ++j)
    if (!dst.is_zero(mat.col(j))) return false;
  return true;
}

bool AbHom::equal_hom(const AbHom& o) const {
  if (mat.rows() != o.mat.rows() || mat.cols() != o.mat.cols()) return false;
  Mat d = mat - o.mat;
  for (int j = 0; j < d.cols(); ++j)
    if (!dst.is_zero(d.col(j))) return false;
  return true;
}

AbHom hom_identity(const PresentedAb& A) { return AbHom(A, A, Mat::identity(A.ngens())); }

AbHom hom_compose(const AbHom& g, const AbHom& f) {
  if (g.src.ngens() != f.dst.ngens()) throw std::invalid_argument("hom_compose: shape mismatch");
  return AbHom(f.src, g.dst, g.mat * f.mat);
}

AbHom hom_add(const AbHom& f, const AbHom& g) { return AbHom(f.src, f.dst, f.mat + g.mat); }
AbHom hom_sub(const AbHom& f, const AbHom& g) { return AbHom(f.src, f.dst, f.mat - g.mat); }

SubPresentation subgroup_presentation(const PresentedAb& amb, const Mat& gens) {
  if (gens.rows() != amb.ngens()) throw std::invalid_argument("subgroup_presentation: shape");
  int m = gens.cols();
  // relations: coefficient vectors c with gens*c inside the ambient relation span
  Mat big = gens.hstack(amb.rel());
  Mat K = kernel_basis(big);
  Mat rel(m, K.cols());
  for (int j = 0; j < K.cols(); ++j)
    for (int i = 0; i < m; ++i) rel(i, j) = K(i, j);
  PresentedAb sub(m, rel);
  return {sub, AbHom(sub, amb, gens)};
}

std::optional<Vec> express_in_subgroup(const PresentedAb& amb, const Mat& gens, const Vec& y) {
  // solve gens*c + amb.rel()*w = y
  Mat big = gens.hstack(amb.rel());
  auto sol = solve(big, y);
  if (!sol) return std::nullopt;
  Vec c(gens.cols());
  for (int i = 0; i < gens.cols(); ++i) c[i] = (*sol)[i];
  return c;
}

QuotPresentation quotient_presentation(const PresentedAb& amb, const Mat& extra) {
  if (extra.rows() != amb.ngens()) throw std::invalid_argument("quotient_presentation: shape");
  PresentedAb q(amb.ngens(), amb.rel().hstack(extra));
  return {q, AbHom(amb, q, Mat::identity(amb.ngens()))};
}

KernelData hom_kernel(const AbHom& f) {
  // kernel of f: elements x of src with f(x) in the relation span of dst;
  // generated by the x-parts of ker[f.mat | dst.rel], together with src relators
  Mat big = f.mat.hstack(f.dst.rel());
  Mat K = kernel_basis(big);
  int n = f.src.ngens();
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = K(i, j);
    if (!vec_is_zero(x)) gens.push_back(x);
  }
  Mat G = Mat::from_cols(gens, n);
  auto sp = subgroup_presentation(f.src, G);
  return {sp.sub, sp.incl};
}

ImageData hom_image(const AbHom& f) {
  auto sp = subgroup_presentation(f.dst, f.mat);
  return {sp.sub, sp.incl};
}

CokernelData hom_cokernel(const AbHom& f) {
  auto q = quotient_presentation(f.dst, f.mat);
  return {q.quot, q.proj};
}

TensorData tensor(const PresentedAb& A, const PresentedAb& B) {
  int a = A.ngens(), b = B.ngens();
  std::vector<Vec> rel;
  // relators of A tensored with B generators
  for (int j = 0; j < A.rel().cols(); ++j)
    for (int k = 0; k < b; ++k) {
      Vec r(size_t(a) * b, Int(0));
      for (int i = 0; i < a; ++i) r[size_t(i) * b + k] = A.rel()(i, j);
      rel.push_back(r);
    }
  for (int j = 0; j < B.rel().cols(); ++j)
    for (int i = 0; i < a; ++i) {
      Vec r(size_t(a) * b, Int(0));
      for (int k = 0; k < b; ++k) r[size_t(i) * b + k] = B.rel()(k, j);
      rel.push_back(r);
    }
  TensorData T;
  T.a_gens = a;
  T.b_gens = b;
  T.prod = PresentedAb(a * b, Mat::from_cols(rel, a * b));
  return T;
}

Vec TensorData::pure(const Vec& x, const Vec& y) const {
  Vec r(size_t(a_gens) * b_gens, Int(0));
  for (int i = 0; i < a_gens; ++i)
    for (int j = 0; j < b_gens; ++j) r[size_t(i) * b_gens + j] = x[i] * y[j];
  return r;
}

DirectSum direct_sum(const std::vector<PresentedAb>& parts) {
  DirectSum ds;
  std::vector<Mat> rels;
  int off = 0;
  for (auto& p : parts) {
    ds.offsets.push_back(off);
    ds.sizes.push_back(p.ngens());
    rels.push_back(p.rel());
    off += p.ngens();
  }
  ds.total = PresentedAb(off, block_diag(rels));
  return ds;
}

Vec DirectSum::inject(int i, const Vec& x) const {
  Vec r(total.ngens(), Int(0));
  for (int k = 0; k < sizes[i]; ++k) r[offsets[i] + k] = x[k];
  return r;
}

Vec DirectSum::project(int i, const Vec& x) const {
  Vec r(sizes[i]);
  for (int k = 0; k < sizes[i]; ++k) r[k] = x[offsets[i] + k];
  return r;
}

std::optional<AbHom> hom_inverse(const AbHom& f) {
  if (!f.well_defined()) return std::nullopt;
  // find g with f.mat * g = I mod dst.rel, i.e. solve per target generator
  Mat big = f.mat.hstack(f.dst.rel());
  SmithForm S = smith_normal_form(big);
  Mat g(f.src.ngens(), f.dst.ngens());
  for (int j = 0; j < f.dst.ngens(); ++j) {
    auto sol = solve(S, unit_vec(f.dst.ngens(), j));
    if (!sol) return std::nullopt;
    for (int i = 0; i < f.src.ngens(); ++i) g(i, j) = (*sol)[i];
  }
  AbHom ginv(f.dst, f.src, g);
  if (!ginv.well_defined()) return std::nullopt;
  // g f = id on src?
  if (!hom_compose(ginv, f).equal_hom(hom_identity(f.src))) return std::nullopt;
  if (!hom_compose(f, ginv).equal_hom(hom_identity(f.dst))) return std::nullopt;
  return ginv;
}

SolutionSpace solve_homogeneous(int n, const std::vector<Congruence>& cons,
                                const Mat& trivial_lattice) {
  // stack [C_1; ...; C_m] and block-diagonal relation columns
  std::vector<Mat> Cs, Rs;
  for (auto& c : cons) {
    if (c.C.cols() != n) throw std::invalid_argument("solve_homogeneous: unknown count mismatch");
    if (c.modrel.rows() != c.C.rows())
      throw std::invalid_argument("solve_homogeneous: relation rows mismatch");
    Cs.push_back(c.C);
    Rs.push_back(c.modrel);
  }
  Mat C = Cs.empty() ? Mat(0, n) : Cs[0];
  for (size_t i = 1; i < Cs.size(); ++i) C = C.vstack(Cs[i]);
  Mat R = block_diag(Rs);
  if (R.rows() != C.rows()) {
    // happens when cons is empty
    R = Mat(C.rows(), 0);
  }
  Mat big = C.hstack(R);
  Mat K = kernel_basis(big);
  // generating set of the solution lattice = z-parts of K
  std::vector<Vec> zgens;
  for (int j = 0; j < K.cols(); ++j) {
    Vec z(n);
    for (int i = 0; i < n; ++i) z[i] = K(i, j);
    if (!vec_is_zero(z)) zgens.push_back(z);
  }
  // a Z-basis of the lattice generated by zgens: image basis via SNF
  Mat G = Mat::from_cols(zgens, n);
  SmithForm S = smith_normal_form(G);
  std::vector<Vec> basis;
  for (int i = 0; i < S.rank; ++i) {
    // column i of Uinv * D  (i.e. d_i * Uinv e_i) is a basis vector of im(G)
    Vec v(n);
    for (int r = 0; r < n; ++r) v[r] = S.Uinv(r, i) * S.diag[i];
    basis.push_back(v);
  }
  Mat B = Mat::from_cols(basis, n);

  SolutionSpace sp;
  sp.nunknowns = n;
  sp.basis = B;
  // relations: coordinates of the trivial lattice generators in the basis
  std::vector<Vec> rel;
  SmithForm SB = smith_normal_form(B);
  for (int j = 0; j < trivial_lattice.cols(); ++j) {
    auto c = solve(SB, trivial_lattice.col(j));
    if (!c)
      throw std::runtime_error(
          "solve_homogeneous: trivial lattice vector is not a solution of the system");
    rel.push_back(*c);
  }
  sp.group = PresentedAb(B.cols(), Mat::from_cols(rel, B.cols()));
  return sp;
}

Vec SolutionSpace::express(const Vec& z) const {
  auto c = solve(basis, z);
  if (!c) throw std::runtime_error("SolutionSpace::express: vector not in solution lattice");
  return *c;
}

std::optional<Vec> solve_affine(int n, const std::vector<AffineCongruence>& cons) {
  std::vector<Mat> Cs, Rs;
  Vec b;
  for (auto& c : cons) {
    if (c.C.cols() != n) throw std::invalid_argument("solve_affine: unknown count mismatch");
    Cs.push_back(c.C);
    Rs.push_back(c.modrel);
    for (auto& x : c.b) b.push_back(x);
  }
  if (Cs.empty()) return Vec(n, Int(0));
  Mat C = Cs[0];
  for (size_t i = 1; i < Cs.size(); ++i) C = C.vstack(Cs[i]);
  Mat R = block_diag(Rs);
  Mat big = C.hstack(R);
  auto sol = solve(big, b);
  if (!sol) return std::nullopt;
  Vec z(n);
  for (int i = 0; i < n; ++i) z[i] = (*sol)[i];
  return z;
}

}  // namespace eqalg
