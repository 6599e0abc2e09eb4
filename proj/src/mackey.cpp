#include "eqalg/mackey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mackey_internal.hpp"

namespace eqalg {

// --- small helpers ----------------------------------------------------------

int mackey_rep_of_class(const GroupPtr& G, int c) { return G->classes().at(c).rep; }
static int rep_of_class(const GroupPtr& G, int c) { return mackey_rep_of_class(G, c); }

std::string mackey_sub_label(const GroupPtr& G, int s) {
  return "#" + std::to_string(s) + "(" + G->classes().at(G->class_of_subgroup(s)).label + ")";
}
static std::string sub_label(const GroupPtr& G, int s) { return mackey_sub_label(G, s); }

// index of the subgroup S cap T
int intersect_subgroups(const GroupPtr& G, int S, int T) {
  const Subgroup& a = G->subgroup(S);
  const Subgroup& b = G->subgroup(T);
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  int idx = G->subgroup_index(out);
  if (idx < 0) throw std::logic_error("intersect_subgroups: intersection not found");
  return idx;
}

// --- MackeyFunctor accessors -------------------------------------------------

const AbHom& MackeyFunctor::res_map(int K, int S) const {
  if (!G->subgroup_contains(K, S))
    throw std::invalid_argument("res_map: " + sub_label(G, S) + " is not a subgroup of " +
                                sub_label(G, K));
  return res.at({K, S});
}

const AbHom& MackeyFunctor::tr_map(int S, int K) const {
  if (!G->subgroup_contains(K, S))
    throw std::invalid_argument("tr_map: " + sub_label(G, S) + " is not a subgroup of " +
                                sub_label(G, K));
  return tr.at({S, K});
}

const AbHom& MackeyFunctor::conj_map(int g, int S) const { return conj.at({g, S}); }

// --- build ------------------------------------------------------------------

MackeyFunctor build_mackey(const MackeyBuilder& b) {
  const GroupPtr& G = b.G;
  int ns = (int)G->subgroups().size();
  int nc = (int)G->classes().size();

  MackeyFunctor M;
  M.G = G;
  M.name = b.name;

  std::vector<PresentedAb> conc(ns);
  for (int s = 0; s < ns; ++s) conc[s] = b.level_of(s);

  M.level.resize(nc);
  for (int c = 0; c < nc; ++c) M.level[c] = conc[rep_of_class(G, c)];

  // gamma twists into/out of class representative presentations
  std::vector<Mat> to_rep(ns), from_rep(ns);
  for (int s = 0; s < ns; ++s) {
    int g = G->conjugator_to_rep(s);
    int rep = rep_of_class(G, G->class_of_subgroup(s));
    to_rep[s] = b.conj_of(g, s);
    from_rep[s] = b.conj_of(G->inv(g), rep);
  }

  auto install = [&](std::map<std::pair<int, int>, AbHom>& table, std::pair<int, int> key,
                     const PresentedAb& src, const PresentedAb& dst, const Mat& mat,
                     const char* kind) {
    AbHom h(src, dst, mat);
    if (!h.well_defined())
      throw std::invalid_argument(std::string("build_mackey(") + b.name + "): " + kind + " at (" +
                                  sub_label(G, key.first) + "," + sub_label(G, key.second) +
                                  ") is not a well-defined homomorphism");
    table[key] = std::move(h);
  };

  for (int K = 0; K < ns; ++K) {
    int cK = G->class_of_subgroup(K);
    for (int S = 0; S < ns; ++S) {
      if (!G->subgroup_contains(K, S)) continue;
      int cS = G->class_of_subgroup(S);
      Mat rmat = to_rep[S] * (b.res_of(K, S) * from_rep[K]);
      install(M.res, {K, S}, M.level[cK], M.level[cS], rmat, "res");
      Mat tmat = to_rep[K] * (b.tr_of(S, K) * from_rep[S]);
      install(M.tr, {S, K}, M.level[cS], M.level[cK], tmat, "tr");
    }
  }
  for (int g = 0; g < G->size(); ++g) {
    for (int S = 0; S < ns; ++S) {
      int S2 = G->conjugate_subgroup(g, S);
      int cS = G->class_of_subgroup(S);
      int cS2 = G->class_of_subgroup(S2);
      Mat cmat = to_rep[S2] * (b.conj_of(g, S) * from_rep[S]);
      install(M.conj, {g, S}, M.level[cS], M.level[cS2], cmat, "conj");
    }
  }
  return M;
}

// --- validation --------------------------------------------------------------

Report validate_mackey(const MackeyFunctor& M) {
  const GroupPtr& G = M.G;
  int ns = (int)G->subgroups().size();
  int n = G->size();
  Report rep;

  auto aggregate = [&rep](const std::string& id, const std::string& anchor, bool pass, int count,
                          const std::string& witness) {
    rep.add(id, anchor, pass, pass ? std::to_string(count) + " instances" : witness);
  };

  // completeness and well-definedness of the stored maps
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int S = 0; S < ns && pass; ++S) {
        if (!G->subgroup_contains(K, S)) continue;
        if (!M.res.count({K, S}) || !M.tr.count({S, K})) {
          pass = false;
          w = "missing res/tr at (" + sub_label(G, K) + "," + sub_label(G, S) + ")";
          break;
        }
        if (!M.res.at({K, S}).well_defined() || !M.tr.at({S, K}).well_defined()) {
          pass = false;
          w = "ill-defined res/tr at (" + sub_label(G, K) + "," + sub_label(G, S) + ")";
          break;
        }
        count += 2;
      }
    for (int g = 0; g < n && pass; ++g)
      for (int S = 0; S < ns && pass; ++S) {
        if (!M.conj.count({g, S})) {
          pass = false;
          w = "missing conj at (g=" + G->name(g) + "," + sub_label(G, S) + ")";
          break;
        }
        if (!M.conj.at({g, S}).well_defined()) {
          pass = false;
          w = "ill-defined conj at (g=" + G->name(g) + "," + sub_label(G, S) + ")";
          break;
        }
        ++count;
      }
    aggregate("mackey.maps", "all structure maps present and well-defined", pass, count, w);
  }
  if (!rep.ok()) return rep;  // the remaining checks need the maps

  // identities
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int H = 0; H < ns && pass; ++H) {
      AbHom id = hom_identity(M.at_subgroup(H));
      if (!M.res.at({H, H}).equal_hom(id)) { pass = false; w = "res at " + sub_label(G, H); }
      else if (!M.tr.at({H, H}).equal_hom(id)) { pass = false; w = "tr at " + sub_label(G, H); }
      else if (!M.conj.at({G->identity(), H}).equal_hom(id)) {
        pass = false;
        w = "conj_e at " + sub_label(G, H);
      }
      count += 3;
    }
    aggregate("mackey.identity", "res^H_H = tr^H_H = conj_e = id", pass, count, w);
  }

  // inner conjugations are trivial
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int H = 0; H < ns && pass; ++H) {
      AbHom id = hom_identity(M.at_subgroup(H));
      for (int h : G->subgroup(H)) {
        if (!M.conj.at({h, H}).equal_hom(id)) {
          pass = false;
          w = "conj_" + G->name(h) + " at " + sub_label(G, H);
          break;
        }
        ++count;
      }
    }
    aggregate("mackey.inner_conj", "conj_h = id on M(G/H) for h in H", pass, count, w);
  }

  // conjugation cocycle
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int S = 0; S < ns && pass; ++S)
      for (int h = 0; h < n && pass; ++h) {
        int Sh = G->conjugate_subgroup(h, S);
        for (int g = 0; g < n; ++g) {
          AbHom lhs = hom_compose(M.conj.at({g, Sh}), M.conj.at({h, S}));
          AbHom rhs = M.conj.at({G->mul(g, h), S});
          if (!lhs.equal_hom(rhs)) {
            pass = false;
            w = "g=" + G->name(g) + " h=" + G->name(h) + " S=" + sub_label(G, S);
            break;
          }
          ++count;
        }
      }
    aggregate("mackey.cocycle", "conj_g conj_h = conj_gh", pass, count, w);
  }

  // transitivity of res and tr
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int H = 0; H < ns && pass; ++H) {
        if (!G->subgroup_contains(K, H)) continue;
        for (int L = 0; L < ns; ++L) {
          if (!G->subgroup_contains(H, L)) continue;
          AbHom rl = hom_compose(M.res.at({H, L}), M.res.at({K, H}));
          if (!rl.equal_hom(M.res.at({K, L}))) {
            pass = false;
            w = "res chain " + sub_label(G, L) + "<=" + sub_label(G, H) + "<=" + sub_label(G, K);
            break;
          }
          AbHom tl = hom_compose(M.tr.at({H, K}), M.tr.at({L, H}));
          if (!tl.equal_hom(M.tr.at({L, K}))) {
            pass = false;
            w = "tr chain " + sub_label(G, L) + "<=" + sub_label(G, H) + "<=" + sub_label(G, K);
            break;
          }
          count += 2;
        }
      }
    aggregate("mackey.transitivity", "res and tr compose along subgroup chains", pass, count, w);
  }

  // conjugation is compatible with res and tr
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int g = 0; g < n && pass; ++g)
      for (int K = 0; K < ns && pass; ++K)
        for (int S = 0; S < ns; ++S) {
          if (!G->subgroup_contains(K, S)) continue;
          int K2 = G->conjugate_subgroup(g, K), S2 = G->conjugate_subgroup(g, S);
          AbHom lhs = hom_compose(M.conj.at({g, S}), M.res.at({K, S}));
          AbHom rhs = hom_compose(M.res.at({K2, S2}), M.conj.at({g, K}));
          if (!lhs.equal_hom(rhs)) {
            pass = false;
            w = "res g=" + G->name(g) + " (" + sub_label(G, K) + "," + sub_label(G, S) + ")";
            break;
          }
          AbHom lht = hom_compose(M.conj.at({g, K}), M.tr.at({S, K}));
          AbHom rht = hom_compose(M.tr.at({S2, K2}), M.conj.at({g, S}));
          if (!lht.equal_hom(rht)) {
            pass = false;
            w = "tr g=" + G->name(g) + " (" + sub_label(G, K) + "," + sub_label(G, S) + ")";
            break;
          }
          count += 2;
        }
    aggregate("mackey.conj_compat", "conj_g intertwines res and tr", pass, count, w);
  }

  // double coset formula
  {
    bool pass = true;
    std::string w;
    int count = 0;
    for (int K = 0; K < ns && pass; ++K)
      for (int L = 0; L < ns && pass; ++L) {
        if (!G->subgroup_contains(K, L)) continue;
        for (int H = 0; H < ns; ++H) {
          if (!G->subgroup_contains(K, H)) continue;
          AbHom lhs = hom_compose(M.res.at({K, L}), M.tr.at({H, K}));
          AbHom rhs(M.at_subgroup(H), M.at_subgroup(L),
                    Mat(M.at_subgroup(L).ngens(), M.at_subgroup(H).ngens()));
          for (int g : G->double_coset_reps(K, L, H)) {
            int A = intersect_subgroups(G, L, G->conjugate_subgroup(g, H));
            int B = G->conjugate_subgroup(G->inv(g), A);  // = g^-1 L g cap H
            AbHom term = hom_compose(
                M.tr.at({A, L}), hom_compose(M.conj.at({g, B}), M.res.at({H, B})));
            rhs = hom_add(rhs, term);
          }
          if (!lhs.equal_hom(rhs)) {
            pass = false;
            w = "K=" + sub_label(G, K) + " L=" + sub_label(G, L) + " H=" + sub_label(G, H);
            break;
          }
          ++count;
        }
      }
    aggregate("mackey.double_coset",
              "res^K_L tr^K_H = sum over L\\K/H of tr conj res", pass, count, w);
  }

  return rep;
}

// --- constructors ------------------------------------------------------------

MackeyFunctor zero_mackey(const GroupPtr& G) {
  MackeyBuilder b;
  b.G = G;
  b.name = "zero";
  b.level_of = [](int) { return PresentedAb::zero(); };
  b.res_of = [](int, int) { return Mat(0, 0); };
  b.tr_of = [](int, int) { return Mat(0, 0); };
  b.conj_of = [](int, int) { return Mat(0, 0); };
  return build_mackey(b);
}

namespace {
// per-subgroup tables for the Burnside functor: K-conjugacy classes of
// subgroups of K
struct BurnsideTables {
  GroupPtr G;
  std::vector<std::vector<int>> basis;  // per subgroup index K: class reps
  std::vector<std::map<int, int>> pos;  // per K: any subgroup of K -> basis slot

  explicit BurnsideTables(const GroupPtr& Gp) : G(Gp) {
    int ns = (int)G->subgroups().size();
    basis.resize(ns);
    pos.resize(ns);
    for (int K = 0; K < ns; ++K) {
      std::set<int> seen;
      for (int S = 0; S < ns; ++S) {
        if (!G->subgroup_contains(K, S) || seen.count(S)) continue;
        // K-conjugacy orbit of S
        std::vector<int> orbit;
        int mn = S;
        for (int k : G->subgroup(K)) {
          int T = G->conjugate_subgroup(k, S);
          if (!seen.count(T)) orbit.push_back(T);
          seen.insert(T);
          mn = std::min(mn, T);
        }
        int slot = (int)basis[K].size();
        basis[K].push_back(mn);
        for (int T : orbit) pos[K][T] = slot;
      }
      // make generator order canonical: sort by representative index
      std::vector<int> order(basis[K].size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
      std::sort(order.begin(), order.end(),
                [&](int a, int bI) { return basis[K][a] < basis[K][bI]; });
      std::vector<int> inv(order.size());
      std::vector<int> nb(order.size());
      for (size_t i = 0; i < order.size(); ++i) {
        nb[i] = basis[K][order[i]];
        inv[order[i]] = (int)i;
      }
      basis[K] = nb;
      for (auto& kv : pos[K]) kv.second = inv[kv.second];
    }
  }
};
}  // namespace

BurnsideMackey burnside_mackey_data(const GroupPtr& G) {
  auto tab = std::make_shared<BurnsideTables>(G);
  MackeyBuilder b;
  b.G = G;
  b.name = "burnside";
  b.level_of = [tab](int K) { return PresentedAb::free_group((int)tab->basis[K].size()); };
  b.res_of = [tab, G](int K, int H) {
    Mat m((int)tab->basis[H].size(), (int)tab->basis[K].size());
    for (int j = 0; j < (int)tab->basis[K].size(); ++j) {
      int S = tab->basis[K][j];
      for (int g : G->double_coset_reps(K, H, S)) {
        int A = intersect_subgroups(G, H, G->conjugate_subgroup(g, S));
        m(tab->pos[H].at(A), j) += 1;
      }
    }
    return m;
  };
  b.tr_of = [tab](int S, int K) {
    Mat m((int)tab->basis[K].size(), (int)tab->basis[S].size());
    for (int j = 0; j < (int)tab->basis[S].size(); ++j)
      m(tab->pos[K].at(tab->basis[S][j]), j) += 1;
    return m;
  };
  b.conj_of = [tab, G](int g, int S) {
    int S2 = G->conjugate_subgroup(g, S);
    Mat m((int)tab->basis[S2].size(), (int)tab->basis[S].size());
    for (int j = 0; j < (int)tab->basis[S].size(); ++j)
      m(tab->pos[S2].at(G->conjugate_subgroup(g, tab->basis[S][j])), j) += 1;
    return m;
  };
  BurnsideMackey out;
  out.M = build_mackey(b);
  out.basis.resize(G->classes().size());
  for (int c = 0; c < (int)G->classes().size(); ++c) out.basis[c] = tab->basis[rep_of_class(G, c)];
  return out;
}

MackeyFunctor burnside_mackey(const GroupPtr& G) { return burnside_mackey_data(G).M; }

MackeyFunctor fixed_point_mackey(const GroupPtr& G, const PresentedAb& A,
                                 const std::function<Mat(int)>& rho, const std::string& name) {
  return fixed_point_mackey_data(G, A, rho, name).M;
}

FixedPointMackey fixed_point_mackey_data(const GroupPtr& G, const PresentedAb& A,
                                         const std::function<Mat(int)>& rho,
                                         const std::string& name) {
  int ns = (int)G->subgroups().size();
  // sanity: rho is an action by well-defined endomorphisms
  for (int g = 0; g < G->size(); ++g) {
    AbHom h(A, A, rho(g));
    if (!h.well_defined())
      throw std::invalid_argument("fixed_point_mackey: rho(" + G->name(g) +
                                  ") is not a well-defined endomorphism");
  }

  auto kers = std::make_shared<std::vector<KernelData>>();
  kers->reserve(ns);
  for (int H = 0; H < ns; ++H) {
    const Subgroup& hs = G->subgroup(H);
    Mat stacked(0, A.ngens());
    std::vector<PresentedAb> parts;
    for (int h : hs) {
      stacked = stacked.rows() == 0 ? (rho(h) - Mat::identity(A.ngens()))
                                    : stacked.vstack(rho(h) - Mat::identity(A.ngens()));
      parts.push_back(A);
    }
    AbHom d(A, direct_sum(parts).total, stacked);
    kers->push_back(hom_kernel(d));
  }

  auto into_level = [kers, &A](int H, const Vec& a) {
    auto coords = express_in_subgroup(A, (*kers)[H].incl.mat, a);
    if (!coords) throw std::logic_error("fixed_point_mackey: element not H-fixed");
    return *coords;
  };

  MackeyBuilder b;
  b.G = G;
  b.name = name;
  b.level_of = [kers](int H) { return (*kers)[H].ker; };
  b.res_of = [kers, into_level](int K, int S) {
    const AbHom& incl = (*kers)[K].incl;
    std::vector<Vec> cols;
    for (int j = 0; j < incl.src.ngens(); ++j) cols.push_back(into_level(S, incl.mat.col(j)));
    return Mat::from_cols(cols, (*kers)[S].ker.ngens());
  };
  b.tr_of = [kers, into_level, G, rho](int S, int K) {
    const AbHom& incl = (*kers)[S].incl;
    std::vector<int> reps = G->coset_reps(K, S);
    std::vector<Vec> cols;
    for (int j = 0; j < incl.src.ngens(); ++j) {
      Vec a = incl.mat.col(j);
      Vec sum = zero_vec(a.size() ? (int)a.size() : incl.mat.rows());
      for (int k : reps) sum = vec_add(sum, rho(k) * a);
      cols.push_back(into_level(K, sum));
    }
    return Mat::from_cols(cols, (*kers)[K].ker.ngens());
  };
  b.conj_of = [kers, into_level, G, rho](int g, int S) {
    int S2 = G->conjugate_subgroup(g, S);
    const AbHom& incl = (*kers)[S].incl;
    std::vector<Vec> cols;
    for (int j = 0; j < incl.src.ngens(); ++j)
      cols.push_back(into_level(S2, rho(g) * incl.mat.col(j)));
    return Mat::from_cols(cols, (*kers)[S2].ker.ngens());
  };
  FixedPointMackey out;
  out.M = build_mackey(b);
  out.kers = *kers;
  return out;
}

MackeyFunctor fixed_point_mackey_free(const GroupPtr& G, int rank,
                                      const std::function<Mat(int)>& rho,
                                      const std::string& name) {
  return fixed_point_mackey(G, PresentedAb::free_group(rank), rho, name);
}

// --- evaluation at G-sets ----------------------------------------------------

GSetLevel evaluate_at_gset(const MackeyFunctor& M, const GSet& X) {
  GSetLevel L;
  L.X = X;
  L.dec = orbit_decompose(X);
  std::vector<PresentedAb> parts;
  for (const Orbit& o : L.dec.orbits) parts.push_back(M.level.at(o.class_id));
  L.sum = direct_sum(parts);
  L.total = L.sum.total;
  return L;
}

// per-orbit data used by both transports: for X-orbit i mapping into Y-orbit j,
// the conjugated stabilizer pair
struct TransportBlock {
  int i, j;        // orbit indices in X and Y
  int H;           // stabilizer of X-orbit rep (the class representative)
  int K;           // stabilizer of Y-orbit rep
  int a;           // group element with f(rep_i) = a . rep_j
  int aKa;         // a K a^-1, contains H
};

static std::vector<TransportBlock> transport_blocks(const MackeyFunctor& M, const GSetLevel& LX,
                                                    const GSetLevel& LY, const GMap& f) {
  if (!check_equivariant(f).empty())
    throw std::invalid_argument("transport: map is not equivariant");
  if (!same_gset(f.src, LX.X) || !same_gset(f.dst, LY.X))
    throw std::invalid_argument("transport: levels do not match the map");
  const GroupPtr& G = M.G;
  std::vector<TransportBlock> out;
  for (int i = 0; i < (int)LX.dec.orbits.size(); ++i) {
    TransportBlock tb;
    tb.i = i;
    const Orbit& o = LX.dec.orbits[i];
    tb.H = rep_of_class(G, o.class_id);
    int y = f.map.at(o.rep);
    tb.j = LY.dec.orbit_of.at(y);
    const Orbit& oy = LY.dec.orbits[tb.j];
    tb.K = rep_of_class(G, oy.class_id);
    tb.a = LY.dec.conj_of.at(y);  // y = a . rep_y
    tb.aKa = G->conjugate_subgroup(tb.a, tb.K);
    if (!G->subgroup_contains(tb.aKa, tb.H))
      throw std::logic_error("transport: stabilizer inclusion failed");
    out.push_back(tb);
  }
  return out;
}

AbHom transport_T(const MackeyFunctor& M, const GSetLevel& LX, const GSetLevel& LY,
                  const GMap& f) {
  const GroupPtr& G = M.G;
  Mat mat(LY.total.ngens(), LX.total.ngens());
  for (const TransportBlock& tb : transport_blocks(M, LX, LY, f)) {
    AbHom block = hom_compose(M.conj_map(G->inv(tb.a), tb.aKa), M.tr_map(tb.H, tb.aKa));
    for (int q = 0; q < block.mat.rows(); ++q)
      for (int p = 0; p < block.mat.cols(); ++p)
        mat(LY.sum.offsets[tb.j] + q, LX.sum.offsets[tb.i] + p) += block.mat(q, p);
  }
  AbHom h(LX.total, LY.total, mat);
  if (!h.well_defined()) throw std::logic_error("transport_T: assembled map ill-defined");
  return h;
}

AbHom transport_R(const MackeyFunctor& M, const GSetLevel& LX, const GSetLevel& LY,
                  const GMap& f) {
  const GroupPtr& G = M.G;
  Mat mat(LX.total.ngens(), LY.total.ngens());
  for (const TransportBlock& tb : transport_blocks(M, LX, LY, f)) {
    AbHom block = hom_compose(M.res_map(tb.aKa, tb.H), M.conj_map(tb.a, tb.K));
    for (int q = 0; q < block.mat.rows(); ++q)
      for (int p = 0; p < block.mat.cols(); ++p)
        mat(LX.sum.offsets[tb.i] + q, LY.sum.offsets[tb.j] + p) += block.mat(q, p);
  }
  AbHom h(LY.total, LX.total, mat);
  if (!h.well_defined()) throw std::logic_error("transport_R: assembled map ill-defined");
  return h;
}

// --- morphisms ---------------------------------------------------------------

Report check_mackey_hom(const MackeyHom& f) {
  Report rep;
  const MackeyFunctor& M = *f.src;
  const MackeyFunctor& N = *f.dst;
  const GroupPtr& G = M.G;
  int nc = (int)G->classes().size();

  bool shape = (N.G == G) && ((int)f.comp.size() == nc);
  for (int c = 0; c < nc && shape; ++c) {
    const AbHom& h = f.comp[c];
    shape = h.mat.rows() == N.level[c].ngens() && h.mat.cols() == M.level[c].ngens() &&
            h.well_defined();
  }
  rep.add("hom.shape", "components are well-defined maps of the levels", shape,
          shape ? "" : "component mismatch");
  if (!shape) return rep;

  auto natural = [&](const std::map<std::pair<int, int>, AbHom>& mm,
                     const std::map<std::pair<int, int>, AbHom>& nm, const char* id,
                     const char* anchor, auto classes_of) {
    bool pass = true;
    std::string w;
    int count = 0;
    for (const auto& kv : mm) {
      auto [c1, c2] = classes_of(kv.first);
      AbHom lhs = hom_compose(f.comp[c2], kv.second);
      AbHom rhs = hom_compose(nm.at(kv.first), f.comp[c1]);
      if (!lhs.equal_hom(rhs)) {
        pass = false;
        w = "key (" + std::to_string(kv.first.first) + "," + std::to_string(kv.first.second) + ")";
        break;
      }
      ++count;
    }
    rep.add(id, anchor, pass, pass ? std::to_string(count) + " instances" : w);
  };

  natural(M.res, N.res, "hom.res", "components commute with restrictions",
          [&](std::pair<int, int> k) {
            return std::pair<int, int>{G->class_of_subgroup(k.first),
                                       G->class_of_subgroup(k.second)};
          });
  natural(M.tr, N.tr, "hom.tr", "components commute with transfers",
          [&](std::pair<int, int> k) {
            return std::pair<int, int>{G->class_of_subgroup(k.first),
                                       G->class_of_subgroup(k.second)};
          });
  natural(M.conj, N.conj, "hom.conj", "components commute with conjugations",
          [&](std::pair<int, int> k) {
            return std::pair<int, int>{
                G->class_of_subgroup(k.second),
                G->class_of_subgroup(G->conjugate_subgroup(k.first, k.second))};
          });
  return rep;
}

HomLayout hom_layout(const MackeyFunctor& M, const MackeyFunctor& N) {
  HomLayout L;
  int nc = (int)M.level.size();
  L.offset.resize(nc);
  for (int c = 0; c < nc; ++c) {
    L.offset[c] = L.total;
    L.total += N.level[c].ngens() * M.level[c].ngens();
  }
  return L;
}

// constraint phi_{c2} . F = Gm . phi_{c1}, values modulo the relations of
// N.level[c2]
static Congruence naturality_congruence(const MackeyFunctor& M, const MackeyFunctor& N,
                                        const HomLayout& L, int c1, int c2, const Mat& F,
                                        const Mat& Gm) {
  int m1 = M.level[c1].ngens(), m2 = M.level[c2].ngens();
  int n1 = N.level[c1].ngens(), n2 = N.level[c2].ngens();
  const Mat& rel = N.level[c2].rel();
  Congruence cg;
  cg.C = Mat(n2 * m1, L.total);
  for (int a = 0; a < n2; ++a)
    for (int j = 0; j < m1; ++j) {
      int r = a * m1 + j;
      for (int i = 0; i < m2; ++i) cg.C(r, L.offset[c2] + a * m2 + i) += F(i, j);
      for (int b = 0; b < n1; ++b) cg.C(r, L.offset[c1] + b * m1 + j) -= Gm(a, b);
    }
  cg.modrel = Mat(n2 * m1, rel.cols() * m1);
  for (int t = 0; t < rel.cols(); ++t)
    for (int j = 0; j < m1; ++j)
      for (int a = 0; a < n2; ++a) cg.modrel(a * m1 + j, t * m1 + j) = rel(a, t);
  return cg;
}

// phi_c kills the relations of M.level[c] modulo those of N.level[c]
static Congruence welldef_congruence(const MackeyFunctor& M, const MackeyFunctor& N,
                                     const HomLayout& L, int c) {
  int m = M.level[c].ngens(), nn = N.level[c].ngens();
  const Mat& mrel = M.level[c].rel();
  const Mat& nrel = N.level[c].rel();
  Congruence cg;
  cg.C = Mat(nn * mrel.cols(), L.total);
  for (int a = 0; a < nn; ++a)
    for (int t = 0; t < mrel.cols(); ++t) {
      int r = a * mrel.cols() + t;
      for (int i = 0; i < m; ++i) cg.C(r, L.offset[c] + a * m + i) += mrel(i, t);
    }
  cg.modrel = Mat(nn * mrel.cols(), nrel.cols() * mrel.cols());
  for (int u = 0; u < nrel.cols(); ++u)
    for (int t = 0; t < mrel.cols(); ++t)
      for (int a = 0; a < nn; ++a) cg.modrel(a * mrel.cols() + t, u * mrel.cols() + t) = nrel(a, u);
  return cg;
}

std::vector<Congruence> mackey_hom_constraints(const MackeyFunctor& M, const MackeyFunctor& N,
                                               const HomLayout& L) {
  const GroupPtr& G = M.G;
  std::vector<Congruence> cons;
  for (int c = 0; c < (int)M.level.size(); ++c) cons.push_back(welldef_congruence(M, N, L, c));
  for (const auto& kv : M.res) {
    int c1 = G->class_of_subgroup(kv.first.first), c2 = G->class_of_subgroup(kv.first.second);
    cons.push_back(naturality_congruence(M, N, L, c1, c2, kv.second.mat,
                                         N.res.at(kv.first).mat));
  }
  for (const auto& kv : M.tr) {
    int c1 = G->class_of_subgroup(kv.first.first), c2 = G->class_of_subgroup(kv.first.second);
    cons.push_back(naturality_congruence(M, N, L, c1, c2, kv.second.mat, N.tr.at(kv.first).mat));
  }
  for (const auto& kv : M.conj) {
    int c1 = G->class_of_subgroup(kv.first.second);
    int c2 = G->class_of_subgroup(G->conjugate_subgroup(kv.first.first, kv.first.second));
    cons.push_back(naturality_congruence(M, N, L, c1, c2, kv.second.mat, N.conj.at(kv.first).mat));
  }
  return cons;
}

Mat zero_hom_lattice(const MackeyFunctor& M, const MackeyFunctor& N, const HomLayout& L) {
  std::vector<Vec> cols;
  for (int c = 0; c < (int)M.level.size(); ++c) {
    int m = M.level[c].ngens(), nn = N.level[c].ngens();
    const Mat& nrel = N.level[c].rel();
    for (int i = 0; i < m; ++i)
      for (int u = 0; u < nrel.cols(); ++u) {
        Vec z = zero_vec(L.total);
        for (int a = 0; a < nn; ++a) z[L.offset[c] + a * m + i] = nrel(a, u);
        cols.push_back(z);
      }
  }
  return Mat::from_cols(cols, L.total);
}

MackeyHomSpace mackey_hom_space(const MackeyFunctor& M, const MackeyFunctor& N) {
  HomLayout L = hom_layout(M, N);
  MackeyHomSpace hs;
  hs.offset = L.offset;
  hs.src = &M;
  hs.dst = &N;
  hs.sols = solve_homogeneous(L.total, mackey_hom_constraints(M, N, L), zero_hom_lattice(M, N, L));
  return hs;
}

MackeyHom MackeyHomSpace::materialize(const Vec& coords) const {
  Vec z = sols.basis * coords;
  MackeyHom f;
  f.src = src;
  f.dst = dst;
  for (int c = 0; c < (int)src->level.size(); ++c) {
    int m = src->level[c].ngens(), nn = dst->level[c].ngens();
    Mat mat(nn, m);
    for (int a = 0; a < nn; ++a)
      for (int i = 0; i < m; ++i) mat(a, i) = z[offset[c] + a * m + i];
    f.comp.emplace_back(src->level[c], dst->level[c], mat);
  }
  return f;
}

// --- restriction to a subgroup ------------------------------------------------

// subgroup of the parent group corresponding to a subgroup of H.group
int embed_subgroup(const GroupPtr& G, const SubgroupAsGroup& H, int sub_in_H) {
  Subgroup elems;
  for (int x : H.group->subgroup(sub_in_H)) elems.push_back(H.embed[x]);
  std::sort(elems.begin(), elems.end());
  int idx = G->subgroup_index(elems);
  if (idx < 0) throw std::logic_error("embed_subgroup: embedded subgroup not found");
  return idx;
}

RestrictedMackey restrict_mackey(const MackeyFunctor& M, int sub_idx) {
  return restrict_mackey(M, subgroup_as_group(M.G, sub_idx));
}

RestrictedMackey restrict_mackey(const MackeyFunctor& M, const SubgroupAsGroup& Hin) {
  const GroupPtr& G = M.G;
  Subgroup sub_elems = Hin.embed;
  std::sort(sub_elems.begin(), sub_elems.end());
  int sub_idx = G->subgroup_index(sub_elems);
  if (sub_idx < 0) throw std::invalid_argument("restrict_mackey: not a subgroup of M.G");
  RestrictedMackey out;
  out.H = Hin;
  const SubgroupAsGroup& H = out.H;

  int nsH = (int)H.group->subgroups().size();
  auto emb = std::make_shared<std::vector<int>>(nsH);
  for (int s = 0; s < nsH; ++s) (*emb)[s] = embed_subgroup(G, H, s);

  MackeyBuilder b;
  b.G = H.group;
  b.name = M.name + "|" + sub_label(G, sub_idx);
  const MackeyFunctor* Mp = &M;
  b.level_of = [Mp, emb](int S) { return Mp->at_subgroup((*emb)[S]); };
  b.res_of = [Mp, emb](int K, int S) { return Mp->res_map((*emb)[K], (*emb)[S]).mat; };
  b.tr_of = [Mp, emb](int S, int K) { return Mp->tr_map((*emb)[S], (*emb)[K]).mat; };
  auto Hcopy = H;
  b.conj_of = [Mp, emb, Hcopy](int h, int S) {
    return Mp->conj_map(Hcopy.embed[h], (*emb)[S]).mat;
  };
  out.M = build_mackey(b);
  return out;
}

}  // namespace eqalg
