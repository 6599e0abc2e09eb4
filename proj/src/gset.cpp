#include "eqalg/gset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eqalg {

GSet::GSet(GroupPtr g, std::vector<std::string> nm, std::vector<int> a)
    : G(std::move(g)), names(std::move(nm)), act(std::move(a)) {
  if (!G) throw std::invalid_argument("GSet: null group");
  if (act.size() != size_t(G->size()) * names.size())
    throw std::invalid_argument("GSet: action table has wrong size");
  for (int v : act)
    if (v < 0 || v >= (int)names.size()) throw std::invalid_argument("GSet: action value out of range");
}

std::string GSet::check_valid() const {
  int n = size();
  for (int x = 0; x < n; ++x)
    if (apply(G->identity(), x) != x) return "identity moves point " + names[x];
  for (int g = 0; g < G->size(); ++g)
    for (int h = 0; h < G->size(); ++h)
      for (int x = 0; x < n; ++x)
        if (apply(g, apply(h, x)) != apply(G->mul(g, h), x))
          return "action not compatible with multiplication at (" + G->name(g) + "," + G->name(h) +
                 "," + names[x] + ")";
  return "";
}

int GSet::stabilizer(int x) const {
  std::vector<int> elems;
  for (int g = 0; g < G->size(); ++g)
    if (apply(g, x) == x) elems.push_back(g);
  return G->subgroup_index(elems);
}

int GSet::stabilizer_in(int sub_idx, int x) const {
  std::vector<int> elems;
  for (int k : G->subgroups()[sub_idx])
    if (apply(k, x) == x) elems.push_back(k);
  return G->subgroup_index(elems);
}

bool same_gset(const GSet& X, const GSet& Y) {
  return X.G == Y.G && X.names == Y.names && X.act == Y.act;
}

GMap::GMap(GSet s, GSet d, std::vector<int> m) : src(std::move(s)), dst(std::move(d)), map(std::move(m)) {
  if ((int)map.size() != src.size()) throw std::invalid_argument("GMap: wrong map size");
  for (int v : map)
    if (v < 0 || v >= dst.size()) throw std::invalid_argument("GMap: value out of range");
}

bool GMap::is_injective() const {
  std::set<int> seen(map.begin(), map.end());
  return (int)seen.size() == src.size();
}

bool GMap::is_surjective() const {
  std::set<int> seen(map.begin(), map.end());
  return (int)seen.size() == dst.size();
}

bool GMap::preserves_stabilizers() const {
  for (int x = 0; x < src.size(); ++x)
    if (src.stabilizer(x) != dst.stabilizer(map[x])) return false;
  return true;
}

GMap gmap_identity(const GSet& X) {
  std::vector<int> m(X.size());
  for (int i = 0; i < X.size(); ++i) m[i] = i;
  return GMap(X, X, m);
}

GMap gmap_compose(const GMap& g, const GMap& f) {
  if (!same_gset(f.dst, g.src)) throw std::invalid_argument("gmap_compose: middle sets differ");
  std::vector<int> m(f.src.size());
  for (int i = 0; i < f.src.size(); ++i) m[i] = g.map[f.map[i]];
  return GMap(f.src, g.dst, m);
}

std::string check_equivariant(const GMap& f) {
  if (f.src.G != f.dst.G) return "maps between sets over different groups";
  const GroupPtr& G = f.src.G;
  for (int g = 0; g < G->size(); ++g)
    for (int x = 0; x < f.src.size(); ++x)
      if (f.map[f.src.apply(g, x)] != f.dst.apply(g, f.map[x]))
        return "not equivariant at (" + G->name(g) + "," + f.src.names[x] + ")";
  return "";
}

OrbitDecomposition orbit_decompose(const GSet& X) {
  const GroupPtr& G = X.G;
  OrbitDecomposition out;
  out.orbit_of.assign(X.size(), -1);
  out.conj_of.assign(X.size(), -1);
  for (int x0 = 0; x0 < X.size(); ++x0) {
    if (out.orbit_of[x0] >= 0) continue;
    std::vector<int> pts;
    for (int g = 0; g < G->size(); ++g) {
      int y = X.apply(g, x0);
      if (out.orbit_of[y] < 0) {
        out.orbit_of[y] = (int)out.orbits.size();
        pts.push_back(y);
      }
    }
    std::sort(pts.begin(), pts.end());
    int stab = X.stabilizer(x0);
    int cls = G->class_of_subgroup(stab);
    int gamma = G->conjugator_to_rep(stab);
    int rep = X.apply(gamma, x0);  // stabilizer of rep is exactly the class representative
    Orbit orb;
    orb.rep = rep;
    orb.class_id = cls;
    orb.points = pts;
    for (int y : pts) {
      for (int a = 0; a < G->size(); ++a)
        if (X.apply(a, rep) == y) {
          out.conj_of[y] = a;
          break;
        }
    }
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

SubOrbits orbits_under_subgroup(const GSet& X, int sub_idx) {
  const Subgroup& K = X.G->subgroups()[sub_idx];
  SubOrbits out;
  std::vector<int> seen(X.size(), 0);
  for (int x = 0; x < X.size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (int k : K) {
      int y = X.apply(k, x);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.reps.push_back(x);
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

GSet empty_gset(const GroupPtr& G) { return GSet(G, {}, {}); }

GSet point_gset(const GroupPtr& G) { return trivial_gset(G, 1); }

GSet trivial_gset(const GroupPtr& G, int npoints) {
  std::vector<std::string> nm;
  for (int i = 0; i < npoints; ++i) nm.push_back("*" + std::to_string(i));
  std::vector<int> act(size_t(G->size()) * npoints);
  for (int g = 0; g < G->size(); ++g)
    for (int x = 0; x < npoints; ++x) act[size_t(g) * npoints + x] = x;
  return GSet(G, std::move(nm), std::move(act));
}

GSet orbit_gset(const GroupPtr& G, int sub_idx) {
  const Subgroup& H = G->subgroups()[sub_idx];
  std::vector<int> reps = G->coset_reps(G->full_subgroup(), sub_idx);
  int n = (int)reps.size();
  std::vector<int> cos_of(G->size(), -1);
  for (int i = 0; i < n; ++i)
    for (int h : H) cos_of[G->mul(reps[i], h)] = i;
  std::vector<std::string> nm;
  for (int i = 0; i < n; ++i) nm.push_back(G->name(reps[i]) + "*");
  std::vector<int> act(size_t(G->size()) * n);
  for (int g = 0; g < G->size(); ++g)
    for (int i = 0; i < n; ++i) act[size_t(g) * n + i] = cos_of[G->mul(g, reps[i])];
  return GSet(G, std::move(nm), std::move(act));
}

GSet regular_gset(const GroupPtr& G) {
  std::vector<int> act(size_t(G->size()) * G->size());
  for (int g = 0; g < G->size(); ++g)
    for (int x = 0; x < G->size(); ++x) act[size_t(g) * G->size() + x] = G->mul(g, x);
  return GSet(G, G->names(), std::move(act));
}

Coproduct disjoint_union(const std::vector<GSet>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: need at least one part");
  const GroupPtr& G = parts[0].G;
  std::vector<std::string> nm;
  std::vector<int> offset;
  int total = 0;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].G != G) throw std::invalid_argument("disjoint_union: mixed groups");
    offset.push_back(total);
    for (int i = 0; i < parts[p].size(); ++i)
      nm.push_back(parts[p].names[i] + "#" + std::to_string(p));
    total += parts[p].size();
  }
  std::vector<int> act(size_t(G->size()) * total);
  for (int g = 0; g < G->size(); ++g)
    for (size_t p = 0; p < parts.size(); ++p)
      for (int i = 0; i < parts[p].size(); ++i)
        act[size_t(g) * total + offset[p] + i] = offset[p] + parts[p].apply(g, i);
  Coproduct out;
  out.total = GSet(G, std::move(nm), std::move(act));
  for (size_t p = 0; p < parts.size(); ++p) {
    std::vector<int> m(parts[p].size());
    for (int i = 0; i < parts[p].size(); ++i) m[i] = offset[p] + i;
    out.inject.push_back(GMap(parts[p], out.total, std::move(m)));
  }
  return out;
}

Product product_gset(const GSet& X, const GSet& Y) {
  if (X.G != Y.G) throw std::invalid_argument("product_gset: mixed groups");
  const GroupPtr& G = X.G;
  int nx = X.size(), ny = Y.size();
  std::vector<std::string> nm;
  std::vector<std::vector<int>> index(nx, std::vector<int>(ny));
  int n = 0;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      index[x][y] = n++;
      nm.push_back("(" + X.names[x] + "|" + Y.names[y] + ")");
    }
  std::vector<int> act(size_t(G->size()) * n);
  for (int g = 0; g < G->size(); ++g)
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y)
        act[size_t(g) * n + index[x][y]] = index[X.apply(g, x)][Y.apply(g, y)];
  Product out;
  out.total = GSet(G, std::move(nm), std::move(act));
  out.index = index;
  std::vector<int> m1(n), m2(n);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      m1[index[x][y]] = x;
      m2[index[x][y]] = y;
    }
  out.pr1 = GMap(out.total, X, std::move(m1));
  out.pr2 = GMap(out.total, Y, std::move(m2));
  return out;
}

SubGSet sub_gset(const GSet& X, const std::vector<int>& pts) {
  std::vector<int> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> from_parent(X.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) from_parent[sorted[i]] = (int)i;
  const GroupPtr& G = X.G;
  int n = (int)sorted.size();
  std::vector<std::string> nm;
  for (int p : sorted) nm.push_back(X.names[p]);
  std::vector<int> act(size_t(G->size()) * n);
  for (int g = 0; g < G->size(); ++g)
    for (int i = 0; i < n; ++i) {
      int img = from_parent[X.apply(g, sorted[i])];
      if (img < 0) throw std::invalid_argument("sub_gset: point set not closed under the action");
      act[size_t(g) * n + i] = img;
    }
  SubGSet out;
  out.sub = GSet(G, std::move(nm), std::move(act));
  out.incl = GMap(out.sub, X, sorted);
  out.from_parent = std::move(from_parent);
  return out;
}

Pullback pullback(const GMap& f, const GMap& g) {
  if (!same_gset(f.dst, g.dst)) throw std::invalid_argument("pullback: targets differ");
  Product pr = product_gset(f.src, g.src);
  std::vector<int> pts;
  for (int x = 0; x < f.src.size(); ++x)
    for (int y = 0; y < g.src.size(); ++y)
      if (f.map[x] == g.map[y]) pts.push_back(pr.index[x][y]);
  SubGSet sg = sub_gset(pr.total, pts);
  Pullback out;
  out.total = sg.sub;
  out.pr1 = gmap_compose(pr.pr1, sg.incl);
  out.pr2 = gmap_compose(pr.pr2, sg.incl);
  return out;
}

GMap to_point(const GSet& X) {
  GSet pt = point_gset(X.G);
  return GMap(X, pt, std::vector<int>(X.size(), 0));
}

GMap fold_map(const Coproduct& cp, const GSet& target, const std::vector<GMap>& legs) {
  if (legs.size() != cp.inject.size()) throw std::invalid_argument("fold_map: leg count mismatch");
  std::vector<int> m(cp.total.size(), -1);
  for (size_t p = 0; p < legs.size(); ++p) {
    if (!same_gset(legs[p].src, cp.inject[p].src))
      throw std::invalid_argument("fold_map: leg source mismatch");
    for (int i = 0; i < legs[p].src.size(); ++i) m[cp.inject[p].map[i]] = legs[p].map[i];
  }
  return GMap(cp.total, target, std::move(m));
}

DependentProduct dependent_product(const GMap& h, const GMap& g, long cap) {
  // h: A -> S, g: S -> T; points of Pi_g A over t are sections of h on the fiber g^-1(t)
  if (!same_gset(h.dst, g.src)) throw std::invalid_argument("dependent_product: h must land in source of g");
  const GSet& A = h.src;
  const GSet& S = g.src;
  const GSet& T = g.dst;
  const GroupPtr& G = T.G;

  std::vector<std::vector<int>> fiber(T.size());
  for (int s = 0; s < S.size(); ++s) fiber[g.map[s]].push_back(s);
  std::vector<std::vector<int>> hfiber(S.size());
  for (int a = 0; a < A.size(); ++a) hfiber[h.map[a]].push_back(a);
  std::vector<std::vector<int>> pos_in_fiber(S.size());  // position of s inside fiber[g(s)]
  std::vector<int> pos(S.size(), -1);
  for (int t = 0; t < T.size(); ++t)
    for (size_t i = 0; i < fiber[t].size(); ++i) pos[fiber[t][i]] = (int)i;

  long count = 0;
  std::vector<int> base;
  std::vector<std::vector<int>> section;
  std::map<std::pair<int, std::vector<int>>, int> idx;
  for (int t = 0; t < T.size(); ++t) {
    long block = 1;
    for (int s : fiber[t]) {
      block *= (long)hfiber[s].size();
      if (block > cap) throw std::runtime_error("dependent_product: size exceeds cap");
      if (block == 0) break;
    }
    if (block == 0) continue;
    count += block;
    if (count > cap) throw std::runtime_error("dependent_product: size exceeds cap");
    int nf = (int)fiber[t].size();
    std::vector<int> odo(nf, 0);
    while (true) {
      std::vector<int> vals(nf);
      for (int i = 0; i < nf; ++i) vals[i] = hfiber[fiber[t][i]][odo[i]];
      idx[{t, vals}] = (int)base.size();
      base.push_back(t);
      section.push_back(std::move(vals));
      int i = nf - 1;
      while (i >= 0) {
        if (++odo[i] < (int)hfiber[fiber[t][i]].size()) break;
        odo[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  int n = (int)base.size();
  std::vector<std::string> nm(n);
  for (int p = 0; p < n; ++p) {
    if (n <= 256) {
      std::string s = "(" + T.names[base[p]] + ";";
      for (size_t i = 0; i < section[p].size(); ++i) {
        if (i) s += ",";
        s += A.names[section[p][i]];
      }
      nm[p] = s + ")";
    } else {
      nm[p] = "w" + std::to_string(p);
    }
  }

  std::vector<int> act(size_t(G->size()) * n);
  for (int gg = 0; gg < G->size(); ++gg) {
    int ginv = G->inv(gg);
    for (int p = 0; p < n; ++p) {
      int t2 = T.apply(gg, base[p]);
      std::vector<int> vals(fiber[t2].size());
      for (size_t i = 0; i < fiber[t2].size(); ++i) {
        int s2 = fiber[t2][i];
        int s1 = S.apply(ginv, s2);  // lies in fiber of base[p]
        vals[i] = A.apply(gg, section[p][pos[s1]]);
      }
      auto it = idx.find({t2, vals});
      if (it == idx.end()) throw std::runtime_error("dependent_product: action left the section set");
      act[size_t(gg) * n + p] = it->second;
    }
  }

  DependentProduct out;
  out.pi = GSet(G, std::move(nm), std::move(act));
  out.h_prime = GMap(out.pi, T, base);
  out.fiber = std::move(fiber);
  out.section = std::move(section);
  out.base = std::move(base);
  return out;
}

ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h, long cap) {
  ExponentialDiagram out;
  out.g = g;
  out.h = h;
  DependentProduct dp = dependent_product(h, g, cap);
  out.pi = dp.pi;
  out.h_prime = dp.h_prime;
  Pullback pb = pullback(g, dp.h_prime);
  out.pb = pb.total;
  out.g_prime = pb.pr2;
  // evaluation: (s, sigma) -> sigma(s)
  std::vector<int> pos(g.src.size(), -1);
  for (size_t t = 0; t < dp.fiber.size(); ++t)
    for (size_t i = 0; i < dp.fiber[t].size(); ++i) pos[dp.fiber[t][i]] = (int)i;
  std::vector<int> ev(out.pb.size());
  for (int p = 0; p < out.pb.size(); ++p) {
    int s = pb.pr1.map[p];
    int sig = pb.pr2.map[p];
    ev[p] = dp.section[sig][pos[s]];
  }
  out.f_prime = GMap(out.pb, h.src, std::move(ev));
  return out;
}

FunctionGSet function_gset(const GSet& X, int m, long cap) {
  const GroupPtr& G = X.G;
  long count = 1;
  for (int i = 0; i < X.size(); ++i) {
    count *= m;
    if (count > cap) throw std::runtime_error("function_gset: size exceeds cap");
  }
  int n = (int)count;
  std::vector<std::vector<int>> values;
  std::vector<int> f(X.size(), 0);
  std::map<std::vector<int>, int> idx;
  for (int p = 0; p < n; ++p) {
    idx[f] = p;
    values.push_back(f);
    int i = X.size() - 1;
    while (i >= 0) {
      if (++f[i] < m) break;
      f[i] = 0;
      --i;
    }
  }
  std::vector<std::string> nm(n);
  for (int p = 0; p < n; ++p) {
    std::string s;
    for (int v : values[p]) s += std::to_string(v);
    nm[p] = s.empty() ? "()" : s;
  }
  std::vector<int> act(size_t(G->size()) * n);
  for (int g = 0; g < G->size(); ++g) {
    int ginv = G->inv(g);
    for (int p = 0; p < n; ++p) {
      std::vector<int> f2(X.size());
      for (int x = 0; x < X.size(); ++x) f2[x] = values[p][X.apply(ginv, x)];
      act[size_t(g) * n + p] = idx.at(f2);
    }
  }
  FunctionGSet out;
  out.total = GSet(G, std::move(nm), std::move(act));
  out.values = std::move(values);
  return out;
}

NormSumDiagram norm_sum_diagram(const GroupPtr& G, int H_sub) {
  NormSumDiagram out;
  out.base = orbit_gset(G, H_sub);
  int nx = out.base.size();
  FunctionGSet F = function_gset(out.base, 2, 1 << 20);
  Coproduct cp = disjoint_union({out.base, out.base});
  out.two_copies = cp.total;
  out.fold = fold_map(cp, out.base, {gmap_identity(out.base), gmap_identity(out.base)});
  for (int k = 0; k <= nx; ++k) {
    std::vector<int> pts;
    for (int p = 0; p < F.total.size(); ++p) {
      int deg = 0;
      for (int v : F.values[p]) deg += v;
      if (deg == k) pts.push_back(p);
    }
    SubGSet Tk = sub_gset(F.total, pts);
    NormSumPiece piece;
    piece.k = k;
    piece.Tk = Tk.sub;
    piece.f_k = to_point(Tk.sub);
    Product P = product_gset(out.base, Tk.sub);
    piece.g_k = P.pr2;
    std::vector<int> hm(P.total.size());
    std::vector<int> cover_pts;
    for (int q = 0; q < P.total.size(); ++q) {
      int x = P.pr1.map[q];
      int fidx = Tk.incl.map[P.pr2.map[q]];
      int v = F.values[fidx][x];
      hm[q] = cp.inject[v].map[x];
      if (v == 1) cover_pts.push_back(q);
    }
    piece.h_k = GMap(P.total, out.two_copies, std::move(hm));
    SubGSet cov = sub_gset(P.total, cover_pts);
    piece.cover = cov.sub;
    piece.cover_map = gmap_compose(piece.g_k, cov.incl);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

OffDiagonal off_diagonal(const GroupPtr& G, int S_sub, int K_sub) {
  if (!G->subgroup_contains(K_sub, S_sub))
    throw std::invalid_argument("off_diagonal: first subgroup must lie in the second");
  GSet XS = orbit_gset(G, S_sub);
  GSet XK = orbit_gset(G, K_sub);
  // projection G/S -> G/K
  std::vector<int> reps = G->coset_reps(G->full_subgroup(), S_sub);
  std::vector<int> krep = G->coset_reps(G->full_subgroup(), K_sub);
  std::vector<int> kcos(G->size(), -1);
  const Subgroup& K = G->subgroups()[K_sub];
  for (size_t i = 0; i < krep.size(); ++i)
    for (int h : K) kcos[G->mul(krep[i], h)] = (int)i;
  std::vector<int> proj(XS.size());
  for (int i = 0; i < XS.size(); ++i) proj[i] = kcos[reps[i]];
  GMap pi(XS, XK, std::move(proj));
  Pullback pb = pullback(pi, pi);
  std::vector<int> pts;
  for (int p = 0; p < pb.total.size(); ++p)
    if (pb.pr1.map[p] != pb.pr2.map[p]) pts.push_back(p);
  SubGSet sg = sub_gset(pb.total, pts);
  OffDiagonal out;
  out.D = sg.sub;
  out.d1 = gmap_compose(pb.pr1, sg.incl);
  out.d2 = gmap_compose(pb.pr2, sg.incl);
  return out;
}

std::optional<GMap> find_iso(const GSet& X, const GSet& Y) {
  if (X.G != Y.G || X.size() != Y.size()) return std::nullopt;
  OrbitDecomposition dx = orbit_decompose(X);
  OrbitDecomposition dy = orbit_decompose(Y);
  if (dx.orbits.size() != dy.orbits.size()) return std::nullopt;
  // pair orbits with equal stabilizer class
  std::map<int, std::vector<int>> by_class;
  for (size_t j = 0; j < dy.orbits.size(); ++j) by_class[dy.orbits[j].class_id].push_back((int)j);
  std::vector<int> mate(dx.orbits.size(), -1);
  for (size_t i = 0; i < dx.orbits.size(); ++i) {
    auto& cand = by_class[dx.orbits[i].class_id];
    if (cand.empty()) return std::nullopt;
    mate[i] = cand.back();
    cand.pop_back();
  }
  std::vector<int> m(X.size(), -1);
  for (size_t i = 0; i < dx.orbits.size(); ++i) {
    int repy = dy.orbits[mate[i]].rep;
    for (int p : dx.orbits[i].points) m[p] = Y.apply(dx.conj_of[p], repy);
  }
  GMap iso(X, Y, std::move(m));
  if (!check_equivariant(iso).empty() || !iso.is_bijective()) return std::nullopt;
  return iso;
}

int point_with_stabilizer(const GSet& X, int sub_idx) {
  for (int x = 0; x < X.size(); ++x)
    if (X.stabilizer(x) == sub_idx) return x;
  return -1;
}

GMap induced_orbit_map(const GSet& X, const GSet& Y, int x0, int y0) {
  if (X.G != Y.G) throw std::invalid_argument("induced_orbit_map: different groups");
  const auto& G = X.G;
  if (!G->subgroup_contains(Y.stabilizer(y0), X.stabilizer(x0)))
    throw std::invalid_argument("induced_orbit_map: Stab(x0) not contained in Stab(y0)");
  std::vector<int> m(X.size(), -1);
  for (int g = 0; g < G->size(); ++g) m[X.apply(g, x0)] = Y.apply(g, y0);
  for (int x = 0; x < X.size(); ++x)
    if (m[x] < 0) throw std::invalid_argument("induced_orbit_map: X is not transitive");
  return GMap(X, Y, std::move(m));
}

GSet restrict_gset_over(const GSet& X, const SubgroupAsGroup& H) {
  int n = X.size();
  for (int e : H.embed)
    if (e < 0 || e >= X.G->size()) throw std::invalid_argument("restrict_gset_over: bad embedding");
  std::vector<int> act(size_t(H.group->size()) * n);
  for (int h = 0; h < H.group->size(); ++h)
    for (int x = 0; x < n; ++x) act[size_t(h) * n + x] = X.apply(H.embed[h], x);
  return GSet(H.group, X.names, std::move(act));
}

RestrictedGSet restrict_gset(const GSet& X, int sub_idx) {
  RestrictedGSet out;
  out.H = subgroup_as_group(X.G, sub_idx);
  int n = X.size();
  std::vector<int> act(size_t(out.H.group->size()) * n);
  for (int h = 0; h < out.H.group->size(); ++h)
    for (int x = 0; x < n; ++x) act[size_t(h) * n + x] = X.apply(out.H.embed[h], x);
  out.XH = GSet(out.H.group, X.names, std::move(act));
  return out;
}

InducedGSet induce_gset(const GroupPtr& G, const SubgroupAsGroup& H, const GSet& Y) {
  if (Y.G != H.group) throw std::invalid_argument("induce_gset: Y must be a set over the subgroup");
  Subgroup elems = H.embed;
  std::sort(elems.begin(), elems.end());
  int sub_idx = G->subgroup_index(elems);
  if (sub_idx < 0) throw std::invalid_argument("induce_gset: embedding is not a subgroup");
  std::vector<int> reps = G->coset_reps(G->full_subgroup(), sub_idx);
  int nb = (int)reps.size(), ny = Y.size();
  InducedGSet out;
  out.coset_rep = reps;
  out.index.assign(nb, std::vector<int>(ny));
  std::vector<std::string> nm;
  int n = 0;
  for (int b = 0; b < nb; ++b)
    for (int y = 0; y < ny; ++y) {
      out.index[b][y] = n++;
      out.parts.push_back({b, y});
      nm.push_back("[" + G->name(reps[b]) + ";" + Y.names[y] + "]");
    }
  // block/H-part decomposition of every group element
  std::vector<int> block_of(G->size(), -1), hpart_of(G->size(), -1);
  for (int b = 0; b < nb; ++b)
    for (size_t j = 0; j < H.embed.size(); ++j) {
      int t = G->mul(reps[b], H.embed[j]);
      block_of[t] = b;
      hpart_of[t] = (int)j;
    }
  std::vector<int> act(size_t(G->size()) * n);
  for (int g = 0; g < G->size(); ++g)
    for (int b = 0; b < nb; ++b) {
      int t = G->mul(g, reps[b]);
      int b2 = block_of[t], h = hpart_of[t];
      for (int y = 0; y < ny; ++y) act[size_t(g) * n + out.index[b][y]] = out.index[b2][Y.apply(h, y)];
    }
  out.total = GSet(G, std::move(nm), std::move(act));
  return out;
}

ThetaMap induction_counit(const GSet& X, int sub_idx) {
  RestrictedGSet r = restrict_gset(X, sub_idx);
  ThetaMap out;
  out.ind = induce_gset(X.G, r.H, r.XH);
  std::vector<int> m(out.ind.total.size());
  for (int p = 0; p < out.ind.total.size(); ++p) {
    auto [b, y] = out.ind.parts[p];
    m[p] = X.apply(out.ind.coset_rep[b], y);
  }
  out.theta = GMap(out.ind.total, X, std::move(m));
  return out;
}

}  // namespace eqalg
