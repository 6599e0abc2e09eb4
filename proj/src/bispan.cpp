#include "eqalg/bispan.hpp"

#include <functional>
#include <stdexcept>

namespace eqalg {

Bispan generator(GenKind kind, const GMap& f) {
  std::string err = check_equivariant(f);
  if (!err.empty()) throw std::invalid_argument("generator: " + err);
  Bispan b;
  switch (kind) {
    case GenKind::R:
      b.s = f.dst;
      b.u = f.src;
      b.v = f.src;
      b.t = f.src;
      b.f = f;
      b.g = gmap_identity(f.src);
      b.h = gmap_identity(f.src);
      break;
    case GenKind::N:
      b.s = f.src;
      b.u = f.src;
      b.v = f.dst;
      b.t = f.dst;
      b.f = gmap_identity(f.src);
      b.g = f;
      b.h = gmap_identity(f.dst);
      break;
    case GenKind::T:
      b.s = f.src;
      b.u = f.src;
      b.v = f.src;
      b.t = f.dst;
      b.f = gmap_identity(f.src);
      b.g = gmap_identity(f.src);
      b.h = f;
      break;
  }
  return b;
}

Bispan identity_bispan(const GSet& X) { return generator(GenKind::T, gmap_identity(X)); }

std::string check_bispan(const Bispan& p) {
  if (!same_gset(p.f.src, p.u)) return "restriction leg does not start at U";
  if (!same_gset(p.f.dst, p.s)) return "restriction leg does not end at S";
  if (!same_gset(p.g.src, p.u)) return "norm leg does not start at U";
  if (!same_gset(p.g.dst, p.v)) return "norm leg does not end at V";
  if (!same_gset(p.h.src, p.v)) return "transfer leg does not start at V";
  if (!same_gset(p.h.dst, p.t)) return "transfer leg does not end at T";
  for (const GMap* m : {&p.f, &p.g, &p.h}) {
    std::string err = check_equivariant(*m);
    if (!err.empty()) return err;
  }
  return "";
}

Bispan compose(const Bispan& p, const Bispan& q, long cap) {
  Bispan ql = q;
  if (!same_gset(ql.t, p.s)) {
    auto match = find_iso(ql.t, p.s);
    if (!match) throw std::invalid_argument("compose: endpoints are not isomorphic");
    ql.h = gmap_compose(*match, ql.h);
    ql.t = p.s;
  }
  // T_{p.h} N_{p.g} R_{p.f} T_{ql.h} N_{ql.g} R_{ql.f} rewritten to canonical order:
  // 1. restriction past transfer (pullback)
  Pullback pb1 = pullback(ql.h, p.f);
  const GMap& x1 = pb1.pr1;  // W1 -> V1
  const GMap& y1 = pb1.pr2;  // W1 -> U2
  // 2. restriction past norm (pullback)
  Pullback pb2 = pullback(ql.g, x1);
  const GMap& x2 = pb2.pr1;  // W2 -> U1
  const GMap& y2 = pb2.pr2;  // W2 -> W1
  // 3. norm past transfer (exponential diagram)
  ExponentialDiagram E = exponential_diagram(p.g, y1, cap);
  // 4. the restriction leg created in step 3 past the norm from step 2
  Pullback pb3 = pullback(y2, E.f_prime);
  const GMap& a = pb3.pr1;  // W3 -> W2
  const GMap& b = pb3.pr2;  // W3 -> pb

  Bispan out;
  out.s = ql.s;
  out.t = p.t;
  out.u = pb3.total;
  out.v = E.pi;
  out.f = gmap_compose(ql.f, gmap_compose(x2, a));
  out.g = gmap_compose(E.g_prime, b);
  out.h = gmap_compose(p.h, E.h_prime);
  return out;
}

namespace {

struct IsoSearch {
  const GSet* X;
  const GSet* Y;
  OrbitDecomposition dx;
  std::vector<int> stab_y;           // exact stabilizer of each Y point
  std::vector<char> used;
  std::vector<int> phi;              // X point -> Y point
  // constraint: candidate c for orbit rep r must satisfy admissible(r, c)
  std::function<bool(int, int)> admissible;

  bool place(size_t oi) {
    if (oi == dx.orbits.size()) return true;
    const Orbit& orb = dx.orbits[oi];
    int rep = orb.rep;
    int stab_rep = X->stabilizer(rep);
    for (int c = 0; c < Y->size(); ++c) {
      if (used[c] || stab_y[c] != stab_rep || !admissible(rep, c)) continue;
      bool ok = true;
      std::vector<int> placed;
      for (int pnt : orb.points) {
        int img = Y->apply(dx.conj_of[pnt], c);
        if (used[img]) {
          ok = false;
          break;
        }
        used[img] = 1;
        phi[pnt] = img;
        placed.push_back(img);
      }
      if (ok && place(oi + 1)) return true;
      for (int img : placed) used[img] = 0;
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    dx = orbit_decompose(*X);
    stab_y.resize(Y->size());
    for (int c = 0; c < Y->size(); ++c) stab_y[c] = Y->stabilizer(c);
    used.assign(Y->size(), 0);
    phi.assign(X->size(), -1);
    if (place(0)) return phi;
    return std::nullopt;
  }
};

}  // namespace

bool iso_equal(const Bispan& p, const Bispan& q) {
  if (!same_gset(p.s, q.s) || !same_gset(p.t, q.t)) return false;
  if (p.u.size() != q.u.size() || p.v.size() != q.v.size()) return false;

  // search over phi_V choices; for each, try to complete with phi_U
  OrbitDecomposition dv = orbit_decompose(p.v);
  std::vector<int> stab_v(q.v.size());
  for (int c = 0; c < q.v.size(); ++c) stab_v[c] = q.v.stabilizer(c);

  std::vector<char> used(q.v.size(), 0);
  std::vector<int> phiV(p.v.size(), -1);

  std::function<bool(size_t)> place_v = [&](size_t oi) -> bool {
    if (oi == dv.orbits.size()) {
      // complete with the U-leg search under the fixed phi_V
      IsoSearch usearch;
      usearch.X = &p.u;
      usearch.Y = &q.u;
      usearch.admissible = [&](int rep, int c) {
        return q.f.map[c] == p.f.map[rep] && q.g.map[c] == phiV[p.g.map[rep]];
      };
      auto phiU = usearch.run();
      if (!phiU) return false;
      // full safety check of the hexagon
      for (int x = 0; x < p.u.size(); ++x) {
        if (q.f.map[(*phiU)[x]] != p.f.map[x]) return false;
        if (q.g.map[(*phiU)[x]] != phiV[p.g.map[x]]) return false;
      }
      for (int v = 0; v < p.v.size(); ++v)
        if (q.h.map[phiV[v]] != p.h.map[v]) return false;
      return true;
    }
    const Orbit& orb = dv.orbits[oi];
    int rep = orb.rep;
    int stab_rep = p.v.stabilizer(rep);
    for (int c = 0; c < q.v.size(); ++c) {
      if (used[c] || stab_v[c] != stab_rep || q.h.map[c] != p.h.map[rep]) continue;
      bool ok = true;
      std::vector<int> placed;
      for (int pnt : orb.points) {
        int img = q.v.apply(dv.conj_of[pnt], c);
        if (used[img]) {
          ok = false;
          break;
        }
        used[img] = 1;
        phiV[pnt] = img;
        placed.push_back(img);
      }
      if (ok && place_v(oi + 1)) return true;
      for (int img : placed) used[img] = 0;
    }
    return false;
  };

  return place_v(0);
}

SubcatFlags subcat_flags(const Bispan& p) {
  SubcatFlags out;
  out.epi = p.g.is_surjective();
  out.gr = p.g.preserves_stabilizers();
  out.iso = p.g.is_bijective();
  return out;
}

}  // namespace eqalg
