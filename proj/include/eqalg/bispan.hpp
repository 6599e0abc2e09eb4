#pragma once

#include "eqalg/gset.hpp"

namespace eqalg {

// polynomial S <-f- U -g-> V -h-> T in canonical transfer-norm-restriction form
struct Bispan {
  GSet s, u, v, t;
  GMap f;  // U -> S
  GMap g;  // U -> V
  GMap h;  // V -> T
};

enum class GenKind { R, N, T };

// R_f = [T <- S = S = S] (for f: S -> T, a bispan from T to S)
// N_f = [S = S -> T = T]
// T_f = [S = S = S -> T]
Bispan generator(GenKind kind, const GMap& f);
Bispan identity_bispan(const GSet& X);

std::string check_bispan(const Bispan& p);  // empty if shape and equivariance hold

// p after q; endpoints matched up to isomorphism (throws if non-composable)
Bispan compose(const Bispan& p, const Bispan& q, long cap = 500000);

// equality in the polynomial category: commuting equivariant bijections on U and V
bool iso_equal(const Bispan& p, const Bispan& q);

struct SubcatFlags {
  bool iso = false;
  bool epi = false;
  bool gr = false;
};
SubcatFlags subcat_flags(const Bispan& p);

}  // namespace eqalg
