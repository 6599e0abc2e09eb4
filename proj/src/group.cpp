#include "eqalg/group.hpp"

#include <algorithm>

namespace eqalg {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<int> mul_table)
    : n_((int)names.size()), names_(std::move(names)), mul_(std::move(mul_table)) {
  if ((int)mul_.size() != n_ * n_) throw std::invalid_argument("FiniteGroup: table size");
  for (int x : mul_)
    if (x < 0 || x >= n_) throw std::invalid_argument("FiniteGroup: table entry out of range");
  // identity
  e_ = -1;
  for (int a = 0; a < n_; ++a) {
    bool ok = true;
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != b || mul(b, a) != b) {
        ok = false;
        break;
      }
    if (ok) {
      e_ = a;
      break;
    }
  }
  if (e_ < 0) throw std::invalid_argument("FiniteGroup: no identity element");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == e_) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
  std::string msg = check_valid();
  if (!msg.empty()) throw std::invalid_argument("FiniteGroup: " + msg);
}

std::string FiniteGroup::check_valid() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return "associativity fails at (" + names_[a] + "," + names_[b] + "," + names_[c] + ")";
  return "";
}

int FiniteGroup::element_by_name(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == s) return i;
  throw std::invalid_argument("unknown group element '" + s + "'");
}

void FiniteGroup::compute_subgroups() const {
  if (subs_done_) return;
  // all subsets closed under multiplication that contain the identity;
  // enumerate by breadth-first closure over generator sets (|G| <= 12 keeps
  // the subset-closure approach comfortably small)
  std::set<Subgroup> found;
  // closure of a generating set
  auto closure = [&](std::vector<int> gens) {
    std::set<int> s = {e_};
    for (int g : gens) s.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur) {
          if (s.insert(mul(a, b)).second) grew = true;
        }
    }
    return Subgroup(s.begin(), s.end());
  };
  // BFS over generator extensions starting from the trivial subgroup
  std::vector<Subgroup> frontier = {closure({})};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (auto& H : frontier)
      for (int g = 0; g < n_; ++g) {
        std::vector<int> gens(H.begin(), H.end());
        gens.push_back(g);
        Subgroup K = closure(gens);
        if (found.insert(K).second) next.push_back(K);
      }
    frontier = std::move(next);
  }
  subs_.assign(found.begin(), found.end());
  // canonical order: by (order, element list lexicographic)
  std::sort(subs_.begin(), subs_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sub_index_.clear();
  for (int i = 0; i < (int)subs_.size(); ++i) sub_index_[subs_[i]] = i;

  // conjugacy classes
  class_of_.assign(subs_.size(), -1);
  conj_to_rep_.assign(subs_.size(), -1);
  classes_.clear();
  auto conj_sub = [&](int g, const Subgroup& H) {
    Subgroup out;
    out.reserve(H.size());
    for (int h : H) out.push_back(conj(g, h));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int i = 0; i < (int)subs_.size(); ++i) {
    if (class_of_[i] >= 0) continue;
    // i is the least member of its class (subs_ sorted; all conjugates have the
    // same order, and any unvisited earlier conjugate would have claimed i)
    SubgroupClass cls;
    cls.id = (int)classes_.size();
    cls.rep = i;
    cls.order = (int)subs_[i].size();
    for (int g = 0; g < n_; ++g) {
      Subgroup K = conj_sub(g, subs_[i]);
      int idx = sub_index_.at(K);
      if (class_of_[idx] < 0) {
        class_of_[idx] = cls.id;
        conj_to_rep_[idx] = 0;  // fixed below
      }
    }
    // choose, for every member S of the class, the first gamma with
    // gamma S gamma^-1 = rep
    for (int j = 0; j < (int)subs_.size(); ++j) {
      if (class_of_[j] != cls.id) continue;
      for (int g = 0; g < n_; ++g)
        if (conj_sub(g, subs_[j]) == subs_[i]) {
          conj_to_rep_[j] = g;
          break;
        }
    }
    classes_.push_back(cls);
  }
  // labels H<order><letter> and Weyl orders
  std::map<int, int> count_by_order;
  for (auto& cls : classes_) {
    int k = count_by_order[cls.order]++;
    std::string letter;
    int kk = k;
    do {
      letter.insert(letter.begin(), char('a' + kk % 26));
      kk = kk / 26 - 1;
    } while (kk >= 0);
    cls.label = "H" + std::to_string(cls.order) + letter;
  }
  subs_done_ = true;
  for (auto& cls : classes_) {
    int nz = normalizer(cls.rep);
    cls.weyl_order = subgroup_order(nz) / cls.order;
  }
}

const std::vector<Subgroup>& FiniteGroup::subgroups() const {
  compute_subgroups();
  return subs_;
}

const std::vector<SubgroupClass>& FiniteGroup::classes() const {
  compute_subgroups();
  return classes_;
}

int FiniteGroup::subgroup_index(const Subgroup& s) const {
  compute_subgroups();
  auto it = sub_index_.find(s);
  return it == sub_index_.end() ? -1 : it->second;
}

int FiniteGroup::class_of_subgroup(int sub_idx) const {
  compute_subgroups();
  return class_of_.at(sub_idx);
}

int FiniteGroup::conjugator_to_rep(int sub_idx) const {
  compute_subgroups();
  return conj_to_rep_.at(sub_idx);
}

int FiniteGroup::conjugate_subgroup(int g, int sub_idx) const {
  compute_subgroups();
  Subgroup out;
  for (int h : subs_[sub_idx]) out.push_back(conj(g, h));
  std::sort(out.begin(), out.end());
  return sub_index_.at(out);
}

bool FiniteGroup::subgroup_contains(int big, int small) const {
  compute_subgroups();
  const auto& B = subs_[big];
  const auto& S = subs_[small];
  return std::includes(B.begin(), B.end(), S.begin(), S.end());
}

int FiniteGroup::trivial_subgroup() const {
  compute_subgroups();
  return sub_index_.at(Subgroup{e_});
}

int FiniteGroup::full_subgroup() const {
  compute_subgroups();
  Subgroup all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return sub_index_.at(all);
}

std::vector<int> FiniteGroup::coset_reps(int K, int H) const {
  if (!subgroup_contains(K, H)) throw std::invalid_argument("coset_reps: H not inside K");
  std::vector<int> reps;
  std::set<int> seen;
  for (int k : subgroup(K)) {
    if (seen.count(k)) continue;
    reps.push_back(k);
    for (int h : subgroup(H)) seen.insert(mul(k, h));
  }
  return reps;
}

std::vector<int> FiniteGroup::double_coset_reps(int L, int K, int H) const {
  if (!subgroup_contains(L, K) || !subgroup_contains(L, H))
    throw std::invalid_argument("double_coset_reps: K or H not inside L");
  std::vector<int> reps;
  std::set<int> seen;
  for (int g : subgroup(L)) {
    if (seen.count(g)) continue;
    reps.push_back(g);
    for (int k : subgroup(K))
      for (int h : subgroup(H)) seen.insert(mul(k, mul(g, h)));
  }
  return reps;
}

int FiniteGroup::normalizer(int sub_idx) const {
  Subgroup nz;
  for (int g = 0; g < n_; ++g)
    if (conjugate_subgroup(g, sub_idx) == sub_idx) nz.push_back(g);
  std::sort(nz.begin(), nz.end());
  return subgroup_index(nz);
}

bool FiniteGroup::subconjugate(int small, int big) const {
  for (int g = 0; g < n_; ++g)
    if (subgroup_contains(big, conjugate_subgroup(g, small))) return true;
  return false;
}

int FiniteGroup::witness_subgroup(int cS, int cK) const {
  compute_subgroups();
  int Krep = classes_[cK].rep;
  for (int j = 0; j < (int)subs_.size(); ++j)  // subs_ sorted, so first hit is least
    if (class_of_[j] == cS && subgroup_contains(Krep, j)) return j;
  return -1;
}

GroupPtr cyclic_group(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<int> mul(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[size_t(a) * n + b] = (a + b) % n;
  auto G = std::make_shared<FiniteGroup>(names, mul);
  const_cast<FiniteGroup&>(*G).group_name = "C" + std::to_string(n);
  return G;
}

GroupPtr klein_four() {
  std::vector<std::string> names = {"e", "a", "b", "ab"};
  auto x = [](int i, int j) { return i ^ j; };
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[size_t(a) * 4 + b] = x(a, b);
  auto G = std::make_shared<FiniteGroup>(names, mul);
  const_cast<FiniteGroup&>(*G).group_name = "C2xC2";
  return G;
}

GroupPtr symmetric3() {
  // permutations of {0,1,2}: index by one-line notation
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
  auto compose = [&](int a, int b) {  // apply b then a
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    return -1;
  };
  std::vector<int> mul(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) mul[size_t(a) * 6 + b] = compose(a, b);
  auto G = std::make_shared<FiniteGroup>(names, mul);
  const_cast<FiniteGroup&>(*G).group_name = "S3";
  return G;
}

GroupPtr product_group(const GroupPtr& A, const GroupPtr& B) {
  int na = A->size(), nb = B->size();
  std::vector<std::string> names;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) names.push_back("(" + A->name(a) + "," + B->name(b) + ")");
  std::vector<int> mul(size_t(na) * nb * na * nb);
  int n = na * nb;
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          int i = a1 * nb + b1, j = a2 * nb + b2;
          mul[size_t(i) * n + j] = A->mul(a1, a2) * nb + B->mul(b1, b2);
        }
  auto G = std::make_shared<FiniteGroup>(names, mul);
  const_cast<FiniteGroup&>(*G).group_name = A->group_name + "x" + B->group_name;
  return G;
}

SubgroupAsGroup subgroup_as_group(const GroupPtr& G, int sub_idx) {
  SubgroupAsGroup out;
  const auto& H = G->subgroup(sub_idx);
  out.embed.assign(H.begin(), H.end());
  for (int i = 0; i < (int)H.size(); ++i) out.from_parent[H[i]] = i;
  std::vector<std::string> names;
  for (int h : H) names.push_back(G->name(h));
  int m = (int)H.size();
  std::vector<int> mul(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mul[size_t(i) * m + j] = out.from_parent.at(G->mul(H[i], H[j]));
  auto Hg = std::make_shared<FiniteGroup>(names, mul);
  const_cast<FiniteGroup&>(*Hg).group_name = G->group_name + ".sub" + std::to_string(sub_idx);
  out.group = Hg;
  return out;
}

}  // namespace eqalg
