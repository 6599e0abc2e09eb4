#pragma once

#include <map>
#include <memory>
#include <set>

#include "eqalg/ints.hpp"

namespace eqalg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup is stored as a sorted list of element indices.
using Subgroup = std::vector<int>;

struct SubgroupClass {
  int id = -1;              // index into classes(), stable under re-enumeration
  std::string label;        // canonical label, e.g. "H2a"
  int rep = -1;             // index into subgroups() of the canonical representative
  int order = 0;
  int weyl_order = 0;       // |N_G(H)| / |H| for the representative
};

// Finite group on elements 0..n-1 with a full multiplication table.  Element 0
// need not be the identity; the identity index is detected and stored.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, std::vector<int> mul_table);

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return e_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  int element_by_name(const std::string& s) const;
  int conj(int g, int a) const { return mul(g, mul(a, inv(g))); }  // g a g^-1

  std::string group_name;  // optional, from input files

  // --- subgroup lattice (computed on first use) ---
  const std::vector<Subgroup>& subgroups() const;
  const std::vector<SubgroupClass>& classes() const;
  int subgroup_index(const Subgroup& s) const;         // exact match, -1 if absent
  int class_of_subgroup(int sub_idx) const;            // class id
  int conjugator_to_rep(int sub_idx) const;            // gamma with gamma S gamma^-1 = rep
  int conjugate_subgroup(int g, int sub_idx) const;    // index of g S g^-1
  bool subgroup_contains(int big, int small) const;    // small <= big as sets
  const Subgroup& subgroup(int idx) const { return subgroups().at(idx); }
  int subgroup_order(int idx) const { return (int)subgroup(idx).size(); }
  int trivial_subgroup() const;                        // index of {e}
  int full_subgroup() const;                           // index of G

  // Left coset representatives of H inside K (K and H subgroup indices, H <= K).
  std::vector<int> coset_reps(int K, int H) const;
  // Double coset representatives K g H inside L (all subgroup indices, K,H <= L).
  std::vector<int> double_coset_reps(int L, int K, int H) const;

  // Normalizer of the subgroup (as a subgroup index).
  int normalizer(int sub_idx) const;

  // Is `small` subconjugate to `big` (i.e. some conjugate of small inside big)?
  bool subconjugate(int small, int big) const;
  // Witness pair for classes: the least subgroup in class cS contained in the
  // representative of class cK; -1 if none.
  int witness_subgroup(int cS, int cK) const;

  std::string check_valid() const;  // empty string if the table is a group

 private:
  void compute_subgroups() const;
  int n_;
  std::vector<std::string> names_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int e_;

  mutable bool subs_done_ = false;
  mutable std::vector<Subgroup> subs_;
  mutable std::vector<SubgroupClass> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<int> conj_to_rep_;
  mutable std::map<Subgroup, int> sub_index_;
};

// Standard construction helpers used by tests and bundled data.
GroupPtr cyclic_group(int n);                      // names e, g, g2, ...
GroupPtr klein_four();                             // C2 x C2
GroupPtr symmetric3();                             // S3 on {1,2,3}
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

// The subgroup `sub` of `G` as a group in its own right; `embed` maps its
// element indices to indices in G.
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<int> embed;          // new index -> G index
  std::map<int, int> from_parent;  // G index -> new index
};
SubgroupAsGroup subgroup_as_group(const GroupPtr& G, int sub_idx);

}  // namespace eqalg
