#pragma once

#include <string>
#include <vector>

namespace eqalg {

// one verified identity or axiom instance
struct CheckItem {
  std::string id;       // stable identifier, e.g. "mackey.double_coset"
  std::string anchor;   // the mathematical law the check certifies
  bool pass = false;
  std::string witness;  // failure witness or short success note
};

struct Report {
  std::vector<CheckItem> items;

  void add(const std::string& id, const std::string& anchor, bool pass,
           const std::string& witness = "") {
    items.push_back({id, anchor, pass, witness});
  }
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& it : items)
      if (!it.pass) ++n;
    return n;
  }
  std::string summary() const {
    std::string s;
    for (const auto& it : items) {
      s += (it.pass ? "PASS " : "FAIL ") + it.id;
      if (!it.pass && !it.witness.empty()) s += " [" + it.witness + "]";
      s += "\n";
    }
    return s;
  }
  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return it.id + (it.witness.empty() ? "" : " [" + it.witness + "]");
    return "";
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (CheckItem it : other.items) {
      it.id = prefix.empty() ? it.id : prefix + "." + it.id;
      items.push_back(std::move(it));
    }
  }
};

}  // namespace eqalg
