#include <algorithm>
#include <cctype>
#include <charconv>

#include "integra/group.hpp"

namespace integra {

namespace {

struct Alias {
  std::string_view alias;
  std::string_view name;
};

constexpr Alias kAliases[] = {
    {"Z2^2", "Z2xZ2"}, {"Z2^3", "Z2xZ2xZ2"}, {"D6", "S3"}, {"Dic(Z6)", "Dic12"},
    {"Z3^2", "Z3xZ3"}, {"SL(2,3)", "SL23"}, {"D4", "Z2xZ2"},
};

Presentation cyclic_pres(int n) { return {{"a"}, {n}, {"a^" + std::to_string(n)}}; }

Presentation abelian2_pres(int m, int n) {
  return {{"a", "b"}, {m, n}, {"a^" + std::to_string(m), "b^" + std::to_string(n), "a^-1*b^-1*a*b"}};
}

Presentation dihedral_pres(int m) {
  return {{"a", "b"}, {m, 2}, {"a^" + std::to_string(m), "b^2", "a*b*a*b"}};
}

// A presentation plus a central cyclic factor <c | c^n>.
Presentation times_cyclic(Presentation p, int n) {
  p.generators.push_back("c");
  p.generator_orders.push_back(n);
  p.relators.push_back("c^" + std::to_string(n));
  for (std::size_t i = 0; i + 1 < p.generators.size(); ++i) {
    const auto& g = p.generators[i];
    p.relators.push_back(g + "^-1*c^-1*" + g + "*c");
  }
  return p;
}

std::vector<CatalogEntry> build_catalog() {
  const Presentation a4{{"a", "b"}, {2, 3}, {"a^2", "b^3", "a*b*a*b*a*b"}};
  const Presentation s4{{"a", "b"}, {2, 3}, {"a^2", "b^3", "a*b*a*b*a*b*a*b"}};
  std::vector<CatalogEntry> c{
      {"Z1", 1, "cyclic:1", {}},
      {"Z2", 2, "cyclic:2", cyclic_pres(2)},
      {"Z3", 3, "cyclic:3", cyclic_pres(3)},
      {"Z4", 4, "cyclic:4", cyclic_pres(4)},
      {"Z5", 5, "cyclic:5", cyclic_pres(5)},
      {"Z6", 6, "cyclic:6", cyclic_pres(6)},
      {"Z8", 8, "cyclic:8", cyclic_pres(8)},
      {"Z9", 9, "cyclic:9", cyclic_pres(9)},
      {"Z12", 12, "cyclic:12", cyclic_pres(12)},
      {"Z2xZ2", 4, "cyclic:2 x cyclic:2", abelian2_pres(2, 2)},
      {"Z2xZ4", 8, "cyclic:2 x cyclic:4", abelian2_pres(2, 4)},
      {"Z2xZ6", 12, "cyclic:2 x cyclic:6", abelian2_pres(2, 6)},
      {"Z3xZ3", 9, "cyclic:3 x cyclic:3", abelian2_pres(3, 3)},
      {"Z4xZ4", 16, "cyclic:4 x cyclic:4", abelian2_pres(4, 4)},
      {"Z2xZ2xZ2", 8, "cyclic:2 x cyclic:2 x cyclic:2", times_cyclic(abelian2_pres(2, 2), 2)},
      {"S3", 6, "dihedral:6", dihedral_pres(3)},
      {"D8", 8, "dihedral:8", dihedral_pres(4)},
      {"D10", 10, "dihedral:10", dihedral_pres(5)},
      {"D12", 12, "dihedral:12", dihedral_pres(6)},
      {"D16", 16, "dihedral:16", dihedral_pres(8)},
      {"Q8", 8, "quaternion", {{"i", "j"}, {4, 4}, {"i^4", "i^2*j^-2", "j^-1*i*j*i"}}},
      {"Dic12", 12, "dic(cyclic:6)", {{"a", "x"}, {6, 4}, {"a^6", "a^3*x^-2", "x^-1*a*x*a"}}},
      {"A4", 12, "alt:4", a4},
      {"S4", 24, "sym:4", s4},
      {"SL23", 24, "sl:2:3", {{"s", "t"}, {6, 6}, {"s^3*t^-3", "s*t*s*t*s^-3"}}},
      {"Heis27", 27, "heisenberg:3", {{"a", "b"}, {3, 3}, {"a^3", "b^3", "a*b*a*b*a*b", "a*b^2*a*b^2*a*b^2"}}},
      {"D8xZ3", 24, "dihedral:8 x cyclic:3", times_cyclic(dihedral_pres(4), 3)},
      {"D6xZ4", 24, "dihedral:6 x cyclic:4", times_cyclic(dihedral_pres(3), 4)},
      {"A4xZ2", 24, "alt:4 x cyclic:2", times_cyclic(a4, 2)},
  };
  return c;
}

// Relators compiled to (generator slot, exponent) runs.
struct CompiledRelator {
  std::vector<std::pair<int, long long>> runs;
  int max_slot = -1;
};

CompiledRelator compile_relator(const Presentation& p, std::string_view word) {
  CompiledRelator out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] == '*' || std::isspace(static_cast<unsigned char>(word[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < word.size() && std::isalnum(static_cast<unsigned char>(word[j]))) ++j;
    const std::string_view name = word.substr(i, j - i);
    auto it = std::find(p.generators.begin(), p.generators.end(), name);
    if (it == p.generators.end()) throw Error("catalog relator uses unknown generator");
    const int slot = static_cast<int>(it - p.generators.begin());
    long long exp = 1;
    if (j < word.size() && word[j] == '^') {
      std::size_t k = j + 1;
      if (k < word.size() && word[k] == '-') ++k;
      while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
      std::from_chars(word.data() + j + 1, word.data() + k, exp);
      j = k;
    }
    out.runs.emplace_back(slot, exp);
    out.max_slot = std::max(out.max_slot, slot);
    i = j;
  }
  return out;
}

class PresentationSearch {
 public:
  PresentationSearch(const FiniteGroup& g, const CatalogEntry& target) : g_(g), target_(target) {
    const auto& p = target.presentation;
    for (const auto& r : p.relators) relators_.push_back(compile_relator(p, r));
    candidates_.resize(p.generators.size());
    for (Elem x = 0; x < g.order(); ++x) {
      for (std::size_t s = 0; s < p.generators.size(); ++s) {
        if (g.element_order(x) == p.generator_orders[s]) candidates_[s].push_back(x);
      }
    }
    tuple_.resize(p.generators.size());
  }

  bool run() {
    if (target_.order == 1) return true;
    return extend(0);
  }

 private:
  bool relator_holds(const CompiledRelator& r) const {
    Elem acc = g_.identity();
    for (const auto& [slot, exp] : r.runs) acc = g_.mul(acc, g_.power(tuple_[slot], exp));
    return acc == g_.identity();
  }

  bool extend(std::size_t slot) {
    if (slot == tuple_.size()) {
      std::vector<bool> seen(g_.order(), false);
      std::vector<Elem> queue{g_.identity()};
      seen[g_.identity()] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Elem s : tuple_) {
          Elem nxt = g_.mul(queue[head], s);
          if (!seen[nxt]) {
            seen[nxt] = true;
            queue.push_back(nxt);
            if (queue.size() > target_.order) return false;
          }
        }
      }
      return queue.size() == target_.order;
    }
    for (Elem x : candidates_[slot]) {
      tuple_[slot] = x;
      bool ok = true;
      for (const auto& r : relators_) {
        if (r.max_slot == static_cast<int>(slot) && !relator_holds(r)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(slot + 1)) return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  const CatalogEntry& target_;
  std::vector<CompiledRelator> relators_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> tuple_;
};

}  // namespace

const std::vector<CatalogEntry>& named_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& a : kAliases) {
    if (a.alias == name) name = a.name;
  }
  for (const auto& e : named_catalog()) {
    if (e.name == name) return e;
  }
  throw Error("unknown catalog name \"" + std::string(name) + "\"");
}

bool recognize_named(const FiniteGroup& g, std::string_view name) {
  const auto& target = catalog_entry(name);
  if (g.order() != target.order) return false;
  return PresentationSearch(g, target).run();
}

bool has_subgroup_isomorphic(const FiniteGroup& g, std::string_view name) {
  const auto& target = catalog_entry(name);
  if (g.order() % target.order != 0) return false;
  return PresentationSearch(g, target).run();
}

}  // namespace integra
