#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace integra {

/// Index of an element inside a FiniteGroup's multiplication table.
using Elem = std::uint32_t;

/// Largest group order any builder will produce.
inline constexpr std::size_t kMaxOrder = 500;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedGenerator {
  std::string name;
  Elem element = 0;

  bool operator==(const NamedGenerator&) const = default;
};

/// A finite group stored as its complete multiplication table.
///
/// Values are immutable after construction. Element orders and inverses are
/// precomputed, so every query below is O(1) except `power`.
class FiniteGroup {
 public:
  /// Builds a group from a row-major Cayley table (table[i * order + j] is the
  /// index of g_i * g_j). Always checks the Latin-square, identity and inverse
  /// conditions; the O(n^3) associativity scan runs when requested.
  static FiniteGroup from_cayley_table(std::vector<Elem> table, std::size_t order, Elem identity,
                                       std::vector<std::string> names,
                                       std::vector<NamedGenerator> generators,
                                       bool check_associativity);

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem power(Elem g, long long exponent) const;
  int element_order(Elem g) const { return elt_order_[g]; }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::string& name(Elem g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<NamedGenerator>& generators() const { return generators_; }
  std::optional<Elem> generator(std::string_view name) const;
  /// Element whose display name equals `name`, if any.
  std::optional<Elem> find_by_name(std::string_view name) const;

  const std::vector<Elem>& table() const { return table_; }
  const std::vector<Elem>& inverses() const { return inv_; }
  std::span<const Elem> row(Elem a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  bool is_abelian() const;
  /// Runs the O(n^3) associativity scan.
  bool is_associative() const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<int> elt_order_;
  std::vector<std::string> names_;
  std::vector<NamedGenerator> generators_;
};

/// A subgroup of some parent group, together with its induced table.
struct Subgroup {
  std::vector<Elem> members;  // sorted parent indices
  FiniteGroup group;          // induced numbering, identity = 0
  std::vector<Elem> embed;    // induced index -> parent index

  std::size_t order() const { return members.size(); }
  std::size_t index_in(const FiniteGroup& parent) const { return parent.order() / members.size(); }
};

struct GroupProfile {
  std::size_t order = 0;
  std::map<int, std::size_t> order_multiset;
  long long exponent = 1;
  bool abelian = false;
  bool nilpotent = false;
  std::size_t center_size = 0;
  std::size_t involution_count = 0;
  bool involutions_central = true;
  bool in_class_G = false;
};

// --- Concrete realizations -------------------------------------------------

/// Elements of a concrete model (permutations, matrices, normal-form tuples)
/// encoded as small integer vectors.
using Rep = std::vector<int>;

struct Realization {
  Rep identity;
  std::function<Rep(const Rep&, const Rep&)> multiply;
  /// Optional display names; word names over the generators are used otherwise.
  std::function<std::string(const Rep&)> display;
};

/// Enumerates the group generated by `generators` inside a realization.
/// Elements are numbered breadth-first: identity first, then right
/// multiplication by each generator in order. Throws when the order exceeds
/// kMaxOrder.
FiniteGroup generate_group(const Realization& model,
                           const std::vector<std::pair<std::string, Rep>>& generators);

// --- Constructors ----------------------------------------------------------

FiniteGroup cyclic_group(std::size_t n);
/// Dihedral group of order n (n even): a^(n/2) = b^2 = 1, bab = a^-1.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(int degree);
FiniteGroup alternating_group(int degree);
/// Unitriangular 3x3 matrices over Z_p; p an odd prime.
FiniteGroup heisenberg_group(int p);
FiniteGroup special_linear_2_3();
/// Z_m x| Z_n with the Z_n generator inverting Z_m; n even.
FiniteGroup inverting_semidirect(std::size_t m, std::size_t n);
/// <a, b, c | a^m = b^n = c^2 = 1, [a,b] = c, c central>; m, n even.
FiniteGroup central_commutator_extension(std::size_t m, std::size_t n);
/// Group generated by permutations of {1..degree}; permutations are 0-based
/// image arrays and are composed left to right.
FiniteGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators);

/// Element (i, j) is numbered i * |H| + j; names are "g,h".
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Dic(A, y) = <A, x | x^2 = y, x^-1 a x = a^-1>, order 2|A|.
FiniteGroup generalized_dicyclic(const FiniteGroup& a, Elem y);

/// Builds a group from the ConstructSpec grammar, e.g. "dic(cyclic:3 x cyclic:6)".
FiniteGroup construct(std::string_view spec);

// --- Structure ---------------------------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const Elem> generators);
GroupProfile profile(const FiniteGroup& g);
std::vector<Elem> center(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
std::vector<Elem> involutions(const FiniteGroup& g);

/// Evaluates a word such as "a^3*b" or "x^-1 b" over the bound generators.
Elem parse_word(const FiniteGroup& g, std::string_view word);

// --- Named catalog -------------------------------------------------------------

struct Presentation {
  std::vector<std::string> generators;
  std::vector<int> generator_orders;
  std::vector<std::string> relators;
};

struct CatalogEntry {
  std::string name;
  std::size_t order;
  std::string construct_spec;
  Presentation presentation;
};

const std::vector<CatalogEntry>& named_catalog();
/// Throws Error for unknown names. Aliases ("D6", "Z2^2", ...) resolve here.
const CatalogEntry& catalog_entry(std::string_view name);

/// G is isomorphic to the named group: equal order and some generator tuple of
/// G satisfies the defining presentation and generates G.
bool recognize_named(const FiniteGroup& g, std::string_view name);
/// Some generator tuple satisfies the presentation and generates a subgroup of
/// exactly the target order.
bool has_subgroup_isomorphic(const FiniteGroup& g, std::string_view name);

}  // namespace integra
