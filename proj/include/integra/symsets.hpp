#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "integra/group.hpp"

namespace integra {

/// Non-identity elements split into involutions and {g, g^-1} pairs.
struct InversePartition {
  std::vector<Elem> involutions;             // sorted
  std::vector<std::pair<Elem, Elem>> pairs;  // first < second, sorted by first
};

/// Sorted, inverse-closed, identity-free element list.
struct SymmetricSet {
  std::vector<Elem> members;

  std::size_t size() const { return members.size(); }
  bool operator==(const SymmetricSet&) const = default;
};

enum class SizeMode { exact, at_most };

InversePartition inverse_partition(const FiniteGroup& g);

/// Throws Error when `members` is not a valid connection set of g.
SymmetricSet make_symmetric_set(const FiniteGroup& g, std::vector<Elem> members);
bool is_symmetric_set(const FiniteGroup& g, const std::vector<Elem>& members);

/// Lazily walks every symmetric connection set of the requested size(s).
///
/// Order: sizes ascending; within a size, by the number of involutions
/// ascending; then involution subsets lexicographically, then pair subsets
/// lexicographically (pairs ordered by their smaller member). The empty set is
/// never produced.
class SymmetricSetEnumerator {
 public:
  SymmetricSetEnumerator(const FiniteGroup& g, std::size_t k, SizeMode mode);

  /// Writes the next set into `out`; returns false when exhausted.
  bool next(SymmetricSet& out);

 private:
  bool start_signature();
  bool advance_within_signature();
  void emit(SymmetricSet& out) const;

  InversePartition part_;
  std::size_t max_size_;
  std::size_t size_;
  std::size_t inv_count_ = 0;  // involutions in the current signature
  std::vector<std::size_t> inv_idx_;
  std::vector<std::size_t> pair_idx_;
  bool active_ = false;
  bool done_ = false;
};

std::vector<SymmetricSet> enumerate_symmetric_sets(const FiniteGroup& g, std::size_t k, SizeMode mode);

/// Closed form: sum over a + 2b = size of C(#involutions, a) * C(#pairs, b).
mpz_class count_symmetric_sets(const FiniteGroup& g, std::size_t k, SizeMode mode);

/// True when no conjugate g S g^-1 precedes S in enumeration order.
bool is_conjugacy_canonical(const FiniteGroup& g, const SymmetricSet& s);

/// Compares two sets of equal size by enumeration order.
bool precedes_in_enumeration(const FiniteGroup& g, const SymmetricSet& lhs, const SymmetricSet& rhs);

}  // namespace integra
