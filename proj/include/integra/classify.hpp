#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "integra/group.hpp"
#include "integra/symsets.hpp"

namespace integra {

enum class GroupClass { A, G };

/// Outcome of an exhaustive A_k / G_k scan.
///
/// `member` uses vacuous truth: when no connection set of the scanned sizes
/// exists the group is a member and `vacuous` is set. A non-member carries the
/// first failing set in enumeration order as its witness.
struct MembershipReport {
  std::string group_id;
  int k = 0;
  GroupClass cls = GroupClass::A;
  bool member = true;
  bool vacuous = false;
  std::optional<SymmetricSet> witness;
  std::vector<std::string> witness_words;
  std::size_t sets_checked = 0;
};

struct ScanOptions {
  /// Skip sets that are not the first of their conjugacy class. Verdicts and
  /// witnesses are unchanged; only sets_checked drops.
  bool dedup_conjugates = false;
  /// 0 picks INTEGRA_THREADS, then the hardware concurrency.
  unsigned threads = 0;
};

/// Worker count for scans: INTEGRA_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned default_thread_count();

MembershipReport in_A_k(const FiniteGroup& g, int k, std::string group_id = {}, ScanOptions options = {});
MembershipReport in_G_k(const FiniteGroup& g, int k, std::string group_id = {}, ScanOptions options = {});

/// In the class of groups with element orders in {1,2,3,4,6}, D8-free and D12-free.
bool a2_structural(const FiniteGroup& g);

/// G is S3, or every <x, y> with x an involution is one of
/// Z2, Z2^2, Z4, Z6, Z2xZ4, Z2xZ6, A4.
bool a3_structural(const FiniteGroup& g);

/// Nontrivial 3-group of exponent 3, or a3_structural for a group that has
/// cubic connection sets (even order). The trivial group is accepted.
bool g3_structural(const FiniteGroup& g);

/// For nilpotent G, the first matching case 1..4 of the nilpotent G_3
/// characterization, or nullopt. Throws Error when G is not nilpotent.
std::optional<int> nilpotent_g3_case(const FiniteGroup& g);

}  // namespace integra
