#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "integra/json_io.hpp"

namespace integra {

struct Claim {
  std::string id;
  std::string description;
  std::string anchor;
  std::string scale;  // "instant", "seconds" or "minute"
};

struct ClaimResult {
  std::string id;
  bool passed = false;
  json evidence;
  std::chrono::duration<double> elapsed{};
};

struct VerifySummary {
  std::vector<ClaimResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

/// A group used by the cross-checks: display id plus construct spec.
struct CatalogGroup {
  std::string id;
  std::string spec;
};

/// Fourteen groups with a cubic connected integral Cayley graph, plus Q8.
const std::vector<CatalogGroup>& core_catalog();
/// core_catalog() followed by further small groups (orders up to 36).
const std::vector<CatalogGroup>& extended_catalog();

const std::vector<Claim>& list_claims();
/// Throws Error for unknown ids.
ClaimResult run_claim(std::string_view id);
/// A filter ending in '*' matches ids by prefix; any other filter must match exactly.
VerifySummary run_all(std::optional<std::string_view> filter = std::nullopt);

/// Elapsed time is left out so that output is byte-stable.
json claim_result_to_json(const ClaimResult& r);
json summary_to_json(const VerifySummary& s);

}  // namespace integra
