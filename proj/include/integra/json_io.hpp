#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <string_view>

#include "integra/classify.hpp"
#include "integra/group.hpp"
#include "integra/spectra.hpp"

namespace integra {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json bigint_json(const mpz_class& v);
json polynomial_json(const IntPolynomial& p);

/// ftg-1 group-table document.
json group_to_json(const FiniteGroup& g);
/// Parses and fully validates an ftg-1 document, associativity included.
FiniteGroup group_from_json(const json& doc);
FiniteGroup group_from_text(std::string_view text);

json profile_to_json(const GroupProfile& p);
json spectrum_to_json(const SpectrumReport& r);
json membership_to_json(const MembershipReport& r);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace integra
