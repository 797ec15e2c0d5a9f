#include "integra/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "integra/classify.hpp"
#include "integra/spectra.hpp"
#include "integra/symsets.hpp"

namespace integra {

namespace {

using Clock = std::chrono::steady_clock;

// The fourteen groups admitting a cubic connected integral Cayley graph.
const std::vector<std::string>& cubic_integral_names() {
  static const std::vector<std::string> names{"Z2xZ2", "Z4",  "Z6",    "Z2xZ2xZ2", "Z2xZ4", "Z2xZ6", "S3",
                                              "D8",    "D12", "A4",    "S4",       "D8xZ3", "D6xZ4", "A4xZ2"};
  return names;
}

SymmetricSet set_from_words(const FiniteGroup& g, const std::vector<std::string>& words) {
  std::vector<Elem> members;
  for (const auto& w : words) members.push_back(parse_word(g, w));
  return make_symmetric_set(g, std::move(members));
}

json words_of(const FiniteGroup& g, const SymmetricSet& s) {
  json out = json::array();
  for (Elem x : s.members) out.push_back(g.name(x));
  return out;
}

json set_record(const FiniteGroup& g, const SymmetricSet& s) {
  const CayleySpectrum sp = is_integral_cayley(g, s);
  return json{{"set", s.members},
              {"words", words_of(g, s)},
              {"integral", sp.integral},
              {"spectrum", spectrum_to_json(sp.lifted)}};
}

json membership_brief(const MembershipReport& r) {
  return json{{"member", r.member},
              {"vacuous", r.vacuous},
              {"sets_checked", r.sets_checked},
              {"witness_words", r.witness ? json(r.witness_words) : json(nullptr)}};
}

// A non-member witness must itself be non-integral.
bool witness_rechecks(const FiniteGroup& g, const MembershipReport& r) {
  return !r.witness || !is_integral_cayley(g, *r.witness).integral;
}

struct Outcome {
  bool passed = true;
  json evidence = json::object();
  void require(bool cond) { passed = passed && cond; }
};

Outcome claim_c1() {
  Outcome o;
  json rows = json::array();
  for (std::size_t n = 3; n <= 12; ++n) {
    const FiniteGroup g = cyclic_group(n);
    const SymmetricSet s = set_from_words(g, {"a", "a^-1"});
    const bool integral = is_integral_cayley(g, s).integral;
    const bool expected = n == 3 || n == 4 || n == 6;
    o.require(integral == expected);
    rows.push_back({{"n", n}, {"integral", integral}, {"expected", expected}});
  }
  o.evidence["cycles"] = rows;
  return o;
}

Outcome dihedral_claim(const std::string& spec, const std::vector<std::string>& words, long c0,
                       long c1) {
  Outcome o;
  const FiniteGroup g = construct(spec);
  const SymmetricSet s = set_from_words(g, words);
  const IntPolynomial full = char_poly(cayley_adjacency(g, s));
  const IntPolynomial factor(std::vector<mpz_class>{mpz_class(c0), mpz_class(c1), mpz_class(1)});
  const bool divides = poly_divides(factor, full);
  const json rec = set_record(g, s);
  o.require(!rec["integral"].get<bool>());
  o.require(divides);
  o.evidence["group"] = spec;
  o.evidence["connection_set"] = rec;
  o.evidence["char_poly"] = polynomial_json(full);
  o.evidence["factor"] = polynomial_json(factor);
  o.evidence["factor_divides"] = divides;

  const MembershipReport a3 = in_A_k(g, 3, spec);
  o.require(!a3.member);
  o.require(witness_rechecks(g, a3));
  o.evidence["in_A_3"] = membership_to_json(a3);
  return o;
}

Outcome claim_c4() {
  Outcome o;
  const FiniteGroup g = alternating_group(4);
  const auto sets = enumerate_symmetric_sets(g, 3, SizeMode::exact);
  std::size_t integral = 0;
  json listed = json::array();
  for (const auto& s : sets) {
    if (is_integral_cayley(g, s).integral) ++integral;
    listed.push_back(words_of(g, s));
  }
  o.require(sets.size() == 13);
  o.require(count_symmetric_sets(g, 3, SizeMode::exact) == 13);
  o.require(integral == sets.size());
  o.evidence = {{"group", "alt:4"}, {"sets", sets.size()}, {"integral", integral}, {"set_words", listed}};
  return o;
}

Outcome claim_c5() {
  Outcome o;
  json rows = json::array();
  std::vector<std::string> members;
  for (const auto& entry : extended_catalog()) {
    const FiniteGroup g = construct(entry.spec);
    if (!has_subgroup_isomorphic(g, "S3")) continue;
    const MembershipReport r = in_A_k(g, 3, entry.id);
    o.require(witness_rechecks(g, r));
    if (r.member) members.push_back(entry.id);
    rows.push_back({{"group", entry.id}, {"in_A_3", membership_brief(r)}});
  }
  o.require(members == std::vector<std::string>{"S3"});
  o.evidence = {{"groups_with_S3", rows}, {"members", members}};
  return o;
}

// Brute-force membership against a structural predicate over a group list.
Outcome agreement_claim(const std::vector<CatalogGroup>& groups, GroupClass cls, int k,
                        const std::function<bool(const FiniteGroup&)>& predicate) {
  Outcome o;
  json rows = json::array();
  json mismatches = json::array();
  for (const auto& entry : groups) {
    const FiniteGroup g = construct(entry.spec);
    const MembershipReport r = cls == GroupClass::A ? in_A_k(g, k, entry.id) : in_G_k(g, k, entry.id);
    const bool structural = predicate(g);
    o.require(witness_rechecks(g, r));
    if (r.member != structural) {
      o.require(false);
      mismatches.push_back(entry.id);
    }
    json row = membership_brief(r);
    row["group"] = entry.id;
    row["structural"] = structural;
    rows.push_back(row);
  }
  o.evidence = {{"class", cls == GroupClass::A ? "A" : "G"}, {"k", k}, {"groups", rows}, {"mismatches", mismatches}};
  return o;
}

Outcome claim_c8() {
  Outcome o;
  json rows = json::array();
  json mismatches = json::array();
  for (const auto& entry : extended_catalog()) {
    const FiniteGroup g = construct(entry.spec);
    if (g.order() == 1 || !is_nilpotent(g)) continue;
    const MembershipReport r = in_G_k(g, 3, entry.id);
    const std::optional<int> c = nilpotent_g3_case(g);
    o.require(witness_rechecks(g, r));
    if (r.member != c.has_value()) {
      o.require(false);
      mismatches.push_back(entry.id);
    }
    json row = membership_brief(r);
    row["group"] = entry.id;
    row["case"] = c ? json(*c) : json(nullptr);
    rows.push_back(row);
  }
  o.evidence = {{"groups", rows}, {"mismatches", mismatches}};
  return o;
}

Outcome claim_c9() {
  Outcome o;
  const FiniteGroup g = heisenberg_group(3);
  const MembershipReport g3 = in_G_k(g, 3, "heisenberg:3");
  const MembershipReport g4 = in_G_k(g, 4, "heisenberg:3");
  const json rec = set_record(g, set_from_words(g, {"a", "a^2", "b", "b^2"}));
  o.require(g3.member && !g3.vacuous);
  o.require(!g4.member && witness_rechecks(g, g4));
  o.require(!rec["integral"].get<bool>());
  o.evidence = {{"group", "heisenberg:3"},
                {"in_G_3", membership_to_json(g3)},
                {"in_G_4", membership_to_json(g4)},
                {"witness", rec}};
  return o;
}

Outcome claim_c10() {
  Outcome o;
  const FiniteGroup h0 = construct("cext:4:4");
  const json t0 = set_record(h0, set_from_words(h0, {"b*a^2", "a^2*b^3", "a^3*b^2", "b^2*a"}));
  const Elem gens0[] = {parse_word(h0, "b*a^2"), parse_word(h0, "a^3*b^2")};
  const std::size_t span0 = closure(h0, gens0).order();
  o.require(h0.order() == 32 && span0 == 32);
  o.require(!t0["integral"].get<bool>());

  const FiniteGroup h1 = construct("semidirect:4:4");
  const json t1 = set_record(h1, set_from_words(h1, {"a^2*b^-1", "b*a^2", "a^-1*b^-1", "b*a"}));
  o.require(h1.order() == 16);
  o.require(!t1["integral"].get<bool>());

  const FiniteGroup h2 = construct("cext:4:2");
  const Elem b = parse_word(h2, "b");
  const auto z = center(h2);
  const bool b_central = std::binary_search(z.begin(), z.end(), b);
  const MembershipReport g3 = in_G_k(h2, 3, "cext:4:2");
  const std::optional<int> c = nilpotent_g3_case(h2);
  o.require(h2.order() == 16 && h2.element_order(b) == 2 && !b_central);
  o.require(!c.has_value());
  o.require(!g3.member && witness_rechecks(h2, g3));

  o.evidence = {{"H0", {{"group", "cext:4:4"}, {"order", h0.order()}, {"T0", t0}, {"span_order", span0}}},
                {"H1", {{"group", "semidirect:4:4"}, {"order", h1.order()}, {"T1", t1}}},
                {"H2",
                 {{"group", "cext:4:2"},
                  {"order", h2.order()},
                  {"b_order", h2.element_order(b)},
                  {"b_central", b_central},
                  {"nilpotent_case", c ? json(*c) : json(nullptr)},
                  {"in_G_3", membership_to_json(g3)}}}};
  return o;
}

Outcome claim_c11() {
  Outcome o;
  const FiniteGroup g = alternating_group(4);
  std::vector<Elem> members;
  for (const char* name : {"(2,3,4)", "(2,4,3)", "(1,3)(2,4)", "(1,2)(3,4)"}) {
    auto e = g.find_by_name(name);
    if (!e) throw Error(std::string("A4 has no element named ") + name);
    members.push_back(*e);
  }
  const json rec = set_record(g, make_symmetric_set(g, members));
  o.require(!rec["integral"].get<bool>());
  o.evidence = {{"group", "alt:4"}, {"connection_set", rec}};
  return o;
}

Outcome claim_c12() {
  Outcome o;
  const std::string spec = "dic(cyclic:6) x cyclic:2";
  const FiniteGroup g = construct(spec);
  const json rec = set_record(g, set_from_words(g, {"x^-1*b", "b*x", "x*a^2", "a^-2*x^-1"}));
  o.require(g.order() == 24);
  o.require(!rec["integral"].get<bool>());
  o.evidence = {{"group", spec}, {"connection_set", rec}};
  return o;
}

Outcome claim_c13() {
  Outcome o;
  const std::string spec = "dic(cyclic:3 x cyclic:6)";
  const FiniteGroup g = construct(spec);
  const MembershipReport g5 = in_G_k(g, 5, spec);
  const mpz_class total = count_symmetric_sets(g, 5, SizeMode::at_most);
  // First failing 6-set in enumeration order, as found by in_A_k(g, 6).
  const std::vector<std::string> pinned{"x", "a*x", "b*x", "x*b^2", "x^3", "a*x^3"};
  const SymmetricSet w = set_from_words(g, pinned);
  const json rec = set_record(g, w);
  o.require(g.order() == 36);
  o.require(g5.member && !g5.vacuous);
  o.require(total == g5.sets_checked && total == 307);
  o.require(w.size() == 6 && !rec["integral"].get<bool>());
  o.evidence = {{"group", spec},
                {"order", g.order()},
                {"in_G_5", membership_to_json(g5)},
                {"nonempty_sets_up_to_5", bigint_json(total)},
                {"sets_up_to_5_with_empty", bigint_json(total + 1)},
                {"G_6_witness", rec}};
  return o;
}

Outcome claim_c14() {
  Outcome o;
  json rows = json::array();
  for (const char* spec : {"dihedral:6", "cyclic:2 x cyclic:2 x cyclic:3", "cyclic:2 x cyclic:4", "quaternion",
                           "quaternion x cyclic:2", "dic(cyclic:6)"}) {
    const FiniteGroup g = construct(spec);
    const int k = static_cast<int>(g.order()) - 1;
    const MembershipReport r = in_G_k(g, k, spec);
    const mpz_class total = count_symmetric_sets(g, static_cast<std::size_t>(k), SizeMode::at_most);
    o.require(r.member && total == r.sets_checked);
    rows.push_back({{"group", spec}, {"order", g.order()}, {"all_sets", bigint_json(total)},
                    {"in_G", membership_brief(r)}});
  }
  o.evidence["groups"] = rows;
  return o;
}

Outcome claim_c15() {
  Outcome o;
  json rows = json::array();
  for (const char* spec : {"quaternion x cyclic:4", "alt:4 x cyclic:3", "sl:2:3"}) {
    const FiniteGroup g = construct(spec);
    const MembershipReport r = in_G_k(g, 3, spec);
    o.require(r.member && !r.vacuous);
    json row = membership_brief(r);
    row["group"] = spec;
    row["order"] = g.order();
    rows.push_back(row);
  }
  o.evidence["groups"] = rows;
  return o;
}

Outcome claim_c17() {
  Outcome o;
  const auto& allowed = cubic_integral_names();
  json rows = json::array();
  json offenders = json::array();
  std::set<std::string> realized;
  for (const auto& entry : extended_catalog()) {
    const FiniteGroup g = construct(entry.spec);
    if (g.order() > 24) continue;
    std::map<std::vector<Elem>, std::optional<std::string>> seen;
    std::size_t integral = 0;
    std::size_t connected = 0;
    SymmetricSetEnumerator it(g, 3, SizeMode::exact);
    SymmetricSet s;
    while (it.next(s)) {
      if (!cayley_integral_verdict(g, s)) continue;
      ++integral;
      Subgroup h = closure(g, s.members);
      if (h.order() == g.order()) ++connected;
      auto [pos, fresh] = seen.try_emplace(h.members);
      if (fresh) {
        for (const auto& name : allowed) {
          if (recognize_named(h.group, name)) {
            pos->second = name;
            break;
          }
        }
      }
      if (!pos->second) {
        o.require(false);
        offenders.push_back({{"group", entry.id}, {"set_words", words_of(g, s)}});
      } else {
        realized.insert(*pos->second);
      }
    }
    rows.push_back({{"group", entry.id}, {"integral_cubic_sets", integral}, {"connected", connected}});
  }
  o.evidence = {{"groups", rows},
                {"offenders", offenders},
                {"generated_groups", std::vector<std::string>(realized.begin(), realized.end())}};
  return o;
}

struct Registered {
  Claim claim;
  std::function<Outcome()> run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> claims{
      {{"C1", "Cay(Zn, {1, -1}) is integral exactly for n in {3, 4, 6}, 3 <= n <= 12",
        "cycle C_n has eigenvalues 2cos(2 pi j / n)", "instant"},
       claim_c1},
      {{"C2", "Cay(D8, {a^2, a^3 b, b}) is non-integral; x^2+2x-1 divides its characteristic polynomial; D8 not in A_3",
        "-1 +- sqrt(2) is an eigenvalue of the D8 cubic graph", "instant"},
       [] { return dihedral_claim("dihedral:8", {"a^2", "a^3*b", "b"}, -1, 2); }},
      {{"C3", "Cay(D12, {a^3, a^5 b, b}) is non-integral; x^2+2x-2 divides its characteristic polynomial",
        "-1 +- sqrt(3) is an eigenvalue of the D12 cubic graph", "instant"},
       [] { return dihedral_claim("dihedral:12", {"a^3", "a^5*b", "b"}, -2, 2); }},
      {{"C4", "all 13 symmetric 3-subsets of A4 give integral Cayley graphs", "A4 lies in A_3", "instant"},
       claim_c4},
      {{"C5", "among catalog groups with an S3 subgroup only S3 lies in A_3",
        "a group with an S3 subgroup is in A_3 iff it is S3", "seconds"},
       claim_c5},
      {{"C6", "brute-force A_3 equals the involution-pair predicate on the 15-group catalog",
        "G in A_3 iff G = S3 or every <x, y> with x an involution is Z2, Z2^2, Z4, Z6, Z2xZ4, Z2xZ6 or A4",
        "seconds"},
       [] { return agreement_claim(core_catalog(), GroupClass::A, 3, a3_structural); }},
      {{"C7", "brute-force G_3 equals the structural predicate on the extended catalog",
        "G in G_3 iff G is a 3-group of exponent 3 or G lies in A_3", "seconds"},
       [] { return agreement_claim(extended_catalog(), GroupClass::G, 3, g3_structural); }},
      {{"C8", "for nilpotent catalog groups, brute-force G_3 equals the four-case nilpotent criterion",
        "nilpotent G in G_3 iff exponent-3 3-group, Z2^n, exponent-4 2-group with central involutions, or Z2^n x B",
        "seconds"},
       claim_c8},
      {{"C9", "Heisenberg group of order 27 is in G_3 but not G_4; {a, a^2, b, b^2} is non-integral",
        "exponent-3 groups of order 27 leave G_4", "instant"},
       claim_c9},
      {{"C10", "H0 and H1 have non-integral 4-sets T0, T1; H2 has a non-central involution and is not in G_3",
        "the 2-groups H0, H1, H2 are not in G_4", "instant"},
       claim_c10},
      {{"C11", "Cay(A4, {(2,3,4), (2,4,3), (1,3)(2,4), (1,2)(3,4)}) is non-integral", "A4 is not in G_4",
        "instant"},
       claim_c11},
      {{"C12", "(Z3 x| Z4) x Z2 has a non-integral quartic Cayley graph", "(Z3 x| Z4) x Z2 is not in G_4",
        "instant"},
       claim_c12},
      {{"C13", "Dic(Z3 x Z6) passes every symmetric set of size <= 5 and has a non-integral 6-set",
        "Dic(Z3 x Z6) lies in G_5 but not G_6", "seconds"},
       claim_c13},
      {{"C14", "S3, Z2^2 x Z3, Z2 x Z4, Q8, Q8 x Z2 and Dic(Z6) are Cayley integral",
        "every Cayley graph over these groups is integral", "seconds"},
       claim_c14},
      {{"C15", "Q8 x Z4, A4 x Z3 and SL(2,3) lie in G_3", "these groups satisfy the G_3 characterization",
        "seconds"},
       claim_c15},
      {{"C16", "brute-force A_2 equals the D8-free, D12-free predicate on the extended catalog",
        "G in A_2 iff element orders lie in {1,2,3,4,6} and G is D8-free and D12-free", "instant"},
       [] { return agreement_claim(extended_catalog(), GroupClass::A, 2, a2_structural); }},
      {{"C17", "every integral cubic Cayley graph over catalog groups of order <= 24 has its component group in the list of 14",
        "connected cubic integral Cayley graphs live on Z2^2, Z4, Z6, Z2^3, Z2xZ4, Z2xZ6, S3, D8, D12, A4, S4, "
        "D8xZ3, D6xZ4, A4xZ2",
        "seconds"},
       claim_c17},
  };
  return claims;
}

bool filter_matches(std::string_view filter, std::string_view id) {
  if (!filter.empty() && filter.back() == '*') return id.starts_with(filter.substr(0, filter.size() - 1));
  return id == filter;
}

}  // namespace

const std::vector<CatalogGroup>& core_catalog() {
  static const std::vector<CatalogGroup> groups{
      {"Z2xZ2", "cyclic:2 x cyclic:2"},
      {"Z4", "cyclic:4"},
      {"Z6", "cyclic:6"},
      {"Z2xZ2xZ2", "cyclic:2 x cyclic:2 x cyclic:2"},
      {"Z2xZ4", "cyclic:2 x cyclic:4"},
      {"Z2xZ6", "cyclic:2 x cyclic:6"},
      {"S3", "dihedral:6"},
      {"D8", "dihedral:8"},
      {"D12", "dihedral:12"},
      {"A4", "alt:4"},
      {"S4", "sym:4"},
      {"D8xZ3", "dihedral:8 x cyclic:3"},
      {"D6xZ4", "dihedral:6 x cyclic:4"},
      {"A4xZ2", "alt:4 x cyclic:2"},
      {"Q8", "quaternion"},
  };
  return groups;
}

const std::vector<CatalogGroup>& extended_catalog() {
  static const std::vector<CatalogGroup> groups = [] {
    std::vector<CatalogGroup> all = core_catalog();
    const std::vector<CatalogGroup> more{
        {"Z1", "cyclic:1"},
        {"Z2", "cyclic:2"},
        {"Z3", "cyclic:3"},
        {"Z5", "cyclic:5"},
        {"Z7", "cyclic:7"},
        {"Z8", "cyclic:8"},
        {"Z9", "cyclic:9"},
        {"Z12", "cyclic:12"},
        {"Z3xZ3", "cyclic:3 x cyclic:3"},
        {"Z4xZ4", "cyclic:4 x cyclic:4"},
        {"Z2xZ2xZ2xZ2", "cyclic:2 x cyclic:2 x cyclic:2 x cyclic:2"},
        {"D10", "dihedral:10"},
        {"D16", "dihedral:16"},
        {"Q8xZ2", "quaternion x cyclic:2"},
        {"Dic12", "dic(cyclic:6)"},
        {"SL23", "sl:2:3"},
        {"Heis27", "heisenberg:3"},
        {"H1", "semidirect:4:4"},
        {"H2", "cext:4:2"},
        {"S3xZ3", "dihedral:6 x cyclic:3"},
        {"Q8xZ4", "quaternion x cyclic:4"},
        {"H0", "cext:4:4"},
        {"Dic(Z3xZ6)", "dic(cyclic:3 x cyclic:6)"},
        {"A4xZ3", "alt:4 x cyclic:3"},
    };
    all.insert(all.end(), more.begin(), more.end());
    return all;
  }();
  return groups;
}

const std::vector<Claim>& list_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> out;
    for (const auto& r : registry()) out.push_back(r.claim);
    return out;
  }();
  return claims;
}

ClaimResult run_claim(std::string_view id) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Registered& r) { return r.claim.id == id; });
  if (it == reg.end()) throw Error("unknown claim \"" + std::string(id) + "\"");
  ClaimResult result;
  result.id = it->claim.id;
  const auto start = Clock::now();
  try {
    Outcome o = it->run();
    result.passed = o.passed;
    result.evidence = std::move(o.evidence);
  } catch (const std::exception& e) {
    result.passed = false;
    result.evidence = {{"error", e.what()}};
  }
  result.elapsed = Clock::now() - start;
  return result;
}

VerifySummary run_all(std::optional<std::string_view> filter) {
  VerifySummary summary;
  for (const auto& claim : list_claims()) {
    if (filter && !filter_matches(*filter, claim.id)) continue;
    summary.results.push_back(run_claim(claim.id));
    if (summary.results.back().passed) {
      ++summary.passed;
    } else {
      ++summary.failed;
    }
  }
  return summary;
}

json claim_result_to_json(const ClaimResult& r) {
  const auto& claims = list_claims();
  auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == r.id; });
  json out{{"id", r.id}, {"passed", r.passed}, {"evidence", r.evidence}};
  if (it != claims.end()) {
    out["description"] = it->description;
    out["anchor"] = it->anchor;
  }
  return out;
}

json summary_to_json(const VerifySummary& s) {
  json results = json::array();
  for (const auto& r : s.results) results.push_back(claim_result_to_json(r));
  return json{{"results", results}, {"passed", s.passed}, {"failed", s.failed}, {"total", s.results.size()}};
}

}  // namespace integra
