#include "integra/json_io.hpp"

namespace integra {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error("malformed group-table document: " + why);
}

}  // namespace

json bigint_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json polynomial_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(bigint_json(c));
  return arr;
}

json group_to_json(const FiniteGroup& g) {
  const std::size_t n = g.order();
  json table = json::array();
  for (Elem i = 0; i < n; ++i) {
    auto row = g.row(i);
    table.push_back(json(std::vector<Elem>(row.begin(), row.end())));
  }
  json gens = json::object();
  for (const auto& gen : g.generators()) gens[gen.name] = gen.element;
  return json{{"format", "ftg-1"}, {"order", n},          {"identity", g.identity()},
              {"table", table},    {"names", g.names()}, {"generators", gens}};
}

FiniteGroup group_from_json(const json& doc) {
  if (!doc.is_object()) malformed("top level must be an object");
  if (!doc.contains("format") || doc["format"] != "ftg-1") malformed("\"format\" must be \"ftg-1\"");
  if (!doc.contains("order") || !doc["order"].is_number_integer()) malformed("\"order\" must be an integer");
  const long long order = doc["order"].get<long long>();
  if (order <= 0) malformed("\"order\" must be positive");
  if (order > static_cast<long long>(kMaxOrder)) {
    throw Error("order bound exceeded: " + std::to_string(order) + " > " + std::to_string(kMaxOrder));
  }
  const auto n = static_cast<std::size_t>(order);
  long long identity = 0;
  if (doc.contains("identity")) {
    if (!doc["identity"].is_number_integer()) malformed("\"identity\" must be an integer");
    identity = doc["identity"].get<long long>();
    if (identity < 0 || identity >= order) malformed("\"identity\" out of range");
  }
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n) {
    malformed("\"table\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<Elem> table;
  table.reserve(n * n);
  for (const auto& row : doc["table"]) {
    if (!row.is_array() || row.size() != n) malformed("every table row must have " + std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_integer()) malformed("table entries must be integers");
      const long long x = v.get<long long>();
      if (x < 0 || x >= order) malformed("table entry out of range");
      table.push_back(static_cast<Elem>(x));
    }
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    if (!doc["names"].is_array() || doc["names"].size() != n) malformed("\"names\" must have one entry per element");
    for (const auto& s : doc["names"]) {
      if (!s.is_string()) malformed("names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  std::vector<NamedGenerator> gens;
  if (doc.contains("generators")) {
    if (!doc["generators"].is_object()) malformed("\"generators\" must be an object");
    for (const auto& [name, idx] : doc["generators"].items()) {
      if (!idx.is_number_integer()) malformed("generator indices must be integers");
      const long long x = idx.get<long long>();
      if (x < 0 || x >= order) malformed("generator index out of range");
      gens.push_back({name, static_cast<Elem>(x)});
    }
  }
  return FiniteGroup::from_cayley_table(std::move(table), n, static_cast<Elem>(identity), std::move(names),
                                        std::move(gens), true);
}

FiniteGroup group_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return group_from_json(doc);
}

json profile_to_json(const GroupProfile& p) {
  json orders = json::array();
  for (const auto& [ord, count] : p.order_multiset) orders.push_back({ord, count});
  return json{{"order", p.order},
              {"order_multiset", orders},
              {"exponent", p.exponent},
              {"abelian", p.abelian},
              {"nilpotent", p.nilpotent},
              {"center_size", p.center_size},
              {"involution_count", p.involution_count},
              {"involutions_central", p.involutions_central},
              {"in_class_G", p.in_class_G}};
}

json spectrum_to_json(const SpectrumReport& r) {
  json eig = json::array();
  for (const auto& e : r.eigenvalues) eig.push_back({e.value, e.multiplicity});
  return json{{"n", r.n},
              {"degree", r.degree},
              {"integral", r.integral},
              {"eigenvalues", eig},
              {"residual", polynomial_json(r.residual)},
              {"components", r.components},
              {"subgroup_order", r.subgroup_order},
              {"index", r.index}};
}

json membership_to_json(const MembershipReport& r) {
  json out{{"group", r.group_id},
           {"class", r.cls == GroupClass::A ? "A" : "G"},
           {"k", r.k},
           {"member", r.member},
           {"vacuous", r.vacuous},
           {"sets_checked", r.sets_checked},
           {"witness", nullptr},
           {"witness_words", nullptr}};
  if (r.witness) {
    out["witness"] = r.witness->members;
    out["witness_words"] = r.witness_words;
  }
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace integra
