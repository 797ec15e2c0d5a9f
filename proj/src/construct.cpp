#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "integra/group.hpp"

namespace integra {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::string_view spec, std::string_view why) {
  throw Error("parse error in \"" + std::string(spec) + "\": " + std::string(why));
}

long long parse_int(std::string_view text, std::string_view spec) {
  text = trim(text);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_error(spec, "expected an integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  long long v = parse_int(text, spec);
  if (v <= 0) parse_error(spec, "expected a positive integer");
  if (v > static_cast<long long>(kMaxOrder * kMaxOrder)) parse_error(spec, "integer too large");
  return static_cast<std::size_t>(v);
}

// Splits on `sep` occurring outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    // An 'x' inside a word such as "cext" is not a separator.
    const bool inside_word = sep == 'x' && i > 0 && std::isalpha(static_cast<unsigned char>(s[i - 1]));
    if (depth == 0 && s[i] == sep && !inside_word) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::vector<int> parse_permutation(int degree, std::string_view text, std::string_view spec) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  text = trim(text);
  while (!text.empty()) {
    if (text.front() != '(') parse_error(spec, "expected '(' in cycle notation");
    auto close = text.find(')');
    if (close == std::string_view::npos) parse_error(spec, "unterminated cycle");
    std::string_view body = trim(text.substr(1, close - 1));
    text = trim(text.substr(close + 1));
    if (body.empty()) continue;
    std::vector<int> pts;
    for (auto tok : split_top_level(body, ',')) {
      long long p = parse_int(tok, spec);
      if (p < 1 || p > degree) parse_error(spec, "cycle point out of range 1.." + std::to_string(degree));
      if (std::find(pts.begin(), pts.end(), p - 1) != pts.end()) parse_error(spec, "repeated point in cycle");
      pts.push_back(static_cast<int>(p - 1));
    }
    std::vector<int> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) cyc[pts[i]] = pts[(i + 1) % pts.size()];
    // Left-to-right composition: first perm, then cyc.
    for (auto& v : perm) v = cyc[v];
  }
  return perm;
}

FiniteGroup parse_term(std::string_view term, std::string_view spec) {
  term = trim(term);
  if (term.empty()) parse_error(spec, "empty term");

  if (term.starts_with("dic(")) {
    if (term.back() != ')') parse_error(spec, "dic( ... ) is not closed");
    std::string_view inner = term.substr(4, term.size() - 5);
    auto at_parts = split_top_level(inner, '@');
    if (at_parts.size() > 2) parse_error(spec, "more than one '@' in dic( ... )");
    FiniteGroup base = construct(at_parts[0]);
    Elem y = 0;
    if (at_parts.size() == 2) {
      long long idx = parse_int(at_parts[1], spec);
      if (idx < 0 || static_cast<std::size_t>(idx) >= base.order()) {
        parse_error(spec, "involution index out of range");
      }
      y = static_cast<Elem>(idx);
    } else {
      auto invs = involutions(base);
      if (invs.empty()) throw Error("dic(A): A has no involution");
      if (invs.size() > 1) throw Error("dic(A): A has several involutions; choose one with '@index'");
      y = invs.front();
    }
    return generalized_dicyclic(base, y);
  }

  auto fields = split_top_level(term, ':');
  const std::string_view kind = trim(fields[0]);
  auto want_fields = [&](std::size_t n) {
    if (fields.size() != n) parse_error(spec, "wrong number of ':' fields in \"" + std::string(term) + "\"");
  };

  if (kind == "cyclic") {
    want_fields(2);
    return cyclic_group(parse_size(fields[1], spec));
  }
  if (kind == "dihedral") {
    want_fields(2);
    return dihedral_group(parse_size(fields[1], spec));
  }
  if (kind == "quaternion") {
    want_fields(1);
    return quaternion_group();
  }
  if (kind == "sym") {
    want_fields(2);
    return symmetric_group(static_cast<int>(parse_size(fields[1], spec)));
  }
  if (kind == "alt") {
    want_fields(2);
    return alternating_group(static_cast<int>(parse_size(fields[1], spec)));
  }
  if (kind == "heisenberg") {
    want_fields(2);
    return heisenberg_group(static_cast<int>(parse_size(fields[1], spec)));
  }
  if (kind == "sl") {
    want_fields(3);
    if (parse_int(fields[1], spec) != 2 || parse_int(fields[2], spec) != 3) {
      parse_error(spec, "only sl:2:3 is supported");
    }
    return special_linear_2_3();
  }
  if (kind == "semidirect") {
    want_fields(3);
    return inverting_semidirect(parse_size(fields[1], spec), parse_size(fields[2], spec));
  }
  if (kind == "cext") {
    want_fields(3);
    return central_commutator_extension(parse_size(fields[1], spec), parse_size(fields[2], spec));
  }
  if (kind == "perm") {
    if (fields.size() < 3) parse_error(spec, "perm:n:<cycles> expected");
    const int degree = static_cast<int>(parse_size(fields[1], spec));
    if (degree > 64) parse_error(spec, "permutation degree too large");
    // Cycle text may itself contain no ':'; rejoin defensively.
    std::string_view body = term.substr(term.find(':', term.find(':') + 1) + 1);
    std::vector<std::vector<int>> gens;
    for (auto g : split_top_level(body, ';')) gens.push_back(parse_permutation(degree, g, spec));
    return permutation_group(degree, gens);
  }
  parse_error(spec, "unknown group term \"" + std::string(term) + "\"");
}

}  // namespace

FiniteGroup construct(std::string_view spec) {
  auto terms = split_top_level(spec, 'x');
  FiniteGroup g = parse_term(terms[0], spec);
  for (std::size_t i = 1; i < terms.size(); ++i) g = direct_product(g, parse_term(terms[i], spec));
  return g;
}

Elem parse_word(const FiniteGroup& g, std::string_view word) {
  const std::string_view original = word;
  auto fail = [&](const std::string& why) -> Error {
    return Error("bad word \"" + std::string(original) + "\": " + why);
  };
  Elem acc = g.identity();
  bool any = false;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw fail(std::string("unexpected character '") + c + "'");
    std::size_t j = i + 1;
    while (j < word.size() &&
           (std::isalnum(static_cast<unsigned char>(word[j])) || word[j] == '_' || word[j] == '\'')) {
      ++j;
    }
    const std::string_view name = word.substr(i, j - i);
    Elem base;
    if (auto gen = g.generator(name)) {
      base = *gen;
    } else if (name == "e") {
      base = g.identity();
    } else {
      throw fail("unknown generator '" + std::string(name) + "'");
    }
    long long exponent = 1;
    i = j;
    while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
    if (i < word.size() && word[i] == '^') {
      ++i;
      while (i < word.size() && std::isspace(static_cast<unsigned char>(word[i]))) ++i;
      std::size_t k = i;
      if (k < word.size() && (word[k] == '-' || word[k] == '+')) ++k;
      while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
      std::string_view digits = word.substr(i, k - i);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw fail("malformed exponent");
      }
      i = k;
    }
    acc = g.mul(acc, g.power(base, exponent));
    any = true;
  }
  if (!any) throw fail("empty word");
  return acc;
}

}  // namespace integra
