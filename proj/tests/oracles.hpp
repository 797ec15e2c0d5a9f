#pragma once

// Independent reference implementations used by the unit and acceptance tests.
// None of them call the library routine they are compared against.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "integra/classify.hpp"
#include "integra/group.hpp"
#include "integra/spectra.hpp"
#include "integra/symsets.hpp"
#include "integra/verify.hpp"

namespace oracle {

using integra::Elem;
using integra::FiniteGroup;

// Every inverse-closed, identity-free subset of size k (or 1..k), by bitmask.
inline std::set<std::vector<Elem>> brute_symmetric_sets(const FiniteGroup& g, std::size_t k, bool at_most) {
  std::vector<Elem> others;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != g.identity()) others.push_back(x);
  }
  std::set<std::vector<Elem>> out;
  const std::uint64_t limit = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > k || (!at_most && size != k)) continue;
    std::vector<Elem> s;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1) s.push_back(others[i]);
    }
    bool closed = true;
    for (Elem x : s) {
      Elem xi = 0;
      while (g.mul(x, xi) != g.identity()) ++xi;
      if (!std::binary_search(s.begin(), s.end(), xi)) closed = false;
    }
    if (closed) out.insert(s);
  }
  return out;
}

// Polynomials as ascending int64 coefficient vectors.
using SmallPoly = std::vector<long long>;

inline SmallPoly small_mul(const SmallPoly& a, const SmallPoly& b) {
  SmallPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// det(xI - A) by the Leibniz permutation expansion; n <= 9.
inline SmallPoly leibniz_char_poly(const integra::AdjMatrix& a) {
  const std::size_t n = a.n();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  SmallPoly total(n + 1, 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    SmallPoly term{inversions % 2 ? -1 : 1};
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      SmallPoly entry{a.at(i, perm[i]) ? -1 : 0};
      if (perm[i] == i) entry.push_back(1);
      if (entry.size() == 1 && entry[0] == 0) zero = true;
      term = small_mul(term, entry);
    }
    if (zero) continue;
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Some bijection G -> H respects the tables: generator images are tried
// exhaustively and extended along right multiplication.
inline bool isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  std::vector<Elem> gens;
  for (const auto& ng : g.generators()) gens.push_back(ng.element);
  if (gens.empty()) return g.order() == 1;
  std::vector<Elem> images(gens.size());
  const std::size_t n = g.order();
  auto extend = [&]() {
    std::vector<Elem> phi(n, static_cast<Elem>(n));
    std::vector<bool> used(n, false);
    phi[g.identity()] = h.identity();
    used[h.identity()] = true;
    std::vector<Elem> queue{g.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem fy = h.mul(phi[x], images[i]);
        if (phi[y] == n) {
          if (used[fy]) return false;
          phi[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    if (queue.size() != n) return false;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == gens.size()) return extend();
    for (Elem c = 0; c < n; ++c) {
      if (h.element_order(c) != g.element_order(gens[slot])) continue;
      images[slot] = c;
      if (self(self, slot + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

// Eigenvalues of Cay(Z_n1 x ... x Z_nr, S) as character sums. `digits[x]` holds
// the coordinates of element x.
inline std::vector<double> character_sums(const std::vector<std::size_t>& moduli,
                                          const std::vector<std::vector<std::size_t>>& digits,
                                          const std::vector<Elem>& s) {
  std::size_t total = 1;
  for (auto m : moduli) total *= m;
  std::vector<double> out;
  std::vector<std::size_t> t(moduli.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = moduli.size(); i-- > 0;) {
      t[i] = rest % moduli[i];
      rest /= moduli[i];
    }
    double sum = 0;
    for (Elem x : s) {
      double phase = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        phase += static_cast<double>(t[i] * digits[x][i]) / static_cast<double>(moduli[i]);
      }
      sum += std::cos(2 * std::numbers::pi * phase);
    }
    out.push_back(sum);
  }
  return out;
}

// Coordinates of each element of construct("cyclic:n1 x ... x cyclic:nr"),
// derived from powers of each factor's generator.
inline std::vector<std::vector<std::size_t>> cyclic_product_digits(const std::vector<std::size_t>& moduli) {
  std::vector<std::vector<std::size_t>> digits{{}};
  for (std::size_t m : moduli) {
    const FiniteGroup c = integra::cyclic_group(m);
    const Elem a = *c.generator("a");
    std::vector<std::size_t> exponent_of(m);
    for (std::size_t e = 0; e < m; ++e) exponent_of[c.power(a, static_cast<long long>(e))] = e;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : digits) {
      for (std::size_t j = 0; j < m; ++j) {
        auto d = prefix;
        d.push_back(exponent_of[j]);
        next.push_back(d);
      }
    }
    digits = std::move(next);
  }
  return digits;
}

// --- Property suites ---------------------------------------------------------

struct PropertyOutcome {
  bool passed = true;
  std::size_t instances = 0;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct RandomInstances {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  std::mt19937 rng;

  explicit RandomInstances(std::uint32_t seed, std::size_t max_order = 36) : rng(seed) {
    for (const auto& entry : integra::extended_catalog()) {
      FiniteGroup g = integra::construct(entry.spec);
      if (g.order() > 1 && g.order() <= max_order) groups.emplace_back(entry.id, std::move(g));
    }
  }

  // A random symmetric set made of at most `max_classes` inverse classes.
  std::pair<const FiniteGroup*, integra::SymmetricSet> next(std::size_t max_classes) {
    const auto& [id, g] = groups[rng() % groups.size()];
    const auto part = integra::inverse_partition(g);
    std::vector<std::vector<Elem>> classes;
    for (Elem x : part.involutions) classes.push_back({x});
    for (auto [a, b] : part.pairs) classes.push_back({a, b});
    std::shuffle(classes.begin(), classes.end(), rng);
    const std::size_t take = 1 + rng() % std::min(max_classes, classes.size());
    std::vector<Elem> members;
    for (std::size_t i = 0; i < take; ++i) members.insert(members.end(), classes[i].begin(), classes[i].end());
    return {&g, integra::make_symmetric_set(g, members)};
  }
};

// Sum of eigenvalues is 0 and the sum of squares is k*n, read off the report
// (integer part plus the residual's first two coefficients).
inline bool trace_identities_hold(const integra::SpectrumReport& r) {
  const auto& res = r.residual;
  const long d = res.degree();
  mpz_class p1 = 0;
  mpz_class p2 = 0;
  for (const auto& e : r.eigenvalues) {
    const mpz_class v(static_cast<long>(e.value));
    p1 += v * static_cast<unsigned long>(e.multiplicity);
    p2 += v * v * static_cast<unsigned long>(e.multiplicity);
  }
  if (d >= 1) {
    const mpz_class e1 = -res.coeff(static_cast<std::size_t>(d - 1));
    const mpz_class e2 = d >= 2 ? res.coeff(static_cast<std::size_t>(d - 2)) : mpz_class(0);
    p1 += e1;
    p2 += e1 * e1 - 2 * e2;
  }
  return p1 == 0 && p2 == mpz_class(static_cast<unsigned long>(r.degree)) * static_cast<unsigned long>(r.n);
}

inline bool charpoly_trace_coefficients(const integra::IntPolynomial& cp, std::size_t n, int k) {
  if (n < 2) return true;
  return cp.coeff(n - 1) == 0 && cp.coeff(n - 2) * 2 == -mpz_class(static_cast<long>(k * static_cast<int>(n)));
}

inline std::string describe(const std::string& id, const integra::SymmetricSet& s) {
  std::ostringstream o;
  o << id << " {";
  for (std::size_t i = 0; i < s.members.size(); ++i) o << (i ? "," : "") << s.members[i];
  o << "}";
  return o.str();
}

// (a) rank route and char-poly route agree; (c) checked on both reports.
inline PropertyOutcome dual_oracle_property(std::size_t count, std::uint32_t seed) {
  PropertyOutcome out;
  RandomInstances inst(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto [g, s] = inst.next(6);
    const auto a = integra::cayley_adjacency(*g, s);
    const auto by_rank = integra::integral_spectrum(a);
    const auto by_poly = integra::spectrum_by_charpoly(a);
    ++out.instances;
    const std::string where = describe(std::to_string(g->order()), s);
    if (by_rank.integral != by_poly.integral) out.fail("verdicts differ on " + where);
    if (by_rank.eigenvalues != by_poly.eigenvalues) out.fail("eigenvalues differ on " + where);
    if (!(by_rank.residual == by_poly.residual)) out.fail("residuals differ on " + where);
    if (integra::integral_by_rank(a) != by_rank.integral) out.fail("early-exit rank verdict differs on " + where);
    if (integra::cayley_integral_verdict(*g, s) != by_rank.integral) out.fail("subgroup verdict differs on " + where);
    if (!trace_identities_hold(by_rank) || !trace_identities_hold(by_poly)) out.fail("trace identity fails on " + where);
  }
  return out;
}

// (b) char(Cay(G,S)) = char(Cay(<S>,S))^[G:<S>].
inline PropertyOutcome power_rule_property(std::size_t count, std::uint32_t seed) {
  PropertyOutcome out;
  RandomInstances inst(seed, 24);
  for (std::size_t i = 0; i < count; ++i) {
    auto [g, s] = inst.next(2);
    const auto full = integra::char_poly(integra::cayley_adjacency(*g, s));
    const integra::Subgroup h = integra::closure(*g, s.members);
    std::map<Elem, Elem> local_of;
    for (Elem j = 0; j < h.embed.size(); ++j) local_of[h.embed[j]] = j;
    std::vector<Elem> local;
    for (Elem x : s.members) local.push_back(local_of.at(x));
    const auto sub = integra::char_poly(integra::cayley_adjacency(h.group, integra::make_symmetric_set(h.group, local)));
    ++out.instances;
    if (!(sub.pow(h.index_in(*g)) == full)) out.fail("power rule fails on " + describe(std::to_string(g->order()), s));
    if (!charpoly_trace_coefficients(full, g->order(), static_cast<int>(s.size()))) {
      out.fail("char poly trace coefficients wrong on " + describe(std::to_string(g->order()), s));
    }
  }
  return out;
}

// (d) abelian groups: exact verdict against floating-point character sums.
inline PropertyOutcome character_sum_property(std::size_t count, std::uint32_t seed) {
  const std::vector<std::vector<std::size_t>> shapes{{3},    {4},    {5},    {6},       {7},          {8},
                                                     {9},    {10},   {12},   {2, 2},    {2, 4},       {2, 6},
                                                     {3, 3}, {4, 4}, {3, 6}, {2, 2, 2}, {2, 2, 3},    {2, 2, 2, 2},
                                                     {5, 5}, {2, 10}};
  PropertyOutcome out;
  std::mt19937 rng(seed);
  std::vector<std::pair<FiniteGroup, std::vector<std::vector<std::size_t>>>> groups;
  for (const auto& shape : shapes) {
    std::string spec;
    for (auto m : shape) spec += (spec.empty() ? "" : " x ") + std::string("cyclic:") + std::to_string(m);
    groups.emplace_back(integra::construct(spec), cyclic_product_digits(shape));
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t which = rng() % shapes.size();
    const auto& [g, digits] = groups[which];
    const auto part = integra::inverse_partition(g);
    std::vector<std::vector<Elem>> classes;
    for (Elem x : part.involutions) classes.push_back({x});
    for (auto [a, b] : part.pairs) classes.push_back({a, b});
    std::vector<Elem> members;
    for (const auto& c : classes) {
      if (rng() % 3 == 0) members.insert(members.end(), c.begin(), c.end());
    }
    if (members.empty()) members = classes[rng() % classes.size()];
    const auto s = integra::make_symmetric_set(g, members);
    const auto report = integra::integral_spectrum(integra::cayley_adjacency(g, s));
    const auto sums = character_sums(shapes[which], digits, s.members);
    ++out.instances;
    double worst = 0;
    std::map<long long, std::size_t> rounded;
    for (double v : sums) {
      worst = std::max(worst, std::abs(v - std::round(v)));
      ++rounded[std::llround(v)];
    }
    const std::string where = describe(std::to_string(g.order()), s);
    if (report.integral) {
      if (worst > 1e-9) out.fail("integral report but a character sum is off an integer on " + where);
      std::map<long long, std::size_t> exact;
      for (const auto& e : report.eigenvalues) exact[e.value] = e.multiplicity;
      if (rounded != exact) out.fail("eigenvalue multiset differs from character sums on " + where);
    } else if (worst <= 1e-6) {
      out.fail("non-integral report but every character sum is near an integer on " + where);
    }
  }
  return out;
}

// (e) enumerator output equals the closed-form count, sets are valid and in
// strictly increasing enumeration order.
inline PropertyOutcome enumeration_count_property(std::size_t max_k) {
  PropertyOutcome out;
  for (const auto& entry : integra::extended_catalog()) {
    const FiniteGroup g = integra::construct(entry.spec);
    for (std::size_t k = 1; k <= max_k; ++k) {
      integra::SymmetricSetEnumerator it(g, k, integra::SizeMode::exact);
      integra::SymmetricSet s;
      std::optional<integra::SymmetricSet> prev;
      std::size_t n = 0;
      while (it.next(s)) {
        ++n;
        if (s.size() != k || !integra::is_symmetric_set(g, s.members) ||
            !std::is_sorted(s.members.begin(), s.members.end())) {
          out.fail("invalid set from " + entry.id);
        }
        if (prev && !integra::precedes_in_enumeration(g, *prev, s)) out.fail("order violated in " + entry.id);
        prev = s;
      }
      ++out.instances;
      if (integra::count_symmetric_sets(g, k, integra::SizeMode::exact) != static_cast<unsigned long>(n)) {
        out.fail("count mismatch for " + entry.id + " k=" + std::to_string(k));
      }
    }
  }
  return out;
}

}  // namespace oracle
