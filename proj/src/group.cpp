#include "integra/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace integra {

namespace {

std::string word_name(const std::vector<std::pair<int, int>>& runs,
                      const std::vector<std::pair<std::string, Rep>>& generators) {
  if (runs.empty()) return "e";
  std::string out;
  for (const auto& [gen, exp] : runs) {
    if (!out.empty()) out += '*';
    out += generators[gen].first;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

// Generator letters for derived groups; 'e' is reserved for the identity.
constexpr std::string_view kLetters = "abcdfghijklmnopqrstuvwxyz";

std::string fresh_name(const std::vector<std::string>& taken, std::string_view preferred) {
  auto is_taken = [&](std::string_view s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!preferred.empty() && !is_taken(preferred)) return std::string(preferred);
  for (char c : kLetters) {
    std::string s(1, c);
    if (!is_taken(s)) return s;
  }
  for (int i = 1;; ++i) {
    std::string s = "g" + std::to_string(i);
    if (!is_taken(s)) return s;
  }
}

std::vector<bool> closure_mask(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem cur = queue[head];
    for (Elem s : gens) {
      Elem nxt = g.mul(cur, s);
      if (!seen[nxt]) {
        seen[nxt] = true;
        queue.push_back(nxt);
      }
    }
  }
  return seen;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(std::vector<Elem> table, std::size_t order, Elem identity,
                                           std::vector<std::string> names,
                                           std::vector<NamedGenerator> generators,
                                           bool check_associativity) {
  if (order == 0) throw Error("group order must be positive");
  if (order > kMaxOrder) {
    throw Error("order bound exceeded: " + std::to_string(order) + " > " + std::to_string(kMaxOrder));
  }
  if (table.size() != order * order) throw Error("table must have order x order entries");
  if (identity >= order) throw Error("identity index out of range");
  for (Elem v : table) {
    if (v >= order) throw Error("table entry out of range");
  }

  std::vector<char> seen(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      if (seen[table[i * order + j]]++) throw Error("not a Latin square (row " + std::to_string(i) + ")");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      if (seen[table[j * order + i]]++) throw Error("not a Latin square (column " + std::to_string(i) + ")");
    }
  }
  for (std::size_t j = 0; j < order; ++j) {
    if (table[identity * order + j] != j || table[j * order + identity] != j) {
      throw Error("no identity: element " + std::to_string(identity) + " is not neutral");
    }
  }

  FiniteGroup g;
  g.order_ = order;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inv_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    auto r = g.row(static_cast<Elem>(i));
    auto it = std::find(r.begin(), r.end(), identity);
    Elem j = static_cast<Elem>(it - r.begin());
    if (g.mul(j, static_cast<Elem>(i)) != identity) {
      throw Error("not associative (left and right inverses differ)");
    }
    g.inv_[i] = j;
  }
  if (check_associativity && !g.is_associative()) throw Error("not associative");

  if (names.empty()) {
    names.reserve(order);
    for (std::size_t i = 0; i < order; ++i) names.push_back("g" + std::to_string(i));
  }
  if (names.size() != order) throw Error("names must have one entry per element");
  for (const auto& gen : generators) {
    if (gen.element >= order) throw Error("generator '" + gen.name + "' out of range");
  }
  g.names_ = std::move(names);
  g.generators_ = std::move(generators);

  g.elt_order_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    Elem x = static_cast<Elem>(i);
    int k = 1;
    while (x != identity) {
      x = g.mul(x, static_cast<Elem>(i));
      ++k;
    }
    g.elt_order_[i] = k;
  }
  return g;
}

Elem FiniteGroup::power(Elem g, long long exponent) const {
  long long ord = elt_order_[g];
  long long e = ((exponent % ord) + ord) % ord;
  Elem acc = identity_;
  for (long long i = 0; i < e; ++i) acc = mul(acc, g);
  return acc;
}

std::optional<Elem> FiniteGroup::generator(std::string_view name) const {
  for (const auto& gen : generators_) {
    if (gen.name == name) return gen.element;
  }
  return std::nullopt;
}

std::optional<Elem> FiniteGroup::find_by_name(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (Elem i = 0; i < order_; ++i) {
    for (Elem j = i + 1; j < order_; ++j) {
      if (!commute(i, j)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_associative() const {
  for (Elem i = 0; i < order_; ++i) {
    for (Elem j = 0; j < order_; ++j) {
      const Elem ij = mul(i, j);
      for (Elem k = 0; k < order_; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) return false;
      }
    }
  }
  return true;
}

FiniteGroup generate_group(const Realization& model,
                           const std::vector<std::pair<std::string, Rep>>& generators) {
  std::map<Rep, Elem> index;
  std::vector<Rep> elems{model.identity};
  std::vector<std::vector<std::pair<int, int>>> words{{}};
  index.emplace(model.identity, 0);

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Rep prod = model.multiply(elems[head], generators[s].second);
      if (index.count(prod)) continue;
      if (elems.size() == kMaxOrder) {
        throw Error("order bound exceeded: group has more than " + std::to_string(kMaxOrder) +
                    " elements");
      }
      auto word = words[head];
      if (!word.empty() && word.back().first == static_cast<int>(s)) {
        ++word.back().second;
      } else {
        word.emplace_back(static_cast<int>(s), 1);
      }
      index.emplace(prod, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(prod));
      words.push_back(std::move(word));
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(model.multiply(elems[i], elems[j]));
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(model.display ? model.display(elems[i]) : word_name(words[i], generators));
  }
  std::vector<NamedGenerator> gens;
  for (const auto& [name, rep] : generators) gens.push_back({name, index.at(rep)});
  return FiniteGroup::from_cayley_table(std::move(table), n, 0, std::move(names), std::move(gens),
                                        false);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic group order must be positive");
  if (n > kMaxOrder) throw Error("order bound exceeded: " + std::to_string(n));
  const int m = static_cast<int>(n);
  Realization model{{0}, [m](const Rep& x, const Rep& y) { return Rep{(x[0] + y[0]) % m}; }, {}};
  return generate_group(model, {{"a", {1 % m}}});
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw Error("dihedral:n needs an even order n >= 2");
  if (n > kMaxOrder) throw Error("order bound exceeded: " + std::to_string(n));
  const int m = static_cast<int>(n / 2);
  // (i, t) stands for a^i b^t.
  Realization model{{0, 0},
                    [m](const Rep& x, const Rep& y) {
                      int rot = x[1] ? x[0] - y[0] : x[0] + y[0];
                      return Rep{((rot % m) + m) % m, x[1] ^ y[1]};
                    },
                    {}};
  return generate_group(model, {{"a", {1 % m, 0}}, {"b", {0, 1}}});
}

FiniteGroup quaternion_group() {
  // Hamilton product on unit quaternions (w, x, y, z).
  Realization model{{1, 0, 0, 0},
                    [](const Rep& p, const Rep& q) {
                      return Rep{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                                 p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                                 p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                                 p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
                    },
                    {}};
  return generate_group(model, {{"i", {0, 1, 0, 0}}, {"j", {0, 0, 1, 0}}});
}

namespace {

std::string cycle_notation(const Rep& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(perm[p]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Rep cycle_perm(int degree, std::initializer_list<int> cycle) {
  Rep p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> pts(cycle);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i] - 1] = pts[(i + 1) % pts.size()] - 1;
  return p;
}

Rep range_cycle(int degree, int from, int to) {
  Rep p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (int i = from; i < to; ++i) p[i - 1] = i;
  p[to - 1] = from - 1;
  return p;
}

}  // namespace

FiniteGroup permutation_group(int degree, const std::vector<std::vector<int>>& generators) {
  if (degree < 1) throw Error("permutation degree must be positive");
  Rep identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::pair<std::string, Rep>> gens;
  std::vector<std::string> taken;
  for (const auto& perm : generators) {
    if (static_cast<int>(perm.size()) != degree) throw Error("permutation has the wrong degree");
    Rep check = perm;
    std::sort(check.begin(), check.end());
    if (check != identity) throw Error("generator is not a permutation");
    std::string name = fresh_name(taken, "");
    taken.push_back(name);
    gens.emplace_back(name, perm);
  }
  Realization model{identity,
                    [](const Rep& p, const Rep& q) {
                      Rep r(p.size());
                      for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
                      return r;
                    },
                    cycle_notation};
  return generate_group(model, gens);
}

FiniteGroup symmetric_group(int degree) {
  if (degree < 1) throw Error("sym:n needs n >= 1");
  if (degree > 5) throw Error("order bound exceeded: sym:" + std::to_string(degree));
  if (degree == 1) return permutation_group(1, {});
  return permutation_group(degree, {range_cycle(degree, 1, degree), cycle_perm(degree, {1, 2})});
}

FiniteGroup alternating_group(int degree) {
  if (degree < 1) throw Error("alt:n needs n >= 1");
  if (degree > 6) throw Error("order bound exceeded: alt:" + std::to_string(degree));
  if (degree < 3) return permutation_group(degree, {});
  if (degree == 3) return permutation_group(3, {cycle_perm(3, {1, 2, 3})});
  Rep second = degree % 2 == 1 ? range_cycle(degree, 1, degree) : range_cycle(degree, 2, degree);
  return permutation_group(degree, {cycle_perm(degree, {1, 2, 3}), second});
}

FiniteGroup heisenberg_group(int p) {
  bool prime = p >= 3;
  for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
  if (!prime) throw Error("heisenberg:p needs an odd prime p");
  if (static_cast<std::size_t>(p) * p * p > kMaxOrder) {
    throw Error("order bound exceeded: heisenberg:" + std::to_string(p));
  }
  // (x, y, z) stands for [[1, x, z], [0, 1, y], [0, 0, 1]].
  Realization model{{0, 0, 0},
                    [p](const Rep& u, const Rep& v) {
                      return Rep{(u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p};
                    },
                    {}};
  return generate_group(model, {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}});
}

FiniteGroup special_linear_2_3() {
  Realization model{{1, 0, 0, 1},
                    [](const Rep& x, const Rep& y) {
                      return Rep{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                                 (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
                    },
                    {}};
  return generate_group(model, {{"a", {1, 1, 0, 1}}, {"b", {1, 0, 1, 1}}});
}

FiniteGroup inverting_semidirect(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || n % 2 != 0) throw Error("semidirect:m:n needs m >= 1 and even n");
  if (m * n > kMaxOrder) throw Error("order bound exceeded: " + std::to_string(m * n));
  const int mm = static_cast<int>(m);
  const int nn = static_cast<int>(n);
  // (i, j) stands for a^i b^j.
  Realization model{{0, 0},
                    [mm, nn](const Rep& x, const Rep& y) {
                      int rot = x[1] % 2 ? x[0] - y[0] : x[0] + y[0];
                      return Rep{((rot % mm) + mm) % mm, (x[1] + y[1]) % nn};
                    },
                    {}};
  return generate_group(model, {{"a", {1 % mm, 0}}, {"b", {0, 1 % nn}}});
}

FiniteGroup central_commutator_extension(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || m % 2 != 0 || n % 2 != 0) throw Error("cext:m:n needs even m and n");
  if (2 * m * n > kMaxOrder) throw Error("order bound exceeded: " + std::to_string(2 * m * n));
  const int mm = static_cast<int>(m);
  const int nn = static_cast<int>(n);
  // (i, j, k) stands for a^i b^j c^k; moving b^j past a^i' leaves c^(-j i').
  Realization model{{0, 0, 0},
                    [mm, nn](const Rep& x, const Rep& y) {
                      int k = x[2] + y[2] - x[1] * y[0];
                      return Rep{(x[0] + y[0]) % mm, (x[1] + y[1]) % nn, ((k % 2) + 2) % 2};
                    },
                    {}};
  return generate_group(model, {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng * nh > kMaxOrder) {
    throw Error("order bound exceeded: " + std::to_string(ng) + " * " + std::to_string(nh));
  }
  const std::size_t n = ng * nh;
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      for (std::size_t k = 0; k < ng; ++k) {
        for (std::size_t l = 0; l < nh; ++l) {
          table[(i * nh + j) * n + (k * nh + l)] = static_cast<Elem>(
              g.mul(static_cast<Elem>(i), static_cast<Elem>(k)) * nh +
              h.mul(static_cast<Elem>(j), static_cast<Elem>(l)));
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t j = 0; j < nh; ++j) names.push_back(g.name(i) + "," + h.name(j));
  }
  std::vector<NamedGenerator> gens;
  std::vector<std::string> taken;
  for (const auto& gen : g.generators()) {
    gens.push_back({gen.name, static_cast<Elem>(gen.element * nh + h.identity())});
    taken.push_back(gen.name);
  }
  for (const auto& gen : h.generators()) {
    std::string name = fresh_name(taken, gen.name);
    taken.push_back(name);
    gens.push_back({name, static_cast<Elem>(g.identity() * nh + gen.element)});
  }
  return FiniteGroup::from_cayley_table(std::move(table), n, static_cast<Elem>(g.identity() * nh + h.identity()),
                                        std::move(names), std::move(gens), false);
}

FiniteGroup generalized_dicyclic(const FiniteGroup& a, Elem y) {
  if (!a.is_abelian()) throw Error("Dic(A, y) needs an abelian group A");
  if (y >= a.order() || a.element_order(y) != 2) throw Error("Dic(A, y): y is not an involution of A");
  if (2 * a.order() > kMaxOrder) throw Error("order bound exceeded: " + std::to_string(2 * a.order()));
  // (t, g) stands for x^t g; g x = x g^-1 and x^2 = y.
  Realization model{{0, static_cast<int>(a.identity())},
                    [&a, y](const Rep& u, const Rep& v) {
                      Elem left = static_cast<Elem>(u[1]);
                      if (v[0] == 1) left = a.inv(left);
                      Elem prod = a.mul(left, static_cast<Elem>(v[1]));
                      int t = u[0] + v[0];
                      if (t == 2) {
                        prod = a.mul(y, prod);
                        t = 0;
                      }
                      return Rep{t, static_cast<int>(prod)};
                    },
                    {}};
  std::vector<std::pair<std::string, Rep>> gens;
  std::vector<std::string> taken;
  for (const auto& gen : a.generators()) {
    gens.emplace_back(gen.name, Rep{0, static_cast<int>(gen.element)});
    taken.push_back(gen.name);
  }
  if (a.generators().empty()) {
    // Without bound generators fall back to every element of A.
    for (Elem g = 0; g < a.order(); ++g) {
      std::string name = fresh_name(taken, "");
      taken.push_back(name);
      gens.emplace_back(name, Rep{0, static_cast<int>(g)});
    }
  }
  gens.emplace_back(fresh_name(taken, "x"), Rep{1, static_cast<int>(a.identity())});
  return generate_group(model, gens);
}

Subgroup closure(const FiniteGroup& g, std::span<const Elem> generators) {
  for (Elem s : generators) {
    if (s >= g.order()) throw Error("element index out of range");
  }
  std::vector<Elem> embed{g.identity()};
  std::vector<Elem> local(g.order(), static_cast<Elem>(-1));
  local[g.identity()] = 0;
  for (std::size_t head = 0; head < embed.size(); ++head) {
    for (Elem s : generators) {
      Elem nxt = g.mul(embed[head], s);
      if (local[nxt] == static_cast<Elem>(-1)) {
        local[nxt] = static_cast<Elem>(embed.size());
        embed.push_back(nxt);
      }
    }
  }
  const std::size_t n = embed.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(embed[i], embed[j])];
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (Elem e : embed) names.push_back(g.name(e));
  std::vector<NamedGenerator> gens;
  std::vector<std::string> taken;
  for (Elem s : generators) {
    std::string name = fresh_name(taken, "");
    taken.push_back(name);
    gens.push_back({name, local[s]});
  }
  std::vector<Elem> members = embed;
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members),
                  FiniteGroup::from_cayley_table(std::move(table), n, 0, std::move(names), std::move(gens), false),
                  std::move(embed)};
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem h = 0; h < g.order() && central; ++h) central = g.commute(z, h);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Elem> involutions(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2) out.push_back(x);
  }
  return out;
}

bool is_nilpotent(const FiniteGroup& g) {
  // Lower central series: gamma_{i+1} = [G, gamma_i].
  std::vector<bool> current(g.order(), true);
  std::size_t current_size = g.order();
  while (current_size > 1) {
    std::vector<bool> is_gen(g.order(), false);
    std::vector<Elem> gens;
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem h = 0; h < g.order(); ++h) {
        if (!current[h]) continue;
        Elem c = g.mul(g.mul(g.inv(x), g.inv(h)), g.mul(x, h));
        if (!is_gen[c]) {
          is_gen[c] = true;
          gens.push_back(c);
        }
      }
    }
    auto next = closure_mask(g, gens);
    std::size_t next_size = static_cast<std::size_t>(std::count(next.begin(), next.end(), true));
    if (next_size == current_size) return false;
    current = std::move(next);
    current_size = next_size;
  }
  return true;
}

GroupProfile profile(const FiniteGroup& g) {
  GroupProfile p;
  p.order = g.order();
  for (Elem x = 0; x < g.order(); ++x) {
    const int o = g.element_order(x);
    ++p.order_multiset[o];
    p.exponent = std::lcm(p.exponent, static_cast<long long>(o));
  }
  p.abelian = g.is_abelian();
  p.nilpotent = p.abelian || is_nilpotent(g);
  const auto z = center(g);
  p.center_size = z.size();
  const auto invs = involutions(g);
  p.involution_count = invs.size();
  p.involutions_central = std::all_of(invs.begin(), invs.end(), [&](Elem x) {
    return std::binary_search(z.begin(), z.end(), x);
  });
  p.in_class_G = std::all_of(p.order_multiset.begin(), p.order_multiset.end(), [](const auto& kv) {
    return kv.first == 1 || kv.first == 2 || kv.first == 3 || kv.first == 4 || kv.first == 6;
  });
  return p;
}

}  // namespace integra
