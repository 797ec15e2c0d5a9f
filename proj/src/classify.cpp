#include "integra/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <thread>

#include "integra/spectra.hpp"

namespace integra {

namespace {

enum class Outcome : unsigned char { skipped, integral, failed };

struct ScanResult {
  bool any_sets = false;
  std::optional<SymmetricSet> witness;
  std::size_t checked = 0;
};

ScanResult scan(const FiniteGroup& g, std::size_t k, SizeMode mode, const ScanOptions& options) {
  const unsigned threads = options.threads > 0 ? options.threads : default_thread_count();
  const std::size_t block = 32 * static_cast<std::size_t>(threads);

  ScanResult result;
  SymmetricSetEnumerator it(g, k, mode);
  std::vector<SymmetricSet> batch;
  std::vector<Outcome> outcome;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    SymmetricSet s;
    while (batch.size() < block) {
      if (!it.next(s)) {
        exhausted = true;
        break;
      }
      batch.push_back(s);
    }
    if (batch.empty()) break;
    result.any_sets = true;
    outcome.assign(batch.size(), Outcome::skipped);

    auto work = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t i = begin; i < batch.size(); i += stride) {
        if (options.dedup_conjugates && !is_conjugacy_canonical(g, batch[i])) continue;
        outcome[i] = cayley_integral_verdict(g, batch[i]) ? Outcome::integral : Outcome::failed;
      }
    };
    if (threads <= 1 || batch.size() == 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    // Fold in enumeration order so the witness is the earliest failure.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (outcome[i] == Outcome::skipped) continue;
      ++result.checked;
      if (outcome[i] == Outcome::failed) {
        result.witness = batch[i];
        return result;
      }
    }
  }
  return result;
}

MembershipReport make_report(const FiniteGroup& g, int k, GroupClass cls, std::string id, ScanResult r) {
  MembershipReport rep;
  rep.group_id = std::move(id);
  rep.k = k;
  rep.cls = cls;
  rep.vacuous = !r.any_sets;
  rep.member = !r.witness.has_value();
  rep.sets_checked = r.checked;
  if (r.witness) {
    for (Elem x : r.witness->members) rep.witness_words.push_back(g.name(x));
    rep.witness = std::move(r.witness);
  }
  return rep;
}

bool is_power_of(std::size_t n, std::size_t p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("INTEGRA_THREADS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && ptr == env + std::strlen(env) && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

MembershipReport in_A_k(const FiniteGroup& g, int k, std::string group_id, ScanOptions options) {
  if (k < 1) throw Error("k must be at least 1");
  return make_report(g, k, GroupClass::A, std::move(group_id),
                     scan(g, static_cast<std::size_t>(k), SizeMode::exact, options));
}

MembershipReport in_G_k(const FiniteGroup& g, int k, std::string group_id, ScanOptions options) {
  if (k < 1) throw Error("k must be at least 1");
  return make_report(g, k, GroupClass::G, std::move(group_id),
                     scan(g, static_cast<std::size_t>(k), SizeMode::at_most, options));
}

bool a2_structural(const FiniteGroup& g) {
  return profile(g).in_class_G && !has_subgroup_isomorphic(g, "D8") && !has_subgroup_isomorphic(g, "D12");
}

bool a3_structural(const FiniteGroup& g) {
  if (recognize_named(g, "S3")) return true;
  static constexpr const char* kAllowed[] = {"Z2", "Z2xZ2", "Z4", "Z6", "Z2xZ4", "Z2xZ6", "A4"};
  std::map<std::vector<Elem>, bool> seen;
  for (Elem x : involutions(g)) {
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem pair[] = {x, y};
      Subgroup h = closure(g, pair);
      auto [it, fresh] = seen.try_emplace(h.members, false);
      if (fresh) {
        it->second = std::any_of(std::begin(kAllowed), std::end(kAllowed),
                                 [&](const char* name) { return recognize_named(h.group, name); });
      }
      if (!it->second) return false;
    }
  }
  return true;
}

bool g3_structural(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  if (is_power_of(g.order(), 3) && profile(g).exponent == 3) return true;
  // Odd-order groups have no cubic connection sets, so they never enter A_3.
  return g.order() % 2 == 0 && a3_structural(g);
}

std::optional<int> nilpotent_g3_case(const FiniteGroup& g) {
  const GroupProfile p = profile(g);
  if (!p.nilpotent) throw Error("nilpotent_g3_case: group is not nilpotent");
  const std::size_t n = g.order();
  if (is_power_of(n, 3) && p.exponent == 3) return 1;
  if (is_power_of(n, 2) && p.exponent == 2) return 2;
  if (is_power_of(n, 2) && p.exponent == 4 && p.involutions_central) return 3;
  // G = P x Q for nilpotent G; P elementary abelian and Q of exponent 3 exactly
  // when every element order lies in {1, 2, 3, 6}.
  std::size_t m = n;
  std::size_t twos = 0;
  std::size_t threes = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++twos;
  }
  while (m % 3 == 0) {
    m /= 3;
    ++threes;
  }
  if (m == 1 && twos >= 1 && threes >= 1) {
    const bool orders_ok = std::all_of(p.order_multiset.begin(), p.order_multiset.end(), [](const auto& kv) {
      return kv.first == 1 || kv.first == 2 || kv.first == 3 || kv.first == 6;
    });
    if (orders_ok) return 4;
  }
  return std::nullopt;
}

}  // namespace integra
