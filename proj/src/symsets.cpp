#include "integra/symsets.hpp"

#include <algorithm>
#include <numeric>

namespace integra {

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct EnumerationKey {
  std::vector<Elem> involutions;
  std::vector<Elem> pair_firsts;
};

EnumerationKey key_of(const FiniteGroup& g, const std::vector<Elem>& members) {
  EnumerationKey key;
  for (Elem x : members) {
    if (g.inv(x) == x) {
      key.involutions.push_back(x);
    } else if (x < g.inv(x)) {
      key.pair_firsts.push_back(x);
    }
  }
  return key;
}

}  // namespace

InversePartition inverse_partition(const FiniteGroup& g) {
  InversePartition p;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const Elem y = g.inv(x);
    if (y == x) {
      p.involutions.push_back(x);
    } else if (x < y) {
      p.pairs.emplace_back(x, y);
    }
  }
  return p;
}

bool is_symmetric_set(const FiniteGroup& g, const std::vector<Elem>& members) {
  for (Elem x : members) {
    if (x >= g.order() || x == g.identity()) return false;
    if (std::find(members.begin(), members.end(), g.inv(x)) == members.end()) return false;
  }
  return true;
}

SymmetricSet make_symmetric_set(const FiniteGroup& g, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem x : members) {
    if (x >= g.order()) throw Error("element index " + std::to_string(x) + " out of range");
    if (x == g.identity()) throw Error("connection set contains the identity");
    if (!std::binary_search(members.begin(), members.end(), g.inv(x))) {
      throw Error("connection set is not symmetric: inverse of " + g.name(x) + " missing");
    }
  }
  return SymmetricSet{std::move(members)};
}

SymmetricSetEnumerator::SymmetricSetEnumerator(const FiniteGroup& g, std::size_t k, SizeMode mode)
    : part_(inverse_partition(g)), max_size_(k), size_(mode == SizeMode::exact ? k : 1) {
  if (k == 0) throw Error("connection set size must be at least 1");
}

bool SymmetricSetEnumerator::start_signature() {
  const std::size_t ninv = part_.involutions.size();
  const std::size_t npairs = part_.pairs.size();
  while (size_ <= max_size_) {
    for (; inv_count_ <= std::min(size_, ninv); ++inv_count_) {
      const std::size_t rest = size_ - inv_count_;
      if (rest % 2 == 0 && rest / 2 <= npairs) {
        inv_idx_.resize(inv_count_);
        std::iota(inv_idx_.begin(), inv_idx_.end(), std::size_t{0});
        pair_idx_.resize(rest / 2);
        std::iota(pair_idx_.begin(), pair_idx_.end(), std::size_t{0});
        return true;
      }
    }
    ++size_;
    inv_count_ = 0;
  }
  return false;
}

bool SymmetricSetEnumerator::advance_within_signature() {
  if (next_combination(pair_idx_, part_.pairs.size())) return true;
  std::iota(pair_idx_.begin(), pair_idx_.end(), std::size_t{0});
  return next_combination(inv_idx_, part_.involutions.size());
}

void SymmetricSetEnumerator::emit(SymmetricSet& out) const {
  out.members.clear();
  for (std::size_t i : inv_idx_) out.members.push_back(part_.involutions[i]);
  for (std::size_t i : pair_idx_) {
    out.members.push_back(part_.pairs[i].first);
    out.members.push_back(part_.pairs[i].second);
  }
  std::sort(out.members.begin(), out.members.end());
}

bool SymmetricSetEnumerator::next(SymmetricSet& out) {
  while (!done_) {
    if (!active_) {
      if (!start_signature()) {
        done_ = true;
        return false;
      }
      active_ = true;
      emit(out);
      return true;
    }
    if (advance_within_signature()) {
      emit(out);
      return true;
    }
    active_ = false;
    ++inv_count_;
  }
  return false;
}

std::vector<SymmetricSet> enumerate_symmetric_sets(const FiniteGroup& g, std::size_t k, SizeMode mode) {
  std::vector<SymmetricSet> out;
  SymmetricSetEnumerator it(g, k, mode);
  SymmetricSet s;
  while (it.next(s)) out.push_back(s);
  return out;
}

mpz_class count_symmetric_sets(const FiniteGroup& g, std::size_t k, SizeMode mode) {
  if (k == 0) throw Error("connection set size must be at least 1");
  const auto part = inverse_partition(g);
  const unsigned long ninv = part.involutions.size();
  const unsigned long npairs = part.pairs.size();
  mpz_class total = 0;
  for (std::size_t size = mode == SizeMode::exact ? k : 1; size <= k; ++size) {
    for (std::size_t a = size % 2; a <= size; a += 2) {
      const std::size_t b = (size - a) / 2;
      if (a > ninv || b > npairs) continue;
      mpz_class ca;
      mpz_class cb;
      mpz_bin_uiui(ca.get_mpz_t(), ninv, a);
      mpz_bin_uiui(cb.get_mpz_t(), npairs, b);
      total += ca * cb;
    }
  }
  return total;
}

bool precedes_in_enumeration(const FiniteGroup& g, const SymmetricSet& lhs, const SymmetricSet& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  const auto a = key_of(g, lhs.members);
  const auto b = key_of(g, rhs.members);
  if (a.involutions.size() != b.involutions.size()) return a.involutions.size() < b.involutions.size();
  if (a.involutions != b.involutions) return a.involutions < b.involutions;
  return a.pair_firsts < b.pair_firsts;
}

bool is_conjugacy_canonical(const FiniteGroup& g, const SymmetricSet& s) {
  SymmetricSet conj;
  for (Elem h = 0; h < g.order(); ++h) {
    conj.members.clear();
    const Elem hi = g.inv(h);
    for (Elem x : s.members) conj.members.push_back(g.mul(g.mul(h, x), hi));
    std::sort(conj.members.begin(), conj.members.end());
    if (precedes_in_enumeration(g, conj, s)) return false;
  }
  return true;
}

}  // namespace integra
