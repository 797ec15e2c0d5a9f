#include "integra/spectra.hpp"

#include <algorithm>

namespace integra {

namespace {

// One Bareiss update (pivot * x - below * right) / prev with 128-bit
// intermediates. Stored values stay below 2^62 in magnitude so the products
// cannot overflow; returns false when a result would leave that range.
__extension__ typedef __int128 int128;

struct Int64Arith {
  using value_type = long long;
  static bool step(long long& out, long long pivot, long long x, long long below, long long right,
                   long long prev) {
    constexpr int128 kLimit = static_cast<int128>(1) << 62;
    const int128 num = static_cast<int128>(pivot) * x - static_cast<int128>(below) * right;
    const int128 q = num / prev;
    if (q >= kLimit || q <= -kLimit) return false;
    out = static_cast<long long>(q);
    return true;
  }
};

struct BigArith {
  using value_type = mpz_class;
  static bool step(mpz_class& out, const mpz_class& pivot, const mpz_class& x, const mpz_class& below,
                   const mpz_class& right, const mpz_class& prev) {
    mpz_class num = pivot * x - below * right;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
    return true;
  }
};

template <class Arith, class T = typename Arith::value_type>
bool bareiss_rank(std::vector<T>& m, std::size_t rows, std::size_t cols, std::size_t& rank_out) {
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && m[pivot_row * cols + col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot_row * cols + j], m[rank * cols + j]);
    }
    const T pivot = m[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T below = m[i * cols + col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        T& x = m[i * cols + j];
        const T& right = m[rank * cols + j];
        if (!Arith::step(x, pivot, x, below, right, prev)) return false;
      }
      m[i * cols + col] = 0;
    }
    prev = pivot;
    ++rank;
  }
  rank_out = rank;
  return true;
}

SpectrumReport report_from_multiplicities(const AdjMatrix& a, std::vector<Eigenvalue> eig,
                                          IntPolynomial residual) {
  SpectrumReport r;
  r.n = a.n();
  r.degree = a.degree();
  r.eigenvalues = std::move(eig);
  r.residual = std::move(residual);
  r.integral = r.residual.degree() == 0;
  for (const auto& e : r.eigenvalues) {
    if (e.value == a.degree()) r.components = e.multiplicity;
  }
  r.subgroup_order = a.n();
  r.index = 1;
  return r;
}

}  // namespace

AdjMatrix::AdjMatrix(std::size_t n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n == 0) throw Error("adjacency matrix must have at least one vertex");
  if (bits_.size() != n * n) throw Error("adjacency matrix must have n x n entries");
  adj_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_[i * n + i] != 0) throw Error("adjacency matrix has a loop");
    for (std::size_t j = 0; j < n; ++j) {
      if (bits_[i * n + j] > 1) throw Error("adjacency matrix entries must be 0 or 1");
      if (bits_[i * n + j] != bits_[j * n + i]) throw Error("adjacency matrix is not symmetric");
      if (bits_[i * n + j]) adj_[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  degree_ = static_cast<int>(adj_[0].size());
  for (const auto& row : adj_) {
    if (static_cast<int>(row.size()) != degree_) throw Error("graph is not regular");
  }
}

AdjMatrix cayley_adjacency(const FiniteGroup& g, const SymmetricSet& s) {
  if (!is_symmetric_set(g, s.members)) throw Error("connection set must be symmetric and identity-free");
  const std::size_t n = g.order();
  std::vector<std::uint8_t> bits(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem t : s.members) bits[x * n + g.mul(t, x)] = 1;
  }
  return AdjMatrix(n, std::move(bits));
}

IntPolynomial char_poly(const AdjMatrix& a) {
  const std::size_t n = a.n();
  const auto& adj = a.neighbours();
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  // am holds A * M_k; M_1 = I so A * M_1 = A.
  std::vector<mpz_class> am(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : adj[i]) am[i * n + j] = 1;
  }
  std::vector<mpz_class> m(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    mpz_class ck = -trace;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), k);
    c[n - k] = ck;
    if (k == n) break;
    // M_{k+1} = A M_k + c_{n-k} I, then am = A M_{k+1}.
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += ck;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class* out = &am[i * n];
      for (std::size_t j = 0; j < n; ++j) out[j] = 0;
      for (auto l : adj[i]) {
        const mpz_class* src = &m[l * n];
        for (std::size_t j = 0; j < n; ++j) out[j] += src[j];
      }
    }
  }
  return IntPolynomial(std::move(c));
}

std::size_t integer_rank(std::vector<long long> m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows * cols) throw Error("integer_rank: shape mismatch");
  std::vector<long long> fast = m;
  std::size_t rank = 0;
  if (bareiss_rank<Int64Arith>(fast, rows, cols, rank)) return rank;
  std::vector<mpz_class> big;
  big.reserve(m.size());
  for (long long v : m) big.emplace_back(static_cast<long>(v));
  bareiss_rank<BigArith>(big, rows, cols, rank);
  return rank;
}

std::size_t eigen_multiplicity(const AdjMatrix& a, long long lambda) {
  const std::size_t n = a.n();
  std::vector<long long> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i, j) ? 1 : 0;
    m[i * n + i] -= lambda;
  }
  return n - integer_rank(std::move(m), n, n);
}

SpectrumReport integral_spectrum(const AdjMatrix& a) {
  const long long k = a.degree();
  std::vector<Eigenvalue> eig;
  std::size_t total = 0;
  for (long long lambda = k; lambda >= -k && total < a.n(); --lambda) {
    const std::size_t mult = eigen_multiplicity(a, lambda);
    if (mult > 0) {
      eig.push_back({lambda, mult});
      total += mult;
    }
  }
  IntPolynomial residual = char_poly(a);
  for (const auto& e : eig) {
    auto div = divide_monic(residual, IntPolynomial::linear_factor(e.value).pow(e.multiplicity));
    if (!div.remainder.is_zero()) {
      throw Error("internal: rank multiplicity disagrees with the characteristic polynomial");
    }
    residual = std::move(div.quotient);
  }
  return report_from_multiplicities(a, std::move(eig), std::move(residual));
}

bool integral_by_rank(const AdjMatrix& a) {
  const long long k = a.degree();
  std::size_t total = 0;
  for (long long lambda = k; lambda >= -k; --lambda) {
    total += eigen_multiplicity(a, lambda);
    if (total == a.n()) return true;
  }
  return false;
}

SpectrumReport spectrum_by_charpoly(const AdjMatrix& a) {
  const long long k = a.degree();
  IntPolynomial residual = char_poly(a);
  std::vector<Eigenvalue> eig;
  for (long long lambda = k; lambda >= -k; --lambda) {
    const std::size_t mult = strip_root(residual, lambda);
    if (mult > 0) eig.push_back({lambda, mult});
  }
  return report_from_multiplicities(a, std::move(eig), std::move(residual));
}

namespace {

struct Reduced {
  Subgroup h;
  SymmetricSet local;
};

Reduced reduce_to_generated(const FiniteGroup& g, const SymmetricSet& s) {
  if (!is_symmetric_set(g, s.members)) throw Error("connection set must be symmetric and identity-free");
  Subgroup h = closure(g, s.members);
  std::vector<Elem> local_of(g.order(), 0);
  for (std::size_t i = 0; i < h.embed.size(); ++i) local_of[h.embed[i]] = static_cast<Elem>(i);
  std::vector<Elem> local;
  for (Elem x : s.members) local.push_back(local_of[x]);
  std::sort(local.begin(), local.end());
  return {std::move(h), SymmetricSet{std::move(local)}};
}

}  // namespace

CayleySpectrum is_integral_cayley(const FiniteGroup& g, const SymmetricSet& s) {
  auto [h, local] = reduce_to_generated(g, s);
  CayleySpectrum out;
  out.subgraph = integral_spectrum(cayley_adjacency(h.group, local));
  out.integral = out.subgraph.integral;

  const std::size_t index = g.order() / h.order();
  SpectrumReport& lifted = out.lifted;
  lifted.n = g.order();
  lifted.degree = out.subgraph.degree;
  lifted.integral = out.integral;
  for (const auto& e : out.subgraph.eigenvalues) lifted.eigenvalues.push_back({e.value, e.multiplicity * index});
  lifted.residual = out.subgraph.residual.pow(index);
  lifted.components = out.subgraph.components * index;
  lifted.subgroup_order = h.order();
  lifted.index = index;
  out.subgraph.subgroup_order = h.order();
  out.subgraph.index = 1;
  return out;
}

bool cayley_integral_verdict(const FiniteGroup& g, const SymmetricSet& s) {
  auto [h, local] = reduce_to_generated(g, s);
  return integral_by_rank(cayley_adjacency(h.group, local));
}

}  // namespace integra
