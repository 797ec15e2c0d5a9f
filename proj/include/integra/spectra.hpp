#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "integra/group.hpp"
#include "integra/polynomial.hpp"
#include "integra/symsets.hpp"

namespace integra {

/// Symmetric 0/1 adjacency matrix of a regular loop-free graph.
class AdjMatrix {
 public:
  /// Row-major bits; throws unless symmetric, zero-diagonal and regular.
  AdjMatrix(std::size_t n, std::vector<std::uint8_t> bits);

  std::size_t n() const { return n_; }
  int degree() const { return degree_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  /// Neighbours of each vertex in ascending order.
  const std::vector<std::vector<std::uint32_t>>& neighbours() const { return adj_; }

 private:
  std::size_t n_;
  int degree_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

struct Eigenvalue {
  long long value;
  std::size_t multiplicity;

  bool operator==(const Eigenvalue&) const = default;
};

struct SpectrumReport {
  std::size_t n = 0;
  int degree = 0;
  bool integral = false;
  std::vector<Eigenvalue> eigenvalues;  // descending by value
  IntPolynomial residual;               // char poly with integer roots removed
  std::size_t components = 0;
  std::size_t subgroup_order = 0;
  std::size_t index = 1;
};

/// Report for Cay(G, S), computed on <S> and lifted to G.
struct CayleySpectrum {
  bool integral = false;
  SpectrumReport subgraph;  // Cay(<S>, S)
  SpectrumReport lifted;    // Cay(G, S): [G:<S>] disjoint copies
};

/// Entry (g, h) is 1 iff h g^-1 lies in S.
AdjMatrix cayley_adjacency(const FiniteGroup& g, const SymmetricSet& s);

/// Faddeev-LeVerrier recurrence; every division is exact.
IntPolynomial char_poly(const AdjMatrix& a);

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
/// Pivots are the first nonzero entry in row order.
std::size_t integer_rank(std::vector<long long> m, std::size_t rows, std::size_t cols);

/// n - rank(A - lambda I).
std::size_t eigen_multiplicity(const AdjMatrix& a, long long lambda);

/// Rank route: multiplicities of every integer in [-k, k]; the residual is the
/// characteristic polynomial divided by the matching linear factors.
SpectrumReport integral_spectrum(const AdjMatrix& a);

/// Same verdict without the characteristic polynomial; stops once the found
/// multiplicities account for every vertex.
bool integral_by_rank(const AdjMatrix& a);

/// Independent route: strip integer roots in [-k, k] from char_poly(A).
SpectrumReport spectrum_by_charpoly(const AdjMatrix& a);

/// Works on H = <S>; Cay(G, S) is [G:H] disjoint copies of Cay(H, S).
CayleySpectrum is_integral_cayley(const FiniteGroup& g, const SymmetricSet& s);

/// Verdict only, on <S>.
bool cayley_integral_verdict(const FiniteGroup& g, const SymmetricSet& s);

}  // namespace integra
