#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace integra {

/// Dense univariate polynomial with big-integer coefficients, ascending degree.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial monomial(long long coeff, std::size_t degree);
  /// x - root
  static IntPolynomial linear_factor(long long root);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  mpz_class evaluate(const mpz_class& x) const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial pow(std::size_t e) const;
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a monic divisor; exact over the integers.
PolyDivision divide_monic(const IntPolynomial& p, const IntPolynomial& monic_divisor);

/// d divides p over the rationals. For monic d this is integer long division.
bool poly_divides(const IntPolynomial& d, const IntPolynomial& p);

/// Divides out (x - root) as many times as it divides exactly; returns the count.
std::size_t strip_root(IntPolynomial& p, long long root);

}  // namespace integra
