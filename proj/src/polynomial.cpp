#include "integra/polynomial.hpp"

#include "integra/group.hpp"

namespace integra {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(long long coeff, std::size_t degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = static_cast<long>(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear_factor(long long root) {
  return IntPolynomial({mpz_class(static_cast<long>(-root)), mpz_class(1)});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
  IntPolynomial result({mpz_class(1)});
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

PolyDivision divide_monic(const IntPolynomial& p, const IntPolynomial& monic_divisor) {
  if (!monic_divisor.is_monic()) throw Error("divide_monic needs a monic divisor");
  const long dd = monic_divisor.degree();
  std::vector<mpz_class> rem = p.coeffs();
  if (p.degree() < dd) return {IntPolynomial(), p};
  std::vector<mpz_class> quot(static_cast<std::size_t>(p.degree() - dd + 1), 0);
  const auto& d = monic_divisor.coeffs();
  for (long i = p.degree(); i >= dd; --i) {
    const mpz_class q = rem[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - dd)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d[static_cast<std::size_t>(j)];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool poly_divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw Error("poly_divides: divisor is zero");
  if (d.is_monic()) return divide_monic(p, d).remainder.is_zero();
  // Rational long division.
  std::vector<mpq_class> rem;
  for (const auto& c : p.coeffs()) rem.emplace_back(c);
  const long dd = d.degree();
  const mpq_class lead(d.leading());
  for (long i = p.degree(); i >= dd; --i) {
    const mpq_class q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * mpq_class(d.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  for (long i = 0; i < dd && i < static_cast<long>(rem.size()); ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

std::size_t strip_root(IntPolynomial& p, long long root) {
  std::size_t count = 0;
  const mpz_class r = static_cast<long>(root);
  while (!p.is_zero() && p.degree() >= 1) {
    // Synthetic division by (x - root).
    const auto& c = p.coeffs();
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = carry * r + c[i];
      q[i - 1] = carry;
    }
    if (carry * r + c[0] != 0) break;
    p = IntPolynomial(std::move(q));
    ++count;
  }
  return count;
}

}  // namespace integra
