#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace charcount {

// Exact univariate polynomial in q with rational coefficients, constant term
// first. The zero polynomial has an empty coefficient vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long c);  // NOLINT: constants convert implicitly
  QPolynomial(const mpz_class& c);  // NOLINT
  QPolynomial(const mpq_class& c);  // NOLINT
  explicit QPolynomial(std::vector<mpq_class> coeffs);

  static QPolynomial from_ints(const std::vector<long>& coeffs);
  static QPolynomial monomial(const mpq_class& c, int degree);
  static QPolynomial q_power(int degree) { return monomial(1, degree); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const;
  // Lowest power of q with nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  bool is_integral() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool nonnegative() const;

  mpq_class operator()(const mpq_class& x) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  QPolynomial& operator*=(const mpq_class& s);
  QPolynomial operator-() const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator<(const QPolynomial& a, const QPolynomial& b);

  QPolynomial pow(unsigned e) const;
  QPolynomial shift(int k) const;  // multiply by q^k, k >= -valuation()

  // "2q^4+12q^3-q+1/2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& num, const QPolynomial& den);
QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den);
bool divides(const QPolynomial& den, const QPolynomial& num);
bool is_palindromic(const QPolynomial& p, int d);

inline constexpr int kCyclotomicBound = 30;

// Phi_k with integer coefficients, k >= 1.
QPolynomial cyclotomic(int k);

struct CyclotomicFactorization {
  mpq_class leading = 1;
  int q_power = 0;
  std::map<int, int> phi;  // index -> exponent
  QPolynomial residual = QPolynomial(1);  // monic

  QPolynomial expand() const;
  // "1/2 * q * Phi1 * Phi2^2 * Phi4", residual in parentheses when nontrivial.
  std::string to_string() const;
  // "\frac{1}{2}q\Phi_1\Phi_2^2\Phi_4"
  std::string to_latex() const;
};

CyclotomicFactorization cyclotomic_factor(const QPolynomial& p);

// Reverse of CyclotomicFactorization::to_string; also accepts plain sums of
// monomials such as "q^2+4q+1".
QPolynomial parse_polynomial(const std::string& text);
// Same grammar plus integer variables (lowercase names other than q),
// computed exponents such as 8^(n-1), and '/' for exact division.
QPolynomial parse_expression(const std::string& text, const std::map<std::string, long>& vars);

std::string rational_to_string(const mpq_class& x);
mpq_class parse_rational(const std::string& text);

// Polynomial <-> JSON array, constant term first; non-integers as "num/den".
nlohmann::json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const mpq_class& x);
mpq_class rational_from_json(const nlohmann::json& j);

}  // namespace charcount
