#pragma once

// Polynomials in q = t^2 with integer coefficients. Every Poincare and
// intersection cohomology polynomial in the library lives here; only even
// t-degrees occur in scope, so the q-form loses nothing and makes
// palindromy checks index-symmetric.

#include <string>
#include <vector>

#include "redih/exactmath.hpp"

namespace redih {

class QPolynomial {
 public:
  QPolynomial() = default;                       // zero
  explicit QPolynomial(Int constant);            // constant polynomial
  static QPolynomial from_coefficients(IntVec c);  // c[j] = coefficient of q^j
  static QPolynomial one() { return QPolynomial(Int(1)); }
  static QPolynomial q();                        // the variable
  static QPolynomial monomial(const Int& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return int(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  const Int& coefficient(int j) const;  // 0 outside the stored range
  const IntVec& coefficients() const { return coeff_; }

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator-() const;
  bool operator==(const QPolynomial& o) const = default;

  std::string to_q_string() const;  // "1 + 2q + q^3"
  std::string to_t_string() const;  // "1 + 2t^2 + t^6"

 private:
  IntVec coeff_;  // coeff_[j] holds the coefficient of q^j; no trailing zeros
  void trim();
};

// Exact quotient p / r; throws NonDivisible when p is not a multiple of r
// in Z[q], and InputError when r = 0.
QPolynomial exact_div(const QPolynomial& p, const QPolynomial& r);

// Keeps the terms q^j of t-degree 2j <= m; m = -1 yields 0. Requires m >= -1.
QPolynomial truncate_t(const QPolynomial& p, int m);

// True iff coefficient(j) == coefficient(d - j) for all j, where
// half_t_degree = 2d. Requires half_t_degree even and >= 0.
bool is_palindromic(const QPolynomial& p, int half_t_degree);

bool nonnegative_coefficients(const QPolynomial& p);

// ---------------------------------------------------------------------------
// Truncated power series in q

class QSeries {
 public:
  QSeries() = default;
  QSeries(IntVec coefficients, int order);  // coefficients up to q^order

  int order() const { return order_; }
  const Int& coefficient(int j) const;
  const IntVec& coefficients() const { return coeff_; }

  QSeries mul(const QSeries& o) const;            // truncated to min order
  QSeries mul(const QPolynomial& p) const;        // truncated to this order
  bool operator==(const QSeries& o) const = default;

 private:
  IntVec coeff_;
  int order_ = 0;
};

QSeries series_of(const QPolynomial& p, int order);

// Power-series expansion of 1 / ((1-q)^r * flag) to the given order.
// Requires flag to have constant term 1 and r, order >= 0.
QSeries classifying_series(int r, const QPolynomial& flag, int order);

}  // namespace redih
