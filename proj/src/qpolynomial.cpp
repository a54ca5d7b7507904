#include "redih/qpolynomial.hpp"

#include <cassert>

namespace redih {

namespace {
const Int kZero = 0;
}

QPolynomial::QPolynomial(Int constant) {
  if (constant != 0) coeff_.push_back(std::move(constant));
}

QPolynomial QPolynomial::from_coefficients(IntVec c) {
  QPolynomial p;
  p.coeff_ = std::move(c);
  p.trim();
  return p;
}

QPolynomial QPolynomial::q() { return monomial(1, 1); }

QPolynomial QPolynomial::monomial(const Int& c, int degree) {
  QPolynomial p;
  if (c != 0) {
    p.coeff_.assign(size_t(degree) + 1, Int(0));
    p.coeff_[degree] = c;
  }
  return p;
}

void QPolynomial::trim() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

const Int& QPolynomial::coefficient(int j) const {
  if (j < 0 || j >= int(coeff_.size())) return kZero;
  return coeff_[j];
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  IntVec c(std::max(coeff_.size(), o.coeff_.size()), Int(0));
  for (size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
  return from_coefficients(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator-() const {
  IntVec c = coeff_;
  for (auto& x : c) x = -x;
  return from_coefficients(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return QPolynomial();
  IntVec c(coeff_.size() + o.coeff_.size() - 1, Int(0));
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
  }
  return from_coefficients(std::move(c));
}

namespace {

std::string format_terms(const IntVec& coeff, const std::string& var, int degree_step) {
  if (coeff.empty()) return "0";
  std::string out;
  for (size_t j = 0; j < coeff.size(); ++j) {
    if (coeff[j] == 0) continue;
    Int c = coeff[j];
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Int mag = abs(c);
    int e = int(j) * degree_step;
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string QPolynomial::to_q_string() const { return format_terms(coeff_, "q", 1); }
std::string QPolynomial::to_t_string() const { return format_terms(coeff_, "t", 2); }

QPolynomial exact_div(const QPolynomial& p, const QPolynomial& r) {
  if (r.is_zero()) throw InputError("exact_div by the zero polynomial");
  if (p.is_zero()) return QPolynomial();
  if (p.degree() < r.degree())
    throw NonDivisible("exact_div: degree of dividend below divisor");
  IntVec rem = p.coefficients();
  const IntVec& d = r.coefficients();
  IntVec quot(size_t(p.degree() - r.degree()) + 1, Int(0));
  for (int k = p.degree() - r.degree(); k >= 0; --k) {
    Int lead = rem[size_t(k) + r.degree()];
    if (lead == 0) continue;
    if (lead % d.back() != 0)
      throw NonDivisible("exact_div: leading coefficient does not divide");
    Int qk = lead / d.back();
    quot[k] = qk;
    for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= qk * d[i];
  }
  for (const auto& x : rem)
    if (x != 0) throw NonDivisible("exact_div: nonzero remainder");
  return QPolynomial::from_coefficients(std::move(quot));
}

QPolynomial truncate_t(const QPolynomial& p, int m) {
  if (m < -1) throw InputError("truncate_t: bound below -1");
  if (m < 0) return QPolynomial();
  IntVec c;
  for (int j = 0; j <= p.degree() && 2 * j <= m; ++j) c.push_back(p.coefficient(j));
  return QPolynomial::from_coefficients(std::move(c));
}

bool is_palindromic(const QPolynomial& p, int half_t_degree) {
  if (half_t_degree < 0 || half_t_degree % 2 != 0)
    throw InputError("is_palindromic: half_t_degree must be even and nonnegative");
  int d = half_t_degree / 2;
  if (p.degree() > d) return false;
  for (int j = 0; j <= d; ++j)
    if (p.coefficient(j) != p.coefficient(d - j)) return false;
  return true;
}

bool nonnegative_coefficients(const QPolynomial& p) {
  for (const auto& c : p.coefficients())
    if (c < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

QSeries::QSeries(IntVec coefficients, int order) : coeff_(std::move(coefficients)), order_(order) {
  if (order < 0) throw InputError("QSeries with negative order");
  coeff_.resize(size_t(order) + 1, Int(0));
}

const Int& QSeries::coefficient(int j) const {
  if (j < 0 || j > order_) return kZero;
  return coeff_[j];
}

QSeries QSeries::mul(const QSeries& o) const {
  int ord = std::min(order_, o.order_);
  IntVec c(size_t(ord) + 1, Int(0));
  for (int i = 0; i <= ord; ++i)
    for (int j = 0; i + j <= ord; ++j) c[i + j] += coeff_[i] * o.coeff_[j];
  return QSeries(std::move(c), ord);
}

QSeries QSeries::mul(const QPolynomial& p) const {
  return mul(series_of(p, order_));
}

QSeries series_of(const QPolynomial& p, int order) {
  IntVec c(size_t(order) + 1, Int(0));
  for (int j = 0; j <= order && j <= p.degree(); ++j) c[j] = p.coefficient(j);
  return QSeries(std::move(c), order);
}

QSeries classifying_series(int r, const QPolynomial& flag, int order) {
  if (r < 0 || order < 0) throw InputError("classifying_series: negative rank or order");
  if (flag.coefficient(0) != 1)
    throw InputError("classifying_series: flag polynomial must have constant term 1");
  // denominator (1-q)^r * flag
  QPolynomial denom = flag;
  QPolynomial one_minus_q = QPolynomial::from_coefficients({1, -1});
  for (int i = 0; i < r; ++i) denom = denom * one_minus_q;
  assert(denom.coefficient(0) == 1);
  IntVec s(size_t(order) + 1, Int(0));
  s[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n; ++k) acc += denom.coefficient(k) * s[n - k];
    s[n] = -acc;
  }
  return QSeries(std::move(s), order);
}

}  // namespace redih
