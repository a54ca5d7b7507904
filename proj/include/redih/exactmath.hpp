#pragma once

// Exact rational arithmetic, integer matrix normal forms and rational
// linear feasibility. All geometry in the library is built on these
// types; there is no floating point anywhere.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "redih/errors.hpp"

namespace redih {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Canonical rational: reduced, positive denominator. Throws InputError on
// a zero denominator.
Rational make_rational(const Int& num, const Int& den);

// Parses "3", "-4/7" or exact decimals like "0.25".
Rational rational_from_string(const std::string& s);

bool is_integer(const Rational& x);

Int dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Rational dot(const RatVec& a, const RatVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec to_rational(const IntVec& v);
bool is_lattice_vector(const RatVec& v);
IntVec to_integer(const RatVec& v);  // requires is_lattice_vector
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

// Primitive integer vector spanning the same ray (positive multiple).
IntVec clear_denominators(const RatVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// Canonical serializations, used as map keys.
std::string vector_key(const IntVec& v);

// ---------------------------------------------------------------------------
// Matrices

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& o) const;
  IntVec apply(const IntVec& x) const;  // column-vector action
  RatVec apply(const RatVec& x) const;
  IntMatrix transpose() const;
  IntVec row(int i) const;
  IntVec col(int j) const;

  bool operator==(const IntMatrix& o) const = default;
};

// Bareiss fraction-free determinant; requires a square matrix.
Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Rational& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_cols(const std::vector<RatVec>& cols);
};

int rank(const RatMatrix& m);
int rank_of_rows(const std::vector<RatVec>& rows);

// Any solution of A x = b (free variables set to zero), or nullopt if
// the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Basis of {x : A x = 0} over the rationals.
std::vector<RatVec> kernel(const RatMatrix& a);

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithNormalForm {
  IntMatrix u, s, v;  // u*m*v = s; u, v unimodular; s diagonal, d1 | d2 | ...
  IntMatrix u_inv;
  int rank = 0;  // number of nonzero diagonal entries
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : M x = 0}; always a saturated sublattice.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

// Basis of {v : n v in span_Z(generators) for some n >= 1}. The result is
// a basis of a direct summand of Z^ambient_rank; empty input gives the
// empty basis.
std::vector<IntVec> saturate(const std::vector<IntVec>& generators, int ambient_rank);

// True iff the two generating sets span the same sublattice of Z^rank.
bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int rank);

// ---------------------------------------------------------------------------
// Strict rational feasibility

enum class Relation { GreaterEqual, Equal, Greater };

struct Constraint {
  RatVec coefficients;
  Rational constant;
  Relation relation = Relation::GreaterEqual;  // coefficients . x REL constant
};

struct StrictSystem {
  std::vector<Constraint> constraints;

  void add(RatVec coefficients, Rational constant, Relation relation);
  int dimension() const;  // -1 when there are no constraints
};

// Exact decision by Fourier-Motzkin elimination, carrying a strictness
// flag per derived constraint. solve() also extracts a witness point by
// back-substitution through the elimination layers.
bool feasible(const StrictSystem& sys);
std::optional<RatVec> solve(const StrictSystem& sys);

}  // namespace redih
