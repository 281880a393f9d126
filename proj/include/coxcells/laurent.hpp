#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "coxcells/errors.hpp"

namespace coxcells::laurent {

// Everything in the engine lives over Z[v, v^-1] with v = q^{1/2}.
// Polynomials in q are the even-exponent sublattice, printed in q-units.
// Coefficients are checked 64-bit integers: an overflow throws rather than
// wrapping, since every value here is meant to be exact.

inline constexpr int kNegInf = std::numeric_limits<int>::min();

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(int64_t c) {
    if (c != 0) t_.push_back({0, c});
  }
  // monomial c * v^e
  Laurent(int e, int64_t c) {
    if (c != 0) t_.push_back({e, c});
  }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(int64_t{1}); }
  static Laurent v(int e = 1) { return Laurent(e, 1); }
  static Laurent xi();   // v - v^-1
  static Laurent eta();  // v + v^-1

  bool is_zero() const { return t_.empty(); }
  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return t_ != o.t_; }

  // max/min exponent, kNegInf on the zero polynomial
  int deg() const { return t_.empty() ? kNegInf : t_.back().first; }
  int low() const { return t_.empty() ? kNegInf : t_.front().first; }

  int64_t coeff(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;

  Laurent scaled(int64_t c) const;
  Laurent shifted(int e) const;  // * v^e
  Laurent bar() const;           // v -> v^-1

  // terms, ascending exponent, no zeros
  const std::vector<std::pair<int, int64_t>>& terms() const { return t_; }

  // "q^{3/2} - 2 + q^{-1/2}"-style, exponents as q-powers (halves for odd
  // v-exponents), terms in descending exponent order
  std::string str() const;
  // JSON array-of-pairs form: [[v-exponent, coeff], ...] ascending
  std::string json() const;

 private:
  std::vector<std::pair<int, int64_t>> t_;
  void prune();
  friend Laurent add_scaled(const Laurent&, const Laurent&, int64_t);
};

// a + c*b in one pass
Laurent add_scaled(const Laurent& a, const Laurent& b, int64_t c);

enum class Basis { XI, ETA };
enum class Unit { V, Q };

// Expansion of a Laurent polynomial as an integer polynomial in xi or eta.
struct BasisExpansion {
  Basis basis = Basis::XI;
  std::vector<int64_t> c;  // c[k] multiplies basis^k; no trailing zeros

  int degree() const { return c.empty() ? kNegInf : static_cast<int>(c.size()) - 1; }
  bool nonnegative() const;
  Laurent to_laurent() const;
  bool operator==(const BasisExpansion& o) const = default;
};

// Peels leading terms: c_d = coeff(p, deg p), p -= c_d * basis^d, repeat.
// Throws NotExpressible when a nonzero remainder of negative degree is left.
BasisExpansion expand_in(const Laurent& p, Basis basis);

// Degree in v- or q-units; unit=Q requires all exponents even.
int degree(const Laurent& p, Unit unit);

}  // namespace coxcells::laurent
