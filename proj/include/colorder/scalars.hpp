#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colorder {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
// first. Computed once per conductor and cached for the process lifetime.
const std::vector<Integer>& cyclotomic_polynomial(int m);

// Euler totient, equal to deg Phi_m.
int euler_phi(int m);

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Stored as the unique residue of a rational polynomial in zeta_m modulo
/// Phi_m, so two scalars are equal iff their coefficient vectors are. For
/// m = 1 and m = 2 the field is Q and the vector has a single entry.
///
/// Binary operations require both operands to carry the same conductor and
/// throw ConductorMismatch otherwise; use lift() to move between fields.
class CycloScalar {
 public:
  /// Zero in Q(zeta_m).
  explicit CycloScalar(int conductor = 1);
  CycloScalar(const Rational& q, int conductor);
  CycloScalar(long q, int conductor) : CycloScalar(Rational(q), conductor) {}

  /// zeta_m^k with k taken mod m.
  static CycloScalar root(int m, long k);

  /// Builds a scalar from an arbitrary-length polynomial in zeta_m, reducing
  /// it modulo Phi_m.
  static CycloScalar from_polynomial(std::vector<Rational> coeffs, int m);

  /// Parses the textual form, e.g. `1/2*z^2 - 3`, in Q(zeta_m).
  static CycloScalar parse(std::string_view text, int m);

  int conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycloScalar inverse() const;
  CycloScalar pow(long e) const;
  CycloScalar lift(int new_conductor) const;

  /// Canonical text form, terms in decreasing degree.
  std::string to_string() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  // a += b * c without a temporary when the field is Q.
  void add_product(const CycloScalar& b, const CycloScalar& c);

 private:
  void require_same_field(const CycloScalar& o) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

inline CycloScalar cyclo_root(int m, long k) { return CycloScalar::root(m, k); }
inline CycloScalar cyclo_lift(const CycloScalar& a, int m) { return a.lift(m); }

}  // namespace colorder
