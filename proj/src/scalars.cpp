#include "colorder/scalars.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "colorder/errors.hpp"

namespace colorder {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<Integer> quot(num.size() - dd);
  for (std::size_t t = num.size(); t-- > dd;) {
    const Integer c = num[t];
    quot[t - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[t - dd + i] -= c * den[i];
  }
  return quot;
}

struct CyclotomicCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<const std::vector<Integer>>> polys;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

std::vector<Integer> compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<Integer> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

// Reduces p in place modulo the monic Phi_m; result has exactly phi(m) entries.
void reduce_mod_phi(Poly& p, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t t = p.size(); t-- > deg;) {
    if (p[t] == 0) continue;
    const Rational c = p[t];
    for (std::size_t i = 0; i <= deg; ++i) p[t - deg + i] -= c * phi[i];
  }
  p.resize(deg, Rational(0));
}

// Polynomial long division over Q; returns quotient, leaves remainder in num.
Poly divmod(Poly& num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  Poly quot(num.size() - dd);
  const Rational lead = den.back();
  for (std::size_t t = num.size(); t-- > dd;) {
    if (num[t] == 0) continue;
    const Rational c = num[t] / lead;
    quot[t - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[t - dd + i] -= c * den[i];
  }
  num.resize(dd);
  trim(num);
  return quot;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void check_conductor(int m) {
  if (m < 1) throw Error("conductor must be positive, got " + std::to_string(m));
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  check_conductor(m);
  auto& c = cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.polys.find(m); it != c.polys.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for proper divisors.
  auto poly = std::make_unique<const std::vector<Integer>>(compute_cyclotomic(m));
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.polys.emplace(m, std::move(poly));
  return *it->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CycloScalar::CycloScalar(int conductor) : conductor_(conductor) {
  coeffs_.assign(euler_phi(conductor), Rational(0));
}

CycloScalar::CycloScalar(const Rational& q, int conductor) : CycloScalar(conductor) {
  coeffs_[0] = q;
}

CycloScalar CycloScalar::root(int m, long k) {
  check_conductor(m);
  long e = k % m;
  if (e < 0) e += m;
  Poly p(e + 1, Rational(0));
  p[e] = 1;
  return from_polynomial(std::move(p), m);
}

CycloScalar CycloScalar::from_polynomial(std::vector<Rational> coeffs, int m) {
  CycloScalar out(m);
  reduce_mod_phi(coeffs, m);
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

void CycloScalar::require_same_field(const CycloScalar& o) const {
  if (conductor_ != o.conductor_)
    throw ConductorMismatch("conductor " + std::to_string(conductor_) + " vs " +
                            std::to_string(o.conductor_));
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  a.require_same_field(b);
  if (a.coeffs_.size() == 1) return CycloScalar(a.coeffs_[0] * b.coeffs_[0], a.conductor_);
  return CycloScalar::from_polynomial(poly_mul(a.coeffs_, b.coeffs_), a.conductor_);
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this = *this * o.inverse(); }

void CycloScalar::add_product(const CycloScalar& b, const CycloScalar& c) {
  if (coeffs_.size() == 1) {
    require_same_field(b);
    b.require_same_field(c);
    coeffs_[0] += b.coeffs_[0] * c.coeffs_[0];
    return;
  }
  *this += b * c;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (coeffs_.size() == 1) return CycloScalar(1 / coeffs_[0], conductor_);

  // Extended Euclid: track s with s * a == r (mod Phi_m).
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    Poly rem = r0;
    Poly q = divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_m is irreducible, so the gcd r0 is a nonzero constant.
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return from_polynomial(std::move(s0), conductor_);
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloScalar result(Rational(1), conductor_);
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

CycloScalar CycloScalar::lift(int new_conductor) const {
  check_conductor(new_conductor);
  if (new_conductor % conductor_ != 0)
    throw NotDivisible(std::to_string(conductor_) + " does not divide " +
                       std::to_string(new_conductor));
  const std::size_t step = new_conductor / conductor_;
  Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return from_polynomial(std::move(p), new_conductor);
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.to_string(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, int m) : text_(text), m_(m) {}

  CycloScalar parse() {
    CycloScalar acc(m_);
    skip_ws();
    if (at_end()) fail("empty scalar");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      acc += CycloScalar(sign, m_) * term();
      skip_ws();
    }
    return acc;
  }

 private:
  CycloScalar term() {
    Rational coef = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      have_coef = true;
      skip_ws();
      if (at_end() || peek() != '*') return CycloScalar(coef, m_);
      ++pos_;
      skip_ws();
    }
    if (at_end() || peek() != 'z') fail(have_coef ? "expected 'z' after '*'" : "expected a term");
    ++pos_;
    skip_ws();
    long exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = digits().get_si();
    }
    return CycloScalar(coef, m_) * CycloScalar::root(m_, exponent);
  }

  Rational rational() {
    Integer num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      Integer den = digits();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloScalar CycloScalar::parse(std::string_view text, int m) {
  check_conductor(m);
  return ScalarParser(text, m).parse();
}

}  // namespace colorder
