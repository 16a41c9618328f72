#pragma once

// Exact scalars: big rationals, polynomials in the loop parameter delta,
// reduced rational functions in delta, and specialization delta -> q.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlcat {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on junk or q = 0.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

/// Always "p/q", also for integers ("3/1"), so the JSON form is unambiguous.
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Short human form: "3", "-1/2".
inline std::string rational_to_short(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// DeltaPoly

class DeltaPoly {
 public:
  DeltaPoly() = default;
  explicit DeltaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  DeltaPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static DeltaPoly constant(const Rational& v) { return DeltaPoly(std::vector<Rational>{v}); }
  static DeltaPoly monomial(std::size_t degree, const Rational& v = 1) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = v;
    return DeltaPoly(std::move(c));
  }
  static DeltaPoly delta() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) { return !(a == b); }

  DeltaPoly operator-() const {
    DeltaPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  DeltaPoly& operator+=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DeltaPoly& operator-=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  DeltaPoly& operator*=(const DeltaPoly& o) { return *this = *this * o; }

  DeltaPoly scaled(const Rational& k) const {
    if (k == 0) return {};
    DeltaPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
  }
  DeltaPoly monic() const { return is_zero() ? *this : scaled(1 / lead()); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[i] is the coefficient of delta^i
};

inline DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return DeltaPoly(std::move(out));
}

inline DeltaPoly poly_mul(const DeltaPoly& a, const DeltaPoly& b) { return a * b; }

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<DeltaPoly, DeltaPoly> poly_divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {DeltaPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.coeffs().size() - b.coeffs().size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + db] * inv_lead;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {DeltaPoly(std::move(quo)), DeltaPoly(std::move(rem))};
}

/// Quotient when b is known to divide a exactly (fraction-free elimination).
inline DeltaPoly poly_exact_div(const DeltaPoly& a, const DeltaPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline DeltaPoly poly_gcd(DeltaPoly a, DeltaPoly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Horner evaluation at delta = q.
inline Rational specialize(const DeltaPoly& p, const Rational& q) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

/// Renders like "δ^2 - 1", "-(1/2)δ + 3", "0".
inline std::string to_string(const DeltaPoly& p, const std::string& var = "δ") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long d = p.degree(); d >= 0; --d) {
    Rational c = p.coeffs()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mag;
    if (d == 0 || c != 1) {
      mag = c.get_den() == 1 || d == 0 ? c.get_str() : "(" + c.get_str() + ")";
    }
    out += mag;
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

class RatFunc {
 public:
  RatFunc() : den_(DeltaPoly::constant(1)) {}
  RatFunc(long v) : num_(DeltaPoly::constant(v)), den_(DeltaPoly::constant(1)) {}  // NOLINT
  RatFunc(const Rational& v) : num_(DeltaPoly::constant(v)), den_(DeltaPoly::constant(1)) {}  // NOLINT
  explicit RatFunc(DeltaPoly p) : num_(std::move(p)), den_(DeltaPoly::constant(1)) {}

  /// Reduces num/den to lowest terms with a monic denominator.
  static RatFunc normalize(DeltaPoly num, DeltaPoly den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    RatFunc r;
    if (num.is_zero()) return r;
    if (!den.is_constant()) {
      DeltaPoly g = poly_gcd(num, den);
      if (!g.is_one()) {
        num = poly_exact_div(num, g);
        den = poly_exact_div(den, g);
      }
    }
    const Rational lc = den.lead();
    if (lc != 1) {
      num = num.scaled(1 / lc);
      den = den.scaled(1 / lc);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  static RatFunc delta() { return RatFunc(DeltaPoly::delta()); }
  static RatFunc delta_pow(unsigned k) { return RatFunc(DeltaPoly::monomial(k)); }

  const DeltaPoly& num() const { return num_; }
  const DeltaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
      return normalize(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return RatFunc::raw(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return RatFunc::raw(a.num_ + b.num_ * a.den_, a.den_);
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    // Cross-cancel: a.num/b.den and b.num/a.den are each coprime pairs after reduction.
    DeltaPoly g1 = b.den_.is_one() ? DeltaPoly::constant(1) : poly_gcd(a.num_, b.den_);
    DeltaPoly g2 = a.den_.is_one() ? DeltaPoly::constant(1) : poly_gcd(b.num_, a.den_);
    DeltaPoly n1 = g1.is_one() ? a.num_ : poly_exact_div(a.num_, g1);
    DeltaPoly d2 = g1.is_one() ? b.den_ : poly_exact_div(b.den_, g1);
    DeltaPoly n2 = g2.is_one() ? b.num_ : poly_exact_div(b.num_, g2);
    DeltaPoly d1 = g2.is_one() ? a.den_ : poly_exact_div(a.den_, g2);
    DeltaPoly den = d1 * d2;
    DeltaPoly num = n1 * n2;
    const Rational lc = den.lead();
    if (lc != 1) {
      num = num.scaled(1 / lc);
      den = den.scaled(1 / lc);
    }
    return raw(std::move(num), std::move(den));
  }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    DeltaPoly n = den_, d = num_;
    const Rational lc = d.lead();
    return raw(n.scaled(1 / lc), d.scaled(1 / lc));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// Evaluation at delta = q; throws if q is a pole.
  Rational at(const Rational& q) const {
    Rational d = specialize(den_, q);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return specialize(num_, q) / d;
  }

 private:
  // Caller guarantees reduced form with monic denominator.
  static RatFunc raw(DeltaPoly num, DeltaPoly den) {
    RatFunc r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }
  DeltaPoly num_;
  DeltaPoly den_;
};

inline RatFunc ratfunc_normalize(const DeltaPoly& num, const DeltaPoly& den) {
  return RatFunc::normalize(num, den);
}

inline std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Field parameter: algorithms are templated on the scalar field, with the
// loop value delta carried alongside. A session uses exactly one field.

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

/// Loop parameter for one coefficient field. Generic mode keeps delta as an
/// indeterminate; numeric mode fixes delta = q in the rationals.
template <class F>
struct LoopParam;

template <>
struct LoopParam<RatFunc> {
  using Field = RatFunc;
  LoopParam() = default;
  Field delta_pow(unsigned k) const { return RatFunc::delta_pow(k); }
  Field delta() const { return RatFunc::delta(); }
  static constexpr bool generic = true;
  std::string describe() const { return "generic"; }
};

template <>
struct LoopParam<Rational> {
  using Field = Rational;
  LoopParam() : value(1) {}
  explicit LoopParam(Rational q) : value(std::move(q)) {}
  Field delta_pow(unsigned k) const {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= value;
    return r;
  }
  Field delta() const { return value; }
  static constexpr bool generic = false;
  std::string describe() const { return "delta=" + value.get_str(); }
  Rational value;
};

using Generic = LoopParam<RatFunc>;
using Numeric = LoopParam<Rational>;

}  // namespace tlcat
