#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superfrob/combinatorics.hpp"
#include "superfrob/error.hpp"

namespace sfrob {

using Rational = mpq_class;

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
// mpq_class(2, 2) is not reduced until asked.
inline Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

// ---- cyclotomic numbers ----

// Monic Phi_m, integer coefficients, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);
int euler_phi(int m);

// Element of Q(zeta_m), zeta = exp(2 pi i / m), stored mod Phi_m.
// Order 1 doubles as "plain rational" and promotes against any order.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r, int order = 1);
  static Cyclotomic zeta_power(int order, long e);

  int order() const { return order_; }
  // Coefficients of 1, zeta, ..., zeta^{phi(m)-1}.
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }
  Cyclotomic conj() const;
  Cyclotomic promoted(int order) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // "2*zeta^2 - zeta + 1/3", "0"
  std::string to_string() const;

 private:
  int order_;
  std::vector<Rational> c_;
};

inline const Cyclotomic& canonical(const Cyclotomic& c) { return c; }

inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }

// ---- variable universe ----

// Exponent slots: 0 -> q, 1..m -> Q_a, m+1..m+k+l -> z_i.
class PolyRing {
 public:
  explicit PolyRing(HookParams params);
  const HookParams& params() const { return params_; }
  int m() const { return params_.m(); }
  int nz() const { return params_.alphabet_size(); }
  int width() const { return 1 + m() + nz(); }
  int Q_slot(int a) const { return a; }
  int z_slot(Symbol s) const { return m() + s.value; }
  std::string slot_name(int slot) const;
  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.params_ == b.params_; }

 private:
  HookParams params_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
RingPtr make_ring(const HookParams& params);

using Exponent = std::vector<int>;

// Graded on x/y degree (high first), then x/y exponents lexicographically
// from z_1, then Q_1.., then q (high first). Printing follows this order.
struct TermOrder {
  int zstart = 1;
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = 0, db = 0;
    for (size_t i = zstart; i < a.size(); ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db;
    for (size_t i = zstart; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    for (int i = 1; i < zstart; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a[0] > b[0];
  }
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b))
    throw ParameterError("polynomials live in different variable universes (" + a->params().to_string() + " vs " +
                         b->params().to_string() + ")");
}

template <class Coeff>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Coeff, TermOrder>;

  explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)), terms_(TermOrder{1 + ring_->m()}) {}

  static SparsePoly constant(RingPtr ring, const Coeff& c) {
    SparsePoly p(ring);
    p.add_term(Exponent(ring->width(), 0), c);
    return p;
  }
  static SparsePoly monomial(RingPtr ring, Exponent e, const Coeff& c) {
    if (static_cast<int>(e.size()) != ring->width()) throw ParameterError("exponent vector has wrong width");
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] < 0) throw ParameterError("only q may carry a negative exponent");
    SparsePoly p(ring);
    p.add_term(e, c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(e, canonical(c));
    if (!fresh) {
      it->second += canonical(c);
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r(a.ring_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_same_ring(a.ring_, b.ring_);
    SparsePoly r(a.ring_);
    Exponent e(a.ring_->width());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const Coeff& s) const {
    SparsePoly r(ring_);
    if (coeff_is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(ring_, Coeff(1));
    SparsePoly base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  // True when no term carries an x/y variable.
  bool is_scalar_in_z() const {
    for (const auto& [e, c] : terms_)
      for (int i = 1 + ring_->m(); i < ring_->width(); ++i)
        if (e[i]) return false;
    return true;
  }
  // Total x/y degree of every term, or nullopt when mixed.
  std::optional<int> z_degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int i = 1 + ring_->m(); i < ring_->width(); ++i) s += e[i];
      if (d && *d != s) return std::nullopt;
      d = s;
    }
    return d ? d : std::optional<int>(0);
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    check_same_ring(a.ring_, b.ring_);
    return a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  Terms terms_;
};

using MPoly = SparsePoly<Rational>;
using CycPoly = SparsePoly<Cyclotomic>;

// Builders.
MPoly mp_constant(const RingPtr& ring, const Rational& c);
MPoly mp_q(const RingPtr& ring, int e = 1);
MPoly mp_Q(const RingPtr& ring, int a, int e = 1);
MPoly mp_z(const RingPtr& ring, Symbol s, int e = 1);

// x/y part of an exponent (length k+l).
std::vector<int> z_part(const PolyRing& ring, const Exponent& e);
// Sum of terms whose x/y part equals zmono, divided by it (q, Q only).
MPoly coefficient_of(const MPoly& p, const std::vector<int>& zmono);
// Distinct x/y monomials, in term order.
std::vector<std::vector<int>> z_monomials(const MPoly& p);
// q -> 1, Q_a -> zeta^a (zeta primitive m-th root).
CycPoly specialize(const MPoly& p);
CycPoly lift(const MPoly& p);
CycPoly conj(const CycPoly& p);

std::string to_string(const MPoly& p);
std::string to_string(const CycPoly& p);
MPoly parse_mpoly(std::string_view text, const RingPtr& ring);

nlohmann::json to_json(const MPoly& p);
nlohmann::json to_json(const CycPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j, const RingPtr& ring);

std::string to_string(const Rational& r);

}  // namespace sfrob
