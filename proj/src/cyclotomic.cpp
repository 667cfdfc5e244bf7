#include <mutex>

#include "superfrob/exactalg.hpp"

namespace sfrob {

namespace {

// Quotient of a by monic b, both constant term first, exact over Z.
std::vector<long> divide_monic(std::vector<long> a, const std::vector<long>& b) {
  const size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    long c = a[i];
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

std::mutex& phi_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw ParameterError("cyclotomic order must be positive");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(phi_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(phi_mutex());
  return cache.emplace(m, std::move(p)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

Cyclotomic::Cyclotomic(const Rational& r, int order) : order_(order), c_(euler_phi(order)) {
  c_[0] = canonical(r);
}

Cyclotomic Cyclotomic::zeta_power(int order, long e) {
  Cyclotomic z(Rational(0), order);
  long r = ((e % order) + order) % order;
  // reduce x^r mod Phi_m
  const auto& phi = cyclotomic_polynomial(order);
  const size_t deg = phi.size() - 1;
  std::vector<Rational> v(std::max<size_t>(r + 1, deg), 0);
  v[r] = 1;
  for (size_t i = v.size(); i-- > deg;) {
    if (sgn(v[i]) == 0) continue;
    Rational c = v[i];
    for (size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi[j];
  }
  for (size_t i = 0; i < deg; ++i) z.c_[i] = v[i];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::promoted(int order) const {
  if (order == order_) return *this;
  if (order_ != 1) throw ParameterError("cannot mix cyclotomic orders " + std::to_string(order_) + " and " +
                                        std::to_string(order));
  return Cyclotomic(c_[0], order);
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(Rational(0), order_);
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) r += Cyclotomic::zeta_power(order_, -static_cast<long>(i)) * Cyclotomic(c_[i], order_);
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    if (order_ == 1) *this = promoted(o.order_);
    else return *this += o.promoted(order_);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    if (order_ == 1) *this = promoted(o.order_);
    else return *this *= o.promoted(order_);
  }
  const auto& phi = cyclotomic_polynomial(order_);
  const size_t deg = phi.size() - 1;
  std::vector<Rational> v(2 * deg - 1, 0);
  for (size_t i = 0; i < deg; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < deg; ++j) v[i + j] += c_[i] * o.c_[j];
  }
  for (size_t i = v.size(); i-- > deg;) {
    if (sgn(v[i]) == 0) continue;
    Rational c = v[i];
    for (size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phi[j];
  }
  for (size_t i = 0; i < deg; ++i) c_[i] = v[i];
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1) return a.promoted(b.order_).c_ == b.c_;
  if (b.order_ == 1) return a.c_ == b.promoted(a.order_).c_;
  return a.is_zero() && b.is_zero();
}

std::string Cyclotomic::to_string() const {
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    std::string body;
    if (i == 0) body = sfrob::to_string(a);
    else {
      body = i == 1 ? "zeta" : "zeta^" + std::to_string(i);
      if (a != 1) body = sfrob::to_string(a) + "*" + body;
    }
    if (s.empty()) s = sgn(c) < 0 ? "-" + body : body;
    else s += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return s.empty() ? "0" : s;
}

}  // namespace sfrob
