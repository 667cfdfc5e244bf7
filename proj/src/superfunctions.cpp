#include "superfrob/superfunctions.hpp"

#include <map>
#include <mutex>

namespace sfrob {

MPoly power_sum_color(int t, int color, const RingPtr& ring) {
  if (t < 1) throw ParameterError("power sum degree must be positive");
  const HookParams& params = ring->params();
  if (color < 1 || color > params.m()) throw ParameterError("color out of range");
  MPoly r(ring);
  for (int v = params.block_start(color) + 1; v <= params.block_end(color); ++v) {
    Symbol s(v);
    MPoly z = mp_z(ring, s, t);
    if (params.is_even(s)) r += z;
    else r -= z;
  }
  return r;
}

MPoly power_sum(int t, const RingPtr& ring) {
  MPoly r(ring);
  for (int c = 1; c <= ring->m(); ++c) r += power_sum_color(t, c, ring);
  return r;
}

CycPoly P_t(int t, int i, const RingPtr& ring) {
  const int m = ring->m();
  CycPoly r(ring);
  for (int j = 1; j <= m; ++j) {
    Cyclotomic w = Cyclotomic::zeta_power(m, -static_cast<long>(i) * j);
    r += lift(power_sum_color(t, j, ring)).scaled(w);
  }
  return r;
}

CycPoly P_mu(const Multipartition& mu, const RingPtr& ring) {
  if (mu.m() != ring->m()) throw ParameterError("mu has the wrong number of components");
  CycPoly r = CycPoly::constant(ring, Cyclotomic(Rational(1), ring->m()));
  for (int i = 1; i <= mu.m(); ++i)
    for (int len : mu.component(i).parts()) r *= P_t(len, i, ring);
  return r;
}

MPoly schur_super(const Multipartition& shape, const RingPtr& ring) {
  const HookParams& params = ring->params();
  MPoly r(ring);
  for (const auto& tab : hook_tableaux(shape, params)) {
    Exponent e(ring->width(), 0);
    int sign = 1;
    for (const auto& rows : tab.components())
      for (const auto& row : rows)
        for (Symbol s : row) {
          ++e[ring->z_slot(s)];
          if (!params.is_even(s)) sign = -sign;
        }
    r.add_term(e, Rational(sign));
  }
  return r;
}

MPoly tilde_q(const SortedComposition& sorted, const RingPtr& ring) {
  if (!(sorted.params() == ring->params())) throw ParameterError("composition params differ from the ring");
  return sorted.prefactor(ring) * z_monomial(sorted.to_sequence(), ring);
}

namespace {
// q_t^{(a)} is reused heavily by q_mu; cache per (params, t, a).
std::mutex cache_mutex;
std::map<std::tuple<std::string, int, int>, MPoly> cache;
}  // namespace

MPoly q_t_a(int t, int a, const RingPtr& ring) {
  if (t < 1) throw ParameterError("q_t needs t >= 1");
  if (a < 1 || a > ring->m()) throw ParameterError("color exponent out of range");
  auto key = std::make_tuple(ring->params().to_string(), t, a);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end() && *it->second.ring() == *ring) {
      MPoly hit(ring);
      hit += it->second;
      return hit;
    }
  }
  MPoly r(ring);
  for (const auto& comp : compositions(t, ring->params()))
    r += tilde_q(comp, ring) * mp_Q(ring, comp.top_color(), a);
  std::lock_guard lock(cache_mutex);
  cache.insert_or_assign(key, r);
  return r;
}

MPoly q_mu(const Multipartition& mu, const RingPtr& ring) {
  if (mu.m() != ring->m()) throw ParameterError("mu has the wrong number of components");
  MPoly r = mp_constant(ring, 1);
  for (int i = 1; i <= mu.m(); ++i)
    for (int len : mu.component(i).parts()) r *= q_t_a(len, i, ring);
  return r;
}

}  // namespace sfrob
