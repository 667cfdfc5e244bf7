#pragma once

#include "superfrob/combinatorics.hpp"
#include "superfrob/exactalg.hpp"
#include "superfrob/sequences.hpp"

namespace sfrob {

// p_t(x/y) summed over all colors.
MPoly power_sum(int t, const RingPtr& ring);
// p_t(x^{(c)}/y^{(c)}).
MPoly power_sum_color(int t, int color, const RingPtr& ring);
// P_t^{(i)} = sum_j zeta^{-ij} p_t(x^{(j)}/y^{(j)}).
CycPoly P_t(int t, int i, const RingPtr& ring);
// Product of P_{mu^{(i)}_j}^{(i)} over all rows.
CycPoly P_mu(const Multipartition& mu, const RingPtr& ring);

// Signed tableau sum; zero for non-hook shapes.
MPoly schur_super(const Multipartition& shape, const RingPtr& ring);

// prefactor * x^alpha (-y)^beta
MPoly tilde_q(const SortedComposition& sorted, const RingPtr& ring);
MPoly q_t_a(int t, int a, const RingPtr& ring);
// Product over all rows of all components: row of component i contributes q^{(i)}_{len}.
MPoly q_mu(const Multipartition& mu, const RingPtr& ring);

}  // namespace sfrob
