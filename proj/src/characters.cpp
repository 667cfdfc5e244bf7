#include "superfrob/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "superfrob/superfunctions.hpp"

namespace sfrob {

HookParams default_params(int m, int n) { return HookParams::uniform(m, n, n); }

std::string to_string(Provenance p) { return p == Provenance::rsk ? "rsk" : "oracle"; }

namespace {

void guard_table(int m, int n, const Limits& limits) {
  const auto count = count_multipartitions(n, m);
  if (count > limits.multipartitions)
    throw GuardRefusal("|P_{" + std::to_string(m) + "," + std::to_string(n) + "}| = " + std::to_string(count) +
                       " exceeds " + std::to_string(limits.multipartitions));
}

// Certify up front so later tableau_weight calls hit the cache under the caller's bound.
void certify_or_refuse(int n, const HookParams& params, Strategy strategy, const Limits& limits) {
  if (strategy != Strategy::corrected) return;  // tableau_weight reports it
  if (!CertificationCache::global().certify(n, params, strategy, limits.sequences))
    throw UncertifiedStrategy("strategy '" + to_string(strategy) + "' failed verify_bijection at n=" +
                              std::to_string(n) + " for " + params.to_string());
}

void check_sizes(const Multipartition& lambda, const Multipartition& mu, const RingPtr& ring) {
  if (lambda.m() != ring->m() || mu.m() != ring->m()) throw ParameterError("multipartition m differs from params");
  if (lambda.size() != mu.size()) throw ParameterError("|lambda| differs from |mu|");
}

std::string first_term(const MPoly& p) {
  if (p.is_zero()) return "";
  MPoly lead(p.ring());
  lead.add_term(p.terms().begin()->first, p.terms().begin()->second);
  return to_string(lead);
}

}  // namespace

MPoly char_rsk(const Multipartition& lambda, const Multipartition& mu, const RingPtr& ring, Strategy strategy,
               CertificationCache& cache) {
  check_sizes(lambda, mu, ring);
  MPoly sum(ring);
  for (const auto& T : standard_tableaux(lambda)) sum += tableau_weight(T, mu, ring, strategy, cache);
  return sum;
}

std::vector<MPoly> char_oracle(const Multipartition& mu, const RingPtr& ring) {
  if (mu.m() != ring->m()) throw ParameterError("mu has the wrong number of components");
  const auto labels = enumerate_multipartitions(mu.size(), ring->m());
  const size_t L = labels.size();

  // A[zmono][lambda] = coefficient of zmono in S_lambda
  std::map<std::vector<int>, std::vector<Rational>> A;
  for (size_t j = 0; j < L; ++j) {
    const MPoly s = schur_super(labels[j], ring);
    for (const auto& [e, c] : s.terms()) {
      auto& row = A.try_emplace(z_part(*ring, e), std::vector<Rational>(L, 0)).first->second;
      row[j] += c;
    }
  }
  std::map<std::vector<int>, MPoly> b;
  const int zs = 1 + ring->m();
  const MPoly target = q_mu(mu, ring);
  for (const auto& [e, c] : target.terms()) {
    auto z = z_part(*ring, e);
    A.try_emplace(z, std::vector<Rational>(L, 0));
    Exponent f = e;
    std::fill(f.begin() + zs, f.end(), 0);
    b.try_emplace(z, MPoly(ring)).first->second.add_term(f, c);
  }
  auto rhs = [&](const std::vector<int>& z) { auto it = b.find(z); return it == b.end() ? MPoly(ring) : it->second; };

  // pick L independent monomial rows
  std::vector<std::vector<int>> chosen;
  std::vector<std::pair<size_t, std::vector<Rational>>> basis;
  for (const auto& [z, row] : A) {
    if (chosen.size() == L) break;
    std::vector<Rational> v = row;
    for (const auto& [pc, bv] : basis)
      if (sgn(v[pc]) != 0) {
        Rational f = v[pc];
        for (size_t j = 0; j < L; ++j) v[j] -= f * bv[j];
      }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& r) { return sgn(r) != 0; });
    if (nz == v.end()) continue;
    size_t pc = nz - v.begin();
    Rational inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    basis.emplace_back(pc, std::move(v));
    chosen.push_back(z);
  }
  if (chosen.size() < L)
    throw RankDeficiency("Schur coefficient matrix for " + ring->params().to_string() + ", n=" +
                         std::to_string(mu.size()) + " has rank " + std::to_string(chosen.size()) + " < " +
                         std::to_string(L));

  // Gauss-Jordan on [M | b]
  std::vector<std::vector<Rational>> M;
  std::vector<MPoly> y;
  for (const auto& z : chosen) {
    M.push_back(A.at(z));
    y.push_back(rhs(z));
  }
  for (size_t col = 0; col < L; ++col) {
    size_t piv = col;
    while (piv < L && sgn(M[piv][col]) == 0) ++piv;
    if (piv == L) throw RankDeficiency("singular pivot block");
    std::swap(M[piv], M[col]);
    std::swap(y[piv], y[col]);
    Rational inv = 1 / M[col][col];
    for (auto& x : M[col]) x *= inv;
    y[col] = y[col].scaled(inv);
    for (size_t r = 0; r < L; ++r) {
      if (r == col || sgn(M[r][col]) == 0) continue;
      Rational f = M[r][col];
      for (size_t j = 0; j < L; ++j) M[r][j] -= f * M[col][j];
      y[r] -= y[col].scaled(f);
    }
  }

  // every monomial row must be satisfied
  for (const auto& [z, row] : A) {
    MPoly lhs(ring);
    for (size_t j = 0; j < L; ++j)
      if (sgn(row[j]) != 0) lhs += y[j].scaled(row[j]);
    if (!(lhs == rhs(z)))
      throw RankDeficiency("q_mu for mu=" + mu.to_string() + " is not in the span of the Schur functions");
  }
  return y;
}

CharacterTable character_table_rsk(int m, int n, const HookParams& params, Strategy strategy, const Limits& limits) {
  guard_table(m, n, limits);
  if (params.m() != m) throw ParameterError("params have the wrong m");
  certify_or_refuse(n, params, strategy, limits);
  CharacterTable t;
  t.m = m;
  t.n = n;
  t.params = params;
  t.strategy = strategy;
  t.provenance = Provenance::rsk;
  t.labels = enumerate_multipartitions(n, m);
  RingPtr ring = make_ring(params);
  for (const auto& lam : t.labels) {
    std::vector<MPoly> row;
    for (const auto& mu : t.labels) row.push_back(char_rsk(lam, mu, ring, strategy));
    t.entries.push_back(std::move(row));
  }
  return t;
}

CharacterTable character_table_oracle(int m, int n, const HookParams& params, const Limits& limits) {
  guard_table(m, n, limits);
  if (params.m() != m) throw ParameterError("params have the wrong m");
  CharacterTable t;
  t.m = m;
  t.n = n;
  t.params = params;
  t.provenance = Provenance::oracle;
  t.labels = enumerate_multipartitions(n, m);
  RingPtr ring = make_ring(params);
  const size_t L = t.labels.size();
  t.entries.assign(L, std::vector<MPoly>(L, MPoly(ring)));
  for (size_t j = 0; j < L; ++j) {
    auto col = char_oracle(t.labels[j], ring);
    for (size_t i = 0; i < L; ++i) t.entries[i][j] = col[i];
  }
  return t;
}

Rational centralizer_order(const Multipartition& mu) {
  const int m = mu.m();
  mpz_class z = 1;
  for (const auto& p : mu.components()) {
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    for (auto [j, k] : mult) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), k);
      mpz_class base = static_cast<long>(j) * m, pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), k);
      z *= f * pw;
    }
  }
  return Rational(z);
}

SpecializedTable specialize_table(const CharacterTable& table) {
  SpecializedTable s;
  s.m = table.m;
  s.n = table.n;
  s.labels = table.labels;
  for (const auto& row : table.entries) {
    std::vector<Cyclotomic> out;
    for (const auto& e : row) {
      if (!e.is_scalar_in_z()) throw ParameterError("character entry carries x/y variables");
      CycPoly c = specialize(e);
      Cyclotomic v(Rational(0), table.m);
      if (!c.is_zero()) v = c.terms().begin()->second.promoted(table.m);
      out.push_back(v);
    }
    s.entries.push_back(std::move(out));
  }
  return s;
}

namespace {

template <class Cell>
std::string aligned(const std::vector<Multipartition>& labels, const std::vector<std::vector<Cell>>& cells,
                    const std::string& corner) {
  const size_t L = labels.size();
  std::vector<std::vector<std::string>> grid(L + 1, std::vector<std::string>(L + 1));
  grid[0][0] = corner;
  for (size_t i = 0; i < L; ++i) {
    grid[0][i + 1] = labels[i].to_string();
    grid[i + 1][0] = labels[i].to_string();
    for (size_t j = 0; j < L; ++j) grid[i + 1][j + 1] = cells[i][j];
  }
  std::vector<size_t> width(L + 1, 0);
  for (const auto& row : grid)
    for (size_t j = 0; j <= L; ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (size_t j = 0; j <= L; ++j) {
      line += row[j];
      if (j < L) line += std::string(width[j] - row[j].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json labs = nlohmann::json::array(), rows = nlohmann::json::array();
  for (const auto& l : labels) labs.push_back(l.to_string());
  for (const auto& row : entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(sfrob::to_string(e));
    rows.push_back(r);
  }
  return {{"kind", "character_table"}, {"m", m}, {"n", n}, {"params", params.to_string()},
          {"strategy", sfrob::to_string(strategy)}, {"provenance", sfrob::to_string(provenance)},
          {"labels", labs}, {"entries", rows}};
}

std::string CharacterTable::to_text() const {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : entries) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(sfrob::to_string(e));
    cells.push_back(std::move(r));
  }
  return aligned(labels, cells, "lambda\\mu");
}

nlohmann::json SpecializedTable::to_json() const {
  nlohmann::json labs = nlohmann::json::array(), rows = nlohmann::json::array();
  for (const auto& l : labels) labs.push_back(l.to_string());
  for (const auto& row : entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return {{"kind", "specialized_table"}, {"m", m}, {"n", n}, {"zeta_order", m}, {"labels", labs}, {"entries", rows}};
}

std::string SpecializedTable::to_text() const {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : entries) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e.to_string());
    cells.push_back(std::move(r));
  }
  return aligned(labels, cells, "lambda\\mu");
}

bool FrobeniusReport::pass() const {
  if (results.empty()) return false;
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.identity && r.routes_agree; });
}

nlohmann::json FrobeniusReport::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : results)
    rs.push_back({{"mu", r.mu.to_string()}, {"identity", r.identity}, {"routes_agree", r.routes_agree},
                  {"first_difference", r.first_difference}});
  return {{"suite", "frobenius"}, {"m", m}, {"n", n}, {"params", params.to_string()},
          {"strategy", sfrob::to_string(strategy)}, {"pass", pass()}, {"results", rs}};
}

FrobeniusReport verify_frobenius(int m, int n, const HookParams& params, Strategy strategy, const Limits& limits) {
  guard_table(m, n, limits);
  if (params.m() != m) throw ParameterError("params have the wrong m");
  certify_or_refuse(n, params, strategy, limits);
  FrobeniusReport rep;
  rep.m = m;
  rep.n = n;
  rep.params = params;
  rep.strategy = strategy;
  RingPtr ring = make_ring(params);
  const auto labels = enumerate_multipartitions(n, m);
  std::vector<MPoly> schur;
  for (const auto& lam : labels) schur.push_back(schur_super(lam, ring));
  for (const auto& mu : labels) {
    FrobeniusMuResult r;
    r.mu = mu;
    MPoly sum(ring);
    std::vector<MPoly> chi;
    for (size_t i = 0; i < labels.size(); ++i) {
      chi.push_back(char_rsk(labels[i], mu, ring, strategy));
      sum += chi.back() * schur[i];
    }
    MPoly diff = q_mu(mu, ring) - sum;
    r.identity = diff.is_zero();
    if (!r.identity) r.first_difference = "q_mu - sum: " + first_term(diff);
    auto oracle = char_oracle(mu, ring);
    r.routes_agree = true;
    for (size_t i = 0; i < labels.size(); ++i)
      if (!(oracle[i] == chi[i])) {
        r.routes_agree = false;
        if (r.first_difference.empty())
          r.first_difference = "lambda=" + labels[i].to_string() + ": rsk " + to_string(chi[i]) + " vs oracle " +
                               to_string(oracle[i]);
        break;
      }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

DimensionReport verify_dimension_identity(int m, int n, const HookParams& params, Strategy strategy,
                                          const Limits& limits) {
  if (params.m() != m) throw ParameterError("params have the wrong m");
  for (int c = 1; c <= m; ++c)
    if (params.k(c) + params.l(c) != n) throw ParameterError("dimension identity needs k_c + l_c = n in every color");
  DimensionReport rep;
  rep.m = m;
  rep.n = n;
  std::uint64_t fact = 1, mpow = 1;
  for (int i = 1; i <= n; ++i) {
    fact *= i;
    mpow *= m;
  }
  rep.expected = fact * mpow;
  if (rep.expected > limits.sequences) throw GuardRefusal("n! m^n exceeds the enumeration bound");

  std::set<std::pair<HookTableau, StandardTableau>> images;
  std::map<Multipartition, std::uint64_t> per_shape;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Symbol> word(n);
  do {
    for_each_word(n, m, [&](SymbolSpan colors) {
      for (int j = 0; j < n; ++j) word[j] = Symbol(params.block_start(colors[j].value) + perm[j]);
      ++rep.sequences;
      auto pr = rsk_pair(word, params, strategy);
      ++per_shape[pr.second.shape()];
      images.insert(std::move(pr));
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.distinct_images = images.size();
  rep.per_shape_ok = true;
  for (const auto& lam : enumerate_multipartitions(n, m)) {
    if (!is_hook(lam, params)) continue;
    const std::uint64_t d = count_standard_tableaux(lam);
    rep.sum_d_squared += d * d;
    auto it = per_shape.find(lam);
    if ((it == per_shape.end() ? 0 : it->second) != d * d) rep.per_shape_ok = false;
  }
  return rep;
}

}  // namespace sfrob
