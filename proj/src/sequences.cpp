#include "superfrob/sequences.hpp"

#include <algorithm>
#include <limits>

namespace sfrob {

ParitySequence::ParitySequence(HookParams params, std::vector<Symbol> symbols)
    : params_(std::move(params)), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_) params_.check(s);
}

ParitySequence ParitySequence::parse(std::string_view text, const HookParams& params) {
  std::vector<Symbol> out;
  size_t start = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trimmed(text).empty()) return ParitySequence(params, {});
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(params.parse_symbol_name(trimmed(text.substr(start, i - start))));
      start = i + 1;
    }
  }
  return ParitySequence(params, std::move(out));
}

int ParitySequence::count(Parity p) const {
  return static_cast<int>(
      std::count_if(symbols_.begin(), symbols_.end(), [&](Symbol s) { return params_.parity(s) == p; }));
}

int ParitySequence::max_color() const {
  if (symbols_.empty()) throw ParameterError("empty sequence has no maximum");
  return params_.color(*std::max_element(symbols_.begin(), symbols_.end()));
}

std::string ParitySequence::to_string() const {
  std::string s;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(symbols_[i].value);
  }
  return s;
}

std::string ParitySequence::to_names() const {
  std::string s;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s += ',';
    s += params_.symbol_name(symbols_[i]);
  }
  return s;
}

SignedQPower pair_factor(Symbol left, Symbol right, const HookParams& params) {
  static constexpr SignedQPower minus_qinv{-1, -1}, plus_q{1, 1};
  if (left < right) return params.is_even(left) ? minus_qinv : plus_q;
  return params.is_even(right) ? plus_q : minus_qinv;
}

std::optional<int> updown_peak(SymbolSpan row) {
  if (row.empty()) throw ParameterError("up-down test on an empty row");
  size_t p = 0;
  while (p + 1 < row.size() && row[p] < row[p + 1]) ++p;
  for (size_t j = p; j + 1 < row.size(); ++j)
    if (row[j] < row[j + 1]) return std::nullopt;
  return static_cast<int>(p) + 1;
}

std::optional<SignedQPower> row_weight_raw(SymbolSpan row, const HookParams& params) {
  if (!updown_peak(row)) return std::nullopt;
  SignedQPower w;
  for (size_t j = 0; j + 1 < row.size(); ++j) w *= pair_factor(row[j], row[j + 1], params);
  return w;
}

MPoly row_weight(SymbolSpan row, const RingPtr& ring) {
  for (Symbol s : row) ring->params().check(s);
  auto w = row_weight_raw(row, ring->params());
  if (!w) return MPoly(ring);
  return mp_q(ring, w->qexp).scaled(Rational(w->sign));
}

MPoly mu_weight_sequence(SymbolSpan seq, const Multipartition& mu, const RingPtr& ring) {
  const HookParams& params = ring->params();
  if (static_cast<int>(seq.size()) != mu.size())
    throw ParameterError("sequence length " + std::to_string(seq.size()) + " differs from |mu| = " +
                         std::to_string(mu.size()));
  if (mu.m() != params.m()) throw ParameterError("mu has the wrong number of components");
  for (Symbol s : seq) params.check(s);
  SignedQPower total;
  Exponent e(ring->width(), 0);
  size_t pos = 0;
  for (int c = 1; c <= mu.m(); ++c)
    for (int len : mu.component(c).parts()) {
      SymbolSpan row = seq.subspan(pos, len);
      pos += len;
      auto w = row_weight_raw(row, params);
      if (!w) return MPoly(ring);
      total *= *w;
      e[ring->Q_slot(params.color(*std::max_element(row.begin(), row.end())))] += c;
    }
  e[0] = total.qexp;
  return MPoly::monomial(ring, e, Rational(total.sign));
}

MPoly z_monomial(SymbolSpan seq, const RingPtr& ring) {
  const HookParams& params = ring->params();
  Exponent e(ring->width(), 0);
  int sign = 1;
  for (Symbol s : seq) {
    params.check(s);
    ++e[ring->z_slot(s)];
    if (!params.is_even(s)) sign = -sign;
  }
  return MPoly::monomial(ring, e, Rational(sign));
}

// ---- SortedComposition ----

SortedComposition::SortedComposition(HookParams params, std::vector<int> exponents)
    : params_(std::move(params)), exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != params_.alphabet_size())
    throw ParameterError("composition length differs from the alphabet size");
  for (int v = 1; v <= params_.alphabet_size(); ++v) {
    int e = exps_[v - 1];
    if (e < 0) throw ParameterError("negative exponent in composition");
    t_ += e;
    if (params_.is_even(Symbol(v))) {
      alpha_size_ += e;
      alpha_len_ += e > 0;
    } else {
      beta_len_ += e > 0;
    }
  }
}

SortedComposition SortedComposition::from_sequence(SymbolSpan seq, const HookParams& params) {
  std::vector<int> e(params.alphabet_size(), 0);
  for (Symbol s : seq) {
    params.check(s);
    ++e[s.value - 1];
  }
  return SortedComposition(params, std::move(e));
}

int SortedComposition::top_color() const {
  for (int v = params_.alphabet_size(); v >= 1; --v)
    if (exps_[v - 1]) return params_.color(Symbol(v));
  return 0;
}

std::vector<Symbol> SortedComposition::to_sequence() const {
  std::vector<Symbol> out;
  for (int v = 1; v <= params_.alphabet_size(); ++v) out.insert(out.end(), exps_[v - 1], Symbol(v));
  return out;
}

MPoly SortedComposition::prefactor(const RingPtr& ring) const {
  if (t_ == 0) throw ParameterError("tilde-q prefactor is undefined at t = 0");
  MPoly r = mp_q(ring, -(beta_size() - beta_len_)).scaled(Rational((beta_size() - beta_len_) % 2 ? -1 : 1));
  r = r * mp_q(ring, alpha_size_ - alpha_len_);
  MPoly diff = mp_q(ring, 1) - mp_q(ring, -1);
  return r * diff.pow(static_cast<unsigned>(length() - 1));
}

std::string SortedComposition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[i]);
  }
  return s + ")";
}

std::vector<SortedComposition> compositions(int t, const HookParams& params) {
  if (t < 0) throw ParameterError("t must be nonnegative");
  const int n = params.alphabet_size();
  std::vector<SortedComposition> out;
  if (n == 0) {
    if (t == 0) out.emplace_back(params, std::vector<int>{});
    return out;
  }
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == n - 1) {
      e[i] = rest;
      out.emplace_back(params, e);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, rest - v);
    }
  };
  rec(0, t);
  return out;
}

PermutationSumReport permutation_sum_check(const SortedComposition& sorted, const RingPtr& ring) {
  PermutationSumReport rep{false, MPoly(ring), sorted.prefactor(ring), 0};
  std::vector<Symbol> w = sorted.to_sequence();
  do {
    rep.lhs += row_weight(w, ring);
    ++rep.arrangements;
  } while (std::next_permutation(w.begin(), w.end()));
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

void for_each_word(int n, int alphabet, const std::function<void(SymbolSpan)>& f) {
  if (n < 0) throw ParameterError("word length must be nonnegative");
  if (n > 0 && alphabet <= 0) return;
  std::vector<Symbol> w(n, Symbol(1));
  for (;;) {
    f(w);
    int i = n - 1;
    while (i >= 0 && w[i].value == alphabet) {
      w[i] = Symbol(1);
      --i;
    }
    if (i < 0) return;
    ++w[i].value;
  }
}

std::uint64_t word_count(int n, int alphabet) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / std::max(alphabet, 1)) return std::numeric_limits<std::uint64_t>::max();
    c *= static_cast<std::uint64_t>(alphabet);
  }
  return c;
}

}  // namespace sfrob
