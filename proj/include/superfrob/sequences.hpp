#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superfrob/combinatorics.hpp"
#include "superfrob/exactalg.hpp"

namespace sfrob {

using SymbolSpan = std::span<const Symbol>;

class ParitySequence {
 public:
  ParitySequence(HookParams params, std::vector<Symbol> symbols);
  // "1,3,2" or "x1.1,y2.3" (per-color names) or "x1,y2" (global names).
  static ParitySequence parse(std::string_view text, const HookParams& params);

  const HookParams& params() const { return params_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  SymbolSpan span() const { return symbols_; }
  int length() const { return static_cast<int>(symbols_.size()); }
  // 1-based position.
  Parity parity(int pos) const { return params_.parity(symbols_.at(pos - 1)); }
  int color(int pos) const { return params_.color(symbols_.at(pos - 1)); }
  int count(Parity p) const;
  // Color of the largest symbol; the sequence must be nonempty.
  int max_color() const;

  std::string to_string() const;
  std::string to_names() const;

 private:
  HookParams params_;
  std::vector<Symbol> symbols_;
};

// sign * q^qexp
struct SignedQPower {
  int sign = 1;
  int qexp = 0;
  SignedQPower& operator*=(SignedQPower o) {
    sign *= o.sign;
    qexp += o.qexp;
    return *this;
  }
};

// Factor of an adjacent pair: ascent keyed by the left letter's parity
// (even -> -q^-1, odd -> q); weak descent keyed by the right letter's
// (even -> q, odd -> -q^-1).
SignedQPower pair_factor(Symbol left, Symbol right, const HookParams& params);

// 1-based peak position; throws on an empty row.
std::optional<int> updown_peak(SymbolSpan row);
// nullopt when the row is not up-down.
std::optional<SignedQPower> row_weight_raw(SymbolSpan row, const HookParams& params);
MPoly row_weight(SymbolSpan row, const RingPtr& ring);

MPoly mu_weight_sequence(SymbolSpan seq, const Multipartition& mu, const RingPtr& ring);
// (-1)^{#odd} * prod z_i
MPoly z_monomial(SymbolSpan seq, const RingPtr& ring);

// Weakly increasing sequence as exponents per symbol.
class SortedComposition {
 public:
  SortedComposition(HookParams params, std::vector<int> exponents);
  static SortedComposition from_sequence(SymbolSpan seq, const HookParams& params);

  const HookParams& params() const { return params_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(Symbol s) const { return exps_.at(s.value - 1); }
  int t() const { return t_; }
  // alpha = even exponents, beta = odd exponents.
  int alpha_size() const { return alpha_size_; }
  int beta_size() const { return t_ - alpha_size_; }
  int alpha_length() const { return alpha_len_; }
  int beta_length() const { return beta_len_; }
  int length() const { return alpha_len_ + beta_len_; }
  // Largest color touched; 0 for t=0.
  int top_color() const;
  std::vector<Symbol> to_sequence() const;
  // (-q^-1)^{|b|-l(b)} q^{|a|-l(a)} (q-q^-1)^{l(a;b)-1}; throws for t=0.
  MPoly prefactor(const RingPtr& ring) const;
  std::string to_string() const;

 private:
  HookParams params_;
  std::vector<int> exps_;
  int t_ = 0, alpha_size_ = 0, alpha_len_ = 0, beta_len_ = 0;
};

// All weak compositions of t over the k+l symbols.
std::vector<SortedComposition> compositions(int t, const HookParams& params);

struct PermutationSumReport {
  bool pass = false;
  MPoly lhs;
  MPoly rhs;
  std::uint64_t arrangements = 0;
};
PermutationSumReport permutation_sum_check(const SortedComposition& sorted, const RingPtr& ring);

// Calls f for every word of length n over 1..alphabet, lexicographically.
void for_each_word(int n, int alphabet, const std::function<void(SymbolSpan)>& f);
std::uint64_t word_count(int n, int alphabet);

}  // namespace sfrob
