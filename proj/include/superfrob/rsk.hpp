#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superfrob/combinatorics.hpp"
#include "superfrob/exactalg.hpp"
#include "superfrob/limits.hpp"
#include "superfrob/sequences.hpp"

namespace sfrob {

// literal: evens column-insert, odds row-insert, both bumping the smallest
//   entry >=; a displaced even moves one column right, a displaced odd
//   row-inserts from the first row (from a row: one row down).
// corrected: odd letters are first reflected inside their color block
//   (y_b -> y_{l+1-b}); then every letter column-inserts, evens bumping the
//   smallest entry >=, odds the smallest entry >, displaced letters moving one
//   column right. S is kept in the reflected alphabet.
enum class Strategy { literal, corrected };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct InsertionStep {
  Symbol symbol;
  std::vector<Box> bump_chain;  // boxes whose occupants were displaced, in order
  Box new_box;
  Multipartition shape;         // after this step
};

struct InsertionTrace {
  HookParams params;
  Strategy strategy = Strategy::corrected;
  std::vector<Symbol> word;
  std::vector<InsertionStep> steps;
  HookTableau S;
  StandardTableau T;
};

InsertionTrace insert_sequence(SymbolSpan word, const HookParams& params, Strategy strategy);
std::pair<HookTableau, StandardTableau> rsk_pair(SymbolSpan word, const HookParams& params, Strategy strategy);
// Inverse of the corrected strategy; throws ParameterError when (S,T) is not an image.
std::vector<Symbol> reverse_insert(const HookTableau& S, const StandardTableau& T, const HookParams& params);

nlohmann::json to_json(const InsertionTrace& trace);

// Independent semistandard check (not the enumerator's local rule).
bool is_hook_semistandard(const HookTableau& t, const HookParams& params);
bool is_standard(const StandardTableau& t);

struct BijectionReport {
  int n = 0;
  HookParams params;
  Strategy strategy = Strategy::corrected;
  std::uint64_t sequences = 0;
  std::uint64_t distinct_pairs = 0;
  std::uint64_t expected_pairs = 0;  // sum over hook lambda of s(lambda) * d(lambda)
  std::uint64_t missed_pairs = 0;
  std::uint64_t invalid_pairs = 0;   // S not semistandard, T not standard, or shapes differ
  bool injective = false;
  bool surjective = false;
  bool count_identity = false;
  bool fiber_schur = false;  // every fiber's S-multiset is exactly hook_tableaux(shape)
  std::optional<std::pair<std::vector<Symbol>, std::vector<Symbol>>> collision;
  bool pass() const { return injective && surjective && count_identity && fiber_schur && invalid_pairs == 0; }
  std::string summary() const;
};

BijectionReport verify_bijection(int n, const HookParams& params, Strategy strategy,
                                 std::uint64_t limit = kSequenceLimit);

// Read-mostly record of which (n, params, strategy) passed verify_bijection.
class CertificationCache {
 public:
  bool certify(int n, const HookParams& params, Strategy strategy, std::uint64_t limit = kSequenceLimit);
  std::optional<bool> lookup(int n, const HookParams& params, Strategy strategy) const;
  static CertificationCache& global();

 private:
  static std::string key(int n, const HookParams& params, Strategy strategy);
  mutable std::shared_mutex mu_;
  std::map<std::string, bool> done_;
};

// Lexicographically smallest hook tableau of the shape; throws for non-hook shapes.
HookTableau canonical_hook_tableau(const Multipartition& shape, const HookParams& params);

// mu-weight of the preimage of (canonical S, T). Zero for non-hook shapes.
MPoly tableau_weight(const StandardTableau& T, const Multipartition& mu, const RingPtr& ring, Strategy strategy,
                     CertificationCache& cache = CertificationCache::global());

struct TransportCounterexample {
  Multipartition mu;
  StandardTableau T;
  std::vector<Symbol> word_a, word_b;
  MPoly weight_a, weight_b;
};

struct TransportReport {
  int n = 0;
  HookParams params;
  Strategy strategy = Strategy::corrected;
  std::uint64_t fibers = 0;
  std::uint64_t checks = 0;            // (mu, T) pairs
  std::uint64_t nonconstant = 0;       // (mu, T) pairs whose fiber weights differ
  std::uint64_t preimage_mismatch = 0; // (mu, T) where some fiber weight differs from tableau_weight
  std::optional<TransportCounterexample> example;
  bool pass() const { return checks > 0 && nonconstant == 0 && preimage_mismatch == 0; }
  std::string summary() const;
};

TransportReport check_weight_transport(int n, const HookParams& params, Strategy strategy,
                                       std::uint64_t limit = kSequenceLimit);

enum class SwNe { SW, NE };

struct SwNeEntry {
  int j = 0;                    // pair (j, j+1)
  SwNe label = SwNe::NE;        // from ascent/descent of the letters
  std::vector<std::string> sw_cases, ne_cases;  // geometric clauses that fire
  bool geometric_agrees() const;
};

struct SwNeReport {
  std::vector<SwNeEntry> entries;
  std::uint64_t unmatched = 0;     // no clause fired
  std::uint64_t contradicting = 0; // only clauses of the other label fired
};

SwNeReport sw_ne_classify(const InsertionTrace& trace);
// Restrict labels to pairs inside one row of t^mu: (T_SW, T_NE).
std::pair<std::vector<int>, std::vector<int>> sw_ne_sets(const SwNeReport& report, const Multipartition& mu);

// Product of the pair factors over same-row neighbours times Q_{color(max)}^{component}
// for each row, without the up-down gate.
MPoly local_factor_product(SymbolSpan seq, const Multipartition& mu, const RingPtr& ring);

}  // namespace sfrob
