#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "superfrob/combinatorics.hpp"
#include "superfrob/exactalg.hpp"
#include "superfrob/rsk.hpp"

namespace sfrob {

// Default params for character work: k_i = l_i = n in every color.
HookParams default_params(int m, int n);

enum class Provenance { rsk, oracle };
std::string to_string(Provenance p);

struct CharacterTable {
  int m = 0, n = 0;
  HookParams params;
  Strategy strategy = Strategy::corrected;
  Provenance provenance = Provenance::rsk;
  std::vector<Multipartition> labels;     // canonical order, rows = lambda, cols = mu
  std::vector<std::vector<MPoly>> entries;  // entries[lambda][mu]

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SpecializedTable {
  int m = 0, n = 0;
  std::vector<Multipartition> labels;
  std::vector<std::vector<Cyclotomic>> entries;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

MPoly char_rsk(const Multipartition& lambda, const Multipartition& mu, const RingPtr& ring, Strategy strategy,
               CertificationCache& cache = CertificationCache::global());
// Coefficients of q_mu in the S_lambda basis, indexed like enumerate_multipartitions(n, m).
std::vector<MPoly> char_oracle(const Multipartition& mu, const RingPtr& ring);

CharacterTable character_table_rsk(int m, int n, const HookParams& params, Strategy strategy,
                                   const Limits& limits = {});
CharacterTable character_table_oracle(int m, int n, const HookParams& params, const Limits& limits = {});

Rational centralizer_order(const Multipartition& mu);
SpecializedTable specialize_table(const CharacterTable& table);

struct FrobeniusMuResult {
  Multipartition mu;
  bool identity = false;        // q_mu == sum_lambda chi * S_lambda
  bool routes_agree = false;    // char_rsk == char_oracle for every lambda
  std::string first_difference; // empty on success
};

struct FrobeniusReport {
  int m = 0, n = 0;
  HookParams params;
  Strategy strategy = Strategy::corrected;
  std::vector<FrobeniusMuResult> results;
  bool pass() const;
  nlohmann::json to_json() const;
};

FrobeniusReport verify_frobenius(int m, int n, const HookParams& params, Strategy strategy,
                                 const Limits& limits = {});

struct DimensionReport {
  int m = 0, n = 0;
  std::uint64_t sequences = 0;       // n! * m^n restricted words
  std::uint64_t expected = 0;        // n! * m^n
  std::uint64_t sum_d_squared = 0;   // over hook lambda
  std::uint64_t distinct_images = 0;
  bool per_shape_ok = false;         // images of shape lambda number d_lambda^2
  bool pass() const {
    return sequences == expected && sum_d_squared == expected && distinct_images == expected && per_shape_ok;
  }
};

// Words whose within-color offsets form a permutation of 1..n, any colors; needs k_c + l_c = n.
DimensionReport verify_dimension_identity(int m, int n, const HookParams& params, Strategy strategy,
                                          const Limits& limits = {});

}  // namespace sfrob
