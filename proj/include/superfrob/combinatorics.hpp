#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfrob {

// A letter of the alphabet 1..k+l.
struct Symbol {
  int value = 0;
  constexpr Symbol() = default;
  constexpr explicit Symbol(int v) : value(v) {}
  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

enum class Parity { even, odd };

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else non-positive or increasing throws.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based; 0 past the end.
  int part(int i) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Canonical order: components left to right; bigger component first, then
// part lists lexicographically larger first.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int m);

  int m() const { return static_cast<int>(comps_.size()); }
  int size() const { return size_; }
  // 1-based component index.
  const Partition& component(int c) const;
  const std::vector<Partition>& components() const { return comps_; }
  int total_rows() const;

  // "(2,1,1);(3,2,2,1);(4,3,1)", empty component "-".
  std::string to_string() const;
  // Accepts "-", "0", "()" or "" for an empty component; a lone "(2,1)" is m=1.
  static Multipartition parse(std::string_view text);
  static Multipartition parse(std::string_view text, int m);

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  // Strict weak order; true when a precedes b canonically.
  friend bool canonical_less(const Multipartition& a, const Multipartition& b);
  friend bool operator<(const Multipartition& a, const Multipartition& b) { return canonical_less(a, b); }

 private:
  std::vector<Partition> comps_;
  int size_ = 0;
};

class HookParams {
 public:
  HookParams() = default;
  HookParams(std::vector<int> k, std::vector<int> l);
  static HookParams uniform(int m, int k, int l);
  // "k1|l1,k2|l2,..."
  static HookParams parse(std::string_view text);

  int m() const { return static_cast<int>(k_.size()); }
  int k(int color) const { return k_.at(color - 1); }
  int l(int color) const { return l_.at(color - 1); }
  int k_total() const { return k_total_; }
  int l_total() const { return l_total_; }
  int alphabet_size() const { return k_total_ + l_total_; }
  const std::vector<int>& ks() const { return k_; }
  const std::vector<int>& ls() const { return l_; }

  // d_{c-1}: symbols of color c are d_{c-1}+1 .. d_c.
  int block_start(int color) const { return d_.at(color - 1); }
  int block_end(int color) const { return d_.at(color); }

  bool valid(Symbol s) const { return s.value >= 1 && s.value <= alphabet_size(); }
  void check(Symbol s) const;
  int color(Symbol s) const;
  Parity parity(Symbol s) const;
  bool is_even(Symbol s) const { return parity(s) == Parity::even; }
  // Index inside its color block and parity: x_a^{(c)} -> a, y_b^{(c)} -> b.
  int index_in_color(Symbol s) const;
  // 1-based position among all even (resp. odd) symbols; used for x1.., y1.. names.
  int global_index(Symbol s) const;
  Symbol even_symbol(int color, int a) const;
  Symbol odd_symbol(int color, int b) const;
  // Reverses odd letters inside each color block; identity on even letters.
  Symbol odd_reflect(Symbol s) const;

  // "x1", "y3": global numbering used by polynomial output.
  std::string variable_name(Symbol s) const;
  // "x1.2" = x_1 of color 2.
  std::string symbol_name(Symbol s) const;
  Symbol parse_symbol_name(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const HookParams& a, const HookParams& b) { return a.k_ == b.k_ && a.l_ == b.l_; }

 private:
  std::vector<int> k_, l_, d_;
  int k_total_ = 0, l_total_ = 0;
};

// (row, col, component), all 1-based.
struct Box {
  int row = 0;
  int col = 0;
  int component = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

template <class Entry>
class Filling {
 public:
  using Rows = std::vector<std::vector<Entry>>;

  Filling() = default;
  explicit Filling(std::vector<Rows> components) : comps_(std::move(components)) {}

  int m() const { return static_cast<int>(comps_.size()); }
  const std::vector<Rows>& components() const { return comps_; }
  const Rows& component(int c) const { return comps_.at(c - 1); }
  Rows& component(int c) { return comps_.at(c - 1); }
  const Entry& at(const Box& b) const {
    return comps_.at(b.component - 1).at(b.row - 1).at(b.col - 1);
  }
  int size() const {
    int n = 0;
    for (const auto& rows : comps_)
      for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
  }
  Multipartition shape() const {
    std::vector<Partition> parts;
    for (const auto& rows : comps_) {
      std::vector<int> lens;
      for (const auto& r : rows)
        if (!r.empty()) lens.push_back(static_cast<int>(r.size()));
      parts.emplace_back(std::move(lens));
    }
    return Multipartition(std::move(parts));
  }

  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.comps_ <=> b.comps_; }

 private:
  std::vector<Rows> comps_;
};

using StandardTableau = Filling<int>;
using HookTableau = Filling<Symbol>;

std::optional<Box> find_entry(const StandardTableau& t, int value);
// Rows joined by "/", components by ";": "1,2/3;4".
std::string to_string(const StandardTableau& t);
std::string to_string(const HookTableau& t, const HookParams& params);

struct RowSegment {
  int start = 0;      // first entry
  int length = 0;
  int component = 0;  // 1-based
};

struct SuperstandardTableau {
  StandardTableau tableau;
  std::vector<RowSegment> rows;
  std::vector<int> component_of;  // index i -> c_{t^mu}(i); slot 0 unused
};

std::vector<Partition> enumerate_partitions(int n);
std::vector<Multipartition> enumerate_multipartitions(int n, int m);
std::uint64_t count_multipartitions(int n, int m);

bool is_hook(const Multipartition& shape, const HookParams& params);
std::vector<StandardTableau> standard_tableaux(const Multipartition& shape);
std::uint64_t count_standard_tableaux(const Multipartition& shape);
// Lexicographic in reading order; empty iff !is_hook.
std::vector<HookTableau> hook_tableaux(const Multipartition& shape, const HookParams& params);
// Lexicographically smallest hook tableau, if any.
std::optional<HookTableau> first_hook_tableau(const Multipartition& shape, const HookParams& params);
SuperstandardTableau superstandard(const Multipartition& mu);

}  // namespace sfrob
