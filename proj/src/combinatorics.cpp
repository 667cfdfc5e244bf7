#include "superfrob/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "superfrob/error.hpp"

namespace sfrob {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParameterError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  return v;
}

Partition parse_partition(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "-" || s == "0" || s == "()" || s == "\xE2\x88\x85") return Partition();
  if (s.front() == '(') {
    if (s.back() != ')') throw ParameterError("unbalanced parentheses in '" + std::string(s) + "'");
    s = s.substr(1, s.size() - 2);
    if (trim(s).empty()) return Partition();
  }
  std::vector<int> parts;
  for (auto piece : split(s, ',')) parts.push_back(parse_int(piece, "part"));
  return Partition(std::move(parts));
}

}  // namespace

// ---- Partition ----

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParameterError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParameterError("partition parts must weakly decrease");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int h = 0;
    while (part(h + 1) >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

// ---- Multipartition ----

Multipartition::Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw ParameterError("a multipartition needs at least one component");
  for (const auto& p : comps_) size_ += p.size();
}

Multipartition Multipartition::empty(int m) {
  if (m < 1) throw ParameterError("m must be positive");
  return Multipartition(std::vector<Partition>(m));
}

const Partition& Multipartition::component(int c) const {
  if (c < 1 || c > m()) throw ParameterError("component index out of range");
  return comps_[c - 1];
}

int Multipartition::total_rows() const {
  int r = 0;
  for (const auto& p : comps_) r += p.length();
  return r;
}

std::string Multipartition::to_string() const {
  std::string s;
  for (size_t c = 0; c < comps_.size(); ++c) {
    if (c) s += ';';
    s += comps_[c].to_string();
  }
  return s;
}

Multipartition Multipartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  for (auto piece : split(text, ';')) comps.push_back(parse_partition(piece));
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::parse(std::string_view text, int m) {
  Multipartition mp = parse(text);
  if (mp.m() != m)
    throw ParameterError("expected " + std::to_string(m) + " components, got " + std::to_string(mp.m()));
  return mp;
}

bool canonical_less(const Multipartition& a, const Multipartition& b) {
  const size_t n = std::min(a.comps_.size(), b.comps_.size());
  for (size_t c = 0; c < n; ++c) {
    const Partition& x = a.comps_[c];
    const Partition& y = b.comps_[c];
    if (x.size() != y.size()) return x.size() > y.size();
    if (x.parts() != y.parts()) return x.parts() > y.parts();
  }
  return a.comps_.size() < b.comps_.size();
}

// ---- HookParams ----

HookParams::HookParams(std::vector<int> k, std::vector<int> l) : k_(std::move(k)), l_(std::move(l)) {
  if (k_.empty()) throw ParameterError("params need at least one color");
  if (k_.size() != l_.size()) throw ParameterError("k and l vectors differ in length");
  d_.assign(1, 0);
  for (size_t a = 0; a < k_.size(); ++a) {
    if (k_[a] < 0 || l_[a] < 0) throw ParameterError("k_i and l_i must be nonnegative");
    k_total_ += k_[a];
    l_total_ += l_[a];
    d_.push_back(d_.back() + k_[a] + l_[a]);
  }
}

HookParams HookParams::uniform(int m, int k, int l) {
  if (m < 1) throw ParameterError("m must be positive");
  return HookParams(std::vector<int>(m, k), std::vector<int>(m, l));
}

HookParams HookParams::parse(std::string_view text) {
  std::vector<int> k, l;
  for (auto block : split(text, ',')) {
    auto kl = split(block, '|');
    if (kl.size() != 2) throw ParameterError("params block '" + std::string(block) + "' is not of the form k|l");
    k.push_back(parse_int(kl[0], "k"));
    l.push_back(parse_int(kl[1], "l"));
  }
  return HookParams(std::move(k), std::move(l));
}

void HookParams::check(Symbol s) const {
  if (!valid(s))
    throw ParameterError("symbol " + std::to_string(s.value) + " outside 1.." + std::to_string(alphabet_size()));
}

int HookParams::color(Symbol s) const {
  check(s);
  auto it = std::lower_bound(d_.begin() + 1, d_.end(), s.value);
  return static_cast<int>(it - d_.begin());
}

Parity HookParams::parity(Symbol s) const {
  int c = color(s);
  return s.value <= d_[c - 1] + k_[c - 1] ? Parity::even : Parity::odd;
}

int HookParams::index_in_color(Symbol s) const {
  int c = color(s);
  int off = s.value - d_[c - 1];
  return off <= k_[c - 1] ? off : off - k_[c - 1];
}

int HookParams::global_index(Symbol s) const {
  int c = color(s);
  int before = 0;
  bool even = parity(s) == Parity::even;
  for (int a = 1; a < c; ++a) before += even ? k_[a - 1] : l_[a - 1];
  return before + index_in_color(s);
}

Symbol HookParams::even_symbol(int color, int a) const {
  if (color < 1 || color > m() || a < 1 || a > k_[color - 1])
    throw ParameterError("no even symbol x" + std::to_string(a) + "." + std::to_string(color));
  return Symbol(d_[color - 1] + a);
}

Symbol HookParams::odd_symbol(int color, int b) const {
  if (color < 1 || color > m() || b < 1 || b > l_[color - 1])
    throw ParameterError("no odd symbol y" + std::to_string(b) + "." + std::to_string(color));
  return Symbol(d_[color - 1] + k_[color - 1] + b);
}

Symbol HookParams::odd_reflect(Symbol s) const {
  if (is_even(s)) return s;
  int c = color(s);
  return odd_symbol(c, l_[c - 1] + 1 - index_in_color(s));
}

std::string HookParams::variable_name(Symbol s) const {
  return (is_even(s) ? "x" : "y") + std::to_string(global_index(s));
}

std::string HookParams::symbol_name(Symbol s) const {
  return (is_even(s) ? "x" : "y") + std::to_string(index_in_color(s)) + "." + std::to_string(color(s));
}

Symbol HookParams::parse_symbol_name(std::string_view name) const {
  name = trim(name);
  if (name.empty()) throw ParameterError("empty symbol");
  char head = name.front();
  if (head != 'x' && head != 'y') return Symbol(parse_int(name, "symbol"));
  name.remove_prefix(1);
  auto dot = name.find('.');
  if (dot == std::string_view::npos) {
    // global numbering
    int g = parse_int(name, "symbol index");
    for (int v = 1; v <= alphabet_size(); ++v) {
      Symbol s(v);
      if (is_even(s) == (head == 'x') && global_index(s) == g) return s;
    }
    throw ParameterError("no variable " + std::string(1, head) + std::to_string(g));
  }
  int idx = parse_int(name.substr(0, dot), "symbol index");
  int col = parse_int(name.substr(dot + 1), "symbol color");
  return head == 'x' ? even_symbol(col, idx) : odd_symbol(col, idx);
}

std::string HookParams::to_string() const {
  std::string s;
  for (size_t a = 0; a < k_.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(k_[a]) + "|" + std::to_string(l_[a]);
  }
  return s;
}

// ---- tableaux ----

std::optional<Box> find_entry(const StandardTableau& t, int value) {
  for (int c = 1; c <= t.m(); ++c) {
    const auto& rows = t.component(c);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t j = 0; j < rows[r].size(); ++j)
        if (rows[r][j] == value) return Box{static_cast<int>(r) + 1, static_cast<int>(j) + 1, c};
  }
  return std::nullopt;
}

namespace {
template <class Entry, class Fmt>
std::string render(const Filling<Entry>& t, Fmt fmt) {
  std::string s;
  for (int c = 1; c <= t.m(); ++c) {
    if (c > 1) s += ';';
    const auto& rows = t.component(c);
    if (rows.empty()) {
      s += '-';
      continue;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r) s += '/';
      for (size_t j = 0; j < rows[r].size(); ++j) {
        if (j) s += ',';
        s += fmt(rows[r][j]);
      }
    }
  }
  return s;
}
}  // namespace

std::string to_string(const StandardTableau& t) {
  return render(t, [](int v) { return std::to_string(v); });
}

std::string to_string(const HookTableau& t, const HookParams& params) {
  return render(t, [&](Symbol s) { return params.symbol_name(s); });
}

// ---- enumeration ----

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ParameterError("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int m) {
  if (n < 0) throw ParameterError("n must be nonnegative");
  if (m < 1) throw ParameterError("m must be positive");
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (static_cast<int>(cur.size()) == m - 1) {
      for (auto& p : enumerate_partitions(rest)) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int a = rest; a >= 0; --a)
      for (auto& p : enumerate_partitions(a)) {
        cur.push_back(p);
        rec(rest - a);
        cur.pop_back();
      }
  };
  rec(n);
  return out;
}

std::uint64_t count_multipartitions(int n, int m) {
  if (n < 0 || m < 1) throw ParameterError("bad (n, m)");
  // partition numbers, then m-fold convolution
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  std::vector<std::uint64_t> acc(n + 1, 0);
  acc[0] = 1;
  for (int c = 0; c < m; ++c) {
    std::vector<std::uint64_t> nxt(n + 1, 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) nxt[i + j] += acc[i] * p[j];
    acc = std::move(nxt);
  }
  return acc[n];
}

bool is_hook(const Multipartition& shape, const HookParams& params) {
  if (shape.m() != params.m())
    throw ParameterError("shape has " + std::to_string(shape.m()) + " components but params have m=" +
                         std::to_string(params.m()));
  for (int c = 1; c <= shape.m(); ++c)
    if (shape.component(c).part(params.k(c) + 1) > params.l(c)) return false;
  return true;
}

std::vector<StandardTableau> standard_tableaux(const Multipartition& shape) {
  const int n = shape.size();
  const int m = shape.m();
  std::vector<StandardTableau::Rows> cur(m);
  for (int c = 0; c < m; ++c) cur[c].resize(shape.components()[c].length());
  std::vector<StandardTableau> out;
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(cur);
      return;
    }
    for (int c = 0; c < m; ++c) {
      const Partition& lam = shape.components()[c];
      for (int r = 0; r < lam.length(); ++r) {
        int len = static_cast<int>(cur[c][r].size());
        if (len >= lam.part(r + 1)) continue;
        if (r > 0 && static_cast<int>(cur[c][r - 1].size()) <= len) continue;
        cur[c][r].push_back(v);
        rec(v + 1);
        cur[c][r].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

std::uint64_t count_standard_tableaux(const Multipartition& shape) {
  // count by peeling the largest entry off a corner; memoized on the shape
  std::map<std::vector<std::vector<int>>, std::uint64_t> memo;
  std::function<std::uint64_t(std::vector<std::vector<int>>&)> rec = [&](std::vector<std::vector<int>>& rows) {
    bool empty = true;
    for (auto& comp : rows)
      for (int len : comp)
        if (len) empty = false;
    if (empty) return std::uint64_t{1};
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (auto& comp : rows)
      for (size_t r = 0; r < comp.size(); ++r) {
        if (comp[r] == 0) continue;
        if (r + 1 < comp.size() && comp[r + 1] == comp[r]) continue;
        --comp[r];
        total += rec(rows);
        ++comp[r];
      }
    memo[rows] = total;
    return total;
  };
  std::vector<std::vector<int>> rows;
  for (const auto& p : shape.components()) rows.push_back(p.parts());
  return rec(rows);
}

namespace {
// Depth-first fill in reading order, smallest symbol first; stops after limit hits.
std::vector<HookTableau> hook_dfs(const Multipartition& shape, const HookParams& params, size_t limit) {
  if (!is_hook(shape, params)) return {};
  const int m = shape.m();
  std::vector<Box> order;
  for (int c = 1; c <= m; ++c) {
    const Partition& lam = shape.component(c);
    for (int r = 1; r <= lam.length(); ++r)
      for (int j = 1; j <= lam.part(r); ++j) order.push_back(Box{r, j, c});
  }
  std::vector<HookTableau::Rows> cur(m);
  for (int c = 1; c <= m; ++c) cur[c - 1].resize(shape.component(c).length());
  std::vector<HookTableau> out;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (out.size() >= limit) return;
    if (idx == order.size()) {
      out.emplace_back(cur);
      return;
    }
    const Box b = order[idx];
    auto& rows = cur[b.component - 1];
    for (int v = params.block_start(b.component) + 1; v <= params.block_end(b.component); ++v) {
      Symbol s(v);
      bool even = params.is_even(s);
      if (b.col > 1) {
        Symbol left = rows[b.row - 1][b.col - 2];
        if (!(left < s || (left == s && even))) continue;
      }
      if (b.row > 1) {
        Symbol up = rows[b.row - 2][b.col - 1];
        if (!(up < s || (up == s && !even))) continue;
      }
      rows[b.row - 1].push_back(s);
      rec(idx + 1);
      rows[b.row - 1].pop_back();
    }
  };
  rec(0);
  return out;
}
}  // namespace

std::vector<HookTableau> hook_tableaux(const Multipartition& shape, const HookParams& params) {
  return hook_dfs(shape, params, static_cast<size_t>(-1));
}

std::optional<HookTableau> first_hook_tableau(const Multipartition& shape, const HookParams& params) {
  auto v = hook_dfs(shape, params, 1);
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

SuperstandardTableau superstandard(const Multipartition& mu) {
  SuperstandardTableau st;
  std::vector<StandardTableau::Rows> comps(mu.m());
  st.component_of.assign(mu.size() + 1, 0);
  int next = 1;
  for (int c = 1; c <= mu.m(); ++c) {
    for (int len : mu.component(c).parts()) {
      std::vector<int> row(len);
      std::iota(row.begin(), row.end(), next);
      st.rows.push_back(RowSegment{next, len, c});
      for (int v = next; v < next + len; ++v) st.component_of[v] = c;
      next += len;
      comps[c - 1].push_back(std::move(row));
    }
  }
  st.tableau = StandardTableau(std::move(comps));
  return st;
}

}  // namespace sfrob
