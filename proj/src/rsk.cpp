#include "superfrob/rsk.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace sfrob {

std::string to_string(Strategy s) { return s == Strategy::literal ? "literal" : "corrected"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "literal") return Strategy::literal;
  if (text == "corrected") return Strategy::corrected;
  throw ParameterError("unknown strategy '" + std::string(text) + "' (expected literal or corrected)");
}

namespace {

using Rows = HookTableau::Rows;

class Inserter {
 public:
  Inserter(const HookParams& params, Strategy strategy, int n, std::vector<InsertionStep>* steps)
      : params_(params), strategy_(strategy), S_(params.m()), T_(params.m()), steps_(steps), budget_(n) {}

  void insert(Symbol a) {
    params_.check(a);
    ++count_;
    const int comp = params_.color(a);
    chain_.clear();
    Box nb = strategy_ == Strategy::corrected ? corrected(params_.odd_reflect(a), comp) : literal(a, comp);
    auto& trow = T_[comp - 1];
    if (static_cast<int>(trow.size()) < nb.row) trow.resize(nb.row);
    if (static_cast<int>(trow[nb.row - 1].size()) != nb.col - 1)
      throw std::logic_error("recording tableau lost step with its insertion tableau");
    trow[nb.row - 1].push_back(count_);
    if (steps_) steps_->push_back(InsertionStep{a, chain_, nb, HookTableau(S_).shape()});
  }

  HookTableau S() const { return HookTableau(S_); }
  StandardTableau T() const { return StandardTableau(T_); }

 private:
  static int column_height(const Rows& rows, int col) {
    int h = 0;
    while (h < static_cast<int>(rows.size()) && static_cast<int>(rows[h].size()) > col) ++h;
    return h;
  }

  void tick() {
    // A sane insertion moves at most O(n) times per letter.
    if (++moves_ > 4 * (budget_ + 2) * (budget_ + 2))
      throw std::logic_error("insertion did not terminate");
  }

  Box place(Rows& rows, int r, int c, Symbol a, int comp) {
    const bool fresh = r == static_cast<int>(rows.size());
    if ((fresh ? c != 0 : static_cast<int>(rows[r].size()) != c) ||
        (r > 0 && static_cast<int>(rows[r - 1].size()) <= c))
      throw std::logic_error("insertion produced a non-partition shape");
    if (fresh) rows.emplace_back();
    rows[r].push_back(a);
    return Box{r + 1, c + 1, comp};
  }

  Box corrected(Symbol a, int comp) {
    Rows& rows = S_[comp - 1];
    moves_ = 0;
    for (int col = 0;; ++col) {
      tick();
      const bool even = params_.is_even(a);
      const int h = column_height(rows, col);
      int hit = -1;
      for (int r = 0; r < h; ++r) {
        Symbol b = rows[r][col];
        if (even ? b >= a : b > a) {
          hit = r;
          break;
        }
      }
      if (hit < 0) return place(rows, h, col, a, comp);
      chain_.push_back(Box{hit + 1, col + 1, comp});
      std::swap(rows[hit][col], a);
    }
  }

  Box literal(Symbol a, int comp) {
    moves_ = 0;
    return params_.is_even(a) ? literal_col(a, 0, comp) : literal_row(a, 0, comp);
  }

  Box literal_col(Symbol a, int col, int comp) {
    Rows& rows = S_[comp - 1];
    for (;;) {
      tick();
      const int h = column_height(rows, col);
      int hit = -1;
      for (int r = 0; r < h; ++r)
        if (rows[r][col] >= a) {
          hit = r;
          break;
        }
      if (hit < 0) return place(rows, h, col, a, comp);
      chain_.push_back(Box{hit + 1, col + 1, comp});
      std::swap(rows[hit][col], a);
      if (!params_.is_even(a)) return literal_row(a, 0, comp);
      ++col;
    }
  }

  Box literal_row(Symbol a, int row, int comp) {
    Rows& rows = S_[comp - 1];
    for (;;) {
      tick();
      if (row == static_cast<int>(rows.size())) return place(rows, row, 0, a, comp);
      auto& R = rows[row];
      auto it = std::find_if(R.begin(), R.end(), [&](Symbol b) { return b >= a; });
      if (it == R.end()) return place(rows, row, static_cast<int>(R.size()), a, comp);
      const int j = static_cast<int>(it - R.begin());
      chain_.push_back(Box{row + 1, j + 1, comp});
      std::swap(*it, a);
      if (params_.is_even(a)) return literal_col(a, j + 1, comp);
      ++row;
    }
  }

  const HookParams& params_;
  Strategy strategy_;
  std::vector<Rows> S_;
  std::vector<StandardTableau::Rows> T_;
  std::vector<InsertionStep>* steps_;
  std::vector<Box> chain_;
  int count_ = 0;
  int budget_;
  int moves_ = 0;
};

}  // namespace

InsertionTrace insert_sequence(SymbolSpan word, const HookParams& params, Strategy strategy) {
  InsertionTrace tr;
  tr.params = params;
  tr.strategy = strategy;
  tr.word.assign(word.begin(), word.end());
  Inserter ins(params, strategy, static_cast<int>(word.size()), &tr.steps);
  for (Symbol a : word) ins.insert(a);
  tr.S = ins.S();
  tr.T = ins.T();
  return tr;
}

std::pair<HookTableau, StandardTableau> rsk_pair(SymbolSpan word, const HookParams& params, Strategy strategy) {
  Inserter ins(params, strategy, static_cast<int>(word.size()), nullptr);
  for (Symbol a : word) ins.insert(a);
  return {ins.S(), ins.T()};
}

std::vector<Symbol> reverse_insert(const HookTableau& S, const StandardTableau& T, const HookParams& params) {
  if (S.m() != params.m() || T.m() != params.m()) throw ParameterError("tableaux have the wrong number of components");
  if (!(S.shape() == T.shape())) throw ParameterError("S and T have different shapes");
  if (!is_hook_semistandard(S, params)) throw ParameterError("S is not a hook tableau for " + params.to_string());
  if (!is_standard(T)) throw ParameterError("T is not standard");
  const int n = T.size();
  std::vector<Rows> rows = S.components();
  std::vector<Symbol> word(n);
  for (int v = n; v >= 1; --v) {
    auto box = find_entry(T, v);
    if (!box) throw ParameterError("T is missing entry " + std::to_string(v));
    Rows& R = rows[box->component - 1];
    int r = box->row - 1, col = box->col - 1;
    if (static_cast<int>(R[r].size()) != col + 1 || (r + 1 < static_cast<int>(R.size()) && static_cast<int>(R[r + 1].size()) > col))
      throw ParameterError("entry " + std::to_string(v) + " of T is not at a corner");
    Symbol a = R[r].back();
    R[r].pop_back();
    if (R[r].empty()) R.pop_back();
    while (col > 0) {
      --col;
      // bottom-most letter that could have bumped a
      int pick = -1;
      for (int i = 0; i < static_cast<int>(R.size()) && static_cast<int>(R[i].size()) > col; ++i) {
        Symbol x = R[i][col];
        if (params.is_even(x) ? x <= a : x < a) pick = i;
      }
      if (pick < 0) throw ParameterError("S is not reachable by corrected insertion");
      std::swap(R[pick][col], a);
    }
    if (params.color(a) != box->component) throw ParameterError("letter color disagrees with its component");
    word[v - 1] = params.odd_reflect(a);
  }
  return word;
}

nlohmann::json to_json(const InsertionTrace& trace) {
  auto box_json = [](const Box& b) { return nlohmann::json{{"row", b.row}, {"col", b.col}, {"component", b.component}}; };
  nlohmann::json steps = nlohmann::json::array();
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& b : st.bump_chain) chain.push_back(box_json(b));
    steps.push_back({{"step", i + 1},
                     {"symbol", st.symbol.value},
                     {"name", trace.params.symbol_name(st.symbol)},
                     {"bump_chain", chain},
                     {"new_box", box_json(st.new_box)},
                     {"shape", st.shape.to_string()}});
  }
  nlohmann::json S = nlohmann::json::array(), T = nlohmann::json::array();
  for (int c = 1; c <= trace.S.m(); ++c) {
    nlohmann::json sc = nlohmann::json::array(), tc = nlohmann::json::array();
    for (const auto& row : trace.S.component(c)) {
      nlohmann::json r = nlohmann::json::array();
      for (Symbol s : row) r.push_back(trace.params.symbol_name(s));
      sc.push_back(r);
    }
    for (const auto& row : trace.T.component(c)) tc.push_back(row);
    S.push_back(sc);
    T.push_back(tc);
  }
  std::vector<int> word;
  for (Symbol s : trace.word) word.push_back(s.value);
  return {{"params", trace.params.to_string()},
          {"strategy", to_string(trace.strategy)},
          {"sequence", word},
          {"steps", steps},
          {"S", S},
          {"T", T},
          {"shape", trace.T.shape().to_string()}};
}

bool is_standard(const StandardTableau& t) {
  const int n = t.size();
  std::vector<int> seen(n + 1, 0);
  for (const auto& rows : t.components()) {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) return false;
      if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
      for (size_t j = 0; j < rows[r].size(); ++j) {
        int v = rows[r][j];
        if (v < 1 || v > n || seen[v]++) return false;
        if (j > 0 && rows[r][j - 1] >= v) return false;
        if (r > 0 && rows[r - 1][j] >= v) return false;
      }
    }
  }
  return true;
}

bool is_hook_semistandard(const HookTableau& t, const HookParams& params) {
  if (t.m() != params.m()) return false;
  for (int c = 1; c <= t.m(); ++c) {
    const auto& rows = t.component(c);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) return false;
      if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
      for (size_t j = 0; j < rows[r].size(); ++j) {
        Symbol s = rows[r][j];
        if (!params.valid(s) || params.color(s) != c) return false;
        const bool even = params.is_even(s);
        // even region must be a Young subdiagram
        if (even && j > 0 && !params.is_even(rows[r][j - 1])) return false;
        if (even && r > 0 && !params.is_even(rows[r - 1][j])) return false;
        if (j > 0) {
          Symbol left = rows[r][j - 1];
          if (params.is_even(left) == even && (even ? left > s : left >= s)) return false;
        }
        if (r > 0) {
          Symbol up = rows[r - 1][j];
          if (params.is_even(up) == even && (even ? up >= s : up > s)) return false;
        }
      }
    }
  }
  return true;
}

std::string BijectionReport::summary() const {
  std::string s = "n=" + std::to_string(n) + " params=" + params.to_string() + " strategy=" + to_string(strategy) +
                  ": sequences=" + std::to_string(sequences) + " distinct=" + std::to_string(distinct_pairs) +
                  " expected=" + std::to_string(expected_pairs) + " injective=" + (injective ? "yes" : "no") +
                  " surjective=" + (surjective ? "yes" : "no") + " count=" + (count_identity ? "yes" : "no") +
                  " fiber-schur=" + (fiber_schur ? "yes" : "no");
  if (invalid_pairs) s += " invalid=" + std::to_string(invalid_pairs);
  if (collision) {
    auto w = [](const std::vector<Symbol>& v) {
      std::string t;
      for (size_t i = 0; i < v.size(); ++i) t += (i ? "," : "") + std::to_string(v[i].value);
      return t;
    };
    s += " collision=(" + w(collision->first) + ")~(" + w(collision->second) + ")";
  }
  return s;
}

BijectionReport verify_bijection(int n, const HookParams& params, Strategy strategy, std::uint64_t limit) {
  if (n < 0) throw ParameterError("n must be nonnegative");
  const std::uint64_t total = word_count(n, params.alphabet_size());
  if (total > limit)
    throw GuardRefusal("(k+l)^n = " + std::to_string(params.alphabet_size()) + "^" + std::to_string(n) +
                       " exceeds the enumeration bound " + std::to_string(limit));
  BijectionReport rep;
  rep.n = n;
  rep.params = params;
  rep.strategy = strategy;
  rep.injective = true;
  std::map<std::pair<HookTableau, StandardTableau>, std::vector<Symbol>> seen;
  std::map<StandardTableau, std::multiset<HookTableau>> fibers;
  for_each_word(n, params.alphabet_size(), [&](SymbolSpan w) {
    ++rep.sequences;
    auto pr = rsk_pair(w, params, strategy);
    if (!is_standard(pr.second) || !is_hook_semistandard(pr.first, params) || !(pr.first.shape() == pr.second.shape()))
      ++rep.invalid_pairs;
    auto [it, fresh] = seen.try_emplace(pr, std::vector<Symbol>(w.begin(), w.end()));
    if (!fresh) {
      rep.injective = false;
      if (!rep.collision) rep.collision.emplace(it->second, std::vector<Symbol>(w.begin(), w.end()));
    }
    fibers[pr.second].insert(pr.first);
  });
  rep.distinct_pairs = seen.size();
  rep.fiber_schur = true;
  for (const auto& lam : enumerate_multipartitions(n, params.m())) {
    auto hooks = hook_tableaux(lam, params);
    auto stds = standard_tableaux(lam);
    rep.expected_pairs += hooks.size() * stds.size();
    std::multiset<HookTableau> want(hooks.begin(), hooks.end());
    for (const auto& T : stds) {
      for (const auto& S : hooks)
        if (!seen.count({S, T})) ++rep.missed_pairs;
      auto f = fibers.find(T);
      const bool ok = f == fibers.end() ? want.empty() : f->second == want;
      if (!ok) rep.fiber_schur = false;
    }
  }
  rep.surjective = rep.missed_pairs == 0;
  rep.count_identity = rep.sequences == rep.expected_pairs;
  return rep;
}

std::string CertificationCache::key(int n, const HookParams& params, Strategy strategy) {
  return std::to_string(n) + "/" + params.to_string() + "/" + to_string(strategy);
}

std::optional<bool> CertificationCache::lookup(int n, const HookParams& params, Strategy strategy) const {
  std::shared_lock lock(mu_);
  auto it = done_.find(key(n, params, strategy));
  if (it == done_.end()) return std::nullopt;
  return it->second;
}

bool CertificationCache::certify(int n, const HookParams& params, Strategy strategy, std::uint64_t limit) {
  if (auto hit = lookup(n, params, strategy)) return *hit;
  bool ok = verify_bijection(n, params, strategy, limit).pass();
  std::unique_lock lock(mu_);
  done_.insert_or_assign(key(n, params, strategy), ok);
  return ok;
}

CertificationCache& CertificationCache::global() {
  static CertificationCache cache;
  return cache;
}

HookTableau canonical_hook_tableau(const Multipartition& shape, const HookParams& params) {
  auto t = first_hook_tableau(shape, params);
  if (!t) throw ParameterError("shape " + shape.to_string() + " is not a hook shape for " + params.to_string());
  return std::move(*t);
}

MPoly tableau_weight(const StandardTableau& T, const Multipartition& mu, const RingPtr& ring, Strategy strategy,
                     CertificationCache& cache) {
  const HookParams& params = ring->params();
  if (T.size() != mu.size()) throw ParameterError("|T| differs from |mu|");
  if (strategy != Strategy::corrected)
    throw UncertifiedStrategy("strategy '" + to_string(strategy) + "' has no reverse insertion and is not certified");
  if (!cache.certify(T.size(), params, strategy))
    throw UncertifiedStrategy("strategy '" + to_string(strategy) + "' failed verify_bijection at n=" +
                              std::to_string(T.size()) + " for " + params.to_string());
  const Multipartition shape = T.shape();
  if (!is_hook(shape, params)) return MPoly(ring);
  auto word = reverse_insert(canonical_hook_tableau(shape, params), T, params);
  return mu_weight_sequence(word, mu, ring);
}

std::string TransportReport::summary() const {
  std::string s = "n=" + std::to_string(n) + " params=" + params.to_string() + " strategy=" + to_string(strategy) +
                  ": fibers=" + std::to_string(fibers) + " checks=" + std::to_string(checks) +
                  " nonconstant=" + std::to_string(nonconstant) +
                  " preimage-mismatch=" + std::to_string(preimage_mismatch);
  if (example) {
    auto w = [](const std::vector<Symbol>& v) {
      std::string t;
      for (size_t i = 0; i < v.size(); ++i) t += (i ? "," : "") + std::to_string(v[i].value);
      return t;
    };
    s += " e.g. mu=" + example->mu.to_string() + " T=" + sfrob::to_string(example->T) + ": (" + w(example->word_a) +
         ")->" + sfrob::to_string(example->weight_a) + " vs (" + w(example->word_b) + ")->" +
         sfrob::to_string(example->weight_b);
  }
  return s;
}

TransportReport check_weight_transport(int n, const HookParams& params, Strategy strategy, std::uint64_t limit) {
  if (word_count(n, params.alphabet_size()) > limit)
    throw GuardRefusal("(k+l)^n exceeds the enumeration bound " + std::to_string(limit));
  TransportReport rep;
  rep.n = n;
  rep.params = params;
  rep.strategy = strategy;
  RingPtr ring = make_ring(params);
  std::map<StandardTableau, std::vector<std::vector<Symbol>>> fibers;
  for_each_word(n, params.alphabet_size(), [&](SymbolSpan w) {
    fibers[rsk_pair(w, params, strategy).second].emplace_back(w.begin(), w.end());
  });
  rep.fibers = fibers.size();
  const bool can_transport = strategy == Strategy::corrected && CertificationCache::global().certify(n, params, strategy, limit);
  for (const auto& mu : enumerate_multipartitions(n, params.m())) {
    for (const auto& [T, words] : fibers) {
      ++rep.checks;
      MPoly first = mu_weight_sequence(words.front(), mu, ring);
      bool constant = true;
      for (size_t i = 1; i < words.size(); ++i) {
        MPoly w = mu_weight_sequence(words[i], mu, ring);
        if (!(w == first)) {
          if (constant) ++rep.nonconstant;
          constant = false;
          if (!rep.example) rep.example.emplace(TransportCounterexample{mu, T, words.front(), words[i], first, w});
          break;
        }
      }
      if (can_transport) {
        MPoly tw = tableau_weight(T, mu, ring, strategy);
        for (const auto& w : words)
          if (!(mu_weight_sequence(w, mu, ring) == tw)) {
            ++rep.preimage_mismatch;
            break;
          }
      }
    }
  }
  return rep;
}

bool SwNeEntry::geometric_agrees() const {
  return label == SwNe::SW ? !sw_cases.empty() : !ne_cases.empty();
}

SwNeReport sw_ne_classify(const InsertionTrace& trace) {
  SwNeReport rep;
  const auto& w = trace.word;
  const HookParams& params = trace.params;
  for (size_t j = 0; j + 1 < w.size(); ++j) {
    SwNeEntry e;
    e.j = static_cast<int>(j) + 1;
    e.label = w[j] < w[j + 1] ? SwNe::SW : SwNe::NE;
    Box A = *find_entry(trace.T, e.j), B = *find_entry(trace.T, e.j + 1);
    const bool ea = params.is_even(w[j]), eb = params.is_even(w[j + 1]);
    const bool same = A.component == B.component;
    const bool south_west = same && B.row >= A.row && B.col <= A.col;
    const bool north_east = same && B.row <= A.row && B.col >= A.col;
    const bool south_or_east = same && (B.row > A.row || B.col > A.col);
    if (A.component < B.component) e.sw_cases.push_back("later component");
    if (south_west && ea && eb) e.sw_cases.push_back("south/west, even-even");
    if (north_east && !ea && !eb) e.sw_cases.push_back("north/east, odd-odd");
    if (south_or_east && ea && !eb) e.sw_cases.push_back("south or east, even-odd");
    if (B.component < A.component) e.ne_cases.push_back("earlier component");
    if (north_east && ea && eb) e.ne_cases.push_back("north/east, even-even");
    if (south_west && !ea) e.ne_cases.push_back(eb ? "south/west, odd-even" : "south/west, odd-odd");
    if (e.sw_cases.empty() && e.ne_cases.empty()) ++rep.unmatched;
    else if (!e.geometric_agrees()) ++rep.contradicting;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::pair<std::vector<int>, std::vector<int>> sw_ne_sets(const SwNeReport& report, const Multipartition& mu) {
  auto st = superstandard(mu);
  std::vector<int> row_of(mu.size() + 2, -1);
  for (size_t r = 0; r < st.rows.size(); ++r)
    for (int v = st.rows[r].start; v < st.rows[r].start + st.rows[r].length; ++v) row_of[v] = static_cast<int>(r);
  std::vector<int> sw, ne;
  for (const auto& e : report.entries) {
    if (e.j + 1 > mu.size() || row_of[e.j] != row_of[e.j + 1]) continue;
    (e.label == SwNe::SW ? sw : ne).push_back(e.j);
  }
  return {sw, ne};
}

MPoly local_factor_product(SymbolSpan seq, const Multipartition& mu, const RingPtr& ring) {
  const HookParams& params = ring->params();
  if (static_cast<int>(seq.size()) != mu.size()) throw ParameterError("sequence length differs from |mu|");
  if (mu.m() != params.m()) throw ParameterError("mu has the wrong number of components");
  for (Symbol s : seq) params.check(s);
  SignedQPower total;
  Exponent e(ring->width(), 0);
  size_t pos = 0;
  for (int c = 1; c <= mu.m(); ++c)
    for (int len : mu.component(c).parts()) {
      SymbolSpan row = seq.subspan(pos, len);
      pos += len;
      for (size_t j = 0; j + 1 < row.size(); ++j) total *= pair_factor(row[j], row[j + 1], params);
      e[ring->Q_slot(params.color(*std::max_element(row.begin(), row.end())))] += c;
    }
  e[0] = total.qexp;
  return MPoly::monomial(ring, e, Rational(total.sign));
}

}  // namespace sfrob
