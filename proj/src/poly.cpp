#include <cctype>

#include "superfrob/exactalg.hpp"

namespace sfrob {

std::string to_string(const Rational& r) { return r.get_str(); }

PolyRing::PolyRing(HookParams params) : params_(std::move(params)) {}

std::string PolyRing::slot_name(int slot) const {
  if (slot == 0) return "q";
  if (slot <= m()) return "Q" + std::to_string(slot);
  return params_.variable_name(Symbol(slot - m()));
}

RingPtr make_ring(const HookParams& params) { return std::make_shared<const PolyRing>(params); }

MPoly mp_constant(const RingPtr& ring, const Rational& c) { return MPoly::constant(ring, c); }

MPoly mp_q(const RingPtr& ring, int e) {
  Exponent x(ring->width(), 0);
  x[0] = e;
  return MPoly::monomial(ring, x, Rational(1));
}

MPoly mp_Q(const RingPtr& ring, int a, int e) {
  if (a < 1 || a > ring->m()) throw ParameterError("Q index out of range");
  Exponent x(ring->width(), 0);
  x[ring->Q_slot(a)] = e;
  return MPoly::monomial(ring, x, Rational(1));
}

MPoly mp_z(const RingPtr& ring, Symbol s, int e) {
  ring->params().check(s);
  Exponent x(ring->width(), 0);
  x[ring->z_slot(s)] = e;
  return MPoly::monomial(ring, x, Rational(1));
}

std::vector<int> z_part(const PolyRing& ring, const Exponent& e) {
  return std::vector<int>(e.begin() + 1 + ring.m(), e.end());
}

MPoly coefficient_of(const MPoly& p, const std::vector<int>& zmono) {
  const PolyRing& ring = *p.ring();
  if (static_cast<int>(zmono.size()) != ring.nz()) throw ParameterError("monomial has wrong number of variables");
  MPoly r(p.ring());
  const int zs = 1 + ring.m();
  for (const auto& [e, c] : p.terms()) {
    if (!std::equal(zmono.begin(), zmono.end(), e.begin() + zs)) continue;
    Exponent f = e;
    std::fill(f.begin() + zs, f.end(), 0);
    r.add_term(f, c);
  }
  return r;
}

std::vector<std::vector<int>> z_monomials(const MPoly& p) {
  std::vector<std::vector<int>> out;
  for (const auto& [e, c] : p.terms()) {
    auto z = z_part(*p.ring(), e);
    if (out.empty() || out.back() != z) out.push_back(std::move(z));
  }
  return out;
}

CycPoly specialize(const MPoly& p) {
  const int m = p.ring()->m();
  CycPoly r(p.ring());
  for (const auto& [e, c] : p.terms()) {
    long zexp = 0;
    for (int a = 1; a <= m; ++a) zexp += static_cast<long>(a) * e[a];
    Exponent f = e;
    std::fill(f.begin(), f.begin() + 1 + m, 0);
    r.add_term(f, Cyclotomic::zeta_power(m, zexp) * Cyclotomic(c, m));
  }
  return r;
}

CycPoly lift(const MPoly& p) {
  const int m = p.ring()->m();
  CycPoly r(p.ring());
  for (const auto& [e, c] : p.terms()) r.add_term(e, Cyclotomic(c, m));
  return r;
}

CycPoly conj(const CycPoly& p) {
  CycPoly r(p.ring());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
  return r;
}

// ---- printing ----

namespace {

struct Piece {
  bool neg = false;
  std::string text;
};

std::string mono_text(const PolyRing& ring, const Exponent& e, int from, int to) {
  std::string s;
  for (int i = from; i < to; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.slot_name(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

Piece scalar_piece(const Rational& c, const std::string& mono) {
  Rational a = abs(c);
  Piece p{sgn(c) < 0, {}};
  if (mono.empty()) p.text = to_string(a);
  else if (a == 1) p.text = mono;
  else p.text = to_string(a) + "*" + mono;
  return p;
}

Piece scalar_piece(const Cyclotomic& c, const std::string& mono) {
  if (c.is_rational()) return scalar_piece(c.rational_part(), mono);
  std::string body = "(" + c.to_string() + ")";
  return Piece{false, mono.empty() ? body : body + "*" + mono};
}

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string s = pieces[0].neg ? "-" + pieces[0].text : pieces[0].text;
  for (size_t i = 1; i < pieces.size(); ++i) s += (pieces[i].neg ? " - " : " + ") + pieces[i].text;
  return s;
}

template <class Coeff>
std::string render(const SparsePoly<Coeff>& p) {
  const PolyRing& ring = *p.ring();
  const int zs = 1 + ring.m();
  const int w = ring.width();
  std::vector<Piece> top;
  auto it = p.terms().begin();
  while (it != p.terms().end()) {
    auto jt = it;
    size_t count = 0;
    while (jt != p.terms().end() && std::equal(it->first.begin() + zs, it->first.end(), jt->first.begin() + zs)) {
      ++jt;
      ++count;
    }
    const std::string zm = mono_text(ring, it->first, zs, w);
    if (count == 1) {
      top.push_back(scalar_piece(it->second, mono_text(ring, it->first, 0, w)));
    } else {
      std::vector<Piece> inner;
      for (auto kt = it; kt != jt; ++kt) inner.push_back(scalar_piece(kt->second, mono_text(ring, kt->first, 0, zs)));
      if (zm.empty()) {
        top.insert(top.end(), inner.begin(), inner.end());
      } else {
        bool flip = inner[0].neg;
        if (flip)
          for (auto& q : inner) q.neg = !q.neg;
        top.push_back(Piece{flip, "(" + join(inner) + ")*" + zm});
      }
    }
    it = jt;
  }
  return join(top);
}

template <class Coeff>
nlohmann::json json_of(const SparsePoly<Coeff>& p) {
  const PolyRing& ring = *p.ring();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    if constexpr (std::is_same_v<Coeff, Rational>) {
      t["coeff"] = to_string(c);
    } else {
      nlohmann::json cs = nlohmann::json::array();
      for (const auto& r : c.coeffs()) cs.push_back(to_string(r));
      t["coeff"] = cs;
    }
    t["q"] = e[0];
    t["Q"] = std::vector<int>(e.begin() + 1, e.begin() + 1 + ring.m());
    t["z"] = z_part(ring, e);
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["params"] = ring.params().to_string();
  j["text"] = render(p);
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

std::string to_string(const MPoly& p) { return render(p); }
std::string to_string(const CycPoly& p) { return render(p); }

nlohmann::json to_json(const MPoly& p) { return json_of(p); }

nlohmann::json to_json(const CycPoly& p) {
  nlohmann::json j = json_of(p);
  j["zeta_order"] = p.ring()->m();
  return j;
}

MPoly mpoly_from_json(const nlohmann::json& j, const RingPtr& ring) {
  MPoly p(ring);
  try {
    for (const auto& t : j.at("terms")) {
      Exponent e(ring->width(), 0);
      e[0] = t.at("q").get<int>();
      auto Q = t.at("Q").get<std::vector<int>>();
      auto z = t.at("z").get<std::vector<int>>();
      if (static_cast<int>(Q.size()) != ring->m() || static_cast<int>(z.size()) != ring->nz())
        throw ParameterError("JSON term does not match the variable universe");
      std::copy(Q.begin(), Q.end(), e.begin() + 1);
      std::copy(z.begin(), z.end(), e.begin() + 1 + ring->m());
      p += MPoly::monomial(ring, e, Rational(t.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParameterError(std::string("malformed polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParameterError(std::string("malformed coefficient: ") + ex.what());
  }
  return p;
}

// ---- parsing ----

namespace {

class Parser {
 public:
  Parser(std::string_view s, const RingPtr& ring) : s_(s), ring_(ring) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParameterError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    return std::string(s_.substr(b, pos_ - b));
  }

  MPoly expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        Rational d(digits());
        if (sgn(d) == 0) fail("division by zero");
        acc = acc.scaled(Rational(1) / d);
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    long e = std::stol(digits());
    if (!neg) return base.pow(static_cast<unsigned>(e));
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& [ex, c] = *base.terms().begin();
    for (size_t i = 1; i < ex.size(); ++i)
      if (ex[i]) fail("negative power of a variable other than q");
    Exponent inv(ex.size(), 0);
    inv[0] = -ex[0];
    MPoly one_over = MPoly::monomial(ring_, inv, Rational(1) / c);
    return one_over.pow(static_cast<unsigned>(e));
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return mp_constant(ring_, Rational(digits()));
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    size_t b = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id(s_.substr(b, pos_ - b));
    if (id == "q") return mp_q(ring_);
    auto index = [&](size_t from) -> int {
      if (id.size() <= from) fail("missing index in '" + id + "'");
      for (size_t i = from; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) fail("bad identifier '" + id + "'");
      return std::stoi(id.substr(from));
    };
    if (id[0] == 'Q') return mp_Q(ring_, index(1));
    if (id[0] == 'x' || id[0] == 'y') {
      index(1);
      return mp_z(ring_, ring_->params().parse_symbol_name(id));
    }
    fail("unknown identifier '" + id + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace sfrob
