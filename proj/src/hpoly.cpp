#include "cremona/hpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cremona/error.hpp"
#include "univariate.hpp"

namespace cremona {

using detail::UPoly;

bool grlex_greater(const Exponent& a, const Exponent& b) {
  int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
  if (da != db) return da > db;
  if (a[0] != b[0]) return a[0] > b[0];
  return a[1] > b[1];
}

HPoly::HPoly(Field f, int degree) : field_(f), degree_(degree) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "negative polynomial degree");
}

HPoly::HPoly(Field f, int degree, std::vector<Term> terms) : HPoly(f, degree) {
  for (const auto& t : terms) {
    if (t.e[0] < 0 || t.e[1] < 0 || t.e[2] < 0 || t.e[0] + t.e[1] + t.e[2] != degree)
      fail(ErrorCode::DegreeMismatch, "term is not of degree " + std::to_string(degree));
    if (!(t.c.field() == f)) fail(ErrorCode::MixedFields, "coefficient from another field");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.e, b.e); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().e == t.e)
      terms_.back().c += t.c;
    else
      terms_.push_back(std::move(t));
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.c.is_zero(); }),
               terms_.end());
}

HPoly HPoly::constant(const Scalar& c) { return HPoly(c.field(), 0, {{{0, 0, 0}, c}}); }

HPoly HPoly::variable(Field f, int index) {
  if (index < 0 || index > 2) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent e{0, 0, 0};
  e[index] = 1;
  return HPoly(f, 1, {{e, f.one()}});
}

HPoly HPoly::monomial(const Scalar& c, Exponent e) {
  return HPoly(c.field(), e[0] + e[1] + e[2], {{e, c}});
}

HPoly HPoly::linear(const Scalar& a, const Scalar& b, const Scalar& c) {
  return HPoly(a.field(), 1, {{{1, 0, 0}, a}, {{0, 1, 0}, b}, {{0, 0, 1}, c}});
}

Scalar HPoly::coeff(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.e == e) return t.c;
  return field_.zero();
}

const Scalar& HPoly::leading_coeff() const {
  if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.front().c;
}

HPoly HPoly::operator-() const {
  HPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

HPoly HPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return HPoly(field_, degree_);
  HPoly r = *this;
  for (auto& t : r.terms_) t.c *= s;
  return r;
}

HPoly HPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

HPoly HPoly::pow(unsigned e) const {
  HPoly r = constant(field_.one());
  HPoly b = *this;
  while (e) {
    if (e & 1) r = hp_mul(r, b);
    e >>= 1;
    if (e) b = hp_mul(b, b);
  }
  return r;
}

Scalar HPoly::evaluate(const std::array<Scalar, 3>& p) const {
  std::array<std::vector<Scalar>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(field_.one());
    for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * p[v]);
  }
  Scalar acc = field_.zero();
  for (const auto& t : terms_) acc += t.c * powers[0][t.e[0]] * powers[1][t.e[1]] * powers[2][t.e[2]];
  return acc;
}

Exponent HPoly::monomial_content() const {
  if (is_zero()) return {0, 0, 0};
  Exponent m = terms_.front().e;
  for (const auto& t : terms_)
    for (int v = 0; v < 3; ++v) m[v] = std::min(m[v], t.e[v]);
  return m;
}

HPoly HPoly::divide_monomial(const Exponent& e) const {
  int d = e[0] + e[1] + e[2];
  if (d > degree_) fail(ErrorCode::NotDivisible, "monomial of higher degree");
  HPoly r(field_, degree_ - d);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent ne{t.e[0] - e[0], t.e[1] - e[1], t.e[2] - e[2]};
    if (ne[0] < 0 || ne[1] < 0 || ne[2] < 0) fail(ErrorCode::NotDivisible, "monomial does not divide");
    r.terms_.push_back({ne, t.c});
  }
  return r;
}

bool operator==(const HPoly& a, const HPoly& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text form.

std::string HPoly::to_string() const {
  if (is_zero()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.c;
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (t.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (t.e[v] > 1) mono += "^" + std::to_string(t.e[v]);
    }
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  HPoly run() {
    std::vector<HPoly::Term> terms;
    skip();
    if (pos_ >= s_.size()) error("empty polynomial");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negate));
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') error("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    int deg = -1;
    for (const auto& t : terms) {
      int d = t.e[0] + t.e[1] + t.e[2];
      if (t.c.is_zero()) continue;
      if (deg >= 0 && d != deg) fail(ErrorCode::DegreeMismatch, "polynomial is not homogeneous: " + std::string(s_));
      deg = d;
    }
    if (deg < 0) deg = terms.front().e[0] + terms.front().e[1] + terms.front().e[2];
    std::vector<HPoly::Term> kept;
    for (auto& t : terms)
      if (!t.c.is_zero()) kept.push_back(std::move(t));
    return HPoly(f_, deg, std::move(kept));
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  HPoly::Term term(bool negate) {
    skip();
    Scalar c = f_.one();
    bool any = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (pos_ < s_.size() && peek() == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) error("missing denominator");
        num += "/" + den;
      }
      c = f_.parse_scalar(num);
      any = true;
    }
    Exponent e{0, 0, 0};
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !is_var(peek())) {
          pos_ = save;
          error("expected variable after '*'");
        }
      }
      if (!is_var(peek())) break;
      int v = peek() - 'x';
      ++pos_;
      int power = 1;
      skip();
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        skip();
        std::string p = digits();
        if (p.empty() || p.size() > 4) error("bad exponent");
        power = std::stoi(p);
      }
      e[v] += power;
      any = true;
    }
    if (!any) error("expected term");
    return {e, negate ? -c : c};
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HPoly HPoly::parse(const Field& f, std::string_view text) { return PolyParser(f, text).run(); }

// ---------------------------------------------------------------------------
// Arithmetic.

namespace {

void check_fields(const HPoly& f, const HPoly& g) {
  if (!(f.field() == g.field())) fail(ErrorCode::MixedFields, "polynomials over different fields");
}

}  // namespace

HPoly hp_add(const HPoly& f, const HPoly& g) {
  check_fields(f, g);
  if (g.is_zero()) return f;
  if (f.is_zero()) return g;
  if (f.degree() != g.degree())
    fail(ErrorCode::DegreeMismatch,
         "adding polynomials of degrees " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
  std::vector<HPoly::Term> out;
  out.reserve(f.size() + g.size());
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].e, b[j].e))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].e, a[i].e)) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].c + b[j].c;
      if (!s.is_zero()) out.push_back({a[i].e, s});
      ++i;
      ++j;
    }
  }
  return HPoly(f.field(), f.degree(), std::move(out));
}

HPoly hp_sub(const HPoly& f, const HPoly& g) { return hp_add(f, -g); }

HPoly hp_mul(const HPoly& f, const HPoly& g) {
  check_fields(f, g);
  int d = f.degree() + g.degree();
  if (f.is_zero() || g.is_zero()) return HPoly(f.field(), d);
  const int w = d + 1;
  std::vector<Scalar> acc(static_cast<std::size_t>(w) * w, f.field().zero());
  std::vector<char> used(acc.size(), 0);
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) {
      std::size_t idx = static_cast<std::size_t>(s.e[0] + t.e[0]) * w + (s.e[1] + t.e[1]);
      acc[idx] += s.c * t.c;
      used[idx] = 1;
    }
  std::vector<HPoly::Term> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) {
      std::size_t idx = static_cast<std::size_t>(i) * w + j;
      if (used[idx] && !acc[idx].is_zero()) out.push_back({{i, j, d - i - j}, std::move(acc[idx])});
    }
  return HPoly(f.field(), d, std::move(out));
}

HPoly hp_substitute(const HPoly& f, const HPoly& gx, const HPoly& gy, const HPoly& gz) {
  check_fields(f, gx);
  check_fields(f, gy);
  check_fields(f, gz);
  int d = -1;
  for (const HPoly* g : {&gx, &gy, &gz}) {
    if (g->is_zero()) continue;
    if (d >= 0 && g->degree() != d) fail(ErrorCode::DegreeMismatch, "substituted polynomials differ in degree");
    d = g->degree();
  }
  if (d < 0) d = gx.degree();
  HPoly result(f.field(), f.degree() * d);
  if (f.is_zero()) return result;
  std::array<std::vector<HPoly>, 3> powers;
  const HPoly* gs[3] = {&gx, &gy, &gz};
  for (int v = 0; v < 3; ++v) {
    int need = 0;
    for (const auto& t : f.terms()) need = std::max(need, t.e[v]);
    powers[v].push_back(HPoly::constant(f.field().one()));
    for (int k = 1; k <= need; ++k) powers[v].push_back(hp_mul(powers[v].back(), *gs[v]));
  }
  // Terms sharing the x exponent are contiguous; factor that power out.
  const auto& terms = f.terms();
  std::size_t i = 0;
  while (i < terms.size()) {
    int ex = terms[i].e[0];
    HPoly inner(f.field(), (f.degree() - ex) * d);
    for (; i < terms.size() && terms[i].e[0] == ex; ++i) {
      const auto& t = terms[i];
      inner = hp_add(inner, hp_mul(powers[1][t.e[1]], powers[2][t.e[2]]).scaled(t.c));
    }
    result = hp_add(result, hp_mul(powers[0][ex], inner));
  }
  return result;
}

HPoly hp_divexact(const HPoly& f, const HPoly& g) {
  check_fields(f, g);
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  int qd = f.degree() - g.degree();
  if (f.is_zero()) return HPoly(f.field(), std::max(qd, 0));
  if (qd < 0) fail(ErrorCode::NotDivisible, "divisor has larger degree");
  if (g.size() == 1) {
    const auto& lt = g.terms().front();
    HPoly q = f.divide_monomial(lt.e);
    return lt.c.is_one() ? q : q.scaled(lt.c.inverse());
  }
  auto cmp = [](const Exponent& a, const Exponent& b) { return grlex_greater(a, b); };
  std::map<Exponent, Scalar, decltype(cmp)> rem(cmp);
  for (const auto& t : f.terms()) rem.emplace(t.e, t.c);
  const auto& glead = g.terms().front();
  Scalar inv_lead = glead.c.inverse();
  std::vector<HPoly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponent e{it->first[0] - glead.e[0], it->first[1] - glead.e[1], it->first[2] - glead.e[2]};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) fail(ErrorCode::NotDivisible, "polynomial division is not exact");
    Scalar qc = it->second * inv_lead;
    for (const auto& t : g.terms()) {
      Exponent m{t.e[0] + e[0], t.e[1] + e[1], t.e[2] + e[2]};
      auto [pos, inserted] = rem.try_emplace(m, f.field().zero());
      pos->second -= qc * t.c;
      if (pos->second.is_zero()) rem.erase(pos);
    }
    quotient.push_back({e, qc});
  }
  return HPoly(f.field(), qd, std::move(quotient));
}

int hp_order_at_origin(const HPoly& f, int chart) {
  if (chart < 0 || chart > 2) fail(ErrorCode::InvalidArgument, "chart index out of range");
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "order of the zero polynomial");
  int best = f.degree();
  for (const auto& t : f.terms()) best = std::min(best, f.degree() - t.e[chart]);
  return best;
}

// ---------------------------------------------------------------------------
// Greatest common divisor. Powers of z are split off, the rest is
// dehomogenized at z = 1 and handled as a polynomial in x over K[y].

namespace {

using Bivar = std::vector<UPoly>;  // index = power of x

void trim(Bivar& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

Bivar dehomogenize(const HPoly& f) {
  Bivar b;
  for (const auto& t : f.terms()) {
    if (static_cast<int>(b.size()) <= t.e[0]) b.resize(t.e[0] + 1);
    std::vector<Scalar> c = b[t.e[0]].coeffs();
    if (static_cast<int>(c.size()) <= t.e[1]) c.resize(t.e[1] + 1, f.field().zero());
    c[t.e[1]] = t.c;
    b[t.e[0]] = UPoly(std::move(c));
  }
  trim(b);
  return b;
}

HPoly homogenize(const Field& f, const Bivar& b) {
  int deg = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) deg = std::max(deg, static_cast<int>(i) + b[i].degree());
  std::vector<HPoly::Term> terms;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j <= b[i].degree(); ++j)
      if (!b[i][j].is_zero()) terms.push_back({{static_cast<int>(i), j, deg - static_cast<int>(i) - j}, b[i][j]});
  return HPoly(f, deg, std::move(terms));
}

UPoly content(const Bivar& b) {
  UPoly c;
  for (const auto& u : b) {
    c = detail::gcd(c, u);
    if (c.degree() == 0) break;
  }
  return c;
}

Bivar divide_coeffs(const Bivar& b, const UPoly& c) {
  Bivar r;
  r.reserve(b.size());
  for (const auto& u : b) r.push_back(u.is_zero() ? u : u.divexact(c));
  return r;
}

Bivar primitive_part(const Bivar& b) {
  if (b.empty()) return b;
  UPoly c = content(b);
  return c.degree() == 0 ? b : divide_coeffs(b, c);
}

// Pseudo-remainder of a by b with respect to x.
Bivar pseudo_remainder(Bivar a, const Bivar& b) {
  const UPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    UPoly la = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& u : a) u = u * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - la * b[k];
    trim(a);
  }
  return a;
}

Bivar bivariate_gcd(Bivar a, Bivar b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly c = detail::gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Bivar r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& u : a) u = u * c;
  return a;
}

}  // namespace

HPoly hp_gcd(const HPoly& f, const HPoly& g) {
  check_fields(f, g);
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::ZeroPolynomial, "gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  Exponent mf = f.monomial_content(), mg = g.monomial_content();
  Exponent m{std::min(mf[0], mg[0]), std::min(mf[1], mg[1]), std::min(mf[2], mg[2])};
  HPoly mono = HPoly::monomial(f.field().one(), m);
  HPoly fr = f.divide_monomial(mf), gr = g.divide_monomial(mg);
  if (fr.degree() == 0 || gr.degree() == 0) return mono;
  HPoly core = homogenize(f.field(), bivariate_gcd(dehomogenize(fr), dehomogenize(gr)));
  return hp_mul(mono, core).monic();
}

}  // namespace cremona
