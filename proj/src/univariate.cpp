#include "univariate.hpp"

#include <algorithm>

#include "cremona/error.hpp"

namespace cremona::detail {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> r = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Scalar> r = c_;
  if (r.size() < o.c_.size()) {
    Scalar z = o.c_[0].zero_like();
    r.resize(o.c_.size(), z);
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, c_[0].zero_like());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& v : r) v *= s;
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * c_[i].from_int_like(static_cast<long long>(i)));
  return UPoly(std::move(r));
}

Scalar UPoly::eval(const Scalar& t) const {
  if (is_zero()) return t.zero_like();
  Scalar acc = c_.back();
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    acc *= t;
    acc += c_[i];
  }
  return acc;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) {
    q = {};
    r = a;
    return;
  }
  std::vector<Scalar> rem = a.c_;
  std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, a.c_[0].zero_like());
  Scalar inv_lead = b.lead().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Scalar f = rem[k + b.degree()] * inv_lead;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(b.c_.size() - 1 > 0 ? b.c_.size() - 1 : 0);
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::divexact(const UPoly& b) const {
  UPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) fail(ErrorCode::NotDivisible, "univariate division is not exact");
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return p.divexact(g).monic();
}

// ---------------------------------------------------------------------------
// Root finding.

namespace {

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = modarith::mul(a[i], b[j], p);
      r[i + j] = (r[i + j] + t) % p;
    }
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  std::uint64_t inv_lead = modarith::inv(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint64_t f = modarith::mul(a.back(), inv_lead, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = modarith::mul(f, b[j], p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly mod_quo(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {};
  ModPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv_lead = modarith::inv(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint64_t f = modarith::mul(a.back(), inv_lead, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = modarith::mul(f, b[j], p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

ModPoly mod_monic(ModPoly f, std::uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  std::uint64_t inv_lead = modarith::inv(f.back(), p);
  for (auto& c : f) c = modarith::mul(c, inv_lead, p);
  return f;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(a, p);
}

// base^e mod f.
ModPoly mod_powmod(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
  ModPoly r{1};
  base = mod_rem(base, f, p);
  while (e) {
    if (e & 1) r = mod_rem(mod_mul(r, base, p), f, p);
    e >>= 1;
    if (e) base = mod_rem(mod_mul(base, base, p), f, p);
  }
  return r;
}

ModPoly mod_derivative(const ModPoly& f, std::uint64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(modarith::mul(f[i], i % p, p));
  trim(d);
  return d;
}

// f is monic and a product of distinct linear factors.
void split_linear(const ModPoly& f, std::uint64_t p, std::vector<std::uint64_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back((p - f[0]) % p);
    return;
  }
  for (std::uint64_t delta = 1;; ++delta) {
    ModPoly shifted{delta % p, 1};
    ModPoly t = mod_powmod(shifted, (p - 1) / 2, f, p);
    if (t.empty()) t = {0};
    t[0] = (t[0] + p - 1) % p;
    trim(t);
    ModPoly g = mod_gcd(f, t, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split_linear(g, p, out);
      split_linear(mod_monic(mod_quo(f, g, p), p), p, out);
      return;
    }
  }
}

// Distinct roots in F_p of f.
std::vector<std::uint64_t> mod_roots(ModPoly f, std::uint64_t p) {
  f = mod_monic(f, p);
  std::vector<std::uint64_t> out;
  if (f.size() <= 1) return out;
  ModPoly xp = mod_powmod(ModPoly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  trim(xp);
  ModPoly g = mod_gcd(f, xp, p);
  split_linear(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mpz_mod_u(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

mpz_class eval_mpz(const std::vector<mpz_class>& c, const mpz_class& t, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * t + c[i];
    acc %= m;
  }
  return acc;
}

// Finds a/b with a = b*r mod m and |a|, |b| <= sqrt(m/2), if one exists.
bool rational_reconstruct(const mpz_class& r, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

std::vector<Scalar> rational_roots(const UPoly& sqf) {
  std::vector<Scalar> roots;
  // Clear denominators and make the coefficients a primitive integer vector.
  mpz_class lcm_den = 1;
  for (const auto& c : sqf.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : sqf.coeffs()) {
    mpq_class v = c.rational() * lcm_den;
    ic.push_back(v.get_num());
  }
  std::size_t shift = 0;
  while (shift < ic.size() && ic[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(sqf[0].zero_like());
    ic.erase(ic.begin(), ic.begin() + static_cast<long>(shift));
  }
  if (ic.size() <= 1) return roots;
  const mpz_class& lc = ic.back();
  const mpz_class& c0 = ic.front();
  mpz_class height = abs(lc) > abs(c0) ? mpz_class(abs(lc)) : mpz_class(abs(c0));
  mpz_class target = 2 * height * height + 1;

  std::vector<mpz_class> dc;
  for (std::size_t i = 1; i < ic.size(); ++i) dc.push_back(ic[i] * static_cast<unsigned long>(i));

  mpz_class prime_z = 2147483647;  // 2^31 - 1
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uint64_t p = prime_z.get_ui();
    mpz_nextprime(prime_z.get_mpz_t(), prime_z.get_mpz_t());
    if (mpz_mod_u(lc, p) == 0 || mpz_mod_u(c0, p) == 0) continue;
    ModPoly fp;
    for (const auto& c : ic) fp.push_back(mpz_mod_u(c, p));
    ModPoly g = mod_gcd(fp, mod_derivative(fp, p), p);
    if (g.size() > 1) continue;  // not squarefree mod p
    for (std::uint64_t r0 : mod_roots(fp, p)) {
      mpz_class m = static_cast<unsigned long>(p);
      mpz_class r = static_cast<unsigned long>(r0);
      while (m < target) {
        mpz_class m2 = m * m;
        mpz_class fv = eval_mpz(ic, r, m2);
        mpz_class dv = eval_mpz(dc, r, m2);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t()) == 0) break;
        r = (r - fv * inv) % m2;
        if (r < 0) r += m2;
        m = m2;
      }
      mpq_class cand;
      if (!rational_reconstruct(r, m, cand)) continue;
      Scalar s(cand);
      if (sqf.eval(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  fail(ErrorCode::GenericityFailure, "no suitable prime found for rational root isolation");
}

}  // namespace

RootSet find_roots(const UPoly& p) {
  RootSet out;
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  UPoly sqf = squarefree_part(p);
  if (sqf.degree() <= 0) return out;
  if (sqf[0].is_rational()) {
    out.roots = rational_roots(sqf);
  } else {
    std::uint64_t prime = sqf[0].residue().prime;
    ModPoly f;
    for (const auto& c : sqf.coeffs()) f.push_back(c.residue().value);
    for (std::uint64_t r : mod_roots(f, prime)) out.roots.push_back(Scalar(ModP{r, prime}));
  }
  out.split = static_cast<int>(out.roots.size()) == sqf.degree();
  return out;
}

}  // namespace cremona::detail
