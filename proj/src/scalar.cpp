#include "cremona/scalar.hpp"

#include <cctype>
#include <charconv>

#include "cremona/error.hpp"

namespace cremona {

namespace modarith {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return pow(a, p - 2, p);
}

}  // namespace modarith

namespace {

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t reduce_ll(long long v, std::uint64_t p) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p <= (1ULL << 20) || p >= (1ULL << 62))
    fail(ErrorCode::InvalidArgument, "prime must lie in (2^20, 2^62): " + std::to_string(p));
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rational();
  if (spec.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto body = spec.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      fail(ErrorCode::InvalidArgument, "bad prime in field mode: " + std::string(spec));
    return prime(p);
  }
  fail(ErrorCode::InvalidArgument, "field mode must be q or fp:<prime>, got " + std::string(spec));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  return Scalar(ModP{reduce_ll(v, prime_), prime_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar(ModP{reduce_mpz(v, prime_), prime_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string str(s);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    bool ok = !str.empty();
    for (std::size_t i = 0; i < str.size(); ++i) {
      char c = str[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && str.size() > 1))) ok = false;
    }
    if (!ok) fail(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    return mpz_class(str);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return from_mpz(num) / from_mpz(den);
}

Scalar Field::random(std::mt19937_64& rng, long bound) const {
  if (is_rational()) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    long a = num(rng);
    long b = den(rng);
    return Scalar(mpq_class(a, static_cast<unsigned long>(b)));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, prime_ - 1);
  return Scalar(ModP{d(rng), prime_});
}

Scalar Field::random_nonzero(std::mt19937_64& rng, long bound) const {
  for (;;) {
    Scalar s = random(rng, bound);
    if (!s.is_zero()) return s;
  }
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(prime_);
}

Field Scalar::field() const {
  if (is_rational()) return Field::rational();
  // The prime was validated when its field was created.
  return Field(Field::Kind::Prime, std::get<ModP>(v_).prime);
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(rational()) == 0;
  return residue().value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return residue().value == 1;
}

Scalar Scalar::zero_like() const { return from_int_like(0); }
Scalar Scalar::one_like() const { return from_int_like(1); }

Scalar Scalar::from_int_like(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  std::uint64_t p = residue().prime;
  return Scalar(ModP{reduce_ll(v, p), p});
}

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index() || (!is_rational() && residue().prime != o.residue().prime))
    fail(ErrorCode::MixedFields, "arithmetic between elements of different fields");
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const ModP& m = residue();
  return Scalar(ModP{m.value == 0 ? 0 : m.prime - m.value, m.prime});
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  const ModP& m = residue();
  return Scalar(ModP{modarith::inv(m.value, m.prime), m.prime});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) += o.rational();
  } else {
    ModP& m = std::get<ModP>(v_);
    std::uint64_t s = m.value + o.residue().value;
    m.value = s >= m.prime ? s - m.prime : s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) -= o.rational();
  } else {
    ModP& m = std::get<ModP>(v_);
    std::uint64_t b = o.residue().value;
    m.value = m.value >= b ? m.value - b : m.value + m.prime - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(v_) *= o.rational();
  } else {
    ModP& m = std::get<ModP>(v_);
    m.value = modarith::mul(m.value, o.residue().value, m.prime);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (is_rational()) {
    std::get<mpq_class>(v_) /= o.rational();
  } else {
    ModP& m = std::get<ModP>(v_);
    m.value = modarith::mul(m.value, modarith::inv(o.residue().value, m.prime), m.prime);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return a.residue().value == b.residue().value && a.residue().prime == b.residue().prime;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one_like();
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

}  // namespace cremona
