#include <random>

#include "cremona/error.hpp"
#include "cremona/scalar.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

// Inverse modulo p by the extended Euclidean algorithm, independent of the
// Fermat exponentiation used by the library.
std::uint64_t euclid_inverse(std::uint64_t a, std::uint64_t p) {
  __int128 r0 = p, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p;
  return static_cast<std::uint64_t>(t0);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Field q = Field::rational();
  CHECK(q.parse_scalar("2/3") + q.parse_scalar("1/6") == q.parse_scalar("5/6"));
  CHECK((q.parse_scalar("1/2") * q.parse_scalar("2/1")).is_one());
  CHECK(q.parse_scalar("4/6").to_string() == "2/3");
  CHECK(q.parse_scalar("-3").to_string() == "-3");
  CHECK(q.parse_scalar("3/-6").to_string() == "-1/2");
}

TEST_CASE("prime field inverse matches extended Euclid") {
  Field f = Field::prime(1000000007);
  Scalar three = f.from_int(3);
  CHECK(three.inverse().residue().value == 333333336);
  CHECK(euclid_inverse(3, 1000000007) == 333333336);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = f.random_nonzero(rng);
    CHECK(a.inverse().residue().value == euclid_inverse(a.residue().value, 1000000007));
  }
}

TEST_CASE("errors") {
  Field q = Field::rational();
  Field f = Field::prime(1000000007);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([&] { (void)(q.one() / q.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)f.zero().inverse(); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)(q.one() + f.one()); }) == ErrorCode::MixedFields);
  CHECK(code_of([&] { (void)q.parse_scalar("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { (void)q.parse_scalar("abc"); }) == ErrorCode::ParseError);
  CHECK_THROWS_AS(Field::prime(1000000008), Error);
  CHECK_THROWS_AS(Field::prime(97), Error);
  CHECK(Field::parse("fp:1000000007") == f);
  CHECK(Field::parse("q") == q);
}

TEST_CASE("field axioms on random samples") {
  for (Field f : {Field::rational(), Field::prime(1000000007), Field::prime((1ULL << 61) - 1)}) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (f.is_rational()) {
        mpz_class g;
        Scalar s = a * b + c;
        const mpq_class& v = s.rational();
        mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(v.get_den() > 0);
      }
    }
  }
}

TEST_CASE("integers reduce modulo p") {
  Field f = Field::prime(1000000007);
  CHECK(f.parse_scalar("-1").residue().value == 1000000006);
  CHECK(f.parse_scalar("1000000008").is_one());
  CHECK(f.parse_scalar("1/2") * f.from_int(2) == f.one());
}
