#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spinlab/error.hpp"
#include "spinlab/exact_field.hpp"

using namespace spinlab;
using oracle::I;
using oracle::q;
using oracle::sqrt2;
using oracle::sqrt3;
using oracle::sqrt6;

TEST_SUITE("exact_field") {

TEST_CASE("addition examples") {
  CHECK(sqrt2() + sqrt2() == QuadExt::radical(QuadExt::kSqrt2, 2));
  CHECK((QuadExt(1) + I()) + (QuadExt(1) - I()) == QuadExt(2));
  CHECK(QuadExt() + sqrt6() == sqrt6());
  CHECK(ef_add(sqrt3(), -sqrt3()).is_zero());
}

TEST_CASE("multiplication examples") {
  CHECK(sqrt2() * sqrt3() == sqrt6());
  CHECK((QuadExt(1) + sqrt3()) * (QuadExt(1) - sqrt3()) == QuadExt(-2));
  CHECK(sqrt6() * sqrt6() == QuadExt(6));
  CHECK(sqrt2() * sqrt6() == QuadExt::radical(QuadExt::kSqrt3, 2));
  CHECK(I() * I() == QuadExt(-1));
  const QuadExt lhs = QuadExt::radical(QuadExt::kSqrt2, oracle::rat(1, 2)) * I();
  const QuadExt rhs = QuadExt::radical(QuadExt::kSqrt6, oracle::rat(1, 2));
  CHECK(ef_mul(lhs, rhs) == QuadExt::radical(QuadExt::kSqrt3, oracle::rat(1, 2)) * I());
}

TEST_CASE("conjugation examples") {
  CHECK(ef_conj(QuadExt(1) + I()) == QuadExt(1) - I());
  CHECK(ef_conj(sqrt2()) == sqrt2());
  CHECK(ef_conj(I() * sqrt6()) == -(I() * sqrt6()));
}

TEST_CASE("inverse examples") {
  CHECK(ef_inv(sqrt2()) == QuadExt::radical(QuadExt::kSqrt2, oracle::rat(1, 2)));
  CHECK(ef_inv(QuadExt(2)) == q(1, 2));
  CHECK(ef_inv(QuadExt(1) + I()) == (QuadExt(1) - I()) * q(1, 2));
  const QuadExt messy = QuadExt(1) + sqrt2() + sqrt3() + sqrt6() + I();
  CHECK(messy * ef_inv(messy) == QuadExt(1));
  CHECK(messy / messy == QuadExt(1));
}

TEST_CASE("inverse of zero") {
  try {
    ef_inv(QuadExt());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("radicals of integers") {
  CHECK(ef_from_sqrt_int(6, oracle::rat(1, 2)) == QuadExt::radical(QuadExt::kSqrt6, oracle::rat(1, 2)));
  CHECK(ef_from_sqrt_int(4) == QuadExt(2));
  CHECK(ef_from_sqrt_int(0).is_zero());
  CHECK(ef_from_sqrt_int(12) == QuadExt::radical(QuadExt::kSqrt3, 2));
  CHECK(ef_from_sqrt_int(72, oracle::rat(1, 3)) == QuadExt::radical(QuadExt::kSqrt2, 2));
  for (std::uint64_t bad : {5u, 7u, 10u, 15u, 20u}) {
    try {
      ef_from_sqrt_int(bad);
      FAIL("expected UnrepresentableRadical for " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnrepresentableRadical);
      CHECK(std::string(to_string(e.kind())) == "unrepresentable-radical");
    }
  }
}

TEST_CASE("numeric evaluation") {
  CHECK(ef_to_complex(QuadExt::radical(QuadExt::kSqrt3, 4)).real() ==
        doctest::Approx(6.928203230275509).epsilon(1e-15));
  CHECK(ef_to_complex(sqrt3()).real() == doctest::Approx(1.7320508075688772).epsilon(1e-15));
  const Complex half = ef_to_complex(q(1, 2) + I() * q(1, 2));
  CHECK(half == Complex(0.5, 0.5));
  CHECK(std::abs(ef_to_complex(sqrt2()) - Complex(std::sqrt(2.0), 0.0)) <= 1e-15);
}

TEST_CASE("exact square roots and moduli") {
  // (6 - 2 sqrt3)^2 = 24 (2 - sqrt3)
  CHECK(ef_sqrt_real(QuadExt(24) * (QuadExt(2) - sqrt3())) == QuadExt(6) - sqrt3() * QuadExt(2));
  CHECK(ef_sqrt_real(QuadExt(24) * (QuadExt(2) + sqrt3())) == QuadExt(6) + sqrt3() * QuadExt(2));
  CHECK(ef_sqrt_real(q(1, 2)) == QuadExt::radical(QuadExt::kSqrt2, oracle::rat(1, 2)));
  CHECK(ef_sqrt_real(QuadExt(5) + sqrt6() * QuadExt(2)) == sqrt2() + sqrt3());
  CHECK(ef_abs((QuadExt(1) + I()) * q(1, 2)) == QuadExt::radical(QuadExt::kSqrt2, oracle::rat(1, 2)));
  CHECK(ef_abs(sqrt6() * q(1, 4) * (QuadExt(1) + I())) == QuadExt::radical(QuadExt::kSqrt3, oracle::rat(1, 2)));
  CHECK(ef_abs(QuadExt(-3)) == QuadExt(3));
  CHECK_THROWS_AS(ef_sqrt_real(QuadExt(5)), Error);
  CHECK_THROWS_AS(ef_sqrt_real(QuadExt(-1)), Error);
}

TEST_CASE("render and parse round trip") {
  CHECK(to_string(QuadExt()) == "0");
  CHECK(parse_quadext("sqrt3") == sqrt3());
  CHECK(parse_quadext("i") == I());
  CHECK(parse_quadext("i*sqrt2") == I() * sqrt2());
  CHECK(parse_quadext("-3/4") == q(-3, 4));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const QuadExt a = oracle::random_element(rng);
    CHECK(parse_quadext(to_string(a)) == a);
  }
  CHECK_THROWS_AS(parse_quadext("sqrt5"), Error);
  CHECK_THROWS_AS(parse_quadext("1 + banana"), Error);
}

TEST_CASE("field axioms on 1000 random cases") {
  std::mt19937_64 rng(20240611);
  const QuadExt zero;
  const QuadExt one(1);
  int nonzero = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadExt a = oracle::random_element(rng);
    const QuadExt b = oracle::random_element(rng);
    const QuadExt c = oracle::random_element(rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE(a - a == zero);
    REQUIRE(ef_conj(a * b) == ef_conj(a) * ef_conj(b));
    REQUIRE(ef_conj(ef_conj(a)) == a);
    if (!a.is_zero()) {
      ++nonzero;
      REQUIRE(ef_mul(a, ef_inv(a)) == one);
    }
  }
  CHECK(nonzero > 900);
}

TEST_CASE("numeric homomorphism on coordinates in [-10, 10]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 10);
  auto draw = [&] {
    std::array<BigRational, 4> re;
    std::array<BigRational, 4> im;
    for (int k = 0; k < 4; ++k) {
      // den >= 1 and |num| <= 10 * den keeps every coordinate inside [-10, 10].
      const long d = den(rng);
      re[k] = BigRational(num(rng) * d / 10, d);
      im[k] = BigRational(num(rng) * d / 10, d);
      re[k].canonicalize();
      im[k].canonicalize();
    }
    return QuadExt::from_coords(re, im);
  };
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadExt a = draw();
    const QuadExt b = draw();
    const Complex expected = ef_to_complex(a) * ef_to_complex(b);
    worst = std::max(worst, std::abs(ef_to_complex(ef_mul(a, b)) - expected));
    CHECK(std::abs(oracle::approx(a) - ef_to_complex(a)) <= 1e-12);
  }
  CHECK(worst <= 1e-12);
}

}  // TEST_SUITE
