#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fdzeta/bernoulli.hpp"
#include "fdzeta/numctx.hpp"
#include "oracle.hpp"

using namespace fdzeta;

TEST_CASE("make_context caches universal constants") {
  const auto ctx = make_context(50);
  CHECK(ctx.digits == 50);
  CHECK(ctx.guard_digits == 10);
  CHECK(ctx.working_digits() == 60);
  auto g = ctx.activate();
  CHECK(ctx.pi.str(21, std::ios_base::fixed) == "3.141592653589793238462");
  CHECK(ctx.ln2.str(20, std::ios_base::fixed) == "0.69314718055994530942");
}

TEST_CASE("make_context validates the digit range") {
  CHECK_THROWS_AS(make_context(5), usage_error);
  CHECK_THROWS_AS(make_context(9), usage_error);
  CHECK_THROWS_AS(make_context(10001), usage_error);
  CHECK_NOTHROW(make_context(10));
  CHECK_NOTHROW(make_context(200));
}

TEST_CASE("guard digits scale with the request") {
  CHECK(make_context(10).guard_digits == 10);
  CHECK(make_context(100).guard_digits == 10);
  CHECK(make_context(500).guard_digits == 50);
}

TEST_CASE("cached pi agrees with an independent recomputation") {
  for (unsigned digits : {15u, 50u, 120u}) {
    const auto ctx = make_context(digits);
    auto g = ctx.activate();
    CHECK(abs(ctx.pi - oracle::machin_pi(ctx)) <= ctx.eps());
  }
}

TEST_CASE("exact rational arithmetic round-trips") {
  std::mt19937_64 rng(20260810);
  for (int i = 0; i < 200; ++i) {
    const long an = static_cast<long>(rng() % 2000001) - 1000000;
    const long bn = static_cast<long>(rng() % 1000000) + 1;
    const long cn = static_cast<long>(rng() % 2000001) - 1000000;
    const long dn = static_cast<long>(rng() % 1000000) + 1;
    const ExactRational a(an, bn), c(cn, dn);
    CHECK((a + c) - c == a);
    CHECK(boost::multiprecision::denominator(a) > 0);
  }
}

TEST_CASE("bernoulli numbers match the textbook table") {
  CHECK(bernoulli_number(0) == ExactRational(1));
  CHECK(bernoulli_number(1) == ExactRational(-1, 2));
  CHECK(bernoulli_number(2) == ExactRational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == ExactRational(-1, 30));
  CHECK(bernoulli_number(5) == 0);
  CHECK(bernoulli_number(6) == ExactRational(1, 42));
  CHECK(bernoulli_number(8) == ExactRational(-1, 30));
  CHECK(bernoulli_number(10) == ExactRational(5, 66));
  CHECK(bernoulli_number(12) == ExactRational(-691, 2730));
}

TEST_CASE("even bernoulli numbers alternate in sign") {
  for (unsigned k = 1; 2 * k <= 60; ++k) {
    const ExactRational b = bernoulli_number(2 * k);
    if (k % 2 == 1)
      CHECK(b > 0);
    else
      CHECK(b < 0);
  }
}

TEST_CASE("odd bernoulli numbers above 1 vanish") {
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("periodic bernoulli polynomial values") {
  const auto ctx = make_context(40);
  auto g = ctx.activate();
  // B_1(t) = t - 1/2 at 0.25
  CHECK(abs(bernoulli_polynomial_periodic(1, HPReal("0.25"), ctx) + HPReal("0.25")) <=
        ctx.eps());
  // B_2(0) = B_2 = 1/6
  CHECK(abs(bernoulli_polynomial_periodic(2, HPReal(0), ctx) - to_real(ExactRational(1, 6))) <=
        ctx.eps());
  // periodicity: B_2({2.5}) = B_2(0.5) = 1/4 - 1/2 + 1/6 = -1/12
  CHECK(abs(bernoulli_polynomial_periodic(2, HPReal("2.5"), ctx) -
            to_real(ExactRational(-1, 12))) <= ctx.eps());
}

TEST_CASE("periodic bernoulli polynomial has period 1") {
  const auto ctx = make_context(30);
  auto g = ctx.activate();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 40);
    const HPReal x = oracle::uniform(rng, HPReal(0), HPReal(5));
    const HPReal lhs = bernoulli_polynomial_periodic(n, x, ctx);
    const HPReal rhs = bernoulli_polynomial_periodic(n, x + 1, ctx);
    CHECK(abs(lhs - rhs) <= pow(HPReal(10), -static_cast<int>(ctx.working_digits() - 10)));
  }
}

TEST_CASE("periodic bernoulli polynomial rejects n = 0") {
  const auto ctx = make_context(20);
  CHECK_THROWS_AS(bernoulli_polynomial_periodic(0, HPReal(1), ctx), usage_error);
}

TEST_CASE("decimal rendering prints the requested significant digits") {
  const auto ctx = make_context(20);
  auto g = ctx.activate();
  const std::string s = decimal_string(ctx.pi, 20);
  CHECK(s.substr(0, 21) == "3.1415926535897932385");
  CHECK(s.find('e') != std::string::npos);
}
