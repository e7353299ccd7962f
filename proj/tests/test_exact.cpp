#include <gtest/gtest.h>

#include <random>

#include "chebconv/exact.hpp"
#include "chebconv/ratfunc.hpp"
#include "oracles.hpp"

using namespace chebconv;

namespace {

const Poly kX{0, 1};

TEST(Poly, CanonicalForm) {
  EXPECT_TRUE(Poly{}.is_zero());
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ(Poly({0, 0, 0}), Poly{});
  EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(to_string(Poly{-1, 0, 4}), "4*x^2 - 1");
  EXPECT_EQ(to_string(Poly{0, -3, 0, 4}), "4*x^3 - 3*x");
}

TEST(Poly, Add) {
  EXPECT_EQ(kX + Poly({0, -1}), Poly{});
  EXPECT_EQ(Poly{1} + Poly({0, 2}), Poly({1, 2}));
  EXPECT_EQ(Poly({-1, 0, 2}) + Poly{1}, Poly({0, 0, 2}));
}

TEST(Poly, Mul) {
  EXPECT_EQ(kX * Poly{}, Poly{});
  EXPECT_EQ(kX * Poly({0, 2}), Poly({0, 0, 2}));
  EXPECT_EQ(Poly({-1, 0, 2}) * Poly({-1, 0, 2}), Poly({1, 0, -4, 0, 4}));
}

TEST(Poly, Compose) {
  const Poly t2{-1, 0, 2};
  EXPECT_EQ(compose(Poly{0, 0, 1}, t2), Poly({1, 0, -4, 0, 4}));
  const Poly p{3, -1, 7, 2};
  EXPECT_EQ(compose(p, kX), p);
  EXPECT_EQ(compose(kX, p), p);
}

TEST(Poly, Eval) {
  EXPECT_EQ(eval(Poly{-1, 0, 2}, Rat(2)), 7);
  EXPECT_EQ(eval(Poly{5, 3, 9}, Rat(0)), 5);
  EXPECT_EQ(eval(Poly{-1, 0, 4}, make_rat(1, 2)), 0);
  EXPECT_EQ(eval(Poly{}, Rat(3)), 0);
}

TEST(Poly, GcdAndExactDivision) {
  const Poly a = Poly{-1, 1} * Poly{2, 3};  // (x-1)(3x+2)
  const Poly b = Poly{-1, 1} * Poly{5, 0, 1};
  EXPECT_EQ(poly_gcd(Poly{6} * a, Poly{4} * b), Poly({-1, 1}));
  EXPECT_EQ(div_exact(a, Poly{-1, 1}), Poly({2, 3}));
  EXPECT_THROW(div_exact(Poly{1, 0, 1}, Poly{-1, 1}), std::logic_error);
  EXPECT_EQ(content(Poly{6, -4, 10}), 2);
  EXPECT_EQ(primitive_part(Poly{6, -4, -10}), Poly({-3, 2, 5}));
}

TEST(RatFunc, Make) {
  EXPECT_EQ(ratfunc_make(Poly{-1, 0, 1}, Poly{-1, 1}), RatFunc(Poly{1, 1}, Poly{1}));
  const Poly p{2, -1, 5};
  EXPECT_EQ(ratfunc_make(p, p), RatFunc(Poly{1}, Poly{1}));
  const auto r = ratfunc_make(Poly{0, 2}, Poly{4});
  EXPECT_EQ(r.num(), Poly({0, 1}));
  EXPECT_EQ(r.den(), Poly({2}));
}

TEST(RatFunc, SignAndZero) {
  const auto r = ratfunc_make(Poly{1}, Poly{0, -2});
  EXPECT_EQ(r.num(), Poly({-1}));
  EXPECT_EQ(r.den(), Poly({0, 2}));
  const auto z = ratfunc_make(Poly{}, Poly{3, 1});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), Poly({1}));
  EXPECT_THROW(ratfunc_make(Poly{1}, Poly{}), ZeroDenominator);
}

TEST(RatFunc, EvalPole) {
  const auto r = ratfunc_make(Poly{1}, Poly{-1, 1});
  EXPECT_EQ(r(Rat(3)), make_rat(1, 2));
  EXPECT_THROW(r(Rat(1)), PoleError);
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(make_rat(3, 2), 2), make_rat(3, 8));
  EXPECT_EQ(gen_binomial(Rat(-1), -2), -1);
  EXPECT_EQ(gen_binomial(Rat(5), 0), 1);
}

TEST(GenBinomial, NegativeLowerIndexConventions) {
  EXPECT_EQ(gen_binomial(Rat(-1), -1), 1);
  EXPECT_EQ(gen_binomial(Rat(0), -1), 0);
  EXPECT_EQ(gen_binomial(Rat(3), -2), 0);
  EXPECT_EQ(gen_binomial(make_rat(-1, 2), -2), 0);
  EXPECT_EQ(gen_binomial(Rat(-1), -3), 0);
  EXPECT_EQ(gen_binomial(Rat(7), -5), 0);
}

TEST(GenBinomial, NegativeUpperIntegers) {
  // C(-1, k) = (-1)^k
  for (long k = 0; k < 10; ++k) EXPECT_EQ(gen_binomial(Rat(-1), k), k % 2 == 0 ? 1 : -1);
  // Integer and rational paths agree: C(-3, 4) = 15
  EXPECT_EQ(gen_binomial(Rat(-3), 4), 15);
}

TEST(Rat, ZeroDenominator) { EXPECT_THROW(make_rat(1, 0), ZeroDenominator); }

// --- properties -------------------------------------------------------------

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = oracle::random_poly(rng, 30, 1'000'000);
    const Poly b = oracle::random_poly(rng, 30, 1'000'000);
    const Poly c = oracle::random_poly(rng, 30, 1'000'000);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Poly{});
    EXPECT_EQ(a * Poly{1}, a);
  }
}

TEST(PolyProperties, EvalOfCompose) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = oracle::random_poly(rng, 8, 50);
    const Poly q = oracle::random_poly(rng, 6, 50);
    const Rat x = oracle::random_rat(rng, 20, 9);
    EXPECT_EQ(eval(compose(p, q), x), eval(p, eval(q, x)));
  }
}

TEST(RatFuncProperties, MakeIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly common = oracle::random_poly(rng, 3, 9);
    Poly num = oracle::random_poly(rng, 5, 30) * common;
    Poly den = oracle::random_poly(rng, 5, 30) * common;
    if (den.is_zero()) continue;
    const RatFunc r = ratfunc_make(num, den);
    const RatFunc again = ratfunc_make(r.num(), r.den());
    EXPECT_EQ(r, again);
    EXPECT_GT(r.den().leading(), 0);
    if (!r.is_zero()) {
      EXPECT_EQ(gcd(content(r.num()), content(r.den())), 1);
    }
    EXPECT_EQ(poly_gcd(r.num(), r.den()).degree(), 0);
    // same rational function: num * r.den == den * r.num
    EXPECT_EQ(num * r.den(), den * r.num());
  }
}

TEST(GenBinomialProperties, MatchesFactorialRatio) {
  for (unsigned long a = 0; a <= 30; ++a) {
    for (unsigned long k = 0; k <= a; ++k) {
      EXPECT_EQ(gen_binomial(Rat(static_cast<long>(a)), static_cast<long>(k)),
                Rat(oracle::factorial_binomial(a, k)));
    }
  }
}

TEST(GenBinomialProperties, RationalUpperArgumentPascalRule) {
  // C(a, k) = C(a-1, k) + C(a-1, k-1) for rational a and k >= 1
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const Rat a = oracle::random_rat(rng, 40, 7);
    const long k = 1 + trial % 9;
    EXPECT_EQ(gen_binomial(a, k), gen_binomial(Rat(a - 1), k) + gen_binomial(Rat(a - 1), k - 1));
  }
}

}  // namespace
