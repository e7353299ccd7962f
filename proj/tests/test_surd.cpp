#include <gtest/gtest.h>

#include "chebconv/surd.hpp"
#include "oracles.hpp"

using namespace chebconv;

namespace {

TEST(Surd, SymbolicExamples) {
  // S_{0,1} = U_0/U_1 = 1/(2x)
  EXPECT_EQ(s_series(0, 1), ratfunc_make(Poly{1}, Poly{0, 2}));
  // S_{0,2} = U_1/U_2 = 2x/(4x^2-1)
  EXPECT_EQ(s_closed(0, 2), ratfunc_make(Poly{0, 2}, Poly{-1, 0, 4}));
  // S_{1,1} = U_2/U_3
  EXPECT_EQ(s_recursive(1, 1), ratfunc_make(Poly{-1, 0, 4}, Poly{0, -4, 0, 8}));
}

TEST(Surd, RoutesAgree) {
  for (long d = 1; d <= 63; ++d) {
    for (long n = 0; detail::ipow(d + 1, n + 1) <= 64; ++n) {
      const RatFunc closed = s_closed(n, d);
      EXPECT_EQ(s_series(n, d), closed) << n << "," << d;
      EXPECT_EQ(s_recursive(n, d), closed) << n << "," << d;
    }
  }
}

TEST(Surd, QuadraticGapIdentityHoldsSymbolically) {
  for (long d = 1; d <= 63; ++d) {
    for (long n = 0; detail::ipow(d + 1, n + 1) <= 64; ++n) {
      const auto sides = theorem1_residual(n, d);
      EXPECT_EQ(sides.lhs, sides.rhs) << n << "," << d;
    }
  }
}

TEST(SurdEval, Examples) {
  EXPECT_EQ(s_eval(1, 1, Rat(2)), make_rat(15, 56));
  EXPECT_EQ(s_eval(0, 1, Rat(2)), make_rat(1, 4));
  EXPECT_EQ(s_eval(0, 2, Rat(3)), make_rat(6, 35));
  EXPECT_EQ(s_eval(0, 3, Rat(2)), make_rat(15, 56));
}

TEST(SurdEval, MatchesSymbolicAndOracle) {
  const Rat xs[] = {Rat(2), Rat(-3), make_rat(5, 2), make_rat(7, 3), make_rat(1, 3)};
  for (const Rat& x : xs) {
    for (long d = 1; d <= 4; ++d) {
      for (long n = 0; detail::ipow(d + 1, n + 1) <= 125; ++n) {
        const long idx = detail::ipow(d + 1, n + 1);
        const auto u = oracle::u_values(idx - 1, x);
        const Rat want = Rat(u[static_cast<std::size_t>(idx - 2)] / u[static_cast<std::size_t>(idx - 1)]);
        EXPECT_EQ(s_eval(n, d, x), want);
        EXPECT_EQ(s_closed(n, d)(x), want);
      }
    }
  }
}

TEST(Gap, Examples) {
  EXPECT_EQ(gap_certificate(0, 1, Rat(2)), make_rat(1, 16));
  EXPECT_EQ(gap_certificate(1, 1, Rat(2)), make_rat(1, 3136));
  EXPECT_EQ(gap_certificate(0, 2, Rat(2)), make_rat(1, 225));
}

TEST(Gap, EqualsQuadraticAtTheApproximant) {
  const Rat xs[] = {Rat(2), Rat(3), make_rat(5, 2), Rat(-3), make_rat(-9, 7)};
  for (const Rat& x : xs) {
    for (long d = 1; d <= 4; ++d) {
      for (long n = 0; n <= 2; ++n) {
        const Rat s = s_eval(n, d, x);
        EXPECT_EQ(gap_certificate(n, d, x), Rat(s * s - 2 * x * s + 1)) << n << "," << d << " " << x;
      }
    }
  }
}

TEST(Gap, StrictlyDecreasingInNAndD) {
  const Rat xs[] = {Rat(2), Rat(3), make_rat(5, 2), Rat(-3)};
  for (const Rat& x : xs) {
    for (long d = 1; d <= 3; ++d) {
      Rat prev = gap_certificate(0, d, x);
      for (long n = 1; n <= 3; ++n) {
        const Rat g = gap_certificate(n, d, x);
        EXPECT_LT(g, prev) << n << "," << d << " " << x;
        EXPECT_GT(g, 0);
        prev = g;
      }
    }
    Rat prev = gap_certificate(0, 1, x);
    for (long d = 2; d <= 4; ++d) {
      const Rat g = gap_certificate(0, d, x);
      EXPECT_LT(g, prev) << d << " " << x;
      EXPECT_GT(g, 0);
      prev = g;
    }
  }
}

TEST(Gap, ApproximantLiesBetweenZeroAndOneForPositiveX) {
  // 0 < S < 1 for x > 1, and S approaches the smaller root r from below:
  // p(S) > 0 puts S outside [r, 1/r].
  const Rat xs[] = {Rat(2), Rat(3), make_rat(5, 2), make_rat(11, 10)};
  for (const Rat& x : xs) {
    for (long d = 1; d <= 3; ++d) {
      for (long n = 0; n <= 2; ++n) {
        const Rat s = s_eval(n, d, x);
        EXPECT_GT(s, 0);
        EXPECT_LT(s, 1);
        // S < x - sqrt(x^2-1) iff (x-S)^2 > x^2 - 1, since x - S > 0.
        EXPECT_GT(Rat((x - s) * (x - s)), Rat(x * x - 1));
        EXPECT_EQ(Rat(s * s - 2 * x * s + 1), gap_certificate(n, d, x));
      }
    }
  }
}

TEST(Surd, Errors) {
  EXPECT_THROW(s_closed(14, 1), DegreeOverflow);
  EXPECT_THROW(s_series(3, 15), DegreeOverflow);
  EXPECT_NO_THROW(s_closed(2, 3));
  EXPECT_THROW(s_eval(-1, 1, Rat(2)), DomainError);
  EXPECT_THROW(s_eval(0, 0, Rat(2)), DomainError);
  EXPECT_THROW(s_closed(0, 0), DomainError);
  // U_1(0) = 0 so S_{0,1} has a pole at x = 0.
  EXPECT_THROW(s_eval(0, 1, Rat(0)), PoleError);
  EXPECT_THROW(gap_certificate(0, 1, Rat(1)), DomainError);
  EXPECT_THROW(gap_certificate(0, 1, make_rat(-1, 2)), DomainError);
}

TEST(SurdEval, LargeIndexIsExact) {
  // (d+1)^{n+1} = 2^20; compare against two adjacent transfer-matrix values.
  const Rat x(3);
  const Int idx = detail::surd_index(19, 1);
  const Rat want = Rat(cheb_eval_big(ChebKind::Second, Int(idx - 2), x) /
                       cheb_eval_big(ChebKind::Second, Int(idx - 1), x));
  EXPECT_EQ(s_eval(19, 1, x), want);
}

}  // namespace
