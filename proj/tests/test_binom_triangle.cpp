#include <gtest/gtest.h>

#include <random>

#include "chebconv/binom_triangle.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace chebconv;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(FEval, Examples) {
  EXPECT_EQ(f_eval({Rat(0), make_rat(3, 2), 2, make_rat(3, 2)}), 2);
  EXPECT_EQ(f_eval({Rat(0), make_rat(3, 2), 2, make_rat(1, 2)}), 2);
  EXPECT_EQ(f_eval({Rat(0), make_rat(-17, 5), 0, make_rat(9, 4)}), 1);
  EXPECT_EQ(f_eval({Rat(0), Rat(40), 0, Rat(-3)}), 1);
  EXPECT_THROW(f_eval({Rat(0), Rat(1), -1, Rat(0)}), DomainError);
}

TEST(FEval, ConstantInX) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> mdist(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat a = oracle::random_rat(rng, 12, 4);
    const Rat d = oracle::random_rat(rng, 12, 4);
    const long m = mdist(rng);
    const Rat first = f_eval({a, d, m, Rat(0)});
    for (int k = 0; k < 5; ++k) {
      const Rat x = oracle::random_rat(rng, 30, 7);
      EXPECT_EQ(f_eval({a, d, m, x}), first) << "a=" << a << " d=" << d << " m=" << m << " x=" << x;
    }
  }
}

TEST(FIdentities, Examples) {
  for (const FParams& p : {FParams{Rat(2), Rat(1), 1, Rat(0)},
                           FParams{Rat(-1), make_rat(5, 2), 2, make_rat(1, 3)},
                           FParams{Rat(0), make_rat(3, 2), 2, Rat(7)}}) {
    const auto r = f_identity_residuals(p);
    EXPECT_EQ(r.trivial, 0);
    EXPECT_EQ(r.shift_down, 0);
    EXPECT_EQ(r.shift_up, 0);
  }
  EXPECT_THROW(f_identity_residuals({Rat(1), Rat(1), 0, Rat(0)}), DomainError);
}

TEST(FIdentities, RandomParameters) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> mdist(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const FParams p{oracle::random_rat(rng, 10, 3), oracle::random_rat(rng, 10, 3), mdist(rng),
                    oracle::random_rat(rng, 10, 5)};
    const auto r = f_identity_residuals(p);
    EXPECT_EQ(r.trivial, 0);
    EXPECT_EQ(r.shift_down, 0);
    EXPECT_EQ(r.shift_up, 0);
  }
}

TEST(Triangle, Rows) {
  const auto t = triangle(9);
  EXPECT_EQ(t.row(0), ints({1}));
  EXPECT_EQ(t.row(4), ints({1, 0, 2, 2, 1}));
  EXPECT_EQ(t.row(8), ints({1, 0, 4, 12, 22, 24, 16, 6, 1}));
  EXPECT_EQ(t.at(3, 4), 0);
  EXPECT_EQ(t.at(3, -1), 0);
}

TEST(Triangle, GoldenNineRows) {
  const auto want = golden::triangle_rows();
  ASSERT_EQ(want.size(), 9u);
  EXPECT_EQ(triangle(9).rows(), want);
}

TEST(Triangle, EntriesMatchTheBinomialSum) {
  EXPECT_EQ(l_via_f(4, 2, make_rat(3, 2)), 2);
  EXPECT_EQ(l_via_f(7, 4, Rat(0)), 13);
  EXPECT_EQ(l_via_f(5, 0, make_rat(22, 7)), -1);
  EXPECT_THROW(l_via_f(3, 4, Rat(0)), DomainError);

  std::mt19937_64 rng(4);
  const auto t = triangle(17);
  for (long i = 0; i <= 16; ++i) {
    for (long j = 0; j <= i; ++j) {
      for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(l_via_f(i, j, oracle::random_rat(rng, 25, 6)), Rat(t.at(i, j))) << i << "," << j;
      }
    }
  }
}

TEST(QPoly, Examples) {
  EXPECT_EQ(q_poly(0), QPoly({Rat(1)}));
  EXPECT_EQ(q_poly(1), QPoly({Rat(-1), Rat(1)}));
  const QPoly q2 = q_poly(2);
  EXPECT_LE(q2.degree(), 2);
  for (long z = 0; z <= 5; ++z) EXPECT_EQ(eval(q2, Rat(z)), f_eval({Rat(0), make_rat(z, 2), 2, Rat(0)}));
  EXPECT_THROW(q_poly(-1), DomainError);
}

TEST(QPoly, IntegerValuedAndMatchesTheSum) {
  for (long N = 0; N <= 8; ++N) {
    const QPoly q = q_poly(N);
    EXPECT_LE(q.degree(), N);
    for (long z = -10; z <= 20; ++z) {
      const Rat v = eval(q, Rat(z));
      EXPECT_TRUE(is_integer(v)) << N << " " << z << " " << v;
      EXPECT_EQ(v, f_eval({Rat(0), make_rat(z, 2), N, make_rat(z, 3)})) << N << " " << z;
    }
  }
}

TEST(BinomialIdentities, Examples) {
  EXPECT_EQ(binom_l_identity(4, 2), 0);
  EXPECT_EQ(binom_l_identity(8, 0), 0);
  EXPECT_EQ(binom_l_identity(3, 3), 0);
  EXPECT_TRUE(power_identity_residual(0).is_zero());
  EXPECT_TRUE(power_identity_residual(2).is_zero());
  EXPECT_TRUE(power_identity_residual(6).is_zero());
}

TEST(BinomialIdentities, HoldForAllSmallIndices) {
  for (long n = 0; n <= 30; ++n) {
    for (long k = 0; k <= n + 1; ++k) EXPECT_EQ(binom_l_identity(n, k), 0) << n << "," << k;
    EXPECT_TRUE(power_identity_residual(n).is_zero()) << n;
  }
}

TEST(MatrixM, Examples) {
  const auto m = matrix_M(alternating_alpha(3), 3);
  const std::vector<std::vector<long>> want{{1, 1, 1}, {-1, 0, 1}, {1, 1, 2}};
  const auto pascal = matrix_M(ints({1, 1, 1}), 3);
  const std::vector<std::vector<long>> want_pascal{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m(i, j), want[i][j]);
      EXPECT_EQ(pascal(i, j), want_pascal[i][j]);
    }
  }
  EXPECT_THROW(matrix_M(ints({2, 1}), 2), DomainError);
  EXPECT_THROW(matrix_M(ints({1}), 2), DomainError);
  EXPECT_THROW(matrix_M(ints({1}), 0), DomainError);
}

TEST(MatrixM, AlternatingBoundaryGivesTriangle) {
  const std::size_t n = 12;
  const auto m = matrix_M(alternating_alpha(n), n);
  const auto t = triangle(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_EQ(m(i, j), t.at(static_cast<long>(i + j), static_cast<long>(j)));
}

TEST(MatrixM, ClosedFormAgrees) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Int> alpha{Int(1)};
    for (int k = 1; k < 10; ++k) alpha.push_back(oracle::random_int(rng, 100));
    EXPECT_EQ(matrix_M(alpha, 10), matrix_M_closed_form(alpha, 10));
  }
}

TEST(LuCheck, Examples) {
  const auto r = lu_check(alternating_alpha(9), 9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.leading_dets, std::vector<Int>(9, Int(1)));
  EXPECT_TRUE(lu_check(ints({1, 1, 1, 1, 1, 1}), 6).ok());
  const auto one = lu_check(ints({1}), 1);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.M(0, 0), 1);
}

TEST(LuCheck, DeterminantsAgreeWithElimination) {
  std::mt19937_64 rng(99);
  std::vector<std::vector<Int>> alphas{alternating_alpha(12)};
  for (int k = 0; k < 5; ++k) {
    std::vector<Int> a{Int(1)};
    for (int i = 1; i < 12; ++i) a.push_back(oracle::random_int(rng, 1000));
    alphas.push_back(a);
  }
  for (const auto& alpha : alphas) {
    for (std::size_t size = 1; size <= 12; ++size) {
      const auto r = lu_check(alpha, size);
      EXPECT_TRUE(r.factorization_holds);
      EXPECT_TRUE(r.unipotent);
      EXPECT_TRUE(r.ok());
      std::vector<std::vector<Int>> block(size, std::vector<Int>(size));
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) block[i][j] = r.M(i, j);
      EXPECT_EQ(oracle::bareiss_det(block), 1) << size;
    }
  }
}

TEST(Sequences, GoldenTerms) {
  for (const auto& [name, terms] : golden::sequences()) {
    EXPECT_EQ(sequences(parse_sequence_name(name), terms.size()), terms) << name;
  }
  EXPECT_THROW(parse_sequence_name("fibonacci"), UnknownSequence);
  EXPECT_THROW(sequences(SequenceName::RowSums, 0), DomainError);
}

TEST(Sequences, RowSumRecurrences) {
  const auto s = sequences(SequenceName::RowSums, 41);
  for (std::size_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(s[n], 2 * (s[n - 1] + (n % 2 == 0 ? 1 : -1))) << n;
    if (n >= 2) {
      EXPECT_EQ(s[n], 2 * s[n - 2] + s[n - 1]) << n;
    }
  }
}

TEST(Sequences, TermsMatchDirectRowSums) {
  const auto t = triangle(30);
  const auto a = sequences(SequenceName::WeightKPlus1, 30);
  const auto e = sequences(SequenceName::Weight2KPlus1, 30);
  for (long n = 0; n < 30; ++n) {
    Int wa = 0, we = 0;
    for (long k = 0; k <= n; ++k) {
      wa += t.at(n, k) * (k + 1);
      we += t.at(n, k) * (2 * k + 1);
    }
    EXPECT_EQ(a[static_cast<std::size_t>(n)], wa);
    EXPECT_EQ(e[static_cast<std::size_t>(n)], we);
  }
}

}  // namespace
