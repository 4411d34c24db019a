#include <gtest/gtest.h>

#include <random>

#include "oracles/iterated_oracle.hpp"
#include "oracles/linalg_oracle.hpp"
#include "rcflab/exactalg.hpp"
#include "test_support.hpp"

using namespace rcf;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

BigInt oracle_res(const ZPoly& a, const ZPoly& b) {
  return oracle::sylvester_resultant(a.coeffs(), a.degree(), b.coeffs(), b.degree());
}

ZPoly golden_product(int n) {
  auto g = testing_support::golden();
  ZPoly prod(1L);
  for (const auto& f : g["periodic_polys"][std::to_string(n)]) prod *= zpoly_from_json(f);
  return prod;
}

}  // namespace

TEST(QuadExt, FieldArithmetic) {
  QuadExt s = sigma_const(), d = delta_const();
  EXPECT_EQ(s * d, QuadExt(1));
  EXPECT_EQ(s.conj(), QuadExt(-1, -1));
  EXPECT_EQ(s.norm(), BigRational(-1));
  QuadExt x(BigRational(3, 7), BigRational(-5, 2));
  QuadExt y(BigRational(11), BigRational(1, 3));
  EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
  EXPECT_EQ(x / y * y, x);
  EXPECT_THROW(QuadExt(0).inverse(), DomainError);
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_EQ(parse_rational("6/4"), BigRational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Resultant, SmallExamples) {
  EXPECT_EQ(resultant(zp({-1, 0, 1}), zp({-2, 1})), BigInt(3));
  EXPECT_EQ(resultant(zp({-2, 1}), zp({-1, 0, 1})), BigInt(3));
  EXPECT_THROW(resultant(ZPoly(), zp({1, 1})), DomainError);
  EXPECT_THROW(resultant(zp({1, 1}), ZPoly()), DomainError);
  // common root
  EXPECT_EQ(resultant(zp({-1, 0, 1}), zp({-1, 1})), BigInt(0));
  // constants
  EXPECT_EQ(resultant(zp({5}), zp({1, 2, 3})), BigInt(25));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    ZPoly a = testing_support::random_zpoly(rng, 6, 9);
    ZPoly b = testing_support::random_zpoly(rng, 6, 9);
    ASSERT_EQ(resultant(a, b), oracle_res(a, b)) << to_string(a) << " | " << to_string(b);
  }
}

TEST(Resultant, OverRationalsAndQuadExt) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    ZPoly a = testing_support::random_zpoly(rng, 5, 6);
    ZPoly b = testing_support::random_zpoly(rng, 5, 6);
    const BigInt z = resultant(a, b);
    EXPECT_EQ(resultant(to_q(a), to_q(b)), BigRational(z));
    EXPECT_EQ(resultant(to_k(a), to_k(b)), QuadExt(z));
  }
}

TEST(Resultant, MultiplicativeAndAntisymmetric) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    ZPoly f = testing_support::random_zpoly(rng, 3, 8);
    ZPoly g = testing_support::random_zpoly(rng, 3, 8);
    ZPoly h = testing_support::random_zpoly(rng, 3, 8);
    EXPECT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
    const int s = (f.degree() * g.degree()) & 1 ? -1 : 1;
    EXPECT_EQ(resultant(g, f), BigInt(s) * resultant(f, g));
  }
}

TEST(Resultant, BivariateCoefficientsMatchEvaluation) {
  // Res_y(f(x, y), f(y, t)) specialised at integer points equals the specialised determinant.
  ZBiPoly r2 = iterated_resultant(2);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      BigInt val = eval_inner(r2, BigInt(b)).eval(BigInt(a));
      std::vector<mpz_class> pa{BigInt(a * a), BigInt(a * a - 1), BigInt(1)};
      std::vector<mpz_class> q{BigInt(b * b - b), BigInt(0), BigInt(b + 1)};
      EXPECT_EQ(val, oracle::sylvester_resultant(pa, 2, q, 2)) << a << "," << b;
    }
}

TEST(IteratedResultant, FirstStepIsTheCurve) {
  EXPECT_EQ(iterated_resultant(1), f_curve());
  EXPECT_THROW(iterated_resultant(0), DomainError);
}

TEST(IteratedResultant, SecondStepModTwo) {
  ZBiPoly r2 = iterated_resultant(2);
  // (x^4 + t)(t + 1)^3 mod 2, x outer
  F2Poly t1 = F2Poly::x() + F2Poly(1L);
  F2Poly cube = pow(t1, 3);
  std::vector<F2Poly> rows(5);
  rows[0] = F2Poly::x() * cube;
  rows[4] = cube;
  BiPoly<Gf2> expect(std::move(rows));
  BiPoly<Gf2> got = r2.map<F2Poly>([](const ZPoly& row) { return reduce_mod2(row); });
  EXPECT_EQ(got, expect);
}

TEST(IteratedResultant, AgreesWithEvaluationInterpolation) {
  for (int n = 1; n <= 3; ++n) {
    ZBiPoly fast = iterated_resultant(n);
    auto slow = oracle::iterated_full(n);
    ASSERT_EQ(fast.size(), slow.size()) << n;
    for (std::size_t i = 0; i < slow.size(); ++i) {
      EXPECT_EQ(fast[i].coeffs(), slow[i]) << "n=" << n << " row " << i;
    }
  }
  // the constant coefficient of R^(3) from the oracle
  auto slow3 = oracle::iterated_full(3);
  EXPECT_EQ(iterated_resultant(3)[0].coeff(0), slow3[0].empty() ? BigInt(0) : slow3[0][0]);
}

TEST(PeriodicPoly, PrintedFactorisations) {
  EXPECT_EQ(periodic_poly(1), zp({0, -1, 2, 1}));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(canonical(periodic_poly(n)), canonical(golden_product(n))) << n;
  }
}

TEST(PeriodicPoly, DegreeFormula) {
  auto chain = iterated_resultant_chain(6);
  for (int n = 1; n <= 6; ++n) {
    ZPoly r = normalize_periodic(diagonal(chain[static_cast<std::size_t>(n - 1)]));
    EXPECT_EQ(r.degree(), (1 << (n + 1)) - 1);
    EXPECT_GT(sgn(r.lc()), 0);
    EXPECT_EQ(content(r), BigInt(1));
  }
}

TEST(PeriodicPoly, DivisibilityForDividingPeriods) {
  const ZPoly r1 = periodic_poly(1), r2 = periodic_poly(2), r3 = periodic_poly(3),
              r4 = periodic_poly(4);
  EXPECT_NO_THROW(divexact(r2, r1));
  EXPECT_NO_THROW(divexact(r3, r1));
  EXPECT_NO_THROW(divexact(r4, r2));
  EXPECT_THROW(divexact(r3, r2), InternalError);
}

TEST(Mod2Congruence, HoldsThroughSix) {
  auto chain = iterated_resultant_chain(6);
  for (int n = 1; n <= 6; ++n) {
    auto r = check_mod2_congruence(normalize_periodic(diagonal(chain[static_cast<std::size_t>(n - 1)])), n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_TRUE(r.residual.zero());
  }
}

TEST(Mod2Congruence, DetectsFlippedOddCoefficient) {
  for (int n = 1; n <= 3; ++n) {
    ZPoly r = periodic_poly(n);
    for (int k = 0; k <= r.degree(); ++k) {
      if (!mpz_odd_p(r[static_cast<std::size_t>(k)].get_mpz_t())) continue;
      ZPoly m = r + ZPoly::monomial(BigInt(1), k);
      auto res = check_mod2_congruence(m, n);
      EXPECT_FALSE(res.holds);
      EXPECT_EQ(res.residual, F2Poly::monomial(Gf2(1), k));
      break;
    }
  }
}

TEST(Graeffe, RootsAreSquared) {
  // (x - 2)(x + 3) -> (x - 4)(x - 9)
  EXPECT_EQ(graeffe_square(zp({-6, 1, 1})), zp({36, -13, 1}));
}

TEST(Bivariate, AllIdentitiesHold) {
  auto ids = check_bivariate_identities();
  ASSERT_EQ(ids.size(), 5u);
  for (const auto& r : ids) EXPECT_TRUE(r.passed()) << r.id << ": " << r.description;
}

TEST(Bivariate, WrongSigmaFails) {
  EXPECT_TRUE(f_transform_identity(sigma_const()).passed());
  EXPECT_FALSE(f_transform_identity(QuadExt(1)).passed());
}

TEST(Bivariate, GOfSquaresFactors) {
  // the factorisation identity is over the integers; check at points as well
  ZBiPoly f = f_curve(), g = g_curve();
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      BigInt gx = eval_inner(g, BigInt(y * y)).eval(BigInt(x * x));
      BigInt fp = eval_inner(f, BigInt(y)).eval(BigInt(x));
      BigInt fm = eval_inner(f, BigInt(-y)).eval(BigInt(x));
      EXPECT_EQ(gx, fp * fm);
    }
}

TEST(Rational, J22AndCayleyInvariance) {
  for (const auto& r : check_rational_identities()) EXPECT_TRUE(r.passed()) << r.id;
}

TEST(Mobius, GroupLaws) {
  using namespace maps;
  EXPECT_TRUE(A_bar().compose(A_bar()).is_identity());
  EXPECT_TRUE(A().same_map(rho().compose(A_bar())));
  EXPECT_TRUE(B().same_map(MobiusMap(1, sigma_const(), sigma_const(), -1)));
  EXPECT_TRUE(check_group({MobiusMap(), A(), A_bar(), rho()}).ok());
  EXPECT_TRUE(check_group({MobiusMap(), B(), B_bar(), rho()}).ok());
  EXPECT_FALSE(check_group({MobiusMap(), A(), B(), rho()}).ok());
  EXPECT_THROW(MobiusMap(1, 1, 1, 1), DomainError);
}

TEST(Mobius, ApplyMatchesComposition) {
  using namespace maps;
  QuadExt x(BigRational(2, 5), BigRational(1, 3));
  EXPECT_EQ(A().compose(B()).apply(x), A().apply(B().apply(x)));
  EXPECT_EQ(t_map().apply(x), (x - sigma_const() * sigma_const()) /
                                 (sigma_const() * sigma_const() * x - QuadExt(1)));
}

TEST(FdEquation, QuarticsFromBd) {
  // hand expansion: both give x^4 - x^3 + x + 1
  EXPECT_EQ(build_fd_from_bd(zp({2, -1, 1}), 1, 1), zp({1, 1, 0, -1, 1}));
  EXPECT_EQ(build_fd_from_bd(zp({2, 1, 1}), 1, 0), zp({1, 1, 0, -1, 1}));
  EXPECT_EQ(build_fd_from_bd(zp({2, -1, 1}), 1, 0), zp({1, -1, 0, 1, 1}));
  EXPECT_THROW(build_fd_from_bd(zp({3, -1, 1}), 1, 1), DomainError);
  EXPECT_THROW(build_fd_from_bd(zp({2, -1, 1}), 2, 1), DomainError);
  // odd coefficients survive the scaling only when the 2-adic content is right
  EXPECT_THROW(build_fd_from_bd(zp({4, 1, 0, 0, 1}), 2, 1), ConsistencyError);
}

TEST(FdEquation, SymmetricAndFaulty) {
  EXPECT_TRUE(check_fd_functional_equation(zp({1, 1, 0, -1, 1}), 1, 1));
  EXPECT_FALSE(check_fd_functional_equation(zp({1, 1, 0, -1, 1}), 1, 0));
  EXPECT_TRUE(check_fd_functional_equation(zp({1, -1, 0, 1, 1}), 1, 0));
  EXPECT_FALSE(check_fd_functional_equation(zp({1, 2, 3, 4, 5}), 1, 1));
  EXPECT_THROW(check_fd_functional_equation(zp({1, 2, 3}), 1, 1), DomainError);
}

TEST(DiscIdentity, ExamplesAndOracle) {
  auto r = check_disc_identity({BigRational(1)});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, BigRational(5));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> zd(-20, 20);
  for (auto z : std::vector<std::vector<long>>{{1, 2, 3}, {0, 4, -7, 10, 13}}) {
    std::vector<BigRational> zz;
    for (long v : z) zz.emplace_back(v);
    auto res = check_disc_identity(zz);
    EXPECT_TRUE(res.holds);
    // oracle: disc via Sylvester determinant of (p, p'), rhs via root differences
    QPoly p(BigRational(1));
    for (auto& v : zz) p *= QPoly(std::vector<BigRational>{-1, -v, 1});
    QPoly dp = p.derivative();
    const int n = p.degree();
    mpq_class det = oracle::sylvester_resultant_q(p.coeffs(), n, dp.coeffs(), dp.degree());
    if (((n * (n - 1)) / 2) & 1) det = -det;
    EXPECT_EQ(res.lhs, det);
    mpq_class rhs = 1;
    for (std::size_t i = 0; i < zz.size(); ++i) {
      rhs *= zz[i] * zz[i] + 4;
      for (std::size_t j = i + 1; j < zz.size(); ++j) {
        mpq_class d = zz[i] - zz[j];
        rhs *= d * d * d * d;
      }
    }
    EXPECT_EQ(res.rhs, rhs);
  }
  EXPECT_THROW(check_disc_identity({BigRational(1), BigRational(1)}), DomainError);
}

TEST(Serialize, RoundTrips) {
  ZPoly p = periodic_poly(2);
  EXPECT_EQ(zpoly_from_json(to_json(p)), p);
  EXPECT_EQ(canonical(p), "[\"0\",\"-1\",\"1\",\"3\",\"2\",\"-3\",\"1\",\"1\"]");
  KPoly k(std::vector<QuadExt>{sigma_const(), QuadExt(BigRational(1, 2))});
  EXPECT_EQ(kpoly_from_json(to_json(k)), k);
  ZBiPoly b = iterated_resultant(2);
  EXPECT_EQ(zbipoly_from_json(to_json(b)), b);
  EXPECT_EQ(to_json(sigma_const()), (nlohmann::json{{"a", "-1"}, {"b", "1"}}));
}
