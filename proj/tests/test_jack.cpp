#include <catch2/catch_amalgamated.hpp>

#include <twh/jack.hpp>

using namespace twh;

namespace {

PSeries p(const Partition& lam, const Rational& c = 1) { return PSeries::monomial(lam, c); }

}  // namespace

TEST_CASE("zonal polynomials of weight <= 3") {
  REQUIRE(zonal(Partition{1}).expansion == p(Partition{1}));
  REQUIRE(zonal(Partition{1, 1}).expansion == p(Partition{1, 1}) + p(Partition{2}, -1));
  REQUIRE(zonal(Partition{2}).expansion == p(Partition{1, 1}) + p(Partition{2}, 2));
  REQUIRE(zonal(Partition{1, 1, 1}).expansion ==
          p(Partition{1, 1, 1}) + p(Partition{2, 1}, -3) + p(Partition{3}, 2));
  REQUIRE(zonal(Partition{2, 1}).expansion ==
          p(Partition{1, 1, 1}) + p(Partition{2, 1}, 1) + p(Partition{3}, -2));
  REQUIRE(zonal(Partition{3}).expansion ==
          p(Partition{1, 1, 1}) + p(Partition{2, 1}, 6) + p(Partition{3}, 8));
  REQUIRE(zonal(Partition{}).expansion == p(Partition{}));

  SECTION("hook products travel with the polynomial") {
    auto z = zonal(Partition{2, 1});
    REQUIRE(z.hook_product * z.hook_product_prime == 80);
    REQUIRE(zonal(Partition{3}).hook_product * zonal(Partition{3}).hook_product_prime == 720);
  }
  SECTION("eigenvalues travel with the polynomial") {
    REQUIRE(zonal(Partition{2}).eigenvalue == 4);
    REQUIRE(zonal(Partition{1, 1}).eigenvalue == -2);
    REQUIRE(zonal(Partition{1}).eigenvalue == 0);
  }
}

TEST_CASE("small Jack polynomials at generic alpha") {
  for (const Rational& alpha : {Rational(1), Rational(3), Rational(5, 7)}) {
    REQUIRE(jack_polynomial(Partition{2}, alpha).expansion ==
            p(Partition{1, 1}) + p(Partition{2}, alpha));
    REQUIRE(jack_polynomial(Partition{1, 1}, alpha).expansion ==
            p(Partition{1, 1}) + p(Partition{2}, -1));
  }
}

TEST_CASE("eigenvector property and normalization") {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(3), Rational(1, 2)})
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : partitions_of(n)) {
        JackPolynomial j = jack_polynomial(lam, alpha);
        REQUIRE(j.eigenvalue == lb_eigenvalue(lam, alpha));
        REQUIRE(apply_laplace_beltrami(alpha, j.expansion) == j.expansion * j.eigenvalue);
        REQUIRE(j.expansion.coefficient(Partition(std::vector<int>(n, 1))) == 1);
      }
}

TEST_CASE("weight-6 eigenvalue collisions between incomparable partitions are harmless") {
  // at alpha = 2: e((4,1,1)) = e((3,3)) = 18, and the pair is dominance-incomparable
  REQUIRE(lb_eigenvalue(Partition{4, 1, 1}, 2) == lb_eigenvalue(Partition{3, 3}, 2));
  JackPolynomial a = jack_polynomial(Partition{4, 1, 1}, 2);
  JackPolynomial b = jack_polynomial(Partition{3, 3}, 2);
  REQUIRE(apply_laplace_beltrami(2, a.expansion) == a.expansion * a.eigenvalue);
  REQUIRE(apply_laplace_beltrami(2, b.expansion) == b.expansion * b.eigenvalue);
  REQUIRE(a.expansion != b.expansion);

  // at alpha = 2: e((3,1,1,1)) = e((2,2,2)) = 0, also incomparable
  REQUIRE(lb_eigenvalue(Partition{3, 1, 1, 1}, 2) == 0);
  REQUIRE(lb_eigenvalue(Partition{2, 2, 2}, 2) == 0);
  REQUIRE_NOTHROW(jack_polynomial(Partition{3, 1, 1, 1}, 2));
  REQUIRE_NOTHROW(jack_polynomial(Partition{2, 2, 2}, 2));
}

TEST_CASE("degeneracy between comparable partitions raises DegeneracyError") {
  // at alpha = -1: e((3)) = e((1,1,1)) = -6 and (3) dominates (1,1,1)
  REQUIRE(lb_eigenvalue(Partition{3}, -1) == lb_eigenvalue(Partition{1, 1, 1}, -1));
  REQUIRE(dominates(Partition{3}, Partition{1, 1, 1}));
  REQUIRE_THROWS_AS(jack_polynomial(Partition{3}, -1), DegeneracyError);
}

TEST_CASE("solver budget") {
  REQUIRE_THROWS_AS(jack_polynomial(Partition{11}, 2), BudgetError);
  REQUIRE_THROWS_AS(jack_polynomial(Partition{6, 5}, 2), BudgetError);
}

TEST_CASE("Cauchy identity") {
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)})
    for (int n = 0; n <= 5; ++n) REQUIRE(verify_cauchy(n, alpha));
}

TEST_CASE("hurwitz_by_zonal reference values") {
  REQUIRE(hurwitz_by_zonal(1, Partition{2}) == 2);
  REQUIRE(hurwitz_by_zonal(1, Partition{2, 1}) == 2);
  REQUIRE(hurwitz_by_zonal(2, Partition{1, 1}) == 4);
  REQUIRE(hurwitz_by_zonal(2, Partition{2}) == 4);
  REQUIRE(hurwitz_by_zonal(2, Partition{1, 1, 1}) == 4);
  REQUIRE(hurwitz_by_zonal(2, Partition{2, 1}) == 4);
  REQUIRE(hurwitz_by_zonal(2, Partition{3}) == 16);
  REQUIRE(hurwitz_by_zonal(0, Partition{1, 1}) == Rational(1, 2));
  REQUIRE(hurwitz_by_zonal(0, Partition{2}) == 0);
  REQUIRE(hurwitz_by_zonal(1, Partition{1}) == 0);
}

TEST_CASE("zonal closed form agrees with operator exponentiation") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& lam : partitions_of(n))
        REQUIRE(hurwitz_by_zonal(m, lam) == hurwitz_by_cutjoin(m, lam));
}
