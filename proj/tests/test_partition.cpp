#include <catch2/catch_amalgamated.hpp>

#include <twh/partition.hpp>

#include <set>

using namespace twh;

namespace {

// independent brute-force partition generator: weakly decreasing sequences
// with parts bounded by max_part
void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> brute_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  return out;
}

}  // namespace

TEST_CASE("partitions_of(5) is the canonical list") {
  auto ps = partitions_of(5);
  std::vector<Partition> expected = {
      {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  REQUIRE(ps == expected);
}

TEST_CASE("partitions_of agrees with a brute-force generator") {
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    auto brute = brute_partitions(n);
    REQUIRE(ps.size() == brute.size());
    std::set<std::vector<int>> seen;
    for (const auto& p : ps) {
      REQUIRE(p.weight() == n);
      seen.insert(p.parts());
    }
    for (const auto& b : brute) REQUIRE(seen.count(b) == 1);
  }
}

TEST_CASE("partitions_of emits strictly increasing canonical order") {
  for (int n = 0; n <= 8; ++n) {
    auto ps = partitions_of(n);
    for (size_t i = 0; i + 1 < ps.size(); ++i) REQUIRE(ps[i] < ps[i + 1]);
  }
}

TEST_CASE("canonical order sorts by weight first") {
  REQUIRE(Partition{3} < Partition{1, 1, 1, 1});
  REQUIRE(Partition{2} < Partition{1, 1});
  REQUIRE(Partition{} < Partition{1});
}

TEST_CASE("partition constructors normalize and validate") {
  REQUIRE(Partition(std::vector<int>{1, 3, 2}) == Partition{3, 2, 1});
  REQUIRE_THROWS_AS(Partition{0}, std::invalid_argument);
  REQUIRE_THROWS_AS(Partition{-2}, std::invalid_argument);
  REQUIRE(Partition{}.weight() == 0);
  REQUIRE(Partition{}.empty());
}

TEST_CASE("to_string / parse round trip") {
  REQUIRE(Partition{3, 1, 1}.to_string() == "3,1,1");
  REQUIRE(Partition{}.to_string() == "");
  REQUIRE(Partition::parse("3,1,1") == Partition{3, 1, 1});
  REQUIRE(Partition::parse("") == Partition{});
  REQUIRE(Partition::parse(" 2 , 1 ") == Partition{2, 1});
  REQUIRE_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition::parse("0"), std::invalid_argument);
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(Partition::parse(p.to_string()) == p);
}

TEST_CASE("multiplicities and conjugate") {
  auto m = Partition{3, 2, 2, 1}.multiplicities();
  REQUIRE(m.size() == 3);
  REQUIRE(m.at(3) == 1);
  REQUIRE(m.at(2) == 2);
  REQUIRE(m.at(1) == 1);
  REQUIRE(m.begin()->first == 3);  // largest value first

  REQUIRE(Partition{3, 2}.conjugate() == Partition{2, 2, 1});
  REQUIRE(Partition{}.conjugate() == Partition{});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(p.conjugate().conjugate() == p);
}

TEST_CASE("dominance order") {
  REQUIRE(dominates(Partition{3}, Partition{1, 1, 1}));
  REQUIRE(dominates(Partition{2, 1}, Partition{2, 1}));
  REQUIRE(!dominates(Partition{1, 1, 1}, Partition{3}));
  REQUIRE(!dominates(Partition{3, 3}, Partition{4, 1, 1}));
  REQUIRE(!dominates(Partition{4, 1, 1}, Partition{3, 3}));
  REQUIRE_THROWS_AS(dominates(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("arm and leg lengths") {
  REQUIRE(arm_leg(Partition{2, 1}, 1, 1) == std::pair{1, 1});
  REQUIRE(arm_leg(Partition{3}, 1, 1) == std::pair{2, 0});
  REQUIRE(arm_leg(Partition{3}, 1, 3) == std::pair{0, 0});
  REQUIRE_THROWS_AS(arm_leg(Partition{2, 1}, 2, 2), std::invalid_argument);
}

TEST_CASE("hook products at alpha = 2 match the reference values") {
  auto hh = [](const Partition& p) {
    auto [h, hp] = hook_products(p, 2);
    return h * hp;
  };
  REQUIRE(hh(Partition{1}) == 2);
  REQUIRE(hh(Partition{1, 1}) == 12);
  REQUIRE(hh(Partition{2}) == 24);
  REQUIRE(hh(Partition{1, 1, 1}) == 144);
  REQUIRE(hh(Partition{2, 1}) == 80);
  REQUIRE(hh(Partition{3}) == 720);
  REQUIRE(hh(Partition{}) == 1);
}

TEST_CASE("hook product duality: H_{lambda'}(1/alpha) = alpha^{-|lambda|} H'_lambda(alpha)") {
  for (const Rational& alpha : {Rational(2), Rational(3), Rational(1, 2)}) {
    for (int n = 0; n <= 6; ++n)
      for (const auto& lam : partitions_of(n)) {
        auto [h_conj, hp_conj] = hook_products(lam.conjugate(), 1 / alpha);
        auto [h, hp] = hook_products(lam, alpha);
        REQUIRE(h_conj == hp / pow_rational(alpha, n));
        REQUIRE(hp_conj == h / pow_rational(alpha, n));
      }
  }
}

TEST_CASE("Laplace-Beltrami eigenvalues") {
  REQUIRE(lb_eigenvalue(Partition{1}, 2) == 0);
  REQUIRE(lb_eigenvalue(Partition{1}, Rational(7, 3)) == 0);
  REQUIRE(lb_eigenvalue(Partition{2}, 2) == 4);
  REQUIRE(lb_eigenvalue(Partition{1, 1}, 2) == -2);
  REQUIRE(lb_eigenvalue(Partition{}, 2) == 0);

  SECTION("alpha = 2 closed form 2 sum lambda_i (lambda_i - i)") {
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : partitions_of(n)) {
        Rational e = 0;
        for (int i = 1; i <= lam.length(); ++i)
          e += Rational(2) * lam.parts()[i - 1] * (lam.parts()[i - 1] - i);
        REQUIRE(lb_eigenvalue(lam, 2) == e);
      }
  }

  SECTION("alpha = 1 equals twice the content sum") {
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : partitions_of(n)) {
        Rational content = 0;
        for (int i = 1; i <= lam.length(); ++i)
          for (int j = 1; j <= lam.parts()[i - 1]; ++j) content += j - i;
        REQUIRE(lb_eigenvalue(lam, 1) == 2 * content);
      }
  }

  SECTION("strictly monotone along dominance for alpha > 0") {
    for (const Rational& alpha : {Rational(1), Rational(2), Rational(1, 2)})
      for (const auto& a : partitions_of(6))
        for (const auto& b : partitions_of(6))
          if (a != b && dominates(a, b))
            REQUIRE(lb_eigenvalue(a, alpha) > lb_eigenvalue(b, alpha));
  }
}

TEST_CASE("rational helpers") {
  REQUIRE(factorial(0) == 1);
  REQUIRE(factorial(5) == 120);
  REQUIRE(double_factorial_odd(0) == 1);
  REQUIRE(double_factorial_odd(1) == 1);
  REQUIRE(double_factorial_odd(3) == 15);
  REQUIRE(double_factorial_odd(4) == 105);
  REQUIRE(pow_rational(0, 0) == 1);
  REQUIRE(pow_rational(Rational(-2), 3) == -8);
  REQUIRE(parse_rational("3/4") == Rational(3, 4));
  REQUIRE(parse_rational("-6/4") == Rational(-3, 2));
  REQUIRE(parse_rational("7") == 7);
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
  REQUIRE(format_rational(Rational(4)) == "4");
  REQUIRE(format_rational(Rational(-3, 2)) == "-3/2");
}
