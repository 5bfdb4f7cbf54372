#pragma once

#include "enumeration.hpp"
#include "pseries.hpp"

#include <vector>

namespace twh {

// Laplace-Beltrami family acting on power sums:
//   Delta_alpha = sum_{i,j>=1} (i+j) (p_i p_j + (alpha-1) p_{i+j}) d/dp_{i+j}
//               + alpha * i * j * p_{i+j} d^2/(dp_i dp_j),
// both sums over ordered pairs (i, j). alpha = 1 is the classical cut-and-join
// operator, alpha = 2 the twisted one.
inline PSeries apply_laplace_beltrami(const Rational& alpha, const PSeries& f) {
  PSeries out;
  for (const auto& [lam, c] : f.terms()) {
    auto mult = lam.multiplicities();
    // cuts: a part l splits into (i, l - i); the (alpha - 1) piece keeps lam
    for (const auto& [l, al] : mult) {
      if (l >= 2) out.add_term(lam, c * (alpha - 1) * l * (l - 1) * al);
      std::vector<int> base;
      for (int p : lam.parts()) base.push_back(p);
      base.erase(std::find(base.begin(), base.end(), l));
      for (int i = 1; i + i <= l; ++i) {
        int j = l - i;
        std::vector<int> parts = base;
        parts.push_back(i);
        parts.push_back(j);
        Rational coeff = Rational(l) * al * (i == j ? 1 : 2);
        out.add_term(Partition(std::move(parts)), c * coeff);
      }
    }
    // joins: parts i and j merge into i + j
    for (const auto& [i, ai] : mult) {
      for (const auto& [j, aj] : mult) {
        if (j > i) continue;  // unordered pairs, i >= j
        Rational ways = i == j ? Rational(ai) * (ai - 1) : Rational(2) * ai * aj;
        if (ways == 0) continue;
        std::vector<int> parts;
        for (int p : lam.parts()) parts.push_back(p);
        parts.erase(std::find(parts.begin(), parts.end(), i));
        parts.erase(std::find(parts.begin(), parts.end(), j));
        parts.push_back(i + j);
        out.add_term(Partition(std::move(parts)), c * alpha * i * j * ways);
      }
    }
  }
  return out;
}

// The twisted cut-and-join operator CJ~ = Delta_2.
inline PSeries apply_twisted_cutjoin(const PSeries& f) {
  return apply_laplace_beltrami(2, f);
}

// Matrix element of CJ~ in the power-sum basis, CJ~(p_lambda) =
// sum_mu entry(lambda -> mu) p_mu, by the closed-form case analysis:
//   cut   (one part l of lambda becomes i + j = l):  2 l a_l, or l a_l if i = j
//   join  (parts i, j of lambda merge):              4 i j a_i a_j, or
//                                                    2 i^2 a_i (a_i - 1) if i = j
//   diagonal (mu = lambda):                          sum_l l (l-1) a_l
inline Rational cj_matrix_element_formula(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  if (lambda == mu) {
    Rational d = 0;
    for (const auto& [l, al] : lambda.multiplicities()) d += Rational(l) * (l - 1) * al;
    return d;
  }
  // multiset differences lambda \ mu and mu \ lambda
  auto diff = [](const Partition& a, const Partition& b) {
    std::vector<int> out;
    auto mb = b.multiplicities();
    std::map<int, int> need(mb.begin(), mb.end());
    for (int p : a.parts()) {
      auto it = need.find(p);
      if (it != need.end() && it->second > 0)
        --it->second;
      else
        out.push_back(p);
    }
    return out;
  };
  std::vector<int> gone = diff(lambda, mu), made = diff(mu, lambda);
  if (gone.size() == 1 && made.size() == 2) {
    int l = gone[0], i = made[0], j = made[1];
    if (i + j != l) return 0;
    Rational al = lambda.multiplicity(l);
    return (i == j ? Rational(l) : Rational(2) * l) * al;
  }
  if (gone.size() == 2 && made.size() == 1) {
    int i = gone[0], j = gone[1], l = made[0];
    if (i + j != l) return 0;
    Rational ai = lambda.multiplicity(i);
    if (i == j) return Rational(2) * i * i * ai * (ai - 1);
    return Rational(4) * i * j * ai * lambda.multiplicity(j);
  }
  return 0;
}

// The same matrix element from its definition as a transposition-pair count:
// with sigma the canonical representative of lambda and tau the mirror
// involution, count ordered pairs (i, j), j not in {i, tau(i)}, such that
// (i j) o sigma o (tau(i) tau(j)) has doubled type mu, then halve (each
// unordered twisted transposition is counted by both of its lifts).
inline Rational cj_matrix_element_direct(const Partition& lambda, const Partition& mu) {
  int n = lambda.weight();
  if (n > 6) throw BudgetError("cj_matrix_element_direct: |lambda| > 6 exceeds the scan budget");
  if (mu.weight() != n) return 0;
  Permutation sigma = canonical_representative(lambda);
  Permutation t = tau(n);
  long long count = 0;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      if (j == i || j == t.apply(i)) continue;
      std::vector<int> img(2 * n);
      for (int x = 1; x <= 2 * n; ++x) {
        int y = x;
        // rightmost factor first: (tau(i) tau(j)), then sigma, then (i j)
        if (y == t.apply(i))
          y = t.apply(j);
        else if (y == t.apply(j))
          y = t.apply(i);
        y = sigma.apply(y);
        if (y == i)
          y = j;
        else if (y == j)
          y = i;
        img[x - 1] = y;
      }
      auto cls = classify_twisted(Permutation(std::move(img)));
      if (cls.doubled_type && *cls.doubled_type == mu) ++count;
    }
  return Rational(count, 2);
}

// h~_{m,lambda} via operator exponentiation: the coefficient of p_lambda in
// CJ~^m (p_1^n / n!), n = |lambda|.
inline Rational hurwitz_by_cutjoin(int m, const Partition& lambda) {
  if (m < 0) throw std::invalid_argument("hurwitz_by_cutjoin: need m >= 0");
  int n = lambda.weight();
  PSeries f = PSeries::monomial(Partition(std::vector<int>(n, 1)), Rational(1, factorial(n)));
  for (int step = 0; step < m; ++step) f = apply_twisted_cutjoin(f);
  return f.coefficient(lambda);
}

struct TableRow {
  int n, m;
  Partition lambda;
  Rational value;  // h~_{m,lambda}
};

// All h~_{m,lambda} for 1 <= |lambda| <= n_max, 0 <= m <= m_max, rows ordered
// by n, then m, then lambda canonically.
inline std::vector<TableRow> generating_table(int n_max, int m_max) {
  if (n_max < 1 || m_max < 0) throw std::invalid_argument("generating_table: bad bounds");
  std::vector<TableRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    auto lams = partitions_of(n);
    PSeries f = PSeries::monomial(Partition(std::vector<int>(n, 1)), Rational(1, factorial(n)));
    for (int m = 0; m <= m_max; ++m) {
      for (const auto& lam : lams) rows.push_back({n, m, lam, f.coefficient(lam)});
      f = apply_twisted_cutjoin(f);
    }
  }
  return rows;
}

}  // namespace twh
