#pragma once

#include "cutjoin.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace twh {

// Jack polynomial in power sums, normalized so the coefficient of p_1^n is 1,
// together with its Laplace-Beltrami eigenvalue and hook products.
struct JackPolynomial {
  Partition lambda;
  Rational alpha;
  PSeries expansion;            // in p_mu, |mu| = |lambda|
  Rational eigenvalue;          // e(lambda, alpha)
  Rational hook_product;        // H  = prod (alpha*arm + leg + 1)
  Rational hook_product_prime;  // H' = prod (alpha*arm + leg + alpha)
};

namespace detail {

// Shared data for one (n, alpha): the canonical partition list, the p -> m
// change of basis R (p_mu = sum_nu R[mu][nu] m_nu), and the operator matrix
// B in monomial coordinates (Delta_alpha m_mu = sum_nu B[nu][mu] m_nu).
// Partitions are indexed in canonical order, (n) first; R and B are
// triangular with respect to it, which build() verifies at runtime.
struct JackBasis {
  int n = 0;
  Rational alpha;
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<Rational>> R, B;
  std::map<Partition, JackPolynomial> solved;

  static constexpr int kMaxWeight = 10;

  void build(int n_, const Rational& alpha_) {
    n = n_;
    alpha = alpha_;
    parts = partitions_of(n);
    int K = static_cast<int>(parts.size());
    for (int i = 0; i < K; ++i) index.emplace(parts[i], i);

    // R by iterated multiplication: p_r * m_nu = sum over ways to place r
    // (onto one existing distinct part value, or as a new part), each with
    // multiplicity mult_{new part}(result).
    auto multiply_by_p = [&](const std::map<Partition, Rational>& f, int r) {
      std::map<Partition, Rational> out;
      auto add = [&](const Partition& k, const Rational& c) {
        auto [it, ins] = out.emplace(k, c);
        if (!ins) {
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
      };
      for (const auto& [nu, c] : f) {
        std::map<int, int> seen;
        for (int v : nu.parts()) ++seen[v];
        for (const auto& [v, mult] : seen) {
          std::vector<int> ps = nu.parts();
          ps.erase(std::find(ps.begin(), ps.end(), v));
          ps.push_back(v + r);
          Partition res(std::move(ps));
          add(res, c * res.multiplicity(v + r));
        }
        std::vector<int> ps = nu.parts();
        ps.push_back(r);
        Partition res(std::move(ps));
        add(res, c * res.multiplicity(r));
      }
      return out;
    };
    R.assign(K, std::vector<Rational>(K, 0));
    for (int mu = 0; mu < K; ++mu) {
      std::map<Partition, Rational> f{{Partition(), Rational(1)}};
      for (int r : parts[mu].parts()) f = multiply_by_p(f, r);
      for (const auto& [nu, c] : f) R[mu][index.at(nu)] = c;
    }

    // operator matrix in p-coordinates: A[rho][mu] from Delta_alpha p_mu
    std::vector<std::vector<Rational>> A(K, std::vector<Rational>(K, 0));
    for (int mu = 0; mu < K; ++mu) {
      PSeries im = apply_laplace_beltrami(alpha, PSeries::monomial(parts[mu]));
      for (const auto& [rho, c] : im.terms()) A[index.at(rho)][mu] = c;
    }

    // B = R^T A (R^T)^{-1}. R is lower triangular in canonical order with
    // nonzero diagonal (checked), so R^T systems solve by substitution.
    for (int mu = 0; mu < K; ++mu) {
      if (R[mu][mu] == 0) throw std::logic_error("jack: basis transition not triangular");
      for (int nu = mu + 1; nu < K; ++nu)
        if (R[mu][nu] != 0) throw std::logic_error("jack: basis transition not triangular");
    }
    // columns of (R^T)^{-1}: solve R^T x = e_col; R^T is upper triangular
    std::vector<std::vector<Rational>> RTinv(K, std::vector<Rational>(K, 0));
    for (int col = 0; col < K; ++col) {
      for (int i = K - 1; i >= 0; --i) {
        Rational rhs = i == col ? 1 : 0;
        for (int j = i + 1; j < K; ++j)
          if (R[j][i] != 0) rhs -= R[j][i] * RTinv[j][col];
        RTinv[i][col] = rhs / R[i][i];
      }
    }
    std::vector<std::vector<Rational>> M(K, std::vector<Rational>(K, 0));
    for (int i = 0; i < K; ++i)  // M = R^T A
      for (int j = 0; j < K; ++j) {
        Rational s = 0;
        for (int k = 0; k < K; ++k)
          if (R[k][i] != 0 && A[k][j] != 0) s += R[k][i] * A[k][j];
        M[i][j] = s;
      }
    B.assign(K, std::vector<Rational>(K, 0));
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j) {
        Rational s = 0;
        for (int k = 0; k < K; ++k)
          if (M[i][k] != 0 && RTinv[k][j] != 0) s += M[i][k] * RTinv[k][j];
        B[i][j] = s;
      }

    // runtime check of the two assumptions the solve rests on: dominance
    // triangularity of B and the eigenvalue diagonal
    for (int nu = 0; nu < K; ++nu)
      for (int mu = 0; mu < K; ++mu) {
        if (nu == mu) {
          if (B[nu][nu] != lb_eigenvalue(parts[nu], alpha))
            throw std::logic_error("jack: operator diagonal is not the eigenvalue");
        } else if (B[nu][mu] != 0 && !dominates(parts[mu], parts[nu])) {
          throw std::logic_error("jack: operator is not dominance-triangular");
        }
      }
  }

  const JackPolynomial& solve(const Partition& lambda) {
    auto hit = solved.find(lambda);
    if (hit != solved.end()) return hit->second;
    int K = static_cast<int>(parts.size());
    int li = index.at(lambda);
    Rational e = lb_eigenvalue(lambda, alpha);
    // monomial coordinates y, supported on nu dominated by lambda
    std::vector<Rational> y(K, 0);
    y[li] = 1;
    for (int vi = li + 1; vi < K; ++vi) {
      Rational rhs = 0;
      for (int mu = li; mu < vi; ++mu)
        if (B[vi][mu] != 0 && y[mu] != 0) rhs += B[vi][mu] * y[mu];
      if (!dominates(lambda, parts[vi])) {
        if (rhs != 0) throw std::logic_error("jack: support escaped the dominance cone");
        continue;
      }
      Rational denom = e - B[vi][vi];
      if (denom == 0)
        throw DegeneracyError("jack: eigenvalue collision e(" + lambda.to_string() + ") = e(" +
                              parts[vi].to_string() + ") at alpha = " + format_rational(alpha) +
                              " between dominance-comparable partitions");
      y[vi] = rhs / denom;
    }
    // back to p-coordinates: solve R^T x = y from the bottom up
    std::vector<Rational> x(K, 0);
    for (int i = K - 1; i >= 0; --i) {
      Rational rhs = y[i];
      for (int j = i + 1; j < K; ++j)
        if (R[j][i] != 0 && x[j] != 0) rhs -= R[j][i] * x[j];
      x[i] = rhs / R[i][i];
    }
    Rational lead = x[K - 1];  // coefficient of p_1^n
    if (n > 0 && lead == 0) throw std::logic_error("jack: vanishing p_1^n coefficient");
    JackPolynomial jp;
    jp.lambda = lambda;
    jp.alpha = alpha;
    for (int i = 0; i < K; ++i)
      if (x[i] != 0) jp.expansion.add_term(parts[i], n > 0 ? x[i] / lead : x[i]);
    jp.eigenvalue = e;
    auto [h, hp] = hook_products(lambda, alpha);
    jp.hook_product = h;
    jp.hook_product_prime = hp;
    // construction self-check: genuinely an eigenvector
    if (apply_laplace_beltrami(alpha, jp.expansion) != jp.expansion * e)
      throw std::logic_error("jack: eigenvector self-check failed");
    return solved.emplace(lambda, std::move(jp)).first->second;
  }
};

inline JackBasis& jack_basis(int n, const Rational& alpha) {
  static std::map<std::pair<int, Rational>, std::unique_ptr<JackBasis>> cache;
  auto key = std::make_pair(n, alpha);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto basis = std::make_unique<JackBasis>();
    basis->build(n, alpha);
    it = cache.emplace(key, std::move(basis)).first;
  }
  return *it->second;
}

inline std::mutex& jack_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// Jack polynomial J_lambda^(alpha) with [p_1^n] = 1, by a triangular solve in
// the monomial basis. Throws DegeneracyError if e(lambda, alpha) collides
// with the eigenvalue of a dominance-comparable partition (never happens for
// alpha > 0); collisions between incomparable partitions are harmless.
inline JackPolynomial jack_polynomial(const Partition& lambda, const Rational& alpha) {
  if (lambda.weight() > detail::JackBasis::kMaxWeight)
    throw BudgetError("jack_polynomial: |lambda| > " +
                      std::to_string(detail::JackBasis::kMaxWeight) +
                      " exceeds the solver budget");
  std::lock_guard<std::mutex> lock(detail::jack_mutex());
  return detail::jack_basis(lambda.weight(), alpha).solve(lambda);
}

// Zonal polynomial Z_lambda = J_lambda^(2) in the same normalization.
inline JackPolynomial zonal(const Partition& lambda) { return jack_polynomial(lambda, 2); }

// Cauchy-type identity at fixed weight: sum over |lambda| = n of
// alpha^n J_lambda / (H_lambda H'_lambda) equals p_1^n / n!.
inline bool verify_cauchy(int n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("verify_cauchy: negative n");
  PSeries sum;
  Rational an = pow_rational(alpha, n);
  for (const auto& lam : partitions_of(n)) {
    JackPolynomial j = jack_polynomial(lam, alpha);
    sum += j.expansion * (an / (j.hook_product * j.hook_product_prime));
  }
  return sum == PSeries::monomial(Partition(std::vector<int>(n, 1)), Rational(1, factorial(n)));
}

// h~_{m,lambda} by the zonal closed form:
//   sum over |mu| = n of e(mu,2)^m * 2^n * [p_lambda] Z_mu / (H_mu H'_mu),
// with 0^0 = 1 so the m = 0 term is the Cauchy identity itself.
inline Rational hurwitz_by_zonal(int m, const Partition& lambda) {
  if (m < 0) throw std::invalid_argument("hurwitz_by_zonal: need m >= 0");
  int n = lambda.weight();
  Rational sum = 0;
  Rational two_n = pow_rational(2, n);
  for (const auto& mu : partitions_of(n)) {
    JackPolynomial z = zonal(mu);
    sum += pow_rational(z.eigenvalue, m) * two_n * z.expansion.coefficient(lambda) /
           (z.hook_product * z.hook_product_prime);
  }
  return sum;
}

}  // namespace twh
