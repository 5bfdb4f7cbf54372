#pragma once

#include "permutation.hpp"

#include <map>
#include <thread>
#include <vector>

namespace twh {

// All transpositions (a, b) of S_2n with b != tau(a), ordered by a then b.
// There are exactly 2n(n-1) of them.
inline std::vector<Transposition> admissible_transpositions(int n) {
  if (n < 1) throw std::invalid_argument("admissible_transpositions: need n >= 1");
  std::vector<Transposition> out;
  Permutation t = tau(n);
  for (int a = 1; a <= 2 * n; ++a)
    for (int b = a + 1; b <= 2 * n; ++b)
      if (b != t.apply(a)) out.emplace_back(a, b);
  return out;
}

namespace detail {

// Doubled cycle type of u = w tau w^{-1} tau given w as an image vector on
// 2n points; u is always in the twisted centralizer with no self-symmetric
// cycle, so its 2n points fall into tau-paired cycles of equal length.
// Scratch buffers are caller-provided so hot loops do not allocate.
struct TypeScratch {
  std::vector<int> winv, u, seen;
};

inline std::vector<int> doubled_type_of_product(const std::vector<int>& w, int n,
                                                TypeScratch& scratch) {
  int N = 2 * n;
  auto tau_at = [n](int x) { return x <= n ? x + n : x - n; };
  auto& winv = scratch.winv;
  auto& u = scratch.u;
  auto& seen = scratch.seen;
  winv.assign(N + 1, 0);
  for (int x = 1; x <= N; ++x) winv[w[x - 1]] = x;
  u.assign(N + 1, 0);
  for (int x = 1; x <= N; ++x) u[x] = w[tau_at(winv[tau_at(x)]) - 1];
  seen.assign(N + 1, 0);
  std::vector<int> parts;
  for (int s = 1; s <= N; ++s) {
    if (seen[s]) continue;
    int len = 0, x = s;
    do {
      seen[x] = 1;
      seen[tau_at(x)] = 1;  // mirror cycle, same length
      x = u[x];
      ++len;
    } while (x != s);
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

// Enumerates all m-digit words over digits [lo, hi) x [0, k)^(m-1) in odometer
// order, maintaining prefix products w_j = t_{d_1} o ... o t_{d_j} (rightmost
// applied first, i.e. w_j(x) = t_{d_1}(...t_{d_j}(x))), and tallies the
// doubled type of w tau w^{-1} tau.
inline void tally_range(const std::vector<Transposition>& ts, int n, int m, int lo, int hi,
                        std::map<std::vector<int>, long long>& tally) {
  int N = 2 * n;
  std::vector<int> id(N);
  for (int i = 0; i < N; ++i) id[i] = i + 1;
  TypeScratch scratch;
  if (m == 0) {
    if (lo == 0)  // single empty word
      ++tally[doubled_type_of_product(id, n, scratch)];
    return;
  }
  if (lo >= hi) return;
  int k = static_cast<int>(ts.size());
  std::vector<int> digit(m, 0);
  digit[0] = lo;
  // prefix[j] = image vector of w_j; prefix[0] = id
  std::vector<std::vector<int>> prefix(m + 1, id);
  auto refresh = [&](int from) {
    // w_j = w_{j-1} o t: right-composing a transposition (a b) swaps the
    // images stored at positions a and b
    for (int j = from; j <= m; ++j) {
      prefix[j] = prefix[j - 1];
      std::swap(prefix[j][ts[digit[j - 1]].a - 1], prefix[j][ts[digit[j - 1]].b - 1]);
    }
  };
  refresh(1);
  while (true) {
    ++tally[doubled_type_of_product(prefix[m], n, scratch)];
    int j = m - 1;
    while (j >= 1 && digit[j] == k - 1) digit[j--] = 0;
    if (j == 0) {
      if (++digit[0] >= hi) break;
    } else {
      ++digit[j];
    }
    refresh(j + 1);
  }
}

}  // namespace detail

struct EnumerateOptions {
  long long max_work = 1'000'000'000;  // admissible-transposition products
  int threads = 1;
};

struct HurwitzCount {
  int n = 0, m = 0;
  std::map<Partition, BigInt> counts;  // doubled boundary type -> #sequences

  // counts scaled by 1/n!
  std::map<Partition, Rational> values() const {
    std::map<Partition, Rational> v;
    BigInt nf = factorial(n);
    for (const auto& [lam, c] : counts) v.emplace(lam, Rational(c, nf));
    return v;
  }
};

// Counts, per doubled cycle type, the m-tuples of admissible transpositions
// (s_1, ..., s_m) whose twisted boundary product w tau w^{-1} tau (with
// w = s_1 o ... o s_m) has that type.
inline HurwitzCount enumerate_hurwitz(int n, int m, const EnumerateOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("enumerate_hurwitz: need n >= 1");
  if (m < 0) throw std::invalid_argument("enumerate_hurwitz: need m >= 0");
  auto ts = admissible_transpositions(n);
  int k = static_cast<int>(ts.size());
  double work = 1;
  for (int i = 0; i < m; ++i) work *= k;
  if (work > static_cast<double>(opts.max_work))
    throw BudgetError("enumerate_hurwitz: " + std::to_string(k) + "^" + std::to_string(m) +
                      " products exceed the work budget of " + std::to_string(opts.max_work));

  int nthreads = std::max(1, opts.threads);
  if (m == 0) nthreads = 1;
  nthreads = std::min<long long>(nthreads, std::max(1, k));
  std::vector<std::map<std::vector<int>, long long>> tallies(nthreads);
  if (nthreads == 1) {
    detail::tally_range(ts, n, m, 0, m == 0 ? 1 : k, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      int lo = static_cast<int>(static_cast<long long>(k) * t / nthreads);
      int hi = static_cast<int>(static_cast<long long>(k) * (t + 1) / nthreads);
      pool.emplace_back([&, t, lo, hi] { detail::tally_range(ts, n, m, lo, hi, tallies[t]); });
    }
    for (auto& th : pool) th.join();
  }
  HurwitzCount out;
  out.n = n;
  out.m = m;
  for (const auto& tally : tallies)  // merge in thread order; addition is order-free
    for (const auto& [type, c] : tally) {
      auto key = Partition(type);
      auto it = out.counts.find(key);
      if (it == out.counts.end())
        out.counts.emplace(std::move(key), c);
      else
        it->second += c;
    }
  return out;
}

// h~_{m,lambda} by direct enumeration: (1/n!) * #sequences with boundary type
// lambda, n = |lambda|.
inline Rational hurwitz_enumerated(int m, const Partition& lambda,
                                   const EnumerateOptions& opts = {}) {
  int n = lambda.weight();
  if (n < 1) throw std::invalid_argument("hurwitz_enumerated: need |lambda| >= 1");
  auto counts = enumerate_hurwitz(n, m, opts);
  auto it = counts.counts.find(lambda);
  BigInt c = it == counts.counts.end() ? BigInt(0) : it->second;
  return Rational(c, factorial(n));
}

}  // namespace twh
