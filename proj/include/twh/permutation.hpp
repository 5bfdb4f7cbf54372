#pragma once

#include "partition.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twh {

// Permutation of {1, ..., size}; stores images 1-based.
class Permutation {
 public:
  explicit Permutation(int size) : img_(size) {
    for (int i = 0; i < size; ++i) img_[i] = i + 1;
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v - 1] = 1;
    }
  }

  int size() const { return static_cast<int>(img_.size()); }

  int apply(int x) const {
    if (x < 1 || x > size()) throw std::invalid_argument("Permutation::apply: point out of range");
    return img_[x - 1];
  }

  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i + 1) return false;
    return true;
  }

  // Cycles including fixed points; each cycle starts at its minimum, cycles
  // sorted by minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 1; s <= size(); ++s) {
      if (seen[s - 1]) continue;
      std::vector<int> cyc;
      int x = s;
      do {
        cyc.push_back(x);
        seen[x - 1] = 1;
        x = img_[x - 1];
      } while (x != s);
      out.push_back(std::move(cyc));
    }
    return out;
  }

  Partition cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
  }

  // "(1 3)(2 4)"; fixed points omitted; identity renders as "()".
  std::string cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c[i];
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  // Parses disjoint-or-not cycle notation, e.g. "(1 3)(2 4)"; points not
  // mentioned are fixed. Cycles are composed rightmost-first, so overlapping
  // cycles behave like a product of permutations.
  static Permutation parse_cycles(const std::string& text, int size) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(')
        throw std::invalid_argument("parse_cycles: expected '(' at position " + std::to_string(pos));
      ++pos;
      std::vector<int> cyc;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        size_t start = pos;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
          throw std::invalid_argument("parse_cycles: expected digit at position " + std::to_string(pos));
        int v = std::stoi(text.substr(start, pos - start));
        if (v < 1 || v > size) throw std::invalid_argument("parse_cycles: point out of range");
        if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
          throw std::invalid_argument("parse_cycles: repeated point in cycle");
        cyc.push_back(v);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos >= text.size())
        throw std::invalid_argument("parse_cycles: unterminated cycle");
      ++pos;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    std::vector<int> img(size);
    for (int i = 0; i < size; ++i) img[i] = i + 1;
    // rightmost cycle acts first: right-multiplying by each listed cycle in
    // turn accumulates c_1 o c_2 o ... o c_k
    for (const auto& cyc : cycles) {
      std::vector<int> next = img;
      for (int i = 0; i < size; ++i) {
        int x = i + 1;
        auto at = std::find(cyc.begin(), cyc.end(), x);
        int y = at == cyc.end() ? x : cyc[(at - cyc.begin() + 1) % cyc.size()];
        next[i] = img[y - 1];
      }
      img = std::move(next);
    }
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> img_;
};

// (p o q)(x) = p(q(x)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(p.size());
  for (int x = 1; x <= p.size(); ++x) img[x - 1] = p.apply(q.apply(x));
  return Permutation(std::move(img));
}

// The fixed-point-free involution (1, n+1)(2, n+2)...(n, 2n) on 2n points.
inline Permutation tau(int n) {
  if (n < 0) throw std::invalid_argument("tau: negative n");
  std::vector<int> img(2 * n);
  for (int i = 1; i <= n; ++i) {
    img[i - 1] = i + n;
    img[i + n - 1] = i;
  }
  return Permutation(std::move(img));
}

struct Transposition {
  int a, b;  // a < b, both 1-based
  Transposition(int a_, int b_) : a(a_), b(b_) {
    if (a >= b || a < 1) throw std::invalid_argument("Transposition: need 1 <= a < b");
  }
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

// Membership in the twisted centralizer of tau: tau sigma tau = sigma^{-1},
// equivalently (sigma tau)^2 = id.
inline bool is_in_twisted_centralizer(const Permutation& sigma) {
  if (sigma.size() % 2) throw std::invalid_argument("twisted centralizer: odd ground set");
  int n = sigma.size() / 2;
  Permutation t = tau(n);
  for (int x = 1; x <= sigma.size(); ++x) {
    // tau(sigma(tau(x))) == sigma^{-1}(x)  <=>  sigma(tau(sigma(tau(x)))) == x
    if (sigma.apply(t.apply(sigma.apply(t.apply(x)))) != x) return false;
  }
  return true;
}

struct TwistedClassification {
  bool in_twisted_centralizer = false;
  // pairs (i, j), i < j, of indices into cycles() exchanged by tau
  std::vector<std::pair<int, int>> paired_cycles;
  // indices of cycles mapped to themselves by tau
  std::vector<int> self_symmetric_cycles;
  // one part per paired cycle orbit; present iff sigma lies in the twisted
  // centralizer and has no self-symmetric cycle
  std::optional<Partition> doubled_type;
};

// For sigma in the twisted centralizer, tau permutes the cycles of sigma;
// cycles either swap in pairs of equal length (each pair contributes one part
// of the doubled cycle type) or map to themselves.
inline TwistedClassification classify_twisted(const Permutation& sigma) {
  TwistedClassification out;
  out.in_twisted_centralizer = is_in_twisted_centralizer(sigma);
  if (!out.in_twisted_centralizer) return out;
  int n = sigma.size() / 2;
  Permutation t = tau(n);
  auto cycs = sigma.cycles();
  std::vector<int> cycle_of(sigma.size() + 1, -1);
  for (size_t i = 0; i < cycs.size(); ++i)
    for (int x : cycs[i]) cycle_of[x] = static_cast<int>(i);
  std::vector<char> done(cycs.size(), 0);
  std::vector<int> parts;
  for (size_t i = 0; i < cycs.size(); ++i) {
    if (done[i]) continue;
    int j = cycle_of[t.apply(cycs[i][0])];
    done[i] = 1;
    if (j == static_cast<int>(i)) {
      out.self_symmetric_cycles.push_back(static_cast<int>(i));
      continue;
    }
    done[j] = 1;
    if (cycs[j].size() != cycs[i].size())
      throw std::logic_error("classify_twisted: paired cycles of unequal length");
    out.paired_cycles.emplace_back(static_cast<int>(i), j);
    parts.push_back(static_cast<int>(cycs[i].size()));
  }
  if (out.self_symmetric_cycles.empty()) out.doubled_type = Partition(std::move(parts));
  return out;
}

// Canonical twisted-centralizer element of doubled type lambda: for each part
// k, on fresh points v1..vk, the cycle (v1 ... vk) together with its mirror
// (tau(vk) ... tau(v1)).
inline Permutation canonical_representative(const Partition& lambda) {
  int n = lambda.weight();
  std::vector<int> img(2 * n);
  for (int i = 0; i < 2 * n; ++i) img[i] = i + 1;
  int v = 1;
  for (int k : lambda.parts()) {
    for (int s = 0; s < k; ++s) {
      int from = v + s, to = v + (s + 1) % k;
      img[from - 1] = to;                    // (v1 ... vk)
      img[to + n - 1] = from + n;            // mirror: tau(v_{s+1}) -> tau(v_s)
    }
    v += k;
  }
  return Permutation(std::move(img));
}

// All involutions of S_k (including the identity), as image vectors.
inline void for_each_involution(int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = i + 1;
  std::vector<char> used(k + 1, 0);
  std::function<void(int)> rec = [&](int a) {
    while (a <= k && used[a]) ++a;
    if (a > k) {
      fn(img);
      return;
    }
    used[a] = 1;
    img[a - 1] = a;  // a fixed
    rec(a + 1);
    for (int b = a + 1; b <= k; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      img[a - 1] = b;
      img[b - 1] = a;
      rec(a + 1);
      img[b - 1] = b;
      used[b] = 0;
    }
    img[a - 1] = a;
    used[a] = 0;
  };
  rec(1);
}

// #B~_n: twisted-centralizer elements with no self-symmetric cycle. Every
// element of the twisted centralizer is psi o tau with psi an involution (or
// the identity), so the scan runs over involutions; equals (2n-1)!!.
inline BigInt count_b_twisted(int n) {
  if (n < 0) throw std::invalid_argument("count_b_twisted: negative n");
  if (n > 6) throw BudgetError("count_b_twisted: n > 6 exceeds the enumeration budget");
  Permutation t = tau(n);
  BigInt count = 0;
  for_each_involution(2 * n, [&](const std::vector<int>& psi) {
    std::vector<int> img(2 * n);
    for (int x = 1; x <= 2 * n; ++x) img[x - 1] = psi[t.apply(x) - 1];
    Permutation sigma(std::move(img));
    if (classify_twisted(sigma).doubled_type) ++count;
  });
  return count;
}

}  // namespace twh
