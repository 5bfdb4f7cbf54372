#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twh {

// Integer partition: weakly decreasing list of positive parts.
// Constructors accept parts in any order and sort them; nonpositive parts are
// rejected.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // part value -> multiplicity, largest value first
  std::map<int, int, std::greater<int>> multiplicities() const {
    std::map<int, int, std::greater<int>> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int i = 1; !parts_.empty() && i <= parts_[0]; ++i) {
      int col = 0;
      for (int p : parts_)
        if (p >= i) ++col;
      c.push_back(col);
    }
    return Partition(std::move(c));
  }

  // "3,1,1"; empty partition renders as ""
  std::string to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  // Inverse of to_string; whitespace around entries is tolerated.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : text)
      if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) return Partition();
    std::istringstream is(trimmed);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("trailing");
        parts.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
      }
    }
    if (is.eof() && !text.empty() && trimmed.back() == ',')
      throw std::invalid_argument("Partition::parse: trailing comma");
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) = default;

  // Canonical order used by every table- or basis-emitting routine:
  // by weight ascending, then within a weight reverse-lexicographic with the
  // lexicographically larger sequence first ((5) < (4,1) < ... < (1^5)).
  friend bool operator<(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n in canonical order ((n) first, (1^n) last); n = 0 gives
// the single empty partition.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> a;
  if (n > 0) a.push_back(n);
  out.push_back(Partition(a));
  if (n == 0) return out;
  while (true) {
    // find the last part > 1
    int i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[i] == 1) --i;
    if (i < 0) break;
    int rem = 0;
    for (size_t k = i; k < a.size(); ++k) rem += a[k];
    int val = a[i] - 1;
    a.resize(i);
    while (rem > 0) {
      int part = std::min(val, rem);
      a.push_back(part);
      rem -= part;
    }
    out.push_back(Partition(a));
  }
  return out;
}

// Dominance order on partitions of equal weight: prefix sums of a are >=
// those of b. Returns true also when a == b.
inline bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw std::invalid_argument("dominates: weights differ");
  int sa = 0, sb = 0;
  size_t len = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

// Arm and leg of the cell in row i, column j (1-based) of lambda's diagram.
inline std::pair<int, int> arm_leg(const Partition& lambda, int i, int j) {
  const auto& p = lambda.parts();
  if (i < 1 || i > lambda.length() || j < 1 || j > p[i - 1])
    throw std::invalid_argument("arm_leg: cell outside diagram");
  int arm = p[i - 1] - j;
  int leg = 0;
  for (int r = i; r < lambda.length(); ++r)
    if (p[r] >= j) ++leg;
  return {arm, leg};
}

// Lower and upper hook products at parameter alpha:
//   H  = prod over cells (alpha*arm + leg + 1)
//   H' = prod over cells (alpha*arm + leg + alpha)
inline std::pair<Rational, Rational> hook_products(const Partition& lambda,
                                                   const Rational& alpha) {
  Rational h = 1, hp = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.parts()[i - 1]; ++j) {
      auto [arm, leg] = arm_leg(lambda, i, j);
      h *= alpha * arm + leg + 1;
      hp *= alpha * arm + leg + alpha;
    }
  return {h, hp};
}

// Laplace-Beltrami eigenvalue e(lambda, alpha) = sum_i lambda_i *
// (alpha*lambda_i + 2 - 2i - alpha).
inline Rational lb_eigenvalue(const Partition& lambda, const Rational& alpha) {
  Rational e = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    int li = lambda.parts()[i - 1];
    e += Rational(li) * (alpha * li + 2 - 2 * i - alpha);
  }
  return e;
}

}  // namespace twh
