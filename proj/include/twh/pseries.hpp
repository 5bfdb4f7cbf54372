#pragma once

#include "partition.hpp"

#include <map>
#include <string>

namespace twh {

// Polynomial in power sums: finite sum of c * p_lambda, keyed by partition.
// Zero coefficients are pruned eagerly, so equality is structural.
class PSeries {
 public:
  PSeries() = default;

  static PSeries monomial(const Partition& lambda, const Rational& c = 1) {
    PSeries s;
    if (c != 0) s.terms_.emplace(lambda, c);
    return s;
  }

  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PSeries& operator+=(const PSeries& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
  }

  PSeries& operator-=(const PSeries& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
  }

  PSeries& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [lam, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(PSeries a, const Rational& c) { return a *= c; }
  friend PSeries operator*(const Rational& c, PSeries a) { return a *= c; }

  friend bool operator==(const PSeries& a, const PSeries& b) = default;

  // Golden-file form: terms "c * p[l1,l2,...]" in canonical partition order
  // joined by " + "; the empty monomial is "p[]"; the zero series is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += format_rational(c) + " * p[" + lam.to_string() + "]";
    }
    return out;
  }

 private:
  std::map<Partition, Rational> terms_;
};

}  // namespace twh
