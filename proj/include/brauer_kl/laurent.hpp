#pragma once

// Integer Laurent polynomials in v.

#include <map>
#include <string>

namespace brauer_kl {

class LaurentPoly {
 public:
  using Terms = std::map<int, long long>;

  LaurentPoly() = default;
  LaurentPoly(long long c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exponent, long long c = 1) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [e1, c1] : a.terms_)
      for (auto [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }
  LaurentPoly shifted(int by) const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
  }

  /// v -> v^{-1}
  LaurentPoly bar() const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  long long at_one() const {
    long long s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (auto [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      long long a = c < 0 ? -c : c;
      if (e == 0) {
        out += std::to_string(a);
        continue;
      }
      if (a != 1) out += std::to_string(a);
      out += e == 1 ? "v" : "v^" + std::to_string(e);
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace brauer_kl
