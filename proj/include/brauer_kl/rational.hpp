#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brauer_kl {

/// Exact rational number. GMP keeps values in canonical reduced form.
using Scalar = mpq_class;
using ScalarVec = std::vector<Scalar>;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline bool is_integer(const Scalar& s) { return s.get_den() == 1; }

/// Integer value of an integral scalar; caller guarantees is_integer(s).
inline long to_long(const Scalar& s) { return s.get_num().get_si(); }

/// "p/q" or "p" with an optional sign. Returns nullopt on malformed input.
inline std::optional<Scalar> parse_scalar(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+') return std::nullopt;
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class zn(n), zd{std::string(den)};
  if (zd == 0) return std::nullopt;
  Scalar s(zn, zd);
  s.canonicalize();
  return s;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

inline std::string to_string(const ScalarVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace brauer_kl
