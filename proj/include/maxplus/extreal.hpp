// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Payload types for finite values: an ordered additive group.
template <class T>
concept ScalarField = std::totally_ordered<T> && std::regular<T> && requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

/// An element of R u {-inf, +inf}. Default-constructed values are -inf, the
/// max-plus zero.
template <ScalarField T>
class Extended {
 public:
  using value_type = T;

  constexpr Extended() = default;

  // Implicit on purpose: finite literals read naturally in formulas.
  constexpr Extended(T v) : kind_(Kind::Finite), value_(v) {  // NOLINT
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(v)) throw DomainError("non-finite payload for a finite extended real");
      if (v == T{0}) value_ = T{0};  // fold -0.0
    }
  }

  static constexpr Extended neg_inf() { return Extended{}; }
  static constexpr Extended pos_inf() {
    Extended e;
    e.kind_ = Kind::PosInf;
    return e;
  }

  [[nodiscard]] constexpr Kind kind() const noexcept { return kind_; }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  [[nodiscard]] constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  [[nodiscard]] constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Finite payload. Calling this on an infinity is a logic error.
  [[nodiscard]] constexpr const T& value() const {
    if (kind_ != Kind::Finite) throw DomainError("value() on an infinite extended real");
    return value_;
  }

  friend constexpr bool operator==(const Extended&, const Extended&) = default;

  friend constexpr std::weak_ordering operator<=>(const Extended& x, const Extended& y) {
    if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
    if (x.kind_ != Kind::Finite) return std::weak_ordering::equivalent;
    if (x.value_ < y.value_) return std::weak_ordering::less;
    if (y.value_ < x.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  Kind kind_ = Kind::NegInf;
  T value_{};  // zero for infinities so defaulted == is exact
};

using ExtInt = Extended<std::int64_t>;
using ExtReal = Extended<double>;

/// Max-plus multiplication with -inf absorbing: (-inf) + (+inf) = -inf.
template <ScalarField T>
constexpr Extended<T> lower_add(const Extended<T>& a, const Extended<T>& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Extended<T>::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return Extended<T>::pos_inf();
  return Extended<T>(a.value() + b.value());
}

/// Min-plus multiplication with +inf absorbing: (+inf) +' (-inf) = +inf.
template <ScalarField T>
constexpr Extended<T> upper_add(const Extended<T>& a, const Extended<T>& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return Extended<T>::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return Extended<T>::neg_inf();
  return Extended<T>(a.value() + b.value());
}

template <ScalarField T>
constexpr Extended<T> negate(const Extended<T>& a) {
  switch (a.kind()) {
    case Kind::NegInf: return Extended<T>::pos_inf();
    case Kind::PosInf: return Extended<T>::neg_inf();
    case Kind::Finite: break;
  }
  return Extended<T>(-a.value());
}

/// mu\nu: the largest lambda with lower_add(mu, lambda) <= nu.
template <ScalarField T>
constexpr Extended<T> scalar_residual(const Extended<T>& mu, const Extended<T>& nu) {
  return upper_add(nu, negate(mu));
}

template <ScalarField T>
constexpr Extended<T> max(const Extended<T>& a, const Extended<T>& b) {
  return a < b ? b : a;
}

template <ScalarField T>
constexpr Extended<T> min(const Extended<T>& a, const Extended<T>& b) {
  return b < a ? b : a;
}

namespace detail {

inline bool is_inf_token(std::string_view s, bool& negative) {
  negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  return s == "inf" || s == "Inf" || s == "INF";
}

}  // namespace detail

/// True for optional sign followed by decimal digits only.
inline bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

inline bool is_infinity_token(std::string_view s) {
  bool neg = false;
  return detail::is_inf_token(s, neg);
}

/// Parses one token. Throws ParseError (without position) on bad input.
template <class T>
Extended<T> parse_extended(std::string_view s) {
  bool negative = false;
  if (detail::is_inf_token(s, negative)) {
    return negative ? Extended<T>::neg_inf() : Extended<T>::pos_inf();
  }
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  if (body.empty()) throw ParseError("empty token");

  if constexpr (std::is_integral_v<T>) {
    if (!is_integer_token(body)) {
      throw ParseError("expected an integer token, got '" + std::string(s) + "'");
    }
    T v{};
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("integer token out of range: '" + std::string(s) + "'");
    }
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw ParseError("malformed integer token '" + std::string(s) + "'");
    }
    return Extended<T>(v);
  } else if constexpr (std::is_floating_point_v<T>) {
    T v{};
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v,
                                     std::chars_format::fixed | std::chars_format::scientific);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) {
      throw ParseError("malformed number token '" + std::string(s) + "'");
    }
    return Extended<T>(v);
  } else {
    static_assert(std::is_arithmetic_v<T>, "parse_extended supports built-in payloads only");
  }
}

template <class T>
std::string to_token(const Extended<T>& e) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_pos_inf()) return "+inf";
  if constexpr (std::is_integral_v<T>) {
    return std::to_string(e.value());
  } else if constexpr (std::is_floating_point_v<T>) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.value());
    (void)ec;
    return std::string(buf, ptr);
  } else {
    std::ostringstream os;
    os << e.value();
    return os.str();
  }
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Extended<T>& e) {
  if (e.is_neg_inf()) return os << "-inf";
  if (e.is_pos_inf()) return os << "+inf";
  return os << e.value();
}

}  // namespace maxplus
