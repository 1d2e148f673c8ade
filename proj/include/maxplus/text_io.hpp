// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

// Plain-text formats. Tokens are separated by whitespace; blank lines and
// lines starting with '#' are ignored.
//
//   matrix       "p n", then p rows of n tokens
//   vector       "n", then one row of n tokens
//   half-space   "n", then the row a and the row b
//   generators   "q n", then q rows of n tokens

#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "maxplus/halfspace.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/semimodule.hpp"

namespace maxplus::io {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct TokenLine {
  std::vector<Token> tokens;
  std::size_t line;
};

/// A tokenized input together with the name used in error messages.
struct TokenFile {
  std::vector<TokenLine> lines;
  std::string source;
  std::size_t last_line = 0;  // for "missing row" errors
};

TokenFile tokenize(std::istream& in, const std::string& source);
TokenFile tokenize_string(const std::string& text, const std::string& source = "<string>");
TokenFile read_token_file(const std::string& path);

enum class NumberMode { Int, Float };

/// Int when every finite entry token uses integer syntax. Header lines are
/// excluded by skipping the first line.
NumberMode infer_mode(const TokenFile& f);

/// Throws a ParseError naming the first non-integer entry token, if any.
void require_integer_tokens(const TokenFile& f);

namespace detail {

std::size_t parse_count(const TokenFile& f, const Token& t, bool allow_zero);
[[noreturn]] void fail(const TokenFile& f, const std::string& msg, std::size_t line, std::size_t col);
void expect_header(const TokenFile& f, std::size_t count);
void expect_row(const TokenFile& f, std::size_t index, std::size_t n, const char* what);

template <ScalarField T>
Extended<T> parse_token(const TokenFile& f, const Token& t) {
  try {
    return parse_extended<T>(t.text);
  } catch (const ParseError& e) {
    fail(f, e.message(), t.line, t.column);
  }
}

template <ScalarField T, class Tag>
BasicVector<T, Tag> parse_row(const TokenFile& f, std::size_t index, std::size_t n, const char* what) {
  expect_row(f, index, n, what);
  std::vector<Extended<T>> v;
  v.reserve(n);
  for (const Token& t : f.lines[index].tokens) v.push_back(parse_token<T>(f, t));
  return BasicVector<T, Tag>(std::move(v));
}

}  // namespace detail

template <ScalarField T>
Matrix<T> parse_matrix(const TokenFile& f) {
  detail::expect_header(f, 2);
  const std::size_t p = detail::parse_count(f, f.lines[0].tokens[0], true);
  const std::size_t n = detail::parse_count(f, f.lines[0].tokens[1], false);
  if (f.lines.size() != p + 1) {
    detail::fail(f, "expected " + std::to_string(p) + " matrix rows, found " + std::to_string(f.lines.size() - 1),
                 f.lines.size() > p + 1 ? f.lines[p + 1].line : f.last_line + 1, 1);
  }
  Matrix<T> M(p, n);
  for (std::size_t i = 0; i < p; ++i) {
    const auto row = detail::parse_row<T, RowTag>(f, i + 1, n, "matrix row");
    for (std::size_t j = 0; j < n; ++j) M(i, j) = row[j];
  }
  return M;
}

template <ScalarField T>
Vector<T> parse_vector(const TokenFile& f) {
  detail::expect_header(f, 1);
  const std::size_t n = detail::parse_count(f, f.lines[0].tokens[0], false);
  if (f.lines.size() != 2) {
    detail::fail(f, "expected exactly one vector row", f.lines.size() > 2 ? f.lines[2].line : f.last_line + 1, 1);
  }
  return detail::parse_row<T, ColumnTag>(f, 1, n, "vector");
}

template <ScalarField T>
HalfSpace<T> parse_halfspace(const TokenFile& f) {
  detail::expect_header(f, 1);
  const std::size_t n = detail::parse_count(f, f.lines[0].tokens[0], false);
  if (f.lines.size() != 3) {
    detail::fail(f, "expected two coefficient rows (a then b)", f.lines.size() > 3 ? f.lines[3].line : f.last_line + 1,
                 1);
  }
  auto a = detail::parse_row<T, RowTag>(f, 1, n, "coefficient row a");
  auto b = detail::parse_row<T, RowTag>(f, 2, n, "coefficient row b");
  for (std::size_t r = 1; r <= 2; ++r) {
    for (const Token& t : f.lines[r].tokens) {
      if (detail::parse_token<T>(f, t).is_pos_inf()) {
        detail::fail(f, "half-space coefficients must be < +inf", t.line, t.column);
      }
    }
  }
  return HalfSpace<T>(std::move(a), std::move(b));
}

template <ScalarField T>
GeneratedSemimodule<T> parse_generators(const TokenFile& f) {
  detail::expect_header(f, 2);
  const std::size_t q = detail::parse_count(f, f.lines[0].tokens[0], true);
  const std::size_t n = detail::parse_count(f, f.lines[0].tokens[1], false);
  if (f.lines.size() != q + 1) {
    detail::fail(f, "expected " + std::to_string(q) + " generator rows, found " + std::to_string(f.lines.size() - 1),
                 f.lines.size() > q + 1 ? f.lines[q + 1].line : f.last_line + 1, 1);
  }
  std::vector<Vector<T>> gens;
  for (std::size_t k = 0; k < q; ++k) gens.push_back(detail::parse_row<T, ColumnTag>(f, k + 1, n, "generator"));
  return GeneratedSemimodule<T>(n, std::move(gens));
}

template <ScalarField T, class Tag>
std::string format_row(const BasicVector<T, Tag>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ' ';
    s += to_token(v[i]);
  }
  return s;
}

template <ScalarField T>
std::string format_vector(const Vector<T>& v) {
  return std::to_string(v.size()) + "\n" + format_row(v) + "\n";
}

template <ScalarField T>
std::string format_matrix(const Matrix<T>& M) {
  std::string s = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
  for (std::size_t i = 0; i < M.rows(); ++i) s += format_row(M.row(i)) + "\n";
  return s;
}

template <ScalarField T>
std::string format_halfspace(const HalfSpace<T>& H) {
  return std::to_string(H.dimension()) + "\n" + format_row(H.a) + "\n" + format_row(H.b) + "\n";
}

template <ScalarField T>
std::string format_generators(const GeneratedSemimodule<T>& V) {
  std::string s = std::to_string(V.generators().size()) + " " + std::to_string(V.dimension()) + "\n";
  for (const auto& g : V.generators()) s += format_row(g) + "\n";
  return s;
}

}  // namespace maxplus::io
