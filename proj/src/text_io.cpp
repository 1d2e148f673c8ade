// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#include "maxplus/text_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace maxplus::io {

TokenFile tokenize(std::istream& in, const std::string& source) {
  TokenFile f{{}, source, 0};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    TokenLine tl{{}, lineno};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      if (line[i] == '#' && tl.tokens.empty()) {
        i = line.size();
        break;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tl.tokens.push_back({line.substr(start, i - start), lineno, start + 1});
    }
    if (!tl.tokens.empty()) f.lines.push_back(std::move(tl));
  }
  f.last_line = lineno;
  return f;
}

TokenFile tokenize_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return tokenize(in, source);
}

TokenFile read_token_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", 0, 0, path);
  return tokenize(in, path);
}

NumberMode infer_mode(const TokenFile& f) {
  for (std::size_t r = 1; r < f.lines.size(); ++r) {
    for (const Token& t : f.lines[r].tokens) {
      if (!is_infinity_token(t.text) && !is_integer_token(t.text)) return NumberMode::Float;
    }
  }
  return NumberMode::Int;
}

void require_integer_tokens(const TokenFile& f) {
  for (std::size_t r = 1; r < f.lines.size(); ++r) {
    for (const Token& t : f.lines[r].tokens) {
      if (!is_infinity_token(t.text) && !is_integer_token(t.text)) {
        throw ParseError("integer mode: token '" + t.text + "' is not an integer", t.line, t.column, f.source);
      }
    }
  }
}

namespace detail {

void fail(const TokenFile& f, const std::string& msg, std::size_t line, std::size_t col) {
  throw ParseError(msg, line, col, f.source);
}

std::size_t parse_count(const TokenFile& f, const Token& t, bool allow_zero) {
  std::size_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) fail(f, "expected a dimension, got '" + t.text + "'", t.line, t.column);
  if (v == 0 && !allow_zero) fail(f, "dimension must be positive", t.line, t.column);
  return v;
}

void expect_header(const TokenFile& f, std::size_t count) {
  if (f.lines.empty()) fail(f, "empty input, expected a header line", f.last_line + 1, 1);
  const TokenLine& h = f.lines[0];
  if (h.tokens.size() != count) {
    fail(f, "header must have " + std::to_string(count) + (count == 1 ? " field" : " fields") + ", found " +
                std::to_string(h.tokens.size()),
         h.line, 1);
  }
}

void expect_row(const TokenFile& f, std::size_t index, std::size_t n, const char* what) {
  const TokenLine& l = f.lines[index];
  if (l.tokens.size() != n) {
    const std::size_t col = l.tokens.size() > n ? l.tokens[n].column : 1;
    fail(f, std::string(what) + " has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(n),
         l.line, col);
  }
}

}  // namespace detail

}  // namespace maxplus::io
