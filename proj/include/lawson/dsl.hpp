#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lawson/errors.hpp"
#include "lawson/varieties.hpp"

namespace lawson {

/// Byte offsets [start, end) into the parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const SourceSpan&) const = default;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected = {});

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Numeric literals above this are rejected by the parser.
inline constexpr std::int64_t kMaxLiteral = 1'000'000;

/// Deepest expression nesting the parser accepts.
inline constexpr int kMaxNesting = 200;

/// Parses one expression; the whole input must be consumed.
///
///   expr    := "pt" | "P(" nat ")" | "affine(" nat ")" | "torus(" nat ")"
///            | "quadric(" nat ")" | "singquadric(" nat "," nat ")"
///            | "cellular(" natlist ["," "open"] ")"
///            | "toric(" natlist ["," ("smooth"|"simplicial"|"general")] ")"
///            | "susp(" expr ")" | "prod(" expr "," expr ")"
///            | "bundle(" expr "," natlist ")" | "decomp(" expr ":" nat {"," expr ":" nat} ")"
///            | "sp(" expr "," nat ")" | "hilb(" nat "," nat ")"
///   natlist := "[" nat {"," nat} "]"
VarietyExpr parse(std::string_view text);

/// A bare list of naturals, with or without brackets: "[0,1,1,2]" or "0,1,1,2".
std::vector<std::int64_t> parse_natlist(std::string_view text);

/// "parse error at 4..7: message (expected ...)" followed by the input and a caret line.
std::string format_parse_error(const ParseError& error, std::string_view text);

}  // namespace lawson
