#include "lawson/dsl.hpp"

#include <algorithm>
#include <sstream>

namespace lawson {

ParseError::ParseError(std::string message, SourceSpan span, std::vector<std::string> expected)
    : Error(message), message_(std::move(message)), span_(span), expected_(std::move(expected)) {}

namespace {

enum class TokenKind { Identifier, Number, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  std::int64_t value = 0;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Number:
      return "number " + std::string(t.text);
    default:
      return "'" + std::string(t.text) + "'";
  }
}

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) {
      current_ = {TokenKind::End, {}, 0, {start, start}};
      return;
    }
    const char c = text_[pos_];
    if (is_letter(c)) {
      while (pos_ < text_.size() && is_letter(text_[pos_])) ++pos_;
      current_ = {TokenKind::Identifier, text_.substr(start, pos_ - start), 0, {start, pos_}};
      return;
    }
    if (is_digit(c)) {
      std::int64_t value = 0;
      bool too_large = false;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        if (!too_large) {
          value = value * 10 + (text_[pos_] - '0');
          too_large = value > kMaxLiteral;
        }
        ++pos_;
      }
      if (too_large) {
        throw ParseError("numeric literal exceeds " + std::to_string(kMaxLiteral),
                         {start, pos_});
      }
      current_ = {TokenKind::Number, text_.substr(start, pos_ - start), value, {start, pos_}};
      return;
    }
    if (std::string_view("()[],:").find(c) != std::string_view::npos) {
      ++pos_;
      current_ = {TokenKind::Punct, text_.substr(start, 1), 0, {start, pos_}};
      return;
    }
    throw ParseError("unexpected character", {start, start + 1});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

const std::vector<std::string>& expression_starts() {
  static const std::vector<std::string> starts = {
      "'pt'",   "'P'",    "'affine'", "'torus'", "'quadric'", "'singquadric'", "'cellular'",
      "'toric'", "'susp'", "'prod'",   "'bundle'", "'decomp'", "'sp'",         "'hilb'"};
  return starts;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  VarietyExpr parse_all() {
    auto e = expression();
    if (lexer_.peek().kind != TokenKind::End) {
      fail("trailing input after expression", lexer_.peek(), {"end of input"});
    }
    return e;
  }

  std::vector<std::int64_t> natlist_all() {
    std::vector<std::int64_t> values;
    const bool bracketed = is_punct(lexer_.peek(), '[');
    if (bracketed) {
      values = natlist();
    } else {
      values.push_back(nat());
      while (is_punct(lexer_.peek(), ',')) {
        lexer_.next();
        values.push_back(nat());
      }
    }
    if (lexer_.peek().kind != TokenKind::End) {
      fail("trailing input after list", lexer_.peek(), {"end of input"});
    }
    return values;
  }

 private:
  [[noreturn]] static void fail(const std::string& message, const Token& at,
                                std::vector<std::string> expected) {
    throw ParseError(message + ", found " + describe(at), at.span, std::move(expected));
  }

  static bool is_punct(const Token& t, char c) {
    return t.kind == TokenKind::Punct && t.text[0] == c;
  }

  void expect(char c) {
    if (!is_punct(lexer_.peek(), c)) {
      fail(std::string("expected '") + c + "'", lexer_.peek(), {std::string("'") + c + "'"});
    }
    lexer_.next();
  }

  std::int64_t nat() {
    const Token& t = lexer_.peek();
    if (t.kind != TokenKind::Number) fail("expected a natural number", t, {"number"});
    return lexer_.next().value;
  }

  std::vector<std::int64_t> natlist() {
    expect('[');
    std::vector<std::int64_t> values{nat()};
    while (is_punct(lexer_.peek(), ',')) {
      lexer_.next();
      values.push_back(nat());
    }
    expect(']');
    return values;
  }

  std::string_view flag(std::initializer_list<std::string_view> allowed) {
    const Token& t = lexer_.peek();
    std::vector<std::string> expected;
    for (auto a : allowed) expected.push_back("'" + std::string(a) + "'");
    if (t.kind == TokenKind::Identifier &&
        std::find(allowed.begin(), allowed.end(), t.text) != allowed.end()) {
      return lexer_.next().text;
    }
    fail("unknown flag", t, std::move(expected));
  }

  VarietyExpr expression() {
    if (++depth_ > kMaxNesting) {
      throw ParseError("expression nested too deeply", lexer_.peek().span);
    }
    auto e = expression_body();
    --depth_;
    return e;
  }

  VarietyExpr expression_body() {
    const Token head = lexer_.peek();
    if (head.kind != TokenKind::Identifier) {
      fail("expected an expression", head, expression_starts());
    }
    lexer_.next();
    const auto kw = head.text;
    if (kw == "pt") return vx::point();

    auto single_nat = [&] {
      expect('(');
      auto n = nat();
      expect(')');
      return n;
    };
    auto nat_pair = [&] {
      expect('(');
      auto a = nat();
      expect(',');
      auto b = nat();
      expect(')');
      return std::pair{a, b};
    };

    if (kw == "P") return vx::proj(single_nat());
    if (kw == "affine") return vx::affine(single_nat());
    if (kw == "torus") return vx::torus(single_nat());
    if (kw == "quadric") return vx::quadric(single_nat());
    if (kw == "singquadric") {
      auto [m, d] = nat_pair();
      return vx::singquadric(m, d);
    }
    if (kw == "hilb") {
      auto [b2, d] = nat_pair();
      return vx::hilb(b2, d);
    }
    if (kw == "cellular") {
      expect('(');
      auto cells = natlist();
      bool proper = true;
      if (is_punct(lexer_.peek(), ',')) {
        lexer_.next();
        flag({"open"});
        proper = false;
      }
      expect(')');
      return vx::cellular(std::move(cells), proper);
    }
    if (kw == "toric") {
      expect('(');
      auto counts = natlist();
      auto smoothness = node::Smoothness::Smooth;
      if (is_punct(lexer_.peek(), ',')) {
        lexer_.next();
        const auto f = flag({"smooth", "simplicial", "general"});
        if (f == "simplicial") smoothness = node::Smoothness::Simplicial;
        if (f == "general") smoothness = node::Smoothness::General;
      }
      expect(')');
      return vx::toric(std::move(counts), smoothness);
    }
    if (kw == "susp") {
      expect('(');
      auto inner = expression();
      expect(')');
      return vx::susp(std::move(inner));
    }
    if (kw == "prod") {
      expect('(');
      auto left = expression();
      expect(',');
      auto right = expression();
      expect(')');
      return vx::prod(std::move(left), std::move(right));
    }
    if (kw == "bundle") {
      expect('(');
      auto base = expression();
      expect(',');
      auto cells = natlist();
      expect(')');
      return vx::bundle(std::move(base), std::move(cells));
    }
    if (kw == "decomp") {
      expect('(');
      std::vector<std::pair<VarietyExpr, std::int64_t>> comps;
      do {
        if (!comps.empty()) lexer_.next();  // the ','
        auto component = expression();
        expect(':');
        comps.emplace_back(std::move(component), nat());
      } while (is_punct(lexer_.peek(), ','));
      expect(')');
      return vx::decomp(std::move(comps));
    }
    if (kw == "sp") {
      expect('(');
      auto inner = expression();
      expect(',');
      auto d = nat();
      expect(')');
      return vx::sp(std::move(inner), d);
    }
    fail("unknown constructor", head, expression_starts());
  }

  Lexer lexer_;
  int depth_ = 0;
};

}  // namespace

VarietyExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::vector<std::int64_t> parse_natlist(std::string_view text) {
  return Parser(text).natlist_all();
}

std::string format_parse_error(const ParseError& error, std::string_view text) {
  std::ostringstream os;
  const auto span = error.span();
  os << "parse error at " << span.start << ".." << span.end << ": " << error.message();
  if (!error.expected().empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < error.expected().size(); ++i) {
      if (i) os << ", ";
      os << error.expected()[i];
    }
    os << ')';
  }
  // caret line only for printable single-line input
  const bool printable = std::all_of(text.begin(), text.end(), [](char c) {
    return c >= 0x20 && c < 0x7f;
  });
  if (printable) {
    os << '\n' << "  " << text << '\n' << "  " << std::string(span.start, ' ')
       << std::string(std::max<std::size_t>(1, span.end - span.start), '^');
  }
  return os.str();
}

}  // namespace lawson
