#include "qaut/dsl.hpp"

#include <cctype>
#include <vector>

namespace qaut {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l0 = line, c0 = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
    } else if (std::string_view("()[],;=+-/.").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l0, c0});
      advance(1);
    } else {
      throw ParseError(l0, c0, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  PresentationSpec document() {
    std::optional<SpaceSpec> space;
    std::optional<Variant> variant;
    std::optional<QMatrix> q;
    Token q_at{};
    while (peek().kind != Tok::End) {
      if (accept(";")) continue;
      const Token kw = expect_ident("a statement keyword (space, variant, Q)");
      accept("=");
      if (kw.text == "space") {
        if (space) fail(kw, "space declared twice");
        space = space_decl();
      } else if (kw.text == "variant") {
        if (variant) fail(kw, "variant declared twice");
        variant = variant_decl();
      } else if (kw.text == "Q") {
        if (q) fail(kw, "Q declared twice");
        q_at = kw;
        q = q_decl();
      } else {
        fail(kw, "unknown statement '" + kw.text + "'");
      }
      if (peek().kind != Tok::End && !accept(";")) {
        // A newline-separated statement list is accepted too.
        if (peek().kind != Tok::Ident) fail(peek(), "expected ';'");
      }
    }
    if (!space) fail(peek(), "missing 'space' statement");
    PresentationSpec spec{*space, variant.value_or(Variant::Aut), std::move(q)};
    const bool needs_q = spec.variant == Variant::QAut || spec.variant == Variant::AoNew ||
                         spec.variant == Variant::AoOld;
    if (needs_q && !spec.q) fail(peek(), "variant " + to_string(spec.variant) + " needs a Q statement");
    if (!needs_q && spec.q) fail(q_at, "variant " + to_string(spec.variant) + " takes no Q");
    if (spec.q) {
      const std::size_t want = fundamental_dim(spec);
      if (q_identity_) spec.q = QMatrix::identity(want);
      if (spec.q->dim() != want) {
        fail(q_at, "Q has dimension " + std::to_string(spec.q->dim()) + " but the space needs " +
                       std::to_string(want));
      }
    }
    return spec;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }

  [[noreturn]] static void fail(const Token& at, const std::string& msg) {
    throw ParseError(at.line, at.column, msg);
  }

  bool accept(std::string_view punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail(peek(), "expected '" + std::string(punct) + "'");
  }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(peek(), "expected " + what);
    return next();
  }

  int positive_int() {
    const Token& tok = peek();
    if (tok.kind != Tok::Number) fail(tok, "expected a positive integer");
    if (tok.text.size() > 3 || std::stoi(tok.text) < 1 || std::stoi(tok.text) > 255) {
      fail(tok, "size must lie in 1..255");
    }
    return std::stoi(next().text);
  }

  SpaceSpec space_decl() {
    const Token kind = expect_ident("X, M or blocks");
    expect("(");
    std::vector<int> sizes{positive_int()};
    if (kind.text == "blocks") {
      while (accept(",")) sizes.push_back(positive_int());
    }
    expect(")");
    if (kind.text == "X") return SpaceSpec::points(sizes.front());
    if (kind.text == "M") return SpaceSpec::matrices(sizes.front());
    if (kind.text == "blocks") return SpaceSpec::block_list(sizes);
    fail(kind, "unknown space '" + kind.text + "'");
  }

  Variant variant_decl() {
    const Token v = expect_ident("a variant");
    for (Variant cand : {Variant::Aut, Variant::QAut, Variant::AoNew, Variant::AoOld, Variant::Au}) {
      if (v.text == to_string(cand)) return cand;
    }
    fail(v, "unknown variant '" + v.text + "'");
  }

  mpq_class unsigned_rational() {
    const Token& tok = peek();
    if (tok.kind != Tok::Number) fail(tok, "expected a number");
    mpq_class value(next().text);
    if (accept("/")) {
      const Token& den = peek();
      if (den.kind != Tok::Number) fail(den, "expected a denominator");
      mpq_class d(next().text);
      if (d == 0) fail(den, "zero denominator");
      value /= d;
    } else if (accept(".")) {
      const Token& frac = peek();
      if (frac.kind != Tok::Number) fail(frac, "expected digits after '.'");
      const std::string digits = next().text;
      mpz_class scale = 1;
      for (std::size_t k = 0; k < digits.size(); ++k) scale *= 10;
      value += mpq_class(mpz_class(digits), scale);
    }
    value.canonicalize();
    return value;
  }

  bool is_i(const Token& tok) const { return tok.kind == Tok::Ident && tok.text == "i"; }

  GaussQ scalar() {
    GaussQ total;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!accept("+") && !first) {
        break;
      }
      const Token& tok = peek();
      GaussQ term;
      if (is_i(tok)) {
        next();
        term = GaussQ::i();
      } else if (tok.kind == Tok::Number) {
        const mpq_class r = unsigned_rational();
        if (is_i(peek())) {
          next();
          term = GaussQ(mpq_class(0), r);
        } else {
          term = GaussQ(r);
        }
      } else {
        fail(tok, "expected a scalar");
      }
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

  QMatrix q_decl() {
    const Token kind = expect_ident("diag, matrix or identity");
    if (kind.text == "identity") {
      q_identity_ = true;
      return QMatrix();
    }
    if (kind.text == "diag") {
      expect("(");
      std::vector<GaussQ> d{scalar()};
      while (accept(",")) d.push_back(scalar());
      expect(")");
      return QMatrix::diagonal(d);
    }
    if (kind.text == "matrix") {
      const Token open = peek();
      expect("[");
      std::vector<std::vector<GaussQ>> rows{row()};
      while (accept(",")) rows.push_back(row());
      expect("]");
      std::vector<GaussQ> flat;
      for (const auto& r : rows) {
        if (r.size() != rows.size()) fail(open, "Q matrix must be square");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      return QMatrix(rows.size(), std::move(flat));
    }
    fail(kind, "unknown Q form '" + kind.text + "'");
  }

  std::vector<GaussQ> row() {
    expect("[");
    std::vector<GaussQ> r{scalar()};
    while (accept(",")) r.push_back(scalar());
    expect("]");
    return r;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  bool q_identity_ = false;
};

}  // namespace

PresentationSpec parse_dsl(std::string_view text) { return Parser(tokenize(text)).document(); }

std::size_t fundamental_dim(const PresentationSpec& spec) { return spec.space.space().dim(); }

Presentation build_presentation(const PresentationSpec& spec) {
  switch (spec.variant) {
    case Variant::Aut:
      return aut_presentation(spec.space);
    case Variant::QAut:
      return q_aut_presentation(spec.space, *spec.q);
    case Variant::AoNew:
      return ao_new_presentation(*spec.q);
    case Variant::AoOld:
      return ao_old_presentation(*spec.q);
    case Variant::Au:
      return au_presentation(static_cast<int>(fundamental_dim(spec)));
  }
  throw std::logic_error("build_presentation: unknown variant");
}

GaussQ parse_scalar(std::string_view text) {
  std::string doc = "space X(1); variant q_aut; Q diag(";
  doc += text;
  doc += ");";
  return (*parse_dsl(doc).q)(0, 0);
}

}  // namespace qaut
