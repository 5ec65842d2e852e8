#pragma once

// Presentation DSL, e.g.
//   space blocks(1,2); variant q_aut; Q diag(1,1,2,2,3);
// Grammar: docs/dsl.md.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qaut/matrix.hpp"
#include "qaut/presentations.hpp"

namespace qaut {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct PresentationSpec {
  SpaceSpec space;
  Variant variant = Variant::Aut;
  std::optional<QMatrix> q;
};

/// Throws ParseError on malformed input, including a missing space, a Q of
/// the wrong size and a Q given to a variant that takes none.
PresentationSpec parse_dsl(std::string_view text);

/// Matrix size of u: dim B for every variant (the appendix groups use it as m).
std::size_t fundamental_dim(const PresentationSpec& spec);

/// Throws NotPositive / DimensionMismatch from the builders.
Presentation build_presentation(const PresentationSpec& spec);

/// Exact scalar literal: rationals, decimals and Gaussian forms like 1-2/3i.
GaussQ parse_scalar(std::string_view text);

}  // namespace qaut
