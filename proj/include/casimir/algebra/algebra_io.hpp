#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "casimir/algebra/cocycle.hpp"
#include "casimir/algebra/lie_algebra.hpp"
#include "casimir/error.hpp"

namespace casimir::algebra {

// Text format, one directive per line, '#' starts a comment:
//
//   basis H P1 P2 J K1 K2
//   bracket <a> <b> <c> <num> <den>     f[c][a][b] = num/den  (and f[c][b][a] = -num/den)
//   central <a> <b> <num> <den>         C[a][b]    = num/den  (and C[b][a]    = -num/den)
//
// `basis` must come first and appear once. Each unordered slot may be assigned
// at most once. Omitted entries are zero.

class AlgebraParseError : public InputError {
 public:
  AlgebraParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct AlgebraDocument {
  LieAlgebraSpec algebra;
  std::optional<TwoCocycle> cocycle;  // present iff at least one `central` line
};

AlgebraDocument parse_algebra_text(std::string_view text);
AlgebraDocument read_algebra_file(const std::filesystem::path& path);

/// Writes the nonzero entries with a < b (basis order); the output parses back to equal values.
std::string format_algebra_text(const LieAlgebraSpec& algebra, const TwoCocycle* cocycle = nullptr);

/// Parses "a,b=value;a,b=value" (value as p or p/q) into a cocycle on the algebra's basis.
TwoCocycle parse_central_terms(const LieAlgebraSpec& algebra, std::string_view spec);

}  // namespace casimir::algebra
