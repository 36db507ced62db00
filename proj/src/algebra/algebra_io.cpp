#include "casimir/algebra/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace casimir::algebra {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t lookup(const LieAlgebraSpec& alg, const std::string& label, std::size_t line) {
  try {
    return alg.index_of(label);
  } catch (const InputError& e) {
    throw AlgebraParseError(line, e.what());
  }
}

Rational parse_value(const std::string& num, const std::string& den, std::size_t line) {
  try {
    return rational_from_parts(num, den);
  } catch (const InputError& e) {
    throw AlgebraParseError(line, e.what());
  }
}

}  // namespace

AlgebraDocument parse_algebra_text(std::string_view text) {
  std::optional<LieAlgebraSpec> alg;
  std::optional<TwoCocycle> cocycle;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_f;
  std::set<std::pair<std::size_t, std::size_t>> seen_c;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    const std::string& kind = tok[0];
    if (kind == "basis") {
      if (alg) throw AlgebraParseError(line_no, "duplicate 'basis' directive");
      if (tok.size() < 2) throw AlgebraParseError(line_no, "'basis' needs at least one label");
      try {
        alg.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const PreconditionError& e) {
        throw AlgebraParseError(line_no, e.what());
      }
      continue;
    }
    if (!alg) throw AlgebraParseError(line_no, "'" + kind + "' before 'basis'");

    if (kind == "bracket") {
      if (tok.size() != 6) throw AlgebraParseError(line_no, "expected: bracket <a> <b> <c> <num> <den>");
      std::size_t a = lookup(*alg, tok[1], line_no);
      std::size_t b = lookup(*alg, tok[2], line_no);
      std::size_t c = lookup(*alg, tok[3], line_no);
      if (a == b) throw AlgebraParseError(line_no, "bracket of a generator with itself");
      if (!seen_f.insert({std::min(a, b), std::max(a, b), c}).second)
        throw AlgebraParseError(line_no, "structure constant assigned twice");
      alg->set_structure_constant(a, b, c, parse_value(tok[4], tok[5], line_no));
    } else if (kind == "central") {
      if (tok.size() != 5) throw AlgebraParseError(line_no, "expected: central <a> <b> <num> <den>");
      std::size_t a = lookup(*alg, tok[1], line_no);
      std::size_t b = lookup(*alg, tok[2], line_no);
      if (a == b) throw AlgebraParseError(line_no, "central term of a generator with itself");
      if (!seen_c.insert({std::min(a, b), std::max(a, b)}).second)
        throw AlgebraParseError(line_no, "central term assigned twice");
      if (!cocycle) cocycle.emplace(alg->dimension());
      cocycle->set(a, b, parse_value(tok[3], tok[4], line_no));
    } else {
      throw AlgebraParseError(line_no, "unknown directive '" + kind + "'");
    }
  }
  if (!alg) throw AlgebraParseError(line_no, "missing 'basis' directive");
  return AlgebraDocument{std::move(*alg), std::move(cocycle)};
}

AlgebraDocument read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string format_algebra_text(const LieAlgebraSpec& algebra, const TwoCocycle* cocycle) {
  std::ostringstream out;
  out << "basis";
  for (const auto& l : algebra.basis_labels()) out << ' ' << l;
  out << '\n';
  const std::size_t n = algebra.dimension();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& v = algebra.f(c, a, b);
        if (v == 0) continue;
        out << "bracket " << algebra.label(a) << ' ' << algebra.label(b) << ' ' << algebra.label(c) << ' '
            << numerator(v) << ' ' << denominator(v) << '\n';
      }
  if (cocycle) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const Rational& v = (*cocycle)(a, b);
        if (v == 0) continue;
        out << "central " << algebra.label(a) << ' ' << algebra.label(b) << ' ' << numerator(v) << ' '
            << denominator(v) << '\n';
      }
  }
  return out.str();
}

TwoCocycle parse_central_terms(const LieAlgebraSpec& algebra, std::string_view spec) {
  TwoCocycle out(algebra.dimension());
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(';', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    auto comma = item.find(',');
    auto eq = item.find('=');
    if (comma == std::string_view::npos || eq == std::string_view::npos || eq < comma)
      throw InputError("central term '" + std::string(item) + "' is not of the form a,b=value");
    std::string a(item.substr(0, comma));
    std::string b(item.substr(comma + 1, eq - comma - 1));
    Rational v = parse_rational(item.substr(eq + 1));
    std::size_t ia = algebra.index_of(a);
    std::size_t ib = algebra.index_of(b);
    if (ia == ib) throw InputError("central term of '" + a + "' with itself");
    out.set(ia, ib, v);
  }
  return out;
}

}  // namespace casimir::algebra
