#include "casimir/algebra/catalog.hpp"

#include <cctype>

#include "casimir/error.hpp"

namespace casimir::algebra {

LieAlgebraSpec poincare_2plus1() {
  LieAlgebraSpec g({"H", "P1", "P2", "J", "K1", "K2"});
  g.set_structure_constant("J", "P1", "P2", -1);
  g.set_structure_constant("J", "P2", "P1", 1);
  g.set_structure_constant("J", "K1", "K2", -1);
  g.set_structure_constant("J", "K2", "K1", 1);
  g.set_structure_constant("K1", "K2", "J", 1);
  g.set_structure_constant("K1", "H", "P1", 1);
  g.set_structure_constant("K2", "H", "P2", 1);
  g.set_structure_constant("K1", "P1", "H", 1);
  g.set_structure_constant("K2", "P2", "H", 1);
  return g;
}

LieAlgebraSpec abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  return LieAlgebraSpec(std::move(labels));
}

LieAlgebraSpec heisenberg(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("Y" + std::to_string(i));
  labels.push_back("Z");
  LieAlgebraSpec g(std::move(labels));
  for (std::size_t i = 0; i < n; ++i) g.set_structure_constant(i, n + i, 2 * n, 1);
  return g;
}

LieAlgebraSpec galilei_1plus1() {
  LieAlgebraSpec g({"H", "P", "K"});
  g.set_structure_constant("K", "H", "P", 1);
  return g;
}

namespace {

bool parse_suffix(const std::string& name, const std::string& prefix, std::size_t& n) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
  const std::string tail = name.substr(prefix.size());
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  n = std::stoul(tail);
  return n >= 1;
}

}  // namespace

LieAlgebraSpec builtin_algebra(const std::string& name) {
  if (name == "poincare21") return poincare_2plus1();
  if (name == "galilei11") return galilei_1plus1();
  std::size_t n = 0;
  if (parse_suffix(name, "abelian", n)) return abelian(n);
  if (parse_suffix(name, "heisenberg", n)) return heisenberg(n);
  throw InputError("unknown builtin algebra '" + name + "' (expected poincare21, galilei11, abelianN, heisenbergN)");
}

}  // namespace casimir::algebra
