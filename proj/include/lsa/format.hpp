#pragma once

#include "lsa/rational.hpp"
#include "lsa/superalgebra.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsa {

// Parse failure with a 1-based source location.
struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line), column(column) {}
};

// One summand of a product's right-hand side: either a rational coefficient
// or a named parameter, times a basis label.
struct Term {
  std::optional<Rational> coefficient;  // exactly one of the two is set
  std::optional<std::string> parameter;
  bool negated = false;  // parameter terms carry their sign separately
  std::string label;
};

struct Product {
  std::string left, right;
  std::vector<Term> terms;
  int line = 0;
};

// Text form of a law, possibly with declared parameters.
//
// Line-oriented format, '#' starts a comment:
//   dims <n> <m>
//   even <label>...
//   odd <label>...
//   param <name>
//   [A,B] = c1 L1 + c2 L2 - L3 ...
// Rational literals look like 2, -1, 1/2; a bare label means coefficient 1;
// a declared parameter name may stand in for a coefficient. Unlisted
// products are zero.
struct Definition {
  int n = 0, m = 0;
  std::vector<std::string> evenLabels, oddLabels;
  std::vector<std::string> params;
  std::vector<Product> products;
};

Definition parse(const std::string& text);

// Binds every declared parameter and produces the structure constants.
// Throws std::invalid_argument naming any unbound parameter or any binding
// of an undeclared name.
SuperAlgebra instantiate(const Definition& def, const std::map<std::string, Rational>& bindings);

// Canonical text: header lines, then nonzero products with left/right labels
// in lexicographic order, coefficients in lowest terms.
// parse . serialize . instantiate is the identity on tensors.
std::string serialize(const SuperAlgebra& a);

}  // namespace lsa
