#include "lsa/format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace lsa {

namespace {

bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Single-line cursor with 1-based error positions.
struct Cursor {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, static_cast<int>(pos) + 1, message);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }
  std::string word() {
    skip_ws();
    if (pos >= text.size() || !label_start(text[pos])) fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size() && label_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
  std::optional<std::string> try_number() {
    skip_ws();
    std::size_t p = pos;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
    if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) return std::nullopt;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p < text.size() && text[p] == '/') {
      ++p;
      if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
        fail("expected digits after '/'");
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    }
    std::string out = text.substr(pos, p - pos);
    pos = p;
    return out;
  }
  int integer(const std::string& what) {
    const auto n = try_number();
    if (!n || n->find('/') != std::string::npos) fail("expected an integer " + what);
    return std::stoi(*n);
  }
};

}  // namespace

Definition parse(const std::string& text) {
  Definition def;
  bool sawDims = false;
  std::set<std::string> labels, params;
  std::set<std::pair<std::string, std::string>> seenProducts;

  auto grading = [&](const std::string& label) -> int {
    if (std::find(def.evenLabels.begin(), def.evenLabels.end(), label) != def.evenLabels.end())
      return 0;
    return 1;
  };

  std::istringstream stream(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(stream, raw)) {
    ++lineNo;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    Cursor cur{raw, lineNo};
    if (cur.done()) continue;

    if (cur.peek() == '[') {
      if (!sawDims) cur.fail("product before the dims line");
      cur.expect('[', "to open a product");
      const std::string left = cur.word();
      cur.expect(',', "between the factors");
      const std::string right = cur.word();
      cur.expect(']', "to close the product");
      if (!labels.count(left)) cur.fail("unknown label '" + left + "'");
      if (!labels.count(right)) cur.fail("unknown label '" + right + "'");
      if (!seenProducts.insert({left, right}).second)
        cur.fail("duplicate product [" + left + "," + right + "]");
      cur.expect('=', "after the product");

      Product product{left, right, {}, lineNo};
      const int wanted = (grading(left) + grading(right)) % 2;

      // 0 denotes the empty sum.
      cur.skip_ws();
      if (cur.peek() == '0') {
        const std::size_t save = cur.pos;
        ++cur.pos;
        if (cur.done()) {
          def.products.push_back(std::move(product));
          continue;
        }
        cur.pos = save;
      }

      bool first = true;
      while (true) {
        bool negated = false;
        cur.skip_ws();
        if (cur.eat('-'))
          negated = true;
        else if (!first)
          cur.expect('+', "between terms");
        else
          cur.eat('+');
        first = false;

        Term term;
        term.negated = negated;
        cur.skip_ws();
        if (const auto num = cur.try_number()) {
          Rational value = parse_rational(*num);
          if (negated) value = -value;
          term.coefficient = value;
          term.negated = false;
          cur.eat('*');
          term.label = cur.word();
        } else {
          const std::string name = cur.word();
          if (params.count(name)) {
            term.parameter = name;
            cur.eat('*');
            term.label = cur.word();
          } else {
            term.coefficient = Rational(negated ? -1 : 1);
            term.negated = false;
            term.label = name;
          }
        }
        if (!labels.count(term.label)) cur.fail("unknown label '" + term.label + "'");
        if (grading(term.label) != wanted)
          cur.fail("grading violation in [" + left + "," + right + "]: " + term.label +
                   " has the wrong parity");
        product.terms.push_back(std::move(term));
        if (cur.done()) break;
      }
      def.products.push_back(std::move(product));
      continue;
    }

    const std::string keyword = cur.word();
    if (keyword == "dims") {
      if (sawDims) cur.fail("duplicate dims line");
      def.n = cur.integer("for the even dimension");
      def.m = cur.integer("for the odd dimension");
      if (def.n < 0 || def.m < 0 || def.n + def.m < 1)
        cur.fail("dims must satisfy n >= 0, m >= 0, n+m >= 1");
      sawDims = true;
    } else if (keyword == "even" || keyword == "odd") {
      if (!sawDims) cur.fail("label line before the dims line");
      auto& target = keyword == "even" ? def.evenLabels : def.oddLabels;
      while (!cur.done()) {
        const std::string label = cur.word();
        if (!labels.insert(label).second) cur.fail("duplicate label '" + label + "'");
        target.push_back(label);
      }
    } else if (keyword == "param") {
      const std::string name = cur.word();
      if (!params.insert(name).second) cur.fail("duplicate parameter '" + name + "'");
      if (labels.count(name)) cur.fail("parameter '" + name + "' collides with a label");
      def.params.push_back(name);
    } else {
      cur.fail("unknown directive '" + keyword + "'");
    }
    if (!cur.done()) cur.fail("trailing input");
  }

  if (!sawDims) throw ParseError(lineNo + 1, 1, "missing dims line");
  if (static_cast<int>(def.evenLabels.size()) != def.n)
    throw ParseError(lineNo + 1, 1,
                     "expected " + std::to_string(def.n) + " even labels, got " +
                         std::to_string(def.evenLabels.size()));
  if (static_cast<int>(def.oddLabels.size()) != def.m)
    throw ParseError(lineNo + 1, 1,
                     "expected " + std::to_string(def.m) + " odd labels, got " +
                         std::to_string(def.oddLabels.size()));
  return def;
}

SuperAlgebra instantiate(const Definition& def, const std::map<std::string, Rational>& bindings) {
  const std::set<std::string> declared(def.params.begin(), def.params.end());
  for (const auto& [name, value] : bindings) {
    (void)value;
    if (!declared.count(name))
      throw std::invalid_argument("binding for undeclared parameter '" + name + "'");
  }
  for (const auto& name : def.params)
    if (!bindings.count(name)) throw std::invalid_argument("unbound parameter '" + name + "'");

  SuperAlgebra alg(static_cast<std::size_t>(def.n), static_cast<std::size_t>(def.m),
                   def.evenLabels, def.oddLabels);
  for (const auto& product : def.products) {
    const auto a = alg.find_label(product.left), b = alg.find_label(product.right);
    if (!a || !b) throw std::invalid_argument("product references an unknown label");
    GradedVector value = GradedVector::zero(alg.even_dim(), alg.odd_dim());
    for (const auto& term : product.terms) {
      Rational coefficient;
      if (term.coefficient) {
        coefficient = *term.coefficient;
      } else {
        coefficient = bindings.at(*term.parameter);
        if (term.negated) coefficient = -coefficient;
      }
      const auto target = alg.find_label(term.label);
      if (!target) throw std::invalid_argument("term references an unknown label");
      if (target->degree == 0)
        value.even[target->index] += coefficient;
      else
        value.odd[target->index] += coefficient;
    }
    alg.set_product(*a, *b, value);
  }
  return alg;
}

namespace {

std::string term_list(const SuperAlgebra& a, const GradedVector& value) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coefficient, const std::string& label) {
    if (coefficient == 0) return;
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (magnitude != 1) os << to_string(magnitude) << " ";
    os << label;
    first = false;
  };
  for (std::size_t k = 0; k < a.even_dim(); ++k) emit(value.even[k], a.even_labels()[k]);
  for (std::size_t k = 0; k < a.odd_dim(); ++k) emit(value.odd[k], a.odd_labels()[k]);
  return os.str();
}

}  // namespace

std::string serialize(const SuperAlgebra& a) {
  std::ostringstream os;
  os << "dims " << a.even_dim() << " " << a.odd_dim() << "\n";
  if (a.even_dim() > 0) {
    os << "even";
    for (const auto& l : a.even_labels()) os << " " << l;
    os << "\n";
  }
  if (a.odd_dim() > 0) {
    os << "odd";
    for (const auto& l : a.odd_labels()) os << " " << l;
    os << "\n";
  }

  std::vector<BasisIndex> basis;
  for (std::size_t i = 0; i < a.even_dim(); ++i) basis.push_back({0, i});
  for (std::size_t j = 0; j < a.odd_dim(); ++j) basis.push_back({1, j});
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!a.bracket_basis(x, y).is_zero()) pairs.push_back({x, y});
  std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    const auto keyP = std::make_pair(a.label(p.first), a.label(p.second));
    const auto keyQ = std::make_pair(a.label(q.first), a.label(q.second));
    return keyP < keyQ;
  });
  for (const auto& [x, y] : pairs)
    os << "[" << a.label(x) << "," << a.label(y)
       << "] = " << term_list(a, a.bracket_basis(x, y)) << "\n";
  return os.str();
}

}  // namespace lsa
