#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsa/catalog.hpp"
#include "lsa/format.hpp"
#include "test_support.hpp"

using namespace lsa;
namespace cat = lsa::catalog;

namespace {

const char* kR32 = R"(# nilindex-4 law of type (3,2)
dims 3 2
even X0 X1 X2
odd Y1 Y2
[X1,X0] = X2
[X0,X0] = X2
[X0,Y1] = 1/2 Y2
[X1,Y1] = 1/2 Y2
[Y1,X0] = Y2
[Y1,Y1] = X0
[Y2,Y1] = X2
)";

}  // namespace

TEST_CASE("parsing a full table") {
  const Definition def = parse(kR32);
  CHECK(def.n == 3);
  CHECK(def.m == 2);
  CHECK(def.products.size() == 7);
  const SuperAlgebra law = instantiate(def, {});
  CHECK(tensors_equal(law, cat::build("R32", 3, 2)));
}

TEST_CASE("abelian definition") {
  const Definition def = parse("dims 1 0\neven A\n");
  const SuperAlgebra law = instantiate(def, {});
  CHECK(law.even_dim() == 1);
  CHECK(leibniz_defects(law).empty());
}

TEST_CASE("parse errors carry locations") {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("dims 2 1\neven X0 X1\nodd Y1\n[X0,X0] = Y1\n") == 4);   // grading
  CHECK(line_of("dims 2 0\neven X0 X0\n") == 2);                          // duplicate label
  CHECK(line_of("dims 1 1\neven X0\nodd Y1\n[X0,Y1] = alpha Y1\n") == 4); // undeclared name
  CHECK(line_of("dims 1 0\neven X0\n[X0,X0] = 0\n[X0,X0] = 0\n") == 4);   // duplicate product
  CHECK(line_of("dims 1 0\neven X0\n[X0,Z] = 0\n") == 3);                 // unknown label
  CHECK(line_of("even X0\ndims 1 0\n") == 1);                             // labels before dims
  CHECK(line_of("dims 1 0\neven X0\nbogus\n") == 3);                      // unknown directive
  CHECK_THROWS_AS(parse("even X\n"), ParseError);                         // missing dims
  CHECK_THROWS_AS(parse("dims 2 0\neven X0\n"), ParseError);              // label count
}

TEST_CASE("parameters bind at instantiation") {
  const char* source =
      "dims 2 2\neven X0 X1\nodd Y1 Y2\nparam alpha\n"
      "[X0,X0] = X1\n[Y1,X0] = Y2\n[X0,Y1] = alpha Y2\n[Y1,Y1] = X1\n";
  const Definition def = parse(source);
  const SuperAlgebra law = instantiate(def, {{"alpha", 1}});
  CHECK(tensors_equal(law, cat::build("zf_2_2.mu1", 2, 2, {{"alpha", 1}})));

  CHECK_THROWS_WITH_AS(instantiate(def, {}), doctest::Contains("alpha"),
                       std::invalid_argument);
  CHECK_THROWS_AS(instantiate(def, {{"alpha", 1}, {"beta", 2}}), std::invalid_argument);

  // Negated parameter terms.
  const Definition neg = parse(
      "dims 2 2\neven X0 X1\nodd Y1 Y2\nparam a\n[X0,Y1] = - a Y2 + Y2\n");
  const SuperAlgebra negLaw = instantiate(neg, {{"a", Rational(1, 2)}});
  const auto value = negLaw.bracket_basis({0, 0}, {1, 0});
  CHECK(value.odd[1] == Rational(1, 2));
}

TEST_CASE("serialization is canonical and round-trips") {
  const SuperAlgebra thm = cat::build("thm312", 2, 3);
  const std::string text = serialize(thm);
  const SuperAlgebra back = instantiate(parse(text), {});
  CHECK(tensors_equal(back, thm));
  CHECK(serialize(back) == text);

  const SuperAlgebra tiny(1, 1);
  CHECK(tensors_equal(instantiate(parse(serialize(tiny)), {}), tiny));

  // Lexicographic product order: [X0,*] lines precede [X1,*] and [Y1,*].
  const std::string r32 = serialize(cat::build("R32", 3, 2));
  CHECK(r32.find("[X0,X0]") < r32.find("[X0,Y1]"));
  CHECK(r32.find("[X0,Y1]") < r32.find("[X1,X0]"));
  CHECK(r32.find("[X1,Y1]") < r32.find("[Y1,X0]"));
}

TEST_CASE("round-trip on seeded random laws") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SuperAlgebra law = lsa::testing::random_law(3, 2, 1000 + seed, 8);
    CHECK(tensors_equal(instantiate(parse(serialize(law)), {}), law));
  }
}

TEST_CASE("round-trip on catalog entries") {
  const std::vector<std::pair<std::string, std::pair<int, int>>> picks = {
      {"thm312", {3, 3}},      {"R43", {4, 3}},          {"zf_2_3.mu5", {2, 3}},
      {"zf_3_3.mu12", {3, 3}}, {"zf_2_m.mu_mp2", {2, 6}}, {"R_conj", {4, 4}}};
  for (const auto& [name, dims] : picks) {
    const SuperAlgebra law = cat::build(name, dims.first, dims.second);
    CHECK(tensors_equal(instantiate(parse(serialize(law)), {}), law));
  }
}
