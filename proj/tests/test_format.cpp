#include "schubert/format.hpp"

#include "schubert/groth.hpp"

#include <doctest.h>

using namespace schubert;

namespace {

Permutation perm(const char* text) { return Permutation::parse(text); }

} // namespace

TEST_CASE("default variable names are x1, x2, ...") {
    CHECK(default_variable_name(1) == "x1");
    CHECK(default_variable_name(12) == "x12");
}

TEST_CASE("multivariate text sorts by total degree, then descending lex") {
    CHECK(to_text(MultiPoly()) == "0");
    CHECK(to_text(MultiPoly::constant(1)) == "1");
    CHECK(to_text(MultiPoly::constant(-7)) == "-7");
    CHECK(to_text(MultiPoly::variable(2)) == "x2");
    CHECK(to_text(MultiPoly::monomial({2}, 1)) == "x1^2");
    CHECK(to_text(MultiPoly::monomial({1, 1}, -3)) == "-3*x1*x2");

    GrothendieckEngine engine;
    CHECK(to_text(engine.polynomial(perm("132"))) == "x1 + x2 - x1*x2");
    CHECK(to_text(engine.polynomial(perm("25314"))) ==
          "x1^3*x2*x3 + x1^2*x2^2*x3 + x1*x2^3*x3 - x1^3*x2^2*x3 - x1^2*x2^3*x3");

    MultiPoly mixed;
    mixed.add_term({}, 1);
    mixed.add_term({1}, -1);
    mixed.add_term({0, 2}, 5);
    CHECK(to_text(mixed) == "1 - x1 + 5*x2^2");
}

TEST_CASE("custom variable namers are honored") {
    const MultiPoly p = MultiPoly::monomial({1, 1}, 1);
    const auto namer = [](int i) { return "z(" + std::to_string(i) + ")"; };
    CHECK(to_text(p, namer) == "z(1)*z(2)");
}

TEST_CASE("univariate text uses ascending powers of t") {
    CHECK(to_text(UniPoly()) == "0");
    CHECK(to_text(UniPoly::constant(1)) == "1");
    CHECK(to_text(UniPoly::from_coefficients({1, 0, -1})) == "1 - t^2");
    CHECK(to_text(UniPoly::from_coefficients({1, -3, 0, 10, -15, 9, -2})) ==
          "1 - 3*t + 10*t^3 - 15*t^4 + 9*t^5 - 2*t^6");
    CHECK(to_text(UniPoly::from_coefficients({0, 1})) == "t");
    CHECK(to_text(UniPoly::from_coefficients({0, -1})) == "-t");
}

TEST_CASE("rational text shows reduced fractions in k") {
    CHECK(to_text(RatUniPoly()) == "0");
    CHECK(to_text(RatUniPoly::from_coefficients(
              {mpq_class(1), mpq_class(5, 2), mpq_class(2), mpq_class(1, 2)})) ==
          "1 + 5/2*k + 2*k^2 + 1/2*k^3");
    CHECK(to_text(RatUniPoly::from_coefficients({mpq_class(0), mpq_class(-1, 3)})) ==
          "-1/3*k");
    CHECK(to_text(RatUniPoly::from_coefficients({mpq_class(0), mpq_class(1)})) == "k");
}

TEST_CASE("diagram_grid draws dots, boxes, and essential ranks") {
    CHECK(diagram_grid(perm("25314"), 5) ==
          "# o . . .\n"
          "# . # 1 o\n"
          "0 . o . .\n"
          "o . . . .\n"
          ". . . o .\n");

    CHECK(diagram_grid(Permutation::identity(), 2) ==
          "o .\n"
          ". o\n");

    CHECK(diagram_grid(perm("21"), 2) ==
          "0 o\n"
          "o .\n");
}
