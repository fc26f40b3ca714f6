#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "feec/errors.hpp"
#include "feec/json_io.hpp"
#include "feec/parse.hpp"
#include "feec/print.hpp"

using namespace feec;

TEST_CASE("grammar basics") {
  int n = 2;
  DiffForm just_x(3, 0);
  just_x.add_term({}, SLocalPoly(Polynomial::variable(3, 0)));
  CHECK(parse_diff_form("x1", n) == just_x);
  // aliases coincide with numbered variables in low dimension
  CHECK(parse_diff_form("x + y + z", n) == parse_diff_form("x1 + x2 + x3", n));
  CHECK(parse_diff_form("s", n) == parse_diff_form("x1 + x2 + x3", n));
  CHECK(parse_diff_form("ds", n) == parse_diff_form("dx + dy + dz", n));
  CHECK(parse_diff_form("2*x^3*y", n) == parse_diff_form("2*x*x*x*y", n));
  CHECK(parse_diff_form("x - y", n) == parse_diff_form("x + (0-1)*y", n));
  CHECK(parse_diff_form("-x*dy", n) == parse_diff_form("(0-1)*x*dy", n));
  CHECK(parse_diff_form("1/2*dx/\\dy", n) ==
        Rational(1, 2) * parse_diff_form("dx/\\dy", n));
  CHECK(parse_diff_form("dx/\\dy", n) ==
        -Rational(1) * parse_diff_form("dy/\\dx", n));
  CHECK(parse_diff_form("dx/\\dx", n).is_zero());
  CHECK(parse_diff_form("(x + y)*(dx - dz)", n) ==
        parse_diff_form("x*dx + y*dx - x*dz - y*dz", n));
  // s-division on a parenthesized factor
  CHECK(parse_diff_form("(x*y/s)*ds", n).terms().begin()->second.s_power() == 1);
  CHECK(parse_diff_form("(x^2/s^2)*dx", n).terms().begin()->second.s_power() ==
        2);
}

TEST_CASE("parse errors carry positions") {
  int n = 2;
  CHECK_THROWS_AS(parse_diff_form("x +", n), ParseError);
  CHECK_THROWS_AS(parse_diff_form("(x", n), ParseError);
  CHECK_THROWS_AS(parse_diff_form("x/0", n), ParseError);
  CHECK_THROWS_AS(parse_diff_form("x/y", n), ParseError);
  CHECK_THROWS_AS(parse_diff_form("dx + dy/\\dz", n), ParseError);
  CHECK_THROWS_AS(parse_diff_form("", n), ParseError);
  try {
    parse_diff_form("x + %", n);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("unknown variables") {
  CHECK_THROWS_AS(parse_diff_form("w", 2), UnknownVariable);   // needs n = 3
  CHECK_THROWS_AS(parse_diff_form("x5", 2), UnknownVariable);  // only x1..x3
  CHECK_NOTHROW(parse_diff_form("w", 3));
  CHECK_NOTHROW(parse_diff_form("x4", 3));
  // aliases are reserved for low dimension
  CHECK_THROWS_AS(parse_diff_form("x", 4), UnknownVariable);
  CHECK_NOTHROW(parse_diff_form("x1", 4));
  // the simplex chart has one fewer variable and no s
  CHECK_THROWS_AS(parse_simplex_form("z", 2), UnknownVariable);
  CHECK_NOTHROW(parse_simplex_form("y", 2));
  CHECK_THROWS_AS(parse_simplex_form("s", 2), UnknownVariable);
  CHECK_THROWS_AS(parse_simplex_form("ds", 2), UnknownVariable);
  CHECK_THROWS_AS(parse_simplex_form("x/s", 2), UnknownVariable);
}

TEST_CASE("printing pinned forms") {
  int n = 2;
  CHECK(to_string(parse_diff_form("y*dx - (x*y/s)*ds", n)) ==
        "y*dx - (x*y/s)*ds");
  CHECK(to_string(parse_diff_form("dx/\\dy", n)) == "dx/\\dy");
  CHECK(to_string(parse_diff_form("0", n)) == "0");
  CHECK(to_string(parse_diff_form("3/2*x^2", n)) == "3/2*x^2");
  CHECK(to_string(parse_diff_form("x*dy/\\dz + y*dz/\\dx + z*dx/\\dy", n)) ==
        "z*dx/\\dy - y*dx/\\dz + x*dy/\\dz");
}

TEST_CASE("round trip through text") {
  std::mt19937 rng(5150123u);
  auto random_form = [&](int ambient, int degree) {
    DiffForm a(ambient, degree);
    std::vector<IndexSet> sets;
    IndexSet cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == degree) {
        sets.push_back(cur);
        return;
      }
      for (int i = start; i < ambient; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& I : sets) {
      Polynomial c(ambient);
      for (int t = 0; t < 2; ++t) {
        MultiIndex m(ambient, 0);
        for (int v = 0; v < ambient; ++v) m[v] = rng() % 3;
        c.add_term(m, Rational(static_cast<int>(rng() % 9) - 4));
      }
      int shift = rng() % 3;
      DiffForm piece(ambient, degree);
      piece.add_term(I, SLocalPoly(c, shift));
      a += piece;
    }
    return a;
  };
  for (int n = 1; n <= 3; ++n) {
    for (int degree = 0; degree <= n + 1; ++degree) {
      for (int trial = 0; trial < 5; ++trial) {
        DiffForm a = random_form(n + 1, degree);
        if (a.is_zero()) continue;  // "0" reads back at degree zero
        std::string text = to_string(a);
        CAPTURE(n);
        CAPTURE(degree);
        CAPTURE(text);
        DiffForm back = parse_diff_form(text, n);
        CHECK(back == a);
      }
    }
  }
}

TEST_CASE("round trip through json") {
  int n = 2;
  for (const char* text :
       {"0", "x^2*y - z", "y*dx - (x*y/s)*ds", "x*dy/\\dz + y*dz/\\dx",
        "dx/\\dy/\\dz", "(x^2/s^2)*dx + dy"}) {
    CAPTURE(text);
    DiffForm a = parse_diff_form(text, n);
    nlohmann::json j = to_json(a);
    CHECK(diff_form_from_json(j, n) == a);
  }
  DiffForm h = parse_diff_form("x*dx + z*dy", n);
  CHECK(to_json(h)["homogeneity"] == 1);
  CHECK(!to_json(parse_diff_form("x*dx + dy", n)).contains("homogeneity"));
  // simplex side
  SimplexForm t = parse_simplex_form("x*dy - y^2*dx", n);
  CHECK(simplex_form_from_json(to_json(t), n) == t);
  // malformed payloads are rejected
  nlohmann::json bad = to_json(h);
  bad["terms"][0]["indices"] = {1, 1};
  CHECK_THROWS_AS(diff_form_from_json(bad, n), DomainError);
}

TEST_CASE("matrix serialization") {
  RatMat m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(1, 1) = Rational(-3);
  RatMat back = ratmat_from_json(to_json(m));
  CHECK(back.rows() == 2);
  CHECK(back.at(0, 0) == Rational(1, 2));
  CHECK(back.at(1, 1) == Rational(-3));
  CHECK(to_csv(m) == "1/2,0\n0,-3\n");
}
