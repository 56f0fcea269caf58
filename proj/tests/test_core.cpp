#include <doctest.h>

#include <random>
#include <set>

#include "coxeter/catalog.hpp"
#include "coxeter/core.hpp"
#include "coxeter/errors.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coxeter;
using testing::elem;
using testing::word;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_coxeter_matrix(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("core") {

TEST_CASE("parse a well-formed matrix") {
  const auto a3 = parse_coxeter_matrix("3\n1 3 2\n3 1 3\n2 3 1");
  CHECK(a3.rank() == 3);
  CHECK(a3.bond(0, 1) == 3);
  CHECK(a3.bond(0, 2) == 2);
  CHECK(a3.bonds() == catalog::type_A(3).bonds());

  const auto inf = parse_coxeter_matrix("2\n1 0\n0 1");
  CHECK(inf.bond(0, 1) == kInfiniteBond);
}

TEST_CASE("comments, blank lines and names") {
  const auto sys = parse_coxeter_matrix("# triangle\n\n3\n1 3 3\n# middle\n3 1 3\n3 3 1\nnames: a b c\n");
  CHECK(sys.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(parse_word(sys, "a c b") == Word{0, 2, 1});
  CHECK(parse_word(sys, "1 c") == Word{0, 2});
  CHECK(format_word(sys, {0, 2}) == "a c");
}

TEST_CASE("each malformed matrix has its own error naming the position") {
  const auto symmetric = parse_error("2\n1 3\n4 1");
  CHECK(symmetric.find("not symmetric") != std::string::npos);
  CHECK(symmetric.find("row 1, column 2") != std::string::npos);

  const auto diagonal = parse_error("2\n1 3\n3 2");
  CHECK(diagonal.find("diagonal") != std::string::npos);
  CHECK(diagonal.find("row 2, column 2") != std::string::npos);

  const auto unit = parse_error("2\n1 1\n1 1");
  CHECK(unit.find("off-diagonal entry 1") != std::string::npos);
  CHECK(unit.find("row 1, column 2") != std::string::npos);

  const auto integer = parse_error("2\n1 x\n3 1");
  CHECK(integer.find("malformed integer 'x'") != std::string::npos);
  CHECK(integer.find("row 1, column 2") != std::string::npos);

  const auto short_row = parse_error("3\n1 3 2\n3 1\n2 3 1");
  CHECK(short_row.find("rank mismatch") != std::string::npos);
  CHECK(short_row.find("row 2") != std::string::npos);

  CHECK(parse_error("3\n1 3 2\n3 1 3").find("rank mismatch") != std::string::npos);
  CHECK(parse_error("").find("no rank line") != std::string::npos);

  const std::set<std::string> distinct{symmetric, diagonal, unit, integer, short_row};
  CHECK(distinct.size() == 5);
}

TEST_CASE("word parsing") {
  const auto a3 = catalog::type_A(3);
  CHECK(parse_word(a3, "2 1 2") == Word{1, 0, 1});
  CHECK(parse_word(a3, "").empty());
  CHECK(parse_word(a3, "e").empty());
  CHECK_THROWS_AS(parse_word(a3, "4"), ParseError);
  CHECK_THROWS_AS(parse_word(a3, "0"), ParseError);
  CHECK_THROWS_AS(parse_word(a3, "a"), ParseError);
}

TEST_CASE("braid closure") {
  const auto a2 = catalog::type_A(2);
  CHECK(as_set(braid_closure(a2, {0, 1, 0})) == std::set<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(as_set(braid_closure(a2, {})) == std::set<Word>{{}});

  const auto a3 = catalog::type_A(3);
  const auto closure = as_set(braid_closure(a3, {0, 1, 2, 1, 0}));
  for (const Word& w : {Word{0, 1, 2, 1, 0}, Word{0, 2, 1, 2, 0}, Word{2, 0, 1, 0, 2}, Word{2, 1, 0, 1, 2}})
    CHECK(closure.count(w) == 1);

  // No braid move across an infinite bond.
  CHECK(braid_closure(catalog::dihedral(kInfiniteBond), {0, 1, 0}).size() == 1);
}

TEST_CASE("closure cap is reported with the input") {
  auto sys = catalog::type_A(4);
  auto limits = sys.limits();
  limits.max_closure = 3;
  sys.set_limits(limits);
  try {
    braid_closure(sys, {0, 1, 2, 3, 2, 1, 0});
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("1 2 3 4 3 2 1") != std::string::npos);
  }
}

TEST_CASE("reducedness and normal forms") {
  const auto a2 = catalog::type_A(2);
  const auto i4 = catalog::dihedral(4);
  CHECK(is_reduced(a2, {0, 1, 0}));
  CHECK_FALSE(is_reduced(a2, {0, 0}));
  CHECK_FALSE(is_reduced(i4, {0, 1, 0, 1, 0}));

  CHECK(normal_form(a2, {0, 0}).is_identity());
  CHECK(normal_form(a2, {1, 0, 1}).nf == Word{0, 1, 0});
  CHECK(normal_form(i4, {0, 1, 0, 1, 0}).nf == Word{1, 0, 1});

  const auto nf = normal_form(i4, {0, 1, 0, 1, 0}).nf;
  CHECK(normal_form(i4, nf).nf == nf);
}

TEST_CASE("products and inverses") {
  const auto a2 = catalog::type_A(2);
  CHECK(product(a2, elem(a2, "1"), elem(a2, "2")).nf == Word{0, 1});
  CHECK(product(a2, elem(a2, "1 2 1"), elem(a2, "1 2")).nf == Word{0});
  for (const auto& a : enumerate_ball(a2, std::nullopt)) {
    CHECK(product(a2, a, inverse(a2, a)).is_identity());
  }
  for (Generator s = 0; s < 3; ++s) {
    const auto a3 = catalog::type_A(3);
    CHECK(product(a3, generator(s), generator(s)).is_identity());
  }
  const auto b3 = catalog::type_B(3);
  const auto x = elem(b3, "1 2 3"), y = elem(b3, "3 2"), z = elem(b3, "2 3 2 1");
  CHECK(product(b3, product(b3, x, y), z) == product(b3, x, product(b3, y, z)));
}

TEST_CASE("descents") {
  const auto a2 = catalog::type_A(2);
  CHECK(right_descents(a2, elem(a2, "1 2")) == std::vector<Generator>{1});
  CHECK(left_descents(a2, elem(a2, "1 2")) == std::vector<Generator>{0});
  CHECK(right_descents(a2, elem(a2, "1 2 1")) == std::vector<Generator>{0, 1});
}

TEST_CASE("reduced expressions") {
  const auto a2 = catalog::type_A(2);
  CHECK(as_set(reduced_expressions(a2, elem(a2, "1 2"))) == std::set<Word>{{0, 1}});
  CHECK(as_set(reduced_expressions(a2, elem(a2, "1 2 1"))) == std::set<Word>{{0, 1, 0}, {1, 0, 1}});
  const auto a3 = catalog::type_A(3);
  CHECK(reduced_expressions(a3, elem(a3, "1 2 3 2 1")).size() == 6);
}

TEST_CASE("exchange soundness on small balls") {
  for (const auto& sys : {catalog::type_A(2), catalog::type_A(3), catalog::type_B(3), catalog::dihedral(4),
                          catalog::dihedral(kInfiniteBond)}) {
    for (const auto& a : enumerate_ball(sys, 8)) {
      for (const auto& w : reduced_expressions(sys, a)) {
        CHECK(w.size() == a.length());
        CHECK(normal_form(sys, w) == a);
      }
    }
  }
}

TEST_CASE("group orders match the geometric representation") {
  struct Case {
    CoxeterSystem sys;
    std::size_t order;
  };
  for (const auto& c : {Case{catalog::type_A(2), 6}, Case{catalog::type_A(3), 24}, Case{catalog::type_B(3), 48},
                        Case{catalog::type_H3(), 120}, Case{catalog::dihedral(5), 10}, Case{catalog::dihedral(6), 12}}) {
    const oracle::Geometric g(c.sys.bonds());
    const oracle::MatrixBall ball(g, 64);
    REQUIRE(ball.exhausted);
    CHECK(ball.elements.size() == c.order);
    CHECK(enumerate_ball(c.sys, std::nullopt).size() == c.order);
    CHECK(is_finite_type(c.sys));
  }
}

TEST_CASE("balls agree with the geometric representation element by element") {
  for (const auto& sys : {catalog::type_B(3), catalog::affine_A2(), catalog::universal(3),
                          catalog::dihedral(kInfiniteBond)}) {
    const oracle::Geometric g(sys.bonds());
    const oracle::MatrixBall ball(g, 6);
    const auto ours = enumerate_ball(sys, 6);
    CHECK(ours.size() == ball.elements.size());
    for (const auto& a : ours) CHECK(ball.length_of(g, a.nf) == a.length());
  }
}

TEST_CASE("infinite groups") {
  const auto inf = catalog::dihedral(kInfiniteBond);
  CHECK(enumerate_ball(inf, 3).size() == 7);
  CHECK_FALSE(is_finite_type(inf));
  CHECK_FALSE(is_finite_type(catalog::affine_A2()));
  CHECK_FALSE(is_finite_type(catalog::universal(3)));
  auto affine = catalog::affine_A2();
  auto limits = affine.limits();
  limits.max_ball = 300;
  affine.set_limits(limits);
  CHECK_THROWS_AS(enumerate_ball(affine, std::nullopt), ResourceError);
}

TEST_CASE("finite type classification against enumeration") {
  // Rank-3 systems with small bonds: finite exactly when enumeration stops.
  const std::vector<BondOrder> bonds{2, 3, 4, 5, 6};
  for (auto a : bonds)
    for (auto b : bonds)
      for (auto c : bonds) {
        CoxeterSystem sys({{1, a, b}, {a, 1, c}, {b, c, 1}});
        auto limits = sys.limits();
        limits.max_ball = 300;  // the largest finite rank-3 group has 120 elements
        sys.set_limits(limits);
        bool finite = true;
        try {
          enumerate_ball(sys, std::nullopt);
        } catch (const ResourceError&) {
          finite = false;
        }
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(is_finite_type(sys) == finite);
      }
}

TEST_CASE("ball growth is strictly increasing until the group is exhausted") {
  const auto b3 = catalog::type_B(3);
  std::size_t previous = 0;
  for (std::size_t r = 0; r <= 9; ++r) {
    const auto size = enumerate_ball(b3, r).size();
    CHECK(size > previous);
    previous = size;
  }
  CHECK(previous == 48);
  CHECK(enumerate_ball(b3, 10).size() == 48);
}

TEST_CASE("normal forms match the geometric representation on random words") {
  std::mt19937 rng(7);
  for (const auto& sys : {catalog::type_A(3), catalog::type_B(3), catalog::type_H3(), catalog::affine_A2(),
                          catalog::universal(3)}) {
    const oracle::Geometric g(sys.bonds());
    std::uniform_int_distribution<int> gen(0, static_cast<int>(sys.rank()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      for (int i = 0; i < 14; ++i) w.push_back(static_cast<Generator>(gen(rng)));
      const auto a = normal_form(sys, w);
      CHECK(g.key_of(a.nf) == g.key_of(w));
      CHECK(is_reduced(sys, a.nf));
    }
  }
}

TEST_CASE("normal form is independent of the order of braid moves") {
  std::mt19937 rng(11);
  for (const auto& sys : {catalog::type_A(3), catalog::type_B(3), catalog::dihedral(5), catalog::affine_A2()}) {
    std::uniform_int_distribution<int> gen(0, static_cast<int>(sys.rank()) - 1);
    for (int trial = 0; trial < 20; ++trial) {
      Word w;
      for (int i = 0; i < 9; ++i) w.push_back(static_cast<Generator>(gen(rng)));
      const auto expected = normal_form(sys, w).nf;
      for (int shuffle = 0; shuffle < 100; ++shuffle) CHECK(oracle::literal_normal_form(sys, w, rng) == expected);
    }
  }
}

TEST_CASE("permutation model of type A") {
  const auto a3 = catalog::type_A(3);
  for (const auto& a : enumerate_ball(a3, std::nullopt)) {
    CHECK(oracle::Permutation::of(3, a.nf).inversions() == a.length());
  }
}

TEST_CASE("element validation") {
  const auto a2 = catalog::type_A(2);
  CHECK_THROWS_AS(product(a2, Element{{0, 0}}, elem(a2, "1")), DomainError);
  CHECK_THROWS_AS(product(a2, Element{{1, 0, 1}}, elem(a2, "1")), DomainError);
  CHECK_THROWS_AS(normal_form(a2, {0, 5}), DomainError);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(CoxeterSystem({}), DomainError);
  CHECK_THROWS_AS(CoxeterSystem({{1, 3}, {3, 1}}, {"a", "a"}), DomainError);
  CHECK_THROWS_AS(CoxeterSystem({{1, 3}, {3, 1}}, {"a", "e"}), DomainError);
  CHECK_THROWS_AS(CoxeterSystem({{1, 3}, {3, 1}}, {"a", "2"}), DomainError);
}

}  // TEST_SUITE
