#include <doctest.h>

#include <map>
#include <set>

#include "coxeter/catalog.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/interval_group.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coxeter;
using testing::elem;

TEST_SUITE("interval_group") {

TEST_CASE("divisors of a reflection") {
  const auto a3 = catalog::type_A(3);
  const auto t = elem(a3, "1 2 1");
  const auto report = divisor_balance(a3, t);
  CHECK(report.balanced);
  CHECK(report.left == std::vector<Element>{identity(), t});
  CHECK(report.right == report.left);
  CHECK_FALSE(report.truncated);
}

TEST_CASE("divisors of Coxeter elements") {
  const auto a3 = catalog::type_A(3);
  const auto r = divisor_balance(a3, elem(a3, "1 2 3"));
  CHECK(r.balanced);
  CHECK(r.left.size() == 14);
  const auto h3 = catalog::type_H3();
  const auto s = divisor_balance(h3, elem(h3, "1 2 3"));
  CHECK(s.balanced);
  CHECK(s.left.size() == 32);
  CHECK(s.right.size() == 32);
}

TEST_CASE("left divisors match brute force and are balanced in B3") {
  const auto b3 = catalog::type_B(3);
  const oracle::Geometric g(b3.bonds());
  const oracle::MatrixBall ball(g, 64);
  const oracle::FiniteAbsolute absolute(g, ball);
  for (const auto& w : enumerate_ball(b3, std::nullopt)) {
    const auto r = divisor_balance(b3, w);
    CHECK(r.balanced);
    std::set<oracle::Geometric::Key> expected, ours;
    for (const auto& [rank, ws] : absolute.interval(w.nf))
      for (const auto& x : ws) expected.insert(g.key_of(x));
    for (const auto& x : r.left) ours.insert(g.key_of(x.nf));
    CHECK(ours == expected);
  }
}

TEST_CASE("divisor preconditions") {
  const auto a4 = catalog::type_A(4);
  CHECK_THROWS_AS(divisor_balance(a4, elem(a4, "1 2 3 4")), DomainError);
  const auto sys = catalog::affine_A2();
  CHECK_THROWS_AS(divisor_balance(sys, elem(sys, "1 2 3")), DomainError);
  const auto r = divisor_balance(sys, elem(sys, "1 2 3"), 9);
  CHECK(r.truncated);
  CHECK(r.balanced);
}

TEST_CASE("presentation of the A2 interval group") {
  const auto a2 = catalog::type_A(2);
  const auto pres = emit_presentation(a2, build_interval(a2, identity(), elem(a2, "1 2")));
  REQUIRE(pres.generators.size() == 4);
  CHECK(pres.generators[0] == elem(a2, "1"));
  CHECK(pres.generators[1] == elem(a2, "2"));
  CHECK(pres.generators[2] == elem(a2, "1 2"));
  CHECK(pres.generators[3] == elem(a2, "1 2 1"));
  const std::set<std::array<std::size_t, 3>> relations(pres.relations.begin(), pres.relations.end());
  CHECK(relations == std::set<std::array<std::size_t, 3>>{{0, 1, 2}, {1, 3, 2}, {3, 0, 2}});
  CHECK(serialize(a2, pres) ==
        "generators: 4\ng1 := 1\ng2 := 2\ng3 := 1 2\ng4 := 1 2 1\nrelations:\n"
        "g1 g2 = g3\ng2 g4 = g3\ng4 g1 = g3\n");
}

TEST_CASE("presentation relations are exactly the rank-additive products") {
  for (const auto& sys : {catalog::type_A(3), catalog::type_B(3)}) {
    const oracle::Geometric g(sys.bonds());
    const oracle::MatrixBall ball(g, 64);
    const oracle::FiniteAbsolute absolute(g, ball);
    const auto p = build_interval(sys, identity(), elem(sys, "1 2 3"));
    const auto pres = emit_presentation(sys, p);
    CHECK(pres.generators.size() == p.elements.size() - 1);

    std::map<oracle::Geometric::Key, std::size_t> index;
    for (std::size_t i = 0; i < pres.generators.size(); ++i) index[g.key_of(pres.generators[i].nf)] = i;
    std::set<std::array<std::size_t, 3>> expected;
    for (std::size_t a = 0; a < pres.generators.size(); ++a) {
      for (std::size_t b = 0; b < pres.generators.size(); ++b) {
        Word ab = pres.generators[a].nf;
        ab.insert(ab.end(), pres.generators[b].nf.begin(), pres.generators[b].nf.end());
        const auto it = index.find(g.key_of(ab));
        if (it == index.end()) continue;
        const auto la = absolute.length_T(pres.generators[a].nf);
        const auto lb = absolute.length_T(pres.generators[b].nf);
        if (la + lb == absolute.length_T(ab)) expected.insert({a, b, it->second});
      }
    }
    const std::set<std::array<std::size_t, 3>> ours(pres.relations.begin(), pres.relations.end());
    CHECK(ours.size() == pres.relations.size());
    CHECK(ours == expected);
  }
  const auto a3 = catalog::type_A(3);
  const auto pres = emit_presentation(a3, build_interval(a3, identity(), elem(a3, "1 2 3")));
  CHECK(pres.generators.size() == 13);
  CHECK(pres.relations.size() == 28);
}

TEST_CASE("presentation refusals") {
  const auto a3 = catalog::type_A(3);
  CHECK_THROWS_AS(emit_presentation(a3, build_interval(a3, elem(a3, "1"), elem(a3, "1 2 3"))), DomainError);
  const auto sys = catalog::affine_A2();
  CHECK_THROWS_AS(emit_presentation(sys, build_interval(sys, identity(), elem(sys, "1 2 3"), 9)), DomainError);

  IntervalPoset bowtie;
  bowtie.elements = {Element{{}}, Element{{0}}, Element{{1}}, Element{{0, 1}}, Element{{1, 0}}, Element{{0, 1, 0}}};
  bowtie.ranks = {0, 1, 1, 2, 2, 3};
  bowtie.covers = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  bowtie.bottom = bowtie.elements.front();
  bowtie.top = bowtie.elements.back();
  bowtie.complete = true;
  CHECK_THROWS_AS(emit_presentation(catalog::universal(2), bowtie), DomainError);
}

}  // TEST_SUITE
