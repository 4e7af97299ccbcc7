#include "doctest.h"

#include "lgt/algebra.hpp"
#include "testutil.hpp"

using namespace lgt;
using namespace lgttest;

namespace {

Point point1(const FiniteAlgebra& h, std::size_t v) {
  return Point(Sort({"x1"}), &h, {v});
}

} // namespace

TEST_CASE("eval_term: variables and table lookups") {
  FiniteAlgebra z4 = cyclic_group(4);
  CHECK(eval_term(*Term::var("x1"), point1(z4, 3)) == 3);
  TermPtr dbl = Term::app("+", {Term::var("x1"), Term::var("x1")});
  CHECK(eval_term(*dbl, point1(z4, 2)) == 0);
  TermPtr cancel = Term::app("+", {Term::var("x1"), Term::app("neg", {Term::var("x1")})});
  CHECK(eval_term(*cancel, point1(z4, 3)) == 0);
  CHECK(eval_term(*Term::app("0", {}), point1(z4, 1)) == 0);
}

TEST_CASE("eval_term: error paths") {
  FiniteAlgebra z4 = cyclic_group(4);
  CHECK_THROWS_AS(eval_term(*Term::var("x9"), point1(z4, 0)), unknown_variable);
  CHECK_THROWS_AS(eval_term(*Term::app("+", {Term::var("x1")}), point1(z4, 0)),
                  arity_mismatch);
  CHECK_THROWS_AS(eval_term(*Term::app("bogus", {}), point1(z4, 0)),
                  unknown_operation);
}

TEST_CASE("apply_subst: basic substitutions") {
  Sort x({"x1", "x2"}), y({"y1"});
  SUBCASE("single variable") {
    Sort x1({"x1"});
    Substitution s(x1, x1, {Term::app("f", {Term::var("x1"), Term::var("x1")})});
    TermPtr r = apply_subst(s, Term::var("x1"));
    CHECK(Term::equal(*r, *Term::app("f", {Term::var("x1"), Term::var("x1")})));
  }
  SUBCASE("collapsing substitution") {
    Substitution s(x, y, {Term::var("y1"), Term::var("y1")});
    TermPtr r = apply_subst(s, Term::app("f", {Term::var("x1"), Term::var("x2")}));
    CHECK(Term::equal(*r, *Term::app("f", {Term::var("y1"), Term::var("y1")})));
  }
  SUBCASE("unknown variable") {
    Substitution s(y, y, {Term::var("y1")});
    CHECK_THROWS_AS(apply_subst(s, Term::var("x1")), unknown_variable);
  }
}

TEST_CASE("substitution composition equals sequential application") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    FiniteAlgebra h = random_algebra(rng, 4);
    Sort x({"x1", "x2"}), y({"y1", "y2"}), z({"z1"});
    Substitution s1 = random_subst(rng, h.signature(), x, y, 2);
    Substitution s2 = random_subst(rng, h.signature(), y, z, 2);
    TermPtr t = random_term(rng, h.signature(), x, 3);
    TermPtr via_two = apply_subst(s2, apply_subst(s1, t));
    TermPtr via_one = apply_subst(compose_subst(s2, s1), t);
    CHECK(Term::equal(*via_two, *via_one));
  }
}

TEST_CASE("homomorphism square: eval after substitution") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    FiniteAlgebra h = random_algebra(rng, 5);
    Sort x({"x1", "x2"}), y({"y1", "y2", "y3"});
    Substitution s = random_subst(rng, h.signature(), x, y, 2);
    TermPtr t = random_term(rng, h.signature(), x, 4);
    Point p = random_point(rng, h, y);
    CHECK(eval_term(*apply_subst(s, t), p) == eval_term(*t, compose_point(p, s)));
  }
}

TEST_CASE("automorphisms: known groups") {
  FiniteAlgebra one = group_from_mul("Z1", 1, [](std::size_t, std::size_t) {
    return std::size_t{0};
  });
  CHECK(automorphisms(one) == std::vector<std::vector<std::size_t>>{{0}});

  auto auts_z4 = automorphisms(cyclic_group(4));
  REQUIRE(auts_z4.size() == 2);
  CHECK(auts_z4[0] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(auts_z4[1] == std::vector<std::size_t>{0, 3, 2, 1}); // x -> 3x

  CHECK(automorphisms(klein_group()).size() == 6); // |GL(2,2)|
  CHECK(automorphisms(s3_group()).size() == 6);    // inner automorphisms only
}

TEST_CASE("automorphisms agree with the permutation-filter oracle") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    FiniteAlgebra h = random_algebra(rng, 5);
    CHECK(automorphisms(h) == brute_automorphisms(h));
  }
  for (const auto& g : group_corpus(6))
    CHECK(automorphisms(g) == brute_automorphisms(g));
}

TEST_CASE("automorphisms form a group") {
  for (const auto& h : group_corpus(6)) {
    auto auts = automorphisms(h);
    const std::size_t m = h.size();
    std::vector<std::size_t> id(m);
    std::iota(id.begin(), id.end(), 0);
    CHECK(std::find(auts.begin(), auts.end(), id) != auts.end());
    for (const auto& f : auts) {
      std::vector<std::size_t> inv(m);
      for (std::size_t i = 0; i < m; ++i) inv[f[i]] = i;
      CHECK(std::find(auts.begin(), auts.end(), inv) != auts.end());
      for (const auto& g : auts) {
        std::vector<std::size_t> comp(m);
        for (std::size_t i = 0; i < m; ++i) comp[i] = g[f[i]];
        CHECK(std::find(auts.begin(), auts.end(), comp) != auts.end());
      }
    }
  }
}

TEST_CASE("orbit_equivalent: examples") {
  FiniteAlgebra z4 = cyclic_group(4);
  SUBCASE("equal tuples have the identity witness") {
    std::vector<std::size_t> a{2, 1};
    OrbitResult r = orbit_equivalent(z4, a, a);
    REQUIRE(r.equivalent);
    CHECK(*r.witness == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("1 and 3 are automorphic") {
    std::vector<std::size_t> a{1}, b{3};
    OrbitResult r = orbit_equivalent(z4, a, b);
    REQUIRE(r.equivalent);
    CHECK(*r.witness == std::vector<std::size_t>{0, 3, 2, 1});
  }
  SUBCASE("1 and 2 differ in order") {
    std::vector<std::size_t> a{1}, b{2};
    CHECK(!orbit_equivalent(z4, a, b).equivalent);
  }
  SUBCASE("length mismatch") {
    std::vector<std::size_t> a{1, 2}, b{1};
    CHECK_THROWS_AS(orbit_equivalent(z4, a, b), length_mismatch);
  }
}

TEST_CASE("orbit_equivalent is an equivalence relation") {
  Rng rng(24);
  for (const auto& h : group_corpus(5)) {
    for (int i = 0; i < 40; ++i) {
      std::vector<std::size_t> a{rng.below(h.size()), rng.below(h.size())};
      std::vector<std::size_t> b{rng.below(h.size()), rng.below(h.size())};
      std::vector<std::size_t> c{rng.below(h.size()), rng.below(h.size())};
      CHECK(orbit_equivalent(h, a, a).equivalent);
      CHECK(orbit_equivalent(h, a, b).equivalent ==
            orbit_equivalent(h, b, a).equivalent);
      if (orbit_equivalent(h, a, b).equivalent &&
          orbit_equivalent(h, b, c).equivalent)
        CHECK(orbit_equivalent(h, a, c).equivalent);
    }
  }
}

TEST_CASE("orbit witness maps the tuple and is lexicographically least") {
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    FiniteAlgebra h = random_algebra(rng, 5);
    std::vector<std::size_t> a{rng.below(h.size())}, b{rng.below(h.size())};
    OrbitResult r = orbit_equivalent(h, a, b);
    auto oracle = brute_automorphisms(h);
    std::vector<std::vector<std::size_t>> mapping;
    for (const auto& f : oracle)
      if (f[a[0]] == b[0]) mapping.push_back(f);
    CHECK(r.equivalent == !mapping.empty());
    if (r.equivalent) CHECK(*r.witness == mapping.front());
  }
}

TEST_CASE("finite algebra validation") {
  Signature sig{{{"f", 2}}};
  CHECK_THROWS_AS(FiniteAlgebra("bad", sig, 2, {{"f", {0, 1, 2, 0}}}),
                  validation_error); // entry out of range
  CHECK_THROWS_AS(FiniteAlgebra("bad", sig, 2, {{"f", {0, 1, 1}}}),
                  validation_error); // wrong table size
  CHECK_THROWS_AS(FiniteAlgebra("bad", sig, 0, {{"f", {}}}), validation_error);
  Signature dup{{{"f", 2}, {"f", 1}}};
  CHECK_THROWS_AS(FiniteAlgebra("bad", dup, 1, {{"f", {0}}}), validation_error);
}

TEST_CASE("sort construction rejects duplicates") {
  CHECK_THROWS_AS(Sort({"x1", "x1"}), validation_error);
  CHECK(Sort({"x1", "x2"}).same_set(Sort({"x2", "x1"})));
  CHECK(!(Sort({"x1", "x2"}) == Sort({"x2", "x1"})));
}

TEST_CASE("point composition validates the image variables") {
  FiniteAlgebra z4 = cyclic_group(4);
  Sort x({"x1"}), y({"y1"});
  Point p(x, &z4, {1});
  Substitution uses_z(y, Sort({"z1"}), {Term::var("z1")});
  CHECK_THROWS_AS(compose_point(p, uses_z), sort_mismatch);
  Substitution fine(y, x, {Term::app("+", {Term::var("x1"), Term::var("x1")})});
  Point q = compose_point(p, fine);
  CHECK(q.sort() == y);
  CHECK(q.value("y1") == 2);
}
