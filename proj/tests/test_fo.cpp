#include "doctest.h"

#include "lgt/fo.hpp"
#include "lgt/io.hpp"
#include "lgt/semantics.hpp"
#include "testutil.hpp"

using namespace lgt;
using namespace lgttest;

namespace {

void collect_binders(const FOFormula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FOKind::Equality: return;
    case FOKind::Not: collect_binders(*f.body(), out); return;
    case FOKind::And:
    case FOKind::Or:
      collect_binders(*f.left(), out);
      collect_binders(*f.right(), out);
      return;
    case FOKind::Exists:
      out.push_back(f.bound_var());
      collect_binders(*f.body(), out);
      return;
  }
}

} // namespace

TEST_CASE("translation: equalities pass through unchanged") {
  Sort x({"x1", "x2"});
  MSFormulaPtr u = MSFormula::equality(x, Term::var("x1"), Term::var("x2"));
  CHECK(fo_to_sexpr(*translate(*u)) == "(eq x1 x2)");
}

TEST_CASE("translation: quantifiers get fresh tilde variables") {
  Sort x({"x1", "x2"});
  MSFormulaPtr u = MSFormula::exists(
      "x1", MSFormula::equality(x, Term::var("x1"), Term::var("x2")));
  CHECK(fo_to_sexpr(*translate(*u)) == "(exists ~x1_1 (eq ~x1_1 x2))");
}

TEST_CASE("translation: substitution nodes vanish into their images") {
  Sort x({"x1", "x2"}), y({"y1", "y2"});
  Substitution s(y, x,
                 {Term::app("f", {Term::var("x1"), Term::var("x1")}),
                  Term::var("x2")});
  MSFormulaPtr u = MSFormula::subst(
      s, MSFormula::equality(y, Term::var("y1"), Term::var("y2")));
  CHECK(fo_to_sexpr(*translate(*u)) == "(eq (f x1 x1) x2)");
}

TEST_CASE("translation: shadowing quantifiers stay separate") {
  Sort x({"x1"});
  MSFormulaPtr inner = MSFormula::exists(
      "x1", MSFormula::equality(x, Term::var("x1"), Term::var("x1")));
  MSFormulaPtr outer = MSFormula::exists(
      "x1", MSFormula::conjunction(
                MSFormula::equality(x, Term::var("x1"), Term::var("x1")), inner));
  FOFormulaPtr t = translate(*outer);
  std::vector<std::string> binders;
  collect_binders(*t, binders);
  REQUIRE(binders.size() == 2);
  CHECK(binders[0] != binders[1]);
  CHECK(well_scoped(*t));
}

TEST_CASE("translated formulas are pure and keep their free variables inside the sort") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    Scenario sc = random_scenario(rng, 4, 3);
    MSFormulaPtr u =
        random_formula(rng, sc.algebra().signature(), sc.sort, 4, 3, sc.pool);
    FOFormulaPtr t = translate(*u);
    CHECK(well_scoped(*t));
    for (const auto& v : free_vars(*t)) {
      CHECK(!is_tilde_var(v));
      CHECK(sc.sort.contains(v));
    }
    std::vector<std::string> binders;
    collect_binders(*t, binders);
    std::set<std::string> unique(binders.begin(), binders.end());
    CHECK(unique.size() == binders.size()); // per-quantifier freshness
  }
}

TEST_CASE("first-order satisfaction: basic cases") {
  FiniteAlgebra z4 = cyclic_group(4);
  FOFormulaPtr refl = FOFormula::equality(Term::var("x1"), Term::var("x1"));
  CHECK(fo_satisfies(z4, *refl, {{"x1", 2}}));

  // (exists ~x2_1 (eq x1 (+ ~x2_1 ~x2_1)))
  FOFormulaPtr dbl = FOFormula::exists(
      "~x2_1",
      FOFormula::equality(Term::var("x1"),
                          Term::app("+", {Term::var("~x2_1"), Term::var("~x2_1")})));
  CHECK(fo_satisfies(z4, *dbl, {{"x1", 2}}));
  CHECK(!fo_satisfies(z4, *dbl, {{"x1", 1}}));
  CHECK(tp_member(z4, *dbl, {{"x1", 2}}));

  CHECK_THROWS_AS(fo_satisfies(z4, *refl, {}), missing_assignment);
  CHECK_THROWS_AS(FOFormula::exists("x1", refl), ill_formed_formula);
}

TEST_CASE("translation soundness: dual evaluation agrees") {
  Rng rng(42);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Scenario sc = random_scenario(rng, 5, 3);
    MSFormulaPtr u =
        random_formula(rng, sc.algebra().signature(), sc.sort, 4, 3, sc.pool);
    FOFormulaPtr t = translate(*u);
    bool ms = satisfies(sc.algebra(), *u, sc.point());
    bool fo = fo_satisfies(sc.algebra(), *t, assignment_of(sc.point()));
    CHECK(ms == fo);
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("translation soundness on the named formula generators") {
  FiniteAlgebra z4 = cyclic_group(4);
  Sort x({"x1"}), y({"y1"});
  TermPtr dbl = Term::app("+", {Term::var("y1"), Term::var("y1")});
  MSFormulaPtr pres = presentation_formula(x, y, {dbl});
  FOFormulaPtr t = translate(*pres);
  CHECK(well_scoped(*t));
  for (std::size_t v = 0; v < 4; ++v) {
    Point p(x, &z4, {v});
    CHECK(satisfies(z4, *pres, p) == fo_satisfies(z4, *t, assignment_of(p)));
  }
}
