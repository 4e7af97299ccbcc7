#pragma once

// Text formats. Algebras, points, matrices and words are line based; blank
// lines and lines starting with '#' are ignored. Formulas are s-expressions
// preceded by an explicit sort declaration:
//   (sort x1 x2) (exists x1 (eq (+ x1 x1) x2))
// Substitution pools hold forms (subst (sort <domain>) (sort <codomain>)
// ((var term) ...)). Group words use capital letters for inverses: x1 X1.

#include <string>
#include <string_view>
#include <vector>

#include "lgt/algebra.hpp"
#include "lgt/fo.hpp"
#include "lgt/freeword.hpp"
#include "lgt/msformula.hpp"
#include "lgt/zlattice.hpp"

namespace lgt {

FiniteAlgebra parse_algebra(std::string_view text);
std::string algebra_to_text(const FiniteAlgebra& h);

MSFormulaPtr parse_formula(std::string_view text);
std::string term_to_sexpr(const Term& t);
std::string formula_to_sexpr(const MSFormula& f);
// Sort declaration plus formula, the exact input format.
std::string formula_file_text(const MSFormula& f);

std::string fo_to_sexpr(const FOFormula& f);

// One `var value` pair per line; the point's sort follows file order.
Point parse_point(std::string_view text, const FiniteAlgebra& h);
std::string point_to_text(const Point& p);

IntMatrix parse_matrix(std::string_view text);
std::string matrix_to_text(const IntMatrix& m);
std::vector<IntVec> parse_vector_rows(std::string_view text);

std::vector<Substitution> parse_subst_pool(std::string_view text);

// One word per line.
std::vector<SgWord> parse_sg_words(std::string_view text, std::size_t alphabet_size);
std::string sg_word_to_text(const SgWord& w);

FWord parse_group_word(std::string_view text);
std::string group_word_to_text(const FWord& w);

std::vector<std::size_t> parse_tuple(std::string_view text, const FiniteAlgebra& h);

} // namespace lgt
