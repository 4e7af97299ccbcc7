#pragma once

// One-sorted first-order formulas and the translation from the multi-sorted
// language. Free variables keep their names; every quantifier binds a fresh
// tilde variable (~x_k for the k-th quantifier met in one translation pass,
// depth first), so nested shadowing quantifiers never capture. Substitution
// nodes disappear: their images are substituted into the body as terms.

#include <map>
#include <memory>
#include <set>
#include <string>

#include "lgt/msformula.hpp"

namespace lgt {

enum class FOKind { Equality, Not, And, Or, Exists };

class FOFormula;
using FOFormulaPtr = std::shared_ptr<const FOFormula>;

class FOFormula {
public:
  static FOFormulaPtr equality(TermPtr lhs, TermPtr rhs);
  static FOFormulaPtr negation(FOFormulaPtr body);
  static FOFormulaPtr conjunction(FOFormulaPtr left, FOFormulaPtr right);
  static FOFormulaPtr disjunction(FOFormulaPtr left, FOFormulaPtr right);
  static FOFormulaPtr exists(std::string var, FOFormulaPtr body); // tilde vars only

  FOKind kind() const { return kind_; }
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }
  const FOFormulaPtr& body() const { return left_; }
  const FOFormulaPtr& left() const { return left_; }
  const FOFormulaPtr& right() const { return right_; }
  const std::string& bound_var() const { return var_; }

private:
  explicit FOFormula(FOKind kind) : kind_(kind) {}
  static FOFormulaPtr make_binary(FOKind kind, FOFormulaPtr left, FOFormulaPtr right);
  FOKind kind_;
  TermPtr lhs_, rhs_;
  FOFormulaPtr left_, right_;
  std::string var_;
};

bool is_tilde_var(std::string_view name);

std::set<std::string> free_vars(const FOFormula& f);

// True when every tilde-variable occurrence sits under its binder and no
// plain variable is ever bound.
bool well_scoped(const FOFormula& f);

FOFormulaPtr translate(const MSFormula& u);

// Tarskian satisfaction over the finite carrier; quantified variables range
// over all elements. Throws missing_assignment when a free variable has no
// value.
bool fo_satisfies(const FiniteAlgebra& h, const FOFormula& f,
                  const std::map<std::string, std::size_t>& assignment);

// Type membership of the assigned tuple: alias of satisfaction for formulas
// whose free variables are covered by the assignment.
inline bool tp_member(const FiniteAlgebra& h, const FOFormula& f,
                      const std::map<std::string, std::size_t>& assignment) {
  return fo_satisfies(h, f, assignment);
}

std::map<std::string, std::size_t> assignment_of(const Point& p);

} // namespace lgt
