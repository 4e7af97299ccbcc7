#pragma once

// The multi-sorted formula language over term equalities: negation,
// conjunction, disjunction, one-variable existential quantification, and the
// substitution node that moves a formula from one sort to another. Formula
// length: equalities have length 0, unary nodes add 1, binary nodes add the
// lengths of both operands plus 1. Construction rejects sort violations
// instead of repairing them.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "lgt/algebra.hpp"

namespace lgt {

enum class MSKind { Equality, Not, And, Or, Exists, Subst };

class MSFormula;
using MSFormulaPtr = std::shared_ptr<const MSFormula>;

class MSFormula {
public:
  static MSFormulaPtr equality(Sort sort, TermPtr lhs, TermPtr rhs);
  static MSFormulaPtr negation(MSFormulaPtr body);
  static MSFormulaPtr conjunction(MSFormulaPtr left, MSFormulaPtr right);
  static MSFormulaPtr disjunction(MSFormulaPtr left, MSFormulaPtr right);
  static MSFormulaPtr exists(std::string var, MSFormulaPtr body);
  static MSFormulaPtr subst(Substitution s, MSFormulaPtr body);

  // Right-associated chain; requires at least one conjunct.
  static MSFormulaPtr conjunction_all(std::vector<MSFormulaPtr> parts);

  MSKind kind() const { return kind_; }
  const Sort& sort() const { return sort_; }
  std::size_t length() const { return length_; }

  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }
  const MSFormulaPtr& body() const { return left_; }  // Not / Exists / Subst
  const MSFormulaPtr& left() const { return left_; }
  const MSFormulaPtr& right() const { return right_; }
  const std::string& bound_var() const { return var_; }
  const Substitution& substitution() const { return *subst_; }

private:
  MSFormula(MSKind kind, Sort sort, std::size_t length)
      : kind_(kind), sort_(std::move(sort)), length_(length) {}

  static MSFormulaPtr make_binary(MSKind kind, MSFormulaPtr left, MSFormulaPtr right);

  MSKind kind_;
  Sort sort_;
  std::size_t length_;
  TermPtr lhs_, rhs_;
  MSFormulaPtr left_, right_;
  std::string var_;
  std::shared_ptr<const Substitution> subst_;
};

// All terms over the sort with depth <= max_depth, deterministically ordered:
// grouped by exact depth (variables first, in sort order), and inside one
// depth level by operation order, then lexicographically by argument indices
// into the preceding levels.
std::vector<TermPtr> enumerate_terms(const Signature& sig, const Sort& sort,
                                     std::size_t max_depth);

// Streams every well-formed formula of the given sort with length <=
// max_length and term depth <= max_depth, each exactly once. Substitution
// nodes are drawn from the pool (entries whose codomain matches the sort
// under construction). Order: by length level; inside a level, negations,
// then existentials by (variable, body), then substitution nodes by (pool
// position, body), then conjunctions by (left length, left, right), then
// disjunctions likewise. Level 0 is the equalities in (lhs, rhs) term order.
class FormulaEnumerator {
public:
  FormulaEnumerator(Signature sig, Sort sort, std::size_t max_length,
                    std::size_t max_depth, std::vector<Substitution> pool);

  // Next formula in the documented order, or nullptr when exhausted.
  MSFormulaPtr next();
  std::vector<MSFormulaPtr> drain();

private:
  struct SortLevels {
    std::vector<TermPtr> terms;
    std::vector<std::vector<MSFormulaPtr>> levels;
  };

  SortLevels& levels_for(const Sort& sort);
  void build_level(const Sort& sort, std::size_t length);
  static std::string key_of(const Sort& sort);

  Signature sig_;
  Sort sort_;
  std::size_t max_length_;
  std::size_t max_depth_;
  std::vector<Substitution> pool_;
  std::map<std::string, SortLevels> cache_;
  std::size_t cur_level_ = 0;
  std::size_t cur_index_ = 0;
};

// The formula asserting that the sort variables are simultaneously expressible
// as the given words in existentially quantified generators: a substitution
// node (collapsing the generator variables onto the first sort variable)
// applied to ∃y1..∃yn (x1 ≡ w1 ∧ ... ∧ xk ≡ wk).
MSFormulaPtr presentation_formula(const Sort& x, const Sort& y,
                                  const std::vector<TermPtr>& words);

// ¬(x_new ≡ w): the new variable avoids every value the old ones generate.
MSFormulaPtr proper_extension_formula(const Sort& x, const std::string& x_new,
                                      const TermPtr& w);

} // namespace lgt
