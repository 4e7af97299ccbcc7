#pragma once

// Free-algebra terms over a signature, finite algebras given by operation
// tables, points (variable assignments into an algebra), and substitutions
// between term algebras. Elements of a finite algebra of size m are the
// integers 0..m-1; tables are row-major in lexicographic argument order.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/errors.hpp"

namespace lgt {

struct Signature {
  struct Op {
    std::string name;
    std::size_t arity;
  };
  std::vector<Op> ops;

  const Op* find(std::string_view name) const;
  const Op& require(std::string_view name) const; // throws unknown_operation
  void validate() const;                          // op names unique
  bool operator==(const Signature& o) const;
};

// An ordered, duplicate-free set of variable symbols.
class Sort {
public:
  Sort() = default;
  explicit Sort(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  bool contains(std::string_view v) const;
  std::size_t index_of(std::string_view v) const; // throws unknown_variable

  bool operator==(const Sort& o) const { return vars_ == o.vars_; }
  bool same_set(const Sort& o) const;
  bool disjoint_with(const Sort& o) const;
  static Sort union_of(const Sort& a, const Sort& b); // a's order, then new b vars
  Sort with_var(const std::string& v) const;          // appends; throws variable_clash

private:
  std::vector<std::string> vars_;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  static TermPtr var(std::string name);
  static TermPtr app(std::string op, std::vector<TermPtr> args);

  bool is_var() const { return is_var_; }
  const std::string& var_name() const { return name_; }
  const std::string& op_name() const { return name_; }
  const std::vector<TermPtr>& args() const { return args_; }

  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;
  bool vars_within(const Sort& sort) const;
  std::size_t depth() const; // variables have depth 0

  static bool equal(const Term& a, const Term& b);

private:
  Term(bool is_var, std::string name, std::vector<TermPtr> args)
      : is_var_(is_var), name_(std::move(name)), args_(std::move(args)) {}
  bool is_var_;
  std::string name_;
  std::vector<TermPtr> args_;
};

class FiniteAlgebra {
public:
  FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                std::map<std::string, std::vector<std::size_t>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  std::size_t size() const { return size_; }

  const std::vector<std::size_t>& table(std::string_view op) const;
  std::size_t apply(std::string_view op, std::span<const std::size_t> args) const;

private:
  std::string name_;
  Signature sig_;
  std::size_t size_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> tables_;
};

// A variable assignment sort -> {0..m-1}, i.e. a homomorphism from the free
// algebra over the sort into the target algebra.
class Point {
public:
  Point(Sort sort, const FiniteAlgebra* algebra, std::vector<std::size_t> values);

  const Sort& sort() const { return sort_; }
  const FiniteAlgebra& algebra() const { return *algebra_; }
  const FiniteAlgebra* algebra_ptr() const { return algebra_; }

  std::size_t value(std::string_view var) const;
  std::size_t value_at(std::size_t idx) const { return values_[idx]; }
  const std::vector<std::size_t>& values() const { return values_; }

  Point with_value(std::string_view var, std::size_t v) const;
  // Same assignment presented over another sort with the same variable set.
  Point with_sort(const Sort& target) const;

private:
  Sort sort_;
  const FiniteAlgebra* algebra_;
  std::vector<std::size_t> values_;
};

class Substitution {
public:
  Substitution(Sort domain, Sort codomain, std::vector<TermPtr> images);

  const Sort& domain() const { return domain_; }
  const Sort& codomain() const { return codomain_; }
  const TermPtr& image_at(std::size_t idx) const { return images_[idx]; }
  const TermPtr& image(std::string_view var) const;
  const std::vector<TermPtr>& images() const { return images_; }

private:
  Sort domain_;
  Sort codomain_;
  std::vector<TermPtr> images_;
};

std::size_t eval_term(const Term& t, const Point& p);

TermPtr apply_subst(const Substitution& s, const TermPtr& t);

// Compose the substitutions s2 after s1 (first s1, then s2).
Substitution compose_subst(const Substitution& s2, const Substitution& s1);

// The point p∘s over s.domain: each variable x maps to the value of s(x) at p.
Point compose_point(const Point& p, const Substitution& s);

// All bijections of {0..m-1} commuting with every operation table, in
// lexicographic order of their image vectors.
std::vector<std::vector<std::size_t>> automorphisms(const FiniteAlgebra& h);

struct OrbitResult {
  bool equivalent = false;
  std::optional<std::vector<std::size_t>> witness; // the automorphism, when found
};

// True iff some automorphism maps a componentwise to b; the witness is the
// lexicographically least such automorphism.
OrbitResult orbit_equivalent(const FiniteAlgebra& h,
                             std::span<const std::size_t> a,
                             std::span<const std::size_t> b);

} // namespace lgt
