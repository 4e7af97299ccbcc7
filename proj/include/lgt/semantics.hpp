#pragma once

// Valuation semantics over finite algebras: formula membership at a point,
// materialized solution sets, bounded logical-kernel comparison of two
// points, and Ehrenfeucht-Fraisse equivalence on relational encodings.

#include <cstdint>
#include <map>
#include <tuple>

#include "lgt/msformula.hpp"

namespace lgt {

// Membership of a point in the solution set of a formula. The point's sort
// must carry the same variables as the formula's sort.
bool satisfies(const FiniteAlgebra& h, const MSFormula& u, const Point& p);

// Definitional alias: u lies in the logical kernel of p iff p satisfies u.
inline bool in_logical_kernel(const FiniteAlgebra& h, const MSFormula& u,
                              const Point& p) {
  return satisfies(h, u, p);
}

// All assignments of a sort into an algebra, indexed lexicographically with
// the first sort variable most significant.
class PointSpace {
public:
  PointSpace(const FiniteAlgebra& h, Sort sort);

  std::size_t size() const { return size_; }
  const Sort& sort() const { return sort_; }
  const FiniteAlgebra& algebra() const { return *h_; }

  std::size_t index_of(const Point& p) const;
  std::vector<std::size_t> values_at(std::size_t idx) const;
  Point point_at(std::size_t idx) const;

private:
  const FiniteAlgebra* h_;
  Sort sort_;
  std::size_t size_;
};

using Bitset = std::vector<std::uint64_t>;

bool bit_test(const Bitset& s, std::size_t i);
void bit_set(Bitset& s, std::size_t i);

// The full solution set of a formula as a bitset over the point space of its
// sort, computed compositionally (complement, intersection, union, coordinate
// projection for the existential, pullback for the substitution node).
Bitset materialize(const FiniteAlgebra& h, const MSFormula& u);

struct KernelCompareResult {
  bool equal = false;
  MSFormulaPtr separator; // first separating formula in enumeration order
};

// Decides logical-kernel agreement of point pairs on every formula within
// the bounds, following the enumeration order of FormulaEnumerator. The
// solution-set semantics of all bounded formulas is precomputed once per
// algebra pair (formulas with identical solution sets collapse to one
// representative, which changes neither the verdict nor the first
// separator), so one comparator can serve many point pairs.
class KernelComparator {
public:
  KernelComparator(const FiniteAlgebra& h1, const FiniteAlgebra& h2, Sort sort,
                   std::size_t max_length, std::size_t max_depth,
                   std::vector<Substitution> pool);
  ~KernelComparator();
  KernelComparator(KernelComparator&&) noexcept;

  KernelCompareResult compare(const Point& p1, const Point& p2) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

KernelCompareResult bounded_lker_eq(const FiniteAlgebra& h1, const Point& p1,
                                    const FiniteAlgebra& h2, const Point& p2,
                                    std::size_t max_length, std::size_t max_depth,
                                    const std::vector<Substitution>& pool);

// The Ehrenfeucht-Fraisse game on the relational encodings of two algebras
// (each operation of arity r becomes an (r+1)-ary relation). Duplicator must
// keep the pebbled map a partial isomorphism after every round. One game
// object memoizes positions across queries against the same pair.
class EfGame {
public:
  EfGame(const FiniteAlgebra& h1, const FiniteAlgebra& h2);

  bool equivalent(std::vector<std::size_t> a, std::vector<std::size_t> b,
                  std::size_t rounds);

private:
  bool atomic_full(const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) const;
  bool atomic_newest(const std::vector<std::size_t>& a,
                     const std::vector<std::size_t>& b) const;
  bool play(std::vector<std::size_t>& a, std::vector<std::size_t>& b,
            std::size_t rounds);

  const FiniteAlgebra* h1_;
  const FiniteAlgebra* h2_;
  std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>,
           bool>
      memo_;
};

bool ef_equivalent(const FiniteAlgebra& h1, const std::vector<std::size_t>& a,
                   const FiniteAlgebra& h2, const std::vector<std::size_t>& b,
                   std::size_t rounds);

} // namespace lgt
