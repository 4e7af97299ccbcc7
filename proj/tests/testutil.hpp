#pragma once

// Shared test fixtures: the group corpus, seeded random instance generators,
// and brute-force oracles kept independent of the library code paths they
// check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lgt/algebra.hpp"
#include "lgt/freeword.hpp"
#include "lgt/msformula.hpp"
#include "lgt/zlattice.hpp"

namespace lgttest {

// ---------------------------------------------------------------------------
// Group corpus. All groups share one signature (+, neg, 0) so that games and
// comparisons across algebras are well-formed.

inline lgt::FiniteAlgebra group_from_mul(
    std::string name, std::size_t m,
    const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::vector<std::size_t> plus(m * m), neg(m), zero(1, 0);
  // Identity: the unique e with e*x = x for all x.
  std::size_t e = m; // sentinel
  for (std::size_t cand = 0; cand < m; ++cand) {
    bool ok = true;
    for (std::size_t x = 0; x < m; ++x)
      if (mul(cand, x) != x) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == m) throw std::logic_error("not a group table: no identity");
  zero[0] = e;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) plus[i * m + j] = mul(i, j);
    bool found = false;
    for (std::size_t j = 0; j < m; ++j)
      if (mul(i, j) == e && mul(j, i) == e) {
        neg[i] = j;
        found = true;
      }
    if (!found) throw std::logic_error("not a group table: missing inverse");
  }
  lgt::Signature sig{{{"+", 2}, {"neg", 1}, {"0", 0}}};
  return lgt::FiniteAlgebra(std::move(name), std::move(sig), m,
                            {{"+", plus}, {"neg", neg}, {"0", zero}});
}

inline lgt::FiniteAlgebra cyclic_group(std::size_t m) {
  return group_from_mul("Z" + std::to_string(m), m,
                        [m](std::size_t a, std::size_t b) { return (a + b) % m; });
}

inline lgt::FiniteAlgebra klein_group() {
  // Bitwise xor on {0,1,2,3}.
  return group_from_mul("V4", 4,
                        [](std::size_t a, std::size_t b) { return a ^ b; });
}

inline lgt::FiniteAlgebra s3_group() {
  // Permutations of {0,1,2} numbered lexicographically by one-line image.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [](const int* img) {
    for (std::size_t k = 0; k < 6; ++k)
      if (perms[k][0] == img[0] && perms[k][1] == img[1] && perms[k][2] == img[2])
        return k;
    throw std::logic_error("bad permutation");
  };
  return group_from_mul("S3", 6, [&](std::size_t a, std::size_t b) {
    int img[3];
    for (int i = 0; i < 3; ++i) img[i] = perms[b][perms[a][i]];
    return index_of(img);
  });
}

// One table per isomorphism class of groups of order <= max_order.
inline std::vector<lgt::FiniteAlgebra> group_corpus(std::size_t max_order) {
  std::vector<lgt::FiniteAlgebra> out;
  for (std::size_t m = 1; m <= max_order; ++m) out.push_back(cyclic_group(m));
  if (max_order >= 4) out.push_back(klein_group());
  if (max_order >= 6) out.push_back(s3_group());
  return out;
}

// The same algebra with elements renamed by a permutation.
inline lgt::FiniteAlgebra relabel(const lgt::FiniteAlgebra& h,
                                  const std::vector<std::size_t>& perm) {
  const std::size_t m = h.size();
  std::map<std::string, std::vector<std::size_t>> tables;
  for (const auto& op : h.signature().ops) {
    const auto& tab = h.table(op.name);
    std::vector<std::size_t> out(tab.size());
    std::vector<std::size_t> args(op.arity, 0);
    for (std::size_t idx = 0; idx < tab.size(); ++idx) {
      std::size_t rest = idx;
      for (std::size_t k = op.arity; k-- > 0;) {
        args[k] = rest % m;
        rest /= m;
      }
      std::size_t mapped = 0;
      for (std::size_t k = 0; k < op.arity; ++k) mapped = mapped * m + perm[args[k]];
      out[mapped] = perm[tab[idx]];
    }
    tables.emplace(op.name, std::move(out));
  }
  return lgt::FiniteAlgebra(h.name() + "-relabeled", h.signature(), m,
                            std::move(tables));
}

// ---------------------------------------------------------------------------
// Seeded randomness.

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  long long int_in(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng);
  }
  bool flip() { return below(2) == 0; }
};

inline lgt::FiniteAlgebra random_algebra(Rng& rng, std::size_t max_size) {
  std::size_t m = 1 + rng.below(max_size);
  lgt::Signature sig;
  sig.ops.push_back({"f", 2});
  if (rng.flip()) sig.ops.push_back({"g", 1});
  if (rng.flip()) sig.ops.push_back({"c", 0});
  std::map<std::string, std::vector<std::size_t>> tables;
  for (const auto& op : sig.ops) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < op.arity; ++i) n *= m;
    std::vector<std::size_t> tab(n);
    for (auto& v : tab) v = rng.below(m);
    tables.emplace(op.name, std::move(tab));
  }
  return lgt::FiniteAlgebra("random", std::move(sig), m, std::move(tables));
}

inline lgt::TermPtr random_term(Rng& rng, const lgt::Signature& sig,
                                const lgt::Sort& sort, std::size_t max_depth) {
  if (max_depth == 0 || rng.below(3) == 0)
    return lgt::Term::var(sort.vars()[rng.below(sort.size())]);
  const auto& op = sig.ops[rng.below(sig.ops.size())];
  std::vector<lgt::TermPtr> args;
  for (std::size_t i = 0; i < op.arity; ++i)
    args.push_back(random_term(rng, sig, sort, max_depth - 1));
  return lgt::Term::app(op.name, std::move(args));
}

inline lgt::Substitution random_subst(Rng& rng, const lgt::Signature& sig,
                                      const lgt::Sort& domain,
                                      const lgt::Sort& codomain,
                                      std::size_t image_depth) {
  std::vector<lgt::TermPtr> images;
  for (std::size_t i = 0; i < domain.size(); ++i)
    images.push_back(random_term(rng, sig, codomain, image_depth));
  return lgt::Substitution(domain, codomain, images);
}

inline lgt::MSFormulaPtr random_formula(Rng& rng, const lgt::Signature& sig,
                                        const lgt::Sort& sort, std::size_t budget,
                                        std::size_t term_depth,
                                        const std::vector<lgt::Substitution>& pool) {
  auto equality = [&] {
    return lgt::MSFormula::equality(sort, random_term(rng, sig, sort, term_depth),
                                    random_term(rng, sig, sort, term_depth));
  };
  if (budget == 0) return equality();
  switch (rng.below(6)) {
    case 0:
      return equality();
    case 1:
      return lgt::MSFormula::negation(
          random_formula(rng, sig, sort, budget - 1, term_depth, pool));
    case 2:
      return lgt::MSFormula::exists(
          sort.vars()[rng.below(sort.size())],
          random_formula(rng, sig, sort, budget - 1, term_depth, pool));
    case 3: {
      std::vector<const lgt::Substitution*> usable;
      for (const auto& s : pool)
        if (s.codomain() == sort) usable.push_back(&s);
      if (usable.empty())
        return lgt::MSFormula::negation(
            random_formula(rng, sig, sort, budget - 1, term_depth, pool));
      const lgt::Substitution& s = *usable[rng.below(usable.size())];
      return lgt::MSFormula::subst(
          s, random_formula(rng, sig, s.domain(), budget - 1, term_depth, pool));
    }
    default: {
      std::size_t left = rng.below(budget);
      std::size_t right = budget - 1 - left;
      auto l = random_formula(rng, sig, sort, left, term_depth, pool);
      auto r = random_formula(rng, sig, sort, right, term_depth, pool);
      return rng.flip() ? lgt::MSFormula::conjunction(l, r)
                        : lgt::MSFormula::disjunction(l, r);
    }
  }
}

inline lgt::Point random_point(Rng& rng, const lgt::FiniteAlgebra& h,
                               const lgt::Sort& sort) {
  std::vector<std::size_t> vals;
  for (std::size_t i = 0; i < sort.size(); ++i) vals.push_back(rng.below(h.size()));
  return lgt::Point(sort, &h, vals);
}

// A full random scenario: algebra, sorts, pool, point. The algebra lives
// behind a stable pointer because the point refers to it. Formulas are drawn
// separately so one scenario can host many.
struct Scenario {
  std::unique_ptr<lgt::FiniteAlgebra> algebra_ptr;
  lgt::Sort sort;
  std::vector<lgt::Substitution> pool;
  std::unique_ptr<lgt::Point> point_ptr;

  const lgt::FiniteAlgebra& algebra() const { return *algebra_ptr; }
  const lgt::Point& point() const { return *point_ptr; }
};

inline Scenario random_scenario(Rng& rng, std::size_t max_size,
                                std::size_t pool_size) {
  Scenario sc;
  sc.algebra_ptr =
      std::make_unique<lgt::FiniteAlgebra>(random_algebra(rng, max_size));
  std::vector<std::string> xs;
  for (std::size_t i = 0; i <= rng.below(3); ++i)
    xs.push_back("x" + std::to_string(i + 1));
  sc.sort = lgt::Sort(xs);
  lgt::Sort y({"y1", "y2"});
  const lgt::Signature& sig = sc.algebra().signature();
  for (std::size_t i = 0; i < pool_size; ++i) {
    switch (rng.below(3)) {
      case 0: sc.pool.push_back(random_subst(rng, sig, y, sc.sort, 2)); break;
      case 1: sc.pool.push_back(random_subst(rng, sig, sc.sort, y, 2)); break;
      default: sc.pool.push_back(random_subst(rng, sig, y, y, 2)); break;
    }
  }
  sc.point_ptr =
      std::make_unique<lgt::Point>(random_point(rng, sc.algebra(), sc.sort));
  return sc;
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

// Every bijection that is a homomorphism, by filtering all m! permutations.
inline std::vector<std::vector<std::size_t>> brute_automorphisms(
    const lgt::FiniteAlgebra& h) {
  const std::size_t m = h.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (const auto& op : h.signature().ops) {
      const auto& tab = h.table(op.name);
      std::vector<std::size_t> args(op.arity, 0);
      for (std::size_t idx = 0; idx < tab.size() && ok; ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = op.arity; k-- > 0;) {
          args[k] = rest % m;
          rest /= m;
        }
        std::size_t mapped = 0;
        for (std::size_t k = 0; k < op.arity; ++k)
          mapped = mapped * m + perm[args[k]];
        if (tab[mapped] != perm[tab[idx]]) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// All 2x2 integer matrices with entries in [-range, range] and det = +-1.
inline std::vector<lgt::IntMatrix> unimodular_2x2(long long range) {
  std::vector<lgt::IntMatrix> out;
  for (long long a = -range; a <= range; ++a)
    for (long long b = -range; b <= range; ++b)
      for (long long c = -range; c <= range; ++c)
        for (long long d = -range; d <= range; ++d) {
          long long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          lgt::IntMatrix m(2, 2);
          m.at(0, 0) = lgt::BigInt(a);
          m.at(0, 1) = lgt::BigInt(b);
          m.at(1, 0) = lgt::BigInt(c);
          m.at(1, 1) = lgt::BigInt(d);
          out.push_back(std::move(m));
        }
  return out;
}

// All k! alphabet bijections; accepts iff some bijection maps every a_i to
// b_i letter by letter.
inline bool brute_sg_extend(std::size_t k, const std::vector<lgt::SgWord>& a,
                            const std::vector<lgt::SgWord>& b) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (a[i].size() != b[i].size()) {
        ok = false;
        break;
      }
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (perm[a[i].letters()[j]] != b[i].letters()[j]) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline lgt::IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                    long long mag) {
  lgt::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = lgt::BigInt(rng.int_in(-mag, mag));
  return m;
}

inline lgt::IntVec random_vec(Rng& rng, std::size_t n, long long mag) {
  lgt::IntVec v(n);
  for (auto& e : v) e = lgt::BigInt(rng.int_in(-mag, mag));
  return v;
}

} // namespace lgttest
