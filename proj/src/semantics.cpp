#include "lgt/semantics.hpp"

#include <algorithm>
#include <functional>

namespace lgt {

namespace {

bool satisfies_rec(const FiniteAlgebra& h, const MSFormula& u, const Point& p) {
  switch (u.kind()) {
    case MSKind::Equality:
      return eval_term(*u.lhs(), p) == eval_term(*u.rhs(), p);
    case MSKind::Not:
      return !satisfies_rec(h, *u.body(), p);
    case MSKind::And:
      return satisfies_rec(h, *u.left(), p) && satisfies_rec(h, *u.right(), p);
    case MSKind::Or:
      return satisfies_rec(h, *u.left(), p) || satisfies_rec(h, *u.right(), p);
    case MSKind::Exists: {
      for (std::size_t c = 0; c < h.size(); ++c)
        if (satisfies_rec(h, *u.body(), p.with_value(u.bound_var(), c)))
          return true;
      return false;
    }
    case MSKind::Subst:
      return satisfies_rec(h, *u.body(), compose_point(p, u.substitution()));
  }
  throw internal_check_failed("unreachable formula kind");
}

} // namespace

bool satisfies(const FiniteAlgebra& h, const MSFormula& u, const Point& p) {
  if (&p.algebra() != &h)
    throw validation_error("point does not target the given algebra");
  if (!p.sort().same_set(u.sort()))
    throw sort_mismatch("point sort does not match the formula sort");
  return satisfies_rec(h, u, p.sort() == u.sort() ? p : p.with_sort(u.sort()));
}

PointSpace::PointSpace(const FiniteAlgebra& h, Sort sort)
    : h_(&h), sort_(std::move(sort)) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < sort_.size(); ++i) {
    if (n > (std::size_t{1} << 24) / h.size())
      throw validation_error("point space too large to materialize");
    n *= h.size();
  }
  size_ = n;
}

std::size_t PointSpace::index_of(const Point& p) const {
  std::size_t idx = 0;
  for (const auto& v : sort_.vars()) idx = idx * h_->size() + p.value(v);
  return idx;
}

std::vector<std::size_t> PointSpace::values_at(std::size_t idx) const {
  std::vector<std::size_t> vals(sort_.size(), 0);
  for (std::size_t i = sort_.size(); i-- > 0;) {
    vals[i] = idx % h_->size();
    idx /= h_->size();
  }
  return vals;
}

Point PointSpace::point_at(std::size_t idx) const {
  return Point(sort_, h_, values_at(idx));
}

bool bit_test(const Bitset& s, std::size_t i) {
  return (s[i / 64] >> (i % 64)) & 1u;
}

void bit_set(Bitset& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

namespace {

Bitset make_bits(std::size_t n) { return Bitset((n + 63) / 64, 0); }

void trim_bits(Bitset& s, std::size_t n) {
  if (n % 64 != 0 && !s.empty())
    s.back() &= (std::uint64_t{1} << (n % 64)) - 1;
}

// Values of a term at every point of the space.
std::vector<std::size_t> term_values(const PointSpace& space, const Term& t) {
  std::vector<std::size_t> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    out[i] = eval_term(t, space.point_at(i));
  return out;
}

Bitset bits_not(Bitset s, std::size_t n) {
  for (auto& w : s) w = ~w;
  trim_bits(s, n);
  return s;
}

Bitset bits_and(Bitset a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
  return a;
}

Bitset bits_or(Bitset a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
  return a;
}

// Projects out the coordinate: a point is in the result iff some value of the
// coordinate puts it in the input set.
Bitset bits_exists(const Bitset& in, const PointSpace& space, std::size_t coord) {
  const std::size_t m = space.algebra().size();
  std::size_t stride = 1;
  for (std::size_t i = coord + 1; i < space.sort().size(); ++i) stride *= m;
  Bitset out = make_bits(space.size());
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    std::size_t base = idx - ((idx / stride) % m) * stride;
    for (std::size_t c = 0; c < m; ++c) {
      if (bit_test(in, base + c * stride)) {
        bit_set(out, idx);
        break;
      }
    }
  }
  return out;
}

Bitset bits_subst(const Bitset& body, const PointSpace& outer,
                  const PointSpace& inner, const Substitution& s) {
  Bitset out = make_bits(outer.size());
  for (std::size_t idx = 0; idx < outer.size(); ++idx) {
    Point composed = compose_point(outer.point_at(idx), s);
    if (bit_test(body, inner.index_of(composed))) bit_set(out, idx);
  }
  return out;
}

} // namespace

Bitset materialize(const FiniteAlgebra& h, const MSFormula& u) {
  PointSpace space(h, u.sort());
  switch (u.kind()) {
    case MSKind::Equality: {
      auto lv = term_values(space, *u.lhs());
      auto rv = term_values(space, *u.rhs());
      Bitset out = make_bits(space.size());
      for (std::size_t i = 0; i < space.size(); ++i)
        if (lv[i] == rv[i]) bit_set(out, i);
      return out;
    }
    case MSKind::Not:
      return bits_not(materialize(h, *u.body()), space.size());
    case MSKind::And:
      return bits_and(materialize(h, *u.left()), materialize(h, *u.right()));
    case MSKind::Or:
      return bits_or(materialize(h, *u.left()), materialize(h, *u.right()));
    case MSKind::Exists:
      return bits_exists(materialize(h, *u.body()), space,
                         u.sort().index_of(u.bound_var()));
    case MSKind::Subst: {
      PointSpace inner(h, u.body()->sort());
      return bits_subst(materialize(h, *u.body()), space, inner, u.substitution());
    }
  }
  throw internal_check_failed("unreachable formula kind");
}

// One semantic class: the pair of solution sets of a formula in the two
// algebras. New classes are discovered at their minimal length; every
// longer formula with the same solution sets behaves identically, both as
// an operand and as a separator candidate, so only representatives are
// kept. A construction recipe stands in for the representative formula,
// which is only materialized when a separator gets reported.
struct KernelComparator::Impl {
  struct ClassRec {
    Bitset s1, s2;
    MSKind kind;
    std::size_t a = 0, b = 0, c = 0;
    // Equality: a, b = term indices. Not: a = body. Exists: a = variable
    // index, b = body. Subst: a = pool index, b = body (in the domain sort).
    // And/Or: a = left length, b = left index, c = right index.
  };

  struct SortCtx {
    PointSpace space1, space2;
    std::vector<TermPtr> terms;
    std::vector<std::vector<std::size_t>> tv1, tv2; // term values per point
    std::vector<std::vector<ClassRec>> levels;      // new classes per length
    std::map<Bitset, char> seen;                    // keyed set1 ++ set2
  };

  const FiniteAlgebra& h1;
  const FiniteAlgebra& h2;
  Sort top;
  std::size_t max_length, max_depth;
  std::vector<Substitution> pool;
  std::map<std::string, SortCtx> ctxs;
  std::vector<std::pair<std::size_t, std::size_t>> checks; // (level, index)

  Impl(const FiniteAlgebra& h1_, const FiniteAlgebra& h2_, Sort sort,
       std::size_t max_length_, std::size_t max_depth_,
       std::vector<Substitution> pool_)
      : h1(h1_), h2(h2_), top(std::move(sort)), max_length(max_length_),
        max_depth(max_depth_), pool(std::move(pool_)) {
    if (!(h1.signature() == h2.signature()))
      throw validation_error("algebras have different signatures");
    for (std::size_t len = 0; len <= max_length; ++len) build_level(top, len);
  }

  static std::string key_of(const Sort& sort) {
    std::string key;
    for (const auto& v : sort.vars()) {
      key += v;
      key += ' ';
    }
    return key;
  }

  SortCtx& ctx_for(const Sort& sort) {
    auto it = ctxs.find(key_of(sort));
    if (it != ctxs.end()) return it->second;
    SortCtx ctx{PointSpace(h1, sort), PointSpace(h2, sort),
                enumerate_terms(h1.signature(), sort, max_depth),
                {}, {}, {}, {}};
    ctx.tv1.reserve(ctx.terms.size());
    ctx.tv2.reserve(ctx.terms.size());
    for (const auto& t : ctx.terms) {
      ctx.tv1.push_back(term_values(ctx.space1, *t));
      ctx.tv2.push_back(term_values(ctx.space2, *t));
    }
    return ctxs.emplace(key_of(sort), std::move(ctx)).first->second;
  }

  // Registers the class if its semantics is new; records a check entry for
  // separator-eligible kinds at the top sort.
  void consider(const Sort& sort, std::size_t level, Bitset set1, Bitset set2,
                MSKind kind, std::size_t a, std::size_t b, std::size_t c) {
    SortCtx& ctx = ctx_for(sort);
    Bitset key = set1;
    key.insert(key.end(), set2.begin(), set2.end());
    if (!ctx.seen.emplace(std::move(key), 0).second) return;
    ctx.levels[level].push_back(
        ClassRec{std::move(set1), std::move(set2), kind, a, b, c});
    bool checkable = kind == MSKind::Equality || kind == MSKind::Exists ||
                     kind == MSKind::Subst;
    if (checkable && sort == top)
      checks.emplace_back(level, ctx.levels[level].size() - 1);
  }

  void build_level(const Sort& sort, std::size_t length) {
    SortCtx& pre = ctx_for(sort);
    if (pre.levels.size() > length) return;
    if (pre.levels.size() < length) build_level(sort, length - 1);
    ctx_for(sort).levels.emplace_back();

    const bool final_level = length == max_length && sort == top;

    if (length == 0) {
      SortCtx& ctx = ctx_for(sort);
      const std::size_t n1 = ctx.space1.size(), n2 = ctx.space2.size();
      for (std::size_t i = 0; i < ctx.terms.size(); ++i)
        for (std::size_t j = 0; j < ctx.terms.size(); ++j) {
          Bitset s1 = make_bits(n1), s2 = make_bits(n2);
          for (std::size_t p = 0; p < n1; ++p)
            if (ctx.tv1[i][p] == ctx.tv1[j][p]) bit_set(s1, p);
          for (std::size_t p = 0; p < n2; ++p)
            if (ctx.tv2[i][p] == ctx.tv2[j][p]) bit_set(s2, p);
          consider(sort, 0, std::move(s1), std::move(s2), MSKind::Equality, i, j, 0);
        }
      return;
    }

    for (const auto& s : pool)
      if (s.codomain() == sort) build_level(s.domain(), length - 1);

    const std::size_t n1 = ctx_for(sort).space1.size();
    const std::size_t n2 = ctx_for(sort).space2.size();

    // Connectives cannot be first separators (a separating operand comes
    // earlier), and nothing consumes classes born at the final level, so
    // they are skipped there.
    if (!final_level) {
      const std::size_t count = ctx_for(sort).levels[length - 1].size();
      for (std::size_t i = 0; i < count; ++i) {
        const ClassRec& body = ctx_for(sort).levels[length - 1][i];
        consider(sort, length, bits_not(body.s1, n1), bits_not(body.s2, n2),
                 MSKind::Not, i, 0, 0);
      }
    }
    for (std::size_t v = 0; v < sort.size(); ++v) {
      const std::size_t count = ctx_for(sort).levels[length - 1].size();
      for (std::size_t i = 0; i < count; ++i) {
        SortCtx& ctx = ctx_for(sort);
        const ClassRec& body = ctx.levels[length - 1][i];
        consider(sort, length, bits_exists(body.s1, ctx.space1, v),
                 bits_exists(body.s2, ctx.space2, v), MSKind::Exists, v, i, 0);
      }
    }
    for (std::size_t s = 0; s < pool.size(); ++s) {
      if (!(pool[s].codomain() == sort)) continue;
      SortCtx& inner = ctx_for(pool[s].domain());
      if (inner.levels.size() < length) continue; // domain level not built
      const std::size_t count = inner.levels[length - 1].size();
      for (std::size_t i = 0; i < count; ++i) {
        SortCtx& ctx = ctx_for(sort);
        const ClassRec& body = ctx_for(pool[s].domain()).levels[length - 1][i];
        consider(sort, length,
                 bits_subst(body.s1, ctx.space1, inner.space1, pool[s]),
                 bits_subst(body.s2, ctx.space2, inner.space2, pool[s]),
                 MSKind::Subst, s, i, 0);
      }
    }
    if (!final_level) {
      for (int conj = 1; conj >= 0; --conj) {
        for (std::size_t a = 0; a < length; ++a) {
          std::size_t b = length - 1 - a;
          const std::size_t ca = ctx_for(sort).levels[a].size();
          const std::size_t cb = ctx_for(sort).levels[b].size();
          for (std::size_t i = 0; i < ca; ++i)
            for (std::size_t j = 0; j < cb; ++j) {
              SortCtx& ctx = ctx_for(sort);
              const ClassRec& l = ctx.levels[a][i];
              const ClassRec& r = ctx.levels[b][j];
              Bitset s1 = conj ? bits_and(l.s1, r.s1) : bits_or(l.s1, r.s1);
              Bitset s2 = conj ? bits_and(l.s2, r.s2) : bits_or(l.s2, r.s2);
              consider(sort, length, std::move(s1), std::move(s2),
                       conj ? MSKind::And : MSKind::Or, a, i, j);
            }
        }
      }
    }
  }

  MSFormulaPtr rebuild(const Sort& sort, std::size_t level, std::size_t index) const {
    const SortCtx& ctx = ctxs.at(key_of(sort));
    const ClassRec& rec = ctx.levels[level][index];
    switch (rec.kind) {
      case MSKind::Equality:
        return MSFormula::equality(sort, ctx.terms[rec.a], ctx.terms[rec.b]);
      case MSKind::Not:
        return MSFormula::negation(rebuild(sort, level - 1, rec.a));
      case MSKind::Exists:
        return MSFormula::exists(sort.vars()[rec.a], rebuild(sort, level - 1, rec.b));
      case MSKind::Subst:
        return MSFormula::subst(pool[rec.a],
                                rebuild(pool[rec.a].domain(), level - 1, rec.b));
      case MSKind::And:
        return MSFormula::conjunction(rebuild(sort, rec.a, rec.b),
                                      rebuild(sort, level - 1 - rec.a, rec.c));
      case MSKind::Or:
        return MSFormula::disjunction(rebuild(sort, rec.a, rec.b),
                                      rebuild(sort, level - 1 - rec.a, rec.c));
    }
    throw internal_check_failed("unreachable formula kind");
  }

  KernelCompareResult compare(const Point& p1, const Point& p2) const {
    if (!p1.sort().same_set(top) || !p2.sort().same_set(top))
      throw sort_mismatch("point sort does not match the comparator sort");
    if (&p1.algebra() != &h1 || &p2.algebra() != &h2)
      throw validation_error("point does not target the comparator's algebra");
    const SortCtx& ctx = ctxs.at(key_of(top));
    std::size_t idx1 = ctx.space1.index_of(p1.with_sort(top));
    std::size_t idx2 = ctx.space2.index_of(p2.with_sort(top));
    for (const auto& [level, index] : checks) {
      const ClassRec& rec = ctx.levels[level][index];
      if (bit_test(rec.s1, idx1) != bit_test(rec.s2, idx2))
        return {false, rebuild(top, level, index)};
    }
    return {true, nullptr};
  }
};

KernelComparator::KernelComparator(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
                                   Sort sort, std::size_t max_length,
                                   std::size_t max_depth,
                                   std::vector<Substitution> pool)
    : impl_(new Impl(h1, h2, std::move(sort), max_length, max_depth,
                     std::move(pool))) {}

KernelComparator::~KernelComparator() = default;
KernelComparator::KernelComparator(KernelComparator&&) noexcept = default;

KernelCompareResult KernelComparator::compare(const Point& p1,
                                              const Point& p2) const {
  return impl_->compare(p1, p2);
}

KernelCompareResult bounded_lker_eq(const FiniteAlgebra& h1, const Point& p1,
                                    const FiniteAlgebra& h2, const Point& p2,
                                    std::size_t max_length, std::size_t max_depth,
                                    const std::vector<Substitution>& pool) {
  if (!p1.sort().same_set(p2.sort()))
    throw sort_mismatch("points have different sorts");
  if (&p1.algebra() != &h1 || &p2.algebra() != &h2)
    throw validation_error("point does not target the given algebra");
  KernelComparator comparator(h1, h2, p1.sort(), max_length, max_depth, pool);
  return comparator.compare(p1, p2);
}

EfGame::EfGame(const FiniteAlgebra& h1, const FiniteAlgebra& h2)
    : h1_(&h1), h2_(&h2) {
  if (!(h1.signature() == h2.signature()))
    throw validation_error("algebras have different signatures");
}

namespace {

// Checks the operation constraints among pebbles; `only` restricts the check
// to constraints involving that pebble index (pass npos for all).
bool ops_ok(const FiniteAlgebra& h1, const FiniteAlgebra& h2,
            const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
            std::size_t only) {
  const std::size_t n = a.size();
  if (n == 0) return true; // relational constraints need pebbles on both sides
  for (const auto& op : h1.signature().ops) {
    std::vector<std::size_t> idx(op.arity, 0);
    std::vector<std::size_t> args1(op.arity), args2(op.arity);
    while (true) {
      bool involves = false;
      for (std::size_t k = 0; k < op.arity; ++k) {
        args1[k] = a[idx[k]];
        args2[k] = b[idx[k]];
        if (idx[k] == only) involves = true;
      }
      std::size_t r1 = h1.apply(op.name, args1);
      std::size_t r2 = h2.apply(op.name, args2);
      for (std::size_t j = 0; j < n; ++j) {
        if (only != static_cast<std::size_t>(-1) && !involves && j != only)
          continue;
        if ((r1 == a[j]) != (r2 == b[j])) return false;
      }
      std::size_t pos = op.arity;
      while (pos > 0) {
        if (++idx[pos - 1] < n) break;
        idx[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return true;
}

bool equalities_ok(const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b, std::size_t only) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (only != static_cast<std::size_t>(-1)) {
      if ((a[i] == a[only]) != (b[i] == b[only])) return false;
    } else {
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

} // namespace

bool EfGame::atomic_full(const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b) const {
  return equalities_ok(a, b, static_cast<std::size_t>(-1)) &&
         ops_ok(*h1_, *h2_, a, b, static_cast<std::size_t>(-1));
}

bool EfGame::atomic_newest(const std::vector<std::size_t>& a,
                           const std::vector<std::size_t>& b) const {
  std::size_t last = a.size() - 1;
  return equalities_ok(a, b, last) && ops_ok(*h1_, *h2_, a, b, last);
}

bool EfGame::play(std::vector<std::size_t>& a, std::vector<std::size_t>& b,
                  std::size_t rounds) {
  if (rounds == 0) return true;
  auto key = std::make_tuple(rounds, a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool ok = true;
  for (std::size_t x = 0; x < h1_->size() && ok; ++x) {
    bool found = false;
    a.push_back(x);
    for (std::size_t y = 0; y < h2_->size() && !found; ++y) {
      b.push_back(y);
      if (atomic_newest(a, b) && play(a, b, rounds - 1)) found = true;
      b.pop_back();
    }
    a.pop_back();
    ok = found;
  }
  for (std::size_t y = 0; y < h2_->size() && ok; ++y) {
    bool found = false;
    b.push_back(y);
    for (std::size_t x = 0; x < h1_->size() && !found; ++x) {
      a.push_back(x);
      if (atomic_newest(a, b) && play(a, b, rounds - 1)) found = true;
      a.pop_back();
    }
    b.pop_back();
    ok = found;
  }
  memo_.emplace(std::move(key), ok);
  return ok;
}

bool EfGame::equivalent(std::vector<std::size_t> a, std::vector<std::size_t> b,
                        std::size_t rounds) {
  if (a.size() != b.size()) throw length_mismatch("tuples have different lengths");
  for (std::size_t v : a)
    if (v >= h1_->size()) throw validation_error("tuple element out of range");
  for (std::size_t v : b)
    if (v >= h2_->size()) throw validation_error("tuple element out of range");
  if (!atomic_full(a, b)) return false;
  return play(a, b, rounds);
}

bool ef_equivalent(const FiniteAlgebra& h1, const std::vector<std::size_t>& a,
                   const FiniteAlgebra& h2, const std::vector<std::size_t>& b,
                   std::size_t rounds) {
  EfGame game(h1, h2);
  return game.equivalent(a, b, rounds);
}

} // namespace lgt
