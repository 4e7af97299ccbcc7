#include "lgt/msformula.hpp"

#include <algorithm>

namespace lgt {

MSFormulaPtr MSFormula::equality(Sort sort, TermPtr lhs, TermPtr rhs) {
  if (!lhs || !rhs) throw ill_formed_formula("equality requires two terms");
  if (!lhs->vars_within(sort) || !rhs->vars_within(sort))
    throw ill_formed_formula("equality term uses a variable outside the sort");
  auto f = std::shared_ptr<MSFormula>(new MSFormula(MSKind::Equality, std::move(sort), 0));
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  return f;
}

MSFormulaPtr MSFormula::negation(MSFormulaPtr body) {
  if (!body) throw ill_formed_formula("negation requires a body");
  auto f = std::shared_ptr<MSFormula>(
      new MSFormula(MSKind::Not, body->sort(), body->length() + 1));
  f->left_ = std::move(body);
  return f;
}

MSFormulaPtr MSFormula::make_binary(MSKind kind, MSFormulaPtr left,
                                    MSFormulaPtr right) {
  if (!left || !right) throw ill_formed_formula("binary connective requires two operands");
  if (!(left->sort() == right->sort()))
    throw ill_formed_formula("binary connective operands have different sorts");
  std::size_t len = left->length() + right->length() + 1;
  auto f = std::shared_ptr<MSFormula>(new MSFormula(kind, left->sort(), len));
  f->left_ = std::move(left);
  f->right_ = std::move(right);
  return f;
}

MSFormulaPtr MSFormula::conjunction(MSFormulaPtr left, MSFormulaPtr right) {
  return make_binary(MSKind::And, std::move(left), std::move(right));
}

MSFormulaPtr MSFormula::disjunction(MSFormulaPtr left, MSFormulaPtr right) {
  return make_binary(MSKind::Or, std::move(left), std::move(right));
}

MSFormulaPtr MSFormula::exists(std::string var, MSFormulaPtr body) {
  if (!body) throw ill_formed_formula("existential requires a body");
  if (!body->sort().contains(var))
    throw ill_formed_formula("quantified variable '" + var +
                             "' is not in the formula's sort");
  auto f = std::shared_ptr<MSFormula>(
      new MSFormula(MSKind::Exists, body->sort(), body->length() + 1));
  f->var_ = std::move(var);
  f->left_ = std::move(body);
  return f;
}

MSFormulaPtr MSFormula::subst(Substitution s, MSFormulaPtr body) {
  if (!body) throw ill_formed_formula("substitution node requires a body");
  if (!(body->sort() == s.domain()))
    throw ill_formed_formula("substitution domain does not match the body's sort");
  auto f = std::shared_ptr<MSFormula>(
      new MSFormula(MSKind::Subst, s.codomain(), body->length() + 1));
  f->subst_ = std::make_shared<Substitution>(std::move(s));
  f->left_ = std::move(body);
  return f;
}

MSFormulaPtr MSFormula::conjunction_all(std::vector<MSFormulaPtr> parts) {
  if (parts.empty()) throw ill_formed_formula("empty conjunction");
  MSFormulaPtr acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = conjunction(parts[i], acc);
  return acc;
}

std::vector<TermPtr> enumerate_terms(const Signature& sig, const Sort& sort,
                                     std::size_t max_depth) {
  // levels[d] holds the terms of exact depth d; the result concatenates them.
  std::vector<std::vector<TermPtr>> levels;
  std::vector<TermPtr> all;
  levels.emplace_back();
  for (const auto& v : sort.vars()) {
    levels[0].push_back(Term::var(v));
    all.push_back(levels[0].back());
  }
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<TermPtr> level;
    std::size_t shallow = 0; // count of terms with depth < d-1
    for (std::size_t i = 0; i + 1 < d; ++i) shallow += levels[i].size();
    std::size_t avail = shallow + levels[d - 1].size();
    for (const auto& op : sig.ops) {
      if (op.arity == 0) {
        if (d == 1) level.push_back(Term::app(op.name, {}));
        continue;
      }
      if (avail == 0) continue;
      // Argument index tuples over the first `avail` terms, lexicographic,
      // with at least one argument of exact depth d-1.
      std::vector<std::size_t> idx(op.arity, 0);
      while (true) {
        bool touches_deepest = false;
        for (std::size_t k : idx)
          if (k >= shallow) {
            touches_deepest = true;
            break;
          }
        if (touches_deepest) {
          std::vector<TermPtr> args;
          args.reserve(op.arity);
          for (std::size_t k : idx) args.push_back(all[k]);
          level.push_back(Term::app(op.name, std::move(args)));
        }
        std::size_t pos = op.arity;
        while (pos > 0) {
          if (++idx[pos - 1] < avail) break;
          idx[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
    for (const auto& t : level) all.push_back(t);
    levels.push_back(std::move(level));
    if (levels.back().empty()) break; // nothing deeper can appear
  }
  return all;
}

std::string FormulaEnumerator::key_of(const Sort& sort) {
  std::string key;
  for (const auto& v : sort.vars()) {
    key += v;
    key += ' ';
  }
  return key;
}

FormulaEnumerator::FormulaEnumerator(Signature sig, Sort sort,
                                     std::size_t max_length, std::size_t max_depth,
                                     std::vector<Substitution> pool)
    : sig_(std::move(sig)), sort_(std::move(sort)), max_length_(max_length),
      max_depth_(max_depth), pool_(std::move(pool)) {}

FormulaEnumerator::SortLevels& FormulaEnumerator::levels_for(const Sort& sort) {
  auto [it, inserted] = cache_.try_emplace(key_of(sort));
  if (inserted) it->second.terms = enumerate_terms(sig_, sort, max_depth_);
  return it->second;
}

void FormulaEnumerator::build_level(const Sort& sort, std::size_t length) {
  SortLevels& sl = levels_for(sort);
  if (sl.levels.size() > length) return;
  if (sl.levels.size() < length) build_level(sort, length - 1);

  std::vector<MSFormulaPtr> level;
  if (length == 0) {
    for (const auto& lhs : sl.terms)
      for (const auto& rhs : sl.terms)
        level.push_back(MSFormula::equality(sort, lhs, rhs));
    // Re-fetch: recursive builds may have grown the cache map.
    levels_for(sort).levels.push_back(std::move(level));
    return;
  }

  // Bodies of other sorts must exist before we reference them.
  for (const auto& s : pool_)
    if (s.codomain() == sort) build_level(s.domain(), length - 1);

  SortLevels& cur = levels_for(sort);
  const auto& prev = cur.levels[length - 1];
  for (const auto& u : prev) level.push_back(MSFormula::negation(u));
  for (const auto& v : sort.vars())
    for (const auto& u : prev) level.push_back(MSFormula::exists(v, u));
  for (const auto& s : pool_) {
    if (!(s.codomain() == sort)) continue;
    const auto& bodies = levels_for(s.domain()).levels[length - 1];
    for (const auto& u : bodies) level.push_back(MSFormula::subst(s, u));
  }
  for (std::size_t n1 = 0; n1 < length; ++n1) {
    std::size_t n2 = length - 1 - n1;
    for (const auto& u1 : cur.levels[n1])
      for (const auto& u2 : cur.levels[n2])
        level.push_back(MSFormula::conjunction(u1, u2));
  }
  for (std::size_t n1 = 0; n1 < length; ++n1) {
    std::size_t n2 = length - 1 - n1;
    for (const auto& u1 : cur.levels[n1])
      for (const auto& u2 : cur.levels[n2])
        level.push_back(MSFormula::disjunction(u1, u2));
  }
  levels_for(sort).levels.push_back(std::move(level));
}

MSFormulaPtr FormulaEnumerator::next() {
  while (cur_level_ <= max_length_) {
    build_level(sort_, cur_level_);
    const auto& level = levels_for(sort_).levels[cur_level_];
    if (cur_index_ < level.size()) return level[cur_index_++];
    ++cur_level_;
    cur_index_ = 0;
  }
  return nullptr;
}

std::vector<MSFormulaPtr> FormulaEnumerator::drain() {
  std::vector<MSFormulaPtr> out;
  while (MSFormulaPtr f = next()) out.push_back(std::move(f));
  return out;
}

MSFormulaPtr presentation_formula(const Sort& x, const Sort& y,
                                  const std::vector<TermPtr>& words) {
  if (!x.disjoint_with(y))
    throw sort_overlap("the generator sort overlaps the point sort");
  if (words.size() != x.size())
    throw length_mismatch("need exactly one word per sort variable");
  if (x.empty())
    throw ill_formed_formula("the point sort must be non-empty");
  for (const auto& w : words)
    if (!w->vars_within(y))
      throw ill_formed_formula("presentation word uses a variable outside the generator sort");

  Sort xy = Sort::union_of(x, y);
  std::vector<MSFormulaPtr> eqs;
  eqs.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    eqs.push_back(MSFormula::equality(xy, Term::var(x.vars()[i]), words[i]));
  MSFormulaPtr body = MSFormula::conjunction_all(std::move(eqs));
  for (std::size_t i = y.size(); i-- > 0;)
    body = MSFormula::exists(y.vars()[i], std::move(body));

  // Collapse the quantified generators onto the first point variable.
  std::vector<TermPtr> images;
  images.reserve(xy.size());
  for (const auto& v : xy.vars())
    images.push_back(x.contains(v) ? Term::var(v) : Term::var(x.vars()[0]));
  Substitution s(xy, x, std::move(images));
  return MSFormula::subst(std::move(s), std::move(body));
}

MSFormulaPtr proper_extension_formula(const Sort& x, const std::string& x_new,
                                      const TermPtr& w) {
  if (x.contains(x_new))
    throw variable_clash("new variable '" + x_new + "' already occurs in the sort");
  if (!w->vars_within(x))
    throw ill_formed_formula("word uses a variable outside the sort");
  Sort extended = x.with_var(x_new);
  return MSFormula::negation(
      MSFormula::equality(extended, Term::var(x_new), w));
}

} // namespace lgt
