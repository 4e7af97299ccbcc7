#include "lgt/fo.hpp"

namespace lgt {

FOFormulaPtr FOFormula::equality(TermPtr lhs, TermPtr rhs) {
  if (!lhs || !rhs) throw ill_formed_formula("equality requires two terms");
  auto f = std::shared_ptr<FOFormula>(new FOFormula(FOKind::Equality));
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  return f;
}

FOFormulaPtr FOFormula::negation(FOFormulaPtr body) {
  if (!body) throw ill_formed_formula("negation requires a body");
  auto f = std::shared_ptr<FOFormula>(new FOFormula(FOKind::Not));
  f->left_ = std::move(body);
  return f;
}

FOFormulaPtr FOFormula::make_binary(FOKind kind, FOFormulaPtr left,
                                    FOFormulaPtr right) {
  if (!left || !right)
    throw ill_formed_formula("binary connective requires two operands");
  auto f = std::shared_ptr<FOFormula>(new FOFormula(kind));
  f->left_ = std::move(left);
  f->right_ = std::move(right);
  return f;
}

FOFormulaPtr FOFormula::conjunction(FOFormulaPtr left, FOFormulaPtr right) {
  return make_binary(FOKind::And, std::move(left), std::move(right));
}

FOFormulaPtr FOFormula::disjunction(FOFormulaPtr left, FOFormulaPtr right) {
  return make_binary(FOKind::Or, std::move(left), std::move(right));
}

FOFormulaPtr FOFormula::exists(std::string var, FOFormulaPtr body) {
  if (!body) throw ill_formed_formula("existential requires a body");
  if (!is_tilde_var(var))
    throw ill_formed_formula("bound variables must be tilde variables");
  auto f = std::shared_ptr<FOFormula>(new FOFormula(FOKind::Exists));
  f->var_ = std::move(var);
  f->left_ = std::move(body);
  return f;
}

bool is_tilde_var(std::string_view name) {
  return !name.empty() && name.front() == '~';
}

namespace {

void collect_free(const FOFormula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case FOKind::Equality: {
      for (const auto& v : f.lhs()->vars())
        if (!bound.count(v)) out.insert(v);
      for (const auto& v : f.rhs()->vars())
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case FOKind::Not:
      collect_free(*f.body(), bound, out);
      return;
    case FOKind::And:
    case FOKind::Or:
      collect_free(*f.left(), bound, out);
      collect_free(*f.right(), bound, out);
      return;
    case FOKind::Exists: {
      bool inserted = bound.insert(f.bound_var()).second;
      collect_free(*f.body(), bound, out);
      if (inserted) bound.erase(f.bound_var());
      return;
    }
  }
}

bool scoped_rec(const FOFormula& f, std::set<std::string>& bound) {
  switch (f.kind()) {
    case FOKind::Equality: {
      for (const auto& v : f.lhs()->vars())
        if (is_tilde_var(v) && !bound.count(v)) return false;
      for (const auto& v : f.rhs()->vars())
        if (is_tilde_var(v) && !bound.count(v)) return false;
      return true;
    }
    case FOKind::Not:
      return scoped_rec(*f.body(), bound);
    case FOKind::And:
    case FOKind::Or:
      return scoped_rec(*f.left(), bound) && scoped_rec(*f.right(), bound);
    case FOKind::Exists: {
      if (!is_tilde_var(f.bound_var())) return false;
      bool inserted = bound.insert(f.bound_var()).second;
      bool ok = scoped_rec(*f.body(), bound);
      if (inserted) bound.erase(f.bound_var());
      return ok;
    }
  }
  return false;
}

} // namespace

std::set<std::string> free_vars(const FOFormula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool well_scoped(const FOFormula& f) {
  std::set<std::string> bound;
  return scoped_rec(f, bound);
}

namespace {

using Env = std::map<std::string, TermPtr>;

TermPtr subst_term(const TermPtr& t, const Env& env) {
  if (t->is_var()) {
    auto it = env.find(t->var_name());
    if (it == env.end())
      throw internal_check_failed("translation environment misses variable '" +
                                  t->var_name() + "'");
    return it->second;
  }
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(subst_term(a, env));
  return Term::app(t->op_name(), std::move(args));
}

FOFormulaPtr translate_rec(const MSFormula& u, const Env& env, std::size_t& counter) {
  switch (u.kind()) {
    case MSKind::Equality:
      return FOFormula::equality(subst_term(u.lhs(), env), subst_term(u.rhs(), env));
    case MSKind::Not:
      return FOFormula::negation(translate_rec(*u.body(), env, counter));
    case MSKind::And:
      return FOFormula::conjunction(translate_rec(*u.left(), env, counter),
                                    translate_rec(*u.right(), env, counter));
    case MSKind::Or:
      return FOFormula::disjunction(translate_rec(*u.left(), env, counter),
                                    translate_rec(*u.right(), env, counter));
    case MSKind::Exists: {
      ++counter;
      std::string fresh = "~" + u.bound_var() + "_" + std::to_string(counter);
      Env inner = env;
      inner[u.bound_var()] = Term::var(fresh);
      return FOFormula::exists(fresh, translate_rec(*u.body(), inner, counter));
    }
    case MSKind::Subst: {
      const Substitution& s = u.substitution();
      Env inner;
      for (std::size_t i = 0; i < s.domain().size(); ++i)
        inner[s.domain().vars()[i]] = subst_term(s.image_at(i), env);
      return translate_rec(*u.body(), inner, counter);
    }
  }
  throw internal_check_failed("unreachable formula kind");
}

} // namespace

FOFormulaPtr translate(const MSFormula& u) {
  Env env;
  for (const auto& v : u.sort().vars()) env[v] = Term::var(v);
  std::size_t counter = 0;
  return translate_rec(u, env, counter);
}

namespace {

std::size_t eval_fo_term(const Term& t, const FiniteAlgebra& h,
                         const std::map<std::string, std::size_t>& env) {
  if (t.is_var()) {
    auto it = env.find(t.var_name());
    if (it == env.end())
      throw missing_assignment("no value for variable '" + t.var_name() + "'");
    return it->second;
  }
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_fo_term(*a, h, env));
  return h.apply(t.op_name(), args);
}

bool fo_sat_rec(const FiniteAlgebra& h, const FOFormula& f,
                std::map<std::string, std::size_t>& env) {
  switch (f.kind()) {
    case FOKind::Equality:
      return eval_fo_term(*f.lhs(), h, env) == eval_fo_term(*f.rhs(), h, env);
    case FOKind::Not:
      return !fo_sat_rec(h, *f.body(), env);
    case FOKind::And:
      return fo_sat_rec(h, *f.left(), env) && fo_sat_rec(h, *f.right(), env);
    case FOKind::Or:
      return fo_sat_rec(h, *f.left(), env) || fo_sat_rec(h, *f.right(), env);
    case FOKind::Exists: {
      auto prev = env.find(f.bound_var());
      bool had = prev != env.end();
      std::size_t old = had ? prev->second : 0;
      bool found = false;
      for (std::size_t c = 0; c < h.size() && !found; ++c) {
        env[f.bound_var()] = c;
        found = fo_sat_rec(h, *f.body(), env);
      }
      if (had)
        env[f.bound_var()] = old;
      else
        env.erase(f.bound_var());
      return found;
    }
  }
  throw internal_check_failed("unreachable formula kind");
}

} // namespace

bool fo_satisfies(const FiniteAlgebra& h, const FOFormula& f,
                  const std::map<std::string, std::size_t>& assignment) {
  for (const auto& [var, val] : assignment)
    if (val >= h.size())
      throw validation_error("assignment value for '" + var + "' out of range");
  std::map<std::string, std::size_t> env = assignment;
  return fo_sat_rec(h, f, env);
}

std::map<std::string, std::size_t> assignment_of(const Point& p) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < p.sort().size(); ++i)
    out[p.sort().vars()[i]] = p.value_at(i);
  return out;
}

} // namespace lgt
