#include "lgt/algebra.hpp"

#include <algorithm>
#include <functional>

namespace lgt {

const Signature::Op* Signature::find(std::string_view name) const {
  for (const auto& op : ops)
    if (op.name == name) return &op;
  return nullptr;
}

const Signature::Op& Signature::require(std::string_view name) const {
  if (const Op* op = find(name)) return *op;
  throw unknown_operation("unknown operation '" + std::string(name) + "'");
}

void Signature::validate() const {
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (ops[i].name == ops[j].name)
        throw validation_error("duplicate operation name '" + ops[i].name + "'");
}

bool Signature::operator==(const Signature& o) const {
  if (ops.size() != o.ops.size()) return false;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name != o.ops[i].name || ops[i].arity != o.ops[i].arity)
      return false;
  return true;
}

Sort::Sort(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw validation_error("duplicate variable '" + vars_[i] + "' in sort");
}

bool Sort::contains(std::string_view v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

std::size_t Sort::index_of(std::string_view v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return i;
  throw unknown_variable("variable '" + std::string(v) + "' not in sort");
}

bool Sort::same_set(const Sort& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (const auto& v : vars_)
    if (!o.contains(v)) return false;
  return true;
}

bool Sort::disjoint_with(const Sort& o) const {
  for (const auto& v : vars_)
    if (o.contains(v)) return false;
  return true;
}

Sort Sort::union_of(const Sort& a, const Sort& b) {
  std::vector<std::string> vars = a.vars_;
  for (const auto& v : b.vars_)
    if (!a.contains(v)) vars.push_back(v);
  return Sort(std::move(vars));
}

Sort Sort::with_var(const std::string& v) const {
  if (contains(v))
    throw variable_clash("variable '" + v + "' already in sort");
  std::vector<std::string> vars = vars_;
  vars.push_back(v);
  return Sort(std::move(vars));
}

TermPtr Term::var(std::string name) {
  return TermPtr(new Term(true, std::move(name), {}));
}

TermPtr Term::app(std::string op, std::vector<TermPtr> args) {
  return TermPtr(new Term(false, std::move(op), std::move(args)));
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (is_var_) {
    out.insert(name_);
    return;
  }
  for (const auto& a : args_) a->collect_vars(out);
}

std::set<std::string> Term::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

bool Term::vars_within(const Sort& sort) const {
  if (is_var_) return sort.contains(name_);
  for (const auto& a : args_)
    if (!a->vars_within(sort)) return false;
  return true;
}

std::size_t Term::depth() const {
  if (is_var_) return 0;
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a->depth());
  return d + 1;
}

bool Term::equal(const Term& a, const Term& b) {
  if (a.is_var_ != b.is_var_ || a.name_ != b.name_) return false;
  if (a.args_.size() != b.args_.size()) return false;
  for (std::size_t i = 0; i < a.args_.size(); ++i)
    if (!equal(*a.args_[i], *b.args_[i])) return false;
  return true;
}

namespace {

std::size_t table_size(std::size_t m, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= m;
  return n;
}

} // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                             std::map<std::string, std::vector<std::size_t>> tables)
    : name_(std::move(name)), sig_(std::move(sig)), size_(size) {
  sig_.validate();
  if (size_ == 0) throw validation_error("algebra size must be positive");
  for (const auto& op : sig_.ops) {
    auto it = tables.find(op.name);
    if (it == tables.end())
      throw validation_error("missing table for operation '" + op.name + "'");
    const auto& tab = it->second;
    if (tab.size() != table_size(size_, op.arity))
      throw validation_error("table for '" + op.name + "' has " +
                             std::to_string(tab.size()) + " entries, expected " +
                             std::to_string(table_size(size_, op.arity)));
    for (std::size_t v : tab)
      if (v >= size_)
        throw validation_error("table value " + std::to_string(v) + " for '" +
                               op.name + "' out of range");
    tables_.emplace(op.name, tab);
  }
  if (tables.size() != sig_.ops.size())
    throw validation_error("table given for an operation not in the signature");
}

const std::vector<std::size_t>& FiniteAlgebra::table(std::string_view op) const {
  auto it = tables_.find(op);
  if (it == tables_.end())
    throw unknown_operation("unknown operation '" + std::string(op) + "'");
  return it->second;
}

std::size_t FiniteAlgebra::apply(std::string_view op,
                                 std::span<const std::size_t> args) const {
  const Signature::Op& decl = sig_.require(op);
  if (args.size() != decl.arity)
    throw arity_mismatch("operation '" + std::string(op) + "' expects " +
                         std::to_string(decl.arity) + " arguments, got " +
                         std::to_string(args.size()));
  const auto& tab = table(op);
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * size_ + a;
  return tab[idx];
}

Point::Point(Sort sort, const FiniteAlgebra* algebra, std::vector<std::size_t> values)
    : sort_(std::move(sort)), algebra_(algebra), values_(std::move(values)) {
  if (algebra_ == nullptr) throw validation_error("point requires an algebra");
  if (values_.size() != sort_.size())
    throw validation_error("point assignment not total on its sort");
  for (std::size_t v : values_)
    if (v >= algebra_->size())
      throw validation_error("point value " + std::to_string(v) + " out of range");
}

std::size_t Point::value(std::string_view var) const {
  return values_[sort_.index_of(var)];
}

Point Point::with_value(std::string_view var, std::size_t v) const {
  std::vector<std::size_t> vals = values_;
  vals[sort_.index_of(var)] = v;
  return Point(sort_, algebra_, std::move(vals));
}

Point Point::with_sort(const Sort& target) const {
  if (!sort_.same_set(target))
    throw sort_mismatch("point sort does not match the requested sort");
  std::vector<std::size_t> vals;
  vals.reserve(target.size());
  for (const auto& v : target.vars()) vals.push_back(value(v));
  return Point(target, algebra_, std::move(vals));
}

Substitution::Substitution(Sort domain, Sort codomain, std::vector<TermPtr> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw validation_error("substitution not total on its domain");
  for (const auto& t : images_)
    if (!t->vars_within(codomain_))
      throw validation_error("substitution image uses a variable outside the codomain");
}

const TermPtr& Substitution::image(std::string_view var) const {
  return images_[domain_.index_of(var)];
}

std::size_t eval_term(const Term& t, const Point& p) {
  if (t.is_var()) return p.value(t.var_name());
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(*a, p));
  return p.algebra().apply(t.op_name(), args);
}

TermPtr apply_subst(const Substitution& s, const TermPtr& t) {
  if (t->is_var()) {
    if (!s.domain().contains(t->var_name()))
      throw unknown_variable("variable '" + t->var_name() +
                             "' not in substitution domain");
    return s.image(t->var_name());
  }
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(apply_subst(s, a));
  return Term::app(t->op_name(), std::move(args));
}

Substitution compose_subst(const Substitution& s2, const Substitution& s1) {
  if (!s1.codomain().same_set(s2.domain()))
    throw sort_mismatch("substitution composition: sorts do not align");
  std::vector<TermPtr> images;
  images.reserve(s1.domain().size());
  for (std::size_t i = 0; i < s1.domain().size(); ++i)
    images.push_back(apply_subst(s2, s1.image_at(i)));
  return Substitution(s1.domain(), s2.codomain(), std::move(images));
}

Point compose_point(const Point& p, const Substitution& s) {
  for (const auto& t : s.images())
    if (!t->vars_within(p.sort()))
      throw sort_mismatch("point composition: image variable missing from point sort");
  std::vector<std::size_t> vals;
  vals.reserve(s.domain().size());
  for (std::size_t i = 0; i < s.domain().size(); ++i)
    vals.push_back(eval_term(*s.image_at(i), p));
  return Point(s.domain(), p.algebra_ptr(), std::move(vals));
}

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Checks every table constraint whose participants are all assigned.
bool consistent(const FiniteAlgebra& h, const std::vector<std::size_t>& img) {
  const std::size_t m = h.size();
  for (const auto& op : h.signature().ops) {
    const auto& tab = h.table(op.name);
    std::vector<std::size_t> args(op.arity, 0);
    for (std::size_t idx = 0; idx < tab.size(); ++idx) {
      // Decode idx into the argument tuple (row-major, lexicographic).
      std::size_t rest = idx;
      bool all_assigned = true;
      for (std::size_t k = op.arity; k-- > 0;) {
        args[k] = rest % m;
        rest /= m;
      }
      for (std::size_t k = 0; k < op.arity; ++k)
        if (img[args[k]] == kUnassigned) {
          all_assigned = false;
          break;
        }
      if (!all_assigned) continue;
      std::size_t res = tab[idx];
      if (img[res] == kUnassigned) continue;
      std::size_t mapped_idx = 0;
      for (std::size_t k = 0; k < op.arity; ++k)
        mapped_idx = mapped_idx * m + img[args[k]];
      if (tab[mapped_idx] != img[res]) return false;
    }
  }
  return true;
}

// Backtracking over partial bijections in lexicographic order. Returns true
// when the visitor asks to stop.
bool search_automorphisms(const FiniteAlgebra& h, std::vector<std::size_t>& img,
                          std::vector<bool>& used, std::size_t next,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = h.size();
  while (next < m && img[next] != kUnassigned) ++next;
  if (next == m) return visit(img);
  for (std::size_t v = 0; v < m; ++v) {
    if (used[v]) continue;
    img[next] = v;
    used[v] = true;
    if (consistent(h, img)) {
      if (search_automorphisms(h, img, used, next + 1, visit)) return true;
    }
    img[next] = kUnassigned;
    used[v] = false;
  }
  return false;
}

} // namespace

std::vector<std::vector<std::size_t>> automorphisms(const FiniteAlgebra& h) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(h.size(), kUnassigned);
  std::vector<bool> used(h.size(), false);
  search_automorphisms(h, img, used, 0, [&](const std::vector<std::size_t>& a) {
    out.push_back(a);
    return false;
  });
  return out;
}

OrbitResult orbit_equivalent(const FiniteAlgebra& h,
                             std::span<const std::size_t> a,
                             std::span<const std::size_t> b) {
  if (a.size() != b.size())
    throw length_mismatch("tuples have different lengths");
  for (std::size_t v : a)
    if (v >= h.size()) throw validation_error("tuple element out of range");
  for (std::size_t v : b)
    if (v >= h.size()) throw validation_error("tuple element out of range");

  std::vector<std::size_t> img(h.size(), kUnassigned);
  std::vector<bool> used(h.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (img[a[i]] == kUnassigned) {
      if (used[b[i]]) return {false, std::nullopt}; // not injective
      img[a[i]] = b[i];
      used[b[i]] = true;
    } else if (img[a[i]] != b[i]) {
      return {false, std::nullopt}; // not a function
    }
  }
  if (!consistent(h, img)) return {false, std::nullopt};

  OrbitResult result;
  search_automorphisms(h, img, used, 0, [&](const std::vector<std::size_t>& phi) {
    result.equivalent = true;
    result.witness = phi;
    return true;
  });
  return result;
}

} // namespace lgt
