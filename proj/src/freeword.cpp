#include "lgt/freeword.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace lgt {

SgWord::SgWord(std::vector<std::size_t> letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw validation_error("semigroup words must be non-empty");
}

SgExtendResult semigroup_extend(std::size_t alphabet_size,
                                const std::vector<SgWord>& a,
                                const std::vector<SgWord>& b) {
  if (a.size() != b.size())
    throw length_mismatch("need the same number of source and target words");
  for (const auto& w : a)
    for (std::size_t l : w.letters())
      if (l >= alphabet_size) throw validation_error("letter out of alphabet");
  for (const auto& w : b)
    for (std::size_t l : w.letters())
      if (l >= alphabet_size) throw validation_error("letter out of alphabet");

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(alphabet_size, unset);

  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) {
      SgExtendResult r;
      r.status = SgExtendStatus::length_mismatch;
      r.detail = "word " + std::to_string(i + 1) + " has lengths " +
                 std::to_string(a[i].size()) + " and " + std::to_string(b[i].size());
      return r;
    }
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      std::size_t from = a[i].letters()[j], to = b[i].letters()[j];
      if (map[from] == unset) {
        map[from] = to;
      } else if (map[from] != to) {
        SgExtendResult r;
        r.status = SgExtendStatus::conflicting_alignment;
        r.detail = "x" + std::to_string(from + 1) + " is forced to both x" +
                   std::to_string(map[from] + 1) + " and x" + std::to_string(to + 1);
        return r;
      }
    }
  }

  std::vector<std::size_t> preimage(alphabet_size, unset);
  for (std::size_t l = 0; l < alphabet_size; ++l) {
    if (map[l] == unset) continue;
    if (preimage[map[l]] != unset) {
      SgExtendResult r;
      r.status = SgExtendStatus::not_injective;
      r.detail = "x" + std::to_string(preimage[map[l]] + 1) + " and x" +
                 std::to_string(l + 1) + " both map to x" + std::to_string(map[l] + 1);
      return r;
    }
    preimage[map[l]] = l;
  }

  // Lexicographically least completion on the unused letters.
  std::vector<std::size_t> free_src, free_dst;
  for (std::size_t l = 0; l < alphabet_size; ++l)
    if (map[l] == unset) free_src.push_back(l);
  for (std::size_t l = 0; l < alphabet_size; ++l)
    if (preimage[l] == unset) free_dst.push_back(l);
  for (std::size_t i = 0; i < free_src.size(); ++i) map[free_src[i]] = free_dst[i];

  SgExtendResult r;
  r.status = SgExtendStatus::ok;
  r.bijection = std::move(map);
  return r;
}

FWord FWord::reduce(const std::vector<int>& letters) {
  FWord w;
  for (int l : letters) {
    if (l == 0) throw validation_error("0 is not a generator letter");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

FWord FWord::inverse() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (std::size_t i = letters_.size(); i-- > 0;) out.push_back(-letters_[i]);
  FWord w;
  w.letters_ = std::move(out); // reversal of a reduced word is reduced
  return w;
}

FWord FWord::concat(const FWord& u, const FWord& v) {
  std::vector<int> all = u.letters_;
  all.insert(all.end(), v.letters_.begin(), v.letters_.end());
  return reduce(all);
}

FWord FWord::pow(int e) const {
  FWord base = e < 0 ? inverse() : *this;
  FWord acc;
  for (int i = 0; i < std::abs(e); ++i) acc = concat(acc, base);
  return acc;
}

FWord apply_f2_endo(const std::array<FWord, 2>& images, const FWord& w) {
  FWord out;
  for (int l : w.letters()) {
    int g = std::abs(l);
    if (g < 1 || g > 2)
      throw validation_error("word uses a generator other than x1, x2");
    const FWord& img = images[static_cast<std::size_t>(g - 1)];
    out = FWord::concat(out, l > 0 ? img : img.inverse());
  }
  return out;
}

std::pair<long long, long long> abelianize(const FWord& w) {
  long long l = 0, m = 0;
  for (int letter : w.letters()) {
    int g = std::abs(letter);
    if (g < 1 || g > 2)
      throw validation_error("word uses a generator other than x1, x2");
    (g == 1 ? l : m) += letter > 0 ? 1 : -1;
  }
  return {l, m};
}

Perm3 Perm3::from_one_line(const std::array<int, 3>& images) {
  std::array<bool, 3> seen{false, false, false};
  for (int v : images) {
    if (v < 1 || v > 3 || seen[v - 1])
      throw validation_error("not a permutation of {1,2,3}");
    seen[v - 1] = true;
  }
  Perm3 p;
  p.img_ = images;
  return p;
}

Perm3 Perm3::compose_lr(const Perm3& u, const Perm3& v) {
  Perm3 r;
  for (int i = 1; i <= 3; ++i) r.img_[i - 1] = v.apply(u.apply(i));
  return r;
}

Perm3 Perm3::inverse() const {
  Perm3 r;
  for (int i = 1; i <= 3; ++i) r.img_[img_[i - 1] - 1] = i;
  return r;
}

Perm3 Perm3::pow(int e) const {
  Perm3 base = e < 0 ? inverse() : *this;
  Perm3 acc;
  for (int i = 0; i < std::abs(e); ++i) acc = compose_lr(acc, base);
  return acc;
}

bool Perm3::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return inversions % 2 == 0;
}

std::string Perm3::one_line() const {
  std::string s = "(";
  for (int v : img_) s += static_cast<char>('0' + v);
  return s + ")";
}

std::vector<Perm3> Perm3::all() {
  std::array<int, 3> v{1, 2, 3};
  std::vector<Perm3> out;
  do {
    out.push_back(from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm3 s3_image(const FWord& w) {
  const Perm3 g1 = Perm3::from_one_line({2, 1, 3});
  const Perm3 g2 = Perm3::from_one_line({1, 3, 2});
  Perm3 acc;
  for (int l : w.letters()) {
    int g = std::abs(l);
    if (g < 1 || g > 2)
      throw validation_error("word uses a generator other than x1, x2");
    Perm3 step = g == 1 ? g1 : g2;
    if (l < 0) step = step.inverse();
    acc = Perm3::compose_lr(acc, step);
  }
  return acc;
}

bool F2Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string F2Report::to_text() const {
  std::string out = "rank-2 free group counterexample replay\n";
  std::size_t ok = 0;
  for (const auto& c : checks) {
    out += c.passed ? "  [PASS] " : "  [FAIL] ";
    out += c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    if (c.passed) ++ok;
  }
  out += "overall: ";
  out += passed() ? "PASS" : "FAIL";
  out += " (" + std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks)\n";
  return out;
}

namespace {

std::string format_fword(const FWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l > 0 ? 'x' : 'X';
    out += std::to_string(std::abs(l));
  }
  return out;
}

std::set<Perm3> closure(const Perm3& p, const Perm3& q) {
  std::set<Perm3> sub{Perm3(), p, q};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm3> cur(sub.begin(), sub.end());
    for (const auto& x : cur)
      for (const auto& y : cur)
        if (sub.insert(Perm3::compose_lr(x, y)).second) grew = true;
  }
  return sub;
}

// All reduced words of length <= 2 over x1, x2 and inverses.
std::vector<FWord> short_words() {
  std::vector<FWord> out{FWord()};
  for (int a : {1, -1, 2, -2}) {
    out.push_back(FWord::reduce({a}));
    for (int b : {1, -1, 2, -2})
      if (b != -a) out.push_back(FWord::reduce({a, b}));
  }
  return out;
}

FWord relation_word(const FWord& w1, const FWord& w2) {
  // w1^2 w2 w1^-1 w2
  FWord r = FWord::concat(w1.pow(2), w2);
  r = FWord::concat(r, w1.pow(-1));
  return FWord::concat(r, w2);
}

} // namespace

F2Report verify_f2_counterexample() {
  F2Report rep;
  auto add = [&rep](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const FWord a = FWord::reduce({1, 1, 2, -1, 2});
  const FWord b = FWord::reduce({1, 2});
  const std::array<FWord, 2> sigma{FWord::reduce({1, 2}), FWord()};
  const std::array<FWord, 2> tau{FWord::reduce({1, 1, 2}), FWord::reduce({-1, 2})};

  FWord sa = apply_f2_endo(sigma, a);
  add("sigma sends a to b", sa == b, "sigma(a) = " + format_fword(sa));
  FWord tb = apply_f2_endo(tau, b);
  add("tau sends b to a", tb == a, "tau(b) = " + format_fword(tb));

  auto [la, ma] = abelianize(a);
  add("abelianization of a", la == 1 && ma == 2,
      "(" + std::to_string(la) + ", " + std::to_string(ma) + ")");
  auto [lb, mb] = abelianize(b);
  add("abelianization of b", lb == 1 && mb == 1,
      "(" + std::to_string(lb) + ", " + std::to_string(mb) + ")");

  // Exponent sums of w1^2 w2 w1^-1 w2 are l_i + 2 m_i; with target b both
  // must equal 1, forcing the x1-sums of w1 odd.
  bool hom_ok = true;
  for (const auto& w1 : short_words())
    for (const auto& w2 : short_words()) {
      auto [l1, l2] = abelianize(w1);
      auto [m1, m2] = abelianize(w2);
      auto [r1, r2] = abelianize(relation_word(w1, w2));
      if (r1 != l1 + 2 * m1 || r2 != l2 + 2 * m2) hom_ok = false;
    }
  bool parity_ok = true;
  for (long long m = -10; m <= 10; ++m)
    if ((1 - 2 * m) % 2 == 0) parity_ok = false;
  add("exponent-sum constraint", hom_ok && parity_ok,
      "sums of w1^2 w2 w1^-1 w2 are (l1+2m1, l2+2m2); both must be 1, so l1, l2 are odd");

  const Perm3 gb = s3_image(b);
  bool table_ok =
      s3_image(FWord::reduce({1})) == Perm3::from_one_line({2, 1, 3}) &&
      s3_image(FWord::reduce({2})) == Perm3::from_one_line({1, 3, 2}) &&
      s3_image(FWord::reduce({1, 1})).is_identity() &&
      s3_image(FWord::reduce({2, 2})).is_identity() &&
      gb == Perm3::from_one_line({3, 1, 2}) &&
      s3_image(FWord::reduce({2, 1})) == Perm3::from_one_line({2, 3, 1}) &&
      s3_image(FWord::reduce({1, 2, 1})) == Perm3::from_one_line({3, 2, 1}) &&
      s3_image(FWord::reduce({2, 1, 2})) == Perm3::from_one_line({3, 2, 1}) &&
      s3_image(FWord::reduce({1, 2, 1, 2})) == s3_image(FWord::reduce({2, 1})) &&
      s3_image(FWord::reduce({2, 1, 2, 1})) == s3_image(FWord::reduce({1, 2}));
  add("permutation images of short words", table_ok,
      "gamma(x1 x2) = " + s3_image(FWord::reduce({1, 2})).one_line() +
          ", gamma(x2 x1) = " + s3_image(FWord::reduce({2, 1})).one_line() +
          ", gamma(x1 x2 x1) = " + s3_image(FWord::reduce({1, 2, 1})).one_line());

  // Sign of P^2 Q P^-1 Q equals the sign of P; the image of b is even, so
  // the image of w1 is even, and it cannot be the identity or the images
  // would not generate the whole group.
  bool sign_ok = true;
  for (const auto& p : Perm3::all())
    for (const auto& q : Perm3::all()) {
      Perm3 rel = Perm3::compose_lr(
          Perm3::compose_lr(Perm3::compose_lr(p.pow(2), q), p.inverse()), q);
      if (rel.is_even() != p.is_even()) sign_ok = false;
    }
  std::vector<Perm3> w1_candidates;
  for (const auto& p : Perm3::all()) {
    if (!p.is_even() || p.is_identity()) continue;
    bool generates_with_something = false;
    for (const auto& q : Perm3::all())
      if (closure(p, q).size() == 6) generates_with_something = true;
    if (generates_with_something) w1_candidates.push_back(p);
  }
  bool w1_ok = sign_ok && gb.is_even() && w1_candidates.size() == 2 &&
               w1_candidates[0] == Perm3::from_one_line({2, 3, 1}) &&
               w1_candidates[1] == Perm3::from_one_line({3, 1, 2});
  std::string w1_detail = "sign(P^2 Q P^-1 Q) = sign(P) on all 36 pairs; candidates";
  for (const auto& p : w1_candidates) w1_detail += " " + p.one_line();
  add("candidates for the image of w1", w1_ok, w1_detail);

  std::vector<Perm3> w2_candidates;
  for (const auto& q : Perm3::all()) {
    bool generates_with_all = true;
    for (const auto& p : w1_candidates)
      if (closure(p, q).size() != 6) generates_with_all = false;
    if (generates_with_all) w2_candidates.push_back(q);
  }
  bool w2_ok = w2_candidates.size() == 3;
  for (const auto& q : w2_candidates)
    if (q.is_even()) w2_ok = false;
  // The three candidates are exactly the images of x1, x2, x1 x2 x1.
  w2_ok = w2_ok &&
          std::count(w2_candidates.begin(), w2_candidates.end(),
                     s3_image(FWord::reduce({1}))) == 1 &&
          std::count(w2_candidates.begin(), w2_candidates.end(),
                     s3_image(FWord::reduce({2}))) == 1 &&
          std::count(w2_candidates.begin(), w2_candidates.end(),
                     s3_image(FWord::reduce({1, 2, 1}))) == 1;
  std::string w2_detail = "transpositions";
  for (const auto& q : w2_candidates) w2_detail += " " + q.one_line();
  add("candidates for the image of w2", w2_ok, w2_detail);

  std::size_t contradictions = 0;
  std::string cases;
  for (const auto& p : w1_candidates)
    for (const auto& q : w2_candidates) {
      Perm3 rel = Perm3::compose_lr(
          Perm3::compose_lr(Perm3::compose_lr(p.pow(2), q), p.inverse()), q);
      if (rel.is_identity() && !(rel == gb)) ++contradictions;
      if (!cases.empty()) cases += ", ";
      cases += "P=" + p.one_line() + " Q=" + q.one_line() + " -> " + rel.one_line();
    }
  add("contradiction cases", contradictions == 6,
      std::to_string(contradictions) + "/6 pairs give the identity, never " +
          gb.one_line() + " [" + cases + "]");

  return rep;
}

} // namespace lgt
