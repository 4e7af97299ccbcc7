#include "doctest.h"

#include "lgt/freeword.hpp"
#include "testutil.hpp"

using namespace lgt;
using namespace lgttest;

namespace {

SgWord sgw(std::initializer_list<std::size_t> letters) {
  return SgWord(std::vector<std::size_t>(letters));
}

std::vector<int> random_letters(Rng& rng, std::size_t len) {
  std::vector<int> out;
  for (std::size_t i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng.below(2));
    out.push_back(rng.flip() ? g : -g);
  }
  return out;
}

} // namespace

TEST_CASE("semigroup extension: pinned examples") {
  SUBCASE("identical words force nothing new") {
    auto r = semigroup_extend(3, {sgw({0, 1})}, {sgw({0, 1})});
    REQUIRE(r.ok());
    CHECK(r.bijection == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("shift with least completion") {
    auto r = semigroup_extend(3, {sgw({0, 1})}, {sgw({1, 2})});
    REQUIRE(r.ok());
    CHECK(r.bijection == std::vector<std::size_t>{1, 2, 0});
  }
  SUBCASE("collapsing alignment is rejected") {
    auto r = semigroup_extend(2, {sgw({0, 1})}, {sgw({0, 0})});
    CHECK(r.status == SgExtendStatus::not_injective);
  }
  SUBCASE("length mismatch is rejected") {
    auto r = semigroup_extend(2, {sgw({0})}, {sgw({0, 1})});
    CHECK(r.status == SgExtendStatus::length_mismatch);
  }
  SUBCASE("conflicting alignment is rejected") {
    auto r = semigroup_extend(2, {sgw({0, 0})}, {sgw({0, 1})});
    CHECK(r.status == SgExtendStatus::conflicting_alignment);
  }
}

TEST_CASE("semigroup extension agrees with the factorial oracle") {
  Rng rng(61);
  for (int i = 0; i < 400; ++i) {
    std::size_t k = 1 + rng.below(5);
    std::size_t words = 1 + rng.below(3);
    std::vector<SgWord> a, b;
    for (std::size_t w = 0; w < words; ++w) {
      std::size_t len = 1 + rng.below(4);
      std::vector<std::size_t> la, lb;
      for (std::size_t j = 0; j < len; ++j) {
        la.push_back(rng.below(k));
        lb.push_back(rng.below(k));
      }
      a.push_back(SgWord(la));
      // Bias towards solvable instances half the time.
      if (rng.flip()) {
        b.push_back(SgWord(lb));
      } else {
        std::vector<std::size_t> shifted;
        for (std::size_t l : la) shifted.push_back((l + 1) % k);
        b.push_back(SgWord(shifted));
      }
    }
    auto r = semigroup_extend(k, a, b);
    CHECK(r.ok() == brute_sg_extend(k, a, b));
    if (r.ok()) {
      REQUIRE(r.bijection.size() == k);
      std::vector<bool> hit(k, false);
      for (std::size_t img : r.bijection) {
        CHECK(!hit[img]);
        hit[img] = true;
      }
      std::vector<std::size_t> inverse(k);
      for (std::size_t l = 0; l < k; ++l) inverse[r.bijection[l]] = l;
      for (std::size_t w = 0; w < a.size(); ++w)
        for (std::size_t j = 0; j < a[w].size(); ++j) {
          CHECK(r.bijection[a[w].letters()[j]] == b[w].letters()[j]);
          CHECK(inverse[b[w].letters()[j]] == a[w].letters()[j]);
        }
    }
  }
}

TEST_CASE("free reduction") {
  CHECK(FWord::reduce({1, -1}).empty());
  CHECK(FWord::reduce({1, 2, -2, 1}) == FWord::reduce({1, 1}));
  CHECK(FWord::reduce({}).empty());
  CHECK_THROWS_AS(FWord::reduce({0}), validation_error);

  Rng rng(62);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> u = random_letters(rng, rng.below(8));
    std::vector<int> v = random_letters(rng, rng.below(8));
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    // Confluence: reducing the concatenation equals concatenating reductions.
    CHECK(FWord::reduce(uv) == FWord::concat(FWord::reduce(u), FWord::reduce(v)));
    // Idempotence.
    CHECK(FWord::reduce(FWord::reduce(u).letters()) == FWord::reduce(u));
  }
}

TEST_CASE("powers of free words") {
  FWord w = FWord::reduce({1, 2});
  CHECK(w.pow(0).empty());
  CHECK(w.pow(1) == w);
  CHECK(w.pow(2) == FWord::reduce({1, 2, 1, 2}));
  CHECK(w.pow(-1) == w.inverse());
  CHECK(FWord::concat(w.pow(3), w.pow(-3)).empty());
}

TEST_CASE("rank-2 endomorphisms move the certificate words") {
  const FWord a = FWord::reduce({1, 1, 2, -1, 2});
  const FWord b = FWord::reduce({1, 2});
  const std::array<FWord, 2> sigma{FWord::reduce({1, 2}), FWord()};
  const std::array<FWord, 2> tau{FWord::reduce({1, 1, 2}), FWord::reduce({-1, 2})};
  CHECK(apply_f2_endo(sigma, a) == b);
  CHECK(apply_f2_endo(tau, b) == a);

  const std::array<FWord, 2> identity{FWord::reduce({1}), FWord::reduce({2})};
  Rng rng(63);
  for (int i = 0; i < 100; ++i) {
    FWord w = FWord::reduce(random_letters(rng, rng.below(8)));
    CHECK(apply_f2_endo(identity, w) == w);
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianize(FWord::reduce({1, 1, 2, -1, 2})) == std::pair<long long, long long>{1, 2});
  CHECK(abelianize(FWord::reduce({1, 2})) == std::pair<long long, long long>{1, 1});
  CHECK(abelianize(FWord()) == std::pair<long long, long long>{0, 0});

  Rng rng(64);
  for (int i = 0; i < 200; ++i) {
    FWord u = FWord::reduce(random_letters(rng, rng.below(6)));
    FWord v = FWord::reduce(random_letters(rng, rng.below(6)));
    auto [ul, um] = abelianize(u);
    auto [vl, vm] = abelianize(v);
    auto [cl, cm] = abelianize(FWord::concat(u, v));
    CHECK(cl == ul + vl);
    CHECK(cm == um + vm);
    auto [il, im] = abelianize(u.inverse());
    CHECK(il == -ul);
    CHECK(im == -um);
  }
}

TEST_CASE("permutation images") {
  CHECK(s3_image(FWord::reduce({1, 2})).one_line() == "(312)");
  CHECK(s3_image(FWord::reduce({1, 1})).is_identity());
  CHECK(s3_image(FWord::reduce({2, 2})).is_identity());
  CHECK(s3_image(FWord::reduce({2, 1, 2})).one_line() == "(321)");
  CHECK(s3_image(FWord::reduce({2, 1})).one_line() == "(231)");

  Rng rng(65);
  for (int i = 0; i < 200; ++i) {
    FWord u = FWord::reduce(random_letters(rng, rng.below(6)));
    FWord v = FWord::reduce(random_letters(rng, rng.below(6)));
    CHECK(s3_image(FWord::concat(u, v)) ==
          Perm3::compose_lr(s3_image(u), s3_image(v)));
  }
}

TEST_CASE("perm3 sanity") {
  CHECK(Perm3::all().size() == 6);
  for (const auto& p : Perm3::all()) {
    CHECK(Perm3::compose_lr(p, p.inverse()).is_identity());
    CHECK(p.pow(0).is_identity());
  }
  CHECK_THROWS_AS(Perm3::from_one_line({1, 1, 3}), validation_error);
}

TEST_CASE("the rank-2 counterexample replay passes every check") {
  F2Report rep = verify_f2_counterexample();
  INFO(rep.to_text());
  CHECK(rep.passed());
  REQUIRE(rep.checks.size() == 9);
  // The exhaustive contradiction step covers all six candidate pairs.
  const F2CheckLine& last = rep.checks.back();
  CHECK(last.name == "contradiction cases");
  CHECK(last.detail.find("6/6") != std::string::npos);
  std::string text = rep.to_text();
  CHECK(text.find("overall: PASS (9/9 checks)") != std::string::npos);
}
