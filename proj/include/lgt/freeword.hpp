#pragma once

// Words in free semigroups and in the free group of rank 2, plus permutations
// of {1,2,3}. Semigroup extension is decided by the forced letter alignment;
// the rank-2 counterexample is replayed as a sequence of mechanical checks.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lgt/errors.hpp"

namespace lgt {

// A non-empty word over letters 0..k-1.
class SgWord {
public:
  explicit SgWord(std::vector<std::size_t> letters);
  const std::vector<std::size_t>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool operator==(const SgWord& o) const { return letters_ == o.letters_; }

private:
  std::vector<std::size_t> letters_;
};

enum class SgExtendStatus { ok, length_mismatch, conflicting_alignment, not_injective };

struct SgExtendResult {
  SgExtendStatus status = SgExtendStatus::ok;
  std::vector<std::size_t> bijection; // letter -> letter, total on 0..k-1
  std::string detail;
  bool ok() const { return status == SgExtendStatus::ok; }
};

// The alphabet bijection extending a_i -> b_i, when one exists. The letter
// map is forced positionally; unused letters are completed by the
// lexicographically least bijection.
SgExtendResult semigroup_extend(std::size_t alphabet_size,
                                const std::vector<SgWord>& a,
                                const std::vector<SgWord>& b);

// A freely reduced word over signed generators: +i for x_i, -i for its
// inverse (i >= 1). The empty word is the identity.
class FWord {
public:
  FWord() = default;
  static FWord reduce(const std::vector<int>& letters);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  FWord inverse() const;
  static FWord concat(const FWord& u, const FWord& v);
  FWord pow(int e) const;
  bool operator==(const FWord& o) const { return letters_ == o.letters_; }

private:
  std::vector<int> letters_;
};

// Substitutes images for the two generators (inverting on negative letters)
// and reduces.
FWord apply_f2_endo(const std::array<FWord, 2>& images, const FWord& w);

// Exponent sums of x1 and x2.
std::pair<long long, long long> abelianize(const FWord& w);

// A permutation of {1,2,3} in one-line notation.
class Perm3 {
public:
  Perm3() : img_{1, 2, 3} {}
  static Perm3 from_one_line(const std::array<int, 3>& images);

  int apply(int x) const { return img_[x - 1]; }
  // Left-to-right composition: first u, then v.
  static Perm3 compose_lr(const Perm3& u, const Perm3& v);
  Perm3 inverse() const;
  Perm3 pow(int e) const;
  bool is_even() const;
  bool is_identity() const { return img_ == std::array<int, 3>{1, 2, 3}; }
  std::string one_line() const; // "(213)"
  bool operator==(const Perm3& o) const { return img_ == o.img_; }
  bool operator<(const Perm3& o) const { return img_ < o.img_; }

  static std::vector<Perm3> all();

private:
  std::array<int, 3> img_;
};

// The homomorphism sending x1 to (213) and x2 to (132), words composed left
// to right.
Perm3 s3_image(const FWord& w);

struct F2CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct F2Report {
  std::vector<F2CheckLine> checks;
  bool passed() const;
  std::string to_text() const;
};

// Replays the certificate that no automorphism of the rank-2 free group sends
// x1^2 x2 x1^-1 x2 to x1 x2, even though endomorphisms exist both ways.
F2Report verify_f2_counterexample();

} // namespace lgt
