#pragma once

// Exact integer-lattice algebra: matrices over BigInt, Smith normal form
// with a deterministic pivoting rule, stacked bases of subgroups of Z^n,
// integer solving of endomorphism constraints, the automorphism-extension
// construction for free abelian groups, and the u/v formula families on
// tuples of integer vectors. No floating point anywhere.

#include <optional>
#include <vector>

#include "lgt/bigint.hpp"
#include "lgt/errors.hpp"

namespace lgt {

using IntVec = std::vector<BigInt>;

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> data; // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);

  BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  IntMatrix transposed() const;
  IntVec row(std::size_t i) const;
  IntVec mul_vec(const IntVec& v) const; // matrix * column vector

  bool operator==(const IntMatrix& o) const;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

BigInt determinant(const IntMatrix& m); // square matrices
bool is_unimodular(const IntMatrix& m);
IntMatrix inverse_unimodular(const IntMatrix& m); // throws if |det| != 1

struct SmithForm {
  IntMatrix u;                  // rows x rows, unimodular
  IntMatrix d;                  // rows x cols, diagonal with divisibility chain
  IntMatrix v;                  // cols x cols, unimodular
  std::vector<BigInt> invariants; // positive diagonal entries p1 | p2 | ...
};

// U * M * V = D, deterministic: pivots are the smallest-absolute-value
// nonzero entries of the working submatrix, ties broken by position.
SmithForm smith_normal_form(IntMatrix m);

struct StackedBasis {
  IntMatrix ambient;              // n x n unimodular; rows g1..gn
  std::vector<BigInt> invariants; // p1 | p2 | ... | pk, k = rank
  std::size_t rank() const { return invariants.size(); }
};

// A basis g1..gn of Z^dim and invariants p1..pk such that p1*g1, ..., pk*gk
// is a basis of the subgroup generated by the (possibly dependent) input
// vectors.
StackedBasis stacked_basis(std::size_t dim, const std::vector<IntVec>& generators);

// Membership of x in the subgroup of Z^n generated by the rows of gens.
bool lattice_member(const IntMatrix& gens, const IntVec& x);

// Some integer matrix sending each a_i to b_i (as column vectors), or
// nothing when the integer system has no solution. Canonical choice: the
// solution whose coordinates along the cokernel directions of the Smith
// decomposition are zero.
std::optional<IntMatrix> solve_endo(std::size_t dim, const std::vector<IntVec>& a,
                                    const std::vector<IntVec>& b);

struct ExtensionCertificate {
  IntMatrix phi; // unimodular, phi * a_i = b_i
  StackedBasis basis_a, basis_b;
  IntMatrix sigma, tau;            // endomorphisms a->b and b->a
  IntMatrix coords_forward;        // sigma(g_i) in the basis f (rows)
  IntMatrix coords_backward;       // tau(f_i) in the basis g (rows)
};

enum class ExtendStatus { ok, no_forward_endo, no_backward_endo };

struct ExtendResult {
  ExtendStatus status = ExtendStatus::ok;
  std::optional<ExtensionCertificate> certificate;
  bool ok() const { return status == ExtendStatus::ok; }
};

// Extends the correspondence a_i -> b_i to an automorphism of Z^dim when
// endomorphisms exist in both directions: combines the forward endomorphism
// on the stacked basis of <a> with a completion along the stacked basis of
// <b>. Throws internal_check_failed if a constructed certificate fails its
// own verification.
ExtendResult abelian_extend(std::size_t dim, const std::vector<IntVec>& a,
                            const std::vector<IntVec>& b);

// q1*g1 + ... + qn*gn != 0, for parameters q not all zero.
bool eval_u_formula(const std::vector<BigInt>& q, const std::vector<IntVec>& g);

// Whether the tuple g satisfies: every solution y of
// q1*g1+...+qn*gn + q0*y = 0 is an integer combination y = k1*g1+...+kn*gn
// with |ki * q0| <= |qi|. In the torsion-free ambient group the premise has
// at most one solution, so the check is finite.
bool eval_v_formula(const std::vector<BigInt>& q, const BigInt& q0,
                    const std::vector<IntVec>& g);

} // namespace lgt
