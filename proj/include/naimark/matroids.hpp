#pragma once

#include <vector>

#include "naimark/linalg.hpp"

namespace naimark {

inline constexpr int kMaxGroundSize = 16;

/// Matroid given by its ground-set size and basis family. Bases are held in
/// canonical form: each basis a strictly increasing list of 0-based indices,
/// the family sorted lexicographically, so equality is plain comparison.
class Matroid {
 public:
  /// Validates the basis axioms (nonempty family, equal sizes, exchange
  /// property) before constructing.
  static Matroid from_bases(int ground_size, std::vector<std::vector<int>> bases);

  int ground_size() const { return ground_size_; }
  int rank() const { return bases_.empty() ? 0 : static_cast<int>(bases_.front().size()); }
  const std::vector<std::vector<int>>& bases() const { return bases_; }

  bool operator==(const Matroid& other) const = default;

 private:
  Matroid(int ground_size, std::vector<std::vector<int>> bases)
      : ground_size_(ground_size), bases_(std::move(bases)) {}

  // Duality preserves the axioms, so the dual is built without re-certifying.
  friend Matroid gale_dual(const Matroid& m);

  int ground_size_;
  std::vector<std::vector<int>> bases_;
};

/// Matroid represented by the columns of `a`: rank r is the numerical rank of
/// the whole matrix and the bases are the r-subsets of columns whose smallest
/// singular value clears tol * max(sigma_max(a), 1). Fails loudly with
/// NonMatroidFamily if the computed family violates the basis axioms (a
/// tolerance artifact near degenerate configurations).
Matroid matroid_from_columns(const Matrix& a, double tol = kDefaultRankTol);

/// Gale dual: complements every basis within the ground set.
Matroid gale_dual(const Matroid& m);

/// Brute-force basis-exchange check over all ordered pairs. Throws
/// EmptyFamily / UnequalSizes for malformed input; returns false when the
/// exchange axiom fails.
bool check_basis_exchange(int ground_size, const std::vector<std::vector<int>>& candidate_bases);

/// True iff the column matroid of `b` is the Gale dual of the column matroid
/// of `a`.
bool is_gale_pair(const Matrix& a, const Matrix& b, double tol = kDefaultRankTol);
bool is_gale_pair(const PsdMember& a, const PsdMember& b, double tol = kDefaultRankTol);
bool is_gale_pair(const PsdMember& a, const ProjectionMember& b, double tol = kDefaultRankTol);

/// Checks that the kernel projection of `a` represents the Gale dual of the
/// matroid represented by `a`.
bool verify_prop1(const PsdMember& a, double tol = kDefaultRankTol);

}  // namespace naimark
