#include "naimark/matroids.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace naimark {

namespace {

double smallest_singular_of_subset(const Matrix& a, const std::vector<int>& cols) {
  Matrix sub(a.rows(), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < a.rows(); ++i) sub(i, static_cast<int>(j)) = a(i, cols[j]);
  return singular_values(sub).back();
}

uint32_t to_mask(const std::vector<int>& subset) {
  uint32_t mask = 0;
  for (int i : subset) mask |= 1u << i;
  return mask;
}

std::vector<std::vector<int>> canonicalize(std::vector<std::vector<int>> bases) {
  for (auto& basis : bases) std::sort(basis.begin(), basis.end());
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

void validate_family(int ground_size, const std::vector<std::vector<int>>& bases) {
  if (ground_size < 1 || ground_size > kMaxGroundSize) {
    throw Error(ErrorCode::TooManyColumns,
                "ground size must be in [1, " + std::to_string(kMaxGroundSize) + "]");
  }
  if (bases.empty()) throw Error(ErrorCode::EmptyFamily, "basis family is empty (axiom B1)");
  const size_t r = bases.front().size();
  for (const auto& basis : bases) {
    if (basis.size() != r) {
      throw Error(ErrorCode::UnequalSizes, "bases of sizes " + std::to_string(r) + " and " +
                                               std::to_string(basis.size()));
    }
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] < 0 || basis[i] >= ground_size) {
        throw Error(ErrorCode::InvalidArgument,
                    "basis element " + std::to_string(basis[i]) + " outside ground set");
      }
      if (i > 0 && basis[i] <= basis[i - 1]) {
        throw Error(ErrorCode::InvalidArgument, "basis elements must be strictly increasing");
      }
    }
  }
}

bool exchange_holds(int ground_size, const std::vector<std::vector<int>>& bases) {
  std::vector<uint32_t> masks;
  masks.reserve(bases.size());
  std::vector<bool> member(size_t{1} << ground_size, false);
  for (const auto& basis : bases) {
    const uint32_t m = to_mask(basis);
    masks.push_back(m);
    member[m] = true;
  }
  for (uint32_t ma : masks) {
    for (uint32_t mb : masks) {
      if (ma == mb) continue;
      const uint32_t only_a = ma & ~mb;
      const uint32_t only_b = mb & ~ma;
      for (uint32_t rest = only_a; rest != 0; rest &= rest - 1) {
        const uint32_t a_bit = rest & (0u - rest);
        const uint32_t base = ma ^ a_bit;
        bool found = false;
        for (uint32_t restb = only_b; restb != 0; restb &= restb - 1) {
          const uint32_t b_bit = restb & (0u - restb);
          if (member[base | b_bit]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

Matroid Matroid::from_bases(int ground_size, std::vector<std::vector<int>> bases) {
  bases = canonicalize(std::move(bases));
  validate_family(ground_size, bases);
  if (!exchange_holds(ground_size, bases)) {
    throw Error(ErrorCode::NonMatroidFamily, "family violates the basis exchange axiom");
  }
  return Matroid(ground_size, std::move(bases));
}

Matroid matroid_from_columns(const Matrix& a, double tol) {
  const int n = a.cols();
  if (n > kMaxGroundSize) {
    throw Error(ErrorCode::TooManyColumns, std::to_string(n) + " columns exceeds the " +
                                               std::to_string(kMaxGroundSize) +
                                               " enumeration bound");
  }
  const std::vector<double> sigma = singular_values(a);
  const double threshold = tol * std::max(sigma.front(), 1.0);
  int rank = 0;
  for (double s : sigma)
    if (s > threshold) ++rank;
  if (rank == 0) {
    throw Error(ErrorCode::ZeroMatrix, "all columns vanish at this tolerance");
  }

  // All rank-subsets in lexicographic order; the family comes out canonical.
  std::vector<std::vector<int>> bases;
  std::vector<int> subset(rank);
  for (int i = 0; i < rank; ++i) subset[i] = i;
  while (true) {
    if (smallest_singular_of_subset(a, subset) > threshold) bases.push_back(subset);
    int i = rank - 1;
    while (i >= 0 && subset[i] == n - rank + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < rank; ++j) subset[j] = subset[j - 1] + 1;
  }

  if (bases.empty()) {
    throw Error(ErrorCode::NonMatroidFamily,
                "rank " + std::to_string(rank) + " detected but no independent subset passed"
                " the threshold");
  }
  if (!exchange_holds(n, bases)) {
    throw Error(ErrorCode::NonMatroidFamily,
                "computed family violates basis exchange (tolerance artifact)");
  }
  return Matroid::from_bases(n, std::move(bases));
}

Matroid gale_dual(const Matroid& m) {
  std::vector<std::vector<int>> dual;
  dual.reserve(m.bases().size());
  for (const auto& basis : m.bases()) {
    std::vector<int> complement;
    complement.reserve(m.ground_size() - basis.size());
    size_t pos = 0;
    for (int x = 0; x < m.ground_size(); ++x) {
      if (pos < basis.size() && basis[pos] == x) {
        ++pos;
      } else {
        complement.push_back(x);
      }
    }
    dual.push_back(std::move(complement));
  }
  std::sort(dual.begin(), dual.end());
  return Matroid(m.ground_size(), std::move(dual));
}

bool check_basis_exchange(int ground_size,
                          const std::vector<std::vector<int>>& candidate_bases) {
  auto bases = canonicalize(candidate_bases);
  validate_family(ground_size, bases);
  return exchange_holds(ground_size, bases);
}

bool is_gale_pair(const Matrix& a, const Matrix& b, double tol) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "Gale pair needs equal ground sizes");
  }
  return matroid_from_columns(b, tol) == gale_dual(matroid_from_columns(a, tol));
}

bool is_gale_pair(const PsdMember& a, const PsdMember& b, double tol) {
  return is_gale_pair(a.mat(), b.mat(), tol);
}

bool is_gale_pair(const PsdMember& a, const ProjectionMember& b, double tol) {
  return is_gale_pair(a.mat(), b.mat(), tol);
}

bool verify_prop1(const PsdMember& a, double tol) {
  return is_gale_pair(a, kernel_projection(a.spectrum(), tol), tol);
}

}  // namespace naimark
