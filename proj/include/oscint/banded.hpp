#ifndef OSCINT_BANDED_HPP
#define OSCINT_BANDED_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oscint/dense.hpp"

namespace oscint {

/// Counts complex floating-point operations in the banded solvers.
/// A multiply-add, a multiply or a division each count as one.
struct OpCounter {
  std::uint64_t ops = 0;
  void add(std::uint64_t n) noexcept { ops += n; }
};

/// Square complex matrix stored by diagonals.
///
/// Diagonal d (j - i = d, -lower <= d <= upper) is a contiguous vector of
/// length dim - |d|, indexed by min(i, j). Entries outside the band cannot be
/// written and read back as zero.
class BandedMatrix {
public:
  BandedMatrix(std::size_t dim, std::size_t lower, std::size_t upper);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

  bool in_band(std::size_t i, std::size_t j) const noexcept {
    return i < dim_ && j < dim_ && i <= j + lower_ && j <= i + upper_;
  }

  /// Entry (i, j); zero outside the band.
  cplx operator()(std::size_t i, std::size_t j) const noexcept {
    if (!in_band(i, j)) return {};
    return bands_[index(i, j)][i < j ? i : j];
  }

  /// Mutable in-band entry. Throws std::out_of_range outside the band.
  cplx& at(std::size_t i, std::size_t j);

  /// Diagonal with offset j - i.
  std::span<cplx> diagonal(std::ptrdiff_t offset);
  std::span<const cplx> diagonal(std::ptrdiff_t offset) const;

  ComplexVector multiply(std::span<const cplx> x) const;
  ComplexMatrix to_dense() const;
  double max_abs() const;

  /// entry(i,j) == conj(entry(j,i)) within tol and a real diagonal.
  bool is_hermitian(double tol = 0.0) const;

private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return j + lower_ - i;
  }

  std::size_t dim_;
  std::size_t lower_;
  std::size_t upper_;
  std::vector<ComplexVector> bands_;
};

/// Row-pivoted LU factors of a banded matrix.
///
/// U occupies the diagonal and lower + upper superdiagonals of the storage;
/// the multipliers of L sit in the subdiagonals in elimination order (rows
/// below a pivot are not re-permuted afterwards, as in LAPACK gbtrf).
class LUFactors {
public:
  LUFactors(BandedMatrix factors, std::vector<std::size_t> pivots,
            std::size_t lower)
      : factors_(std::move(factors)), pivots_(std::move(pivots)),
        lower_(lower) {}

  std::size_t dim() const noexcept { return factors_.dim(); }
  std::size_t lower() const noexcept { return lower_; }
  const BandedMatrix& storage() const noexcept { return factors_; }
  /// Row exchanged with row k at elimination step k.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

private:
  BandedMatrix factors_;
  std::vector<std::size_t> pivots_;
  std::size_t lower_;
};

/// Entries with magnitude below this are treated as exact zeros.
inline constexpr double kSingularThreshold = 1e-300;

/// Solves the upper-banded (lower == 0) system m x = rhs in one
/// back-substitution pass. Throws SingularMatrix naming the offending row.
ComplexVector upper_triangular_backsolve(const BandedMatrix& m,
                                         std::span<const cplx> rhs,
                                         OpCounter* counter = nullptr);

/// Banded LU with partial pivoting; fill-in stays within lower + upper
/// superdiagonals. Throws SingularMatrix with the failing column.
LUFactors banded_lu_partial_pivot(const BandedMatrix& m,
                                  OpCounter* counter = nullptr);

ComplexVector lu_solve(const LUFactors& factors, std::span<const cplx> rhs,
                       OpCounter* counter = nullptr);

struct NormalSystem {
  BandedMatrix matrix;  // G^H G, Hermitian with bandwidth upper(G)
  ComplexVector rhs;    // G^H rhs
};

/// Forms the normal equations of an upper-banded system entry by entry.
NormalSystem normal_system(const BandedMatrix& g, std::span<const cplx> rhs);

/// max_i |(m x - rhs)_i|
double residual_inf_norm(const BandedMatrix& m, std::span<const cplx> x,
                         std::span<const cplx> rhs);

}  // namespace oscint

#endif  // OSCINT_BANDED_HPP
