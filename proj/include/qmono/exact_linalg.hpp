#pragma once

#include <vector>

#include <Eigen/Core>

namespace qmono {

/// Reduced row echelon form over an exact field scalar, with the pivot
/// column of every pivot row. Plain Gauss-Jordan; pivots are the first
/// nonzero entry in each column, no magnitude heuristics.
template <typename Scalar>
struct RowEchelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivot_cols;
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> result;
  result.reduced = input;
  auto& m = result.reduced;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= factor * m(row, c);
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  return result;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivot_cols.size());
}

/// Columns form a basis of the kernel of m.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> null_space_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto echelon = row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : echelon.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }

  Matrix basis = Matrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    basis(fc, static_cast<Eigen::Index>(k)) = 1;
    for (std::size_t p = 0; p < echelon.pivot_cols.size(); ++p) {
      const Eigen::Index pc = echelon.pivot_cols[p];
      basis(pc, static_cast<Eigen::Index>(k)) = -echelon.reduced(static_cast<Eigen::Index>(p), fc);
    }
  }
  return basis;
}

/// Nullity = cols - rank.
template <typename Derived>
Eigen::Index null_space_dim(const Eigen::MatrixBase<Derived>& m) {
  return m.cols() - rank(m);
}

/// Whether v lies in the column span of basis_cols.
template <typename DerivedA, typename DerivedB>
bool in_column_span(const Eigen::MatrixBase<DerivedA>& basis_cols,
                    const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> augmented(basis_cols.rows(),
                                                                  basis_cols.cols() + 1);
  augmented.leftCols(basis_cols.cols()) = basis_cols;
  augmented.col(basis_cols.cols()) = v;
  return rank(augmented) == rank(basis_cols);
}

}  // namespace qmono
