#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace nervepool {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Coordinate-format sparse matrix. Entries are kept sorted by (row, col),
// duplicate-free, with no explicit zeros.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    // Sorts, merges duplicate positions by summation, drops zeros.
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    double at(int row, int col) const;
    SparseMatrix transpose() const;
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    std::vector<double> row_sums() const;
    std::vector<std::vector<double>> dense() const;
    // Copy with entries of magnitude below eps removed.
    SparseMatrix pruned(double eps) const;
    std::vector<std::pair<int, int>> support() const;
    bool same_support(const SparseMatrix& other) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Triplet> entries_;
};

// Dense row-major matrix used for simplex features.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

// left^T * mid * right. Contributions to each output entry are summed in
// ascending value order, so the result depends only on the multiset of
// contributions and is stable under reindexing of the contracted dimensions.
SparseMatrix sandwich_product(const SparseMatrix& left, const SparseMatrix& mid,
                              const SparseMatrix& right);

}  // namespace nervepool
