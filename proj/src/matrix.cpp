#include "nervepool/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "nervepool/errors.hpp"

namespace nervepool {

namespace {

bool position_less(const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

// Offsets of each row's entry range, assuming entries sorted by row.
std::vector<std::size_t> row_offsets(const SparseMatrix& m) {
    std::vector<std::size_t> offsets(static_cast<std::size_t>(m.rows()) + 1, 0);
    for (const Triplet& t : m.entries()) {
        ++offsets[static_cast<std::size_t>(t.row) + 1];
    }
    for (std::size_t r = 1; r < offsets.size(); ++r) {
        offsets[r] += offsets[r - 1];
    }
    return offsets;
}

}  // namespace

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw MalformedInputError("matrix dimensions must be non-negative");
    }
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
    SparseMatrix m(rows, cols);
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
            throw MalformedInputError("triplet index out of bounds");
        }
    }
    std::sort(entries.begin(), entries.end(), position_less);
    for (const Triplet& t : entries) {
        if (!m.entries_.empty() && m.entries_.back().row == t.row &&
            m.entries_.back().col == t.col) {
            m.entries_.back().value += t.value;
        } else {
            m.entries_.push_back(t);
        }
    }
    std::erase_if(m.entries_, [](const Triplet& t) { return t.value == 0.0; });
    return m;
}

double SparseMatrix::at(int row, int col) const {
    const Triplet probe{row, col, 0.0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, position_less);
    if (it != entries_.end() && it->row == row && it->col == col) {
        return it->value;
    }
    return 0.0;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Triplet> flipped;
    flipped.reserve(entries_.size());
    for (const Triplet& t : entries_) {
        flipped.push_back({t.col, t.row, t.value});
    }
    return from_triplets(cols_, rows_, std::move(flipped));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw MalformedInputError("matrix product shape mismatch");
    }
    const std::vector<std::size_t> rhs_rows = row_offsets(rhs);
    std::vector<Triplet> out;
    std::map<int, double> acc;
    int current_row = -1;
    auto flush = [&]() {
        for (const auto& [col, value] : acc) {
            out.push_back({current_row, col, value});
        }
        acc.clear();
    };
    for (const Triplet& t : entries_) {
        if (t.row != current_row) {
            flush();
            current_row = t.row;
        }
        for (std::size_t i = rhs_rows[t.col]; i < rhs_rows[static_cast<std::size_t>(t.col) + 1];
             ++i) {
            const Triplet& u = rhs.entries_[i];
            acc[u.col] += t.value * u.value;
        }
    }
    flush();
    return from_triplets(rows_, rhs.cols_, std::move(out));
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> sums(static_cast<std::size_t>(rows_), 0.0);
    for (const Triplet& t : entries_) {
        sums[static_cast<std::size_t>(t.row)] += t.value;
    }
    return sums;
}

std::vector<std::vector<double>> SparseMatrix::dense() const {
    std::vector<std::vector<double>> d(static_cast<std::size_t>(rows_),
                                       std::vector<double>(static_cast<std::size_t>(cols_), 0.0));
    for (const Triplet& t : entries_) {
        d[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] = t.value;
    }
    return d;
}

SparseMatrix SparseMatrix::pruned(double eps) const {
    SparseMatrix m(rows_, cols_);
    for (const Triplet& t : entries_) {
        if (std::fabs(t.value) >= eps) {
            m.entries_.push_back(t);
        }
    }
    return m;
}

std::vector<std::pair<int, int>> SparseMatrix::support() const {
    std::vector<std::pair<int, int>> s;
    s.reserve(entries_.size());
    for (const Triplet& t : entries_) {
        s.emplace_back(t.row, t.col);
    }
    return s;
}

bool SparseMatrix::same_support(const SparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && support() == other.support();
}

SparseMatrix sandwich_product(const SparseMatrix& left, const SparseMatrix& mid,
                              const SparseMatrix& right) {
    if (left.rows() != mid.rows() || mid.cols() != right.rows()) {
        throw MalformedInputError("sandwich product shape mismatch");
    }
    const std::vector<std::size_t> left_rows = row_offsets(left);
    const std::vector<std::size_t> right_rows = row_offsets(right);
    std::map<std::pair<int, int>, std::vector<double>> buckets;
    for (const Triplet& b : mid.entries()) {
        for (std::size_t i = left_rows[b.row]; i < left_rows[static_cast<std::size_t>(b.row) + 1];
             ++i) {
            const Triplet& l = left.entries()[i];
            for (std::size_t j = right_rows[b.col];
                 j < right_rows[static_cast<std::size_t>(b.col) + 1]; ++j) {
                const Triplet& r = right.entries()[j];
                buckets[{l.col, r.col}].push_back(l.value * b.value * r.value);
            }
        }
    }
    std::vector<Triplet> out;
    out.reserve(buckets.size());
    for (auto& [pos, contributions] : buckets) {
        std::sort(contributions.begin(), contributions.end());
        double sum = 0.0;
        for (double c : contributions) {
            sum += c;
        }
        out.push_back({pos.first, pos.second, sum});
    }
    return SparseMatrix::from_triplets(left.cols(), right.cols(), std::move(out));
}

}  // namespace nervepool
