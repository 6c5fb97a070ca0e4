#include "nervepool/homology.hpp"

#include <cstdint>

#include "nervepool/boundary.hpp"

namespace nervepool {

int rank_gf2(const SparseMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    const int words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(
        static_cast<std::size_t>(rows), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    for (const Triplet& t : m.entries()) {
        bits[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col) / 64] |=
            std::uint64_t{1} << (t.col % 64);
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        const std::size_t word = static_cast<std::size_t>(c) / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (bits[static_cast<std::size_t>(r)][word] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(bits[static_cast<std::size_t>(rank)], bits[static_cast<std::size_t>(pivot)]);
        for (int r = rank + 1; r < rows; ++r) {
            if (bits[static_cast<std::size_t>(r)][word] & mask) {
                for (int w = 0; w < words; ++w) {
                    bits[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] ^=
                        bits[static_cast<std::size_t>(rank)][static_cast<std::size_t>(w)];
                }
            }
        }
        ++rank;
    }
    return rank;
}

BettiVector betti(const SimplicialComplex& k) {
    BettiVector result;
    if (k.dim() < 0) {
        return result;
    }
    std::vector<int> ranks(static_cast<std::size_t>(k.dim()) + 2, 0);
    for (int p = 1; p <= k.dim(); ++p) {
        ranks[static_cast<std::size_t>(p)] = rank_gf2(boundary_matrix(k, p, false).matrix);
    }
    for (int p = 0; p <= k.dim(); ++p) {
        result.push_back(k.count(p) - ranks[static_cast<std::size_t>(p)] -
                         ranks[static_cast<std::size_t>(p) + 1]);
    }
    return result;
}

}  // namespace nervepool
