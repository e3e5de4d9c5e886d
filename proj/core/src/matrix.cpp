#include "radcount/matrix.hpp"

#include <algorithm>
#include <cstring>

namespace radcount {
namespace {

// Gaussian elimination over F_q on a row-major buffer. Returns the rank.
// Pivots are chosen top-to-bottom, left-to-right, rows scaled to unit pivot.
int eliminate(const FieldTable& F, Fq* a, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[std::size_t(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j)
                std::swap(a[std::size_t(piv) * cols + j], a[std::size_t(r) * cols + j]);

        Fq* prow = a + std::size_t(r) * cols;
        Fq pinv = F.inv(prow[c]);
        if (pinv != 1) {
            const Fq* mrow = F.mul_row(pinv);
            for (int j = c; j < cols; ++j) prow[j] = mrow[prow[j]];
        }
        for (int i = r + 1; i < rows; ++i) {
            Fq* irow = a + std::size_t(i) * cols;
            Fq f = irow[c];
            if (f == 0) continue;
            const Fq* mrow = F.mul_row(f);
            for (int j = c; j < cols; ++j) irow[j] = F.sub(irow[j], mrow[prow[j]]);
        }
        ++r;
    }
    return r;
}

} // namespace

int rank_with_scratch(const FieldTable& F, const FqMatrix& m, std::vector<Fq>& scratch) {
    std::size_t n = std::size_t(m.rows()) * m.cols();
    scratch.resize(n);
    if (n) std::memcpy(scratch.data(), m.row(0), n);
    return eliminate(F, scratch.data(), m.rows(), m.cols());
}

int rank(const FieldTable& F, const FqMatrix& m) {
    std::vector<Fq> scratch;
    return rank_with_scratch(F, m, scratch);
}

int rank_transposed(const FieldTable& F, const FqMatrix& m) {
    // Transpose, then eliminate with pivot columns scanned right-to-left.
    // A deliberately different code path from eliminate() above.
    int rows = m.cols(), cols = m.rows();
    std::vector<Fq> a(std::size_t(rows) * cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[std::size_t(j) * cols + i] = m.at(i, j);

    int r = 0;
    for (int c = cols - 1; c >= 0 && r < rows; --c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[std::size_t(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(a[std::size_t(piv) * cols + j], a[std::size_t(r) * cols + j]);
        Fq pinv = F.inv(a[std::size_t(r) * cols + c]);
        for (int j = 0; j < cols; ++j)
            a[std::size_t(r) * cols + j] = F.mul(pinv, a[std::size_t(r) * cols + j]);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Fq f = a[std::size_t(i) * cols + c];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                a[std::size_t(i) * cols + j] =
                    F.sub(a[std::size_t(i) * cols + j], F.mul(f, a[std::size_t(r) * cols + j]));
        }
        ++r;
    }
    return r;
}

int nullity(const FieldTable& F, const FqMatrix& m) { return m.cols() - rank(F, m); }

} // namespace radcount
