#include "tiltkit/matrix.hpp"

namespace tiltkit {

std::vector<int> rref(SMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar c = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const SMat& m) {
    SMat t = m;
    return static_cast<int>(rref(t).size());
}

SMat kernel_basis(const SMat& m) {
    SMat t = m;
    std::vector<int> pivots = rref(t);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SMat k(m.cols(), static_cast<int>(free_cols.size()), m.field());
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = Scalar::one(m.field());
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            k.at(pivots[i], j) = -t.at(i, fc);
    }
    return k;
}

bool solve(const SMat& m, const SMat& b, SMat& x) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve shape mismatch");
    SMat aug = hcat(m, b);
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p >= m.cols()) return false;
    x = SMat(m.cols(), b.cols(), m.field());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = aug.at(i, m.cols() + j);
    return true;
}

bool invertible(const SMat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

SMat inverse(const SMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    SMat x;
    if (!solve(m, SMat::identity(m.rows(), m.field()), x))
        throw std::domain_error("matrix not invertible");
    return x;
}

SMat hcat(const SMat& a, const SMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    SMat r(a.rows(), a.cols() + b.cols(), a.field());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

SMat vcat(const SMat& a, const SMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat col mismatch");
    SMat r(a.rows() + b.rows(), a.cols(), a.field());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

SMat column_space_basis(const SMat& m) {
    SMat t = m;
    std::vector<int> pivots = rref(t);
    SMat r(m.rows(), static_cast<int>(pivots.size()), m.field());
    for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
        for (int i = 0; i < m.rows(); ++i) r.at(i, j) = m.at(i, pivots[j]);
    return r;
}

bool same_column_span(const SMat& a, const SMat& b) {
    if (a.rows() != b.rows()) return false;
    int ra = rank(a), rb = rank(b);
    return ra == rb && rank(hcat(a, b)) == ra;
}

ZMat hcat(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    ZMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

ZMat vcat(const ZMat& a, const ZMat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat col mismatch");
    ZMat r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

ZMat zmat_mod(const ZMat& a, const Int& m) {
    if (m <= 0) return a;
    ZMat r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = mod_floor(r.at(i, j), m);
    return r;
}

}  // namespace tiltkit
