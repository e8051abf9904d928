#include "tiltkit/smith.hpp"

#include <algorithm>

namespace tiltkit {

namespace {

void swap_rows(ZMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(ZMat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += c * row[b]
void add_row(ZMat& m, int a, int b, const Int& c) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}
// col[a] += c * col[b]
void add_col(ZMat& m, int a, int b, const Int& c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}
void negate_row(ZMat& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}
void negate_col(ZMat& m, int a) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) = -m.at(i, a);
}

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
    ZMat d = m;
    ZMat u = ZMat::identity(m.rows());
    ZMat v = ZMat::identity(m.cols());
    int n = std::min(d.rows(), d.cols());
    bool exhausted = false;
    for (int t = 0; t < n && !exhausted; ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing
            // submatrix. Re-picking the global minimum after every pass keeps
            // the reduction quotients, and with them the entries, small;
            // remainders are left in place rather than swapped up mid-pass so
            // unreduced tails never pass through the pivot row or column.
            int pi = -1, pj = -1;
            for (int i = t; i < d.rows(); ++i)
                for (int j = t; j < d.cols(); ++j)
                    if (d.at(i, j) != 0 && (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                exhausted = true;
                break;
            }
            if (pi != t) { swap_rows(d, pi, t); swap_rows(u, pi, t); }
            if (pj != t) { swap_cols(d, pj, t); swap_cols(v, pj, t); }
            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = div_round(d.at(i, t), d.at(t, t));
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(u, i, t, -q);
                }
                // Any nonzero remainder is at most half the pivot, so the
                // next pass picks a strictly smaller pivot: termination.
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = div_round(d.at(t, j), d.at(t, t));
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(v, j, t, -q);
                }
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide every remaining entry; fold an offender into
            // its row, which forces a nonzero remainder on the next pass.
            bool folded = false;
            for (int i = t + 1; i < d.rows() && !folded; ++i)
                for (int j = t + 1; j < d.cols() && !folded; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(u, t, i, 1);
                        folded = true;
                    }
            if (!folded) break;
        }
        if (!exhausted && d.at(t, t) < 0) { negate_row(d, t); negate_row(u, t); }
    }
    return {u, d, v};
}

ZMat hnf_columns(const ZMat& m) {
    ZMat h = m;
    int col = 0;
    for (int row = 0; row < h.rows() && col < h.cols(); ++row) {
        // Reduce row entries at columns >= col to a single gcd pivot at `col`.
        while (true) {
            int p = -1;
            for (int j = col; j < h.cols(); ++j)
                if (h.at(row, j) != 0 && (p < 0 || abs(h.at(row, j)) < abs(h.at(row, p)))) p = j;
            if (p < 0) break;
            if (p != col) swap_cols(h, p, col);
            bool clean = true;
            for (int j = col + 1; j < h.cols(); ++j) {
                if (h.at(row, j) == 0) continue;
                Int q = div_round(h.at(row, j), h.at(row, col));
                add_col(h, j, col, -q);
                if (h.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) negate_col(h, col);
        // Canonical reduction of earlier columns in this pivot row.
        for (int j = 0; j < col; ++j) {
            Int r = mod_floor(h.at(row, j), h.at(row, col));
            Int q = (h.at(row, j) - r) / h.at(row, col);
            if (q != 0) add_col(h, j, col, -q);
        }
        ++col;
    }
    ZMat out(h.rows(), col);
    for (int j = 0; j < col; ++j)
        for (int i = 0; i < h.rows(); ++i) out.at(i, j) = h.at(i, j);
    return out;
}

bool lattice_solve(const ZMat& hnf, const std::vector<Int>& x, std::vector<Int>& y) {
    if (static_cast<int>(x.size()) != hnf.rows()) throw std::invalid_argument("length mismatch");
    std::vector<Int> r = x;
    y.assign(hnf.cols(), 0);
    int col = 0;
    for (int row = 0; row < hnf.rows(); ++row) {
        if (col < hnf.cols() && hnf.at(row, col) != 0) {
            if (r[row] % hnf.at(row, col) != 0) return false;
            Int q = r[row] / hnf.at(row, col);
            y[col] = q;
            for (int i = 0; i < hnf.rows(); ++i) r[i] -= q * hnf.at(i, col);
            ++col;
        }
        if (r[row] != 0) return false;
    }
    return true;
}

bool lattice_contains(const ZMat& hnf, const std::vector<Int>& x) {
    std::vector<Int> y;
    return lattice_solve(hnf, x, y);
}

Int det_int(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows();
    SMat a(n, n, FieldTag{0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Scalar(Rat(m.at(i, j)));
    Scalar det = Scalar::one(FieldTag{0});
    for (int t = 0; t < n; ++t) {
        int p = -1;
        for (int i = t; i < n; ++i)
            if (!a.at(i, t).is_zero()) { p = i; break; }
        if (p < 0) return 0;
        if (p != t) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(t, j));
            det = -det;
        }
        det *= a.at(t, t);
        Scalar inv = a.at(t, t).inverse();
        for (int i = t + 1; i < n; ++i) {
            Scalar c = a.at(i, t) * inv;
            if (c.is_zero()) continue;
            for (int j = t; j < n; ++j) a.at(i, j) -= c * a.at(t, j);
        }
    }
    if (!det.value().is_integer()) throw std::logic_error("integer determinant expected");
    return det.value().num();
}

}  // namespace tiltkit
