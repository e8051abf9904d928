// Dense matrices: SMat over a ground field (exact), ZMat over 64-bit integers.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "tiltkit/scalar.hpp"

namespace tiltkit {

// Column-vector convention: an (r x c) matrix maps k^c -> k^r; composition is product.
class SMat {
  public:
    SMat() : rows_(0), cols_(0) {}
    SMat(int rows, int cols, FieldTag f)
        : rows_(rows), cols_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    static SMat identity(int n, FieldTag f) {
        SMat m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }
    static SMat from_rows(std::vector<std::vector<Scalar>> rows, FieldTag f) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        SMat m(r, c, f);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldTag field() const { return f_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend SMat operator+(const SMat& a, const SMat& b) {
        a.check_shape(b);
        SMat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend SMat operator-(const SMat& a, const SMat& b) {
        a.check_shape(b);
        SMat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend SMat operator*(const Scalar& c, const SMat& a) {
        SMat r = a;
        for (auto& x : r.a_) x *= c;
        return r;
    }
    friend SMat operator*(const SMat& a, const SMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        SMat r(a.rows_, b.cols_, a.f_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const SMat& a, const SMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    SMat transpose() const {
        SMat r(cols_, rows_, f_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + at(i, j).str();
            s += "]";
        }
        return s + "]";
    }

  private:
    void check_shape(const SMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }
    int rows_, cols_;
    FieldTag f_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(SMat& m);
int rank(const SMat& m);
// Basis of the right kernel {x : m x = 0}, as columns of the result.
SMat kernel_basis(const SMat& m);
// One solution x of m x = b, if any.
bool solve(const SMat& m, const SMat& b, SMat& x);
bool invertible(const SMat& m);
SMat inverse(const SMat& m);
// Horizontal / vertical concatenation.
SMat hcat(const SMat& a, const SMat& b);
SMat vcat(const SMat& a, const SMat& b);
// Pivot columns of m: a basis of the column space.
SMat column_space_basis(const SMat& m);
// True if the column spans coincide.
bool same_column_span(const SMat& a, const SMat& b);

// Integer matrix, same column-vector convention.
class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }
    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static ZMat from_rows(std::vector<std::vector<Int>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        ZMat m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend ZMat operator+(const ZMat& a, const ZMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        ZMat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend ZMat operator-(const ZMat& a, const ZMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        ZMat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend ZMat operator*(const ZMat& a, const ZMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        ZMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const ZMat& a, const ZMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    ZMat transpose() const {
        ZMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + at(i, j).get_str();
            s += "]";
        }
        return s + "]";
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

ZMat hcat(const ZMat& a, const ZMat& b);
ZMat vcat(const ZMat& a, const ZMat& b);
ZMat zmat_mod(const ZMat& a, const Int& m);

}  // namespace tiltkit
