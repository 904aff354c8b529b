#pragma once

#include <vector>

#include "solvrep/cyclotomic.hpp"

namespace solvrep {

/// Small dense matrix over CycNumber.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), v_(rows * cols, CycNumber(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNumber(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycNumber& at(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    const CycNumber& at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : v_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[i] + b.v_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[i] - b.v_[i];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.v_.size(); ++i)
            if (a.v_[i] != b.v_[i]) return false;
        return true;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat scale(const CycNumber& c) const {
        Mat r = *this;
        for (auto& x : r.v_) x *= c;
        return r;
    }

    Mat pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Mat acc = identity(rows_), sq = *this;
        unsigned long e = static_cast<unsigned long>(k);
        while (e) {
            if (e & 1) acc = acc * sq;
            e >>= 1;
            if (e) sq = sq * sq;
        }
        return acc;
    }

    CycNumber trace() const {
        CycNumber t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// Exact inverse by Gauss-Jordan elimination; throws DivisionByZero on
    /// singular input.
    Mat inverse() const {
        const std::size_t n = rows_;
        Mat a = *this, r = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && a.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw DivisionByZero("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(r.at(piv, j), r.at(col, j));
                }
            CycNumber inv = a.at(col, col).inverse();
            for (std::size_t j = 0; j < n; ++j) {
                a.at(col, j) *= inv;
                r.at(col, j) *= inv;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || a.at(i, col).is_zero()) continue;
                CycNumber f = a.at(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a.at(i, j) -= f * a.at(col, j);
                    r.at(i, j) -= f * r.at(col, j);
                }
            }
        }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNumber> v_;
};

} // namespace solvrep
