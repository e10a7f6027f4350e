#include "cga/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cga {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Vec& vec_add_scaled(Vec& target, const Rational& scale, const Vec& other) {
    if (target.size() != other.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    if (scale.is_zero()) {
        return target;
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (!other[i].is_zero()) {
            target[i] += scale * other[i];
        }
    }
    return target;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged initializer for RationalMatrix");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool RationalMatrix::is_zero() const { return is_zero_vec(entries_); }

Vec RationalMatrix::row(std::size_t i) const {
    return Vec(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Vec RationalMatrix::col(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::from_flat(std::size_t rows, std::size_t cols, Vec flat) {
    if (flat.size() != rows * cols) {
        throw std::invalid_argument("flat entry count does not match shape");
    }
    RationalMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.entries_ = std::move(flat);
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Vec RationalMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero()) {
                acc += a * v[j];
            }
        }
        out[i] = std::move(acc);
    }
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (!o(k, j).is_zero()) {
                    out(i, j) += a * o(k, j);
                }
            }
        }
    }
    return out;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(entries_.begin() + a * cols_, entries_.begin() + (a + 1) * cols_,
                     entries_.begin() + b * cols_);
}

}  // namespace cga
