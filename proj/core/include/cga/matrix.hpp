#ifndef CGA_MATRIX_HPP
#define CGA_MATRIX_HPP

#include "cga/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cga {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec& vec_add_scaled(Vec& target, const Rational& scale, const Vec& other);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    /// Entries flattened row-major, so a dim x dim linear map and its
    /// coordinate vector in the dim^2 constraint systems agree index-for-index.
    const Vec& flat() const { return entries_; }
    static RationalMatrix from_flat(std::size_t rows, std::size_t cols, Vec flat);

    RationalMatrix transpose() const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    RationalMatrix& operator*=(const Rational& s);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    RationalMatrix operator*(const RationalMatrix& o) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec entries_;
};

}  // namespace cga

#endif
