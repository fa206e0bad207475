// Dense matrices over Q(q) with exact rank via fraction-free (Bareiss)
// elimination on a denominator-cleared polynomial matrix.
#ifndef QSH_MATRIX_HPP
#define QSH_MATRIX_HPP

#include <string>
#include <vector>

#include "qsh/scalars.hpp"

namespace qsh {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalFunction& at(int i, int j);
    const RationalFunction& at(int i, int j) const;

    bool is_zero() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    Matrix scaled(const RationalFunction& c) const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Column-wise application to a basis vector: returns column j.
    std::vector<RationalFunction> column(int j) const;

    int rank() const;

    // Entries specialized at q = q0; throws on a pole.
    std::vector<std::vector<Rational>> specialized(const Rational& q0) const;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RationalFunction> entries_;  // row-major
};

}  // namespace qsh

#endif
