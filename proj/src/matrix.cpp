#include "qsh/matrix.hpp"

#include <stdexcept>

namespace qsh {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::domain_error("matrix dimensions must be nonnegative");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                    RationalFunction());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
    return m;
}

RationalFunction& Matrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(j)];
}

const RationalFunction& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(j)];
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const RationalFunction& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const RationalFunction& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
}

Matrix Matrix::scaled(const RationalFunction& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<RationalFunction> Matrix::column(int j) const {
    std::vector<RationalFunction> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

int Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;

    // clear denominators row by row; row scaling by a nonzero polynomial
    // does not change the rank
    std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(rows_),
                                           std::vector<Polynomial>(static_cast<std::size_t>(cols_)));
    for (int i = 0; i < rows_; ++i) {
        Polynomial lcm(1);
        for (int j = 0; j < cols_; ++j) {
            const Polynomial& den = at(i, j).den();
            lcm = (lcm * den).exact_div(Polynomial::gcd(lcm, den));
        }
        for (int j = 0; j < cols_; ++j) {
            const RationalFunction& e = at(i, j);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e.num() * lcm.exact_div(e.den());
        }
    }

    // Bareiss one-step elimination; every division below is exact
    int rank = 0;
    Polynomial prev(1);
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const std::size_t r = static_cast<std::size_t>(rank);
        for (int i = rank + 1; i < rows_; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            for (int j = c + 1; j < cols_; ++j) {
                const std::size_t sj = static_cast<std::size_t>(j);
                a[si][sj] = (a[r][static_cast<std::size_t>(c)] * a[si][sj] -
                             a[si][static_cast<std::size_t>(c)] * a[r][sj])
                                .exact_div(prev);
            }
            a[si][static_cast<std::size_t>(c)] = Polynomial();
        }
        prev = a[r][static_cast<std::size_t>(c)];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> Matrix::specialized(const Rational& q0) const {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_),
                                           std::vector<Rational>(static_cast<std::size_t>(cols_)));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j).evaluate_at(q0);
    return out;
}

std::string Matrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i + 1 < rows_) out += "\n";
    }
    return out;
}

}  // namespace qsh
