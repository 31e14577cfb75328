#pragma once

#include "minorb/gauss.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace minorb {

using QVector = std::vector<Gauss>;

// Dense row-major matrix over Q(i).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    // E_ij in n x n.
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static QMatrix diagonal(const std::vector<Gauss>& d);
    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Gauss& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Gauss& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector column(std::size_t j) const;
    QVector flatten() const { return data_; }

    QMatrix transpose() const;
    QMatrix conj() const;
    QMatrix adjoint() const { return transpose().conj(); }
    Gauss trace() const;

    bool is_zero() const;
    // Largest |re|+|im| over entries; 0 exactly when the matrix is zero.
    double max_abs() const;

    Eigen::MatrixXcd to_eigen() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Gauss& s);

    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Gauss& s) { return a *= s; }
    friend QMatrix operator*(const Gauss& s, QMatrix a) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a) { return a * Gauss(-1); }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Gauss> data_;
};

QVector operator*(const QMatrix& a, const QVector& v);

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }
// tr(ab) without forming the product.
Gauss trace_product(const QMatrix& a, const QMatrix& b);

struct Rref {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(QMatrix m);
std::size_t rank(const QMatrix& m);
// Columns form a basis of the (complex) null space.
QMatrix kernel(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

// Null space over R of a map on real coordinates: the entries of m may be complex,
// but the unknowns are real. Returned basis is real.
QMatrix real_kernel(const QMatrix& m);

// Column-space utilities. A subspace is stored as a matrix whose columns span it.
QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
// Reduce a spanning set to a basis (keeps the pivot columns).
QMatrix column_basis(const QMatrix& span);
bool same_span(const QMatrix& a, const QMatrix& b);
bool contains_span(const QMatrix& big, const QMatrix& small);
QMatrix intersect(const QMatrix& a, const QMatrix& b);

// Hermitian positive definiteness via exact LDL* pivots.
bool is_positive_definite(const QMatrix& hermitian);

}  // namespace minorb
