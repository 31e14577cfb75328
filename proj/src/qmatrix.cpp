#include "minorb/qmatrix.hpp"

#include <sstream>

namespace minorb {

std::string Gauss::str() const {
    std::ostringstream os;
    if (is_real()) {
        os << re_;
    } else if (sgn(re_) == 0) {
        os << im_ << "i";
    } else {
        os << re_ << (sgn(im_) > 0 ? "+" : "-") << abs(im_) << "i";
    }
    return os.str();
}

bool exact_sqrt(const mpq_class& q, mpq_class& root) {
    if (sgn(q) < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = mpq_class(rn, rd);
    root.canonicalize();
    return true;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Gauss>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

QVector QMatrix::column(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::conj() const {
    QMatrix c(*this);
    for (auto& x : c.data_) x = x.conj();
    return c;
}

Gauss QMatrix::trace() const {
    Gauss s;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

double QMatrix::max_abs() const {
    double m = 0;
    for (const auto& x : data_) m = std::max(m, x.abs_l1());
    return m;
}

Eigen::MatrixXcd QMatrix::to_eigen() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
    return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Gauss& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in *");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Gauss& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Gauss& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("QMatrix: shape mismatch in matrix-vector");
    QVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

Gauss trace_product(const QMatrix& a, const QMatrix& b) {
    Gauss s;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !b(k, i).is_zero()) s += a(i, k) * b(k, i);
    return s;
}

Rref rref(QMatrix m) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Gauss inv = Gauss(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Gauss factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix kernel(const QMatrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return QMatrix::from_columns(basis, m.cols());
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Rref r = rref(hstack(m, QMatrix::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

QMatrix real_kernel(const QMatrix& m) {
    QMatrix stacked(2 * m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            stacked(i, j) = m(i, j).re();
            stacked(m.rows() + i, j) = m(i, j).im();
        }
    return kernel(stacked);
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    QMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    QMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

QMatrix column_basis(const QMatrix& span) {
    if (span.cols() == 0) return span;
    Rref r = rref(span);
    std::vector<QVector> cols;
    for (auto p : r.pivots) cols.push_back(span.column(p));
    return QMatrix::from_columns(cols, span.rows());
}

bool contains_span(const QMatrix& big, const QMatrix& small) {
    if (small.cols() == 0) return true;
    if (big.cols() == 0) return small.is_zero();
    return rank(hstack(big, small)) == rank(big);
}

bool same_span(const QMatrix& a, const QMatrix& b) { return contains_span(a, b) && contains_span(b, a); }

QMatrix intersect(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return QMatrix(a.rows(), 0);
    // Solve a*s = b*t; intersection is a*s over the kernel.
    QMatrix ab = hstack(a, -b);
    QMatrix ker = kernel(ab);
    std::vector<QVector> cols;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        QVector s(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) s[i] = ker(i, k);
        cols.push_back(a * s);
    }
    return column_basis(QMatrix::from_columns(cols, a.rows()));
}

bool is_positive_definite(const QMatrix& h) {
    if (h.rows() != h.cols()) return false;
    QMatrix m = h;
    std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Gauss& p = m(k, k);
        if (!p.is_real() || sgn(p.re()) <= 0) return false;
        Gauss inv = Gauss(1) / p;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            Gauss f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

}  // namespace minorb
