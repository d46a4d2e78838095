#include "multigrad/matrix.hpp"

#include <algorithm>
#include <utility>

namespace multigrad {

DenseMatrix DenseMatrix::identity(const Field& f, std::size_t k) {
    DenseMatrix m(f, k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = f.one();
    return m;
}

DenseMatrix DenseMatrix::from_columns(const Field& f, std::size_t rows,
                                      const std::vector<std::vector<Scalar>>& cols) {
    DenseMatrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Scalar> DenseMatrix::column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool DenseMatrix::equals(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!field_.eq(e_[k], o.e_[k])) return false;
    return true;
}

RrefResult rref(const DenseMatrix& a) {
    RrefResult out{0, {}, a};
    DenseMatrix& m = out.reduced;
    const Field& f = m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(piv, k), m.at(r, k));
        const Scalar s = f.inv(m.at(r, c));
        for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = f.mul(s, m.at(r, k));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const Scalar t = m.at(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m.at(i, k) = f.sub(m.at(i, k), f.mul(t, m.at(r, k)));
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length != rows");
    const Field& f = a.field();
    DenseMatrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivot_cols)
        if (p == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols(), f.zero());
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
        x[rr.pivot_cols[k]] = rr.reduced.at(k, a.cols());
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& a) {
    const Field& f = a.field();
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(a.cols(), f.zero());
        v[c] = f.one();
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = f.neg(rr.reduced.at(k, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const DenseMatrix& a) { return rref(a).rank; }

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    if (a.field() != b.field()) throw std::invalid_argument("mat_mul: field mismatch");
    const Field& f = a.field();
    DenseMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

std::vector<Scalar> mat_apply(const DenseMatrix& a, const std::vector<Scalar>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("apply: dimension mismatch");
    const Field& f = a.field();
    std::vector<Scalar> y(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!f.is_zero(a.at(i, k))) y[i] = f.add(y[i], f.mul(a.at(i, k), x[k]));
    return y;
}

DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
    if (a.field() != b.field()) throw std::invalid_argument("hconcat: field mismatch");
    DenseMatrix c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) c.at(r, k) = a.at(r, k);
        for (std::size_t k = 0; k < b.cols(); ++k) c.at(r, a.cols() + k) = b.at(r, k);
    }
    return c;
}

bool is_zero_vector(const Field& f, const std::vector<Scalar>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

}  // namespace multigrad
