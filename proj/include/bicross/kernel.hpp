// Dense exact linear algebra used by every other module.
#pragma once

#include "bicross/error.hpp"
#include "bicross/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bicross {

/// Dense coordinate vector over the rationals.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : c_(n) {}
    Vector(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit Vector(std::vector<Rational> xs) : c_(std::move(xs)) {}

    static Vector basis(std::size_t n, std::size_t i) {
        Vector v(n);
        v[i] = 1;
        return v;
    }

    [[nodiscard]] std::size_t size() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const std::vector<Rational>& data() const { return c_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
        return *this;
    }
    Vector& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    /// this += s * o
    void axpy(const Rational& s, const Vector& o) {
        check(o);
        if (s.is_zero()) return;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!o.c_[i].is_zero()) c_[i].add_product(s, o.c_[i]);
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator-(Vector a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    void check(const Vector& o) const {
        if (o.c_.size() != c_.size())
            throw Error(ErrorKind::DimensionMismatch,
                        "vector sizes " + std::to_string(c_.size()) + " and " + std::to_string(o.c_.size()));
    }
    std::vector<Rational> c_;
};

/// Flattened tensor product of two coordinate vectors, index a * |b| + b.
inline Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

/// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows)
                throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    [[nodiscard]] Vector apply(const Vector& v) const {
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
        Vector out(rows_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c].is_zero()) continue;
            for (std::size_t r = 0; r < rows_; ++r) {
                const auto& x = (*this)(r, c);
                if (!x.is_zero()) out[r].add_product(x, v[c]);
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j));
            }
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Kronecker product, consistent with kron() on vectors.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

/// Gauss-Jordan inverse. Throws SingularMatrix or DimensionMismatch.
inline Matrix invert_matrix(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "cannot invert a non-square matrix");
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorKind::SingularMatrix, "matrix has rank below " + std::to_string(n));
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const Rational scale = Rational(1) / a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
                if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

/// Ordered basis with display labels.
struct BasedSpace {
    std::vector<std::string> labels;

    BasedSpace() = default;
    explicit BasedSpace(std::vector<std::string> l) : labels(std::move(l)) {}
    static BasedSpace numbered(const std::string& prefix, std::size_t n) {
        BasedSpace s;
        for (std::size_t i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i));
        return s;
    }
    [[nodiscard]] std::size_t dim() const { return labels.size(); }
    friend bool operator==(const BasedSpace&, const BasedSpace&) = default;
};

/// Dense rank-3 array of rationals, index [i][j][k].
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : d_{d0, d1, d2}, a_(d0 * d1 * d2) {}

    [[nodiscard]] std::size_t dim(int axis) const { return d_[axis]; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * d_[1] + j) * d_[2] + k]; }
    [[nodiscard]] const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * d_[1] + j) * d_[2] + k];
    }
    /// Slice [i][j][*] as a vector.
    [[nodiscard]] Vector fiber(std::size_t i, std::size_t j) const {
        Vector v(d_[2]);
        for (std::size_t k = 0; k < d_[2]; ++k) v[k] = at(i, j, k);
        return v;
    }
    void set_fiber(std::size_t i, std::size_t j, const Vector& v) {
        if (v.size() != d_[2]) throw Error(ErrorKind::DimensionMismatch, "fiber length");
        for (std::size_t k = 0; k < d_[2]; ++k) at(i, j, k) = v[k];
    }
    /// Slice [i][*][*] flattened as j * d2 + k.
    [[nodiscard]] Vector slab(std::size_t i) const {
        Vector v(d_[1] * d_[2]);
        for (std::size_t j = 0; j < d_[1] * d_[2]; ++j) v[j] = a_[i * d_[1] * d_[2] + j];
        return v;
    }
    void set_slab(std::size_t i, const Vector& v) {
        if (v.size() != d_[1] * d_[2]) throw Error(ErrorKind::DimensionMismatch, "slab length");
        for (std::size_t j = 0; j < v.size(); ++j) a_[i * d_[1] * d_[2] + j] = v[j];
    }
    [[nodiscard]] bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    [[nodiscard]] const std::vector<Rational>& data() const { return a_; }
    std::vector<Rational>& data() { return a_; }
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.d_[0] == b.d_[0] && a.d_[1] == b.d_[1] && a.d_[2] == b.d_[2] && a.a_ == b.a_; }

private:
    std::size_t d_[3] = {0, 0, 0};
    std::vector<Rational> a_;
};

/// Linear map stored as coeffs[domain][codomain].
struct LinearMapTensor {
    BasedSpace domain, codomain;
    Matrix coeffs;  // rows = domain, cols = codomain

    LinearMapTensor() = default;
    LinearMapTensor(BasedSpace d, BasedSpace c)
        : domain(std::move(d)), codomain(std::move(c)), coeffs(domain.dim(), codomain.dim()) {}

    [[nodiscard]] Vector apply(const Vector& v) const {
        if (v.size() != domain.dim()) throw Error(ErrorKind::DimensionMismatch, "linear map input");
        Vector out(codomain.dim());
        for (std::size_t i = 0; i < domain.dim(); ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t k = 0; k < codomain.dim(); ++k)
                if (!coeffs(i, k).is_zero()) out[k].add_product(v[i], coeffs(i, k));
        }
        return out;
    }
};

/// Bilinear map (e_i, f_j) -> sum_k coeffs[i][j][k] g_k.
struct BilinearMapTensor {
    BasedSpace left, right, codomain;
    Tensor3 coeffs;

    BilinearMapTensor() = default;
    BilinearMapTensor(BasedSpace l, BasedSpace r, BasedSpace c)
        : left(std::move(l)), right(std::move(r)), codomain(std::move(c)),
          coeffs(left.dim(), right.dim(), codomain.dim()) {}

    void check_shape() const {
        if (coeffs.dim(0) != left.dim() || coeffs.dim(1) != right.dim() || coeffs.dim(2) != codomain.dim())
            throw Error(ErrorKind::ShapeMismatch, "bilinear tensor shape does not match its spaces");
    }
};

/// Evaluates a bilinear map on coordinate vectors.
inline Vector eval_bilinear(const BilinearMapTensor& b, const Vector& u, const Vector& v) {
    const auto& t = b.coeffs;
    if (u.size() != t.dim(0) || v.size() != t.dim(1))
        throw Error(ErrorKind::DimensionMismatch, "bilinear map arguments");
    Vector out(t.dim(2));
    for (std::size_t i = 0; i < t.dim(0); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.dim(1); ++j) {
            if (v[j].is_zero()) continue;
            const Rational s = u[i] * v[j];
            for (std::size_t k = 0; k < t.dim(2); ++k)
                if (!t.at(i, j, k).is_zero()) out[k].add_product(s, t.at(i, j, k));
        }
    }
    return out;
}

/// Two complementary subspaces of an ambient space; bases are the columns
/// of m_basis and h_basis.
struct SubspacePair {
    BasedSpace ambient;
    Matrix m_basis;  // ambient.dim x m_dim
    Matrix h_basis;  // ambient.dim x h_dim
    std::vector<std::string> m_labels, h_labels;  // optional; defaults are m0.., h0..

    SubspacePair() = default;
    SubspacePair(BasedSpace amb, const std::vector<Vector>& m_cols, const std::vector<Vector>& h_cols)
        : ambient(std::move(amb)),
          m_basis(Matrix::from_columns(m_cols, ambient.dim())),
          h_basis(Matrix::from_columns(h_cols, ambient.dim())) {}

    [[nodiscard]] std::size_t m_dim() const { return m_basis.cols(); }
    [[nodiscard]] std::size_t h_dim() const { return h_basis.cols(); }

    /// Columns: m basis followed by h basis.
    [[nodiscard]] Matrix adapted_matrix() const {
        const std::size_t n = ambient.dim();
        if (m_basis.rows() != n || h_basis.rows() != n || m_dim() + h_dim() != n)
            throw Error(ErrorKind::DimensionMismatch,
                        "subspace dimensions " + std::to_string(m_dim()) + "+" + std::to_string(h_dim()) +
                            " do not fit ambient dimension " + std::to_string(n));
        Matrix p(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < m_dim(); ++c) p(r, c) = m_basis(r, c);
            for (std::size_t c = 0; c < h_dim(); ++c) p(r, m_dim() + c) = h_basis(r, c);
        }
        return p;
    }
    [[nodiscard]] BasedSpace m_space() const {
        return m_labels.size() == m_dim() ? BasedSpace(m_labels) : BasedSpace::numbered("m", m_dim());
    }
    [[nodiscard]] BasedSpace h_space() const {
        return h_labels.size() == h_dim() ? BasedSpace(h_labels) : BasedSpace::numbered("h", h_dim());
    }
};

/// Splits v into its m- and h-coordinates. Throws SingularMatrix if the two
/// subspaces do not span the ambient space.
inline std::pair<Vector, Vector> project_components(const SubspacePair& pair, const Vector& v) {
    if (v.size() != pair.ambient.dim()) throw Error(ErrorKind::DimensionMismatch, "vector is not in the ambient space");
    const Matrix inv = invert_matrix(pair.adapted_matrix());
    const Vector c = inv.apply(v);
    Vector m(pair.m_dim()), h(pair.h_dim());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = c[i];
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = c[m.size() + i];
    return {m, h};
}

}  // namespace bicross
