#include "coxarr/numeric.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coxarr {

Tolerance::Tolerance(double abs_eps, double angle_eps) : abs_eps_(abs_eps), angle_eps_(angle_eps) {
    if (!(abs_eps > 0.0) || !(angle_eps > 0.0)) {
        throw PreconditionError("tolerance values must be positive");
    }
}

bool Tolerance::near(double a, double b) const { return std::abs(a - b) <= abs_eps_; }
bool Tolerance::near_zero(double a) const { return std::abs(a) <= abs_eps_; }
bool Tolerance::angle_near(double a, double b) const { return std::abs(a - b) <= angle_eps_; }

double VecD::norm() const {
    double s = 0.0;
    for (double x : c_) s += x * x;
    return std::sqrt(s);
}

VecD VecD::normalized(const Tolerance& tol) const {
    const double n = norm();
    if (n <= tol.abs_eps()) {
        throw DegenerateInput("cannot normalize near-zero vector " + to_string(*this));
    }
    // Leave vectors that are already unit to within rounding untouched so
    // that normalizing is idempotent and stored normals round-trip exactly.
    if (std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return *this;
    VecD out = *this;
    out *= 1.0 / n;
    return out;
}

VecD& VecD::operator+=(const VecD& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector addition with mixed dimensions");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

VecD& VecD::operator-=(const VecD& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector subtraction with mixed dimensions");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

VecD& VecD::operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
}

double dot(const VecD& a, const VecD& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("dot product with mixed dimensions");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

VecD cross(const VecD& a, const VecD& b) {
    if (a.dim() != 3 || b.dim() != 3) throw DimensionMismatch("cross product requires dimension 3");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

VecD unit_vector(std::size_t dim, std::size_t i) {
    VecD e(dim);
    e[i] = 1.0;
    return e;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(std::span<const VecD> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().dim();
    require_same_dim(rows, cols, "matrix rows");
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

VecD Matrix::row(std::size_t r) const {
    VecD v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

VecD Matrix::apply(const VecD& v) const {
    if (v.dim() != cols_) throw DimensionMismatch("matrix-vector product with mismatched sizes");
    VecD out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product with mismatched sizes");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

void require_same_dim(std::span<const VecD> vectors, std::size_t dim, const char* what) {
    for (const auto& v : vectors) {
        if (v.dim() != dim) {
            throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                                    ", got " + std::to_string(v.dim()));
        }
    }
}

std::size_t rank(std::span<const VecD> vectors, const Tolerance& tol) {
    if (vectors.empty()) return 0;
    const std::size_t d = vectors.front().dim();
    require_same_dim(vectors, d, "rank");

    Matrix m = Matrix::from_rows(vectors);
    std::size_t r = 0;
    for (std::size_t col = 0; col < d && r < m.rows(); ++col) {
        std::size_t piv = r;
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
        if (std::abs(m(piv, col)) <= tol.abs_eps()) continue;
        if (piv != r)
            for (std::size_t c = 0; c < d; ++c) std::swap(m(piv, c), m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const double f = m(i, col) / m(r, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < d; ++c) m(i, c) -= f * m(r, c);
        }
        ++r;
    }
    return r;
}

std::optional<VecD> solve_linear(const Matrix& m, const VecD& b, const Tolerance& tol) {
    const std::size_t n = m.rows();
    if (m.cols() != n || b.dim() != n) throw DimensionMismatch("solve_linear needs a square system");
    Matrix a = m;
    VecD x = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (std::abs(a(piv, col)) <= tol.abs_eps()) return std::nullopt;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(x[piv], x[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a(i, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(i, c) -= f * a(col, c);
            x[i] -= f * x[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

double angle_between(const VecD& u, const VecD& v, const Tolerance& tol) {
    if (u.dim() != v.dim()) throw DimensionMismatch("angle_between with mixed dimensions");
    const VecD a = u.normalized(tol);
    const VecD b = v.normalized(tol);
    // 2*atan2(|a-b|, |a+b|) stays accurate near 0 and pi where a clamped
    // arccos of the dot product loses half the significant digits.
    const double theta = 2.0 * std::atan2((a - b).norm(), (a + b).norm());
    return std::clamp(theta, 0.0, kPi);
}

double line_angle(const VecD& u, const VecD& v, const Tolerance& tol) {
    const double t = angle_between(u, v, tol);
    return std::min(t, kPi - t);
}

std::vector<VecD> orthonormal_span(std::span<const VecD> vectors, const Tolerance& tol) {
    std::vector<VecD> basis;
    for (const auto& v : vectors) {
        VecD w = v;
        // Two passes of modified Gram-Schmidt keep the basis orthogonal to
        // rounding level even for nearly dependent inputs.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) w -= dot(w, b) * b;
        if (w.norm() <= tol.abs_eps()) continue;
        basis.push_back(w.normalized(tol));
    }
    return basis;
}

std::vector<VecD> orthogonal_complement(std::span<const VecD> vectors, std::size_t dim,
                                        const Tolerance& tol) {
    require_same_dim(vectors, dim, "orthogonal_complement");
    std::vector<VecD> span = orthonormal_span(vectors, tol);
    const std::size_t span_dim = span.size();
    // Extend by the standard basis, largest residual first, to stay well conditioned.
    while (span.size() < dim) {
        VecD best;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < dim; ++i) {
            VecD w = unit_vector(dim, i);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : span) w -= dot(w, b) * b;
            if (w.norm() > best_norm) {
                best_norm = w.norm();
                best = w;
            }
        }
        span.push_back(best.normalized(tol));
    }
    return {span.begin() + static_cast<std::ptrdiff_t>(span_dim), span.end()};
}

std::string to_string(const VecD& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace coxarr
