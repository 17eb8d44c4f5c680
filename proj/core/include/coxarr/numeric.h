#pragma once

#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxarr {

inline constexpr double kPi = std::numbers::pi;

// Error hierarchy shared by every module.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct UnknownName : Error {
    using Error::Error;
};
/// A corner angle that matches none of the labels of the common face type.
struct LabelingError : Error {
    using Error::Error;
};

/// Central comparison policy. Every approximate comparison in the library
/// goes through one of these; no other epsilon exists.
class Tolerance {
public:
    Tolerance() = default;
    Tolerance(double abs_eps, double angle_eps);

    double abs_eps() const { return abs_eps_; }
    double angle_eps() const { return angle_eps_; }

    bool near(double a, double b) const;        // |a - b| <= abs_eps
    bool near_zero(double a) const;             // |a| <= abs_eps
    bool angle_near(double a, double b) const;  // |a - b| <= angle_eps

    friend bool operator==(const Tolerance&, const Tolerance&) = default;

private:
    double abs_eps_ = 1e-9;
    double angle_eps_ = 1e-9;
};

/// A d-dimensional real vector with value semantics.
class VecD {
public:
    VecD() = default;
    explicit VecD(std::size_t dim, double fill = 0.0) : c_(dim, fill) {}
    VecD(std::initializer_list<double> coords) : c_(coords) {}
    explicit VecD(std::vector<double> coords) : c_(std::move(coords)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    std::span<const double> coords() const { return c_; }

    double norm() const;
    /// Unit vector in the same direction; throws DegenerateInput when
    /// norm() <= tol.abs_eps().
    VecD normalized(const Tolerance& tol) const;

    VecD& operator+=(const VecD& o);
    VecD& operator-=(const VecD& o);
    VecD& operator*=(double s);

    friend VecD operator+(VecD a, const VecD& b) { return a += b; }
    friend VecD operator-(VecD a, const VecD& b) { return a -= b; }
    friend VecD operator*(VecD a, double s) { return a *= s; }
    friend VecD operator*(double s, VecD a) { return a *= s; }
    friend VecD operator-(VecD a) { return a *= -1.0; }
    friend bool operator==(const VecD&, const VecD&) = default;

private:
    std::vector<double> c_;
};

double dot(const VecD& a, const VecD& b);
VecD cross(const VecD& a, const VecD& b);  // dim 3 only

/// Unit basis vector e_i in dimension dim.
VecD unit_vector(std::size_t dim, std::size_t i);

/// Row-major dense matrix, used for basis changes and small solves.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::span<const VecD> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    VecD row(std::size_t r) const;
    Matrix transposed() const;
    VecD apply(const VecD& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

/// Dimension of the span of `vectors`, by Gaussian elimination with partial
/// pivoting; pivots with magnitude <= abs_eps count as zero.
std::size_t rank(std::span<const VecD> vectors, const Tolerance& tol);

/// Angle in [0, pi] between two nonzero vectors.
double angle_between(const VecD& u, const VecD& v, const Tolerance& tol);

/// Angle in [0, pi/2] between the lines spanned by u and v.
double line_angle(const VecD& u, const VecD& v, const Tolerance& tol);

/// Orthonormal basis of span(vectors), built by modified Gram-Schmidt in
/// input order. Vectors whose residual norm is <= abs_eps are skipped.
std::vector<VecD> orthonormal_span(std::span<const VecD> vectors, const Tolerance& tol);

/// Orthonormal basis of the orthogonal complement of span(vectors) in R^dim.
std::vector<VecD> orthogonal_complement(std::span<const VecD> vectors, std::size_t dim,
                                        const Tolerance& tol);

/// Solves the square system m x = b by partial pivoting; nullopt when a
/// pivot falls to abs_eps or below.
std::optional<VecD> solve_linear(const Matrix& m, const VecD& b, const Tolerance& tol);

/// Same-dimension check used at every public entry point.
void require_same_dim(std::span<const VecD> vectors, std::size_t dim, const char* what);

std::string to_string(const VecD& v);

}  // namespace coxarr
