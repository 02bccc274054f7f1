// complex_linalg.hpp - small dense complex matrices (dim 2..4) and Hermitian eigensolves

#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace starkqc::linalg {

using cdouble = std::complex<double>;

// Hermiticity admission tolerance (absolute, per entry).
inline constexpr double kHermTol = 1e-12;
// Eigenvalues of a density matrix below -kPsdClampTol are rejected as non-PSD;
// anything in [-kPsdClampTol, 0) is rounding debris and is clamped to zero.
inline constexpr double kPsdClampTol = 1e-10;

// Dense square complex matrix, dimension 2..4, value semantics.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);

    static Matrix zero(int n) { return Matrix(n); }
    static Matrix identity(int n);

    int dim() const { return n_; }
    cdouble& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const cdouble& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    Matrix adjoint() const;
    Matrix conjugate() const;
    cdouble trace() const;
    double max_abs() const;          // entrywise max modulus
    double frobenius_norm() const;
    bool is_hermitian(double tol = kHermTol) const;

private:
    int n_ = 0;
    std::array<cdouble, 16> e_{};
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cdouble s, const Matrix& a);
Matrix operator*(double s, const Matrix& a);

// Kronecker product; the result dimension a.dim()*b.dim() must stay <= 4.
Matrix kron(const Matrix& a, const Matrix& b);

// Pauli matrices in the (|1>, |0>) single-qubit basis (excited state first).
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity2();

// Hermitian matrix: entry(i,j) == conj(entry(j,i)) and real diagonal, both
// within kHermTol. Construction validates and throws std::invalid_argument on
// violation (including non-finite entries).
class HermMatrix {
public:
    explicit HermMatrix(const Matrix& m);
    static HermMatrix real_diagonal(std::initializer_list<double> d);
    static HermMatrix identity(int n) { return HermMatrix(Matrix::identity(n)); }

    int dim() const { return m_.dim(); }
    cdouble operator()(int i, int j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k is the eigenvector of values[k]
};

// Cyclic Jacobi rotations on the Hermitian matrix. Deterministic; ties in the
// descending sort keep the Jacobi output order.
EigenDecomposition hermitian_eigensystem(const HermMatrix& h);

// Eigenvalues only, sorted descending.
std::vector<double> hermitian_eigenvalues(const HermMatrix& h);

// PSD square root: S Hermitian PSD with S*S == rho entrywise to ~1e-9.
// Eigenvalues below -kPsdClampTol are rejected (invalid density matrix);
// eigenvalues of magnitude below kPsdClampTol are clamped to zero.
HermMatrix psd_sqrt(const HermMatrix& rho);

// Sum of absolute eigenvalues (Schatten 1-norm of a Hermitian operator).
double trace_norm(const HermMatrix& h);

}  // namespace starkqc::linalg
