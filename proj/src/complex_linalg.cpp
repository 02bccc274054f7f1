#include "starkqc/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace starkqc::linalg {

namespace {

void require_dim(int n) {
    if (n < 2 || n > 4) {
        throw std::invalid_argument("matrix dimension must be 2, 3 or 4, got " + std::to_string(n));
    }
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
}

}  // namespace

Matrix::Matrix(int n) : n_(n) { require_dim(n); }

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

cdouble Matrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

bool Matrix::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i) {
        if (std::abs((*this)(i, i).imag()) > tol) return false;
        for (int j = i + 1; j < n_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    Matrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cdouble s = 0.0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    }
    return r;
}

Matrix operator*(cdouble s, const Matrix& a) {
    Matrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
    return r;
}

Matrix operator*(double s, const Matrix& a) { return cdouble(s, 0.0) * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
    const int n = a.dim() * b.dim();
    require_dim(n);
    Matrix r(n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                for (int l = 0; l < b.dim(); ++l)
                    r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    return r;
}

Matrix pauli_x() {
    Matrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2);
    m(0, 1) = cdouble(0.0, -1.0);
    m(1, 0) = cdouble(0.0, 1.0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Matrix identity2() { return Matrix::identity(2); }

HermMatrix::HermMatrix(const Matrix& m) : m_(m) {
    require_dim(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            const cdouble v = m(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw std::invalid_argument("HermMatrix: non-finite entry");
            }
        }
        if (std::abs(m(i, i).imag()) > kHermTol) {
            throw std::invalid_argument("HermMatrix: diagonal entry not real");
        }
        for (int j = i + 1; j < m.dim(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermTol) {
                throw std::invalid_argument("HermMatrix: not Hermitian");
            }
        }
    }
}

HermMatrix HermMatrix::real_diagonal(std::initializer_list<double> d) {
    Matrix m(static_cast<int>(d.size()));
    int i = 0;
    for (double v : d) m(i, i) = v, ++i;
    return HermMatrix(m);
}

EigenDecomposition hermitian_eigensystem(const HermMatrix& h) {
    const int n = h.dim();

    // Work on the exactly symmetrized copy; admission tolerance allows ~1e-12
    // asymmetry which the rotations would otherwise propagate.
    Matrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = cdouble(h(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cdouble v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    Matrix v = Matrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= stop * 1e-2) continue;
                const cdouble w = a(p, q) / r;  // phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                double t;  // tangent of the rotation angle, smaller root
                if (theta >= 0.0) {
                    t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
                } else {
                    t = -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(p, p) = app - t * r;
                a(q, q) = aqq + t * r;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cdouble akp = a(k, p);
                    const cdouble akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(w) * akq;
                    a(k, q) = s * w * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                for (int k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p);
                    const cdouble vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(w) * vkq;
                    v(k, q) = s * w * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                    order[static_cast<std::size_t>(k)]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const HermMatrix& h) {
    return hermitian_eigensystem(h).values;
}

HermMatrix psd_sqrt(const HermMatrix& rho) {
    const EigenDecomposition eig = hermitian_eigensystem(rho);
    for (double lam : eig.values) {
        if (lam < -kPsdClampTol) {
            throw std::invalid_argument("psd_sqrt: eigenvalue " + std::to_string(lam) +
                                        " below -1e-10, matrix is not PSD");
        }
    }
    const int n = rho.dim();
    Matrix s(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cdouble sum = 0.0;
            for (int k = 0; k < n; ++k) {
                // |lam| below the clamp threshold is rounding debris on an
                // exact zero; sqrt would amplify it to ~1e-8 otherwise.
                double lam = eig.values[static_cast<std::size_t>(k)];
                if (std::abs(lam) < kPsdClampTol) lam = 0.0;
                sum += eig.vectors(i, k) * std::sqrt(lam) * std::conj(eig.vectors(j, k));
            }
            s(i, j) = sum;
        }
    }
    // kill rounding asymmetry so the result re-enters the Hermitian type cleanly
    s = 0.5 * (s + s.adjoint());
    for (int i = 0; i < n; ++i) s(i, i) = cdouble(s(i, i).real(), 0.0);
    return HermMatrix(s);
}

double trace_norm(const HermMatrix& h) {
    double sum = 0.0;
    for (double lam : hermitian_eigenvalues(h)) sum += std::abs(lam);
    return sum;
}

}  // namespace starkqc::linalg
