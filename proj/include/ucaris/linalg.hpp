#pragma once

#include <complex>
#include <vector>

namespace ucaris {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Dense row-major complex matrix. Sized for the small arrays this project
/// works with (N <= a few dozen); no attempt at BLAS-grade performance.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    CVec data;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    cplx& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int r, int c) { return ComplexMatrix(r, c); }
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
CVec matvec(const ComplexMatrix& a, const CVec& x);

/// diag(d) * m
ComplexMatrix scale_rows(const CVec& d, const ComplexMatrix& m);
/// m * diag(d)
ComplexMatrix scale_cols(const ComplexMatrix& m, const CVec& d);

double frobenius_sq(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

CVec conj_elements(const CVec& v);
double norm2(const CVec& v);

/// Unitary N-point inverse DFT matrix: W(n,l) = exp(+2*pi*i*n*l/N)/sqrt(N),
/// zero-based n,l. Its elementwise conjugate is the unitary DFT matrix.
ComplexMatrix idft_matrix(int n);

}  // namespace ucaris
