#include "ucaris/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ucaris {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
    ComplexMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CVec matvec(const ComplexMatrix& a, const CVec& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw std::invalid_argument("matvec: dimension mismatch");
    CVec y(a.rows);
    for (int i = 0; i < a.rows; ++i) {
        cplx acc{};
        for (int j = 0; j < a.cols; ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix scale_rows(const CVec& d, const ComplexMatrix& m) {
    if (static_cast<int>(d.size()) != m.rows)
        throw std::invalid_argument("scale_rows: dimension mismatch");
    ComplexMatrix out = m;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) *= d[i];
    return out;
}

ComplexMatrix scale_cols(const ComplexMatrix& m, const CVec& d) {
    if (static_cast<int>(d.size()) != m.cols)
        throw std::invalid_argument("scale_cols: dimension mismatch");
    ComplexMatrix out = m;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) *= d[j];
    return out;
}

double frobenius_sq(const ComplexMatrix& m) {
    double s = 0;
    for (const auto& z : m.data) s += std::norm(z);
    return s;
}

double frobenius_norm(const ComplexMatrix& m) { return std::sqrt(frobenius_sq(m)); }

double max_abs(const ComplexMatrix& m) {
    double s = 0;
    for (const auto& z : m.data) s = std::max(s, std::abs(z));
    return s;
}

CVec conj_elements(const CVec& v) {
    CVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
    return out;
}

double norm2(const CVec& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix idft_matrix(int n) {
    if (n < 1) throw std::invalid_argument("idft_matrix: n must be positive");
    ComplexMatrix w(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            // exponent reduced mod n to keep the argument small
            const int k = static_cast<int>((static_cast<long long>(row) * col) % n);
            w(row, col) = std::polar(scale, kTwoPi * k / n);
        }
    }
    return w;
}

}  // namespace ucaris
