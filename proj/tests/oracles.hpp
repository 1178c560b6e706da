// Independent reference evaluators used by the test suites. These stay on the
// "raw definition" route (coordinate arithmetic, direct double loops, dense
// eigensolvers) so they never share a code path with the library internals
// they check.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <functional>
#include <vector>

#include "ucaris/channel.hpp"
#include "ucaris/geometry.hpp"

namespace oracles {

using ucaris::cplx;
using ucaris::CVec;
using ucaris::Mat3;
using ucaris::SegmentGeometry;
using ucaris::Side;
using ucaris::Vec3;

// Off-plane element position by plain 3x3 matrix arithmetic: rotate the
// in-plane circle point with the side's direction-cosine product, then
// translate by the center offset.
inline Vec3 position_by_matrix(const SegmentGeometry& seg, int index) {
    const ucaris::UcaSpec& uca = seg.off_plane();
    const double u = 2 * ucaris::kPi * (index - 1) / uca.num_elements + uca.alpha;
    const Vec3 p{uca.radius * std::cos(u), uca.radius * std::sin(u), 0.0};
    const Mat3 rot =
        seg.side == Side::TransmitSide
            ? ucaris::rotation_matrix_y(seg.rot_y) * ucaris::rotation_matrix_x(seg.rot_x)
            : (ucaris::rotation_matrix_x(seg.rot_x) * ucaris::rotation_matrix_y(seg.rot_y))
                  .transposed();
    const Vec3 rotated = rot * p;
    const double sp = std::sin(seg.phi), cp = std::cos(seg.phi);
    const Vec3 center{seg.center_distance * sp * std::cos(seg.theta),
                      seg.center_distance * sp * std::sin(seg.theta),
                      seg.center_distance * cp};
    return rotated + center;
}

// E, D, F from raw coordinate dot products (no trig expansion):
//   E = center . rho, D = -r (rho_x cos v + rho_y sin v),
//   F = -r (center_x cos v + center_y sin v).
struct RawTerms {
    double e, d, f;
};

inline RawTerms terms_from_coordinates(const SegmentGeometry& seg, int m, int n) {
    const int off_idx = seg.side == Side::TransmitSide ? n : m;
    const int in_idx = seg.side == Side::TransmitSide ? m : n;
    const double sp = std::sin(seg.phi), cp = std::cos(seg.phi);
    const Vec3 center{seg.center_distance * sp * std::cos(seg.theta),
                      seg.center_distance * sp * std::sin(seg.theta),
                      seg.center_distance * cp};
    const Vec3 rho = position_by_matrix(seg, off_idx) - center;
    const ucaris::UcaSpec& in = seg.in_plane();
    const double v = 2 * ucaris::kPi * (in_idx - 1) / in.num_elements + in.alpha;
    const double cv = std::cos(v), sv = std::sin(v);
    return {dot(center, rho), -in.radius * (rho.x * cv + rho.y * sv),
            -in.radius * (center.x * cv + center.y * sv)};
}

// Expanded-form distance from the raw terms.
inline double distance_from_terms(const SegmentGeometry& seg, int m, int n) {
    const RawTerms t = terms_from_coordinates(seg, m, n);
    const double d = seg.center_distance, R = seg.off_plane().radius, r = seg.in_plane().radius;
    return std::sqrt(d * d + R * R + r * r + 2 * (t.e + t.d + t.f));
}

// Segment error by a literal double loop over the hat/tilde entries.
inline double epsilon_by_double_loop(const ucaris::SegmentChannel& ch) {
    double num = 0, den = 0;
    for (int m = 0; m < ch.n; ++m)
        for (int n = 0; n < ch.n; ++n) {
            num += std::norm(ch.h_hat(m, n) - ch.h_tilde(m, n));
            den += std::norm(ch.h_tilde(m, n));
        }
    return num / den;
}

inline Eigen::MatrixXcd to_eigen(const ucaris::ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
    return out;
}

// Eigenvalues of a dense matrix, as a multiset sorted by (re, im).
inline CVec eigenvalue_multiset(const ucaris::ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
    CVec vals(m.rows);
    for (int i = 0; i < m.rows; ++i) vals[i] = solver.eigenvalues()(i);
    std::sort(vals.begin(), vals.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return vals;
}

inline CVec sorted_multiset(CVec vals) {
    std::sort(vals.begin(), vals.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return vals;
}

// Brute-force joint minimization of sum_l |y_l - lambda_l s_l|^2 over the
// whole candidate product space, by recursive enumeration.
inline CVec brute_force_separable(const CVec& y, const CVec& lambda, const CVec& alphabet) {
    const int n = static_cast<int>(y.size());
    std::vector<int> idx(n, 0), best_idx(n, 0);
    double best = -1;
    const std::function<void(int, double)> rec = [&](int pos, double acc) {
        if (pos == n) {
            if (best < 0 || acc < best) {
                best = acc;
                best_idx = idx;
            }
            return;
        }
        for (int k = 0; k < static_cast<int>(alphabet.size()); ++k) {
            idx[pos] = k;
            rec(pos + 1, acc + std::norm(y[pos] - lambda[pos] * alphabet[k]));
        }
    };
    rec(0, 0.0);
    CVec out(n);
    for (int i = 0; i < n; ++i) out[i] = alphabet[best_idx[i]];
    return out;
}

}  // namespace oracles
