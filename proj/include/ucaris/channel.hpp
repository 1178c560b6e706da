#pragma once

#include <vector>

#include "ucaris/geometry.hpp"
#include "ucaris/linalg.hpp"

namespace ucaris {

/// Channel matrices of one hop. Matrix entry (row, col) = (sink element,
/// source element); a chain propagates by left-multiplication.
///
///   h_exact  : free-space gains from exact element distances
///   h_approx : far-field form, equals u_left * h_tilde * u_right
///   h_tilde  : inner matrix carrying only the D = d_hat + d_tilde phases
///   h_hat    : h_tilde with the anti-circulant residual d_tilde dropped
///   u_left   : sink-side diagonal unitary (E or F phases)
///   u_right  : source-side diagonal unitary
struct SegmentChannel {
    int n = 0;
    ComplexMatrix h_exact;
    ComplexMatrix h_approx;
    ComplexMatrix h_tilde;
    ComplexMatrix h_hat;
    CVec u_left;
    CVec u_right;
    cplx prefactor{};
    SegmentGeometry geometry;
    double wavelength = 0;
    double beta = 0;
};

struct CirculantWitness {
    double a_t = 0;                  // first-hop shift constant
    double a_r = 0;                  // last-hop shift constant
    double max_shift_deviation = 0;  // max |M(k,n) - M(k+1,n+1)| / max |M|, cyclic
};

/// Free-space gain beta*lambda*exp(-j*2*pi*d/lambda) / (4*pi*d).
/// Throws std::domain_error for d <= 0 (degenerate geometry).
cplx gain_exact(double distance, double wavelength, double beta);

SegmentChannel build_segment(const SegmentGeometry& seg, double wavelength, double beta);

/// Relative approximation error of one hop:
/// sum |h_hat - h_tilde|^2 / sum |h_tilde|^2.
double epsilon_segment(const SegmentGeometry& seg, double wavelength, double beta);

/// Alternating product H_K * P_{K-1} * ... * P_1 * H_1 of hop matrices
/// (h_approx) and RIS phase diagonals, in propagation order.
ComplexMatrix overall_channel(const std::vector<SegmentChannel>& chain,
                              const std::vector<CVec>& ris_phase_mats);

/// ||prod h_tilde - prod h_hat||_F^2 / ||prod h_tilde||_F^2, products in
/// propagation order.
double epsilon_total(const std::vector<SegmentChannel>& chain);

/// Deviation of a square matrix from perfect cyclic-diagonal structure,
/// wraparound rows/columns included. Zero for any circulant matrix.
CirculantWitness circulant_witness(const ComplexMatrix& m);

/// Shift constant of the cyclic-successor identity for one hop:
/// sqrt(1-cos(2*pi/N)) * R * r * (1 + cos(rot_y)cos(rot_x)) /
/// (sqrt(2) * sqrt(d^2+R^2+r^2)).
double shift_constant(const SegmentGeometry& seg);

}  // namespace ucaris
