#include "ucaris/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ucaris {

namespace {

// Phase of exp(-j*2*pi*x/lambda) with the argument reduced mod one wavelength
// before the trig call; x/lambda is ~1400 at the default scenario scale.
cplx unit_phase(double x, double wavelength) {
    return std::polar(1.0, -kTwoPi * std::fmod(x / wavelength, 1.0));
}

}  // namespace

cplx gain_exact(double distance, double wavelength, double beta) {
    if (!(distance > 0))
        throw std::domain_error("gain_exact: nonpositive element distance (degenerate geometry)");
    return beta * wavelength / (4 * kPi * distance) * unit_phase(distance, wavelength);
}

SegmentChannel build_segment(const SegmentGeometry& seg, double wavelength, double beta) {
    seg.validate();
    if (!(wavelength > 0)) throw std::invalid_argument("build_segment: wavelength must be positive");
    if (seg.source.num_elements != seg.sink.num_elements)
        throw std::invalid_argument("build_segment: source and sink element counts differ");

    SegmentChannel ch;
    ch.n = seg.source.num_elements;
    ch.geometry = seg;
    ch.wavelength = wavelength;
    ch.beta = beta;

    const int n = ch.n;
    const double s = seg.axial_norm();
    const double kappa = kTwoPi / (wavelength * s);
    ch.prefactor = beta * wavelength / (4 * kPi * s) * unit_phase(s, wavelength);

    ch.h_exact = ComplexMatrix(n, n);
    ch.h_approx = ComplexMatrix(n, n);
    ch.h_tilde = ComplexMatrix(n, n);
    ch.h_hat = ComplexMatrix(n, n);
    CVec e_phase(n), f_phase(n);

    for (int m = 1; m <= n; ++m) {
        for (int col = 1; col <= n; ++col) {
            const PhaseTerms pt = phase_terms(seg, m, col);
            ch.h_exact(m - 1, col - 1) = gain_exact(exact_distance(seg, m, col), wavelength, beta);
            ch.h_approx(m - 1, col - 1) =
                ch.prefactor * std::polar(1.0, -kappa * (pt.e_term + pt.d_term + pt.f_term));
            ch.h_tilde(m - 1, col - 1) =
                ch.prefactor * std::polar(1.0, -kappa * (pt.d_hat + pt.d_tilde));
            ch.h_hat(m - 1, col - 1) = ch.prefactor * std::polar(1.0, -kappa * pt.d_hat);
        }
    }
    // E belongs to the off-plane UCA's elements, F to the in-plane UCA's. On
    // the transmit side the source is off-plane, so E lands on u_right.
    for (int i = 1; i <= n; ++i) {
        const PhaseTerms pt = seg.side == Side::TransmitSide ? phase_terms(seg, 1, i)
                                                             : phase_terms(seg, i, 1);
        e_phase[i - 1] = std::polar(1.0, -kappa * pt.e_term);
        const PhaseTerms ptf = seg.side == Side::TransmitSide ? phase_terms(seg, i, 1)
                                                              : phase_terms(seg, 1, i);
        f_phase[i - 1] = std::polar(1.0, -kappa * ptf.f_term);
    }
    if (seg.side == Side::TransmitSide) {
        ch.u_right = std::move(e_phase);
        ch.u_left = std::move(f_phase);
    } else {
        ch.u_right = std::move(f_phase);
        ch.u_left = std::move(e_phase);
    }
    return ch;
}

double epsilon_segment(const SegmentGeometry& seg, double wavelength, double beta) {
    const SegmentChannel ch = build_segment(seg, wavelength, beta);
    double num = 0, den = 0;
    for (size_t i = 0; i < ch.h_tilde.data.size(); ++i) {
        num += std::norm(ch.h_hat.data[i] - ch.h_tilde.data[i]);
        den += std::norm(ch.h_tilde.data[i]);
    }
    return num / den;
}

ComplexMatrix overall_channel(const std::vector<SegmentChannel>& chain,
                              const std::vector<CVec>& ris_phase_mats) {
    if (chain.empty()) throw std::invalid_argument("overall_channel: empty chain");
    if (ris_phase_mats.size() + 1 != chain.size())
        throw std::invalid_argument("overall_channel: need one phase matrix per RIS");
    ComplexMatrix acc = chain.front().h_approx;
    for (size_t i = 1; i < chain.size(); ++i) {
        if (static_cast<int>(ris_phase_mats[i - 1].size()) != acc.rows)
            throw std::invalid_argument("overall_channel: phase matrix dimension mismatch");
        acc = scale_rows(ris_phase_mats[i - 1], acc);
        acc = matmul(chain[i].h_approx, acc);
    }
    return acc;
}

double epsilon_total(const std::vector<SegmentChannel>& chain) {
    if (chain.empty()) throw std::invalid_argument("epsilon_total: empty chain");
    ComplexMatrix prod_tilde = chain.front().h_tilde;
    ComplexMatrix prod_hat = chain.front().h_hat;
    for (size_t i = 1; i < chain.size(); ++i) {
        prod_tilde = matmul(chain[i].h_tilde, prod_tilde);
        prod_hat = matmul(chain[i].h_hat, prod_hat);
    }
    ComplexMatrix diff = prod_tilde;
    for (size_t i = 0; i < diff.data.size(); ++i) diff.data[i] -= prod_hat.data[i];
    return frobenius_sq(diff) / frobenius_sq(prod_tilde);
}

CirculantWitness circulant_witness(const ComplexMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("circulant_witness: matrix must be square");
    const int n = m.rows;
    const double scale = max_abs(m);
    CirculantWitness w;
    if (scale == 0) return w;
    for (int k = 0; k < n; ++k)
        for (int col = 0; col < n; ++col) {
            const double dev = std::abs(m(k, col) - m((k + 1) % n, (col + 1) % n));
            w.max_shift_deviation = std::max(w.max_shift_deviation, dev);
        }
    w.max_shift_deviation /= scale;
    return w;
}

double shift_constant(const SegmentGeometry& seg) {
    const int n = seg.off_plane().num_elements;
    const double cc = std::cos(seg.rot_y) * std::cos(seg.rot_x);
    return std::sqrt(1 - std::cos(kTwoPi / n)) * seg.off_plane().radius *
           seg.in_plane().radius * (1 + cc) / (std::sqrt(2.0) * seg.axial_norm());
}

}  // namespace ucaris
