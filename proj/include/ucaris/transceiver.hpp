#pragma once

#include <string>
#include <vector>

#include "ucaris/channel.hpp"
#include "ucaris/rng.hpp"

namespace ucaris {

/// Finite symbol alphabet with unit average energy.
struct Constellation {
    std::string name;
    CVec symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    void validate() const;

    static Constellation bpsk();
    static Constellation qpsk();
    static Constellation by_name(const std::string& name);
};

struct NoiseSpec {
    double var_ris1 = 0;  // sigma_1^2, at the first RIS
    double var_ris2 = 0;  // sigma_2^2, at the second (and later) RIS
    double var_rx = 0;    // sigma_3^2, at the receiver

    void validate() const;
};

struct DiagonalGains {
    CVec values;  // Lambda_1 .. Lambda_N
};

/// x = U1^* W s, W the unitary N-point IDFT. Unitary, so ||x|| = ||s||.
CVec precode(const CVec& s, const CVec& u1);

/// Elementwise conj(u_right_next) * conj(u_left_prev): the phase pattern a RIS
/// applies to cancel the sink-side diagonal of the incoming hop and the
/// source-side diagonal of the outgoing hop.
CVec ris_phase_design(const CVec& u_right_next, const CVec& u_left_prev);

/// Push x through the chain: each hop applies its channel matrix (h_approx)
/// and adds complex Gaussian noise, then the RIS phase diagonal is applied;
/// the final hop adds receiver noise only. Hop 1 noise uses var_ris1, middle
/// hops var_ris2, the last hop var_rx. Deterministic given the seed.
CVec propagate(const CVec& x, const std::vector<SegmentChannel>& chain,
               const std::vector<CVec>& phases, const NoiseSpec& noise,
               std::uint64_t rng_seed);

/// y_tilde = W^* U6^* y (W^* = unitary DFT).
CVec receive_transform(const CVec& y, const CVec& u6);

/// Lambda = diag(W^* M W) for a circulant M. Requires the input to pass the
/// circulant witness below 1e-8; throws std::runtime_error naming the
/// deviation otherwise. Equals the unnormalized +sign DFT of the first row.
DiagonalGains diagonal_gains(const ComplexMatrix& h_hat_product);

/// Per-entry nearest-symbol decision: s_l = argmin over the alphabet of
/// |y_tilde_l - Lambda_l * s|. Ties break to the lowest symbol index.
CVec detect_symbolwise(const CVec& y_tilde, const DiagonalGains& gains,
                       const Constellation& omega);

/// Exhaustive ML over all |Omega|^N candidate vectors: argmin ||y - H s||^2.
/// Ties break lexicographically by symbol index. Guarded to V^N <= 1e7.
CVec detect_exhaustive(const CVec& y, const ComplexMatrix& h, const Constellation& omega);

}  // namespace ucaris
