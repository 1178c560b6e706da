#pragma once

#include <vector>

#include "ucaris/transceiver.hpp"

namespace ucaris {

struct OpCount {
    double complex_additions = 0;
    double complex_multiplications = 0;
    double phase_subtractions = 0;
};

enum class Scheme {
    ProposedPrecoder,
    NoPrecoder,
    FullyDigitalPrecoder,
    FastSymbolwiseML,
    TraditionalML,
    MLWithFullyDigital,
    RisPhaseCompensation,
};

struct LinkBudget {
    DiagonalGains gains;
    std::vector<double> noise_vars;     // omega_l^2
    double bandwidth = 0;               // Hz
    std::vector<double> symbol_powers;  // |s_l|^2
};

/// Two candidate forms of the post-transform subchannel noise variance.
/// Printed keeps the published 1/N and 1/sqrt(N) coefficients and minus-sign
/// DFTs of the hop first rows; Corrected follows the unitary-invariance
/// derivation (plain |Lambda|^2 coefficients). The Monte Carlo oracle in the
/// test suite arbitrates; Corrected is the variant that matches.
enum class NoiseVarianceForm { Printed, Corrected };

/// Two candidate argument conventions for the closed-form BPSK error rate.
/// Printed passes |Lambda|^2|s|^2/(N omega^2) to erfc directly; Corrected
/// uses the standard matched-filter form erfc(sqrt(|Lambda|^2|s|^2/omega^2)).
enum class BerFormula { Printed, Corrected };

/// Variance of the l-th (1-based) subchannel noise after receive compensation
/// and DFT, for a 3-hop chain.
double subchannel_noise_variance(int l, const std::vector<SegmentChannel>& chain,
                                 const NoiseSpec& noise,
                                 NoiseVarianceForm form = NoiseVarianceForm::Corrected);

/// (1/N) sum over subchannels of erfc-based BPSK error probability.
double analytic_ber_bpsk(const LinkBudget& budget, BerFormula form = BerFormula::Corrected);

/// B * sum log2(1 + |Lambda_l|^2 |s_l|^2 / (N omega_l^2)), bits per second.
double capacity(const LinkBudget& budget);

/// Operation counts of the transceiver building blocks as closed formulas in
/// N and the alphabet size V. Non-integer values (N log2 N) stay real.
OpCount op_counts(Scheme scheme, int n, int v);

const char* scheme_name(Scheme scheme);

}  // namespace ucaris
