#include "ucaris/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace ucaris {

double subchannel_noise_variance(int l, const std::vector<SegmentChannel>& chain,
                                 const NoiseSpec& noise, NoiseVarianceForm form) {
    if (chain.size() != 3)
        throw std::invalid_argument(
            "subchannel_noise_variance: the closed form is specific to 3-hop chains");
    const int n = chain[0].n;
    if (l < 1 || l > n) throw std::invalid_argument("subchannel_noise_variance: bad index");
    noise.validate();

    if (form == NoiseVarianceForm::Corrected) {
        // Unitary invariance: the accumulated noise terms pass through the
        // hat-matrix partial products, whose DFT-domain gains multiply.
        const DiagonalGains two_hop = diagonal_gains(matmul(chain[2].h_hat, chain[1].h_hat));
        const DiagonalGains one_hop = diagonal_gains(chain[2].h_hat);
        return std::norm(two_hop.values[l - 1]) * noise.var_ris1 +
               std::norm(one_hop.values[l - 1]) * noise.var_ris2 + noise.var_rx;
    }

    // Printed form: minus-sign DFTs of the hop first rows with 1/N and
    // 1/sqrt(N) coefficients.
    cplx x1{}, x2{};
    for (int u = 1; u <= n; ++u) {
        const cplx hu = chain[2].h_hat(0, u - 1);
        x2 += hu * std::polar(1.0, -kTwoPi * (l - 1) * (u - 1) / n);
        for (int m = 1; m <= n; ++m)
            x1 += hu * chain[1].h_hat(0, m - 1) *
                  std::polar(1.0, -kTwoPi * (l - 1) * (u + m - 2) / n);
    }
    return std::norm(x1) / n * noise.var_ris1 +
           std::norm(x2) / std::sqrt(static_cast<double>(n)) * noise.var_ris2 + noise.var_rx;
}

double analytic_ber_bpsk(const LinkBudget& budget, BerFormula form) {
    const size_t n = budget.gains.values.size();
    if (budget.noise_vars.size() != n || budget.symbol_powers.size() != n)
        throw std::invalid_argument("analytic_ber_bpsk: budget size mismatch");
    double acc = 0;
    for (size_t l = 0; l < n; ++l) {
        const double sig = std::norm(budget.gains.values[l]) * budget.symbol_powers[l];
        const double w2 = budget.noise_vars[l];
        if (w2 <= 0) {
            if (sig == 0)
                throw std::domain_error("analytic_ber_bpsk: zero noise with zero gain is undefined");
            continue;  // erfc(+inf) = 0
        }
        const double arg = form == BerFormula::Corrected ? std::sqrt(sig / w2)
                                                         : sig / (n * w2);
        acc += 0.5 * std::erfc(arg);
    }
    return acc / static_cast<double>(n);
}

double capacity(const LinkBudget& budget) {
    const size_t n = budget.gains.values.size();
    if (budget.noise_vars.size() != n || budget.symbol_powers.size() != n)
        throw std::invalid_argument("capacity: budget size mismatch");
    double acc = 0;
    for (size_t l = 0; l < n; ++l) {
        if (!(budget.noise_vars[l] > 0))
            throw std::invalid_argument("capacity: noise variances must be positive");
        const double snr = std::norm(budget.gains.values[l]) * budget.symbol_powers[l] /
                           (static_cast<double>(n) * budget.noise_vars[l]);
        acc += std::log2(1.0 + snr);
    }
    return budget.bandwidth * acc;
}

OpCount op_counts(Scheme scheme, int n, int v) {
    if (n < 1 || v < 1) throw std::invalid_argument("op_counts: n and v must be >= 1");
    const double nd = n, vd = v;
    const double log2n = std::log2(nd);
    const double pow_vn = std::pow(vd, nd);
    switch (scheme) {
        case Scheme::ProposedPrecoder:
            return {nd * log2n, nd / 2 * log2n + nd, 0};
        case Scheme::NoPrecoder:
            return {0, 0, 0};
        case Scheme::FullyDigitalPrecoder:
            return {4.0 / 3 * nd * nd * nd - 1.5 * nd * nd + nd / 6,
                    5.0 / 3 * nd * nd * nd + 0.5 * nd * nd - nd / 6, 0};
        case Scheme::FastSymbolwiseML:
            return {nd * log2n + nd * vd, nd / 2 * log2n + nd * (vd + 1), 0};
        case Scheme::TraditionalML:
            return {nd * nd * pow_vn, (nd * nd + nd) * pow_vn, 0};
        case Scheme::MLWithFullyDigital:
            return {nd * vd, nd * vd, 0};
        case Scheme::RisPhaseCompensation:
            return {0, 0, nd};
    }
    throw std::invalid_argument("op_counts: unknown scheme");
}

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::ProposedPrecoder: return "proposed_precoder";
        case Scheme::NoPrecoder: return "no_precoder";
        case Scheme::FullyDigitalPrecoder: return "fully_digital_precoder";
        case Scheme::FastSymbolwiseML: return "fast_symbolwise_ml";
        case Scheme::TraditionalML: return "traditional_ml";
        case Scheme::MLWithFullyDigital: return "ml_with_fully_digital";
        case Scheme::RisPhaseCompensation: return "ris_phase_compensation";
    }
    return "unknown";
}

}  // namespace ucaris
