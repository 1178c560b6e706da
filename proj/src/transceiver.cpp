#include "ucaris/transceiver.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ucaris {

void Constellation::validate() const {
    if (symbols.empty()) throw std::invalid_argument("Constellation: empty alphabet");
    double energy = 0;
    for (size_t i = 0; i < symbols.size(); ++i) {
        energy += std::norm(symbols[i]);
        for (size_t j = i + 1; j < symbols.size(); ++j)
            if (symbols[i] == symbols[j])
                throw std::invalid_argument("Constellation: symbols must be distinct");
    }
    if (std::abs(energy / symbols.size() - 1.0) > 1e-12)
        throw std::invalid_argument("Constellation: average energy must be 1");
}

Constellation Constellation::bpsk() { return {"bpsk", {{1.0, 0.0}, {-1.0, 0.0}}}; }

Constellation Constellation::qpsk() {
    const double a = 1.0 / std::sqrt(2.0);
    return {"qpsk", {{a, a}, {-a, a}, {-a, -a}, {a, -a}}};
}

Constellation Constellation::by_name(const std::string& name) {
    if (name == "bpsk") return bpsk();
    if (name == "qpsk") return qpsk();
    throw std::invalid_argument("unknown constellation: " + name);
}

void NoiseSpec::validate() const {
    if (var_ris1 < 0 || var_ris2 < 0 || var_rx < 0)
        throw std::invalid_argument("NoiseSpec: variances must be >= 0");
}

namespace {

void check_same_size(const CVec& a, const CVec& b, const char* what) {
    if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

CVec precode(const CVec& s, const CVec& u1) {
    check_same_size(s, u1, "precode");
    const int n = static_cast<int>(s.size());
    const ComplexMatrix w = idft_matrix(n);
    CVec x = matvec(w, s);
    for (int i = 0; i < n; ++i) x[i] *= std::conj(u1[i]);
    return x;
}

CVec ris_phase_design(const CVec& u_right_next, const CVec& u_left_prev) {
    check_same_size(u_right_next, u_left_prev, "ris_phase_design");
    CVec out(u_right_next.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = std::conj(u_right_next[i]) * std::conj(u_left_prev[i]);
    return out;
}

CVec propagate(const CVec& x, const std::vector<SegmentChannel>& chain,
               const std::vector<CVec>& phases, const NoiseSpec& noise,
               std::uint64_t rng_seed) {
    if (chain.empty()) throw std::invalid_argument("propagate: empty chain");
    if (phases.size() + 1 != chain.size())
        throw std::invalid_argument("propagate: need one phase matrix per RIS");
    noise.validate();

    RngStream rng(rng_seed);
    CVec y = x;
    for (size_t hop = 0; hop < chain.size(); ++hop) {
        y = matvec(chain[hop].h_approx, y);
        const bool last = hop + 1 == chain.size();
        const double var = last ? noise.var_rx : (hop == 0 ? noise.var_ris1 : noise.var_ris2);
        for (auto& v : y) v += rng.cgaussian(var);
        if (!last) {
            check_same_size(y, phases[hop], "propagate");
            for (size_t i = 0; i < y.size(); ++i) y[i] *= phases[hop][i];
        }
    }
    return y;
}

CVec receive_transform(const CVec& y, const CVec& u6) {
    check_same_size(y, u6, "receive_transform");
    const int n = static_cast<int>(y.size());
    CVec t(n);
    for (int i = 0; i < n; ++i) t[i] = std::conj(u6[i]) * y[i];
    const ComplexMatrix w = idft_matrix(n);
    CVec out(n);
    for (int i = 0; i < n; ++i) {
        cplx acc{};
        for (int j = 0; j < n; ++j) acc += std::conj(w(j, i)) * t[j];  // (W^*)^T = W^H row
        out[i] = acc;
    }
    return out;
}

DiagonalGains diagonal_gains(const ComplexMatrix& h_hat_product) {
    const CirculantWitness w = circulant_witness(h_hat_product);
    if (w.max_shift_deviation >= 1e-8) {
        std::ostringstream msg;
        msg << "diagonal_gains: input is not circulant (relative shift deviation "
            << w.max_shift_deviation << " >= 1e-8)";
        throw std::runtime_error(msg.str());
    }
    const int n = h_hat_product.rows;
    const ComplexMatrix wm = idft_matrix(n);
    // diag(W^* M W); W is symmetric, so W^* here is both the conjugate matrix
    // and the conjugate transpose. Equals the plain DFT of the first row with
    // a positive exponent sign and no normalization.
    DiagonalGains gains;
    gains.values.resize(n);
    for (int i = 0; i < n; ++i) {
        cplx acc{};
        for (int row = 0; row < n; ++row) {
            cplx inner{};
            for (int col = 0; col < n; ++col) inner += h_hat_product(row, col) * wm(col, i);
            acc += std::conj(wm(row, i)) * inner;
        }
        gains.values[i] = acc;
    }
    return gains;
}

CVec detect_symbolwise(const CVec& y_tilde, const DiagonalGains& gains,
                       const Constellation& omega) {
    check_same_size(y_tilde, gains.values, "detect_symbolwise");
    CVec out(y_tilde.size());
    for (size_t l = 0; l < y_tilde.size(); ++l) {
        double best = 0;
        int best_idx = -1;
        for (int k = 0; k < omega.size(); ++k) {
            const double metric = std::norm(y_tilde[l] - gains.values[l] * omega.symbols[k]);
            if (best_idx < 0 || metric < best) {
                best = metric;
                best_idx = k;
            }
        }
        out[l] = omega.symbols[best_idx];
    }
    return out;
}

CVec detect_exhaustive(const CVec& y, const ComplexMatrix& h, const Constellation& omega) {
    const int n = h.cols;
    if (static_cast<int>(y.size()) != h.rows)
        throw std::invalid_argument("detect_exhaustive: dimension mismatch");
    const int v = omega.size();
    double space = 1;
    for (int i = 0; i < n; ++i) space *= v;
    if (space > 1e7)
        throw std::invalid_argument(
            "detect_exhaustive: V^N exceeds the 1e7 search guard; use the symbol-wise path");

    std::vector<int> idx(n, 0);
    // running H*s for the current candidate, updated per odometer step
    CVec hs(h.rows);
    for (int row = 0; row < h.rows; ++row) {
        cplx acc{};
        for (int col = 0; col < n; ++col) acc += h(row, col) * omega.symbols[0];
        hs[row] = acc;
    }
    auto metric_of = [&]() {
        double m = 0;
        for (int row = 0; row < h.rows; ++row) m += std::norm(y[row] - hs[row]);
        return m;
    };

    std::vector<int> best_idx = idx;
    double best = metric_of();
    // Lexicographic iteration (last digit fastest, first digit most
    // significant) with strict improvement keeps the lowest-index tie winner.
    while (true) {
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == v - 1) --pos;
        if (pos < 0) break;
        // reset trailing digits to 0 and advance digit `pos`
        for (int j = n - 1; j > pos; --j) {
            for (int row = 0; row < h.rows; ++row)
                hs[row] += h(row, j) * (omega.symbols[0] - omega.symbols[idx[j]]);
            idx[j] = 0;
        }
        for (int row = 0; row < h.rows; ++row)
            hs[row] += h(row, pos) * (omega.symbols[idx[pos] + 1] - omega.symbols[idx[pos]]);
        ++idx[pos];
        const double m = metric_of();
        if (m < best) {
            best = m;
            best_idx = idx;
        }
    }
    CVec out(n);
    for (int i = 0; i < n; ++i) out[i] = omega.symbols[best_idx[i]];
    return out;
}

}  // namespace ucaris
