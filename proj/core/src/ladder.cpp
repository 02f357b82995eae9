#include "specladder/ladder.hpp"

namespace specladder {

void LadderSpec::validate() const {
    if (coeffs.empty()) throw InvalidParameter("coefficient sequence must be nonempty");
    if (k_max && !finite)
        throw InvalidParameter("k_max is only meaningful on a finite ladder");
    if (finite) {
        if (top_index() != coeffs.size() - 1)
            throw InvalidParameter("top state must be the last stored coefficient");
        if (coeffs.back() != std::complex<double>(0.0, 0.0))
            throw InvalidParameter("finite ladder requires a vanishing top coefficient");
    }
}

void TStepSpec::validate() const {
    if (T == 0) throw InvalidParameter("ladder step must be at least 1");
    if (coeffs_T.empty()) throw InvalidParameter("coefficient sequence must be nonempty");
}

SpectrumPair spectrum_from_coeffs(const LadderSpec& spec) {
    spec.validate();
    std::vector<double> c_sq;
    c_sq.reserve(spec.coeffs.size());
    for (const auto& c : spec.coeffs) c_sq.push_back(std::norm(c));
    return spectrum_from_coeff_sq(c_sq, spec.finite);
}

MatrixRep build_ladder_matrices(const LadderSpec& spec, std::size_t D) {
    spec.validate();
    if (D == 0) throw DimensionError("matrix dimension must be at least 1");
    if (D > spec.coeffs.size() + 1)
        throw DimensionError("dimension " + std::to_string(D) + " exceeds available coefficients + 1 (" +
                             std::to_string(spec.coeffs.size() + 1) + ")");
    MatrixRep rep;
    rep.dim = D;
    rep.raise = Eigen::MatrixXcd::Zero(D, D);
    for (std::size_t k = 0; k + 1 < D; ++k) rep.raise(k + 1, k) = spec.coeffs[k];
    rep.lower = rep.raise.adjoint();
    // S = eta eta^dag + eta^dag eta and A = eta eta^dag - eta^dag eta, with
    // eta^dag = raise and eta = lower as matrices.
    const Eigen::MatrixXcd lr = rep.lower * rep.raise;
    const Eigen::MatrixXcd rl = rep.raise * rep.lower;
    rep.s_mat = lr + rl;
    rep.a_mat = lr - rl;
    return rep;
}

SpectrumPair build_t_step(const TStepSpec& tspec) {
    tspec.validate();
    std::vector<double> c_sq;
    c_sq.reserve(tspec.coeffs_T.size());
    for (const auto& c : tspec.coeffs_T) c_sq.push_back(std::norm(c));
    return spectrum_from_coeff_sq(c_sq, /*finite=*/false, tspec.T);
}

}  // namespace specladder
