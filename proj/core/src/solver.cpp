#include "specladder/solver.hpp"

namespace specladder {

AngularSpectrum solve_angular(int two_j) {
    if (two_j < 0) throw InvalidParameter("2j must be nonnegative");
    AngularSpectrum out;
    out.two_j = two_j;
    // mpq_class does not reduce (num, den) constructor arguments itself, and
    // exact equality is only reliable on canonical values.
    Rat j(two_j, 2);
    j.canonicalize();
    const std::size_t count = static_cast<std::size_t>(two_j) + 1;
    out.mu.reserve(count);
    out.c_sq.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const Rat mu = -j + static_cast<long>(k);
        out.mu.push_back(mu);
        out.c_sq.push_back((j + mu + 1) * (j - mu) / 2);
    }
    return out;
}

SpectrumPairExact angular_pair(const AngularSpectrum& spectrum) {
    Rat j(spectrum.two_j, 2);
    j.canonicalize();
    const Rat lambda = j * (j + 1);
    SpectrumPairExact pair;
    pair.finite = true;
    pair.s.reserve(spectrum.mu.size());
    pair.a.reserve(spectrum.mu.size());
    for (const Rat& mu : spectrum.mu) {
        pair.s.push_back(lambda - mu * mu);
        pair.a.push_back(-mu);
    }
    return pair;
}

}  // namespace specladder
