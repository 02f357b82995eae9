#include "specladder/models.hpp"

#include <cmath>

namespace specladder {

namespace {

constexpr double kPi = 3.14159265358979323846;

Level make_level(std::vector<std::pair<std::string, double>> labels, double energy) {
    Level lv;
    lv.labels = std::move(labels);
    lv.energy = energy;
    return lv;
}

}  // namespace

void PhysicalUnits::validate() const {
    if (!(hbar > 0)) throw InvalidParameter("hbar must be positive");
    if (!(mass > 0)) throw InvalidParameter("mass must be positive");
    if (!(omega > 0)) throw InvalidParameter("omega must be positive");
    if (!(length_L > 0)) throw InvalidParameter("length L must be positive");
    if (Z < 1) throw InvalidParameter("Z must be a positive integer");
    if (!(alpha_fs > 0) || alpha_fs > 0.1)
        throw InvalidParameter("alpha must lie in (0, 0.1]");
}

void DiracParams::validate() const {
    if (l < 0) throw InvalidParameter("l must be nonnegative");
    if (!(alpha_fs > 0) || alpha_fs > 0.1)
        throw InvalidParameter("alpha must lie in (0, 0.1]");
    if (Z < 1) throw InvalidParameter("Z must be a positive integer");
    if (Z > 1 && !allow_z_extension)
        throw InvalidParameter("Z > 1 requires the explicit extension flag");
    if (!(lambda_D() > -0.25))
        throw InvalidParameter("lambda_D must exceed -1/4 for a real ground level");
}

SpectrumPairExact ho_1d_pair(std::size_t levels) {
    return solve_constant_gap<Rat>(Rat(1, 2), levels);
}

ModelSpectrum ho_1d(const PhysicalUnits& units, std::size_t levels) {
    units.validate();
    const SpectrumPairExact pair = ho_1d_pair(levels);
    const double scale = units.hbar * units.omega;
    ModelSpectrum out;
    out.model_name = "ho1d";
    out.unit = "hbar*omega";
    out.params = {{"hbar", units.hbar}, {"omega", units.omega}};
    out.levels.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k)
        out.levels.push_back(make_level({{"k", static_cast<double>(k)}},
                                        scale * to_double(pair.s[k])));
    return out;
}

ModelSpectrum angular_momentum(int two_j) {
    const AngularSpectrum sol = solve_angular(two_j);
    ModelSpectrum out;
    out.model_name = "angular";
    out.unit = "hbar";
    out.params = {{"two_j", static_cast<double>(two_j)}};
    out.levels.reserve(sol.mu.size());
    for (std::size_t k = 0; k < sol.mu.size(); ++k)
        out.levels.push_back(make_level(
            {{"k", static_cast<double>(k)}, {"c_sq", to_double(sol.c_sq[k])}},
            to_double(sol.mu[k])));
    return out;
}

Rat radial_lambda(int N, int l) {
    if (l < 0) throw InvalidParameter("l must be nonnegative");
    // Canonicalize: the (num, den) constructor stores the fraction verbatim,
    // and exact comparisons require the reduced form.
    Rat centrifugal((N - 1) * (N - 3), 4);
    centrifugal.canonicalize();
    return centrifugal + Rat(l * (l + N - 2));
}

BnResultT<Rat> iso_ho_bn(int N, int l, std::size_t levels) {
    if (N != 2 && N != 3) throw InvalidParameter("N must be 2 or 3");
    // The ground energy of a radial oscillator is nonnegative for every l
    // only on the plus branch, so the model fixes the sign itself.
    BnProblemExact problem{2, radial_lambda(N, l), SignChoice::Plus};
    return solve_bn(problem, levels);
}

ModelSpectrum iso_ho_nd(const PhysicalUnits& units, int N, int l, std::size_t levels) {
    units.validate();
    const BnResultT<Rat> sol = iso_ho_bn(N, l, levels);
    const double scale = units.hbar * units.omega;
    ModelSpectrum out;
    out.model_name = "iso-ho";
    out.unit = "hbar*omega";
    out.params = {{"N", static_cast<double>(N)},
                  {"l", static_cast<double>(l)},
                  {"hbar", units.hbar},
                  {"omega", units.omega}};
    out.levels.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k)
        out.levels.push_back(make_level(
            {{"k", static_cast<double>(k)}, {"l", static_cast<double>(l)}},
            scale * to_double(sol.spectrum.levels[k] / 2)));
    return out;
}

BnResultT<Rat> hydrogen_bn(int N, int l, std::size_t levels) {
    if (N < 1 || N > 3) throw InvalidParameter("N must be 1, 2 or 3");
    if (l < 0) throw InvalidParameter("l must be nonnegative");
    if (N == 1 && l != 0) throw InvalidParameter("l must be 0 when N is 1");
    // b_0 = N - 1 + 2l for every N and l, which is the signed root
    // n + (N + 2l - 2): the minus branch only for the 1D case.
    const SignChoice sign = (N + 2 * l - 2) >= 0 ? SignChoice::Plus : SignChoice::Minus;
    BnProblemExact problem{1, radial_lambda(N, l), sign};
    return solve_bn(problem, levels);
}

std::vector<Rat> hydrogen_levels_exact(int N, int l, std::size_t levels) {
    // The 1D ladder starts at b_0 = 0, a level with formally infinite
    // binding; skip it so every reported energy is finite.
    const std::size_t skip = (N == 1) ? 1 : 0;
    const BnResultT<Rat> sol = hydrogen_bn(N, l, levels + skip);
    std::vector<Rat> energies;
    energies.reserve(levels);
    for (std::size_t k = skip; k < sol.spectrum.levels.size(); ++k) {
        const Rat& b = sol.spectrum.levels[k];
        energies.push_back(Rat(-2) / (b * b));
    }
    return energies;
}

ModelSpectrum hydrogen_nd(const PhysicalUnits& units, int N, int l, std::size_t levels) {
    units.validate();
    const std::size_t skip = (N == 1) ? 1 : 0;
    const BnResultT<Rat> sol = hydrogen_bn(N, l, levels + skip);
    ModelSpectrum out;
    out.model_name = "hydrogen";
    out.unit = "Z^2 e^4 m/hbar^2";
    out.params = {{"N", static_cast<double>(N)},
                  {"l", static_cast<double>(l)},
                  {"Z", static_cast<double>(units.Z)}};
    out.levels.reserve(levels);
    for (std::size_t j = 0; j < levels; ++j) {
        const std::size_t k = j + skip;
        const Rat& b = sol.spectrum.levels[k];
        const double n_principal = to_double(b / 2);
        out.levels.push_back(make_level({{"k", static_cast<double>(k)},
                                         {"l", static_cast<double>(l)},
                                         {"n", n_principal}},
                                        to_double(Rat(-2) / (b * b))));
    }
    return out;
}

ModelSpectrum dirac_hydrogen(const DiracParams& params, std::size_t levels) {
    params.validate();
    const double b0 = 1.0 + std::sqrt(1.0 + 4.0 * params.lambda_D());
    const double za_sq = params.za() * params.za();
    ModelSpectrum out;
    out.model_name = "dirac";
    out.unit = "m c^2";
    out.params = {{"l", static_cast<double>(params.l)},
                  {"alpha", params.alpha_fs},
                  {"Z", static_cast<double>(params.Z)}};
    out.levels.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        const double bk = b0 + 2.0 * static_cast<double>(k);
        const double energy = 1.0 / std::sqrt(1.0 + 4.0 * za_sq / (bk * bk));
        out.levels.push_back(make_level(
            {{"k", static_cast<double>(k)}, {"l", static_cast<double>(params.l)}}, energy));
    }
    return out;
}

std::vector<Rat> square_well_coeff_sq(std::size_t count) {
    std::vector<Rat> c_sq;
    c_sq.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rat amp(static_cast<long>(k) * static_cast<long>(k + 1), 2);
        amp.canonicalize();
        c_sq.push_back(amp);
    }
    return c_sq;
}

ModelSpectrum square_well(const PhysicalUnits& units, std::size_t levels) {
    units.validate();
    const double e1 = units.hbar * units.hbar * kPi * kPi /
                      (2.0 * units.mass * units.length_L * units.length_L);
    ModelSpectrum out;
    out.model_name = "square-well";
    out.unit = "E1 = hbar^2 pi^2/(2 m L^2)";
    out.params = {{"hbar", units.hbar}, {"mass", units.mass}, {"L", units.length_L}, {"E1", e1}};
    out.levels.reserve(levels);
    for (std::size_t k = 1; k <= levels; ++k)
        out.levels.push_back(make_level({{"k", static_cast<double>(k)}},
                                        static_cast<double>(k) * static_cast<double>(k)));
    return out;
}

std::vector<double> well_ladder_action(int k, std::size_t points) {
    if (k < 1) throw InvalidParameter("state index k must be at least 1");
    if (points < 200) throw InvalidParameter("grid must have at least 200 points");
    const std::size_t n = points;
    const double h = kPi / static_cast<double>(n - 1);
    std::vector<double> phi(n), deriv(n), out(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = std::sin(k * (i * h));
    for (std::size_t i = 1; i + 1 < n; ++i) deriv[i] = (phi[i + 1] - phi[i - 1]) / (2 * h);
    deriv[0] = (-3 * phi[0] + 4 * phi[1] - phi[2]) / (2 * h);
    deriv[n - 1] = (3 * phi[n - 1] - 4 * phi[n - 2] + phi[n - 3]) / (2 * h);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = i * h;
        out[i] = std::cos(y) * phi[i] + std::sin(y) * deriv[i] / k;
    }
    return out;
}

std::vector<Rat> perturbed_ho_corrections(std::size_t levels) {
    // In units of the common factor 3 eps hbar^2/(2 m^2 omega^2) the shift of
    // the commutator eigenvalue is <k|x^2|k> in units hbar/(m omega) = k + 1/2.
    std::vector<Rat> delta_a;
    delta_a.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k)
        delta_a.push_back(Rat(2 * static_cast<long>(k) + 1, 2));
    if (levels == 0) return {};
    std::vector<Rat> delta_e = s_from_a_iterated(delta_a);
    for (std::size_t k = 0; k < levels; ++k) {
        const long kk = static_cast<long>(k);
        const Rat closed = Rat(kk) * kk + kk + Rat(1, 2);
        if (delta_e[k] != closed)
            throw ConsistencyViolation("iterated correction disagrees with the closed form", k);
    }
    return delta_e;
}

ModelSpectrum perturbed_ho(const PhysicalUnits& units, double epsilon, std::size_t levels) {
    units.validate();
    const std::vector<Rat> corr = perturbed_ho_corrections(levels);
    const double unit_factor = 3.0 * epsilon * units.hbar * units.hbar /
                               (2.0 * units.mass * units.mass * units.omega * units.omega);
    ModelSpectrum out;
    out.model_name = "perturbed-ho";
    out.unit = "energy (first-order x^4 correction)";
    out.params = {{"hbar", units.hbar},
                  {"mass", units.mass},
                  {"omega", units.omega},
                  {"epsilon", epsilon}};
    out.levels.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k)
        out.levels.push_back(make_level({{"k", static_cast<double>(k)}},
                                        unit_factor * to_double(corr[k])));
    return out;
}

}  // namespace specladder
