#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "specladder/errors.hpp"
#include "specladder/ladder.hpp"
#include "specladder/rational.hpp"
#include "specladder/solver.hpp"

namespace specladder {

// Physical scales shared by the models. Defaults put every model in its
// natural unit system (hbar = m = omega = L = 1, Z = 1, physical alpha).
struct PhysicalUnits {
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 1.0;
    double length_L = 1.0;
    int Z = 1;
    double alpha_fs = 1.0 / 137.035999;

    void validate() const;
};

// One spectral level: quantum-number labels in a stable order plus the energy
// value. Labels are stored as doubles so half-integer quantum numbers (mu,
// the 2D principal number) stay exact in binary floating point.
struct Level {
    std::vector<std::pair<std::string, double>> labels;
    double energy = 0.0;
};

// A named model's level list. `unit` declares the energy scale the values are
// expressed in; models whose scale is numerically computable from
// PhysicalUnits (oscillators, the x^4 correction) return raw numbers in the
// user's unit system, while hydrogen-like and Dirac energies are always per
// Z^2 e^4 m/hbar^2 and m c^2 respectively since e and c carry no numeric
// value here.
struct ModelSpectrum {
    std::string model_name;
    std::string unit;
    std::vector<std::pair<std::string, double>> params;
    std::vector<Level> levels;
};

// Parameters of the relativistic hydrogen model. Z is fixed to 1 unless the
// caller explicitly opts into the (Z*alpha)^2 generalization.
struct DiracParams {
    int l = 0;
    double alpha_fs = 1.0 / 137.035999;
    int Z = 1;
    bool allow_z_extension = false;

    double za() const { return Z * alpha_fs; }
    double lambda_D() const { return static_cast<double>(l) * (l + 1) - za() * za(); }
    double c_E(double E) const { return za() * E; }
    double d_E(double E) const { return 1.0 - E * E; }
    void validate() const;
};

// 1D harmonic oscillator: E_k = hbar*omega*(k + 1/2) from the constant-gap
// solution a_k = hbar*omega/2.
ModelSpectrum ho_1d(const PhysicalUnits& units, std::size_t levels);

// Exact oscillator pair in units of hbar*omega: s_k = k + 1/2 = E_k.
SpectrumPairExact ho_1d_pair(std::size_t levels);

// Angular momentum ladder for total momentum j = two_j/2: levels carry
// mu_k = -j + k (in units of hbar) and the squared amplitude |C_k|^2.
ModelSpectrum angular_momentum(int two_j);

// N-dimensional isotropic oscillator, N in {2,3}: E_kl = hbar*omega*(2k+l+N/2).
ModelSpectrum iso_ho_nd(const PhysicalUnits& units, int N, int l, std::size_t levels);

// Exact ladder behind iso_ho_nd: gap-4 levels b_k with E = hbar*omega*b_k/2.
BnResultT<Rat> iso_ho_bn(int N, int l, std::size_t levels);

// Strength parameter of the radial family for dimension N and angular
// momentum l: Lambda = (N-1)(N-3)/4 + l(l+N-2).
Rat radial_lambda(int N, int l);

// Hydrogen-like atom, N in {1,2,3}: E = -1/(2 n^2) per Z^2 e^4 m/hbar^2 with
// n = k + l + (N-1)/2. For N = 1 the ladder's bottom level has b_0 = 0 and
// formally infinite binding; it is skipped, so levels are k = 1..count with
// n = k.
ModelSpectrum hydrogen_nd(const PhysicalUnits& units, int N, int l, std::size_t levels);

// Exact ladder behind hydrogen_nd, including the b_0 = 0 level for N = 1.
BnResultT<Rat> hydrogen_bn(int N, int l, std::size_t levels);

// Exact hydrogen energies -2/b_k^2 after the N = 1 bottom-level skip.
std::vector<Rat> hydrogen_levels_exact(int N, int l, std::size_t levels);

// Relativistic hydrogen: E_k = [1 + 4(Z*alpha)^2/(b_0+2k)^2]^{-1/2} in units
// of m c^2 with b_0 = 1 + sqrt(1 + 4*lambda_D).
ModelSpectrum dirac_hydrogen(const DiracParams& params, std::size_t levels);

// Infinite square well: E_k = k^2 in units E1 = hbar^2 pi^2/(2 m L^2), with
// physical labels k = 1..count. The underlying ladder is indexed from 0 with
// squared amplitudes k(k+1)/2.
ModelSpectrum square_well(const PhysicalUnits& units, std::size_t levels);

// Exact squared amplitudes k(k+1)/2 of the square-well ladder, k = 0..count-1.
std::vector<Rat> square_well_coeff_sq(std::size_t count);

// Applies the state-dependent raising operator cos(y) + (1/k) sin(y) d/dy to
// sin(k y) sampled on a uniform grid over [0, pi], with the derivative taken
// by second-order finite differences (one-sided at the endpoints). The result
// approximates sin((k+1) y).
std::vector<double> well_ladder_action(int k, std::size_t points);

// First-order x^4 corrections: delta_a_k = (3 hbar eps/2 m omega) <k|x^2|k>
// iterated through delta_E_{k+1} - delta_E_k = delta_a_{k+1} + delta_a_k from
// delta_E_0 = delta_a_0, then checked against the closed form
// (3 hbar^2 eps/2 m^2 omega^2)(k^2 + k + 1/2).
ModelSpectrum perturbed_ho(const PhysicalUnits& units, double epsilon, std::size_t levels);

// Exact corrections in units of 3 eps hbar^2/(2 m^2 omega^2): the iterated
// recurrence value, which must equal k^2 + k + 1/2.
std::vector<Rat> perturbed_ho_corrections(std::size_t levels);

}  // namespace specladder
