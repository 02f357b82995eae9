#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "specladder/errors.hpp"
#include "specladder/ladder.hpp"
#include "specladder/rational.hpp"
#include "specladder/tolerance.hpp"

namespace specladder {

// How to resolve the sign in b_0 = n +/- sqrt(1 + 4*lambda). AutoNonNegative
// picks the plus root only when the minus root is negative; if both roots are
// admissible the physics must decide, so the solver refuses to guess.
enum class SignChoice { Plus, Minus, AutoNonNegative };

// The quadratic-link radial family: a first-order operator B with level gap
// 2n whose bilinears satisfy S = B^2 + (n^2 - 1 - 4*lambda) I and A = 2n B.
template <typename T>
struct BnProblemT {
    int n = 1;
    T lambda = T(0);
    SignChoice sign = SignChoice::AutoNonNegative;
};
using BnProblem = BnProblemT<double>;
using BnProblemExact = BnProblemT<Rat>;

// Solved B-eigenvalue ladder b_k = b_0 + 2nk.
template <typename T>
struct BnSpectrumT {
    T b0 = T(0);
    std::vector<T> levels;
};
using BnSpectrum = BnSpectrumT<double>;
using BnSpectrumExact = BnSpectrumT<Rat>;

// A solved ladder together with the s/a pair implied by the quadratic link.
template <typename T>
struct BnResultT {
    BnSpectrumT<T> spectrum;
    SpectrumPairT<T> pair;
};

// Finite angular-momentum ladder for total momentum j (stored as 2j so that
// half-integer j stays exact): magnetic numbers mu_k = -j + k and squared
// amplitudes |C_k|^2 = (j + mu_k + 1)(j - mu_k)/2.
struct AngularSpectrum {
    int two_j = 0;
    std::vector<Rat> mu;
    std::vector<Rat> c_sq;
};

// Spectrum pair with constant commutator eigenvalue a_k = a_value, produced
// by iterating the adjacent link from the ground condition: s_k = (2k+1) a.
template <typename T>
SpectrumPairT<T> solve_constant_gap(const T& a_value, std::size_t levels) {
    if (!(a_value > 0)) throw InvalidParameter("constant gap value must be positive");
    SpectrumPairT<T> pair;
    pair.a.assign(levels, a_value);
    pair.s.reserve(levels);
    if (levels > 0) {
        pair.s.push_back(a_value);
        for (std::size_t k = 1; k < levels; ++k)
            pair.s.push_back(pair.s[k - 1] + 2 * a_value);
    }
    return pair;
}

// Finite ladder solution for angular momentum from 2j alone.
AngularSpectrum solve_angular(int two_j);

// The s/a pair realized by an angular ladder: s_k = j(j+1) - mu_k^2 and
// a_k = -mu_k, marked finite because the ladder closes at mu = j.
SpectrumPairExact angular_pair(const AngularSpectrum& spectrum);

namespace detail {

template <typename T>
T sqrt_discriminant(const T& disc) {
    if constexpr (std::is_same_v<T, Rat>) {
        auto r = exact_sqrt(disc);
        if (!r)
            throw InvalidParameter(
                "discriminant 1 + 4*lambda is not a perfect square; exact mode cannot "
                "represent the root");
        return *r;
    } else {
        return std::sqrt(disc);
    }
}

}  // namespace detail

// Computes the pair implied by the quadratic link for given levels and checks
// the adjacent-link identity plus the ground quadratic
// 2n b_0 = b_0^2 + n^2 - 1 - 4*lambda. Throws ConsistencyViolation naming the
// first offending level.
template <typename T>
SpectrumPairT<T> verify_link(const BnProblemT<T>& problem, const BnSpectrumT<T>& spectrum,
                             Tolerance tol = {}) {
    if (problem.n < 1) throw InvalidParameter("step exponent n must be at least 1");
    const T shift = T(problem.n) * T(problem.n) - 1 - 4 * problem.lambda;
    SpectrumPairT<T> pair;
    pair.s.reserve(spectrum.levels.size());
    pair.a.reserve(spectrum.levels.size());
    for (const T& b : spectrum.levels) {
        pair.s.push_back(b * b + shift);
        pair.a.push_back(2 * problem.n * b);
    }
    const T b0 = spectrum.levels.empty() ? spectrum.b0 : spectrum.levels.front();
    {
        const T lhs = 2 * problem.n * b0;
        const T rhs = b0 * b0 + shift;
        if (!detail::close(lhs, rhs, T(abs_val(lhs) + abs_val(rhs)), tol))
            throw ConsistencyViolation("ground condition 2n b_0 = b_0^2 + n^2 - 1 - 4 lambda fails",
                                       0);
    }
    for (std::size_t k = 0; k + 1 < pair.s.size(); ++k) {
        const T lhs = pair.s[k + 1] - pair.s[k];
        const T rhs = pair.a[k + 1] + pair.a[k];
        if (!detail::close(lhs, rhs, T(abs_val(pair.s[k]) + abs_val(pair.s[k + 1])), tol))
            throw ConsistencyViolation(
                "adjacent link s_{k+1} - s_k = a_{k+1} + a_k fails at index " + std::to_string(k),
                k);
    }
    return pair;
}

// Solves the quadratic-link family: resolves b_0 = n +/- sqrt(1 + 4*lambda)
// per the sign policy, lays out b_k = b_0 + 2nk, guards against vanishing
// b_{k+1} + b_k (which the level recurrence divides by), and returns the
// implied pair after self-checking the adjacent link.
template <typename T>
BnResultT<T> solve_bn(const BnProblemT<T>& problem, std::size_t levels) {
    if (problem.n < 1) throw InvalidParameter("step exponent n must be at least 1");
    const T disc = 1 + 4 * problem.lambda;
    if (disc < 0)
        throw InvalidParameter("1 + 4*lambda is negative; the ground root would be complex");
    const T root = detail::sqrt_discriminant(disc);

    BnResultT<T> result;
    T b0;
    if (root == 0) {
        // Double root: both signs give b_0 = n, no ambiguity to resolve.
        b0 = T(problem.n);
    } else {
        switch (problem.sign) {
            case SignChoice::Plus:
                b0 = problem.n + root;
                break;
            case SignChoice::Minus:
                b0 = problem.n - root;
                break;
            case SignChoice::AutoNonNegative: {
                const T minus = problem.n - root;
                if (minus < 0) {
                    b0 = problem.n + root;
                } else {
                    throw UnresolvedSign(
                        "both ground roots are nonnegative; an explicit sign choice is "
                        "required");
                }
                break;
            }
        }
    }
    result.spectrum.b0 = b0;
    result.spectrum.levels.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k)
        result.spectrum.levels.push_back(b0 + 2 * problem.n * T(static_cast<long>(k)));
    for (std::size_t k = 0; k + 1 < levels; ++k) {
        if (result.spectrum.levels[k + 1] + result.spectrum.levels[k] == 0)
            throw DegenerateLadder("levels " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                   " sum to zero; the gap recurrence is singular there");
    }
    result.pair = verify_link(problem, result.spectrum);
    return result;
}

}  // namespace specladder
