#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "specladder/errors.hpp"
#include "specladder/rational.hpp"
#include "specladder/tolerance.hpp"

namespace specladder {

// A ladder is generated by a coefficient sequence {C_k}: the raising operator
// maps state k to state k+1 scaled by C_k, the lowering operator maps state k
// to state k-1 scaled by conj(C_{k-1}), and C_{-1} = 0 annihilates the ground
// state. A finite ladder additionally stores a vanishing top coefficient.
struct LadderSpec {
    std::vector<std::complex<double>> coeffs;  // C_k for k = 0..K-1
    bool finite = false;
    std::optional<std::size_t> k_max;  // top state index; defaults to K-1 when finite

    std::size_t top_index() const { return k_max ? *k_max : coeffs.size() - 1; }
    void validate() const;
};

// Eigenvalue sequences of the anticommutator S (s_k) and commutator A (a_k)
// of a ladder pair. `finite` records that the top level closes the ladder,
// which forces s_top = -a_top.
template <typename T>
struct SpectrumPairT {
    std::vector<T> s;
    std::vector<T> a;
    bool finite = false;
};
using SpectrumPair = SpectrumPairT<double>;
using SpectrumPairExact = SpectrumPairT<Rat>;

// Dense matrix realization of a truncated ladder. The top basis row D-1 of
// s_mat/a_mat misses the |C_{D-1}|^2 contribution from the discarded state
// above the truncation, so comparisons must exclude it.
struct MatrixRep {
    std::size_t dim = 0;
    Eigen::MatrixXcd raise;
    Eigen::MatrixXcd lower;
    Eigen::MatrixXcd s_mat;
    Eigen::MatrixXcd a_mat;
};

// Ladder whose raising operator connects k to k+T. Coefficients below index 0
// are zero, so the first T levels play the role of ground states.
struct TStepSpec {
    std::size_t T = 1;
    std::vector<std::complex<double>> coeffs_T;

    void validate() const;
};

// Outcome of checking a spectrum pair against the s/a identities: ground
// condition s_0 = a_0, adjacent-link condition s_{k+1} - s_k = a_{k+1} + a_k,
// bound s_k >= |a_k|, and the top closure s + a = 0 on finite ladders.
struct ConsistencyReport {
    bool consistent = true;
    std::size_t first_violation = 0;
    std::string detail;
};

namespace detail {

template <typename T>
bool close(const T& x, const T& y, const T& scale, const Tolerance& tol) {
    if constexpr (std::is_same_v<T, Rat>) {
        (void)scale;
        (void)tol;
        return x == y;
    } else {
        return tol.within(x - y, scale);
    }
}

template <typename T>
void require_nonnegative_sq(const std::vector<T>& c_sq) {
    for (std::size_t k = 0; k < c_sq.size(); ++k)
        if (c_sq[k] < 0)
            throw InvalidParameter("squared amplitude at index " + std::to_string(k) +
                                   " is negative");
}

}  // namespace detail

// Spectrum pair from squared amplitudes |C_k|^2, for a ladder with step
// t_step: s_k = |C_k|^2 + |C_{k-t}|^2, a_k = |C_k|^2 - |C_{k-t}|^2 with
// out-of-range amplitudes equal to zero. Exact when T is Rat.
template <typename T>
SpectrumPairT<T> spectrum_from_coeff_sq(const std::vector<T>& c_sq, bool finite = false,
                                        std::size_t t_step = 1) {
    if (c_sq.empty()) throw InvalidParameter("coefficient sequence must be nonempty");
    if (t_step == 0) throw InvalidParameter("ladder step must be at least 1");
    detail::require_nonnegative_sq(c_sq);
    if (finite && c_sq.back() != 0)
        throw InvalidParameter("finite ladder requires a vanishing top coefficient");
    const std::size_t K = c_sq.size();
    SpectrumPairT<T> pair;
    pair.finite = finite;
    pair.s.reserve(K);
    pair.a.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        const T below = k >= t_step ? c_sq[k - t_step] : T(0);
        pair.s.push_back(c_sq[k] + below);
        pair.a.push_back(c_sq[k] - below);
    }
    return pair;
}

// Spectrum pair of a complex coefficient ladder; phases drop out because only
// |C_k|^2 enters s and a.
SpectrumPair spectrum_from_coeffs(const LadderSpec& spec);

// Inverts the pair back to squared amplitudes via |C_k|^2 = (s_k + a_k)/2 and
// cross-checks the equivalent interior expression (s_{k+1} - a_{k+1})/2.
// Throws ConsistencyViolation when the two disagree or an amplitude is
// negative beyond tolerance (exactly negative in Rat mode).
template <typename T>
std::vector<T> coeffs_from_spectrum(const SpectrumPairT<T>& pair, Tolerance tol = {}) {
    const std::size_t K = pair.s.size();
    if (K == 0 || pair.a.size() != K)
        throw InvalidParameter("spectrum pair must hold equal-length nonempty sequences");
    std::vector<T> c_sq;
    c_sq.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        T c = (pair.s[k] + pair.a[k]) / 2;
        if (k + 1 < K) {
            const T alt = (pair.s[k + 1] - pair.a[k + 1]) / 2;
            const T scale = abs_val(pair.s[k]) + abs_val(pair.s[k + 1]);
            if (!detail::close(c, alt, scale, tol))
                throw ConsistencyViolation(
                    "adjacent levels disagree on the squared amplitude at index " +
                        std::to_string(k),
                    k);
        }
        if constexpr (std::is_same_v<T, Rat>) {
            if (c < 0)
                throw ConsistencyViolation(
                    "negative squared amplitude at index " + std::to_string(k), k);
        } else {
            if (c < -(tol.abs + tol.rel * std::abs(pair.s[k])))
                throw ConsistencyViolation(
                    "negative squared amplitude at index " + std::to_string(k), k);
        }
        c_sq.push_back(std::move(c));
    }
    return c_sq;
}

// Checks all pair identities level by level and reports the first violation.
template <typename T>
ConsistencyReport check_pair(const SpectrumPairT<T>& pair, Tolerance tol = {}) {
    const std::size_t K = pair.s.size();
    ConsistencyReport report;
    if (K == 0 || pair.a.size() != K)
        throw InvalidParameter("spectrum pair must hold equal-length nonempty sequences");
    auto fail = [&report](std::size_t k, const std::string& what) {
        report.consistent = false;
        report.first_violation = k;
        report.detail = what;
    };
    for (std::size_t k = 0; k < K; ++k) {
        if (k == 0 && !detail::close(pair.s[0], pair.a[0], abs_val(pair.s[0]), tol)) {
            fail(0, "ground condition s_0 = a_0 fails");
            return report;
        }
        // Bound s_k >= |a_k|, with the same tolerance slack in floating point.
        if constexpr (std::is_same_v<T, Rat>) {
            if (pair.s[k] < abs_val(pair.a[k])) {
                fail(k, "bound s_k >= |a_k| fails");
                return report;
            }
        } else {
            if (pair.s[k] < std::abs(pair.a[k]) - (tol.abs + tol.rel * std::abs(pair.s[k]))) {
                fail(k, "bound s_k >= |a_k| fails");
                return report;
            }
        }
        if (k + 1 < K) {
            const T lhs = pair.s[k + 1] - pair.s[k];
            const T rhs = pair.a[k + 1] + pair.a[k];
            const T scale = abs_val(pair.s[k]) + abs_val(pair.s[k + 1]);
            if (!detail::close(lhs, rhs, scale, tol)) {
                fail(k, "adjacent link s_{k+1} - s_k = a_{k+1} + a_k fails");
                return report;
            }
        }
        if (k + 1 == K && pair.finite &&
            !detail::close(pair.s[k], T(-pair.a[k]), abs_val(pair.s[k]), tol)) {
            fail(k, "top closure s + a = 0 fails");
            return report;
        }
    }
    return report;
}

// s_k obtained by iterating the adjacent link upward from s_0 = a_0.
template <typename T>
std::vector<T> s_from_a_iterated(const std::vector<T>& a) {
    if (a.empty()) throw InvalidParameter("a-sequence must be nonempty");
    std::vector<T> s;
    s.reserve(a.size());
    s.push_back(a[0]);
    for (std::size_t k = 1; k < a.size(); ++k) s.push_back(s[k - 1] + a[k] + a[k - 1]);
    return s;
}

// s_k from the closed alternating sum s_k = a_k + 2*sum_{i<k} (-1)^{k-1-i} s_i.
// Must agree with s_from_a_iterated; kept separate so the two derivations can
// be checked against each other.
template <typename T>
std::vector<T> s_from_a_alternating(const std::vector<T>& a) {
    if (a.empty()) throw InvalidParameter("a-sequence must be nonempty");
    std::vector<T> s;
    s.reserve(a.size());
    T alt(0);  // sum_{i<k} (-1)^{k-1-i} s_i
    for (std::size_t k = 0; k < a.size(); ++k) {
        s.push_back(a[k] + 2 * alt);
        alt = s[k] - alt;
    }
    return s;
}

// a-sequence implied by an s-sequence for a ladder of step T: the first T
// levels are ground levels with a_j = s_j, and above them the adjacent link
// at step T gives a_k = s_k - s_{k-T} - a_{k-T}.
template <typename T>
std::vector<T> a_from_s_with_step(const std::vector<T>& s, std::size_t t_step = 1) {
    if (s.empty()) throw InvalidParameter("s-sequence must be nonempty");
    if (t_step == 0) throw InvalidParameter("ladder step must be at least 1");
    std::vector<T> a;
    a.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        a.push_back(k >= t_step ? T(s[k] - s[k - t_step] - a[k - t_step]) : s[k]);
    return a;
}

// Truncated matrix realization on D basis states; requires D <= K+1 so every
// stored subdiagonal entry C_0..C_{D-2} exists.
MatrixRep build_ladder_matrices(const LadderSpec& spec, std::size_t D);

// Spectrum pair of a T-step ladder, indexed with step T.
SpectrumPair build_t_step(const TStepSpec& tspec);

}  // namespace specladder
