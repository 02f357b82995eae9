#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "specladder/errors.hpp"
#include "specladder/models.hpp"

namespace specladder {

// Uniform grid description. The plain Dirichlet discretizer places nodes on
// [q_min, q_max] endpoints included, so its matrix acts on the points-2
// interior nodes with spacing (q_max - q_min)/(points - 1). The weighted
// radial discretizer instead reads `points` as the number of cells covering
// (0, q_max] and ignores q_min: the origin is part of the scheme, not a
// boundary to be cut off.
struct Grid {
    double q_min = 0.0;
    double q_max = 1.0;
    std::size_t points = 100;

    double spacing() const { return (q_max - q_min) / static_cast<double>(points - 1); }
    void validate() const;
};

// Symmetric tridiagonal matrix: diag holds the D diagonal entries, off the
// D-1 subdiagonal entries.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t dim() const { return diag.size(); }
    void validate() const;
};

// Side-by-side algebraic vs numeric eigenvalues with per-level errors.
// rel_err is abs_err/|algebraic| (infinity when the algebraic value is zero
// and the error is not). pass holds exactly when every level satisfies
// |algebraic - numeric| <= tol_abs + tol_rel * |algebraic|.
struct OracleReport {
    std::string model_name;
    std::string unit;
    std::vector<double> algebraic;
    std::vector<double> numeric;
    std::vector<double> abs_err;
    std::vector<double> rel_err;
    std::string grid_info;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    bool pass = false;
    std::vector<std::string> warnings;
};

// Lowest `count` eigenvalues of a symmetric tridiagonal matrix, ascending.
// Deterministic; throws ConvergenceFailure if the internal iteration fails.
std::vector<double> eig_tridiagonal(const TridiagonalOperator& op, std::size_t count);

// Plain second-order discretization of kinetic_coeff * (-d^2/dq^2) + V(q)
// with Dirichlet conditions at both grid endpoints. The matrix acts on the
// interior nodes q_min + i*h, i = 1..points-2.
TridiagonalOperator discretize_potential(const Grid& grid, const std::function<double(double)>& V,
                                         double kinetic_coeff = 1.0);

// Weighted cell-centered discretization of
//   kinetic_coeff * (-d^2/dq^2 + lam/q^2) + W(q)
// on (0, q_max] with Dirichlet at q_max. Substituting u = q^s v with
// s(s-1) = lam turns the singular term into the Sturm-Liouville weight
// q^{2s}, so the scheme stays second-order accurate even at the critical
// strength lam = -1/4 where plain differencing loses convergence. Cell
// centers sit at (i+1/2)h, i = 0..cells-1, h = q_max/cells; the origin face
// carries zero flux weight, which encodes the regular solution. The returned
// matrix is the symmetrized form of the generalized problem, with the same
// eigenvalues as the operator. W must be bounded on (0, q_max] after
// multiplication by q^{2s} (Coulomb-type 1/q terms are fine).
TridiagonalOperator discretize_radial(double q_max, std::size_t cells, double lam,
                                      const std::function<double(double)>& W,
                                      double kinetic_coeff = 1.0);

// Lowest eigenvalues of -d^2/dq^2 + lam/q^2 + q^2 for the N-dimensional
// radial oscillator (N in {2,3}); they approximate the gap-4 ladder
// b_k = b_0 + 4k, i.e. twice the energies in units hbar*omega.
std::vector<double> solve_oscillator_radial(int N, int l, const Grid& grid, std::size_t count);

// Lowest eigenvalues of -(1/2) d^2/dr^2 + lam/(2 r^2) - Z/r in units
// hbar = m = e = 1; bound energies approximating -Z^2/(2 n^2). Throws
// InsufficientBoundStates when fewer than `count` negative eigenvalues fit
// in the box.
std::vector<double> solve_hydrogen_radial(int N, int l, int Z, const Grid& grid,
                                          std::size_t count);

struct DiracOracleOptions {
    std::size_t points = 1500;   // cells per trial eigensolve
    double box_factor = 3.0;     // r_max = box_factor*(n_eff^2 + 4 n_eff)/alpha
    double bisect_tol = 1e-10;   // bisection width on the energy in (0,1)
    double e_lo = 0.5;           // lower bracket end
    std::size_t scan_points = 5; // monotonicity pre-scan resolution
};

// Root-finds the relativistic hydrogen levels: for each k, the energy E in
// (0,1) at which the k-th eigenvalue of -d^2/dr^2 + lambda_D/r^2 - 2 Z alpha E/r
// equals E^2 - 1. The defect is strictly decreasing in E; a coarse scan
// verifies that before bisection. Throws RootBracketFailure when the bracket
// holds no sign change or the scan is not monotone.
std::vector<double> solve_dirac_radial(int l, double alpha_fs, std::size_t count,
                                       const DiracOracleOptions& options = {});

// Lowest eigenvalues of the truncated-basis matrix H = diag(k + 1/2) + eps*X^4
// in units hbar = m = omega = 1, with X built from the oscillator ladder.
// Requires basis_dim >= count + 20; re-runs with 20 more basis states and
// throws TruncationWarning if any requested level moves by more than
// sensitivity_tol.
std::vector<double> solve_perturbed_ho(double epsilon, std::size_t basis_dim, std::size_t count,
                                       double sensitivity_tol = 1e-8);

// Builds the error report for an algebraic spectrum against oracle values
// expressed in the same unit. The caller converts the oracle output and tags
// it; a differing tag throws UnitMismatch, mismatched lengths DimensionError.
// Comparing zero levels passes vacuously with a warning entry.
OracleReport compare(const ModelSpectrum& algebraic, const std::vector<double>& numeric,
                     const std::string& unit_numeric, double tol_abs, double tol_rel,
                     const std::string& grid_info = "");

}  // namespace specladder
