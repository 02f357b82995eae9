#include "specladder/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace specladder {

void Grid::validate() const {
    if (!(q_min < q_max)) throw InvalidParameter("grid requires q_min < q_max");
    if (points < 100) throw InvalidParameter("grid must have at least 100 points");
}

void TridiagonalOperator::validate() const {
    if (diag.empty()) throw InvalidParameter("tridiagonal operator must be nonempty");
    if (off.size() + 1 != diag.size())
        throw InvalidParameter("off-diagonal length must be one less than the diagonal");
}

std::vector<double> eig_tridiagonal(const TridiagonalOperator& op, std::size_t count) {
    op.validate();
    const std::size_t n = op.dim();
    if (count > n)
        throw DimensionError("requested " + std::to_string(count) + " eigenvalues of a " +
                             std::to_string(n) + "-dimensional operator");
    if (count == 0) return {};
    if (n == 1) return {op.diag[0]};

    Eigen::Map<const Eigen::VectorXd> diag(op.diag.data(), static_cast<Eigen::Index>(n));
    Eigen::Map<const Eigen::VectorXd> off(op.off.data(), static_cast<Eigen::Index>(n - 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("tridiagonal eigensolver did not converge for dimension " +
                                 std::to_string(n));
    std::vector<double> lowest(count);
    for (std::size_t j = 0; j < count; ++j)
        lowest[j] = solver.eigenvalues()(static_cast<Eigen::Index>(j));
    return lowest;
}

TridiagonalOperator discretize_potential(const Grid& grid,
                                         const std::function<double(double)>& V,
                                         double kinetic_coeff) {
    grid.validate();
    if (!(kinetic_coeff > 0)) throw InvalidParameter("kinetic coefficient must be positive");
    const std::size_t interior = grid.points - 2;
    const double h = grid.spacing();
    const double inv_h2 = kinetic_coeff / (h * h);
    TridiagonalOperator op;
    op.diag.resize(interior);
    op.off.assign(interior - 1, -inv_h2);
    for (std::size_t i = 0; i < interior; ++i) {
        const double q = grid.q_min + static_cast<double>(i + 1) * h;
        op.diag[i] = 2.0 * inv_h2 + V(q);
    }
    return op;
}

TridiagonalOperator discretize_radial(double q_max, std::size_t cells, double lam,
                                      const std::function<double(double)>& W,
                                      double kinetic_coeff) {
    if (!(q_max > 0)) throw InvalidParameter("q_max must be positive");
    if (cells < 100) throw InvalidParameter("grid must have at least 100 points");
    if (!(kinetic_coeff > 0)) throw InvalidParameter("kinetic coefficient must be positive");
    if (!(lam >= -0.25))
        throw InvalidParameter("inverse-square strength below -1/4 has no regular solution");
    const double s = 0.5 + std::sqrt(0.25 + lam);
    const double h = q_max / static_cast<double>(cells);
    const double inv_h2 = 1.0 / (h * h);

    std::vector<double> weight(cells);    // q_i^{2s} at the cell centers
    std::vector<double> flux(cells);      // kinetic * face^{2s} at the right faces
    for (std::size_t i = 0; i < cells; ++i) {
        const double center = (static_cast<double>(i) + 0.5) * h;
        const double face = static_cast<double>(i + 1) * h;
        weight[i] = std::pow(center, 2.0 * s);
        flux[i] = kinetic_coeff * std::pow(face, 2.0 * s);
    }

    TridiagonalOperator op;
    op.diag.resize(cells);
    op.off.resize(cells - 1);
    for (std::size_t i = 0; i < cells; ++i) {
        const double flux_left = (i == 0) ? 0.0 : flux[i - 1];  // zero-flux origin face
        const double center = (static_cast<double>(i) + 0.5) * h;
        const double raw = (flux_left + flux[i]) * inv_h2 + weight[i] * W(center);
        op.diag[i] = raw / weight[i];
    }
    for (std::size_t i = 0; i + 1 < cells; ++i)
        op.off[i] = -flux[i] * inv_h2 / std::sqrt(weight[i] * weight[i + 1]);
    return op;
}

std::vector<double> solve_oscillator_radial(int N, int l, const Grid& grid, std::size_t count) {
    if (N != 2 && N != 3) throw InvalidParameter("N must be 2 or 3");
    if (l < 0) throw InvalidParameter("l must be nonnegative");
    grid.validate();
    const double lam = to_double(radial_lambda(N, l));
    const TridiagonalOperator op =
        discretize_radial(grid.q_max, grid.points, lam, [](double q) { return q * q; });
    return eig_tridiagonal(op, count);
}

std::vector<double> solve_hydrogen_radial(int N, int l, int Z, const Grid& grid,
                                          std::size_t count) {
    if (N < 1 || N > 3) throw InvalidParameter("N must be 1, 2 or 3");
    if (l < 0) throw InvalidParameter("l must be nonnegative");
    if (N == 1 && l != 0) throw InvalidParameter("l must be 0 when N is 1");
    if (Z < 1) throw InvalidParameter("Z must be a positive integer");
    grid.validate();
    const double lam = to_double(radial_lambda(N, l));
    const double charge = static_cast<double>(Z);
    const TridiagonalOperator op = discretize_radial(
        grid.q_max, grid.points, lam, [charge](double r) { return -charge / r; }, 0.5);
    std::vector<double> evals = eig_tridiagonal(op, count);
    for (std::size_t j = 0; j < evals.size(); ++j) {
        if (!(evals[j] < 0))
            throw InsufficientBoundStates("only " + std::to_string(j) +
                                          " bound states fit in the box; requested " +
                                          std::to_string(count));
    }
    return evals;
}

std::vector<double> solve_dirac_radial(int l, double alpha_fs, std::size_t count,
                                       const DiracOracleOptions& options) {
    DiracParams params;
    params.l = l;
    params.alpha_fs = alpha_fs;
    params.validate();
    if (!(options.e_lo > 0 && options.e_lo < 1))
        throw InvalidParameter("bracket start must lie in (0, 1)");
    if (options.scan_points < 2) throw InvalidParameter("scan needs at least 2 points");
    const double lam = params.lambda_D();

    std::vector<double> roots;
    roots.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double n_eff = static_cast<double>(l + 1 + k);
        const double r_max = options.box_factor * (n_eff * n_eff + 4.0 * n_eff) / alpha_fs;
        auto defect = [&](double E) {
            const TridiagonalOperator op = discretize_radial(
                r_max, options.points, lam,
                [&](double r) { return -2.0 * params.c_E(E) / r; });
            const std::vector<double> evals = eig_tridiagonal(op, k + 1);
            return evals[k] - (E * E - 1.0);
        };

        double lo = options.e_lo;
        double hi = 1.0 - 1e-12;
        // The defect decreases in E: the Coulomb well deepens while the
        // target E^2 - 1 rises. Scan to confirm before trusting bisection.
        double prev = defect(lo);
        const double f_lo = prev;
        for (std::size_t i = 1; i < options.scan_points; ++i) {
            const double e = lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(options.scan_points - 1);
            const double f = defect(e);
            if (!(f < prev))
                throw RootBracketFailure("defect is not strictly decreasing on the bracket");
            prev = f;
        }
        const double f_hi = prev;
        if (!(f_lo > 0.0) || !(f_hi < 0.0))
            throw RootBracketFailure("no sign change in the energy bracket for level " +
                                     std::to_string(k));
        while (hi - lo > options.bisect_tol) {
            const double mid = 0.5 * (lo + hi);
            if (defect(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

std::vector<double> solve_perturbed_ho(double epsilon, std::size_t basis_dim, std::size_t count,
                                       double sensitivity_tol) {
    if (basis_dim < count + 20)
        throw InvalidParameter("basis dimension must exceed the requested count by at least 20");

    auto lowest = [epsilon, count](std::size_t dim) {
        LadderSpec spec;
        spec.coeffs.reserve(dim - 1);
        for (std::size_t k = 0; k + 1 < dim; ++k)
            spec.coeffs.push_back(std::sqrt(0.5 * static_cast<double>(k + 1)));
        const MatrixRep rep = build_ladder_matrices(spec, dim);
        const Eigen::MatrixXd x = (rep.raise + rep.lower).real();
        const Eigen::MatrixXd x2 = x * x;
        Eigen::MatrixXd h = epsilon * (x2 * x2);
        for (std::size_t k = 0; k < dim; ++k)
            h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) +=
                static_cast<double>(k) + 0.5;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw ConvergenceFailure("dense eigensolver did not converge for dimension " +
                                     std::to_string(dim));
        std::vector<double> evals(count);
        for (std::size_t j = 0; j < count; ++j)
            evals[j] = solver.eigenvalues()(static_cast<Eigen::Index>(j));
        return evals;
    };

    std::vector<double> evals = lowest(basis_dim);
    const std::vector<double> retry = lowest(basis_dim + 20);
    for (std::size_t j = 0; j < count; ++j) {
        if (std::abs(evals[j] - retry[j]) > sensitivity_tol)
            throw TruncationWarning("level " + std::to_string(j) + " moves by " +
                                    std::to_string(std::abs(evals[j] - retry[j])) +
                                    " when the basis grows; increase basis_dim");
    }
    return evals;
}

OracleReport compare(const ModelSpectrum& algebraic, const std::vector<double>& numeric,
                     const std::string& unit_numeric, double tol_abs, double tol_rel,
                     const std::string& grid_info) {
    if (algebraic.unit != unit_numeric)
        throw UnitMismatch("algebraic values are per '" + algebraic.unit +
                           "' but numeric values are per '" + unit_numeric + "'");
    if (algebraic.levels.size() != numeric.size())
        throw DimensionError("level count mismatch: " + std::to_string(algebraic.levels.size()) +
                             " algebraic vs " + std::to_string(numeric.size()) + " numeric");
    OracleReport report;
    report.model_name = algebraic.model_name;
    report.unit = algebraic.unit;
    report.grid_info = grid_info;
    report.tol_abs = tol_abs;
    report.tol_rel = tol_rel;
    report.pass = true;
    const std::size_t n = numeric.size();
    report.algebraic.reserve(n);
    report.numeric.reserve(n);
    report.abs_err.reserve(n);
    report.rel_err.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = algebraic.levels[j].energy;
        const double diff = std::abs(a - numeric[j]);
        report.algebraic.push_back(a);
        report.numeric.push_back(numeric[j]);
        report.abs_err.push_back(diff);
        report.rel_err.push_back(a != 0.0 ? diff / std::abs(a)
                                 : diff == 0.0 ? 0.0
                                               : std::numeric_limits<double>::infinity());
        if (diff > tol_abs + tol_rel * std::abs(a)) report.pass = false;
    }
    if (n == 0) report.warnings.push_back("no levels compared; vacuous pass");
    return report;
}

}  // namespace specladder
