#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "specladder/models.hpp"

using namespace specladder;

namespace {

// Largest deviation of the raised state from sin((k+1)y) on the grid.
double action_err(int k, std::size_t points) {
    const std::vector<double> out = well_ladder_action(k, points);
    const double h = std::acos(-1.0) / static_cast<double>(points - 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double target = std::sin((k + 1) * (static_cast<double>(i) * h));
        worst = std::max(worst, std::abs(out[i] - target));
    }
    return worst;
}

}  // namespace

TEST_CASE("1d oscillator energies are uniformly spaced half-integers") {
    const PhysicalUnits units;
    const ModelSpectrum spec = ho_1d(units, 4);
    CHECK(spec.unit == "hbar*omega");
    REQUIRE(spec.levels.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(spec.levels[k].energy == doctest::Approx(static_cast<double>(k) + 0.5));
        CHECK(spec.levels[k].labels[0].first == "k");
        CHECK(spec.levels[k].labels[0].second == static_cast<double>(k));
    }

    PhysicalUnits doubled;
    doubled.omega = 2.0;
    const ModelSpectrum fast = ho_1d(doubled, 2);
    CHECK(fast.levels[0].energy == doctest::Approx(1.0));
    CHECK(fast.levels[1].energy == doctest::Approx(3.0));

    const SpectrumPairExact pair = ho_1d_pair(64);
    for (long k = 0; k < 64; ++k) CHECK(pair.s[k] == Rat(2 * k + 1, 2));
}

TEST_CASE("angular momentum model reports mu ladders") {
    const ModelSpectrum spec = angular_momentum(2);
    REQUIRE(spec.levels.size() == 3);
    CHECK(spec.levels[0].energy == doctest::Approx(-1.0));
    CHECK(spec.levels[1].energy == doctest::Approx(0.0));
    CHECK(spec.levels[2].energy == doctest::Approx(1.0));
    CHECK(spec.levels[0].labels[1].first == "c_sq");
    CHECK(spec.levels[0].labels[1].second == doctest::Approx(1.0));
    CHECK(spec.levels[2].labels[1].second == doctest::Approx(0.0));
    CHECK(spec.unit == "hbar");
}

TEST_CASE("radial strength parameter") {
    CHECK(radial_lambda(3, 0) == Rat(0));
    CHECK(radial_lambda(2, 0) == Rat(-1, 4));
    CHECK(radial_lambda(3, 1) == Rat(2));
    CHECK(radial_lambda(2, 1) == Rat(3, 4));
    CHECK(radial_lambda(1, 0) == Rat(0));
    CHECK_THROWS_AS(radial_lambda(3, -1), InvalidParameter);

    // 1 + 4*lambda = (N + 2l - 2)^2, so the exact solver always has a root.
    for (int N = 1; N <= 3; ++N) {
        for (int l = 0; l <= 6; ++l) {
            const auto root = exact_sqrt(1 + 4 * radial_lambda(N, l));
            REQUIRE(root.has_value());
            CHECK(*root == Rat(std::abs(N + 2 * l - 2)));
        }
    }
}

TEST_CASE("isotropic oscillator ladder matches the closed-form energies") {
    for (int N = 2; N <= 3; ++N) {
        for (int l = 0; l <= 4; ++l) {
            const BnResultT<Rat> sol = iso_ho_bn(N, l, 6);
            const ModelSpectrum spec = iso_ho_nd(PhysicalUnits{}, N, l, 6);
            for (long k = 0; k < 6; ++k) {
                CHECK(sol.spectrum.levels[k] == Rat(4 * k + 2 * l + N));
                const double expected = 2.0 * k + l + N / 2.0;
                CHECK(spec.levels[k].energy == doctest::Approx(expected));
            }
        }
    }
    CHECK_THROWS_AS(iso_ho_bn(4, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(iso_ho_nd(PhysicalUnits{}, 1, 0, 1), InvalidParameter);
}

TEST_CASE("hydrogen-like energies follow -1/(2 n^2)") {
    SUBCASE("three dimensions") {
        const std::vector<Rat> e = hydrogen_levels_exact(3, 0, 3);
        CHECK(e[0] == Rat(-1, 2));
        CHECK(e[1] == Rat(-1, 8));
        CHECK(e[2] == Rat(-1, 18));
        const ModelSpectrum spec = hydrogen_nd(PhysicalUnits{}, 3, 0, 3);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(spec.levels[k].energy == doctest::Approx(to_double(e[k])));
            // Principal number label n = 1, 2, 3.
            CHECK(spec.levels[k].labels[2].first == "n");
            CHECK(spec.levels[k].labels[2].second ==
                  doctest::Approx(static_cast<double>(k) + 1.0));
        }
        CHECK(spec.unit == "Z^2 e^4 m/hbar^2");
    }
    SUBCASE("two dimensions binds four times deeper at l = 0") {
        const std::vector<Rat> e = hydrogen_levels_exact(2, 0, 2);
        CHECK(e[0] == Rat(-2));
        CHECK(e[1] == Rat(-2, 9));
    }
    SUBCASE("one dimension skips the infinitely bound bottom level") {
        const BnResultT<Rat> raw = hydrogen_bn(1, 0, 3);
        CHECK(raw.spectrum.levels == std::vector<Rat>{Rat(0), Rat(2), Rat(4)});
        const std::vector<Rat> e = hydrogen_levels_exact(1, 0, 2);
        CHECK(e[0] == Rat(-1, 2));
        CHECK(e[1] == Rat(-1, 8));
        const ModelSpectrum spec = hydrogen_nd(PhysicalUnits{}, 1, 0, 2);
        // Ladder index labels start at 1 because index 0 was dropped.
        CHECK(spec.levels[0].labels[0].second == doctest::Approx(1.0));
        CHECK(spec.levels[1].labels[0].second == doctest::Approx(2.0));
    }
    SUBCASE("accidental degeneracy across l") {
        CHECK(hydrogen_levels_exact(3, 0, 2)[1] == hydrogen_levels_exact(3, 1, 1)[0]);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(hydrogen_bn(1, 1, 1), InvalidParameter);
        CHECK_THROWS_AS(hydrogen_bn(5, 0, 1), InvalidParameter);
        CHECK_THROWS_AS(hydrogen_bn(0, 0, 1), InvalidParameter);
    }
}

TEST_CASE("relativistic hydrogen levels") {
    SUBCASE("reference values at the physical coupling") {
        const DiracParams ground;  // l = 0, alpha = 1/137.035999, Z = 1
        const ModelSpectrum spec = dirac_hydrogen(ground, 2);
        CHECK(std::abs(spec.levels[0].energy - 0.999973372550192192) <= 1e-14);
        CHECK(std::abs(spec.levels[1].energy - 0.999993343292648622) <= 1e-14);

        DiracParams excited;
        excited.l = 1;
        const ModelSpectrum spec_l1 = dirac_hydrogen(excited, 1);
        CHECK(std::abs(spec_l1.levels[0].energy - 0.999993343528983564) <= 1e-14);
    }
    SUBCASE("nonrelativistic limit per level") {
        const DiracParams params;
        const double za = params.za();
        for (int l = 0; l <= 2; ++l) {
            DiracParams p;
            p.l = l;
            const ModelSpectrum spec = dirac_hydrogen(p, 4);
            for (std::size_t k = 0; k < 4; ++k) {
                const double n = static_cast<double>(k) + l + 1.0;
                const double leading = 1.0 - za * za / (2.0 * n * n);
                CHECK(std::abs(spec.levels[k].energy - leading) <=
                      10.0 * za * za * za * za);
            }
        }
    }
    SUBCASE("levels increase toward the rest energy") {
        const ModelSpectrum spec = dirac_hydrogen(DiracParams{}, 5);
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(spec.levels[k].energy < 1.0);
            if (k > 0) CHECK(spec.levels[k].energy > spec.levels[k - 1].energy);
        }
    }
    SUBCASE("weak-coupling ground level") {
        DiracParams weak;
        weak.alpha_fs = 1e-4;
        const ModelSpectrum spec = dirac_hydrogen(weak, 1);
        CHECK(std::abs(spec.levels[0].energy - (1.0 - 0.5e-8)) <= 1e-15);
    }
    SUBCASE("parameter domain") {
        DiracParams p;
        p.alpha_fs = 0.0;
        CHECK_THROWS_AS(p.validate(), InvalidParameter);
        p.alpha_fs = 0.2;
        CHECK_THROWS_AS(p.validate(), InvalidParameter);
        p = DiracParams{};
        p.Z = 2;
        CHECK_THROWS_AS(p.validate(), InvalidParameter);
        p.allow_z_extension = true;
        CHECK_NOTHROW(p.validate());
        p = DiracParams{};
        p.l = -1;
        CHECK_THROWS_AS(p.validate(), InvalidParameter);
        // Z*alpha = 0.6 drives lambda_D below -1/4; no real ground level.
        p = DiracParams{};
        p.Z = 6;
        p.alpha_fs = 0.1;
        p.allow_z_extension = true;
        CHECK_THROWS_AS(dirac_hydrogen(p, 1), InvalidParameter);
        // The boundary value itself is excluded too.
        p.Z = 5;
        CHECK_THROWS_AS(p.validate(), InvalidParameter);
    }
}

TEST_CASE("square well spectrum and ladder amplitudes") {
    const ModelSpectrum spec = square_well(PhysicalUnits{}, 3);
    CHECK(spec.levels[0].energy == doctest::Approx(1.0));
    CHECK(spec.levels[1].energy == doctest::Approx(4.0));
    CHECK(spec.levels[2].energy == doctest::Approx(9.0));
    CHECK(spec.levels[0].labels[0].second == doctest::Approx(1.0));

    const double pi = std::acos(-1.0);
    CHECK(spec.params[3].first == "E1");
    CHECK(spec.params[3].second == doctest::Approx(pi * pi / 2.0));
    PhysicalUnits wide;
    wide.length_L = 2.0;
    CHECK(square_well(wide, 1).params[3].second == doctest::Approx(pi * pi / 8.0));

    const std::vector<Rat> c_sq = square_well_coeff_sq(4);
    CHECK(c_sq == std::vector<Rat>{Rat(0), Rat(1), Rat(3), Rat(6)});
    const SpectrumPairExact pair = spectrum_from_coeff_sq(c_sq);
    for (long k = 0; k < 4; ++k) {
        CHECK(pair.s[k] == Rat(k * k));
        CHECK(pair.a[k] == Rat(k));
    }
}

TEST_CASE("square-well raising action lands on the next eigenfunction") {
    CHECK(action_err(1, 1001) <= 1e-5);
    CHECK(action_err(2, 1000) <= 1e-4);
    // Second-order scheme: halving the step quarters the error.
    const double ratio = action_err(5, 1001) / action_err(5, 2001);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);

    CHECK_THROWS_AS(well_ladder_action(0, 1000), InvalidParameter);
    CHECK_THROWS_AS(well_ladder_action(1, 199), InvalidParameter);
}

TEST_CASE("first-order quartic corrections") {
    const std::vector<Rat> corr = perturbed_ho_corrections(65);
    for (long k = 0; k < 65; ++k) CHECK(corr[k] == Rat(k) * k + k + Rat(1, 2));
    CHECK(perturbed_ho_corrections(0).empty());

    const ModelSpectrum spec = perturbed_ho(PhysicalUnits{}, 1e-4, 4);
    CHECK(spec.levels[0].energy == doctest::Approx(7.5e-5));
    CHECK(spec.levels[1].energy == doctest::Approx(3.75e-4));
    CHECK(spec.levels[2].energy == doctest::Approx(9.75e-4));
    CHECK(spec.levels[3].energy == doctest::Approx(1.875e-3));

    PhysicalUnits stiff;
    stiff.omega = 2.0;
    const ModelSpectrum scaled = perturbed_ho(stiff, 1e-4, 1);
    CHECK(scaled.levels[0].energy == doctest::Approx(7.5e-5 / 4.0));
}

TEST_CASE("physical unit validation") {
    PhysicalUnits u;
    CHECK_NOTHROW(u.validate());
    u.hbar = -1.0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
    u = PhysicalUnits{};
    u.mass = 0.0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
    u = PhysicalUnits{};
    u.omega = -2.0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
    u = PhysicalUnits{};
    u.length_L = 0.0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
    u = PhysicalUnits{};
    u.Z = 0;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
    u = PhysicalUnits{};
    u.alpha_fs = 0.2;
    CHECK_THROWS_AS(u.validate(), InvalidParameter);
}

TEST_CASE("zero requested levels produce empty spectra") {
    CHECK(ho_1d(PhysicalUnits{}, 0).levels.empty());
    CHECK(hydrogen_nd(PhysicalUnits{}, 3, 0, 0).levels.empty());
    CHECK(square_well(PhysicalUnits{}, 0).levels.empty());
    CHECK(perturbed_ho(PhysicalUnits{}, 1e-4, 0).levels.empty());
}
