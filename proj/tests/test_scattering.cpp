#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oamrcs/angles.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/scattering.hpp"
#include "test_support.hpp"

using namespace oamrcs;
using oamrcs::test::close;

namespace {

const double kX = kTwoPi / 0.03;  // 10 GHz nominal wavenumber

// Reference values from tests/oracles/compute_oracles.py.
constexpr double kOamL5AtPiOver3 = 1.3711397166236838651;
constexpr double kBeta1Extremum = 0.047050141970433823887;
constexpr double kAlphaExtremum = 167.55160819145563938;
constexpr double kThreeScatterer = 7.5869998894168901069;

// Straightforward complex sum, independent of the library's phase reduction
// and kernels.
double brute_force_ratio(const std::vector<Vec3>& pts, const std::vector<double>& amp, int mode, double k,
                         double kz) {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double phase = -mode * std::atan2(pts[i].y, pts[i].x) + (kz + k) * pts[i].z;
        sum += amp[i] * std::polar(1.0, phase);
    }
    const double n = static_cast<double>(pts.size());
    return n * n * std::norm(sum) / (n * n);
}

}  // namespace

TEST_CASE("plane_two_sphere_ratio examples") {
    for (double k : {1.0, 50.0, kX}) {
        for (double d : {0.1, 0.4, 2.0}) {
            CHECK(plane_two_sphere_ratio(k, d, kPi / 2) == doctest::Approx(4.0).epsilon(1e-15));
        }
    }
    CHECK(std::abs(plane_two_sphere_ratio(kPi / 2, 1.0, 0.0)) < 1e-15);
    // 2kD·cos(π/3) = 80π/3 ≡ 2π/3, cos = −1/2.
    CHECK(std::abs(plane_two_sphere_ratio(kX, 0.4, kPi / 3) - 1.0) < 1e-12);
    CHECK_THROWS_AS(plane_two_sphere_ratio(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("alpha and beta") {
    CHECK(alpha(kX, 0.4, 0.0) == doctest::Approx(2 * kX * 0.4).epsilon(1e-15));
    CHECK(alpha(kX, 0.4, 0.0) == doctest::Approx(kAlphaExtremum).epsilon(1e-14));
    CHECK(beta(3, 0.4, 8.5, kPi / 2) == doctest::Approx(6 * std::atan(0.4 / 17.0)).epsilon(1e-15));
    CHECK(beta(1, 0.4, 8.5, kPi / 2) == doctest::Approx(kBeta1Extremum).epsilon(1e-14));
    CHECK(beta(1, 0.4, 8.5, kPi / 2) / alpha(kX, 0.4, 0.0) < 3e-4);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> phi(-7.0, 7.0);
    for (int i = 0; i < 500; ++i) {
        const double p = phi(rng);
        CHECK(std::abs(alpha(kX, 0.4, p) - alpha(kX, 0.4, -p)) < 1e-12);
        CHECK(std::abs(beta(7, 0.4, 8.5, p) + beta(7, 0.4, 8.5, -p)) < 1e-12);
        CHECK(std::abs(alpha(kX, 0.4, p) - alpha(kX, 0.4, p + kTwoPi)) < 1e-12);
        CHECK(std::abs(beta(7, 0.4, 8.5, p) - beta(7, 0.4, 8.5, p + kTwoPi)) < 1e-12);
    }
}

TEST_CASE("two_sphere_oam_ratio examples") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> phi(0.0, kTwoPi);
    for (int i = 0; i < 500; ++i) {
        const double p = phi(rng);
        CHECK(two_sphere_oam_ratio(0, kX, kX, 0.4, 8.5, p) == plane_two_sphere_ratio(kX, 0.4, p));
    }
    for (int mode : {1, 5, 23, -45}) {
        CHECK(std::abs(two_sphere_oam_ratio(mode, kX, kX, 0.4, 8.5, 0.0) - plane_two_sphere_ratio(kX, 0.4, 0.0)) <
              1e-13);
    }
    CHECK(std::abs(two_sphere_oam_ratio(5, kX, kX, 0.4, 8.5, kPi / 3) - kOamL5AtPiOver3) < 1e-12);
    // Same value from the k_z = k form 2[1 + cos(α − β)].
    const double a = alpha(kX, 0.4, kPi / 3);
    const double b = beta(5, 0.4, 8.5, kPi / 3);
    CHECK(std::abs(2 * (1 + std::cos(a - b)) - kOamL5AtPiOver3) < 1e-12);
}

TEST_CASE("oam_echo_field and mean_incident_amplitude") {
    const auto beam = OamBeam::aligned(3, kX);
    const double R = 8.5;
    const double sigma0 = 0.7;
    const double pre = std::sqrt(sigma0) / (2 * std::sqrt(kPi * R));

    const TargetModel one(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}}});
    CHECK(std::abs(oam_echo_field(one, beam, R, sigma0).amplitude) == doctest::Approx(pre).epsilon(1e-14));
    CHECK(oam_echo_field(one, beam, R, sigma0).range_m == R);

    const TargetModel twin(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}}, {{0.3, 2.0, 0.1}}});
    CHECK(std::abs(oam_echo_field(twin, beam, R, sigma0).amplitude) == doctest::Approx(2 * pre).epsilon(1e-14));

    // Two-sphere geometry: |E_s|² / pre² follows the closed form.
    const TwoSphereLayout l{0.4, 8.5, sigma0};
    for (double phi : {0.1, 0.9, 2.0, 4.4}) {
        const auto e = oam_echo_field(build_two_sphere_target(l, phi), beam, R, sigma0);
        CHECK(close(std::norm(e.amplitude) / (pre * pre), two_sphere_oam_ratio(3, kX, kX, 0.4, 8.5, phi), 1e-12));
    }

    CHECK(mean_incident_amplitude(twin, beam, R, sigma0) == doctest::Approx(pre).epsilon(1e-14));
    CHECK(mean_incident_amplitude(one, beam, R, sigma0) == doctest::Approx(pre).epsilon(1e-14));
    // Gains 1 and 3 at azimuths 0° and 90°.
    const auto tab = GainPattern::tabulated({{0.0, 1.0, 0.0}, {kPi / 2, 3.0, 0.0}});
    const OamBeam shaped{3, kX, kX, tab};
    const TargetModel mixed(std::vector<ScattererPoint>{{{1.0, 0.0, 0.0}}, {{0.0, 1.0, 0.0}}});
    CHECK(mean_incident_amplitude(mixed, shaped, R, sigma0) == doctest::Approx(2 * pre).epsilon(1e-14));

    CHECK_THROWS_AS(oam_echo_field(one, beam, 0.0, sigma0), DomainError);
    const TargetModel axis(std::vector<ScattererPoint>{{{0.0, 0.0, 1.0}}});
    CHECK_THROWS_WITH_AS(oam_echo_field(axis, beam, R, sigma0), "azimuth undefined at x=y=0", DomainError);
}

TEST_CASE("oam_rcs_ratio") {
    const auto beam = OamBeam::aligned(7, kX);
    CHECK(oam_rcs_ratio(TargetModel(std::vector<ScattererPoint>{{{0.2, 3.0, 0.4}}}), beam) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t n : {2u, 3u, 8u, 13u}) {
        std::vector<ScattererPoint> pts(n, ScattererPoint{{0.2, 3.0, 0.4}});
        CHECK(oam_rcs_ratio(TargetModel(pts), beam) == doctest::Approx(double(n * n)).epsilon(1e-14));
    }
    const TwoSphereLayout l{0.4, 8.5, 1.0};
    for (double phi : {0.0, 0.3, 1.0, 2.5, 5.9}) {
        CHECK(close(oam_rcs_ratio(build_two_sphere_target(l, phi), beam), two_sphere_oam_ratio(7, kX, kX, 0.4, 8.5, phi),
                    1e-12));
    }
    CHECK_THROWS_AS(oam_rcs_ratio(TargetModel(std::vector<ScattererPoint>{{{0, 0, 2}}}), beam), DomainError);
}

TEST_CASE("oam_rcs_ratio does not depend on range or sigma0") {
    const auto beam = OamBeam::tilted(11, kX, deg_to_rad(18));
    const TargetModel t(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}}, {{-0.2, 1.5, -0.05}}, {{0.1, -1.0, 0.2}}});
    const double ratio = oam_rcs_ratio(t, beam);
    for (double R : {0.5, 8.5, 1000.0}) {
        for (double s0 : {1e-3, 1.0, 40.0}) {
            const auto es = oam_echo_field(t, beam, R, s0).amplitude;
            const double ei = mean_incident_amplitude(t, beam, R, s0);
            CHECK(close(std::norm(es) / (ei * ei), ratio, 1e-12));
        }
    }
}

TEST_CASE("anisotropic_oam_rcs") {
    const auto beam = OamBeam::tilted(3, kX, deg_to_rad(18));
    const TargetModel iso(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}, RcsProfile::constant(2.5)}, {{-0.2, 1.5, -0.05}, RcsProfile::constant(2.5)}});
    CHECK(anisotropic_oam_rcs(iso, beam, 0.4) == doctest::Approx(2.5 * oam_rcs_ratio(iso, beam)).epsilon(1e-13));

    const auto prof = RcsProfile::tabulated({{0.0, 1.0}, {kPi, 5.0}});
    const TargetModel single(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}, prof}});
    for (double phi : {0.0, 1.0, 2.0, 4.0}) {
        CHECK(anisotropic_oam_rcs(single, beam, phi) == doctest::Approx(prof.eval(phi)).epsilon(1e-14));
    }

    const TargetModel three(std::vector<ScattererPoint>{{{0.3, 2.0, 0.1}, RcsProfile::constant(1.0)},
                             {{-0.2, 1.5, -0.05}, RcsProfile::constant(2.5)},
                             {{0.1, -1.0, 0.2}, RcsProfile::constant(0.4)}});
    const double got = anisotropic_oam_rcs(three, beam, 0.0);
    CHECK(got == doctest::Approx(kThreeScatterer).epsilon(1e-12));
    const double brute = brute_force_ratio({{0.3, 2.0, 0.1}, {-0.2, 1.5, -0.05}, {0.1, -1.0, 0.2}},
                                           {1.0, std::sqrt(2.5), std::sqrt(0.4)}, 3, kX, beam.axial_wavenumber);
    CHECK(got == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("closed form equals general sum over random parameters") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> mode(-50, 50);
    std::uniform_real_distribution<double> d(0.1, 1.0), y0(1.0, 20.0), phi(0.0, kTwoPi);
    for (int i = 0; i < 10000; ++i) {
        const TwoSphereLayout l{d(rng), y0(rng), 1.0};
        const auto beam = OamBeam::aligned(mode(rng), kX);
        const double p = phi(rng);
        const double general = oam_rcs_ratio(build_two_sphere_target(l, p), beam);
        const double closed = two_sphere_oam_ratio(beam.mode, kX, kX, l.spacing_m, l.standoff_m, p);
        REQUIRE(close(general, closed, 1e-12));
        REQUIRE(closed >= 0.0);
        REQUIRE(closed <= 4.0);
    }
}

TEST_CASE("closed form with k_z != k matches the general sum") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> tilt(0.0, 1.2), phi(0.0, kTwoPi);
    for (int i = 0; i < 2000; ++i) {
        const auto beam = OamBeam::tilted(i % 61 - 30, kX, tilt(rng));
        const TwoSphereLayout l{0.4, 8.5, 1.0};
        const double p = phi(rng);
        CHECK(close(oam_rcs_ratio(build_two_sphere_target(l, p), beam),
                    two_sphere_oam_ratio(beam.mode, kX, beam.axial_wavenumber, 0.4, 8.5, p), 1e-12));
    }
}

TEST_CASE("ratio bounds, periodicity and symmetries") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> mode(-50, 50);
    std::uniform_real_distribution<double> phi(-10.0, 10.0), u(-3.0, 3.0);
    for (int i = 0; i < 3000; ++i) {
        const int m = mode(rng);
        const double p = phi(rng);
        const double f = two_sphere_oam_ratio(m, kX, kX, 0.4, 8.5, p);
        CHECK(std::abs(f - two_sphere_oam_ratio(m, kX, kX, 0.4, 8.5, p + kTwoPi)) < 1e-12);
        CHECK(std::abs(f - two_sphere_oam_ratio(m, kX, kX, 0.4, 8.5, p + kPi)) < 1e-12);
        CHECK(std::abs(two_sphere_oam_ratio(-m, kX, kX, 0.4, 8.5, p) - two_sphere_oam_ratio(m, kX, kX, 0.4, 8.5, -p)) <
              1e-12);
        CHECK(std::abs(plane_two_sphere_ratio(kX, 0.4, kPi - p) - plane_two_sphere_ratio(kX, 0.4, p)) < 1e-12);
        CHECK(std::abs(plane_two_sphere_ratio(kX, 0.4, p) - plane_two_sphere_ratio(kX, 0.4, p + kTwoPi)) < 1e-12);

        // General sum on a random cloud stays within [0, N²].
        std::vector<ScattererPoint> pts;
        const int n = 1 + i % 9;
        for (int j = 0; j < n; ++j) {
            pts.push_back({{u(rng), u(rng) + 5.0, u(rng)}});
        }
        const double r = oam_rcs_ratio(TargetModel(pts), OamBeam::aligned(m, kX));
        CHECK(r >= 0.0);
        CHECK(r <= n * n * (1 + 1e-12));
    }

    double worst = 0.0;
    for (int i = 0; i < 3600; ++i) {
        const double p = kTwoPi * i / 3600.0;
        worst = std::max(worst, std::abs(two_sphere_oam_ratio(23, kX, kX, 0.4, 8.5, kPi - p) -
                                         two_sphere_oam_ratio(23, kX, kX, 0.4, 8.5, p)));
    }
    CHECK(worst > 0.1);
}

TEST_CASE("two_sphere_ratio falls back to the general sum when gains differ") {
    const TwoSphereLayout l{0.4, 8.5, 1.0};
    const auto uniform = OamBeam::aligned(5, kX);
    CHECK(gains_cancel(l, uniform, 1.0));
    CHECK(two_sphere_ratio(l, uniform, 1.0) == two_sphere_oam_ratio(5, kX, kX, 0.4, 8.5, 1.0));

    // Narrow lobe pointed off the pair's symmetry axis: the two spheres see
    // different gains whenever they are laterally displaced.
    const OamBeam skewed{5, kX, kX, GainPattern::gaussian_lobe(40.0, deg_to_rad(3), {0.05, 1.0, 0.0})};
    CHECK_FALSE(gains_cancel(l, skewed, kPi / 2));
    const double fallback = two_sphere_ratio(l, skewed, kPi / 2);
    CHECK(fallback == doctest::Approx(oam_rcs_ratio(build_two_sphere_target(l, kPi / 2), skewed)).epsilon(1e-15));
    // At φ = 0 both spheres sit on x = 0 and the gains are equal again.
    CHECK(gains_cancel(l, skewed, 0.0));
}
