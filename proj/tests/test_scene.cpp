#include <doctest.h>

#include <cmath>
#include <random>

#include "oamrcs/angles.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/scene.hpp"
#include "test_support.hpp"

using namespace oamrcs;

TEST_CASE("two_sphere_positions at phi = 0 and pi/2") {
    const TwoSphereLayout l{0.4, 8.5, 1.0};
    auto [a, b] = two_sphere_positions(l, 0.0);
    CHECK(a.x == doctest::Approx(0.0));
    CHECK(a.y == 8.5);
    CHECK(a.z == doctest::Approx(0.2));
    CHECK(b.z == doctest::Approx(-0.2));

    std::tie(a, b) = two_sphere_positions(l, kPi / 2);
    CHECK(a.x == doctest::Approx(-0.2));
    CHECK(b.x == doctest::Approx(0.2));
    CHECK(std::abs(a.z) < 1e-15);
    CHECK(std::abs(b.z) < 1e-15);
}

TEST_CASE("two_sphere_positions invariants over random layouts") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(0.05, 2.0), y(0.5, 30.0), phi(-20.0, 20.0);
    for (int i = 0; i < 2000; ++i) {
        const TwoSphereLayout l{d(rng), y(rng), 1.0};
        const double p = phi(rng);
        const auto [a, b] = two_sphere_positions(l, p);
        CHECK(distance(a, b) == doctest::Approx(l.spacing_m).epsilon(1e-14));
        const Vec3 mid = 0.5 * (a + b);
        CHECK(std::abs(mid.x) < 1e-15);
        CHECK(mid.y == l.standoff_m);
        CHECK(std::abs(mid.z) < 1e-15);

        const auto [c, e] = two_sphere_positions(l, p + kPi);
        CHECK(distance(c, b) < 1e-14);
        CHECK(distance(e, a) < 1e-14);
    }
}

TEST_CASE("build_two_sphere_target") {
    const TwoSphereLayout l{0.4, 8.5, 1.0};
    const auto t = build_two_sphere_target(l, 0.0);
    REQUIRE(t.size() == 2);
    CHECK(t.scatterers()[0].base_rcs.eval(1.0) == 1.0);
    CHECK(t.scatterers()[1].base_rcs.eval(4.0) == 1.0);
    CHECK(t.uniform_constant_rcs());

    const double phi = 0.7;
    const auto a = build_two_sphere_target(l, phi);
    const auto b = build_two_sphere_target(l, phi + kTwoPi);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(distance(a.scatterers()[i].position, b.scatterers()[i].position) < 1e-15);
    }

    // Chamber geometry: 0.2 m spheres spaced 0.4 m.
    CHECK_NOTHROW(build_two_sphere_target({0.4, 8.5, kPi * 0.2 * 0.2}, 1.0));
    CHECK_THROWS_AS(build_two_sphere_target({0.0, 8.5, 1.0}, 0.0), DomainError);
    CHECK_THROWS_AS(build_two_sphere_target({0.4, -1.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("RcsProfile evaluation") {
    CHECK_THROWS_AS(RcsProfile::constant(-1.0), DomainError);
    const auto p = RcsProfile::tabulated({{0.0, 1.0}, {kPi / 2, 3.0}, {kPi, 1.0}});
    CHECK(p.eval(0.0) == 1.0);
    CHECK(p.eval(kPi / 2) == 3.0);
    CHECK(p.eval(kPi / 4) == doctest::Approx(2.0));
    // Wrap segment from π back to 2π ≡ 0, both ends 1.
    CHECK(p.eval(1.5 * kPi) == doctest::Approx(1.0));
    CHECK(p.eval(-kPi / 4) == doctest::Approx(1.0));

    const auto q = RcsProfile::tabulated({{0.5, 2.0}, {4.0, 6.0}});
    // Between 4.0 and 0.5 + 2π the profile ramps back down.
    const double mid = 0.5 * (4.0 + 0.5 + kTwoPi);
    CHECK(q.eval(mid) == doctest::Approx(4.0));
    CHECK(q.eval(mid - kTwoPi) == doctest::Approx(4.0));

    CHECK_THROWS_AS(RcsProfile::tabulated({{1.0, 1.0}, {1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(RcsProfile::tabulated({{0.0, -1.0}}), DomainError);
    CHECK_THROWS_AS(RcsProfile::tabulated({{kTwoPi, 1.0}}), DomainError);
}

TEST_CASE("RcsProfile is 2pi-periodic") {
    const auto p = RcsProfile::tabulated({{0.1, 0.5}, {1.0, 2.0}, {2.5, 0.1}, {5.0, 4.0}});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> phi(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = phi(rng);
        CHECK(std::abs(p.eval(x) - p.eval(x + kTwoPi)) < 1e-12);
    }
}

TEST_CASE("load_target_csv") {
    test::TempDir dir("scene");
    const auto two = dir.write("two.csv", "x_m,y_m,z_m,sigma_m2\n0,8.5,0.2,1\n0,8.5,-0.2,1.5\n");
    const auto t = load_target_csv(two);
    REQUIRE(t.size() == 2);
    CHECK(t.scatterers()[1].base_rcs.constant_value() == 1.5);
    CHECK(t.scatterers()[0].position == Vec3{0, 8.5, 0.2});

    const auto empty = dir.write("empty.csv", "x_m,y_m,z_m,sigma_m2\n");
    CHECK_THROWS_WITH_AS(load_target_csv(empty), doctest::Contains("at least one scatterer"), FormatError);

    const auto neg = dir.write("neg.csv", "x_m,y_m,z_m,sigma_m2\n0,1,0,1\n0,2,0,-1\n");
    try {
        load_target_csv(neg);
        FAIL("expected a parse error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }

    const auto bad = dir.write("bad.csv", "x_m,y_m,z_m,sigma_m2\n0,1,zero,1\n");
    CHECK_THROWS_WITH_AS(load_target_csv(bad), doctest::Contains(":2:"), FormatError);
    CHECK_THROWS_AS(load_target_csv(dir.path() / "missing.csv"), Error);
    const auto header = dir.write("hdr.csv", "x,y,z,s\n0,1,0,1\n");
    CHECK_THROWS_AS(load_target_csv(header), FormatError);
}

TEST_CASE("target CSV with per-scatterer profile files") {
    test::TempDir dir("profile");
    dir.write("p0.csv", "angle_deg,sigma_m2\n0,1\n90,3\n180,1\n");
    const auto path = dir.write("t.csv", "x_m,y_m,z_m,sigma_m2,profile_file\n0.1,2,0,1,p0.csv\n-0.1,2,0,2,\n");
    const auto t = load_target_csv(path);
    CHECK_FALSE(t.scatterers()[0].base_rcs.is_constant());
    CHECK(t.scatterers()[0].base_rcs.eval(deg_to_rad(45)) == doctest::Approx(2.0));
    CHECK(t.scatterers()[1].base_rcs.constant_value() == 2.0);
    CHECK_FALSE(t.uniform_constant_rcs());
}

TEST_CASE("save_target_csv then load_target_csv is the identity") {
    test::TempDir dir("roundtrip");
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0), s(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ScattererPoint> pts;
        const int n = 1 + trial % 6;
        for (int i = 0; i < n; ++i) {
            pts.push_back({{u(rng), u(rng), u(rng)}, RcsProfile::constant(s(rng))});
        }
        const TargetModel t(pts, "t");
        const auto path = dir.path() / "t.csv";
        save_target_csv(t, path);
        CHECK(load_target_csv(path) == t);
    }

    const TargetModel aniso({{{1, 2, 3}, RcsProfile::tabulated({{0.0, 1.0}, {deg_to_rad(90), 2.0}})},
                             {{-1, 2, 0}, RcsProfile::constant(0.5)}},
                            "a");
    save_target_csv(aniso, dir.path() / "a.csv");
    const auto back = load_target_csv(dir.path() / "a.csv");
    REQUIRE(back.size() == 2);
    for (double phi : {0.0, 0.3, 1.2, 3.0, 5.5}) {
        CHECK(back.scatterers()[0].base_rcs.eval(phi) ==
              doctest::Approx(aniso.scatterers()[0].base_rcs.eval(phi)).epsilon(1e-14));
    }
}
