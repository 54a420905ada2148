#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halobeam/geometry.hpp"

using namespace halobeam;

namespace {

std::mt19937_64 rng(0x9e3779b9u);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vector3 random_unit() {
    while (true) {
        const Vector3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        const double n = v.norm();
        if (n > 1e-3) return v / n;
    }
}

Vector3 random_point(double scale) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
}

/// Brute-force oracle: nearest sampled point on the segment to the center.
bool segment_hits_sphere_oracle(const Vector3& a, const Vector3& b, const Vector3& c,
                                double radius) {
    constexpr int kSamples = 100000;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kSamples; ++i) {
        const double t = static_cast<double>(i) / kSamples;
        best = std::min(best, (a + t * (b - a) - c).norm_squared());
    }
    return best <= radius * radius;
}

}  // namespace

TEST_CASE("rotation_about_axis basic cases") {
    const Rotation3 id = rotation_about_axis({0, 0, 1}, 0.0);
    CHECK(id.orthonormality_error() < 1e-15);
    const Vector3 v{0.3, -1.2, 2.5};
    const Vector3 same = id.apply(v);
    CHECK(same.x == doctest::Approx(v.x).epsilon(1e-15));
    CHECK(same.y == doctest::Approx(v.y).epsilon(1e-15));

    const Vector3 quarter = rotation_about_axis({0, 0, 1}, std::numbers::pi / 2).apply({1, 0, 0});
    CHECK(quarter.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(quarter.y == doctest::Approx(1.0));
    CHECK(quarter.z == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("rotation by the Earth obliquity about x") {
    const double obliquity = deg_to_rad(23.44);
    const Vector3 r = rotation_about_axis({1, 0, 0}, obliquity).apply({0, 0, 1});
    CHECK(r.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(r.y == doctest::Approx(-std::sin(obliquity)).epsilon(1e-12));
    CHECK(r.z == doctest::Approx(std::cos(obliquity)).epsilon(1e-12));
    CHECK(r.y == doctest::Approx(-0.39775).epsilon(2e-4));
    CHECK(r.z == doctest::Approx(0.91748).epsilon(2e-4));
}

TEST_CASE("rotation_about_axis rejects bad axes") {
    CHECK_THROWS_AS(rotation_about_axis({0, 0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rotation_about_axis({0, 0, 2}, 1.0), std::invalid_argument);
}

TEST_CASE("random rotations are proper within 1e-12") {
    for (int i = 0; i < 1000; ++i) {
        const Rotation3 r = rotation_about_axis(random_unit(), uniform(-10, 10));
        CHECK(r.orthonormality_error() < 1e-12);
        CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("angle_between examples") {
    CHECK(angle_between({1, 0, 0}, {1, 0, 0}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(angle_between({1, 0, 0}, {0, 1, 0}) == doctest::Approx(std::numbers::pi / 2));
    CHECK(angle_between({1, 1, 0}, {1, 0, 0}) == doctest::Approx(std::numbers::pi / 4));
    CHECK_THROWS_AS(angle_between({0, 0, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("angle_between symmetry and rotated-vector identity") {
    for (int i = 0; i < 500; ++i) {
        const Vector3 u = random_point(10.0);
        const Vector3 v = random_point(10.0);
        if (u.norm() < 1e-6 || v.norm() < 1e-6) continue;
        CHECK(angle_between(u, v) == doctest::Approx(angle_between(v, u)).epsilon(1e-12));

        // Rotating u about a perpendicular axis by theta moves it by exactly |theta|.
        const Vector3 axis = u.cross(random_unit());
        if (axis.norm() < 1e-6) continue;
        const double theta = uniform(-std::numbers::pi, std::numbers::pi);
        const Vector3 ru = rotation_about_axis(axis.normalized(), theta).apply(u);
        CHECK(angle_between(u, ru) == doctest::Approx(std::abs(theta)).epsilon(1e-9));
    }
}

TEST_CASE("segment_intersects_sphere examples") {
    CHECK(segment_intersects_sphere({-2, 0, 0}, {2, 0, 0}, {0, 0, 0}, 1.0));
    CHECK_FALSE(segment_intersects_sphere({-2, 5, 0}, {2, 5, 0}, {0, 0, 0}, 1.0));
    // Halo satellite at its minimum lateral offset (A_y = 0.343 * 15000 km)
    // clears the Moon on its way to the Earth center: closest approach ~4406 km.
    CHECK_FALSE(segment_intersects_sphere({449500, 5145, 0}, {0, 0, 0}, {385000, 0, 0}, 1737.4));
    CHECK_THROWS_AS(segment_intersects_sphere({1, 0, 0}, {1, 0, 0}, {0, 0, 0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(segment_intersects_sphere({0, 0, 0}, {1, 0, 0}, {0, 0, 0}, -1.0),
                    std::invalid_argument);
}

TEST_CASE("segment_intersects_sphere agrees with the sampling oracle") {
    for (int i = 0; i < 1000; ++i) {
        const Vector3 a = random_point(10.0);
        const Vector3 b = random_point(10.0);
        if ((a - b).norm() < 1e-6) continue;
        const Vector3 c = random_point(10.0);
        const double r = uniform(0.1, 5.0);
        CHECK(segment_intersects_sphere(a, b, c, r) == segment_hits_sphere_oracle(a, b, c, r));
    }
}

TEST_CASE("affine transforms compose and invert") {
    for (int i = 0; i < 100; ++i) {
        const AffineTransform t{rotation_about_axis(random_unit(), uniform(-5, 5)),
                                random_point(1000.0)};
        const AffineTransform roundtrip = t.compose(t.inverse());
        for (int j = 0; j < 10; ++j) {
            const Vector3 p = random_point(1000.0);
            const Vector3 back = roundtrip.apply(p);
            CHECK((back - p).norm() < 1e-9);
        }
    }
}

TEST_CASE("affine composition is associative") {
    for (int i = 0; i < 100; ++i) {
        const AffineTransform a{rotation_about_axis(random_unit(), uniform(-5, 5)),
                                random_point(100.0)};
        const AffineTransform b{rotation_about_axis(random_unit(), uniform(-5, 5)),
                                random_point(100.0)};
        const AffineTransform c{rotation_about_axis(random_unit(), uniform(-5, 5)),
                                random_point(100.0)};
        const Vector3 p = random_point(100.0);
        const Vector3 left = a.compose(b).compose(c).apply(p);
        const Vector3 right = a.compose(b.compose(c)).apply(p);
        CHECK((left - right).norm() < 1e-9);
    }
}

TEST_CASE("normalized rejects the zero vector") {
    CHECK_THROWS_AS(Vector3{}.normalized(), std::invalid_argument);
    const Vector3 u = Vector3{3, -4, 12}.normalized();
    CHECK(u.norm() == doctest::Approx(1.0).epsilon(1e-15));
}
