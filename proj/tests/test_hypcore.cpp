#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hyplam/errors.hpp"
#include "hyplam/hypcore.hpp"
#include "near.hpp"

using namespace hyplam;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);
}  // namespace

TEST_CASE("chordal metric on the extended plane") {
    CHECK_NEAR(chordal_distance(Point::at(0, 0), Point::infinity()), 1.0, 1e-15);
    CHECK_NEAR(chordal_distance(Point::at(1, 0), Point::at(-1, 0)), 1.0, 1e-15);
    CHECK_NEAR(chordal_distance(Point::at(0, 0), Point::at(1, 0)), std::numbers::sqrt2 / 2, 1e-15);
    CHECK(chordal_distance(Point::infinity(), Point::infinity()) == 0.0);
}

TEST_CASE("absolute ratio") {
    const Point a = Point::at(1, 0), b = Point::at(0, 1), c = Point::at(-1, 0), d = Point::at(0, -1);
    CHECK_NEAR(absolute_ratio(a, b, c, d), 2.0, 1e-14);
    CHECK_NEAR(absolute_ratio(Point::at(0, 0), Point::at(1, 0), Point::infinity(), Point::at(-1, 0)), 2.0, 1e-14);

    const Point p = Point::at(0.3, 0.1), q = Point::at(-0.2, 0.5), r = Point::at(0.7, -0.4), s = Point::at(-0.6, -0.6);
    const double direct = std::abs(p.z() - r.z()) * std::abs(q.z() - s.z()) /
                          (std::abs(p.z() - q.z()) * std::abs(r.z() - s.z()));
    CHECK_NEAR(absolute_ratio(p, q, r, s), direct, 1e-14);

    CHECK_THROWS_AS(absolute_ratio(a, a, c, d), DegenerateInputError);
}

TEST_CASE("disk distance") {
    const Point o = Point::at(0, 0);
    CHECK_NEAR(rho_disk(o, Point::at(0.5, 0)), std::log(3.0), 1e-15);
    CHECK_NEAR(rho_disk(o, Point::at(0, 0.3)), 0.61903920840622343, 1e-15);
    CHECK(rho_disk(Point::at(0.2, 0.1), Point::at(0.2, 0.1)) == 0.0);
    CHECK(std::isinf(rho_disk(o, Point::boundary(0.3))));
    CHECK_THROWS_AS(rho_disk(o, Point::infinity()), DomainError);
}

TEST_CASE("half-plane distance") {
    CHECK_NEAR(rho_halfplane(Point::at(0, 1), Point::at(0, 2)), 0.69314718055994531, 1e-15);
    CHECK_NEAR(rho_halfplane(Point::at(0, 1), Point::at(1, 1)), 0.96242365011920689, 1e-15);
    CHECK(rho_halfplane(Point::at(3, 2), Point::at(3, 2)) == 0.0);
    CHECK_THROWS_AS(rho_halfplane(Point::at(0, 1), Point::at(0, -1)), DomainError);
    CHECK_THROWS_AS(rho_halfplane(Point::at(0, 1), Point::at(1, 0)), DomainError);
}

TEST_CASE("geodesic through two points") {
    const Point x = Point::at(std::polar(0.5, kPi / 4)), y = Point::at(std::polar(0.5, -kPi / 4));
    const Geodesic g = geodesic_through(x, y);
    REQUIRE(g.kind == Geodesic::Kind::Arc);
    CHECK_NEAR(std::abs(g.center), 1.7677669529663688, 1e-14);
    CHECK_NEAR(g.radius, 1.4577379737113251, 1e-14);
    CHECK_NEAR(std::norm(g.center) - g.radius * g.radius, 1.0, 1e-13);
    for (const auto& e : g.endpoints) CHECK_NEAR(std::abs(e.z()), 1.0, 1e-14);

    const Geodesic real_axis = geodesic_through(Point::at(0.3, 0), Point::at(-0.7, 0));
    CHECK(real_axis.kind == Geodesic::Kind::Diameter);
    CHECK_NEAR(real_axis.direction, 0.0, 1e-15);
    const Geodesic imag_axis = geodesic_through(Point::at(0, 0.5), Point::at(0, -0.5));
    CHECK(imag_axis.kind == Geodesic::Kind::Diameter);
    CHECK_NEAR(imag_axis.direction, kPi / 2, 1e-15);

    CHECK_THROWS_AS(geodesic_through(x, x), DegenerateInputError);
}

TEST_CASE("distance from the absolute ratio of the endpoints") {
    CHECK_NEAR(rho_via_crossratio(Point::at(0, 0), Point::at(0.5, 0)), std::log(3.0), 1e-14);
    const Point x = Point::at(std::polar(0.5, kPi / 4)), y = Point::at(std::polar(0.5, -kPi / 4));
    CHECK_NEAR(rho_via_crossratio(x, y), rho_disk(x, y), 1e-12);
    const Point p = Point::at(-0.31, 0.62), q = Point::at(0.45, 0.12);
    CHECK_NEAR(rho_via_crossratio(p, q), rho_disk(p, q), 1e-12);
}

TEST_CASE("Moebius maps") {
    const Point z = Point::at(0.3, -0.2);
    CHECK(apply_moebius(MoebiusMap::identity(), z).z() == z.z());
    const MoebiusMap c = MoebiusMap::cayley();
    CHECK_NEAR(std::abs(apply_moebius(c, Point::at(0, 0)).z() - I), 0.0, 1e-15);
    CHECK(apply_moebius(c, Point::at(1, 0)).is_infinity());
    CHECK_NEAR(std::abs(apply_moebius(c, Point::infinity()).z() + I), 0.0, 1e-15);

    // Cayley is an isometry from the disk to the half-plane
    const Point a = Point::at(0.1, 0.4), b = Point::at(-0.5, -0.3);
    CHECK_NEAR(rho_halfplane(apply_moebius(c, a), apply_moebius(c, b)), rho_disk(a, b), 1e-13);

    const MoebiusMap t = MoebiusMap::disk_automorphism(Complex(0.2, -0.6), 1.1);
    CHECK_NEAR(rho_disk(apply_moebius(t, a), apply_moebius(t, b)), rho_disk(a, b), 1e-13);
    CHECK_NEAR(std::abs(apply_moebius(t.compose(t.inverse()), a).z() - a.z()), 0.0, 1e-14);

    const MoebiusMap m = MoebiusMap::from_triples({Complex(1, 0), I, Complex(-1, 0)}, {Complex(0, 0), Complex(1, 0), Complex(2, 0)});
    CHECK_NEAR(std::abs(apply_moebius(m, Point::at(0, 1)).z() - Complex(1, 0)), 0.0, 1e-14);
    CHECK_NEAR(std::abs(apply_moebius(m, Point::at(-1, 0)).z() - Complex(2, 0)), 0.0, 1e-14);
}

TEST_CASE("hyperbolic midpoint") {
    const Point o = Point::at(0, 0);
    CHECK_NEAR(std::abs(hyperbolic_midpoint(o, Point::at(0.8, 0)).z() - 0.5), 0.0, 1e-14);
    const Point b = Point::at(std::polar(0.8, 2.0));
    CHECK_NEAR(std::abs(hyperbolic_midpoint(o, b).z() - std::polar(0.5, 2.0)), 0.0, 1e-14);
    const Point x = Point::at(0.2, 0.3);
    CHECK(hyperbolic_midpoint(x, x).z() == x.z());
    CHECK_NEAR(std::abs(hyperbolic_midpoint(Point::at(-0.3, 0), Point::at(0.3, 0)).z()), 0.0, 1e-15);
    const Point p = Point::at(-0.4, 0.5), q = Point::at(0.6, 0.1);
    const Point m = hyperbolic_midpoint(p, q);
    CHECK_NEAR(rho_disk(p, m), 0.5 * rho_disk(p, q), 1e-13);
    CHECK_NEAR(rho_disk(m, q), 0.5 * rho_disk(p, q), 1e-13);
}

TEST_CASE("distance between geodesics") {
    const double alpha = kPi / 4;
    // the two sides through the ideal vertices near +1 and near -1
    const Geodesic right = Geodesic::from_endpoints(Point::boundary(alpha), Point::boundary(-alpha));
    const Geodesic left = Geodesic::from_endpoints(Point::boundary(kPi - alpha), Point::boundary(kPi + alpha));
    CHECK_NEAR(geodesic_distance(right, left), 2.0 * std::log(std::numbers::sqrt2 + 1.0), 1e-8);
    CHECK(geodesic_distance(right, right) == 0.0);

    // alpha = pi/6: the pair through +1 and -1 is at 2 arth(cos alpha), the
    // pair through +i and -i at 2 arth(sin alpha)
    const double a = kPi / 6;
    const Geodesic J1 = Geodesic::from_endpoints(Point::boundary(a), Point::boundary(kPi - a));
    const Geodesic J2 = Geodesic::from_endpoints(Point::boundary(kPi + a), Point::boundary(-a));
    const Geodesic J3 = Geodesic::from_endpoints(Point::boundary(a), Point::boundary(-a));
    const Geodesic J4 = Geodesic::from_endpoints(Point::boundary(kPi - a), Point::boundary(kPi + a));
    CHECK_NEAR(geodesic_distance(J3, J4), 2.0 * std::atanh(std::cos(a)), 1e-8);
    CHECK_NEAR(geodesic_distance(J1, J2), 2.0 * std::atanh(std::sin(a)), 1e-8);

    // crossing lines and lines sharing an ideal endpoint
    CHECK(geodesic_distance(Geodesic::diameter(0.0), Geodesic::diameter(1.0)) == 0.0);
    CHECK(geodesic_distance(J1, J3) == 0.0);
}

TEST_CASE("ray crossing and crossing angle") {
    const Geodesic g = Geodesic::from_endpoints(Point::boundary(kPi / 3), Point::boundary(-kPi / 3));
    const Point p = ray_crossing(g, 0.0);
    // the arc meets the real axis at (1 - sin(pi/6)) / cos(pi/6)
    CHECK_NEAR(p.re, std::tan(kPi / 12), 1e-15);
    CHECK_THROWS_AS(ray_crossing(g, kPi), DegenerateInputError);
    CHECK_THROWS_AS(ray_crossing(Geodesic::diameter(0.0), 0.3), DegenerateInputError);
    CHECK_NEAR(crossing_angle(g, Geodesic::diameter(0.0), p.z()), kPi / 2, 1e-12);
    CHECK_NEAR(crossing_angle(Geodesic::diameter(0.0), Geodesic::diameter(0.5), Complex(0, 0)), 0.5, 1e-15);
}

TEST_CASE("point construction") {
    CHECK(Point::disk(Complex(1.0 + 1e-10, 0)).is_boundary());
    CHECK_FALSE(Point::disk(Complex(0.5, 0)).is_boundary());
    CHECK_THROWS_AS(Point::disk(Complex(1.1, 0)), DomainError);
    CHECK_NEAR(std::abs(Point::boundary(0.7).z()), 1.0, 1e-15);
}
