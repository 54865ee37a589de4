#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hyplam/errors.hpp"
#include "hyplam/lambert.hpp"
#include "hyplam/specfun.hpp"
#include "near.hpp"

using namespace hyplam;
using namespace hyplam::lambert;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("closed-form sides of the L = 0.8 quadrilateral on the bisector") {
    const LambertQuad q = lambert_from(0.8, kPi / 4);
    CHECK_NEAR(q.d1, 0.64115493973028204, 1e-15);
    CHECK_NEAR(q.d2, 0.64115493973028204, 1e-15);
    CHECK_NEAR(std::sinh(q.d1) * std::sinh(q.d2), 0.47058823529411765, 1e-15);
    CHECK_NEAR(q.phi, 1.0808390005411683, 1e-14);
    CHECK_NEAR(2 * q.t / (1 + q.t * q.t), 0.8, 1e-15);
    CHECK_NEAR(std::abs(q.vertices[2].z() - std::polar(q.t, kPi / 4)), 0.0, 1e-15);
    CHECK(q.vertices[0].z() == Complex(0, 0));
    CHECK(q.vertices[1].im == 0.0);
    CHECK(q.vertices[3].re == 0.0);
}

TEST_CASE("sides agree with the numerical distance between lines") {
    for (double theta : {0.2, 0.7, 1.3}) {
        const LambertQuad q = lambert_from(0.9, theta);
        const auto s = side_lines(q);
        CHECK_NEAR(geodesic_distance(s[3], s[1]), q.d1, 1e-8);
        CHECK_NEAR(geodesic_distance(s[0], s[2]), q.d2, 1e-8);
    }
}

TEST_CASE("th^2 d1 + th^2 d2 = L^2") {
    for (double L : {0.05, 0.4, 0.77, 0.999, 1.0}) {
        for (double theta : {1e-4, 0.3, kPi / 4, 1.5}) {
            const LambertQuad q = lambert_from(L, theta);
            const double a = std::tanh(q.d1), b = std::tanh(q.d2);
            CHECK_NEAR(a * a + b * b, L * L, 1e-12);
        }
    }
}

TEST_CASE("boundary vertex: zero angle and sh d1 sh d2 = 1") {
    for (double theta : {kPi / 6, kPi / 4, kPi / 3}) {
        const LambertQuad q = lambert_from(1.0, theta);
        CHECK_NEAR(std::sinh(q.d1) * std::sinh(q.d2), 1.0, 1e-12);
        CHECK_NEAR(q.phi, 0.0, 1e-6);
        CHECK(q.vertices[2].is_boundary());
    }
    CHECK_NEAR(beardon_phi(std::asinh(1.0), std::asinh(1.0)), 0.0, 1e-7);
    CHECK_THROWS_AS(beardon_phi(2.0, 2.0), InconsistentQuadrilateralError);
    CHECK_THROWS_AS(beardon_phi(0.0, 1.0), DomainError);
}

TEST_CASE("product bound and its equality case") {
    CHECK_NEAR(product_bound(0.9), 0.56564427532180585, 1e-15);
    CHECK_NEAR(product_bound(0.5), 0.13652949025427436, 1e-15);
    CHECK_NEAR(product_bound(0.8), 0.64115493973028204 * 0.64115493973028204, 1e-15);

    const BoundReport eq = product_report(lambert_from(0.8, kPi / 4));
    CHECK(eq.satisfied);
    CHECK(eq.equality);
    REQUIRE(eq.equality_witness);
    CHECK_NEAR(*eq.equality_witness, kPi / 4, 0.0);

    const BoundReport off = product_report(lambert_from(0.8, 0.4));
    CHECK(off.satisfied);
    CHECK_FALSE(off.equality);
    CHECK(off.observed < off.upper);
}

TEST_CASE("sum bounds in each case") {
    const SumBounds c1 = sum_bounds(0.5);
    CHECK(c1.case_number == 1);
    CHECK_NEAR(c1.upper, 0.73899794385173863, 1e-14);
    CHECK(c1.upper_attained);

    const SumBounds c2 = sum_bounds(0.85);
    CHECK(c2.case_number == 2);
    CHECK_NEAR(c2.upper, 1.3972137718706315, 1e-12);
    REQUIRE(c2.upper_witnesses.size() == 2);
    CHECK_NEAR(c2.upper_witnesses[0], 1.1328104037470153, 1e-10);
    CHECK_NEAR(c2.upper_witnesses[1], 0.4379859230478813, 1e-10);

    const SumBounds c3 = sum_bounds(0.95);
    CHECK(c3.case_number == 3);
    CHECK_NEAR(c3.upper, 1.8806278071036624, 1e-12);
    REQUIRE(c3.upper_witnesses.size() == 2);
    CHECK_NEAR(c3.upper_witnesses[0], 1.4619043361578434, 1e-10);
    CHECK_NEAR(c3.upper_witnesses[1], 0.10889199063705326, 1e-10);

    const SumBounds c4 = sum_bounds(1.0);
    CHECK(c4.case_number == 4);
    CHECK_NEAR(c4.lower, 1.7627471740390861, 1e-14);
    CHECK(c4.lower_attained);
    CHECK(std::isinf(c4.upper));

    CHECK(sum_bounds(std::sqrt(2.0 / 3.0)).case_number == 1);
    CHECK(sum_bounds(std::sqrt(2 * (std::numbers::sqrt2 - 1))).case_number == 3);
}

TEST_CASE("sum reports stay within the case interval") {
    for (double L : {0.3, 0.85, 0.95, 1.0}) {
        const SumBounds b = sum_bounds(L);
        for (double theta = 0.01; theta < kPi / 2; theta += 0.05) {
            const BoundReport r = sum_report(lambert_from(L, theta));
            CHECK(r.satisfied);
            CHECK(r.observed <= b.upper + kBoundSlack);
            CHECK(r.observed >= b.lower - kBoundSlack);
        }
    }
    const BoundReport at_min = sum_report(lambert_from(1.0, kPi / 4));
    CHECK(at_min.equality);
    CHECK_NEAR(at_min.observed, 1.7627471740390861, 1e-12);
}

TEST_CASE("ideal quadrilateral") {
    const IdealDistances d = ideal_quad(kPi / 4);
    CHECK_NEAR(d.d1 * d.d2, 3.1072775995827839, 1e-13);
    CHECK_NEAR(d.d1 + d.d2, 3.5254943480781721, 1e-13);
    CHECK_NEAR(ideal_product_bound(), 3.1072775995827839, 1e-14);
    CHECK_NEAR(ideal_sum_bound(), 3.5254943480781721, 1e-14);
    CHECK(ideal_product_report(kPi / 4).equality);
    CHECK(ideal_sum_report(kPi / 4).equality);
    const BoundReport p = ideal_product_report(0.5);
    CHECK(p.satisfied);
    CHECK_FALSE(p.equality);
    CHECK(ideal_sum_report(0.5).satisfied);
    CHECK_THROWS_AS(ideal_quad(0.0), DomainError);
    CHECK_THROWS_AS(ideal_quad(kPi / 2), DomainError);
}

TEST_CASE("alpha from four ideal vertices") {
    CHECK_NEAR(alpha_from_quadruple(Point::at(1, 0), Point::at(0, 1), Point::at(-1, 0), Point::at(0, -1)), kPi / 4,
               1e-15);
    for (double alpha : {0.1, 0.6, 1.2}) {
        const auto v = ideal_vertices(alpha);
        CHECK_NEAR(alpha_from_quadruple(v[0], v[1], v[2], v[3]), alpha, 1e-12);
    }
    // invariant under a disk automorphism
    const MoebiusMap m = MoebiusMap::disk_automorphism(Complex(0.3, 0.4), 0.9);
    const auto v = ideal_vertices(0.6);
    CHECK_NEAR(alpha_from_quadruple(apply_moebius(m, v[0]), apply_moebius(m, v[1]), apply_moebius(m, v[2]),
                                    apply_moebius(m, v[3])),
               0.6, 1e-12);

    CHECK_THROWS_AS(alpha_from_quadruple(Point::at(1, 0), Point::at(-1, 0), Point::at(0, 1), Point::at(0, -1)),
                    OrderingError);
    CHECK_THROWS_AS(alpha_from_quadruple(Point::at(0.5, 0), Point::at(0, 1), Point::at(-1, 0), Point::at(0, -1)),
                    DomainError);
    CHECK_THROWS_AS(alpha_from_quadruple(Point::infinity(), Point::at(0, 1), Point::at(-1, 0), Point::at(0, -1)),
                    DomainError);
}

TEST_CASE("normalising map for an ideal quadruple") {
    const std::array<Point, 4> q{Point::boundary(0.2), Point::boundary(1.9), Point::boundary(3.0),
                                 Point::boundary(5.1)};
    const IdealNormalization n = normalize_ideal(q[0], q[1], q[2], q[3]);
    const auto target = ideal_vertices(n.alpha);
    for (int i = 0; i < 4; ++i) CHECK_NEAR(std::abs(apply_moebius(n.map, q[i]).z() - target[i].z()), 0.0, 1e-10);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(lambert_from(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(lambert_from(1.5, 0.3), DomainError);
    CHECK_THROWS_AS(lambert_from(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(lambert_from(0.5, kPi / 2), DomainError);
    CHECK_THROWS_AS(product_bound(1.2), DomainError);
}
