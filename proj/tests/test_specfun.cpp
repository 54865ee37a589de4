#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hyplam/errors.hpp"
#include "hyplam/specfun.hpp"
#include "near.hpp"

using namespace hyplam;
using namespace hyplam::specfun;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kS2 = std::numbers::sqrt2 / 2;
}  // namespace

TEST_CASE("arth and the complement") {
    CHECK(arth(0.0) == 0.0);
    CHECK(std::isinf(arth(1.0)));
    CHECK_NEAR(arth(kS2), 0.88137358701954303, 1e-15);
    CHECK_NEAR(2 * arth(0.3), 0.61903920840622343, 1e-15);
    CHECK_THROWS_AS(arth(1.5), DomainError);
    CHECK_THROWS_AS(arth(-0.1), DomainError);
    CHECK_NEAR(complement(0.6), 0.8, 1e-15);
    // r' for r near 1 must keep full relative accuracy
    const double r = 1.0 - 1e-12;
    const double exact = std::sqrt((1.0 - r) * (1.0 + r));
    CHECK_NEAR(complement(r), exact, 4e-16 * exact);
    CHECK_NEAR(arth_of_complement(1e-8), std::log(2e8), 1e-8);
    CHECK_NEAR(arth_of_complement(0.6), arth(0.8), 1e-15);
}

TEST_CASE("Holder means") {
    CHECK_NEAR(holder_mean({1.0}, 1.0, 3.0), 2.0, 1e-15);
    CHECK_NEAR(holder_mean({0.0}, 1.0, 4.0), 2.0, 1e-15);
    CHECK_NEAR(holder_mean({-1.0}, 1.0, 3.0), 1.5, 1e-15);
    CHECK_NEAR(holder_mean({2.0}, 1.0, 7.0), 5.0, 1e-14);
    CHECK_NEAR(holder_mean({0.3}, 2.5, 2.5), 2.5, 1e-15);
    // monotone in p
    double prev = holder_mean({-5.0}, 0.4, 1.9);
    for (double p = -4.5; p <= 5.0; p += 0.5) {
        const double m = holder_mean({p}, 0.4, 1.9);
        CHECK(m >= prev);
        prev = m;
    }
    CHECK(std::isinf(holder_mean({1.0}, 1.0, kInfinity)));
    CHECK_THROWS_AS(holder_mean({1.0}, -1.0, 2.0), DomainError);
}

TEST_CASE("lemma functions at reference points") {
    CHECK_NEAR(lemma_f_c(1.0, 0.5), 0.91023922662683739, 1e-14);
    CHECK_NEAR(lemma_F_c(0.8, kS2), 0.4110796567405416, 1e-14);
    CHECK_NEAR(lemma_F_c(1.0, kS2), 0.77681939989569598, 1e-14);
    CHECK_NEAR(lemma_G_c(0.8, kS2), 2 * 0.64115493973028204, 1e-14);
    CHECK_NEAR(lemma_h(kS2), 1.6045563234489544, 1e-14);
    CHECK_NEAR(lemma_h1(0.6), 0.8 / arth(0.8), 1e-15);
    CHECK_NEAR(lemma_aux({LemmaName::h, 0.0, 0.0}, kS2), lemma_h(kS2), 0.0);
    CHECK(lemma_name_from_string("g_pq") == LemmaName::g_pq);
    CHECK(to_string(LemmaName::f_t1l1) == "f_t1l1");
    CHECK_THROWS_AS(lemma_name_from_string("nope"), ConfigurationError);
}

TEST_CASE("range of arth(cr) + arth(cr') by case") {
    const GRange g1 = G_range(0.5);
    CHECK(g1.case_number == 1);
    CHECK_NEAR(g1.upper, 0.73899794385173863, 1e-14);
    CHECK(g1.upper_attained);

    const GRange g2 = G_range(0.85);
    CHECK(g2.case_number == 2);
    CHECK_NEAR(g2.r0, 0.42411636291300531, 1e-12);
    CHECK_NEAR(g2.upper, 1.3972137718706315, 1e-12);

    const GRange g3 = G_range(0.95);
    CHECK(g3.case_number == 3);
    CHECK_NEAR(std::acos(g3.r0), 1.4619043361578434, 1e-12);
    CHECK_NEAR(g3.upper, 1.8806278071036624, 1e-12);

    const GRange g4 = G_range(1.0);
    CHECK(g4.case_number == 4);
    CHECK_NEAR(g4.lower, 1.7627471740390861, 1e-14);
    CHECK(g4.lower_attained);
    CHECK(std::isinf(g4.upper));
}

TEST_CASE("the threshold C and C(p)") {
    CHECK_NEAR(threshold_C(), 0.37677475985976949, 1e-15);
    CHECK_NEAR(big_C_of_p(-2 - 1e-6), -2.0000009999995833, 1e-9);
    CHECK_NEAR(big_C_of_p(-3.0), -2.7289342934398326, 1e-10);
    CHECK_NEAR(big_C_of_p(-10.0), -4.460831125706834, 1e-9);
    CHECK_THROWS_AS(big_C_of_p(-1.0), DomainError);
}

TEST_CASE("convexity classification") {
    CHECK(classify_convexity(1, 1).classification == ConvexityClass::ConvexD1);
    CHECK(classify_convexity(0, 0).classification == ConvexityClass::ConvexD1);
    CHECK(classify_convexity(2, 3).classification == ConvexityClass::ConvexD1);
    CHECK(classify_convexity(-2, -2).classification == ConvexityClass::ConvexD1);
    CHECK(classify_convexity(-3, big_C_of_p(-3)).classification == ConvexityClass::ConvexD2);
    CHECK(classify_convexity(-3, -2.8).classification == ConvexityClass::NotConvex);
    CHECK(classify_convexity(-3, 0).classification == ConvexityClass::ConvexD2);
    CHECK(classify_convexity(1, 0).classification == ConvexityClass::NotConvex);
    CHECK(classify_convexity(2, 1).classification == ConvexityClass::NotConvex);
}

TEST_CASE("Grotzsch modulus and its inverse") {
    CHECK_NEAR(agm(1.0, 2.0), 1.4567910310469068, 1e-15);
    CHECK_NEAR(grotzsch_mu(kS2), kPi / 2, 1e-14);
    CHECK_NEAR(grotzsch_mu(0.3), 2.5668979448308223, 1e-14);
    CHECK_NEAR(grotzsch_mu(0.1), 3.6863692375528519, 1e-14);
    for (double r : {1e-6, 0.01, 0.3, 0.7, 0.99, 1 - 1e-9}) {
        CHECK_NEAR(grotzsch_mu_pair(r, complement(r)) * grotzsch_mu_pair(complement(r), r), kPi * kPi / 4, 1e-12);
        CHECK_NEAR(mu_inverse(grotzsch_mu(r)), r, 1e-12 * std::max(1.0, r));
    }
    CHECK_THROWS_AS(grotzsch_mu(0.0), DomainError);
    CHECK_THROWS_AS(mu_inverse(-1.0), DomainError);
}

TEST_CASE("distortion function") {
    for (double r : {0.05, 0.5, 0.95}) {
        CHECK_NEAR(phi_K(1.0, r), r, 1e-12);
        CHECK_NEAR(phi_K(2.0, r), 2 * std::sqrt(r) / (1 + r), 1e-12);
    }
    CHECK_NEAR(phi_K(2.0, kS2), 0.98517143100941604, 1e-13);
    CHECK_THROWS_AS(phi_K(0.5, 0.3), DomainError);
}

TEST_CASE("the constant A(K) and its linear bracket") {
    CHECK_NEAR(distortion_A(1.0), 1.0, 1e-12);
    CHECK_NEAR(distortion_A(1.5), 2.1428209786074038, 1e-11);
    CHECK_NEAR(distortion_A(2.0), 3.3149089083061545, 1e-11);
    CHECK_NEAR(distortion_A(5.0), 10.365888117408914, 1e-10);
    CHECK_NEAR(distortion_u(), 1.541222966139999, 1e-14);
    CHECK_NEAR(distortion_v(), 1.3506016347130226, 1e-14);

    // the large-K form takes over where mu(th 1/2)/K drops below 0.02
    const double K_switch = grotzsch_mu(std::tanh(0.5)) / 0.02;
    const double below = distortion_A(K_switch * (1 - 1e-9));
    const double above = distortion_A(K_switch * (1 + 1e-9));
    CHECK_NEAR(below, above, 1e-6 * above);
    CHECK(distortion_A(1e4) <= distortion_v() * (1e4 - 1) + 1e4);
    CHECK(distortion_A(1e4) >= distortion_u() * (1e4 - 1) + 1);
}
