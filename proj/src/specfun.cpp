#include "hyplam/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "hyplam/errors.hpp"
#include "hyplam/scalar_search.hpp"

namespace hyplam::specfun {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void require_open_unit(double r, const char* what) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(what) + ": argument must lie in (0, 1)");
}

void require_c(double c, const char* what) {
    if (!(c > 0.0 && c <= 1.0)) throw DomainError(std::string(what) + ": parameter c must lie in (0, 1]");
}

// (arth r - r) / r^3 = sum_{n>=1} r^{2n-2} / (2n+1), stable for small r.
double arth_excess_scaled(double r) {
    if (r >= 0.5) return (std::atanh(r) - r) / (r * r * r);
    const double r2 = r * r;
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 200; ++n) {
        const double add = term / (2.0 * n + 1.0);
        sum += add;
        if (add < 1e-18 * sum) break;
        term *= r2;
    }
    return sum;
}

// arth(r) / r, equal to 1 at r = 0.
double arth_over_x(double r) {
    if (r >= 0.5) return std::atanh(r) / r;
    return 1.0 + r * r * arth_excess_scaled(r);
}

// arth(c x) where c x may be 1.
double arth_scaled(double c, double x) {
    return arth(std::min(1.0, c * x));
}

// arth(c r') evaluated accurately, including c = 1 and tiny r.
double arth_scaled_complement(double c, double r) {
    if (c == 1.0) return arth_of_complement(r);
    return arth(c * complement(r));
}

// mu in terms of the pair (r, r'), both supplied accurately.
double mu_from_pair(double r, double rp) {
    return 0.5 * std::numbers::pi * agm(1.0, rp) / agm(1.0, r);
}

// mu^{-1}(y) as the pair (r, r'). The smaller member of the pair is solved
// for on a log scale, so values near 0 and near 1 keep full precision.
std::pair<double, double> mu_inverse_pair(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("mu_inverse: argument must be positive and finite");
    constexpr double t_lo = -700.0;
    const double t_hi = std::log(1.0 / kSqrt2);
    const bool small_r = y >= 0.5 * std::numbers::pi;
    // mu as a function of t where the small member of the pair is e^t:
    // decreasing in t when r is small, increasing when r' is small.
    auto mu_at = [&](double t) {
        const double s = std::exp(t);
        return small_r ? mu_from_pair(s, complement(s)) : mu_from_pair(complement(s), s);
    };
    const double at_lo = mu_at(t_lo);
    if (small_r ? y > at_lo : y < at_lo) throw DomainError("mu_inverse: argument outside the representable range");
    const double t = search::bisect([&](double tt) { return small_r ? y - mu_at(tt) : mu_at(tt) - y; }, t_lo, t_hi);
    const double s = std::exp(t);
    return small_r ? std::pair{s, complement(s)} : std::pair{complement(s), s};
}

}  // namespace

std::string_view to_string(ConvexityClass c) {
    switch (c) {
        case ConvexityClass::ConvexD1: return "ConvexD1";
        case ConvexityClass::ConvexD2: return "ConvexD2";
        case ConvexityClass::NotConvex: return "NotConvex";
    }
    return "?";
}

double complement(double r) {
    return std::sqrt((1.0 - r) * (1.0 + r));
}

double arth(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arth: argument must lie in [0, 1]");
    if (x == 1.0) return kInfinity;
    return std::atanh(x);
}

double arth_of_complement(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("arth_of_complement: argument must lie in [0, 1]");
    if (r == 0.0) return kInfinity;
    const double rp = complement(r);
    if (r < 0.5) return std::log((1.0 + rp) / r);
    return std::atanh(rp);
}

double holder_mean(HolderOrder order, double r, double s) {
    if (!(r > 0.0) || !(s > 0.0)) throw DomainError("holder_mean: arguments must be positive");
    const double p = order.p;
    if (std::isnan(p)) throw DomainError("holder_mean: order is NaN");
    if (order.geometric()) return std::sqrt(r) * std::sqrt(s);
    const double hi = std::max(r, s);
    const double lo = std::min(r, s);
    if (p > 0.0) {
        if (std::isinf(hi)) return kInfinity;
        return hi * std::pow(0.5 * (1.0 + std::pow(lo / hi, p)), 1.0 / p);
    }
    return lo * std::pow(0.5 * (1.0 + std::pow(hi / lo, p)), 1.0 / p);
}

double lemma_f_c(double c, double r) {
    require_c(c, "lemma_f_c");
    require_open_unit(r, "lemma_f_c");
    // 1 - (c r')^2 = (1 - c^2) + c^2 r^2
    const double num = (1.0 - c) * (1.0 + c) + c * c * r * r;
    if (c == 1.0) return 1.0 / arth_over_x(r);
    return num / (r * arth_scaled(c, r));
}

double lemma_F_c(double c, double r) {
    require_c(c, "lemma_F_c");
    require_open_unit(r, "lemma_F_c");
    return arth_scaled(c, r) * arth_scaled_complement(c, r);
}

double lemma_G_c(double c, double r) {
    require_c(c, "lemma_G_c");
    require_open_unit(r, "lemma_G_c");
    return arth_scaled(c, r) + arth_scaled_complement(c, r);
}

GRange G_range(double c) {
    require_c(c, "G_range");
    const double lower_split = std::sqrt(2.0 / 3.0);
    const double upper_split = std::sqrt(2.0 * (kSqrt2 - 1.0));
    const double c2 = c * c;
    const double bisector = arth(std::min(1.0, 2.0 * kSqrt2 * c / (2.0 + c2)));

    GRange g{};
    g.m = std::nan("");
    g.r0 = std::nan("");
    if (3.0 * c2 >= 2.0) {
        g.m = std::sqrt((2.0 - c2) * std::max(0.0, 3.0 * c2 - 2.0));
        g.r0 = std::sqrt(0.5 * (1.0 - g.m / c2));
    }
    auto critical_value = [&] {
        const double r0p = complement(g.r0);
        return arth(c * (g.r0 + r0p) / (1.0 + c2 * g.r0 * r0p));
    };

    if (c <= lower_split) {
        g.case_number = 1;
        g.lower = arth(c);
        g.lower_attained = false;
        g.upper = bisector;
        g.upper_attained = true;
    } else if (c < upper_split) {
        g.case_number = 2;
        g.lower = arth(c);
        g.lower_attained = false;
        g.upper = critical_value();
        g.upper_attained = true;
    } else if (c < 1.0) {
        g.case_number = 3;
        g.lower = bisector;
        g.lower_attained = true;
        g.upper = critical_value();
        g.upper_attained = true;
    } else {
        g.case_number = 4;
        g.lower = bisector;
        g.lower_attained = true;
        g.upper = kInfinity;
        g.upper_attained = false;
    }
    return g;
}

double lemma_h1(double r) {
    require_open_unit(r, "lemma_h1");
    return complement(r) / arth_of_complement(r);
}

double lemma_h(double r) {
    require_open_unit(r, "lemma_h");
    return 1.0 / arth_over_x(r) + lemma_h1(r);
}

double lemma_g_le2(double p, double r) {
    require_open_unit(r, "lemma_g_le2");
    return r / complement(r) * std::pow(std::atanh(r) / arth_of_complement(r), p - 1.0);
}

double lemma_f_t1l1(double r) {
    require_open_unit(r, "lemma_f_t1l1");
    // Numerator and denominator divided by r^3 and written in terms of the
    // excess (arth r - r) / r^3, so the 0/0 at r -> 0 never forms.
    const double e = arth_excess_scaled(r);
    const double r2 = r * r;
    const double rp2 = (1.0 - r) * (1.0 + r);
    const double num = -3.0 + r2 + rp2 * rp2 * e;
    const double den = rp2 * (1.0 + (1.0 + r2) * e);
    return num / den;
}

double lemma_h_p(double p, double r) {
    require_open_unit(r, "lemma_h_p");
    const double rp2 = (1.0 - r) * (1.0 + r);
    return 1.0 + arth_over_x(r) * (p * rp2 - 1.0 - r * r);
}

double lemma_g_pq(double p, double q, double r) {
    require_open_unit(r, "lemma_g_pq");
    const double rp2 = (1.0 - r) * (1.0 + r);
    return std::exp((q - 1.0) * std::log(std::atanh(r)) - (p - 1.0) * std::log(r) - std::log(rp2));
}

double lemma_aux(const LemmaFunction& fn, double r) {
    switch (fn.name) {
        case LemmaName::h1: return lemma_h1(r);
        case LemmaName::h: return lemma_h(r);
        case LemmaName::g_le2: return lemma_g_le2(fn.p, r);
        case LemmaName::f_t1l1: return lemma_f_t1l1(r);
        case LemmaName::h_p: return lemma_h_p(fn.p, r);
        case LemmaName::g_pq: return lemma_g_pq(fn.p, fn.q, r);
    }
    throw ConfigurationError("lemma_aux: unknown function");
}

std::string_view to_string(LemmaName n) {
    switch (n) {
        case LemmaName::h1: return "h1";
        case LemmaName::h: return "h";
        case LemmaName::g_le2: return "g_le2";
        case LemmaName::f_t1l1: return "f_t1l1";
        case LemmaName::h_p: return "h_p";
        case LemmaName::g_pq: return "g_pq";
    }
    return "?";
}

LemmaName lemma_name_from_string(std::string_view s) {
    for (auto n : {LemmaName::h1, LemmaName::h, LemmaName::g_le2, LemmaName::f_t1l1, LemmaName::h_p, LemmaName::g_pq})
        if (to_string(n) == s) return n;
    throw ConfigurationError("unknown lemma function '" + std::string(s) + "'");
}

double threshold_C() {
    return 1.0 - std::log(kSqrt2 + 1.0) / kSqrt2;
}

double big_C_of_p(double p) {
    if (!(p < -2.0)) throw DomainError("big_C_of_p: p must be < -2");
    // r = 1 / (1 + e^{-s}) spaces the grid logarithmically towards both ends.
    auto h_at = [p](double s) { return lemma_h_p(p, 1.0 / (1.0 + std::exp(-s))); };
    return search::grid_then_golden_max(h_at, -36.0, 30.0, 4096, 1e-12).value;
}

ConvexityRegionPoint classify_convexity(double p, double q) {
    if (std::isnan(p) || std::isnan(q)) throw DomainError("classify_convexity: NaN order");
    ConvexityClass cls = ConvexityClass::NotConvex;
    if (p >= -2.0) {
        if (q >= p) cls = ConvexityClass::ConvexD1;
    } else if (q >= big_C_of_p(p)) {
        cls = ConvexityClass::ConvexD2;
    }
    return {p, q, cls};
}

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("agm: arguments must be positive");
    for (int it = 0; it < 64; ++it) {
        if (std::abs(a - b) <= 1e-16 * a) break;
        const double next_a = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next_a;
    }
    return a;
}

double grotzsch_mu_pair(double r, double rp) {
    require_open_unit(r, "grotzsch_mu_pair");
    require_open_unit(rp, "grotzsch_mu_pair");
    return mu_from_pair(r, rp);
}

double grotzsch_mu(double r) {
    require_open_unit(r, "grotzsch_mu");
    return mu_from_pair(r, complement(r));
}

double mu_inverse(double y) {
    return mu_inverse_pair(y).first;
}

double phi_K(double K, double r) {
    if (!(K >= 1.0)) throw DomainError("phi_K: K must be >= 1");
    require_open_unit(r, "phi_K");
    return mu_inverse(grotzsch_mu(r) / K);
}

double distortion_A(double K) {
    if (!(K >= 1.0)) throw DomainError("distortion_A: K must be >= 1");
    const double y = grotzsch_mu(std::tanh(0.5)) / K;
    // For small y, mu(r) = pi^2 / (4 log(4 / r')) up to O(r'^2), which gives
    // arth r = pi^2 / (4 y) - log 2 once r' is far below double precision.
    if (y < 0.02) return 0.5 * std::numbers::pi * std::numbers::pi / y - 2.0 * std::log(2.0);
    const auto [r, rp] = mu_inverse_pair(y);
    // arth r = log((1 + r) / r') keeps precision when r is close to 1.
    return 2.0 * (r < 0.5 ? std::atanh(r) : std::log((1.0 + r) / rp));
}

double distortion_u() {
    const double a = std::acosh(std::numbers::e);
    return a * std::tanh(a);
}

double distortion_v() {
    const double e = std::numbers::e;
    return std::log(2.0 * (1.0 + std::sqrt(1.0 - 1.0 / (e * e))));
}

}  // namespace hyplam::specfun
