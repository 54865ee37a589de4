#include "hyplam/qcbounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyplam/errors.hpp"
#include "hyplam/scalar_search.hpp"
#include "hyplam/specfun.hpp"

namespace hyplam::qcbounds {

namespace {

using specfun::arth;
using specfun::complement;
using specfun::lemma_f_c;

void require_K(double K) {
    if (!(K >= 1.0) || !std::isfinite(K)) throw DomainError("K must be a finite number >= 1");
}

void require_L(double L) {
    if (!(L > 0.0 && L <= 1.0)) throw DomainError("L must lie in (0, 1]");
}

double ratio_at(double c, double r) {
    return lemma_f_c(c, complement(r)) / lemma_f_c(c, r);
}

bool same(const std::optional<double>& a, const std::optional<double>& b) {
    return a.has_value() == b.has_value() && (!a || *a == *b);
}

}  // namespace

std::string_view to_string(QcRegime r) {
    switch (r) {
        case QcRegime::SmallL: return "SmallL";
        case QcRegime::LargeL_KleqM: return "LargeL_KleqM";
        case QcRegime::LargeL_KgtM: return "LargeL_KgtM";
    }
    return "?";
}

bool operator==(const QcBoundResult& a, const QcBoundResult& b) {
    return same(a.r_L, b.r_L) && same(a.M_L, b.M_L) && a.regime == b.regime && same(a.r_LK, b.r_LK) &&
           a.bound == b.bound;
}

double th_one() {
    const double e2 = std::exp(2.0);
    return (e2 - 1.0) / (e2 + 1.0);
}

double r_L(double L) {
    require_L(L);
    if (!(L > th_one())) throw DomainError("r_L is only defined for L > th(1)");
    return th_one() / L;
}

double M_L(double L) {
    return ratio_at(L, r_L(L));
}

double solve_K_equation(double K, double c, double lower) {
    require_K(K);
    const double m = ratio_at(c, lower);
    if (!(K > m)) throw NoRootError("K f(r) = f(r') has no root above the lower bracket when K <= " + std::to_string(m));
    auto g = [&](double r) { return K * lemma_f_c(c, r) - lemma_f_c(c, complement(r)); };
    // g(lower) = f(lower) (K - m) > 0; when K is within rounding of m the
    // root can sit inside the first 1e-12 of the bracket
    double lo = lower + 1e-12;
    if (!(g(lo) > 0.0)) lo = lower;
    const double hi = 1.0 - 1e-12;
    if (!(g(lo) > 0.0 && g(hi) < 0.0)) throw NoRootError("K f(r) = f(r') is not bracketed on (lower, 1)");
    return search::bisect(g, lo, hi);
}

double solve_r_LK(double K, double L) {
    require_K(K);
    return solve_K_equation(K, L, r_L(L));
}

double T(double x, double L, double K) {
    return arth(L * x) * std::pow(arth(L * complement(x)), 1.0 / K);
}

QcBoundResult qc_product_bound(const QcBoundInput& in) {
    require_K(in.K);
    require_L(in.L);
    const double A = specfun::distortion_A(in.K);
    const double base = std::pow(arth(0.5 * std::numbers::sqrt2 * in.L), 2.0 / in.K);
    QcBoundResult res;
    if (in.L <= th_one()) {
        res.regime = QcRegime::SmallL;
        res.bound = A * A * base;
        return res;
    }
    res.r_L = r_L(in.L);
    res.M_L = ratio_at(in.L, *res.r_L);
    double r_star = *res.r_L;
    if (in.K <= *res.M_L) {
        res.regime = QcRegime::LargeL_KleqM;
    } else {
        res.regime = QcRegime::LargeL_KgtM;
        res.r_LK = solve_K_equation(in.K, in.L, *res.r_L);
        r_star = *res.r_LK;
    }
    res.bound = A * A * std::max(T(r_star, in.L, in.K), base);
    return res;
}

double r_one() {
    const double e = std::numbers::e;
    return 2.0 * std::sqrt(e) / (e + 1.0);
}

double M_one() {
    const double e = std::numbers::e;
    const double s = std::sqrt(e);
    return (e - 1.0) * (std::log(s + 1.0) - std::log(s - 1.0)) / s;
}

QcIdealDetails qc_ideal_details(double K) {
    require_K(K);
    QcIdealDetails d{};
    d.r1K = K <= M_one() ? r_one() : solve_K_equation(K, 1.0, r_one());
    d.T_term = std::pow(2.0, 1.0 + 1.0 / K) * T(d.r1K, 1.0, K);
    const double l = 2.0 * std::log(std::numbers::sqrt2 + 1.0);
    d.log_term = l * l;
    d.A = specfun::distortion_A(K);
    d.bound = d.A * d.A * std::max(d.T_term, d.log_term);
    return d;
}

double qc_ideal_bound(double K) {
    return qc_ideal_details(K).bound;
}

}  // namespace hyplam::qcbounds
