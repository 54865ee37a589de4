#pragma once

// Upper bounds for the product of opposite-side distances of the image of a
// Lambert (or ideal) quadrilateral under a K-quasiconformal self-map of the
// unit disk.

#include <optional>
#include <string_view>

namespace hyplam::qcbounds {

struct QcBoundInput {
    double K = 1.0;  // >= 1
    double L = 1.0;  // in (0, 1]
};

enum class QcRegime { SmallL, LargeL_KleqM, LargeL_KgtM };

std::string_view to_string(QcRegime r);

struct QcBoundResult {
    std::optional<double> r_L;   // th(1) / L, only defined for L > th(1)
    std::optional<double> M_L;   // f_L(r_L') / f_L(r_L), likewise
    QcRegime regime = QcRegime::SmallL;
    std::optional<double> r_LK;  // present iff regime == LargeL_KgtM
    double bound = 0.0;
};

bool operator==(const QcBoundResult& a, const QcBoundResult& b);

/// th(1) = (e^2 - 1) / (e^2 + 1).
double th_one();

/// th(1) / L; requires L > th(1).
double r_L(double L);

/// f_L(r_L') / f_L(r_L); requires L > th(1).
double M_L(double L);

/// Root of K f_c(r) = f_c(r') on (lower, 1), where f_c is specfun::lemma_f_c
/// and K exceeds f_c(lower') / f_c(lower). Throws NoRootError otherwise.
double solve_K_equation(double K, double c, double lower);

/// Root of K f_L(r) = f_L(r') on (r_L, 1); requires L > th(1) and K > M_L.
double solve_r_LK(double K, double L);

/// arth(L x) arth(L x')^{1/K}.
double T(double x, double L, double K);

QcBoundResult qc_product_bound(const QcBoundInput& in);

/// Constants for the ideal quadrilateral: r_1 = 2 sqrt(e) / (e + 1) and
/// M_1 = (e - 1)(log(sqrt e + 1) - log(sqrt e - 1)) / sqrt(e).
double r_one();
double M_one();

struct QcIdealDetails {
    double r1K;       // r_1 if K <= M_1, else the root of K f_1(r) = f_1(r')
    double T_term;    // 2^{1 + 1/K} T(r1K, 1)
    double log_term;  // (2 log(sqrt2 + 1))^2
    double A;         // A(K)
    double bound;
};

QcIdealDetails qc_ideal_details(double K);
double qc_ideal_bound(double K);

}  // namespace hyplam::qcbounds
