#pragma once

// Scalar special functions: arth, Holder means, the lemma-function family
// behind the Lambert bounds, the Grotzsch modulus mu, the distortion function
// phi_K and the constant A(K).

#include <limits>
#include <string>
#include <string_view>

namespace hyplam::specfun {

/// +infinity; arth(1) and unbounded ranges propagate it through sums and
/// comparisons.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Order of a Holder (power) mean; p == 0 is the geometric mean.
struct HolderOrder {
    double p = 1.0;

    bool geometric() const { return p == 0.0; }
};

enum class ConvexityClass { ConvexD1, ConvexD2, NotConvex };

struct ConvexityRegionPoint {
    double p;
    double q;
    ConvexityClass classification;
};

std::string_view to_string(ConvexityClass c);

/// r' = sqrt(1 - r^2), accurate for r near 1.
double complement(double r);

/// Inverse hyperbolic tangent on [0, 1]; arth(1) = kInfinity.
double arth(double x);

/// arth(r') computed from r without forming r' - 1; finite for tiny r.
double arth_of_complement(double r);

/// Power mean of r, s > 0 (either may be kInfinity).
double holder_mean(HolderOrder p, double r, double s);

/// f_c(r) = (1 - (c r')^2) / (r arth(c r)), c in (0,1], r in (0,1).
double lemma_f_c(double c, double r);

/// F_c(r) = arth(c r) arth(c r').
double lemma_F_c(double c, double r);

/// G_c(r) = arth(c r) + arth(c r').
double lemma_G_c(double c, double r);

/// Closed-form range of G_c. case_number is 1..4 following the split of c
/// at sqrt(2/3), sqrt(2(sqrt2 - 1)) and 1.
struct GRange {
    int case_number;
    double lower;
    double upper;
    bool lower_attained;
    bool upper_attained;
    double m;   // sqrt((2 - c^2)(3c^2 - 2)); NaN for c^2 < 2/3
    double r0;  // critical point of G_c below sqrt2/2; NaN when not defined
};

GRange G_range(double c);

// Functions of the supporting lemmas, all on r in (0, 1).

/// h1(r) = r' / arth r'.
double lemma_h1(double r);
/// h(r) = r / arth r + r' / arth r'.
double lemma_h(double r);
/// g(r) = (r / r') (arth r / arth r')^{p-1}.
double lemma_g_le2(double p, double r);
/// f(r) = (r'^4 arth r - r(1 + r^2)) / (r'^2 ((1 + r^2) arth r - r)).
double lemma_f_t1l1(double r);
/// h_p(r) = 1 + p r'^2 arth(r)/r - (1 + r^2) arth(r)/r.
double lemma_h_p(double p, double r);
/// g_{p,q}(r) = arth^{q-1}(r) / (r^{p-1} r'^2).
double lemma_g_pq(double p, double q, double r);

enum class LemmaName { h1, h, g_le2, f_t1l1, h_p, g_pq };

/// A named lemma function together with its parameters.
struct LemmaFunction {
    LemmaName name;
    double p = 0.0;
    double q = 0.0;
};

double lemma_aux(const LemmaFunction& fn, double r);

std::string_view to_string(LemmaName n);
/// Throws ConfigurationError for unknown names.
LemmaName lemma_name_from_string(std::string_view s);

/// C = 1 - log(sqrt2 + 1) / sqrt2.
double threshold_C();

/// C(p) = sup_{0<r<1} h_p(r) for p < -2.
double big_C_of_p(double p);

ConvexityRegionPoint classify_convexity(double p, double q);

/// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

/// Modulus of the Grotzsch ring B^2 \ [0, r], r in (0, 1).
double grotzsch_mu(double r);

/// mu from a pair (r, r') given separately, so that r' near 1 or near 0
/// does not have to be recovered from a rounded r.
double grotzsch_mu_pair(double r, double rp);

/// Inverse of mu on (0, infinity).
double mu_inverse(double y);

/// phi_K(r) = mu^{-1}(mu(r) / K), K >= 1.
double phi_K(double K, double r);

/// A(K) = 2 arth(phi_K(th 1/2)), K >= 1.
double distortion_A(double K);

/// u = arch(e) th(arch(e)) and v = log(2(1 + sqrt(1 - 1/e^2))), the slopes of
/// the linear bracket around A(K).
double distortion_u();
double distortion_v();

}  // namespace hyplam::specfun
