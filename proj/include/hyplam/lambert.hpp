#pragma once

// Lambert quadrilaterals in the normalised frame v_a = 0, v_b on the real
// axis, v_d on the imaginary axis, v_c = t e^{i theta}, and ideal
// quadrilaterals; closed-form opposite-side distances and their sharp bounds.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyplam/hypcore.hpp"

namespace hyplam::lambert {

/// Slack used for the satisfied and equality flags of a BoundReport.
inline constexpr double kBoundSlack = 1e-12;

struct LambertQuad {
    double L;      // th rho(v_a, v_c), in (0, 1]
    double theta;  // angle of v_c at v_a, in (0, pi/2)
    double t;      // |v_c|
    std::array<Point, 4> vertices;  // v_a, v_b, v_c, v_d
    double d1;     // d(J[v_a, v_d], J[v_b, v_c])
    double d2;     // d(J[v_a, v_b], J[v_c, v_d])
    double phi;    // angle at v_c
};

/// Parameters a report was evaluated at; unused entries stay empty.
struct BoundParams {
    double L = 1.0;
    std::optional<double> theta;
    std::optional<double> alpha;
    std::optional<double> K;
};

struct BoundReport {
    enum class Quantity { Product, Sum };

    Quantity quantity = Quantity::Product;
    BoundParams params;
    std::string case_label;
    double lower = 0.0;  // may be -infinity
    double upper = 0.0;  // may be +infinity
    double observed = 0.0;
    std::optional<double> equality_witness;  // theta (or alpha) where an attained bound is reached
    bool equality = false;  // observed sits on an attained bound within kBoundSlack
    bool satisfied = false;  // lower - kBoundSlack <= observed <= upper + kBoundSlack
};

bool operator==(const BoundParams& a, const BoundParams& b);
bool operator==(const BoundReport& a, const BoundReport& b);

/// Interval for d1 + d2 at a given L.
struct SumBounds {
    int case_number;
    std::string case_label;
    double lower;
    double upper;
    bool lower_attained;
    bool upper_attained;
    std::optional<double> lower_witness;  // theta
    std::vector<double> upper_witnesses;  // theta values, one or two
};

LambertQuad lambert_from(double L, double theta);

/// The four sides J[v_a,v_b], J[v_b,v_c], J[v_c,v_d], J[v_d,v_a] as lines.
std::array<Geodesic, 4> side_lines(const LambertQuad& q);

/// (arth(sqrt2 L / 2))^2.
double product_bound(double L);

SumBounds sum_bounds(double L);

/// arccos(sh d1 sh d2); the product must not exceed 1 + 1e-12.
double beardon_phi(double d1, double d2);

BoundReport product_report(const LambertQuad& q);
BoundReport sum_report(const LambertQuad& q);

struct IdealDistances {
    double d1;  // d(J*[a,d], J*[b,c]) = 2 arth(cos alpha)
    double d2;  // d(J*[a,b], J*[c,d]) = 2 arth(sin alpha)
};

IdealDistances ideal_quad(double alpha);

/// e^{i alpha}, -e^{-i alpha}, -e^{i alpha}, e^{-i alpha}.
std::array<Point, 4> ideal_vertices(double alpha);

/// alpha = arccos sqrt(1 / |a,b,c,d|) for counterclockwise ideal vertices.
double alpha_from_quadruple(const Point& a, const Point& b, const Point& c, const Point& d);

struct IdealNormalization {
    double alpha;
    MoebiusMap map;  // sends a, b, c, d to ideal_vertices(alpha)
};

IdealNormalization normalize_ideal(const Point& a, const Point& b, const Point& c, const Point& d);

/// (2 log(sqrt2 + 1))^2 and 4 log(sqrt2 + 1).
double ideal_product_bound();
double ideal_sum_bound();

BoundReport ideal_product_report(double alpha);
BoundReport ideal_sum_report(double alpha);

std::string_view to_string(BoundReport::Quantity q);

}  // namespace hyplam::lambert
