#include "hyplam/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyplam/errors.hpp"
#include "hyplam/specfun.hpp"

namespace hyplam::lambert {

namespace {

using specfun::arth;
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_L(double L) {
    if (!(L > 0.0 && L <= 1.0)) throw DomainError("L must lie in (0, 1]");
}

void require_open_angle(double a, const char* what) {
    if (!(a > 0.0 && a < 0.5 * kPi)) throw DomainError(std::string(what) + " must lie in (0, pi/2)");
}

bool near(double a, double b) {
    return std::abs(a - b) <= kBoundSlack * std::max(1.0, std::abs(b));
}

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
    return a.has_value() == b.has_value() && (!a || *a == *b);
}

}  // namespace

bool operator==(const BoundParams& a, const BoundParams& b) {
    return a.L == b.L && same_optional(a.theta, b.theta) && same_optional(a.alpha, b.alpha) && same_optional(a.K, b.K);
}

bool operator==(const BoundReport& a, const BoundReport& b) {
    return a.quantity == b.quantity && a.params == b.params && a.case_label == b.case_label && a.lower == b.lower &&
           a.upper == b.upper && a.observed == b.observed && same_optional(a.equality_witness, b.equality_witness) &&
           a.equality == b.equality && a.satisfied == b.satisfied;
}

std::string_view to_string(BoundReport::Quantity q) {
    return q == BoundReport::Quantity::Product ? "Product" : "Sum";
}

LambertQuad lambert_from(double L, double theta) {
    require_L(L);
    require_open_angle(theta, "theta");
    LambertQuad q{};
    q.L = L;
    q.theta = theta;
    // Root of L t^2 - 2t + L = 0 in (0, 1], written without cancellation.
    q.t = L / (1.0 + std::sqrt((1.0 - L) * (1.0 + L)));
    // 1 - L cos(theta) and 1 - L sin(theta) without cancellation near L = 1
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double gap_c = (1.0 - L) + 2.0 * L * std::pow(std::sin(0.5 * theta), 2);
    const double gap_s = (1.0 - L) + 2.0 * L * std::pow(std::sin(0.25 * kPi - 0.5 * theta), 2);
    q.d1 = 0.5 * std::log1p(2.0 * L * c / gap_c);
    q.d2 = 0.5 * std::log1p(2.0 * L * s / gap_s);
    const Point vc = q.t >= 1.0 ? Point::boundary(theta) : Point::at(std::polar(q.t, theta));
    q.vertices = {Point::at(0.0, 0.0), Point::at(std::tanh(0.5 * q.d1), 0.0), vc, Point::at(0.0, std::tanh(0.5 * q.d2))};
    // sh(arth x) = x / sqrt(1 - x^2), and 1 - L^2 cos^2 = (1 - L^2) + L^2 sin^2
    const double one_minus_L2 = (1.0 - L) * (1.0 + L);
    const double prod = L * L * c * s / std::sqrt((one_minus_L2 + L * L * s * s) * (one_minus_L2 + L * L * c * c));
    q.phi = std::acos(std::min(prod, 1.0));
    return q;
}

std::array<Geodesic, 4> side_lines(const LambertQuad& q) {
    const auto& v = q.vertices;
    return {Geodesic::diameter(0.0), geodesic_through(v[1], v[2]), geodesic_through(v[2], v[3]),
            Geodesic::diameter(0.5 * kPi)};
}

double product_bound(double L) {
    require_L(L);
    const double a = arth(0.5 * kSqrt2 * L);
    return a * a;
}

SumBounds sum_bounds(double L) {
    require_L(L);
    const auto range = specfun::G_range(L);
    SumBounds s{};
    s.case_number = range.case_number;
    s.lower = range.lower;
    s.upper = range.upper;
    s.lower_attained = range.lower_attained;
    s.upper_attained = range.upper_attained;
    switch (range.case_number) {
        case 1:
            s.case_label = "case 1: 0 < L <= sqrt(2/3)";
            s.upper_witnesses = {0.25 * kPi};
            break;
        case 2:
            s.case_label = "case 2: sqrt(2/3) < L < sqrt(2(sqrt2-1))";
            s.upper_witnesses = {std::acos(range.r0), std::acos(specfun::complement(range.r0))};
            break;
        case 3:
            s.case_label = "case 3: sqrt(2(sqrt2-1)) <= L < 1";
            s.upper_witnesses = {std::acos(range.r0), std::acos(specfun::complement(range.r0))};
            s.lower_witness = 0.25 * kPi;
            break;
        default:
            s.case_label = "case 4: L = 1";
            s.lower_witness = 0.25 * kPi;
            break;
    }
    return s;
}

double beardon_phi(double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw DomainError("beardon_phi: distances must be positive");
    const double prod = std::sinh(d1) * std::sinh(d2);
    if (prod > 1.0 + 1e-12) throw InconsistentQuadrilateralError("sh d1 sh d2 exceeds 1: not a Lambert quadrilateral");
    return std::acos(std::clamp(prod, 0.0, 1.0));
}

BoundReport product_report(const LambertQuad& q) {
    BoundReport r;
    r.quantity = BoundReport::Quantity::Product;
    r.params.L = q.L;
    r.params.theta = q.theta;
    r.case_label = "d1 d2 <= (arth(sqrt2 L/2))^2";
    r.lower = 0.0;
    r.upper = product_bound(q.L);
    r.observed = q.d1 * q.d2;
    r.equality_witness = 0.25 * kPi;
    r.equality = near(r.observed, r.upper);
    r.satisfied = r.lower - kBoundSlack <= r.observed && r.observed <= r.upper + kBoundSlack;
    return r;
}

BoundReport sum_report(const LambertQuad& q) {
    const SumBounds s = sum_bounds(q.L);
    BoundReport r;
    r.quantity = BoundReport::Quantity::Sum;
    r.params.L = q.L;
    r.params.theta = q.theta;
    r.case_label = s.case_label;
    r.lower = s.lower;
    r.upper = s.upper;
    r.observed = q.d1 + q.d2;
    if (!s.upper_witnesses.empty()) {
        // the witness nearest to the evaluated angle
        r.equality_witness = *std::min_element(s.upper_witnesses.begin(), s.upper_witnesses.end(),
                                               [&](double a, double b) {
                                                   return std::abs(a - q.theta) < std::abs(b - q.theta);
                                               });
    }
    if (s.lower_witness && (!r.equality_witness || near(r.observed, s.lower))) r.equality_witness = s.lower_witness;
    r.equality = (s.upper_attained && near(r.observed, s.upper)) || (s.lower_attained && near(r.observed, s.lower));
    r.satisfied = r.lower - kBoundSlack <= r.observed && r.observed <= r.upper + kBoundSlack;
    return r;
}

IdealDistances ideal_quad(double alpha) {
    require_open_angle(alpha, "alpha");
    return {2.0 * arth(std::cos(alpha)), 2.0 * arth(std::sin(alpha))};
}

std::array<Point, 4> ideal_vertices(double alpha) {
    return {Point::boundary(alpha), Point::boundary(kPi - alpha), Point::boundary(kPi + alpha),
            Point::boundary(-alpha)};
}

double alpha_from_quadruple(const Point& a, const Point& b, const Point& c, const Point& d) {
    std::array<Point, 4> v{a, b, c, d};
    for (auto& p : v) {
        if (p.is_infinity()) throw DomainError("ideal vertex at infinity");
        p = Point::disk(p.z());
        if (!p.is_boundary()) throw DomainError("ideal vertices must lie on the unit circle");
    }
    const double base = std::arg(v[0].z());
    auto offset = [&](const Point& p) {
        double t = std::fmod(std::arg(p.z()) - base, 2.0 * kPi);
        return t < 0.0 ? t + 2.0 * kPi : t;
    };
    const double ob = offset(v[1]);
    const double oc = offset(v[2]);
    const double od = offset(v[3]);
    if (!(0.0 < ob && ob < oc && oc < od)) throw OrderingError("ideal vertices are not in counterclockwise order");
    const double ratio = absolute_ratio(v[0], v[1], v[2], v[3]);
    if (ratio < 1.0) throw OrderingError("absolute ratio below 1: vertices not in the assumed configuration");
    return std::acos(std::sqrt(1.0 / ratio));
}

IdealNormalization normalize_ideal(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double alpha = alpha_from_quadruple(a, b, c, d);
    const auto target = ideal_vertices(alpha);
    return {alpha, MoebiusMap::from_triples({a.z(), b.z(), c.z()}, {target[0].z(), target[1].z(), target[2].z()})};
}

double ideal_product_bound() {
    const double a = 2.0 * std::log(kSqrt2 + 1.0);
    return a * a;
}

double ideal_sum_bound() {
    return 4.0 * std::log(kSqrt2 + 1.0);
}

BoundReport ideal_product_report(double alpha) {
    const auto [d1, d2] = ideal_quad(alpha);
    BoundReport r;
    r.quantity = BoundReport::Quantity::Product;
    r.params.L = 1.0;
    r.params.alpha = alpha;
    r.case_label = "ideal: d1 d2 <= (2 log(sqrt2+1))^2";
    r.lower = 0.0;
    r.upper = ideal_product_bound();
    r.observed = d1 * d2;
    r.equality_witness = 0.25 * kPi;
    r.equality = near(r.observed, r.upper);
    r.satisfied = r.observed <= r.upper + kBoundSlack;
    return r;
}

BoundReport ideal_sum_report(double alpha) {
    const auto [d1, d2] = ideal_quad(alpha);
    BoundReport r;
    r.quantity = BoundReport::Quantity::Sum;
    r.params.L = 1.0;
    r.params.alpha = alpha;
    r.case_label = "ideal: d1 + d2 >= 4 log(sqrt2+1)";
    r.lower = ideal_sum_bound();
    r.upper = specfun::kInfinity;
    r.observed = d1 + d2;
    r.equality_witness = 0.25 * kPi;
    r.equality = near(r.observed, r.lower);
    r.satisfied = r.observed >= r.lower - kBoundSlack;
    return r;
}

}  // namespace hyplam::lambert
