#include "hyplam/hypcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyplam/errors.hpp"
#include "hyplam/scalar_search.hpp"

namespace hyplam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSnap = 1e-9;
constexpr double kCollinear = 1e-12;
constexpr std::size_t kCoarseGrid = 256;

// 1 - |z|^2 without the cancellation of 1 - norm(z).
double conformal_gap(Complex z) {
    const double r = std::abs(z);
    return (1.0 - r) * (1.0 + r);
}

// Disk distance on raw coordinates; infinite on or outside the unit circle.
double rho_raw(Complex x, Complex y) {
    const double gx = conformal_gap(x);
    const double gy = conformal_gap(y);
    if (gx <= 0.0 || gy <= 0.0) return kInf;
    return 2.0 * std::asinh(std::abs(x - y) / std::sqrt(gx * gy));
}

double normalize_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

// Whether angle t lies on the counterclockwise arc from a to b.
bool on_ccw_arc(double t, double a, double b) {
    return normalize_angle(t - a) < normalize_angle(b - a);
}

void require_finite(const Point& p, const char* what) {
    if (p.is_infinity()) throw DomainError(std::string(what) + ": point at infinity");
}

// Order e0, e1 so that e0, x, y, e1 occur in this order along the line.
void order_endpoints(std::array<Point, 2>& e, Complex x, Complex y) {
    const double keep = std::abs(e[0].z() - x) * std::abs(y - e[1].z());
    const double swap = std::abs(e[0].z() - y) * std::abs(x - e[1].z());
    if (keep > swap) std::swap(e[0], e[1]);
}

}  // namespace

Point Point::disk(Complex z) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || r > 1.0 + kSnap) throw DomainError("point outside the closed unit disk");
    if (std::abs(r - 1.0) <= kSnap) {
        const Complex u = z / r;
        return {u.real(), u.imag(), Kind::Boundary};
    }
    return at(z);
}

Point Point::boundary(double angle) {
    return {std::cos(angle), std::sin(angle), Kind::Boundary};
}

bool operator==(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    return a.re == b.re && a.im == b.im;
}

Geodesic Geodesic::diameter(double direction) {
    Geodesic g;
    g.kind = Kind::Diameter;
    direction = std::fmod(direction, std::numbers::pi);
    if (direction < 0.0) direction += std::numbers::pi;
    g.direction = direction;
    g.endpoints = {Point::boundary(direction), Point::boundary(direction + std::numbers::pi)};
    return g;
}

Geodesic Geodesic::from_endpoints(const Point& a, const Point& b) {
    require_finite(a, "geodesic endpoint");
    require_finite(b, "geodesic endpoint");
    const Point pa = Point::disk(a.z());
    const Point pb = Point::disk(b.z());
    if (!pa.is_boundary() || !pb.is_boundary()) throw DomainError("geodesic endpoints must lie on the unit circle");
    const Complex za = pa.z();
    const Complex zb = pb.z();
    if (std::abs(za - zb) < kCollinear) throw DegenerateInputError("coincident geodesic endpoints");
    const Complex sum = za + zb;
    Geodesic g;
    if (std::abs(sum) < kCollinear) {
        g = diameter(std::arg(za));
    } else {
        g.kind = Kind::Arc;
        g.center = 2.0 * sum / std::norm(sum);
        g.radius = std::abs(za - zb) / std::abs(sum);
    }
    g.endpoints = {pa, pb};
    return g;
}

Complex Geodesic::point_at(double s) const {
    if (kind == Kind::Diameter) return std::polar(s, direction);
    const double mid = std::arg(-center);
    const double half_width = std::atan2(1.0, radius);
    return center + std::polar(radius, mid + s * half_width);
}

Complex Geodesic::tangent_at(Complex z) const {
    if (kind == Kind::Diameter) return std::polar(1.0, direction);
    const Complex radial = z - center;
    return Complex(0.0, 1.0) * radial / std::abs(radial);
}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    if (std::abs(a * d - b * c) <= 1e-14) throw DomainError("degenerate Moebius map: ad - bc = 0");
}

MoebiusMap MoebiusMap::disk_automorphism(Complex a, double angle) {
    if (!(std::abs(a) < 1.0)) throw DomainError("disk automorphism needs |a| < 1");
    const Complex rot = std::polar(1.0, angle);
    return {rot, -rot * a, -std::conj(a), 1.0};
}

MoebiusMap MoebiusMap::cayley() {
    const Complex i(0.0, 1.0);
    return {i, i, -1.0, 1.0};
}

MoebiusMap MoebiusMap::from_triples(const std::array<Complex, 3>& z, const std::array<Complex, 3>& w) {
    // S sends p1, p2, p3 to 0, 1, infinity.
    auto to_standard = [](const std::array<Complex, 3>& p) {
        const Complex u = p[1] - p[2];
        const Complex v = p[1] - p[0];
        return MoebiusMap(u, -p[0] * u, v, -p[2] * v);
    };
    return to_standard(w).inverse().compose(to_standard(z));
}

MoebiusMap MoebiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

double chordal_distance(const Point& x, const Point& y) {
    if (x.is_infinity() && y.is_infinity()) return 0.0;
    if (x.is_infinity()) return 1.0 / std::sqrt(1.0 + std::norm(y.z()));
    if (y.is_infinity()) return 1.0 / std::sqrt(1.0 + std::norm(x.z()));
    return std::abs(x.z() - y.z()) / (std::sqrt(1.0 + std::norm(x.z())) * std::sqrt(1.0 + std::norm(y.z())));
}

double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
    const std::array<Point, 4> pts{a, b, c, d};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (chordal_distance(pts[i], pts[j]) == 0.0)
                throw DegenerateInputError("absolute ratio needs four distinct points");
    const bool any_infinite = std::any_of(pts.begin(), pts.end(), [](const Point& p) { return p.is_infinity(); });
    if (any_infinite) {
        return chordal_distance(a, c) * chordal_distance(b, d) / (chordal_distance(a, b) * chordal_distance(c, d));
    }
    return std::abs(a.z() - c.z()) * std::abs(b.z() - d.z()) / (std::abs(a.z() - b.z()) * std::abs(c.z() - d.z()));
}

double rho_disk(const Point& x, const Point& y) {
    require_finite(x, "rho_disk");
    require_finite(y, "rho_disk");
    if (x == y) return 0.0;
    if (x.is_boundary() || y.is_boundary()) return kInf;
    if (!(std::abs(x.z()) < 1.0) || !(std::abs(y.z()) < 1.0)) throw DomainError("rho_disk: point outside the unit disk");
    return rho_raw(x.z(), y.z());
}

double rho_halfplane(const Point& x, const Point& y) {
    require_finite(x, "rho_halfplane");
    require_finite(y, "rho_halfplane");
    if (!(x.im > 0.0) || !(y.im > 0.0)) throw DomainError("rho_halfplane: imaginary part must be positive");
    return 2.0 * std::asinh(std::abs(x.z() - y.z()) / (2.0 * std::sqrt(x.im * y.im)));
}

Geodesic geodesic_through(const Point& x, const Point& y) {
    require_finite(x, "geodesic_through");
    require_finite(y, "geodesic_through");
    const Complex zx = Point::disk(x.z()).z();
    const Complex zy = Point::disk(y.z()).z();
    if (std::abs(zx - zy) == 0.0) throw DegenerateInputError("geodesic_through: coincident points");

    const double cross = zx.real() * zy.imag() - zx.imag() * zy.real();
    Geodesic g;
    if (std::abs(cross) < kCollinear) {
        g = Geodesic::diameter(std::arg(zy - zx));
    } else {
        const double nx = std::norm(zx);
        const double ny = std::norm(zy);
        const Complex i(0.0, 1.0);
        g.kind = Geodesic::Kind::Arc;
        g.center = i * (zy * (1.0 + nx) - zx * (1.0 + ny)) / (2.0 * (zx.imag() * zy.real() - zx.real() * zy.imag()));
        g.radius = std::abs(zx - zy) * std::abs(zx * ny - zy) / (2.0 * std::sqrt(ny) * std::abs(cross));
        const double spread = std::acos(1.0 / std::abs(g.center));
        const double base = std::arg(g.center);
        g.endpoints = {Point::boundary(base - spread), Point::boundary(base + spread)};
    }
    order_endpoints(g.endpoints, zx, zy);
    return g;
}

double rho_via_crossratio(const Point& x, const Point& y) {
    const Geodesic g = geodesic_through(x, y);
    return std::log(absolute_ratio(g.endpoints[0], x, y, g.endpoints[1]));
}

Point apply_moebius(const MoebiusMap& m, const Point& z) {
    if (z.is_infinity()) {
        if (m.c() == Complex(0.0)) return Point::infinity();
        Point p = Point::at(m.a() / m.c());
        p.kind = Point::Kind::Boundary;
        return p;
    }
    const Complex den = m.c() * z.z() + m.d();
    if (den == Complex(0.0)) return Point::infinity();
    Point p = Point::at((m.a() * z.z() + m.b()) / den);
    p.kind = z.kind;
    return p;
}

Point hyperbolic_midpoint(const Point& x, const Point& y) {
    require_finite(x, "hyperbolic_midpoint");
    require_finite(y, "hyperbolic_midpoint");
    if (x.is_boundary() || y.is_boundary()) throw DomainError("hyperbolic_midpoint: points must be interior");
    if (x == y) return x;
    const MoebiusMap to_origin = MoebiusMap::disk_automorphism(x.z(), 0.0);
    const Complex w = apply_moebius(to_origin, y).z();
    const double half = 0.5 * rho_disk(x, y);
    const Complex m = std::polar(std::tanh(0.5 * half), std::arg(w));
    return apply_moebius(to_origin.inverse(), Point::at(m));
}

bool geodesics_meet(const Geodesic& g1, const Geodesic& g2) {
    const double a1 = std::arg(g1.endpoints[0].z());
    const double a2 = std::arg(g1.endpoints[1].z());
    const double b1 = std::arg(g2.endpoints[0].z());
    const double b2 = std::arg(g2.endpoints[1].z());
    for (double a : {a1, a2})
        for (double b : {b1, b2}) {
            const double gap = normalize_angle(a - b);
            if (std::min(gap, 2.0 * std::numbers::pi - gap) < kCollinear) return true;
        }
    return on_ccw_arc(b1, a1, a2) != on_ccw_arc(b2, a1, a2);
}

double geodesic_distance(const Geodesic& g1, const Geodesic& g2, double tol) {
    if (!(tol > 0.0)) throw DomainError("geodesic_distance: tolerance must be positive");
    if (geodesics_meet(g1, g2)) return 0.0;

    constexpr double lo = -1.0 + 1e-12;
    constexpr double hi = 1.0 - 1e-12;
    bool converged = true;
    auto to_second = [&](double s1) {
        const Complex z = g1.point_at(s1);
        auto r = search::grid_then_golden_min([&](double s2) { return rho_raw(z, g2.point_at(s2)); }, lo, hi,
                                              kCoarseGrid, tol);
        converged = converged && r.converged;
        return r.value;
    };
    const auto best = search::grid_then_golden_min(to_second, lo, hi, kCoarseGrid, tol);
    if (!best.converged || !converged) throw IterationLimitError("geodesic_distance: refinement did not converge");
    return best.value;
}

Point ray_crossing(const Geodesic& g, double angle) {
    if (g.kind == Geodesic::Kind::Diameter) throw DegenerateInputError("ray_crossing: ray from 0 meets a diameter only at 0");
    const double k = std::abs(g.center) * std::cos(angle - std::arg(g.center));
    if (k < 1.0) throw DegenerateInputError("ray_crossing: ray misses the geodesic");
    // smaller root of l^2 - 2 k l + 1 = 0 (|c|^2 - r^2 = 1), written without cancellation
    const double lambda = 1.0 / (k + std::sqrt((k - 1.0) * (k + 1.0)));
    return Point::at(std::polar(lambda, angle));
}

double crossing_angle(const Geodesic& g1, const Geodesic& g2, Complex z) {
    const Complex t1 = g1.tangent_at(z);
    const Complex t2 = g2.tangent_at(z);
    const double c = std::min(1.0, std::abs((t1 * std::conj(t2)).real()));
    return std::acos(c);
}

}  // namespace hyplam
