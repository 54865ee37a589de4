#pragma once

// Metric primitives for the Poincare disk B^2 and the upper half-plane H^2:
// chordal metric, absolute ratio, hyperbolic distance, geodesics through two
// points, Moebius maps, and a numerical distance between two geodesics.

#include <array>
#include <complex>

namespace hyplam {

using Complex = std::complex<double>;

/// A point of the extended plane. Interior points are finite points of the
/// model in use (|z| < 1 for the disk, Im z > 0 for the half-plane).
struct Point {
    enum class Kind { Interior, Boundary, Infinity };

    double re = 0.0;
    double im = 0.0;
    Kind kind = Kind::Interior;

    /// Finite point with no model check.
    static Point at(Complex z) { return {z.real(), z.imag(), Kind::Interior}; }
    static Point at(double re, double im) { return {re, im, Kind::Interior}; }
    /// Closed-disk point: snapped to the unit circle when within 1e-9 of it.
    /// Throws DomainError outside the closed disk.
    static Point disk(Complex z);
    /// e^{i angle}.
    static Point boundary(double angle);
    static Point infinity() { return {0.0, 0.0, Kind::Infinity}; }

    Complex z() const { return {re, im}; }
    bool is_infinity() const { return kind == Kind::Infinity; }
    bool is_boundary() const { return kind == Kind::Boundary; }
};

bool operator==(const Point& a, const Point& b);

/// Hyperbolic line of the disk: a diameter or an arc of a circle orthogonal
/// to the unit circle, with its two ideal endpoints.
struct Geodesic {
    enum class Kind { Diameter, Arc };

    Kind kind = Kind::Diameter;
    double direction = 0.0;  // Diameter only, in [0, pi)
    Complex center{};        // Arc only
    double radius = 0.0;     // Arc only
    std::array<Point, 2> endpoints{};

    static Geodesic diameter(double direction);
    /// The geodesic line with the given ideal endpoints (J*[a, b]).
    static Geodesic from_endpoints(const Point& a, const Point& b);

    /// Point of the line for s in (-1, 1): Euclidean parameter on a diameter,
    /// normalised angle along the carrier circle on an arc. s = +-1 are the
    /// endpoints.
    Complex point_at(double s) const;
    /// Unit tangent at a point of the carrier.
    Complex tangent_at(Complex z) const;
};

/// Fractional-linear map z -> (a z + b) / (c z + d), ad - bc != 0.
class MoebiusMap {
public:
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// Disk automorphism z -> e^{i angle} (z - a) / (1 - conj(a) z), |a| < 1.
    static MoebiusMap disk_automorphism(Complex a, double angle);
    /// Cayley map z -> i (1 + z) / (1 - z), B^2 onto H^2.
    static MoebiusMap cayley();
    /// The unique map sending z1, z2, z3 to w1, w2, w3 (all finite, distinct).
    static MoebiusMap from_triples(const std::array<Complex, 3>& z, const std::array<Complex, 3>& w);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    MoebiusMap inverse() const;
    /// (*this) after other.
    MoebiusMap compose(const MoebiusMap& other) const;

private:
    Complex a_, b_, c_, d_;
};

// Chordal metric q on the extended plane.
double chordal_distance(const Point& x, const Point& y);

/// |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)). Throws DegenerateInputError
/// for coincident points.
double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

/// Hyperbolic distance in B^2. Infinite when a Boundary point is involved
/// (and distinct from the other), throws DomainError for Infinity.
double rho_disk(const Point& x, const Point& y);

/// Hyperbolic distance in H^2; both points need Im > 0.
double rho_halfplane(const Point& x, const Point& y);

/// Geodesic through two distinct points of the closed disk. Diameter when
/// x, y and 0 are collinear (|x1 y2 - x2 y1| < 1e-12), otherwise the
/// orthogonal arc. Endpoints are ordered so that endpoints[0], x, y,
/// endpoints[1] occur in this order along the line.
Geodesic geodesic_through(const Point& x, const Point& y);

/// log |x_*, x, y, y_*| using the endpoints of the geodesic through x and y.
double rho_via_crossratio(const Point& x, const Point& y);

/// Image of z, with Infinity in and out handled. The kind of a finite image
/// is inherited from z (Infinity maps to Boundary).
Point apply_moebius(const MoebiusMap& m, const Point& z);

/// Point p of J[x, y] with rho(x, p) = rho(p, y) = rho(x, y) / 2.
Point hyperbolic_midpoint(const Point& x, const Point& y);

/// Whether two lines meet in the closed disk (including a shared endpoint).
bool geodesics_meet(const Geodesic& g1, const Geodesic& g2);

/// Infimum of rho over pairs of points, one on each line. Coarse 256-point
/// grids followed by nested golden-section refinement; tol is the bracket
/// width on the line parameters. Zero for lines that meet.
double geodesic_distance(const Geodesic& g1, const Geodesic& g2, double tol = 1e-10);

/// First crossing of the ray {lambda e^{i angle} : lambda > 0} with an arc
/// geodesic. Throws DegenerateInputError when the ray misses it.
Point ray_crossing(const Geodesic& g, double angle);

/// Angle in [0, pi/2] between two lines at a common point z.
double crossing_angle(const Geodesic& g1, const Geodesic& g2, Complex z);

}  // namespace hyplam
