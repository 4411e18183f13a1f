#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperdense {

using Complex = std::complex<double>;

/// A subset of the Euclidean plane with closed-form distance support.
/// Analytic shapes (point, circle, segment, polyline) keep exact
/// distance formulas; clouds are treated as finite point sets.
struct PlaneSet {
    enum class Kind { Point, Circle, Segment, Polyline, Cloud };

    Kind kind = Kind::Point;
    Complex p0{};              // point value / circle center / segment start
    Complex p1{};              // segment end
    double radius = 0.0;       // circle only
    std::vector<Complex> pts;  // polyline vertices / cloud points

    static PlaneSet point(Complex z);
    static PlaneSet circle(Complex center, double radius);
    static PlaneSet segment(Complex a, Complex b);
    static PlaneSet polyline(std::vector<Complex> vertices);
    static PlaneSet cloud(std::vector<Complex> points);

    /// Euclidean distance from z to this set (exact).
    double nearest(Complex z) const;
    /// sup over the set of |z - w| (exact).
    double farthest(Complex z) const;

    /// Dense discretization used when no closed form applies to a pair.
    std::vector<Complex> sample(int per_feature) const;
    /// Half the largest gap between consecutive samples at that resolution;
    /// bounds the sup-distance error of sampled computations.
    double sample_tolerance(int per_feature) const;
    /// Resolution of a cloud: max over points of nearest-neighbor distance.
    double cloud_resolution() const;

    static PlaneSet from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    static PlaneSet parse_spec(const std::string& text);  // JSON or shorthand
};

/// d(A,B) = inf |z-w| over z in A, w in B. Closed forms for analytic pairs,
/// exhaustive minimum when clouds are involved.
double set_distance(const PlaneSet& A, const PlaneSet& B);

struct HausdorffResult {
    double value = 0.0;
    double tolerance = 0.0;  // 0 when both directed sups are closed-form
    bool exact = true;
    operator double() const { return value; }
};

/// H(A,B) = max(sup_{z in A} d(z,B), sup_{z in B} d(z,A)).
HausdorffResult hausdorff_distance(const PlaneSet& A, const PlaneSet& B);

}  // namespace hyperdense
