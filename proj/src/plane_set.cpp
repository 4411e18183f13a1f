#include "hyperdense/plane_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hyperdense {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double point_segment_distance(Complex z, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double segment_segment_distance(Complex p1, Complex p2, Complex q1, Complex q2) {
    if (segments_intersect(p1, p2, q1, q2)) return 0.0;
    return std::min(std::min(point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)),
                    std::min(point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2)));
}

// Range [lo, hi] of |z - c| as z runs over the segment [a, b].
void segment_center_distance_range(Complex a, Complex b, Complex c, double& lo, double& hi) {
    lo = point_segment_distance(c, a, b);
    hi = std::max(std::abs(a - c), std::abs(b - c));
}

std::vector<std::pair<Complex, Complex>> segments_of(const PlaneSet& s) {
    std::vector<std::pair<Complex, Complex>> out;
    if (s.kind == PlaneSet::Kind::Segment) {
        out.emplace_back(s.p0, s.p1);
    } else if (s.kind == PlaneSet::Kind::Polyline) {
        for (std::size_t i = 0; i + 1 < s.pts.size(); ++i) out.emplace_back(s.pts[i], s.pts[i + 1]);
    }
    return out;
}

Complex json_to_complex(const nlohmann::json& j) {
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_number()) return {j.get<double>(), 0.0};
    throw std::invalid_argument("expected complex as [re, im]");
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

PlaneSet PlaneSet::point(Complex z) {
    PlaneSet s;
    s.kind = Kind::Point;
    s.p0 = z;
    return s;
}

PlaneSet PlaneSet::circle(Complex center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
    PlaneSet s;
    s.kind = Kind::Circle;
    s.p0 = center;
    s.radius = radius;
    return s;
}

PlaneSet PlaneSet::segment(Complex a, Complex b) {
    PlaneSet s;
    s.kind = Kind::Segment;
    s.p0 = a;
    s.p1 = b;
    return s;
}

PlaneSet PlaneSet::polyline(std::vector<Complex> vertices) {
    if (vertices.size() < 2) throw std::invalid_argument("polyline needs at least 2 vertices");
    PlaneSet s;
    s.kind = Kind::Polyline;
    s.pts = std::move(vertices);
    return s;
}

PlaneSet PlaneSet::cloud(std::vector<Complex> points) {
    if (points.empty()) throw std::invalid_argument("cloud must be non-empty");
    PlaneSet s;
    s.kind = Kind::Cloud;
    s.pts = std::move(points);
    return s;
}

double PlaneSet::nearest(Complex z) const {
    switch (kind) {
        case Kind::Point: return std::abs(z - p0);
        case Kind::Circle: return std::abs(std::abs(z - p0) - radius);
        case Kind::Segment: return point_segment_distance(z, p0, p1);
        case Kind::Polyline: {
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                d = std::min(d, point_segment_distance(z, pts[i], pts[i + 1]));
            return d;
        }
        case Kind::Cloud: {
            double d = std::numeric_limits<double>::infinity();
            for (Complex p : pts) d = std::min(d, std::abs(z - p));
            return d;
        }
    }
    return 0.0;
}

double PlaneSet::farthest(Complex z) const {
    switch (kind) {
        case Kind::Point: return std::abs(z - p0);
        case Kind::Circle: return std::abs(z - p0) + radius;
        case Kind::Segment: return std::max(std::abs(z - p0), std::abs(z - p1));
        case Kind::Polyline: {
            double d = 0.0;
            for (Complex p : pts) d = std::max(d, std::abs(z - p));
            return d;
        }
        case Kind::Cloud: {
            double d = 0.0;
            for (Complex p : pts) d = std::max(d, std::abs(z - p));
            return d;
        }
    }
    return 0.0;
}

std::vector<Complex> PlaneSet::sample(int per_feature) const {
    const int n = std::max(per_feature, 8);
    std::vector<Complex> out;
    switch (kind) {
        case Kind::Point: out.push_back(p0); break;
        case Kind::Circle:
            out.reserve(n);
            for (int k = 0; k < n; ++k) {
                const double t = 2.0 * M_PI * k / n;
                out.push_back(p0 + radius * Complex(std::cos(t), std::sin(t)));
            }
            break;
        case Kind::Segment:
            out.reserve(n + 1);
            for (int k = 0; k <= n; ++k) out.push_back(p0 + (p1 - p0) * (double(k) / n));
            break;
        case Kind::Polyline:
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                for (int k = 0; k <= n; ++k) out.push_back(pts[i] + (pts[i + 1] - pts[i]) * (double(k) / n));
            break;
        case Kind::Cloud: out = pts; break;
    }
    return out;
}

double PlaneSet::sample_tolerance(int per_feature) const {
    const int n = std::max(per_feature, 8);
    switch (kind) {
        case Kind::Point: return 0.0;
        case Kind::Circle: return radius * M_PI / n;  // half arc gap
        case Kind::Segment: return 0.5 * std::abs(p1 - p0) / n;
        case Kind::Polyline: {
            double g = 0.0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) g = std::max(g, std::abs(pts[i + 1] - pts[i]));
            return 0.5 * g / n;
        }
        case Kind::Cloud: return 0.0;  // the cloud is the set
    }
    return 0.0;
}

double PlaneSet::cloud_resolution() const {
    if (kind != Kind::Cloud || pts.size() < 2) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double nn = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            nn = std::min(nn, std::abs(pts[i] - pts[j]));
        }
        worst = std::max(worst, nn);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// set_distance

double set_distance(const PlaneSet& A, const PlaneSet& B) {
    using K = PlaneSet::Kind;
    // Order so the simpler kind comes first.
    if (static_cast<int>(A.kind) > static_cast<int>(B.kind)) return set_distance(B, A);

    const K ka = A.kind, kb = B.kind;
    if (ka == K::Point) return B.nearest(A.p0);

    if (ka == K::Circle && kb == K::Circle) {
        const double D = std::abs(A.p0 - B.p0);
        if (D > A.radius + B.radius) return D - A.radius - B.radius;
        if (D < std::abs(A.radius - B.radius)) return std::abs(A.radius - B.radius) - D;
        return 0.0;
    }
    if (ka == K::Circle && (kb == K::Segment || kb == K::Polyline)) {
        double best = std::numeric_limits<double>::infinity();
        for (auto [a, b] : segments_of(B)) {
            double lo, hi;
            segment_center_distance_range(a, b, A.p0, lo, hi);
            if (A.radius >= lo && A.radius <= hi)
                best = 0.0;
            else
                best = std::min(best, A.radius < lo ? lo - A.radius : A.radius - hi);
        }
        return best;
    }
    if ((ka == K::Segment || ka == K::Polyline) && (kb == K::Segment || kb == K::Polyline)) {
        double best = std::numeric_limits<double>::infinity();
        for (auto [a1, a2] : segments_of(A))
            for (auto [b1, b2] : segments_of(B)) best = std::min(best, segment_segment_distance(a1, a2, b1, b2));
        return best;
    }
    if (kb == K::Cloud) {
        double best = std::numeric_limits<double>::infinity();
        for (Complex p : B.pts) best = std::min(best, A.nearest(p));
        return best;
    }
    throw std::logic_error("unhandled set_distance pair");
}

// ---------------------------------------------------------------------------
// hausdorff_distance

namespace {

constexpr int kHausdorffSamples = 4096;

// sup_{z in A} d(z, B); returns NaN when no closed form applies.
double directed_sup_exact(const PlaneSet& A, const PlaneSet& B) {
    using K = PlaneSet::Kind;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (A.kind == K::Point) return B.nearest(A.p0);
    if (A.kind == K::Cloud) {
        double s = 0.0;
        for (Complex p : A.pts) s = std::max(s, B.nearest(p));
        return s;
    }
    if (B.kind == K::Point) return A.farthest(B.p0);

    if (A.kind == K::Circle && B.kind == K::Circle) {
        // |z - Bc| spans [|D - rA|, D + rA] on circle A; d(z,B) = | |z-Bc| - rB |.
        const double D = std::abs(A.p0 - B.p0);
        const double lo = std::abs(D - A.radius), hi = D + A.radius;
        return std::max(std::abs(lo - B.radius), std::abs(hi - B.radius));
    }
    if ((A.kind == K::Segment || A.kind == K::Polyline) && B.kind == K::Circle) {
        double s = 0.0;
        for (auto [a, b] : segments_of(A)) {
            double lo, hi;
            segment_center_distance_range(a, b, B.p0, lo, hi);
            s = std::max(s, std::max(std::abs(lo - B.radius), std::abs(hi - B.radius)));
        }
        return s;
    }
    if ((A.kind == K::Segment || A.kind == K::Polyline) && B.kind == K::Segment) {
        // d(., B) is convex for a single segment, so vertex maxima are global.
        double s = 0.0;
        if (A.kind == K::Segment) {
            s = std::max(B.nearest(A.p0), B.nearest(A.p1));
        } else {
            for (Complex v : A.pts) s = std::max(s, B.nearest(v));
        }
        return s;
    }
    return nan;
}

double directed_sup(const PlaneSet& A, const PlaneSet& B, double& tolerance) {
    const double exact = directed_sup_exact(A, B);
    if (!std::isnan(exact)) {
        // A cloud carries its own resolution when it stands in for a curve.
        if (A.kind == PlaneSet::Kind::Cloud) tolerance = std::max(tolerance, A.cloud_resolution());
        return exact;
    }
    double s = 0.0;
    for (Complex p : A.sample(kHausdorffSamples)) s = std::max(s, B.nearest(p));
    tolerance = std::max(tolerance, A.sample_tolerance(kHausdorffSamples));
    return s;
}

}  // namespace

HausdorffResult hausdorff_distance(const PlaneSet& A, const PlaneSet& B) {
    HausdorffResult r;
    r.value = std::max(directed_sup(A, B, r.tolerance), directed_sup(B, A, r.tolerance));
    r.exact = (r.tolerance == 0.0);
    return r;
}

// ---------------------------------------------------------------------------
// JSON

PlaneSet PlaneSet::from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const auto& p = j.at("params");
    if (kind == "point") return point(json_to_complex(p.at("z")));
    if (kind == "circle") return circle(json_to_complex(p.at("center")), p.at("radius").get<double>());
    if (kind == "segment") return segment(json_to_complex(p.at("a")), json_to_complex(p.at("b")));
    if (kind == "polyline") {
        std::vector<Complex> v;
        for (const auto& e : p.at("vertices")) v.push_back(json_to_complex(e));
        return polyline(std::move(v));
    }
    if (kind == "cloud") {
        std::vector<Complex> v;
        for (const auto& e : p.at("points")) v.push_back(json_to_complex(e));
        return cloud(std::move(v));
    }
    throw std::invalid_argument("unknown plane-set kind: " + kind);
}

nlohmann::json PlaneSet::to_json() const {
    nlohmann::json p;
    const char* name = "";
    switch (kind) {
        case Kind::Point:
            name = "point";
            p["z"] = complex_to_json(p0);
            break;
        case Kind::Circle:
            name = "circle";
            p["center"] = complex_to_json(p0);
            p["radius"] = radius;
            break;
        case Kind::Segment:
            name = "segment";
            p["a"] = complex_to_json(p0);
            p["b"] = complex_to_json(p1);
            break;
        case Kind::Polyline: {
            name = "polyline";
            auto arr = nlohmann::json::array();
            for (Complex v : pts) arr.push_back(complex_to_json(v));
            p["vertices"] = arr;
            break;
        }
        case Kind::Cloud: {
            name = "cloud";
            auto arr = nlohmann::json::array();
            for (Complex v : pts) arr.push_back(complex_to_json(v));
            p["points"] = arr;
            break;
        }
    }
    return {{"kind", name}, {"params", p}};
}

PlaneSet PlaneSet::parse_spec(const std::string& text) {
    if (!text.empty() && text.front() == '{') return from_json(nlohmann::json::parse(text));
    // shorthand: "point:re[,im]" | "circle:cre,cim,r" | "segment:x1,y1,x2,y2"
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad set spec: " + text);
    const std::string kind = text.substr(0, colon);
    std::vector<double> v;
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (kind == "point" && (v.size() == 1 || v.size() == 2))
        return point({v[0], v.size() == 2 ? v[1] : 0.0});
    if (kind == "circle" && v.size() == 3) return circle({v[0], v[1]}, v[2]);
    if (kind == "segment" && v.size() == 4) return segment({v[0], v[1]}, {v[2], v[3]});
    throw std::invalid_argument("bad set spec: " + text);
}

}  // namespace hyperdense
