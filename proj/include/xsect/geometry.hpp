#pragma once

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xsect {

template <class T>
struct BasicPoint {
    T x{}, y{};
    friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
    friend bool operator<(const BasicPoint& a, const BasicPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    friend BasicPoint operator+(const BasicPoint& a, const BasicPoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend BasicPoint operator-(const BasicPoint& a, const BasicPoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend BasicPoint operator*(const T& s, const BasicPoint& a) { return {s * a.x, s * a.y}; }
};

template <class T>
T cross(const BasicPoint<T>& u, const BasicPoint<T>& v) { return u.x * v.y - u.y * v.x; }

template <class T>
T dot(const BasicPoint<T>& u, const BasicPoint<T>& v) { return u.x * v.x + u.y * v.y; }

template <class T>
T norm2(const BasicPoint<T>& u) { return dot(u, u); }

template <class T>
class BasicSegment {
public:
    BasicPoint<T> p, q;
    std::string label;

    BasicSegment(BasicPoint<T> a, BasicPoint<T> b, std::string l = {})
        : p(std::move(a)), q(std::move(b)), label(std::move(l)) {
        if (p == q) throw std::invalid_argument("degenerate segment '" + label + "'");
    }
    BasicPoint<T> direction() const { return q - p; }
    T length2() const { return norm2(q - p); }
    bool operator==(const BasicSegment&) const = default;
};

template <class T>
class BasicDisk {
public:
    BasicPoint<T> center;
    T radius;
    std::string label;

    BasicDisk(BasicPoint<T> c, T r, std::string l = {})
        : center(std::move(c)), radius(std::move(r)), label(std::move(l)) {
        if (!(radius > 0)) throw std::invalid_argument("non-positive radius for disk '" + label + "'");
    }
    bool operator==(const BasicDisk&) const = default;
};

template <class T>
class BasicPolyline {
public:
    std::vector<BasicPoint<T>> vertices;
    std::string label;

    BasicPolyline(std::vector<BasicPoint<T>> v, std::string l = {})
        : vertices(std::move(v)), label(std::move(l)) {
        if (vertices.size() < 2) throw std::invalid_argument("polyline '" + label + "' needs two vertices");
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i] == vertices[i + 1])
                throw std::invalid_argument("repeated consecutive vertex in polyline '" + label + "'");
    }
    std::size_t pieces() const { return vertices.size() - 1; }
    BasicSegment<T> piece(std::size_t i) const { return {vertices[i], vertices[i + 1], label}; }
    bool operator==(const BasicPolyline&) const = default;
};

template <class T>
struct BasicTriangle {
    std::array<BasicPoint<T>, 3> corners;
};

template <class T>
struct BasicCircle {
    BasicPoint<T> center;
    T radius;
    bool operator==(const BasicCircle&) const = default;
};

using Point = BasicPoint<Rational>;
using Segment = BasicSegment<Rational>;
using Disk = BasicDisk<Rational>;
using Polyline = BasicPolyline<Rational>;
using Triangle = BasicTriangle<Rational>;
using Circle = BasicCircle<Rational>;

enum class Orientation { CCW, CW, Collinear };

// CCW iff (c2-a2)(b1-a1) > (b2-a2)(c1-a1).
template <class T>
Orientation orientation(const BasicPoint<T>& a, const BasicPoint<T>& b, const BasicPoint<T>& c) {
    T lhs = (c.y - a.y) * (b.x - a.x);
    T rhs = (b.y - a.y) * (c.x - a.x);
    if (lhs > rhs) return Orientation::CCW;
    if (lhs < rhs) return Orientation::CW;
    return Orientation::Collinear;
}

// The two degree-four polynomials deciding whether CD crosses AB.
// p < 0 iff A and B lie strictly on opposite sides of line CD,
// q < 0 iff C and D lie strictly on opposite sides of line AB.
template <class T>
std::pair<T, T> eval_crossing_polynomials(const BasicSegment<T>& ab, const BasicPoint<T>& c,
                                          const BasicPoint<T>& d) {
    const T &a1 = ab.p.x, &a2 = ab.p.y, &b1 = ab.q.x, &b2 = ab.q.y;
    const T &c1 = c.x, &c2 = c.y, &d1 = d.x, &d2 = d.y;
    T p = ((d2 - a2) * (c1 - a1) - (c2 - a2) * (d1 - a1)) * ((d2 - b2) * (c1 - b1) - (c2 - b2) * (d1 - b1));
    T q = ((c2 - a2) * (b1 - a1) - (b2 - a2) * (c1 - a1)) * ((d2 - a2) * (b1 - a1) - (b2 - a2) * (d1 - a1));
    return {p, q};
}

enum class CrossKind { ProperCross, Touch, Disjoint };

inline const char* to_string(CrossKind k) {
    switch (k) {
        case CrossKind::ProperCross: return "ProperCross";
        case CrossKind::Touch: return "Touch";
        default: return "Disjoint";
    }
}

namespace detail {
template <class T>
bool in_box(const BasicPoint<T>& a, const BasicPoint<T>& b, const BasicPoint<T>& r) {
    return std::min(a.x, b.x) <= r.x && r.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= r.y &&
           r.y <= std::max(a.y, b.y);
}
template <class T>
bool on_segment(const BasicPoint<T>& a, const BasicPoint<T>& b, const BasicPoint<T>& r) {
    return orientation(a, b, r) == Orientation::Collinear && in_box(a, b, r);
}
}  // namespace detail

template <class T>
CrossKind segments_cross(const BasicSegment<T>& ab, const BasicSegment<T>& cd) {
    auto [p, q] = eval_crossing_polynomials(ab, cd.p, cd.q);
    if (p < 0 && q < 0) return CrossKind::ProperCross;
    using detail::on_segment;
    if (on_segment(ab.p, ab.q, cd.p) || on_segment(ab.p, ab.q, cd.q) || on_segment(cd.p, cd.q, ab.p) ||
        on_segment(cd.p, cd.q, ab.q))
        return CrossKind::Touch;
    return CrossKind::Disjoint;
}

template <class T>
bool segments_intersect(const BasicSegment<T>& a, const BasicSegment<T>& b) {
    return segments_cross(a, b) != CrossKind::Disjoint;
}

template <class T>
bool disks_intersect(const BasicDisk<T>& a, const BasicDisk<T>& b) {
    T r = a.radius + b.radius;
    return norm2(a.center - b.center) <= r * r;
}

// Disks whose boundaries cross in two points (no tangency, no nesting).
template <class T>
bool disks_overlap_strictly(const BasicDisk<T>& a, const BasicDisk<T>& b) {
    T d2 = norm2(a.center - b.center);
    T s = a.radius + b.radius, t = a.radius - b.radius;
    return d2 < s * s && d2 > t * t;
}

template <class T>
bool disks_tangent(const BasicDisk<T>& a, const BasicDisk<T>& b) {
    T d2 = norm2(a.center - b.center);
    T s = a.radius + b.radius, t = a.radius - b.radius;
    return d2 == s * s || d2 == t * t;
}

// Intersection point of the supporting lines; the lines must not be parallel.
template <class T>
BasicPoint<T> line_intersection(const BasicSegment<T>& a, const BasicSegment<T>& b) {
    BasicPoint<T> r = a.direction(), s = b.direction();
    T den = cross(r, s);
    if (den == 0) throw std::invalid_argument("parallel lines");
    T t = cross(b.p - a.p, s) / den;
    return a.p + t * r;
}

// Parameter of the crossing with b along a (0 at a.p, 1 at a.q).
template <class T>
T crossing_parameter(const BasicSegment<T>& a, const BasicSegment<T>& b) {
    T den = cross(a.direction(), b.direction());
    if (den == 0) throw std::invalid_argument("parallel lines");
    return cross(b.p - a.p, b.direction()) / den;
}

template <class T>
BasicTriangle<T> triangle_of(const BasicSegment<T>& a, const BasicSegment<T>& b, const BasicSegment<T>& c) {
    for (auto [u, v] : {std::pair{&a, &b}, std::pair{&b, &c}, std::pair{&a, &c}})
        if (segments_cross(*u, *v) != CrossKind::ProperCross)
            throw std::invalid_argument("segments '" + u->label + "' and '" + v->label + "' do not cross");
    BasicTriangle<T> t{{line_intersection(a, b), line_intersection(b, c), line_intersection(a, c)}};
    if (orientation(t.corners[0], t.corners[1], t.corners[2]) == Orientation::Collinear)
        throw std::invalid_argument("degenerate triangle");
    return t;
}

template <class T>
bool point_in_triangle(const BasicPoint<T>& p, const BasicTriangle<T>& t) {
    bool ccw = false, cw = false;
    for (int i = 0; i < 3; ++i) {
        auto o = orientation(t.corners[i], t.corners[(i + 1) % 3], p);
        ccw |= o == Orientation::CCW;
        cw |= o == Orientation::CW;
    }
    return !(ccw && cw);
}

template <class T>
bool segment_in_triangle(const BasicSegment<T>& s, const BasicTriangle<T>& t) {
    return point_in_triangle(s.p, t) && point_in_triangle(s.q, t);
}

template <class T>
T point_segment_distance2(const BasicPoint<T>& p, const BasicSegment<T>& s) {
    BasicPoint<T> d = s.direction();
    T t = dot(p - s.p, d);
    T l = norm2(d);
    if (t <= 0) return norm2(p - s.p);
    if (t >= l) return norm2(p - s.q);
    T c = cross(p - s.p, d);
    return c * c / l;
}

template <class T>
T segment_distance2(const BasicSegment<T>& a, const BasicSegment<T>& b) {
    if (segments_intersect(a, b)) return T(0);
    return std::min({point_segment_distance2(a.p, b), point_segment_distance2(a.q, b),
                     point_segment_distance2(b.p, a), point_segment_distance2(b.q, a)});
}

// ((1-t^2)/(1+t^2), 2t/(1+t^2)); angle 2*atan(t), so monotone in t.
inline Point circle_point_at(const Rational& t) {
    Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

// Rational unit vectors (v^2-u^2, 2uv)/(u^2+v^2) from coprime (u,v) of
// opposite parity with 0 < u < v, sorted by increasing angle in (0, pi/2).
inline std::vector<Point> pythagorean_points(int n) {
    if (n < 1) throw std::invalid_argument("pythagorean_points needs n >= 1");
    std::vector<std::pair<long long, long long>> uv;
    for (long long v = 2; static_cast<int>(uv.size()) < n; ++v)
        for (long long u = 1; u < v; ++u)
            if ((u + v) % 2 == 1 && std::gcd(u, v) == 1) uv.emplace_back(u, v);
    uv.resize(n);
    // angle of (v^2-u^2, 2uv) is 2*atan(u/v)
    std::sort(uv.begin(), uv.end(), [](auto a, auto b) { return a.first * b.second < b.first * a.second; });
    std::vector<Point> out;
    for (auto [u, v] : uv) {
        Rational h(u * u + v * v);
        out.push_back({Rational(v * v - u * u) / h, Rational(2 * u * v) / h});
    }
    return out;
}

inline Point pythagorean_point(long long u, long long v) {
    Rational h(u * u + v * v);
    return {Rational(v * v - u * u) / h, Rational(2 * u * v) / h};
}

// z -> s*z + t on the complex plane; s = (a, b).
struct Similarity {
    Rational a{1}, b{0}, tx{0}, ty{0};

    Point operator()(const Point& p) const { return {a * p.x - b * p.y + tx, b * p.x + a * p.y + ty}; }
    Segment operator()(const Segment& s) const { return {(*this)(s.p), (*this)(s.q), s.label}; }
    Rational scale2() const { return a * a + b * b; }

    Similarity then(const Similarity& o) const {  // o after this
        return {o.a * a - o.b * b, o.b * a + o.a * b, o.a * tx - o.b * ty + o.tx, o.b * tx + o.a * ty + o.ty};
    }
    // Similarity taking p0 -> p1 and q0 -> q1.
    static Similarity mapping(const Point& p0, const Point& q0, const Point& p1, const Point& q1) {
        Point u = q0 - p0, v = q1 - p1;
        Rational n = norm2(u);
        if (n == 0) throw std::invalid_argument("degenerate source segment");
        Similarity s;
        s.a = (v.x * u.x + v.y * u.y) / n;
        s.b = (v.y * u.x - v.x * u.y) / n;
        s.tx = 0;
        s.ty = 0;
        Point img = s(p0);
        s.tx = p1.x - img.x;
        s.ty = p1.y - img.y;
        return s;
    }
    static Similarity rotation(const Point& unit) { return {unit.x, unit.y, 0, 0}; }
    static Similarity translation(const Point& d) { return {1, 0, d.x, d.y}; }
};

}  // namespace xsect
