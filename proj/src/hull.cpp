#include "gls/hull.hpp"

#include "gls/rank.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace gls {

namespace {

using I128 = boost::multiprecision::int128_t;
using IBig = boost::multiprecision::int256_t;

std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    I128 v = I128(a) * d - I128(b) * c;
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

// Exact signed area (times 2) of a 2D polygon given by vertices.
Int shoelace_twice(const std::vector<LatticePoint>& poly) {
    Int twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice += Int(p[0]) * q[1] - Int(q[0]) * p[1];
    }
    return twice;
}

// Andrew monotone chain; strictly convex turns only (collinear points
// dropped, which does not affect the area).
std::vector<LatticePoint> hull_2d(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross_sign = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return det2(a[0] - o[0], a[1] - o[1], b[0] - o[0], b[1] - o[1]);
    };
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross_sign(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross_sign(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

// ---- exact incremental 3D hull -------------------------------------

struct Vec3 {
    std::int64_t x, y, z;
};

Vec3 sub(const LatticePoint& a, const LatticePoint& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// sign of det[b-a, c-a, d-a]; positive when d is on the outward side
// of the oriented triangle (a, b, c).
int orient3d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
             const LatticePoint& d) {
    Vec3 u = sub(b, a), v = sub(c, a), w = sub(d, a);
    IBig det = IBig(u.x) * (IBig(v.y) * w.z - IBig(v.z) * w.y) -
               IBig(u.y) * (IBig(v.x) * w.z - IBig(v.z) * w.x) +
               IBig(u.z) * (IBig(v.x) * w.y - IBig(v.y) * w.x);
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    Vec3 u = sub(b, a), v = sub(c, a);
    I128 x = I128(u.y) * v.z - I128(u.z) * v.y;
    I128 y = I128(u.z) * v.x - I128(u.x) * v.z;
    I128 z = I128(u.x) * v.y - I128(u.y) * v.x;
    return x == 0 && y == 0 && z == 0;
}

struct Face {
    std::array<std::size_t, 3> v;
    bool alive = true;
};

// Incremental hull. Coplanar points are treated as visible, so points
// landing on a face extend it with zero-volume triangles instead of
// being misclassified when they lie outside the face polygon; the
// final signed-volume sum is unaffected by the degenerate triangles.
Rat hull_volume_3d(const std::vector<LatticePoint>& pts) {
    const std::size_t n = pts.size();

    // initial affinely independent quadruple
    std::size_t i1 = 1;
    while (i1 < n && pts[i1] == pts[0]) ++i1;
    if (i1 == n) throw std::logic_error("hull3d: degenerate input");
    std::size_t i2 = i1 + 1;
    while (i2 < n && collinear(pts[0], pts[i1], pts[i2])) ++i2;
    if (i2 == n) throw std::logic_error("hull3d: degenerate input");
    std::size_t i3 = i2 + 1;
    while (i3 < n && orient3d(pts[0], pts[i1], pts[i2], pts[i3]) == 0) ++i3;
    if (i3 == n) throw std::logic_error("hull3d: degenerate input");

    std::vector<Face> faces;
    auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, const LatticePoint& inside) {
        // orient so the interior reference point is on the negative side
        if (orient3d(pts[a], pts[b], pts[c], inside) > 0) std::swap(b, c);
        faces.push_back({{a, b, c}, true});
    };
    {
        // centroid-free interior reference: use the opposite vertex
        add_face(0, i1, i2, pts[i3]);
        add_face(0, i1, i3, pts[i2]);
        add_face(0, i2, i3, pts[i1]);
        add_face(i1, i2, i3, pts[0]);
    }

    std::vector<char> processed(n, 0);
    processed[0] = processed[i1] = processed[i2] = processed[i3] = 1;

    for (std::size_t p = 0; p < n; ++p) {
        if (processed[p]) continue;
        processed[p] = 1;

        std::vector<std::size_t> visible;
        bool strictly_outside = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            int o = orient3d(pts[faces[f].v[0]], pts[faces[f].v[1]], pts[faces[f].v[2]], pts[p]);
            if (o > 0) strictly_outside = true;
            if (o >= 0) visible.push_back(f);
        }
        if (!strictly_outside) continue; // inside or on the boundary

        // horizon = edges of visible faces shared with a hidden face
        std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
        for (std::size_t f : visible) {
            const auto& v = faces[f].v;
            for (int e = 0; e < 3; ++e) {
                std::size_t a = v[static_cast<std::size_t>(e)];
                std::size_t b = v[static_cast<std::size_t>((e + 1) % 3)];
                auto key = std::minmax(a, b);
                edge_count[{key.first, key.second}] += 1;
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> horizon;
        for (std::size_t f : visible) {
            const auto& v = faces[f].v;
            for (int e = 0; e < 3; ++e) {
                std::size_t a = v[static_cast<std::size_t>(e)];
                std::size_t b = v[static_cast<std::size_t>((e + 1) % 3)];
                auto key = std::minmax(a, b);
                if (edge_count[{key.first, key.second}] == 1) horizon.emplace_back(a, b);
            }
        }
        for (std::size_t f : visible) faces[f].alive = false;
        for (const auto& [a, b] : horizon) {
            // keep the orientation of the dying face's edge: (a, b, p)
            faces.push_back({{a, b, p}, true});
        }
    }

    // signed volume relative to the first vertex
    Int six_vol = 0;
    const LatticePoint& origin = pts[0];
    for (const auto& f : faces) {
        if (!f.alive) continue;
        Vec3 u = sub(pts[f.v[0]], origin), v = sub(pts[f.v[1]], origin), w = sub(pts[f.v[2]], origin);
        Int det = Int(u.x) * (Int(v.y) * w.z - Int(v.z) * w.y) -
                  Int(u.y) * (Int(v.x) * w.z - Int(v.z) * w.x) +
                  Int(u.z) * (Int(v.x) * w.y - Int(v.y) * w.x);
        six_vol += det;
    }
    if (six_vol < 0) six_vol = -six_vol;
    return Rat(six_vol, 6);
}

// Keeps, per projection column, only the extreme points along the
// remaining axis; every hull vertex survives (a point strictly between
// two others on a lattice line is a convex combination of them).
std::vector<LatticePoint> column_filter_3d(const std::vector<LatticePoint>& pts) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>> cols;
    for (const auto& p : pts) {
        auto key = std::make_pair(p[0], p[1]);
        auto it = cols.find(key);
        if (it == cols.end())
            cols[key] = {p[2], p[2]};
        else {
            it->second.first = std::min(it->second.first, p[2]);
            it->second.second = std::max(it->second.second, p[2]);
        }
    }
    std::vector<LatticePoint> out;
    out.reserve(2 * cols.size());
    for (const auto& [key, mm] : cols) {
        out.push_back({key.first, key.second, mm.first});
        if (mm.second != mm.first) out.push_back({key.first, key.second, mm.second});
    }
    return out;
}

std::vector<LatticePoint> column_filter_2d(const std::vector<LatticePoint>& pts) {
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> cols;
    for (const auto& p : pts) {
        auto it = cols.find(p[0]);
        if (it == cols.end())
            cols[p[0]] = {p[1], p[1]};
        else {
            it->second.first = std::min(it->second.first, p[1]);
            it->second.second = std::max(it->second.second, p[1]);
        }
    }
    std::vector<LatticePoint> out;
    out.reserve(2 * cols.size());
    for (const auto& [x, mm] : cols) {
        out.push_back({x, mm.first});
        if (mm.second != mm.first) out.push_back({x, mm.second});
    }
    return out;
}

} // namespace

int affine_dimension(const std::vector<LatticePoint>& points) {
    if (points.empty()) return -1;
    const std::size_t dim = points[0].size();
    RankAccumulator rank(dim);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Int> row(dim);
        for (std::size_t c = 0; c < dim; ++c) row[c] = Int(points[i][c]) - Int(points[0][c]);
        rank.add(std::move(row));
        if (rank.rank() == dim) break;
    }
    return static_cast<int>(rank.rank());
}

std::optional<Rat> convex_hull_volume(const std::vector<LatticePoint>& points, int dim) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("convex_hull_volume: dimension must be 1, 2 or 3");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("convex_hull_volume: point arity does not match dimension");
    if (affine_dimension(points) != dim) return std::nullopt;

    if (dim == 1) {
        std::int64_t lo = points[0][0], hi = points[0][0];
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return Rat(Int(hi) - Int(lo));
    }
    if (dim == 2) {
        auto hull = hull_2d(column_filter_2d(points));
        Int twice = shoelace_twice(hull);
        if (twice < 0) twice = -twice;
        return Rat(twice, 2);
    }
    return hull_volume_3d(column_filter_3d(points));
}

} // namespace gls
