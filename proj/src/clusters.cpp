#include "armlab/clusters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace armlab::clusters {

namespace {

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

std::vector<std::uint8_t> reach_from_margin(const LatticeDomain& d, const std::vector<std::uint8_t>& blocked) {
    std::vector<std::uint8_t> reached(d.cell_count(), 0);
    std::vector<std::size_t> stack;
    auto push = [&](int x, int y) {
        const std::size_t i = d.index(Coord{x, y});
        if (!blocked[i] && !reached[i]) {
            reached[i] = 1;
            stack.push_back(i);
        }
    };
    for (int x = 0; x < d.width; ++x) {
        push(x, 0);
        push(x, d.height - 1);
    }
    for (int y = 0; y < d.height; ++y) {
        push(0, y);
        push(d.width - 1, y);
    }
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        const int x = static_cast<int>(i % static_cast<std::size_t>(d.width));
        const int y = static_cast<int>(i / static_cast<std::size_t>(d.width));
        if (x > 0) push(x - 1, y);
        if (x + 1 < d.width) push(x + 1, y);
        if (y > 0) push(x, y - 1);
        if (y + 1 < d.height) push(x, y + 1);
    }
    return reached;
}

}  // namespace

std::vector<PointD> Contour::points() const {
    std::vector<PointD> out;
    out.reserve(corners.size());
    for (Coord c : corners) out.push_back(PointD{c.x - 0.5, c.y - 0.5});
    return out;
}

std::vector<Cluster> build_clusters(const LoopSoup& s) {
    const LatticeDomain& d = s.domain;
    const int n = static_cast<int>(s.loops.size());
    Dsu dsu(n);
    std::vector<int> owner(d.cell_count(), -1);
    std::vector<std::vector<Coord>> visits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        visits[static_cast<std::size_t>(i)] = s.loops[static_cast<std::size_t>(i)].visited();
        for (Coord v : visits[static_cast<std::size_t>(i)]) {
            int& o = owner[d.index(v)];
            if (o < 0)
                o = i;
            else
                dsu.unite(i, o);
        }
    }
    std::vector<int> root_to_slot(static_cast<std::size_t>(n), -1);
    std::vector<Cluster> out;
    for (int i = 0; i < n; ++i) {
        const int r = dsu.find(i);
        int slot = root_to_slot[static_cast<std::size_t>(r)];
        if (slot < 0) {
            slot = static_cast<int>(out.size());
            root_to_slot[static_cast<std::size_t>(r)] = slot;
            out.emplace_back();
        }
        Cluster& c = out[static_cast<std::size_t>(slot)];
        c.loop_ids.push_back(s.loops[static_cast<std::size_t>(i)].id);
        for (Coord v : visits[static_cast<std::size_t>(i)]) c.vertex_set.push_back(v);
    }
    for (Cluster& c : out) {
        std::sort(c.loop_ids.begin(), c.loop_ids.end());
        std::sort(c.vertex_set.begin(), c.vertex_set.end());
        c.vertex_set.erase(std::unique(c.vertex_set.begin(), c.vertex_set.end()), c.vertex_set.end());
        c.bbox = BBox{c.vertex_set.front().x, c.vertex_set.front().y, c.vertex_set.front().x,
                      c.vertex_set.front().y};
        for (Coord v : c.vertex_set) {
            c.bbox.min_x = std::min(c.bbox.min_x, v.x);
            c.bbox.max_x = std::max(c.bbox.max_x, v.x);
            c.bbox.min_y = std::min(c.bbox.min_y, v.y);
            c.bbox.max_y = std::max(c.bbox.max_y, v.y);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Cluster& a, const Cluster& b) { return a.loop_ids.front() < b.loop_ids.front(); });
    return out;
}

std::vector<std::uint8_t> filling_mask(const Cluster& c, const LatticeDomain& d) {
    std::vector<std::uint8_t> blocked(d.cell_count(), 0);
    for (Coord v : c.vertex_set) blocked[d.index(v)] = 1;
    const std::vector<std::uint8_t> reached = reach_from_margin(d, blocked);
    std::vector<std::uint8_t> fill(d.cell_count(), 0);
    for (std::size_t i = 0; i < fill.size(); ++i) fill[i] = reached[i] ? 0 : 1;
    return fill;
}

std::vector<Coord> filling(const Cluster& c, const LatticeDomain& d) {
    const auto mask = filling_mask(c, d);
    std::vector<Coord> out;
    for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x)
            if (mask[d.index(Coord{x, y})]) out.push_back(Coord{x, y});
    return out;
}

std::vector<int> outermost_clusters(const std::vector<Cluster>& cs, const LatticeDomain& d) {
    const int n = static_cast<int>(cs.size());
    if (n == 0) return {};
    std::vector<std::uint8_t> occupied(d.cell_count(), 0);
    for (const Cluster& c : cs)
        for (Coord v : c.vertex_set) occupied[d.index(v)] = 1;
    const std::vector<std::uint8_t> exterior = reach_from_margin(d, occupied);

    auto touches_exterior = [&](const Cluster& c) {
        for (Coord v : c.vertex_set) {
            if (v.x == 0 || v.x == d.width - 1 || v.y == 0 || v.y == d.height - 1) return true;
            if (exterior[d.index(Coord{v.x - 1, v.y})] || exterior[d.index(Coord{v.x + 1, v.y})] ||
                exterior[d.index(Coord{v.x, v.y - 1})] || exterior[d.index(Coord{v.x, v.y + 1})])
                return true;
        }
        return false;
    };

    std::vector<int> out;
    std::vector<int> candidates;
    for (int i = 0; i < n; ++i) {
        if (touches_exterior(cs[static_cast<std::size_t>(i)]))
            out.push_back(i);
        else
            candidates.push_back(i);
    }
    // A cluster cut off from the exterior may still be outermost when only a
    // union of others surrounds it; fall back to the per-cluster definition.
    std::vector<std::vector<std::uint8_t>> fill_cache(static_cast<std::size_t>(n));
    for (int ci : candidates) {
        const Cluster& c = cs[static_cast<std::size_t>(ci)];
        bool enclosed = false;
        for (int yi = 0; yi < n && !enclosed; ++yi) {
            if (yi == ci) continue;
            const Cluster& ycl = cs[static_cast<std::size_t>(yi)];
            if (!ycl.bbox.contains(c.bbox)) continue;
            auto& mask = fill_cache[static_cast<std::size_t>(yi)];
            if (mask.empty()) mask = filling_mask(ycl, d);
            if (mask[d.index(c.vertex_set.front())]) enclosed = true;
        }
        if (!enclosed) out.push_back(ci);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Contour outer_boundary(const Cluster& c, const LatticeDomain& d) {
    const auto fill = filling_mask(c, d);
    auto filled = [&](int x, int y) {
        if (x < 0 || x >= d.width || y < 0 || y >= d.height) return false;
        return fill[d.index(Coord{x, y})] != 0;
    };
    // start cell: lowest row, then lowest column
    int sx = -1, sy = -1;
    for (int y = 0; y < d.height && sy < 0; ++y)
        for (int x = 0; x < d.width; ++x)
            if (filled(x, y)) {
                sx = x;
                sy = y;
                break;
            }
    if (sy < 0) throw std::invalid_argument("outer_boundary: empty cluster");

    // Edge walk, counterclockwise, filled cells on the left. Directions:
    // 0=E 1=N 2=W 3=S in corner coordinates.
    static const int DX[4] = {1, 0, -1, 0};
    static const int DY[4] = {0, 1, 0, -1};
    Contour out;
    int cx = sx, cy = sy, dir = 0;
    const int start_x = cx, start_y = cy, start_dir = dir;
    do {
        out.corners.push_back(Coord{cx, cy});
        // front-left / front-right cells relative to the incoming direction
        bool fl = false, fr = false;
        switch (dir) {
            case 0: fl = filled(cx, cy); fr = filled(cx, cy - 1); break;
            case 1: fl = filled(cx - 1, cy); fr = filled(cx, cy); break;
            case 2: fl = filled(cx - 1, cy - 1); fr = filled(cx - 1, cy); break;
            case 3: fl = filled(cx, cy - 1); fr = filled(cx - 1, cy - 1); break;
        }
        if (!fl)
            dir = (dir + 1) % 4;  // left turn
        else if (fr)
            dir = (dir + 3) % 4;  // right turn
        cx += DX[dir];
        cy += DY[dir];
        if (out.corners.size() > 8 * d.cell_count() + 16)
            throw std::runtime_error("outer_boundary: tracing failed to close");
    } while (!(cx == start_x && cy == start_y && dir == start_dir));

    const bool touches = touches_margin(c, d);
    out.margin_censored =
        d.role == BoxRole::FullPlaneBox
            ? touches
            : std::any_of(c.vertex_set.begin(), c.vertex_set.end(), [&](Coord v) {
                  return v.x == 0 || v.x == d.width - 1 || v.y == d.height - 1;
              });
    return out;
}

int crossing_count(std::span<const PointD> cycle, const AnnulusSpec& a) {
    const double e2 = a.inner_radius * a.inner_radius;
    const double r2 = a.outer_radius * a.outer_radius;
    // zones: 0 inner, 1 outer; middle vertices dropped
    std::vector<int> z;
    z.reserve(cycle.size());
    for (const PointD& p : cycle) {
        const double dx = p.x - a.center.x, dy = p.y - a.center.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 <= e2)
            z.push_back(0);
        else if (d2 >= r2)
            z.push_back(1);
    }
    if (z.size() < 2) return 0;
    int crossings = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != z[(i + 1) % z.size()]) ++crossings;
    return crossings;
}

int crossing_count(const RootedLoop& l, const AnnulusSpec& a) {
    const auto pts = loop_points(l);
    return crossing_count(std::span<const PointD>(pts), a);
}

int crossing_count(const Contour& c, const AnnulusSpec& a) {
    const auto pts = c.points();
    return crossing_count(std::span<const PointD>(pts), a);
}

bool cluster_crosses(const Cluster& c, const AnnulusSpec& a) {
    const double e2 = a.inner_radius * a.inner_radius;
    const double r2 = a.outer_radius * a.outer_radius;
    bool inner = false, outer = false;
    for (Coord v : c.vertex_set) {
        const double d2 = lattice::dist2(v, a.center);
        inner = inner || d2 <= e2;
        outer = outer || d2 >= r2;
        if (inner && outer) return true;
    }
    return false;
}

bool annulus_safe(const LatticeDomain& d, const AnnulusSpec& a) {
    const double r = a.outer_radius;
    const Coord c = a.center;
    if (a.mode == AnnulusSpec::Mode::Interior) {
        return c.x - r >= r && (d.width - 1 - c.x) - r >= r && c.y - r >= r && (d.height - 1 - c.y) - r >= r;
    }
    if (c.y != 0) return false;
    const double margin = d.width / 4.0;
    return c.x - r >= margin && (d.width - 1 - c.x) - r >= margin && (d.height - 1) - r >= margin;
}

bool touches_margin(const Cluster& c, const LatticeDomain& d) {
    return c.bbox.min_x == 0 || c.bbox.min_y == 0 || c.bbox.max_x == d.width - 1 ||
           c.bbox.max_y == d.height - 1;
}

double loop_diameter(const RootedLoop& l) {
    const auto vs = l.visited();
    double best = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            best = std::max(best, lattice::dist2(vs[i], vs[j]));
    return std::sqrt(best);
}

std::vector<PointD> loop_points(const RootedLoop& l) {
    const auto vs = l.visited();
    std::vector<PointD> pts;
    pts.reserve(vs.size());
    for (Coord v : vs) pts.push_back(PointD{static_cast<double>(v.x), static_cast<double>(v.y)});
    return pts;
}

}  // namespace armlab::clusters
