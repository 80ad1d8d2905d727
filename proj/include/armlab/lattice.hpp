#pragma once

#include <cstdint>
#include <stdexcept>

namespace armlab::lattice {

struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(Coord a, Coord b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Coord a, Coord b) { return !(a == b); }
    // row-major order: y first, then x
    friend bool operator<(Coord a, Coord b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }
};

inline double dist2(Coord a, Coord b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

enum class BoxRole { FullPlaneBox, HalfPlaneBox };

// Finite window of the square lattice. Vertices are (x,y) with 0 <= x < width,
// 0 <= y < height. In half-plane role the bottom row y=0 plays the boundary
// line; the other three sides are a far-field cutoff.
struct LatticeDomain {
    int width = 0;
    int height = 0;
    BoxRole role = BoxRole::FullPlaneBox;
    Coord origin;  // annulus anchor: center (full plane) or a bottom-edge vertex (half plane)

    LatticeDomain(int w, int h, BoxRole rl, Coord org) : width(w), height(h), role(rl), origin(org) {
        if (w < 8 || h < 8) throw std::domain_error("lattice domain must be at least 8x8");
        if (org.x < 0 || org.x >= w || org.y < 0 || org.y >= h)
            throw std::domain_error("origin must lie inside the box");
        if (rl == BoxRole::HalfPlaneBox && org.y != 0)
            throw std::domain_error("half-plane origin must sit on the bottom edge");
    }

    bool contains(Coord c) const { return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height; }
    std::size_t index(Coord c) const {
        return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(c.x);
    }
    std::size_t cell_count() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

    friend bool operator==(const LatticeDomain& a, const LatticeDomain& b) {
        return a.width == b.width && a.height == b.height && a.role == b.role && a.origin == b.origin;
    }
};

}  // namespace armlab::lattice
