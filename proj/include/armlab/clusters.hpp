#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "armlab/lattice.hpp"
#include "armlab/loopsoup.hpp"

namespace armlab::clusters {

using lattice::BoxRole;
using lattice::Coord;
using lattice::LatticeDomain;
using soup::LoopSoup;
using soup::RootedLoop;

struct PointD {
    double x = 0.0;
    double y = 0.0;
};

struct BBox {
    int min_x = 0, min_y = 0, max_x = -1, max_y = -1;
    bool contains(const BBox& o) const {
        return min_x <= o.min_x && min_y <= o.min_y && max_x >= o.max_x && max_y >= o.max_y;
    }
};

// Group of loops chained by shared vertices.
struct Cluster {
    std::vector<int> loop_ids;       // ascending
    std::vector<Coord> vertex_set;   // sorted row-major, deduplicated
    BBox bbox;
};

// Annulus between radii eps and r around a lattice center. Interior mode sees
// full circles; Boundary mode centers on the half-plane edge.
struct AnnulusSpec {
    Coord center;
    double inner_radius = 0.0;   // eps
    double outer_radius = 0.0;   // r
    enum class Mode { Interior, Boundary } mode = Mode::Interior;

    AnnulusSpec(Coord c, double eps, double r, Mode m = Mode::Interior)
        : center(c), inner_radius(eps), outer_radius(r), mode(m) {
        if (!(eps > 0.0) || !(eps < r)) throw std::domain_error("annulus requires 0 < eps < r");
    }
};

// Closed edge cycle around a cluster's filling, counterclockwise. Corner
// (i,j) stands for the dual-grid point (i-1/2, j-1/2).
struct Contour {
    std::vector<Coord> corners;
    bool margin_censored = false;

    std::vector<PointD> points() const;
};

// Partition of a soup's loops under the shared-vertex relation, ordered by
// smallest member loop id.
std::vector<Cluster> build_clusters(const LoopSoup& s);

// Vertices not reachable from the box margin without stepping on the cluster,
// united with the cluster itself.
std::vector<std::uint8_t> filling_mask(const Cluster& c, const LatticeDomain& d);
std::vector<Coord> filling(const Cluster& c, const LatticeDomain& d);

// Indices of clusters not contained in the filling of any other cluster.
std::vector<int> outermost_clusters(const std::vector<Cluster>& cs, const LatticeDomain& d);

Contour outer_boundary(const Cluster& c, const LatticeDomain& d);

// Number of maximal subarcs of the closed point cycle that run across the
// closed annulus, one endpoint at each circle. Vertices classify as inner
// (d <= eps), middle, outer (d >= r); ties belong to the circle.
int crossing_count(std::span<const PointD> closed_cycle, const AnnulusSpec& a);
int crossing_count(const RootedLoop& l, const AnnulusSpec& a);
int crossing_count(const Contour& c, const AnnulusSpec& a);

// Vertex set reaches both the closed inner disk and the complement of the
// open outer disk.
bool cluster_crosses(const Cluster& c, const AnnulusSpec& a);

// Margin rule detectors use to decide censoring: interior annuli stay >= r
// from every side; boundary annuli sit on the bottom edge and stay
// >= width/4 from the other three sides.
bool annulus_safe(const LatticeDomain& d, const AnnulusSpec& a);

bool touches_margin(const Cluster& c, const LatticeDomain& d);

// Max pairwise Euclidean distance of the loop's visited vertices.
double loop_diameter(const RootedLoop& l);

std::vector<PointD> loop_points(const RootedLoop& l);

}  // namespace armlab::clusters
