#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "armlab/clusters.hpp"
#include "armlab/loopsoup.hpp"

namespace armlab::events {

using clusters::AnnulusSpec;
using clusters::Cluster;
using clusters::Contour;
using lattice::Coord;
using soup::LoopSoup;

struct EventOutcome {
    std::string event_name;
    bool occurred = false;
    bool censored = false;
    std::optional<std::vector<int>> witness;
};

enum class SingleLoopProxy { RawLoop, OuterContour };
enum class PairProxy { RawLoop, OuterCluster };

// Cached geometry for one sampled soup, so a batch of detectors can share the
// cluster decomposition.
struct SoupAnalysis {
    const LoopSoup* soup = nullptr;
    std::vector<std::vector<Coord>> visits;   // per loop, path order
    std::vector<Cluster> clusters;
    std::vector<int> outermost;               // indices into clusters
    std::vector<int> cluster_of_loop;         // loop id -> cluster index

    explicit SoupAnalysis(const LoopSoup& s);

    const Contour& contour_of(int cluster_index) const;
    bool is_outermost(int cluster_index) const;
    // grid map vertex -> cluster index (-1 when free); built on first use
    const std::vector<int>& cluster_grid() const;

  private:
    mutable std::map<int, Contour> contour_cache_;
    mutable std::vector<int> cluster_grid_;
};

// One outermost-cluster boundary reaches both circles of the annulus.
EventOutcome detect_two_arm(const SoupAnalysis& a, const AnnulusSpec& an);
EventOutcome detect_two_arm(const LoopSoup& s, const AnnulusSpec& an);

// Same, with the additional locality requirement that the union of B_eps with
// every cluster meeting it stays inside B_2r.
EventOutcome detect_two_arm_truncated(const SoupAnalysis& a, const AnnulusSpec& an);

// Four crossings by a single object: a raw loop path, or the outer boundary
// of an outermost cluster.
EventOutcome detect_four_arm_single(const SoupAnalysis& a, const AnnulusSpec& an, SingleLoopProxy proxy);
EventOutcome detect_four_arm_single(const LoopSoup& s, const AnnulusSpec& an, SingleLoopProxy proxy);

// Two distinct crossing objects: raw loops, or outermost clusters.
EventOutcome detect_four_arm_pair(const SoupAnalysis& a, const AnnulusSpec& an, PairProxy proxy);
EventOutcome detect_four_arm_pair(const LoopSoup& s, const AnnulusSpec& an, PairProxy proxy);

// Well-separated refinement of the pair event: witness j confined to
// (B_r u B_{r/10}(c_j)) \ B_{r/10}(c_j') with the port balls on opposite ends
// of the horizontal axis (interior) or at angles pi/4, 3pi/4 (boundary), and
// every loop outside the two witness clusters of diameter < r/40.
EventOutcome detect_well_separated(const SoupAnalysis& a, const AnnulusSpec& an, int witness1, int witness2);

// Pair event together with some witness labelling passing the separation
// test; this is the composite the ratio experiments use.
EventOutcome detect_four_arm_pair_separated(const SoupAnalysis& a, const AnnulusSpec& an);

// --- separation machinery at a fixed scale -------------------------------

struct ExcursionPair {
    std::vector<Coord> path1, path2;  // vertex paths inside the closed disk of radius s
    Coord center;
    double scale_s = 0.0;
    double inner_eps = 0.0;  // admissibility reference scale
};

// Union of seed vertices with every cluster of the configuration they touch.
std::vector<std::uint8_t> hooked_set(const std::vector<Coord>& seed, const SoupAnalysis& config);

// The pair stays separated after fattening the first path's endpoints by
// delta*s and hooking the configuration's clusters onto it.
bool delta_separated(const ExcursionPair& p, const SoupAnalysis& config, double delta);

// Maximal subpaths of the loop inside the closed disk of radius s.
std::vector<std::vector<Coord>> excursions_in_disk(const std::vector<Coord>& path, Coord center, double s);

struct GoodPairWitness {
    int loop1 = -1, loop2 = -1;  // indices into the candidate slice
};

// Pair of next-scale loops whose excursions form a delta-separated admissible
// pair and whose hooked sets in the base configuration stay disjoint.
std::optional<GoodPairWitness> find_good_pair(const std::vector<soup::RootedLoop>& next_scale,
                                              const SoupAnalysis& base, double delta, double eps, double s);

struct ExtensionEstimate {
    double p_hat = 0.0, lo = 0.0, hi = 0.0;
    int successes = 0, trials = 0;
    bool censored = false;
    double delta_used = 0.0;
    bool clamped = false;
};

// Monte Carlo extension probability across scale s: fraction of fresh
// next-scale slices containing a delta-good pair whose clusters in the
// combined configuration are disjoint and outermost.
ExtensionEstimate estimate_extension_probability(const LoopSoup& base, double delta, double eps, double s,
                                                 int trials, std::uint64_t seed);

struct QualityEstimate {
    double quality = 0.0;
    std::vector<double> grid;
    std::vector<double> m_hat;
    bool censored = false;
};

// Largest grid delta whose estimated extension probability still dominates
// it; resample streams are shared across the grid.
QualityEstimate estimate_quality(const LoopSoup& base, double eps, double s, const std::vector<double>& grid,
                                 int trials, std::uint64_t seed);

}  // namespace armlab::events
