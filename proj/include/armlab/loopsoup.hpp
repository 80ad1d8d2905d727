#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "armlab/lattice.hpp"
#include "armlab/params.hpp"
#include "armlab/rng.hpp"

namespace armlab::soup {

using lattice::Coord;
using lattice::LatticeDomain;

// Closed nearest-neighbour path, rooted. Steps are a string over NESW; the
// path starts and ends at root and has even length >= 2.
struct RootedLoop {
    int id = -1;
    Coord root;
    std::string steps;

    int length() const { return static_cast<int>(steps.size()); }
    // Vertices in path order, root first, final return to root omitted.
    std::vector<Coord> visited() const;
    // Closed-path check plus containment in the given domain.
    bool valid_in(const LatticeDomain& d) const;
};

struct LoopSoup {
    LatticeDomain domain;
    double alpha = 0.0;
    long n_max = 0;  // step-count truncation (even)
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::vector<RootedLoop> loops;  // canonical order: root row-major, then length, then draw ordinal
};

// Per-vertex mass of rooted loops with 2n steps: alpha/(2n) * (C(2n,n)/4^n)^2.
double loop_mass(long n, params::Intensity a);

// Masses for n = 1..n_max/2 plus the dyadic block partition used by the
// sampler. Building this once and reusing it across trials is the intended
// pattern for experiment loops.
struct LoopMassTable {
    double alpha = 0.0;
    long n_half = 0;
    std::vector<double> mass;         // mass[n-1] = m_n
    std::vector<long> block_lo;       // block k covers half-lengths [block_lo[k], block_hi[k]]
    std::vector<long> block_hi;
    std::vector<double> block_mass;   // total mass per block
    std::vector<double> block_p0;     // exp(-block_mass)
    std::vector<std::vector<double>> block_cum;  // per-block cumulative masses for inverse draws

    static LoopMassTable build(params::Intensity a, long n_max);
    double total_mass() const;
};

// Uniform closed 2n-step path at the origin via two independent +-1 bridges
// in the diagonal coordinates u = x+y, v = x-y.
std::string sample_bridge(long n, rng::Stream& rng);

// Truncation cap used when none is given: 4 * max(width,height)^2.
long default_n_max(const LatticeDomain& d);

// Poissonized rooted-loop soup restricted to the domain. Deterministic given
// (domain, alpha, n_max, seed, stream) regardless of scheduling.
LoopSoup sample_soup(const LatticeDomain& d, params::Intensity a, long n_max, std::uint64_t seed,
                     std::uint64_t stream = 0);
LoopSoup sample_soup(const LatticeDomain& d, const LoopMassTable& table, long n_max, std::uint64_t seed,
                     std::uint64_t stream = 0);

// Upper bound on the expected number of loops lost to the n_max cutoff:
// vertex count times the discarded per-vertex mass, with an analytic tail
// bound m_n <= alpha/(2 pi n^2) (1 + 1/(4n)) past the table.
double truncation_report(const LatticeDomain& d, long n_max, params::Intensity a);

// Line-oriented serialization; bit-exact round trip.
void write_soup(std::ostream& os, const LoopSoup& s);
LoopSoup read_soup(std::istream& is);

struct ResourceError : std::runtime_error {
    std::size_t loops_sampled;
    ResourceError(const std::string& what, std::size_t n) : std::runtime_error(what), loops_sampled(n) {}
};

}  // namespace armlab::soup
