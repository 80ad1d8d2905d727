#include "armlab/loopsoup.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace armlab::soup {

namespace {

constexpr std::uint64_t kTagSoup = 0x534F5550ull;  // stream purpose tag

inline int step_dx(char c) {
    switch (c) {
        case 'E': return 1;
        case 'W': return -1;
        default: return 0;
    }
}
inline int step_dy(char c) {
    switch (c) {
        case 'N': return 1;
        case 'S': return -1;
        default: return 0;
    }
}

inline std::uint64_t key_of(int v) { return static_cast<std::uint64_t>(static_cast<std::int64_t>(v)); }

// First dyadic blocks are kept separate (they carry nearly all the mass);
// everything past half-length 64 goes into one aggregate tail block.
constexpr long kTailLo = 64;

}  // namespace

std::vector<Coord> RootedLoop::visited() const {
    std::vector<Coord> out;
    out.reserve(steps.size());
    Coord p = root;
    out.push_back(p);
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        p.x += step_dx(steps[i]);
        p.y += step_dy(steps[i]);
        out.push_back(p);
    }
    return out;
}

bool RootedLoop::valid_in(const LatticeDomain& d) const {
    if (steps.size() < 2 || steps.size() % 2 != 0) return false;
    Coord p = root;
    if (!d.contains(p)) return false;
    for (char c : steps) {
        const int dx = step_dx(c), dy = step_dy(c);
        if (dx == 0 && dy == 0) return false;
        p.x += dx;
        p.y += dy;
        if (!d.contains(p)) return false;
    }
    return p == root;
}

double loop_mass(long n, params::Intensity a) {
    if (n < 1) throw std::domain_error("loop_mass: half-length must be >= 1");
    // q_n = C(2n,n)/4^n via q_n = q_{n-1} (2n-1)/(2n)
    double q = 1.0;
    for (long i = 1; i <= n; ++i) q = q * (2.0 * i - 1.0) / (2.0 * i);
    return a.value * q * q / (2.0 * static_cast<double>(n));
}

LoopMassTable LoopMassTable::build(params::Intensity a, long n_max) {
    if (n_max < 2 || n_max % 2 != 0) throw std::domain_error("n_max must be even and >= 2");
    LoopMassTable t;
    t.alpha = a.value;
    t.n_half = n_max / 2;
    t.mass.resize(static_cast<std::size_t>(t.n_half));
    double q = 1.0;
    for (long n = 1; n <= t.n_half; ++n) {
        q = q * (2.0 * n - 1.0) / (2.0 * n);
        t.mass[static_cast<std::size_t>(n - 1)] = a.value * q * q / (2.0 * static_cast<double>(n));
    }
    long lo = 1;
    while (lo <= t.n_half) {
        const long hi = (lo >= kTailLo) ? t.n_half : std::min(2 * lo - 1, t.n_half);
        t.block_lo.push_back(lo);
        t.block_hi.push_back(hi);
        std::vector<double> cum(static_cast<std::size_t>(hi - lo + 1));
        double s = 0.0;
        for (long n = lo; n <= hi; ++n) {
            s += t.mass[static_cast<std::size_t>(n - 1)];
            cum[static_cast<std::size_t>(n - lo)] = s;
        }
        t.block_mass.push_back(s);
        t.block_p0.push_back(rng::exp_negative(s));
        t.block_cum.push_back(std::move(cum));
        lo = hi + 1;
    }
    return t;
}

double LoopMassTable::total_mass() const {
    double s = 0.0;
    for (double b : block_mass) s += b;
    return s;
}

std::string sample_bridge(long n, rng::Stream& rng) {
    if (n < 1) throw std::domain_error("sample_bridge: half-length must be >= 1");
    const long len = 2 * n;
    std::vector<signed char> u(static_cast<std::size_t>(len)), v(static_cast<std::size_t>(len));
    for (long i = 0; i < len; ++i) {
        u[static_cast<std::size_t>(i)] = i < n ? 1 : -1;
        v[static_cast<std::size_t>(i)] = i < n ? 1 : -1;
    }
    for (long i = len - 1; i > 0; --i) {
        std::swap(u[static_cast<std::size_t>(i)], u[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
    }
    for (long i = len - 1; i > 0; --i) {
        std::swap(v[static_cast<std::size_t>(i)], v[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
    }
    std::string steps(static_cast<std::size_t>(len), '?');
    for (long i = 0; i < len; ++i) {
        const int du = u[static_cast<std::size_t>(i)], dv = v[static_cast<std::size_t>(i)];
        // x = (u+v)/2, y = (u-v)/2
        steps[static_cast<std::size_t>(i)] = du > 0 ? (dv > 0 ? 'E' : 'N') : (dv > 0 ? 'S' : 'W');
    }
    return steps;
}

long default_n_max(const LatticeDomain& d) {
    const long m = std::max(d.width, d.height);
    return 4 * m * m;
}

LoopSoup sample_soup(const LatticeDomain& d, params::Intensity a, long n_max, std::uint64_t seed,
                     std::uint64_t stream) {
    const LoopMassTable table = LoopMassTable::build(a, n_max);
    return sample_soup(d, table, n_max, seed, stream);
}

LoopSoup sample_soup(const LatticeDomain& d, const LoopMassTable& table, long n_max, std::uint64_t seed,
                     std::uint64_t stream) {
    if (n_max < 2 || n_max % 2 != 0) throw std::domain_error("n_max must be even and >= 2");
    if (table.n_half != n_max / 2) throw std::invalid_argument("mass table does not match n_max");

    LoopSoup out{d, table.alpha, n_max, seed, stream, {}};
    if (table.alpha == 0.0) return out;

    constexpr std::size_t kMaxTotalSteps = 400'000'000;
    std::size_t total_steps = 0;

    const std::size_t n_blocks = table.block_lo.size();
    for (int y = 0; y < d.height; ++y) {
        for (int x = 0; x < d.width; ++x) {
            const Coord root{x, y};
            // substream keyed by root relative to the origin, so translating
            // the domain translates the output
            rng::Stream vstream = rng::Stream::derive(
                seed, {kTagSoup, stream, key_of(x - d.origin.x), key_of(y - d.origin.y)});
            const int border = std::min(std::min(x, d.width - 1 - x), std::min(y, d.height - 1 - y));
            for (std::size_t k = 0; k < n_blocks; ++k) {
                const int count = rng::poisson_with_p0(vstream, table.block_mass[k], table.block_p0[k]);
                for (int c = 0; c < count; ++c) {
                    // half-length within the block, proportional to mass
                    const auto& cum = table.block_cum[k];
                    long n;
                    if (cum.size() == 1) {
                        n = table.block_lo[k];
                    } else {
                        const double target = vstream.next_unit() * table.block_mass[k];
                        const auto it = std::upper_bound(cum.begin(), cum.end(), target);
                        n = table.block_lo[k] + static_cast<long>(it - cum.begin());
                        if (n > table.block_hi[k]) n = table.block_hi[k];
                    }
                    std::string steps = sample_bridge(n, vstream);
                    bool keep = true;
                    if (border < n) {  // may leave the box; walk and check
                        Coord p = root;
                        for (char ch : steps) {
                            p.x += step_dx(ch);
                            p.y += step_dy(ch);
                            if (!d.contains(p)) {
                                keep = false;
                                break;
                            }
                        }
                    }
                    if (keep) {
                        total_steps += steps.size();
                        if (total_steps > kMaxTotalSteps)
                            throw ResourceError("soup memory budget exceeded", out.loops.size());
                        out.loops.push_back(RootedLoop{-1, root, std::move(steps)});
                    }
                }
            }
        }
    }
    // canonical order: root row-major, then length; stable keeps draw order
    std::stable_sort(out.loops.begin(), out.loops.end(), [](const RootedLoop& a, const RootedLoop& b) {
        if (a.root.y != b.root.y) return a.root.y < b.root.y;
        if (a.root.x != b.root.x) return a.root.x < b.root.x;
        return a.steps.size() < b.steps.size();
    });
    for (std::size_t i = 0; i < out.loops.size(); ++i) out.loops[i].id = static_cast<int>(i);
    return out;
}

double truncation_report(const LatticeDomain& d, long n_max, params::Intensity a) {
    if (n_max < 2 || n_max % 2 != 0) throw std::domain_error("n_max must be even and >= 2");
    if (a.value == 0.0) return 0.0;
    const long n_half = n_max / 2;
    const long n_exact = n_half + 1'000'000;  // exact recurrence this far, analytic bound beyond
    double q = 1.0, discarded = 0.0;
    for (long n = 1; n <= n_exact; ++n) {
        q = q * (2.0 * n - 1.0) / (2.0 * n);
        if (n > n_half) discarded += a.value * q * q / (2.0 * static_cast<double>(n));
    }
    const double N = static_cast<double>(n_exact);
    const double pi = 3.14159265358979323846;
    discarded += a.value / (2.0 * pi) * (1.0 / N + 1.0 / (8.0 * N * N));
    return discarded * static_cast<double>(d.cell_count());
}

void write_soup(std::ostream& os, const LoopSoup& s) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "armlab-soup 1 %s %d %d %d %d %.17g %ld %llu %llu %zu\n",
                  s.domain.role == lattice::BoxRole::FullPlaneBox ? "full" : "half", s.domain.width,
                  s.domain.height, s.domain.origin.x, s.domain.origin.y, s.alpha, s.n_max,
                  static_cast<unsigned long long>(s.seed), static_cast<unsigned long long>(s.stream),
                  s.loops.size());
    os << buf;
    for (const RootedLoop& l : s.loops) os << l.id << ' ' << l.root.x << ' ' << l.root.y << ' ' << l.steps << '\n';
}

LoopSoup read_soup(std::istream& is) {
    std::string magic, role_s;
    int version = 0, w = 0, h = 0, ox = 0, oy = 0;
    double alpha = 0.0;
    long n_max = 0;
    unsigned long long seed = 0, stream = 0;
    std::size_t count = 0;
    is >> magic >> version >> role_s >> w >> h >> ox >> oy >> alpha >> n_max >> seed >> stream >> count;
    if (!is || magic != "armlab-soup" || version != 1)
        throw std::runtime_error("bad soup header");
    const auto role = role_s == "full" ? lattice::BoxRole::FullPlaneBox : lattice::BoxRole::HalfPlaneBox;
    LoopSoup s{LatticeDomain(w, h, role, Coord{ox, oy}), alpha, n_max, seed, stream, {}};
    s.loops.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RootedLoop l;
        is >> l.id >> l.root.x >> l.root.y >> l.steps;
        if (!is) throw std::runtime_error("truncated soup file");
        if (!l.valid_in(s.domain)) throw std::runtime_error("soup file contains an invalid loop");
        s.loops.push_back(std::move(l));
    }
    return s;
}

}  // namespace armlab::soup
