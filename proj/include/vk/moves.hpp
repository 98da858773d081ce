#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vk/codec.hpp"

namespace vk {

// Reidemeister moves as cyclic-word rewrites. Virtual moves and the
// semi-virtual detour move are not represented: Gauss codes quotient them
// away exactly (two codes describe the same virtual knot iff they are
// connected by the classical moves below), which is the representation
// theorem this module leans on.

// Add a kink: a fresh label inserted twice at one gap, either strand
// order, either sign.
struct R1Insert {
    int gap = 0;  // 0..len
    bool over_first = true;
    int sign = 1;
};

// Remove a kink: passes pos and pos+1 (cyclic) share their label.
struct R1Delete {
    int pos = 0;
};

// Poke one strand under/over another: a block of two over-passes at one
// gap and the matching block of two under-passes at another, fresh labels
// a (sign sign_first) and b (sign -sign_first).
struct R2Insert {
    int gap1 = 0;  // 0..len, gap1 <= gap2, counted in the un-inserted word
    int gap2 = 0;
    bool under_parallel = true;   // U-block repeats the O-block label order
    int sign_first = 1;           // sign of label a; b gets the opposite
    bool over_block_first = true; // which block goes at gap1
};

// Remove a poke: over_pos starts an adjacent pair of over-passes,
// under_pos an adjacent pair of under-passes on the same two labels with
// opposite signs.
struct R2Delete {
    int over_pos = 0;
    int under_pos = 0;
};

// Slide a strand across a crossing: three disjoint cyclic-adjacent pass
// pairs (one over-over, one under-over, one under-under, labels knit
// pairwise) each swap their two passes.
struct R3Slide {
    std::array<std::pair<int, int>, 3> pairs;  // (pos, pos+1 cyclic) each
};

using MoveSite = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Slide>;

struct invalid_site : std::runtime_error {
    explicit invalid_site(const std::string& what) : std::runtime_error("InvalidSite: " + what) {}
};

// Human-readable one-line description (for traces and fuzz reports).
std::string describe(const MoveSite& site);

// All applicable delete/slide sites plus every insertion descriptor
// (R1: each gap x strand order x sign; R2: each ordered gap pair x the
// eight variants). Deterministic order.
std::vector<MoveSite> enumerate_sites(const GaussCode& code);

// Rewrite at one site. Throws invalid_site unless the site is applicable
// to this code. The result is always a valid code whose crossing count
// changes by +1/-1 (R1), +2/-2 (R2) or 0 (R3).
GaussCode apply(const GaussCode& code, const MoveSite& site);

// Uniform integer in [0, n), by rejection from the raw 64-bit stream, so
// walks replay identically on every platform. Requires n > 0.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

// Deterministic move sampler: picks an applicable move kind uniformly
// (inserts are withheld when they would exceed max_crossings), then picks
// the site uniformly within the kind. Returns nothing when no move
// applies (an empty code that may not grow).
class RandomWalker {
  public:
    explicit RandomWalker(std::uint64_t seed) : rng_(seed) {}

    std::optional<MoveSite> propose(const GaussCode& code, int max_crossings);
    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

// Apply `steps` random moves starting from `code`; the trajectory is a
// pure function of the seed.
GaussCode random_walk(const GaussCode& code, int steps, std::uint64_t seed, int max_crossings);

// Uniformly random valid code with the given crossing count (random
// pairing of over/under slots, random signs); used by the property and
// fuzz suites.
GaussCode random_code(std::mt19937_64& rng, int crossings);

}  // namespace vk
