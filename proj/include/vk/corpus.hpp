#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vk/codec.hpp"

namespace vk {

struct unknown_fixture : std::runtime_error {
    explicit unknown_fixture(const std::string& name);
};

// One bundled example diagram plus the invariant values recorded for it.
// The expected block is partial JSON in the report schema: only
// independently recorded values appear, and map-valued entries (dwrithe,
// L, F, T) list only the n they vouch for.
struct Fixture {
    std::string name;
    GaussCode code;
    std::string expected_json;
};

// All bundled fixtures, in file order.
const std::vector<Fixture>& fixtures();

// Look one up by name; throws unknown_fixture.
const Fixture& fixture(const std::string& name);

// Parametric mutant pair: (n+3)-crossing diagrams built from three fixed
// crossings and an alternating twist region of n negative crossings,
// where the mutant differs by a positive reflection mutation (the twist
// tangle is reflected, preserving arc orientations). family_kn(1, false)
// is the "fig17-K" fixture and family_kn(1, true) is "fig17-MK". The two
// diagrams of a pair share crossing count, writhe and sign multiset, and
// their affine index polynomials coincide for every n.
GaussCode family_kn(int n, bool mutant);

}  // namespace vk
