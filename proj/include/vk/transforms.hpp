#pragma once

#include <set>

#include "vk/codec.hpp"

namespace vk {

// Result of smoothing a diagram at one crossing against the arc
// orientations: one crossing disappears and one strand segment is
// traversed backwards, negating the sign of every crossing it meets
// exactly once.
struct SmoothedDiagram {
    GaussCode result;
    int removed_label = 0;
    std::set<int> flipped_labels;
};

// Smooth at crossing `label`. Writing the cyclic word as x·c·y·c·z with
// the under-pass of c first, the result is x·reverse(y)·z: both passes of
// c are deleted, the enclosed segment y is reversed, crossings with
// exactly one pass inside y change sign, and over/under markers are kept
// (over/under status does not depend on orientation). The result always
// has one crossing fewer and remains a valid single-component code.
// Throws unknown_crossing.
SmoothedDiagram smooth_against(const GaussCode& code, int label);

// Switch every classical crossing: over <-> under, all signs negated.
GaussCode mirror(const GaussCode& code);

// Reverse the orientation: the pass sequence is reversed, signs and
// over/under markers stay.
GaussCode reverse(const GaussCode& code);

// Switch one crossing: its two passes swap over <-> under and its sign
// negates. Throws unknown_crossing.
GaussCode crossing_change(const GaussCode& code, int label);

}  // namespace vk
