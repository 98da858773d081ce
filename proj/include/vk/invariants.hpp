#pragma once

#include <map>
#include <set>
#include <vector>

#include "vk/codec.hpp"
#include "vk/laurent.hpp"

namespace vk {

// Integer label per arc. Arc i is the gap after pass i (cyclically);
// the empty code has the single arc 0.
struct ArcLabeling {
    std::vector<int> labels;

    int at(int arc) const { return labels[arc]; }
    int before_pass(int pos) const {
        int n = static_cast<int>(labels.size());
        return labels[(pos - 1 + n) % n];
    }
};

// A crossing with its index value. a and b are the incoming strand labels
// in the role order that makes index == sign * (a - b - 1) hold for both
// signs (at positive crossings a is the incoming over-strand label, at
// negative crossings the roles swap).
struct IndexedCrossing {
    int label = 0;
    int sign = 1;
    int index = 0;
    int a = 0;
    int b = 0;
};

// n-writhes, dwrithes and the index support of one diagram.
struct WritheTable {
    std::map<int, int> J;        // signed crossing count per nonzero occurring index
    std::map<int, int> dwrithe;  // nabla J_n for n in support (0 elsewhere)
    std::set<int> support;       // S(D): nonzero |index| values
    int writhe = 0;

    int J_at(int n) const;
    int dwrithe_at(int n) const;  // J_n - J_{-n}; 0 outside the support
};

// Arc labels: lambda(arc) = sum of sgn(c) over crossings first met as an
// over-pass when traveling from that arc. The local rule (over-pass drops
// the label by sgn, under-pass raises it by sgn) is asserted on every
// result as a self-check; violations throw std::logic_error.
ArcLabeling cheng_labeling(const GaussCode& code);

// One record per crossing, sorted by label.
std::vector<IndexedCrossing> index_crossings(const GaussCode& code);

WritheTable writhe_table(const GaussCode& code);

// P_D(t) = sum of sgn(c) * (t^index(c) - 1); always l-degree 0.
LaurentPoly2 affine_index_poly(const GaussCode& code);

// W_D(t) = sum of sgn(c) * t^index(c) - writhe(D).
LaurentPoly2 writhe_poly(const GaussCode& code);

}  // namespace vk
