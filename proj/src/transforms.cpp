#include "vk/transforms.hpp"

#include <map>

namespace vk {

SmoothedDiagram smooth_against(const GaussCode& code, int label) {
    CrossingRef c = find_crossing(code, label);
    const int n = code.size();

    // Rotate so the under-pass of c sits at position 0; y is then the
    // segment strictly between the two passes of c.
    std::vector<Pass> y, z;
    bool in_y = true;
    for (int k = 1; k < n; ++k) {
        const Pass& p = code.passes[(c.under_pos + k) % n];
        if (p.label == label) {
            in_y = false;
            continue;
        }
        (in_y ? y : z).push_back(p);
    }

    std::map<int, int> passes_in_y;
    for (const Pass& p : y) ++passes_in_y[p.label];

    SmoothedDiagram out;
    out.removed_label = label;
    for (const auto& [lab, count] : passes_in_y)
        if (count == 1) out.flipped_labels.insert(lab);

    auto emit = [&](const Pass& p) {
        Pass q = p;
        if (out.flipped_labels.count(q.label)) q.sign = -q.sign;
        out.result.passes.push_back(q);
    };
    for (auto it = y.rbegin(); it != y.rend(); ++it) emit(*it);
    for (const Pass& p : z) emit(p);
    return out;
}

GaussCode mirror(const GaussCode& code) {
    GaussCode out;
    out.passes.reserve(code.passes.size());
    for (const Pass& p : code.passes) out.passes.push_back({p.label, !p.over, -p.sign});
    return out;
}

GaussCode reverse(const GaussCode& code) {
    GaussCode out;
    out.passes.assign(code.passes.rbegin(), code.passes.rend());
    return out;
}

GaussCode crossing_change(const GaussCode& code, int label) {
    find_crossing(code, label);  // throws if absent
    GaussCode out;
    out.passes.reserve(code.passes.size());
    for (const Pass& p : code.passes) {
        if (p.label == label)
            out.passes.push_back({p.label, !p.over, -p.sign});
        else
            out.passes.push_back(p);
    }
    return out;
}

}  // namespace vk
