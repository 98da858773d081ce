#include "vk/invariants.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vk {

int WritheTable::J_at(int n) const {
    auto it = J.find(n);
    return it == J.end() ? 0 : it->second;
}

int WritheTable::dwrithe_at(int n) const { return J_at(n) - J_at(-n); }

ArcLabeling cheng_labeling(const GaussCode& code) {
    const int n = code.size();
    ArcLabeling out;
    if (n == 0) {
        out.labels = {0};
        return out;
    }
    out.labels.assign(n, 0);
    for (int arc = 0; arc < n; ++arc) {
        int sum = 0;
        std::set<int> met;
        for (int k = 1; k <= n; ++k) {
            const Pass& p = code.passes[(arc + k) % n];
            if (met.insert(p.label).second && p.over) sum += p.sign;
        }
        out.labels[arc] = sum;
    }
    // mandatory self-check: the local rule must hold at every pass
    for (int pos = 0; pos < n; ++pos) {
        const Pass& p = code.passes[pos];
        int before = out.before_pass(pos);
        int after = out.labels[pos];
        int expected = p.over ? before - p.sign : before + p.sign;
        if (after != expected)
            throw std::logic_error("arc labeling violates the local crossing rule at pass " +
                                   std::to_string(pos));
    }
    return out;
}

std::vector<IndexedCrossing> index_crossings(const GaussCode& code) {
    ArcLabeling lambda = cheng_labeling(code);
    std::vector<IndexedCrossing> out;
    for (const CrossingRef& ref : crossings(code)) {
        int over_in = lambda.before_pass(ref.over_pos);
        int under_in = lambda.before_pass(ref.under_pos);
        IndexedCrossing c;
        c.label = ref.label;
        c.sign = ref.sign;
        c.index = over_in - under_in - ref.sign;
        c.a = ref.sign > 0 ? over_in : under_in;
        c.b = ref.sign > 0 ? under_in : over_in;
        out.push_back(c);
    }
    return out;
}

WritheTable writhe_table(const GaussCode& code) {
    WritheTable table;
    for (const IndexedCrossing& c : index_crossings(code)) {
        table.writhe += c.sign;
        if (c.index != 0) {
            table.J[c.index] += c.sign;
            table.support.insert(std::abs(c.index));
        }
    }
    for (int n : table.support) table.dwrithe[n] = table.J_at(n) - table.J_at(-n);
    return table;
}

LaurentPoly2 affine_index_poly(const GaussCode& code) {
    LaurentPoly2 p;
    for (const IndexedCrossing& c : index_crossings(code)) {
        add_term(p, c.index, 0, c.sign);
        add_term(p, 0, 0, -c.sign);
    }
    return p;
}

LaurentPoly2 writhe_poly(const GaussCode& code) {
    LaurentPoly2 p;
    int w = 0;
    for (const IndexedCrossing& c : index_crossings(code)) {
        add_term(p, c.index, 0, c.sign);
        w += c.sign;
    }
    add_term(p, 0, 0, -w);
    return p;
}

}  // namespace vk
