#include "vk/lfpoly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace vk {

namespace {

// Shared scratch data: per-crossing records plus the writhe tables of the
// diagram and of each of its smoothings (one smoothing per crossing gives
// every (c, n) dwrithe at once).
struct LfContext {
    std::vector<IndexedCrossing> crossings;
    WritheTable table;
    std::map<int, WritheTable> smoothed;  // label -> writhe table of D_c

    int smoothed_dwrithe(int label, int n) const { return smoothed.at(label).dwrithe_at(n); }
};

LfContext lf_context(const GaussCode& code) {
    LfContext ctx;
    ctx.crossings = index_crossings(code);
    ctx.table = writhe_table(code);
    for (const IndexedCrossing& c : ctx.crossings)
        ctx.smoothed.emplace(c.label, writhe_table(smooth_against(code, c.label).result));
    return ctx;
}

std::set<int> nset_of(const LfContext& ctx) {
    std::set<int> out = ctx.table.support;
    for (const auto& [label, table] : ctx.smoothed)
        out.insert(table.support.begin(), table.support.end());
    return out;
}

LaurentPoly2 l_poly_of(const LfContext& ctx, int n) {
    const int dw = ctx.table.dwrithe_at(n);
    LaurentPoly2 p;
    for (const IndexedCrossing& c : ctx.crossings) {
        add_term(p, c.index, std::abs(ctx.smoothed_dwrithe(c.label, n)), c.sign);
        add_term(p, 0, std::abs(dw), -c.sign);
    }
    return p;
}

std::set<int> t_set_of(const LfContext& ctx, int n) {
    const int dw = ctx.table.dwrithe_at(n);
    std::set<int> out;
    for (const IndexedCrossing& c : ctx.crossings) {
        int dc = ctx.smoothed_dwrithe(c.label, n);
        if (dc == dw || dc == -dw) out.insert(c.label);
    }
    return out;
}

LaurentPoly2 f_poly_of(const LfContext& ctx, int n) {
    const int dw = ctx.table.dwrithe_at(n);
    const std::set<int> t = t_set_of(ctx, n);
    LaurentPoly2 p;
    for (const IndexedCrossing& c : ctx.crossings) {
        int dc = ctx.smoothed_dwrithe(c.label, n);
        add_term(p, c.index, dc, c.sign);
        add_term(p, 0, t.count(c.label) ? dc : dw, -c.sign);
    }
    return p;
}

}  // namespace

std::set<int> nset(const GaussCode& code) { return nset_of(lf_context(code)); }

LaurentPoly2 l_poly(const GaussCode& code, int n) { return l_poly_of(lf_context(code), n); }

LaurentPoly2 f_poly(const GaussCode& code, int n) { return f_poly_of(lf_context(code), n); }

std::set<int> t_set(const GaussCode& code, int n) { return t_set_of(lf_context(code), n); }

InvariantBundle bundle(const GaussCode& code) {
    LfContext ctx = lf_context(code);
    InvariantBundle b;
    b.code = code;
    b.crossings = ctx.crossings;
    b.writhes = ctx.table;
    b.P = affine_index_poly(code);
    b.W = writhe_poly(code);
    b.nset = nset_of(ctx);
    b.stable_bound = 2 * code.crossing_count() + 1;
    for (int n : b.nset) {
        b.L.emplace(n, l_poly_of(ctx, n));
        b.F.emplace(n, f_poly_of(ctx, n));
        b.T.emplace(n, t_set_of(ctx, n));
        for (const IndexedCrossing& c : b.crossings)
            b.smoothed_dwrithes[{c.label, n}] = ctx.smoothed_dwrithe(c.label, n);
    }
    for (int n : b.nset) {
        if (set_l_to_one(b.L.at(n)) != b.P)
            throw std::logic_error("bundle: L at n=" + std::to_string(n) +
                                   " does not specialize to P");
        if (fold_abs_l(b.F.at(n)) != b.L.at(n))
            throw std::logic_error("bundle: F at n=" + std::to_string(n) + " does not fold to L");
    }
    return b;
}

namespace {

const LaurentPoly2& poly_or_default(const std::map<int, LaurentPoly2>& m, int n,
                                    const LaurentPoly2& fallback) {
    auto it = m.find(n);
    return it == m.end() ? fallback : it->second;
}

}  // namespace

DistinguishVerdict distinguish(const InvariantBundle& b1, const InvariantBundle& b2) {
    if (b1.P != b2.P) return {true, "P"};
    if (b1.W != b2.W) return {true, "W"};
    std::set<int> ns = b1.nset;
    ns.insert(b2.nset.begin(), b2.nset.end());
    for (int n : ns)
        if (poly_or_default(b1.L, n, b1.P) != poly_or_default(b2.L, n, b2.P))
            return {true, "L^" + std::to_string(n)};
    for (int n : ns)
        if (poly_or_default(b1.F, n, b1.P) != poly_or_default(b2.F, n, b2.P))
            return {true, "F^" + std::to_string(n)};
    return {false, ""};
}

const char* cosmetic_verdict_name(CosmeticVerdict v) {
    return v == CosmeticVerdict::not_cosmetic ? "not_cosmetic" : "inconclusive";
}

std::map<int, CosmeticReport> cosmetic_verdicts(const GaussCode& code) {
    LfContext ctx = lf_context(code);
    std::set<int> ns = nset_of(ctx);
    std::map<int, CosmeticReport> out;
    for (const IndexedCrossing& c : ctx.crossings) {
        CosmeticReport report;
        if (c.index != 0) {
            report.verdict = CosmeticVerdict::not_cosmetic;
            report.reason = "index " + std::to_string(c.index) + " is nonzero";
        } else {
            for (int n : ns) {
                int dc = ctx.smoothed_dwrithe(c.label, n);
                int dw = ctx.table.dwrithe_at(n);
                if (dc != dw && dc != -dw) {
                    report.verdict = CosmeticVerdict::not_cosmetic;
                    report.reason = "smoothed dwrithe at n=" + std::to_string(n) + " is " +
                                    std::to_string(dc) + ", diagram has " + std::to_string(dw);
                    break;
                }
            }
        }
        out.emplace(c.label, std::move(report));
    }
    return out;
}

MirrorReverseReport mirror_reverse_check(const GaussCode& code) {
    GaussCode m = mirror(code);
    GaussCode r = reverse(code);
    std::set<int> ns = nset(code);
    for (const GaussCode& other : {m, r}) {
        std::set<int> s = nset(other);
        ns.insert(s.begin(), s.end());
    }
    MirrorReverseReport report;
    for (int n : ns) {
        LaurentPoly2 base = l_poly(code, n);
        bool ok = l_poly(m, n) == negate(invert_t(base)) && l_poly(r, n) == invert_t(base);
        report.per_n.emplace(n, ok);
        if (!ok) report.all_pass = false;
    }
    return report;
}

InvariantFingerprint invariant_fingerprint(const GaussCode& code) {
    LfContext ctx = lf_context(code);
    InvariantFingerprint fp;
    fp.P = affine_index_poly(code);
    fp.W = writhe_poly(code);
    for (const auto& [n, j] : ctx.table.J)
        if (n != 0 && j != 0) fp.J.emplace(n, j);
    std::set<int> probe = nset_of(ctx);
    const int bound = 2 * code.crossing_count() + 1;
    probe.insert(bound + 1);
    probe.insert(bound + 4);
    for (int n : probe) {
        fp.L.emplace(n, l_poly_of(ctx, n));
        fp.F.emplace(n, f_poly_of(ctx, n));
    }
    return fp;
}

bool same_invariants(const InvariantFingerprint& a, const InvariantFingerprint& b) {
    if (a.P != b.P || a.W != b.W || a.J != b.J) return false;
    std::set<int> ns;
    for (const auto& [n, p] : a.L) ns.insert(n);
    for (const auto& [n, p] : b.L) ns.insert(n);
    for (int n : ns) {
        if (poly_or_default(a.L, n, a.P) != poly_or_default(b.L, n, b.P)) return false;
        if (poly_or_default(a.F, n, a.P) != poly_or_default(b.F, n, b.P)) return false;
    }
    return true;
}

}  // namespace vk
