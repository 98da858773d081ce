#include "vk/moves.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace vk {

namespace {

int fresh_label(const GaussCode& code) {
    int best = 0;
    for (const Pass& p : code.passes) best = std::max(best, p.label);
    return best + 1;
}

std::vector<int> r1_delete_positions(const GaussCode& code) {
    const int n = code.size();
    std::vector<int> out;
    if (n < 2) return out;
    for (int p = 0; p < n; ++p)
        if (code.passes[p].label == code.passes[(p + 1) % n].label) out.push_back(p);
    return out;
}

std::vector<R2Delete> r2_delete_sites(const GaussCode& code) {
    const int n = code.size();
    std::vector<R2Delete> out;
    for (int p = 0; p < n; ++p) {
        int p2 = (p + 1) % n;
        const Pass& a = code.passes[p];
        const Pass& b = code.passes[p2];
        if (!a.over || !b.over || a.label == b.label || a.sign != -b.sign) continue;
        for (int q = 0; q < n; ++q) {
            int q2 = (q + 1) % n;
            if (q == p || q == p2 || q2 == p || q2 == p2) continue;
            const Pass& c = code.passes[q];
            const Pass& d = code.passes[q2];
            if (c.over || d.over) continue;
            if (std::minmax(c.label, d.label) != std::minmax(a.label, b.label)) continue;
            out.push_back({p, q});
        }
    }
    return out;
}

struct PairRoles {
    std::pair<int, int> oo, mixed, uu;  // classified position pairs
    int pq = 0, qr = 0, pr = 0;         // knitting labels
};

// Classify three disjoint adjacent pairs as a slide-move candidate:
// exactly one over-over pair, one mixed pair, one under-under pair, with
// the mixed pair's under-pass label (pq) shared with the over-over pair,
// its over-pass label (qr) shared with the under-under pair, and the two
// leftover labels equal (pr).
bool classify_triple(const GaussCode& code, const std::array<std::pair<int, int>, 3>& pairs,
                     PairRoles& roles) {
    std::set<int> positions;
    for (const auto& [p, p2] : pairs) {
        positions.insert(p);
        positions.insert(p2);
    }
    if (positions.size() != 6) return false;

    const std::pair<int, int>*oo = nullptr, *uu = nullptr, *mx = nullptr;
    for (const auto& candidate : pairs) {
        bool o1 = code.passes[candidate.first].over;
        bool o2 = code.passes[candidate.second].over;
        if (o1 && o2) {
            if (oo) return false;
            oo = &candidate;
        } else if (!o1 && !o2) {
            if (uu) return false;
            uu = &candidate;
        } else {
            if (mx) return false;
            mx = &candidate;
        }
    }
    if (!oo || !uu || !mx) return false;

    int mu = code.passes[mx->first].over ? mx->second : mx->first;
    int mo = code.passes[mx->first].over ? mx->first : mx->second;
    roles.pq = code.passes[mu].label;
    roles.qr = code.passes[mo].label;

    int oo1 = code.passes[oo->first].label, oo2 = code.passes[oo->second].label;
    int uu1 = code.passes[uu->first].label, uu2 = code.passes[uu->second].label;
    if (oo1 == oo2 || uu1 == uu2 || roles.pq == roles.qr) return false;
    if (roles.pq != oo1 && roles.pq != oo2) return false;
    if (roles.qr != uu1 && roles.qr != uu2) return false;
    int rest_oo = roles.pq == oo1 ? oo2 : oo1;
    int rest_uu = roles.qr == uu1 ? uu2 : uu1;
    if (rest_oo != rest_uu) return false;
    roles.pr = rest_oo;
    roles.oo = *oo;
    roles.mixed = *mx;
    roles.uu = *uu;
    return true;
}

// Sign/order compatibility of a classified triple: the signs of the three
// crossings must match the parity of which strand each pair meets first.
bool triple_legal(const GaussCode& code, const PairRoles& roles) {
    auto sign_of = [&](int label) {
        for (const Pass& p : code.passes)
            if (p.label == label) return p.sign;
        return 0;
    };
    int s_pq = sign_of(roles.pq), s_qr = sign_of(roles.qr), s_pr = sign_of(roles.pr);
    int b_p = code.passes[roles.oo.first].label == roles.pr ? 1 : 0;
    int b_q = code.passes[roles.mixed.first].label == roles.qr ? 1 : 0;
    int b_r = code.passes[roles.uu.first].label == roles.qr ? 1 : 0;
    return s_pq * s_pr == ((b_q + b_r) % 2 ? -1 : 1) &&
           s_pq * s_qr == ((b_p + b_r) % 2 ? -1 : 1);
}

// Enumerate slide sites by knitting labels instead of scanning all pair
// triples: every legal site pairs one mixed pair with the over-over pairs
// sharing its under-pass label and the under-under pairs completing the
// label triangle.
std::vector<R3Slide> r3_slide_sites(const GaussCode& code) {
    const int n = code.size();
    std::vector<std::pair<int, int>> oo, uu, mixed;
    for (int p = 0; p < n; ++p) {
        int p2 = (p + 1) % n;
        const Pass& a = code.passes[p];
        const Pass& b = code.passes[p2];
        if (a.label == b.label) continue;
        if (a.over && b.over)
            oo.emplace_back(p, p2);
        else if (!a.over && !b.over)
            uu.emplace_back(p, p2);
        else
            mixed.emplace_back(p, p2);
    }
    std::vector<R3Slide> out;
    auto disjoint = [](const std::pair<int, int>& x, const std::pair<int, int>& y,
                       const std::pair<int, int>& z) {
        int v[6] = {x.first, x.second, y.first, y.second, z.first, z.second};
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (v[i] == v[j]) return false;
        return true;
    };
    for (const auto& mx : mixed) {
        int mu = code.passes[mx.first].over ? mx.second : mx.first;
        int mo = code.passes[mx.first].over ? mx.first : mx.second;
        int pq = code.passes[mu].label;
        int qr = code.passes[mo].label;
        for (const auto& over_pair : oo) {
            int o1 = code.passes[over_pair.first].label;
            int o2 = code.passes[over_pair.second].label;
            if (o1 != pq && o2 != pq) continue;
            int pr = o1 == pq ? o2 : o1;
            if (pr == qr) continue;
            for (const auto& under_pair : uu) {
                int u1 = code.passes[under_pair.first].label;
                int u2 = code.passes[under_pair.second].label;
                if (std::minmax(u1, u2) != std::minmax(qr, pr)) continue;
                if (!disjoint(over_pair, mx, under_pair)) continue;
                R3Slide site;
                site.pairs = {over_pair, mx, under_pair};
                PairRoles roles;
                if (classify_triple(code, site.pairs, roles) && triple_legal(code, roles))
                    out.push_back(site);
            }
        }
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_site(what);
}

}  // namespace

std::string describe(const MoveSite& site) {
    struct Visitor {
        std::string operator()(const R1Insert& s) const {
            return "R1-insert at gap " + std::to_string(s.gap) + " (" +
                   (s.over_first ? "over" : "under") + " first, sign " +
                   (s.sign > 0 ? "+" : "-") + ")";
        }
        std::string operator()(const R1Delete& s) const {
            return "R1-delete at position " + std::to_string(s.pos);
        }
        std::string operator()(const R2Insert& s) const {
            return "R2-insert at gaps " + std::to_string(s.gap1) + "," + std::to_string(s.gap2) +
                   " (" + (s.under_parallel ? "parallel" : "antiparallel") + ", first sign " +
                   (s.sign_first > 0 ? "+" : "-") + ", " + (s.over_block_first ? "over" : "under") +
                   " block first)";
        }
        std::string operator()(const R2Delete& s) const {
            return "R2-delete at positions " + std::to_string(s.over_pos) + "," +
                   std::to_string(s.under_pos);
        }
        std::string operator()(const R3Slide& s) const {
            std::string out = "R3-slide at";
            for (const auto& [p, q] : s.pairs)
                out += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
            return out;
        }
    };
    return std::visit(Visitor{}, site);
}

std::vector<MoveSite> enumerate_sites(const GaussCode& code) {
    const int n = code.size();
    std::vector<MoveSite> out;
    for (int pos : r1_delete_positions(code)) out.push_back(R1Delete{pos});
    for (const R2Delete& s : r2_delete_sites(code)) out.push_back(s);
    for (const R3Slide& s : r3_slide_sites(code)) out.push_back(s);
    for (int gap = 0; gap <= n; ++gap)
        for (bool over_first : {true, false})
            for (int sign : {1, -1}) out.push_back(R1Insert{gap, over_first, sign});
    for (int g1 = 0; g1 <= n; ++g1)
        for (int g2 = g1; g2 <= n; ++g2)
            for (bool parallel : {true, false})
                for (int sign : {1, -1})
                    for (bool over_first : {true, false})
                        out.push_back(R2Insert{g1, g2, parallel, sign, over_first});
    return out;
}

GaussCode apply(const GaussCode& code, const MoveSite& site) {
    const int n = code.size();

    struct Visitor {
        const GaussCode& code;
        int n;

        GaussCode operator()(const R1Insert& s) const {
            require(s.gap >= 0 && s.gap <= n, "kink gap out of range");
            require(s.sign == 1 || s.sign == -1, "bad kink sign");
            int lab = fresh_label(code);
            GaussCode out;
            out.passes.reserve(n + 2);
            out.passes.insert(out.passes.end(), code.passes.begin(), code.passes.begin() + s.gap);
            out.passes.push_back({lab, s.over_first, s.sign});
            out.passes.push_back({lab, !s.over_first, s.sign});
            out.passes.insert(out.passes.end(), code.passes.begin() + s.gap, code.passes.end());
            return out;
        }

        GaussCode operator()(const R1Delete& s) const {
            require(s.pos >= 0 && s.pos < n && n >= 2, "kink position out of range");
            int q = (s.pos + 1) % n;
            require(code.passes[s.pos].label == code.passes[q].label,
                    "adjacent passes are not one crossing");
            GaussCode out;
            out.passes.reserve(n - 2);
            for (int i = 0; i < n; ++i)
                if (i != s.pos && i != q) out.passes.push_back(code.passes[i]);
            return out;
        }

        GaussCode operator()(const R2Insert& s) const {
            require(s.gap1 >= 0 && s.gap1 <= s.gap2 && s.gap2 <= n, "poke gaps out of order");
            require(s.sign_first == 1 || s.sign_first == -1, "bad poke sign");
            int a = fresh_label(code);
            int b = a + 1;
            std::vector<Pass> over_block{{a, true, s.sign_first}, {b, true, -s.sign_first}};
            std::vector<Pass> under_block{{a, false, s.sign_first}, {b, false, -s.sign_first}};
            if (!s.under_parallel) std::swap(under_block[0], under_block[1]);
            const auto& first = s.over_block_first ? over_block : under_block;
            const auto& second = s.over_block_first ? under_block : over_block;
            GaussCode out;
            out.passes.reserve(n + 4);
            out.passes.insert(out.passes.end(), code.passes.begin(), code.passes.begin() + s.gap1);
            out.passes.insert(out.passes.end(), first.begin(), first.end());
            out.passes.insert(out.passes.end(), code.passes.begin() + s.gap1,
                              code.passes.begin() + s.gap2);
            out.passes.insert(out.passes.end(), second.begin(), second.end());
            out.passes.insert(out.passes.end(), code.passes.begin() + s.gap2, code.passes.end());
            return out;
        }

        GaussCode operator()(const R2Delete& s) const {
            require(s.over_pos >= 0 && s.over_pos < n && s.under_pos >= 0 && s.under_pos < n,
                    "poke positions out of range");
            int p = s.over_pos, p2 = (p + 1) % n;
            int q = s.under_pos, q2 = (q + 1) % n;
            std::set<int> distinct{p, p2, q, q2};
            require(distinct.size() == 4, "poke blocks overlap");
            const Pass& a = code.passes[p];
            const Pass& b = code.passes[p2];
            const Pass& c = code.passes[q];
            const Pass& d = code.passes[q2];
            require(a.over && b.over && !c.over && !d.over, "poke blocks have wrong strands");
            require(a.label != b.label && std::minmax(a.label, b.label) ==
                                              std::minmax(c.label, d.label),
                    "poke blocks are not the same two crossings");
            require(a.sign == -b.sign, "poke crossings must carry opposite signs");
            GaussCode out;
            out.passes.reserve(n - 4);
            for (int i = 0; i < n; ++i)
                if (!distinct.count(i)) out.passes.push_back(code.passes[i]);
            return out;
        }

        GaussCode operator()(const R3Slide& s) const {
            for (const auto& [p, p2] : s.pairs) {
                require(p >= 0 && p < n && p2 == (p + 1) % n, "slide pairs must be adjacent");
            }
            PairRoles roles;
            require(classify_triple(code, s.pairs, roles), "slide pairs do not knit");
            require(triple_legal(code, roles), "slide signs/order are incompatible");
            GaussCode out = code;
            for (const auto& [p, p2] : s.pairs) std::swap(out.passes[p], out.passes[p2]);
            return out;
        }
    };

    return std::visit(Visitor{code, n}, site);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::optional<MoveSite> RandomWalker::propose(const GaussCode& code, int max_crossings) {
    const int n = code.size();
    const int k = code.crossing_count();
    std::vector<int> r1d = r1_delete_positions(code);
    std::vector<R2Delete> r2d = r2_delete_sites(code);
    std::vector<R3Slide> r3s = r3_slide_sites(code);

    enum Kind { kink_in, poke_in, kink_out, poke_out, slide };
    std::vector<Kind> kinds;
    if (k + 1 <= max_crossings) kinds.push_back(kink_in);
    if (k + 2 <= max_crossings) kinds.push_back(poke_in);
    if (!r1d.empty()) kinds.push_back(kink_out);
    if (!r2d.empty()) kinds.push_back(poke_out);
    if (!r3s.empty()) kinds.push_back(slide);
    if (kinds.empty()) return std::nullopt;

    switch (kinds[bounded(rng_, kinds.size())]) {
        case kink_in: {
            int gap = static_cast<int>(bounded(rng_, n + 1));
            bool over_first = bounded(rng_, 2) == 0;
            int sign = bounded(rng_, 2) == 0 ? 1 : -1;
            return R1Insert{gap, over_first, sign};
        }
        case poke_in: {
            int g1 = static_cast<int>(bounded(rng_, n + 1));
            int g2 = static_cast<int>(bounded(rng_, n + 1));
            if (g1 > g2) std::swap(g1, g2);
            bool parallel = bounded(rng_, 2) == 0;
            int sign = bounded(rng_, 2) == 0 ? 1 : -1;
            bool over_first = bounded(rng_, 2) == 0;
            return R2Insert{g1, g2, parallel, sign, over_first};
        }
        case kink_out:
            return R1Delete{r1d[bounded(rng_, r1d.size())]};
        case poke_out:
            return r2d[bounded(rng_, r2d.size())];
        case slide:
            return r3s[bounded(rng_, r3s.size())];
    }
    return std::nullopt;  // unreachable
}

GaussCode random_walk(const GaussCode& code, int steps, std::uint64_t seed, int max_crossings) {
    RandomWalker walker(seed);
    GaussCode current = code;
    for (int i = 0; i < steps; ++i) {
        std::optional<MoveSite> site = walker.propose(current, max_crossings);
        if (!site) break;
        current = vk::apply(current, *site);
    }
    return current;
}

GaussCode random_code(std::mt19937_64& rng, int crossings) {
    const int n = 2 * crossings;
    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(slots[i], slots[bounded(rng, static_cast<std::uint64_t>(i) + 1)]);
    GaussCode code;
    code.passes.resize(n);
    for (int label = 1; label <= crossings; ++label) {
        int sign = bounded(rng, 2) == 0 ? 1 : -1;
        code.passes[slots[2 * label - 2]] = {label, true, sign};
        code.passes[slots[2 * label - 1]] = {label, false, sign};
    }
    return code;
}

}  // namespace vk
