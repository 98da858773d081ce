#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vk/codec.hpp"
#include "vk/invariants.hpp"
#include "vk/laurent.hpp"
#include "vk/transforms.hpp"

namespace vk {

// Everything the library can say about one diagram. The L, F and T maps
// are stored for n in nset only; for any other n the polynomials
// degenerate to P (queries outside the set should use that value).
struct InvariantBundle {
    GaussCode code;
    std::vector<IndexedCrossing> crossings;
    WritheTable writhes;
    LaurentPoly2 P;
    LaurentPoly2 W;
    std::set<int> nset;
    std::map<int, LaurentPoly2> L;
    std::map<int, LaurentPoly2> F;
    std::map<int, std::set<int>> T;  // n -> labels with smoothed dwrithe = +-dwrithe
    std::map<std::pair<int, int>, int> smoothed_dwrithes;  // (label, n) -> value
    int stable_bound = 1;                                  // 2*crossings + 1
};

// Set of n where the polynomial families can differ from P: the union of
// the index support of the diagram and of all its smoothings. Always
// within [1, 2*crossings + 1].
std::set<int> nset(const GaussCode& code);

// n-th two-variable polynomial: sum over crossings c of
//   sgn(c) * (t^index(c) * l^|dw_n(D_c)| - l^|dw_n(D)|)
// where dw_n(D_c) is the n-dwrithe of the diagram smoothed at c.
LaurentPoly2 l_poly(const GaussCode& code, int n);

// Refinement of l_poly keeping dwrithe signs:
//   sum_c sgn(c) * t^index(c) * l^dw_n(D_c)
//   - sum_{c in T_n} sgn(c) * l^dw_n(D_c)
//   - sum_{c not in T_n} sgn(c) * l^dw_n(D).
// Folding l -> l^|..| recovers l_poly; setting l = 1 recovers P.
LaurentPoly2 f_poly(const GaussCode& code, int n);

// T_n: labels whose smoothed n-dwrithe equals the diagram's n-dwrithe up
// to sign (both zero included).
std::set<int> t_set(const GaussCode& code, int n);

// Full report. Asserts the internal identities (set_l_to_one(L) == P and
// fold_abs_l(F) == L for every stored n) and throws std::logic_error if
// they ever fail.
InvariantBundle bundle(const GaussCode& code);

// Outcome of comparing two bundles. Only separation is ever claimed;
// equality of all computed invariants proves nothing.
struct DistinguishVerdict {
    bool distinguished = false;
    std::string witness;  // first differing invariant: "P", "W", "L^n", "F^n"
};

// Compare in the fixed order P, W, then L^n and F^n by ascending n over
// the union of both nsets (a missing n falls back to that bundle's P).
DistinguishVerdict distinguish(const InvariantBundle& b1, const InvariantBundle& b2);

// One-sided obstruction per crossing: not_cosmetic when the index is
// nonzero or some n in nset has smoothed dwrithe different from both
// +dwrithe and -dwrithe of the diagram; otherwise inconclusive (the
// criterion proves only non-cosmetic, never cosmetic).
enum class CosmeticVerdict { not_cosmetic, inconclusive };

const char* cosmetic_verdict_name(CosmeticVerdict v);

struct CosmeticReport {
    CosmeticVerdict verdict = CosmeticVerdict::inconclusive;
    std::string reason;  // empty when inconclusive
};

std::map<int, CosmeticReport> cosmetic_verdicts(const GaussCode& code);

// Checks the mirror/reverse identities
//   l_poly(mirror(D), n)  == -invert_t(l_poly(D, n))
//   l_poly(reverse(D), n) ==  invert_t(l_poly(D, n))
// for every n in the union of the three diagrams' nsets.
struct MirrorReverseReport {
    bool all_pass = true;
    std::map<int, bool> per_n;
};

MirrorReverseReport mirror_reverse_check(const GaussCode& code);

// Projection of a bundle onto move-invariant content only (diagram data
// such as writhe, labels, T sets and nset itself legitimately change
// under Reidemeister moves). L and F are sampled over nset plus two
// probes beyond the stable bound; comparisons fall back to P outside.
struct InvariantFingerprint {
    LaurentPoly2 P;
    LaurentPoly2 W;
    std::map<int, int> J;  // nonzero n -> nonzero n-writhe
    std::map<int, LaurentPoly2> L;
    std::map<int, LaurentPoly2> F;
};

InvariantFingerprint invariant_fingerprint(const GaussCode& code);
bool same_invariants(const InvariantFingerprint& a, const InvariantFingerprint& b);

}  // namespace vk
