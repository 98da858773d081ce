#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vk/corpus.hpp"
#include "vk/laurent.hpp"
#include "vk/lfpoly.hpp"

namespace vk {

// Polynomial as a JSON array of [t_exp, l_exp, coeff] triples in display
// order. Coefficients beyond 64-bit range are emitted as decimal strings.
nlohmann::ordered_json poly_to_json(const LaurentPoly2& p);

// Full report object:
// {"code", "writhe", "crossings":[{"label","sign","index"}], "nset",
//  "dwrithe":{n:v}, "P", "W", "L":{n:poly}, "F":{n:poly}, "T":{n:[labels]},
//  "cosmetic":{label:verdict}}
// where the n-keyed maps run over nset and polynomials use the triple
// form above.
nlohmann::ordered_json bundle_to_json(const InvariantBundle& b);

// Compare a fixture's recorded values against a fresh computation.
// Scalar and list entries must match exactly; map-valued entries
// (dwrithe, L, F, T) are checked for the n they list. Returns one message
// per mismatch; empty means every recorded value matches.
std::vector<std::string> fixture_mismatches(const Fixture& f);

}  // namespace vk
