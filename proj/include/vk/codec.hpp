#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

// One over- or under-pass of a classical crossing in a cyclic Gauss word.
struct Pass {
    int label = 0;      // positive crossing label
    bool over = false;  // true: over-pass, false: under-pass
    int sign = 1;       // crossing sign, +1 or -1 (shared by both passes)

    friend bool operator==(const Pass&, const Pass&) = default;
};

// A virtual knot diagram encoded as a cyclic word of signed passes.
// Virtual crossings carry no information in this encoding and are never
// stored; the empty word is the unknot. Values are immutable by
// convention: every operation returns a fresh code.
struct GaussCode {
    std::vector<Pass> passes;

    friend bool operator==(const GaussCode&, const GaussCode&) = default;
    int size() const { return static_cast<int>(passes.size()); }
    int crossing_count() const { return size() / 2; }
};

enum class CodeError {
    malformed_token,   // bad character, bad label, or missing sign
    duplicate_strand,  // a label seen twice as over (or twice as under)
    sign_mismatch,     // the two passes of a label disagree on sign
    odd_occurrence,    // a label seen once or more than twice
};

const char* code_error_name(CodeError kind);

struct code_error : std::runtime_error {
    CodeError kind;
    code_error(CodeError k, const std::string& msg);
};

struct unknown_crossing : std::runtime_error {
    explicit unknown_crossing(int label);
};

// Where the two passes of one crossing live in the word.
struct CrossingRef {
    int label = 0;
    int sign = 1;
    int over_pos = -1;
    int under_pos = -1;
};

// Throws code_error unless every label occurs exactly once as over and
// once as under with a consistent sign.
void validate(const GaussCode& code);

// Per-crossing view, sorted by label. Requires a valid code.
std::vector<CrossingRef> crossings(const GaussCode& code);
CrossingRef find_crossing(const GaussCode& code, int label);  // throws unknown_crossing

// Parse "O1+U2-..." (tokens optionally separated by commas/whitespace;
// "" is the unknot) and validate.
GaussCode parse(const std::string& text);

// Token spelling of the passes in stored order, no normalization.
std::string to_token_string(const GaussCode& code);

// Relabel crossings 1..k by order of first appearance, then pick the
// cyclic rotation whose token string is lexicographically least.
GaussCode canonical(const GaussCode& code);

// Canonical string form: to_token_string(canonical(code)).
std::string serialize(const GaussCode& code);

// Sum of crossing signs.
int writhe(const GaussCode& code);

}  // namespace vk
