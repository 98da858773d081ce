#include "vk/codec.hpp"

#include <algorithm>
#include <map>

namespace vk {

const char* code_error_name(CodeError kind) {
    switch (kind) {
        case CodeError::malformed_token: return "MalformedToken";
        case CodeError::duplicate_strand: return "DuplicateStrand";
        case CodeError::sign_mismatch: return "SignMismatch";
        case CodeError::odd_occurrence: return "OddOccurrence";
    }
    return "CodeError";
}

code_error::code_error(CodeError k, const std::string& msg)
    : std::runtime_error(std::string(code_error_name(k)) + ": " + msg), kind(k) {}

unknown_crossing::unknown_crossing(int label)
    : std::runtime_error("UnknownCrossing: no crossing labeled " + std::to_string(label)) {}

void validate(const GaussCode& code) {
    std::map<int, CrossingRef> seen;
    for (int i = 0; i < code.size(); ++i) {
        const Pass& p = code.passes[i];
        if (p.label <= 0)
            throw code_error(CodeError::malformed_token,
                             "label must be a positive integer, got " + std::to_string(p.label));
        if (p.sign != 1 && p.sign != -1)
            throw code_error(CodeError::malformed_token,
                             "sign must be +1 or -1, got " + std::to_string(p.sign));
        CrossingRef& ref = seen[p.label];
        if (ref.label == 0) {
            ref.label = p.label;
            ref.sign = p.sign;
        } else if (ref.sign != p.sign) {
            throw code_error(CodeError::sign_mismatch,
                             "label " + std::to_string(p.label) + " carries both signs");
        }
        int& pos = p.over ? ref.over_pos : ref.under_pos;
        if (pos != -1)
            throw code_error(CodeError::duplicate_strand,
                             "label " + std::to_string(p.label) + " occurs twice as " +
                                 (p.over ? "over" : "under"));
        pos = i;
    }
    for (const auto& [label, ref] : seen)
        if (ref.over_pos == -1 || ref.under_pos == -1)
            throw code_error(CodeError::odd_occurrence,
                             "label " + std::to_string(label) + " occurs only once");
}

std::vector<CrossingRef> crossings(const GaussCode& code) {
    std::map<int, CrossingRef> by_label;
    for (int i = 0; i < code.size(); ++i) {
        const Pass& p = code.passes[i];
        CrossingRef& ref = by_label[p.label];
        ref.label = p.label;
        ref.sign = p.sign;
        (p.over ? ref.over_pos : ref.under_pos) = i;
    }
    std::vector<CrossingRef> out;
    out.reserve(by_label.size());
    for (const auto& [label, ref] : by_label) out.push_back(ref);
    return out;
}

CrossingRef find_crossing(const GaussCode& code, int label) {
    CrossingRef ref;
    ref.label = label;
    for (int i = 0; i < code.size(); ++i) {
        const Pass& p = code.passes[i];
        if (p.label != label) continue;
        ref.sign = p.sign;
        (p.over ? ref.over_pos : ref.under_pos) = i;
    }
    if (ref.over_pos == -1 || ref.under_pos == -1) throw unknown_crossing(label);
    return ref;
}

GaussCode parse(const std::string& text) {
    GaussCode code;
    std::size_t i = 0;
    auto skip_separators = [&] {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '\t' ||
                                   text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    skip_separators();
    while (i < text.size()) {
        char strand = text[i];
        if (strand != 'O' && strand != 'U')
            throw code_error(CodeError::malformed_token,
                             "expected 'O' or 'U' at position " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] < '1' || text[i] > '9')
            throw code_error(CodeError::malformed_token,
                             "expected label starting with 1-9 at position " + std::to_string(i));
        long label = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000000)
                throw code_error(CodeError::malformed_token, "label too large");
            ++i;
        }
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw code_error(CodeError::malformed_token,
                             "expected '+' or '-' at position " + std::to_string(i));
        int sign = text[i] == '+' ? 1 : -1;
        ++i;
        code.passes.push_back({static_cast<int>(label), strand == 'O', sign});
        skip_separators();
    }
    validate(code);
    return code;
}

std::string to_token_string(const GaussCode& code) {
    std::string out;
    for (const Pass& p : code.passes) {
        out += p.over ? 'O' : 'U';
        out += std::to_string(p.label);
        out += p.sign > 0 ? '+' : '-';
    }
    return out;
}

namespace {

GaussCode relabel_by_first_appearance(const GaussCode& code, int start) {
    const int n = code.size();
    std::map<int, int> renumber;
    GaussCode out;
    out.passes.reserve(n);
    for (int k = 0; k < n; ++k) {
        const Pass& p = code.passes[(start + k) % n];
        auto [it, inserted] = renumber.try_emplace(p.label, static_cast<int>(renumber.size()) + 1);
        out.passes.push_back({it->second, p.over, p.sign});
    }
    return out;
}

}  // namespace

GaussCode canonical(const GaussCode& code) {
    if (code.passes.empty()) return code;
    GaussCode best = relabel_by_first_appearance(code, 0);
    std::string best_str = to_token_string(best);
    for (int start = 1; start < code.size(); ++start) {
        GaussCode cand = relabel_by_first_appearance(code, start);
        std::string cand_str = to_token_string(cand);
        if (cand_str < best_str) {
            best = std::move(cand);
            best_str = std::move(cand_str);
        }
    }
    return best;
}

std::string serialize(const GaussCode& code) { return to_token_string(canonical(code)); }

int writhe(const GaussCode& code) {
    int sum = 0;
    for (const Pass& p : code.passes)
        if (p.over) sum += p.sign;
    return sum;
}

}  // namespace vk
