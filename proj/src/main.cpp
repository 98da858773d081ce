#include <cstdint>
#include <limits>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vk/codec.hpp"
#include "vk/corpus.hpp"
#include "vk/json_io.hpp"
#include "vk/lfpoly.hpp"
#include "vk/moves.hpp"

namespace {

// Input codes are canonicalized up front, so every label and code string
// in the output refers to the canonical form.
vk::GaussCode read_code(const std::string& text) { return vk::canonical(vk::parse(text)); }

std::string set_string(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(v);
    }
    return out + "}";
}

void render_report(std::ostream& os, const vk::InvariantBundle& b) {
    os << "code: " << vk::serialize(b.code) << "\n";
    os << "writhe: " << b.writhes.writhe << "\n";
    for (const vk::IndexedCrossing& c : b.crossings)
        os << "crossing " << c.label << ": sign " << (c.sign > 0 ? "+1" : "-1") << ", index "
           << c.index << "\n";
    os << "nset: " << set_string(b.nset) << "\n";
    for (int n : b.nset) os << "dwrithe[" << n << "] = " << b.writhes.dwrithe_at(n) << "\n";
    os << "P = " << vk::to_string(b.P) << "\n";
    os << "W = " << vk::to_string(b.W) << "\n";
    for (const auto& [n, p] : b.L) os << "L^" << n << " = " << vk::to_string(p) << "\n";
    for (const auto& [n, p] : b.F) os << "F^" << n << " = " << vk::to_string(p) << "\n";
    for (const auto& [n, labels] : b.T) os << "T[" << n << "] = " << set_string(labels) << "\n";
    for (const auto& [label, report] : vk::cosmetic_verdicts(b.code)) {
        os << "cosmetic " << label << ": " << vk::cosmetic_verdict_name(report.verdict);
        if (!report.reason.empty()) os << " (" << report.reason << ")";
        os << "\n";
    }
}

int run_report_one(std::ostream& os, const std::string& text, bool json) {
    vk::InvariantBundle b = vk::bundle(read_code(text));
    if (json)
        os << vk::bundle_to_json(b).dump() << "\n";
    else
        render_report(os, b);
    return 0;
}

int run_report_batch(std::ostream& os, bool json) {
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(std::cin, line)) {
        ++lineno;
        try {
            if (!json && !first) os << "\n";
            run_report_one(os, line, json);
            first = false;
        } catch (const vk::code_error& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

int run_compare(std::ostream& os, const std::string& text1, const std::string& text2) {
    vk::DistinguishVerdict verdict =
        vk::distinguish(vk::bundle(read_code(text1)), vk::bundle(read_code(text2)));
    if (verdict.distinguished)
        os << "distinguished by " << verdict.witness << "\n";
    else
        os << "indistinguishable by computed invariants\n";
    return 0;
}

int run_cosmetic(std::ostream& os, const std::string& text) {
    for (const auto& [label, report] : vk::cosmetic_verdicts(read_code(text))) {
        os << "crossing " << label << ": " << vk::cosmetic_verdict_name(report.verdict);
        if (!report.reason.empty()) os << " (" << report.reason << ")";
        os << "\n";
    }
    return 0;
}

int run_fuzz(std::ostream& os, const std::string& text, int walks, int moves, std::uint64_t seed,
             int max_crossings) {
    vk::GaussCode start = read_code(text);
    vk::InvariantFingerprint base = vk::invariant_fingerprint(start);
    int violations = 0;
    long long moves_applied = 0;
    for (int w = 0; w < walks; ++w) {
        std::uint64_t walk_seed = seed + static_cast<std::uint64_t>(w);
        vk::GaussCode end = vk::random_walk(start, moves, walk_seed, max_crossings);
        if (vk::same_invariants(base, vk::invariant_fingerprint(end))) {
            moves_applied += moves;
            continue;
        }
        ++violations;
        os << "violation in walk " << w << " (seed " << walk_seed << "):\n";
        vk::RandomWalker walker(walk_seed);
        vk::GaussCode current = start;
        for (int step = 1; step <= moves; ++step) {
            std::optional<vk::MoveSite> site = walker.propose(current, max_crossings);
            if (!site) break;
            current = vk::apply(current, *site);
            os << "  move " << step << ": " << vk::describe(*site) << " -> "
               << vk::serialize(current) << "\n";
            if (!vk::same_invariants(base, vk::invariant_fingerprint(current))) {
                os << "  invariants changed at move " << step << "\n";
                break;
            }
        }
        os << "  replay: fuzz \"" << vk::serialize(start) << "\" --walks 1 --seed " << walk_seed
           << " --moves " << moves << " --max-crossings " << max_crossings << "\n";
    }
    os << "walks: " << walks << ", moves per walk: " << moves << ", violations: " << violations
       << "\n";
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virtual-knot invariants from signed Gauss codes"};
    app.require_subcommand(1);

    std::string report_code;
    bool report_json = false;
    bool report_batch = false;
    CLI::App* report = app.add_subcommand("report", "Print the full invariant report of a code");
    report->add_option("code", report_code, "signed Gauss code, e.g. O1+O2+U1+U2+");
    report->add_flag("--json", report_json, "emit the report as one JSON object");
    report->add_flag("--batch", report_batch, "read codes from stdin, one per line");

    std::string compare_code1, compare_code2;
    CLI::App* compare = app.add_subcommand("compare", "Try to distinguish two codes");
    compare->add_option("code1", compare_code1, "first signed Gauss code")->required();
    compare->add_option("code2", compare_code2, "second signed Gauss code")->required();

    std::string cosmetic_code;
    CLI::App* cosmetic = app.add_subcommand("cosmetic", "Cosmetic-crossing verdict per crossing");
    cosmetic->add_option("code", cosmetic_code, "signed Gauss code")->required();

    std::string fuzz_code;
    int fuzz_walks = 100;
    int fuzz_moves = 50;
    std::uint64_t fuzz_seed = 1;
    int fuzz_max = 20;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Random-move invariance check from a start code");
    fuzz->add_option("code", fuzz_code, "signed Gauss code")->required();
    fuzz->add_option("--walks", fuzz_walks, "number of random walks")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    fuzz->add_option("--moves", fuzz_moves, "moves per walk")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    fuzz->add_option("--seed", fuzz_seed, "base seed; walk w uses seed+w");
    fuzz->add_option("--max-crossings", fuzz_max, "reject inserts beyond this many crossings")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));

    int family_n = 1;
    bool family_mutant = false;
    CLI::App* family = app.add_subcommand("family", "Print the n-th twist-family code");
    family->add_option("--n", family_n, "twist length (>= 1)")
        ->required()
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    family->add_flag("--mutant", family_mutant, "emit the reflected-tangle variant");

    std::string fixture_name;
    CLI::App* fixture = app.add_subcommand("fixture", "Print a bundled example and its records");
    fixture->add_option("--name", fixture_name, "fixture name, e.g. fig6")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (report->parsed()) {
            if (report_batch) {
                if (report->count("code") > 0) {
                    std::cerr << "report: give a code argument or --batch, not both\n";
                    return 2;
                }
                return run_report_batch(std::cout, report_json);
            }
            if (report->count("code") == 0) {
                std::cerr << "report: a code argument (or --batch) is required\n";
                return 2;
            }
            return run_report_one(std::cout, report_code, report_json);
        }
        if (compare->parsed()) return run_compare(std::cout, compare_code1, compare_code2);
        if (cosmetic->parsed()) return run_cosmetic(std::cout, cosmetic_code);
        if (fuzz->parsed())
            return run_fuzz(std::cout, fuzz_code, fuzz_walks, fuzz_moves, fuzz_seed, fuzz_max);
        if (family->parsed()) {
            std::cout << vk::serialize(vk::family_kn(family_n, family_mutant)) << "\n";
            return 0;
        }
        if (fixture->parsed()) {
            const vk::Fixture& f = vk::fixture(fixture_name);
            std::cout << vk::serialize(f.code) << "\n" << f.expected_json << "\n";
            return 0;
        }
    } catch (const vk::code_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const vk::unknown_fixture& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const vk::unknown_crossing& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
