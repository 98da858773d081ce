#include "vk/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "fixtures_data.hpp"

namespace vk {

unknown_fixture::unknown_fixture(const std::string& name)
    : std::runtime_error("UnknownFixture: no fixture named '" + name + "'") {}

namespace {

std::vector<Fixture> parse_fixture_text(const char* text) {
    std::vector<Fixture> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t first = line.find(' ');
        std::size_t second = line.find(' ', first + 1);
        Fixture f;
        f.name = line.substr(0, first);
        std::string code_field = line.substr(first + 1, second - first - 1);
        f.expected_json = line.substr(second + 1);
        f.code = parse(code_field == "\"\"" ? "" : code_field);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = parse_fixture_text(detail::fixtures_text);
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    throw unknown_fixture(name);
}

GaussCode family_kn(int n, bool mutant) {
    if (n < 1) throw std::invalid_argument("family_kn: twist length must be at least 1");
    const int sd = n % 2 == 1 ? 1 : -1;  // the third fixed crossing flips sign with parity

    // Twist crossings 4..n+3, all negative, strand markers alternating;
    // the mutant starts the alternation on the other strand.
    std::vector<Pass> twist;
    twist.reserve(n);
    for (int i = 1; i <= n; ++i) {
        bool over = mutant ? i % 2 == 0 : i % 2 == 1;
        twist.push_back({3 + i, over, -1});
    }
    std::vector<Pass> twist_back(twist.rbegin(), twist.rend());
    for (Pass& p : twist_back) p.over = !p.over;

    GaussCode out;
    out.passes.reserve(2 * n + 6);
    auto append = [&](const std::vector<Pass>& block) {
        out.passes.insert(out.passes.end(), block.begin(), block.end());
    };
    if (!mutant) {
        append({{1, false, 1}, {2, false, 1}, {3, false, sd}, {1, true, 1}, {2, true, 1}});
        append(twist);
        append({{3, true, sd}});
        append(twist_back);
    } else {
        append({{1, false, 1}, {2, false, 1}});
        append(twist);
        append({{3, false, sd}});
        append(twist_back);
        append({{1, true, 1}, {2, true, 1}, {3, true, sd}});
    }
    return out;
}

}  // namespace vk
