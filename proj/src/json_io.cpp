#include "vk/json_io.hpp"

#include <cstdint>
#include <limits>

namespace vk {

namespace {

nlohmann::ordered_json coeff_to_json(const Coeff& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return c.convert_to<std::int64_t>();
    return c.str();
}

}  // namespace

nlohmann::ordered_json poly_to_json(const LaurentPoly2& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms)
        out.push_back(nlohmann::ordered_json::array({m.t_exp, m.l_exp, coeff_to_json(c)}));
    return out;
}

nlohmann::ordered_json bundle_to_json(const InvariantBundle& b) {
    nlohmann::ordered_json j;
    j["code"] = serialize(b.code);
    j["writhe"] = b.writhes.writhe;
    j["crossings"] = nlohmann::ordered_json::array();
    for (const IndexedCrossing& c : b.crossings) {
        nlohmann::ordered_json rec;
        rec["label"] = c.label;
        rec["sign"] = c.sign;
        rec["index"] = c.index;
        j["crossings"].push_back(std::move(rec));
    }
    j["nset"] = b.nset;
    nlohmann::ordered_json dwrithe = nlohmann::ordered_json::object();
    for (int n : b.nset) dwrithe[std::to_string(n)] = b.writhes.dwrithe_at(n);
    j["dwrithe"] = std::move(dwrithe);
    j["P"] = poly_to_json(b.P);
    j["W"] = poly_to_json(b.W);
    nlohmann::ordered_json l = nlohmann::ordered_json::object();
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (int n : b.nset) {
        std::string key = std::to_string(n);
        l[key] = poly_to_json(b.L.at(n));
        f[key] = poly_to_json(b.F.at(n));
        t[key] = b.T.at(n);
    }
    j["L"] = std::move(l);
    j["F"] = std::move(f);
    j["T"] = std::move(t);
    nlohmann::ordered_json cosmetic = nlohmann::ordered_json::object();
    for (const auto& [label, report] : cosmetic_verdicts(b.code))
        cosmetic[std::to_string(label)] = cosmetic_verdict_name(report.verdict);
    j["cosmetic"] = std::move(cosmetic);
    return j;
}

std::vector<std::string> fixture_mismatches(const Fixture& f) {
    std::vector<std::string> out;
    nlohmann::ordered_json expected =
        nlohmann::ordered_json::parse(f.expected_json, nullptr, /*allow_exceptions=*/true);
    nlohmann::ordered_json computed = bundle_to_json(bundle(f.code));

    auto complain = [&](const std::string& where, const nlohmann::ordered_json& want,
                        const nlohmann::ordered_json& got) {
        out.push_back(f.name + ": " + where + " recorded " + want.dump() + ", computed " +
                      got.dump());
    };

    for (const auto& [key, want] : expected.items()) {
        if (!computed.contains(key)) {
            out.push_back(f.name + ": computed report lacks key '" + key + "'");
            continue;
        }
        const nlohmann::ordered_json& got = computed[key];
        if (want.is_object()) {
            for (const auto& [sub, want_sub] : want.items()) {
                if (!got.contains(sub)) {
                    out.push_back(f.name + ": " + key + " lacks entry " + sub);
                    continue;
                }
                if (got[sub] != want_sub) complain(key + "[" + sub + "]", want_sub, got[sub]);
            }
        } else if (got != want) {
            complain(key, want, got);
        }
    }
    return out;
}

}  // namespace vk
