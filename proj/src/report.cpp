#include "keller/report.hpp"

#include "keller/io.hpp"

namespace keller {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

nlohmann::json make_report(const std::string& command) {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    j["verdicts"] = nlohmann::json::object();
    j["witnesses"] = nlohmann::json::array();
    j["timings"] = nlohmann::json::object();
    return j;
}

void report_add_input(nlohmann::json& report, const std::string& label, std::string_view content) {
    report["inputs"].push_back({{"label", label}, {"digest", digest_hex(content)}});
}

std::string determinism_digest(const nlohmann::json& report) {
    nlohmann::json copy = report;
    copy.erase("timings");
    copy.erase("determinism_digest");
    return digest_hex(copy.dump());
}

void finalize_report(nlohmann::json& report, double elapsed_seconds) {
    report["determinism_digest"] = determinism_digest(report);
    report["timings"]["elapsed_seconds"] = elapsed_seconds;
}

nlohmann::json to_json(const Automorphism& a) {
    nlohmann::json j;
    if (const auto* l = std::get_if<Automorphism::Linear>(&a.kind())) {
        j["kind"] = "linear";
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : l->matrix) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& e : row) r.push_back(e.str());
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
    } else if (const auto* t = std::get_if<Automorphism::Translation>(&a.kind())) {
        j["kind"] = "translation";
        nlohmann::json off = nlohmann::json::array();
        for (const auto& e : t->offset) off.push_back(e.str());
        j["offset"] = std::move(off);
    } else if (const auto* tr = std::get_if<Automorphism::Triangular>(&a.kind())) {
        j["kind"] = "triangular";
        nlohmann::json shifts = nlohmann::json::array();
        for (const auto& s : tr->shifts) shifts.push_back(to_string(s));
        j["shifts"] = std::move(shifts);
    } else {
        const auto& c = std::get<Automorphism::Composition>(a.kind());
        j["kind"] = "composition";
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : c.factors) factors.push_back(to_json(f));
        j["factors"] = std::move(factors);
    }
    return j;
}

nlohmann::json to_json(const EquivalenceWitness& w) {
    return {{"preimage_change", to_json(w.preimage_change)},
            {"image_change", to_json(w.image_change)},
            {"source_dim", w.source_dim},
            {"target_dim", w.target_dim}};
}

nlohmann::json to_json(const PolyMap& f) { return print_pmap(PmapDocument::of_map(f)); }

nlohmann::json to_json(const ChainLink& link) {
    nlohmann::json j{{"stage", link.stage},
                     {"from", to_json(link.from)},
                     {"to", to_json(link.to)},
                     {"added", link.added},
                     {"replay_ok", link.replay_ok}};
    if (link.witness) j["witness"] = to_json(*link.witness);
    return j;
}

}  // namespace keller
