#include "spheretri/report_json.hpp"

#include "json.hpp"

namespace spheretri {

namespace {

using nlohmann::json;

json stats_to_json(const PerNStats& s) {
    json j;
    j["n"] = s.n;
    j["catalog_size"] = s.catalog_size;
    j["g_value"] = s.g_value < 0 ? json(nullptr) : json(s.g_value);
    j["minimizer_count"] =
        s.minimizer_count < 0 ? json(nullptr) : json(s.minimizer_count);
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["claim_id"] = r.claim_id;
    j["n_range"] = {{"lo", r.n_lo}, {"hi", r.n_hi}};
    j["status"] = r.pass ? "pass" : "fail";
    json cx = json::array();
    for (const auto& code : r.counterexamples) cx.push_back(code.hex());
    j["counterexamples"] = std::move(cx);
    json st = json::array();
    for (const auto& s : r.statistics) st.push_back(stats_to_json(s));
    j["statistics"] = std::move(st);
    j["note"] = r.note;
    return j.dump();
}

std::string extremal_to_json(const ExtremalRecord& r) {
    json j;
    j["n"] = r.n;
    j["g_value"] = r.g_value;
    j["minimizer_count"] = r.minimizer_count;
    json mins = json::array();
    for (const auto& code : r.minimizer_codes) {
        // a canonical code is itself a planar_code record, so the payload
        // repeats the code bytes
        mins.push_back(json{{"code", code.hex()}, {"planar_code", code.hex()}});
    }
    j["minimizers"] = std::move(mins);
    return j.dump();
}

std::string census_to_json(const CycleCensus& c, int index) {
    json j;
    j["index"] = index;
    j["n"] = static_cast<std::int64_t>(c.per_vertex_c4.size());
    j["c3"] = c.c3;
    j["c4"] = c.c4;
    j["c4_diamond"] = c.c4_diamond;
    j["c4_separating"] = c.c4_separating;
    j["per_vertex_c4"] = c.per_vertex_c4;
    return j.dump();
}

} // namespace spheretri
