#include "torusband/json_io.hpp"

#include "torusband/errors.hpp"

namespace tb {

using nlohmann::json;

json to_json(const cyclic_walk& w) {
    json letters = json::array();
    for (const letter& l : w.letters)
        letters.push_back({{"kind", l.kind == letter_kind::eps ? "eps" : "kappa"},
                           {"col", l.col},
                           {"sign", l.sign}});
    return {{"n", w.n}, {"letters", letters}};
}

json to_json(const loop_matrix& m) {
    return {{"n", m.n}, {"r", m.r}, {"entries", m.entries}};
}

json to_json(const homology_class& h) {
    return {{"rank", h.rank}, {"multidegree", h.multidegree}, {"total_degree", h.total_degree}};
}

json to_json(const intersection_report& rep) {
    json subs = json::array();
    for (const subsequence_witness& w : rep.subsequences)
        subs.push_back({{"shift", w.shift}, {"start", w.start}, {"zero_run", w.zero_run}, {"sign", w.sign}});
    json triples = json::array();
    for (const triple_witness& t : rep.triples)
        triples.push_back({{"x", t.x}, {"y", t.y}, {"q", t.q}});
    return {{"count", rep.count},
            {"subsequence_witnesses", subs},
            {"triple_witnesses", triples}};
}

json to_json(const simplicity_report& rep) {
    json patterns = json::array();
    for (const pattern_witness& p : rep.patterns)
        patterns.push_back({{"t", p.t}, {"pos", p.pos}, {"zero_run", p.run}, {"sign", p.sign}});
    return {{"simple", rep.simple()},
            {"coprime_ok", rep.coprime_ok},
            {"gcd", rep.gcd_value},
            {"column_gap_ok", rep.column_gap_ok},
            {"gap_columns", rep.gap_columns},
            {"pattern_ok", rep.pattern_ok},
            {"pattern_witnesses", patterns}};
}

json to_json(const projective_complex& X) {
    json summands = json::array();
    for (const summand& s : X.summands) summands.push_back({{"vertex", s.vertex}, {"deg", s.deg}});
    json diff = json::array();
    for (const auto& [k, l] : X.diff) {
        json terms = json::array();
        for (const auto& [p, c] : l)
            terms.push_back({{"path_kind", static_cast<int>(p.kind)},
                             {"col", p.col},
                             {"idem_vertex", p.idem_vertex},
                             {"scalar", c}});
        diff.push_back({{"src", k.first}, {"tgt", k.second}, {"terms", terms}});
    }
    return {{"n", X.n}, {"summands", summands}, {"differential", diff}};
}

json to_json(const twist_word& word) {
    json out = json::array();
    for (const twist_step& s : word) {
        json step = {{"power", s.power}};
        if (s.gen == twist_step::generator::pic) {
            step["generator"] = "pic";
        } else {
            step["generator"] = "vert";
            step["col"] = s.col;
        }
        out.push_back(step);
    }
    return out;
}

json to_json(const verify_report& rep) {
    json checks = json::array();
    for (const verify_check& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"failed", c.failed},
                          {"expected_deviations", c.expected_deviations},
                          {"failure_witnesses", c.failure_witnesses}});
    return {{"mismatches", rep.mismatches()}, {"checks", checks}};
}

cyclic_walk walk_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("letters")) throw domain_error("malformed walk JSON");
    std::vector<letter> raw;
    for (const json& e : j.at("letters")) {
        const std::string kind = e.at("kind").get<std::string>();
        if (kind != "eps" && kind != "kappa") throw domain_error("unknown letter kind");
        raw.push_back({kind == "eps" ? letter_kind::eps : letter_kind::kappa,
                       e.at("col").get<int>(), e.at("sign").get<int>()});
    }
    return reduce_walk(std::move(raw), j.at("n").get<int>());
}

loop_matrix matrix_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("r") || !j.contains("entries"))
        throw domain_error("malformed matrix JSON");
    loop_matrix m{j.at("n").get<int>(), j.at("r").get<int>(),
                  j.at("entries").get<std::vector<std::int64_t>>()};
    if (m.n < 1 || m.r < 1 ||
        m.entries.size() != static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.r))
        throw domain_error("matrix entries must have length n*r");
    return m;
}

bool json_is_walk(const json& j) { return j.contains("letters"); }

} // namespace tb
