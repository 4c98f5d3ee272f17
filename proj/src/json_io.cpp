#include "bosonic/json_io.hpp"

namespace bosonic {

Json poly_to_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json term;
        term["z"] = m.z;
        term["t"] = m.t;
        term["c"] = c.get_str();
        terms.push_back(std::move(term));
    }
    Json j;
    j["rank"] = f.rank();
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    LaurentPoly f(j.at("rank").get<int>());
    for (const auto& term : j.at("terms")) {
        Monomial m{term.at("z").get<std::vector<int>>(), term.at("t").get<int>()};
        f.add_term(m, Coeff(term.at("c").get<std::string>()));
    }
    return f;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["check"] = report.check_name;
    j["parameters"] = report.parameter_summary;
    j["cases_checked"] = report.cases_checked;
    j["pass"] = report.pass();
    Json fails = Json::array();
    for (const auto& f : report.failures) {
        Json jf;
        jf["config"] = f.config;
        jf["lhs"] = poly_to_json(f.lhs);
        jf["rhs"] = poly_to_json(f.rhs);
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    return j;
}

Json half_power_to_json(const HalfPowerValue& value) {
    Json j;
    j["half_q_exponent"] = value.half_q_exponent;
    j["poly"] = poly_to_json(value.poly);
    return j;
}

Json state_to_json(const SystemSpec& spec, const State& state) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : state.h) {
        Json r = Json::array();
        for (HSpin s : row) r.push_back(s.str());
        rows.push_back(std::move(r));
    }
    j["horizontal"] = std::move(rows);
    if (spec.model == Model::Uncolored) {
        j["vertical"] = state.v_count;
    } else {
        Json levels = Json::array();
        for (const auto& level : state.v_mult) {
            Json l = Json::array();
            for (const auto& v : level) l.push_back(v);
            levels.push_back(std::move(l));
        }
        j["vertical"] = std::move(levels);
    }
    return j;
}

}  // namespace bosonic
