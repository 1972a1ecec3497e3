#include "focklab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace focklab {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::vector<double> coeff_array(const nlohmann::json& j, int count,
                                const std::string& field) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != count)
            throw std::invalid_argument("spec field '" + field + "' has " +
                                        std::to_string(j.size()) + " entries, expected " +
                                        std::to_string(count));
        for (const auto& v : j) {
            if (!v.is_number())
                throw std::invalid_argument("spec field '" + field + "' must be numeric");
            out.push_back(v.get<double>());
        }
        return out;
    }
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("spec field '" + field +
                                    "' must be an array or a generator object");
    const std::string kind = j.at("kind").get<std::string>();
    auto need = [&](const char* key) -> double {
        if (!j.contains(key))
            throw std::invalid_argument("spec field '" + field + "." + key +
                                        "' is required for kind '" + kind + "'");
        return j.at(key).get<double>();
    };
    if (kind == "constant") {
        const double v = need("value");
        out.assign(static_cast<size_t>(count), v);
    } else if (kind == "linear") {
        const double c = need("coeff");
        for (int n = 0; n < count; ++n) out.push_back(c * (1.0 + n));
    } else if (kind == "power") {
        const double c = need("coeff");
        const double e = need("exponent");
        for (int n = 0; n < count; ++n) out.push_back(c * std::pow(1.0 + n, e));
    } else {
        throw std::invalid_argument("spec field '" + field + ".kind' unknown: " + kind);
    }
    return out;
}

}  // namespace

SequenceSpec spec_from_json(const nlohmann::json& j) {
    SequenceSpec spec;
    if (!j.contains("beta")) throw std::invalid_argument("spec field 'beta' is missing");
    if (!j.at("beta").is_number())
        throw std::invalid_argument("spec field 'beta' must be numeric");
    spec.p.beta = j.at("beta").get<double>();
    if (!j.contains("count"))
        throw std::invalid_argument("spec field 'count' is missing");
    const int count = j.at("count").get<int>();
    if (count <= 0) throw std::invalid_argument("spec field 'count' must be positive");
    spec.deltas = j.contains("deltas")
                      ? coeff_array(j.at("deltas"), count, "deltas")
                      : std::vector<double>(static_cast<size_t>(count), 0.0);
    spec.thetas = j.contains("thetas")
                      ? coeff_array(j.at("thetas"), count, "thetas")
                      : std::vector<double>(static_cast<size_t>(count), 0.0);
    spec.validate();
    return spec;
}

nlohmann::json spec_to_json(const SequenceSpec& spec) {
    return {{"beta", spec.p.beta},
            {"count", spec.count()},
            {"deltas", spec.deltas},
            {"thetas", spec.thetas}};
}

SequenceSpec spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("spec file " + path + ": " + e.what());
    }
    return spec_from_json(j);
}

nlohmann::json criterion_report_to_json(const CriterionReport& rep) {
    nlohmann::json cond3 = nlohmann::json::array();
    for (const auto& e : rep.cond3)
        cond3.push_back({{"N", e.N},
                         {"value", e.value},
                         {"threshold", e.threshold},
                         {"margin", e.margin}});
    nlohmann::json j{
        {"verdict", to_string(rep.verdict)},
        {"reason", rep.reason},
        {"horizon", {{"burn_in", rep.burn_in}, {"n_max", rep.horizon}}},
        {"d_min", rep.d_min},
        {"resolution", rep.resolution},
        {"cond1",
         {{"separated", rep.cond1.separated}, {"inf_d", rep.cond1.inf_d}}},
        {"cond2",
         {{"sup", rep.cond2.sup},
          {"tail_nonincreasing", rep.cond2.tail_nonincreasing}}},
        {"cond3", cond3},
        {"best_N", rep.best_N},
    };
    if (rep.verdict == Verdict::violates) j["violated_condition"] = rep.violated_condition;
    if (rep.cond1.witness)
        j["cond1"]["witness"] = {rep.cond1.witness->first, rep.cond1.witness->second};
    return j;
}

nlohmann::json report_header(const std::string& command, const nlohmann::json& config,
                             unsigned long long seed) {
    return {{"tool", "focklab"},
            {"version", kToolVersion},
            {"command", command},
            {"config", config},
            {"seed", seed}};
}

}  // namespace focklab
