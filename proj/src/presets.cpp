#include "stirling/presets.hpp"

#include <functional>
#include <stdexcept>

namespace stirling {

namespace {

using ParamMap = std::map<std::string, Rational>;

struct PresetDef {
    PresetInfo info;
    std::function<ParameterTriple(const ParamMap&)> build;
};

const std::vector<PresetDef>& defs() {
    static const std::vector<PresetDef> table = {
        {{"classical-first-kind", {}, true, "signed Stirling numbers of the first kind"},
         [](const ParamMap&) { return ParameterTriple{Rational(1), Rational(0), Rational(0)}; }},
        {{"classical-second-kind", {}, true, "Stirling numbers of the second kind"},
         [](const ParamMap&) { return ParameterTriple{Rational(0), Rational(1), Rational(0)}; }},
        {{"binomial", {}, true, "binomial coefficients C(n,k)"},
         [](const ParamMap&) { return ParameterTriple{Rational(0), Rational(0), Rational(1)}; }},
        {{"lah", {}, true, "Lah numbers n! C(n-1,k-1) / k!"},
         [](const ParamMap&) { return ParameterTriple{Rational(-1), Rational(1), Rational(0)}; }},
        {{"signless", {}, true, "signless Stirling numbers of the first kind"},
         [](const ParamMap&) { return ParameterTriple{Rational(-1), Rational(0), Rational(0)}; }},
        {{"carlitz-degenerate", {"theta"}, true, "Carlitz degenerate Stirling numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(1), p.at("theta"), Rational(0)}; }},
        {{"carlitz-weighted", {"lambda"}, true, "Carlitz weighted Stirling numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(1), Rational(0), -p.at("lambda")}; }},
        {{"howard", {"theta", "lambda"}, true, "Howard degenerate weighted Stirling numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(1), p.at("theta"), -p.at("lambda")}; }},
        {{"gould-hopper", {"a", "b"}, true, "Gould-Hopper noncentral Lah numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(0), Rational(1), p.at("b") - p.at("a")}; }},
        {{"charalambides-koutras", {"s", "a", "b"}, true, "Charalambides-Koutras noncentral C-numbers"},
         [](const ParamMap& p) {
             if (p.at("s").is_zero())
                 throw precondition_error("charalambides-koutras requires s != 0");
             return ParameterTriple{Rational(1) / p.at("s"), Rational(1), p.at("b") - p.at("a")};
         }},
        {{"riordan-noncentral", {"a", "b"}, true, "Riordan noncentral difference coefficients"},
         [](const ParamMap& p) { return ParameterTriple{Rational(1), Rational(0), p.at("b") - p.at("a")}; }},
        {{"tsylova", {"alpha", "beta"}, true, "Tsylova generalized Stirling numbers"},
         [](const ParamMap& p) { return ParameterTriple{p.at("alpha"), p.at("beta"), Rational(0)}; }},
        {{"todorov", {"x"}, false, "Todorov numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(1), p.at("x"), Rational(0)}; }},
        {{"ahuja-enneking", {"r"}, false, "Ahuja-Enneking associated Lah numbers"},
         [](const ParamMap& p) {
             if (p.at("r").is_zero())
                 throw precondition_error("ahuja-enneking requires r != 0");
             return ParameterTriple{Rational(-1) / p.at("r"), Rational(1), Rational(0)};
         }},
        {{"broder-r", {"r"}, false, "Broder r-Stirling numbers"},
         [](const ParamMap& p) { return ParameterTriple{Rational(-1), Rational(0), p.at("r")}; }},
    };
    return table;
}

}  // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> infos = [] {
        std::vector<PresetInfo> out;
        for (const auto& d : defs()) out.push_back(d.info);
        return out;
    }();
    return infos;
}

PresetTriple preset_lookup(const std::string& name, const ParamMap& params) {
    for (const auto& d : defs()) {
        if (d.info.name != name) continue;
        if (params.size() != d.info.params.size())
            throw std::invalid_argument("preset " + name + " takes " +
                                        std::to_string(d.info.params.size()) + " parameter(s)");
        for (const auto& p : d.info.params)
            if (params.find(p) == params.end())
                throw std::invalid_argument("preset " + name + " needs parameter " + p);
        PresetTriple out;
        out.triple = d.build(params);
        if (d.info.has_dual) out.dual = dual_triple(out.triple);
        return out;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace stirling
