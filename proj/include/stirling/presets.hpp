#pragma once

// Named parameter triples for the classical special cases, some carrying
// free parameters supplied at lookup time.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stirling/triple.hpp"

namespace stirling {

struct PresetInfo {
    std::string name;
    std::vector<std::string> params;  // free parameter names, in order
    bool has_dual;
    std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

struct PresetTriple {
    ParameterTriple triple;
    std::optional<ParameterTriple> dual;
};

// Instantiate a preset. Parameterized presets require every parameter in
// their list; unknown names or missing/extra parameters are rejected.
PresetTriple preset_lookup(const std::string& name,
                           const std::map<std::string, Rational>& params = {});

}  // namespace stirling
