#include "dioph/model_json.hpp"

#include <sstream>

namespace dioph {

nlohmann::ordered_json model_to_json(const SurfaceModel& s) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["variables"] = s.vars;
    j["weights"] = s.weights;
    nlohmann::ordered_json consts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.constants) consts[k] = v.str();
    j["constants"] = consts;
    nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
    for (const auto& eq : s.equations) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::object();
        for (const auto& [exps, coeff] : eq.terms()) {
            std::ostringstream key;
            for (size_t i = 0; i < exps.size(); ++i) {
                if (i) key << ",";
                key << exps[i];
            }
            terms[key.str()] = coeff.str();
        }
        eqs.push_back(terms);
    }
    j["equations"] = eqs;
    return j;
}

}  // namespace dioph
