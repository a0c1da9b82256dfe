#include "macshift/report.hpp"

#include <json.hpp>

namespace macshift {

std::string Report::to_json(bool with_elapsed) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json inst;
    if (!instance.mu.empty()) inst["mu"] = instance.mu;
    if (!instance.nu.empty()) inst["nu"] = instance.nu;
    if (!instance.lambda.empty()) inst["lambda"] = instance.lambda;
    if (instance.n > 0) inst["n"] = instance.n;
    if (!instance.theta.empty()) inst["theta"] = instance.theta;
    if (instance.k > 0) inst["k"] = instance.k;
    j["instance"] = inst;
    j["status"] = pass ? "pass" : "fail";
    if (witness) {
        j["witness"] = {{"where", witness->where}, {"lhs", witness->lhs}, {"rhs", witness->rhs}};
    }
    if (with_elapsed) j["elapsed_ms"] = elapsed.count();
    return j.dump();
}

} // namespace macshift
