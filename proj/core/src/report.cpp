#include "tracekit/report.hpp"

#include <limits>

namespace tracekit {

BoundReport BoundReport::make(std::string name, double lhs, double rhs,
                              std::map<std::string, double> witness,
                              std::optional<double> threshold) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs != 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity();
    r.witness = std::move(witness);
    r.threshold = threshold;
    if (threshold) r.passed = r.ratio <= *threshold;
    return r;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j{
        {"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"ratio", ratio},
        {"witness", witness},
    };
    j["threshold"] = threshold ? nlohmann::json(*threshold) : nlohmann::json(nullptr);
    j["passed"] = passed ? nlohmann::json(*passed) : nlohmann::json(nullptr);
    return j;
}

}  // namespace tracekit
