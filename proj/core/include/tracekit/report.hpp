#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace tracekit {

/// One inequality check: left side, right side, their ratio, witness
/// parameters, and the verdict. Report-only checks (no principled
/// threshold) carry passed = nullopt.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs
    std::map<std::string, double> witness;
    std::optional<double> threshold;  // on the ratio
    std::optional<bool> passed;

    static BoundReport make(std::string name, double lhs, double rhs,
                            std::map<std::string, double> witness,
                            std::optional<double> threshold);

    nlohmann::json to_json() const;
};

}  // namespace tracekit
