// Copyright 2026 The dressedphase Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dressed {

using ReportValue = std::variant<std::int64_t, double, std::string>;

/// observed vs expected with an absolute tolerance
struct Check {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ScenarioReport {
    std::string scenarioName;
    std::map<std::string, ReportValue> inputs;
    std::map<std::string, ReportValue> outputs;
    std::vector<Check> checks;

    void add_check(std::string name, double expected, double observed, double tolerance) {
        const bool ok = std::isfinite(observed) && std::abs(observed - expected) <= tolerance;
        checks.push_back({std::move(name), expected, observed, tolerance, ok});
    }

    [[nodiscard]] bool all_passed() const {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] const Check &check(const std::string &name) const {
        for (const auto &c : checks) {
            if (c.name == name) {
                return c;
            }
        }
        throw std::out_of_range("ScenarioReport: no check named " + name);
    }

    [[nodiscard]] double output(const std::string &key) const {
        const auto &v = outputs.at(key);
        if (const auto *d = std::get_if<double>(&v)) {
            return *d;
        }
        if (const auto *i = std::get_if<std::int64_t>(&v)) {
            return static_cast<double>(*i);
        }
        throw std::invalid_argument("ScenarioReport: output " + key + " is not numeric");
    }

    /// Every numeric output and check value must be finite.
    void validate() const {
        for (const auto &[key, value] : outputs) {
            if (const auto *d = std::get_if<double>(&value); d && !std::isfinite(*d)) {
                throw std::runtime_error("ScenarioReport: output " + key + " is not finite");
            }
        }
        for (const auto &c : checks) {
            if (!std::isfinite(c.observed) || !std::isfinite(c.expected)) {
                throw std::runtime_error("ScenarioReport: check " + c.name + " is not finite");
            }
        }
    }
};

} // namespace dressed
