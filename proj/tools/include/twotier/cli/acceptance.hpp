/*
   Copyright 2026 The twotier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace twotier::cli {

struct AcceptanceOptions {
    std::uint64_t trials = 100000;  ///< per MC estimate
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::vector<std::string> only;  ///< empty runs every criterion
};

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

/// A1 .. A11 in order.
const std::vector<std::string>& criterion_ids();

/// Runs one criterion. Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options);

/// Runs the selected criteria, printing one `<id> PASS|FAIL <detail>` line
/// each as it finishes. Returns the number of failures.
int run_acceptance(const AcceptanceOptions& options, std::ostream& out);

}  // namespace twotier::cli
