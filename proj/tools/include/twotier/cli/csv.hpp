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

namespace twotier::cli {

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_double(double value);

struct CsvRow {
    std::string param;
    std::string value;
    std::string estimator;
    std::uint64_t trials = 0;            ///< realizations generated
    std::uint64_t effective_trials = 0;  ///< accepted after conditioning
    double p_hat = 0;
    double std_error = 0;
    double bound_lower = 0;
    double bound_upper = 0;
    double bound_lower_raw = 0;
    double bound_upper_raw = 0;
    std::uint64_t seed = 0;
};

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CsvRow& row);

}  // namespace twotier::cli
