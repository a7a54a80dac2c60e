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

#include "twotier/cli/csv.hpp"

#include <array>
#include <charconv>

namespace twotier::cli {

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf.data(), ptr);
}

void write_csv_header(std::ostream& out)
{
    out << "param,value,estimator,trials,effective_trials,p_hat,stderr,"
           "bound_lower,bound_upper,bound_lower_raw,bound_upper_raw,seed\n";
}

void write_csv_row(std::ostream& out, const CsvRow& row)
{
    out << row.param << ',' << row.value << ',' << row.estimator << ',' << row.trials
        << ',' << row.effective_trials << ',' << format_double(row.p_hat) << ','
        << format_double(row.std_error) << ',' << format_double(row.bound_lower) << ','
        << format_double(row.bound_upper) << ',' << format_double(row.bound_lower_raw)
        << ',' << format_double(row.bound_upper_raw) << ',' << row.seed << '\n';
}

}  // namespace twotier::cli
