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

#include "twotier/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace twotier::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

bool parse_double(std::string_view text, double& out)
{
    text = trim(text);
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

SystemParams parse_config(std::istream& in, const std::string& source)
{
    SystemParams params;
    std::set<std::string> seen;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto where = [&] { return source + ":" + std::to_string(number) + ": "; };
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where() + "expected 'key = value'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view text = trim(view.substr(eq + 1));
        if (!is_param_key(key)) {
            throw ConfigError(where() + "unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ConfigError(where() + "duplicate key '" + key + "'");
        }
        double value = 0;
        if (!parse_double(text, value)) {
            throw ConfigError(where() + "cannot parse '" + std::string(text) +
                              "' as a number for key '" + key + "'");
        }
        try {
            set_param(params, key, value);
        } catch (const std::domain_error& e) {
            throw std::domain_error(where() + e.what());
        }
    }
    params.validate();
    return params;
}

SystemParams load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in, path);
}

}  // namespace twotier::cli
