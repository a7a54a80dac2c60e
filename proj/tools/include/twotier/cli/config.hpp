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

#include <istream>
#include <stdexcept>
#include <string>

#include "twotier/params.hpp"

namespace twotier::cli {

/// Malformed or unreadable configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses flat `key = value` text. Blank lines and `#` comments are skipped;
/// keys not present keep their defaults. Throws ConfigError with the line
/// number on unknown keys or bad numbers, and std::domain_error naming the
/// key when the result is out of range.
SystemParams parse_config(std::istream& in, const std::string& source = "<config>");

SystemParams load_config(const std::string& path);

/// Strict double parse of the whole string (surrounding blanks allowed).
bool parse_double(std::string_view text, double& out);

}  // namespace twotier::cli
