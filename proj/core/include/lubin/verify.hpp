/* Copyright (C) 2026 the lubin authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lubin {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct VerifyOptions {
    std::optional<unsigned> p_filter; // restrict to fixtures with this p
    std::optional<unsigned> m_filter; // restrict to fixtures with level <= m
    std::uint64_t seed = 0;
};

/// The named suites: axioms, module-law, torsion, coleman, norms,
/// ramification, artin, relative, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Run one suite (or "all"); results are deterministic for a fixed seed and
/// ordered by item name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace lubin
