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

#include <json.hpp>

#include "lubin/series.hpp"

namespace lubin {

/// Fixed emission schema:
/// {"vars":v,"deg_cap":D,"prec":N,"terms":[{"exp":[..],"coeff":"..."}]}
/// with terms sorted by (total degree, lex) and zero terms omitted.
template <class B>
nlohmann::json series_to_json(const TruncatedSeries<B>& s) {
    const auto* R = s.ring();
    nlohmann::json terms = nlohmann::json::array();
    const auto& exps = TruncatedSeries<B>::all_exponents(s.nvars(), s.deg_cap());
    for (std::size_t i = 0; i < s.raw().size(); ++i) {
        const auto& c = s.raw()[i];
        if (R->is_zero(c, std::min(c.prec, R->N()))) continue;
        nlohmann::json exp = nlohmann::json::array();
        for (unsigned v = 0; v < s.nvars(); ++v) exp.push_back(exps[i][v]);
        terms.push_back({{"exp", exp}, {"coeff", R->to_string(R->with_prec(c, std::min(c.prec, R->N())))}});
    }
    return nlohmann::json{{"vars", s.nvars()},
                          {"deg_cap", s.deg_cap()},
                          {"prec", R->N()},
                          {"terms", terms}};
}

} // namespace lubin
