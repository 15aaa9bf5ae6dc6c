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
#include "lubin/base.hpp"

#include <sstream>

namespace lubin {

std::string LaurentBase::coeff_to_string(const Coeff& a, unsigned trust) const {
    std::string out;
    for (unsigned i = std::min(trust, store_); i-- > 0;) {
        if (!a[i]) continue;
        if (!out.empty()) out += "+";
        if (a[i] != 1 || i == 0) out += std::to_string(a[i]);
        if (i >= 1) {
            if (a[i] != 1) out += "*";
            out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

LaurentBase::Coeff LaurentBase::coeff_from_string(const std::string& s) const {
    Coeff c = zero();
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty()) continue;
        unsigned long coeff = 1, power = 0;
        auto tpos = term.find('t');
        std::string num = term.substr(0, tpos == std::string::npos ? term.size() : tpos);
        while (!num.empty() && (num.back() == '*' || num.back() == ' ')) num.pop_back();
        if (!num.empty()) coeff = std::stoul(num);
        if (tpos != std::string::npos) {
            power = 1;
            auto cpos = term.find('^', tpos);
            if (cpos != std::string::npos) power = std::stoul(term.substr(cpos + 1));
        }
        require(coeff < fq_.q(), "t-coefficient out of range for F_q");
        if (power < store_) c[power] = fq_.add(c[power], static_cast<fq_t>(coeff));
    }
    return c;
}

} // namespace lubin
