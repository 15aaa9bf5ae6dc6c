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
#include "lubin/smallfield.hpp"

#include <algorithm>

#include "lubin/fqpoly.hpp"

namespace lubin {

std::vector<fq_t> SmallField::lowest_irreducible(unsigned p, unsigned r) {
    SmallField fp(p, 1);
    return fqpoly::lowest_irreducible(fp, r);
}

void SmallField::build_log_tables() {
    // Find a multiplicative generator by trial, then tabulate.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    auto mul_raw = [&](fq_t a, fq_t b) {
        // Polynomial multiplication mod the modulus, digit encoding base p.
        std::vector<unsigned> prod(2 * r_ - 1, 0);
        for (unsigned i = 0; i < r_; ++i) {
            unsigned ai = (a / ipow(p_, i)) % p_;
            if (!ai) continue;
            for (unsigned j = 0; j < r_; ++j) {
                unsigned bj = (b / ipow(p_, j)) % p_;
                prod[i + j] = (prod[i + j] + ai * bj) % p_;
            }
        }
        // Reduce: s^r = -modulus_[0..r-1].
        for (unsigned d = 2 * r_ - 2; d >= r_; --d) {
            unsigned c = prod[d];
            if (c) {
                prod[d] = 0;
                for (unsigned j = 0; j < r_; ++j) {
                    unsigned m = modulus_[j];
                    prod[d - r_ + j] = (prod[d - r_ + j] + c * (p_ - m) % p_ * 1u) % p_;
                }
            }
        }
        fq_t out = 0;
        for (unsigned j = 0; j < r_; ++j)
            out = static_cast<fq_t>(out + prod[j] * ipow(p_, j));
        return out;
    };
    for (fq_t cand = 1; cand < q_; ++cand) {
        fq_t x = cand;
        std::uint32_t order = 1;
        while (x != 1) {
            x = mul_raw(x, cand);
            ++order;
            if (order > q_) throw Error("SmallField: generator search diverged");
        }
        if (order == q_ - 1) {
            fq_t cur = 1;
            for (std::uint32_t e = 0; e < q_ - 1; ++e) {
                exp_[e] = cur;
                log_[cur] = static_cast<fq_t>(e);
                cur = mul_raw(cur, cand);
            }
            return;
        }
    }
    throw Error("SmallField: no generator found");
}

} // namespace lubin
