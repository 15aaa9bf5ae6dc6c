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
#include <vector>

#include "lubin/errors.hpp"

namespace lubin {

/// An element of a small finite field, encoded as an integer in [0, q).
/// For q = p^r the encoding is by base-p digits: the element
/// a_0 + a_1 s + ... + a_{r-1} s^{r-1} (s a fixed root of the canonical
/// degree-r irreducible over F_p) is encoded as sum a_i p^i.
using fq_t = std::uint16_t;

inline std::uint32_t ipow(unsigned base, unsigned e) {
    std::uint32_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

/// Arithmetic tables for F_q, q = p^r <= 2^16. Immutable after construction.
class SmallField {
public:
    SmallField() = default;

    SmallField(unsigned p, unsigned r) : p_(p), r_(r) {
        require(p >= 2 && r >= 1, "SmallField: need p >= 2, r >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < r; ++i) {
            q *= p;
            require(q <= 65536, "SmallField: q = p^r exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (r_ > 1) {
            modulus_ = lowest_irreducible(p, r);
            build_log_tables();
        }
    }

    unsigned p() const { return p_; }
    unsigned r() const { return r_; }
    std::uint32_t q() const { return q_; }

    /// Coefficients of the canonical modulus (degree r, monic), low to high.
    /// Empty when r = 1.
    const std::vector<fq_t>& modulus() const { return modulus_; }

    fq_t add(fq_t a, fq_t b) const {
        if (r_ == 1) return static_cast<fq_t>((a + b) % p_);
        fq_t out = 0;
        std::uint32_t mul = 1;
        for (unsigned i = 0; i < r_; ++i) {
            unsigned da = (a / mul) % p_, db = (b / mul) % p_;
            out = static_cast<fq_t>(out + ((da + db) % p_) * mul);
            mul *= p_;
        }
        return out;
    }

    fq_t neg(fq_t a) const {
        if (r_ == 1) return static_cast<fq_t>(a == 0 ? 0 : p_ - a);
        fq_t out = 0;
        std::uint32_t mul = 1;
        for (unsigned i = 0; i < r_; ++i) {
            unsigned da = (a / mul) % p_;
            out = static_cast<fq_t>(out + (da == 0 ? 0 : p_ - da) * mul);
            mul *= p_;
        }
        return out;
    }

    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

    fq_t mul(fq_t a, fq_t b) const {
        if (r_ == 1) return static_cast<fq_t>((std::uint32_t(a) * b) % p_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    fq_t inv(fq_t a) const {
        if (a == 0) throw InvalidArgument("SmallField: inverse of zero");
        if (r_ == 1) return pow(a, p_ - 2);
        std::uint32_t e = (q_ - 1 - log_[a]) % (q_ - 1);
        return exp_[e];
    }

    fq_t pow(fq_t a, std::uint64_t e) const {
        fq_t out = 1, base = a;
        while (e) {
            if (e & 1) out = mul(out, base);
            base = mul(base, base);
            e >>= 1;
        }
        return out;
    }

    /// Scalar action of an F_p digit (0 <= c < p) on a field element.
    fq_t scale_fp(unsigned c, fq_t a) const {
        fq_t out = 0;
        for (unsigned i = 0; i < c % p_; ++i) out = add(out, a);
        return out;
    }

    /// The canonical lex-lowest monic irreducible of degree r over F_p,
    /// coefficients low to high (without the leading 1). Used both for
    /// this field's own modulus and by callers constructing extensions.
    static std::vector<fq_t> lowest_irreducible(unsigned p, unsigned r);

private:
    void build_log_tables();

    unsigned p_ = 2, r_ = 1;
    std::uint32_t q_ = 2;
    std::vector<fq_t> modulus_;       // low coeffs of the degree-r modulus
    std::vector<fq_t> exp_, log_;     // discrete log tables (r > 1)
};

} // namespace lubin
