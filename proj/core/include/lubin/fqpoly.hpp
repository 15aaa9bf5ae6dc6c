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

#include "lubin/smallfield.hpp"

namespace lubin::fqpoly {

// Dense polynomials over a SmallField, coefficients low to high.
using Poly = std::vector<fq_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const SmallField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

/// Remainder of a modulo monic g (g given with its leading 1 included).
inline Poly rem_monic(const SmallField& F, Poly a, const Poly& g) {
    const std::size_t n = g.size() - 1; // deg g
    trim(a);
    while (a.size() > n) {
        fq_t c = a.back();
        std::size_t shift = a.size() - 1 - n;
        if (c != 0)
            for (std::size_t j = 0; j < n; ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(c, g[j]));
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Poly mulmod(const SmallField& F, const Poly& a, const Poly& b, const Poly& g) {
    return rem_monic(F, mul(F, a, b), g);
}

inline Poly powmod(const SmallField& F, Poly base, std::uint64_t e, const Poly& g) {
    Poly out{1};
    base = rem_monic(F, std::move(base), g);
    while (e) {
        if (e & 1) out = mulmod(F, out, base, g);
        base = mulmod(F, base, base, g);
        e >>= 1;
    }
    return out;
}

inline Poly gcd(const SmallField& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // Make b monic, reduce a mod b.
        fq_t lead_inv = F.inv(b.back());
        for (auto& c : b) c = F.mul(c, lead_inv);
        a = rem_monic(F, std::move(a), b);
        std::swap(a, b);
    }
    return a;
}

/// Rabin irreducibility test for monic g of degree n >= 1.
inline bool is_irreducible(const SmallField& F, const Poly& g) {
    const std::size_t n = g.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const std::uint64_t q = F.q();
    Poly x{0, 1};
    // x^(q^n) must equal x mod g.
    Poly xq = x;
    std::vector<Poly> frob_chain; // x^(q^k) mod g for k = 1..n
    for (std::size_t k = 1; k <= n; ++k) {
        xq = powmod(F, xq, q, g);
        frob_chain.push_back(xq);
    }
    Poly diff = frob_chain[n - 1];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = F.sub(diff[1], 1);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(q^(n/l)) - x, g) must be constant for each prime l | n.
    for (std::size_t l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool is_prime = true;
        for (std::size_t d = 2; d * d <= l; ++d)
            if (l % d == 0) is_prime = false;
        if (!is_prime) continue;
        Poly d = frob_chain[n / l - 1];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = F.sub(d[1], 1);
        trim(d);
        Poly c = gcd(F, d, g);
        if (c.size() != 1) return false;
    }
    return true;
}

/// Lex-lowest monic irreducible of degree n over F: candidates are ordered
/// by the coefficient tuple (c_{n-1}, ..., c_0) ascending, elements of F
/// ordered by their integer encoding. Returns the n low coefficients
/// (the leading 1 is implicit).
inline std::vector<fq_t> lowest_irreducible(const SmallField& F, unsigned n) {
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    for (std::uint64_t k = 0; k < total; ++k) {
        Poly g(n + 1, 0);
        g[n] = 1;
        std::uint64_t rest = k;
        for (unsigned d = 0; d < n; ++d) { // c_0 varies fastest
            g[d] = static_cast<fq_t>(rest % q);
            rest /= q;
        }
        if (is_irreducible(F, g)) {
            g.pop_back();
            g.resize(n);
            return g;
        }
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

} // namespace lubin::fqpoly
