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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "lubin/errors.hpp"
#include "lubin/smallfield.hpp"

namespace lubin {

enum class FieldKind { PAdic, PowerSeries };

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Shared parameters of the base local field K: either Q_p (kind PAdic,
/// r = 1) or F_q((t)) with q = p^r (kind PowerSeries). N is the contract
/// precision: elements of O_K are asserted and compared modulo pi^N.
struct BaseFieldConfig {
    FieldKind kind = FieldKind::PAdic;
    unsigned p = 2;
    unsigned r = 1;
    unsigned N = 12;

    void validate() const {
        require(is_prime(p), "BaseFieldConfig: p must be prime");
        require(N >= 1, "BaseFieldConfig: N must be >= 1");
        require(r >= 1, "BaseFieldConfig: r must be >= 1");
        if (kind == FieldKind::PAdic)
            require(r == 1, "BaseFieldConfig: r = 1 required for the p-adic kind");
    }

    std::uint32_t q() const { return ipow(p, r); }
};

/// O_K = Z_p with coefficients stored modulo p^S, where S = N + headroom is
/// the internal storage precision. A coefficient is a canonical residue in
/// [0, p^S); how much of it is trusted is tracked by the element layer.
class PadicBase {
public:
    using Coeff = boost::multiprecision::cpp_int;

    PadicBase() = default;
    PadicBase(const BaseFieldConfig& cfg, unsigned store_N)
        : cfg_(cfg), store_(store_N), fq_(cfg.p, 1) {
        cfg_.validate();
        require(cfg.kind == FieldKind::PAdic, "PadicBase: wrong kind");
        pipows_.reserve(store_ + 1);
        pipows_.push_back(1);
        for (unsigned i = 0; i < store_; ++i) pipows_.push_back(pipows_.back() * cfg_.p);
        modulus_ = pipows_.back();
    }

    const BaseFieldConfig& config() const { return cfg_; }
    unsigned store_N() const { return store_; }
    const SmallField& fq() const { return fq_; }

    Coeff zero() const { return 0; }
    Coeff one() const { return 1; }

    Coeff from_int(long long v) const {
        Coeff c = v;
        c %= modulus_;
        if (c < 0) c += modulus_;
        return c;
    }

    Coeff add(const Coeff& a, const Coeff& b) const {
        Coeff c = a + b;
        if (c >= modulus_) c -= modulus_;
        return c;
    }
    Coeff sub(const Coeff& a, const Coeff& b) const {
        Coeff c = a - b;
        if (c < 0) c += modulus_;
        return c;
    }
    Coeff neg(const Coeff& a) const { return a == 0 ? Coeff(0) : modulus_ - a; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return (a * b) % modulus_; }

    bool is_zero(const Coeff& a) const { return a == 0; }

    /// Congruence modulo pi^k (k <= store precision).
    bool congruent(const Coeff& a, const Coeff& b, unsigned k) const {
        if (k == 0) return true;
        return (a - b) % pi_pow(k) == 0;
    }

    /// pi-adic valuation, capped at the storage precision (returned for 0).
    unsigned val(const Coeff& a) const {
        if (a == 0) return store_;
        unsigned v = 0;
        Coeff x = a;
        while (x % cfg_.p == 0) {
            x /= cfg_.p;
            ++v;
        }
        return v;
    }

    /// Exact shift down by pi (the dropped digit is discarded; the element
    /// layer accounts for the precision loss).
    Coeff div_pi(const Coeff& a) const { return a / cfg_.p; }

    Coeff mul_pi_pow(const Coeff& a, unsigned k) const {
        return (a * pi_pow(k)) % modulus_;
    }

    const Coeff& pi_pow(unsigned k) const {
        require(k <= store_, "pi_pow beyond storage precision");
        return pipows_[k];
    }

    fq_t residue(const Coeff& a) const {
        return static_cast<fq_t>(static_cast<std::uint32_t>(a % cfg_.p));
    }
    Coeff lift(fq_t rep) const { return Coeff(rep % cfg_.p); }

    /// Inverse of a unit, by Hensel lifting of the residue inverse.
    Coeff inv_unit(const Coeff& a) const {
        if (a % cfg_.p == 0) throw NotAUnit("PadicBase: inverse of non-unit");
        Coeff x = from_int(fq_.inv(residue(a)));
        // x <- x(2 - ax); precision doubles per step.
        for (unsigned k = 1; k < store_; k *= 2)
            x = mul(x, sub(from_int(2), mul(a, x)));
        return x;
    }

    std::string coeff_to_string(const Coeff& a, unsigned trust) const {
        Coeff reduced = a % pi_pow(trust);
        return reduced.str();
    }

    Coeff coeff_from_string(const std::string& s) const {
        Coeff c(s);
        c %= modulus_;
        if (c < 0) c += modulus_;
        return c;
    }

    std::string pi_symbol() const { return std::to_string(cfg_.p); }

private:
    BaseFieldConfig cfg_;
    unsigned store_ = 1;
    SmallField fq_;
    Coeff modulus_;
    std::vector<Coeff> pipows_;
};

/// O_K = F_q[[t]] truncated at t^S. Coefficients are vectors of F_q digits,
/// little-endian in t, always of length exactly S.
class LaurentBase {
public:
    using Coeff = std::vector<fq_t>;

    LaurentBase() = default;
    LaurentBase(const BaseFieldConfig& cfg, unsigned store_N)
        : cfg_(cfg), store_(store_N), fq_(cfg.p, cfg.r) {
        cfg_.validate();
        require(cfg.kind == FieldKind::PowerSeries, "LaurentBase: wrong kind");
    }

    const BaseFieldConfig& config() const { return cfg_; }
    unsigned store_N() const { return store_; }
    const SmallField& fq() const { return fq_; }

    Coeff zero() const { return Coeff(store_, 0); }
    Coeff one() const {
        Coeff c(store_, 0);
        c[0] = 1;
        return c;
    }

    /// Integers land in the prime subfield F_p (t-degree 0).
    Coeff from_int(long long v) const {
        long long m = v % static_cast<long long>(cfg_.p);
        if (m < 0) m += cfg_.p;
        Coeff c(store_, 0);
        c[0] = fq_.scale_fp(static_cast<unsigned>(m), 1);
        return c;
    }

    Coeff add(const Coeff& a, const Coeff& b) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i < store_; ++i) c[i] = fq_.add(a[i], b[i]);
        return c;
    }
    Coeff sub(const Coeff& a, const Coeff& b) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i < store_; ++i) c[i] = fq_.sub(a[i], b[i]);
        return c;
    }
    Coeff neg(const Coeff& a) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i < store_; ++i) c[i] = fq_.neg(a[i]);
        return c;
    }
    Coeff mul(const Coeff& a, const Coeff& b) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i < store_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; i + j < store_; ++j)
                if (b[j]) c[i + j] = fq_.add(c[i + j], fq_.mul(a[i], b[j]));
        }
        return c;
    }

    bool is_zero(const Coeff& a) const {
        for (auto d : a)
            if (d) return false;
        return true;
    }

    bool congruent(const Coeff& a, const Coeff& b, unsigned k) const {
        for (unsigned i = 0; i < k && i < store_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }

    unsigned val(const Coeff& a) const {
        for (unsigned i = 0; i < store_; ++i)
            if (a[i]) return i;
        return store_;
    }

    Coeff div_pi(const Coeff& a) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i + 1 < store_; ++i) c[i] = a[i + 1];
        return c;
    }

    Coeff mul_pi_pow(const Coeff& a, unsigned k) const {
        Coeff c(store_, 0);
        for (unsigned i = 0; i + k < store_; ++i) c[i + k] = a[i];
        return c;
    }

    fq_t residue(const Coeff& a) const { return a[0]; }
    Coeff lift(fq_t rep) const {
        Coeff c(store_, 0);
        c[0] = rep;
        return c;
    }

    Coeff inv_unit(const Coeff& a) const {
        if (!a[0]) throw NotAUnit("LaurentBase: inverse of non-unit");
        // Standard power series inversion, digit by digit.
        Coeff c(store_, 0);
        fq_t inv0 = fq_.inv(a[0]);
        c[0] = inv0;
        for (unsigned k = 1; k < store_; ++k) {
            fq_t acc = 0;
            for (unsigned j = 1; j <= k; ++j) acc = fq_.add(acc, fq_.mul(a[j], c[k - j]));
            c[k] = fq_.neg(fq_.mul(acc, inv0));
        }
        return c;
    }

    std::string coeff_to_string(const Coeff& a, unsigned trust) const;
    Coeff coeff_from_string(const std::string& s) const;

    std::string pi_symbol() const { return "t"; }

private:
    BaseFieldConfig cfg_;
    unsigned store_ = 1;
    SmallField fq_;
};

} // namespace lubin
