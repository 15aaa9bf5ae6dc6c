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

#include "lubin/ring.hpp"

namespace lubin {

/// Dense one-variable polynomial over O_L; coefficients low to high.
/// Arithmetic is exact (no degree truncation) -- this is the tool for the
/// iterates f_m and for torsion-quotient divisions.
template <class B>
class Poly {
public:
    using Elem = RingElem<B>;

    Poly() = default;
    explicit Poly(const UnramifiedRing<B>* R) : R_(R) {}
    Poly(const UnramifiedRing<B>* R, std::vector<Elem> coeffs)
        : R_(R), c_(std::move(coeffs)) {}

    const UnramifiedRing<B>* ring() const { return R_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    std::vector<Elem>& coeffs() { return c_; }
    bool empty() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Elem& operator[](std::size_t i) const { return c_[i]; }

    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R_->zero(); }

    static Poly x(const UnramifiedRing<B>* R) {
        return Poly(R, {R->zero(), R->one()});
    }
    static Poly constant(const UnramifiedRing<B>* R, Elem v) {
        return Poly(R, {std::move(v)});
    }
    static Poly from_ints(const UnramifiedRing<B>* R, const std::vector<long long>& v) {
        std::vector<Elem> coeffs;
        coeffs.reserve(v.size());
        for (auto x : v) coeffs.push_back(R->from_int(x));
        return Poly(R, std::move(coeffs));
    }

    /// Drop trailing coefficients that vanish to full trusted depth.
    void trim() {
        while (!c_.empty() && R_->is_zero(c_.back(), c_.back().prec)) c_.pop_back();
    }

    Poly operator+(const Poly& o) const {
        std::vector<Elem> v;
        std::size_t m = std::max(c_.size(), o.c_.size());
        v.reserve(m);
        for (std::size_t i = 0; i < m; ++i) v.push_back(coeff(i) + o.coeff(i));
        return Poly(R_, std::move(v));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Elem> v;
        std::size_t m = std::max(c_.size(), o.c_.size());
        v.reserve(m);
        for (std::size_t i = 0; i < m; ++i) v.push_back(coeff(i) - o.coeff(i));
        return Poly(R_, std::move(v));
    }
    Poly operator-() const {
        std::vector<Elem> v;
        for (const auto& x : c_) v.push_back(-x);
        return Poly(R_, std::move(v));
    }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly(R_);
        std::vector<Elem> v(c_.size() + o.c_.size() - 1, R_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return Poly(R_, std::move(v));
    }

    Poly scaled(const Elem& s) const {
        std::vector<Elem> v;
        for (const auto& x : c_) v.push_back(s * x);
        return Poly(R_, std::move(v));
    }

    Elem eval(const Elem& x) const {
        Elem acc = R_->with_prec(R_->zero(), x.prec);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// p(q(X)), exact.
    Poly compose(const Poly& inner) const {
        Poly acc(R_);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner;
            acc = acc + constant(R_, c_[i]);
        }
        return acc;
    }

    Poly frobenius(long i) const {
        std::vector<Elem> v;
        for (const auto& x : c_) v.push_back(R_->frobenius(x, i));
        return Poly(R_, std::move(v));
    }

    Poly derivative() const {
        std::vector<Elem> v;
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(R_->scale(R_->base().from_int(static_cast<long long>(i)), c_[i]));
        return Poly(R_, std::move(v));
    }

    /// j-th Hasse derivative D_j: sum over k >= j of binomial(k, j) c_k X^{k-j}.
    Poly hasse(unsigned j) const {
        std::vector<Elem> v;
        for (std::size_t k = j; k < c_.size(); ++k) {
            std::uint64_t bin = binomial(k, j);
            v.push_back(R_->scale(R_->base().from_int(static_cast<long long>(bin)), c_[k]));
        }
        return Poly(R_, std::move(v));
    }

    /// Division by a monic divisor: returns (quotient, remainder), exact.
    std::pair<Poly, Poly> divmod_monic(const Poly& d) const {
        require(!d.c_.empty(), "divmod_monic: empty divisor");
        const std::size_t dd = d.c_.size() - 1;
        require(R_->congruent(d.c_[dd], R_->one(), d.c_[dd].prec), "divmod_monic: divisor not monic");
        std::vector<Elem> rem = c_;
        std::vector<Elem> quot;
        if (rem.size() > dd) quot.assign(rem.size() - dd, R_->zero());
        while (rem.size() > dd) {
            Elem lead = rem.back();
            std::size_t shift = rem.size() - 1 - dd;
            quot[shift] = lead;
            for (std::size_t j = 0; j < dd; ++j)
                rem[shift + j] = rem[shift + j] - lead * d.c_[j];
            rem.pop_back();
        }
        return {Poly(R_, std::move(quot)), Poly(R_, std::move(rem))};
    }

    static std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
        if (k > n) return 0;
        k = std::min(k, n - k);
        // Small arguments only (degrees at desk scale); overflow-checked.
        unsigned __int128 acc = 1;
        for (std::uint64_t i = 1; i <= k; ++i) {
            acc = acc * (n - k + i) / i;
            require(acc < (static_cast<unsigned __int128>(1) << 62), "binomial overflow");
        }
        return static_cast<std::uint64_t>(acc);
    }

private:
    const UnramifiedRing<B>* R_ = nullptr;
    std::vector<Elem> c_;
};

} // namespace lubin
