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

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lubin/poly.hpp"
#include "lubin/ring.hpp"

namespace lubin {

/// Exponent vector for up to three variables.
using Expo = std::array<unsigned, 3>;

inline unsigned expo_deg(const Expo& e) { return e[0] + e[1] + e[2]; }

/// Monomials of total degree <= D in t variables are stored densely,
/// ordered by (total degree, lexicographic ascending on the exponent
/// vector). The closed-form index functions below realize that order.
inline std::size_t monomial_count(unsigned t, unsigned D) {
    switch (t) {
        case 1: return D + 1;
        case 2: return static_cast<std::size_t>(D + 1) * (D + 2) / 2;
        default: return static_cast<std::size_t>(D + 1) * (D + 2) * (D + 3) / 6;
    }
}

inline std::size_t monomial_index(unsigned t, const Expo& e) {
    unsigned d = expo_deg(e);
    switch (t) {
        case 1: return e[0];
        case 2: return static_cast<std::size_t>(d) * (d + 1) / 2 + e[0];
        default: {
            std::size_t block = static_cast<std::size_t>(d) * (d + 1) * (d + 2) / 6;
            std::size_t within = static_cast<std::size_t>(e[0]) * (d + 1) -
                                 static_cast<std::size_t>(e[0]) * (e[0] - 1) / 2 + e[1];
            return block + (e[0] ? within : e[1]);
        }
    }
}

/// All exponents of degree exactly d, in index order.
inline std::vector<Expo> monomials_of_degree(unsigned t, unsigned d) {
    std::vector<Expo> out;
    if (t == 1) {
        out.push_back({d, 0, 0});
    } else if (t == 2) {
        for (unsigned a = 0; a <= d; ++a) out.push_back({a, d - a, 0});
    } else {
        for (unsigned a = 0; a <= d; ++a)
            for (unsigned b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
    }
    return out;
}

/// Truncated multivariate power series over O_L: dense in total degree,
/// immutable in spirit (operations return fresh values).
template <class B>
class TruncatedSeries {
public:
    using Elem = RingElem<B>;

    TruncatedSeries() = default;
    TruncatedSeries(const UnramifiedRing<B>* R, unsigned nvars, unsigned deg_cap)
        : R_(R), t_(nvars), D_(deg_cap),
          v_(monomial_count(nvars, deg_cap), R->zero()) {
        require(nvars >= 1 && nvars <= 3, "TruncatedSeries: 1..3 variables");
    }

    const UnramifiedRing<B>* ring() const { return R_; }
    unsigned nvars() const { return t_; }
    unsigned deg_cap() const { return D_; }

    const Elem& coeff(const Expo& e) const { return v_[monomial_index(t_, e)]; }
    void set(const Expo& e, Elem x) { v_[monomial_index(t_, e)] = std::move(x); }
    const std::vector<Elem>& raw() const { return v_; }
    std::vector<Elem>& raw() { return v_; }

    static TruncatedSeries variable(const UnramifiedRing<B>* R, unsigned nvars,
                                    unsigned deg_cap, unsigned which) {
        TruncatedSeries s(R, nvars, deg_cap);
        Expo e{0, 0, 0};
        e[which] = 1;
        s.set(e, R->one());
        return s;
    }

    static TruncatedSeries constant(const UnramifiedRing<B>* R, unsigned nvars,
                                    unsigned deg_cap, Elem c) {
        TruncatedSeries s(R, nvars, deg_cap);
        s.set({0, 0, 0}, std::move(c));
        return s;
    }

    /// Lift a one-variable polynomial (degree <= cap enforced by dropping).
    static TruncatedSeries from_poly(const Poly<B>& p, unsigned deg_cap) {
        TruncatedSeries s(p.ring(), 1, deg_cap);
        for (std::size_t i = 0; i < p.coeffs().size() && i <= deg_cap; ++i)
            s.v_[i] = p.coeffs()[i];
        return s;
    }

    Poly<B> to_poly() const {
        require(t_ == 1, "to_poly: one-variable series only");
        return Poly<B>(R_, v_);
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        auto [a, b] = aligned(*this, o);
        for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] = a.v_[i] + b.v_[i];
        return a;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        auto [a, b] = aligned(*this, o);
        for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] = a.v_[i] - b.v_[i];
        return a;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (auto& x : s.v_) x = -x;
        return s;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        auto [a, b] = aligned(*this, o);
        TruncatedSeries out(R_, a.t_, a.D_);
        const auto exps_a = all_exponents(a.t_, a.D_);
        for (std::size_t ia = 0; ia < a.v_.size(); ++ia) {
            if (R_->is_zero(a.v_[ia], a.v_[ia].prec)) continue;
            unsigned da = expo_deg(exps_a[ia]);
            for (std::size_t ib = 0; ib < b.v_.size(); ++ib) {
                unsigned db = expo_deg(exps_a[ib]);
                if (da + db > a.D_) continue;
                if (R_->is_zero(b.v_[ib], b.v_[ib].prec)) continue;
                Expo e{exps_a[ia][0] + exps_a[ib][0], exps_a[ia][1] + exps_a[ib][1],
                       exps_a[ia][2] + exps_a[ib][2]};
                std::size_t k = monomial_index(a.t_, e);
                out.v_[k] = out.v_[k] + a.v_[ia] * b.v_[ib];
            }
        }
        return out;
    }

    TruncatedSeries scaled(const Elem& c) const {
        TruncatedSeries s = *this;
        for (auto& x : s.v_) x = c * x;
        return s;
    }

    TruncatedSeries apply_frobenius(long i) const {
        TruncatedSeries s = *this;
        for (auto& x : s.v_) x = R_->frobenius(x, i);
        return s;
    }

    /// View a one-variable series as a series in `nvars` variables,
    /// supported on the chosen variable.
    TruncatedSeries embedded(unsigned nvars, unsigned var) const {
        require(t_ == 1, "embedded: one-variable series only");
        require(var < nvars, "embedded: variable out of range");
        TruncatedSeries out(R_, nvars, D_);
        for (unsigned k = 0; k <= D_; ++k) {
            Expo e{0, 0, 0};
            e[var] = k;
            out.set(e, v_[k]);
        }
        return out;
    }

    /// Restrict to a smaller degree cap.
    TruncatedSeries truncated(unsigned new_cap) const {
        require(new_cap <= D_, "truncated: cap must shrink");
        TruncatedSeries out(R_, t_, new_cap);
        const auto exps = all_exponents(t_, new_cap);
        for (std::size_t i = 0; i < out.v_.size(); ++i)
            out.v_[i] = v_[monomial_index(t_, exps[i])];
        return out;
    }

    bool zero_mod(unsigned k) const {
        for (const auto& x : v_)
            if (!R_->is_zero(x, k)) return false;
        return true;
    }

    bool congruent(const TruncatedSeries& o, unsigned k) const {
        unsigned cap = std::min(D_, o.D_);
        return (truncated(cap) - o.truncated(cap)).zero_mod(k);
    }

    /// Substitute X -> x for a one-variable series; exact modulo pi^N only
    /// when the cap is at least val(x) * N or the tail vanishes.
    Elem eval_1var(const Elem& x) const {
        require(t_ == 1, "eval_1var: one-variable series only");
        Elem acc = R_->with_prec(R_->zero(), x.prec);
        for (std::size_t i = v_.size(); i-- > 0;) acc = acc * x + v_[i];
        return acc;
    }

    /// F(x_1, ..., x_t) for ring elements of positive valuation.
    Elem eval_at(const std::vector<Elem>& xs) const {
        require(xs.size() == t_, "eval_at: wrong arity");
        std::vector<std::vector<Elem>> pows(t_);
        for (unsigned i = 0; i < t_; ++i) {
            pows[i].push_back(R_->with_prec(R_->one(), xs[i].prec));
            for (unsigned k = 1; k <= D_; ++k) pows[i].push_back(pows[i].back() * xs[i]);
        }
        Elem acc = R_->with_prec(R_->zero(), xs[0].prec);
        const auto exps = all_exponents(t_, D_);
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (R_->is_zero(v_[i], v_[i].prec)) continue;
            Elem term = v_[i];
            for (unsigned var = 0; var < t_; ++var)
                if (exps[i][var]) term = term * pows[var][exps[i][var]];
            acc = acc + term;
        }
        return acc;
    }

    /// Substitution outer(inner_1, ..., inner_t); inners must have zero
    /// constant term and agree in ring, arity and cap.
    TruncatedSeries compose(const std::vector<TruncatedSeries>& inners) const {
        require(inners.size() == t_, "compose: arity mismatch");
        unsigned cap = D_;
        for (const auto& in : inners) {
            if (in.ring() != R_) throw RingMismatch("compose: mixed rings");
            cap = std::min(cap, in.D_);
            if (!R_->is_zero(in.coeff({0, 0, 0}), std::min(in.coeff({0, 0, 0}).prec, R_->N())))
                throw NonzeroConstantTerm("compose: inner constant term");
        }
        unsigned tv = inners[0].t_;
        for (const auto& in : inners)
            require(in.t_ == tv, "compose: inners must share arity");
        // Cache powers of each inner up to the cap.
        std::vector<std::vector<TruncatedSeries>> pows(t_);
        for (unsigned i = 0; i < t_; ++i) {
            pows[i].push_back(constant(R_, tv, cap, R_->one()));
            for (unsigned k = 1; k <= D_; ++k)
                pows[i].push_back(pows[i].back() * inners[i].truncated(cap));
        }
        TruncatedSeries out(R_, tv, cap);
        const auto exps = all_exponents(t_, D_);
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (R_->is_zero(v_[i], v_[i].prec)) continue;
            TruncatedSeries term = pows[0][exps[i][0]];
            for (unsigned var = 1; var < t_; ++var)
                if (exps[i][var]) term = term * pows[var][exps[i][var]];
            out = out + term.scaled(v_[i]);
        }
        return out;
    }

    static const std::vector<Expo>& all_exponents(unsigned t, unsigned D);

private:
    static std::pair<TruncatedSeries, TruncatedSeries> aligned(const TruncatedSeries& a,
                                                               const TruncatedSeries& b) {
        if (a.R_ != b.R_) throw RingMismatch("series over different rings");
        require(a.t_ == b.t_, "series arity mismatch");
        unsigned cap = std::min(a.D_, b.D_);
        return {a.truncated(cap), b.truncated(cap)};
    }

    const UnramifiedRing<B>* R_ = nullptr;
    unsigned t_ = 1, D_ = 0;
    std::vector<Elem> v_;
};

/// Exponent tables, cached per (arity, cap). Read-only after first build;
/// guarded so concurrent readers are safe.
template <class B>
const std::vector<Expo>& TruncatedSeries<B>::all_exponents(unsigned t, unsigned D) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::vector<Expo>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t, D);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Expo> exps;
    exps.reserve(monomial_count(t, D));
    for (unsigned d = 0; d <= D; ++d)
        for (const auto& e : monomials_of_degree(t, d)) exps.push_back(e);
    return cache.emplace(key, std::move(exps)).first->second;
}

} // namespace lubin
