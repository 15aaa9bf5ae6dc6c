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

#include <vector>

#include "lubin/series.hpp"

namespace lubin {

/// Check the Lubin-Tate shape: f == pi X (mod deg 2) and f == X^q (mod pi),
/// with zero constant term. Returns the linear coefficient as a field
/// element (valuation 1).
template <class B>
FieldElem<B> validate_lt_shape(const Poly<B>& f) {
    const auto* R = f.ring();
    const unsigned q = R->q();
    require(f.degree() >= 1, "lt shape: need degree >= 1");
    if (!R->is_zero(f.coeff(0), std::min(f.coeff(0).prec, R->N())))
        throw InvalidArgument("lt shape: constant term must vanish");
    auto pi = R->to_field(f.coeff(1));
    if (pi.zero || pi.val != 1)
        throw NotAUniformizer("lt shape: linear coefficient must have valuation 1");
    for (long k = 2; k <= f.degree(); ++k) {
        if (static_cast<unsigned>(k) == q) {
            if (!R->congruent(f.coeff(k), R->with_prec(R->one(), f.coeff(k).prec), 1))
                throw InvalidArgument("lt shape: X^q coefficient must be 1 mod pi");
        } else if (!R->is_zero(f.coeff(k), 1)) {
            throw InvalidArgument("lt shape: coefficient not divisible by pi");
        }
    }
    if (f.degree() < static_cast<long>(q))
        throw InvalidArgument("lt shape: f must reach degree q");
    return pi;
}

namespace detail {

/// Multiply a t-variable series by a one-variable polynomial regarded as a
/// polynomial in variable `var`; truncation at the series cap.
template <class B>
TruncatedSeries<B> mul_by_univariate(const TruncatedSeries<B>& s, const Poly<B>& p,
                                     unsigned var) {
    const auto* R = s.ring();
    TruncatedSeries<B> out(R, s.nvars(), s.deg_cap());
    const auto& exps = TruncatedSeries<B>::all_exponents(s.nvars(), s.deg_cap());
    for (std::size_t i = 0; i < s.raw().size(); ++i) {
        const auto& c = s.raw()[i];
        if (R->is_zero(c, c.prec)) continue;
        unsigned d = expo_deg(exps[i]);
        for (std::size_t k = 0; k < p.coeffs().size() && d + k <= s.deg_cap(); ++k) {
            const auto& pk = p.coeffs()[k];
            if (R->is_zero(pk, pk.prec)) continue;
            Expo e = exps[i];
            e[var] += static_cast<unsigned>(k);
            std::size_t idx = monomial_index(s.nvars(), e);
            out.raw()[idx] = out.raw()[idx] + c * pk;
        }
    }
    return out;
}

/// prod_v A_pow[e_v] placed in the respective variables, as a t-var series.
template <class B>
TruncatedSeries<B> inject_powers(const UnramifiedRing<B>* R, unsigned t, unsigned D,
                                 const std::vector<Poly<B>>& apow, const Expo& e) {
    TruncatedSeries<B> out = TruncatedSeries<B>::constant(R, t, D, R->one());
    for (unsigned v = 0; v < t; ++v)
        if (e[v]) out = mul_by_univariate(out, apow[e[v]], v);
    return out;
}

} // namespace detail

/// The unique F with F == sum theta_v X_v (mod deg 2) and f' o F = F^phi o f,
/// computed degree by degree. `thetas` fixes the arity (1..3). The result is
/// re-verified against the defining equation at the contract precision.
template <class B>
TruncatedSeries<B> solve_functional_equation(const Poly<B>& f, const Poly<B>& fprime,
                                             const std::vector<RingElem<B>>& thetas,
                                             unsigned deg_cap,
                                             bool reverse_order = false) {
    const auto* R = f.ring();
    require(fprime.ring() == R, "solver: mixed rings");
    const unsigned t = static_cast<unsigned>(thetas.size());
    require(t >= 1 && t <= 3, "solver: 1..3 thetas");
    const unsigned D = deg_cap;

    FieldElem<B> pi = validate_lt_shape(f);
    FieldElem<B> pip = validate_lt_shape(fprime);

    // theta^phi * pi == theta * pi' (the membership theta in Theta_{pi,pi'}).
    for (const auto& th : thetas) {
        auto lhs = R->frobenius(th, 1) * R->to_ring(pi);
        auto rhs = th * R->to_ring(pip);
        unsigned depth = std::min(std::min(lhs.prec, rhs.prec),
                                  std::min(R->store_N(), R->N() + 1));
        if (!R->congruent(lhs, rhs, depth))
            throw ThetaConditionFailed("theta^phi/theta != pi'/pi");
    }

    using TS = TruncatedSeries<B>;
    const long degB = fprime.degree();

    // F starts as the prescribed linear form.
    TS F(R, t, D);
    for (unsigned v = 0; v < t; ++v) {
        Expo e{0, 0, 0};
        e[v] = 1;
        F.set(e, thetas[v]);
    }

    // S[j] = (D_j f') o F, maintained incrementally via Hasse derivatives.
    std::vector<TS> S;
    {
        std::vector<TS> fpow; // F^k truncated at D, k = 0..degB
        fpow.push_back(TS::constant(R, t, D, R->one()));
        for (long k = 1; k <= degB; ++k) fpow.push_back(fpow.back() * F);
        for (long j = 0; j <= degB; ++j) {
            Poly<B> dj = fprime.hasse(static_cast<unsigned>(j));
            TS acc(R, t, D);
            for (std::size_t k = 0; k < dj.coeffs().size(); ++k)
                acc = acc + fpow[k].scaled(dj.coeffs()[k]);
            S.push_back(std::move(acc));
        }
    }

    // Q = F^phi o f. A-powers are shared by updates and the final check.
    std::vector<Poly<B>> apow;
    apow.push_back(Poly<B>::constant(R, R->one()));
    for (unsigned k = 1; k <= D; ++k) {
        Poly<B> nxt = apow.back() * f;
        if (nxt.coeffs().size() > D + 1) nxt.coeffs().resize(D + 1, R->zero());
        apow.push_back(std::move(nxt));
    }
    TS Q(R, t, D);
    for (unsigned v = 0; v < t; ++v) {
        Expo e{0, 0, 0};
        e[v] = 1;
        Q = Q + detail::mul_by_univariate(
                    TS::constant(R, t, D, R->frobenius(thetas[v], 1)), f, v);
    }

    const auto u_pi = pi.unit;
    const auto u_pip_inv = R->inv_unit(pip.unit);

    for (unsigned d = 2; d <= D; ++d) {
        TS G = S[0] - Q;
        auto mons = monomials_of_degree(t, d);
        if (reverse_order) std::reverse(mons.begin(), mons.end());
        TS H(R, t, D);
        bool any = false;
        for (const auto& e : mons) {
            auto gamma = G.coeff(e);
            if (R->is_zero(gamma, gamma.prec)) continue;
            if (R->val(gamma) < 1)
                throw Error("solver: degree-" + std::to_string(d) +
                            " obstruction not divisible by pi");
            // beta = gamma / pi'.
            auto beta = R->div_pi_pow(gamma, 1) * u_pip_inv;
            // ratio = pi^d / pi' (valuation d-1 >= 1).
            auto ratio = R->mul_pi_pow(R->pow(u_pi, d) * u_pip_inv, d - 1);
            auto alpha = -beta;
            auto c = ratio;
            auto bf = R->frobenius(beta, 1);
            while (R->val(c) < std::min(c.prec, alpha.prec)) {
                alpha = alpha - c * bf;
                c = R->frobenius(c, 1) * ratio;
                bf = R->frobenius(bf, 1);
            }
            H.set(e, alpha);
            any = true;
        }
        if (!any) continue;
        F = F + H;
        // Q += H^phi o f.
        for (const auto& e : mons) {
            const auto& h = H.coeff(e);
            if (R->is_zero(h, h.prec)) continue;
            TS inj = detail::inject_powers(R, t, D, apow, e);
            Q = Q + inj.scaled(R->frobenius(h, 1));
        }
        // S[j] += sum_{i>=1} C(i+j, i) S[i+j] H^i, using pre-update values.
        std::vector<TS> hpow;
        hpow.push_back(H);
        while ((hpow.size() + 1) * d <= D) hpow.push_back(hpow.back() * H);
        for (long j = 0; j <= degB; ++j) {
            TS upd = S[j];
            for (std::size_t i = 1; static_cast<long>(i + j) <= degB &&
                                    i * d <= D; ++i) {
                auto bin = Poly<B>::binomial(i + static_cast<std::size_t>(j), i);
                upd = upd + (S[j + i] * hpow[i - 1]).scaled(
                                R->from_int(static_cast<long long>(bin)));
            }
            S[j] = std::move(upd);
        }
    }

    // Independent re-check of the defining equation at contract precision.
    TS lhs(R, t, D);
    for (std::size_t k = fprime.coeffs().size(); k-- > 0;) {
        lhs = lhs * F;
        lhs = lhs + TS::constant(R, t, D, fprime.coeffs()[k]);
    }
    TS Fphi = F.apply_frobenius(1);
    TS rhs(R, t, D);
    {
        const auto& exps = TS::all_exponents(t, D);
        for (std::size_t i = 0; i < Fphi.raw().size(); ++i) {
            const auto& c = Fphi.raw()[i];
            if (R->is_zero(c, c.prec)) continue;
            rhs = rhs + detail::inject_powers(R, t, D, apow, exps[i]).scaled(c);
        }
    }
    if (!(lhs - rhs).zero_mod(R->N()))
        throw Error("solver: defining equation failed verification");
    return F;
}

/// Convenience overload matching the one-variable-series interface.
template <class B>
TruncatedSeries<B> solve_functional_equation(const TruncatedSeries<B>& f,
                                             const TruncatedSeries<B>& fprime,
                                             const std::vector<RingElem<B>>& thetas,
                                             unsigned deg_cap) {
    return solve_functional_equation(f.to_poly(), fprime.to_poly(), thetas, deg_cap);
}

} // namespace lubin
