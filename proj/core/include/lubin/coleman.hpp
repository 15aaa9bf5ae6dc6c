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

#include <memory>
#include <vector>

#include "lubin/torsion.hpp"

namespace lubin {

/// Everything the Coleman norm operator needs for one Lubin-Tate polynomial:
/// the group law (at a cap large enough for exact X +_f alpha products) and
/// the level-1 torsion for root access.
template <class B>
class ColemanContext {
public:
    ColemanContext(const LTPolynomial<B>& f, unsigned deg_in_cap)
        : f_(f), deg_in_(deg_in_cap) {
        const auto* R = f.ring();
        level1_ = build_level(f, 1);
        // X-degree q * deg_in for the conjugate products, plus e_1 * N in the
        // second slot for exact evaluation at the level-1 roots.
        unsigned cap = R->q() * deg_in_ + level1_->eval_cap();
        fg_ = std::make_unique<FormalGroupLaw<B>>(build_formal_group(f, cap));
    }

    const LTPolynomial<B>& f() const { return f_; }
    const UnramifiedRing<B>* ring() const { return f_.ring(); }
    const FormalGroupLaw<B>& fg() const { return *fg_; }
    const TorsionLevel<B>& level1() const { return *level1_; }
    unsigned deg_in_cap() const { return deg_in_; }

private:
    LTPolynomial<B> f_;
    unsigned deg_in_;
    std::unique_ptr<FormalGroupLaw<B>> fg_;
    std::unique_ptr<TorsionLevel<B>> level1_;
};

template <class B>
std::unique_ptr<ColemanContext<B>> make_coleman_context(const LTPolynomial<B>& f,
                                                        unsigned deg_in_cap) {
    return std::make_unique<ColemanContext<B>>(f, deg_in_cap);
}

namespace detail {

/// X +_f beta as a polynomial in X with coefficients in the level-1
/// extension, truncated at X-degree cap: coefficient of X^k is
/// sum_i F_{k,i} beta^i, exact mod pi^N since v(beta) >= 1.
template <class B>
std::vector<ExtElem<B>> x_plus_point(const ColemanContext<B>& ctx, const ExtElem<B>& beta,
                                     unsigned xcap) {
    const auto& E = ctx.level1().ext();
    const auto& F = ctx.fg().F;
    const auto* R = ctx.ring();
    std::vector<ExtElem<B>> out(xcap + 1, E.zero());
    std::vector<ExtElem<B>> bpow{E.one()};
    for (unsigned i = 1; i <= F.deg_cap(); ++i) bpow.push_back(E.mul(bpow.back(), beta));
    const auto& exps = TruncatedSeries<B>::all_exponents(2, F.deg_cap());
    for (std::size_t idx = 0; idx < F.raw().size(); ++idx) {
        const auto& c = F.raw()[idx];
        if (R->is_zero(c, c.prec)) continue;
        unsigned k = exps[idx][0], i = exps[idx][1];
        if (k > xcap) continue;
        out[k] = E.add(out[k], E.scale(c, bpow[i]));
    }
    return out;
}

template <class B>
std::vector<ExtElem<B>> extpoly_mul(const EisensteinExtension<B>& E,
                                    const std::vector<ExtElem<B>>& a,
                                    const std::vector<ExtElem<B>>& b, unsigned cap) {
    std::vector<ExtElem<B>> out(std::min<std::size_t>(a.size() + b.size() - 1, cap + 1),
                                E.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] = E.add(out[i + j], E.mul(a[i], b[j]));
    return out;
}

} // namespace detail

/// The Coleman norm operator: the unique h with
/// h o f = prod_{alpha in mu_1} g(X +_f alpha). Computed literally as that
/// product in the level-1 extension, descended to O_L, and resolved by
/// iterated exact division by the monic f.
template <class B>
Poly<B> coleman_N(const Poly<B>& g, const ColemanContext<B>& ctx) {
    const auto* R = ctx.ring();
    const auto& E = ctx.level1().ext();
    require(g.ring() == R, "coleman_N: ring mismatch");
    require(g.degree() <= static_cast<long>(ctx.deg_in_cap()),
            "coleman_N: input degree exceeds the context cap");
    if (g.degree() < 0) return Poly<B>(R);
    const unsigned q = R->q();
    const unsigned dg = static_cast<unsigned>(std::max<long>(g.degree(), 0));
    const unsigned pcap = q * dg;

    // P(X) = prod over the level-1 torsion points.
    std::vector<ExtElem<B>> P{E.one()};
    for (std::uint64_t a = 0; a < ctx.level1().point_count(); ++a) {
        auto shift = detail::x_plus_point(ctx, ctx.level1().point(a), pcap);
        // g(shift(X)) by Horner over ext-coefficient polynomials.
        std::vector<ExtElem<B>> factor{E.from_ring(g.coeff(g.degree()))};
        for (long k = g.degree() - 1; k >= 0; --k) {
            factor = detail::extpoly_mul(E, factor, shift, pcap);
            factor[0] = E.add(factor[0], E.from_ring(g.coeff(static_cast<std::size_t>(k))));
        }
        P = detail::extpoly_mul(E, P, factor, pcap);
    }

    // Descent to O_L.
    std::vector<RingElem<B>> pc;
    pc.reserve(P.size());
    for (const auto& coeffext : P) {
        for (unsigned i = 1; i < E.e(); ++i)
            if (!R->is_zero(coeffext.c[i], std::min(coeffext.c[i].prec, R->N())))
                throw DescentFailed("coleman_N: product coefficient not in O_L");
        pc.push_back(coeffext.c[0]);
    }
    Poly<B> prod(R, std::move(pc));

    // h with h o f = P, by repeated exact division: P_i - P_i(0) = P_{i+1} f.
    std::vector<RingElem<B>> h;
    Poly<B> cur = std::move(prod);
    for (unsigned i = 0; i <= dg; ++i) {
        auto c0 = cur.coeff(0);
        h.push_back(c0);
        auto shifted = cur - Poly<B>::constant(R, c0);
        auto [quot, rem] = shifted.divmod_monic(ctx.f().poly());
        for (const auto& rc : rem.coeffs())
            if (!R->is_zero(rc, std::min(rc.prec, R->N())))
                throw DivisionRemainder("coleman_N: division by f left a remainder");
        cur = std::move(quot);
    }
    for (const auto& rc : cur.coeffs())
        if (!R->is_zero(rc, std::min(rc.prec, R->N())))
            throw DivisionRemainder("coleman_N: extraction left a tail");
    return Poly<B>(R, std::move(h));
}

/// N^m(g) = N_{f^{phi^{m-1}}} o ... o N_{f^phi} o N_f (g). The classical
/// n = 1 case collapses to plain iteration of N_f.
template <class B>
Poly<B> iterated_N(Poly<B> g, unsigned m, const ColemanContext<B>& ctx) {
    const auto* R = ctx.ring();
    for (unsigned t = 0; t < m; ++t) {
        if (t == 0 || R->n() == 1) {
            g = coleman_N(g, ctx);
        } else {
            auto twisted = make_coleman_context(ctx.f().frobenius(static_cast<long>(t)),
                                                ctx.deg_in_cap());
            g = coleman_N(g, *twisted);
        }
    }
    return g;
}

/// The unit sequence u_i = N^i(g)(0) for i = 0..m.
template <class B>
std::vector<RingElem<B>> unit_norm_sequence(const Poly<B>& g, unsigned m,
                                            const ColemanContext<B>& ctx) {
    const auto* R = ctx.ring();
    require(R->is_unit(g.coeff(0)), "unit_norm_sequence: g(0) must be a unit");
    std::vector<RingElem<B>> out;
    Poly<B> cur = g;
    for (unsigned i = 0; i <= m; ++i) {
        out.push_back(cur.coeff(0));
        if (i == m) break;
        if (i == 0 || R->n() == 1) {
            cur = coleman_N(cur, ctx);
        } else {
            auto twisted = make_coleman_context(ctx.f().frobenius(static_cast<long>(i)),
                                                ctx.deg_in_cap());
            cur = coleman_N(cur, *twisted);
        }
    }
    return out;
}

template <class B>
struct NormGroupReport {
    std::uint64_t samples = 0;
    std::uint64_t unit_norm_failures = 0; // norms escaping 1 + pi^m O_K
    bool alpha_norm_matches = false;      // norm_abs(-alpha) == x
    bool pass = false;
};

/// Prop normgpsmall at desk scale: sampled unit norms land in 1 + pi^m and
/// the torsion generator accounts for the <x> factor.
template <class B>
NormGroupReport<B> norm_group_membership(const FieldElem<B>& x, unsigned m,
                                         const ColemanContext<B>& ctx,
                                         std::uint64_t samples, std::mt19937_64& rng) {
    const auto* R = ctx.ring();
    NormGroupReport<B> rep;
    rep.samples = samples;
    auto level = build_level(ctx.f(), m);
    const auto& E = level->ext();
    // N_{L/K}(pi) must equal x for the tower to belong to x.
    auto nx = R->to_field(R->norm_to_base(R->to_ring(ctx.f().pi())));
    require(!nx.zero && !x.zero && nx.val == x.val &&
                R->congruent(nx.unit, x.unit, std::min({nx.unit.prec, x.unit.prec, R->N()})),
            "norm_group_membership: context built for a different x");
    for (std::uint64_t s = 0; s < samples; ++s) {
        auto u = E.random_unit(rng);
        auto nrm = level->norm_abs(u);
        auto diff = nrm - R->with_prec(R->one(), nrm.prec);
        if (!R->is_zero(diff, m)) ++rep.unit_norm_failures;
    }
    auto alpha_norm = R->to_field(level->norm_abs(E.neg(level->alpha())));
    rep.alpha_norm_matches =
        !alpha_norm.zero && alpha_norm.val == x.val &&
        R->congruent(alpha_norm.unit, x.unit,
                     std::min({alpha_norm.unit.prec, x.unit.prec, R->N()}));
    rep.pass = rep.unit_norm_failures == 0 && rep.alpha_norm_matches;
    return rep;
}

} // namespace lubin
