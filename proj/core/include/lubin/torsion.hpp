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
#include <optional>
#include <vector>

#include "lubin/formal_group.hpp"

namespace lubin {

template <class B>
class EisensteinExtension;

/// An element of O_L[X]/(g), as coordinates over O_L in 1, alpha, ...,
/// alpha^{e-1}.
template <class B>
struct ExtElem {
    const EisensteinExtension<B>* E = nullptr;
    std::vector<RingElem<B>> c;

    ExtElem() = default;
    ExtElem(const EisensteinExtension<B>* ext, std::vector<RingElem<B>> coords)
        : E(ext), c(std::move(coords)) {}

    ExtElem operator+(const ExtElem& o) const { return E->add(*this, o); }
    ExtElem operator-(const ExtElem& o) const { return E->sub(*this, o); }
    ExtElem operator*(const ExtElem& o) const { return E->mul(*this, o); }
    ExtElem operator-() const { return E->neg(*this); }
    bool operator==(const ExtElem& o) const { return E->equal(*this, o); }
    bool operator!=(const ExtElem& o) const { return !E->equal(*this, o); }
};

/// O_{L'} = O_L[X]/(g) for a monic Eisenstein g of degree e; the class of
/// X is a uniformizer with v_{L'}(alpha) = 1 and v_{L'}(pi) = e.
template <class B>
class EisensteinExtension {
public:
    using Elem = ExtElem<B>;
    using RElem = RingElem<B>;

    EisensteinExtension(const UnramifiedRing<B>* R, Poly<B> g) : R_(R), g_(std::move(g)) {
        require(g_.ring() == R, "EisensteinExtension: ring mismatch");
        e_ = static_cast<unsigned>(g_.degree());
        require(e_ >= 1, "EisensteinExtension: degree >= 1");
        const auto& lead = g_.coeff(e_);
        if (!R_->congruent(lead, R_->with_prec(R_->one(), lead.prec),
                           std::min(lead.prec, R_->N())))
            throw NotEisenstein("leading coefficient not 1");
        for (unsigned j = 1; j < e_; ++j)
            if (R_->val(g_.coeff(j)) < 1)
                throw NotEisenstein("middle coefficient is a unit");
        if (R_->val(g_.coeff(0)) != 1)
            throw NotEisenstein("constant term valuation != 1");
    }

    EisensteinExtension(const EisensteinExtension&) = delete;
    EisensteinExtension& operator=(const EisensteinExtension&) = delete;

    const UnramifiedRing<B>* ring() const { return R_; }
    const Poly<B>& g() const { return g_; }
    unsigned e() const { return e_; }

    Elem zero() const { return Elem(this, std::vector<RElem>(e_, R_->zero())); }
    Elem one() const {
        auto v = std::vector<RElem>(e_, R_->zero());
        v[0] = R_->one();
        return Elem(this, std::move(v));
    }
    Elem from_ring(RElem x) const {
        auto v = std::vector<RElem>(e_, R_->zero());
        v[0] = std::move(x);
        return Elem(this, std::move(v));
    }
    Elem alpha() const {
        auto v = std::vector<RElem>(e_, R_->zero());
        if (e_ > 1)
            v[1] = R_->one();
        else
            v[0] = -g_.coeff(0); // degenerate degree-1 tower: alpha = -c_0
        return Elem(this, std::move(v));
    }
    Elem from_coords(std::vector<RElem> coords) const {
        require(coords.size() == e_, "from_coords: wrong length");
        return Elem(this, std::move(coords));
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a, b);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i) v[i] = a.c[i] + b.c[i];
        return Elem(this, std::move(v));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a, b);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i) v[i] = a.c[i] - b.c[i];
        return Elem(this, std::move(v));
    }
    Elem neg(const Elem& a) const {
        check1(a);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i) v[i] = -a.c[i];
        return Elem(this, std::move(v));
    }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a, b);
        std::vector<RElem> prod(2 * e_ - 1, R_->zero());
        for (unsigned i = 0; i < e_; ++i) {
            if (R_->is_zero(a.c[i], a.c[i].prec)) continue;
            for (unsigned j = 0; j < e_; ++j) prod[i + j] = prod[i + j] + a.c[i] * b.c[j];
        }
        for (std::size_t d = prod.size(); d-- > e_;) {
            RElem lead = prod[d];
            if (R_->is_zero(lead, lead.prec)) continue;
            prod[d] = R_->zero();
            for (unsigned j = 0; j < e_; ++j)
                prod[d - e_ + j] = prod[d - e_ + j] - lead * g_.coeff(j);
        }
        prod.resize(e_, R_->zero());
        return Elem(this, std::move(prod));
    }
    Elem scale(const RElem& s, const Elem& a) const {
        check1(a);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i) v[i] = s * a.c[i];
        return Elem(this, std::move(v));
    }
    Elem pow(Elem a, std::uint64_t k) const {
        Elem out = one();
        while (k) {
            if (k & 1) out = mul(out, a);
            a = mul(a, a);
            k >>= 1;
        }
        return out;
    }

    bool congruent(const Elem& a, const Elem& b, unsigned k) const {
        check(a, b);
        for (unsigned i = 0; i < e_; ++i)
            if (!R_->congruent(a.c[i], b.c[i], k)) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return congruent(a, b, R_->N()); }
    bool is_zero(const Elem& a, unsigned k) const { return congruent(a, zero(), k); }

    /// v_{L'}, normalized so v(alpha) = 1, v(pi) = e. Empty when every
    /// coordinate vanishes to its trusted depth ("zero as far as known").
    /// If an untrusted coordinate could still undercut the answer the
    /// value is not decidable and PrecisionExhausted is thrown.
    std::optional<long> valuation(const Elem& a) const {
        check1(a);
        std::optional<long> best;
        for (unsigned i = 0; i < e_; ++i) {
            unsigned v = R_->val(a.c[i]);
            if (v >= a.c[i].prec) continue; // zero to trusted depth
            long cand = static_cast<long>(e_) * static_cast<long>(v) + static_cast<long>(i);
            if (!best || cand < *best) best = cand;
        }
        if (best) {
            for (unsigned i = 0; i < e_; ++i) {
                unsigned v = R_->val(a.c[i]);
                if (v < a.c[i].prec) continue;
                long floor_i = static_cast<long>(e_) * static_cast<long>(a.c[i].prec) +
                               static_cast<long>(i);
                if (floor_i <= *best)
                    throw PrecisionExhausted("ext valuation undecidable at this depth");
            }
        }
        return best;
    }

    bool is_unit(const Elem& a) const {
        auto v = valuation(a);
        return v && *v == 0;
    }

    /// Exact division by alpha; requires valuation >= 1. Costs one pi-digit
    /// of coordinate precision.
    Elem div_alpha(const Elem& a) const {
        check1(a);
        // alpha^{-1} = -(alpha^{e-1} + c_{e-1} alpha^{e-2} + ... + c_1)/c_0.
        std::vector<RElem> u(e_, R_->zero());
        if (e_ == 1) {
            // L' = L: alpha = -c_0, a unit times pi.
            auto c0 = g_.coeff(0);
            auto f = R_->to_field(c0);
            auto inv_unit = R_->inv_unit(f.unit);
            return Elem(this, {-(R_->div_pi_pow(a.c[0] * inv_unit, 1))});
        }
        for (unsigned j = 1; j < e_; ++j) u[j - 1] = g_.coeff(j);
        u[e_ - 1] = R_->one();
        Elem num = mul(a, Elem(this, std::move(u)));
        auto c0f = R_->to_field(g_.coeff(0));
        auto inv_u = R_->inv_unit(c0f.unit);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i)
            v[i] = -(R_->div_pi_pow(num.c[i] * inv_u, 1));
        return Elem(this, std::move(v));
    }

    Elem div_alpha_pow(Elem a, unsigned k) const {
        for (unsigned i = 0; i < k; ++i) a = div_alpha(a);
        return a;
    }

    /// Evaluate a polynomial over O_L at an extension element (Horner).
    Elem eval_poly(const Poly<B>& p, const Elem& x) const {
        check1(x);
        Elem acc = zero();
        for (std::size_t i = p.coeffs().size(); i-- > 0;)
            acc = add(mul(acc, x), from_ring(p.coeffs()[i]));
        return acc;
    }

    /// Evaluate a one-variable truncated series at an element of positive
    /// valuation; exact mod pi^N provided the cap is at least e * N.
    Elem eval_series(const TruncatedSeries<B>& s, const Elem& x) const {
        require(s.nvars() == 1, "eval_series: one variable only");
        Elem acc = zero();
        for (std::size_t i = s.raw().size(); i-- > 0;)
            acc = add(mul(acc, x), from_ring(s.raw()[i]));
        return acc;
    }

    /// Evaluate a two-variable truncated series at a pair of elements of
    /// positive valuation (the formal sum x +_F y; cap >= e * N for
    /// exactness).
    Elem eval_series2(const TruncatedSeries<B>& s, const Elem& x, const Elem& y) const {
        require(s.nvars() == 2, "eval_series2: two variables");
        std::vector<Elem> xp{one()}, yp{one()};
        for (unsigned k = 1; k <= s.deg_cap(); ++k) {
            xp.push_back(mul(xp.back(), x));
            yp.push_back(mul(yp.back(), y));
        }
        Elem acc = zero();
        const auto& exps = TruncatedSeries<B>::all_exponents(2, s.deg_cap());
        for (std::size_t i = 0; i < s.raw().size(); ++i) {
            const auto& cf = s.raw()[i];
            if (R_->is_zero(cf, cf.prec)) continue;
            acc = add(acc, scale(cf, mul(xp[exps[i][0]], yp[exps[i][1]])));
        }
        return acc;
    }

    /// The O_L-algebra substitution alpha -> image applied to x.
    Elem substitute(const Elem& x, const Elem& image) const {
        check(x, image);
        Elem acc = zero();
        for (std::size_t i = e_; i-- > 0;) acc = add(mul(acc, image), from_ring(x.c[i]));
        return acc;
    }

    /// Apply phi^i to all coordinates (the coefficient-field action).
    Elem coeff_frobenius(const Elem& x, long i) const {
        check1(x);
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned k = 0; k < e_; ++k) v[k] = R_->frobenius(x.c[k], i);
        return Elem(this, std::move(v));
    }

    Elem random_element(std::mt19937_64& rng) const {
        std::vector<RElem> v(e_, R_->zero());
        for (unsigned i = 0; i < e_; ++i) v[i] = R_->random_element(rng);
        return Elem(this, std::move(v));
    }
    Elem random_unit(std::mt19937_64& rng) const {
        while (true) {
            Elem x = random_element(rng);
            if (is_unit(x)) return x;
        }
    }

    std::string to_string(const Elem& a) const {
        std::string s = "(";
        for (unsigned i = 0; i < e_; ++i) {
            if (i) s += ", ";
            s += R_->to_string(a.c[i]);
        }
        return s + ")";
    }

private:
    void check1(const Elem& a) const {
        if (a.E != this) throw RingMismatch("extension element from another tower");
    }
    void check(const Elem& a, const Elem& b) const {
        check1(a);
        check1(b);
    }

    const UnramifiedRing<B>* R_;
    Poly<B> g_;
    unsigned e_;
};

// ---- labels for O_K / pi^m --------------------------------------------

inline std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) out *= b;
    return out;
}

/// Representatives of O_K/pi^m are encoded as integers: the plain digit
/// expansion a = sum d_i pi^i maps to sum enc(d_i) q^i.
template <class B>
std::uint64_t label_count(const UnramifiedRing<B>& R, unsigned m) {
    return ipow_u64(R.q(), m);
}

template <class B>
RingElem<B> label_to_elem(const UnramifiedRing<B>& R, std::uint64_t label, unsigned m) {
    RingElem<B> acc = R.zero();
    std::uint64_t q = R.q();
    for (unsigned i = 0; i < m; ++i) {
        auto digit = static_cast<fq_t>((label / ipow_u64(q, i)) % q);
        acc = R.add(acc, R.mul_pi_pow(R.from_coeff(R.base().lift(digit)), i));
    }
    return acc;
}

template <class B>
std::uint64_t elem_to_label(const UnramifiedRing<B>& R, const RingElem<B>& x, unsigned m) {
    // Digits of the base-subring part; coordinates above 0 must vanish mod pi^m.
    for (unsigned i = 1; i < R.n(); ++i)
        if (!R.base().congruent(x.c[i], R.base().zero(), std::min(x.prec, m)))
            throw NotInBase("elem_to_label: not in the base subring");
    std::uint64_t label = 0;
    auto cur = x.c[0];
    for (unsigned i = 0; i < m; ++i) {
        fq_t d = R.base().residue(cur);
        label += static_cast<std::uint64_t>(d) * ipow_u64(R.q(), i);
        cur = R.base().div_pi(R.base().sub(cur, R.base().lift(d)));
    }
    return label;
}

template <class B>
std::uint64_t label_mul(const UnramifiedRing<B>& R, std::uint64_t a, std::uint64_t b,
                        unsigned m) {
    auto prod = R.mul(label_to_elem(R, a, m), label_to_elem(R, b, m));
    return elem_to_label(R, prod, m);
}

template <class B>
std::uint64_t label_add(const UnramifiedRing<B>& R, std::uint64_t a, std::uint64_t b,
                        unsigned m) {
    auto sum = R.add(label_to_elem(R, a, m), label_to_elem(R, b, m));
    return elem_to_label(R, sum, m);
}

template <class B>
bool label_is_unit(const UnramifiedRing<B>& R, std::uint64_t label) {
    return label % R.q() != 0;
}

// ---- the torsion level --------------------------------------------------

template <class B>
struct SeparabilityReport {
    std::uint64_t point_count = 0;
    bool all_distinct = false;
    std::optional<long> derivative_valuation; // v_{L'}(f_m'(alpha))
    bool pass = false;
};

/// Level m of the torsion tower of f: the Eisenstein quotient
/// O_L[X]/(g_m), its uniformizer alpha, and the full point table
/// a mod pi^m -> [a]_f(alpha).
template <class B>
class TorsionLevel {
public:
    TorsionLevel(const LTPolynomial<B>& f, unsigned m) : f_(f), m_(m) {
        const auto* R = f.ring();
        require(m >= 1, "TorsionLevel: m >= 1");
        {
            std::uint64_t e = static_cast<std::uint64_t>(R->q() - 1) *
                              ipow_u64(R->q(), m - 1);
            require(e * R->N() <= 8192 && ipow_u64(R->q(), m) <= 65536,
                    "TorsionLevel: tower exceeds desk-scale bounds");
        }
        auto [fm, pim] = iterate_fm(f, m);
        auto [fm1, pim1] = iterate_fm(f, m - 1);
        fm_ = std::move(fm);
        fm1_ = std::move(fm1);
        pim_ = std::move(pim);
        auto [quot, rem] = fm_.divmod_monic(fm1_);
        rem.trim();
        if (!rem.empty()) {
            for (const auto& cc : rem.coeffs())
                if (!R->is_zero(cc, std::min(cc.prec, R->N())))
                    throw NotEisenstein("f_m not divisible by f_{m-1}");
        }
        quot.trim();
        ext_ = std::make_unique<EisensteinExtension<B>>(R, std::move(quot));
        alpha_ = ext_->alpha();
        build_points();
    }

    const LTPolynomial<B>& f() const { return f_; }
    unsigned m() const { return m_; }
    const UnramifiedRing<B>* ring() const { return f_.ring(); }
    const EisensteinExtension<B>& ext() const { return *ext_; }
    const Poly<B>& fm() const { return fm_; }
    const Poly<B>& gm() const { return ext_->g(); }
    const RingElem<B>& pi_m() const { return pim_; }
    const ExtElem<B>& alpha() const { return alpha_; }
    unsigned e() const { return ext_->e(); }

    std::uint64_t point_count() const { return points_.size(); }
    const ExtElem<B>& point(std::uint64_t label) const { return points_.at(label); }
    const std::vector<ExtElem<B>>& points() const { return points_; }

    /// Degree cap sufficient to evaluate integral series at torsion points
    /// exactly mod pi^N: monomials of degree >= e*N vanish there.
    unsigned eval_cap() const { return ext_->e() * ring()->N(); }

    /// Label of the point equal to x (exact coordinate match), if any.
    std::optional<std::uint64_t> label_of_point(const ExtElem<B>& x) const {
        for (std::uint64_t a = 0; a < points_.size(); ++a)
            if (ext_->equal(points_[a], x)) return a;
        return std::nullopt;
    }

    /// The Galois action of a unit u mod pi^m: the O_L-algebra map
    /// alpha -> [u](alpha), applied to x by coordinate substitution.
    ExtElem<B> galois_apply(std::uint64_t u_label, const ExtElem<B>& x) const {
        const auto* R = ring();
        if (!label_is_unit(*R, u_label)) throw NotAUnit("galois_apply: u not a unit");
        return ext_->substitute(x, points_.at(u_label));
    }

    /// Relative norm to O_L: the product of all Galois conjugates.
    RingElem<B> norm_rel(const ExtElem<B>& x) const {
        const auto* R = ring();
        ExtElem<B> acc = ext_->one();
        for (std::uint64_t u = 0; u < points_.size(); ++u) {
            if (!label_is_unit(*R, u)) continue;
            acc = ext_->mul(acc, galois_apply(u, x));
        }
        for (unsigned i = 1; i < ext_->e(); ++i)
            if (!R->is_zero(acc.c[i], std::min(acc.c[i].prec, R->N())))
                throw NotInBase("norm_rel: conjugate product not in O_L");
        return acc.c[0];
    }

    /// Absolute norm to O_K.
    RingElem<B> norm_abs(const ExtElem<B>& x) const {
        return ring()->norm_to_base(norm_rel(x));
    }

    SeparabilityReport<B> check_separable() const {
        const auto* R = ring();
        SeparabilityReport<B> rep;
        rep.point_count = points_.size();
        rep.all_distinct = true;
        for (std::uint64_t a = 0; a < points_.size() && rep.all_distinct; ++a)
            for (std::uint64_t b = a + 1; b < points_.size(); ++b)
                if (ext_->equal(points_[a], points_[b])) {
                    rep.all_distinct = false;
                    break;
                }
        auto deriv = fm_.derivative();
        rep.derivative_valuation = ext_->valuation(ext_->eval_poly(deriv, alpha_));
        rep.pass = rep.all_distinct &&
                   rep.point_count == label_count(*R, m_) &&
                   rep.derivative_valuation.has_value();
        return rep;
    }

private:
    void build_points() {
        const auto* R = ring();
        const std::uint64_t count = label_count(*R, m_);
        const unsigned cap = eval_cap();
        points_.reserve(count);
        for (std::uint64_t a = 0; a < count; ++a) {
            auto scalar = label_to_elem(*R, a, m_);
            auto hom = scalar_endo(scalar, f_, cap);
            points_.push_back(ext_->eval_series(hom.series, alpha_));
        }
        // Prop LTextension(i): the labelling is injective and the points
        // are exactly the roots of f_m.
        for (std::uint64_t a = 0; a < count; ++a) {
            auto val = ext_->eval_poly(fm_, points_[a]);
            if (!ext_->is_zero(val, R->N()))
                throw Error("TorsionLevel: point fails f_m = 0");
        }
    }

    LTPolynomial<B> f_;
    unsigned m_;
    Poly<B> fm_, fm1_;
    RingElem<B> pim_;
    std::unique_ptr<EisensteinExtension<B>> ext_;
    ExtElem<B> alpha_;
    std::vector<ExtElem<B>> points_;
};

template <class B>
std::unique_ptr<TorsionLevel<B>> build_level(const LTPolynomial<B>& f, unsigned m) {
    return std::make_unique<TorsionLevel<B>>(f, m);
}

/// Separability of f_m. Level 0 is the vacuous case (f_0 = X, the single
/// root 0); higher levels defer to the torsion table.
template <class B>
SeparabilityReport<B> check_separable(const LTPolynomial<B>& f, unsigned m) {
    if (m == 0) {
        SeparabilityReport<B> rep;
        rep.point_count = 1;
        rep.all_distinct = true;
        rep.derivative_valuation = 0; // f_0' = 1
        rep.pass = true;
        return rep;
    }
    return build_level(f, m)->check_separable();
}

} // namespace lubin
