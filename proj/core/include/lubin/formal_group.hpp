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

#include <optional>
#include <vector>

#include "lubin/solve.hpp"

namespace lubin {

/// A monic Lubin-Tate polynomial: degree exactly q, zero constant term,
/// linear coefficient a uniformizer, f == X^q mod pi.
template <class B>
class LTPolynomial {
public:
    using Elem = RingElem<B>;

    LTPolynomial() = default;
    explicit LTPolynomial(Poly<B> f) : f_(std::move(f)) {
        const auto* R = f_.ring();
        require(f_.degree() == static_cast<long>(R->q()),
                "LTPolynomial: degree must be exactly q");
        if (!R->congruent(f_.coeff(f_.degree()), R->one(),
                          std::min(f_.coeff(f_.degree()).prec, R->N())))
            throw InvalidArgument("LTPolynomial: must be monic");
        pi_ = validate_lt_shape(f_);
    }

    static LTPolynomial from_ints(const UnramifiedRing<B>* R,
                                  const std::vector<long long>& coeffs) {
        return LTPolynomial(Poly<B>::from_ints(R, coeffs));
    }

    /// pi X + X^q for a given uniformizer.
    static LTPolynomial canonical(const UnramifiedRing<B>* R, const Elem& pi) {
        std::vector<Elem> c(R->q() + 1, R->zero());
        c[1] = pi;
        c[R->q()] = R->one();
        return LTPolynomial(Poly<B>(R, std::move(c)));
    }

    /// (1+X)^p - 1 over Q_p (the multiplicative-group instance).
    static LTPolynomial cyclotomic(const UnramifiedRing<B>* R) {
        const unsigned p = R->config().p;
        require(R->q() == p, "cyclotomic: residue field must be F_p");
        std::vector<Elem> c(p + 1, R->zero());
        for (unsigned k = 1; k <= p; ++k)
            c[k] = R->from_int(static_cast<long long>(Poly<B>::binomial(p, k)));
        return LTPolynomial(Poly<B>(R, std::move(c)));
    }

    const Poly<B>& poly() const { return f_; }
    const UnramifiedRing<B>* ring() const { return f_.ring(); }
    const FieldElem<B>& pi() const { return pi_; }
    Elem pi_elem() const { return ring()->to_ring(pi_); }

    LTPolynomial frobenius(long i) const { return LTPolynomial(f_.frobenius(i)); }

    bool same_ring(const LTPolynomial& o) const { return ring() == o.ring(); }

private:
    Poly<B> f_;
    FieldElem<B> pi_;
};

/// The Lubin-Tate group law F_f, carrying its defining polynomial.
template <class B>
struct FormalGroupLaw {
    LTPolynomial<B> f;
    TruncatedSeries<B> F; // two variables

    const UnramifiedRing<B>* ring() const { return f.ring(); }
};

/// [theta]_{f,f'}: the unique series theta X + ... intertwining f and f'.
template <class B>
struct HomSeries {
    RingElem<B> theta;
    LTPolynomial<B> f_src, f_dst;
    TruncatedSeries<B> series; // one variable
};

/// F_f via the functional-equation solver with thetas = (1, 1); the group
/// axioms that are cheap to assert post-hoc (F(X,0) = X, symmetry) are
/// always checked.
template <class B>
FormalGroupLaw<B> build_formal_group(const LTPolynomial<B>& f, unsigned deg_cap) {
    const auto* R = f.ring();
    auto F = solve_functional_equation(f.poly(), f.poly(),
                                       {R->one(), R->one()}, deg_cap);
    // F(X, 0) = X and F(X,Y) = F(Y,X), coefficientwise.
    const auto& exps = TruncatedSeries<B>::all_exponents(2, deg_cap);
    for (std::size_t i = 0; i < F.raw().size(); ++i) {
        const Expo& e = exps[i];
        if (e[1] == 0) {
            bool expect_one = (e[0] == 1);
            const auto& c = F.raw()[i];
            bool ok = expect_one ? R->congruent(c, R->with_prec(R->one(), c.prec), R->N())
                                 : R->is_zero(c, std::min(c.prec, R->N()));
            if (!ok) throw Error("build_formal_group: F(X,0) != X");
        }
        Expo swapped{e[1], e[0], 0};
        if (!R->congruent(F.coeff(e), F.coeff(swapped),
                          std::min({F.coeff(e).prec, F.coeff(swapped).prec, R->N()})))
            throw Error("build_formal_group: F not symmetric");
    }
    return FormalGroupLaw<B>{f, std::move(F)};
}

/// [theta]_{f,f'}; requires theta^phi/theta = pi'/pi (checked by the solver).
template <class B>
HomSeries<B> build_hom(const RingElem<B>& theta, const LTPolynomial<B>& f,
                       const LTPolynomial<B>& fprime, unsigned deg_cap) {
    auto s = solve_functional_equation(f.poly(), fprime.poly(), {theta}, deg_cap);
    return HomSeries<B>{theta, f, fprime, std::move(s)};
}

/// [a]_f for a in the base subring O_K (the formal O-module structure).
template <class B>
HomSeries<B> scalar_endo(const RingElem<B>& a, const LTPolynomial<B>& f,
                         unsigned deg_cap) {
    const auto* R = f.ring();
    // a must lie in O_K: Frobenius-stable.
    if (!R->congruent(R->frobenius(a, 1), a, std::min(a.prec, R->N())))
        throw InvalidArgument("scalar_endo: scalar not in the base subring");
    return build_hom(a, f, f, deg_cap);
}

/// f_m = f^{phi^{m-1}} o ... o f^phi o f (exact polynomial composition) and
/// pi_m = prod_{t<m} pi^{phi^t}. f_0 = X, pi_0 = 1.
template <class B>
std::pair<Poly<B>, RingElem<B>> iterate_fm(const LTPolynomial<B>& f, unsigned m) {
    const auto* R = f.ring();
    Poly<B> fm = Poly<B>::x(R);
    RingElem<B> pim = R->one();
    RingElem<B> pi = f.pi_elem();
    for (unsigned t = 0; t < m; ++t) {
        fm = f.poly().frobenius(static_cast<long>(t)).compose(fm);
        pim = pim * R->frobenius(pi, static_cast<long>(t));
    }
    return {std::move(fm), std::move(pim)};
}

/// pi_j for j in Z: pi_j = prod_{t<j} pi^{phi^t} for j >= 0 and
/// pi_j = (pi_{-j}^{-1})^{phi^j} for j < 0. Returned as a field element.
template <class B>
FieldElem<B> pi_twisted(const UnramifiedRing<B>* R, const FieldElem<B>& pi, long j) {
    FieldElem<B> acc = FieldElem<B>::make(R->one(), 0);
    if (j >= 0) {
        for (long t = 0; t < j; ++t) acc = R->fe_mul(acc, R->fe_frobenius(pi, t));
        return acc;
    }
    for (long t = 0; t < -j; ++t) acc = R->fe_mul(acc, R->fe_frobenius(pi, t));
    return R->fe_frobenius(R->fe_inv(acc), j);
}

/// Solve theta^phi/theta = pi'/pi for a unit theta of O_L. Solvable at
/// finite level exactly when N_{L/K}(pi) = N_{L/K}(pi'); otherwise
/// NormMismatch. Deterministic: lex-least residue choices at every stage.
template <class B>
RingElem<B> solve_theta(const UnramifiedRing<B>* R, const FieldElem<B>& pi,
                        const FieldElem<B>& pip) {
    require(!pi.zero && pi.val == 1, "solve_theta: pi must be a uniformizer");
    require(!pip.zero && pip.val == 1, "solve_theta: pi' must be a uniformizer");
    auto u = pip.unit * R->inv_unit(pi.unit); // pi'/pi, a unit
    // Finite-level solvability criterion: equal norms.
    auto nrm = R->norm_to_base(u);
    if (!R->congruent(nrm, R->with_prec(R->one(), nrm.prec), std::min(nrm.prec, R->N())))
        throw NormMismatch("solve_theta: N(pi) != N(pi')");
    const unsigned target = std::min(u.prec, R->N());
    // Residue level: theta^q / theta = u (multiplicative Hilbert 90).
    auto theta0 = R->find_residue_hilbert90(R->residue(u));
    if (!theta0)
        throw NormMismatch("solve_theta: no residue-level solution"); // norm-1 violated
    auto theta = R->with_prec(R->lift(*theta0), u.prec);
    for (unsigned m = 1; m < target; ++m) {
        // d = u / psi(theta) = 1 + alpha pi^m; fix with 1 + beta pi^m where
        // beta^phi - beta = alpha (additive Artin-Schreier at the residue).
        auto psi = R->frobenius(theta, 1) * R->inv_unit(theta);
        auto d = u * R->inv_unit(psi);
        auto diff = d - R->with_prec(R->one(), d.prec);
        if (R->is_zero(diff, target)) break;
        if (R->val(diff) < m) throw Error("solve_theta: lifting invariant broken");
        auto alpha = R->div_pi_pow(diff, m);
        auto abar = R->residue(alpha);
        if (R->res_is_zero(abar)) continue;
        std::optional<typename UnramifiedRing<B>::Res> beta;
        for (std::uint64_t i = 0; i < R->qn(); ++i) {
            auto cand = R->res_from_index(i);
            if (R->res_sub(R->res_frob(cand), cand) == abar) {
                beta = cand;
                break;
            }
        }
        if (!beta) throw Error("solve_theta: Artin-Schreier search failed");
        auto corr = R->add(R->one(), R->mul_pi_pow(R->lift(*beta), m));
        theta = theta * R->with_prec(corr, theta.prec);
    }
    return theta;
}

} // namespace lubin
