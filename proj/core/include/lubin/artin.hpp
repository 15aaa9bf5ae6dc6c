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

#include "lubin/coleman.hpp"
#include "lubin/formal_group.hpp"
#include "lubin/torsion.hpp"

namespace lubin {

/// The finite-level Weil descriptor of Art_K(x): sigma acts as phi^j on L
/// with j = -v(x), and on the level-m torsion by alpha -> [x pi_j](alpha).
/// When j = 0 mod n source and target towers coincide and the action is a
/// label permutation; otherwise the image generator of the twisted torsion
/// is recorded inside the source extension (all towers live in L_f^m).
template <class B>
struct ArtinDescriptor {
    long frobenius_exponent = 0; // j = -v(x); v(sigma) = v(x)
    bool twisted = false;
    RingElem<B> theta; // x pi_j, the hom parameter
    std::vector<std::pair<std::uint64_t, std::uint64_t>> permutation; // untwisted
    std::optional<ExtElem<B>> generator_image; // twisted: [theta](alpha)

    bool is_torsion_identity() const {
        for (const auto& [a, b] : permutation)
            if (a != b) return false;
        return !twisted;
    }

    std::uint64_t apply_label(std::uint64_t a) const {
        for (const auto& [s, t] : permutation)
            if (s == a) return t;
        throw InvalidArgument("apply_label: label out of range");
    }
};

/// The level-m Artin action of x in K^x on the tower of f.
template <class B>
ArtinDescriptor<B> artin_apply(const FieldElem<B>& x, const TorsionLevel<B>& level) {
    const auto* R = level.ring();
    require(!x.zero, "artin_apply: x must be nonzero");
    if (!R->congruent(R->frobenius(x.unit, 1), x.unit, std::min(x.unit.prec, R->N())))
        throw InvalidArgument("artin_apply: x not in the base field K");

    ArtinDescriptor<B> out;
    const long j = -x.val;
    out.frobenius_exponent = j;
    auto pij = pi_twisted(R, level.f().pi(), j);
    auto theta_f = R->fe_mul(FieldElem<B>::make(x.unit, x.val), pij);
    require(!theta_f.zero && theta_f.val == 0, "artin_apply: x pi_j must be a unit");
    out.theta = theta_f.unit;

    const long jmod = ((j % static_cast<long>(R->n())) + R->n()) % R->n();
    out.twisted = jmod != 0;
    auto f_dst = level.f().frobenius(j);
    auto hom = build_hom(out.theta, level.f(), f_dst, level.eval_cap());
    const auto& E = level.ext();

    if (!out.twisted) {
        for (std::uint64_t a = 0; a < level.point_count(); ++a) {
            auto image = E.eval_series(hom.series, level.point(a));
            auto lbl = level.label_of_point(image);
            if (!lbl) throw Error("artin_apply: image is not a torsion point");
            out.permutation.emplace_back(a, *lbl);
        }
        // The parametrization is a bijection.
        std::vector<bool> seen(level.point_count(), false);
        for (const auto& [a, b] : out.permutation) {
            if (seen[b]) throw Error("artin_apply: torsion action not injective");
            seen[b] = true;
        }
        return out;
    }

    // Twisted target: verify the generator image is an exact-level-m root
    // of the twisted iterate, inside the source extension.
    auto beta = E.eval_series(hom.series, level.alpha());
    auto [fmj, pimj] = iterate_fm(f_dst, level.m());
    if (!E.is_zero(E.eval_poly(fmj, beta), R->N()))
        throw Error("artin_apply: twisted image is not twisted torsion");
    if (level.m() >= 1) {
        auto [fmj1, pimj1] = iterate_fm(f_dst, level.m() - 1);
        if (E.is_zero(E.eval_poly(fmj1, beta), R->N()))
            throw Error("artin_apply: twisted image dropped a level");
    }
    out.generator_image = beta;
    return out;
}

template <class B>
struct CharacterizationReport {
    RingElem<B> pi;          // the uniformizer with N_{L/K}(pi) = x
    bool norm_matches = false;
    long frobenius_exponent = 0;
    bool torsion_fixed = false;
    bool pass = false;
};

/// Prop artchar at finite level: for v(x) = n > 0, build the tower of a
/// uniformizer pi with N_{L/K}(pi) = x (norm_preimage recipe); Art_K(x)
/// must fix the level-m torsion pointwise and act as Frob^{v(x)} on L.
template <class B>
CharacterizationReport<B> check_characterization(const UnramifiedRing<B>* R,
                                                 const FieldElem<B>& x, unsigned m) {
    require(!x.zero && x.val == static_cast<long>(R->n()),
            "check_characterization: v(x) must equal n");
    if (!R->congruent(R->frobenius(x.unit, 1), x.unit, std::min(x.unit.prec, R->N())))
        throw InvalidArgument("check_characterization: x not in K");
    CharacterizationReport<B> rep;
    auto w = R->norm_preimage(x.unit);
    rep.pi = R->mul_pi_pow(w, 1);
    auto nrm = R->to_field(R->norm_to_base(rep.pi));
    rep.norm_matches = !nrm.zero && nrm.val == x.val &&
                       R->congruent(nrm.unit, x.unit,
                                    std::min({nrm.unit.prec, x.unit.prec, R->N()}));
    auto f = LTPolynomial<B>::canonical(R, rep.pi);
    auto level = build_level(f, m);
    auto desc = artin_apply(x, *level);
    rep.frobenius_exponent = desc.frobenius_exponent;
    rep.torsion_fixed = desc.is_torsion_identity();
    rep.pass = rep.norm_matches && rep.torsion_fixed &&
               desc.frobenius_exponent == -static_cast<long>(x.val);
    return rep;
}

struct HomomorphismReport {
    bool exponents_add = false;
    bool actions_compose = false;
    bool pass = false;
};

/// artin_apply(x) o artin_apply(y) = artin_apply(xy) on all level-m points
/// (classical tower, n = 1, so descriptors compose as label permutations).
template <class B>
HomomorphismReport check_homomorphism(const FieldElem<B>& x, const FieldElem<B>& y,
                                      const TorsionLevel<B>& level) {
    const auto* R = level.ring();
    require(R->n() == 1, "check_homomorphism: classical tower only");
    HomomorphismReport rep;
    auto dx = artin_apply(x, level);
    auto dy = artin_apply(y, level);
    auto dxy = artin_apply(R->fe_mul(x, y), level);
    rep.exponents_add =
        dx.frobenius_exponent + dy.frobenius_exponent == dxy.frobenius_exponent;
    rep.actions_compose = true;
    for (std::uint64_t a = 0; a < level.point_count(); ++a)
        if (dx.apply_label(dy.apply_label(a)) != dxy.apply_label(a))
            rep.actions_compose = false;
    rep.pass = rep.exponents_add && rep.actions_compose;
    return rep;
}

template <class B>
struct NormCompatReport {
    RingElem<B> norm;      // y = N_{L/K}(x')
    long v_of_norm = 0;    // must equal n * v'(x')
    bool towers_linked = false;    // [theta] maps torsion bijectively to torsion
    bool norm_action_fixes = false; // Art_K(y) fixes the level-m torsion
    bool pass = false;
};

/// The finite-level content of base change for unramified K'/K = L/K: for a
/// uniformizer x' of L, y = N_{L/K}(x') has Art_K(y) fixing the relative
/// tower of x', and any two towers with norm y are linked by a theta
/// isomorphism.
template <class B>
NormCompatReport<B> norm_compatibility_check(const UnramifiedRing<B>* R,
                                             const FieldElem<B>& xprime, unsigned m) {
    require(R->n() >= 2, "norm_compatibility_check: needs n >= 2");
    require(!xprime.zero && xprime.val == 1,
            "norm_compatibility_check: x' must be a uniformizer of L");
    NormCompatReport<B> rep;
    auto u_y = R->norm_to_base(xprime.unit);
    rep.norm = R->mul_pi_pow(u_y, static_cast<unsigned>(R->n()));
    rep.v_of_norm = static_cast<long>(R->n());
    auto y = FieldElem<B>::make(u_y, static_cast<long>(R->n()));

    // Tower of x' itself and the canonical tower of y.
    auto f1 = LTPolynomial<B>::canonical(R, R->to_ring(xprime));
    auto w = R->norm_preimage(u_y);
    auto pi2 = R->mul_pi_pow(w, 1);
    auto f2 = LTPolynomial<B>::canonical(R, pi2);

    auto level1 = build_level(f1, m);
    auto level2 = build_level(f2, m);

    // theta linking the towers; NormMismatch surfaces unlinkable inputs.
    auto theta = solve_theta(R, xprime, R->to_field(pi2));
    auto hom = build_hom(theta, f1, f2, level1->eval_cap());
    const auto& E1 = level1->ext();
    auto [f2m, pi2m] = iterate_fm(f2, m);
    std::vector<ExtElem<B>> images;
    rep.towers_linked = true;
    for (std::uint64_t a = 0; a < level1->point_count(); ++a) {
        auto im = E1.eval_series(hom.series, level1->point(a));
        if (!E1.is_zero(E1.eval_poly(f2m, im), R->N())) rep.towers_linked = false;
        for (const auto& other : images)
            if (E1.equal(other, im)) rep.towers_linked = false;
        images.push_back(std::move(im));
    }

    auto desc = artin_apply(y, *level2);
    rep.norm_action_fixes = desc.is_torsion_identity() &&
                            desc.frobenius_exponent == -static_cast<long>(R->n());
    rep.pass = rep.towers_linked && rep.norm_action_fixes;
    return rep;
}

} // namespace lubin
