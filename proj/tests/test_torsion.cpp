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
#include <doctest.h>

#include "lubin/torsion.hpp"

using namespace lubin;
using PB = PadicBase;
using LB = LaurentBase;

static std::unique_ptr<PadicRing> zp(unsigned p, unsigned N, unsigned h) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, 1, 0, h);
}

TEST_CASE("build_level quotients") {
    auto R = zp(2, 8, 36);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});

    auto l1 = build_level(f, 1);
    CHECK(l1->e() == 1);
    CHECK(l1->point_count() == 2);
    CHECK(R->equal(l1->gm().coeff(0), R->from_int(2))); // g_1 = X + 2
    // points are {0, -2}
    CHECK(l1->ext().is_zero(l1->point(0), 8));
    CHECK(R->congruent(l1->point(1).c[0], R->from_int(-2), 8));

    auto l2 = build_level(f, 2);
    CHECK(l2->e() == 2);
    CHECK(l2->point_count() == 4);
    CHECK(R->equal(l2->gm().coeff(0), R->from_int(2))); // g_2 = X^2 + 2X + 2
    CHECK(R->equal(l2->gm().coeff(1), R->from_int(2)));

    auto R3 = zp(3, 8, 20);
    auto f3 = LTPolynomial<PB>::cyclotomic(R3.get()); // (1+X)^3 - 1
    auto l13 = build_level(f3, 1);
    CHECK(l13->e() == 2);
    CHECK(R3->equal(l13->gm().coeff(0), R3->from_int(3))); // g_1 = X^2 + 3X + 3
    CHECK(R3->equal(l13->gm().coeff(1), R3->from_int(3)));
}

TEST_CASE("ext_valuation") {
    auto R = zp(2, 8, 20);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto l2 = build_level(f, 2);
    const auto& E = l2->ext();
    auto va = E.valuation(E.alpha());
    REQUIRE(va.has_value());
    CHECK(*va == 1);
    // pi * alpha^2 has valuation 4 when e = 2
    auto x = E.scale(R->pi(), E.mul(E.alpha(), E.alpha()));
    auto vx = E.valuation(x);
    REQUIRE(vx.has_value());
    CHECK(*vx == 4);
    CHECK_FALSE(E.valuation(E.zero()).has_value());
    // an untrusted coordinate that could undercut the best trusted term
    // makes the valuation undecidable
    auto shaky = E.from_coords({R->with_prec(R->zero(), 1), R->pi()});
    CHECK_THROWS_AS((void)E.valuation(shaky), PrecisionExhausted);
}

TEST_CASE("galois_apply") {
    auto R = zp(2, 8, 20);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto l2 = build_level(f, 2);
    const auto& E = l2->ext();
    // u = 1 is the identity
    CHECK(E.equal(l2->galois_apply(1, l2->alpha()), l2->alpha()));
    // u = 3: alpha -> -alpha - 2 (expand (1+X)^3 - 1 mod X^2+2X+2)
    auto img = l2->galois_apply(3, l2->alpha());
    auto expect = E.sub(E.neg(E.alpha()), E.from_ring(R->from_int(2)));
    CHECK(E.equal(img, expect));
    // u must be a unit
    CHECK_THROWS_AS((void)l2->galois_apply(2, l2->alpha()), NotAUnit);

    // p = 3, m = 1, u = -1 = 2: alpha -> -alpha
    auto R3 = zp(3, 8, 20);
    auto f3 = LTPolynomial<PB>::from_ints(R3.get(), {0, 3, 0, 1});
    auto l13 = build_level(f3, 1);
    CHECK(l13->ext().equal(l13->galois_apply(2, l13->alpha()),
                           l13->ext().neg(l13->alpha())));
}

TEST_CASE("norms of torsion elements") {
    auto R = zp(2, 8, 20);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto l2 = build_level(f, 2);
    const auto& E = l2->ext();
    // N(-alpha) = pi^{phi^{m-1}} = 2
    CHECK(R->congruent(l2->norm_rel(E.neg(l2->alpha())), R->from_int(2), 8));
    // scalar: N(pi) = pi^{(q-1) q^{m-1}} = 4
    CHECK(R->congruent(l2->norm_rel(E.from_ring(R->pi())), R->from_int(4), 8));
    // 1 + alpha = zeta_4: product of conjugates is 1
    CHECK(R->congruent(l2->norm_rel(E.add(E.one(), l2->alpha())), R->one(), 8));
}

TEST_CASE("check_separable") {
    auto R = zp(2, 8, 36);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    CHECK(check_separable(f, 0).pass); // vacuous: the single root 0
    for (unsigned m = 1; m <= 3; ++m) {
        auto rep = check_separable(f, m);
        CHECK(rep.pass);
        CHECK(rep.point_count == (1u << m));
    }
    // char p: the case where the separability statement carries the load
    BaseFieldConfig cfgT{FieldKind::PowerSeries, 2, 1, 8};
    auto RT = make_unramified<LB>(cfgT, 1, 0, 20);
    auto fT = LTPolynomial<LB>(Poly<LB>(RT.get(), {RT->zero(), RT->pi(), RT->one()}));
    auto rep = build_level(fT, 2)->check_separable();
    CHECK(rep.pass);
    CHECK(rep.point_count == 4);
    CHECK(rep.all_distinct);
}

TEST_CASE("eisenstein validation") {
    auto R = zp(2, 8, 8);
    // middle coefficient a unit: not Eisenstein
    auto bad = Poly<PB>::from_ints(R.get(), {2, 1, 1});
    CHECK_THROWS_AS((void)EisensteinExtension<PB>(R.get(), bad), NotEisenstein);
    // constant term valuation 2: not Eisenstein
    auto bad2 = Poly<PB>::from_ints(R.get(), {4, 2, 1});
    CHECK_THROWS_AS((void)EisensteinExtension<PB>(R.get(), bad2), NotEisenstein);
    // and a good one
    auto good = Poly<PB>::from_ints(R.get(), {2, 2, 1});
    EisensteinExtension<PB> E(R.get(), good);
    CHECK(E.e() == 2);
}

TEST_CASE("labels") {
    auto R = zp(2, 8, 8);
    for (std::uint64_t a = 0; a < 8; ++a) {
        auto el = label_to_elem(*R, a, 3);
        CHECK(elem_to_label(*R, el, 3) == a);
    }
    CHECK(label_mul(*R, 3, 5, 3) == 7); // 15 mod 8
    CHECK(label_add(*R, 3, 5, 3) == 0); // 8 mod 8
    CHECK(label_is_unit(*R, 3));
    CHECK_FALSE(label_is_unit(*R, 4));
}

TEST_CASE("torsion membership is asserted at construction") {
    // Every point satisfies f_m(point) = 0; the constructor would throw
    // otherwise. Build a couple of towers to exercise the assertion.
    auto R = zp(5, 6, 26);
    auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
    auto l1 = build_level(f, 1);
    CHECK(l1->point_count() == 5);
    auto sep = l1->check_separable();
    CHECK(sep.pass);
}
