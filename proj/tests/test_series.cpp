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

#include <random>

#include "lubin/series_json.hpp"
#include "lubin/solve.hpp"

using namespace lubin;
using PB = PadicBase;

static std::unique_ptr<PadicRing> zp(unsigned p, unsigned n, unsigned N, unsigned h) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, n, 0, h);
}

static TruncatedSeries<PB> random_series(const PadicRing* R, unsigned t, unsigned D,
                                         std::mt19937_64& rng) {
    TruncatedSeries<PB> s(R, t, D);
    for (auto& c : s.raw()) c = R->random_element(rng);
    return s;
}

TEST_CASE("add and mul") {
    auto R = zp(2, 1, 3, 4);
    unsigned D = 4;
    auto X = TruncatedSeries<PB>::variable(R.get(), 2, D, 0);
    auto Y = TruncatedSeries<PB>::variable(R.get(), 2, D, 1);
    auto sum = X + Y;
    CHECK(R->equal(sum.coeff({1, 0, 0}), R->one()));
    CHECK(R->equal(sum.coeff({0, 1, 0}), R->one()));
    auto prod = (X + Y) * (X - Y);
    CHECK(R->equal(prod.coeff({2, 0, 0}), R->one()));
    CHECK(R->equal(prod.coeff({0, 2, 0}), R->from_int(-1)));
    CHECK(R->is_zero(prod.coeff({1, 1, 0}), 3));

    // (1+2X)^2 = 1+4X+4X^2 mod 8
    auto one = TruncatedSeries<PB>::constant(R.get(), 1, D, R->one());
    auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, D, 0);
    auto s = one + x1.scaled(R->from_int(2));
    auto sq = s * s;
    CHECK(R->congruent(sq.coeff({0, 0, 0}), R->one(), 3));
    CHECK(R->congruent(sq.coeff({1, 0, 0}), R->from_int(4), 3));
    CHECK(R->congruent(sq.coeff({2, 0, 0}), R->from_int(4), 3));
}

TEST_CASE("compose") {
    auto R = zp(5, 1, 6, 4);
    unsigned D = 6;
    auto X = TruncatedSeries<PB>::variable(R.get(), 2, D, 0);
    auto Y = TruncatedSeries<PB>::variable(R.get(), 2, D, 1);
    auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, D, 0);
    auto xsq = x1 * x1;
    auto out = xsq.compose({X + Y});
    CHECK(R->equal(out.coeff({2, 0, 0}), R->one()));
    CHECK(R->equal(out.coeff({1, 1, 0}), R->from_int(2)));
    CHECK(R->equal(out.coeff({0, 2, 0}), R->one()));

    // f o X = f
    std::mt19937_64 rng(17);
    auto f = random_series(R.get(), 1, D, rng);
    f.set({0, 0, 0}, R->zero());
    CHECK((f.compose({x1}) - f).zero_mod(6));

    // ((1+X)^2 - 1) o ((1+X)^2 - 1) = (1+X)^4 - 1
    auto R2 = zp(2, 1, 8, 4);
    auto x2 = TruncatedSeries<PB>::variable(R2.get(), 1, D, 0);
    auto g = x2.scaled(R2->from_int(2)) + x2 * x2;
    auto gg = g.compose({g});
    CHECK(R2->equal(gg.coeff({1, 0, 0}), R2->from_int(4)));
    CHECK(R2->equal(gg.coeff({2, 0, 0}), R2->from_int(6)));
    CHECK(R2->equal(gg.coeff({3, 0, 0}), R2->from_int(4)));
    CHECK(R2->equal(gg.coeff({4, 0, 0}), R2->one()));

    // nonzero constant term is rejected
    auto bad = g + TruncatedSeries<PB>::constant(R2.get(), 1, D, R2->one());
    CHECK_THROWS_AS((void)g.compose({bad}), NonzeroConstantTerm);
}

TEST_CASE("apply_frobenius") {
    BaseFieldConfig cfg{FieldKind::PAdic, 2, 1, 8};
    auto R = make_unramified<PB>(cfg, 2, 0, 4);
    auto omega = R->teichmueller(R->res_from_index(2));
    auto c = TruncatedSeries<PB>::constant(R.get(), 1, 4, omega);
    auto c1 = c.apply_frobenius(1);
    CHECK(R->equal(c1.coeff({0, 0, 0}), R->pow(omega, 2)));
    CHECK((c.apply_frobenius(1).apply_frobenius(1) - c).zero_mod(8));
}

TEST_CASE("solve_functional_equation") {
    // cyclotomic: F_f = X + Y + XY exactly
    auto R = zp(2, 1, 12, 10);
    auto f = Poly<PB>::from_ints(R.get(), {0, 2, 1});
    auto F = solve_functional_equation(f, f, {R->one(), R->one()}, 8);
    const auto& exps = TruncatedSeries<PB>::all_exponents(2, 8);
    for (std::size_t i = 0; i < F.raw().size(); ++i) {
        bool unit_term = (exps[i][0] == 1 && exps[i][1] == 0) ||
                         (exps[i][0] == 0 && exps[i][1] == 1) ||
                         (exps[i][0] == 1 && exps[i][1] == 1);
        if (unit_term)
            CHECK(R->congruent(F.raw()[i], R->with_prec(R->one(), F.raw()[i].prec), 12));
        else
            CHECK(R->is_zero(F.raw()[i], 12));
    }

    // t = 1, theta = 1, f' = f: uniqueness forces X
    auto id = solve_functional_equation(f, f, {R->one()}, 8);
    auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, 8, 0);
    CHECK((id - x1).zero_mod(12));

    // f = 3X + X^3 over Z_3: the XY coefficient vanishes
    auto R3 = zp(3, 1, 8, 10);
    auto f3 = Poly<PB>::from_ints(R3.get(), {0, 3, 0, 1});
    auto F3 = solve_functional_equation(f3, f3, {R3->one(), R3->one()}, 8);
    CHECK(R3->is_zero(F3.coeff({1, 1, 0}), 8));

    // shape violations
    auto bad_pi = Poly<PB>::from_ints(R.get(), {0, 4, 1}); // linear coeff 4
    CHECK_THROWS_AS((void)solve_functional_equation(bad_pi, bad_pi, {R->one(), R->one()}, 6),
                    NotAUniformizer);
    // theta condition: over K_2 with pi' = pi, a non-Frobenius-fixed theta fails
    BaseFieldConfig cfg2{FieldKind::PAdic, 2, 1, 8};
    auto R2 = make_unramified<PB>(cfg2, 2, 0, 10);
    auto f2 = Poly<PB>(R2.get(), {R2->zero(), R2->from_int(2), R2->one()});
    auto omega = R2->teichmueller(R2->res_from_index(2));
    CHECK_THROWS_AS((void)solve_functional_equation(f2, f2, {omega}, 6),
                    ThetaConditionFailed);
}

TEST_CASE("mul and compose algebra on samples") {
    auto R = zp(3, 1, 6, 4);
    std::mt19937_64 rng(23);
    unsigned D = 5;
    for (int i = 0; i < 10; ++i) {
        auto a = random_series(R.get(), 2, D, rng);
        auto b = random_series(R.get(), 2, D, rng);
        auto c = random_series(R.get(), 2, D, rng);
        CHECK((a * b - b * a).zero_mod(6));
        CHECK(((a * b) * c - a * (b * c)).zero_mod(6));
    }
    // composition associativity: (f o g) o h = f o (g o h), one variable
    for (int i = 0; i < 5; ++i) {
        auto f = random_series(R.get(), 1, D, rng);
        auto g = random_series(R.get(), 1, D, rng);
        auto h = random_series(R.get(), 1, D, rng);
        g.set({0, 0, 0}, R->zero());
        h.set({0, 0, 0}, R->zero());
        f.set({0, 0, 0}, R->zero());
        auto lhs = f.compose({g}).compose({h});
        auto rhs = f.compose({g.compose({h})});
        CHECK((lhs - rhs).zero_mod(6));
    }
}

TEST_CASE("series JSON emission") {
    auto R = zp(2, 1, 12, 10);
    auto f = Poly<PB>::from_ints(R.get(), {0, 2, 1});
    auto F = solve_functional_equation(f, f, {R->one(), R->one()}, 2);
    auto j = series_to_json(F);
    CHECK(j["vars"] == 2);
    CHECK(j["deg_cap"] == 2);
    CHECK(j["prec"] == 12);
    REQUIRE(j["terms"].size() == 3);
    // sorted by (degree, lex): Y, X, XY
    CHECK(j["terms"][0]["exp"] == nlohmann::json::array({0, 1}));
    CHECK(j["terms"][1]["exp"] == nlohmann::json::array({1, 0}));
    CHECK(j["terms"][2]["exp"] == nlohmann::json::array({1, 1}));
    CHECK(j["terms"][2]["coeff"] == "[1] + O(2^12)");
    // byte-determinism across runs
    auto F2 = solve_functional_equation(f, f, {R->one(), R->one()}, 2);
    CHECK(series_to_json(F2).dump() == j.dump());
}
