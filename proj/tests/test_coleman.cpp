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

#include "lubin/coleman.hpp"

using namespace lubin;
using PB = PadicBase;

static std::unique_ptr<PadicRing> zp(unsigned p, unsigned N, unsigned h) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, 1, 0, h);
}

namespace {

using Mat = std::vector<std::vector<Poly<PB>>>;

Mat mat_mul(const PadicRing* R, const Mat& a, const Mat& b) {
    std::size_t q = a.size();
    Mat out(q, std::vector<Poly<PB>>(q, Poly<PB>(R)));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Poly<PB> acc(R);
            for (std::size_t k = 0; k < q; ++k) acc = acc + a[i][k] * b[k][j];
            out[i][j] = acc;
        }
    return out;
}

Poly<PB> mat_det(const PadicRing* R, const Mat& m) {
    std::size_t q = m.size();
    if (q == 1) return m[0][0];
    Poly<PB> acc(R);
    for (std::size_t i = 0; i < q; ++i) {
        Mat minor;
        for (std::size_t r = 0; r < q; ++r) {
            if (r == i) continue;
            std::vector<Poly<PB>> row;
            for (std::size_t c = 1; c < q; ++c) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        auto term = m[i][0] * mat_det(R, minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Independent oracle: N(g)(T) is the determinant of multiplication by g
/// on O_L[T][Y] / (f(Y) - T), a free module with basis 1, Y, ..., Y^{q-1}.
Poly<PB> resultant_oracle(const LTPolynomial<PB>& f, const Poly<PB>& g) {
    const auto* R = f.ring();
    const unsigned q = R->q();
    Mat C(q, std::vector<Poly<PB>>(q, Poly<PB>(R)));
    for (unsigned j = 0; j + 1 < q; ++j) C[j + 1][j] = Poly<PB>::constant(R, R->one());
    // last column: Y^q = T - sum_{k<q} f_k Y^k
    C[0][q - 1] = Poly<PB>(R, {-f.poly().coeff(0), R->one()});
    for (unsigned k = 1; k < q; ++k)
        C[k][q - 1] = Poly<PB>::constant(R, -f.poly().coeff(k));
    // g(C) by Horner
    Mat M(q, std::vector<Poly<PB>>(q, Poly<PB>(R)));
    for (unsigned d = 0; d < q; ++d)
        M[d][d] = Poly<PB>::constant(R, g.coeff(static_cast<std::size_t>(g.degree())));
    for (long k = g.degree() - 1; k >= 0; --k) {
        M = mat_mul(R, M, C);
        for (unsigned d = 0; d < q; ++d)
            M[d][d] = M[d][d] + Poly<PB>::constant(R, g.coeff(static_cast<std::size_t>(k)));
    }
    return mat_det(R, M);
}

bool poly_congruent(const PadicRing* R, const Poly<PB>& a, const Poly<PB>& b, unsigned k) {
    auto d = a - b;
    for (const auto& c : d.coeffs())
        if (!R->is_zero(c, k)) return false;
    return true;
}

} // namespace

TEST_CASE("coleman_N on the worked examples") {
    auto R = zp(2, 8, 40);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto ctx = make_coleman_context(f, 6);

    auto g = Poly<PB>::from_ints(R.get(), {1, 1});
    auto ng = coleman_N(g, *ctx);
    REQUIRE(ng.degree() == 1);
    CHECK(R->congruent(ng.coeff(0), R->from_int(-1), 8));
    CHECK(R->congruent(ng.coeff(1), R->from_int(-1), 8));

    auto nx = coleman_N(Poly<PB>::x(R.get()), *ctx);
    CHECK(R->is_zero(nx.coeff(0), 8));
    CHECK(R->congruent(nx.coeff(1), R->from_int(-1), 8));

    auto none = coleman_N(Poly<PB>::constant(R.get(), R->one()), *ctx);
    REQUIRE(none.degree() == 0);
    CHECK(R->congruent(none.coeff(0), R->one(), 8));
}

TEST_CASE("coleman_N against the resultant oracle") {
    std::mt19937_64 rng(41);
    for (unsigned p : {2u, 3u}) {
        auto R = zp(p, 8, 70);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto ctx = make_coleman_context(f, 5);
        // the worked example first
        if (p == 2) {
            auto oracle = resultant_oracle(f, Poly<PB>::from_ints(R.get(), {1, 1}));
            CHECK(R->congruent(oracle.coeff(0), R->from_int(-1), 8));
            CHECK(R->congruent(oracle.coeff(1), R->from_int(-1), 8));
        }
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<RingElem<PB>> cs;
            for (int i = 0; i <= 4; ++i) cs.push_back(R->random_element(rng));
            Poly<PB> g(R.get(), cs);
            auto viaprod = coleman_N(g, *ctx);
            auto viares = resultant_oracle(f, g);
            CHECK(poly_congruent(R.get(), viaprod, viares, 8));
        }
    }
}

TEST_CASE("iterated_N and the unit norm sequence") {
    auto R = zp(2, 8, 40);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto ctx = make_coleman_context(f, 6);
    auto g = Poly<PB>::from_ints(R.get(), {1, 1});

    auto n0 = iterated_N(g, 0, *ctx);
    CHECK(poly_congruent(R.get(), n0, g, 8));
    // N^2(1+X) = -1-X again (N(-1) = 1 by multiplicativity)
    auto n2 = iterated_N(g, 2, *ctx);
    CHECK(R->congruent(n2.coeff(0), R->from_int(-1), 8));
    CHECK(R->congruent(n2.coeff(1), R->from_int(-1), 8));

    auto useq = unit_norm_sequence(g, 2, *ctx);
    REQUIRE(useq.size() == 3);
    CHECK(R->congruent(useq[0], R->one(), 8));
    CHECK(R->congruent(useq[1], R->from_int(-1), 8));
    CHECK(R->congruent(useq[2], R->from_int(-1), 8));
    // N_{L'/L}(g(alpha)) = u_2 / u_1 = 1, matching the conjugate product
    auto level2 = build_level(f, 2);
    auto ga = level2->ext().eval_poly(g, level2->alpha());
    CHECK(R->congruent(level2->norm_rel(ga), R->one(), 8));

    auto constant = Poly<PB>::constant(R.get(), R->one());
    for (const auto& u : unit_norm_sequence(constant, 3, *ctx))
        CHECK(R->congruent(u, R->one(), 8));

    // g(0) must be a unit
    CHECK_THROWS_AS((void)unit_norm_sequence(Poly<PB>::x(R.get()), 1, *ctx), InvalidArgument);
    // degree cap is enforced
    std::vector<RingElem<PB>> big(9, R->one());
    CHECK_THROWS_AS((void)coleman_N(Poly<PB>(R.get(), big), *ctx), InvalidArgument);
}

TEST_CASE("norm group membership") {
    std::mt19937_64 rng(43);
    auto R = zp(2, 8, 40);
    auto f = LTPolynomial<PB>::from_ints(R.get(), {0, 2, 1});
    auto ctx = make_coleman_context(f, 4);
    auto rep = norm_group_membership(R->to_field(R->pi()), 2, *ctx, 20, rng);
    CHECK(rep.pass);
    CHECK(rep.unit_norm_failures == 0);
    CHECK(rep.alpha_norm_matches);
}
