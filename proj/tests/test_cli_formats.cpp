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

#include "lubin/series_json.hpp"
#include "lubin/solve.hpp"
#include "lubin/verify.hpp"

using namespace lubin;
using PB = PadicBase;

TEST_CASE("field element literal grammar") {
    BaseFieldConfig cfg{FieldKind::PAdic, 2, 1, 8};
    auto R = make_unramified<PB>(cfg, 1, 0, 0);
    auto a = R->parse_field("5");
    CHECK(a.val == 0);
    CHECK(R->congruent(a.unit, R->from_int(5), 8));
    auto b = R->parse_field("10");
    CHECK(b.val == 1);
    auto c = R->parse_field("[5]*2^1");
    CHECK(c.val == 1);
    CHECK(R->congruent(R->to_ring(c), R->from_int(10), 8));
    auto d = R->parse_field("[5]*2^-1");
    CHECK(d.val == -1);
    auto z = R->parse_field("0");
    CHECK(z.zero);
    // round trip through to_string
    auto again = R->parse_field(R->to_string(c));
    CHECK(again.val == c.val);
    CHECK(R->congruent(again.unit, c.unit, 8));
}

TEST_CASE("power-series literals") {
    BaseFieldConfig cfg{FieldKind::PowerSeries, 2, 1, 6};
    auto R = make_unramified<LaurentBase>(cfg, 1, 0, 0);
    auto x = R->parse("[t^2+1] + O(t^6)");
    auto expect = R->one() + R->mul_pi_pow(R->one(), 2);
    CHECK(R->equal(x, expect));
    CHECK(R->to_string(expect) == "[t^2+1] + O(t^6)");
    auto f = R->parse_field("[t^2+1]*t^2");
    CHECK(f.val == 2);
}

TEST_CASE("verify suites are named and deterministic") {
    CHECK(is_suite("axioms"));
    CHECK(is_suite("all"));
    CHECK_FALSE(is_suite("bogus"));
    VerifyOptions opt;
    opt.p_filter = 5;
    auto r1 = run_suite("axioms", opt);
    auto r2 = run_suite("axioms", opt);
    REQUIRE(!r1.empty());
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].name == r2[i].name);
        CHECK(r1[i].pass == r2[i].pass);
        CHECK(r1[i].pass);
    }
}

TEST_CASE("series JSON is byte-stable") {
    BaseFieldConfig cfg{FieldKind::PAdic, 3, 1, 8};
    auto R = make_unramified<PB>(cfg, 1, 0, 8);
    auto f = Poly<PB>::from_ints(R.get(), {0, 3, 0, 1});
    auto F1 = solve_functional_equation(f, f, {R->one(), R->one()}, 6);
    auto F2 = solve_functional_equation(f, f, {R->one(), R->one()}, 6);
    CHECK(series_to_json(F1).dump() == series_to_json(F2).dump());
}
