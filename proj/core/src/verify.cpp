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
#include "lubin/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "lubin/artin.hpp"
#include "lubin/coleman.hpp"
#include "lubin/ramification.hpp"

namespace lubin {
namespace {

using PB = PadicBase;
using LB = LaurentBase;

struct Check {
    std::string suite;
    std::string name;
    unsigned p; // fixture prime, for --p filtering
    std::function<std::pair<bool, std::string>(std::mt19937_64&)> run;
};

std::unique_ptr<PadicRing> padic_ring(unsigned p, unsigned n, unsigned N, unsigned headroom) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, n, 0, headroom);
}

std::unique_ptr<LaurentRing> laurent_ring(unsigned p, unsigned r, unsigned n, unsigned N,
                                          unsigned headroom) {
    BaseFieldConfig cfg{FieldKind::PowerSeries, p, r, N};
    return make_unramified<LB>(cfg, n, 0, headroom);
}

template <class B>
LTPolynomial<B> canonical_f(const UnramifiedRing<B>* R) {
    return LTPolynomial<B>::canonical(R, R->pi());
}

template <class B>
bool series_zero(const TruncatedSeries<B>& s, unsigned depth) {
    return s.zero_mod(depth);
}

template <class B>
TruncatedSeries<B> var3(const UnramifiedRing<B>* R, unsigned D, unsigned which) {
    return TruncatedSeries<B>::variable(R, 3, D, which);
}

template <class B>
Poly<B> random_poly(const UnramifiedRing<B>* R, unsigned deg, std::mt19937_64& rng,
                    bool unit_constant) {
    std::vector<RingElem<B>> c;
    for (unsigned i = 0; i <= deg; ++i) c.push_back(R->random_element(rng));
    if (unit_constant)
        while (!R->is_unit(c[0])) c[0] = R->random_element(rng);
    return Poly<B>(R, std::move(c));
}

std::string fmt_bool(const char* what, bool ok) {
    return std::string(what) + "=" + (ok ? "1" : "0") + " ";
}

// ---- axioms ---------------------------------------------------------------

std::pair<bool, std::string> check_cyclotomic_exact(unsigned p) {
    const unsigned N = 12, D = 8;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = LTPolynomial<PB>::cyclotomic(R.get());
    auto fg = build_formal_group(f, D);
    const auto& exps = TruncatedSeries<PB>::all_exponents(2, D);
    for (std::size_t i = 0; i < fg.F.raw().size(); ++i) {
        const Expo& e = exps[i];
        bool is_unit_term = (e[0] == 1 && e[1] == 0) || (e[0] == 0 && e[1] == 1) ||
                            (e[0] == 1 && e[1] == 1);
        const auto& c = fg.F.raw()[i];
        if (is_unit_term) {
            if (!R->congruent(c, R->with_prec(R->one(), c.prec), N))
                return {false, "unit coefficient differs"};
        } else if (!R->is_zero(c, N)) {
            return {false, "nonzero stray coefficient"};
        }
    }
    return {true, "F = X+Y+XY exactly"};
}

std::pair<bool, std::string> check_group_axioms(unsigned p) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = canonical_f(R.get());
    auto fg = build_formal_group(f, D);
    // associativity via 3-variable composition
    auto X = var3<PB>(R.get(), D, 0), Y = var3<PB>(R.get(), D, 1), Z = var3<PB>(R.get(), D, 2);
    auto FXY = fg.F.compose({X, Y});
    auto FYZ = fg.F.compose({Y, Z});
    auto lhs = fg.F.compose({FXY, Z});
    auto rhs = fg.F.compose({X, FYZ});
    bool assoc = (lhs - rhs).zero_mod(N);
    // identity via substitution of zero
    auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, D, 0);
    auto zero1 = TruncatedSeries<PB>(R.get(), 1, D);
    auto fx0 = fg.F.compose({x1, zero1});
    bool ident = (fx0 - x1).zero_mod(N);
    // symmetry asserted by build_formal_group already
    return {assoc && ident, fmt_bool("assoc", assoc) + fmt_bool("identity", ident)};
}

std::pair<bool, std::string> check_solver_determinism(unsigned p) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = canonical_f(R.get());
    auto a = solve_functional_equation(f.poly(), f.poly(), {R->one(), R->one()}, D, false);
    auto b = solve_functional_equation(f.poly(), f.poly(), {R->one(), R->one()}, D, true);
    for (std::size_t i = 0; i < a.raw().size(); ++i)
        if (R->to_string(a.raw()[i]) != R->to_string(b.raw()[i]))
            return {false, "coefficient maps differ between term orders"};
    return {true, "identical coefficient maps"};
}

std::pair<bool, std::string> check_fm_window(unsigned p) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = canonical_f(R.get());
    for (unsigned m = 1; m <= 2; ++m) {
        auto [fm, pim] = iterate_fm(f, m);
        auto endo = scalar_endo(pim, f, D);
        auto fm_series = TruncatedSeries<PB>::from_poly(fm, D);
        if (!(fm_series - endo.series).zero_mod(N))
            return {false, "f_m != [pi_m] at m=" + std::to_string(m)};
    }
    return {true, "f_m = [pi_m]_f for m <= 2"};
}

std::pair<bool, std::string> check_pi_hom_is_f(unsigned p) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 2, N, D + 2);
    auto f = canonical_f(R.get());
    auto hom = build_hom(R->pi(), f, f.frobenius(1), D);
    auto fs = TruncatedSeries<PB>::from_poly(f.poly(), D);
    bool ok = (hom.series - fs).zero_mod(N);
    return {ok, "[pi]_{f,f^phi} = f over K_2"};
}

// ---- module law -----------------------------------------------------------

std::pair<bool, std::string> check_linearity(unsigned p, std::mt19937_64& rng) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = canonical_f(R.get());
    auto fg = build_formal_group(f, D);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = R->random_element(rng);
        auto b = R->random_element(rng);
        auto ea = scalar_endo(a, f, D).series;
        auto eb = scalar_endo(b, f, D).series;
        auto esum = scalar_endo(a + b, f, D).series;
        auto eprod = scalar_endo(a * b, f, D).series;
        if (!(fg.F.compose({ea, eb}) - esum).zero_mod(N))
            return {false, "[a+b] != [a] +_F [b]"};
        if (!(ea.compose({eb}) - eprod).zero_mod(N))
            return {false, "[ab] != [a] o [b]"};
    }
    return {true, "20 sampled pairs"};
}

std::pair<bool, std::string> check_inverse_law(unsigned p) {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(p, 1, N, D + 2);
    auto f = canonical_f(R.get());
    auto fg = build_formal_group(f, D);
    auto inv = scalar_endo(R->from_int(-1), f, D).series;
    auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, D, 0);
    bool ok = series_zero(fg.F.compose({x1, inv}), N);
    return {ok, "F(X, [-1](X)) = 0"};
}

std::pair<bool, std::string> check_theta_compose() {
    const unsigned N = 8, D = 6;
    auto R = padic_ring(2, 2, N, D + 2);
    auto omega = R->teichmueller(R->res_from_index(2));
    auto pi1 = R->to_field(R->from_int(2));
    auto pi2 = R->to_field(R->mul_pi_pow(R->pow(omega, 2), 1));
    auto pi3 = R->to_field(R->mul_pi_pow(omega, 1));
    auto f1 = LTPolynomial<PB>::canonical(R.get(), R->to_ring(pi1));
    auto f2 = LTPolynomial<PB>::canonical(R.get(), R->to_ring(pi2));
    auto f3 = LTPolynomial<PB>::canonical(R.get(), R->to_ring(pi3));
    auto th1 = solve_theta(R.get(), pi1, pi2);
    auto th2 = solve_theta(R.get(), pi2, pi3);
    auto h1 = build_hom(th1, f1, f2, D);
    auto h2 = build_hom(th2, f2, f3, D);
    auto h12 = build_hom(th1 * th2, f1, f3, D);
    bool ok = (h2.series.compose({h1.series}) - h12.series).zero_mod(N);
    return {ok, "[theta'] o [theta] = [theta theta']"};
}

std::pair<bool, std::string> check_torsion_module_law(unsigned p, unsigned m, unsigned N,
                                                      std::mt19937_64& rng) {
    unsigned e = (p - 1) * ipow(p, m - 1);
    unsigned cap = e * N;
    auto R = padic_ring(p, 1, N, cap + 2);
    auto f = canonical_f(R.get());
    auto fg = build_formal_group(f, cap);
    auto level = build_level(f, m);
    const auto& E = level->ext();
    std::uint64_t count = level->point_count();
    for (int trial = 0; trial < 12; ++trial) {
        std::uint64_t a = rng() % count, b = rng() % count;
        auto sum = E.eval_series2(fg.F, level->point(a), level->point(b));
        auto expect = level->point(label_add(*R, a, b, m));
        if (!E.equal(sum, expect)) return {false, "point sum escaped the table"};
    }
    return {true, "[a](alpha) +_F [b](alpha) = [a+b](alpha)"};
}

// ---- torsion --------------------------------------------------------------

std::pair<bool, std::string> check_torsion_counts(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, m);
    auto sep = level->check_separable();
    bool count_ok = sep.point_count == ipow_u64(p, m) && sep.all_distinct;
    bool deg_ok = level->e() == e;
    auto c0 = level->gm().coeff(0);
    bool const_ok = R->congruent(c0, R->frobenius(f.pi_elem(), static_cast<long>(m) - 1), N);
    return {count_ok && deg_ok && const_ok,
            fmt_bool("count", count_ok) + fmt_bool("degree", deg_ok) +
                fmt_bool("const-term", const_ok)};
}

std::pair<bool, std::string> check_charp_torsion(unsigned m) {
    const unsigned N = 8;
    unsigned e = ipow(2, m - 1);
    auto R = laurent_ring(2, 1, 1, N, e * N + 2);
    auto f = LTPolynomial<LB>(Poly<LB>(R.get(), {R->zero(), R->pi(), R->one()}));
    auto level = build_level(f, m);
    auto sep = level->check_separable();
    bool ok = sep.pass && sep.point_count == ipow_u64(2, m);
    std::ostringstream os;
    os << "points=" << sep.point_count << " distinct=" << sep.all_distinct
       << " v(f_m'(alpha))=" << (sep.derivative_valuation ? *sep.derivative_valuation : -1);
    return {ok, os.str()};
}

std::pair<bool, std::string> check_galois_structure(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, m);
    std::uint64_t count = level->point_count();
    for (std::uint64_t u = 1; u < count; ++u) {
        if (!label_is_unit(*R, u)) continue;
        for (std::uint64_t v = 1; v < count; ++v) {
            if (!label_is_unit(*R, v)) continue;
            auto lhs = level->galois_apply(u, level->galois_apply(v, level->alpha()));
            auto rhs = level->galois_apply(label_mul(*R, u, v, m), level->alpha());
            if (!level->ext().equal(lhs, rhs)) return {false, "composition failed"};
            auto sym = level->galois_apply(v, level->galois_apply(u, level->alpha()));
            if (!level->ext().equal(lhs, sym)) return {false, "not abelian"};
        }
    }
    return {true, "sigma_u sigma_v = sigma_uv, abelian"};
}

std::pair<bool, std::string> check_valuation_pattern(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, m);
    for (std::uint64_t a = 1; a < level->point_count(); ++a) {
        unsigned j = 0;
        std::uint64_t aa = a;
        while (aa % p == 0) {
            aa /= p;
            ++j;
        }
        auto v = level->ext().valuation(level->point(a));
        long expect = static_cast<long>(ipow_u64(p, j));
        if (!v || *v != expect) return {false, "v([a](alpha)) != q^{v_p(a)}"};
    }
    return {true, "v([a](alpha)) = q^{v_p(a)} for all a"};
}

std::pair<bool, std::string> check_ext_valuation_mult(std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 2 * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, 2);
    const auto& E = level->ext();
    for (int trial = 0; trial < 20; ++trial) {
        auto x = E.random_element(rng);
        auto y = E.random_element(rng);
        auto vx = E.valuation(x), vy = E.valuation(y), vxy = E.valuation(E.mul(x, y));
        if (!vx || !vy) continue;
        if (!vxy || *vxy != *vx + *vy) return {false, "v(xy) != v(x)+v(y)"};
    }
    return {true, "valuation additive on samples"};
}

std::pair<bool, std::string> check_norm_valuation(unsigned n) {
    const unsigned N = 8;
    auto R = padic_ring(2, n, N, 2 * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, 2);
    auto nrm = R->to_field(level->norm_abs(level->alpha()));
    bool ok = !nrm.zero && nrm.val == static_cast<long>(n);
    return {ok, "v_K(norm_abs(alpha)) = n"};
}

// ---- coleman ---------------------------------------------------------------

template <class B>
LTPolynomial<B> coleman_f(const UnramifiedRing<B>* R) {
    return LTPolynomial<B>::canonical(R, R->pi());
}

std::pair<bool, std::string> check_coleman_mult(unsigned p, std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(p, 1, N, 8 * N);
    auto ctx = make_coleman_context(coleman_f(R.get()), 6);
    for (int trial = 0; trial < 8; ++trial) {
        auto g1 = random_poly(R.get(), 3, rng, false);
        auto g2 = random_poly(R.get(), 3, rng, false);
        auto lhs = coleman_N(g1 * g2, *ctx);
        auto rhs = coleman_N(g1, *ctx) * coleman_N(g2, *ctx);
        auto diff = lhs - rhs;
        for (const auto& c : diff.coeffs())
            if (!R->is_zero(c, N)) return {false, "N(g1 g2) != N(g1) N(g2)"};
    }
    return {true, "multiplicative on 8 sampled pairs"};
}

template <class B>
std::pair<bool, std::string> coleman_frobenius_congruence(const UnramifiedRing<B>* R,
                                                          std::mt19937_64& rng) {
    auto ctx = make_coleman_context(coleman_f(R), 5);
    for (int trial = 0; trial < 6; ++trial) {
        auto g = random_poly(R, 4, rng, false);
        auto ng = coleman_N(g, *ctx);
        auto diff = ng - g.frobenius(1);
        for (const auto& c : diff.coeffs())
            if (!R->is_zero(c, 1)) return {false, "N(g) != g^phi mod pi"};
    }
    return {true, "N(g) = g^phi mod pi"};
}

std::pair<bool, std::string> check_coleman_unit_congruence(std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 8 * N);
    auto ctx = make_coleman_context(coleman_f(R.get()), 6);
    for (unsigned k = 1; k <= 3; ++k) {
        auto h = random_poly(R.get(), 3, rng, false);
        std::vector<RingElem<PB>> c;
        for (const auto& hi : h.coeffs()) c.push_back(R->mul_pi_pow(hi, k));
        auto g = Poly<PB>(R.get(), c) + Poly<PB>::constant(R.get(), R->one());
        auto ng = coleman_N(g, *ctx);
        auto diff = ng - Poly<PB>::constant(R.get(), R->one());
        for (const auto& cc : diff.coeffs())
            if (!R->is_zero(cc, k + 1)) return {false, "N(1 + pi^k h) != 1 mod pi^{k+1}"};
    }
    return {true, "g=1 mod pi^k implies N(g)=1 mod pi^{k+1}"};
}

std::pair<bool, std::string> check_coleman_tower_congruence(unsigned p, std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(p, 1, N, 8 * N);
    auto ctx = make_coleman_context(coleman_f(R.get()), 5);
    for (int trial = 0; trial < 4; ++trial) {
        auto g = random_poly(R.get(), 3, rng, true);
        Poly<PB> prev = g;
        for (unsigned m = 1; m <= 3; ++m) {
            auto cur = coleman_N(prev, *ctx);
            auto diff = cur - prev.frobenius(1);
            for (const auto& c : diff.coeffs())
                if (!R->is_zero(c, m)) return {false, "N^m/N^{m-1}^phi != 1 mod pi^m"};
            prev = cur;
        }
    }
    return {true, "Coleman tower congruence to m = 3"};
}

std::pair<bool, std::string> check_colemanop1(unsigned p, unsigned depth,
                                              std::mt19937_64& rng) {
    // Evaluate both sides at the torsion points of level depth+1.
    const unsigned N = 8;
    unsigned e_top = (p - 1) * ipow(p, depth);
    auto R = padic_ring(p, 1, N, 8 * N + e_top);
    auto f = coleman_f(R.get());
    auto ctx = make_coleman_context(f, 4);
    auto top = build_level(f, depth + 1);
    const auto& E = top->ext();
    auto g = random_poly(R.get(), 3, rng, true);
    auto ng = iterated_N(g, depth, *ctx);
    auto [fm, pim] = iterate_fm(f, depth);
    std::uint64_t top_count = top->point_count();
    for (std::uint64_t x = 0; x < top_count; x += std::max<std::uint64_t>(1, top_count / 6)) {
        auto lhs = E.eval_poly(ng, E.eval_poly(fm, top->point(x)));
        auto rhs = E.one();
        for (std::uint64_t b = 0; b < ipow_u64(p, depth); ++b) {
            std::uint64_t beta_label = b * p; // mu_depth inside level depth+1
            auto sum = top->point(label_add(*R, x, beta_label, depth + 1));
            rhs = E.mul(rhs, E.eval_poly(g, sum));
        }
        if (!E.equal(lhs, rhs)) return {false, "N^m(g) o f_m != conjugate product"};
    }
    return {true, "checked at level-" + std::to_string(depth + 1) + " points"};
}

std::pair<bool, std::string> check_dual_oracle(unsigned p, std::mt19937_64& rng) {
    const unsigned N = 8;
    const unsigned m = 2;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, 8 * N + e);
    auto f = coleman_f(R.get());
    auto ctx = make_coleman_context(f, std::max(6u, e));
    auto level = build_level(f, m);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_poly(R.get(), e - 1 == 0 ? 1 : e - 1, rng, true);
        auto seq = unit_norm_sequence(g, m, *ctx);
        auto ratio = seq[m] * R->inv_unit(seq[m - 1]);
        auto conj = level->norm_rel(level->ext().eval_poly(g, level->alpha()));
        if (!R->congruent(ratio, conj, N)) return {false, "u_m/u_{m-1} != N_{L'/L}(g(alpha))"};
    }
    return {true, "20 unit polynomials, both norm routes agree"};
}

std::pair<bool, std::string> check_nx_sign(unsigned p) {
    const unsigned N = 8;
    auto R = padic_ring(p, 1, N, 8 * N);
    auto ctx = make_coleman_context(coleman_f(R.get()), 4);
    auto nx = coleman_N(Poly<PB>::x(R.get()), *ctx);
    long long sign = (p % 2 == 0) ? -1 : 1; // (-1)^{q+1}
    bool ok = nx.degree() == 1 && R->is_zero(nx.coeff(0), N) &&
              R->congruent(nx.coeff(1), R->from_int(sign), N);
    return {ok, "N(X) = (-1)^{q+1} X"};
}

// ---- norms -----------------------------------------------------------------

std::pair<bool, std::string> check_norm_group(unsigned p, unsigned m, std::mt19937_64& rng) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    auto ctx = make_coleman_context(f, 4);
    auto x = R->to_field(R->pi());
    auto rep = norm_group_membership(x, m, *ctx, 20, rng);
    std::ostringstream os;
    os << "failures=" << rep.unit_norm_failures
       << " alpha-norm=" << rep.alpha_norm_matches;
    return {rep.pass, os.str()};
}

std::pair<bool, std::string> check_norm_preimage(unsigned p, std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(p, 2, N, 4);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = R->from_coeff(R->base().lift(static_cast<fq_t>(1 + rng() % (p - 1))));
        // random base unit: unit residue plus random higher digits
        u = u + R->mul_pi_pow(R->from_coeff(R->random_element(rng).c[0]), 1);
        auto v = R->norm_preimage(u);
        if (!R->congruent(R->norm_to_base(v), u, N)) return {false, "norm(preimage) != u"};
    }
    return {true, "50 random base units"};
}

std::pair<bool, std::string> check_norm_trace_algebra(std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(3, 2, N, 4);
    for (int trial = 0; trial < 25; ++trial) {
        auto x = R->random_element(rng);
        auto y = R->random_element(rng);
        if (!R->congruent(R->norm_to_base(x * y),
                          R->norm_to_base(x) * R->norm_to_base(y), N))
            return {false, "norm not multiplicative"};
        if (!R->congruent(R->trace_to_base(x + y),
                          R->trace_to_base(x) + R->trace_to_base(y), N))
            return {false, "trace not additive"};
    }
    return {true, "norm multiplicative, trace additive (25 samples)"};
}

// ---- ramification ----------------------------------------------------------

template <class B>
std::pair<bool, std::string> lt_ramification_table(const UnramifiedRing<B>* R,
                                                   const LTPolynomial<B>& f, unsigned m) {
    auto level = build_level(f, m);
    auto pres = GaloisPresentation<B>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    const unsigned q = R->q();
    // |G_n| = q^{m-i} for q^{i-1}-1 < n <= q^i - 1.
    for (unsigned i = 1; i <= m; ++i) {
        long lo = static_cast<long>(ipow_u64(q, i - 1)) - 1;
        long hi = static_cast<long>(ipow_u64(q, i)) - 1;
        for (long n = lo + 1; n <= hi; ++n)
            if (filt.group_order(n) != ipow_u64(q, m - i))
                return {false, "|G_n| != q^{m-i} at n=" + std::to_string(n)};
    }
    if (filt.phi(Rat(static_cast<long long>(ipow_u64(q, m)) - 1)) != Rat(m))
        return {false, "phi(q^m - 1) != m"};
    if (filt.upper(Rat(m)).size() != 1) return {false, "G^m not trivial"};
    for (long n : filt.jumps)
        if (filt.phi(Rat(n)).denominator() != 1) return {false, "non-integral jump"};
    return {true, "|G_n| table, phi(q^m-1)=m, G^m=1, integral jumps"};
}

std::pair<bool, std::string> check_lt_table_p(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    return lt_ramification_table(R.get(), f, m);
}

std::pair<bool, std::string> check_lt_table_charp(unsigned m) {
    const unsigned N = 8;
    unsigned e = ipow(2, m - 1);
    auto R = laurent_ring(2, 1, 1, N, e * N + 2);
    auto f = LTPolynomial<LB>(Poly<LB>(R.get(), {R->zero(), R->pi(), R->one()}));
    return lt_ramification_table(R.get(), f, m);
}

std::pair<bool, std::string> check_i_pattern(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = canonical_f(R.get());
    auto level = build_level(f, m);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    for (std::size_t k = 0; k < pres.size(); ++k) {
        if (k == pres.id_index()) continue;
        std::uint64_t u = std::stoull(pres.label(k));
        unsigned i = 0;
        std::uint64_t d = (u + ipow_u64(p, m) - 1) % ipow_u64(p, m); // u - 1
        while (d % p == 0) {
            d /= p;
            ++i;
        }
        if (!filt.i_table[k] || *filt.i_table[k] != static_cast<long>(ipow_u64(p, i)))
            return {false, "i(sigma_u) != q^{v(u-1)}"};
    }
    return {true, "i(sigma_u) = q^{v(u-1)} for all u"};
}

std::pair<bool, std::string> check_hasse_arf(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto level = build_level(canonical_f(R.get()), m);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    auto rep = hasse_arf_check(pres, filt);
    return {rep.pass, fmt_bool("integral", rep.jumps_integral) +
                          fmt_bool("tame", rep.tame_divisibility) +
                          fmt_bool("upper-bound", rep.upper_index_bound)};
}

std::pair<bool, std::string> check_theta_maps(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2 + m + 2);
    auto level = build_level(canonical_f(R.get()), m);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    auto rep = theta_maps(pres, filt);
    return {rep.pass, fmt_bool("tame-inj", rep.tame_injective) +
                          fmt_bool("tame-hom", rep.tame_homomorphism) +
                          fmt_bool("wild-inj", rep.wild_injective) +
                          fmt_bool("wild-hom", rep.wild_homomorphism)};
}

std::pair<bool, std::string> check_sen(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto level = build_level(canonical_f(R.get()), m);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    auto rep = sen_check(pres, filt);
    std::ostringstream os;
    os << "elements=" << rep.elements_checked << " " << fmt_bool("orders", rep.orders_are_p_powers)
       << fmt_bool("increasing", rep.strictly_increasing)
       << fmt_bool("law", rep.power_value_law) << fmt_bool("cong", rep.congruences);
    return {rep.pass, os.str()};
}

/// The hand-entered cyclotomic fixture: automorphisms of Q_2(zeta_8)/Q_2
/// entered by ring exponentiation (1+alpha)^u - 1, independent of the
/// Lubin-Tate series machinery.
std::pair<bool, std::string> check_herbrand_zeta8() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 4);
    auto f = LTPolynomial<PB>::cyclotomic(R.get());
    auto level3 = build_level(f, 3);
    const auto& E = level3->ext();
    std::vector<std::string> labels;
    std::vector<ExtElem<PB>> images;
    auto one_plus_alpha = E.add(E.one(), E.alpha());
    for (std::uint64_t u = 1; u < 8; u += 2) {
        labels.push_back(std::to_string(u));
        images.push_back(E.sub(E.pow(one_plus_alpha, u), E.one()));
    }
    GaloisPresentation<PB> pres(&E, std::move(labels), std::move(images));
    auto filt = lower_numbering(pres);
    // H = the image of 1 + pi^2 = {1, 5}.
    std::vector<std::size_t> H{*pres.find_label("1"), *pres.find_label("5")};
    auto rep = herbrand_quotient(pres, filt, H);
    if (!rep.pass)
        return {false, fmt_bool("integral", rep.averages_integral) +
                           fmt_bool("herbrand", rep.herbrand_identity) +
                           fmt_bool("transitivity", rep.transitivity)};
    // Direct subfield comparison: the m=2 tower carries Gal(Q_2(zeta_4)/Q_2).
    auto level2 = build_level(f, 2);
    auto pres2 = GaloisPresentation<PB>::from_torsion(*level2);
    auto filt2 = lower_numbering(pres2);
    for (std::size_t c = 0; c < rep.cosets.size(); ++c) {
        std::uint64_t u8 = std::stoull(pres.label(rep.cosets[c][0]));
        auto k2 = pres2.find_label(std::to_string(u8 % 4));
        if (!k2) return {false, "coset label missing downstairs"};
        auto direct = filt2.i_table[*k2];
        auto averaged = rep.i_bar[c];
        bool both_inf = !direct && !averaged;
        bool equal = direct && averaged && Rat(*direct) == *averaged;
        if (!both_inf && !equal) return {false, "iofquot average != direct i"};
    }
    return {true, "herbrand + transitivity + direct agreement"};
}

std::pair<bool, std::string> check_uniformizer_independence() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 2);
    auto level = build_level(canonical_f(R.get()), 3);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    const auto& E = level->ext();
    auto alt = E.mul(E.alpha(), E.add(E.one(), E.alpha()));
    auto filt2 = lower_numbering(pres, &alt);
    if (filt.groups.size() != filt2.groups.size()) return {false, "chain lengths differ"};
    for (std::size_t n = 0; n < filt.groups.size(); ++n)
        if (filt.groups[n] != filt2.groups[n]) return {false, "G_n differ"};
    return {true, "identical chain for alpha' = alpha(1+alpha)"};
}

std::pair<bool, std::string> check_wildcycram(unsigned p, unsigned m, std::mt19937_64& rng) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto level = build_level(canonical_f(R.get()), m);
    auto pres = GaloisPresentation<PB>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    const auto& E = level->ext();
    // pick sigma in G_1 of order exactly p
    std::optional<std::size_t> sigma;
    for (auto s : filt.group(1))
        if (s != pres.id_index() && pres.order(s) == p) sigma = s;
    if (!sigma) return {false, "no order-p element in G_1"};
    for (int trial = 0; trial < 20; ++trial) {
        auto x = E.random_element(rng);
        auto vx = E.valuation(x);
        if (!vx) continue;
        auto acc = E.zero();
        auto cur = x;
        for (unsigned i = 0; i < p; ++i) {
            acc = E.add(acc, cur);
            cur = pres.apply(*sigma, cur);
        }
        auto vs = E.valuation(acc);
        if (vs && *vs <= *vx) return {false, "trace sum did not gain valuation"};
    }
    return {true, "v(sum sigma^i x) > v(x) on 20 samples"};
}

// ---- artin ----------------------------------------------------------------

std::pair<bool, std::string> check_artin_bijectivity() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 2);
    auto level = build_level(canonical_f(R.get()), 3);
    std::vector<ArtinDescriptor<PB>> descs;
    for (unsigned j = 0; j <= 1; ++j)
        for (std::uint64_t u = 1; u < 8; u += 2) {
            auto x = FieldElem<PB>::make(R->from_int(static_cast<long long>(u)),
                                         static_cast<long>(j));
            descs.push_back(artin_apply(x, *level));
        }
    for (std::size_t a = 0; a < descs.size(); ++a)
        for (std::size_t b = a + 1; b < descs.size(); ++b) {
            if (descs[a].frobenius_exponent != descs[b].frobenius_exponent) continue;
            if (descs[a].permutation == descs[b].permutation)
                return {false, "two descriptors coincide"};
        }
    return {true, "units x {1, pi} give pairwise distinct descriptors"};
}

std::pair<bool, std::string> check_artin_homomorphism() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 2);
    auto level = build_level(canonical_f(R.get()), 3);
    for (std::uint64_t a = 1; a < 8; a += 2)
        for (std::uint64_t b = 1; b < 8; b += 2) {
            auto x = R->to_field(R->from_int(static_cast<long long>(a)));
            auto y = R->to_field(R->from_int(static_cast<long long>(b)));
            auto rep = check_homomorphism(x, y, *level);
            if (!rep.pass) return {false, "failed at units"};
        }
    auto rep = check_homomorphism(R->to_field(R->from_int(2)),
                                  R->to_field(R->from_int(5)), *level);
    if (!rep.pass) return {false, "failed at (2, 5)"};
    rep = check_homomorphism(R->to_field(R->from_int(10)),
                             R->to_field(R->from_int(6)), *level);
    if (!rep.pass) return {false, "failed at (10, 6)"};
    return {true, "exhaustive on (Z/8)^x plus mixed valuations"};
}

std::pair<bool, std::string> check_artin_cyclotomic(unsigned p, unsigned m) {
    const unsigned N = 8;
    unsigned e = (p - 1) * ipow(p, m - 1);
    auto R = padic_ring(p, 1, N, e * N + 2);
    auto f = LTPolynomial<PB>::cyclotomic(R.get());
    auto level = build_level(f, m);
    const auto& E = level->ext();
    for (std::uint64_t u = 1; u < level->point_count(); ++u) {
        if (!label_is_unit(*R, u)) continue;
        auto desc = artin_apply(R->to_field(R->from_int(static_cast<long long>(u))), *level);
        for (std::uint64_t a = 0; a < level->point_count(); ++a) {
            // zeta^u - 1 computed by ring exponentiation, independent of [u].
            auto zeta_u = E.sub(E.pow(E.add(E.one(), level->point(a)), u), E.one());
            if (!E.equal(level->point(desc.apply_label(a)), zeta_u))
                return {false, "zeta -> zeta^u mismatch"};
        }
    }
    return {true, "zeta -> zeta^u matches modular exponentiation"};
}

std::pair<bool, std::string> check_artin_restriction() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 2);
    auto f = canonical_f(R.get());
    auto level2 = build_level(f, 2);
    auto level3 = build_level(f, 3);
    for (std::uint64_t u = 1; u < 8; u += 2) {
        auto x = R->to_field(R->from_int(static_cast<long long>(u)));
        auto d3 = artin_apply(x, *level3);
        auto d2 = artin_apply(x, *level2);
        for (std::uint64_t b = 0; b < 4; ++b) {
            // level-2 points sit inside level 3 as the labels 2b.
            std::uint64_t img3 = d3.apply_label(2 * b);
            if (img3 != 2 * d2.apply_label(b)) return {false, "restriction mismatch"};
        }
    }
    return {true, "level-3 action restricts to the level-2 action"};
}

std::pair<bool, std::string> check_artin_independence_of_f() {
    const unsigned N = 8, D = 8;
    auto R = padic_ring(3, 1, N, 2 * N + D + 2);
    auto f1 = LTPolynomial<PB>::from_ints(R.get(), {0, 3, 0, 1});
    auto f2 = LTPolynomial<PB>::from_ints(R.get(), {0, 3, 3, 1});
    auto link = build_hom(R->one(), f1, f2, D);
    for (long long u : {2, 4, 5}) {
        auto ua = scalar_endo(R->from_int(u), f1, D).series;
        auto ub = scalar_endo(R->from_int(u), f2, D).series;
        auto lhs = link.series.compose({ua});
        auto rhs = ub.compose({link.series});
        if (!(lhs - rhs).zero_mod(N)) return {false, "[1]_{f,f'} does not intertwine [u]"};
    }
    // And the pointwise bijection between the two torsion modules.
    auto level1 = build_level(f1, 1);
    auto hom_big = build_hom(R->one(), f1, f2, level1->eval_cap());
    const auto& E = level1->ext();
    std::vector<ExtElem<PB>> images;
    auto [f2m, pim2] = iterate_fm(f2, 1);
    for (std::uint64_t a = 0; a < level1->point_count(); ++a) {
        auto im = E.eval_series(hom_big.series, level1->point(a));
        if (!E.is_zero(E.eval_poly(f2m, im), R->N())) return {false, "image not f2-torsion"};
        for (const auto& other : images)
            if (E.equal(other, im)) return {false, "collision"};
        images.push_back(im);
    }
    return {true, "rho_{f,m} = rho_{f',m} through [1]_{f,f'}"};
}

std::pair<bool, std::string> check_artin_v_compat() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, 4 * N + 2);
    auto level = build_level(canonical_f(R.get()), 2);
    for (long long val : {0, 1, 2, -1}) {
        auto x = FieldElem<PB>::make(R->from_int(3), static_cast<long>(val));
        auto d = artin_apply(x, *level);
        if (d.frobenius_exponent != -val) return {false, "v(Art(x)) != v(x)"};
    }
    return {true, "frobenius exponent is -v(x)"};
}

// ---- relative -------------------------------------------------------------

std::pair<bool, std::string> check_relative_link(unsigned m) {
    const unsigned N = 8;
    unsigned cap = std::max(2u, (2u - 1) * ipow(2, m - 1)) * N;
    auto R = padic_ring(2, 2, N, cap + 4);
    auto omega = R->teichmueller(R->res_from_index(2));
    auto xprime = R->to_field(R->mul_pi_pow(R->pow(omega, 2), 1));
    auto rep = norm_compatibility_check(R.get(), xprime, m);
    return {rep.pass, fmt_bool("linked", rep.towers_linked) +
                          fmt_bool("norm-fixes", rep.norm_action_fixes) + "v=" +
                          std::to_string(rep.v_of_norm)};
}

std::pair<bool, std::string> check_relative_characterization() {
    const unsigned N = 8;
    auto R = padic_ring(2, 2, N, 2 * N + 4);
    auto x = R->to_field(R->from_int(4));
    auto rep = check_characterization(R.get(), x, 1);
    return {rep.pass, fmt_bool("norm", rep.norm_matches) +
                          fmt_bool("fixed", rep.torsion_fixed)};
}

std::pair<bool, std::string> check_relative_norm_mismatch() {
    const unsigned N = 8;
    auto R = padic_ring(2, 1, N, N + 2);
    try {
        solve_theta(R.get(), R->to_field(R->from_int(2)), R->to_field(R->from_int(6)));
        return {false, "no NormMismatch raised"};
    } catch (const NormMismatch&) {
        return {true, "NormMismatch raised for unequal norms (n=1)"};
    }
}

std::pair<bool, std::string> check_relative_coleman(std::mt19937_64& rng) {
    const unsigned N = 8;
    auto R = padic_ring(2, 2, N, 8 * N);
    return coleman_frobenius_congruence(R.get(), rng);
}

/// Dual-oracle agreement over a tower whose f has non-Frobenius-fixed
/// coefficients, so the iterate N^m genuinely walks through the twisted
/// operators N_{f^{phi^t}}.
std::pair<bool, std::string> check_relative_dual_oracle(std::mt19937_64& rng) {
    const unsigned N = 8;
    const unsigned m = 2;
    auto R = padic_ring(2, 2, N, 8 * N);
    auto omega = R->teichmueller(R->res_from_index(2));
    auto pi = R->mul_pi_pow(R->pow(omega, 2), 1); // 2 omega^2
    auto f = LTPolynomial<PB>::canonical(R.get(), pi);
    if (R->congruent(f.poly().coeff(1), R->frobenius(f.poly().coeff(1), 1), R->N()))
        return {false, "fixture is not actually twisted"};
    auto ctx = make_coleman_context(f, 4);
    auto level = build_level(f, m);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_poly(R.get(), 1, rng, true); // units are linear in alpha (e = 2)
        auto seq = unit_norm_sequence(g, m, *ctx);
        auto ratio = seq[m] * R->inv_unit(seq[m - 1]);
        auto conj = level->norm_rel(level->ext().eval_poly(g, level->alpha()));
        if (!R->congruent(ratio, conj, N))
            return {false, "twisted-tower norm routes disagree"};
        // colemanop2(iii) with the genuine phi twist
        auto diff = seq[m] - R->frobenius(seq[m - 1], 1);
        if (!R->is_zero(diff, m)) return {false, "twisted tower congruence failed"};
    }
    return {true, "10 unit polynomials over the twisted n=2 tower"};
}

std::pair<bool, std::string> check_charp_norm_group(std::mt19937_64& rng) {
    const unsigned N = 8;
    const unsigned m = 2;
    auto R = laurent_ring(2, 1, 1, N, 2 * N + 8);
    auto f = LTPolynomial<LB>(Poly<LB>(R.get(), {R->zero(), R->pi(), R->one()}));
    auto ctx = make_coleman_context(f, 4);
    auto rep = norm_group_membership(R->to_field(R->pi()), m, *ctx, 20, rng);
    return {rep.pass, "char-p tower norm group"};
}

// ---- registry ---------------------------------------------------------------

std::vector<Check> build_registry() {
    std::vector<Check> reg;
    auto add = [&](const std::string& suite, const std::string& name, unsigned p,
                   std::function<std::pair<bool, std::string>(std::mt19937_64&)> fn) {
        reg.push_back(Check{suite, name, p, std::move(fn)});
    };
    auto nor = [](std::function<std::pair<bool, std::string>()> fn) {
        return [fn](std::mt19937_64&) { return fn(); };
    };

    for (unsigned p : {2u, 3u, 5u}) {
        add("axioms", "cyclotomic-exact-p" + std::to_string(p), p,
            nor([p] { return check_cyclotomic_exact(p); }));
        add("axioms", "group-axioms-p" + std::to_string(p), p,
            nor([p] { return check_group_axioms(p); }));
        add("module-law", "linearity-p" + std::to_string(p), p,
            [p](std::mt19937_64& rng) { return check_linearity(p, rng); });
    }
    add("axioms", "solver-determinism-p3", 3, nor([] { return check_solver_determinism(3); }));
    add("axioms", "fm-is-pim-endo-p2", 2, nor([] { return check_fm_window(2); }));
    add("axioms", "fm-is-pim-endo-p3", 3, nor([] { return check_fm_window(3); }));
    add("axioms", "pi-hom-is-f-n2-p2", 2, nor([] { return check_pi_hom_is_f(2); }));

    add("module-law", "inverse-p2", 2, nor([] { return check_inverse_law(2); }));
    add("module-law", "inverse-p3", 3, nor([] { return check_inverse_law(3); }));
    add("module-law", "theta-compose-n2", 2, nor([] { return check_theta_compose(); }));
    add("module-law", "torsion-points-p2m2", 2,
        [](std::mt19937_64& rng) { return check_torsion_module_law(2, 2, 8, rng); });
    add("module-law", "torsion-points-p3m2", 3,
        [](std::mt19937_64& rng) { return check_torsion_module_law(3, 2, 6, rng); });

    for (auto [p, mtop] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 1}})
        for (unsigned m = 1; m <= mtop; ++m)
            add("torsion", "counts-p" + std::to_string(p) + "m" + std::to_string(m), p,
                nor([p = p, m] { return check_torsion_counts(p, m); }));
    add("torsion", "separability-charp-m1", 2, nor([] { return check_charp_torsion(1); }));
    add("torsion", "separability-charp-m2", 2, nor([] { return check_charp_torsion(2); }));
    add("torsion", "galois-structure-p2m3", 2, nor([] { return check_galois_structure(2, 3); }));
    add("torsion", "galois-structure-p3m2", 3, nor([] { return check_galois_structure(3, 2); }));
    add("torsion", "valuation-pattern-p2m3", 2, nor([] { return check_valuation_pattern(2, 3); }));
    add("torsion", "ext-valuation-mult-p2m2", 2,
        [](std::mt19937_64& rng) { return check_ext_valuation_mult(rng); });
    add("torsion", "norm-valuation-n1", 2, nor([] { return check_norm_valuation(1); }));
    add("torsion", "norm-valuation-n2", 2, nor([] { return check_norm_valuation(2); }));

    add("coleman", "multiplicative-p2", 2,
        [](std::mt19937_64& rng) { return check_coleman_mult(2, rng); });
    add("coleman", "multiplicative-p3", 3,
        [](std::mt19937_64& rng) { return check_coleman_mult(3, rng); });
    add("coleman", "frobenius-congruence-p2", 2, [](std::mt19937_64& rng) {
        auto R = padic_ring(2, 1, 8, 8 * 8);
        return coleman_frobenius_congruence(R.get(), rng);
    });
    add("coleman", "frobenius-congruence-p3", 3, [](std::mt19937_64& rng) {
        auto R = padic_ring(3, 1, 8, 8 * 8);
        return coleman_frobenius_congruence(R.get(), rng);
    });
    add("coleman", "unit-congruence-p2", 2,
        [](std::mt19937_64& rng) { return check_coleman_unit_congruence(rng); });
    add("coleman", "tower-congruence-p2", 2,
        [](std::mt19937_64& rng) { return check_coleman_tower_congruence(2, rng); });
    add("coleman", "tower-congruence-p3", 3,
        [](std::mt19937_64& rng) { return check_coleman_tower_congruence(3, rng); });
    add("coleman", "colemanop1-p2-m1", 2,
        [](std::mt19937_64& rng) { return check_colemanop1(2, 1, rng); });
    add("coleman", "colemanop1-p2-m2", 2,
        [](std::mt19937_64& rng) { return check_colemanop1(2, 2, rng); });
    add("coleman", "colemanop1-p3-m1", 3,
        [](std::mt19937_64& rng) { return check_colemanop1(3, 1, rng); });
    add("coleman", "dual-oracle-p2", 2,
        [](std::mt19937_64& rng) { return check_dual_oracle(2, rng); });
    add("coleman", "dual-oracle-p3", 3,
        [](std::mt19937_64& rng) { return check_dual_oracle(3, rng); });
    add("coleman", "nx-sign-p2", 2, nor([] { return check_nx_sign(2); }));
    add("coleman", "nx-sign-p3", 3, nor([] { return check_nx_sign(3); }));

    for (auto [p, mtop] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}})
        for (unsigned m = 1; m <= mtop; ++m)
            add("norms", "group-p" + std::to_string(p) + "m" + std::to_string(m), p,
                [p = p, m](std::mt19937_64& rng) { return check_norm_group(p, m, rng); });
    add("norms", "group-charp-m2", 2,
        [](std::mt19937_64& rng) { return check_charp_norm_group(rng); });
    add("norms", "preimage-n2-p2", 2,
        [](std::mt19937_64& rng) { return check_norm_preimage(2, rng); });
    add("norms", "preimage-n2-p3", 3,
        [](std::mt19937_64& rng) { return check_norm_preimage(3, rng); });
    add("norms", "algebra-n2-p3", 3,
        [](std::mt19937_64& rng) { return check_norm_trace_algebra(rng); });

    add("ramification", "lt-table-p2m3", 2, nor([] { return check_lt_table_p(2, 3); }));
    add("ramification", "lt-table-p3m2", 3, nor([] { return check_lt_table_p(3, 2); }));
    add("ramification", "lt-table-charp-m2", 2, nor([] { return check_lt_table_charp(2); }));
    add("ramification", "i-pattern-p2m3", 2, nor([] { return check_i_pattern(2, 3); }));
    add("ramification", "i-pattern-p3m2", 3, nor([] { return check_i_pattern(3, 2); }));
    add("ramification", "hasse-arf-p2m3", 2, nor([] { return check_hasse_arf(2, 3); }));
    add("ramification", "hasse-arf-p3m2", 3, nor([] { return check_hasse_arf(3, 2); }));
    add("ramification", "theta-maps-p2m3", 2, nor([] { return check_theta_maps(2, 3); }));
    add("ramification", "theta-maps-p3m2", 3, nor([] { return check_theta_maps(3, 2); }));
    add("ramification", "sen-p2m4", 2, nor([] { return check_sen(2, 4); }));
    add("ramification", "sen-p3m2", 3, nor([] { return check_sen(3, 2); }));
    add("ramification", "herbrand-zeta8", 2, nor([] { return check_herbrand_zeta8(); }));
    add("ramification", "uniformizer-independence-p2m3", 2,
        nor([] { return check_uniformizer_independence(); }));
    add("ramification", "wildcycram-p2m3", 2,
        [](std::mt19937_64& rng) { return check_wildcycram(2, 3, rng); });
    add("ramification", "wildcycram-p3m2", 3,
        [](std::mt19937_64& rng) { return check_wildcycram(3, 2, rng); });

    add("artin", "bijectivity-p2m3", 2, nor([] { return check_artin_bijectivity(); }));
    add("artin", "homomorphism-p2m3", 2, nor([] { return check_artin_homomorphism(); }));
    add("artin", "cyclotomic-p2m3", 2, nor([] { return check_artin_cyclotomic(2, 3); }));
    add("artin", "cyclotomic-p3m2", 3, nor([] { return check_artin_cyclotomic(3, 2); }));
    add("artin", "restriction-p2", 2, nor([] { return check_artin_restriction(); }));
    add("artin", "independence-of-f-p3", 3,
        nor([] { return check_artin_independence_of_f(); }));
    add("artin", "v-compat-p2", 2, nor([] { return check_artin_v_compat(); }));
    add("artin", "characterization-p2m3", 2, nor([] {
        const unsigned N = 8;
        auto R = padic_ring(2, 1, N, 4 * N + 2);
        auto rep = check_characterization(R.get(), R->to_field(R->from_int(2)), 3);
        return std::make_pair(rep.pass, std::string("Art(2) fixes the m=3 torsion"));
    }));

    add("relative", "theta-link-m1", 2, nor([] { return check_relative_link(1); }));
    add("relative", "theta-link-m2", 2, nor([] { return check_relative_link(2); }));
    add("relative", "characterization-x4", 2,
        nor([] { return check_relative_characterization(); }));
    add("relative", "norm-mismatch-n1", 2, nor([] { return check_relative_norm_mismatch(); }));
    add("relative", "coleman-frobenius-n2", 2,
        [](std::mt19937_64& rng) { return check_relative_coleman(rng); });
    add("relative", "dual-oracle-twisted-n2", 2,
        [](std::mt19937_64& rng) { return check_relative_dual_oracle(rng); });

    return reg;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "axioms", "module-law", "torsion", "coleman",
        "norms",  "ramification", "artin", "relative", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    require(is_suite(suite), "unknown suite");
    auto registry = build_registry();
    std::vector<CheckResult> out;
    for (const auto& chk : registry) {
        if (suite != "all" && chk.suite != suite) continue;
        if (opt.p_filter && chk.p != *opt.p_filter) continue;
        CheckResult res;
        res.suite = chk.suite;
        res.name = chk.name;
        std::mt19937_64 rng(opt.seed * 1000003ull +
                            std::hash<std::string>{}(chk.suite + "." + chk.name));
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [ok, detail] = chk.run(rng);
            res.pass = ok;
            res.detail = detail;
        } catch (const std::exception& ex) {
            res.pass = false;
            res.detail = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace lubin
