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

// Acceptance suite: one check per shipped criterion, each printing a
// single PASS/FAIL line. Tolerances are exact congruences at the stated
// moduli; time limits are asserted where the criterion states one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lubin/artin.hpp"
#include "lubin/coleman.hpp"
#include "lubin/ramification.hpp"
#include "lubin/verify.hpp"

using namespace lubin;
using PB = PadicBase;
using LB = LaurentBase;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::string&)> run;
    double limit_s = 0; // 0 = no stated limit
};

std::unique_ptr<PadicRing> zp(unsigned p, unsigned n, unsigned N, unsigned h) {
    BaseFieldConfig cfg{FieldKind::PAdic, p, 1, N};
    return make_unramified<PB>(cfg, n, 0, h);
}

bool series_is_multiplicative_group(const PadicRing* R, const TruncatedSeries<PB>& F,
                                    unsigned depth) {
    const auto& exps = TruncatedSeries<PB>::all_exponents(2, F.deg_cap());
    for (std::size_t i = 0; i < F.raw().size(); ++i) {
        bool unit_term = (exps[i][0] + exps[i][1] == 1) ||
                         (exps[i][0] == 1 && exps[i][1] == 1);
        const auto& c = F.raw()[i];
        if (unit_term) {
            if (!R->congruent(c, R->with_prec(R->one(), c.prec), depth)) return false;
        } else if (!R->is_zero(c, depth)) {
            return false;
        }
    }
    return true;
}

// 1. Multiplicative-group identity, p in {2,3,5}, N=12, D=8, exact.
bool criterion1(std::string& detail) {
    for (unsigned p : {2u, 3u, 5u}) {
        auto R = zp(p, 1, 12, 10);
        auto f = LTPolynomial<PB>::cyclotomic(R.get());
        auto fg = build_formal_group(f, 8);
        if (!series_is_multiplicative_group(R.get(), fg.F, 12)) {
            detail = "F_f != X+Y+XY at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "F_f = X+Y+XY exactly mod p^12, p in {2,3,5}";
    return true;
}

// 2. Formal-group axioms for f = pX + X^p mod (deg 6, p^8).
bool criterion2(std::string& detail) {
    for (unsigned p : {2u, 3u, 5u}) {
        auto R = zp(p, 1, 8, 8);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto fg = build_formal_group(f, 6);
        auto X = TruncatedSeries<PB>::variable(R.get(), 3, 6, 0);
        auto Y = TruncatedSeries<PB>::variable(R.get(), 3, 6, 1);
        auto Z = TruncatedSeries<PB>::variable(R.get(), 3, 6, 2);
        auto lhs = fg.F.compose({fg.F.compose({X, Y}), Z});
        auto rhs = fg.F.compose({X, fg.F.compose({Y, Z})});
        if (!(lhs - rhs).zero_mod(8)) {
            detail = "associativity failed at p=" + std::to_string(p);
            return false;
        }
        auto x1 = TruncatedSeries<PB>::variable(R.get(), 1, 6, 0);
        auto zero1 = TruncatedSeries<PB>(R.get(), 1, 6);
        if (!(fg.F.compose({x1, zero1}) - x1).zero_mod(8)) {
            detail = "identity failed at p=" + std::to_string(p);
            return false;
        }
        auto x2 = TruncatedSeries<PB>::variable(R.get(), 2, 6, 0);
        auto y2 = TruncatedSeries<PB>::variable(R.get(), 2, 6, 1);
        if (!(fg.F.compose({x2, y2}) - fg.F.compose({y2, x2})).zero_mod(8)) {
            detail = "commutativity failed at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "axioms mod (deg 6, p^8) for f = pX + X^p, p in {2,3,5}";
    return true;
}

// 3. O-module structure, 20 seeded pairs, exact mod (deg 6, p^8).
bool criterion3(std::string& detail) {
    for (unsigned p : {2u, 3u, 5u}) {
        auto R = zp(p, 1, 8, 8);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto fg = build_formal_group(f, 6);
        std::mt19937_64 rng(1000 + p);
        for (int t = 0; t < 20; ++t) {
            auto a = R->random_element(rng);
            auto b = R->random_element(rng);
            auto ea = scalar_endo(a, f, 6).series;
            auto eb = scalar_endo(b, f, 6).series;
            if (!(fg.F.compose({ea, eb}) - scalar_endo(a + b, f, 6).series).zero_mod(8)) {
                detail = "[a+b] failed at p=" + std::to_string(p);
                return false;
            }
            if (!(ea.compose({eb}) - scalar_endo(a * b, f, 6).series).zero_mod(8)) {
                detail = "[ab] failed at p=" + std::to_string(p);
                return false;
            }
        }
    }
    detail = "[a+b] = [a] +_F [b], [ab] = [a] o [b]; 20 pairs per prime";
    return true;
}

// 4. Torsion counts, Eisenstein shape, constant-term identity.
bool criterion4(std::string& detail) {
    std::vector<std::pair<unsigned, unsigned>> grid{{2, 1}, {2, 2}, {2, 3},
                                                    {3, 1}, {3, 2}, {5, 1}};
    for (auto [p, m] : grid) {
        unsigned e = (p - 1) * ipow(p, m - 1);
        auto R = zp(p, 1, 8, e * 8 + 2);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto level = build_level(f, m);
        auto sep = level->check_separable();
        if (sep.point_count != ipow_u64(p, m) || !sep.all_distinct) {
            detail = "count failed at (" + std::to_string(p) + "," + std::to_string(m) + ")";
            return false;
        }
        if (level->e() != e) {
            detail = "degree failed";
            return false;
        }
        // prod over mu^x of (-alpha) = constant term of g_m = pi^{phi^{m-1}}
        auto prod = level->ext().one();
        for (std::uint64_t a = 0; a < level->point_count(); ++a) {
            if (a % p == 0) continue; // exact level-m points only
            prod = level->ext().mul(prod, level->ext().neg(level->point(a)));
        }
        for (unsigned i = 1; i < level->e(); ++i)
            if (!R->is_zero(prod.c[i], 8)) {
                detail = "prod(-alpha) escaped O_L";
                return false;
            }
        auto expect = R->frobenius(f.pi_elem(), static_cast<long>(m) - 1);
        if (!R->congruent(prod.c[0], expect, 8) ||
            !R->congruent(level->gm().coeff(0), expect, 8)) {
            detail = "constant-term identity failed at (" + std::to_string(p) + "," +
                     std::to_string(m) + ")";
            return false;
        }
    }
    detail = "q^m distinct points, Eisenstein g_m, prod(-alpha) = pi^{phi^{m-1}}";
    return true;
}

// 5. Norm group: 20 seeded units land in 1 + pi^m, norm(-alpha) = x.
bool criterion5(std::string& detail) {
    std::vector<std::pair<unsigned, unsigned>> grid{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [p, m] : grid) {
        unsigned e = (p - 1) * ipow(p, m - 1);
        auto R = zp(p, 1, 8, e * 8 + 2);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto ctx = make_coleman_context(f, 4);
        std::mt19937_64 rng(2000 + 10 * p + m);
        auto rep = norm_group_membership(R->to_field(R->pi()), m, *ctx, 20, rng);
        if (!rep.pass) {
            detail = "failed at (" + std::to_string(p) + "," + std::to_string(m) + ")";
            return false;
        }
    }
    detail = "20 unit norms in 1+pi^m and norm(-alpha) = x on the full grid";
    return true;
}

// 6. Coleman congruences and dual-oracle agreement, exact, < 30 s.
bool criterion6(std::string& detail) {
    for (unsigned p : {2u, 3u}) {
        const unsigned m = 2;
        unsigned e = (p - 1) * ipow(p, m - 1);
        auto R = zp(p, 1, 8, 8 * 8 + e);
        auto f = LTPolynomial<PB>::canonical(R.get(), R->pi());
        auto ctx = make_coleman_context(f, std::max(6u, e));
        auto level = build_level(f, m);
        std::mt19937_64 rng(3000 + p);
        for (int t = 0; t < 20; ++t) {
            // unit polynomial of degree < e (every unit of O_{L'})
            std::vector<RingElem<PB>> cs;
            for (unsigned i = 0; i < std::max(2u, e); ++i)
                cs.push_back(R->random_element(rng));
            while (!R->is_unit(cs[0])) cs[0] = R->random_element(rng);
            Poly<PB> g(R.get(), cs);
            auto ng = coleman_N(g, *ctx);
            // N(g) == g^phi mod pi
            auto d1 = ng - g.frobenius(1);
            for (const auto& c : d1.coeffs())
                if (!R->is_zero(c, 1)) {
                    detail = "N(g) != g^phi mod pi";
                    return false;
                }
            // N^k(g)/N^{k-1}(g)^phi == 1 mod pi^k for k <= m
            Poly<PB> prev = g;
            for (unsigned k = 1; k <= m; ++k) {
                auto cur = coleman_N(prev, *ctx);
                auto dk = cur - prev.frobenius(1);
                for (const auto& c : dk.coeffs())
                    if (!R->is_zero(c, k)) {
                        detail = "tower congruence failed at k=" + std::to_string(k);
                        return false;
                    }
                prev = cur;
            }
            // dual oracle: u_m / u_{m-1} equals the conjugate-product norm
            auto seq = unit_norm_sequence(g, m, *ctx);
            auto ratio = seq[m] * R->inv_unit(seq[m - 1]);
            auto conj = level->norm_rel(level->ext().eval_poly(g, level->alpha()));
            if (!R->congruent(ratio, conj, 8)) {
                detail = "dual-oracle disagreement";
                return false;
            }
        }
    }
    detail = "N(g)=g^phi mod pi; tower congruence; 20x2 dual-oracle agreements";
    return true;
}

// 7. Ramification tables for p=2 m=3 and p=3 m=2.
bool criterion7(std::string& detail) {
    {
        auto R = zp(2, 1, 8, 4 * 8 + 2);
        auto level = build_level(LTPolynomial<PB>::canonical(R.get(), R->pi()), 3);
        auto pres = GaloisPresentation<PB>::from_torsion(*level);
        auto filt = lower_numbering(pres);
        std::vector<std::size_t> expect{4, 2, 2, 1, 1, 1, 1};
        for (long n = 1; n <= 7; ++n)
            if (filt.group_order(n) != expect[static_cast<std::size_t>(n - 1)]) {
                detail = "|G_n| table failed (p=2, m=3)";
                return false;
            }
        if (filt.phi(Rat(7)) != Rat(3) || filt.upper(Rat(3)).size() != 1 ||
            filt.jumps != std::vector<long>{1, 3}) {
            detail = "phi(7)/G^3/jumps failed";
            return false;
        }
        for (long n : filt.jumps)
            if (filt.phi(Rat(n)).denominator() != 1) {
                detail = "non-integral jump value";
                return false;
            }
    }
    {
        // p=3, m=2: the formula |G_n| = q^{m-i} for q^{i-1}-1 < n <= q^i-1
        auto R = zp(3, 1, 8, 6 * 8 + 2);
        auto level = build_level(LTPolynomial<PB>::canonical(R.get(), R->pi()), 2);
        auto pres = GaloisPresentation<PB>::from_torsion(*level);
        auto filt = lower_numbering(pres);
        for (unsigned i = 1; i <= 2; ++i) {
            long lo = static_cast<long>(ipow_u64(3, i - 1)) - 1;
            long hi = static_cast<long>(ipow_u64(3, i)) - 1;
            for (long n = lo + 1; n <= hi; ++n)
                if (filt.group_order(n) != ipow_u64(3, 2 - i)) {
                    detail = "|G_n| formula failed (p=3, m=2)";
                    return false;
                }
        }
        if (filt.phi(Rat(8)) != Rat(2) || filt.upper(Rat(2)).size() != 1) {
            detail = "phi(q^m-1)=m failed (p=3, m=2)";
            return false;
        }
    }
    detail = "|G_n| = q^{m-i}, phi(q^m-1) = m, G^m = 1, integral jumps";
    return true;
}

// 8. Herbrand transitivity and the quotient average.
bool criterion8(std::string& detail) {
    auto R = zp(2, 1, 8, 4 * 8 + 4);
    // hand-entered zeta_8 fixture
    auto f = LTPolynomial<PB>::cyclotomic(R.get());
    auto level3 = build_level(f, 3);
    const auto& E = level3->ext();
    std::vector<std::string> labels;
    std::vector<ExtElem<PB>> images;
    auto zeta = E.add(E.one(), E.alpha());
    for (std::uint64_t u = 1; u < 8; u += 2) {
        labels.push_back(std::to_string(u));
        images.push_back(E.sub(E.pow(zeta, u), E.one()));
    }
    GaloisPresentation<PB> pres_zeta(&E, labels, images);
    auto filt_zeta = lower_numbering(pres_zeta);
    std::vector<std::size_t> H{*pres_zeta.find_label("1"), *pres_zeta.find_label("5")};
    auto rep = herbrand_quotient(pres_zeta, filt_zeta, H);
    if (!(rep.pass)) {
        detail = "zeta_8 fixture failed";
        return false;
    }
    // phi_G = phi_{G/H} o phi_H at every integer <= q^m = 8 (explicitly)
    RamificationFiltration hf;
    hf.order = H.size();
    for (auto h : H) hf.i_table.push_back(filt_zeta.i_table[h]);
    for (long n = 0;; ++n) {
        std::vector<std::size_t> gn;
        for (std::size_t k = 0; k < H.size(); ++k)
            if (!hf.i_table[k] || *hf.i_table[k] > n) gn.push_back(k);
        bool trivial = gn.size() == 1;
        hf.groups.push_back(gn);
        if (trivial) break;
    }
    for (long n = 0; n <= 8; ++n)
        if (filt_zeta.phi(Rat(n)) != rep.quotient.phi(hf.phi(Rat(n)))) {
            detail = "transitivity failed at n=" + std::to_string(n);
            return false;
        }
    // the Lubin-Tate m=3 tower with H the image of 1 + pi^2
    auto flt = LTPolynomial<PB>::canonical(R.get(), R->pi());
    auto level_lt = build_level(flt, 3);
    auto pres_lt = GaloisPresentation<PB>::from_torsion(*level_lt);
    auto filt_lt = lower_numbering(pres_lt);
    std::vector<std::size_t> H2{*pres_lt.find_label("1"), *pres_lt.find_label("5")};
    auto rep2 = herbrand_quotient(pres_lt, filt_lt, H2);
    if (!rep2.pass) {
        detail = "LT m=3 quotient failed";
        return false;
    }
    // iofquot average equals the direct computation on the m=2 subtower
    auto level2 = build_level(flt, 2);
    auto pres2 = GaloisPresentation<PB>::from_torsion(*level2);
    auto filt2 = lower_numbering(pres2);
    for (std::size_t c = 0; c < rep2.cosets.size(); ++c) {
        std::uint64_t u8 = std::stoull(pres_lt.label(rep2.cosets[c][0]));
        auto idx = pres2.find_label(std::to_string(u8 % 4));
        if (!idx) {
            detail = "label mapping failed";
            return false;
        }
        auto direct = filt2.i_table[*idx];
        auto avg = rep2.i_bar[c];
        bool ok = (!direct && !avg) || (direct && avg && Rat(*direct) == *avg);
        if (!ok) {
            detail = "iofquot average != direct i";
            return false;
        }
    }
    detail = "phi_G = phi_{G/H} o phi_H on 0..8; averages match the subtower";
    return true;
}

// 9. Artin map: bijectivity, homomorphism, cyclotomic cross-check.
bool criterion9(std::string& detail) {
    auto R = zp(2, 1, 8, 4 * 8 + 2);
    auto f = LTPolynomial<PB>::cyclotomic(R.get());
    auto level = build_level(f, 3);
    // bijectivity of sampled descriptors
    std::vector<ArtinDescriptor<PB>> descs;
    for (unsigned j = 0; j <= 1; ++j)
        for (std::uint64_t u = 1; u < 8; u += 2)
            descs.push_back(artin_apply(
                FieldElem<PB>::make(R->from_int(static_cast<long long>(u)), j), *level));
    for (std::size_t a = 0; a < descs.size(); ++a)
        for (std::size_t b = a + 1; b < descs.size(); ++b)
            if (descs[a].frobenius_exponent == descs[b].frobenius_exponent &&
                descs[a].permutation == descs[b].permutation) {
                detail = "descriptors not pairwise distinct";
                return false;
            }
    // homomorphism, exhaustive on (Z/8)^x
    for (std::uint64_t a = 1; a < 8; a += 2)
        for (std::uint64_t b = 1; b < 8; b += 2)
            if (!check_homomorphism(R->to_field(R->from_int(static_cast<long long>(a))),
                                    R->to_field(R->from_int(static_cast<long long>(b))),
                                    *level)
                     .pass) {
                detail = "homomorphism failed";
                return false;
            }
    // cyclotomic cross-check for all u and all points
    const auto& E = level->ext();
    for (std::uint64_t u = 1; u < 8; u += 2) {
        auto d = artin_apply(R->to_field(R->from_int(static_cast<long long>(u))), *level);
        for (std::uint64_t a = 0; a < 8; ++a) {
            auto zu = E.sub(E.pow(E.add(E.one(), level->point(a)), u), E.one());
            if (!E.equal(level->point(d.apply_label(a)), zu)) {
                detail = "zeta^u cross-check failed";
                return false;
            }
        }
    }
    detail = "bijective descriptors; (Z/8)^x homomorphism; zeta -> zeta^u";
    return true;
}

// 10. The char-p instance mirrors the p-adic checks.
bool criterion10(std::string& detail) {
    BaseFieldConfig cfg{FieldKind::PowerSeries, 2, 1, 8};
    auto R = make_unramified<LB>(cfg, 1, 0, 2 * 8 + 4);
    auto f = LTPolynomial<LB>(Poly<LB>(R.get(), {R->zero(), R->pi(), R->one()}));
    for (unsigned m = 1; m <= 2; ++m) {
        auto level = build_level(f, m);
        auto sep = level->check_separable();
        if (!sep.pass || sep.point_count != ipow_u64(2, m)) {
            detail = "char-p separability failed at m=" + std::to_string(m);
            return false;
        }
    }
    // norm-group suite
    std::mt19937_64 rng(10001);
    auto ctx = make_coleman_context(f, 4);
    auto nrep = norm_group_membership(R->to_field(R->pi()), 2, *ctx, 20, rng);
    if (!nrep.pass) {
        detail = "char-p norm group failed";
        return false;
    }
    // ramification suite
    auto level2 = build_level(f, 2);
    auto pres = GaloisPresentation<LB>::from_torsion(*level2);
    auto filt = lower_numbering(pres);
    for (unsigned i = 1; i <= 2; ++i) {
        long lo = static_cast<long>(ipow_u64(2, i - 1)) - 1;
        long hi = static_cast<long>(ipow_u64(2, i)) - 1;
        for (long n = lo + 1; n <= hi; ++n)
            if (filt.group_order(n) != ipow_u64(2, 2 - i)) {
                detail = "char-p |G_n| failed";
                return false;
            }
    }
    if (filt.phi(Rat(3)) != Rat(2) || filt.upper(Rat(2)).size() != 1 ||
        !hasse_arf_check(pres, filt).pass) {
        detail = "char-p ramification failed";
        return false;
    }
    detail = "F_2((t)), f = tX+X^2: 4 distinct points, norms and ramification pass";
    return true;
}

// 11. Relative instance over K_2.
bool criterion11(std::string& detail) {
    auto R = zp(2, 2, 8, 2 * 8 + 8);
    auto omega = R->teichmueller(R->res_from_index(2));
    auto xprime = R->to_field(R->mul_pi_pow(R->pow(omega, 2), 1)); // 2 omega^2, norm 4
    for (unsigned m = 1; m <= 2; ++m) {
        auto rep = norm_compatibility_check(R.get(), xprime, m);
        if (!rep.pass || rep.v_of_norm != 2) {
            detail = "norm compatibility failed at m=" + std::to_string(m);
            return false;
        }
    }
    auto crep = check_characterization(R.get(), R->to_field(R->from_int(4)), 1);
    if (!crep.pass) {
        detail = "characterization of x=4 failed";
        return false;
    }
    detail = "theta links the towers; Art_K(N(pi')) fixes the relative torsion";
    return true;
}

// 12. verify --suite all, zero failures.
bool criterion12(std::string& detail) {
    VerifyOptions opt;
    auto results = run_suite("all", opt);
    int fails = 0;
    for (const auto& r : results)
        if (!r.pass) ++fails;
    detail = std::to_string(results.size()) + " checks, " + std::to_string(fails) +
             " failures";
    return fails == 0;
}

} // namespace

int main() {
    std::vector<Criterion> cs{
        {1, "multiplicative-group identity", criterion1, 1.0},
        {2, "formal-group axioms", criterion2, 10.0},
        {3, "O-module structure", criterion3, 0},
        {4, "torsion counts and Eisenstein shape", criterion4, 0},
        {5, "norm group", criterion5, 0},
        {6, "Coleman congruences and dual oracle", criterion6, 30.0},
        {7, "ramification table", criterion7, 0},
        {8, "Herbrand transitivity", criterion8, 0},
        {9, "Artin map", criterion9, 0},
        {10, "char-p instance", criterion10, 0},
        {11, "relative instance", criterion11, 60.0},
        {12, "full verify suite", criterion12, 300.0},
    };
    int failures = 0;
    for (auto& c : cs) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        if (ok && c.limit_s > 0 && secs > c.limit_s) {
            ok = false;
            detail += " (time limit " + std::to_string(c.limit_s) + " s exceeded)";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s) -- %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "OK" : "FAILED",
                static_cast<int>(cs.size()) - failures, cs.size());
    return failures == 0 ? 0 : 1;
}
