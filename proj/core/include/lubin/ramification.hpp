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

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lubin/torsion.hpp"

namespace lubin {

using Rat = boost::rational<long long>;

inline long rat_ceil(const Rat& r) {
    long long num = r.numerator(), den = r.denominator();
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return static_cast<long>(q);
}

/// A finite totally ramified Galois extension presented concretely: the
/// Eisenstein quotient together with the full list of automorphisms, each
/// given by its image of alpha. Closure and root-membership are verified,
/// not assumed.
template <class B>
class GaloisPresentation {
public:
    GaloisPresentation(const EisensteinExtension<B>* ext,
                       std::vector<std::string> labels,
                       std::vector<ExtElem<B>> images)
        : ext_(ext), labels_(std::move(labels)), images_(std::move(images)) {
        const auto* R = ext_->ring();
        require(labels_.size() == images_.size(), "presentation: label/image mismatch");
        require(images_.size() == ext_->e(), "presentation: |G| must equal deg g");
        for (const auto& im : images_)
            if (!ext_->is_zero(ext_->eval_poly(ext_->g(), im), R->N()))
                throw InvalidArgument("presentation: image is not a root of g");
        auto id = find(ext_->alpha());
        require(id.has_value(), "presentation: identity not listed");
        id_ = *id;
        comp_.assign(size(), std::vector<std::size_t>(size(), 0));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                auto composed = ext_->substitute(images_[j], images_[i]);
                auto k = find(composed);
                if (!k) throw InvalidArgument("presentation: not closed under composition");
                comp_[i][j] = *k;
            }
    }

    /// The Lubin-Tate presentation of Gal(K_x^m / L) = (O/pi^m)^x acting by
    /// alpha -> [u](alpha).
    static GaloisPresentation from_torsion(const TorsionLevel<B>& level) {
        const auto* R = level.ring();
        std::vector<std::string> labels;
        std::vector<ExtElem<B>> images;
        for (std::uint64_t u = 0; u < level.point_count(); ++u) {
            if (!label_is_unit(*R, u)) continue;
            labels.push_back(std::to_string(u));
            images.push_back(level.point(u));
        }
        return GaloisPresentation(&level.ext(), std::move(labels), std::move(images));
    }

    const EisensteinExtension<B>& ext() const { return *ext_; }
    std::size_t size() const { return images_.size(); }
    std::size_t id_index() const { return id_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const ExtElem<B>& image(std::size_t i) const { return images_[i]; }
    std::size_t compose(std::size_t i, std::size_t j) const { return comp_[i][j]; }

    std::optional<std::size_t> find(const ExtElem<B>& im) const {
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (ext_->equal(images_[k], im)) return k;
        return std::nullopt;
    }
    std::optional<std::size_t> find_label(const std::string& l) const {
        for (std::size_t k = 0; k < labels_.size(); ++k)
            if (labels_[k] == l) return k;
        return std::nullopt;
    }

    std::size_t inverse(std::size_t i) const {
        for (std::size_t j = 0; j < size(); ++j)
            if (comp_[i][j] == id_) return j;
        throw Error("presentation: no inverse found");
    }

    ExtElem<B> apply(std::size_t i, const ExtElem<B>& x) const {
        return ext_->substitute(x, images_[i]);
    }

    std::size_t power(std::size_t i, std::uint64_t k) const {
        std::size_t out = id_;
        for (std::uint64_t t = 0; t < k; ++t) out = comp_[i][out];
        return out;
    }

    std::uint64_t order(std::size_t i) const {
        std::size_t cur = i;
        std::uint64_t ord = 1;
        while (cur != id_) {
            cur = comp_[i][cur];
            ++ord;
        }
        return ord;
    }

    bool abelian() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (comp_[i][j] != comp_[j][i]) return false;
        return true;
    }

    /// i(sigma) = v(sigma(u) - u) for a uniformizer u of the extension.
    std::optional<long> i_value(std::size_t i, const ExtElem<B>& uniformizer) const {
        return ext_->valuation(ext_->sub(apply(i, uniformizer), uniformizer));
    }

private:
    const EisensteinExtension<B>* ext_;
    std::vector<std::string> labels_;
    std::vector<ExtElem<B>> images_;
    std::size_t id_ = 0;
    std::vector<std::vector<std::size_t>> comp_;
};

/// Lower-numbering data: the i-table, the chain G_0 >= G_1 >= ... and the
/// Herbrand function phi as an exact piecewise-linear rational function.
struct RamificationFiltration {
    std::vector<std::optional<long>> i_table; // per element; empty = infinity
    std::vector<std::vector<std::size_t>> groups; // groups[n] = G_n through the first trivial one
    std::vector<long> jumps;                      // n with G_n != G_{n+1}
    std::size_t order = 1;                        // |G_0|

    std::size_t group_order(long n) const {
        if (n < 0) return order;
        if (n >= static_cast<long>(groups.size())) return 1;
        return groups[static_cast<std::size_t>(n)].size();
    }

    const std::vector<std::size_t>& group(long n) const {
        static const std::vector<std::size_t> empty;
        require(n >= 0, "group: n >= 0");
        if (n >= static_cast<long>(groups.size())) return groups.back();
        return groups[static_cast<std::size_t>(n)];
    }

    /// phi(n) = (1/|G|) sum_{i=1..n} |G_i|, piecewise linear in between.
    Rat phi(const Rat& n) const {
        require(n >= Rat(0), "phi: n >= 0");
        if (n == Rat(0)) return Rat(0);
        long whole = rat_ceil(n);
        Rat acc(0);
        for (long i = 1; i < whole; ++i)
            acc += Rat(static_cast<long long>(group_order(i)),
                       static_cast<long long>(order));
        Rat frac = n - Rat(whole - 1);
        acc += frac * Rat(static_cast<long long>(group_order(whole)),
                          static_cast<long long>(order));
        return acc;
    }

    /// psi = phi^{-1}, exact on rationals.
    Rat psi(const Rat& m) const {
        require(m >= Rat(0), "psi: m >= 0");
        Rat acc(0);
        long n = 0;
        while (true) {
            Rat slope(static_cast<long long>(group_order(n + 1)),
                      static_cast<long long>(order));
            Rat next = acc + slope;
            if (next >= m || group_order(n + 1) == 1)
                return Rat(n) + (m - acc) / slope;
            acc = next;
            ++n;
        }
    }

    /// G^m = G_{psi(m)}; real indices follow G_x = G_{ceil(x)}.
    const std::vector<std::size_t>& upper(const Rat& m) const {
        if (m == Rat(0)) return groups[0];
        long idx = std::max(rat_ceil(psi(m)), 0L);
        return group(idx);
    }

    /// The breakpoint list (n, phi(n)) for n = 0..last stored index.
    std::vector<std::pair<long, Rat>> phi_breaks() const {
        std::vector<std::pair<long, Rat>> out;
        for (long n = 0; n < static_cast<long>(groups.size()); ++n)
            out.emplace_back(n, phi(Rat(n)));
        return out;
    }
};

/// Build the lower-numbering filtration; the optional second argument lets
/// callers recompute with a different uniformizer (the chain must agree).
template <class B>
RamificationFiltration lower_numbering(const GaloisPresentation<B>& pres,
                                       const ExtElem<B>* uniformizer = nullptr) {
    const auto& E = pres.ext();
    ExtElem<B> alpha = uniformizer ? *uniformizer : E.alpha();
    auto va = E.valuation(alpha);
    if (!va || *va != 1) throw NotUniformizer("lower_numbering: v != 1");
    RamificationFiltration out;
    out.order = pres.size();
    long max_i = 0;
    for (std::size_t i = 0; i < pres.size(); ++i) {
        out.i_table.push_back(pres.i_value(i, alpha));
        if (out.i_table.back()) max_i = std::max(max_i, *out.i_table.back());
    }
    for (long n = 0;; ++n) {
        std::vector<std::size_t> gn;
        for (std::size_t i = 0; i < pres.size(); ++i)
            if (!out.i_table[i] || *out.i_table[i] > n) gn.push_back(i);
        bool trivial = gn.size() == 1;
        out.groups.push_back(std::move(gn));
        if (trivial) break;
        require(n <= max_i + 1, "lower_numbering: chain failed to terminate");
    }
    require(out.groups[0].size() == pres.size(),
            "lower_numbering: G_0 must be the full group (totally ramified)");
    for (const auto& gn : out.groups)
        for (std::size_t s : gn)
            for (std::size_t t = 0; t < pres.size(); ++t) {
                std::size_t conj = pres.compose(pres.compose(t, s), pres.inverse(t));
                bool in = false;
                for (std::size_t u : gn) in |= (u == conj);
                if (!in) throw Error("lower_numbering: G_n not normal");
            }
    for (long n = 0; n + 1 < static_cast<long>(out.groups.size()); ++n)
        if (out.groups[n].size() != out.groups[n + 1].size()) out.jumps.push_back(n);
    return out;
}

struct ThetaMapReport {
    bool tame_injective = false;
    bool tame_homomorphism = false;
    bool wild_injective = false;
    bool wild_homomorphism = false;
    bool pass = false;
};

/// theta_0: G_0/G_1 -> residue units, sigma -> res(sigma(alpha)/alpha), and
/// theta_n: G_n/G_{n+1} -> residue additive group,
/// sigma -> res((sigma(alpha)-alpha)/alpha^{n+1}); both checked
/// exhaustively for injectivity and the homomorphism law.
template <class B>
ThetaMapReport theta_maps(const GaloisPresentation<B>& pres,
                          const RamificationFiltration& filt) {
    const auto& E = pres.ext();
    const auto* R = E.ring();
    auto alpha = E.alpha();
    ThetaMapReport rep;
    rep.tame_injective = rep.tame_homomorphism = true;
    rep.wild_injective = rep.wild_homomorphism = true;

    auto in_group = [&](long n, std::size_t s) {
        for (auto u : filt.group(n))
            if (u == s) return true;
        return false;
    };
    auto theta0 = [&](std::size_t s) {
        return R->residue(E.div_alpha(pres.apply(s, alpha)).c[0]);
    };
    auto thetan = [&](std::size_t s, long n) {
        auto diff = E.sub(pres.apply(s, alpha), alpha);
        return R->residue(E.div_alpha_pow(diff, static_cast<unsigned>(n) + 1).c[0]);
    };

    for (auto s : filt.groups[0])
        for (auto t : filt.groups[0]) {
            bool same_coset = in_group(1, pres.compose(s, pres.inverse(t)));
            bool same_value = theta0(s) == theta0(t);
            if (same_value != same_coset) rep.tame_injective = false;
            if (theta0(pres.compose(s, t)) != R->res_mul(theta0(s), theta0(t)))
                rep.tame_homomorphism = false;
        }

    for (long n = 1; n + 1 < static_cast<long>(filt.groups.size()); ++n) {
        for (auto s : filt.group(n))
            for (auto t : filt.group(n)) {
                bool same_coset = in_group(n + 1, pres.compose(s, pres.inverse(t)));
                bool same_value = thetan(s, n) == thetan(t, n);
                if (same_value != same_coset) rep.wild_injective = false;
                if (thetan(pres.compose(s, t), n) !=
                    R->res_add(thetan(s, n), thetan(t, n)))
                    rep.wild_homomorphism = false;
            }
    }
    rep.pass = rep.tame_injective && rep.tame_homomorphism && rep.wild_injective &&
               rep.wild_homomorphism;
    return rep;
}

struct HerbrandReport {
    std::vector<std::vector<std::size_t>> cosets; // cosets[0] contains the identity
    std::vector<std::optional<Rat>> i_bar;        // per coset; empty = infinity
    RamificationFiltration quotient;              // filtration of G/H
    bool averages_integral = false;
    bool herbrand_identity = false; // G_n H/H = (G/H)_{phi_H(n)}
    bool transitivity = false;      // phi_G = phi_{G/H} o phi_H
    bool pass = false;
};

/// Quotient filtration by a normal subgroup H: i(sigma H) is computed by
/// the averaging formula, the Herbrand relation and phi-transitivity are
/// verified at every relevant index.
template <class B>
HerbrandReport herbrand_quotient(const GaloisPresentation<B>& pres,
                                 const RamificationFiltration& filt,
                                 const std::vector<std::size_t>& h_elems) {
    HerbrandReport rep;
    const std::size_t n_el = pres.size();
    std::vector<bool> in_h(n_el, false);
    for (auto h : h_elems) in_h[h] = true;
    require(in_h[pres.id_index()], "herbrand_quotient: H must contain the identity");
    for (auto a : h_elems)
        for (auto b : h_elems)
            require(in_h[pres.compose(a, b)], "herbrand_quotient: H not a subgroup");
    for (auto h : h_elems)
        for (std::size_t t = 0; t < n_el; ++t)
            if (!in_h[pres.compose(pres.compose(t, h), pres.inverse(t))])
                throw NotNormal("herbrand_quotient: H is not normal");

    // Cosets; the identity coset (H itself) goes first.
    std::vector<long> coset_of(n_el, -1);
    for (auto h : h_elems) coset_of[h] = 0;
    rep.cosets.push_back(std::vector<std::size_t>(h_elems.begin(), h_elems.end()));
    for (std::size_t s = 0; s < n_el; ++s) {
        if (coset_of[s] >= 0) continue;
        long id = static_cast<long>(rep.cosets.size());
        std::vector<std::size_t> coset;
        for (auto h : h_elems) {
            std::size_t el = pres.compose(s, h);
            coset_of[el] = id;
            coset.push_back(el);
        }
        rep.cosets.push_back(std::move(coset));
    }
    const std::size_t n_cosets = rep.cosets.size();

    // i(sigma-bar) by the averaging formula; infinity for the identity coset.
    rep.averages_integral = true;
    for (std::size_t c = 0; c < n_cosets; ++c) {
        if (c == 0) {
            rep.i_bar.push_back(std::nullopt);
            continue;
        }
        std::size_t s = rep.cosets[c][0];
        Rat acc(0);
        for (auto h : h_elems) {
            auto iv = filt.i_table[pres.compose(s, h)];
            require(iv.has_value(), "herbrand_quotient: infinite i outside H");
            acc += Rat(*iv);
        }
        acc /= Rat(static_cast<long long>(h_elems.size()));
        if (acc.denominator() != 1) rep.averages_integral = false;
        rep.i_bar.push_back(acc);
    }

    // The quotient filtration, from the averaged i values.
    rep.quotient.order = n_cosets;
    for (std::size_t c = 0; c < n_cosets; ++c)
        rep.quotient.i_table.push_back(
            rep.i_bar[c] ? std::optional<long>(rep.i_bar[c]->numerator() /
                                               rep.i_bar[c]->denominator())
                         : std::nullopt);
    for (long n = 0;; ++n) {
        std::vector<std::size_t> gn;
        for (std::size_t c = 0; c < n_cosets; ++c)
            if (!rep.quotient.i_table[c] || *rep.quotient.i_table[c] > n) gn.push_back(c);
        bool trivial = gn.size() == 1;
        rep.quotient.groups.push_back(std::move(gn));
        if (trivial) break;
    }
    for (long n = 0; n + 1 < static_cast<long>(rep.quotient.groups.size()); ++n)
        if (rep.quotient.groups[n].size() != rep.quotient.groups[n + 1].size())
            rep.quotient.jumps.push_back(n);

    // H's own filtration: the restriction of i to H.
    RamificationFiltration hf;
    hf.order = h_elems.size();
    {
        std::vector<std::optional<long>> hi;
        for (auto h : h_elems) hi.push_back(filt.i_table[h]);
        hf.i_table = hi;
        for (long n = 0;; ++n) {
            std::vector<std::size_t> gn;
            for (std::size_t k = 0; k < h_elems.size(); ++k)
                if (!hi[k] || *hi[k] > n) gn.push_back(k);
            bool trivial = gn.size() == 1;
            hf.groups.push_back(std::move(gn));
            if (trivial) break;
        }
    }

    // Herbrand: G_n H / H = (G/H)_{phi_H(n)} for all integers n in range.
    rep.herbrand_identity = true;
    long top = static_cast<long>(filt.groups.size());
    for (long n = 0; n <= top; ++n) {
        std::vector<bool> lhs(n_cosets, false);
        for (auto s : filt.group(n)) lhs[static_cast<std::size_t>(coset_of[s])] = true;
        Rat x = hf.phi(Rat(n));
        std::vector<bool> rhs(n_cosets, false);
        for (std::size_t c = 0; c < n_cosets; ++c) {
            // (G/H)_x = { i-bar >= x + 1 }.
            if (!rep.i_bar[c] || *rep.i_bar[c] >= x + Rat(1)) rhs[c] = true;
        }
        if (lhs != rhs) rep.herbrand_identity = false;
    }

    // phi_G = phi_{G/H} o phi_H at every integer up to the last jump (and a
    // couple beyond, where both sides are affine).
    rep.transitivity = true;
    for (long n = 0; n <= top + 2; ++n)
        if (filt.phi(Rat(n)) != rep.quotient.phi(hf.phi(Rat(n))))
            rep.transitivity = false;

    rep.pass = rep.averages_integral && rep.herbrand_identity && rep.transitivity;
    return rep;
}

struct HasseArfReport {
    bool abelian = false;
    bool jumps_integral = false;     // phi(n) in Z at every jump
    bool tame_divisibility = false;  // e_0 | n at every jump n >= 1
    bool upper_index_bound = false;  // |G/G^m| divides (q-1) q^{m-1}
    bool pass = false;
};

template <class B>
HasseArfReport hasse_arf_check(const GaloisPresentation<B>& pres,
                               const RamificationFiltration& filt) {
    const auto* R = pres.ext().ring();
    HasseArfReport rep;
    rep.abelian = pres.abelian();
    if (!rep.abelian)
        throw InvalidArgument("hasse_arf_check: group is not abelian");
    rep.jumps_integral = true;
    rep.tame_divisibility = true;
    std::size_t e0 = filt.order / filt.group_order(1);
    for (long n : filt.jumps) {
        if (filt.phi(Rat(n)).denominator() != 1) rep.jumps_integral = false;
        if (n >= 1 && e0 != 0 && static_cast<std::size_t>(n) % e0 != 0)
            rep.tame_divisibility = false;
    }
    rep.upper_index_bound = true;
    long mmax = rat_ceil(filt.phi(Rat(static_cast<long>(filt.groups.size())))) + 1;
    for (long m = 1; m <= mmax; ++m) {
        std::size_t upper_order = filt.upper(Rat(m)).size();
        std::uint64_t index = filt.order / upper_order;
        std::uint64_t bound = static_cast<std::uint64_t>(R->q() - 1) *
                              ipow_u64(R->q(), static_cast<unsigned>(m - 1));
        if (bound % index != 0) rep.upper_index_bound = false;
    }
    rep.pass = rep.abelian && rep.jumps_integral && rep.tame_divisibility &&
               rep.upper_index_bound;
    return rep;
}

struct SenReport {
    std::uint64_t elements_checked = 0;
    bool orders_are_p_powers = false;
    bool strictly_increasing = false; // i_{j-1} < i_j
    bool power_value_law = false;     // i(sigma^a) = i_{v_p(a)}
    bool congruences = false;         // i_{j-1} == i_j mod p^j
    bool pass = false;
};

/// Sen's congruences for every element of the wild inertia subgroup G_1.
template <class B>
SenReport sen_check(const GaloisPresentation<B>& pres,
                    const RamificationFiltration& filt) {
    const auto* R = pres.ext().ring();
    const unsigned p = R->config().p;
    SenReport rep;
    rep.orders_are_p_powers = true;
    rep.strictly_increasing = true;
    rep.power_value_law = true;
    rep.congruences = true;
    for (auto s : filt.group(1)) {
        if (s == pres.id_index()) continue;
        ++rep.elements_checked;
        std::uint64_t ord = pres.order(s);
        unsigned mm = 0;
        std::uint64_t tmp = ord;
        while (tmp % p == 0) {
            tmp /= p;
            ++mm;
        }
        if (tmp != 1) {
            rep.orders_are_p_powers = false;
            continue;
        }
        // i_j = i(sigma^{p^j}); i_j = infinity for j >= mm.
        std::vector<std::optional<long>> ij;
        for (unsigned j = 0; j <= mm; ++j)
            ij.push_back(filt.i_table[pres.power(s, ipow_u64(p, j))]);
        for (unsigned j = 1; j <= mm; ++j) {
            if (ij[j - 1] && ij[j] && !(*ij[j - 1] < *ij[j]))
                rep.strictly_increasing = false;
            if (j < mm && !ij[j]) rep.strictly_increasing = false;
            // congruence i_{j-1} == i_j (mod p^j); infinity matches anything.
            if (ij[j - 1] && ij[j]) {
                long mod = static_cast<long>(ipow_u64(p, j));
                if (((*ij[j - 1] - *ij[j]) % mod) != 0) rep.congruences = false;
            }
        }
        for (std::uint64_t a = 1; a < ord; ++a) {
            unsigned vpa = 0;
            std::uint64_t aa = a;
            while (aa % p == 0) {
                aa /= p;
                ++vpa;
            }
            auto lhs = filt.i_table[pres.power(s, a)];
            auto rhs = ij[std::min<unsigned>(vpa, mm)];
            if (lhs != rhs) rep.power_value_law = false;
        }
    }
    rep.pass = rep.orders_are_p_powers && rep.strictly_increasing &&
               rep.power_value_law && rep.congruences;
    return rep;
}

} // namespace lubin
