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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "lubin/base.hpp"
#include "lubin/fqpoly.hpp"

namespace lubin {

template <class B>
class UnramifiedRing;

/// An element of O_L for L = K_n, as a coordinate vector of length n over
/// O_K with respect to the basis 1, y, ..., y^{n-1}. Coordinates are stored
/// reduced modulo pi^S (storage precision); `prec` says how many pi-adic
/// digits are actually trusted. Every operation propagates the minimum.
template <class B>
struct RingElem {
    const UnramifiedRing<B>* R = nullptr;
    std::vector<typename B::Coeff> c;
    unsigned prec = 0;

    RingElem() = default;
    RingElem(const UnramifiedRing<B>* ring, std::vector<typename B::Coeff> coords, unsigned p)
        : R(ring), c(std::move(coords)), prec(p) {}

    RingElem operator+(const RingElem& o) const { return R->add(*this, o); }
    RingElem operator-(const RingElem& o) const { return R->sub(*this, o); }
    RingElem operator*(const RingElem& o) const { return R->mul(*this, o); }
    RingElem operator-() const { return R->neg(*this); }
    bool operator==(const RingElem& o) const { return R->equal(*this, o); }
    bool operator!=(const RingElem& o) const { return !R->equal(*this, o); }
};

/// A nonzero element of L^x as unit * pi^val, or zero. The unit part is
/// trusted modulo pi^{unit.prec}.
template <class B>
struct FieldElem {
    RingElem<B> unit;
    long val = 0;
    bool zero = true;

    static FieldElem make(RingElem<B> u, long v) {
        FieldElem f;
        f.unit = std::move(u);
        f.val = v;
        f.zero = false;
        return f;
    }
    static FieldElem make_zero() { return FieldElem{}; }
};

enum class DigitSet { Plain, Teichmueller };

template <class B>
struct PiAdicDigits {
    long start_val = 0;
    std::vector<RingElem<B>> digits; // digits[i] is the coefficient of pi^(start_val + i)
};

/// O_L for the unramified degree-n extension L = K_n of K, realized as
/// O_K[y]/(g) with g the lex-lowest lift of the canonical irreducible of
/// degree n. Immutable after construction; all operations are pure.
template <class B>
class UnramifiedRing {
public:
    using Coeff = typename B::Coeff;
    using Elem = RingElem<B>;
    using FElem = FieldElem<B>;
    using Res = std::vector<fq_t>; // residue field element, coords over F_q

    UnramifiedRing(const BaseFieldConfig& cfg, unsigned n, std::uint64_t seed,
                   unsigned headroom)
        : base_(cfg, cfg.N + headroom), n_(n), seed_(seed) {
        require(n >= 1, "UnramifiedRing: n >= 1");
        gbar_ = fqpoly::lowest_irreducible(base_.fq(), n);
        g_.resize(n + 1);
        for (unsigned j = 0; j < n; ++j) g_[j] = base_.lift(gbar_[j]);
        g_[n] = base_.one();
        build_frobenius();
    }

    UnramifiedRing(const UnramifiedRing&) = delete;
    UnramifiedRing& operator=(const UnramifiedRing&) = delete;

    const B& base() const { return base_; }
    const BaseFieldConfig& config() const { return base_.config(); }
    unsigned n() const { return n_; }
    unsigned N() const { return base_.config().N; } // contract precision
    unsigned store_N() const { return base_.store_N(); }
    std::uint32_t q() const { return base_.config().q(); }
    std::uint64_t qn() const {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < n_; ++i) v *= q();
        return v;
    }
    std::uint64_t seed() const { return seed_; }
    const SmallField& fq() const { return base_.fq(); }
    const std::vector<Coeff>& defining_poly() const { return g_; }
    const std::vector<fq_t>& defining_poly_residue() const { return gbar_; }
    const Elem& frob_image() const { return n_ == 1 ? y_cache_ : frob_basis_[1][1]; }

    // ---- element constructors -------------------------------------------

    Elem zero() const { return elem_full(std::vector<Coeff>(n_, base_.zero())); }
    Elem one() const {
        std::vector<Coeff> v(n_, base_.zero());
        v[0] = base_.one();
        return elem_full(std::move(v));
    }
    Elem from_int(long long x) const {
        std::vector<Coeff> v(n_, base_.zero());
        v[0] = base_.from_int(x);
        return elem_full(std::move(v));
    }
    Elem from_coeff(Coeff c0) const {
        std::vector<Coeff> v(n_, base_.zero());
        v[0] = std::move(c0);
        return elem_full(std::move(v));
    }
    Elem from_coords(std::vector<Coeff> coords) const {
        require(coords.size() == n_, "from_coords: wrong length");
        return elem_full(std::move(coords));
    }
    /// The class of X in O_K[X]/(g) (zero when n = 1, where g = X).
    Elem y() const { return y_cache_; }
    Elem pi() const { return mul_pi_pow(one(), 1); }

    // ---- arithmetic ------------------------------------------------------

    Elem add(const Elem& a, const Elem& b) const {
        check_same(a, b);
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.add(a.c[i], b.c[i]);
        return Elem(this, std::move(v), std::min(a.prec, b.prec));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check_same(a, b);
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.sub(a.c[i], b.c[i]);
        return Elem(this, std::move(v), std::min(a.prec, b.prec));
    }
    Elem neg(const Elem& a) const {
        check_mine(a);
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.neg(a.c[i]);
        return Elem(this, std::move(v), a.prec);
    }
    Elem mul(const Elem& a, const Elem& b) const {
        check_same(a, b);
        if (n_ == 1) {
            std::vector<Coeff> v(1, base_.mul(a.c[0], b.c[0]));
            return Elem(this, std::move(v), std::min(a.prec, b.prec));
        }
        std::vector<Coeff> prod(2 * n_ - 1, base_.zero());
        for (unsigned i = 0; i < n_; ++i) {
            if (base_.is_zero(a.c[i])) continue;
            for (unsigned j = 0; j < n_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(a.c[i], b.c[j]));
        }
        reduce_mod_g(prod);
        prod.resize(n_);
        return Elem(this, std::move(prod), std::min(a.prec, b.prec));
    }
    Elem scale(const Coeff& s, const Elem& a) const {
        check_mine(a);
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.mul(s, a.c[i]);
        return Elem(this, std::move(v), a.prec);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem out = with_prec(one(), a.prec);
        while (e) {
            if (e & 1) out = mul(out, a);
            a = mul(a, a);
            e >>= 1;
        }
        return out;
    }

    /// True iff a == 0 modulo pi^k. Throws PrecisionExhausted when the
    /// element is not known to that depth.
    bool is_zero(const Elem& a, unsigned k) const {
        check_mine(a);
        if (a.prec < k)
            throw PrecisionExhausted("is_zero at depth " + std::to_string(k) +
                                     " on element known mod pi^" + std::to_string(a.prec));
        for (const auto& ci : a.c)
            if (!base_.congruent(ci, base_.zero(), k)) return false;
        return true;
    }
    bool is_zero(const Elem& a) const { return is_zero(a, N()); }

    bool congruent(const Elem& a, const Elem& b, unsigned k) const {
        check_same(a, b);
        return is_zero(sub(a, b), k);
    }
    bool equal(const Elem& a, const Elem& b) const { return congruent(a, b, N()); }

    /// pi-adic valuation of a, capped at the trusted precision: if all
    /// coordinates vanish mod pi^{a.prec} the return value is a.prec and
    /// means "at least this much".
    unsigned val(const Elem& a) const {
        check_mine(a);
        if (a.prec == 0) throw PrecisionExhausted("val of precision-0 element");
        unsigned v = a.prec;
        for (const auto& ci : a.c) v = std::min(v, base_.val(ci));
        return v;
    }

    bool is_unit(const Elem& a) const { return val(a) == 0; }

    /// Exact division by pi^k; requires val >= k. Loses k digits of
    /// precision and throws PrecisionExhausted if nothing would remain.
    Elem div_pi_pow(const Elem& a, unsigned k) const {
        check_mine(a);
        if (k == 0) return a;
        require(val(a) >= k, "div_pi_pow: valuation too small");
        if (a.prec < k + 1)
            throw PrecisionExhausted("div_pi_pow would drop precision below 1");
        std::vector<Coeff> v = a.c;
        for (unsigned s = 0; s < k; ++s)
            for (auto& ci : v) ci = base_.div_pi(ci);
        return Elem(this, std::move(v), a.prec - k);
    }

    Elem mul_pi_pow(const Elem& a, unsigned k) const {
        check_mine(a);
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.mul_pi_pow(a.c[i], k);
        return Elem(this, std::move(v), std::min(store_N(), a.prec + k));
    }

    /// Inverse of a unit of O_L (Newton; quadratic convergence).
    Elem inv_unit(const Elem& a) const {
        check_mine(a);
        if (!is_unit(a)) throw NotAUnit("inv_unit: not a unit of O_L");
        Elem x = with_prec(lift(res_inv(residue(a))), a.prec);
        Elem two = with_prec(from_int(2), a.prec);
        for (unsigned k = 1; k < store_N(); k *= 2) x = mul(x, sub(two, mul(a, x)));
        return x;
    }

    Elem with_prec(Elem a, unsigned p) const {
        a.prec = std::min(p, store_N());
        return a;
    }

    // ---- field elements --------------------------------------------------

    FElem to_field(const Elem& a) const {
        unsigned v = val(a);
        if (v >= a.prec) return FElem::make_zero();
        return FElem::make(div_pi_pow_unsafe(a, v), static_cast<long>(v));
    }
    /// The element unit * pi^val as a ring element; val must be >= 0.
    Elem to_ring(const FElem& f) const {
        if (f.zero) return zero();
        require(f.val >= 0, "to_ring: negative valuation");
        return mul_pi_pow(f.unit, static_cast<unsigned>(f.val));
    }
    FElem fe_mul(const FElem& a, const FElem& b) const {
        if (a.zero || b.zero) return FElem::make_zero();
        return FElem::make(mul(a.unit, b.unit), a.val + b.val);
    }
    FElem fe_inv(const FElem& a) const {
        if (a.zero) throw InvalidArgument("fe_inv: zero");
        return FElem::make(inv_unit(a.unit), -a.val);
    }
    FElem fe_div(const FElem& a, const FElem& b) const { return fe_mul(a, fe_inv(b)); }
    FElem fe_frobenius(const FElem& a, long i) const {
        if (a.zero) return a;
        return FElem::make(frobenius(a.unit, i), a.val);
    }

    // ---- Frobenius -------------------------------------------------------

    /// phi^i, the lift of the q-power Frobenius; fixes O_K coordinatewise
    /// and is a ring homomorphism. i is taken modulo n.
    Elem frobenius(const Elem& a, long i) const {
        check_mine(a);
        unsigned k = static_cast<unsigned>(((i % n_) + n_) % n_);
        if (k == 0) return a;
        std::vector<Coeff> v(n_, base_.zero());
        for (unsigned j = 0; j < n_; ++j) {
            if (base_.is_zero(a.c[j])) continue;
            for (unsigned d = 0; d < n_; ++d)
                v[d] = base_.add(v[d], base_.mul(a.c[j], frob_basis_[k][j].c[d]));
        }
        return Elem(this, std::move(v), a.prec);
    }

    // ---- residue field ---------------------------------------------------

    Res residue(const Elem& a) const {
        check_mine(a);
        if (a.prec < 1) throw PrecisionExhausted("residue of precision-0 element");
        Res r(n_);
        for (unsigned i = 0; i < n_; ++i) r[i] = base_.residue(a.c[i]);
        return r;
    }
    Elem lift(const Res& r) const {
        require(r.size() == n_, "lift: wrong residue length");
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = base_.lift(r[i]);
        return elem_full(std::move(v));
    }

    Res res_zero() const { return Res(n_, 0); }
    Res res_one() const {
        Res r(n_, 0);
        r[0] = 1;
        return r;
    }
    bool res_is_zero(const Res& a) const {
        for (auto d : a)
            if (d) return false;
        return true;
    }
    Res res_add(const Res& a, const Res& b) const {
        Res r(n_);
        for (unsigned i = 0; i < n_; ++i) r[i] = fq().add(a[i], b[i]);
        return r;
    }
    Res res_sub(const Res& a, const Res& b) const {
        Res r(n_);
        for (unsigned i = 0; i < n_; ++i) r[i] = fq().sub(a[i], b[i]);
        return r;
    }
    Res res_mul(const Res& a, const Res& b) const {
        fqpoly::Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
        fqpoly::Poly g(gbar_.begin(), gbar_.end());
        g.push_back(1);
        auto prod = fqpoly::mulmod(fq(), pa, pb, g);
        prod.resize(n_, 0);
        return Res(prod.begin(), prod.end());
    }
    Res res_pow(const Res& a, std::uint64_t e) const {
        Res out = res_one(), base = a;
        while (e) {
            if (e & 1) out = res_mul(out, base);
            base = res_mul(base, base);
            e >>= 1;
        }
        return out;
    }
    Res res_inv(const Res& a) const {
        if (res_is_zero(a)) throw NotAUnit("res_inv of zero");
        return res_pow(a, qn() - 2);
    }
    Res res_frob(const Res& a) const { return res_pow(a, q()); }
    /// Norm and trace to F_q, as residue elements supported in degree 0.
    fq_t res_norm(const Res& a) const {
        Res acc = res_one(), x = a;
        for (unsigned i = 0; i < n_; ++i) {
            acc = res_mul(acc, x);
            x = res_frob(x);
        }
        return acc[0];
    }
    fq_t res_trace(const Res& a) const {
        Res acc = res_zero(), x = a;
        for (unsigned i = 0; i < n_; ++i) {
            acc = res_add(acc, x);
            x = res_frob(x);
        }
        return acc[0];
    }
    Res res_from_index(std::uint64_t idx) const {
        Res r(n_);
        for (unsigned i = 0; i < n_; ++i) {
            r[i] = static_cast<fq_t>(idx % q());
            idx /= q();
        }
        return r;
    }
    std::uint64_t res_index(const Res& a) const {
        std::uint64_t idx = 0;
        for (unsigned i = n_; i-- > 0;) idx = idx * q() + a[i];
        return idx;
    }

    // ---- named operations of the module ----------------------------------

    /// The unique x with x^{q^n} = x and prescribed residue, by iterating
    /// the q^n-power map from any lift until stable.
    Elem teichmueller(const Res& c) const {
        Elem x = lift(c);
        for (unsigned k = 0; k < store_N(); ++k) x = pow(x, qn());
        return x;
    }

    /// Newton iteration for a simple root: h(x0) = 0 mod pi and h'(x0) a
    /// unit. h is given by its coefficients, low to high.
    Elem hensel_root(const std::vector<Elem>& h, const Elem& x0) const {
        check_mine(x0);
        auto eval = [&](const std::vector<Elem>& poly, const Elem& x) {
            Elem acc = with_prec(zero(), x.prec);
            for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x), poly[i]);
            return acc;
        };
        std::vector<Elem> dh;
        for (std::size_t i = 1; i < h.size(); ++i) dh.push_back(scale(base_.from_int(static_cast<long long>(i)), h[i]));
        if (!is_zero(eval(h, x0), 1))
            throw InvalidArgument("hensel_root: h(x0) != 0 mod pi");
        if (!is_unit(eval(dh, x0))) throw NonSimpleRoot("h'(x0) not a unit mod pi");
        Elem x = x0;
        for (unsigned k = 1; k < 2 * store_N(); k *= 2)
            x = sub(x, mul(eval(h, x), inv_unit(eval(dh, x))));
        return x;
    }

    /// Digits are extracted at the contract precision N: the expansion is
    /// the statement x = sum c_i pi^i mod pi^N.
    PiAdicDigits<B> pi_adic_digits(const FElem& x, DigitSet set) const {
        PiAdicDigits<B> out;
        if (x.zero) return out;
        out.start_val = x.val;
        Elem u = with_prec(x.unit, std::min(x.unit.prec, N()));
        std::vector<Elem> digits;
        while (u.prec >= 1) {
            Res r = residue(u);
            Elem d = set == DigitSet::Plain ? lift(r) : teichmueller(r);
            digits.push_back(d);
            Elem rest = sub(u, with_prec(d, u.prec));
            if (u.prec == 1) break;
            u = div_pi_pow(rest, 1);
        }
        while (!digits.empty() && is_zero(digits.back(), 1)) digits.pop_back();
        out.digits = std::move(digits);
        return out;
    }

    Elem from_digits(const PiAdicDigits<B>& d) const {
        Elem acc = zero();
        for (std::size_t i = d.digits.size(); i-- > 0;)
            acc = add(mul_pi_pow(acc, 1), d.digits[i]);
        require(d.start_val >= 0, "from_digits: negative valuation");
        return mul_pi_pow(acc, static_cast<unsigned>(d.start_val));
    }

    /// N(x) = prod_i phi^i(x); the result must lie in the base subring.
    Elem norm_to_base(const Elem& x) const {
        Elem acc = with_prec(one(), x.prec), cur = x;
        for (unsigned i = 0; i < n_; ++i) {
            acc = mul(acc, cur);
            cur = frobenius(cur, 1);
        }
        assert_in_base(acc, "norm_to_base");
        return acc;
    }
    Elem trace_to_base(const Elem& x) const {
        Elem acc = with_prec(zero(), x.prec), cur = x;
        for (unsigned i = 0; i < n_; ++i) {
            acc = add(acc, cur);
            cur = frobenius(cur, 1);
        }
        assert_in_base(acc, "trace_to_base");
        return acc;
    }

    /// A v with norm_to_base(v) = u mod pi^N, for a unit u of the base
    /// subring: residue level by exhaustive norm search, then successive
    /// trace-corrected approximations u_{m+1} = u_m (1 + beta pi^m).
    Elem norm_preimage(const Elem& u) const {
        check_mine(u);
        require(is_unit(u), "norm_preimage: u must be a unit");
        assert_in_base(u, "norm_preimage");
        check_search_bound();
        const unsigned target = std::min(N(), u.prec);
        fq_t u_res = base_.residue(u.c[0]);
        std::optional<Res> v0;
        for (std::uint64_t i = 1; i < qn(); ++i) {
            Res cand = res_from_index(i);
            if (res_norm(cand) == u_res) {
                v0 = cand;
                break;
            }
        }
        if (!v0) throw Error("norm_preimage: residue norm search failed"); // unreachable
        Elem v = with_prec(lift(*v0), u.prec);
        for (unsigned m = 1; m < target; ++m) {
            Elem d = mul(u, inv_unit(norm_to_base(v)));
            Elem diff = sub(d, with_prec(one(), d.prec));
            if (is_zero(diff, target)) break;
            Elem alpha = div_pi_pow(diff, m);
            fq_t abar = base_.residue(alpha.c[0]);
            if (abar == 0) continue;
            Res beta = find_residue_with_trace(abar);
            Elem corr = add(one(), mul_pi_pow(lift(beta), m));
            v = mul(v, with_prec(corr, v.prec));
        }
        return v;
    }

    /// First residue element (in index order) with the given trace to F_q.
    Res find_residue_with_trace(fq_t target) const {
        check_search_bound();
        for (std::uint64_t i = 0; i < qn(); ++i) {
            Res cand = res_from_index(i);
            if (res_trace(cand) == target) return cand;
        }
        throw Error("find_residue_with_trace: search failed"); // unreachable
    }

    /// First residue element theta with theta^q / theta == u (index order).
    /// Exists iff the residue norm of u is 1.
    std::optional<Res> find_residue_hilbert90(const Res& u) const {
        check_search_bound();
        for (std::uint64_t i = 1; i < qn(); ++i) {
            Res cand = res_from_index(i);
            Res ratio = res_mul(res_frob(cand), res_inv(cand));
            if (ratio == u) return cand;
        }
        return std::nullopt;
    }

    // ---- sampling ---------------------------------------------------------

    Elem random_element(std::mt19937_64& rng) const {
        std::vector<Coeff> v(n_);
        for (unsigned i = 0; i < n_; ++i) v[i] = random_coeff(rng);
        return elem_full(std::move(v));
    }
    Elem random_unit(std::mt19937_64& rng) const {
        while (true) {
            Elem x = random_element(rng);
            if (is_unit(x)) return x;
        }
    }

    // ---- serialization ----------------------------------------------------

    /// Fixed textual form: "[c0;c1;...] + O(sym^k)" with k the trusted
    /// precision capped at the contract N, and coordinates reduced mod pi^k.
    std::string to_string(const Elem& a) const {
        check_mine(a);
        unsigned t = std::min(a.prec, N());
        std::string s = coords_to_string(a);
        s += " + O(" + base_.pi_symbol() + "^" + std::to_string(t) + ")";
        return s;
    }

    std::string to_string(const FElem& f) const {
        if (f.zero) return "0";
        std::string s = coords_to_string(f.unit);
        if (f.val != 0)
            s += "*" + base_.pi_symbol() + "^" + std::to_string(f.val);
        return s;
    }

    std::string coords_to_string(const Elem& a) const {
        unsigned t = std::min(a.prec, N());
        std::string s = "[";
        for (unsigned i = 0; i < n_; ++i) {
            if (i) s += ";";
            s += base_.coeff_to_string(a.c[i], t);
        }
        return s + "]";
    }

    /// Parse "[c0;c1;...]" (or a bare coefficient when n = 1); the optional
    /// " + O(sym^k)" suffix sets the precision.
    Elem parse(const std::string& text) const {
        std::string s = text;
        unsigned prec = store_N();
        auto opos = s.find("+ O(");
        if (opos == std::string::npos) opos = s.find("+O(");
        if (opos != std::string::npos) {
            auto caret = s.find('^', opos);
            require(caret != std::string::npos, "parse: malformed O() suffix");
            prec = static_cast<unsigned>(std::stoul(s.substr(caret + 1)));
            s = s.substr(0, opos);
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        std::vector<Coeff> v(n_, base_.zero());
        if (!s.empty() && s.front() == '[') {
            require(s.back() == ']', "parse: unbalanced brackets");
            std::string inner = s.substr(1, s.size() - 2);
            unsigned idx = 0;
            std::size_t pos = 0;
            while (pos <= inner.size()) {
                auto semi = inner.find(';', pos);
                std::string tok = inner.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
                require(idx < n_, "parse: too many coordinates");
                v[idx++] = base_.coeff_from_string(tok);
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
        } else {
            v[0] = base_.coeff_from_string(s);
        }
        Elem e(this, std::move(v), std::min(prec, store_N()));
        return e;
    }

    /// Parse a field-element literal "coords*sym^v" (EBNF in the README).
    /// The valuation suffix must follow the closing bracket; for the
    /// power-series kind brackets are therefore mandatory whenever a
    /// suffix is present.
    FElem parse_field(const std::string& text) const {
        std::string s = text;
        long v = 0;
        auto bracket = s.rfind(']');
        auto star = s.find('*', bracket == std::string::npos ? 0 : bracket);
        if (config().kind == FieldKind::PowerSeries && bracket == std::string::npos)
            star = std::string::npos; // a bare t-polynomial, e.g. "2*t^3"
        if (star != std::string::npos && s.find('^', star) != std::string::npos) {
            auto caret = s.find('^', star);
            v = std::stol(s.substr(caret + 1));
            s = s.substr(0, star);
        }
        Elem u = parse(s);
        if (is_zero(u, u.prec)) return FElem::make_zero();
        FElem f = to_field(u);
        f.val += v;
        return f;
    }

private:
    Elem elem_full(std::vector<Coeff> v) const { return Elem(this, std::move(v), store_N()); }

    Elem div_pi_pow_unsafe(const Elem& a, unsigned k) const {
        std::vector<Coeff> v = a.c;
        for (unsigned s = 0; s < k; ++s)
            for (auto& ci : v) ci = base_.div_pi(ci);
        return Elem(this, std::move(v), a.prec - k);
    }

    void check_mine(const Elem& a) const {
        if (a.R != this) throw RingMismatch("element belongs to a different ring");
    }
    void check_same(const Elem& a, const Elem& b) const {
        check_mine(a);
        check_mine(b);
    }
    void check_search_bound() const {
        require(qn() <= 65536, "residue searches require q^n <= 2^16");
    }

    void assert_in_base(const Elem& a, const char* who) const {
        for (unsigned i = 1; i < n_; ++i)
            if (!base_.congruent(a.c[i], base_.zero(), std::min(a.prec, N())))
                throw NotInBase(std::string(who) + ": result has a nonzero y-coordinate");
    }

    void reduce_mod_g(std::vector<Coeff>& prod) const {
        for (std::size_t d = prod.size(); d-- > n_;) {
            Coeff lead = prod[d];
            if (base_.is_zero(lead)) continue;
            prod[d] = base_.zero();
            for (unsigned j = 0; j < n_; ++j)
                prod[d - n_ + j] = base_.sub(prod[d - n_ + j], base_.mul(lead, g_[j]));
        }
    }

    void build_frobenius() {
        y_cache_ = Elem(this, [&] {
            std::vector<Coeff> v(n_, base_.zero());
            if (n_ > 1) v[1] = base_.one();
            return v;
        }(), store_N());
        frob_basis_.assign(n_, {});
        for (unsigned j = 0; j < n_; ++j) frob_basis_[0].push_back(pow(y_cache_, j));
        if (n_ == 1) return;
        // frob_image: the root of g congruent to y^q mod pi.
        std::vector<Elem> g_poly;
        for (unsigned j = 0; j <= n_; ++j) g_poly.push_back(from_coeff(g_[j]));
        Elem fi = hensel_root(g_poly, pow(y_cache_, q()));
        for (unsigned j = 0; j < n_; ++j) frob_basis_[1].push_back(pow(fi, j));
        for (unsigned i = 2; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                // phi^i(y^j) = phi(phi^{i-1}(y^j)), expanded on coordinates.
                const Elem& prev = frob_basis_[i - 1][j];
                Elem acc = zero();
                for (unsigned d = 0; d < n_; ++d)
                    acc = add(acc, scale(prev.c[d], frob_basis_[1][d]));
                frob_basis_[i].push_back(acc);
            }
        // phi has exact order n on y.
        Elem back = y_cache_;
        for (unsigned i = 0; i < n_; ++i) back = frobenius(back, 1);
        if (!congruent(back, y_cache_, store_N()))
            throw Error("UnramifiedRing: Frobenius does not have order n");
    }

    typename B::Coeff random_coeff(std::mt19937_64& rng) const {
        if constexpr (std::is_same_v<B, PadicBase>) {
            Coeff acc = 0;
            for (unsigned i = 0; i < store_N(); ++i)
                acc = acc * config().p + static_cast<unsigned>(rng() % config().p);
            return acc;
        } else {
            Coeff acc = base_.zero();
            for (unsigned i = 0; i < store_N(); ++i)
                acc[i] = static_cast<fq_t>(rng() % base_.fq().q());
            return acc;
        }
    }

    B base_;
    unsigned n_;
    std::uint64_t seed_;
    std::vector<Coeff> g_;
    std::vector<fq_t> gbar_;
    std::vector<std::vector<Elem>> frob_basis_; // [i][j] = phi^i(y^j)
    Elem y_cache_;
};

template <class B>
std::unique_ptr<UnramifiedRing<B>> make_unramified(const BaseFieldConfig& cfg, unsigned n,
                                                   std::uint64_t seed = 0,
                                                   unsigned headroom = 0) {
    return std::make_unique<UnramifiedRing<B>>(cfg, n, seed, headroom);
}

using PadicRing = UnramifiedRing<PadicBase>;
using LaurentRing = UnramifiedRing<LaurentBase>;

} // namespace lubin
