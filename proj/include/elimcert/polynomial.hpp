/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELIMCERT_POLYNOMIAL_HPP
#define ELIMCERT_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elimcert/field.hpp"
#include "elimcert/monomial.hpp"
#include "elimcert/term_order.hpp"
#include "elimcert/upoly.hpp"

namespace elimcert {

// Sparse multivariate polynomial over a coefficient ring R. R is one of the
// scalar fields (Rational, Fp) or UPoly<K> when coefficients live in K[t].
//
// Invariants: no zero coefficients, no duplicate monomials, terms strictly
// descending under the ambient term order. The zero polynomial has no terms.
// Values are immutable after construction apart from whole-value assignment.
template <class R>
class MPoly {
  public:
    struct Term {
        R coeff;
        Monomial mono;
        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    MPoly() : desc_(FieldDesc::rationals()), nvars_(0) {}
    MPoly(FieldDesc desc, int nvars, TermOrder order)
        : desc_(desc), nvars_(nvars), order_(std::move(order)) {}

    static MPoly zero(FieldDesc desc, int nvars, TermOrder order) { return MPoly(desc, nvars, order); }

    static MPoly constant(FieldDesc desc, int nvars, TermOrder order, R value) {
        MPoly p(desc, nvars, order);
        if (!value.is_zero())
            p.terms_.push_back(Term{std::move(value), Monomial(nvars)});
        return p;
    }

    static MPoly variable(FieldDesc desc, int nvars, TermOrder order, int var, R one) {
        if (var < 1 || var > nvars)
            throw StructuralError("variable index out of range");
        MPoly p(desc, nvars, order);
        Monomial m(nvars);
        m.e[static_cast<std::size_t>(var - 1)] = 1;
        p.terms_.push_back(Term{std::move(one), std::move(m)});
        return p;
    }

    static MPoly from_terms(FieldDesc desc, int nvars, TermOrder order, std::vector<Term> terms) {
        MPoly p(desc, nvars, std::move(order));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const FieldDesc& field() const { return desc_; }
    int nvars() const { return nvars_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const {
        if (terms_.empty())
            throw StructuralError("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const R& leading_coeff() const { return leading_term().coeff; }

    // Total degree; the zero polynomial has none.
    std::optional<long> total_degree() const {
        std::optional<long> d;
        for (const auto& t : terms_) {
            long td = t.mono.total_degree() + coeff_degree(t.coeff);
            if (!d || td > *d)
                d = td;
        }
        return d;
    }

    // Degree in the x-variables only, ignoring any t inside the coefficients.
    std::optional<long> x_degree() const {
        std::optional<long> d;
        for (const auto& t : terms_) {
            long td = t.mono.total_degree();
            if (!d || td > *d)
                d = td;
        }
        return d;
    }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& t : r.terms_)
            t.coeff = -t.coeff;
        return r;
    }

    MPoly operator+(const MPoly& o) const {
        check_compatible(o);
        MPoly r(desc_, nvars_, order_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = compare(terms_[i].mono, o.terms_[j].mono, order_);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                R s = terms_[i].coeff + o.terms_[j].coeff;
                if (!s.is_zero())
                    r.terms_.push_back(Term{std::move(s), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i)
            r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j)
            r.terms_.push_back(o.terms_[j]);
        return r;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        check_compatible(o);
        MPoly r(desc_, nvars_, order_);
        r.terms_.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                r.terms_.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
        r.canonicalize();
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const R& c) const {
        MPoly r(desc_, nvars_, order_);
        if (c.is_zero())
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            R p = t.coeff * c;
            if (!p.is_zero())
                r.terms_.push_back(Term{std::move(p), t.mono});
        }
        return r;
    }

    // this * c·m, keeping canonical form (monomial multiplication preserves
    // the strict ordering for every supported order).
    MPoly times_term(const R& c, const Monomial& m) const {
        if (m.nvars() != nvars_)
            throw StructuralError("term arity mismatch");
        MPoly r(desc_, nvars_, order_);
        if (c.is_zero())
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            R p = t.coeff * c;
            if (!p.is_zero())
                r.terms_.push_back(Term{std::move(p), t.mono * m});
        }
        return r;
    }

    MPoly pow(unsigned k) const {
        if (k > 0 && is_zero())
            return *this;
        MPoly base = *this;
        MPoly acc = constant(desc_, nvars_, order_, unit_coeff());
        while (k) {
            if (k & 1)
                acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    MPoly with_order(TermOrder order) const {
        MPoly r(desc_, nvars_, order);
        r.terms_ = terms_;
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, r.order_) > 0; });
        return r;
    }

    int max_var_used() const {
        int m = 0;
        for (const auto& t : terms_)
            for (int i = nvars_; i > m; --i)
                if (t.mono.e[static_cast<std::size_t>(i - 1)] > 0) {
                    m = i;
                    break;
                }
        return m;
    }

    bool uses_var(int var) const {
        for (const auto& t : terms_)
            if (t.mono.e[static_cast<std::size_t>(var - 1)] > 0)
                return true;
        return false;
    }

    // true when every term involves only x_1..x_b
    bool supported_within(int b) const { return max_var_used() <= b; }

    bool operator==(const MPoly& o) const {
        return desc_ == o.desc_ && nvars_ == o.nvars_ && order_ == o.order_ && terms_ == o.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

  private:
    static long coeff_degree(const R& c) {
        if constexpr (requires { c.trailing_degree(); })
            return c.is_zero() ? 0 : c.degree();
        else
            return 0;
    }

    R unit_coeff() const {
        if (!terms_.empty())
            return terms_[0].coeff.one_like();
        if constexpr (std::is_same_v<R, Rational> || std::is_same_v<R, Fp>)
            return scalar_from_int<R>(1, desc_);
        else
            throw StructuralError("cannot synthesize a unit coefficient for the zero polynomial");
    }

    void check_compatible(const MPoly& o) const {
        if (desc_ != o.desc_)
            throw StructuralError("coefficient field mismatch");
        if (nvars_ != o.nvars_)
            throw StructuralError("variable count mismatch");
        if (order_ != o.order_)
            throw StructuralError("term order mismatch");
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order_) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero())
                    out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    FieldDesc desc_;
    int nvars_;
    TermOrder order_;
    std::vector<Term> terms_;
};

// Make a field-coefficient polynomial monic.
template <class K>
MPoly<K> monic(const MPoly<K>& p) {
    if (p.is_zero())
        return p;
    return p.scaled(p.leading_coeff().inverse());
}

// max over terms of sum(weight_i * exponent_i); the zero polynomial has none.
template <class R>
std::optional<long> weighted_degree(const MPoly<R>& p, const std::vector<long>& weights) {
    if (static_cast<int>(weights.size()) != p.nvars())
        throw StructuralError("weight vector length must equal the variable count");
    for (long w : weights)
        if (w <= 0)
            throw StructuralError("weights must be positive");
    std::optional<long> d;
    for (const auto& t : p.terms()) {
        long s = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            s += weights[i] * static_cast<long>(t.mono.e[i]);
        if (!d || s > *d)
            d = s;
    }
    return d;
}

// Substitutes images[i] for variable i+1. Images must share the polynomial's
// ring meta. Used for linear coordinate changes; works for any images.
template <class R>
MPoly<R> substitute(const MPoly<R>& p, const std::vector<MPoly<R>>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw StructuralError("substitution needs one image per variable");
    MPoly<R> acc(p.field(), p.nvars(), p.order());
    for (const auto& t : p.terms()) {
        MPoly<R> prod = MPoly<R>::constant(p.field(), p.nvars(), p.order(), t.coeff);
        for (int i = 0; i < p.nvars(); ++i) {
            std::uint32_t e = t.mono.e[static_cast<std::size_t>(i)];
            if (e > 0)
                prod = prod * images[static_cast<std::size_t>(i)].pow(e);
        }
        acc += prod;
    }
    return acc;
}

// Substitute a scalar for one variable (1-based index).
template <class K>
MPoly<K> substitute_value(const MPoly<K>& p, int var, const K& value) {
    if (var < 1 || var > p.nvars())
        throw StructuralError("variable index out of range");
    std::vector<typename MPoly<K>::Term> out;
    for (const auto& t : p.terms()) {
        std::uint32_t e = t.mono.e[static_cast<std::size_t>(var - 1)];
        K c = t.coeff;
        for (std::uint32_t k = 0; k < e; ++k)
            c = c * value;
        if (c.is_zero())
            continue;
        Monomial m = t.mono;
        m.e[static_cast<std::size_t>(var - 1)] = 0;
        out.push_back({std::move(c), std::move(m)});
    }
    return MPoly<K>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

// ---- conversions between K[t]-coefficient form and the flattened ring ----
//
// The flattened ring has nvars+1 variables with t spliced in at 1-based
// position t_pos; original variables at or after t_pos shift up by one.

template <class K>
MPoly<UPoly<K>> lift_to_t(const MPoly<K>& p) {
    std::vector<typename MPoly<UPoly<K>>::Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms())
        out.push_back({UPoly<K>(t.coeff), t.mono});
    return MPoly<UPoly<K>>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

template <class K>
MPoly<K> flatten_t(const MPoly<UPoly<K>>& p, int t_pos, TermOrder flat_order) {
    const int n = p.nvars();
    if (t_pos < 1 || t_pos > n + 1)
        throw StructuralError("t position out of range");
    std::vector<typename MPoly<K>::Term> out;
    for (const auto& t : p.terms()) {
        const auto& cs = t.coeff.coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].is_zero())
                continue;
            Monomial m(n + 1);
            for (int i = 0; i < n; ++i) {
                int pos = (i + 1 < t_pos) ? i : i + 1;
                m.e[static_cast<std::size_t>(pos)] = t.mono.e[static_cast<std::size_t>(i)];
            }
            m.e[static_cast<std::size_t>(t_pos - 1)] = static_cast<std::uint32_t>(k);
            out.push_back({cs[k], std::move(m)});
        }
    }
    return MPoly<K>::from_terms(p.field(), n + 1, std::move(flat_order), std::move(out));
}

template <class K>
MPoly<UPoly<K>> unflatten_t(const MPoly<K>& p, int t_pos, TermOrder order) {
    const int n = p.nvars() - 1;
    if (n < 0 || t_pos < 1 || t_pos > n + 1)
        throw StructuralError("t position out of range");
    std::vector<typename MPoly<UPoly<K>>::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m(n);
        for (int i = 0; i < n; ++i) {
            int pos = (i + 1 < t_pos) ? i : i + 1;
            m.e[static_cast<std::size_t>(i)] = t.mono.e[static_cast<std::size_t>(pos)];
        }
        int k = static_cast<int>(t.mono.e[static_cast<std::size_t>(t_pos - 1)]);
        out.push_back({UPoly<K>::t_power(t.coeff, k), std::move(m)});
    }
    return MPoly<UPoly<K>>::from_terms(p.field(), n, std::move(order), std::move(out));
}

// t-adic valuation of a K[t]-coefficient polynomial; none for zero.
template <class K>
std::optional<int> t_valuation(const MPoly<UPoly<K>>& p) {
    std::optional<int> v;
    for (const auto& t : p.terms()) {
        int tv = t.coeff.trailing_degree();
        if (!v || tv < *v)
            v = tv;
        if (*v == 0)
            break;
    }
    return v;
}

// Exact division by t^k.
template <class K>
MPoly<UPoly<K>> divide_by_t(const MPoly<UPoly<K>>& p, int k) {
    std::vector<typename MPoly<UPoly<K>>::Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms())
        out.push_back({t.coeff.shift_down(k), t.mono});
    return MPoly<UPoly<K>>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

template <class K>
MPoly<K> eval_t_zero(const MPoly<UPoly<K>>& p) {
    std::vector<typename MPoly<K>::Term> out;
    for (const auto& t : p.terms())
        if (const K* c0 = t.coeff.coeff_at_zero())
            out.push_back({*c0, t.mono});
    return MPoly<K>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

template <class K>
MPoly<K> eval_t(const MPoly<UPoly<K>>& p, const K& tau) {
    std::vector<typename MPoly<K>::Term> out;
    for (const auto& t : p.terms()) {
        K c = t.coeff.eval(tau);
        if (!c.is_zero())
            out.push_back({std::move(c), t.mono});
    }
    return MPoly<K>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

template <class K>
bool t_free(const MPoly<UPoly<K>>& p) {
    for (const auto& t : p.terms())
        if (!t.coeff.is_constant())
            return false;
    return true;
}

} // namespace elimcert

#endif
