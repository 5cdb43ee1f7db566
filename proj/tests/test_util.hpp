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

#ifndef ELIMCERT_TEST_UTIL_HPP
#define ELIMCERT_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "elimcert/engine.hpp"
#include "elimcert/io.hpp"

namespace testutil {

using namespace elimcert;

inline MPoly<Rational> qp(const std::string& s, int nvars, TermOrder order = TermOrder::grevlex()) {
    return parse_poly<Rational>(s, FieldDesc::rationals(), nvars, order);
}

inline MPoly<Fp> fpp(const std::string& s, int nvars, std::uint64_t p, TermOrder order = TermOrder::grevlex()) {
    return parse_poly<Fp>(s, FieldDesc::prime_field(p, 2), nvars, order);
}

// Random sparse polynomial with the given shape; may come out with fewer
// terms after cancellation but is regenerated until nonzero.
template <class K>
MPoly<K> random_poly(std::mt19937_64& rng, const FieldDesc& desc, int nvars, int max_deg, int max_terms,
                     TermOrder order = TermOrder::grevlex(), bool allow_constant = true) {
    auto ri = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
    while (true) {
        std::vector<typename MPoly<K>::Term> terms;
        const int nterms = static_cast<int>(ri(1, max_terms));
        for (int t = 0; t < nterms; ++t) {
            Monomial m(nvars);
            long budget = ri(0, max_deg);
            for (int v = 0; v < nvars && budget > 0; ++v) {
                long e = ri(0, budget);
                m.e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
                budget -= e;
            }
            long c = ri(-6, 6);
            if (c == 0)
                c = 1;
            terms.push_back({scalar_from_int<K>(c, desc), std::move(m)});
        }
        MPoly<K> p = MPoly<K>::from_terms(desc, nvars, order, std::move(terms));
        if (p.is_zero())
            continue;
        if (!allow_constant && p.is_constant())
            continue;
        return p;
    }
}

// Verifies the defining property of a basis: every S-polynomial reduces to 0.
template <class K>
bool s_pair_closure(const std::vector<MPoly<K>>& basis, const TermOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            const K ci = basis[i].leading_coeff().inverse();
            const K cj = basis[j].leading_coeff().inverse();
            MPoly<K> s = basis[i].times_term(ci, l / basis[i].leading_monomial()) -
                         basis[j].times_term(cj, l / basis[j].leading_monomial());
            if (!normal_form(s, basis, order).first.is_zero())
                return false;
        }
    }
    return true;
}

// Both inclusions of ideals via reduction to zero.
template <class K>
bool same_ideal(const std::vector<MPoly<K>>& a, const std::vector<MPoly<K>>& b, const TermOrder& order) {
    auto ga = buchberger(a, order, false);
    auto gb = buchberger(b, order, false);
    for (const auto& f : a)
        if (!f.is_zero() && !normal_form(f, gb.basis, order).first.is_zero())
            return false;
    for (const auto& f : b)
        if (!f.is_zero() && !normal_form(f, ga.basis, order).first.is_zero())
            return false;
    return true;
}

// transform rows must reproduce the basis exactly
template <class K>
bool transform_identities_hold(const CofactorBasis<K>& gb) {
    if (!gb.tracked)
        return false;
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        MPoly<K> sum = MPoly<K>::zero(gb.basis[k].field(), gb.basis[k].nvars(), gb.order);
        for (std::size_t j = 0; j < gb.generators.size(); ++j) {
            MPoly<K> gen = gb.generators[j].order() == gb.order ? gb.generators[j]
                                                                : gb.generators[j].with_order(gb.order);
            sum += gb.transform[k][j] * gen;
        }
        if (!(sum == gb.basis[k]))
            return false;
    }
    return true;
}

} // namespace testutil

#endif
