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

#ifndef ELIMCERT_IDEAL_ANALYSIS_HPP
#define ELIMCERT_IDEAL_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "elimcert/groebner.hpp"

namespace elimcert {

// Result of the combinatorial dimension computation. q is the dimension of
// V(I) over the algebraic closure; q == -1 means the variety is empty (the
// basis contains a nonzero constant). The witness is a maximum variable set
// no leading monomial is supported in.
struct DimensionReport {
    int q = 0;
    std::vector<int> witness_independent_set; // 1-based variable indices
    std::vector<Monomial> leading_term_ideal;
    std::size_t basis_size = 0;
};

namespace analysis_detail {

inline constexpr int kMaxDimensionVars = 24;

// Enumerates k-subsets of {1..n} in lexicographic order, returning the first
// subset U such that no monomial's support lies inside U.
inline std::optional<std::vector<int>> find_independent_set(const std::vector<Monomial>& lts, int n, int k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    auto independent = [&](const std::vector<int>& u) {
        std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
        for (int v : u)
            in[static_cast<std::size_t>(v)] = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.e[static_cast<std::size_t>(i)] > 0 && !in[static_cast<std::size_t>(i) + 1])
                    inside = false;
            if (inside)
                return false; // a leading monomial lives entirely in U
        }
        return true;
    };
    if (k == 0)
        return independent(pick) ? std::optional<std::vector<int>>{pick} : std::nullopt;
    while (true) {
        if (independent(pick))
            return pick;
        // next k-combination
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i))
            --i;
        if (i < 0)
            return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace analysis_detail

// Krull dimension of k[x]/I, computed from the grevlex leading-term ideal by
// exhaustive independent-set search (exact at this scale).
template <class K>
DimensionReport dimension(const std::vector<MPoly<K>>& gens, const GBOptions& opts = GBOptions{}) {
    bool any_nonzero = false;
    for (const auto& g : gens)
        if (!g.is_zero())
            any_nonzero = true;
    if (gens.empty() || !any_nonzero)
        throw PreconditionError("dimension of the zero ideal");
    const int n = gens[0].nvars();
    if (n > analysis_detail::kMaxDimensionVars)
        throw BudgetError("dimension search limited to 24 variables");

    CofactorBasis<K> gb = buchberger(gens, TermOrder::grevlex(), /*track=*/false, opts);

    DimensionReport rep;
    rep.basis_size = gb.basis.size();
    for (const auto& b : gb.basis)
        rep.leading_term_ideal.push_back(b.leading_monomial());

    for (const auto& b : gb.basis) {
        if (b.leading_monomial().is_one()) {
            rep.q = -1; // unit ideal: empty variety
            return rep;
        }
    }

    for (int k = n; k >= 0; --k) {
        if (auto u = analysis_detail::find_independent_set(rep.leading_term_ideal, n, k)) {
            rep.q = k;
            rep.witness_independent_set = std::move(*u);
            return rep;
        }
    }
    rep.q = 0;
    return rep;
}

// Generators of I ∩ k[x_1..x_keep]: the block-order basis elements free of
// the eliminated variables, re-sorted to grevlex. May be empty.
template <class K>
std::vector<MPoly<K>> elimination_ideal(const std::vector<MPoly<K>>& gens, int keep,
                                        const GBOptions& opts = GBOptions{}) {
    auto meta = gb_detail::meta_of(gens, TermOrder::grevlex());
    if (keep < 1 || keep > meta.nvars)
        throw PreconditionError("kept-variable count out of range");
    CofactorBasis<K> gb = buchberger(gens, TermOrder::block(keep), /*track=*/false, opts);
    std::vector<MPoly<K>> out;
    for (const auto& b : gb.basis)
        if (b.supported_within(keep))
            out.push_back(b.with_order(TermOrder::grevlex()));
    return out;
}

// Minimal total degree over the nonzero members of the ideal, with a monic
// witness. Correct because grevlex is degree compatible: any h in I has its
// leading monomial divisible by some basis leading monomial, so deg h is at
// least the minimal basis degree. Returns nothing for the zero ideal.
template <class K>
std::optional<std::pair<MPoly<K>, long>> min_degree_element(const std::vector<MPoly<K>>& gens,
                                                            const GBOptions& opts = GBOptions{}) {
    bool any_nonzero = false;
    for (const auto& g : gens)
        if (!g.is_zero())
            any_nonzero = true;
    if (gens.empty() || !any_nonzero)
        return std::nullopt;
    CofactorBasis<K> gb = buchberger(gens, TermOrder::grevlex(), /*track=*/false, opts);
    const MPoly<K>* best = nullptr;
    long best_deg = 0;
    for (const auto& b : gb.basis) { // basis sorted by ascending leading monomial
        long d = *b.total_degree();
        if (!best || d < best_deg) {
            best = &b;
            best_deg = d;
        }
    }
    return std::make_pair(*best, best_deg);
}

// Whether the projection of V(I) onto the first q coordinates is finite,
// decided on the elimination order with small block x_1..x_q: the test asks
// for a pure power of every eliminated variable among the leading terms.
// Under this order that is equivalent to k[x]/I being module-finite over
// k[x_1..x_q] (integral dependences surface as pure-power leading terms, and
// pure powers bound the standard monomials).
template <class K>
bool check_noether_position(const std::vector<MPoly<K>>& gens, int q, const GBOptions& opts = GBOptions{}) {
    DimensionReport rep = dimension(gens, opts);
    if (rep.q != q)
        throw PreconditionError("claimed dimension " + std::to_string(q) + " but computed " +
                                std::to_string(rep.q));
    if (q == -1)
        return true; // empty variety: nothing to project
    const int n = gens[0].nvars();
    CofactorBasis<K> gb = buchberger(gens, TermOrder::block(q), /*track=*/false, opts);
    for (int i = q + 1; i <= n; ++i) {
        bool found = false;
        for (const auto& b : gb.basis) {
            const Monomial& lm = b.leading_monomial();
            if (lm.e[static_cast<std::size_t>(i - 1)] == 0)
                continue;
            bool pure = true;
            for (int v = 1; v <= n && pure; ++v)
                if (v != i && lm.e[static_cast<std::size_t>(v - 1)] > 0)
                    pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace elimcert

#endif
