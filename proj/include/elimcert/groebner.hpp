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

#ifndef ELIMCERT_GROEBNER_HPP
#define ELIMCERT_GROEBNER_HPP

#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "elimcert/polynomial.hpp"

namespace elimcert {

// Resource caps for basis computations. Elimination orders can blow up, so we
// fail loudly instead of running unbounded.
struct GBOptions {
    std::size_t max_pairs = std::size_t{1} << 18;
    std::size_t max_total_terms = std::size_t{1} << 22;
};

// A reduced Groebner basis together with, when tracked, a transformation
// matrix expressing every basis element over the input generators:
// basis[k] == sum_j transform[k][j] * generators[j], exactly.
template <class K>
struct CofactorBasis {
    std::vector<MPoly<K>> generators;
    std::vector<MPoly<K>> basis;
    std::vector<std::vector<MPoly<K>>> transform;
    TermOrder order;
    bool tracked = false;
};

template <class K>
struct MembershipCertificate {
    MPoly<K> target;
    std::vector<MPoly<K>> cofactors;       // one per generator
    long max_product_degree = 0;           // max_j deg(cofactor_j * generator_j)
};

// Relations H with sum_j H[j] * generators[j] == 0.
template <class K>
struct SyzygyBasis {
    std::vector<MPoly<K>> generators;
    std::vector<std::vector<MPoly<K>>> relations;
};

namespace gb_detail {

template <class K>
struct RingMeta {
    FieldDesc desc;
    int nvars;
    TermOrder order;

    MPoly<K> zero() const { return MPoly<K>::zero(desc, nvars, order); }
};

template <class K>
RingMeta<K> meta_of(const std::vector<MPoly<K>>& polys, const TermOrder& order) {
    if (polys.empty())
        throw StructuralError("empty polynomial list");
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (polys[i].field() != polys[0].field() || polys[i].nvars() != polys[0].nvars())
            throw StructuralError("generators live in different rings");
    }
    return RingMeta<K>{polys[0].field(), polys[0].nvars(), order};
}

} // namespace gb_detail

// Multivariate division with quotient tracking:
//   f == sum_i quotient[i] * basis[i] + remainder
// and no remainder term is divisible by any basis leading term. The divisor
// scan always picks the first match, so the result is deterministic.
template <class K>
std::pair<MPoly<K>, std::vector<MPoly<K>>> normal_form(const MPoly<K>& f, const std::vector<MPoly<K>>& basis,
                                                       const TermOrder& order) {
    auto meta = gb_detail::meta_of(basis.empty() ? std::vector<MPoly<K>>{f} : basis, order);
    if (f.field() != meta.desc || f.nvars() != meta.nvars)
        throw StructuralError("dividend lives in a different ring");

    std::vector<MPoly<K>> divisors;
    divisors.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero())
            throw StructuralError("zero divisor in basis");
        divisors.push_back(b.order() == order ? b : b.with_order(order));
    }

    MPoly<K> h = f.order() == order ? f : f.with_order(order);
    MPoly<K> remainder = meta.zero();
    std::vector<MPoly<K>> quotients(divisors.size(), meta.zero());

    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].leading_monomial().divides(lt.mono)) {
                const K c = lt.coeff / divisors[i].leading_coeff();
                const Monomial m = lt.mono / divisors[i].leading_monomial();
                quotients[i] += MPoly<K>::from_terms(meta.desc, meta.nvars, order,
                                                     {typename MPoly<K>::Term{c, m}});
                h -= divisors[i].times_term(c, m);
                divided = true;
                break;
            }
        }
        if (!divided) {
            remainder += MPoly<K>::from_terms(meta.desc, meta.nvars, order,
                                              {typename MPoly<K>::Term{lt.coeff, lt.mono}});
            h -= MPoly<K>::from_terms(meta.desc, meta.nvars, order,
                                      {typename MPoly<K>::Term{lt.coeff, lt.mono}});
        }
    }
    return {std::move(remainder), std::move(quotients)};
}

namespace gb_detail {

template <class K>
struct Entry {
    MPoly<K> poly;
    std::vector<MPoly<K>> row; // poly == sum_j row[j] * input[j]
};

template <class K>
std::size_t term_budget_usage(const std::vector<Entry<K>>& entries) {
    std::size_t n = 0;
    for (const auto& e : entries) {
        n += e.poly.term_count();
        for (const auto& r : e.row)
            n += r.term_count();
    }
    return n;
}

// Fully reduces f against the current entries, folding the division into the
// tracked row when tracking is on.
template <class K>
Entry<K> reduce_entry(Entry<K> item, const std::vector<Entry<K>>& entries, const RingMeta<K>& meta,
                      bool track) {
    MPoly<K> h = std::move(item.poly);
    MPoly<K> out = meta.zero();
    while (!h.is_zero()) {
        const auto lt = h.leading_term();
        bool divided = false;
        for (const auto& e : entries) {
            if (e.poly.leading_monomial().divides(lt.mono)) {
                const K c = lt.coeff / e.poly.leading_coeff();
                const Monomial m = lt.mono / e.poly.leading_monomial();
                h -= e.poly.times_term(c, m);
                if (track)
                    for (std::size_t j = 0; j < item.row.size(); ++j)
                        item.row[j] -= e.row[j].times_term(c, m);
                divided = true;
                break;
            }
        }
        if (!divided) {
            auto mono = MPoly<K>::from_terms(meta.desc, meta.nvars, meta.order,
                                             {typename MPoly<K>::Term{lt.coeff, lt.mono}});
            out += mono;
            h -= mono;
        }
    }
    item.poly = std::move(out);
    return item;
}

template <class K>
void make_monic(Entry<K>& e, bool track) {
    const K inv = e.poly.leading_coeff().inverse();
    e.poly = e.poly.scaled(inv);
    if (track)
        for (auto& r : e.row)
            r = r.scaled(inv);
}

} // namespace gb_detail

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// total degree, ties by the lexicographically smallest index pair), the
// coprime-lcm and chain criteria, and optional cofactor tracking. The result
// is the reduced basis, sorted by ascending leading monomial, monic.
template <class K>
CofactorBasis<K> buchberger(const std::vector<MPoly<K>>& gens, const TermOrder& order, bool track,
                            const GBOptions& opts = GBOptions{}) {
    using gb_detail::Entry;
    auto meta = gb_detail::meta_of(gens, order);

    const std::size_t m = gens.size();
    std::vector<Entry<K>> entries;
    for (std::size_t j = 0; j < m; ++j) {
        if (gens[j].is_zero())
            continue;
        Entry<K> e;
        e.poly = gens[j].order() == order ? gens[j] : gens[j].with_order(order);
        if (track) {
            e.row.assign(m, meta.zero());
            e.row[j] = MPoly<K>::constant(meta.desc, meta.nvars, order, gens[j].leading_coeff().one_like());
        }
        gb_detail::make_monic(e, track);
        entries.push_back(std::move(e));
    }
    if (entries.empty())
        throw StructuralError("all generators are zero");

    // (lcm total degree, i, j) with i < j
    std::set<std::tuple<long, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            long d = lcm(entries[i].poly.leading_monomial(), entries[k].poly.leading_monomial()).total_degree();
            queue.insert({d, i, k});
        }
        if (queue.size() > opts.max_pairs)
            throw BudgetError("pair queue exceeded the configured budget");
    };
    for (std::size_t k = 1; k < entries.size(); ++k)
        push_pairs_for(k);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});

        const Monomial& lmi = entries[i].poly.leading_monomial();
        const Monomial& lmj = entries[j].poly.leading_monomial();
        if (coprime(lmi, lmj))
            continue;
        const Monomial l = lcm(lmi, lmj);
        // chain criterion
        {
            bool skip = false;
            for (std::size_t k = 0; k < entries.size() && !skip; ++k) {
                if (k == i || k == j)
                    continue;
                if (!entries[k].poly.leading_monomial().divides(l))
                    continue;
                auto p1 = std::minmax(i, k);
                auto p2 = std::minmax(j, k);
                if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second}))
                    skip = true;
            }
            if (skip)
                continue;
        }

        // S-polynomial; both entries are monic
        Entry<K> s;
        const Monomial mi = l / lmi;
        const Monomial mj = l / lmj;
        const K one = entries[i].poly.leading_coeff().one_like();
        s.poly = entries[i].poly.times_term(one, mi) - entries[j].poly.times_term(one, mj);
        if (track) {
            s.row.assign(m, meta.zero());
            for (std::size_t c = 0; c < m; ++c)
                s.row[c] = entries[i].row[c].times_term(one, mi) - entries[j].row[c].times_term(one, mj);
        }
        s = gb_detail::reduce_entry(std::move(s), entries, meta, track);
        if (s.poly.is_zero())
            continue;
        gb_detail::make_monic(s, track);
        entries.push_back(std::move(s));
        push_pairs_for(entries.size() - 1);
        if (gb_detail::term_budget_usage(entries) > opts.max_total_terms)
            throw BudgetError("term count exceeded the configured budget");
    }

    // minimalize: drop entries whose leading monomial is divisible by another
    std::vector<std::size_t> idx(entries.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return compare(entries[a].poly.leading_monomial(), entries[b].poly.leading_monomial(), order) < 0;
    });
    std::vector<Entry<K>> kept;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (const auto& e : kept)
            if (e.poly.leading_monomial().divides(entries[k].poly.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant)
            kept.push_back(std::move(entries[k]));
    }

    // interreduce tails to reach the reduced basis (a fixpoint; leading terms
    // cannot change because the kept set is minimal)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::vector<Entry<K>> others;
            others.reserve(kept.size() - 1);
            for (std::size_t l = 0; l < kept.size(); ++l)
                if (l != k)
                    others.push_back(kept[l]);
            const MPoly<K> before = kept[k].poly;
            Entry<K> r = gb_detail::reduce_entry(std::move(kept[k]), others, meta, track);
            if (!(r.poly == before))
                changed = true;
            kept[k] = std::move(r);
        }
    }

    CofactorBasis<K> out;
    out.generators = gens;
    out.order = order;
    out.tracked = track;
    for (auto& e : kept) {
        out.basis.push_back(std::move(e.poly));
        if (track)
            out.transform.push_back(std::move(e.row));
    }
    return out;
}

// Certified ideal membership: returns the cofactors g with f == sum g_j f_j,
// or nothing when f is not in the ideal.
template <class K>
std::optional<MembershipCertificate<K>> ideal_membership(const MPoly<K>& f, const std::vector<MPoly<K>>& gens,
                                                         const GBOptions& opts = GBOptions{},
                                                         const TermOrder& order = TermOrder::grevlex()) {
    CofactorBasis<K> gb = buchberger(gens, order, /*track=*/true, opts);
    auto [rem, q] = normal_form(f, gb.basis, order);
    if (!rem.is_zero())
        return std::nullopt;

    auto meta = gb_detail::meta_of(gens, order);
    MembershipCertificate<K> cert;
    cert.target = f;
    cert.cofactors.assign(gens.size(), meta.zero());
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        if (q[k].is_zero())
            continue;
        for (std::size_t j = 0; j < gens.size(); ++j)
            cert.cofactors[j] += q[k] * gb.transform[k][j];
    }
    cert.max_product_degree = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (cert.cofactors[j].is_zero() || gens[j].is_zero())
            continue;
        cert.max_product_degree =
            std::max(cert.max_product_degree, *cert.cofactors[j].total_degree() + *gens[j].total_degree());
    }
    return cert;
}

// Generating set of the first syzygies of gens: the S-pair relations of a
// tracked basis mapped back through the transform matrix, plus the rows of
// (I - C*T) where C expresses each generator over the basis.
template <class K>
SyzygyBasis<K> syzygy_basis(const std::vector<MPoly<K>>& gens, const GBOptions& opts = GBOptions{},
                            const TermOrder& order = TermOrder::grevlex()) {
    auto meta = gb_detail::meta_of(gens, order);
    for (const auto& g : gens)
        if (g.is_zero())
            throw StructuralError("zero generator in syzygy computation");

    CofactorBasis<K> gb = buchberger(gens, order, /*track=*/true, opts);
    const std::size_t r = gb.basis.size();
    const std::size_t m = gens.size();

    SyzygyBasis<K> out;
    out.generators = gens;

    auto add_relation = [&](std::vector<MPoly<K>> rel) {
        bool nonzero = false;
        for (const auto& c : rel)
            if (!c.is_zero())
                nonzero = true;
        if (!nonzero)
            return;
        for (const auto& have : out.relations)
            if (have == rel)
                return;
        out.relations.push_back(std::move(rel));
    };

    // lifted S-pair relations of the basis, pushed down to the generators
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const Monomial l = lcm(gb.basis[i].leading_monomial(), gb.basis[j].leading_monomial());
            const Monomial mi = l / gb.basis[i].leading_monomial();
            const Monomial mj = l / gb.basis[j].leading_monomial();
            const K ci = gb.basis[i].leading_coeff().inverse();
            const K cj = gb.basis[j].leading_coeff().inverse();
            MPoly<K> s = gb.basis[i].times_term(ci, mi) - gb.basis[j].times_term(cj, mj);
            auto [rem, q] = normal_form(s, gb.basis, order);
            if (!rem.is_zero())
                throw StructuralError("computed basis failed S-pair closure");
            // relation on the basis: ci*mi*e_i - cj*mj*e_j - q
            std::vector<MPoly<K>> on_basis(r, meta.zero());
            on_basis[i] += MPoly<K>::from_terms(meta.desc, meta.nvars, order, {typename MPoly<K>::Term{ci, mi}});
            on_basis[j] -= MPoly<K>::from_terms(meta.desc, meta.nvars, order, {typename MPoly<K>::Term{cj, mj}});
            for (std::size_t k = 0; k < r; ++k)
                on_basis[k] -= q[k];
            std::vector<MPoly<K>> rel(m, meta.zero());
            for (std::size_t k = 0; k < r; ++k) {
                if (on_basis[k].is_zero())
                    continue;
                for (std::size_t c = 0; c < m; ++c)
                    rel[c] += on_basis[k] * gb.transform[k][c];
            }
            add_relation(std::move(rel));
        }
    }

    // rows of I - C*T
    for (std::size_t j = 0; j < m; ++j) {
        auto [rem, c] = normal_form(gens[j], gb.basis, order);
        if (!rem.is_zero())
            throw StructuralError("generator fails to reduce against its own basis");
        std::vector<MPoly<K>> rel(m, meta.zero());
        rel[j] = MPoly<K>::constant(meta.desc, meta.nvars, order, gens[j].leading_coeff().one_like());
        for (std::size_t k = 0; k < r; ++k) {
            if (c[k].is_zero())
                continue;
            for (std::size_t col = 0; col < m; ++col)
                rel[col] -= c[k] * gb.transform[k][col];
        }
        add_relation(std::move(rel));
    }

    return out;
}

} // namespace elimcert

#endif
