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

#ifndef ELIMCERT_ENGINE_HPP
#define ELIMCERT_ENGINE_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "elimcert/coordinate_change.hpp"
#include "elimcert/ideal_analysis.hpp"

namespace elimcert {

// generic-coords: certificate stated in dense generic coordinates.
// original-coords: the t-deformation strips the change again, so the
// certificate lives in the input coordinates.
enum class PipelineMode { GenericCoords, OriginalCoords };

inline std::string mode_name(PipelineMode m) {
    return m == PipelineMode::GenericCoords ? "generic" : "original";
}

struct EngineOptions {
    GBOptions gb;
    int retries = 5;
    std::uint64_t sample_bound = kDefaultSampleBound;
    bool allow_empty_variety = false;
};

struct RunStats {
    double dimension_ms = 0.0;
    double elimination_ms = 0.0;
    double total_ms = 0.0;
    std::size_t dimension_basis_size = 0;
    std::size_t elimination_basis_size = 0;
    int retries_used = 0;
    int deformation_initial_valuation = -1; // original-coords runs only
    int deformation_steps = -1;
};

// Generic combinations F_1..F_{n-q} of the (degree-sorted) generators:
// F_{n-q} is the lowest-degree generator itself, the earlier rows are random
// upper-triangular combinations, and dim V(F) = q was verified.
template <class K>
struct GenericCombination {
    std::vector<std::vector<K>> alpha;          // (n-q) x s, in sorted indexing
    std::vector<MPoly<K>> F;
    std::vector<long> sorted_degrees;           // d_1 >= ... >= d_s
    std::vector<std::size_t> sort_permutation;  // sorted index -> input index
};

// The central verifiable object: phi in k[x_1..x_{q+1}] together with the
// membership identity phi = sum_j cofactor_j * f_j and the declared bound
// d_s * prod_{i<=n-q-1} d_i on every deg(cofactor_j * f_j).
template <class K>
struct Certificate {
    MPoly<K> phi;
    std::vector<MPoly<K>> cofactors; // one per input generator
    long bound = 0;
    int q = 0;
    std::uint64_t seed = 0;
    PipelineMode mode = PipelineMode::GenericCoords;
    CoordinateChange<K> change; // frame for generic-coords, audit otherwise
    RunStats stats;
};

// Identity over K[t]: b0 == sum_j cofactors[j] * Fbar_j where Fbar_j is F_j
// pushed through a unipotent-t change.
template <class K>
struct TCertificate {
    MPoly<UPoly<K>> b0;
    std::vector<MPoly<UPoly<K>>> cofactors;
};

template <class K>
struct DeformationResult {
    MPoly<K> phi;
    std::vector<MPoly<K>> cofactors; // over the untransformed F
    int initial_valuation = 0;
    int steps = 0;
};

// Nonzero algebraic dependence among n+1 polynomials in n variables, with
// weighted degree (weights = the input degrees) at most the degree product.
template <class K>
struct PerronRelation {
    MPoly<K> W; // in T_1..T_{n+1}
    std::vector<long> weights;
    long weighted_deg = 0;
    long bound = 0;
};

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool verdict = false;
    long deg_phi = -1;            // -1 when phi is zero
    long max_product_degree = -1; // -1 when every product vanishes
};

// d_s * prod of the first max(n-q-1, 0) sorted degrees (q = -1 uses n-1
// factors, truncated at s when there are fewer generators than factors).
inline long certificate_bound(const std::vector<long>& sorted_degrees, int n, int q) {
    if (sorted_degrees.empty())
        throw StructuralError("bound needs at least one generator degree");
    long count = (q >= 0) ? static_cast<long>(n - q - 1) : static_cast<long>(n - 1);
    if (count < 0)
        count = 0;
    if (count > static_cast<long>(sorted_degrees.size()))
        count = static_cast<long>(sorted_degrees.size());
    long b = sorted_degrees.back(); // d_s
    for (long i = 0; i < count; ++i)
        b *= sorted_degrees[static_cast<std::size_t>(i)];
    return b;
}

namespace engine_detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class K>
std::vector<std::size_t> degree_sort_permutation(const std::vector<MPoly<K>>& gens) {
    std::vector<std::size_t> perm(gens.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return *gens[a].total_degree() > *gens[b].total_degree();
    });
    return perm;
}

} // namespace engine_detail

// Random upper-triangular combinations realizing dim V(F_1..F_{n-q}) = q.
// Draw failures (degree drop, wrong dimension) resample up to the retry
// budget.
template <class K>
GenericCombination<K> build_generic_combinations(const std::vector<MPoly<K>>& gens, int q, Sampler& sampler,
                                                 const EngineOptions& opts = EngineOptions{}) {
    auto meta = gb_detail::meta_of(gens, TermOrder::grevlex());
    for (const auto& g : gens)
        if (g.is_zero())
            throw StructuralError("generic combinations need nonzero generators");
    if (q < 0)
        throw PreconditionError("generic combinations need dimension q >= 0");
    const int n = meta.nvars;
    const int r = n - q;
    const std::size_t s = gens.size();
    if (r < 1)
        throw InconsistentInputError("claimed dimension equals the ambient dimension");
    if (static_cast<int>(s) < r)
        throw InconsistentInputError("dimension " + std::to_string(q) + " needs at least " + std::to_string(r) +
                                     " generators, got " + std::to_string(s));

    GenericCombination<K> gc;
    gc.sort_permutation = engine_detail::degree_sort_permutation(gens);
    std::vector<MPoly<K>> sorted;
    sorted.reserve(s);
    for (std::size_t j : gc.sort_permutation) {
        sorted.push_back(gens[j].order() == TermOrder::grevlex() ? gens[j]
                                                                 : gens[j].with_order(TermOrder::grevlex()));
        gc.sorted_degrees.push_back(*gens[j].total_degree());
    }

    const K zero = scalar_from_int<K>(0, meta.desc);
    const K one = scalar_from_int<K>(1, meta.desc);

    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        gc.alpha.assign(static_cast<std::size_t>(r), std::vector<K>(s, zero));
        gc.F.clear();
        bool ok = true;
        for (int i = 0; i < r - 1; ++i) {
            MPoly<K> f = MPoly<K>::zero(meta.desc, n, TermOrder::grevlex());
            for (std::size_t j = static_cast<std::size_t>(i); j < s; ++j) {
                K a = sampler.draw_scalar<K>(meta.desc);
                gc.alpha[static_cast<std::size_t>(i)][j] = a;
                f += sorted[j].scaled(a);
            }
            if (f.is_zero() || *f.total_degree() != gc.sorted_degrees[static_cast<std::size_t>(i)]) {
                ok = false;
                break;
            }
            gc.F.push_back(std::move(f));
        }
        if (!ok)
            continue;
        gc.alpha[static_cast<std::size_t>(r - 1)][s - 1] = one;
        gc.F.push_back(sorted[s - 1]);
        if (dimension(gc.F, opts.gb).q != q)
            continue;
        return gc;
    }
    throw GenericityError("generic combinations kept failing the dimension check");
}

template <class K>
GenericCombination<K> build_generic_combinations(const std::vector<MPoly<K>>& gens, int q, std::uint64_t seed,
                                                 const EngineOptions& opts = EngineOptions{}) {
    Sampler sampler(seed, opts.sample_bound);
    return build_generic_combinations(gens, q, sampler, opts);
}

template <class K>
CoordinateChange<K> generic_coordinate_change(int n, ChangeKind kind, const FieldDesc& desc, std::uint64_t seed,
                                              std::uint64_t sample_bound = kDefaultSampleBound) {
    Sampler sampler(seed, sample_bound);
    return generic_coordinate_change<K>(n, kind, desc, sampler);
}

// Peels the t-power off an identity b0(X,t) = sum G_j(X,t) Fbar_j(X,t): as
// long as t divides b0, the cofactors at t = 0 form a syzygy of F; its lift
// through the coordinate change is subtracted so that both sides become
// divisible by t, and everything is divided through. The loop runs exactly
// val_t(b0) times, after which t = 0 yields a certificate over K.
template <class K>
DeformationResult<K> deformation_reduce(const TCertificate<K>& tc, const std::vector<MPoly<K>>& F,
                                        const CoordinateChange<K>& change) {
    if (tc.b0.is_zero())
        throw PreconditionError("deformation needs a nonzero b0");
    if (tc.cofactors.size() != F.size())
        throw StructuralError("one cofactor per combination required");
    if (change.kind == ChangeKind::Dense)
        throw StructuralError("deformation expects a t-parameterized (or identity) change");

    const TermOrder grev = TermOrder::grevlex();
    const CoordinateChange<K> inv = change.inverted();

    MPoly<UPoly<K>> b0 = tc.b0.order() == grev ? tc.b0 : tc.b0.with_order(grev);
    std::vector<MPoly<UPoly<K>>> G;
    for (const auto& g : tc.cofactors)
        G.push_back(g.order() == grev ? g : g.with_order(grev));
    std::vector<MPoly<UPoly<K>>> Fbar;
    std::vector<MPoly<K>> Fgrev;
    for (const auto& f : F) {
        Fgrev.push_back(f.order() == grev ? f : f.with_order(grev));
        Fbar.push_back(apply_linear_change_t(Fgrev.back(), inv));
    }

    MPoly<UPoly<K>> sum = MPoly<UPoly<K>>::zero(b0.field(), b0.nvars(), grev);
    for (std::size_t j = 0; j < G.size(); ++j)
        sum += G[j] * Fbar[j];
    if (!(sum == b0))
        throw PreconditionError("stated identity b0 = sum G_j * Fbar_j does not hold");

    DeformationResult<K> out;
    out.initial_valuation = *t_valuation(b0);
    out.steps = 0;

    while (*t_valuation(b0) > 0) {
        if (out.steps >= out.initial_valuation)
            throw InternalError("deformation did not terminate within the initial t-valuation");
        bool any = false;
        std::vector<MPoly<K>> H;
        H.reserve(G.size());
        for (const auto& g : G) {
            H.push_back(eval_t_zero(g));
            if (!H.back().is_zero())
                any = true;
        }
        if (any) {
            for (std::size_t j = 0; j < G.size(); ++j) {
                if (H[j].is_zero())
                    continue;
                G[j] -= apply_linear_change_t(H[j], inv);
            }
        }
        for (auto& g : G) {
            if (!g.is_zero() && *t_valuation(g) < 1)
                throw InternalError("cofactor failed to gain a factor of t");
            if (!g.is_zero())
                g = divide_by_t(g, 1);
        }
        b0 = divide_by_t(b0, 1);
        ++out.steps;
    }

    out.phi = eval_t_zero(b0);
    for (const auto& g : G)
        out.cofactors.push_back(eval_t_zero(g));

    MPoly<K> check = MPoly<K>::zero(out.phi.field(), out.phi.nvars(), grev);
    for (std::size_t j = 0; j < out.cofactors.size(); ++j)
        check += out.cofactors[j] * Fgrev[j];
    if (!(check == out.phi))
        throw InternalError("deformed certificate identity failed");
    return out;
}

namespace engine_detail {

// Expands cofactors over F into cofactors over the full generator list via
// the alpha matrix and the degree-sort permutation. brows is one polynomial
// per combination row; nz maps positions in the nonzero list back to the
// input list.
template <class K>
std::vector<MPoly<K>> expand_cofactors(const std::vector<MPoly<K>>& brows, const GenericCombination<K>& gc,
                                        const std::vector<std::size_t>& nz, std::size_t total,
                                        const MPoly<K>& zero) {
    std::vector<MPoly<K>> out(total, zero);
    const std::size_t s = gc.sort_permutation.size();
    for (std::size_t jj = 0; jj < s; ++jj) {
        MPoly<K> g = zero;
        for (std::size_t i = 0; i < brows.size(); ++i) {
            const K& a = gc.alpha[i][jj];
            if (!a.is_zero())
                g += brows[i].scaled(a);
        }
        if (!g.is_zero())
            out[nz[gc.sort_permutation[jj]]] = std::move(g);
    }
    return out;
}

} // namespace engine_detail

// The full pipeline: dimension, generic combinations, coordinate change,
// cofactor-tracked block elimination, expansion back to the inputs, and (in
// original-coords mode) the deformation that removes the change again. The
// declared degree bound is checked, never assumed; a violation after all
// genericity checks passed is surfaced as a distinct error.
template <class K>
Certificate<K> eliminate_with_bound(const std::vector<MPoly<K>>& gens, std::uint64_t seed, PipelineMode mode,
                                    const EngineOptions& opts = EngineOptions{}) {
    const auto t_start = std::chrono::steady_clock::now();
    auto meta = gb_detail::meta_of(gens, TermOrder::grevlex());
    const TermOrder grev = TermOrder::grevlex();
    const int n = meta.nvars;

    std::vector<std::size_t> nz;
    std::vector<MPoly<K>> fnz;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!gens[j].is_zero()) {
            nz.push_back(j);
            fnz.push_back(gens[j].order() == grev ? gens[j] : gens[j].with_order(grev));
        }
    }
    if (fnz.empty())
        throw PreconditionError("the zero ideal has no eliminant");

    Sampler sampler(seed, opts.sample_bound);
    Certificate<K> cert;
    cert.seed = seed;
    cert.mode = mode;

    const auto t_dim = std::chrono::steady_clock::now();
    DimensionReport dim_rep = dimension(fnz, opts.gb);
    cert.stats.dimension_ms = engine_detail::ms_since(t_dim);
    cert.stats.dimension_basis_size = dim_rep.basis_size;
    const int q = dim_rep.q;
    cert.q = q;

    const MPoly<K> kzero = MPoly<K>::zero(meta.desc, n, grev);

    std::vector<long> degrees_sorted;
    {
        auto perm = engine_detail::degree_sort_permutation(fnz);
        for (std::size_t j : perm)
            degrees_sorted.push_back(*fnz[j].total_degree());
    }

    if (q == -1) {
        if (!opts.allow_empty_variety)
            throw PreconditionError("V(I) is empty (q = -1); rerun with the empty-variety convention enabled");
        MPoly<K> one = MPoly<K>::constant(meta.desc, n, grev, scalar_from_int<K>(1, meta.desc));
        auto mc = ideal_membership(one, fnz, opts.gb, grev);
        if (!mc)
            throw InternalError("dimension reported an empty variety but 1 failed to reduce to 0");
        cert.phi = one;
        cert.cofactors.assign(gens.size(), kzero);
        for (std::size_t j = 0; j < fnz.size(); ++j)
            cert.cofactors[nz[j]] = mc->cofactors[j];
        cert.bound = certificate_bound(degrees_sorted, n, -1);
        cert.change = CoordinateChange<K>::identity(n, meta.desc);
        if (mc->max_product_degree > cert.bound)
            throw BoundViolationError("empty-variety certificate exceeds the declared bound");
        cert.stats.total_ms = engine_detail::ms_since(t_start);
        return cert;
    }

    const int r = n - q;
    if (static_cast<int>(fnz.size()) < r)
        throw InconsistentInputError("dimension " + std::to_string(q) + " requires at least " + std::to_string(r) +
                                     " generators");

    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        cert.stats.retries_used = attempt;
        GenericCombination<K> gc = build_generic_combinations(fnz, q, sampler, opts);
        cert.bound = certificate_bound(gc.sorted_degrees, n, q);

        if (mode == PipelineMode::GenericCoords) {
            CoordinateChange<K> change = generic_coordinate_change<K>(n, ChangeKind::Dense, meta.desc, sampler);
            const CoordinateChange<K> inv = change.inverted();
            std::vector<MPoly<K>> Fbar;
            for (const auto& f : gc.F)
                Fbar.push_back(apply_linear_change(f, inv));
            if (!check_noether_position(Fbar, q, opts.gb))
                continue;

            const auto t_elim = std::chrono::steady_clock::now();
            CofactorBasis<K> gb = buchberger(Fbar, TermOrder::block(q + 1), /*track=*/true, opts.gb);
            cert.stats.elimination_ms += engine_detail::ms_since(t_elim);
            cert.stats.elimination_basis_size = gb.basis.size();

            std::size_t best = gb.basis.size();
            for (std::size_t k = 0; k < gb.basis.size(); ++k) {
                if (!gb.basis[k].supported_within(q + 1))
                    continue;
                if (best == gb.basis.size() ||
                    *gb.basis[k].total_degree() < *gb.basis[best].total_degree())
                    best = k;
            }
            if (best == gb.basis.size())
                continue; // no eliminant surfaced: resample

            cert.phi = gb.basis[best].with_order(grev);
            std::vector<MPoly<K>> brows;
            for (auto& row : gb.transform[best])
                brows.push_back(row.with_order(grev));
            cert.cofactors = engine_detail::expand_cofactors(brows, gc, nz, gens.size(), kzero);
            cert.change = change;

            long maxprod = 0;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (cert.cofactors[j].is_zero() || gens[j].is_zero())
                    continue;
                MPoly<K> fbar = apply_linear_change(gens[j].with_order(grev), inv);
                maxprod = std::max(maxprod, *cert.cofactors[j].total_degree() + *fbar.total_degree());
            }
            if (maxprod > cert.bound)
                throw BoundViolationError("certificate exceeds the declared bound " + std::to_string(cert.bound) +
                                          " (max product degree " + std::to_string(maxprod) + ")");
            cert.stats.total_ms = engine_detail::ms_since(t_start);
            return cert;
        }

        // original-coords mode
        CoordinateChange<K> change = generic_coordinate_change<K>(n, ChangeKind::UnipotentT, meta.desc, sampler);
        const CoordinateChange<K> inv = change.inverted();
        std::vector<MPoly<UPoly<K>>> FbarT;
        for (const auto& f : gc.F)
            FbarT.push_back(apply_linear_change_t(f, inv));

        // genericity probe at a random specialization of t
        {
            const K tau = sampler.draw_scalar<K>(meta.desc);
            std::vector<MPoly<K>> Ftau;
            bool degenerate = false;
            for (const auto& f : FbarT) {
                Ftau.push_back(eval_t(f, tau));
                if (Ftau.back().is_zero())
                    degenerate = true;
            }
            if (degenerate || dimension(Ftau, opts.gb).q != q || !check_noether_position(Ftau, q, opts.gb))
                continue;
        }

        const int t_pos = q + 2;
        const TermOrder flat_order = TermOrder::block(q + 2);
        std::vector<MPoly<K>> flatF;
        for (const auto& f : FbarT)
            flatF.push_back(flatten_t(f, t_pos, flat_order));

        const auto t_elim = std::chrono::steady_clock::now();
        CofactorBasis<K> gb = buchberger(flatF, flat_order, /*track=*/true, opts.gb);
        cert.stats.elimination_ms += engine_detail::ms_since(t_elim);
        cert.stats.elimination_basis_size = gb.basis.size();

        auto x_part_degree = [&](const MPoly<K>& p) {
            long d = 0;
            for (const auto& t : p.terms()) {
                long s = 0;
                for (int v = 0; v < q + 1; ++v)
                    s += t.mono.e[static_cast<std::size_t>(v)];
                d = std::max(d, s);
            }
            return d;
        };
        auto t_part_degree = [&](const MPoly<K>& p) {
            long d = 0;
            for (const auto& t : p.terms())
                d = std::max(d, static_cast<long>(t.mono.e[static_cast<std::size_t>(q + 1)]));
            return d;
        };

        std::size_t best = gb.basis.size();
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            const auto& b = gb.basis[k];
            if (!b.supported_within(q + 2))
                continue;
            if (x_part_degree(b) == 0)
                continue; // a pure t-polynomial cannot deform to a nonzero eliminant
            if (best == gb.basis.size())
                best = k;
            else {
                auto key = std::make_pair(x_part_degree(b), t_part_degree(b));
                auto cur = std::make_pair(x_part_degree(gb.basis[best]), t_part_degree(gb.basis[best]));
                if (key < cur)
                    best = k;
            }
        }
        if (best == gb.basis.size())
            continue;

        TCertificate<K> tc;
        tc.b0 = unflatten_t(gb.basis[best], t_pos, grev);
        for (const auto& row : gb.transform[best])
            tc.cofactors.push_back(unflatten_t(row, t_pos, grev));

        DeformationResult<K> def = deformation_reduce(tc, gc.F, change);
        cert.stats.deformation_initial_valuation = def.initial_valuation;
        cert.stats.deformation_steps = def.steps;

        cert.phi = def.phi;
        cert.cofactors = engine_detail::expand_cofactors(def.cofactors, gc, nz, gens.size(), kzero);
        cert.change = change;

        long maxprod = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (cert.cofactors[j].is_zero() || gens[j].is_zero())
                continue;
            maxprod = std::max(maxprod, *cert.cofactors[j].total_degree() + *gens[j].total_degree());
        }
        if (maxprod > cert.bound)
            throw BoundViolationError("certificate exceeds the declared bound " + std::to_string(cert.bound) +
                                      " (max product degree " + std::to_string(maxprod) + ")");
        cert.stats.total_ms = engine_detail::ms_since(t_start);
        return cert;
    }
    throw GenericityError("elimination kept failing the genericity checks after " +
                          std::to_string(opts.retries + 1) + " draws");
}

// Kernel generator of the map x -> (Q_1(x), ..., Q_{n+1}(x)), computed by
// eliminating the source variables from the graph ideal. A generically
// finite map has a principal nonzero relation ideal; anything else is a
// precondition violation.
template <class K>
PerronRelation<K> perron_relation(const std::vector<MPoly<K>>& Q, const GBOptions& opts = GBOptions{}) {
    auto meta = gb_detail::meta_of(Q, TermOrder::grevlex());
    const int n = meta.nvars;
    if (static_cast<int>(Q.size()) != n + 1)
        throw StructuralError("need exactly n+1 polynomials in n variables");
    std::vector<long> degrees;
    for (const auto& f : Q) {
        if (f.is_zero() || f.is_constant())
            throw PreconditionError("components must be nonconstant");
        degrees.push_back(*f.total_degree());
    }

    const int big_n = (n + 1) + n; // T_1..T_{n+1} then the source variables
    const TermOrder elim_order = TermOrder::block(n + 1);
    std::vector<MPoly<K>> graph;
    const K one = scalar_from_int<K>(1, meta.desc);
    for (int i = 0; i < n + 1; ++i) {
        std::vector<typename MPoly<K>::Term> terms;
        Monomial ti(big_n);
        ti.e[static_cast<std::size_t>(i)] = 1;
        terms.push_back({one, std::move(ti)});
        for (const auto& t : Q[static_cast<std::size_t>(i)].terms()) {
            Monomial m(big_n);
            for (int v = 0; v < n; ++v)
                m.e[static_cast<std::size_t>(n + 1 + v)] = t.mono.e[static_cast<std::size_t>(v)];
            terms.push_back({-t.coeff, std::move(m)});
        }
        graph.push_back(MPoly<K>::from_terms(meta.desc, big_n, elim_order, std::move(terms)));
    }

    CofactorBasis<K> gb = buchberger(graph, elim_order, /*track=*/false, opts);
    std::vector<MPoly<K>> kernel;
    for (const auto& b : gb.basis)
        if (b.supported_within(n + 1))
            kernel.push_back(b);
    if (kernel.empty())
        throw PreconditionError("map is not generically finite: the relation ideal is zero");
    if (kernel.size() > 1)
        throw PreconditionError("map is not generically finite: the relation ideal is not principal");

    // restrict to the T-ring
    std::vector<typename MPoly<K>::Term> terms;
    for (const auto& t : kernel[0].terms()) {
        Monomial m(n + 1);
        for (int v = 0; v < n + 1; ++v)
            m.e[static_cast<std::size_t>(v)] = t.mono.e[static_cast<std::size_t>(v)];
        terms.push_back({t.coeff, std::move(m)});
    }
    PerronRelation<K> rel;
    rel.W = MPoly<K>::from_terms(meta.desc, n + 1, TermOrder::grevlex(), std::move(terms));
    rel.weights = degrees;
    rel.weighted_deg = *weighted_degree(rel.W, rel.weights);
    rel.bound = 1;
    for (long d : degrees)
        rel.bound *= d;

    // the relation must annihilate the map, exactly
    MPoly<K> composed = MPoly<K>::zero(meta.desc, n, TermOrder::grevlex());
    std::vector<MPoly<K>> Qg;
    for (const auto& f : Q)
        Qg.push_back(f.order() == TermOrder::grevlex() ? f : f.with_order(TermOrder::grevlex()));
    for (const auto& t : rel.W.terms()) {
        MPoly<K> prod = MPoly<K>::constant(meta.desc, n, TermOrder::grevlex(), t.coeff);
        for (int i = 0; i < n + 1; ++i) {
            std::uint32_t e = t.mono.e[static_cast<std::size_t>(i)];
            if (e > 0)
                prod = prod * Qg[static_cast<std::size_t>(i)].pow(e);
        }
        composed += prod;
    }
    if (!composed.is_zero())
        throw InternalError("computed relation does not annihilate the map");
    if (rel.weighted_deg > rel.bound)
        throw BoundViolationError("relation exceeds the weighted degree bound");
    return rel;
}

// Re-checks a certificate from scratch: nonzero phi, variable support,
// the exact membership identity, the declared bound, and the bound formula
// recomputed from the generators. Generic-coords certificates are checked in
// their recorded frame.
template <class K>
VerifyReport verify_certificate(const Certificate<K>& cert, const std::vector<MPoly<K>>& gens) {
    const TermOrder grev = TermOrder::grevlex();
    VerifyReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
    };

    // item 1: phi != 0
    add("phi_nonzero", !cert.phi.is_zero(), cert.phi.is_zero() ? "phi is the zero polynomial" : "");
    if (!cert.phi.is_zero())
        rep.deg_phi = *cert.phi.total_degree();

    // item 2: support of phi inside x_1..x_{q+1}
    {
        bool ok;
        std::string detail;
        if (cert.q == -1) {
            ok = cert.phi.is_constant();
            if (!ok)
                detail = "phi must be constant when q = -1";
        } else {
            ok = cert.phi.supported_within(cert.q + 1);
            if (!ok)
                detail = "phi uses a variable beyond x" + std::to_string(cert.q + 1);
        }
        add("phi_support", ok, detail);
    }

    // frame for the identity
    std::vector<MPoly<K>> frame;
    bool frame_ok = !gens.empty();
    for (const auto& g : gens) {
        if (g.nvars() != cert.phi.nvars() || g.field() != cert.phi.field()) {
            frame_ok = false;
            break;
        }
        MPoly<K> f = g.order() == grev ? g : g.with_order(grev);
        if (cert.mode == PipelineMode::GenericCoords && cert.change.kind == ChangeKind::Dense)
            f = apply_linear_change(f, cert.change.inverted());
        frame.push_back(std::move(f));
    }

    // item 3: phi == sum_j cofactor_j * f_j
    {
        bool ok = frame_ok && cert.cofactors.size() == gens.size();
        std::string detail;
        if (!frame_ok)
            detail = "generators do not match the certificate's ring";
        else if (cert.cofactors.size() != gens.size())
            detail = "cofactor count differs from generator count";
        else {
            MPoly<K> sum = MPoly<K>::zero(cert.phi.field(), cert.phi.nvars(), grev);
            for (std::size_t j = 0; j < frame.size(); ++j)
                sum += (cert.cofactors[j].order() == grev ? cert.cofactors[j] : cert.cofactors[j].with_order(grev)) *
                       frame[j];
            ok = sum == (cert.phi.order() == grev ? cert.phi : cert.phi.with_order(grev));
            if (!ok)
                detail = "sum of cofactor products differs from phi";
        }
        add("membership_identity", ok, detail);
    }

    // item 4: max_j deg(g_j f_j) <= bound
    {
        bool ok = frame_ok && cert.cofactors.size() == gens.size();
        std::string detail = ok ? "" : "cofactors unavailable";
        if (ok) {
            long maxprod = -1;
            for (std::size_t j = 0; j < frame.size(); ++j) {
                if (cert.cofactors[j].is_zero() || frame[j].is_zero())
                    continue;
                maxprod = std::max(maxprod, *cert.cofactors[j].total_degree() + *frame[j].total_degree());
            }
            rep.max_product_degree = maxprod;
            ok = maxprod <= cert.bound;
            if (!ok)
                detail = "max product degree " + std::to_string(maxprod) + " exceeds bound " +
                         std::to_string(cert.bound);
        }
        add("degree_bound", ok, detail);
    }

    // item 5: bound == d_s * prod d_i recomputed from the generators
    {
        bool ok = frame_ok;
        std::string detail = ok ? "" : "generators unavailable";
        if (ok) {
            std::vector<long> ds;
            for (const auto& g : gens)
                if (!g.is_zero())
                    ds.push_back(*g.total_degree());
            if (ds.empty()) {
                ok = false;
                detail = "no nonzero generators";
            } else {
                std::sort(ds.rbegin(), ds.rend());
                long expect = certificate_bound(ds, cert.phi.nvars(), cert.q);
                ok = expect == cert.bound;
                if (!ok)
                    detail = "declared bound " + std::to_string(cert.bound) + " differs from recomputed " +
                             std::to_string(expect);
            }
        }
        add("bound_formula", ok, detail);
    }

    rep.verdict = true;
    for (const auto& it : rep.items)
        rep.verdict = rep.verdict && it.pass;
    return rep;
}

} // namespace elimcert

#endif
