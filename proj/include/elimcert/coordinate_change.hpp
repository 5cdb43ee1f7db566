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

#ifndef ELIMCERT_COORDINATE_CHANGE_HPP
#define ELIMCERT_COORDINATE_CHANGE_HPP

#include <optional>
#include <vector>

#include "elimcert/polynomial.hpp"
#include "elimcert/rng.hpp"

namespace elimcert {

enum class ChangeKind { Identity, Dense, UnipotentT };

// Invertible linear substitution. Dense changes hold exact scalar matrices;
// unipotent-t changes hold matrices over K[t] of the triangular shape
// X_i = x_i + t * sum_{j>i} a_ij x_j, whose inverse is again polynomial in t
// and is the identity at t = 0. In both cases fwd * inv is exactly the
// identity.
template <class K>
struct CoordinateChange {
    ChangeKind kind = ChangeKind::Identity;
    int n = 0;
    FieldDesc desc;
    std::vector<std::vector<K>> fwd, inv;          // dense entries
    std::vector<std::vector<UPoly<K>>> tfwd, tinv; // unipotent-t entries

    static CoordinateChange identity(int n, FieldDesc desc) {
        CoordinateChange c;
        c.kind = ChangeKind::Identity;
        c.n = n;
        c.desc = desc;
        return c;
    }

    CoordinateChange inverted() const {
        CoordinateChange c = *this;
        std::swap(c.fwd, c.inv);
        std::swap(c.tfwd, c.tinv);
        return c;
    }
};

namespace change_detail {

// Exact Gauss-Jordan inverse; nullopt when singular.
template <class K>
std::optional<std::vector<std::vector<K>>> invert_matrix(std::vector<std::vector<K>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return std::nullopt;
    const K zero = a[0][0].zero_like();
    const K one = a[0][0].one_like();
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const K s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * s;
            inv[col][j] = inv[col][j] * s;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            const K f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

template <class K>
std::vector<std::vector<UPoly<K>>> tmat_mul(const std::vector<std::vector<UPoly<K>>>& a,
                                            const std::vector<std::vector<UPoly<K>>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<UPoly<K>>> r(n, std::vector<UPoly<K>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

} // namespace change_detail

// Draws a coordinate change with entries from the run's sampler. Dense draws
// retry internally on singular matrices; the unipotent-t form is invertible
// by construction. n == 1 has nothing to mix, so both kinds degrade to the
// identity.
template <class K>
CoordinateChange<K> generic_coordinate_change(int n, ChangeKind kind, const FieldDesc& desc, Sampler& sampler) {
    if (n < 1)
        throw PreconditionError("coordinate changes need at least one variable");
    if (n == 1 || kind == ChangeKind::Identity)
        return CoordinateChange<K>::identity(n, desc);

    CoordinateChange<K> c;
    c.kind = kind;
    c.n = n;
    c.desc = desc;
    const std::size_t un = static_cast<std::size_t>(n);

    if (kind == ChangeKind::Dense) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            c.fwd.assign(un, {});
            for (auto& row : c.fwd) {
                row.reserve(un);
                for (std::size_t j = 0; j < un; ++j)
                    row.push_back(sampler.draw_scalar<K>(desc));
            }
            if (auto inv = change_detail::invert_matrix(c.fwd)) {
                c.inv = std::move(*inv);
                return c;
            }
        }
        throw GenericityError("could not draw an invertible dense change");
    }

    // unipotent-t: fwd = I + t*N with N strictly upper triangular, inverse by
    // the finite Neumann series (N is nilpotent)
    const K kone = scalar_from_int<K>(1, desc);
    std::vector<std::vector<UPoly<K>>> tN(un, std::vector<UPoly<K>>(un));
    c.tfwd.assign(un, std::vector<UPoly<K>>(un));
    for (std::size_t i = 0; i < un; ++i) {
        c.tfwd[i][i] = UPoly<K>(kone);
        for (std::size_t j = i + 1; j < un; ++j) {
            K a = sampler.draw_scalar<K>(desc);
            tN[i][j] = UPoly<K>::t_power(a, 1);
            c.tfwd[i][j] = tN[i][j];
        }
    }
    c.tinv.assign(un, std::vector<UPoly<K>>(un));
    std::vector<std::vector<UPoly<K>>> power(un, std::vector<UPoly<K>>(un));
    for (std::size_t i = 0; i < un; ++i) {
        c.tinv[i][i] = UPoly<K>(kone);
        power[i][i] = UPoly<K>(kone);
    }
    bool negative = true;
    for (int k = 1; k < n; ++k) {
        power = change_detail::tmat_mul(power, tN);
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j)
                c.tinv[i][j] += negative ? -power[i][j] : power[i][j];
        negative = !negative;
    }
    return c;
}

// Substitutes each variable by its image row. Dense (and identity) changes
// stay over K.
template <class K>
MPoly<K> apply_linear_change(const MPoly<K>& p, const CoordinateChange<K>& c) {
    if (c.kind == ChangeKind::Identity)
        return p;
    if (c.kind != ChangeKind::Dense)
        throw StructuralError("t-parameterized change applied without the K[t] overload");
    if (p.nvars() != c.n)
        throw StructuralError("coordinate change has the wrong arity");
    std::vector<MPoly<K>> images;
    images.reserve(static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i) {
        std::vector<typename MPoly<K>::Term> row;
        for (int j = 0; j < c.n; ++j) {
            const K& a = c.fwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a.is_zero())
                continue;
            Monomial m(c.n);
            m.e[static_cast<std::size_t>(j)] = 1;
            row.push_back({a, std::move(m)});
        }
        images.push_back(MPoly<K>::from_terms(p.field(), p.nvars(), p.order(), std::move(row)));
    }
    return substitute(p, images);
}

// The unipotent-t counterpart: the result acquires K[t] coefficients.
template <class K>
MPoly<UPoly<K>> apply_linear_change_t(const MPoly<K>& p, const CoordinateChange<K>& c) {
    if (p.nvars() != c.n)
        throw StructuralError("coordinate change has the wrong arity");
    MPoly<UPoly<K>> lifted = lift_to_t(p);
    if (c.kind == ChangeKind::Identity)
        return lifted;
    if (c.kind != ChangeKind::UnipotentT)
        throw StructuralError("expected a t-parameterized change");
    std::vector<MPoly<UPoly<K>>> images;
    images.reserve(static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i) {
        std::vector<typename MPoly<UPoly<K>>::Term> row;
        for (int j = 0; j < c.n; ++j) {
            const UPoly<K>& a = c.tfwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a.is_zero())
                continue;
            Monomial m(c.n);
            m.e[static_cast<std::size_t>(j)] = 1;
            row.push_back({a, std::move(m)});
        }
        images.push_back(MPoly<UPoly<K>>::from_terms(p.field(), p.nvars(), p.order(), std::move(row)));
    }
    return substitute(lifted, images);
}

// Same substitution applied to a polynomial that already has K[t]
// coefficients (used when lifting syzygies during the deformation).
template <class K>
MPoly<UPoly<K>> apply_linear_change_t(const MPoly<UPoly<K>>& p, const CoordinateChange<K>& c) {
    if (p.nvars() != c.n)
        throw StructuralError("coordinate change has the wrong arity");
    if (c.kind == ChangeKind::Identity)
        return p;
    if (c.kind != ChangeKind::UnipotentT)
        throw StructuralError("expected a t-parameterized change");
    std::vector<MPoly<UPoly<K>>> images;
    images.reserve(static_cast<std::size_t>(c.n));
    for (int i = 0; i < c.n; ++i) {
        std::vector<typename MPoly<UPoly<K>>::Term> row;
        for (int j = 0; j < c.n; ++j) {
            const UPoly<K>& a = c.tfwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a.is_zero())
                continue;
            Monomial m(c.n);
            m.e[static_cast<std::size_t>(j)] = 1;
            row.push_back({a, std::move(m)});
        }
        images.push_back(MPoly<UPoly<K>>::from_terms(p.field(), p.nvars(), p.order(), std::move(row)));
    }
    return substitute(p, images);
}

} // namespace elimcert

#endif
