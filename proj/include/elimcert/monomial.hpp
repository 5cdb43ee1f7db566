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

#ifndef ELIMCERT_MONOMIAL_HPP
#define ELIMCERT_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "elimcert/errors.hpp"

namespace elimcert {

// Exponent vector over x_1..x_n (1-based variables, 0-based storage).
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }

    long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }

    bool divides(const Monomial& m) const {
        if (e.size() != m.e.size())
            throw StructuralError("monomial arity mismatch");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i])
                return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        if (e.size() != m.e.size())
            throw StructuralError("monomial arity mismatch");
        Monomial r(nvars());
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = e[i] + m.e[i];
        return r;
    }

    // Exact quotient; caller must ensure m | *this.
    Monomial operator/(const Monomial& m) const {
        if (!m.divides(*this))
            throw StructuralError("monomial quotient is not exact");
        Monomial r(nvars());
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = e[i] - m.e[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    // structural order, for use as a map key only
    bool operator<(const Monomial& m) const { return e < m.e; }

    // "x1^2*x2"; the empty monomial renders as "1".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw StructuralError("monomial arity mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.e.size(); ++i)
        r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw StructuralError("monomial arity mismatch");
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0)
            return false;
    return true;
}

} // namespace elimcert

#endif
