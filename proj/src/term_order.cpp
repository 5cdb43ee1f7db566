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

#include "elimcert/term_order.hpp"

namespace elimcert {

namespace {

// grevlex on the slice [lo, hi): degree first, then the last differing
// exponent decides with the smaller exponent winning.
int compare_grevlex_slice(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i])
            return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
    if (a.e.size() != b.e.size())
        throw StructuralError("monomial arity mismatch in comparison");
    const std::size_t n = a.e.size();
    switch (order.kind) {
    case OrderKind::Lex:
        for (std::size_t i = n; i-- > 0;) {
            if (a.e[i] != b.e[i])
                return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    case OrderKind::Grevlex:
        return compare_grevlex_slice(a, b, 0, n);
    case OrderKind::Block: {
        const std::size_t split = static_cast<std::size_t>(order.split);
        if (split > n)
            throw StructuralError("block order split exceeds variable count");
        if (int c = compare_grevlex_slice(a, b, split, n))
            return c;
        return compare_grevlex_slice(a, b, 0, split);
    }
    }
    return 0;
}

} // namespace elimcert
