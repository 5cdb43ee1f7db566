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

#ifndef ELIMCERT_TERM_ORDER_HPP
#define ELIMCERT_TERM_ORDER_HPP

#include <string>
#include <vector>

#include "elimcert/monomial.hpp"

namespace elimcert {

enum class OrderKind { Lex, Grevlex, Block };

// Term orders used throughout.
//
//   Lex      lexicographic with x_n > ... > x_1. With the largest variables
//            last, a lex basis eliminates trailing variables, so basis
//            elements free of x_{b+1}..x_n generate I ∩ k[x_1..x_b].
//   Grevlex  graded reverse lexicographic with x_1 > ... > x_n.
//   Block    elimination order: variables 1..split are "small", the rest are
//            eliminated. A monomial touching an eliminated variable beats any
//            monomial free of them; grevlex is used inside each block.
//
// The optional weight vector is a degree functional only (see
// weighted_degree); it never participates in comparisons.
struct TermOrder {
    OrderKind kind = OrderKind::Grevlex;
    int split = 0;
    std::vector<long> weights;

    static TermOrder lex() { return TermOrder{OrderKind::Lex, 0, {}}; }
    static TermOrder grevlex() { return TermOrder{OrderKind::Grevlex, 0, {}}; }
    static TermOrder block(int split) { return TermOrder{OrderKind::Block, split, {}}; }

    bool operator==(const TermOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || split == o.split);
    }
    bool operator!=(const TermOrder& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Block: return "block(" + std::to_string(split) + ")";
        }
        return "?";
    }
};

// Strict comparison: -1 if a < b, 0 if equal, +1 if a > b.
int compare(const Monomial& a, const Monomial& b, const TermOrder& order);

inline bool less(const Monomial& a, const Monomial& b, const TermOrder& order) {
    return compare(a, b, order) < 0;
}

} // namespace elimcert

#endif
