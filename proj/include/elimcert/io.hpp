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

#ifndef ELIMCERT_IO_HPP
#define ELIMCERT_IO_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "elimcert/polynomial.hpp"

namespace elimcert {

// Text grammar (whitespace insignificant):
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   var    := 'x' uint              (1-based)
//   coeff  := int ('/' uint)?
//
// Example: "x1^2*x2 - 3/2*x3 + 1". render() emits exactly this shape and
// parse(render(p)) reproduces p bit-exactly.

namespace io_detail {

class Cursor {
  public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        return text_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, pos_ + 1, msg); }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

template <class K>
K coeff_from_digits(const std::string& num, const std::string& den, bool negative, const FieldDesc& desc,
                    Cursor& cur);

template <>
inline Rational coeff_from_digits<Rational>(const std::string& num, const std::string& den, bool negative,
                                            const FieldDesc&, Cursor& cur) {
    mpz_class n(num);
    if (negative)
        n = -n;
    if (den.empty())
        return Rational(n);
    mpz_class d(den);
    if (d == 0)
        cur.fail("zero denominator");
    return Rational(n, d);
}

template <>
inline Fp coeff_from_digits<Fp>(const std::string& num, const std::string& den, bool negative,
                                const FieldDesc& desc, Cursor& cur) {
    const std::uint64_t p = desc.modulus;
    auto fold = [&](const std::string& s) {
        std::uint64_t v = 0;
        for (char c : s)
            v = (static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * 10) % p) +
                 static_cast<std::uint64_t>(c - '0')) %
                p;
        return v;
    };
    Fp r(fold(num), p);
    if (negative)
        r = -r;
    if (!den.empty()) {
        Fp d(fold(den), p);
        if (d.is_zero())
            cur.fail("denominator vanishes in the prime field");
        r = r / d;
    }
    return r;
}

} // namespace io_detail

// Parses one polynomial. nvars fixes the ambient ring; indices above it are
// rejected. line seeds error positions when parsing multi-line files.
template <class K>
MPoly<K> parse_poly(std::string_view text, const FieldDesc& desc, int nvars, const TermOrder& order,
                    std::size_t line = 1) {
    io_detail::Cursor cur(text, line);
    using Term = typename MPoly<K>::Term;
    std::vector<Term> terms;

    bool first = true;
    bool negative = cur.accept('-');
    while (true) {
        // one term
        K coeff = scalar_from_int<K>(1, desc);
        Monomial mono(nvars);
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num = cur.digits();
            std::string den;
            if (cur.accept('/'))
                den = cur.digits();
            coeff = io_detail::coeff_from_digits<K>(num, den, false, desc, cur);
            saw_anything = true;
            while (cur.accept('*')) {
                if (cur.peek() != 'x')
                    cur.fail("expected a variable after '*'");
                cur.take();
                int idx = std::stoi(cur.digits());
                if (idx < 1 || idx > nvars)
                    cur.fail("variable index out of range");
                std::uint32_t e = 1;
                if (cur.accept('^'))
                    e = static_cast<std::uint32_t>(std::stoul(cur.digits()));
                mono.e[static_cast<std::size_t>(idx - 1)] += e;
            }
        } else if (cur.peek() == 'x') {
            saw_anything = true;
            do {
                if (cur.peek() != 'x')
                    cur.fail("expected a variable after '*'");
                cur.take();
                int idx = std::stoi(cur.digits());
                if (idx < 1 || idx > nvars)
                    cur.fail("variable index out of range");
                std::uint32_t e = 1;
                if (cur.accept('^'))
                    e = static_cast<std::uint32_t>(std::stoul(cur.digits()));
                mono.e[static_cast<std::size_t>(idx - 1)] += e;
            } while (cur.accept('*'));
        }
        if (!saw_anything)
            cur.fail(first ? "expected a polynomial" : "expected a term");
        if (negative)
            coeff = -coeff;
        if (!coeff.is_zero())
            terms.push_back(Term{std::move(coeff), std::move(mono)});

        first = false;
        if (cur.eof())
            break;
        char op = cur.take();
        if (op == '+')
            negative = false;
        else if (op == '-')
            negative = true;
        else
            cur.fail(std::string("unexpected character '") + op + "'");
    }
    return MPoly<K>::from_terms(desc, nvars, order, std::move(terms));
}

// Renders in the grammar above. Scalar coefficient fields only.
template <class K>
std::string render_poly(const MPoly<K>& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        const bool neg = t.coeff.is_negative();
        if (s.empty()) {
            if (neg)
                s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        const K a = t.coeff.abs();
        if (t.mono.is_one())
            s += a.str();
        else if (a.is_one())
            s += t.mono.str();
        else
            s += a.str() + "*" + t.mono.str();
    }
    return s;
}

// Debug rendering for K[t]-coefficient polynomials ("(t + 1)*x1 - t^2").
template <class K>
std::string render_tpoly(const MPoly<UPoly<K>>& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& t : p.terms()) {
        if (!s.empty())
            s += " + ";
        std::string c = t.coeff.str();
        if (t.mono.is_one()) {
            s += c;
        } else if (t.coeff.is_one()) {
            s += t.mono.str();
        } else {
            if (c.find(' ') != std::string::npos)
                c = "(" + c + ")";
            s += c + "*" + t.mono.str();
        }
    }
    return s;
}

// Largest variable index mentioned in a polynomial string; 0 if none.
// Used by the CLI to infer the ambient variable count before parsing.
int scan_max_var_index(std::string_view text);

} // namespace elimcert

#endif
