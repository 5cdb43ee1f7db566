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

#ifndef ELIMCERT_UPOLY_HPP
#define ELIMCERT_UPOLY_HPP

#include <string>
#include <vector>

#include "elimcert/errors.hpp"

namespace elimcert {

// Dense univariate polynomial in the deformation parameter t, used as a
// coefficient ring K[t]. Coefficients are stored ascending; the zero
// polynomial is the empty vector.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(K constant) {
        if (!constant.is_zero())
            c_.push_back(std::move(constant));
    }
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    // c * t^k
    static UPoly t_power(K c, int k) {
        UPoly r;
        if (c.is_zero())
            return r;
        r.c_.assign(static_cast<std::size_t>(k) + 1, c.zero_like());
        r.c_.back() = std::move(c);
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_negative() const { return !c_.empty() && c_.back().is_negative(); }

    UPoly zero_like() const { return UPoly(); }
    UPoly one_like() const {
        if (c_.empty())
            throw StructuralError("one_like on the zero t-polynomial");
        return UPoly(c_[0].one_like());
    }

    int degree() const {
        if (c_.empty())
            throw StructuralError("degree of the zero t-polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    // t-adic valuation: largest k with t^k dividing this (nonzero) polynomial.
    int trailing_degree() const {
        if (c_.empty())
            throw StructuralError("valuation of the zero t-polynomial");
        int k = 0;
        while (c_[static_cast<std::size_t>(k)].is_zero())
            ++k;
        return k;
    }

    // Pointer to the constant coefficient, or nullptr when t divides this.
    const K* coeff_at_zero() const {
        if (c_.empty() || c_[0].is_zero())
            return nullptr;
        return &c_[0];
    }

    // Exact division by t^k.
    UPoly shift_down(int k) const {
        if (k == 0)
            return *this;
        if (is_zero())
            return *this;
        if (trailing_degree() < k)
            throw StructuralError("t-power division is not exact");
        UPoly r;
        r.c_.assign(c_.begin() + k, c_.end());
        return r;
    }

    UPoly operator-() const {
        UPoly r(*this);
        for (auto& x : r.c_)
            x = -x;
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        UPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size() && i < o.c_.size())
                r.c_[i] = c_[i] + o.c_[i];
            else if (i < c_.size())
                r.c_[i] = c_[i];
            else
                r.c_[i] = o.c_[i];
        }
        r.trim();
        return r;
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        UPoly r;
        if (is_zero() || o.is_zero())
            return r;
        const K z = c_[0].zero_like();
        r.c_.assign(c_.size() + o.c_.size() - 1, z);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly abs() const { return is_negative() ? -*this : *this; }

    K eval(const K& x) const {
        if (c_.empty())
            return x.zero_like();
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return c_ != o.c_; }

    const std::vector<K>& coeffs() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    std::string str() const {
        if (c_.empty())
            return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero())
                continue;
            if (!s.empty())
                s += c_[i].is_negative() ? " - " : " + ";
            else if (c_[i].is_negative())
                s += "-";
            const K a = c_[i].abs();
            if (i == 0) {
                s += a.str();
            } else {
                if (!a.is_one())
                    s += a.str() + "*";
                s += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<K> c_;
};

} // namespace elimcert

#endif
