/*
   Copyright 2026 The kkpencil Authors

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

#ifndef KKP_POLYNOMIAL_HPP
#define KKP_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kkp/cyclotomic.hpp"

namespace kkp {

using Exponent3 = std::array<int, 3>;

/// Polynomial in x, y, z with rational coefficients, stored sparsely.
class Poly3 {
   public:
    Poly3() = default;

    static Poly3 monomial(Exponent3 e, BigRational c = 1) {
        Poly3 p;
        p.add(e, std::move(c));
        return p;
    }

    void add(const Exponent3& e, const BigRational& c) {
        auto& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }

    const std::map<Exponent3, BigRational>& terms() const { return terms_; }
    bool operator==(const Poly3&) const = default;

    friend Poly3 operator+(Poly3 a, const Poly3& b) {
        for (const auto& [e, c] : b.terms_) a.add(e, c);
        return a;
    }
    friend Poly3 operator*(const Poly3& a, const Poly3& b) {
        Poly3 out;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) out.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return out;
    }
    friend Poly3 operator*(Poly3 a, const BigRational& q) {
        if (q == 0) return {};
        for (auto& [e, c] : a.terms_) c *= q;
        return a;
    }

    Poly3 derivative(int var) const {
        Poly3 out;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            auto f = e;
            --f[var];
            out.add(f, c * e[var]);
        }
        return out;
    }

    /// Value at a point with coordinates in Q(zeta_p).
    CycloNumber evaluate(const std::array<CycloNumber, 3>& pt) const {
        const int p = pt[0].prime();
        CycloNumber sum(p);
        for (const auto& [e, c] : terms_) {
            CycloNumber term(p, c);
            for (int i = 0; i < 3; ++i)
                if (e[i]) term = term * pt[i].pow(e[i]);
            sum = sum + term;
        }
        return sum;
    }

    bool homogeneous_of_degree(int d) const {
        for (const auto& [e, c] : terms_)
            if (e[0] + e[1] + e[2] != d) return false;
        return true;
    }

   private:
    std::map<Exponent3, BigRational> terms_;
};

/// Polynomial in one variable over Q, coefficients from the constant term up.
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coefficients() const { return c_; }

    UPoly derivative() const {
        std::vector<BigRational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return UPoly(std::move(d));
    }

    UPoly remainder(const UPoly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
        auto r = c_;
        const int dd = divisor.degree();
        while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
            const BigRational q = r.back() / divisor.c_.back();
            const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
            for (int i = 0; i <= dd; ++i) r[shift + i] -= q * divisor.c_[i];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return UPoly(std::move(r));
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto r = a.remainder(b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            const BigRational lead = a.c_.back();
            for (auto& x : a.c_) x /= lead;
        }
        return a;
    }

    /// Number of distinct complex roots: deg f - deg gcd(f, f').
    int distinct_roots() const {
        if (degree() <= 0) return 0;
        return degree() - gcd(*this, derivative()).degree();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRational> c_;
};

}  // namespace kkp

#endif  // KKP_POLYNOMIAL_HPP
