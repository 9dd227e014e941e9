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

#ifndef KKP_CYCLOTOMIC_HPP
#define KKP_CYCLOTOMIC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kkp/errors.hpp"

namespace kkp {

using BigRational = boost::multiprecision::cpp_rational;

/// An element of Q(zeta_p), p an odd prime, as coefficients on 1, zeta, ..., zeta^(p-2). The relation
/// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) keeps the representation unique.
class CycloNumber {
   public:
    CycloNumber() = default;
    explicit CycloNumber(int p, BigRational value = 0) : p_(p), c_(static_cast<std::size_t>(p - 1)) {
        if (p < 3) throw std::invalid_argument("CycloNumber needs an odd prime p");
        c_[0] = std::move(value);
    }

    /// zeta_p^k for any integer k.
    static CycloNumber zeta(int p, long k) {
        std::vector<BigRational> full(static_cast<std::size_t>(p));
        full[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
        return from_full(p, std::move(full));
    }

    /// zeta_{2p}^k = (-1)^k zeta_p^(k(p+1)/2).
    static CycloNumber zeta_2p(int p, long k) {
        const long kk = ((k % (2 * p)) + 2 * p) % (2 * p);
        auto z = zeta(p, kk * ((p + 1) / 2));
        return kk % 2 ? -z : z;
    }

    int prime() const { return p_; }
    const std::vector<BigRational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    BigRational rational_value() const {
        if (!is_rational()) throw std::domain_error("not a rational number");
        return c_.empty() ? BigRational(0) : c_[0];
    }

    friend bool operator==(const CycloNumber& x, const CycloNumber& y) {
        x.same_field(y);
        return x.c_ == y.c_;
    }

    CycloNumber operator-() const {
        auto r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend CycloNumber operator+(CycloNumber x, const CycloNumber& y) {
        x.same_field(y);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CycloNumber operator-(CycloNumber x, const CycloNumber& y) { return x + (-y); }
    friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y) {
        x.same_field(y);
        const int p = x.p_;
        std::vector<BigRational> full(static_cast<std::size_t>(p));
        for (int i = 0; i < p - 1; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < p - 1; ++j)
                if (y.c_[j] != 0) full[static_cast<std::size_t>((i + j) % p)] += x.c_[i] * y.c_[j];
        }
        return from_full(p, std::move(full));
    }
    friend CycloNumber operator*(CycloNumber x, const BigRational& q) {
        for (auto& v : x.c_) v *= q;
        return x;
    }
    CycloNumber& operator+=(const CycloNumber& y) { return *this = *this + y; }
    CycloNumber& operator*=(const CycloNumber& y) { return *this = *this * y; }

    /// The automorphism zeta -> zeta^j, j prime to p.
    CycloNumber galois(int j) const {
        std::vector<BigRational> full(static_cast<std::size_t>(p_));
        for (int i = 0; i < p_ - 1; ++i)
            full[static_cast<std::size_t>((static_cast<long>(i) * j % p_ + p_) % p_)] += c_[i];
        return from_full(p_, std::move(full));
    }

    /// Product of all Galois conjugates; a rational number.
    BigRational norm() const { return (*this * conjugate_product()).rational_value(); }

    CycloNumber inverse() const {
        if (is_zero()) throw std::domain_error("zero has no inverse");
        const auto rest = conjugate_product();
        return rest * (BigRational(1) / (*this * rest).rational_value());
    }

    CycloNumber pow(long e) const {
        auto base = e < 0 ? inverse() : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        CycloNumber result(p_, 1);
        while (n) {
            if (n & 1UL) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < p_ - 1; ++i) {
            if (c_[i] == 0) continue;
            const std::string coef = c_[i].str();
            if (!out.empty()) out += coef[0] == '-' ? " - " : " + ";
            else if (coef[0] == '-') out += "-";
            const std::string mag = coef[0] == '-' ? coef.substr(1) : coef;
            if (i == 0) out += mag;
            else {
                if (mag != "1") out += mag + "*";
                out += i == 1 ? "z" : "z^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

   private:
    static CycloNumber from_full(int p, std::vector<BigRational> full) {
        CycloNumber r(p);
        const BigRational top = full[static_cast<std::size_t>(p - 1)];
        for (int i = 0; i < p - 1; ++i) r.c_[i] = full[i] - top;
        return r;
    }
    CycloNumber conjugate_product() const {
        CycloNumber prod(p_, 1);
        for (int j = 2; j < p_; ++j) prod = prod * galois(j);
        return prod;
    }
    void same_field(const CycloNumber& o) const {
        if (p_ != o.p_) throw SpecMismatch("cyclotomic numbers from different fields");
    }

    int p_ = 3;
    std::vector<BigRational> c_ = std::vector<BigRational>(2);
};

}  // namespace kkp

#endif  // KKP_CYCLOTOMIC_HPP
