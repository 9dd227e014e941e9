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

#include <gtest/gtest.h>

#include <random>

#include "kkp/cyclotomic.hpp"
#include "kkp/polynomial.hpp"

using namespace kkp;

namespace {

CycloNumber random_number(int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    CycloNumber x(p);
    for (int i = 0; i < p; ++i) x += CycloNumber::zeta(p, i) * BigRational(num(rng), den(rng));
    return x;
}

}  // namespace

TEST(Cyclotomic, ZetaRelations) {
    for (int p : {3, 5, 7, 11, 13}) {
        const auto z = CycloNumber::zeta(p, 1);
        EXPECT_EQ(z.pow(p), CycloNumber(p, 1));
        CycloNumber phi(p);
        for (int i = 0; i < p; ++i) phi += z.pow(i);
        EXPECT_TRUE(phi.is_zero());
        EXPECT_EQ(CycloNumber::zeta(p, -1) * z, CycloNumber(p, 1));
        EXPECT_EQ(CycloNumber::zeta_2p(p, 2), z);
        EXPECT_EQ(CycloNumber::zeta_2p(p, p), CycloNumber(p, -1));
        EXPECT_EQ(CycloNumber::zeta_2p(p, 1).pow(2 * p), CycloNumber(p, 1));
    }
}

TEST(Cyclotomic, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        const int p = trial % 2 ? 5 : 7;
        const auto u = random_number(p, rng), v = random_number(p, rng), w = random_number(p, rng);
        ASSERT_EQ((u * v) * w, u * (v * w));
        ASSERT_EQ(u * (v + w), u * v + u * w);
        ASSERT_EQ(u + v, v + u);
        if (!u.is_zero()) ASSERT_EQ(u * u.inverse(), CycloNumber(p, 1));
    }
}

TEST(Cyclotomic, ReductionIsCanonical) {
    // zeta^(p-1) written two ways must compare equal.
    const int p = 5;
    CycloNumber minus_sum(p);
    for (int i = 0; i < p - 1; ++i) minus_sum += CycloNumber::zeta(p, i);
    EXPECT_EQ(CycloNumber::zeta(p, p - 1), -minus_sum);
    EXPECT_EQ(CycloNumber::zeta(p, p - 1).coefficients(), (-minus_sum).coefficients());
}

TEST(Cyclotomic, NormAndGalois) {
    const int p = 5;
    const auto one_minus_zeta = CycloNumber(p, 1) - CycloNumber::zeta(p, 1);
    EXPECT_EQ(one_minus_zeta.norm(), BigRational(5));
    EXPECT_EQ(CycloNumber::zeta(p, 1).galois(2), CycloNumber::zeta(p, 2));
    EXPECT_THROW(CycloNumber::zeta(5, 1) + CycloNumber::zeta(7, 1), SpecMismatch);
    EXPECT_THROW(CycloNumber(5).inverse(), std::domain_error);
    EXPECT_EQ(CycloNumber(7, BigRational(3, 4)).rational_value(), BigRational(3, 4));
}

TEST(Polynomial, DerivativeAndEvaluation) {
    const auto f = Poly3::monomial({3, 1, 0}) + Poly3::monomial({0, 0, 2}, 5);
    EXPECT_EQ(f.derivative(0), Poly3::monomial({2, 1, 0}, 3));
    EXPECT_TRUE(f.derivative(2).derivative(0).terms().empty());
    EXPECT_TRUE((f + Poly3::monomial({0, 0, 4})).terms().size() == 3);
    EXPECT_TRUE(f.homogeneous_of_degree(4) == false);
    const int p = 5;
    const auto v = f.evaluate({CycloNumber(p, 2), CycloNumber(p, 3), CycloNumber(p, 1)});
    EXPECT_EQ(v, CycloNumber(p, 29));
}

TEST(Polynomial, DistinctRoots) {
    // (w - 1)^2 (w + 2) has two distinct roots; w^10 + 1 has ten.
    const UPoly f({BigRational(2), BigRational(-3), BigRational(0), BigRational(1)});
    EXPECT_EQ(f.distinct_roots(), 2);
    std::vector<BigRational> c(11);
    c[0] = 1;
    c[10] = 1;
    EXPECT_EQ(UPoly(c).distinct_roots(), 10);
    c[5] = 2;  // (w^5 + 1)^2
    EXPECT_EQ(UPoly(c).distinct_roots(), 5);
}
