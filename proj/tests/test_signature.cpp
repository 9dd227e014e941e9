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

#include <numeric>

#include "kkp/signature.hpp"

using namespace kkp;

namespace {

// Euler characteristic count: 2 - 2g = |G| (2 - 2h - sum (1 - 1/m)), kept in integers.
long long genus_by_euler(long long order, int h, const std::vector<int>& periods) {
    long long lcm = 1;
    for (int m : periods) lcm = std::lcm(lcm, static_cast<long long>(m));
    long long twice_chi = (2 - 2 * h) * lcm;  // scaled by lcm
    for (int m : periods) twice_chi -= lcm - lcm / m;
    const long long scaled = order * twice_chi;  // (2 - 2g) * lcm
    EXPECT_EQ(scaled % lcm, 0);
    return (2 - scaled / lcm) / 2;
}

}  // namespace

TEST(Signature, ParseAndPrint) {
    const auto s = parse_signature("(0; 5, 2,3,2)");
    EXPECT_EQ(s.periods, (std::vector<int>{2, 2, 3, 5}));
    EXPECT_EQ(to_string(s), "(0; 2,2,3,5)");
    EXPECT_EQ(to_string(parse_signature("(2;)")), "(2;)");
    EXPECT_THROW(parse_signature("(0; 2,1)"), ParseError);
    EXPECT_THROW(parse_signature("0; 2,3"), ParseError);
    EXPECT_THROW(parse_signature("(0; 2,3,7) x"), ParseError);
}

TEST(Signature, GenusOfTheFamily) {
    for (long long p : {5, 7, 11, 13}) {
        const long long expected = (p - 1) * (2 * p - 1);
        const int ip = static_cast<int>(p);
        EXPECT_EQ(rh_genus(6 * p * p, Signature(0, {2, 2, 3, ip})), expected);
        EXPECT_EQ(rh_genus(p * p, Signature(0, std::vector<int>(6, ip))), expected);
        EXPECT_EQ(rh_genus(24 * p * p, Signature(0, {2, 3, 4 * ip})), expected);
        EXPECT_EQ(rh_genus(12 * p * p, Signature(0, {2, 6, 2 * ip})), expected);
        EXPECT_EQ(rh_genus(6 * p * p, Signature(0, {3, 2 * ip, 2 * ip})), expected);
        EXPECT_EQ(genus_by_euler(6 * p * p, 0, {2, 2, 3, ip}), expected);
    }
    EXPECT_EQ(rh_genus(150, Signature(0, {2, 2, 3, 5})), 36);
}

TEST(Signature, GenusAgreesWithEulerCount) {
    const std::vector<std::pair<long long, std::vector<int>>> corpus{
        {168, {2, 3, 7}}, {8, {2, 2, 2, 2, 2}}, {2, {2, 2, 2, 2, 2, 2}}, {120, {2, 4, 5}}, {48, {2, 3, 8}}};
    for (const auto& [order, periods] : corpus)
        EXPECT_EQ(rh_genus(order, Signature(0, periods)), genus_by_euler(order, 0, periods));
}

TEST(Signature, Errors) {
    EXPECT_THROW(rh_genus(6, Signature(0, {2, 2, 3})), NonHyperbolicSignature);
    EXPECT_THROW(rh_genus(7, Signature(0, {2, 3, 7})), NonIntegralGenus);
    EXPECT_THROW(Signature(-1, {}), std::invalid_argument);
}

TEST(Signature, TeichmullerDimension) {
    EXPECT_EQ(teichmuller_dimension(Signature(0, {2, 2, 3, 7})), 1);
    EXPECT_EQ(teichmuller_dimension(Signature(0, {2, 6, 10})), 0);
    EXPECT_EQ(teichmuller_dimension(Signature(1, {})), 1);
    EXPECT_EQ(teichmuller_dimension(Signature(1, {3})), 1);
    EXPECT_EQ(teichmuller_dimension(Signature(2, {})), 3);
}

TEST(Signature, IndexFromAreas) {
    for (int p : {5, 7, 13}) {
        EXPECT_EQ(index_from_areas(Signature(0, {2, 2, 3, p}), Signature(0, {2, 3, 4 * p})), Rational(4));
        EXPECT_EQ(index_from_areas(Signature(0, {3, 2 * p, 2 * p}), Signature(0, {2, 6, 2 * p})), Rational(2));
        EXPECT_EQ(index_from_areas(Signature(0, {2, 2, 3, p}), Signature(0, {2, 6, 2 * p})), Rational(2));
        EXPECT_EQ(index_from_areas(Signature(0, {2, 2, 3, p}), Signature(0, {2, 2, 3, p})), Rational(1));
    }
}

TEST(Signature, IndexIsMultiplicativeAlongChains) {
    const Signature sub(0, {5, 5, 5, 5, 5, 5}), mid(0, {2, 2, 3, 5}), super(0, {2, 3, 20});
    EXPECT_EQ(index_from_areas(sub, super), index_from_areas(sub, mid) * index_from_areas(mid, super));
    EXPECT_EQ(index_from_areas(sub, mid), Rational(6));
}

TEST(Signature, TableRowsPassAreaCheck) {
    const auto rows = singerman_table(30);
    EXPECT_GT(rows.size(), 100u);
    for (const auto& row : rows) {
        EXPECT_EQ(index_from_areas(row.sub, row.super), Rational(row.index)) << row.family;
        EXPECT_EQ(teichmuller_dimension(row.sub), teichmuller_dimension(row.super)) << row.family;
    }
}

TEST(Signature, FamilyIsFinitelyMaximalInDimensionOne) {
    for (int p : {5, 7, 11, 13}) EXPECT_TRUE(is_finitely_maximal(Signature(0, {2, 2, 3, p})));
}

TEST(Signature, TriangleExtension) {
    for (int p : {5, 7, 13}) {
        const auto c = singerman_candidates(Signature(0, {3, 2 * p, 2 * p}));
        const bool found = std::any_of(c.begin(), c.end(), [&](const SingermanPair& row) {
            return row.super == Signature(0, {2, 6, 2 * p}) && row.index == 2;
        });
        EXPECT_TRUE(found) << p;
        EXPECT_TRUE(is_finitely_maximal(Signature(0, {2, 6, 2 * p}))) << p;
    }
}

TEST(Signature, KnownNonMaximalExamples) {
    EXPECT_FALSE(is_finitely_maximal(Signature(0, {7, 7, 7})));
    EXPECT_FALSE(is_finitely_maximal(Signature(0, {2, 2, 3, 3})));
    EXPECT_FALSE(is_finitely_maximal(Signature(2, {})));
    EXPECT_TRUE(is_finitely_maximal(Signature(0, {2, 3, 7})));
}
