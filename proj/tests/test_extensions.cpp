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

#include "kkp/extensions.hpp"

using namespace kkp;

namespace {

std::vector<std::string> names(const Restriction& r) {
    std::vector<std::string> out;
    for (const auto& x : r.elements) out.push_back(r.super->to_string(x));
    return out;
}

const Group& G(int p) { return Group::get(GroupSpec::semidirect(p)); }

}  // namespace

TEST(Extensions, FermatRestrictionWords) {
    const auto& gp = Group::get(GroupSpec::fermat(5));
    const auto r = restrict(fermat_restriction(fermat_vector(gp)));
    EXPECT_EQ(r.index, 4);
    const std::vector<GroupElement> expected{gp.eval("A^2 B S"), gp.eval("S R"), gp.eval("A B R^2"), gp.eval("A^-2")};
    EXPECT_EQ(r.elements, expected);
    const auto ai = gp.eval("A^-1"), a = gp.eval("A");
    std::vector<GroupElement> conj;
    for (const auto& x : r.elements) conj.push_back(gp.multiply(gp.multiply(ai, x), a));
    const std::vector<GroupElement> theta0{gp.eval("S"), gp.eval("S R"), gp.eval("B^2 R^2"), gp.eval("A^-2")};
    EXPECT_EQ(conj, theta0);
}

TEST(Extensions, DeltaZeroRestriction) {
    const auto& h1 = Group::get(GroupSpec::central(5));
    const auto r = restrict(delta0_restriction(Theta1(h1)));
    EXPECT_EQ(r.index, 2);
    EXPECT_EQ(names(r), (std::vector<std::string>{"B^4 R2", "B^4 SR C", "B^4 SR2 C"}));
}

TEST(Extensions, DeltaZeroRestrictionIsPhiOne) {
    for (int p : {5, 7}) {
        PullBack pull(G(p));
        const auto v = pull(restrict(delta0_restriction(Theta1(Group::get(GroupSpec::central(p))))));
        ASSERT_TRUE(v.has_value());
        EXPECT_TRUE(equivalent(*v, phi_n(G(p), 1), automorphism_generators(G(p))));
        EXPECT_FALSE(equivalent(*v, phi_n(G(p), p - 1), automorphism_generators(G(p))));
    }
}

TEST(Extensions, AlphaRestrictionOfThetaOne) {
    const auto& h1 = Group::get(GroupSpec::central(5));
    const auto r = restrict(alpha_restriction(Theta1(h1)));
    EXPECT_EQ(r.index, 2);
    const std::vector<GroupElement> expected{h1.eval("S"), h1.eval("S R"), h1.eval("B^-1 R^2"), h1.eval("A")};
    EXPECT_EQ(r.elements, expected);
}

TEST(Extensions, RestrictionErrors) {
    const auto v = Theta1(Group::get(GroupSpec::central(5)));
    EXPECT_THROW(restrict({v, {"z1", "z2"}, {3, 6}}), OrderMismatch);
    EXPECT_THROW(restrict({v, {"z1", "z2", "z3^-1"}, {2, 6, 10}}), NonTrivialProduct);
    EXPECT_THROW(restrict({v, {"z1", "z1"}, {2, 2}}), NonHyperbolicSignature);
    EXPECT_THROW(restrict({v, {"z2^2", "z2^2", "z2^2", "z2^2", "z2^2", "z2^2"}, {3, 3, 3, 3, 3, 3}}), IndexMismatch);
}

TEST(Extensions, SupergroupsHaveOneClass) {
    for (const auto& spec : {GroupSpec::central(5), GroupSpec::inverting(5)}) {
        const auto c = classify_supergroup_actions(spec);
        EXPECT_EQ(c.strata.size(), 1u);
        EXPECT_EQ(c.total(), 1200u);
    }
    const auto c1 = classify_supergroup_actions(GroupSpec::central(5));
    EXPECT_TRUE(c1.stratum_of(Theta1(Group::get(GroupSpec::central(5)))).has_value());
    const auto c2 = classify_supergroup_actions(GroupSpec::inverting(5));
    EXPECT_TRUE(c2.stratum_of(Theta2(Group::get(GroupSpec::inverting(5)))).has_value());
    EXPECT_THROW(classify_supergroup_actions(GroupSpec::semidirect(5)), SpecMismatch);
}

TEST(Extensions, DecisionAtFive) {
    const auto d = decide_extensions(5);
    const auto t1 = *d.theta.stratum_of(theta_k(G(5), 1));
    const auto t2 = *d.theta.stratum_of(theta_k(G(5), 2));
    ASSERT_EQ(d.supergroups.size(), 3u);
    for (const auto& sg : d.supergroups) {
        EXPECT_EQ(sg.classes, 1u) << sg.name;
        EXPECT_EQ(sg.not_model, 0u) << sg.name;
        ASSERT_EQ(sg.landed.size(), 1u) << sg.name;
        const auto target = sg.name == "H2" ? t2 : t1;
        EXPECT_EQ(sg.landed.begin()->first, target) << sg.name;
        EXPECT_EQ(sg.landed.begin()->second, sg.actions) << sg.name;
    }
}

TEST(Extensions, DecisionIgnoresRepresentative) {
    // Restrict a randomly transported copy of Theta1: it must land where Theta1 lands.
    const auto& h1 = Group::get(GroupSpec::central(5));
    const auto& autos = automorphism_group(h1);
    auto theta = classify_actions(G(5), Signature(0, {2, 2, 3, 5}));
    PullBack pull(G(5));
    const auto base = theta.stratum_of(*pull(restrict(alpha_restriction(Theta1(h1)))));
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto v = apply(autos[rng() % autos.size()], Theta1(h1));
        v = braid_move(v, 1 + rng() % 2);
        // the alpha words assume periods (2,6,2p); rotate back to that order
        while (v.periods != std::vector<int>{2, 6, 10}) v = braid_move(v, 1 + rng() % 2);
        EXPECT_EQ(theta.stratum_of(*pull(restrict(alpha_restriction(v)))), base);
    }
}

TEST(Extensions, Order18p2Search) {
    EXPECT_EQ(order_18p2_solutions(5), (std::vector<std::array<long long, 3>>{{2, 3, 90}}));
    for (int p : {7, 11, 13, 17, 19}) EXPECT_TRUE(no_order_18p2(p)) << p;
    // each solution satisfies the area identity exactly
    for (const auto& t : order_18p2_solutions(5))
        EXPECT_EQ(Rational(1, t[0]) + Rational(1, t[1]) + Rational(1, t[2]), Rational(38, 45));
}

TEST(Extensions, Bounds) {
    const auto b = bounds_report(5);
    EXPECT_EQ(b.genus, 36);
    EXPECT_EQ(b.hurwitz, 2940);
    EXPECT_EQ(b.plane_curve, 600);
    EXPECT_EQ(b.ladder.back().order, 600);
    EXPECT_EQ(b.ladder.back().lambda, 4);
    EXPECT_NE(bounds_report(7).ladder[2].status.find("excluded"), std::string::npos);
    EXPECT_EQ(to_json(b)["hurwitz_bound"], 2940);
}
