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

#include <set>

#include "kkp/automorphism.hpp"

using namespace kkp;

namespace {

bool contains(const std::vector<Automorphism>& autos, const Automorphism& f) {
    for (const auto& g : autos)
        if (g == f) return true;
    return false;
}

// Independent count: a homomorphism is fixed by the images of a, b, s, r; brute force over the candidate
// images of r and s and of a (b is forced by r b r^-1 = a), keeping bijective relator-respecting tuples.
std::size_t brute_force_aut_order(const Group& g) {
    const auto rels = g.standard_relators();
    const auto& n = g.spec().names;
    std::size_t count = 0;
    const auto all = all_elements(g);
    std::vector<GroupElement> order3, order2, orderp;
    for (const auto& x : all) {
        const int o = g.order_of(x);
        if (o == 3) order3.push_back(x);
        if (o == 2) order2.push_back(x);
        if (o == g.modulus()) orderp.push_back(x);
    }
    for (const auto& r : order3)
        for (const auto& s : order2)
            for (const auto& a : orderp) {
                // r b r^-1 = a  =>  b = r^-1 a r
                const auto b = g.multiply(g.multiply(g.inverse(r), a), r);
                std::map<std::string, GroupElement> bind{{n.a, a}, {n.b, b}, {n.s, s}, {n.r, r}};
                bool ok = true;
                for (const auto& w : rels)
                    if (!(evaluate(w, bind, g) == g.identity())) {
                        ok = false;
                        break;
                    }
                if (ok && generates_group(g, {a, b, s, r})) ++count;
            }
    return count;
}

}  // namespace

TEST(Automorphism, OrderAtFiveIsPinned) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    EXPECT_EQ(automorphism_group(g).size(), 600u);
    EXPECT_EQ(brute_force_aut_order(g), 600u);
}

TEST(Automorphism, OrderAtSevenMatchesBruteForce) {
    const auto& g = Group::get(GroupSpec::semidirect(7));
    EXPECT_EQ(automorphism_group(g).size(), brute_force_aut_order(g));
}

TEST(Automorphism, ClosedUnderCompositionAndInverse) {
    EXPECT_TRUE(is_closed(automorphism_group(Group::get(GroupSpec::semidirect(5)))));
}

TEST(Automorphism, PowerMapsPresentForUnits) {
    for (int p : {5, 7}) {
        const auto& g = Group::get(GroupSpec::semidirect(p));
        for (int e = 1; e < p; ++e) EXPECT_TRUE(contains(automorphism_group(g), power_automorphism(g, e))) << e;
    }
}

TEST(Automorphism, InnerAutomorphismsPresent) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    for (std::size_t i = 0; i < g.order(); i += 7)
        EXPECT_TRUE(contains(automorphism_group(g), inner_automorphism(g, g.element_at(i))));
}

TEST(Automorphism, GeneratorsReachEverything) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    const auto gens = automorphism_generators(g);
    EXPECT_LE(gens.size(), 6u);
    std::set<std::vector<GroupElement>> reached{automorphism_group(g).front().images};
    std::vector<Automorphism> frontier{automorphism_group(g).front()};
    while (!frontier.empty()) {
        std::vector<Automorphism> next;
        for (const auto& f : frontier)
            for (const auto& h : gens) {
                auto c = compose(h, f);
                if (reached.insert(c.images).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    EXPECT_EQ(reached.size(), 600u);
}

TEST(Automorphism, ExtensionsHaveEqualOrders) {
    EXPECT_EQ(automorphism_group(GroupSpec::central(5)).size(), 1200u);
    EXPECT_EQ(automorphism_group(GroupSpec::inverting(5)).size(), 1200u);
}

TEST(Automorphism, InverseUndoesMap) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    const auto& f = automorphism_group(g)[123];
    const auto id = compose(f, inverse(f));
    for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(id.table[i], i);
}

TEST(Automorphism, SingleClassOfGInsideGprime) {
    const auto classes = subgroups_isomorphic_to_G_inside_Gprime(GroupSpec::semidirect(10));
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_EQ(classes[0].members, 4u);
    const auto& gp = Group::get(GroupSpec::semidirect(10));
    const auto h = subgroup_generated(gp, {gp.eval("a^2"), gp.eval("b^2"), gp.eval("s"), gp.eval("r")});
    EXPECT_EQ(h.size(), 150u);
    EXPECT_TRUE(subgroups_conjugate(gp, h, classes[0].representative));
}

TEST(Automorphism, ClassIsStableUnderConjugation) {
    const auto classes = subgroups_isomorphic_to_G_inside_Gprime(GroupSpec::semidirect(10));
    const auto& gp = Group::get(GroupSpec::semidirect(10));
    for (const auto& name : gp.generator_names()) {
        const auto k = conjugate_subgroup(gp, classes[0].representative, gp.generator(name));
        EXPECT_TRUE(subgroups_conjugate(gp, k, classes[0].representative));
    }
}

TEST(Automorphism, IsomorphismIntoSubgroup) {
    const auto& gp = Group::get(GroupSpec::semidirect(10));
    const auto& g = Group::get(GroupSpec::semidirect(5));
    const auto h = subgroup_generated(gp, {gp.eval("a^2"), gp.eval("b^2"), gp.eval("s"), gp.eval("r")});
    const auto iso = find_isomorphism(g, gp, h);
    ASSERT_TRUE(iso.has_value());
    std::set<std::uint32_t> image(iso->table.begin(), iso->table.end());
    EXPECT_EQ(image.size(), 150u);
    for (auto i : image) EXPECT_TRUE(h.mask[i]);
    const auto bs = subgroup_generated(gp, {gp.eval("b"), gp.eval("s")});
    EXPECT_FALSE(find_isomorphism(g, gp, bs).has_value());
}
