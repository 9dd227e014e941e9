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

#include <map>
#include <random>
#include <set>

#include "kkp/group.hpp"

using namespace kkp;

namespace {

std::vector<GroupSpec> desk_specs() {
    std::vector<GroupSpec> out;
    for (int m : {5, 7, 10, 14}) out.push_back(GroupSpec::semidirect(m));
    for (int p : {5, 7}) {
        out.push_back(GroupSpec::central(p));
        out.push_back(GroupSpec::inverting(p));
    }
    return out;
}

}  // namespace

TEST(Group, ConjugationByRMatchesRelator) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    const auto r = g.generator("r"), a = g.generator("a");
    EXPECT_EQ(g.multiply(g.multiply(r, a), g.inverse(r)), g.make(4, 4, 0, 0));
}

TEST(Group, DerivedActionsSatisfyEveryRelator) {
    for (const auto& spec : desk_specs()) {
        const auto& g = Group::get(spec);
        EXPECT_TRUE(verify_presentation(g, g.standard_relators())) << spec.modulus;
    }
    for (int p : {5, 7}) {
        const auto& g = Group::get(GroupSpec::fermat(p));
        EXPECT_TRUE(verify_presentation(g, fermat_relator_texts(g.spec().names, p)));
    }
}

TEST(Group, DerivedLatticeAction) {
    const auto& g = Group::get(GroupSpec::semidirect(7));
    // r a r^-1 = a^-1 b^-1, r b r^-1 = a; s a s = a^-1 b^-1, s b s = b.
    EXPECT_EQ(g.lattice_action(1), (Mat2{6, 1, 6, 0}));
    EXPECT_EQ(g.lattice_action(3), (Mat2{6, 0, 6, 1}));
    EXPECT_EQ(Group::get(GroupSpec::central(7)).lattice_action(0, 1), (Mat2{1, 0, 0, 1}));
    EXPECT_EQ(Group::get(GroupSpec::inverting(7)).lattice_action(0, 1), (Mat2{6, 0, 0, 6}));
}

TEST(Group, OrdersByExhaustiveCount) {
    for (const auto& spec : desk_specs()) {
        const auto& g = Group::get(spec);
        std::size_t count = 0;
        for (std::size_t i = 0; i < g.order(); ++i) {
            EXPECT_EQ(g.index_of(g.element_at(i)), i);
            ++count;
        }
        EXPECT_EQ(count, static_cast<std::size_t>((spec.extended() ? 12 : 6) * spec.modulus * spec.modulus));
    }
}

TEST(Group, ExhaustiveAssociativityAtFive) {
    EXPECT_TRUE(is_associative(Group::get(GroupSpec::semidirect(5))));
}

TEST(Group, RandomAssociativityAndInverses) {
    std::mt19937 rng(42);
    for (const auto& spec : desk_specs()) {
        const auto& g = Group::get(spec);
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int i = 0; i < 10000; ++i) {
            const auto x = g.element_at(pick(rng)), y = g.element_at(pick(rng)), z = g.element_at(pick(rng));
            ASSERT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
            ASSERT_EQ(g.multiply(x, g.inverse(x)), g.identity());
            ASSERT_EQ(g.multiply(g.identity(), x), x);
        }
    }
}

TEST(Group, ElementCensus) {
    for (int p : {5, 7, 11, 13}) {
        const auto& g = Group::get(GroupSpec::semidirect(p));
        std::map<int, int> count;
        for (std::size_t i = 0; i < g.order(); ++i) ++count[g.order_of(g.element_at(i))];
        EXPECT_EQ(count[1], 1);
        EXPECT_EQ(count[2], 3 * p);
        EXPECT_EQ(count[3], 2 * p * p);
        // Oracle: the nonzero points of the lattice Z_p^2.
        int lattice_points = 0;
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) lattice_points += (x || y) ? 1 : 0;
        EXPECT_EQ(count[p], lattice_points);
    }
}

TEST(Group, InvolutionsHaveTheListedForms) {
    const int p = 7;
    const auto& g = Group::get(GroupSpec::semidirect(p));
    std::set<GroupElement> listed;
    for (int i = 0; i < p; ++i) {
        listed.insert(g.make(2 * i, i, 3));
        listed.insert(g.make(i, 2 * i, 4));
        listed.insert(g.make(i, -i, 5));
    }
    std::set<GroupElement> actual;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.order_of(g.element_at(i)) == 2) actual.insert(g.element_at(i));
    EXPECT_EQ(actual, listed);
}

TEST(Group, PresentationVerification) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    EXPECT_TRUE(verify_presentation(g, semidirect_relator_texts(g.spec().names, 5)));
    EXPECT_FALSE(verify_presentation(g, std::vector<std::string>{"a s"}));
    const auto& h2 = Group::get(GroupSpec::inverting(5));
    EXPECT_TRUE(verify_presentation(h2, std::vector<std::string>{"(C A)^2"}));
    const auto& h1 = Group::get(GroupSpec::central(5));
    EXPECT_FALSE(verify_presentation(h1, std::vector<std::string>{"(C A)^2"}));
}

TEST(Group, SpecMismatchIsRejected) {
    const auto& g5 = Group::get(GroupSpec::semidirect(5));
    const auto& g7 = Group::get(GroupSpec::semidirect(7));
    EXPECT_THROW(g5.multiply(g5.identity(), g7.identity()), SpecMismatch);
    const auto& h1 = Group::get(GroupSpec::central(5));
    EXPECT_THROW(g5.multiply(g5.identity(), h1.identity()), SpecMismatch);
}

TEST(Group, NormalFormSerialization) {
    const auto& g = Group::get(GroupSpec::central(5));
    EXPECT_EQ(g.to_string(g.identity()), "1");
    EXPECT_EQ(g.to_string(g.eval("A R C")), "A R C");
    EXPECT_EQ(g.to_string(g.eval("B^-1 S R C")), "B^4 SR C");
    EXPECT_EQ(g.to_string(g.eval("R^2")), "R2");
    EXPECT_EQ(g.to_string(g.eval("S R^2")), "SR2");
}

TEST(Subgroups, OrdersFromTheQuotientTable) {
    const auto& g = Group::get(GroupSpec::semidirect(5));
    auto sub = [&](std::initializer_list<const char*> words) {
        std::vector<GroupElement> gens;
        for (auto w : words) gens.push_back(g.eval(w));
        return subgroup_generated(g, gens);
    };
    EXPECT_EQ(sub({"a", "b"}).size(), 25u);
    EXPECT_EQ(sub({"s", "r"}).size(), 6u);
    EXPECT_EQ(sub({"a s"}).size(), 10u);
    EXPECT_EQ(sub({"b", "s"}).size(), 10u);
    EXPECT_EQ(sub({"a", "b", "r"}).size(), 75u);
    EXPECT_EQ(sub({"a", "b", "s"}).size(), 50u);
}

TEST(Subgroups, LagrangeCosetsAndConjugacy) {
    const auto& g = Group::get(GroupSpec::semidirect(7));
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 60; ++i) {
        const auto h = subgroup_generated(g, {g.element_at(pick(rng))});
        EXPECT_TRUE(is_subgroup(g, h));
        EXPECT_EQ(g.order() % h.size(), 0u);
        EXPECT_EQ(right_cosets(g, h).size(), g.order() / h.size());
        const auto x = g.element_at(pick(rng));
        const auto k = conjugate_subgroup(g, h, x);
        EXPECT_TRUE(is_subgroup(g, k));
        EXPECT_TRUE(subgroups_conjugate(g, h, k));
    }
    const auto s = subgroup_generated(g, {g.eval("s")});
    const auto sr = subgroup_generated(g, {g.eval("s r")});
    const auto r = subgroup_generated(g, {g.eval("r")});
    EXPECT_TRUE(subgroups_conjugate(g, s, sr));
    EXPECT_FALSE(subgroups_conjugate(g, s, subgroup_generated(g, {g.eval("a")})));
    EXPECT_FALSE(subgroups_conjugate(g, s, r));
}
