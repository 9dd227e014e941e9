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

#include "kkp/curve.hpp"
#include "kkp/quotients.hpp"

using namespace kkp;

namespace {

using Matrix = std::array<std::array<CycloNumber, 3>, 3>;

// Explicit 3x3 matrix of a monomial map: zeta_2p^e_i at (i, perm[i]).
Matrix to_matrix(const MonomialAutomorphism& m) {
    const int p = m.n / 2;
    Matrix out;
    for (auto& r : out) r.fill(CycloNumber(p));
    for (int i = 0; i < 3; ++i) out[i][m.perm[i]] = CycloNumber::zeta_2p(p, m.exps[i]);
    return out;
}

Matrix product(const Matrix& x, const Matrix& y) {
    const int p = x[0][0].prime();
    Matrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out[i][j] = CycloNumber(p);
            for (int k = 0; k < 3; ++k) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

bool proportional(const Matrix& x, const Matrix& y) {
    // find a nonzero entry of y and compare x = c y with c = x_ij / y_ij
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!y[i][j].is_zero()) {
                const auto c = x[i][j] * y[i][j].inverse();
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        if (!(x[a][b] == c * y[a][b])) return false;
                return true;
            }
    return false;
}

}  // namespace

TEST(Curve, CompositionMatchesMatrixProduct) {
    const auto iso = matrix_group_isomorphism(5);
    const auto& els = iso.group.elements();
    for (std::size_t i = 0; i < els.size(); i += 13)
        for (std::size_t j = 0; j < els.size(); j += 11)
            EXPECT_TRUE(proportional(to_matrix(els[i] * els[j]), product(to_matrix(els[i]), to_matrix(els[j]))));
}

TEST(Curve, GeneratorsPreserveThePencil) {
    for (int p : {5, 7, 11, 13}) {
        const auto g = pencil_generators(p);
        const auto c = PencilCurve::symbolic(p);
        EXPECT_TRUE(preserves_pencil(g.a, c));
        EXPECT_TRUE(preserves_pencil(g.b, c));
        EXPECT_TRUE(preserves_pencil(g.r, c));
        EXPECT_TRUE(preserves_pencil(g.s, c));
    }
    const auto fermat = pencil_generators(5, true);
    EXPECT_FALSE(preserves_pencil(fermat.a, PencilCurve::symbolic(5)));
    EXPECT_TRUE(preserves_pencil(fermat.a, PencilCurve::at(5, BigRational(0))));
    EXPECT_TRUE(preserves_pencil(fermat.a, PencilCurve::infinity(5)) == false);
}

TEST(Curve, PreservationIsClosed) {
    const auto iso = matrix_group_isomorphism(5);
    const auto c = PencilCurve::symbolic(5);
    for (const auto& x : iso.group.elements()) {
        ASSERT_TRUE(preserves_pencil(x, c));
        for (const auto& y : iso.group.elements()) ASSERT_TRUE(preserves_pencil(x * y, c));
    }
}

TEST(Curve, MatrixGroupIsIsomorphic) {
    for (int p : {5, 7, 11, 13}) {
        const auto iso = matrix_group_isomorphism(p);
        EXPECT_EQ(iso.group.order(), 6u * p * p);
        const auto& g = *iso.abstract;
        for (const auto& w : {"r a r^-1 a b", "s a s a b", "[a,b]"})
            EXPECT_TRUE(evaluate(parse_word(w),
                                 std::map<std::string, MonomialAutomorphism>{{"a", iso(g.generator("a"))},
                                                                             {"b", iso(g.generator("b"))},
                                                                             {"r", iso(g.generator("r"))},
                                                                             {"s", iso(g.generator("s"))}},
                                 iso.group)
                            .is_identity());
        // homomorphism on random pairs
        for (std::size_t i = 0; i < g.order(); i += 29)
            for (std::size_t j = 0; j < g.order(); j += 31) {
                const auto x = g.element_at(i), y = g.element_at(j);
                EXPECT_EQ(iso(g.multiply(x, y)), iso(x) * iso(y));
            }
    }
}

TEST(Curve, KernelIsTrivial) {
    const auto iso = matrix_group_isomorphism(5);
    std::size_t scalars = 0;
    for (const auto& m : iso.group.elements()) scalars += m.is_identity();
    EXPECT_EQ(scalars, 1u);
}

TEST(Curve, FermatMember) {
    for (int p : {5, 7}) {
        const auto f = fermat_member_check(p);
        EXPECT_EQ(f.order, 24u * p * p);
        EXPECT_TRUE(f.generators_preserve);
        EXPECT_TRUE(f.all_preserve);
        EXPECT_TRUE(f.isomorphic);
        EXPECT_TRUE(f.mixed_part_broken);
    }
}

TEST(Curve, FixedPointsOfA) {
    const auto g = pencil_generators(5);
    const auto pts = fixed_points_on_curve(g.a, PencilCurve::at(5, BigRational(0)));
    EXPECT_EQ(pts.size(), 10u);
    for (const auto& pt : pts) EXPECT_EQ(pt.line, 0);
    EXPECT_EQ(PencilCurve::at(5, BigRational(0)).evaluate({CycloNumber(5, 1), CycloNumber(5), CycloNumber(5)}),
              CycloNumber(5, 1));
    EXPECT_THROW(fixed_points_on_curve(g.a, PencilCurve::at(5, BigRational(-1))), SingularParameter);
    EXPECT_THROW(fixed_points_on_curve(g.a, PencilCurve::at(5, BigRational(2))), SingularParameter);
    EXPECT_THROW(fixed_points_on_curve(g.a, PencilCurve::at(5, BigRational(-2))), SingularParameter);
    EXPECT_THROW(fixed_points_on_curve(g.r, PencilCurve::at(5, BigRational(0))), std::invalid_argument);
}

TEST(Curve, LatticeFixedPointsMatchCosetCounts) {
    for (int p : {5, 7}) {
        const auto& g = Group::get(GroupSpec::semidirect(p));
        for (const BigRational t : {BigRational(0), BigRational(1), BigRational(7, 3)}) {
            const auto geo = lattice_fixed_points(p, t);
            EXPECT_EQ(geo.distinct, 6u * p);
            EXPECT_EQ(geo.stabilizer_orders, (std::set<std::size_t>{static_cast<std::size_t>(p)}));
            // the pencil carries the theta_1 action under a -> a, b -> b
            const auto v = theta_k(g, 1);
            for (const auto& [el, n] : geo.per_element) EXPECT_EQ(fixed_points(v, el), n);
        }
    }
}

TEST(Curve, DiagonalPointStabilizer) {
    for (int p : {5, 7}) {
        const auto st = diagonal_point_stabilizer(p, 3);
        EXPECT_EQ(st.lambda, BigRational(-1));
        EXPECT_TRUE(st.on_curve);
        EXPECT_EQ(st.order, 2u);
        EXPECT_TRUE(st.contains_s);
    }
    EXPECT_THROW(diagonal_point_stabilizer(5, -1), SingularParameter);
    EXPECT_THROW(diagonal_point_stabilizer(5, 5), std::invalid_argument);
}

TEST(Curve, SwapFixesSymmetricPoints) {
    const auto s = pencil_generators(5).s;
    const std::array<CycloNumber, 3> pt{CycloNumber::zeta(5, 2), CycloNumber(5, 7), CycloNumber::zeta(5, 2)};
    EXPECT_EQ(s.apply(pt), pt);
}

TEST(Curve, SingularMembers) {
    for (int p : {5, 7}) {
        const auto r = singular_members_report(p);
        EXPECT_TRUE(r.double_curve_identity);
        EXPECT_EQ(r.minus2_points, static_cast<std::size_t>(p));
        EXPECT_EQ(r.minus1_points, static_cast<std::size_t>(p * p));
        EXPECT_EQ(r.minus1_nodes, static_cast<std::size_t>(p * p));
        EXPECT_EQ(r.infinity_points, 3u);
        // f = F(x,y,1): f_xx = f_yy = 2p^2 and f_xy = -p^2 at (1,1), so the determinant is 3p^4.
        EXPECT_EQ(r.hessian_at_111, CycloNumber(p, BigRational(3 * p * p * p * p)));
    }
    EXPECT_EQ(singular_members_report(5).hessian_at_111, CycloNumber(5, 1875));
}

TEST(Curve, ReportChecksAllPass) {
    const auto j = curve_report(5);
    for (const auto& m : j["members"])
        for (const auto& c : m["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
}
