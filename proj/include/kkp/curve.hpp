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

#ifndef KKP_CURVE_HPP
#define KKP_CURVE_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kkp/automorphism.hpp"
#include "kkp/cyclotomic.hpp"
#include "kkp/group.hpp"
#include "kkp/polynomial.hpp"

namespace kkp {

/// Projective map v -> (zeta_N^e_i v_perm[i])_i with N = 2p; the matrix has zeta_N^e_i at (i, perm[i]).
/// Stored normalized so that e_2 = 0.
struct MonomialAutomorphism {
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> exps{0, 0, 0};
    int n = 2;  // root-of-unity order N

    static MonomialAutomorphism make(std::array<int, 3> perm, std::array<int, 3> exps, int n) {
        MonomialAutomorphism m{perm, exps, n};
        m.normalize();
        return m;
    }

    void normalize() {
        const int shift = exps[2];
        for (auto& e : exps) e = ((e - shift) % n + n) % n;
    }

    bool is_diagonal() const { return perm == std::array<int, 3>{0, 1, 2}; }
    bool is_identity() const { return is_diagonal() && exps == std::array<int, 3>{0, 0, 0}; }

    /// (this * o)(v) = this(o(v)).
    MonomialAutomorphism operator*(const MonomialAutomorphism& o) const {
        if (n != o.n) throw SpecMismatch("monomial maps over different roots of unity");
        MonomialAutomorphism m{{}, {}, n};
        for (int i = 0; i < 3; ++i) {
            m.perm[i] = o.perm[perm[i]];
            m.exps[i] = exps[i] + o.exps[perm[i]];
        }
        m.normalize();
        return m;
    }

    MonomialAutomorphism inverse() const {
        MonomialAutomorphism m{{}, {}, n};
        for (int i = 0; i < 3; ++i) {
            m.perm[perm[i]] = i;
            m.exps[perm[i]] = -exps[i];
        }
        m.normalize();
        return m;
    }

    /// Image of a point with coordinates in Q(zeta_p).
    std::array<CycloNumber, 3> apply(const std::array<CycloNumber, 3>& v) const {
        const int p = n / 2;
        std::array<CycloNumber, 3> out;
        for (int i = 0; i < 3; ++i) out[i] = CycloNumber::zeta_2p(p, exps[i]) * v[perm[i]];
        return out;
    }

    bool operator==(const MonomialAutomorphism&) const = default;
    auto operator<=>(const MonomialAutomorphism&) const = default;
};

/// A finite group of monomial maps given by generators, closed by breadth-first search.
class MonomialGroup {
   public:
    using element_type = MonomialAutomorphism;

    MonomialGroup(int n, std::vector<MonomialAutomorphism> gens) : n_(n) {
        std::set<MonomialAutomorphism> seen{identity()};
        std::vector<MonomialAutomorphism> frontier{identity()};
        while (!frontier.empty()) {
            std::vector<MonomialAutomorphism> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    const auto y = x * g;
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        elements_.assign(seen.begin(), seen.end());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[key(elements_[i])] = i;
    }

    std::size_t order() const { return elements_.size(); }
    MonomialAutomorphism identity() const { return MonomialAutomorphism{{0, 1, 2}, {0, 0, 0}, n_}; }
    MonomialAutomorphism multiply(const MonomialAutomorphism& x, const MonomialAutomorphism& y) const { return x * y; }
    MonomialAutomorphism inverse(const MonomialAutomorphism& x) const { return x.inverse(); }
    std::size_t index_of(const MonomialAutomorphism& x) const { return index_.at(key(x)); }
    MonomialAutomorphism element_at(std::size_t i) const { return elements_.at(i); }
    const std::vector<MonomialAutomorphism>& elements() const { return elements_; }

   private:
    long key(const MonomialAutomorphism& m) const {
        return ((m.perm[0] * 3L + m.perm[1]) * n_ + m.exps[0]) * n_ + m.exps[1];
    }
    int n_;
    std::vector<MonomialAutomorphism> elements_;
    std::map<long, std::size_t> index_;
};

/// Generators of the pencil's group: a = diag(zeta_p,1,1), b = diag(1,zeta_p,1), r: (x,y,z) -> (y,z,x),
/// s: (x,y,z) -> (z,y,x).
struct PencilGenerators {
    MonomialAutomorphism a, b, r, s;
};

inline PencilGenerators pencil_generators(int p, bool fermat = false) {
    const int n = 2 * p;
    const int step = fermat ? 1 : 2;  // zeta_{2p} or zeta_p = zeta_{2p}^2
    return {MonomialAutomorphism::make({0, 1, 2}, {step, 0, 0}, n),
            MonomialAutomorphism::make({0, 1, 2}, {0, step, 0}, n),
            MonomialAutomorphism::make({1, 2, 0}, {0, 0, 0}, n),
            MonomialAutomorphism::make({2, 1, 0}, {0, 0, 0}, n)};
}

/// The member F_t = x^2p + y^2p + z^2p + t (x^p y^p + x^p z^p + y^p z^p) of the pencil.
struct PencilCurve {
    enum class Kind { Symbolic, Finite, Infinite };
    int p = 5;
    Kind kind = Kind::Symbolic;
    CycloNumber t;  // meaningful for Finite

    static PencilCurve symbolic(int p) { return {p, Kind::Symbolic, CycloNumber(p)}; }
    static PencilCurve at(int p, BigRational t) { return {p, Kind::Finite, CycloNumber(p, std::move(t))}; }
    static PencilCurve at(int p, CycloNumber t) { return {p, Kind::Finite, std::move(t)}; }
    static PencilCurve infinity(int p) { return {p, Kind::Infinite, CycloNumber(p)}; }

    Poly3 fermat_part() const {
        const int d = 2 * p;
        return Poly3::monomial({d, 0, 0}) + Poly3::monomial({0, d, 0}) + Poly3::monomial({0, 0, d});
    }
    Poly3 mixed_part() const {
        return Poly3::monomial({p, p, 0}) + Poly3::monomial({p, 0, p}) + Poly3::monomial({0, p, p});
    }

    bool has_rational_t() const { return kind == Kind::Finite && t.is_rational(); }

    /// The defining polynomial; needs a rational t (or the member at infinity).
    Poly3 polynomial() const {
        if (kind == Kind::Infinite) return mixed_part();
        if (!has_rational_t()) throw std::domain_error("polynomial over Q needs a rational parameter");
        return fermat_part() + mixed_part() * t.rational_value();
    }

    /// F evaluated at a point over Q(zeta_p), with any Finite t.
    CycloNumber evaluate(const std::array<CycloNumber, 3>& pt) const { return combine(fermat_part(), mixed_part(), pt); }

    std::array<CycloNumber, 3> gradient(const std::array<CycloNumber, 3>& pt) const {
        std::array<CycloNumber, 3> g;
        for (int i = 0; i < 3; ++i) g[i] = combine(fermat_part().derivative(i), mixed_part().derivative(i), pt);
        return g;
    }

    /// Determinant of the Hessian of f(x,y) = F(x,y,1) at an affine point (z = 1).
    CycloNumber affine_hessian(const std::array<CycloNumber, 3>& pt) const {
        auto second = [&](int i, int j) {
            return combine(fermat_part().derivative(i).derivative(j), mixed_part().derivative(i).derivative(j), pt);
        };
        return second(0, 0) * second(1, 1) - second(0, 1) * second(0, 1);
    }

   private:
    CycloNumber combine(const Poly3& f0, const Poly3& f1, const std::array<CycloNumber, 3>& pt) const {
        if (kind == Kind::Infinite) return f1.evaluate(pt);
        if (kind == Kind::Symbolic) throw std::domain_error("evaluation needs a value of t");
        return f0.evaluate(pt) + t * f1.evaluate(pt);
    }
};

/// If f o A = zeta_N^c f, returns c.
inline std::optional<int> scalar_under(const Poly3& f, const MonomialAutomorphism& m) {
    std::optional<int> common;
    for (const auto& [e, coef] : f.terms()) {
        Exponent3 image{0, 0, 0};
        long k = 0;
        for (int i = 0; i < 3; ++i) {
            image[m.perm[i]] += e[i];
            k += static_cast<long>(m.exps[i]) * e[i];
        }
        const int c = static_cast<int>(k % m.n);
        auto it = f.terms().find(image);
        if (it == f.terms().end() || it->second != coef) return std::nullopt;
        if (common && *common != c) return std::nullopt;
        common = c;
    }
    return common.value_or(0);
}

/// Whether the map carries the member to itself (up to a scalar). With symbolic t both the Fermat part and the
/// mixed part must be preserved with the same scalar.
inline bool preserves_pencil(const MonomialAutomorphism& m, const PencilCurve& c) {
    const auto f0 = scalar_under(c.fermat_part(), m);
    const auto f1 = scalar_under(c.mixed_part(), m);
    switch (c.kind) {
        case PencilCurve::Kind::Infinite: return f1.has_value();
        case PencilCurve::Kind::Finite:
            if (c.t.is_zero()) return f0.has_value();
            [[fallthrough]];
        case PencilCurve::Kind::Symbolic: return f0 && f1 && *f0 == *f1;
    }
    return false;
}

/// The monomial group generated by the four matrices together with the verified isomorphism from the abstract
/// group (table: abstract element index -> matrix element index).
struct MatrixIsomorphism {
    MonomialGroup group;
    const Group* abstract = nullptr;
    std::vector<std::uint32_t> table;

    MonomialAutomorphism operator()(const GroupElement& g) const {
        return group.element_at(table.at(abstract->index_of(g)));
    }
    std::optional<GroupElement> preimage(const MonomialAutomorphism& m) const {
        const auto j = group.index_of(m);
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table[i] == j) return abstract->element_at(i);
        return std::nullopt;
    }
};

namespace details {

inline MatrixIsomorphism verified_isomorphism(const Group& abstract, const PencilGenerators& gens) {
    MatrixIsomorphism iso{MonomialGroup(gens.a.n, {gens.a, gens.b, gens.r, gens.s}), &abstract, {}};
    const auto& n = abstract.spec().names;
    std::map<std::string, MonomialAutomorphism> bind{{n.a, gens.a}, {n.b, gens.b}, {n.r, gens.r}, {n.s, gens.s}};
    for (const auto& w : abstract.standard_relators())
        if (!evaluate(w, bind, iso.group).is_identity())
            throw RelatorFailure("relator " + serialize(w) + " fails for the matrices");
    if (iso.group.order() != abstract.order())
        throw RelatorFailure("matrix group has order " + std::to_string(iso.group.order()) + ", expected " +
                             std::to_string(abstract.order()));
    const int m = abstract.modulus();
    std::vector<MonomialAutomorphism> apow(m), bpow(m), dih(6);
    apow[0] = bpow[0] = iso.group.identity();
    for (int i = 1; i < m; ++i) {
        apow[i] = apow[i - 1] * gens.a;
        bpow[i] = bpow[i - 1] * gens.b;
    }
    for (int d = 0; d < 6; ++d) {
        auto x = iso.group.identity();
        if (d >= 3) x = gens.s;
        for (int j = 0; j < d % 3; ++j) x = x * gens.r;
        dih[d] = x;
    }
    std::vector<bool> hit(iso.group.order(), false);
    iso.table.resize(abstract.order());
    for (std::size_t i = 0; i < abstract.order(); ++i) {
        const auto g = abstract.element_at(i);
        const auto j = iso.group.index_of(apow[g.x] * bpow[g.y] * dih[g.d]);
        if (hit[j]) throw RelatorFailure("the generator matching is not injective");
        hit[j] = true;
        iso.table[i] = static_cast<std::uint32_t>(j);
    }
    return iso;
}

}  // namespace details

/// a, b, r, s -> the four matrices; relators and bijectivity are checked, RelatorFailure otherwise.
inline MatrixIsomorphism matrix_group_isomorphism(int p) {
    return details::verified_isomorphism(Group::get(GroupSpec::semidirect(p)), pencil_generators(p));
}

struct FermatMemberCheck {
    int p = 0;
    std::size_t order = 0;
    bool generators_preserve = false;
    bool all_preserve = false;
    bool isomorphic = false;  // relators of Z_{2p}^2 x| D_3 hold and the matching is bijective
    bool mixed_part_broken = false;  // some element moves the mixed part, so only t = 0 carries the big group
};

/// At t = 0, diag(zeta_2p,1,1), diag(1,zeta_2p,1), r, s generate a group of order 24p^2 isomorphic to
/// Z_{2p}^2 x| D_3.
inline FermatMemberCheck fermat_member_check(int p) {
    FermatMemberCheck out;
    out.p = p;
    const auto gens = pencil_generators(p, true);
    const auto curve = PencilCurve::at(p, BigRational(0));
    out.generators_preserve = preserves_pencil(gens.a, curve) && preserves_pencil(gens.b, curve) &&
                              preserves_pencil(gens.r, curve) && preserves_pencil(gens.s, curve);
    const auto iso = details::verified_isomorphism(Group::get(GroupSpec::fermat(p)), gens);
    out.isomorphic = true;
    out.order = iso.group.order();
    out.all_preserve = true;
    for (const auto& m : iso.group.elements()) {
        out.all_preserve = out.all_preserve && preserves_pencil(m, curve);
        if (!preserves_pencil(m, PencilCurve::symbolic(p))) out.mixed_part_broken = true;
    }
    return out;
}

/// A point of the curve fixed by a diagonal map: either a coordinate point, or the r-th distinct nonzero root
/// w of F restricted to the coordinate line {x_line = 0}.
struct CurvePoint {
    int line = -1;  // -1 for a coordinate point
    int index = 0;  // coordinate for a coordinate point, root number otherwise
    auto operator<=>(const CurvePoint&) const = default;
};

namespace details {

inline void require_smooth_parameter(const PencilCurve& c) {
    if (!c.has_rational_t()) throw std::invalid_argument("fixed points need a rational parameter t");
    const auto t = c.t.rational_value();
    if (t == -1 || t == 2 || t == -2) throw SingularParameter("t = " + t.str() + " gives a singular member");
}

}  // namespace details

/// Fixed points of a nontrivial diagonal map on a member with rational t. They lie in the eigenspaces: coordinate
/// points (on the curve iff the x_k^2p coefficient vanishes) and coordinate lines, where the fixed points are the
/// distinct roots of F restricted to the line, counted exactly with a gcd over Q.
inline std::vector<CurvePoint> fixed_points_on_curve(const MonomialAutomorphism& m, const PencilCurve& c) {
    details::require_smooth_parameter(c);
    if (!m.is_diagonal()) throw std::invalid_argument("expected a diagonal map");
    if (m.is_identity()) throw IdentityElement("the identity fixes every point");
    const Poly3 f = c.polynomial();
    auto coef = [&](const Exponent3& e) {
        auto it = f.terms().find(e);
        return it == f.terms().end() ? BigRational(0) : it->second;
    };
    const int d = 2 * c.p;
    std::set<CurvePoint> pts;
    auto coordinate_point = [&](int k) {
        Exponent3 e{0, 0, 0};
        e[k] = d;
        if (coef(e) == 0) pts.insert({-1, k});
    };
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        if (m.exps[i] == m.exps[j]) {
            // the line {x_k = 0}; w = x_i / x_j
            std::vector<BigRational> w(static_cast<std::size_t>(d + 1));
            for (const auto& [e, cf] : f.terms())
                if (e[k] == 0) w[static_cast<std::size_t>(e[i])] += cf;
            std::size_t low = 0;
            while (low < w.size() && w[low] == 0) ++low;
            if (low == w.size()) throw SingularParameter("the curve contains a coordinate line");
            const UPoly g(std::vector<BigRational>(w.begin() + static_cast<long>(low), w.end()));
            for (int r = 0; r < g.distinct_roots(); ++r) pts.insert({k, r});
            if (low > 0) coordinate_point(j);
            if (w.back() == 0) coordinate_point(i);
        } else if (m.exps[k] != m.exps[i] && m.exps[k] != m.exps[j]) {
            coordinate_point(k);
        }
    }
    return {pts.begin(), pts.end()};
}

struct LatticeFixedPoints {
    std::size_t distinct = 0;
    std::set<std::size_t> stabilizer_orders;        // orders of the stabilizers in <a,b>
    std::map<GroupElement, std::size_t> per_element;  // abstract element -> number of fixed points
};

/// Fixed points of every nontrivial element of <a,b> on the member with rational parameter t.
inline LatticeFixedPoints lattice_fixed_points(int p, const BigRational& t) {
    const auto iso = matrix_group_isomorphism(p);
    const auto curve = PencilCurve::at(p, t);
    const auto& g = *iso.abstract;
    LatticeFixedPoints out;
    std::map<CurvePoint, std::size_t> stab;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            if (!x && !y) continue;
            const auto el = g.make(x, y, 0);
            const auto pts = fixed_points_on_curve(iso(el), curve);
            out.per_element[el] = pts.size();
            for (const auto& pt : pts) ++stab[pt];
        }
    out.distinct = stab.size();
    for (const auto& [pt, count] : stab) out.stabilizer_orders.insert(count + 1);
    return out;
}

struct DiagonalPointStabilizer {
    BigRational lambda;
    bool on_curve = false;
    std::size_t order = 0;
    bool contains_s = false;
};

namespace details {

inline std::optional<boost::multiprecision::cpp_int> integer_root(const boost::multiprecision::cpp_int& v, int k) {
    using boost::multiprecision::cpp_int;
    if (v < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = integer_root(-v, k);
        if (!r) return std::nullopt;
        return cpp_int(-*r);
    }
    cpp_int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) < v) hi *= 2;
    while (lo < hi) {
        cpp_int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(k)) < v) lo = mid + 1;
        else hi = mid;
    }
    if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == v) return lo;
    return std::nullopt;
}

inline std::optional<BigRational> rational_root(const BigRational& v, int k) {
    auto n = integer_root(boost::multiprecision::numerator(v), k);
    auto d = integer_root(boost::multiprecision::denominator(v), k);
    if (!n || !d) return std::nullopt;
    return BigRational(*n, *d);
}

}  // namespace details

/// Stabilizer of a point [1 : lambda : 1] of the member t, where lambda^p = -t +- sqrt(t^2 - t - 2). The parameter
/// must make lambda rational (e.g. t = 3 gives lambda = -1); the stabilizer is found by brute force over the
/// whole matrix group.
inline DiagonalPointStabilizer diagonal_point_stabilizer(int p, const BigRational& t) {
    if (t == -1 || t == 2 || t == -2) throw SingularParameter("t = " + t.str() + " gives a singular member");
    const BigRational disc = t * t - t - 2;
    auto root = details::rational_root(disc, 2);
    if (!root) throw std::invalid_argument("t^2 - t - 2 must be a rational square");
    std::optional<BigRational> lambda;
    for (const BigRational& mu : std::array<BigRational, 2>{BigRational(-t + *root), BigRational(-t - *root)})
        if (!lambda) lambda = details::rational_root(mu, p);
    if (!lambda) throw std::invalid_argument("no rational p-th root for this t");
    DiagonalPointStabilizer out;
    out.lambda = *lambda;
    const std::array<CycloNumber, 3> pt{CycloNumber(p, 1), CycloNumber(p, *lambda), CycloNumber(p, 1)};
    out.on_curve = PencilCurve::at(p, t).evaluate(pt).is_zero();
    const auto iso = matrix_group_isomorphism(p);
    const auto s = pencil_generators(p).s;
    for (const auto& m : iso.group.elements()) {
        const auto img = m.apply(pt);
        const auto scale = img[0];  // pt[0] = 1
        bool fixed = true;
        for (int i = 0; i < 3 && fixed; ++i) fixed = img[i] == scale * pt[i];
        if (!fixed) continue;
        ++out.order;
        if (m == s) out.contains_s = true;
    }
    return out;
}

/// Exact checks on the singular members t = 2, -2, -1 and infinity.
struct SingularMembersReport {
    int p = 0;
    bool double_curve_identity = false;  // F_2 = (x^p + y^p + z^p)^2
    std::size_t minus2_points = 0;       // [1 : zeta^i : 0] with F = 0 and grad F = 0
    std::size_t minus1_points = 0;       // [zeta^i : zeta^j : 1] with F = 0 and grad F = 0
    std::size_t minus1_nodes = 0;        // of those, nonzero affine Hessian determinant
    CycloNumber hessian_at_111;          // Hessian determinant at [1:1:1], t = -1
    std::size_t infinity_points = 0;     // coordinate points singular on the member at infinity
};

inline SingularMembersReport singular_members_report(int p) {
    SingularMembersReport out;
    out.p = p;
    const Poly3 lin = Poly3::monomial({p, 0, 0}) + Poly3::monomial({0, p, 0}) + Poly3::monomial({0, 0, p});
    out.double_curve_identity = PencilCurve::at(p, BigRational(2)).polynomial() == lin * lin;

    auto singular = [](const PencilCurve& c, const std::array<CycloNumber, 3>& pt) {
        if (!c.evaluate(pt).is_zero()) return false;
        for (const auto& g : c.gradient(pt))
            if (!g.is_zero()) return false;
        return true;
    };
    const auto m2 = PencilCurve::at(p, BigRational(-2));
    for (int i = 0; i < p; ++i)
        if (singular(m2, {CycloNumber(p, 1), CycloNumber::zeta(p, i), CycloNumber(p, 0)})) ++out.minus2_points;

    const auto m1 = PencilCurve::at(p, BigRational(-1));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const std::array<CycloNumber, 3> pt{CycloNumber::zeta(p, i), CycloNumber::zeta(p, j), CycloNumber(p, 1)};
            if (!singular(m1, pt)) continue;
            ++out.minus1_points;
            if (!m1.affine_hessian(pt).is_zero()) ++out.minus1_nodes;
        }
    out.hessian_at_111 = m1.affine_hessian({CycloNumber(p, 1), CycloNumber(p, 1), CycloNumber(p, 1)});

    const auto inf = PencilCurve::infinity(p);
    for (int k = 0; k < 3; ++k) {
        std::array<CycloNumber, 3> pt{CycloNumber(p, 0), CycloNumber(p, 0), CycloNumber(p, 0)};
        pt[k] = CycloNumber(p, 1);
        if (singular(inf, pt)) ++out.infinity_points;
    }
    return out;
}

/// Curve report: one record per member checked.
inline nlohmann::json curve_report(int p) {
    using nlohmann::json;
    auto check = [](const std::string& name, bool ok, json detail = nullptr) {
        json j{{"name", name}, {"passed", ok}};
        if (!detail.is_null()) j["detail"] = std::move(detail);
        return j;
    };
    json members = json::array();

    const auto gens = pencil_generators(p);
    const auto sym = PencilCurve::symbolic(p);
    const auto iso = matrix_group_isomorphism(p);
    bool closed = true;
    for (const auto& m : iso.group.elements()) closed = closed && preserves_pencil(m, sym);
    members.push_back({{"t", "symbolic"},
                       {"member", "pencil"},
                       {"checks",
                        {check("a preserves F_t", preserves_pencil(gens.a, sym)),
                         check("b preserves F_t", preserves_pencil(gens.b, sym)),
                         check("r preserves F_t", preserves_pencil(gens.r, sym)),
                         check("s preserves F_t", preserves_pencil(gens.s, sym)),
                         check("matrix group isomorphic to Z_p^2 x| D_3", iso.group.order() == 6u * p * p,
                               iso.group.order()),
                         check("every group element preserves F_t", closed)}}});

    const auto fermat = fermat_member_check(p);
    const auto fixed0 = lattice_fixed_points(p, 0);
    members.push_back(
        {{"t", "0"},
         {"member", "fermat"},
         {"checks",
          {check("monomial group of order 24p^2", fermat.order == 24u * p * p, fermat.order),
           check("isomorphic to Z_2p^2 x| D_3", fermat.isomorphic),
           check("every element preserves F_0", fermat.all_preserve),
           check("points with nontrivial <a,b>-stabilizer number 6p", fixed0.distinct == 6u * p, fixed0.distinct)}}});

    const auto sing = singular_members_report(p);
    members.push_back({{"t", "2"},
                       {"member", "double-curve"},
                       {"checks", {check("F_2 = (x^p + y^p + z^p)^2", sing.double_curve_identity)}}});
    members.push_back({{"t", "-2"},
                       {"member", "singular"},
                       {"checks", {check("[1:zeta^i:0] singular for all i", sing.minus2_points == std::size_t(p),
                                         sing.minus2_points)}}});
    members.push_back({{"t", "-1"},
                       {"member", "nodal"},
                       {"checks",
                        {check("[zeta^i:zeta^j:1] singular for all i, j",
                               sing.minus1_points == std::size_t(p) * p, sing.minus1_points),
                         check("each of them is a node", sing.minus1_nodes == std::size_t(p) * p, sing.minus1_nodes),
                         check("Hessian determinant at [1:1:1]", !sing.hessian_at_111.is_zero(),
                               sing.hessian_at_111.to_string())}}});
    members.push_back({{"t", "infinity"},
                       {"member", "singular"},
                       {"checks", {check("coordinate points singular", sing.infinity_points == 3,
                                         sing.infinity_points)}}});
    const auto stab = diagonal_point_stabilizer(p, 3);
    members.push_back({{"t", "3"},
                       {"member", "smooth (not certified)"},
                       {"checks",
                        {check("[1:" + stab.lambda.str() + ":1] lies on the curve", stab.on_curve),
                         check("its stabilizer has order 2 and contains s", stab.order == 2 && stab.contains_s,
                               stab.order)}}});
    return json{{"p", p}, {"members", members}};
}

}  // namespace kkp

#endif  // KKP_CURVE_HPP
