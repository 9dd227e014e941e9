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

#ifndef KKP_ACTIONS_HPP
#define KKP_ACTIONS_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kkp/automorphism.hpp"
#include "kkp/finite_group.hpp"
#include "kkp/group.hpp"
#include "kkp/signature.hpp"

namespace kkp {

/// Images (g1,...,gr) of the elliptic generators of a genus-0 Fuchsian group; periods in tuple order.
template <FiniteGroup G>
struct BasicGeneratingVector {
    const G* group = nullptr;
    std::vector<int> periods;
    std::vector<typename G::element_type> elements;

    Signature signature() const { return Signature(0, periods); }
    std::size_t size() const { return elements.size(); }
    bool operator==(const BasicGeneratingVector& o) const { return group == o.group && elements == o.elements; }
};

using GeneratingVector = BasicGeneratingVector<Group>;

/// Why `v` fails to be a surface-kernel generating vector, or nullopt when it is one.
template <FiniteGroup G>
std::optional<std::string> vector_defect(const BasicGeneratingVector<G>& v) {
    const G& g = *v.group;
    if (v.periods.size() != v.elements.size()) return "period count differs from element count";
    auto prod = g.identity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int o = element_order(g, v.elements[i]);
        if (o != v.periods[i])
            return "entry " + std::to_string(i + 1) + " has order " + std::to_string(o) + ", expected " +
                   std::to_string(v.periods[i]);
        prod = g.multiply(prod, v.elements[i]);
    }
    if (!(prod == g.identity())) return "product of entries is not the identity";
    if (!generates_group(g, v.elements)) return "entries do not generate the group";
    return std::nullopt;
}

template <FiniteGroup G>
bool is_generating_vector(const BasicGeneratingVector<G>& v) {
    return !vector_defect(v).has_value();
}

/// Wraps a tuple, reading periods off the element orders; throws NotAnEpimorphism when invalid.
template <FiniteGroup G>
BasicGeneratingVector<G> make_vector(const G& group, std::vector<typename G::element_type> elements) {
    BasicGeneratingVector<G> v{&group, {}, std::move(elements)};
    for (const auto& x : v.elements) v.periods.push_back(element_order(group, x));
    if (auto why = vector_defect(v)) throw NotAnEpimorphism(*why);
    return v;
}

/// "(0; 2,2,3,5) s | sr | a r2 | a b": sorted signature, then entries in tuple order.
inline std::string to_string(const GeneratingVector& v) {
    std::string out = to_string(v.signature()) + " ";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " | " : "") + v.group->to_string(v.elements[i]);
    return out;
}

/// (..., g_i, g_{i+1}, ...) -> (..., g_i g_{i+1} g_i^-1, g_i, ...), positions counted from 1.
template <FiniteGroup G>
BasicGeneratingVector<G> braid_move(const BasicGeneratingVector<G>& v, std::size_t i) {
    if (i < 1 || i >= v.size()) throw InvalidIndex("braid position " + std::to_string(i) + " out of range");
    const G& g = *v.group;
    auto w = v;
    const auto x = v.elements[i - 1], y = v.elements[i];
    w.elements[i - 1] = g.multiply(g.multiply(x, y), g.inverse(x));
    w.elements[i] = x;
    std::swap(w.periods[i - 1], w.periods[i]);
    assert(!vector_defect(v) == !vector_defect(w));
    return w;
}

/// Inverse of braid_move at the same position.
template <FiniteGroup G>
BasicGeneratingVector<G> inverse_braid_move(const BasicGeneratingVector<G>& v, std::size_t i) {
    if (i < 1 || i >= v.size()) throw InvalidIndex("braid position " + std::to_string(i) + " out of range");
    const G& g = *v.group;
    auto w = v;
    const auto x = v.elements[i - 1], y = v.elements[i];
    w.elements[i - 1] = y;
    w.elements[i] = g.multiply(g.multiply(g.inverse(y), x), y);
    std::swap(w.periods[i - 1], w.periods[i]);
    return w;
}

inline GeneratingVector apply(const Automorphism& f, const GeneratingVector& v) {
    if (f.source != v.group) throw SpecMismatch("automorphism of a different group");
    auto w = v;
    w.group = f.target;
    for (auto& x : w.elements) x = f(x);
    return w;
}

/// Every surface-kernel generating vector for a genus-0 signature, in lexicographic order. Entry i ranges over
/// the elements of order m_i; the last entry is forced by the product relation.
template <FiniteGroup G>
std::vector<BasicGeneratingVector<G>> enumerate_skes(const G& group, const Signature& sig) {
    if (sig.genus != 0) throw UnsupportedSignature("only genus-0 quotients are supported: " + to_string(sig));
    require_hyperbolic(sig);
    using E = typename G::element_type;
    const auto buckets = elements_by_order(group);
    const std::size_t r = sig.periods.size();
    std::vector<BasicGeneratingVector<G>> out;
    auto bucket = [&](int m) -> const std::vector<std::uint32_t>& {
        static const std::vector<std::uint32_t> none;
        return static_cast<std::size_t>(m) < buckets.size() ? buckets[m] : none;
    };
    std::vector<E> current(r);
    auto rec = [&](auto&& self, std::size_t pos, const E& prefix) -> void {
        if (pos + 1 == r) {
            const E last = group.inverse(prefix);
            if (element_order(group, last) != sig.periods.back()) return;
            current[pos] = last;
            if (generates_group(group, current)) out.push_back({&group, sig.periods, current});
            return;
        }
        for (auto idx : bucket(sig.periods[pos])) {
            current[pos] = group.element_at(idx);
            self(self, pos + 1, group.multiply(prefix, current[pos]));
        }
    };
    if (r > 0) rec(rec, 0, group.identity());
    return out;
}

namespace details {

inline std::string pw(const std::string& name, long e) {
    if (e == 0) return "";
    return e == 1 ? name + " " : name + "^" + std::to_string(e) + " ";
}

inline GeneratingVector named_vector(const Group& g, const std::vector<std::string>& words) {
    std::vector<GroupElement> els;
    for (const auto& w : words) els.push_back(g.eval(w));
    return make_vector(g, std::move(els));
}

inline int prime_of(const Group& g) {
    if (g.spec().modulus < 5) throw SpecMismatch("expected a modulus p >= 5");
    return g.spec().modulus;
}

}  // namespace details

/// theta_k = (s, sr, a^k b^(k-1) r^2, a b^k) on (0;2,2,3,p). Accepts k in 0..p-1 (k = 0 and p-1 are the
/// boundary forms the reduction passes through).
inline GeneratingVector theta_k(const Group& g, int k) {
    const int p = details::prime_of(g);
    if (g.spec().extended()) throw SpecMismatch("theta_k lives in Z_p^2 x| D_3");
    if (k < 0 || k > p - 1) throw InvalidIndex("theta_k needs 0 <= k <= p-1, got " + std::to_string(k));
    const auto& n = g.spec().names;
    using details::pw;
    return details::named_vector(g, {n.s, n.s + " " + n.r, pw(n.a, k) + pw(n.b, k - 1) + n.r + "^2",
                                     n.a + " " + pw(n.b, k)});
}

/// phi_n = (a^(1-n) b r^2, b s r, b^n s r^2) on (0;3,2p,2p), 1 <= n <= p-1.
inline GeneratingVector phi_n(const Group& g, int k) {
    const int p = details::prime_of(g);
    if (g.spec().extended()) throw SpecMismatch("phi_n lives in Z_p^2 x| D_3");
    if (k < 1 || k > p - 1) throw InvalidIndex("phi_n needs 1 <= n <= p-1, got " + std::to_string(k));
    const auto& n = g.spec().names;
    using details::pw;
    return details::named_vector(g, {pw(n.a, 1 - k) + n.b + " " + n.r + "^2", n.b + " " + n.s + " " + n.r,
                                     pw(n.b, k) + n.s + " " + n.r + "^2"});
}

/// (S, A R C, B^-1 S R C) on (0;2,6,2p) in the central extension.
inline GeneratingVector Theta1(const Group& g) {
    if (g.spec().extension != Extension::Central) throw SpecMismatch("Theta1 lives in the central extension");
    const auto& n = g.spec().names;
    return details::named_vector(g, {n.s, n.a + " " + n.r + " " + n.c,
                                     n.b + "^-1 " + n.s + " " + n.r + " " + n.c});
}

/// (S, A R C, B S R C) on (0;2,6,2p) in the inverting extension.
inline GeneratingVector Theta2(const Group& g) {
    if (g.spec().extension != Extension::Inverting) throw SpecMismatch("Theta2 lives in the inverting extension");
    const auto& n = g.spec().names;
    return details::named_vector(g, {n.s, n.a + " " + n.r + " " + n.c, n.b + " " + n.s + " " + n.r + " " + n.c});
}

/// (S R^2, A R^2, A B S R) on (0;2,3,4p) in Z_{2p}^2 x| D_3.
inline GeneratingVector fermat_vector(const Group& g) {
    if (g.spec().extended() || g.spec().modulus % 2) throw SpecMismatch("expected Z_{2p}^2 x| D_3");
    const auto& n = g.spec().names;
    return details::named_vector(g, {n.s + " " + n.r + "^2", n.a + " " + n.r + "^2",
                                     n.a + " " + n.b + " " + n.s + " " + n.r});
}

namespace details {

/// Multiplication and inversion tables on element indices.
struct IndexTables {
    std::size_t n = 0;
    std::vector<std::uint32_t> mul;
    std::vector<std::uint32_t> inv;

    std::uint32_t times(std::uint32_t x, std::uint32_t y) const { return mul[static_cast<std::size_t>(x) * n + y]; }
};

template <FiniteGroup G>
IndexTables index_tables(const G& group) {
    IndexTables t;
    t.n = group.order();
    t.mul.resize(t.n * t.n);
    t.inv.resize(t.n);
    std::vector<typename G::element_type> els;
    els.reserve(t.n);
    for (std::size_t i = 0; i < t.n; ++i) els.push_back(group.element_at(i));
    for (std::size_t i = 0; i < t.n; ++i) {
        t.inv[i] = static_cast<std::uint32_t>(group.index_of(group.inverse(els[i])));
        for (std::size_t j = 0; j < t.n; ++j)
            t.mul[i * t.n + j] = static_cast<std::uint32_t>(group.index_of(group.multiply(els[i], els[j])));
    }
    return t;
}

/// Packs an index tuple into 64 bits.
struct Packer {
    int bits = 1;
    std::size_t r = 0;

    Packer(std::size_t order, std::size_t len) : r(len) {
        while ((std::size_t{1} << bits) < order) ++bits;
        if (static_cast<std::size_t>(bits) * r > 64) throw UnsupportedSignature("vector too long to hash");
    }
    std::uint64_t pack(const std::vector<std::uint32_t>& v) const {
        std::uint64_t k = 0;
        for (auto x : v) k = (k << bits) | x;
        return k;
    }
    void unpack(std::uint64_t k, std::vector<std::uint32_t>& v) const {
        v.resize(r);
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t i = r; i-- > 0;) {
            v[i] = static_cast<std::uint32_t>(k & mask);
            k >>= bits;
        }
    }
};

}  // namespace details

/// An orbit of generating vectors under braid moves and automorphisms.
struct Stratum {
    GeneratingVector representative;  // lexicographic minimum among the input vectors of the orbit
    std::size_t orbit_size = 0;       // number of input vectors in the orbit
    std::vector<std::string> labels;  // named vectors lying in the orbit, e.g. "theta_1"
};

/// Partition of a set of vectors into topological-equivalence classes. Remembers every visited tuple (in any
/// period order) so that later lookups are constant time.
class Classification {
   public:
    const Group* group = nullptr;
    std::vector<Stratum> strata;

    /// Index of the stratum containing `v`, if `v` is equivalent to a classified vector.
    std::optional<std::size_t> stratum_of(const GeneratingVector& v) const {
        if (v.group != group || v.size() != packer_.r) return std::nullopt;
        auto it = visited_.find(key(v));
        if (it == visited_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t total() const {
        return std::accumulate(strata.begin(), strata.end(), std::size_t{0},
                               [](std::size_t s, const Stratum& st) { return s + st.orbit_size; });
    }

    /// Attaches `name` to the stratum of `v`. Returns false when `v` is not classified.
    bool label(const GeneratingVector& v, const std::string& name) {
        auto s = stratum_of(v);
        if (!s) return false;
        auto& labels = strata[*s].labels;
        if (std::find(labels.begin(), labels.end(), name) == labels.end()) labels.push_back(name);
        return true;
    }

   private:
    friend Classification classify(const std::vector<GeneratingVector>&, const std::vector<Automorphism>&);

    std::uint64_t key(const GeneratingVector& v) const {
        std::vector<std::uint32_t> idx;
        for (const auto& x : v.elements) idx.push_back(static_cast<std::uint32_t>(group->index_of(x)));
        return packer_.pack(idx);
    }

    details::Packer packer_{2, 1};
    std::unordered_map<std::uint64_t, std::uint32_t> visited_;
};

/// Orbits under all braid moves and the given automorphisms (a generating set of Aut suffices), found by
/// breadth-first closure. The orbit of a vector passes through other period orders; only input vectors count
/// towards orbit sizes and representatives.
inline Classification classify(const std::vector<GeneratingVector>& vectors, const std::vector<Automorphism>& autos) {
    Classification out;
    if (vectors.empty()) return out;
    const Group& g = *vectors.front().group;
    out.group = &g;
    const std::size_t r = vectors.front().size();
    out.packer_ = details::Packer(g.order(), r);
    const auto tables = details::index_tables(g);
    for (const auto& f : autos)
        if (f.source != &g || f.target != &g) throw SpecMismatch("automorphism of a different group");

    std::unordered_set<std::uint64_t> inputs;
    std::vector<std::uint64_t> order;
    for (const auto& v : vectors) {
        if (v.group != &g || v.size() != r) throw SpecMismatch("vectors from different groups or signatures");
        const auto k = out.key(v);
        if (inputs.insert(k).second) order.push_back(k);
    }
    std::sort(order.begin(), order.end());  // packed keys sort like index tuples

    std::vector<std::uint32_t> cur, next;
    for (auto start : order) {
        if (out.visited_.count(start)) continue;
        const auto id = static_cast<std::uint32_t>(out.strata.size());
        std::uint64_t best = start;
        std::size_t members = 0;
        std::deque<std::uint64_t> queue{start};
        out.visited_.emplace(start, id);
        auto visit = [&](const std::vector<std::uint32_t>& t) {
            const auto k = out.packer_.pack(t);
            if (out.visited_.emplace(k, id).second) queue.push_back(k);
        };
        while (!queue.empty()) {
            const auto k = queue.front();
            queue.pop_front();
            if (inputs.count(k)) {
                ++members;
                best = std::min(best, k);
            }
            out.packer_.unpack(k, cur);
            for (std::size_t i = 0; i + 1 < r; ++i) {
                next = cur;
                next[i] = tables.times(tables.times(cur[i], cur[i + 1]), tables.inv[cur[i]]);
                next[i + 1] = cur[i];
                visit(next);
            }
            for (const auto& f : autos) {
                next = cur;
                for (auto& x : next) x = f.table[x];
                visit(next);
            }
        }
        Stratum st;
        out.packer_.unpack(best, cur);
        std::vector<GroupElement> els;
        for (auto x : cur) els.push_back(g.element_at(x));
        st.representative = make_vector(g, std::move(els));
        st.orbit_size = members;
        out.strata.push_back(std::move(st));
    }
    return out;
}

/// True iff v and w are related by braid moves and the given automorphisms.
inline bool equivalent(const GeneratingVector& v, const GeneratingVector& w, const std::vector<Automorphism>& autos) {
    if (v.group != w.group || v.size() != w.size()) return false;
    if (v.signature() != w.signature()) return false;
    return classify({v}, autos).stratum_of(w).has_value();
}

/// Full classification of the actions of `g` with genus-0 signature `sig` under braid moves and Aut(g).
inline Classification classify_actions(const Group& g, const Signature& sig) {
    return classify(enumerate_skes(g, sig), automorphism_generators(g));
}

/// Labels strata of (0;2,2,3,p) with the theta_k (k = 0..p-1) they contain.
inline void label_theta_strata(Classification& c) {
    const int p = c.group->modulus();
    for (int k = 0; k <= p - 1; ++k) {
        const auto v = theta_k(*c.group, k);
        c.label(v, "theta_" + std::to_string(k));
    }
}

/// Labels strata of (0;3,2p,2p) with the phi_n they contain.
inline void label_phi_strata(Classification& c) {
    const int p = c.group->modulus();
    for (int n = 1; n <= p - 1; ++n) c.label(phi_n(*c.group, n), "phi_" + std::to_string(n));
}

struct PairingOrbits {
    std::vector<std::vector<int>> theta;  // orbits of i -> (1-i)^-1 on Z_p minus {0,1}
    std::vector<std::vector<int>> phi;    // orbits of n -> n^-1 on {2,...,p-2}
    bool theta_map_closed = true;         // whether i -> (1-i)^-1 maps {2,...,p-2} into itself
};

inline int inverse_mod(int x, int p) {
    x = ((x % p) + p) % p;
    if (x == 0) throw std::domain_error("zero has no inverse");
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1) return y;
    throw std::domain_error("no inverse");
}

inline PairingOrbits pairing_map_orbits(int p) {
    PairingOrbits out;
    auto orbits = [&](int lo, int hi, auto f) {
        std::vector<std::vector<int>> res;
        std::vector<bool> seen(p, false);
        for (int i = lo; i <= hi; ++i) {
            if (seen[i]) continue;
            std::vector<int> orbit;
            for (int j = i; !seen[j]; j = f(j)) {
                seen[j] = true;
                orbit.push_back(j);
            }
            std::sort(orbit.begin(), orbit.end());
            res.push_back(orbit);
        }
        return res;
    };
    auto f = [p](int i) { return inverse_mod(1 - i, p); };
    out.theta = orbits(2, p - 1, f);
    for (int i = 2; i <= p - 2; ++i)
        if (f(i) < 2 || f(i) > p - 2) out.theta_map_closed = false;
    out.phi = orbits(2, p - 2, [p](int n) { return inverse_mod(n, p); });
    return out;
}

}  // namespace kkp

#endif  // KKP_ACTIONS_HPP
