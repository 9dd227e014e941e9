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

#ifndef KKP_GROUP_HPP
#define KKP_GROUP_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "finite_group.hpp"
#include "word.hpp"

namespace kkp {

// Concrete models of Z_m^2 x| D_3, optionally extended by an involution c that commutes with D_3 and acts on the
// lattice trivially (Central) or by negation (Inverting). Elements are kept in the normal form a^x b^y d c^e.

enum class Extension : std::uint8_t { None, Central, Inverting };

struct GeneratorNames {
    std::string a = "a", b = "b", s = "s", r = "r", c = "c";

    static GeneratorNames lower() { return {}; }
    static GeneratorNames upper() { return {"A", "B", "S", "R", "C"}; }

    bool operator==(const GeneratorNames&) const = default;
};

struct GroupSpec {
    int modulus = 5;
    Extension extension = Extension::None;
    GeneratorNames names;

    /// Z_m^2 x| D_3 with generators a, b, s, r.
    static GroupSpec semidirect(int m) { return {m, Extension::None, GeneratorNames::lower()}; }
    /// Z_{2p}^2 x| D_3, the automorphism group of the Fermat curve of degree 2p (generators A, B, S, R).
    static GroupSpec fermat(int p) { return {2 * p, Extension::None, GeneratorNames::upper()}; }
    /// (Z_p^2 x| D_3) x Z_2.
    static GroupSpec central(int p) { return {p, Extension::Central, GeneratorNames::upper()}; }
    /// (Z_p^2 x| D_3) x| Z_2 with C inverting the lattice.
    static GroupSpec inverting(int p) { return {p, Extension::Inverting, GeneratorNames::upper()}; }

    bool extended() const { return extension != Extension::None; }
    std::size_t order() const {
        return static_cast<std::size_t>(6 * modulus * modulus * (extended() ? 2 : 1));
    }
    bool same_group(const GroupSpec& o) const { return modulus == o.modulus && extension == o.extension; }
    bool operator==(const GroupSpec&) const = default;

    std::vector<std::string> generator_names() const {
        std::vector<std::string> v{names.a, names.b, names.s, names.r};
        if (extended()) v.push_back(names.c);
        return v;
    }
};

inline std::string to_string(Extension e) {
    switch (e) {
        case Extension::None: return "none";
        case Extension::Central: return "central";
        case Extension::Inverting: return "inverting";
    }
    return "?";
}

/// a^x b^y d c^e, with d = s^(d/3) r^(d%3) indexing {1, r, r2, s, sr, sr2}. Carries its group's (m, extension) tag.
struct GroupElement {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::uint8_t d = 0;
    std::uint8_t e = 0;
    std::uint16_t modulus = 0;
    Extension extension = Extension::None;

    bool operator==(const GroupElement&) const = default;
    std::strong_ordering operator<=>(const GroupElement& o) const {
        if (auto c = x <=> o.x; c != 0) return c;
        if (auto c = y <=> o.y; c != 0) return c;
        if (auto c = d <=> o.d; c != 0) return c;
        return e <=> o.e;
    }
};

/// 2x2 integer matrix (row-major) acting on lattice exponent vectors modulo m.
using Mat2 = std::array<int, 4>;

namespace details {

inline int mod(long v, int m) {
    long r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

inline Mat2 mat_mul(const Mat2& p, const Mat2& q, int m) {
    return {mod(1L * p[0] * q[0] + 1L * p[1] * q[2], m), mod(1L * p[0] * q[1] + 1L * p[1] * q[3], m),
            mod(1L * p[2] * q[0] + 1L * p[3] * q[2], m), mod(1L * p[2] * q[1] + 1L * p[3] * q[3], m)};
}

inline Mat2 mat_identity() { return {1, 0, 0, 1}; }

// d = 3f + j stands for s^f r^j; r^j s = s r^-j.
inline int d3_mul(int d1, int d2) {
    const int f1 = d1 / 3, j1 = d1 % 3, f2 = d2 / 3, j2 = d2 % 3;
    const int j = ((f2 ? 3 - j1 : j1) + j2) % 3;
    return 3 * ((f1 + f2) % 2) + j;
}

inline int d3_inv(int d) {
    for (int e = 0; e < 6; ++e)
        if (d3_mul(d, e) == 0) return e;
    return 0;
}

}  // namespace details

/// Relators of Z_m^2 x| D_3 in the spec's generator names:
/// a^m, b^m, r^3, s^2, (sr)^2, [a,b], r a r^-1 a b, r b r^-1 a^-1, s a s a b, [s,b].
inline std::vector<std::string> semidirect_relator_texts(const GeneratorNames& n, int m) {
    const auto& [a, b, s, r, c] = n;
    (void)c;
    return {a + "^" + std::to_string(m),
            b + "^" + std::to_string(m),
            r + "^3",
            s + "^2",
            "(" + s + " " + r + ")^2",
            "[" + a + "," + b + "]",
            r + " " + a + " " + r + "^-1 " + a + " " + b,
            r + " " + b + " " + r + "^-1 " + a + "^-1",
            s + " " + a + " " + s + " " + a + " " + b,
            "[" + s + "," + b + "]"};
}

/// The same relators in the bracketing used for the Fermat group Z_{2p}^2 x| D_3 (the trivial relator is omitted).
inline std::vector<std::string> fermat_relator_texts(const GeneratorNames& n, int p) {
    const auto& [a, b, s, r, c] = n;
    (void)c;
    const std::string e = std::to_string(2 * p);
    return {a + "^" + e,
            b + "^" + e,
            r + "^3",
            s + "^2",
            "(" + s + " " + r + ")^2",
            "[" + a + "," + b + "]",
            r + " " + a + " " + r + "^-1 (" + a + " " + b + ")",
            r + " " + b + " " + r + "^-1 " + a + "^-1",
            s + " " + a + " " + s + " (" + a + " " + b + ")",
            "[" + s + "," + b + "]"};
}

inline std::vector<std::string> extension_relator_texts(const GeneratorNames& n, int p, Extension ext) {
    const auto& [a, b, s, r, c] = n;
    const std::string e = std::to_string(p);
    std::vector<std::string> out{a + "^" + e,
                                 b + "^" + e,
                                 s + "^2",
                                 r + "^3",
                                 c + "^2",
                                 "(" + s + " " + r + ")^2",
                                 "[" + a + "," + b + "]",
                                 "[" + b + "," + s + "]",
                                 s + " " + a + " " + s + " " + a + " " + b,
                                 r + " " + a + " " + r + "^-1 " + a + " " + b,
                                 r + " " + b + " " + r + "^-1 " + a + "^-1"};
    if (ext == Extension::Central) {
        out.push_back("[" + c + "," + a + "]");
        out.push_back("[" + c + "," + b + "]");
    } else {
        out.push_back("(" + c + " " + a + ")^2");
        out.push_back("(" + c + " " + b + ")^2");
    }
    out.push_back("[" + s + "," + c + "]");
    out.push_back("[" + r + "," + c + "]");
    return out;
}

inline std::vector<std::string> standard_relator_texts(const GroupSpec& spec) {
    if (spec.extended()) return extension_relator_texts(spec.names, spec.modulus, spec.extension);
    return semidirect_relator_texts(spec.names, spec.modulus);
}

class Group {
   public:
    using element_type = GroupElement;

    /// Builds the model, deriving the conjugation action of r, s (and c) on the lattice from the relators.
    explicit Group(GroupSpec spec) : Group(derive(spec)) {}

    /// Shared instance per spec; construction runs the derivation once.
    static const Group& get(const GroupSpec& spec) {
        static std::mutex mutex;
        static std::map<std::string, std::unique_ptr<Group>> cache;
        const std::string key = std::to_string(spec.modulus) + "/" + kkp::to_string(spec.extension) + "/" +
                                spec.names.a + spec.names.b + spec.names.s + spec.names.r + spec.names.c;
        std::lock_guard lock(mutex);
        auto& slot = cache[key];
        if (!slot) slot = std::make_unique<Group>(spec);
        return *slot;
    }

    const GroupSpec& spec() const { return spec_; }
    int modulus() const { return m_; }
    std::size_t order() const { return order_; }

    GroupElement identity() const { return make(0, 0, 0, 0); }

    GroupElement make(int x, int y, int d, int e = 0) const {
        GroupElement g;
        g.x = static_cast<std::uint16_t>(details::mod(x, m_));
        g.y = static_cast<std::uint16_t>(details::mod(y, m_));
        g.d = static_cast<std::uint8_t>(d);
        g.e = static_cast<std::uint8_t>(spec_.extended() ? (e & 1) : 0);
        g.modulus = static_cast<std::uint16_t>(m_);
        g.extension = spec_.extension;
        return g;
    }

    GroupElement multiply(const GroupElement& g, const GroupElement& h) const {
        check(g);
        check(h);
        const Mat2& act = action_[g.d][g.e];
        GroupElement out = g;
        out.x = static_cast<std::uint16_t>((g.x + act[0] * h.x + act[1] * h.y) % m_);
        out.y = static_cast<std::uint16_t>((g.y + act[2] * h.x + act[3] * h.y) % m_);
        out.d = static_cast<std::uint8_t>(d3_table_[g.d][h.d]);
        out.e = static_cast<std::uint8_t>(g.e ^ h.e);
        return out;
    }

    GroupElement inverse(const GroupElement& g) const {
        check(g);
        const int di = details::d3_inv(g.d);
        const Mat2& act = action_[di][g.e];
        return make(-(act[0] * g.x + act[1] * g.y), -(act[2] * g.x + act[3] * g.y), di, g.e);
    }

    std::size_t index_of(const GroupElement& g) const {
        return ((static_cast<std::size_t>(g.x) * m_ + g.y) * 6 + g.d) * ext_count_ + g.e;
    }

    GroupElement element_at(std::size_t i) const {
        const int e = static_cast<int>(i % ext_count_);
        i /= ext_count_;
        const int d = static_cast<int>(i % 6);
        i /= 6;
        const int y = static_cast<int>(i % m_);
        const int x = static_cast<int>(i / m_);
        return make(x, y, d, e);
    }

    int order_of(const GroupElement& g) const { return element_order(*this, g); }

    bool contains(const GroupElement& g) const {
        return g.modulus == m_ && g.extension == spec_.extension && g.x < m_ && g.y < m_ && g.d < 6 &&
               g.e < ext_count_;
    }

    GroupElement generator(std::string_view name) const {
        const auto& n = spec_.names;
        if (name == n.a) return make(1, 0, 0);
        if (name == n.b) return make(0, 1, 0);
        if (name == n.s) return make(0, 0, 3);
        if (name == n.r) return make(0, 0, 1);
        if (spec_.extended() && name == n.c) return make(0, 0, 0, 1);
        throw UnboundGenerator(std::string(name));
    }

    std::vector<std::string> generator_names() const { return spec_.generator_names(); }

    std::map<std::string, GroupElement> generator_bindings() const {
        std::map<std::string, GroupElement> b;
        for (const auto& n : generator_names()) b.emplace(n, generator(n));
        return b;
    }

    Word parse(std::string_view text) const { return parse_word(text, generator_names()); }

    /// Evaluates a word over this group's own generators, e.g. "a^2 b^-1 s".
    GroupElement eval(std::string_view text) const { return evaluate(parse(text), generator_bindings(), *this); }

    std::string to_string(const GroupElement& g) const {
        const auto& n = spec_.names;
        std::string out;
        auto add = [&](const std::string& tok) {
            if (!out.empty()) out += ' ';
            out += tok;
        };
        auto pw = [](const std::string& name, int k) { return k == 1 ? name : name + "^" + std::to_string(k); };
        if (g.x) add(pw(n.a, g.x));
        if (g.y) add(pw(n.b, g.y));
        static constexpr const char* suffix[] = {"", "", "2"};
        if (g.d) add((g.d >= 3 ? n.s : std::string()) + (g.d % 3 ? n.r : std::string()) + suffix[g.d % 3]);
        if (g.e) add(n.c);
        return out.empty() ? "1" : out;
    }

    /// Conjugation action of the D_3 part d (and c^e) on lattice exponent vectors.
    const Mat2& lattice_action(int d, int e = 0) const { return action_.at(d).at(e); }

    std::vector<Word> standard_relators() const {
        std::vector<Word> out;
        for (const auto& t : standard_relator_texts(spec_)) out.push_back(parse(t));
        return out;
    }

   private:
    struct Actions {
        GroupSpec spec;
        Mat2 r, s, c;
    };

    explicit Group(const Actions& a) : spec_(a.spec), m_(a.spec.modulus) {
        order_ = spec_.order();
        ext_count_ = spec_.extended() ? 2 : 1;
        Mat2 rpow[3] = {details::mat_identity(), a.r, details::mat_mul(a.r, a.r, m_)};
        for (int d = 0; d < 6; ++d) {
            const Mat2 base = d >= 3 ? details::mat_mul(a.s, rpow[d % 3], m_) : rpow[d % 3];
            action_[d][0] = base;
            action_[d][1] = details::mat_mul(base, a.c, m_);
            for (int d2 = 0; d2 < 6; ++d2) d3_table_[d][d2] = details::d3_mul(d, d2);
        }
    }

    void check(const GroupElement& g) const {
        if (g.modulus != m_ || g.extension != spec_.extension) {
            throw SpecMismatch("element of Z_" + std::to_string(g.modulus) + " model (" + kkp::to_string(g.extension) +
                               ") used with Z_" + std::to_string(m_) + " model (" + kkp::to_string(spec_.extension) +
                               ")");
        }
    }

    static bool relators_hold(const Group& model, const std::vector<FlatWord>& words) {
        std::vector<GroupElement> images;
        for (const auto& n : model.generator_names()) images.push_back(model.generator(n));
        const auto id = model.identity();
        for (const auto& w : words)
            if (!(evaluate(w, images, model) == id)) return false;
        return true;
    }

    // Staged search: r-action from the relators in {a,b,r}; then s from those in {a,b,r,s}; then c from all.
    // Each candidate matrix set must make d c^e -> action a homomorphism (needed for associativity).
    static Actions derive(const GroupSpec& spec) {
        const int m = spec.modulus;
        if (m < 2) throw std::invalid_argument("modulus must be at least 2");
        const auto names = spec.generator_names();
        std::vector<std::vector<FlatWord>> stage(3);
        for (const auto& text : standard_relator_texts(spec)) {
            const Word w = parse_word(text, names);
            const auto gens = generators_of(w);
            auto has = [&](const std::string& g) { return std::find(gens.begin(), gens.end(), g) != gens.end(); };
            const int level = (spec.extended() && has(spec.names.c)) ? 2 : has(spec.names.s) ? 1 : 0;
            stage[level].push_back(flatten(w, names));
        }
        const Mat2 id = details::mat_identity();
        std::vector<Mat2> all;
        all.reserve(static_cast<std::size_t>(m) * m * m * m);
        for (int i = 0; i < m * m * m * m; ++i) all.push_back({i % m, (i / m) % m, (i / m / m) % m, i / m / m / m});

        std::vector<Actions> found;
        for (const auto& r : all) {
            if (details::mat_mul(r, details::mat_mul(r, r, m), m) != id) continue;
            if (!relators_hold(Group(Actions{spec, r, id, id}), stage[0])) continue;
            for (const auto& s : all) {
                if (details::mat_mul(s, s, m) != id) continue;
                const Mat2 sr = details::mat_mul(s, r, m);
                if (details::mat_mul(sr, sr, m) != id) continue;
                if (!relators_hold(Group(Actions{spec, r, s, id}), stage[1])) continue;
                if (!spec.extended()) {
                    found.push_back({spec, r, s, id});
                    continue;
                }
                for (const auto& c : all) {
                    if (details::mat_mul(c, c, m) != id) continue;
                    if (details::mat_mul(c, r, m) != details::mat_mul(r, c, m)) continue;
                    if (details::mat_mul(c, s, m) != details::mat_mul(s, c, m)) continue;
                    if (!relators_hold(Group(Actions{spec, r, s, c}), stage[2])) continue;
                    found.push_back({spec, r, s, c});
                }
            }
        }
        if (found.size() != 1) {
            throw RelatorFailure("relators admit " + std::to_string(found.size()) +
                                 " lattice actions for modulus " + std::to_string(m) + "; expected exactly one");
        }
        return found.front();
    }

    GroupSpec spec_;
    int m_;
    std::size_t order_ = 0;
    int ext_count_ = 1;
    std::array<std::array<Mat2, 2>, 6> action_{};
    std::array<std::array<int, 6>, 6> d3_table_{};
};

/// Exhaustive associativity check over all triples. O(|G|^3); meant for small moduli.
inline bool is_associative(const Group& g) {
    const auto els = all_elements(g);
    for (const auto& x : els)
        for (const auto& y : els) {
            const auto xy = g.multiply(x, y);
            for (const auto& z : els)
                if (!(g.multiply(xy, z) == g.multiply(x, g.multiply(y, z)))) return false;
        }
    return true;
}

/// True iff every relator evaluates to the identity and the spec's generators generate the whole group.
inline bool verify_presentation(const Group& group, const std::vector<Word>& relators) {
    const auto bindings = group.generator_bindings();
    const auto id = group.identity();
    for (const auto& w : relators) {
        try {
            if (!(evaluate(w, bindings, group) == id)) return false;
        } catch (const UnboundGenerator&) {
            return false;
        }
    }
    std::vector<GroupElement> gens;
    for (const auto& [name, g] : bindings) gens.push_back(g);
    return subgroup_generated(group, gens).size() == group.order();
}

inline bool verify_presentation(const Group& group, const std::vector<std::string>& relator_texts) {
    std::vector<Word> words;
    for (const auto& t : relator_texts) words.push_back(group.parse(t));
    return verify_presentation(group, words);
}

}  // namespace kkp

#endif  // KKP_GROUP_HPP
