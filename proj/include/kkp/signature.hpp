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

#ifndef KKP_SIGNATURE_HPP
#define KKP_SIGNATURE_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "kkp/errors.hpp"

namespace kkp {

using Rational = boost::rational<long long>;

/// Orbifold datum (h; m1,...,mr). Periods are kept sorted ascending, so equality is order-free.
struct Signature {
    int genus = 0;
    std::vector<int> periods;

    Signature() = default;
    Signature(int h, std::vector<int> ms) : genus(h), periods(std::move(ms)) {
        if (genus < 0) throw std::invalid_argument("orbit genus must be non-negative");
        for (int m : periods)
            if (m < 2) throw std::invalid_argument("periods must be at least 2");
        std::sort(periods.begin(), periods.end());
    }

    bool operator==(const Signature&) const = default;
    auto operator<=>(const Signature&) const = default;
};

/// "(h; m1,m2,...)", or "(h;)" without periods.
inline std::string to_string(const Signature& sig) {
    std::string out = "(" + std::to_string(sig.genus) + ";";
    for (std::size_t i = 0; i < sig.periods.size(); ++i) out += (i ? "," : " ") + std::to_string(sig.periods[i]);
    return out + ")";
}

inline Signature parse_signature(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto number = [&] {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a non-negative integer", pos);
        if (pos - start > 9) throw ParseError("integer too large", start);
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    expect('(');
    const int h = number();
    expect(';');
    std::vector<int> periods;
    skip();
    if (pos < text.size() && text[pos] != ')') {
        periods.push_back(number());
        skip();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            periods.push_back(number());
            skip();
        }
    }
    expect(')');
    skip();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    for (int m : periods)
        if (m < 2) throw ParseError("periods must be at least 2", 0);
    return Signature(h, std::move(periods));
}

/// 2h - 2 + sum(1 - 1/m_j): the hyperbolic area divided by 2*pi.
inline Rational normalized_area(const Signature& sig) {
    Rational mu(2 * sig.genus - 2);
    for (int m : sig.periods) mu += Rational(m - 1, m);
    return mu;
}

inline bool is_hyperbolic(const Signature& sig) { return normalized_area(sig) > 0; }

inline void require_hyperbolic(const Signature& sig) {
    if (!is_hyperbolic(sig)) throw NonHyperbolicSignature(to_string(sig) + " is not hyperbolic");
}

/// Genus of a surface with a group of the given order acting with signature `sig`: 1 + |G| mu / 2.
inline long long rh_genus(long long group_order, const Signature& sig) {
    require_hyperbolic(sig);
    const Rational g = Rational(1) + Rational(group_order) * normalized_area(sig) / 2;
    if (g.denominator() != 1)
        throw NonIntegralGenus("order " + std::to_string(group_order) + " with " + to_string(sig) +
                               " gives non-integral genus");
    return g.numerator();
}

/// 3h - 3 + r; the torus without cone points is the one exception (dimension 1).
inline int teichmuller_dimension(const Signature& sig) {
    if (sig.genus == 1 && sig.periods.empty()) return 1;
    return 3 * sig.genus - 3 + static_cast<int>(sig.periods.size());
}

inline Rational index_from_areas(const Signature& sub, const Signature& super) {
    require_hyperbolic(sub);
    require_hyperbolic(super);
    return normalized_area(sub) / normalized_area(super);
}

/// One inclusion of a Fuchsian group in another of the same Teichmuller dimension.
struct SingermanPair {
    std::string family;  // N1..N8 normal, NN1..NN11 non-normal
    Signature sub;
    Signature super;
    int index = 0;
    bool normal = true;
};

namespace details {

struct SingermanFamily {
    std::string name;
    bool normal;
    int params;  // 0, 1 or 2 free periods
    std::function<SingermanPair(int, int)> make;
};

inline SingermanPair pair(std::string name, bool normal, Signature sub, Signature super, int index) {
    return {std::move(name), std::move(sub), std::move(super), index, normal};
}

inline const std::vector<SingermanFamily>& singerman_families() {
    static const std::vector<SingermanFamily> table = [] {
        std::vector<SingermanFamily> f;
        auto fixed = [&](const char* name, Signature sub, Signature super, int index) {
            f.push_back({name, false, 0, [=](int, int) { return pair(name, false, sub, super, index); }});
        };
        f.push_back({"N1", true, 0, [](int, int) { return pair("N1", true, {2, {}}, {0, {2, 2, 2, 2, 2, 2}}, 2); }});
        f.push_back({"N2", true, 1, [](int t, int) { return pair("N2", true, {1, {t, t}}, {0, {2, 2, 2, 2, t}}, 2); }});
        f.push_back({"N3", true, 1, [](int t, int) { return pair("N3", true, {1, {t}}, {0, {2, 2, 2, 2 * t}}, 2); }});
        f.push_back({"N4", true, 1, [](int t, int) { return pair("N4", true, {0, {t, t, t, t}}, {0, {2, 2, 2, t}}, 4); }});
        f.push_back({"N5", true, 2, [](int t1, int t2) {
                         return pair("N5", true, {0, {t1, t1, t2, t2}}, {0, {2, 2, t1, t2}}, 2);
                     }});
        f.push_back({"N6", true, 1, [](int t, int) { return pair("N6", true, {0, {t, t, t}}, {0, {3, 3, t}}, 3); }});
        f.push_back({"N7", true, 1, [](int t, int) { return pair("N7", true, {0, {t, t, t}}, {0, {2, 3, 2 * t}}, 6); }});
        f.push_back({"N8", true, 2, [](int t1, int t2) {
                         return pair("N8", true, {0, {t1, t1, t2}}, {0, {2, t1, 2 * t2}}, 2);
                     }});
        fixed("NN1", {0, {7, 7, 7}}, {0, {2, 3, 7}}, 24);
        fixed("NN2", {0, {2, 7, 7}}, {0, {2, 3, 7}}, 9);
        fixed("NN3", {0, {3, 3, 7}}, {0, {2, 3, 7}}, 8);
        fixed("NN4", {0, {4, 8, 8}}, {0, {2, 3, 8}}, 12);
        fixed("NN5", {0, {3, 8, 8}}, {0, {2, 3, 8}}, 10);
        fixed("NN6", {0, {9, 9, 9}}, {0, {2, 3, 9}}, 12);
        fixed("NN7", {0, {4, 4, 5}}, {0, {2, 4, 5}}, 6);
        f.push_back({"NN8", false, 1, [](int n, int) {
                         return pair("NN8", false, {0, {n, 4 * n, 4 * n}}, {0, {2, 3, 4 * n}}, 6);
                     }});
        f.push_back({"NN9", false, 1, [](int n, int) {
                         return pair("NN9", false, {0, {n, 2 * n, 2 * n}}, {0, {2, 4, 2 * n}}, 4);
                     }});
        f.push_back({"NN10", false, 1, [](int n, int) {
                         return pair("NN10", false, {0, {3, n, 3 * n}}, {0, {2, 3, 3 * n}}, 4);
                     }});
        f.push_back({"NN11", false, 1, [](int n, int) {
                         return pair("NN11", false, {0, {2, n, 2 * n}}, {0, {2, 3, 2 * n}}, 3);
                     }});
        return f;
    }();
    return table;
}

/// Checks a table row: both sides hyperbolic, equal dimension, area ratio equal to the index.
inline bool valid_row(const SingermanPair& row) {
    if (!is_hyperbolic(row.sub) || !is_hyperbolic(row.super)) return false;
    if (teichmuller_dimension(row.sub) != teichmuller_dimension(row.super)) return false;
    return index_from_areas(row.sub, row.super) == Rational(row.index);
}

}  // namespace details

/// Instances of every table family with free periods in [2, max_period], restricted to hyperbolic pairs.
inline std::vector<SingermanPair> singerman_table(int max_period) {
    std::vector<SingermanPair> rows;
    for (const auto& fam : details::singerman_families()) {
        const int hi1 = fam.params >= 1 ? max_period : 2;
        const int hi2 = fam.params >= 2 ? max_period : 2;
        for (int t1 = 2; t1 <= hi1; ++t1)
            for (int t2 = 2; t2 <= hi2; ++t2) {
                auto row = fam.make(t1, t2);
                if (is_hyperbolic(row.sub) && is_hyperbolic(row.super)) rows.push_back(std::move(row));
            }
    }
    return rows;
}

/// Proper extensions of equal Teichmuller dimension that a group with signature `sig` may have.
/// Rows failing the area check would be transcription errors and throw.
inline std::vector<SingermanPair> singerman_candidates(const Signature& sig) {
    require_hyperbolic(sig);
    std::set<int> params;
    for (int m : sig.periods)
        for (int d : {1, 2, 3, 4})
            if (m % d == 0 && m / d >= 2) params.insert(m / d);
    if (params.empty()) params.insert(2);
    std::vector<SingermanPair> out;
    for (const auto& fam : details::singerman_families()) {
        const std::set<int> one = fam.params >= 1 ? params : std::set<int>{2};
        const std::set<int> two = fam.params >= 2 ? params : std::set<int>{2};
        for (int t1 : one)
            for (int t2 : two) {
                auto row = fam.make(t1, t2);
                if (!(row.sub == sig) || !is_hyperbolic(row.super)) continue;
                if (!details::valid_row(row)) throw std::logic_error("inconsistent extension row " + row.family);
                const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) {
                    return o.family == row.family && o.super == row.super;
                });
                if (!dup) out.push_back(std::move(row));
            }
    }
    return out;
}

inline bool is_finitely_maximal(const Signature& sig) { return singerman_candidates(sig).empty(); }

}  // namespace kkp

#endif  // KKP_SIGNATURE_HPP
