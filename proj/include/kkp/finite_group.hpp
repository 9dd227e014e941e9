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

#ifndef KKP_FINITE_GROUP_HPP
#define KKP_FINITE_GROUP_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace kkp {

/// A finite group whose elements are numbered 0..order()-1.
template <class G>
concept FiniteGroup = GroupOps<G> && requires(const G& g, const typename G::element_type& x, std::size_t i) {
    { g.order() } -> std::convertible_to<std::size_t>;
    { g.index_of(x) } -> std::convertible_to<std::size_t>;
    { g.element_at(i) } -> std::convertible_to<typename G::element_type>;
};

template <FiniteGroup G>
int element_order(const G& group, const typename G::element_type& x) {
    const auto id = group.identity();
    auto y = x;
    int n = 1;
    while (!(y == id)) {
        y = group.multiply(y, x);
        ++n;
    }
    return n;
}

template <FiniteGroup G>
std::vector<typename G::element_type> all_elements(const G& group) {
    std::vector<typename G::element_type> out;
    out.reserve(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) out.push_back(group.element_at(i));
    return out;
}

/// Element indices bucketed by element order.
template <FiniteGroup G>
std::vector<std::vector<std::uint32_t>> elements_by_order(const G& group) {
    std::vector<std::vector<std::uint32_t>> buckets(1);
    for (std::size_t i = 0; i < group.order(); ++i) {
        const auto n = static_cast<std::size_t>(element_order(group, group.element_at(i)));
        if (buckets.size() <= n) buckets.resize(n + 1);
        buckets[n].push_back(static_cast<std::uint32_t>(i));
    }
    return buckets;
}

/// A subgroup stored as its full element set, plus the words that generated it (informational).
template <class E>
struct Subgroup {
    std::vector<std::uint32_t> indices;  // sorted ascending
    std::vector<bool> mask;              // indexed by element index of the ambient group
    std::vector<std::string> generator_words;

    std::size_t size() const { return indices.size(); }
    bool contains_index(std::size_t i) const { return i < mask.size() && mask[i]; }
};

template <FiniteGroup G>
using SubgroupOf = Subgroup<typename G::element_type>;

namespace details {

template <FiniteGroup G>
SubgroupOf<G> from_mask(std::vector<bool> mask, std::vector<std::string> words = {}) {
    SubgroupOf<G> h;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) h.indices.push_back(static_cast<std::uint32_t>(i));
    h.mask = std::move(mask);
    h.generator_words = std::move(words);
    return h;
}

}  // namespace details

/// Closure of `gens` under products, by saturation.
template <FiniteGroup G>
SubgroupOf<G> subgroup_generated(const G& group, const std::vector<typename G::element_type>& gens,
                                 std::vector<std::string> words = {}) {
    std::vector<bool> mask(group.order(), false);
    std::deque<typename G::element_type> queue;
    const auto id = group.identity();
    mask[group.index_of(id)] = true;
    queue.push_back(id);
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const auto y = group.multiply(x, g);
            const auto i = group.index_of(y);
            if (!mask[i]) {
                mask[i] = true;
                queue.push_back(y);
            }
        }
    }
    return details::from_mask<G>(std::move(mask), std::move(words));
}

/// True iff `gens` generate the whole group. Stops early once more than half the group is reached.
template <FiniteGroup G>
bool generates_group(const G& group, const std::vector<typename G::element_type>& gens) {
    const std::size_t n = group.order();
    std::vector<bool> mask(n, false);
    std::vector<typename G::element_type> stack;
    const auto id = group.identity();
    mask[group.index_of(id)] = true;
    stack.push_back(id);
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            const auto y = group.multiply(x, g);
            const auto i = group.index_of(y);
            if (!mask[i]) {
                mask[i] = true;
                if (2 * ++count > n) return true;  // a subgroup larger than half the group is the group
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

template <FiniteGroup G>
SubgroupOf<G> whole_group(const G& group) {
    return details::from_mask<G>(std::vector<bool>(group.order(), true));
}

template <FiniteGroup G>
bool is_subgroup(const G& group, const SubgroupOf<G>& h) {
    if (h.mask.size() != group.order() || h.indices.empty()) return false;
    for (auto i : h.indices) {
        const auto x = group.element_at(i);
        if (!h.contains_index(group.index_of(group.inverse(x)))) return false;
        for (auto j : h.indices)
            if (!h.contains_index(group.index_of(group.multiply(x, group.element_at(j))))) return false;
    }
    return true;
}

/// Right-coset label of every element: label[index(x)] identifies Hx. Labels are numbered by first appearance.
template <FiniteGroup G>
std::vector<std::uint32_t> right_coset_labels(const G& group, const SubgroupOf<G>& h, std::size_t* count = nullptr) {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> label(group.order(), unset);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (label[i] != unset) continue;
        const auto x = group.element_at(i);
        for (auto j : h.indices) label[group.index_of(group.multiply(group.element_at(j), x))] = next;
        ++next;
    }
    if (count) *count = next;
    return label;
}

/// Representatives of the right cosets Hx: the least-indexed element of each coset, ascending.
template <FiniteGroup G>
std::vector<typename G::element_type> right_cosets(const G& group, const SubgroupOf<G>& h) {
    std::size_t count = 0;
    const auto label = right_coset_labels(group, h, &count);
    std::vector<typename G::element_type> reps;
    std::vector<bool> seen(count, false);
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (!seen[label[i]]) {
            seen[label[i]] = true;
            reps.push_back(group.element_at(i));
        }
    }
    return reps;
}

/// g H g^-1.
template <FiniteGroup G>
SubgroupOf<G> conjugate_subgroup(const G& group, const SubgroupOf<G>& h, const typename G::element_type& g) {
    std::vector<bool> mask(group.order(), false);
    const auto gi = group.inverse(g);
    for (auto i : h.indices) mask[group.index_of(group.multiply(group.multiply(g, group.element_at(i)), gi))] = true;
    return details::from_mask<G>(std::move(mask));
}

/// Some g with g H g^-1 = K, if one exists.
template <FiniteGroup G>
std::optional<typename G::element_type> conjugating_element(const G& group, const SubgroupOf<G>& h,
                                                            const SubgroupOf<G>& k) {
    if (h.size() != k.size()) return std::nullopt;
    for (std::size_t gi = 0; gi < group.order(); ++gi) {
        const auto g = group.element_at(gi);
        const auto ginv = group.inverse(g);
        bool ok = true;
        for (auto i : h.indices) {
            if (!k.contains_index(group.index_of(group.multiply(group.multiply(g, group.element_at(i)), ginv)))) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return std::nullopt;
}

template <FiniteGroup G>
bool subgroups_conjugate(const G& group, const SubgroupOf<G>& h, const SubgroupOf<G>& k) {
    return conjugating_element(group, h, k).has_value();
}

template <FiniteGroup G>
bool same_subgroup(const SubgroupOf<G>& h, const SubgroupOf<G>& k) {
    return h.indices == k.indices;
}

/// The cyclic group Z_n written multiplicatively; elements are residues 0..n-1.
class CyclicGroup {
   public:
    using element_type = int;

    explicit CyclicGroup(int n) : n_(n) {}

    std::size_t order() const { return static_cast<std::size_t>(n_); }
    int identity() const { return 0; }
    int multiply(int x, int y) const { return (x + y) % n_; }
    int inverse(int x) const { return (n_ - x) % n_; }
    std::size_t index_of(int x) const { return static_cast<std::size_t>(x); }
    int element_at(std::size_t i) const { return static_cast<int>(i); }
    std::string to_string(int x) const { return x == 0 ? "1" : "g^" + std::to_string(x); }

   private:
    int n_;
};

}  // namespace kkp

#endif  // KKP_FINITE_GROUP_HPP
