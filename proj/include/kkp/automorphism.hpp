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

#ifndef KKP_AUTOMORPHISM_HPP
#define KKP_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kkp/finite_group.hpp"
#include "kkp/group.hpp"

namespace kkp {

/// A homomorphism between two concrete models, given by the images of the source generators.
/// `table` maps every source element index to the index of its image.
struct Homomorphism {
    const Group* source = nullptr;
    const Group* target = nullptr;
    std::vector<GroupElement> images;  // aligned with source->generator_names()
    std::vector<std::uint32_t> table;

    GroupElement operator()(const GroupElement& g) const { return target->element_at(table.at(source->index_of(g))); }
    bool operator==(const Homomorphism& o) const { return images == o.images; }
};

using Automorphism = Homomorphism;

namespace details {

enum Slot { SlotA = 0, SlotB = 1, SlotS = 2, SlotR = 3, SlotC = 4 };

inline std::vector<std::uint32_t> image_table(const Group& source, const Group& target,
                                              const std::vector<GroupElement>& images) {
    const int m = source.modulus();
    std::vector<GroupElement> dihedral(6);
    for (int d = 0; d < 6; ++d) {
        auto img = power(target, images[SlotR], d % 3);
        if (d >= 3) img = target.multiply(images[SlotS], img);
        dihedral[d] = img;
    }
    std::vector<GroupElement> apow(m), bpow(m);
    apow[0] = bpow[0] = target.identity();
    for (int i = 1; i < m; ++i) {
        apow[i] = target.multiply(apow[i - 1], images[SlotA]);
        bpow[i] = target.multiply(bpow[i - 1], images[SlotB]);
    }
    std::vector<std::uint32_t> table(source.order());
    for (std::size_t i = 0; i < source.order(); ++i) {
        const auto g = source.element_at(i);
        auto img = target.multiply(target.multiply(apow[g.x], bpow[g.y]), dihedral[g.d]);
        if (g.e) img = target.multiply(img, images[SlotC]);
        table[i] = static_cast<std::uint32_t>(target.index_of(img));
    }
    return table;
}

inline Homomorphism make_homomorphism(const Group& source, const Group& target, std::vector<GroupElement> images) {
    Homomorphism h{&source, &target, std::move(images), {}};
    h.table = image_table(source, target, h.images);
    return h;
}

}  // namespace details

/// All injective homomorphisms source -> target (optionally landing inside the subgroup `within`), in
/// lexicographic order of the generator images. The image of a is forced by r b r^-1 = a, so the search
/// assigns r, then b, then s, then c, checking each relator as soon as its generators are all assigned.
inline std::vector<Homomorphism> embeddings(const Group& source, const Group& target,
                                            const std::vector<bool>* within = nullptr, bool first_only = false) {
    using namespace details;
    const auto names = source.generator_names();
    const bool ext = source.spec().extended();
    const auto& n = source.spec().names;
    const auto ga = source.generator(n.a), gb = source.generator(n.b), gr = source.generator(n.r);
    if (!(source.multiply(source.multiply(gr, gb), source.inverse(gr)) == ga))
        throw RelatorFailure("source model does not satisfy r b r^-1 = a");

    std::vector<std::vector<FlatWord>> stage(3);
    for (const auto& w : source.standard_relators()) {
        const auto gens = generators_of(w);
        auto has = [&](const std::string& g) { return std::find(gens.begin(), gens.end(), g) != gens.end(); };
        stage[(ext && has(n.c)) ? 2 : has(n.s) ? 1 : 0].push_back(flatten(w, names));
    }

    const auto by_order = elements_by_order(target);
    auto candidates = [&](const std::string& name) {
        std::vector<GroupElement> out;
        const auto ord = static_cast<std::size_t>(source.order_of(source.generator(name)));
        if (ord >= by_order.size()) return out;
        for (auto i : by_order[ord])
            if (!within || (*within)[i]) out.push_back(target.element_at(i));
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto cand_r = candidates(n.r), cand_b = candidates(n.b), cand_s = candidates(n.s);
    const auto cand_c = ext ? candidates(n.c) : std::vector<GroupElement>{target.identity()};

    const auto id = target.identity();
    auto holds = [&](const std::vector<FlatWord>& words, const std::vector<GroupElement>& img) {
        for (const auto& w : words)
            if (!(evaluate(w, img, target) == id)) return false;
        return true;
    };

    std::vector<Homomorphism> out;
    std::vector<GroupElement> img(ext ? 5 : 4, id);
    std::vector<char> hit(target.order());
    for (const auto& r : cand_r) {
        img[SlotR] = r;
        const auto rinv = target.inverse(r);
        for (const auto& b : cand_b) {
            img[SlotB] = b;
            img[SlotA] = target.multiply(target.multiply(r, b), rinv);
            img[SlotS] = id;
            if (ext) img[SlotC] = id;
            if (!holds(stage[0], img)) continue;
            for (const auto& s : cand_s) {
                img[SlotS] = s;
                if (!holds(stage[1], img)) continue;
                for (const auto& c : cand_c) {
                    if (ext) {
                        img[SlotC] = c;
                        if (!holds(stage[2], img)) continue;
                    }
                    auto hom = make_homomorphism(source, target, img);
                    std::fill(hit.begin(), hit.end(), 0);
                    bool injective = true;
                    for (auto t : hom.table) {
                        if (hit[t]) {
                            injective = false;
                            break;
                        }
                        hit[t] = 1;
                    }
                    if (!injective) continue;
                    out.push_back(std::move(hom));
                    if (first_only) return out;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.images < y.images; });
    return out;
}

/// Every automorphism of the model, sorted by generator images. Cached per spec.
inline const std::vector<Automorphism>& automorphism_group(const GroupSpec& spec) {
    static std::mutex mutex;
    static std::map<const Group*, std::unique_ptr<std::vector<Automorphism>>> cache;
    const Group& group = Group::get(spec);
    std::lock_guard lock(mutex);
    auto& slot = cache[&group];
    if (!slot) slot = std::make_unique<std::vector<Automorphism>>(embeddings(group, group));
    return *slot;
}

inline const std::vector<Automorphism>& automorphism_group(const Group& group) {
    return automorphism_group(group.spec());
}

/// f o g.
inline Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
    if (g.target != f.source) throw SpecMismatch("composition of homomorphisms with mismatched models");
    std::vector<GroupElement> images;
    for (const auto& x : g.images) images.push_back(f(x));
    return details::make_homomorphism(*g.source, *f.target, std::move(images));
}

inline Automorphism inverse(const Automorphism& f) {
    const Group& g = *f.source;
    std::vector<std::uint32_t> back(g.order());
    for (std::size_t i = 0; i < f.table.size(); ++i) back[f.table[i]] = static_cast<std::uint32_t>(i);
    std::vector<GroupElement> images;
    for (const auto& name : g.generator_names()) images.push_back(g.element_at(back[g.index_of(g.generator(name))]));
    return details::make_homomorphism(g, g, std::move(images));
}

/// The map a -> a^e, b -> b^e fixing s, r (and c).
inline Automorphism power_automorphism(const Group& group, int e) {
    const auto& n = group.spec().names;
    std::vector<GroupElement> images;
    for (const auto& name : group.generator_names()) {
        const auto g = group.generator(name);
        images.push_back(name == n.a || name == n.b ? power(group, g, e) : g);
    }
    return details::make_homomorphism(group, group, std::move(images));
}

/// Conjugation x -> g x g^-1.
inline Automorphism inner_automorphism(const Group& group, const GroupElement& g) {
    std::vector<GroupElement> images;
    const auto gi = group.inverse(g);
    for (const auto& name : group.generator_names())
        images.push_back(group.multiply(group.multiply(g, group.generator(name)), gi));
    return details::make_homomorphism(group, group, std::move(images));
}

/// True iff the set is closed under composition and inverses.
inline bool is_closed(const std::vector<Automorphism>& autos) {
    std::set<std::vector<GroupElement>> keys;
    for (const auto& f : autos) keys.insert(f.images);
    for (const auto& f : autos) {
        if (!keys.count(inverse(f).images)) return false;
        for (const auto& g : autos)
            if (!keys.count(compose(f, g).images)) return false;
    }
    return true;
}

/// A small generating set of Aut, chosen greedily from the sorted full list.
inline std::vector<Automorphism> automorphism_generators(const Group& group) {
    const auto& all = automorphism_group(group);
    std::vector<Automorphism> gens;
    std::set<std::vector<GroupElement>> reached;
    std::vector<GroupElement> identity_images;
    for (const auto& name : group.generator_names()) identity_images.push_back(group.generator(name));
    reached.insert(identity_images);
    for (const auto& f : all) {
        if (reached.size() == all.size()) break;
        if (reached.count(f.images)) continue;
        gens.push_back(f);
        std::vector<std::vector<GroupElement>> frontier(reached.begin(), reached.end());
        while (!frontier.empty()) {
            std::vector<std::vector<GroupElement>> next;
            for (const auto& key : frontier)
                for (const auto& g : gens) {
                    std::vector<GroupElement> images;
                    for (const auto& x : key) images.push_back(g(x));
                    if (reached.insert(images).second) next.push_back(std::move(images));
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

/// An isomorphism from `source` onto the subgroup `k` of `target`, if one exists.
inline std::optional<Homomorphism> find_isomorphism(const Group& source, const Group& target,
                                                    const SubgroupOf<Group>& k) {
    if (k.size() != source.order()) return std::nullopt;
    auto found = embeddings(source, target, &k.mask, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

struct SubgroupClass {
    SubgroupOf<Group> representative;  // least index set in the class
    std::size_t members = 0;
};

/// Subgroups of Z_{2p}^2 x| D_3 isomorphic to Z_p^2 x| D_3, up to conjugacy. Every such subgroup contains the
/// characteristic Sylow p-subgroup, which the order filter in `embeddings` exploits.
inline std::vector<SubgroupClass> subgroups_isomorphic_to_G_inside_Gprime(const GroupSpec& prime) {
    if (prime.extended() || prime.modulus % 2 != 0) throw SpecMismatch("expected Z_{2p}^2 x| D_3");
    const auto& target = Group::get(prime);
    const auto& source = Group::get(GroupSpec::semidirect(prime.modulus / 2));
    std::map<std::vector<std::uint32_t>, std::vector<GroupElement>> images;
    for (const auto& h : embeddings(source, target)) {
        std::vector<std::uint32_t> idx = h.table;
        std::sort(idx.begin(), idx.end());
        images.emplace(std::move(idx), h.images);
    }
    std::vector<SubgroupClass> classes;
    std::set<std::vector<std::uint32_t>> assigned;
    for (const auto& [idx, gens] : images) {
        if (assigned.count(idx)) continue;
        SubgroupClass cls;
        std::vector<bool> mask(target.order(), false);
        for (auto i : idx) mask[i] = true;
        std::vector<std::string> words;
        for (const auto& g : gens) words.push_back(target.to_string(g));
        cls.representative = details::from_mask<Group>(std::move(mask), std::move(words));
        std::set<std::vector<std::uint32_t>> conj;
        for (std::size_t gi = 0; gi < target.order(); ++gi)
            conj.insert(conjugate_subgroup(target, cls.representative, target.element_at(gi)).indices);
        for (const auto& c : conj) {
            if (!images.count(c)) throw RelatorFailure("conjugate of an embedded subgroup was not enumerated");
            assigned.insert(c);
        }
        cls.members = conj.size();
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace kkp

#endif  // KKP_AUTOMORPHISM_HPP
