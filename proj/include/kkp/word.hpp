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

#ifndef KKP_WORD_HPP
#define KKP_WORD_HPP

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kkp {

// Concrete syntax tree of a group word.
//
//   WORD := TERM+
//   TERM := ATOM ('^' SIGNED_INT)?
//   ATOM := GENERATOR | '(' WORD ')' | '[' WORD ',' WORD ']'
//
// Juxtaposition is the product, evaluated left to right; [x,y] = x^-1 y^-1 x y.
struct Word;

struct Term {
    enum class Kind { Generator, Group, Commutator };

    Kind kind = Kind::Generator;
    std::string name;          // Kind::Generator
    std::vector<Word> parts;   // one word for Group, two for Commutator
    std::optional<long> exponent;
};

struct Word {
    std::vector<Term> terms;
};

inline bool operator==(const Word& lhs, const Word& rhs);

inline bool operator==(const Term& lhs, const Term& rhs) {
    return lhs.kind == rhs.kind && lhs.name == rhs.name && lhs.exponent == rhs.exponent && lhs.parts == rhs.parts;
}

inline bool operator==(const Word& lhs, const Word& rhs) { return lhs.terms == rhs.terms; }

namespace details {

class WordParser {
   public:
    // An empty name list selects the default generator lexeme: one letter followed by digits or '_'.
    WordParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {
        std::sort(names_.begin(), names_.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }

    Word parse() {
        Word w = parse_word();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return w;
    }

   private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
    }

    Word parse_word() {
        Word w;
        if (!at_atom_start()) {
            throw ParseError(pos_ < text_.size() ? "expected generator, '(' or '['" : "unexpected end of word", pos_);
        }
        while (at_atom_start()) w.terms.push_back(parse_term());
        return w;
    }

    Term parse_term() {
        Term t = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            t.exponent = parse_signed_int();
        }
        return t;
    }

    long parse_signed_int() {
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected integer exponent", pos_);
        }
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000L) throw ParseError("exponent too large", start);
            ++pos_;
        }
        return negative ? -value : value;
    }

    Term parse_atom() {
        skip_ws();
        Term t;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            t.kind = Term::Kind::Group;
            t.parts.push_back(parse_word());
            expect(')');
        } else if (c == '[') {
            ++pos_;
            t.kind = Term::Kind::Commutator;
            t.parts.push_back(parse_word());
            expect(',');
            t.parts.push_back(parse_word());
            expect(']');
        } else {
            t.kind = Term::Kind::Generator;
            t.name = parse_generator();
        }
        return t;
    }

    std::string parse_generator() {
        if (names_.empty()) {
            const std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return std::string(text_.substr(start, pos_ - start));
        }
        for (const auto& n : names_) {
            if (text_.substr(pos_, n.size()) == n) {
                pos_ += n.size();
                return n;
            }
        }
        throw ParseError("unknown generator", pos_);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view text_;
    std::vector<std::string> names_;
    std::size_t pos_ = 0;
};

inline void serialize_into(const Word& w, std::string& out);

inline void serialize_term(const Term& t, std::string& out) {
    switch (t.kind) {
        case Term::Kind::Generator:
            out += t.name;
            break;
        case Term::Kind::Group:
            out += '(';
            serialize_into(t.parts.at(0), out);
            out += ')';
            break;
        case Term::Kind::Commutator:
            out += '[';
            serialize_into(t.parts.at(0), out);
            out += ',';
            serialize_into(t.parts.at(1), out);
            out += ']';
            break;
    }
    if (t.exponent) out += '^' + std::to_string(*t.exponent);
}

inline void serialize_into(const Word& w, std::string& out) {
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        if (i) out += ' ';
        serialize_term(w.terms[i], out);
    }
}

}  // namespace details

/// Parses `text` over an explicit list of generator names (longest match wins, so "sasab" is accepted).
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    return details::WordParser(text, names).parse();
}

/// Parses with the default lexeme: a generator is one letter followed by optional digits or underscores.
inline Word parse_word(std::string_view text) { return details::WordParser(text, {}).parse(); }

inline std::string serialize(const Word& w) {
    std::string out;
    details::serialize_into(w, out);
    return out;
}

inline void collect_generators(const Word& w, std::vector<std::string>& out) {
    for (const auto& t : w.terms) {
        if (t.kind == Term::Kind::Generator) {
            if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        } else {
            for (const auto& part : t.parts) collect_generators(part, out);
        }
    }
}

inline std::vector<std::string> generators_of(const Word& w) {
    std::vector<std::string> out;
    collect_generators(w, out);
    return out;
}

/// A word flattened to (slot, exponent) syllables over a fixed slot table, for repeated evaluation.
struct FlatWord {
    std::vector<std::pair<int, long>> syllables;
};

namespace details {

inline void flatten_into(const Word& w, const std::vector<std::string>& slots, std::vector<std::pair<int, long>>& out);

inline std::vector<std::pair<int, long>> inverted(std::vector<std::pair<int, long>> seq) {
    std::reverse(seq.begin(), seq.end());
    for (auto& s : seq) s.second = -s.second;
    return seq;
}

inline void flatten_term(const Term& t, const std::vector<std::string>& slots, std::vector<std::pair<int, long>>& out) {
    const long e = t.exponent.value_or(1);
    if (t.kind == Term::Kind::Generator) {
        auto it = std::find(slots.begin(), slots.end(), t.name);
        if (it == slots.end()) throw UnboundGenerator(t.name);
        if (e != 0) out.emplace_back(static_cast<int>(it - slots.begin()), e);
        return;
    }
    std::vector<std::pair<int, long>> base;
    if (t.kind == Term::Kind::Group) {
        flatten_into(t.parts.at(0), slots, base);
    } else {
        std::vector<std::pair<int, long>> x, y;
        flatten_into(t.parts.at(0), slots, x);
        flatten_into(t.parts.at(1), slots, y);
        auto xi = inverted(x), yi = inverted(y);
        base.insert(base.end(), xi.begin(), xi.end());
        base.insert(base.end(), yi.begin(), yi.end());
        base.insert(base.end(), x.begin(), x.end());
        base.insert(base.end(), y.begin(), y.end());
    }
    const auto unit = e < 0 ? inverted(base) : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), unit.begin(), unit.end());
}

inline void flatten_into(const Word& w, const std::vector<std::string>& slots, std::vector<std::pair<int, long>>& out) {
    for (const auto& t : w.terms) flatten_term(t, slots, out);
}

}  // namespace details

inline FlatWord flatten(const Word& w, const std::vector<std::string>& slots) {
    FlatWord f;
    details::flatten_into(w, slots, f.syllables);
    return f;
}

/// Group-like model used by word evaluation: identity, product, inverse on `element_type`.
template <class G>
concept GroupOps = requires(const G& g, const typename G::element_type& x) {
    { g.identity() } -> std::convertible_to<typename G::element_type>;
    { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
    { g.inverse(x) } -> std::convertible_to<typename G::element_type>;
};

template <GroupOps G>
typename G::element_type power(const G& group, const typename G::element_type& x, long e) {
    auto base = e < 0 ? group.inverse(x) : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    auto result = group.identity();
    while (n) {
        if (n & 1UL) result = group.multiply(result, base);
        n >>= 1;
        if (n) base = group.multiply(base, base);
    }
    return result;
}

template <GroupOps G>
typename G::element_type evaluate(const FlatWord& w, const std::vector<typename G::element_type>& images,
                                  const G& group) {
    auto result = group.identity();
    for (const auto& [slot, e] : w.syllables) result = group.multiply(result, power(group, images.at(slot), e));
    return result;
}

/// Evaluates `w` with generator names bound to group elements. Throws UnboundGenerator for a missing name.
template <GroupOps G>
typename G::element_type evaluate(const Word& w, const std::map<std::string, typename G::element_type>& bindings,
                                  const G& group) {
    std::vector<std::string> slots;
    std::vector<typename G::element_type> images;
    for (const auto& name : generators_of(w)) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw UnboundGenerator(name);
        slots.push_back(name);
        images.push_back(it->second);
    }
    return evaluate(flatten(w, slots), images, group);
}

}  // namespace kkp

#endif  // KKP_WORD_HPP
