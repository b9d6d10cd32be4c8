/*
   Copyright 2026 The euclid Authors

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

#ifndef EUCLID_POSET_HPP
#define EUCLID_POSET_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace euclid {

/// A finite strict order given by its cover pairs (lower, upper). The transitive
/// closure is built once at construction; a cycle is rejected.
class FinitePoset {
   public:
    using Cover = std::pair<std::size_t, std::size_t>;

    FinitePoset(std::vector<std::string> labels, std::vector<Cover> covers)
        : labels_(std::move(labels)), covers_(std::move(covers)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second) throw DomainError("duplicate poset label '" + labels_[i] + "'");
        }
        const std::size_t n = labels_.size();
        below_.assign(n, {});
        for (auto [lo, hi] : covers_) {
            if (lo >= n || hi >= n) throw DomainError("cover refers to an element outside the poset");
            below_[hi].push_back(lo);
        }
        build_order();
    }

    static FinitePoset from_label_pairs(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::string, std::string>>& pairs) {
        std::unordered_map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
        std::vector<Cover> covers;
        for (const auto& [a, b] : pairs) {
            auto ia = idx.find(a), ib = idx.find(b);
            if (ia == idx.end() || ib == idx.end())
                throw DomainError("cover '" + a + " < " + b + "' names an undeclared element");
            covers.emplace_back(ia->second, ib->second);
        }
        return FinitePoset(std::move(labels), std::move(covers));
    }

    /// 0 < 1 < ... < n-1
    static FinitePoset chain(std::size_t n) {
        std::vector<std::string> labels;
        std::vector<Cover> covers;
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(std::to_string(i));
            if (i > 0) covers.emplace_back(i - 1, i);
        }
        return FinitePoset(std::move(labels), std::move(covers));
    }

    static FinitePoset antichain(std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return FinitePoset(std::move(labels), {});
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    /// Elements covered by i.
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return below_.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Strict order from the transitive closure.
    bool less(std::size_t i, std::size_t j) const { return less_[i * size() + j]; }
    bool leq(std::size_t i, std::size_t j) const { return i == j || less(i, j); }

    /// Lower elements first.
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    std::vector<std::size_t> maximal_elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
            if (maximal) out.push_back(i);
        }
        return out;
    }

    /// The unique maximal element, if it is above everything else.
    std::optional<std::size_t> top() const {
        auto m = maximal_elements();
        if (m.size() != 1) return std::nullopt;
        return m.front();
    }

    /// Subposet on the given elements with the induced order.
    FinitePoset induced(const std::vector<std::size_t>& elements) const {
        std::vector<std::string> labels;
        for (auto e : elements) labels.push_back(label(e));
        std::vector<Cover> covers;
        for (std::size_t a = 0; a < elements.size(); ++a)
            for (std::size_t b = 0; b < elements.size(); ++b)
                if (less(elements[a], elements[b])) covers.emplace_back(a, b);
        return FinitePoset(std::move(labels), std::move(covers));
    }

   private:
    void build_order() {
        const std::size_t n = size();
        std::vector<std::size_t> indegree(n, 0);
        std::vector<std::vector<std::size_t>> above(n);
        for (auto [lo, hi] : covers_) {
            above[lo].push_back(hi);
            ++indegree[hi];
        }
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < n; ++i)
            if (indegree[i] == 0) queue.push_back(i);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (auto j : above[queue[head]])
                if (--indegree[j] == 0) queue.push_back(j);
        if (queue.size() != n) throw DomainError("cover relation contains a cycle");
        topo_ = std::move(queue);

        less_.assign(n * n, false);
        for (auto x : topo_)
            for (auto y : below_[x]) {
                less_[y * n + x] = true;
                for (std::size_t z = 0; z < n; ++z)
                    if (less_[z * n + y]) less_[z * n + x] = true;
            }
    }

    std::vector<std::string> labels_;
    std::vector<Cover> covers_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> below_;
    std::vector<std::size_t> topo_;
    std::vector<bool> less_;
};

/// Natural-valued map with x < y  =>  f(x) < f(y) on a fixed poset.
class IsotoneMap {
   public:
    IsotoneMap(const FinitePoset& p, std::vector<std::uint64_t> values);

    std::uint64_t operator[](std::size_t i) const { return values_.at(i); }
    std::uint64_t at(const FinitePoset& p, std::string_view label) const {
        auto i = p.index_of(label);
        if (!i) throw DomainError("no element '" + std::string(label) + "'");
        return values_.at(*i);
    }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    bool operator==(const IsotoneMap&) const = default;

   private:
    std::vector<std::uint64_t> values_;
};

// --- predicates over quasi-orders ----------------------------------------------
//
// `leq(i, j)` is a reflexive, transitive relation on {0, ..., n-1}; the strict part
// is leq(i, j) && !leq(j, i).

template <class Leq, class Less>
bool is_weakly_isotone_on(std::size_t n, Leq&& leq, const auto& f, Less&& value_less) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq(i, j) && value_less(f[j], f[i])) return false;
    return true;
}

template <class Leq, class Less>
bool is_isotone_on(std::size_t n, Leq&& leq, const auto& f, Less&& value_less) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq(i, j) && !leq(j, i) && !value_less(f[i], f[j])) return false;
    return true;
}

inline void require_total(const FinitePoset& p, std::size_t assignment_size) {
    if (assignment_size != p.size())
        throw DomainError("assignment covers " + std::to_string(assignment_size) + " of " + std::to_string(p.size()) +
                          " poset elements");
}

inline bool is_isotone(std::span<const std::uint64_t> f, const FinitePoset& p) {
    require_total(p, f.size());
    return is_isotone_on(
        p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j); }, f,
        [](std::uint64_t a, std::uint64_t b) { return a < b; });
}

inline bool is_weakly_isotone(std::span<const std::uint64_t> f, const FinitePoset& p) {
    require_total(p, f.size());
    return is_weakly_isotone_on(
        p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j); }, f,
        [](std::uint64_t a, std::uint64_t b) { return a < b; });
}

/// Label-keyed assignment; every element of p must be present.
inline std::vector<std::uint64_t> assignment_by_label(const std::map<std::string, std::uint64_t>& f,
                                                      const FinitePoset& p) {
    std::vector<std::uint64_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = f.find(p.label(i));
        if (it == f.end()) throw DomainError("assignment is missing element '" + p.label(i) + "'");
        out[i] = it->second;
    }
    if (f.size() != p.size()) throw DomainError("assignment names elements outside the poset");
    return out;
}

inline bool is_isotone(const std::map<std::string, std::uint64_t>& f, const FinitePoset& p) {
    return is_isotone(assignment_by_label(f, p), p);
}

inline bool is_weakly_isotone(const std::map<std::string, std::uint64_t>& f, const FinitePoset& p) {
    return is_weakly_isotone(assignment_by_label(f, p), p);
}

inline IsotoneMap::IsotoneMap(const FinitePoset& p, std::vector<std::uint64_t> values) : values_(std::move(values)) {
    if (!is_isotone(values_, p)) throw DomainError("assignment is not isotone");
}

// --- length functions ------------------------------------------------------------

/// The least isotone map: longest strict chain strictly below each element,
/// filled in lower elements first.
inline IsotoneMap length_function(const FinitePoset& p) {
    if (p.empty()) throw DomainError("length function of the empty poset");
    std::vector<std::uint64_t> lambda(p.size(), 0);
    for (auto x : p.topological_order())
        for (auto y : p.lower_covers(x)) lambda[x] = std::max(lambda[x], lambda[y] + 1);
    return IsotoneMap(p, std::move(lambda));
}

/// Length function at the top element.
inline std::uint64_t len(const FinitePoset& p) {
    if (p.empty()) throw DomainError("len of the empty poset");
    auto t = p.top();
    if (!t) throw DomainError("len requires a unique top element");
    return length_function(p)[*t];
}

/// Cartesian product with the componentwise order. Labels are "(a,b)".
inline FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t m = q.size();
    std::vector<std::string> labels;
    labels.reserve(p.size() * m);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    std::vector<FinitePoset::Cover> covers;
    for (auto [lo, hi] : p.covers())
        for (std::size_t j = 0; j < m; ++j) covers.emplace_back(lo * m + j, hi * m + j);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (auto [lo, hi] : q.covers()) covers.emplace_back(i * m + lo, i * m + hi);
    return FinitePoset(std::move(labels), std::move(covers));
}

/// len((m+1) x (n+1)) for finite m, n, computed on the product poset.
inline std::uint64_t brookfield_sum_finite(std::uint64_t m, std::uint64_t n) {
    return len(product_poset(FinitePoset::chain(m + 1), FinitePoset::chain(n + 1)));
}

inline IsotoneMap pointwise_min(std::span<const IsotoneMap> maps, const FinitePoset& p) {
    if (maps.empty()) throw DomainError("pointwise minimum of an empty collection");
    std::vector<std::uint64_t> out(p.size());
    for (const auto& f : maps) {
        require_total(p, f.size());
        if (!is_isotone(f.values(), p)) throw DomainError("pointwise_min input is not isotone on the poset");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = maps.front()[i];
        for (const auto& f : maps) out[i] = std::min(out[i], f[i]);
    }
    return IsotoneMap(p, std::move(out));
}

/*
 * Edge-list text: one relation per line, "a < b" or a chain "a < b < c". A line with a
 * single label declares an isolated element. '#' starts a comment.
 */
inline FinitePoset parse_poset_edges(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> idx;
    std::vector<FinitePoset::Cover> covers;
    auto intern = [&](const std::string& s) {
        auto [it, inserted] = idx.emplace(s, labels.size());
        if (inserted) labels.push_back(s);
        return it->second;
    };
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::size_t> chain;
        std::size_t pos = 0;
        bool expect_label = true;
        for (;;) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos == line.size()) break;
            if (expect_label) {
                std::size_t start = pos;
                while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '<')
                    ++pos;
                if (pos == start) throw SyntaxError("expected element label", line_start + pos);
                chain.push_back(intern(std::string(line.substr(start, pos - start))));
                expect_label = false;
            } else {
                if (line[pos] != '<') throw SyntaxError("expected '<'", line_start + pos);
                ++pos;
                expect_label = true;
            }
        }
        if (!chain.empty() && expect_label) throw SyntaxError("dangling '<'", line_start + line.size());
        for (std::size_t k = 1; k < chain.size(); ++k) covers.emplace_back(chain[k - 1], chain[k]);
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return FinitePoset(std::move(labels), std::move(covers));
}

}  // namespace euclid

#endif
