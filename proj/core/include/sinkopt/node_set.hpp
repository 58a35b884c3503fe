#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sinkopt {

// Canonical set of node indices: strictly increasing, no duplicates.
// Equality and operator< (lexicographic) are well defined, which makes
// every tie-break in the optimizer reproducible.
class NodeSet {
public:
    NodeSet() = default;

    NodeSet(std::initializer_list<int> nodes) : members_(nodes) { canonicalize(); }

    explicit NodeSet(std::vector<int> nodes) : members_(std::move(nodes)) { canonicalize(); }

    static NodeSet full(int n) {
        NodeSet s;
        s.members_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s.members_[static_cast<std::size_t>(i)] = i;
        return s;
    }

    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(int node) const {
        return std::binary_search(members_.begin(), members_.end(), node);
    }

    // Returns this ∪ {node}; no-op copy if already present.
    NodeSet with(int node) const {
        NodeSet out(*this);
        auto it = std::lower_bound(out.members_.begin(), out.members_.end(), node);
        if (it == out.members_.end() || *it != node) out.members_.insert(it, node);
        return out;
    }

    // Returns this ∖ {node}.
    NodeSet without(int node) const {
        NodeSet out(*this);
        auto it = std::lower_bound(out.members_.begin(), out.members_.end(), node);
        if (it != out.members_.end() && *it == node) out.members_.erase(it);
        return out;
    }

    NodeSet set_union(const NodeSet& other) const {
        NodeSet out;
        out.members_.reserve(members_.size() + other.members_.size());
        std::set_union(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end(),
                       std::back_inserter(out.members_));
        return out;
    }

    NodeSet set_difference(const NodeSet& other) const {
        NodeSet out;
        std::set_difference(members_.begin(), members_.end(),
                            other.members_.begin(), other.members_.end(),
                            std::back_inserter(out.members_));
        return out;
    }

    bool is_subset_of(const NodeSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    bool intersects(const NodeSet& other) const {
        auto a = members_.begin();
        auto b = other.members_.begin();
        while (a != members_.end() && b != other.members_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    const std::vector<int>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;
    friend auto operator<=>(const NodeSet& a, const NodeSet& b) {
        return std::lexicographical_compare_three_way(
            a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end());
    }

private:
    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<int> members_;
};

// Ordering used everywhere a family of sets is listed: cardinality first,
// then lexicographic.
inline bool card_lex_less(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct NodeSetHash {
    std::size_t operator()(const NodeSet& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace sinkopt
