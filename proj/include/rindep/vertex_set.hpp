#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace rindep {

// Sorted, duplicate-free set of vertex ids. Value type, cheap to copy at the
// sizes this project works with.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) : v_(ids) { normalize(); }
    explicit VertexSet(std::vector<int> ids) : v_(std::move(ids)) { normalize(); }

    // The caller guarantees sortedness and uniqueness; skips normalization.
    static VertexSet from_sorted(std::vector<int> ids) {
        VertexSet s;
        s.v_ = std::move(ids);
        return s;
    }

    bool contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int operator[](int i) const { return v_[i]; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& ids() const { return v_; }

    VertexSet unioned(const VertexSet& other) const {
        std::vector<int> out;
        out.reserve(v_.size() + other.v_.size());
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    VertexSet minus(const VertexSet& other) const {
        std::vector<int> out;
        out.reserve(v_.size());
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    VertexSet intersect(const VertexSet& other) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    VertexSet with(int v) const {
        VertexSet out = *this;
        auto it = std::lower_bound(out.v_.begin(), out.v_.end(), v);
        if (it == out.v_.end() || *it != v) out.v_.insert(it, v);
        return out;
    }

    VertexSet without(int v) const {
        VertexSet out = *this;
        auto it = std::lower_bound(out.v_.begin(), out.v_.end(), v);
        if (it != out.v_.end() && *it == v) out.v_.erase(it);
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.v_ <=> b.v_; }

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    std::vector<int> v_;
};

} // namespace rindep
