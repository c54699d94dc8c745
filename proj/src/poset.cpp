#include "incalg/poset.hpp"

#include <algorithm>
#include <set>

namespace incalg {

bool Quiver::has_arrow(size_t src, size_t dst) const {
    for (const auto& a : arrows)
        if (a.source == src && a.target == dst) return true;
    return false;
}

std::vector<size_t> Quiver::find_cycle() const {
    size_t n = vertices.size();
    std::vector<std::vector<size_t>> adj(n);
    for (const auto& a : arrows) adj[a.source].push_back(a.target);
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<size_t> stack;
    std::vector<size_t> cycle;
    auto dfs = [&](auto&& self, size_t v) -> bool {
        state[v] = 1;
        stack.push_back(v);
        for (size_t w : adj[v]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[w] == 0 && self(self, w)) return true;
        }
        stack.pop_back();
        state[v] = 2;
        return false;
    };
    for (size_t v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(dfs, v)) return cycle;
    return {};
}

std::vector<size_t> Quiver::component_ids() const {
    size_t n = vertices.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : arrows) parent[find(a.source)] = find(a.target);
    std::vector<size_t> root(n), ids(n);
    for (size_t i = 0; i < n; ++i) root[i] = find(i);
    // Renumber components in order of first appearance.
    std::vector<size_t> seen;
    for (size_t i = 0; i < n; ++i) {
        auto it = std::find(seen.begin(), seen.end(), root[i]);
        if (it == seen.end()) {
            seen.push_back(root[i]);
            ids[i] = seen.size() - 1;
        } else {
            ids[i] = it - seen.begin();
        }
    }
    return ids;
}

Poset Poset::from_generators(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
    size_t n = labels.size();
    {
        std::set<std::string> dedup(labels.begin(), labels.end());
        if (dedup.size() != n) throw ParseError("duplicate poset labels");
    }
    Poset p;
    p.labels_ = labels;
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
    for (const auto& [a, b] : pairs) p.leq_[p.index(a)][p.index(b)] = true;
    // Warshall closure.
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (p.leq_[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (p.leq_[k][j]) p.leq_[i][j] = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (p.leq_[i][j] && p.leq_[j][i])
                throw AntisymmetryViolation("antisymmetry violated",
                                            {labels[i], labels[j], labels[i]});
    return p;
}

Poset Poset::from_relation(const std::vector<std::string>& labels,
                           const std::vector<std::vector<bool>>& leq) {
    size_t n = labels.size();
    if (leq.size() != n) throw ShapeError("relation matrix size mismatch");
    for (const auto& row : leq)
        if (row.size() != n) throw ShapeError("relation matrix size mismatch");
    for (size_t i = 0; i < n; ++i)
        if (!leq[i][i]) throw ParseError("relation not reflexive");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i])
                throw AntisymmetryViolation("antisymmetry violated", {labels[i], labels[j], labels[i]});
            if (leq[i][j])
                for (size_t k = 0; k < n; ++k)
                    if (leq[j][k] && !leq[i][k]) throw ParseError("relation not transitive");
        }
    Poset p;
    p.labels_ = labels;
    p.leq_ = leq;
    return p;
}

Poset Poset::chain(size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    for (size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
    return from_generators(labels, pairs);
}

Poset Poset::antichain(size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return from_generators(labels, {});
}

Poset Poset::diamond() {
    return from_generators({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

size_t Poset::index(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw UnknownElement("unknown poset element: " + label);
}

std::vector<std::pair<size_t, size_t>> Poset::covers() const {
    std::vector<std::pair<size_t, size_t>> result;
    size_t n = size();
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!less(x, y)) continue;
            bool cover = true;
            for (size_t z = 0; z < n && cover; ++z)
                if (less(x, z) && less(z, y)) cover = false;
            if (cover) result.emplace_back(x, y);
        }
    return result;
}

Quiver Poset::hasse() const {
    Quiver q;
    q.vertices = labels_;
    for (auto [x, y] : covers()) q.arrows.push_back({x, y, 1});
    return q;
}

std::vector<size_t> Poset::down_set(size_t x) const {
    if (x >= size()) throw UnknownElement("element index out of range");
    std::vector<size_t> result;
    for (size_t y = 0; y < size(); ++y)
        if (leq_[y][x]) result.push_back(y);
    return result;
}

bool Poset::is_connected() const {
    if (size() == 0) return true;
    auto ids = hasse().component_ids();
    return *std::max_element(ids.begin(), ids.end()) == 0;
}

std::vector<std::vector<size_t>> Poset::chains(size_t k) const {
    std::vector<std::vector<size_t>> result;
    std::vector<size_t> current;
    auto extend = [&](auto&& self, size_t depth) -> void {
        if (depth == k + 1) {
            result.push_back(current);
            return;
        }
        size_t start = current.empty() ? 0 : 0;
        for (size_t x = start; x < size(); ++x) {
            if (!current.empty() && !less(current.back(), x)) continue;
            current.push_back(x);
            self(self, depth + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return result;
}

std::vector<std::pair<size_t, size_t>> Poset::strict_pairs() const {
    std::vector<std::pair<size_t, size_t>> result;
    for (size_t x = 0; x < size(); ++x)
        for (size_t y = 0; y < size(); ++y)
            if (less(x, y)) result.emplace_back(x, y);
    return result;
}

std::vector<std::pair<size_t, size_t>> Poset::comparable_pairs() const {
    std::vector<std::pair<size_t, size_t>> result;
    for (size_t x = 0; x < size(); ++x)
        for (size_t y = 0; y < size(); ++y)
            if (leq_[x][y]) result.emplace_back(x, y);
    return result;
}

bool Poset::is_down_closed(const std::vector<size_t>& subset) const {
    std::vector<bool> in(size(), false);
    for (size_t x : subset) in[x] = true;
    for (size_t x : subset)
        for (size_t y = 0; y < size(); ++y)
            if (leq_[y][x] && !in[y]) return false;
    return true;
}

std::optional<std::vector<size_t>> poset_isomorphism(const Poset& a, const Poset& b) {
    size_t n = a.size();
    if (b.size() != n) return std::nullopt;
    // Invariant per element: (|down-set|, |up-set|) must match under any iso.
    auto profile = [](const Poset& p, size_t x) {
        size_t down = 0, up = 0;
        for (size_t y = 0; y < p.size(); ++y) {
            if (p.leq(y, x)) ++down;
            if (p.leq(x, y)) ++up;
        }
        return std::pair<size_t, size_t>(down, up);
    };
    std::vector<size_t> map(n, n);
    std::vector<bool> used(n, false);
    auto place = [&](auto&& self, size_t x) -> bool {
        if (x == n) return true;
        for (size_t y = 0; y < n; ++y) {
            if (used[y] || profile(a, x) != profile(b, y)) continue;
            bool ok = true;
            for (size_t z = 0; z < x && ok; ++z)
                if (a.leq(x, z) != b.leq(y, map[z]) || a.leq(z, x) != b.leq(map[z], y)) ok = false;
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (self(self, x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (place(place, 0)) return map;
    return std::nullopt;
}

}  // namespace incalg
