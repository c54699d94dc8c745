#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incalg/errors.hpp"

namespace incalg {

/// Directed multigraph with labeled vertices; arrow multiplicities are positive.
struct Quiver {
    struct Arrow {
        size_t source, target;
        size_t multiplicity = 1;
        bool operator==(const Arrow&) const = default;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver&) const = default;
    bool has_arrow(size_t src, size_t dst) const;
    /// Vertex indices of some oriented cycle, empty if acyclic. Loops count.
    std::vector<size_t> find_cycle() const;
    /// Connected components of the underlying undirected graph, by vertex.
    std::vector<size_t> component_ids() const;
};

/// Finite poset: labeled elements with a full order relation matrix.
class Poset {
public:
    /// Reflexive-transitive closure of the generating pairs; throws
    /// AntisymmetryViolation when the closure contains a directed cycle.
    static Poset from_generators(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

    /// From a precomputed relation; validates reflexivity, antisymmetry, transitivity.
    static Poset from_relation(const std::vector<std::string>& labels,
                               const std::vector<std::vector<bool>>& leq);

    static Poset chain(size_t n);      // labels "x0" < "x1" < ...
    static Poset antichain(size_t n);  // no relations
    static Poset diamond();            // 0 < a,b < 1

    size_t size() const { return labels_.size(); }
    const std::vector<std::string>& elements() const { return labels_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    size_t index(const std::string& label) const;  // throws UnknownElement

    bool leq(size_t i, size_t j) const { return leq_[i][j]; }
    bool less(size_t i, size_t j) const { return i != j && leq_[i][j]; }

    /// Cover relations x ⋖ y as a quiver, multiplicity 1.
    Quiver hasse() const;
    std::vector<std::pair<size_t, size_t>> covers() const;

    /// {y : y ≤ x}, sorted by index (an Alexandrov open).
    std::vector<size_t> down_set(size_t x) const;
    std::vector<size_t> down_set(const std::string& x) const { return down_set(index(x)); }

    bool is_connected() const;

    /// All strict chains x0 < ... < xk, lexicographic in element indices.
    std::vector<std::vector<size_t>> chains(size_t k) const;

    /// Strict comparable pairs (x,y), x < y, lexicographic.
    std::vector<std::pair<size_t, size_t>> strict_pairs() const;
    /// All comparable pairs (x,y), x ≤ y, lexicographic.
    std::vector<std::pair<size_t, size_t>> comparable_pairs() const;

    bool is_down_closed(const std::vector<size_t>& subset) const;

    bool operator==(const Poset&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

/// Poset isomorphism search (backtracking; intended for desk-scale posets).
/// Returns a mapping a→b as an index vector, or empty optional.
std::optional<std::vector<size_t>> poset_isomorphism(const Poset& a, const Poset& b);

}  // namespace incalg
