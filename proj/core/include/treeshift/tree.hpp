#pragma once

#include "treeshift/errors.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace treeshift {

/// Vertex label, unique within one tree. Serialized verbatim.
using VertexId = std::string;

/// Rooted directed tree given by its parent function. The root is the unique
/// fixed point of the parent map and every vertex reaches it by iterating
/// parents; both facts are validated on construction.
class DirectedTree {
public:
    // Empty placeholder; every query throws until a real tree is assigned.
    DirectedTree() = default;

    // `vertices` fixes the iteration order used everywhere (children lists,
    // traversals, serialization), so all downstream output is deterministic.
    static DirectedTree from_parent_map(std::vector<VertexId> vertices,
                                        std::map<VertexId, VertexId> parent);

    // Single-vertex tree.
    static DirectedTree trivial(VertexId root);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const VertexId& root() const { return root_; }
    std::size_t size() const { return vertices_.size(); }

    bool contains(const VertexId& v) const { return parent_.count(v) != 0; }

    const VertexId& parent_of(const VertexId& v) const;

    // Children of v, in vertex order; empty for a vertex of degree zero.
    const std::vector<VertexId>& children(const VertexId& v) const;

    std::size_t degree(const VertexId& v) const { return children(v).size(); }

    // The set of k-th children: {v} for k = 0, and for k >= 1 the vertices
    // whose k-fold parent is v without reaching v earlier.
    std::vector<VertexId> children_k(const VertexId& v, std::uint64_t k) const;

    // v together with all of its k-th children, k >= 1.
    std::vector<VertexId> descendants(const VertexId& v) const;

    std::uint64_t depth(const VertexId& v) const;

    // Max depth over all vertices.
    std::uint64_t height() const { return height_; }

    bool operator==(const DirectedTree& other) const {
        return vertices_ == other.vertices_ && parent_ == other.parent_;
    }

private:
    void index();

    std::vector<VertexId> vertices_;
    std::map<VertexId, VertexId> parent_;
    std::map<VertexId, std::vector<VertexId>> children_;
    std::map<VertexId, std::uint64_t> depth_;
    VertexId root_;
    std::uint64_t height_ = 0;
};

// True when every vertex has positive degree or carries a tail marker.
// A childless, untailed root also fails (it would be a dead end for orbits).
bool is_leafless(const DirectedTree& tree, const std::set<VertexId>& tails);

struct RootedSum {
    DirectedTree tree;
    VertexId new_root;
    // Per input tree: old id -> namespaced id ("<j>/<old>", j counted from 1).
    std::vector<std::map<VertexId, VertexId>> member_embedding;
};

// Fresh root whose children are the former roots. Input ids are namespaced so
// callers never have to pre-disjoint their vertex sets. Rejects empty input.
RootedSum rooted_sum(std::span<const DirectedTree> members);

struct BackwardTreeExtension {
    DirectedTree tree;
    // chain[0] is the parent of the old root, chain.back() the new root;
    // empty for k = 0. Old vertices keep their ids.
    std::vector<VertexId> chain;
};

// Adds a k-chain of new ancestors above the root; k = 0 returns the tree as is.
BackwardTreeExtension backward_extend_tree(const DirectedTree& tree, std::uint64_t k);

// Restriction to the descendants of v, rooted at v.
DirectedTree subtree(const DirectedTree& tree, const VertexId& v);

} // namespace treeshift
