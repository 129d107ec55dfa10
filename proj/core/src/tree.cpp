#include "treeshift/tree.hpp"

#include <algorithm>

namespace treeshift {

DirectedTree DirectedTree::from_parent_map(std::vector<VertexId> vertices,
                                           std::map<VertexId, VertexId> parent) {
    if (vertices.empty())
        throw StructuralError("tree: vertex set must be nonempty");

    DirectedTree tree;
    tree.vertices_ = std::move(vertices);
    tree.parent_ = std::move(parent);

    {
        std::set<VertexId> seen;
        for (const auto& v : tree.vertices_)
            if (!seen.insert(v).second)
                throw StructuralError("tree: duplicate vertex id '" + v + "'");
        if (seen.size() != tree.parent_.size())
            throw StructuralError("tree: parent map does not cover the vertex set");
        for (const auto& [child, par] : tree.parent_) {
            if (!seen.count(child) || !seen.count(par))
                throw StructuralError("tree: parent map mentions unknown vertex");
        }
    }

    tree.index();
    return tree;
}

DirectedTree DirectedTree::trivial(VertexId root) {
    std::map<VertexId, VertexId> parent;
    parent[root] = root;
    return from_parent_map({root}, std::move(parent));
}

void DirectedTree::index() {
    // Locate the unique fixed point; anything on a longer parent cycle
    // violates the defining condition p^n(v) = v => p(v) = v.
    std::optional<VertexId> root;
    for (const auto& [child, par] : parent_) {
        if (child == par) {
            if (root)
                throw StructuralError("tree: more than one root ('" + *root + "', '" + child + "')");
            root = child;
        }
    }
    if (!root)
        throw StructuralError("tree: parent map has a cycle and no root");
    root_ = *root;

    // Depth by walking to the root; a walk longer than |V| is a proper cycle.
    depth_[root_] = 0;
    for (const auto& v : vertices_) {
        std::vector<VertexId> path;
        VertexId cur = v;
        while (!depth_.count(cur)) {
            path.push_back(cur);
            cur = parent_.at(cur);
            if (path.size() > vertices_.size())
                throw StructuralError("tree: cycle through vertex '" + v + "'");
        }
        std::uint64_t d = depth_.at(cur);
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            depth_[*it] = ++d;
    }

    for (const auto& v : vertices_) {
        children_[v]; // ensure the entry exists, leaves included
        height_ = std::max(height_, depth_.at(v));
    }
    for (const auto& v : vertices_) {
        const VertexId& par = parent_.at(v);
        if (par != v)
            children_[par].push_back(v);
    }
}

const VertexId& DirectedTree::parent_of(const VertexId& v) const {
    auto it = parent_.find(v);
    if (it == parent_.end())
        throw StructuralError("tree: unknown vertex '" + v + "'");
    return it->second;
}

const std::vector<VertexId>& DirectedTree::children(const VertexId& v) const {
    auto it = children_.find(v);
    if (it == children_.end())
        throw StructuralError("tree: unknown vertex '" + v + "'");
    return it->second;
}

std::vector<VertexId> DirectedTree::children_k(const VertexId& v, std::uint64_t k) const {
    if (!contains(v))
        throw StructuralError("tree: unknown vertex '" + v + "'");
    std::vector<VertexId> level{v};
    for (std::uint64_t step = 0; step < k && !level.empty(); ++step) {
        std::vector<VertexId> next;
        for (const auto& u : level) {
            const auto& kids = children(u);
            next.insert(next.end(), kids.begin(), kids.end());
        }
        level = std::move(next);
    }
    return level;
}

std::vector<VertexId> DirectedTree::descendants(const VertexId& v) const {
    if (!contains(v))
        throw StructuralError("tree: unknown vertex '" + v + "'");
    std::vector<VertexId> out;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
        VertexId cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        const auto& kids = children(cur);
        // push in reverse so the output follows child order
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

std::uint64_t DirectedTree::depth(const VertexId& v) const {
    auto it = depth_.find(v);
    if (it == depth_.end())
        throw StructuralError("tree: unknown vertex '" + v + "'");
    return it->second;
}

bool is_leafless(const DirectedTree& tree, const std::set<VertexId>& tails) {
    for (const auto& v : tree.vertices())
        if (tree.degree(v) == 0 && !tails.count(v))
            return false;
    return true;
}

RootedSum rooted_sum(std::span<const DirectedTree> members) {
    if (members.empty())
        throw StructuralError("rooted_sum: empty family");

    RootedSum out;
    out.new_root = "root";

    std::vector<VertexId> vertices{out.new_root};
    std::map<VertexId, VertexId> parent;
    parent[out.new_root] = out.new_root;

    for (std::size_t j = 0; j < members.size(); ++j) {
        const DirectedTree& member = members[j];
        std::string prefix = std::to_string(j + 1) + "/";
        std::map<VertexId, VertexId> embed;
        for (const auto& v : member.vertices()) {
            VertexId nv = prefix + v;
            embed[v] = nv;
            vertices.push_back(nv);
            const VertexId& par = member.parent_of(v);
            parent[nv] = (par == v) ? out.new_root : prefix + par;
        }
        out.member_embedding.push_back(std::move(embed));
    }

    out.tree = DirectedTree::from_parent_map(std::move(vertices), std::move(parent));
    return out;
}

BackwardTreeExtension backward_extend_tree(const DirectedTree& tree, std::uint64_t k) {
    BackwardTreeExtension out;
    if (k == 0) {
        out.tree = tree;
        return out;
    }

    std::vector<VertexId> vertices = tree.vertices();
    std::map<VertexId, VertexId> parent;
    for (const auto& v : vertices)
        parent[v] = tree.parent_of(v);

    auto fresh = [&](std::uint64_t j) {
        VertexId id = "ext:" + std::to_string(j);
        while (tree.contains(id))
            id += "'";
        return id;
    };

    VertexId below = tree.root();
    for (std::uint64_t j = 1; j <= k; ++j) {
        VertexId node = fresh(j);
        vertices.push_back(node);
        parent[below] = node;
        parent[node] = node; // provisional root, overwritten on the next step
        out.chain.push_back(node);
        below = node;
    }

    out.tree = DirectedTree::from_parent_map(std::move(vertices), std::move(parent));
    return out;
}

DirectedTree subtree(const DirectedTree& tree, const VertexId& v) {
    std::vector<VertexId> vertices = tree.descendants(v);
    std::map<VertexId, VertexId> parent;
    for (const auto& u : vertices)
        parent[u] = (u == v) ? v : tree.parent_of(u);
    return DirectedTree::from_parent_map(std::move(vertices), std::move(parent));
}

} // namespace treeshift
