#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitforge/errors.hpp"

namespace fitforge {

// Rooted tree with non-negative integer weights, terminally weighted:
// the positively weighted vertices are exactly the non-root leaves.
// Children keep their as-written order.
class WTree {
public:
  struct Vertex {
    std::string label;
    int parent = -1;
    std::vector<int> children;
    int weight = 0;
  };

  // Grammar: `[label children...]`, optional `:weight` suffix on leaves;
  // a bare identifier is a leaf. Unweighted leaves default to weight 1.
  static WTree parse(const std::string& text);

  const std::vector<Vertex>& vertices() const { return verts_; }
  int root() const { return 0; }
  int size() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int v) const { return verts_.at(v); }
  std::optional<int> find(const std::string& label) const;

  bool is_leaf(int v) const { return verts_[v].children.empty(); }
  bool is_path_tree() const { return !branch_vertex().has_value(); }

  // Last vertex of the trunk (the maximal initial chain of single-child
  // vertices) when it is not terminal.
  std::optional<int> branch_vertex() const;

  // Non-root vertices in depth-first (as-written) order.
  std::vector<int> non_root_vertices() const;
  // Non-root leaves in depth-first order.
  std::vector<int> terminal_vertices() const;

  // weight > 0 exactly on non-root leaves.
  bool terminally_weighted() const;
  // Every non-root vertex with weight zero has at least two edges.
  bool semistable() const;

  int total_weight() const;

  // Remove all descendants of v, adding their weights to v.
  WTree pruned(int v) const;
  // Re-attach every sibling subtree of v under v, then prune along
  // positively weighted non-terminal vertices as long as possible.
  WTree advanced(int v) const;

  std::string render() const;

  // Structural equality up to vertex numbering: labels, shape, weights.
  bool same_shape(const WTree& other) const;

private:
  int add_vertex(const std::string& label, int parent, int weight);
  std::vector<Vertex> verts_;
};

// One tree per immediate descendant of the branch vertex, by advancing.
// Empty for path trees.
std::vector<WTree> monoidal_transforms(const WTree& g);

}  // namespace fitforge
