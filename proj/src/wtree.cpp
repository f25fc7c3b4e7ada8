#include "fitforge/wtree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fitforge {

namespace {

struct TreeTokens {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected label", pos);
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    return text.substr(start, pos - start);
  }
  int weight_suffix() {
    if (peek() != ':') return -1;
    ++pos;
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected weight", pos);
    return std::stoi(text.substr(start, pos - start));
  }
};

}  // namespace

int WTree::add_vertex(const std::string& label, int parent, int weight) {
  for (auto& v : verts_)
    if (v.label == label) throw Error("duplicate-label", "duplicate vertex label '" + label + "'");
  verts_.push_back({label, parent, {}, weight});
  int id = static_cast<int>(verts_.size()) - 1;
  if (parent >= 0) verts_[parent].children.push_back(id);
  return id;
}

WTree WTree::parse(const std::string& text) {
  WTree tree;
  TreeTokens tok{text};

  std::function<void(int)> parse_children = [&](int parent) {
    while (tok.peek() != ']') {
      if (tok.peek() == '[') {
        ++tok.pos;
        std::string label = tok.identifier();
        int w = tok.weight_suffix();
        int id = tree.add_vertex(label, parent, 0);
        parse_children(id);
        if (tok.peek() != ']') throw SyntaxError("expected ']'", tok.pos);
        ++tok.pos;
        if (w >= 0) {
          if (!tree.verts_[id].children.empty())
            throw Error("weight-on-non-leaf", "weight given on non-leaf '" + label + "'");
          tree.verts_[id].weight = w;
        } else if (tree.verts_[id].children.empty() && parent >= 0) {
          tree.verts_[id].weight = 1;
        }
      } else {
        std::string label = tok.identifier();
        int w = tok.weight_suffix();
        tree.add_vertex(label, parent, w >= 0 ? w : 1);
      }
    }
  };

  if (tok.peek() != '[') throw SyntaxError("expected '['", tok.pos);
  ++tok.pos;
  std::string root_label = tok.identifier();
  tree.add_vertex(root_label, -1, 0);
  parse_children(0);
  if (tok.peek() != ']') throw SyntaxError("expected ']'", tok.pos);
  ++tok.pos;
  tok.skip_ws();
  if (tok.pos != text.size()) throw SyntaxError("trailing input", tok.pos);
  return tree;
}

std::optional<int> WTree::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (verts_[i].label == label) return i;
  return std::nullopt;
}

std::optional<int> WTree::branch_vertex() const {
  int v = root();
  while (verts_[v].children.size() == 1) v = verts_[v].children.front();
  if (is_leaf(v)) return std::nullopt;  // path tree
  return v;
}

std::vector<int> WTree::non_root_vertices() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    if (v != root()) out.push_back(v);
    for (int c : verts_[v].children) walk(c);
  };
  walk(root());
  return out;
}

std::vector<int> WTree::terminal_vertices() const {
  std::vector<int> out;
  for (int v : non_root_vertices())
    if (is_leaf(v)) out.push_back(v);
  return out;
}

bool WTree::terminally_weighted() const {
  for (int v = 0; v < size(); ++v) {
    bool should = v != root() && is_leaf(v);
    if (should != (verts_[v].weight > 0)) return false;
  }
  return true;
}

bool WTree::semistable() const {
  for (int v : non_root_vertices())
    if (verts_[v].weight == 0 && verts_[v].children.empty()) return false;
  return true;
}

int WTree::total_weight() const {
  int w = 0;
  for (auto& v : verts_) w += v.weight;
  return w;
}

WTree WTree::pruned(int v) const {
  WTree out;
  std::function<void(int, int)> copy = [&](int src, int parent) {
    bool prune_here = src == v;
    int w = verts_[src].weight;
    if (prune_here) {
      // accumulate the weights of all descendants
      std::function<int(int)> sum = [&](int u) {
        int s = verts_[u].weight;
        for (int c : verts_[u].children) s += sum(c);
        return s;
      };
      w = sum(src);
    }
    int id = out.add_vertex(verts_[src].label, parent, w);
    if (!prune_here)
      for (int c : verts_[src].children) copy(c, id);
  };
  copy(root(), -1);
  return out;
}

WTree WTree::advanced(int v) const {
  if (v == root()) throw Error("advance-root", "cannot advance the root");
  int parent = verts_[v].parent;

  // Children of v after re-attachment: its original children plus its
  // sibling subtrees, ordered by preorder position in this tree.
  std::set<int> new_children(verts_[v].children.begin(), verts_[v].children.end());
  for (int c : verts_[parent].children)
    if (c != v) new_children.insert(c);
  std::vector<int> ordered;
  std::function<void(int)> order_walk = [&](int u) {
    if (new_children.count(u)) ordered.push_back(u);
    for (int c : verts_[u].children) order_walk(c);
  };
  order_walk(root());

  WTree out;
  std::function<void(int, int)> copy = [&](int src, int par) {
    int id = out.add_vertex(verts_[src].label, par, verts_[src].weight);
    if (src == parent) {
      int vid = out.add_vertex(verts_[v].label, id, verts_[v].weight);
      for (int c : ordered) copy(c, vid);
    } else {
      for (int c : verts_[src].children)
        if (c != v) copy(c, id);
    }
  };
  copy(root(), -1);

  // Prune along positively weighted non-terminal vertices as long as possible.
  for (;;) {
    bool changed = false;
    for (int u : out.non_root_vertices()) {
      if (out.verts_[u].weight > 0 && !out.is_leaf(u)) {
        out = out.pruned(u);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  return out;
}

std::string WTree::render() const {
  std::function<std::string(int)> walk = [&](int v) -> std::string {
    const Vertex& vx = verts_[v];
    if (is_leaf(v) && v != root()) {
      std::string s = vx.label;
      if (vx.weight != 1) s += ":" + std::to_string(vx.weight);
      return s;
    }
    std::string s = "[" + vx.label;
    for (int c : vx.children) s += " " + walk(c);
    return s + "]";
  };
  return walk(root());
}

bool WTree::same_shape(const WTree& other) const { return render() == other.render(); }

std::vector<WTree> monoidal_transforms(const WTree& g) {
  std::vector<WTree> out;
  auto bv = g.branch_vertex();
  if (!bv) return out;
  for (int c : g.vertex(*bv).children) out.push_back(g.advanced(c));
  return out;
}

}  // namespace fitforge
