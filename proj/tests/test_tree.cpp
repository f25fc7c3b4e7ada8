#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fitforge/tree_calculus.hpp"
#include "test_util.hpp"

using namespace fitforge;

namespace {

Poly P(const std::string& text, const TreeVars& tv) { return parse_poly(text, tv.vars); }

MonomialIdeal MI(const std::string& text, const TreeVars& tv) {
  return IdealGens(parse_ideal_text(text, tv.vars)).as_monomial();
}

const TreeChartNode* chart(const TreeReport& r, const std::vector<std::string>& path) {
  const TreeChartNode* node = &r.root;
  for (auto& label : path) {
    const TreeChartNode* next = nullptr;
    for (auto& c : node->children)
      if (c.path.back() == label) next = &c;
    REQUIRE(next != nullptr);
    node = next;
  }
  return node;
}

// All rooted tree shapes with n vertices, as canonical nested-brace strings.
// Children are generated as non-decreasing sequences of smaller shapes so
// each unordered shape appears once.
std::vector<std::string> shapes(int n) {
  static std::map<int, std::vector<std::string>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> out;
  if (n == 1) {
    out = {"{}"};
  } else {
    // Choose children multisets: recursively pick a first child of size s and
    // a remainder whose children are all >= that child in (size, string) order.
    std::function<void(int, const std::pair<int, std::string>&, std::string)> build =
        [&](int remaining, const std::pair<int, std::string>& min_child, std::string acc) {
          if (remaining == 0) {
            out.push_back("{" + acc + "}");
            return;
          }
          for (int s = min_child.first; s <= remaining; ++s)
            for (auto& child : shapes(s)) {
              if (s == min_child.first && child < min_child.second) continue;
              build(remaining - s, {s, child}, acc + child);
            }
        };
    build(n - 1, {1, ""}, "");
  }
  cache[n] = out;
  return out;
}

// Convert a canonical shape string into tree text with fresh labels.
std::string shape_to_text(const std::string& shape) {
  int next_label = 0;
  std::function<std::string(std::size_t&)> walk = [&](std::size_t& pos) -> std::string {
    REQUIRE(shape[pos] == '{');
    ++pos;
    std::string label = "v" + std::to_string(next_label++);
    std::vector<std::string> children;
    while (shape[pos] == '{') children.push_back(walk(pos));
    REQUIRE(shape[pos] == '}');
    ++pos;
    if (children.empty()) return label;
    std::string out = "[" + label;
    for (auto& c : children) out += " " + c;
    return out + "]";
  };
  std::size_t pos = 1;
  std::string body;
  std::vector<std::string> children;
  while (shape[pos] == '{') children.push_back(walk(pos));
  std::string out = "[o";
  for (auto& c : children) out += " " + c;
  return out + "]";
}

std::multiset<int> terminal_weights(const WTree& t) {
  std::multiset<int> out;
  for (int v : t.terminal_vertices()) out.insert(t.vertex(v).weight);
  return out;
}

}  // namespace

TEST_CASE("parsing, rendering and the surgeries") {
  WTree g = WTree::parse("[o a [b c d]]");
  CHECK(g.size() == 5);
  CHECK(g.render() == "[o a [b c d]]");
  CHECK(g.terminally_weighted());
  CHECK(g.semistable());
  CHECK(g.total_weight() == 3);
  CHECK(g.branch_vertex() == g.root());

  CHECK(WTree::parse("[o a:2]").total_weight() == 2);
  CHECK(WTree::parse("[o [a [b]]]").is_path_tree());
  CHECK_THROWS_AS(WTree::parse("[o a a]"), Error);
  CHECK_THROWS_AS(WTree::parse("[o [a b]:2]"), Error);
  CHECK_THROWS_AS(WTree::parse("[o a"), SyntaxError);

  // Advancing a prunes everything into a single terminal of weight 3.
  WTree ga = g.advanced(*g.find("a"));
  CHECK(ga.render() == "[o a:3]");
  CHECK(ga.is_path_tree());

  // Advancing b re-attaches a under b; no pruning triggers.
  WTree gb = g.advanced(*g.find("b"));
  CHECK(gb.render() == "[o [b a c d]]");

  WTree g2 = WTree::parse("[o [a c d] [b e f]]");
  CHECK(g2.advanced(*g2.find("a")).render() == "[o [a c d [b e f]]]");
  CHECK(g2.advanced(*g2.find("b")).render() == "[o [b [a c d] e f]]");

  auto transforms = monoidal_transforms(g);
  REQUIRE(transforms.size() == 2);
  CHECK(transforms[0].same_shape(ga));
  CHECK(transforms[1].same_shape(gb));
  CHECK(monoidal_transforms(WTree::parse("[o [a [b]]]")).empty());
}

TEST_CASE("ideals and equations of the first worked tree") {
  WTree g = WTree::parse("[o a [b c d]]");
  TreeVars tv = tree_vars(g);
  TreeIdeals ideals = tree_ideals(g, tv);
  REQUIRE(ideals.I.has_value());
  CHECK(*ideals.I == MI("(z_a, z_b)", tv));
  CHECK(ideals.J == MI("(z_a, z_b*z_c, z_b*z_d)", tv));
  CHECK(equations_Phi(g, tv) == P("z_a*w_a + z_b*z_c*w_c + z_b*z_d*w_d", tv));

  // A path tree has no branch vertex and a principal J.
  WTree path = WTree::parse("[o [a [b]]]");
  TreeVars ptv = tree_vars(path);
  TreeIdeals pideals = tree_ideals(path, ptv);
  CHECK_FALSE(pideals.I.has_value());
  CHECK(pideals.J == MI("(z_a*z_b)", ptv));
}

TEST_CASE("chart tree of the first worked tree") {
  TreeReport r = vz_process(WTree::parse("[o a [b c d]]"), 8);
  const TreeVars& tv = r.tv;

  const TreeChartNode* a = chart(r, {"a"});
  CHECK(a->path_tree);
  CHECK(a->phi_factor == P("z_a", tv).leading_monomial());
  CHECK(a->phi_residual == P("w_a + z_b*z_c*w_c + z_b*z_d*w_d", tv));
  CHECK(a->j_pull.exceptional == P("z_a", tv).leading_monomial());
  CHECK(a->j_pull.residual.is_unit());
  CHECK(a->principal);
  CHECK(a->snc);

  const TreeChartNode* b = chart(r, {"b"});
  CHECK_FALSE(b->path_tree);
  CHECK(b->tree.render() == "[o [b a c d]]");
  CHECK(b->j_pull.exceptional == P("z_b", tv).leading_monomial());
  CHECK(b->j_pull.residual.as_monomial() == MI("(z_a, z_c, z_d)", tv));
  CHECK(b->phi_residual == P("z_a*w_a + z_c*w_c + z_d*w_d", tv));

  for (auto [label, expected] : std::map<std::string, std::string>{
           {"a", "(z_a*z_b)"}, {"c", "(z_b*z_c)"}, {"d", "(z_b*z_d)"}}) {
    const TreeChartNode* node = chart(r, {"b", label});
    CHECK(node->path_tree);
    CHECK(node->principal);
    CHECK(node->snc);
    MonomialIdeal pulled = ideal_product(MonomialIdeal::principal(node->j_pull.exceptional),
                                         node->j_pull.residual.as_monomial());
    CHECK(pulled == MI(expected, tv));
  }
}

TEST_CASE("chart tree of the second worked tree") {
  TreeReport r = vz_process(WTree::parse("[o [a c d] [b e f]]"), 8);
  const TreeVars& tv = r.tv;
  CHECK(*r.ideals.I == MI("(z_a, z_b)", tv));
  CHECK(r.ideals.J == MI("(z_a*z_c, z_a*z_d, z_b*z_e, z_b*z_f)", tv));
  CHECK(r.phi == P("z_a*z_c*w_c + z_a*z_d*w_d + z_b*z_e*w_e + z_b*z_f*w_f", tv));

  auto pulled_j = [&](const std::vector<std::string>& path) {
    const TreeChartNode* node = chart(r, path);
    return ideal_product(MonomialIdeal::principal(node->j_pull.exceptional),
                         node->j_pull.residual.as_monomial());
  };
  CHECK(pulled_j({"a"}) == ideal_product(MonomialIdeal::principal(P("z_a", tv).leading_monomial()),
                                         MI("(z_c, z_d, z_b*z_e, z_b*z_f)", tv)));
  CHECK(pulled_j({"a", "c"}) == MI("(z_a*z_c)", tv));
  CHECK(pulled_j({"a", "d"}) == MI("(z_a*z_d)", tv));
  CHECK(pulled_j({"a", "b", "c"}) == MI("(z_a*z_b*z_c)", tv));
  CHECK(pulled_j({"a", "b", "d"}) == MI("(z_a*z_b*z_d)", tv));
  CHECK(pulled_j({"a", "b", "e"}) == MI("(z_a*z_b*z_e)", tv));
  CHECK(pulled_j({"a", "b", "f"}) == MI("(z_a*z_b*z_f)", tv));
  CHECK(pulled_j({"b", "a", "c"}) == MI("(z_a*z_b*z_c)", tv));
  CHECK(pulled_j({"b", "e"}) == MI("(z_b*z_e)", tv));
  CHECK(pulled_j({"b", "f"}) == MI("(z_b*z_f)", tv));

  // Terminal chart (a, b, c): the pulled equation factors with pivot w_c.
  const TreeChartNode* abc = chart(r, {"a", "b", "c"});
  CHECK(abc->phi_factor == P("z_a*z_b*z_c", tv).leading_monomial());
  CHECK(abc->phi_residual == P("w_c + z_d*w_d + z_e*w_e + z_f*w_f", tv));
  CHECK(abc->snc);

  // The advancing identity in both root charts.
  CHECK(check_advancing_identity(WTree::parse("[o [a c d] [b e f]]"), "a"));
  CHECK(check_advancing_identity(WTree::parse("[o [a c d] [b e f]]"), "b"));
  CHECK(check_advancing_identity(WTree::parse("[o a [b c d]]"), "b"));
  CHECK_THROWS_AS(check_advancing_identity(WTree::parse("[o a [b c d]]"), "a"), Error);
}

TEST_CASE("exhaustive small trees: termination, principal J, snc, advancing identity") {
  int checked = 0;
  for (int nonroot = 1; nonroot <= 6; ++nonroot) {
    for (auto& shape : shapes(nonroot + 1)) {
      WTree g = WTree::parse(shape_to_text(shape));
      REQUIRE(g.terminally_weighted());
      REQUIRE(g.semistable());
      ++checked;

      TreeReport r = vz_process(g, 12);  // throws on non-termination
      std::vector<const TreeChartNode*> stack{&r.root};
      while (!stack.empty()) {
        const TreeChartNode* node = stack.back();
        stack.pop_back();
        if (node->path_tree) {
          CHECK(node->principal);
          CHECK(node->snc);
          // The pulled J agrees with the J of the transformed tree.
          CHECK(ideal_product(MonomialIdeal::principal(node->j_pull.exceptional),
                              node->j_pull.residual.as_monomial()) ==
                tree_ideals(node->tree, r.tv).J);
        }
        for (auto& c : node->children) stack.push_back(&c);
      }

      if (auto bv = g.branch_vertex()) {
        for (int child : g.vertex(*bv).children) {
          WTree adv = g.advanced(child);
          CHECK(adv.total_weight() == g.total_weight());
          if (adv.size() == g.size())  // no pruning: terminal weights survive
            CHECK(terminal_weights(adv) == terminal_weights(g));
          if (!adv.is_path_tree())
            CHECK(check_advancing_identity(g, g.vertex(child).label));
        }
      }
    }
  }
  CHECK(checked == 1 + 2 + 4 + 9 + 20 + 48);
}
