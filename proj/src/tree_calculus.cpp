#include "fitforge/tree_calculus.hpp"

#include <algorithm>

namespace fitforge {

TreeVars tree_vars(const WTree& g) {
  TreeVars tv;
  std::vector<std::string> names;
  for (int v : g.non_root_vertices()) {
    tv.z[g.vertex(v).label] = static_cast<int>(names.size());
    names.push_back("z_" + g.vertex(v).label);
  }
  for (int v : g.terminal_vertices()) {
    tv.w[g.vertex(v).label] = static_cast<int>(names.size());
    names.push_back("w_" + g.vertex(v).label);
  }
  tv.vars = VarSet(names);
  return tv;
}

namespace {

int z_of(const TreeVars& tv, const std::string& label) {
  auto it = tv.z.find(label);
  if (it == tv.z.end()) throw unknown_variable("z_" + label);
  return it->second;
}

int w_of(const TreeVars& tv, const std::string& label) {
  auto it = tv.w.find(label);
  if (it == tv.w.end()) throw unknown_variable("w_" + label);
  return it->second;
}

// z_{[v,o]}: product of the z's on the path from just below the root down to v.
Monomial path_monomial(const WTree& g, const TreeVars& tv, int v) {
  Monomial m;
  for (int u = v; u != g.root(); u = g.vertex(u).parent)
    m = m * Monomial::variable(z_of(tv, g.vertex(u).label));
  return m;
}

}  // namespace

TreeIdeals tree_ideals(const WTree& g, const TreeVars& tv) {
  TreeIdeals out;
  if (auto bv = g.branch_vertex()) {
    std::vector<Monomial> gens;
    for (int c : g.vertex(*bv).children)
      gens.push_back(Monomial::variable(z_of(tv, g.vertex(c).label)));
    out.I = MonomialIdeal::from_generators(gens);
  }
  std::vector<Monomial> jgens;
  for (int v : g.terminal_vertices()) jgens.push_back(path_monomial(g, tv, v));
  out.J = MonomialIdeal::from_generators(jgens);
  return out;
}

Poly equations_Phi(const WTree& g, const TreeVars& tv) {
  Poly phi;
  for (int v : g.terminal_vertices())
    phi += Poly(path_monomial(g, tv, v)) * Poly::variable(w_of(tv, g.vertex(v).label));
  return phi;
}

bool snc_check(const Poly& residual, const TreeVars& tv) {
  for (auto& [m, c] : residual.terms()) {
    if (c != 1) continue;
    auto& exps = m.exponents();
    if (exps.size() != 1 || exps.begin()->second != 1) continue;
    int v = exps.begin()->first;
    bool is_w = false;
    for (auto& [label, idx] : tv.w)
      if (idx == v) is_w = true;
    if (!is_w) continue;
    bool divides_other = false;
    for (auto& [m2, c2] : residual.terms())
      if (!(m2 == m) && m2.exponent(v) > 0) divides_other = true;
    if (!divides_other) return true;
  }
  return false;
}

namespace {

void record_pullbacks(TreeChartNode& node, const Poly& root_phi, const IdealGens& root_j,
                      const TreeVars& tv) {
  // Factor only z-variables out of the pulled equation: the w's are fibre
  // coordinates, not exceptional divisors, and must stay in the residual.
  Poly pulled = root_phi.substitute(node.chart.subst);
  Monomial content = pulled.monomial_content();
  for (auto& [label, idx] : tv.w) content.set_exponent(idx, 0);
  node.phi_factor = content;
  node.phi_residual = pulled.divide_by_monomial(content);
  node.j_pull = pull_and_factor(node.chart, root_j);
  node.principal = node.j_pull.residual.is_unit();
  node.snc = snc_check(node.phi_residual, tv);
}

void expand_tree(TreeChartNode& node, const Poly& root_phi, const IdealGens& root_j,
                 const TreeVars& tv, int depth_left) {
  node.path_tree = node.tree.is_path_tree();
  record_pullbacks(node, root_phi, root_j, tv);
  if (node.path_tree) return;
  if (depth_left <= 0)
    throw Error("depth-exhausted", "chart recursion did not reach path trees in the depth budget");

  auto bv = node.tree.branch_vertex();
  std::vector<int> center;
  std::vector<int> advanced_vertices;
  for (int c : node.tree.vertex(*bv).children) {
    center.push_back(z_of(tv, node.tree.vertex(c).label));
    advanced_vertices.push_back(c);
  }
  std::vector<Chart> charts = blowup_variable_center(node.chart, center);
  for (std::size_t i = 0; i < charts.size(); ++i) {
    TreeChartNode child;
    child.tree = node.tree.advanced(advanced_vertices[i]);
    child.path = node.path;
    child.path.push_back(node.tree.vertex(advanced_vertices[i]).label);
    child.chart = std::move(charts[i]);
    expand_tree(child, root_phi, root_j, tv, depth_left - 1);
    node.children.push_back(std::move(child));
  }
}

}  // namespace

TreeReport vz_process(const WTree& g, int max_depth) {
  TreeReport report;
  report.root_tree = g;
  report.tv = tree_vars(g);
  report.ideals = tree_ideals(g, report.tv);
  report.phi = equations_Phi(g, report.tv);

  report.root.tree = g;
  report.root.chart = Chart::root(report.tv.vars);
  IdealGens root_j = IdealGens::from_monomial(report.ideals.J);
  expand_tree(report.root, report.phi, root_j, report.tv, max_depth);
  return report;
}

bool check_advancing_identity(const WTree& g, const std::string& a) {
  TreeVars tv = tree_vars(g);
  auto bv = g.branch_vertex();
  if (!bv) throw Error("path-tree", "advancing identity needs a branch vertex");
  auto id = g.find(a);
  const auto& children = g.vertex(*bv).children;
  if (!id || std::find(children.begin(), children.end(), *id) == children.end())
    throw Error("not-immediate-descendant",
                "'" + a + "' is not an immediate descendant of the branch vertex");
  WTree adv = g.advanced(*id);
  if (adv.is_path_tree())
    throw Error("path-tree", "advanced tree is a path tree; identity not asserted");

  std::vector<int> center;
  for (int c : children) center.push_back(z_of(tv, g.vertex(c).label));
  Chart chart;
  for (auto& cand : blowup_variable_center(Chart::root(tv.vars), center))
    if (cand.path.back().chosen == z_of(tv, a)) chart = cand;
  Poly pulled = equations_Phi(g, tv).substitute(chart.subst);
  return pulled == equations_Phi(adv, tv);
}

}  // namespace fitforge
