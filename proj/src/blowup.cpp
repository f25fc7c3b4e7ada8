#include "fitforge/blowup.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>

namespace fitforge {

Chart Chart::root(const VarSet& vars) {
  Chart c;
  c.vars = vars;
  return c;
}

std::vector<Chart> blowup_variable_center(const Chart& c, const std::vector<int>& center_vars) {
  if (center_vars.empty()) throw Error("empty-center", "blow-up center has no generators");
  for (int v : center_vars)
    if (v < 0 || v >= c.vars.size()) throw unknown_variable(std::to_string(v));
  std::vector<int> sorted = center_vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("duplicate-center-variable", "center variables must be distinct");

  std::vector<Chart> charts;
  for (int v : center_vars) {
    std::map<int, Poly> step;
    for (int u : center_vars)
      if (u != v) step[u] = Poly::variable(v) * Poly::variable(u);
    Chart child = c;
    child.path.push_back({center_vars, v});
    for (auto& [root_var, poly] : child.subst) poly = poly.substitute(step);
    for (auto& [u, poly] : step)
      if (!child.subst.count(u)) child.subst[u] = poly;
    child.exceptional.push_back(Monomial::variable(v));
    charts.push_back(std::move(child));
  }
  return charts;
}

PullFactor pull_and_factor(const Chart& c, const IdealGens& I) {
  std::vector<Poly> pulled;
  for (auto& g : I.generators()) pulled.push_back(g.substitute(c.subst));
  IdealGens total(pulled);
  if (total.is_zero()) return {Monomial{}, total};
  Monomial content = total.generators().front().monomial_content();
  for (auto& g : total.generators())
    content = Monomial::gcd(content, g.monomial_content());
  std::vector<Poly> residual;
  for (auto& g : total.generators()) residual.push_back(g.divide_by_monomial(content));
  return {content, IdealGens(residual)};
}

PullFactor pull_and_factor(const Chart& c, const Poly& p, Poly* residual_poly) {
  Poly pulled = p.substitute(c.subst);
  if (pulled.is_zero()) {
    if (residual_poly) *residual_poly = Poly{};
    return {Monomial{}, IdealGens{}};
  }
  Monomial content = pulled.monomial_content();
  Poly residual = pulled.divide_by_monomial(content);
  if (residual_poly) *residual_poly = residual;
  return {content, IdealGens({residual})};
}

namespace {

int worker_count() {
  if (const char* env = std::getenv("FITTING_FORGE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void expand(ChartNode& node, const Presentation& root, int rounds_left, int threads) {
  node.pulled = base_change(root, node.chart.subst);
  node.chain = rank_profile(node.pulled);

  // Find the first non-principal Fitting ideal. Zero and unit ideals count
  // as principal, so only the range between the ranks can fail.
  int bad = -1;
  for (int i = 0; i < static_cast<int>(node.chain.ideals.size()); ++i) {
    bool principal;
    try {
      principal = node.chain.ideals[i].principal_generator().has_value();
    } catch (const Error&) {
      principal = false;  // undecidable counts as non-principal; leads to unsupported-center
    }
    if (!principal) {
      bad = i;
      break;
    }
  }
  if (bad < 0) {
    node.status = ChartStatus::DiagonalCertified;
    auto result = diagonalize_local(node.pulled);
    if (auto* form = std::get_if<DiagonalForm>(&result)) node.diagonal = std::move(*form);
    return;
  }
  if (rounds_left <= 0) {
    node.status = ChartStatus::Open;
    return;
  }

  const IdealGens& f = node.chain.ideals[bad];
  if (!f.monomial_flag()) {
    node.status = ChartStatus::UnsupportedCenter;
    node.center_residual = f;
    return;
  }
  MonomialIdeal mono = f.as_monomial();
  Monomial content = mono.min_gens().front();
  for (auto& m : mono.min_gens()) content = Monomial::gcd(content, m);
  std::vector<int> center;
  bool variables_only = true;
  for (auto& m : mono.min_gens()) {
    Monomial res = m / content;
    auto& exps = res.exponents();
    if (exps.size() != 1 || exps.begin()->second != 1) {
      variables_only = false;
      break;
    }
    center.push_back(exps.begin()->first);
  }
  std::sort(center.begin(), center.end());
  if (!variables_only ||
      std::adjacent_find(center.begin(), center.end()) != center.end()) {
    node.status = ChartStatus::UnsupportedCenter;
    node.center_residual = f;
    return;
  }

  node.center_residual = f;
  for (auto& chart : blowup_variable_center(node.chart, center)) {
    ChartNode child;
    child.chart = std::move(chart);
    node.children.push_back(std::move(child));
  }
  if (threads > 1 && node.children.size() > 1) {
    std::vector<std::future<void>> futures;
    for (auto& child : node.children)
      futures.push_back(std::async(std::launch::async, [&child, &root, rounds_left] {
        expand(child, root, rounds_left - 1, 1);
      }));
    for (auto& fut : futures) fut.get();
  } else {
    for (auto& child : node.children) expand(child, root, rounds_left - 1, threads);
  }
}

void collect_leaves(const ChartNode& node, int root_rank, Certificate& cert,
                    const VarSet& vars) {
  if (node.children.empty()) {
    bool ok = node.status == ChartStatus::DiagonalCertified &&
              node.chain.generic_rank == root_rank;
    if (!ok) {
      cert.certified = false;
      cert.failing_paths.push_back(chart_path_string(node.chart, vars));
    }
    return;
  }
  for (auto& child : node.children) collect_leaves(child, root_rank, cert, vars);
}

}  // namespace

ChartTree huli_driver(const Presentation& A, int max_rounds) {
  ChartTree tree;
  tree.root_presentation = A;
  tree.root.chart = Chart::root(A.vars);
  expand(tree.root, A, max_rounds, worker_count());
  return tree;
}

Certificate diagonal_certificate(const ChartTree& t) {
  Certificate cert{true, {}};
  int root_rank = t.root.chain.generic_rank;
  collect_leaves(t.root, root_rank, cert, t.root_presentation.vars);
  return cert;
}

std::string chart_path_string(const Chart& c, const VarSet& vars) {
  if (c.path.empty()) return "root";
  std::string out;
  for (auto& step : c.path) {
    if (!out.empty()) out += ".";
    out += vars.name(step.chosen);
  }
  return out;
}

}  // namespace fitforge
