#include "fitforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "fitforge/blowup.hpp"
#include "fitforge/diagonal.hpp"
#include "fitforge/fitting.hpp"
#include "fitforge/parse.hpp"
#include "fitforge/snf.hpp"
#include "fitforge/tree_calculus.hpp"

namespace fitforge {

namespace {

using json = nlohmann::ordered_json;

VarSet resolve_vars(const std::string& vars_csv, const std::vector<std::string>& texts) {
  if (!vars_csv.empty()) return VarSet::from_csv(vars_csv);
  std::vector<std::string> names;
  for (auto& text : texts)
    for (auto& id : collect_identifiers(text))
      if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
  return VarSet(names);
}

Presentation parse_presentation(const std::string& text, const VarSet& vars) {
  return Presentation::from_rows(parse_matrix_text(text, vars), vars);
}

std::vector<Poly> parse_entry_list(const std::string& text, const VarSet& vars) {
  std::vector<Poly> entries;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) entries.push_back(parse_poly(item, vars));
  if (entries.empty()) throw SyntaxError("expected at least one entry", 0);
  return entries;
}

json matrix_json(const Presentation& A) {
  json rows = json::array();
  for (int r = 0; r < A.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < A.cols; ++c) row.push_back(render_poly(A.at(r, c), A.vars));
    rows.push_back(row);
  }
  return rows;
}

json chain_json(const FittingChain& chain, const VarSet& vars) {
  json out = json::object();
  for (std::size_t i = 0; i < chain.ideals.size(); ++i)
    out["F_" + std::to_string(i)] = render_ideal(chain.ideals[i], vars);
  return out;
}

const char* status_name(ChartStatus s) {
  switch (s) {
    case ChartStatus::Open: return "open";
    case ChartStatus::DiagonalCertified: return "diagonal-certified";
    default: return "unsupported-center";
  }
}

json chart_node_json(const ChartNode& node, const VarSet& vars, json& warnings) {
  json out;
  out["path"] = chart_path_string(node.chart, vars);
  out["status"] = status_name(node.status);
  json subst = json::object();
  for (auto& [v, p] : node.chart.subst) subst[vars.name(v)] = render_poly(p, vars);
  out["substitution"] = subst;
  json exc = json::array();
  for (auto& m : node.chart.exceptional) exc.push_back(render_monomial(m, vars));
  out["exceptional"] = exc;
  out["fitting"] = chain_json(node.chain, vars);
  out["generic_rank"] = node.chain.generic_rank;
  if (node.center_residual)
    out["center"] = render_ideal(*node.center_residual, vars);
  if (node.diagonal) {
    json d = json::array();
    for (auto& e : node.diagonal->entries) d.push_back(render_poly(e, vars));
    out["diagonal"] = d;
  }
  if (node.status != ChartStatus::DiagonalCertified && node.children.empty())
    warnings.push_back(std::string(status_name(node.status)) + " at " +
                       chart_path_string(node.chart, vars));
  json children = json::array();
  for (auto& c : node.children) children.push_back(chart_node_json(c, vars, warnings));
  out["children"] = children;
  return out;
}

json wtree_json(const WTree& t, int v) {
  json out;
  out["label"] = t.vertex(v).label;
  out["weight"] = t.vertex(v).weight;
  json children = json::array();
  for (int c : t.vertex(v).children) children.push_back(wtree_json(t, c));
  out["children"] = children;
  return out;
}

json tree_chart_json(const TreeChartNode& node, const VarSet& vars) {
  json out;
  std::string path;
  for (auto& label : node.path) path += (path.empty() ? "" : ".") + label;
  out["path"] = path.empty() ? "root" : path;
  out["tree"] = wtree_json(node.tree, node.tree.root());
  out["path_tree"] = node.path_tree;
  out["phi_factor"] = render_monomial(node.phi_factor, vars);
  out["phi_residual"] = render_poly(node.phi_residual, vars);
  out["J_factor"] = render_monomial(node.j_pull.exceptional, vars);
  out["J_residual"] = render_ideal(node.j_pull.residual, vars);
  out["principal"] = node.principal;
  out["snc"] = node.snc;
  json children = json::array();
  for (auto& c : node.children) children.push_back(tree_chart_json(c, vars));
  out["children"] = children;
  return out;
}

struct Options {
  bool json_out = false;
  std::string vars_csv;
  std::string arg1, arg2;
  int max_rounds = 8;
  int max_depth = 8;
  int alpha_max = 6;
};

void emit(std::ostream& out, bool json_mode, const std::string& command, const VarSet& vars,
          const json& results, const json& warnings, const std::vector<std::string>& lines) {
  if (json_mode) {
    json rep;
    rep["command"] = command;
    rep["vars"] = vars.names();
    rep["results"] = results;
    rep["warnings"] = warnings;
    out << rep.dump(2) << "\n";
  } else {
    for (auto& line : lines) out << line << "\n";
    for (auto& w : warnings) out << "warning: " << w.get<std::string>() << "\n";
  }
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  json results = json::object();
  json warnings = json::array();
  std::vector<std::string> lines;
  VarSet vars;

  if (command == "fitting" || command == "norm" || command == "snf" ||
      command == "diagonalize" || command == "blowup") {
    vars = resolve_vars(opt.vars_csv, {opt.arg1});
    Presentation A = parse_presentation(opt.arg1, vars);
    results["matrix"] = matrix_json(A);
    if (command == "fitting") {
      FittingChain chain = rank_profile(A);
      results["fitting"] = chain_json(chain, vars);
      results["generic_rank"] = chain.generic_rank;
      results["maximal_rank"] = chain.maximal_rank;
      for (std::size_t i = 0; i < chain.ideals.size(); ++i)
        lines.push_back("F_" + std::to_string(i) + " = " + render_ideal(chain.ideals[i], vars));
      lines.push_back("generic rank " + std::to_string(chain.generic_rank) +
                      ", maximal rank " + std::to_string(chain.maximal_rank));
    } else if (command == "norm") {
      NormIdeal n = norm_ideal(A);
      results["norm"] = render_ideal(n.ideal, vars);
      results["columns"] = n.columns;
      lines.push_back("norm = " + render_ideal(n.ideal, vars));
    } else if (command == "snf") {
      SmithResult s = smith_normal_form(A);
      json d = json::array();
      for (auto& e : s.diag) d.push_back(render_poly(e, vars));
      results["diagonal"] = d;
      results["left"] = matrix_json(s.left);
      results["right"] = matrix_json(s.right);
      std::string line = "diagonal:";
      for (auto& e : s.diag) line += " " + render_poly(e, vars);
      lines.push_back(line);
    } else if (command == "diagonalize") {
      DiagonalizeResult r = diagonalize_local(A);
      if (auto* form = std::get_if<DiagonalForm>(&r)) {
        json d = json::array();
        for (auto& e : form->entries) d.push_back(render_poly(e, vars));
        results["status"] = "diagonal";
        results["diagonal"] = d;
        results["free_rank"] = form->free_rank;
        results["kernel_rank"] = form->kernel_rank;
        results["operations"] = form->provenance;
        std::string line = "diagonal:";
        for (auto& e : form->entries) line += " " + render_poly(e, vars);
        lines.push_back(line);
        lines.push_back("free rank " + std::to_string(form->free_rank) + ", kernel rank " +
                        std::to_string(form->kernel_rank));
      } else {
        auto& obs = std::get<Obstruction>(r);
        results["status"] = "obstructed";
        results["obstruction"] = matrix_json(obs.block);
        warnings.push_back("no entry divides every entry; blow-up or localization required");
        lines.push_back("obstructed: no entry divides every entry");
      }
    } else {  // blowup
      ChartTree tree = huli_driver(A, opt.max_rounds);
      Certificate cert = diagonal_certificate(tree);
      results["certified"] = cert.certified;
      results["failing_paths"] = cert.failing_paths;
      results["tree"] = chart_node_json(tree.root, vars, warnings);
      lines.push_back(std::string("certified: ") + (cert.certified ? "yes" : "no"));
      std::vector<const ChartNode*> stack{&tree.root};
      while (!stack.empty()) {
        const ChartNode* n = stack.back();
        stack.pop_back();
        lines.push_back("chart " + chart_path_string(n->chart, vars) + ": " +
                        status_name(n->status));
        for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
          stack.push_back(&*it);
      }
    }
  } else if (command == "filtration" || command == "cone") {
    vars = resolve_vars(opt.vars_csv, {opt.arg1});
    DiagonalForm d;
    d.entries = parse_entry_list(opt.arg1, vars);
    json entries = json::array();
    for (auto& e : d.entries) entries.push_back(render_poly(e, vars));
    results["entries"] = entries;
    Filtration f = filtration(d);
    if (command == "filtration") {
      json pieces = json::array();
      for (auto it = f.pieces.rbegin(); it != f.pieces.rend(); ++it) {
        json piece;
        piece["index"] = it->index;
        piece["divisor"] = render_monomial(it->divisor, vars);
        piece["empty"] = it->empty;
        pieces.push_back(piece);
        lines.push_back("D_" + std::to_string(it->index) + " = (" +
                        render_monomial(it->divisor, vars) + ")" + (it->empty ? " [empty]" : ""));
      }
      results["D"] = pieces;
      int n = static_cast<int>(d.entries.size());
      json fitting = json::array();
      for (int k = 0; k < n; ++k) {
        Monomial fk;
        for (int i = 0; i < n - k; ++i) fk = fk * d.entries[i].leading_monomial();
        fitting.push_back(render_monomial(fk, vars));
        lines.push_back("F_" + std::to_string(k) + " = (" + render_monomial(fk, vars) + ")");
      }
      results["F"] = fitting;
    } else {
      ConeComponents cone = cone_components(d, 0);
      results["main_rank"] = cone.main_rank;
      json comps = json::array();
      lines.push_back("main component: rank " + std::to_string(cone.main_rank));
      for (auto& t : cone.torsion) {
        json comp;
        comp["support"] = "V(" + vars.name(t.variable) + ")";
        comp["rank"] = t.rank;
        comps.push_back(comp);
        lines.push_back("component over V(" + vars.name(t.variable) + "): rank " +
                        std::to_string(t.rank));
      }
      results["components"] = comps;
    }
  } else if (command == "tree") {
    TreeReport report = vz_process(WTree::parse(opt.arg1), opt.max_depth);
    vars = report.tv.vars;
    results["tree"] = wtree_json(report.root_tree, report.root_tree.root());
    results["phi"] = render_poly(report.phi, vars);
    results["I"] = report.ideals.I
                       ? json(render_ideal(IdealGens::from_monomial(*report.ideals.I), vars))
                       : json(nullptr);
    results["J"] = render_ideal(IdealGens::from_monomial(report.ideals.J), vars);
    results["charts"] = tree_chart_json(report.root, vars);
    lines.push_back("phi = " + render_poly(report.phi, vars));
    lines.push_back("I = " + (report.ideals.I
                                  ? render_ideal(IdealGens::from_monomial(*report.ideals.I), vars)
                                  : std::string("absent (path tree)")));
    lines.push_back("J = " + render_ideal(IdealGens::from_monomial(report.ideals.J), vars));
    std::vector<const TreeChartNode*> stack{&report.root};
    while (!stack.empty()) {
      const TreeChartNode* n = stack.back();
      stack.pop_back();
      std::string path;
      for (auto& label : n->path) path += (path.empty() ? "" : ".") + label;
      if (path.empty()) path = "root";
      lines.push_back("chart " + path + ": J = " + render_monomial(n->j_pull.exceptional, vars) +
                      " * " + render_ideal(n->j_pull.residual, vars) +
                      (n->path_tree
                           ? std::string(", terminal") + (n->principal ? ", principal" : "") +
                                 (n->snc ? ", snc" : "")
                           : ""));
      for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
        stack.push_back(&*it);
    }
  } else if (command == "moody") {
    vars = resolve_vars(opt.vars_csv, {opt.arg1, opt.arg2});
    IdealGens I(parse_ideal_text(opt.arg1, vars));
    IdealGens J(parse_ideal_text(opt.arg2, vars));
    if (!I.monomial_flag() || !J.monomial_flag())
      throw Error("non-monomial-ideal", "domination search needs monomial ideals");
    results["I"] = render_ideal(I, vars);
    results["J"] = render_ideal(J, vars);
    auto witness = moody_dominates(I.as_monomial(), J.as_monomial(), opt.alpha_max);
    results["dominates"] = witness.has_value();
    if (witness) {
      results["alpha"] = witness->alpha;
      results["K"] = render_ideal(IdealGens::from_monomial(witness->k), vars);
      lines.push_back("dominates: alpha = " + std::to_string(witness->alpha) + ", K = " +
                      render_ideal(IdealGens::from_monomial(witness->k), vars));
    } else {
      warnings.push_back("no monomial witness up to alpha = " + std::to_string(opt.alpha_max) +
                         "; a non-monomial witness is not ruled out");
      lines.push_back("no witness up to alpha = " + std::to_string(opt.alpha_max));
    }
  }

  emit(out, opt.json_out, command, vars, results, warnings, lines);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Fitting-ideal, blow-up and tree-chart calculator"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_out, "machine-readable JSON report");
    sub->add_option("--vars", opt.vars_csv, "comma-separated variable order");
  };
  for (const char* name : {"fitting", "norm", "snf", "diagonalize"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("matrix", opt.arg1, "matrix text, e.g. [[y,z,0],[-x,0,z]]")->required();
    add_common(sub);
  }
  {
    auto* sub = app.add_subcommand("blowup");
    sub->add_option("matrix", opt.arg1)->required();
    sub->add_option("--max-rounds", opt.max_rounds, "blow-up round budget per branch");
    add_common(sub);
  }
  for (const char* name : {"filtration", "cone"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("entries", opt.arg1, "comma-separated diagonal entries")->required();
    add_common(sub);
  }
  {
    auto* sub = app.add_subcommand("tree");
    sub->add_option("tree", opt.arg1, "tree text, e.g. [o a [b c d]]")->required();
    sub->add_option("--max-depth", opt.max_depth, "chart recursion depth budget");
    add_common(sub);
  }
  {
    auto* sub = app.add_subcommand("moody");
    sub->add_option("idealI", opt.arg1, "ideal text, e.g. (x^2, x*y)")->required();
    sub->add_option("idealJ", opt.arg2)->required();
    sub->add_option("--alpha-max", opt.alpha_max, "largest power of J to try");
    add_common(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt, out);
  } catch (const SyntaxError& e) {
    err << "syntax-error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.name() == "unknown-variable") {
      err << e.name() << ": " << e.what() << "\n";
      return 2;
    }
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fitforge
