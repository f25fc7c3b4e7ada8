#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fitforge/blowup.hpp"
#include "fitforge/ideal.hpp"
#include "fitforge/wtree.hpp"

namespace fitforge {

// Coordinate ring attached to a tree: one z-variable per non-root vertex
// (depth-first order), then one w-variable per terminal vertex.
struct TreeVars {
  VarSet vars;
  std::map<std::string, int> z;  // vertex label -> z-variable index
  std::map<std::string, int> w;  // terminal label -> w-variable index
};

TreeVars tree_vars(const WTree& g);

struct TreeIdeals {
  std::optional<MonomialIdeal> I;  // absent for path trees
  MonomialIdeal J;
};

// I = z-variables of the branch vertex's immediate descendants;
// J = one monomial z_{[v,o]} = prod of the z's on the root-to-v path, per
// terminal v. Labels resolve through tv, so a transformed tree can be
// evaluated in its root tree's ring.
TreeIdeals tree_ideals(const WTree& g, const TreeVars& tv);

// Phi = sum over terminals v of z_{[v,o]} * w_v.
Poly equations_Phi(const WTree& g, const TreeVars& tv);

// True iff some term of residual is a bare unit-coefficient w-variable that
// divides no other term.
bool snc_check(const Poly& residual, const TreeVars& tv);

struct TreeChartNode {
  WTree tree;                      // monoidal transform at this chart
  std::vector<std::string> path;   // advanced vertex labels from the root
  Chart chart;                     // composed substitution over the root ring
  bool path_tree = false;
  Monomial phi_factor;             // pulled Phi = phi_factor * phi_residual
  Poly phi_residual;
  PullFactor j_pull;               // pulled root J and its exceptional factor
  bool principal = false;          // residual of the pulled J is the unit ideal
  bool snc = false;                // snc_check on phi_residual
  std::vector<TreeChartNode> children;
};

struct TreeReport {
  WTree root_tree;
  TreeVars tv;
  TreeIdeals ideals;
  Poly phi;
  TreeChartNode root;
};

// Recursively blow up I of each non-path chart tree; children are the
// monoidal transforms. Every chart records the factored pullbacks of the ROOT
// tree's Phi and J through the composed substitution.
TreeReport vz_process(const WTree& g, int max_depth = 8);

// Substitute the chart-a map into Phi_g and compare with Phi of the advanced
// tree. a must name an immediate descendant of the branch vertex whose
// advanced tree is not a path tree.
bool check_advancing_identity(const WTree& g, const std::string& a);

}  // namespace fitforge
