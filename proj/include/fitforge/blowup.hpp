#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fitforge/diagonal.hpp"
#include "fitforge/fitting.hpp"

namespace fitforge {

// An affine blow-up chart. Chart coordinates reuse the original variable
// names, so every chart ring shares the root VarSet; subst maps root
// variables to polynomials in chart variables, composed along the path.
struct Chart {
  struct Step {
    std::vector<int> center;  // center variables in the parent chart
    int chosen;               // the generator whose chart this is
  };
  std::vector<Step> path;
  VarSet vars;
  std::map<int, Poly> subst;       // root variable -> chart polynomial
  std::vector<Monomial> exceptional;

  static Chart root(const VarSet& vars);
};

// One chart per center generator v: every other center variable u maps to
// v*u, v stays, non-center variables stay; v is recorded as exceptional.
std::vector<Chart> blowup_variable_center(const Chart& c, const std::vector<int>& center_vars);

struct PullFactor {
  Monomial exceptional;  // common monomial content of the pulled generators
  IdealGens residual;    // total transform = exceptional * residual
};

// Pull back I (over the root ring) through c.subst and factor out the common
// monomial content of the generator set.
PullFactor pull_and_factor(const Chart& c, const IdealGens& I);
PullFactor pull_and_factor(const Chart& c, const Poly& p, Poly* residual_poly);

enum class ChartStatus { Open, DiagonalCertified, UnsupportedCenter };

struct ChartNode {
  Chart chart;
  Presentation pulled;
  FittingChain chain;
  ChartStatus status = ChartStatus::Open;
  std::optional<DiagonalForm> diagonal;       // recorded when certified and reduction succeeds
  std::optional<IdealGens> center_residual;   // the non-principal residual that was blown up
  std::vector<ChartNode> children;
};

struct ChartTree {
  Presentation root_presentation;
  ChartNode root;
};

// Iterated blow-up: at each open node take the first non-principal Fitting
// ideal between generic and maximal rank, factor its monomial content and
// blow up the residual when it is generated by distinct variables.
ChartTree huli_driver(const Presentation& A, int max_rounds = 8);

struct Certificate {
  bool certified;
  std::vector<std::string> failing_paths;  // chart paths of bad leaves
};

// True iff every leaf is diagonal-certified and preserves the root generic rank.
Certificate diagonal_certificate(const ChartTree& t);

std::string chart_path_string(const Chart& c, const VarSet& vars);

}  // namespace fitforge
