#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsub/topo.hpp"

namespace rsub::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic summary of what was checked or the first violation
  double seconds = 0;    // not part of the CSV
};

using SurfaceClassifier = std::function<Surface(const FaceWalk&)>;

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  std::vector<int> only;                          // empty: every criterion
  SurfaceClassifier classifier = classify_surface;  // replaceable for mutation runs
  std::string scratch_dir;                        // empty: a fresh directory under the system temp path
};

// Runs the selected criteria in order. Never throws for a failing criterion;
// an exception inside one is reported as its failure.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "version,criterion,name,status,detail" rows.
std::string acceptance_csv(const std::vector<CriterionResult>& results);

// All pairwise non-isomorphic graphs on exactly n vertices (n <= 8), as
// edge lists over 0..n-1.
std::vector<std::vector<Edge>> nonisomorphic_graphs(std::size_t n);

// Classifier that swaps the two surface types; used to check that the
// parity criterion turns red.
Surface flipped_surface_classifier(const FaceWalk& cycle);

}  // namespace rsub::tools
