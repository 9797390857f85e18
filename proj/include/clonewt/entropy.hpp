#pragma once

#include <cstddef>
#include <vector>

#include "clonewt/graph.hpp"
#include "clonewt/weights.hpp"

namespace clonewt {

// H(p) in bits with 0 log 0 = 0.
double shannon_entropy(const std::vector<double>& masses);

// H_G(π): minimum over clique partitions of the entropy of block masses,
// by exhaustive enumeration.
double graph_entropy(const Graph& g, const std::vector<double>& pi, std::size_t partition_cap = 12);
// Shannon entropy of the equivalence-class masses.
double class_entropy(const Graph& g, const std::vector<double>& pi);

struct EntropyOptions {
  double tol = 1e-8;
  std::size_t partition_cap = 12;
  std::size_t max_newton_steps = 100'000;
};

struct EntropyResult {
  WeightVector weights;
  double graph_entropy = 0.0;  // certified by enumeration at `weights`
  double class_entropy = 0.0;
  double level = 0.0;          // optimal H_G found before the tie-break stages
  std::size_t newton_steps = 0;
};

// The entropy-maximizing rule h: maximize H_G over the simplex, then H^E_G
// over the maximizing set, then split class masses uniformly.
EntropyResult entropy_weights(const Graph& g, const EntropyOptions& options = {});
WeightVector w_entropy(const Graph& g, double tol = 1e-8);

}  // namespace clonewt
