#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "clonewt/graph.hpp"
#include "clonewt/rational.hpp"

// Brute-force references that share no code with the library.
namespace oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using Adjacency = std::vector<std::vector<bool>>;

Adjacency adjacency(std::size_t n, const Edges& edges);
Adjacency adjacency(const clonewt::Graph& g);

// Set partitions by restricted growth strings, kept when every block is a clique.
std::size_t clique_partition_count(const Adjacency& adj);
// Minimum block-mass entropy over those partitions.
double min_partition_entropy(const Adjacency& adj, const std::vector<double>& pi);

// Each class of equal closed neighbourhoods gets 1/#classes, split evenly.
std::vector<clonewt::Rational> class_uniform(const Adjacency& adj);

// Midpoint sum of w_cu(G_r)(x) over [0, alpha] with nu uniform, G_r rebuilt
// from scratch at each cell.
std::vector<double> riemann_cu(const std::vector<std::vector<double>>& d, double alpha, std::size_t steps);

// Length of [a - r, a + r] ∩ [b - r, b + r].
double overlap_1d(double a, double b, double r);

}  // namespace oracle
