#pragma once

#include <vector>

#include "sphmra/mra.hpp"

namespace sphmra {

/// Coarse samples v^(1) (or v^(base level)) and detail samples w^(i), where
/// w^(i) lives on N_{i+1}. details[0] belongs to the base level.
struct Pyramid {
  GridSignal base;
  std::vector<GridSignal> details;

  int top_level() const { return base.level + static_cast<int>(details.size()); }
};

namespace transform {

/// R: samples of v_{j+1} on N_{j+1} -> samples of its V_j part on N_j.
GridSignal restrict(const GridSignal& v);

/// Q: samples of v_{j+1} on N_{j+1} -> samples of its W_j part on N_{j+1}.
GridSignal detail(const GridSignal& v);

/// R*(v) + Q*(w): v on N_j, w on N_{j+1}; result on N_{j+1}.
GridSignal prolong_sum(const GridSignal& v, const GridSignal& w);

/// Split v (on N_{J}) down `levels` times; levels defaults to J - 1 so the
/// base lands on N_1.
Pyramid pyramid_decompose(const GridSignal& v);
Pyramid pyramid_decompose(const GridSignal& v, int levels);

GridSignal pyramid_reconstruct(const Pyramid& p);

/// Throws std::invalid_argument when levels or sizes are inconsistent.
void validate_pyramid(const Pyramid& p);

} // namespace transform
} // namespace sphmra
