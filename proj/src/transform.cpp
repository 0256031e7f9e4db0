#include "sphmra/transform.hpp"

#include <stdexcept>
#include <string>

namespace sphmra::transform {

namespace {

// Full spectrum of a V_{j+1} signal sampled on N_{j+1}.
Spectrum fine_spectrum(const GridSignal& v) {
  if (v.level < 2) {
    throw std::invalid_argument("a signal on N_1 has no coarser level");
  }
  return mra::analyze(v, mra::max_degree(v.level));
}

GridSignal coarse_part(const Spectrum& s, int j) {
  return mra::synthesize_on_grid(mra::band(s, 0, mra::max_degree(j)), j);
}

GridSignal detail_part(const Spectrum& s, int j) {
  return mra::synthesize_on_grid(mra::band(s, mra::max_degree(j) + 1, mra::max_degree(j + 1)),
                                 j + 1);
}

} // namespace

GridSignal restrict(const GridSignal& v) { return coarse_part(fine_spectrum(v), v.level - 1); }

GridSignal detail(const GridSignal& v) { return detail_part(fine_spectrum(v), v.level - 1); }

GridSignal prolong_sum(const GridSignal& v, const GridSignal& w) {
  if (!(v.geometry == w.geometry)) {
    throw std::invalid_argument("prolong_sum: signals live on different spheres");
  }
  if (w.level != v.level + 1) {
    throw std::invalid_argument("prolong_sum: detail must sit one level above the coarse signal (got " +
                                std::to_string(v.level) + " and " + std::to_string(w.level) + ")");
  }
  const int j = v.level;
  auto total = mra::analyze(v);
  const auto fine = mra::band(mra::analyze(w, mra::max_degree(j + 1)), mra::max_degree(j) + 1,
                              mra::max_degree(j + 1));
  total.level = j + 1;
  total.entries.insert(fine.entries.begin(), fine.entries.end());
  return mra::synthesize_on_grid(total, j + 1);
}

Pyramid pyramid_decompose(const GridSignal& v, int levels) {
  if (levels < 1 || levels > v.level - 1) {
    throw std::invalid_argument("pyramid_decompose: levels must lie in 1.." +
                                std::to_string(v.level - 1));
  }
  std::vector<GridSignal> details;
  GridSignal current = v;
  for (int stage = 0; stage < levels; ++stage) {
    const auto s = fine_spectrum(current);
    const int j = current.level - 1;
    details.insert(details.begin(), detail_part(s, j));
    current = coarse_part(s, j);
  }
  return {std::move(current), std::move(details)};
}

Pyramid pyramid_decompose(const GridSignal& v) { return pyramid_decompose(v, v.level - 1); }

void validate_pyramid(const Pyramid& p) {
  const auto expected = [&](int level) { return quadrature::grid_size(p.base.geometry, level); };
  if (static_cast<std::int64_t>(p.base.values.size()) != expected(p.base.level)) {
    throw std::invalid_argument("pyramid base does not match its grid size");
  }
  for (std::size_t i = 0; i < p.details.size(); ++i) {
    const auto& d = p.details[i];
    const int level = p.base.level + static_cast<int>(i) + 1;
    if (!(d.geometry == p.base.geometry)) {
      throw std::invalid_argument("pyramid detail " + std::to_string(i) + " is on another sphere");
    }
    if (d.level != level) {
      throw std::invalid_argument("pyramid detail " + std::to_string(i) + " has level " +
                                  std::to_string(d.level) + ", expected " + std::to_string(level));
    }
    if (static_cast<std::int64_t>(d.values.size()) != expected(level)) {
      throw std::invalid_argument("pyramid detail " + std::to_string(i) +
                                  " does not match its grid size");
    }
  }
}

GridSignal pyramid_reconstruct(const Pyramid& p) {
  validate_pyramid(p);
  GridSignal current = p.base;
  for (const auto& w : p.details) {
    current = prolong_sum(current, w);
  }
  return current;
}

} // namespace sphmra::transform
