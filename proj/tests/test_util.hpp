#pragma once

#include <random>

#include "anglechain/core.hpp"

namespace testutil {

inline anglechain::PointSet random_pointset(std::uint64_t seed, anglechain::Index n,
                                            anglechain::Index dim, double lo = 0.0,
                                            double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(lo, hi);
  anglechain::Mat m(dim, n);
  for (anglechain::Index c = 0; c < n; ++c)
    for (anglechain::Index r = 0; r < dim; ++r) m(r, c) = coord(rng);
  return anglechain::PointSet::from_columns(std::move(m));
}

inline anglechain::PointSet unit_square() {
  anglechain::Mat m(2, 4);
  m << 0, 1, 1, 0,
       0, 0, 1, 1;
  return anglechain::PointSet::from_columns(std::move(m));
}

inline anglechain::SimilarityTransform random_similarity(std::uint64_t seed, anglechain::Index dim) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  anglechain::Mat g(dim, dim);
  for (anglechain::Index c = 0; c < dim; ++c)
    for (anglechain::Index r = 0; r < dim; ++r) g(r, c) = gauss(rng);
  const Eigen::HouseholderQR<anglechain::Mat> qr(g);
  anglechain::Mat q = qr.householderQ();
  anglechain::SimilarityTransform t;
  t.rotation = q;
  t.translation = anglechain::Vec(dim);
  for (anglechain::Index r = 0; r < dim; ++r) t.translation(r) = gauss(rng);
  std::uniform_real_distribution<double> sc(0.5, 2.0);
  t.scale = sc(rng);
  return t;
}

}  // namespace testutil
