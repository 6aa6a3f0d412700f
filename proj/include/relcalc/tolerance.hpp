#pragma once

#include <algorithm>
#include <optional>

#include "relcalc/types.hpp"

namespace relcalc {

/// Rank and comparison thresholds shared by every operation.
///
/// A singular value s of an r x c matrix is counted as nonzero when
/// s >= rel_eps * s_max + abs_eps. When rel_eps is unset it defaults to
/// 1e-12 * max(r, c). Subspace comparisons measure residuals of
/// orthonormal columns, i.e. s_max = 1.
struct Tolerance {
  double abs_eps = 1e-10;
  std::optional<double> rel_eps;

  Tolerance() = default;
  explicit Tolerance(double abs, std::optional<double> rel = std::nullopt)
      : abs_eps(abs), rel_eps(rel) {
    if (abs_eps < 0.0 || (rel_eps && *rel_eps < 0.0)) {
      throw PreconditionError("tolerance components must be nonnegative");
    }
  }

  [[nodiscard]] double relative(Index rows, Index cols) const {
    return rel_eps.value_or(1e-12 * static_cast<double>(std::max<Index>({rows, cols, 1})));
  }

  [[nodiscard]] double rank_cutoff(double sigma_max, Index rows, Index cols) const {
    return relative(rows, cols) * sigma_max + abs_eps;
  }

  [[nodiscard]] double compare_cutoff(Index ambient) const {
    return relative(ambient, ambient) + abs_eps;
  }
};

}  // namespace relcalc
