#pragma once

#include <Eigen/Core>

namespace pepcd::predicates {

// Sign of the orientation determinant of (a, b, c): +1 counter-clockwise,
// -1 clockwise, 0 collinear. Filtered double evaluation with an exact
// expansion fallback, so the sign is correct unless an intermediate product
// underflows (coordinates or differences in the subnormal range).
int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);

// Sign of the in-circle determinant: +1 when d lies strictly inside the
// circle through the counter-clockwise triangle (a, b, c), 0 when cocircular.
int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
             const Eigen::Vector2d& d);

// Plain double versions without the exact fallback.
int orient2d_fast(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);
int incircle_fast(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                  const Eigen::Vector2d& d);

// Process-wide switch used by the CLI's --exact-predicates flag. On by default.
void set_exact(bool exact);
bool exact_enabled();

}  // namespace pepcd::predicates
