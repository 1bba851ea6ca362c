#include "pepcd/predicates.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "pepcd/expansion.hpp"

namespace pepcd::predicates {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

std::atomic<bool> g_exact{true};

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Expansion bax = Expansion::difference(b.x(), a.x());
  const Expansion bay = Expansion::difference(b.y(), a.y());
  const Expansion cax = Expansion::difference(c.x(), a.x());
  const Expansion cay = Expansion::difference(c.y(), a.y());
  return (bax * cay - bay * cax).sign();
}

int incircle_exact(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                   const Eigen::Vector2d& d) {
  const Expansion adx = Expansion::difference(a.x(), d.x());
  const Expansion ady = Expansion::difference(a.y(), d.y());
  const Expansion bdx = Expansion::difference(b.x(), d.x());
  const Expansion bdy = Expansion::difference(b.y(), d.y());
  const Expansion cdx = Expansion::difference(c.x(), d.x());
  const Expansion cdy = Expansion::difference(c.y(), d.y());
  const Expansion alift = adx * adx + ady * ady;
  const Expansion blift = bdx * bdx + bdy * bdy;
  const Expansion clift = cdx * cdx + cdy * cdy;
  const Expansion det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                        clift * (adx * bdy - bdx * ady);
  return det.sign();
}

}  // namespace

void set_exact(bool exact) { g_exact.store(exact); }
bool exact_enabled() { return g_exact.load(); }

int orient2d_fast(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const double left = (a.x() - c.x()) * (b.y() - c.y());
  const double right = (a.y() - c.y()) * (b.x() - c.x());
  return sign_of(left - right);
}

int orient2d(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const double left = (a.x() - c.x()) * (b.y() - c.y());
  const double right = (a.y() - c.y()) * (b.x() - c.x());
  const double det = left - right;
  if (!exact_enabled()) return sign_of(det);
  const double bound = kOrientBound * (std::fabs(left) + std::fabs(right));
  if (det > bound || -det > bound) return sign_of(det);
  return orient_exact(a, b, c);
}

int incircle_fast(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                  const Eigen::Vector2d& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y();
  const double det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                     (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                     (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return sign_of(det);
}

int incircle(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
             const Eigen::Vector2d& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y();
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  if (!exact_enabled()) return sign_of(det);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound || -det > bound) return sign_of(det);
  return incircle_exact(a, b, c, d);
}

}  // namespace pepcd::predicates
