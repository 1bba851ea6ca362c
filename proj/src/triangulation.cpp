#include "pepcd/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "pepcd/predicates.hpp"

namespace pepcd {

namespace {

using predicates::incircle;
using predicates::orient2d;

void check_finite(std::span<const Point2d> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!std::isfinite(points[i].x()) || !std::isfinite(points[i].y()))
      throw Error(ErrorKind::DegenerateInput, "non-finite coordinate", i);
}

bool lex_less(const Point2d& a, const Point2d& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

void check_distinct(std::span<const Point2d> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(points[a], points[b]) || (points[a] == points[b] && a < b);
  });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (points[order[k]] == points[order[k - 1]])
      throw Error(ErrorKind::DegenerateInput, "duplicate site", std::max(order[k], order[k - 1]));
}

constexpr int kInfinite = -1;

// Cyclically ordered face; kInfinite marks the vertex at infinity. Finite faces
// are counter-clockwise; an infinite face (a, b, inf) lies left of a -> b.
using Face = std::array<int, 3>;

class BowyerWatson {
 public:
  explicit BowyerWatson(std::span<const Point2d> pts) : pts_(pts) {}

  std::vector<Face> run() {
    const std::size_t n = pts_.size();
    std::size_t i1 = 1;
    std::size_t i2 = n;
    for (std::size_t k = 2; k < n; ++k) {
      if (orient2d(pts_[0], pts_[i1], pts_[k]) != 0) {
        i2 = k;
        break;
      }
    }
    if (i2 == n) throw Error(ErrorKind::DegenerateInput, "all sites are collinear");
    int a = 0, b = static_cast<int>(i1), c = static_cast<int>(i2);
    if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    faces_ = {{a, b, c}, {b, a, kInfinite}, {c, b, kInfinite}, {a, c, kInfinite}};
    for (std::size_t k = 1; k < n; ++k) {
      if (k == i1 || k == i2) continue;
      insert(static_cast<int>(k));
    }
    std::vector<Face> finite;
    for (const Face& f : faces_)
      if (f[0] != kInfinite && f[1] != kInfinite && f[2] != kInfinite) finite.push_back(f);
    return finite;
  }

 private:
  // Rotate so that the infinite vertex (if any) is last.
  static Face canonical_infinite(Face f) {
    while (f[2] != kInfinite && (f[0] == kInfinite || f[1] == kInfinite))
      f = {f[1], f[2], f[0]};
    return f;
  }

  bool in_conflict(const Face& face, int p) const {
    const Point2d& q = pts_[static_cast<std::size_t>(p)];
    const Face f = canonical_infinite(face);
    if (f[2] != kInfinite)
      return incircle(pts_[static_cast<std::size_t>(f[0])], pts_[static_cast<std::size_t>(f[1])],
                      pts_[static_cast<std::size_t>(f[2])], q) > 0;
    const Point2d& a = pts_[static_cast<std::size_t>(f[0])];
    const Point2d& b = pts_[static_cast<std::size_t>(f[1])];
    const int o = orient2d(a, b, q);
    if (o > 0) return true;
    if (o < 0) return false;
    // On the supporting line: conflict only strictly inside the segment.
    const double t = (q - a).dot(b - a);
    return t > 0.0 && t < (b - a).squaredNorm();
  }

  void insert(int p) {
    std::vector<Face> keep;
    std::vector<Face> cavity;
    keep.reserve(faces_.size() + 4);
    for (const Face& f : faces_) (in_conflict(f, p) ? cavity : keep).push_back(f);
    std::set<std::pair<int, int>> directed;
    for (const Face& f : cavity)
      for (int e = 0; e < 3; ++e) directed.emplace(f[e], f[(e + 1) % 3]);
    for (const Face& f : cavity) {
      for (int e = 0; e < 3; ++e) {
        const int u = f[e], v = f[(e + 1) % 3];
        if (directed.count({v, u})) continue;
        keep.push_back({u, v, p});
      }
    }
    faces_ = std::move(keep);
  }

  std::span<const Point2d> pts_;
  std::vector<Face> faces_;
};

Face sorted(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

// Counter-clockwise, smallest index first.
Face normalize_ccw(Face f, std::span<const Point2d> pts) {
  if (orient2d(pts[static_cast<std::size_t>(f[0])], pts[static_cast<std::size_t>(f[1])],
               pts[static_cast<std::size_t>(f[2])]) < 0)
    std::swap(f[1], f[2]);
  while (f[0] > f[1] || f[0] > f[2]) f = {f[1], f[2], f[0]};
  return f;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Triangles with vertices on a common convex polygon overlap in their interiors
// unless all vertices of one lie within a single closed arc of the other.
bool interior_disjoint(const Face& a, const Face& b, const std::map<int, int>& position, int k) {
  std::array<int, 3> pa{position.at(a[0]), position.at(a[1]), position.at(a[2])};
  std::sort(pa.begin(), pa.end());
  for (int arc = 0; arc < 3; ++arc) {
    const int lo = pa[static_cast<std::size_t>(arc)];
    const int hi = arc < 2 ? pa[static_cast<std::size_t>(arc + 1)] : pa[0] + k;
    bool all_inside = true;
    for (int v : b) {
      int pos = position.at(v);
      if (pos < lo) pos += k;
      if (pos > hi) {
        all_inside = false;
        break;
      }
    }
    if (all_inside) return true;
  }
  return false;
}

// Retriangulate a convex cocircular polygon by greedily taking the smallest
// sorted triple compatible with those already taken.
std::vector<Face> lexicographic_triangulation(std::vector<int> verts, std::span<const Point2d> pts) {
  const Point2d center = [&] {
    Point2d c = Point2d::Zero();
    for (int v : verts) c += pts[static_cast<std::size_t>(v)];
    return Point2d(c / static_cast<double>(verts.size()));
  }();
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    const Point2d da = pts[static_cast<std::size_t>(a)] - center;
    const Point2d db = pts[static_cast<std::size_t>(b)] - center;
    return std::atan2(da.y(), da.x()) < std::atan2(db.y(), db.x());
  });
  const int k = static_cast<int>(verts.size());
  std::map<int, int> position;
  for (int i = 0; i < k; ++i) position[verts[static_cast<std::size_t>(i)]] = i;
  std::vector<int> ids = verts;
  std::sort(ids.begin(), ids.end());
  std::vector<Face> chosen;
  for (std::size_t i = 0; i < ids.size() && static_cast<int>(chosen.size()) < k - 2; ++i)
    for (std::size_t j = i + 1; j < ids.size() && static_cast<int>(chosen.size()) < k - 2; ++j)
      for (std::size_t l = j + 1; l < ids.size() && static_cast<int>(chosen.size()) < k - 2; ++l) {
        const Face cand{ids[i], ids[j], ids[l]};
        bool ok = true;
        for (const Face& c : chosen)
          if (!interior_disjoint(cand, c, position, k)) {
            ok = false;
            break;
          }
        if (ok) chosen.push_back(cand);
      }
  return chosen;
}

std::vector<Face> resolve_cocircular(std::vector<Face> faces, std::span<const Point2d> pts) {
  std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;  // directed edge -> (face, opposite)
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int e = 0; e < 3; ++e)
      edge_owner[{faces[f][e], faces[f][(e + 1) % 3]}] = {static_cast<int>(f), faces[f][(e + 2) % 3]};
  UnionFind groups(faces.size());
  bool any = false;
  for (const auto& [edge, owner] : edge_owner) {
    auto twin = edge_owner.find({edge.second, edge.first});
    if (twin == edge_owner.end() || owner.first > twin->second.first) continue;
    const Face& f = faces[static_cast<std::size_t>(owner.first)];
    if (incircle(pts[static_cast<std::size_t>(f[0])], pts[static_cast<std::size_t>(f[1])],
                 pts[static_cast<std::size_t>(f[2])], pts[static_cast<std::size_t>(twin->second.second)]) == 0) {
      groups.unite(owner.first, twin->second.first);
      any = true;
    }
  }
  if (!any) return faces;
  std::map<int, std::set<int>> members;
  std::map<int, int> group_size;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int g = groups.find(static_cast<int>(f));
    group_size[g]++;
    for (int v : faces[f]) members[g].insert(v);
  }
  std::vector<Face> out;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (group_size[groups.find(static_cast<int>(f))] == 1) out.push_back(faces[f]);
  for (const auto& [g, verts] : members) {
    if (group_size[g] == 1) continue;
    for (const Face& t : lexicographic_triangulation({verts.begin(), verts.end()}, pts)) out.push_back(t);
  }
  return out;
}

}  // namespace

Triangle2d Triangulation::triangle(std::size_t i) const {
  const auto& t = triangles.at(i);
  return Triangle2d(sites[static_cast<std::size_t>(t[0])], sites[static_cast<std::size_t>(t[1])],
                    sites[static_cast<std::size_t>(t[2])]);
}

double Triangulation::area(std::size_t i) const { return triangle(i).area(); }

double Triangulation::hull_area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < triangles.size(); ++i) s += area(i);
  return s;
}

std::vector<double> Triangulation::weights() const {
  std::vector<double> w(triangles.size());
  const double total = hull_area();
  for (std::size_t i = 0; i < triangles.size(); ++i) w[i] = area(i) / total;
  return w;
}

int Triangulation::locate(const Point2d& p) const {
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& t = triangles[i];
    const Point2d& a = sites[static_cast<std::size_t>(t[0])];
    const Point2d& b = sites[static_cast<std::size_t>(t[1])];
    const Point2d& c = sites[static_cast<std::size_t>(t[2])];
    if (orient2d(a, b, p) >= 0 && orient2d(b, c, p) >= 0 && orient2d(c, a, p) >= 0)
      return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> convex_hull(std::span<const Point2d> points) {
  check_finite(points);
  if (points.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 points");
  check_distinct(points);
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)]);
  });
  auto pt = [&](int i) -> const Point2d& { return points[static_cast<std::size_t>(i)]; };
  const int n = static_cast<int>(order.size());
  bool collinear = true;
  for (int k = 2; k < n && collinear; ++k)
    collinear = orient2d(pt(order[0]), pt(order[1]), pt(order[static_cast<std::size_t>(k)])) == 0;
  if (collinear) throw Error(ErrorKind::DegenerateInput, "all points are collinear");

  // Monotone chain keeping collinear boundary points: pop only on right turns.
  std::vector<int> hull;
  for (int idx : order) {
    while (hull.size() >= 2 && orient2d(pt(hull[hull.size() - 2]), pt(hull.back()), pt(idx)) < 0) hull.pop_back();
    hull.push_back(idx);
  }
  const std::size_t lower = hull.size();
  std::vector<bool> on_lower(points.size(), false);
  for (int idx : hull) on_lower[static_cast<std::size_t>(idx)] = true;
  for (int k = n - 2; k >= 0; --k) {
    const int idx = order[static_cast<std::size_t>(k)];
    if (on_lower[static_cast<std::size_t>(idx)] && k != 0) continue;
    while (hull.size() > lower && orient2d(pt(hull[hull.size() - 2]), pt(hull.back()), pt(idx)) < 0)
      hull.pop_back();
    hull.push_back(idx);
  }
  hull.pop_back();
  return hull;
}

Triangulation delaunay(std::span<const Point2d> points) {
  check_finite(points);
  if (points.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 points");
  check_distinct(points);
  std::vector<Face> faces = BowyerWatson(points).run();
  faces = resolve_cocircular(std::move(faces), points);
  for (Face& f : faces) f = normalize_ccw(f, points);
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return sorted(a) < sorted(b); });
  Triangulation t;
  t.sites.assign(points.begin(), points.end());
  t.triangles = std::move(faces);
  t.hull = convex_hull(points);
  return t;
}

}  // namespace pepcd
