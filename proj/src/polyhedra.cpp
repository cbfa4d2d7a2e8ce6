#include "bundlecon/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <map>
#include <set>

#include "bundlecon/kernels.hpp"

namespace bundlecon {

LiftedPointSet::LiftedPointSet(std::size_t dim, std::vector<LiftedPoint> pts) : dimension(dim), points(std::move(pts)) {
  std::set<IntVector> seen;
  for (const auto& p : points) {
    if (p.x.size() != dim) throw InvalidArgument("lifted point has wrong dimension");
    if (!seen.insert(p.x).second) throw InvalidArgument("duplicate point " + toString(p.x));
  }
}

namespace {

std::vector<IntVector> differencesFromFirst(const std::vector<IntVector>& pts) {
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector d(pts[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  return diffs;
}

std::vector<IntVector> xsOf(const LiftedPointSet& pts, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts.points[i].x);
  return out;
}

std::vector<Rational> payoffs(const LiftedPointSet& pts, const RationalVector& p) {
  std::vector<Rational> out;
  out.reserve(pts.points.size());
  for (const auto& pt : pts.points) out.push_back(pt.lift - dot(p, pt.x));
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

struct FaceInfo {
  std::size_t maximalCell = 0;
  IntVector functional;  // exposes the face within its maximal cell
};

}  // namespace

std::vector<std::size_t> maximizers(const LiftedPointSet& pts, const RationalVector& p) {
  auto pay = payoffs(pts, p);
  std::vector<std::size_t> out;
  if (pay.empty()) return out;
  Rational best = *std::max_element(pay.begin(), pay.end());
  for (std::size_t i = 0; i < pay.size(); ++i)
    if (pay[i] == best) out.push_back(i);
  return out;
}

int affineDimension(const std::vector<IntVector>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  return static_cast<int>(rankOf(differencesFromFirst(pts)));
}

std::vector<Cell> upperHullFacets(const LiftedPointSet& pts, Execution exec) {
  const std::size_t n = pts.points.size();
  const std::size_t dim = pts.dimension;
  if (n == 0) throw InvalidArgument("upper hull of an empty point set");
  if (n == 1) return {Cell{{0}, RationalVector(dim, Rational(0)), 0}};

  std::vector<IntVector> xs = xsOf(pts, iota(n));
  const auto pivots = pivotColumns(differencesFromFirst(xs), dim);
  const std::size_t k = pivots.size();

  Integer scale = 1;
  for (const auto& pt : pts.points) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), pt.lift.get_den_mpz_t());

  std::vector<std::vector<Integer>> lifted(n, std::vector<Integer>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) lifted[i][j] = static_cast<long>(xs[i][pivots[j]]);
    Rational scaled = pts.points[i].lift * scale;
    lifted[i][k] = scaled.get_num();
  }

  std::vector<Cell> cells;
  for (auto& f : kernels::enumerateFacets(lifted, /*upperOnly=*/true, exec)) {
    // normal (a, b) with b > 0 and a . x + b * scale * V(x) maximal on members
    Cell c;
    c.members = std::move(f.members);
    c.dimension = k;
    c.supportingPrice.assign(dim, Rational(0));
    const Integer denom = f.normal[k] * scale;
    for (std::size_t j = 0; j < k; ++j) c.supportingPrice[pivots[j]] = makeRational(-f.normal[j], denom);
    if (maximizers(pts, c.supportingPrice) != c.members)
      throw InternalError("upper hull facet price does not support its facet");
    cells.push_back(std::move(c));
  }
  return cells;
}

std::vector<Cell> faceLattice(const LiftedPointSet& pts, Execution exec) {
  const std::size_t dim = pts.dimension;
  const auto maximal = upperHullFacets(pts, exec);

  std::map<std::vector<std::size_t>, FaceInfo> faces;
  for (std::size_t mc = 0; mc < maximal.size(); ++mc) {
    const auto& members = maximal[mc].members;
    faces.emplace(members, FaceInfo{mc, IntVector(dim, 0)});
    const auto xs = xsOf(pts, members);
    if (xs.size() == 1) continue;
    const auto pivots = pivotColumns(differencesFromFirst(xs), dim);

    std::vector<std::vector<Integer>> projected(xs.size(), std::vector<Integer>(pivots.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < pivots.size(); ++j) projected[i][j] = static_cast<long>(xs[i][pivots[j]]);

    struct LocalFacet {
      std::vector<std::size_t> members;  // global indices
      IntVector normal;                  // full-dimensional functional
    };
    std::vector<LocalFacet> facets;
    for (const auto& f : kernels::enumerateFacets(projected, /*upperOnly=*/false, exec)) {
      LocalFacet lf;
      for (auto local : f.members) lf.members.push_back(members[local]);
      lf.normal.assign(dim, 0);
      for (std::size_t j = 0; j < pivots.size(); ++j) lf.normal[pivots[j]] = f.normal[j].get_si();
      facets.push_back(std::move(lf));
    }

    // faces of conv(cell) are the nonempty intersections of its facets
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> queue;
    for (const auto& f : facets)
      if (found.insert(f.members).second) queue.push_back(f.members);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& f : facets) {
        std::vector<std::size_t> meet;
        std::set_intersection(queue[q].begin(), queue[q].end(), f.members.begin(), f.members.end(),
                              std::back_inserter(meet));
        if (!meet.empty() && found.insert(meet).second) queue.push_back(std::move(meet));
      }

    for (const auto& face : found) {
      if (faces.count(face)) continue;
      IntVector functional(dim, 0);
      for (const auto& f : facets)
        if (std::includes(f.members.begin(), f.members.end(), face.begin(), face.end()))
          for (std::size_t c = 0; c < dim; ++c) functional[c] += f.normal[c];
      faces.emplace(face, FaceInfo{mc, std::move(functional)});
    }
  }

  std::vector<Cell> cells;
  for (const auto& [members, info] : faces) {
    Cell cell;
    cell.members = members;
    cell.dimension = static_cast<std::size_t>(affineDimension(xsOf(pts, members)));
    const bool isMaximal = maximal[info.maximalCell].members == members;
    if (isMaximal) {
      cell.supportingPrice = maximal[info.maximalCell].supportingPrice;
    } else {
      RationalVector avg(dim, Rational(0));
      std::size_t count = 0;
      for (const auto& m : maximal)
        if (std::includes(m.members.begin(), m.members.end(), members.begin(), members.end())) {
          for (std::size_t c = 0; c < dim; ++c) avg[c] += m.supportingPrice[c];
          ++count;
        }
      for (auto& a : avg) a /= static_cast<long>(count);
      if (maximizers(pts, avg) == members) {
        cell.supportingPrice = std::move(avg);
      } else {
        // unbounded price region: perturb the containing maximal cell's price
        const auto& base = maximal[info.maximalCell];
        const auto pay = payoffs(pts, base.supportingPrice);
        const Rational top = pay[base.members.front()];
        std::int64_t h = std::numeric_limits<std::int64_t>::min();
        for (auto i : members) {
          std::int64_t v = 0;
          for (std::size_t c = 0; c < dim; ++c) v += info.functional[c] * pts.points[i].x[c];
          h = std::max(h, v);
        }
        std::optional<Rational> gap;
        std::int64_t spread = 1;
        std::vector<bool> inBase(pts.points.size(), false);
        for (auto i : base.members) inBase[i] = true;
        for (std::size_t z = 0; z < pts.points.size(); ++z) {
          if (inBase[z]) continue;
          Rational g = top - pay[z];
          if (!gap || g < *gap) gap = g;
          std::int64_t v = 0;
          for (std::size_t c = 0; c < dim; ++c) v += info.functional[c] * pts.points[z].x[c];
          spread = std::max(spread, v - h);
        }
        Rational t = gap ? Rational(*gap / (2 * spread)) : Rational(1);
        cell.supportingPrice = base.supportingPrice;
        for (std::size_t c = 0; c < dim; ++c) cell.supportingPrice[c] -= t * info.functional[c];
        if (maximizers(pts, cell.supportingPrice) != members)
          throw InternalError("perturbed price does not support face " + std::to_string(members.size()));
      }
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.dimension, a.members) < std::tie(b.dimension, b.members);
  });
  return cells;
}

bool inConvexHull(const std::vector<IntVector>& vertices, const IntVector& z) {
  if (vertices.empty()) return false;
  const std::size_t dim = z.size();
  LinearProgram lp(vertices.size());
  lp.addConstraint(RationalVector(vertices.size(), Rational(1)), Relation::Equal, 1);
  for (std::size_t c = 0; c < dim; ++c) {
    RationalVector row(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) row[v] = static_cast<long>(vertices[v][c]);
    lp.addConstraint(std::move(row), Relation::Equal, static_cast<long>(z[c]));
  }
  return solveLP(lp).status != LpStatus::Infeasible;
}

std::vector<IntVector> integerPointsInHull(const std::vector<IntVector>& vertices) {
  if (vertices.empty()) throw InvalidArgument("integer points of an empty hull");
  const std::size_t dim = vertices.front().size();
  IntVector lo = vertices.front(), hi = vertices.front();
  for (const auto& v : vertices)
    for (std::size_t c = 0; c < dim; ++c) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  std::set<IntVector> given(vertices.begin(), vertices.end());
  std::vector<IntVector> out;
  IntVector z = lo;
  while (true) {
    bool corner = true;
    for (std::size_t c = 0; c < dim; ++c)
      if (z[c] != lo[c] && z[c] != hi[c]) corner = false;
    // a bounding-box corner inside the hull is a vertex of the hull
    if (given.count(z) || (!corner && inConvexHull(vertices, z))) out.push_back(z);
    std::size_t c = 0;
    while (c < dim && z[c] == hi[c]) {
      z[c] = lo[c];
      ++c;
    }
    if (c == dim) break;
    ++z[c];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RationalVector> priceRealizing(const LiftedPointSet& pts, const std::vector<std::size_t>& members,
                                             PriceDomain domain) {
  const std::size_t dim = pts.dimension;
  if (members.empty()) throw InvalidArgument("a cell needs at least one member");
  const auto& base = pts.points.at(members.front());
  std::vector<bool> inside(pts.points.size(), false);
  for (auto m : members) inside.at(m) = true;

  // variables: p_0..p_{dim-1}, t; maximize t
  LinearProgram lp(dim + 1);
  for (std::size_t j = 0; j < dim; ++j) lp.freeVariable[j] = domain == PriceDomain::Unrestricted;
  lp.freeVariable[dim] = true;
  lp.objective[dim] = 1;
  for (std::size_t z = 0; z < pts.points.size(); ++z) {
    if (z == members.front()) continue;
    RationalVector row(dim + 1, Rational(0));
    for (std::size_t c = 0; c < dim; ++c) row[c] = static_cast<long>(base.x[c] - pts.points[z].x[c]);
    const Rational rhs = base.lift - pts.points[z].lift;
    if (inside[z]) {
      lp.addConstraint(std::move(row), Relation::Equal, rhs);
    } else {
      row[dim] = 1;
      lp.addConstraint(std::move(row), Relation::LessEqual, rhs);
    }
  }
  RationalVector cap(dim + 1, Rational(0));
  cap[dim] = 1;
  lp.addConstraint(std::move(cap), Relation::LessEqual, 1);
  auto res = solveLP(lp);
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  RationalVector p(res.assignment.begin(), res.assignment.begin() + static_cast<long>(dim));
  if (maximizers(pts, p) != members) throw InternalError("LP price does not realize the requested cell");
  return p;
}

std::optional<Cell> oneDimensionalCellThrough(const LiftedPointSet& pts, std::size_t a, std::size_t b,
                                              PriceDomain domain) {
  const std::size_t dim = pts.dimension;
  const auto& xa = pts.points.at(a).x;
  const auto& xb = pts.points.at(b).x;
  IntVector d(dim);
  for (std::size_t c = 0; c < dim; ++c) d[c] = xb[c] - xa[c];
  if (contentOf(d) == 0) throw InvalidArgument("edge test needs two distinct points");

  // variables: p_0..p_{dim-1} (free), t (free); maximize t
  LinearProgram lp(dim + 1);
  for (std::size_t j = 0; j < dim; ++j) lp.freeVariable[j] = domain == PriceDomain::Unrestricted;
  lp.freeVariable[dim] = true;
  lp.objective[dim] = 1;
  auto row = [&](const IntVector& x) {
    RationalVector r(dim + 1, Rational(0));
    for (std::size_t c = 0; c < dim; ++c) r[c] = static_cast<long>(x[c] - xa[c]);
    return r;
  };
  lp.addConstraint(row(xb), Relation::Equal, pts.points[b].lift - pts.points[a].lift);
  for (std::size_t z = 0; z < pts.points.size(); ++z) {
    if (z == a || z == b) continue;
    const auto& xz = pts.points[z].x;
    bool onLine = true;
    for (std::size_t i = 0; i < dim && onLine; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        if ((xz[i] - xa[i]) * d[j] != (xz[j] - xa[j]) * d[i]) {
          onLine = false;
          break;
        }
    auto r = row(xz);
    if (!onLine) r[dim] = -1;
    lp.addConstraint(std::move(r), Relation::GreaterEqual, pts.points[z].lift - pts.points[a].lift);
  }
  RationalVector cap(dim + 1, Rational(0));
  cap[dim] = 1;
  lp.addConstraint(std::move(cap), Relation::LessEqual, 1);

  auto res = solveLP(lp);
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  Cell cell;
  cell.supportingPrice.assign(res.assignment.begin(), res.assignment.begin() + static_cast<long>(dim));
  cell.members = maximizers(pts, cell.supportingPrice);
  cell.dimension = 1;
  return cell;
}

}  // namespace bundlecon
