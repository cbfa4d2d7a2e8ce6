#include "bundlecon/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "bundlecon/combinatorics.hpp"

namespace bundlecon::kernels {

namespace {

struct Overflow {};

/// int64 with trapping arithmetic; the enumeration retries in GMP on trap.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  Checked operator-() const {
    if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v;
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend auto operator<=>(Checked a, Checked b) { return a.v <=> b.v; }
};

Checked exactDiv(Checked a, Checked b) { return a.v / b.v; }
Integer exactDiv(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer toInteger(const Checked& c) { return Integer(static_cast<long>(c.v)); }
Integer toInteger(const Integer& c) { return c; }

int signOf(const Checked& c) { return c.v > 0 ? 1 : (c.v < 0 ? -1 : 0); }
int signOf(const Integer& c) { return sgn(c); }

template <typename T>
T determinant(std::vector<T> m, std::size_t n) {
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == T(0)) {
      std::size_t s = k + 1;
      while (s < n && m[s * n + k] == T(0)) ++s;
      if (s == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[s * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = exactDiv(m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j], prev);
      m[i * n + k] = T(0);
    }
    prev = m[k * n + k];
  }
  T d = m[(n - 1) * n + (n - 1)];
  if (sign < 0) d = -d;
  return d;
}

template <typename T>
class FacetSearch {
 public:
  FacetSearch(const std::vector<std::vector<T>>& pts, bool upperOnly)
      : pts_(pts), dim_(pts.front().size()), upperOnly_(upperOnly) {}

  /// All facets found from subsets whose smallest element is `first`.
  void scanFrom(std::size_t first, std::vector<Facet>& out) const {
    const std::size_t n = pts_.size();
    const std::size_t d = dim_;
    std::vector<T> minor((d - 1) * (d - 1));
    std::vector<T> diff((d - 1) * d);
    std::vector<T> normal(d);
    std::vector<int> side(n);
    forEachCombinationStartingAt(n, d, first, [&](const std::vector<std::size_t>& subset) {
      const auto& base = pts_[subset[0]];
      for (std::size_t r = 1; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) diff[(r - 1) * d + c] = pts_[subset[r]][c] - base[c];
      bool zero = true;
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r + 1 < d; ++r)
          for (std::size_t c = 0, cc = 0; c < d; ++c) {
            if (c == j) continue;
            minor[r * (d - 1) + cc++] = diff[r * d + c];
          }
        normal[j] = determinant(minor, d - 1);
        if (j % 2 == 1) normal[j] = -normal[j];
        if (!(normal[j] == T(0))) zero = false;
      }
      if (zero) return true;
      int pos = 0, neg = 0;
      for (std::size_t y = 0; y < n; ++y) {
        T s(0);
        for (std::size_t c = 0; c < d; ++c) s = s + normal[c] * (pts_[y][c] - base[c]);
        side[y] = signOf(s);
        if (side[y] > 0) ++pos;
        if (side[y] < 0) ++neg;
        if (pos && neg) return true;
      }
      int orient = neg > 0 ? 1 : -1;  // flip so that every point is on the nonpositive side
      if (pos == 0 && neg == 0) orient = signOf(normal[d - 1]) >= 0 ? 1 : -1;
      if (upperOnly_ && signOf(normal[d - 1]) * orient <= 0) return true;
      Facet f;
      for (std::size_t y = 0; y < n; ++y)
        if (side[y] == 0) f.members.push_back(y);
      if (f.members.front() != subset[0]) return true;  // reported from its least member
      f.normal.resize(d);
      Integer g = 0;
      for (std::size_t c = 0; c < d; ++c) {
        f.normal[c] = toInteger(normal[c]) * orient;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.normal[c].get_mpz_t());
      }
      for (auto& c : f.normal) c /= g;
      out.push_back(std::move(f));
      return true;
    });
  }

 private:
  const std::vector<std::vector<T>>& pts_;
  std::size_t dim_;
  bool upperOnly_;
};

template <typename T>
std::vector<Facet> runSearch(const std::vector<std::vector<T>>& pts, bool upperOnly, Execution exec) {
  FacetSearch<T> search(pts, upperOnly);
  const long long n = static_cast<long long>(pts.size());
  std::vector<std::vector<Facet>> perFirst(pts.size());
  if (exec == Execution::Serial) {
    for (long long i = 0; i < n; ++i) search.scanFrom(static_cast<std::size_t>(i), perFirst[i]);
  } else {
    bool overflow = false;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
      try {
        search.scanFrom(static_cast<std::size_t>(i), perFirst[i]);
      } catch (const Overflow&) {
#pragma omp atomic write
        overflow = true;
      }
    }
    if (overflow) throw Overflow{};
  }
  std::vector<Facet> all;
  for (auto& v : perFirst)
    for (auto& f : v) all.push_back(std::move(f));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end(), [](const Facet& a, const Facet& b) { return a.members == b.members; }),
            all.end());
  return all;
}

}  // namespace

std::vector<Facet> enumerateFacets(const std::vector<std::vector<Integer>>& points, bool upperOnly, Execution exec) {
  if (points.empty()) return {};
  const std::size_t d = points.front().size();
  if (d == 0) throw InvalidArgument("facet enumeration needs dimension >= 1");
  for (const auto& p : points)
    if (p.size() != d) throw InvalidArgument("points must share one dimension");

  bool fits = true;
  std::vector<std::vector<Checked>> small(points.size(), std::vector<Checked>(d));
  for (std::size_t i = 0; i < points.size() && fits; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      if (!points[i][c].fits_slong_p()) {
        fits = false;
        break;
      }
      small[i][c] = Checked(points[i][c].get_si());
    }
  if (fits) {
    try {
      return runSearch(small, upperOnly, exec);
    } catch (const Overflow&) {
    }
  }
  return runSearch(points, upperOnly, exec);
}

}  // namespace bundlecon::kernels
