#include "irbp/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irbp {
namespace {

double pow2(int e) { return std::ldexp(1.0, e); }

void check_valid(const BasisId& id) {
  long n = (1L << id.level) - 1;
  bool ok = id.level >= 1 && id.level < 31 && id.p >= 1 && id.p <= n;
  if (id.family == Family::interval)
    ok = ok && id.q == 0;
  else
    ok = ok && id.q >= 1 && id.q <= n;
  if (!ok) throw std::invalid_argument("invalid basis id " + to_string(id));
}

} // namespace

std::string to_string(const BasisId& id) {
  if (id.family == Family::interval)
    return "interval L" + std::to_string(id.level) + " p" + std::to_string(id.p);
  return "square L" + std::to_string(id.level) + " p" + std::to_string(id.p) + " q" +
         std::to_string(id.q);
}

long level_size(Family f, int level) {
  if (level < 1 || level >= 31) throw std::invalid_argument("bad level");
  long n = (1L << level) - 1;
  return f == Family::interval ? n : n * n;
}

long cumulative_size(Family f, int level) {
  long total = 0;
  for (int k = 1; k <= level; ++k) total += level_size(f, k);
  return total;
}

long dense_index(const BasisId& id) {
  check_valid(id);
  long base = id.level > 1 ? cumulative_size(id.family, id.level - 1) : 0;
  if (id.family == Family::interval) return base + id.p - 1;
  long n = (1L << id.level) - 1;
  return base + (id.q - 1) * n + (id.p - 1);
}

BasisId from_dense_index(Family f, long index) {
  if (index < 0) throw std::out_of_range("negative dense index");
  int level = 1;
  while (index >= level_size(f, level)) {
    index -= level_size(f, level);
    ++level;
  }
  if (f == Family::interval) return {f, level, static_cast<std::int32_t>(index + 1), 0};
  long n = (1L << level) - 1;
  return {f, level, static_cast<std::int32_t>(index % n + 1),
          static_cast<std::int32_t>(index / n + 1)};
}

double eval(const BasisId& id, double x, double y) {
  if (id.family == Family::interval) {
    double t = pow2(id.level - 1) * (x + 1.0) - id.p;
    double v = 1.0 - std::fabs(t);
    return v > 0.0 ? std::sqrt(pow2(-id.level)) * v : 0.0;
  }
  double h = pow2(-id.level);
  double u = (x - id.p * h) / h;
  double v = (y - id.q * h) / h;
  double m = std::max({std::fabs(u), std::fabs(v), std::fabs(u - v)});
  return m < 1.0 ? 0.5 * (1.0 - m) : 0.0;
}

std::array<double, 2> eval_grad(const BasisId& id, double x, double y) {
  if (id.family == Family::interval) {
    double t = pow2(id.level - 1) * (x + 1.0) - id.p;
    if (std::fabs(t) >= 1.0) return {0.0, 0.0};
    double s = 0.5 * std::sqrt(pow2(id.level));
    return {t >= 0.0 ? -s : s, 0.0};
  }
  double h = pow2(-id.level);
  double u = (x - id.p * h) / h;
  double v = (y - id.q * h) / h;
  if (std::max({std::fabs(u), std::fabs(v), std::fabs(u - v)}) >= 1.0) return {0.0, 0.0};
  double gu, gv;
  if (u <= 0.0 && v <= 0.0 && v >= u) {
    gu = 1.0; gv = 0.0;
  } else if (u <= 0.0 && v >= 0.0 && v - u <= 1.0) {
    gu = 1.0; gv = -1.0;
  } else if (u >= 0.0 && u <= v) {
    gu = 0.0; gv = -1.0;
  } else if (v >= 0.0 && v <= u) {
    gu = -1.0; gv = 0.0;
  } else if (v <= 0.0 && u >= 0.0 && u - v <= 1.0) {
    gu = -1.0; gv = 1.0;
  } else {
    gu = 0.0; gv = 1.0;
  }
  double s = 0.5 / h;
  return {s * gu, s * gv};
}

std::array<double, 4> support_box(const BasisId& id) {
  check_valid(id);
  if (id.family == Family::interval) {
    double w = pow2(1 - id.level);
    double c = -1.0 + id.p * w;
    return {c - w, c + w, 0.0, 0.0};
  }
  double h = pow2(-id.level);
  return {(id.p - 1) * h, (id.p + 1) * h, (id.q - 1) * h, (id.q + 1) * h};
}

bool supports_overlap(const BasisId& a, const BasisId& b) {
  if (a.family != b.family) throw std::invalid_argument("supports_overlap: family mismatch");
  if (a.family == Family::interval) {
    double wa = pow2(1 - a.level), wb = pow2(1 - b.level);
    return std::fabs(a.p * wa - b.p * wb) < wa + wb;
  }
  // both supports are intersections of slabs normal to x, y, and x-y, so the
  // separating axis only needs those three directions
  double ha = pow2(-a.level), hb = pow2(-b.level), w = ha + hb;
  return std::fabs(a.p * ha - b.p * hb) < w && std::fabs(a.q * ha - b.q * hb) < w &&
         std::fabs((a.p - a.q) * ha - (b.p - b.q) * hb) < w;
}

std::vector<BasisId> children(const BasisId& id) {
  check_valid(id);
  std::vector<BasisId> out;
  if (id.family == Family::interval) {
    for (int d = -1; d <= 1; ++d) out.push_back({id.family, id.level + 1, 2 * id.p + d, 0});
    return out;
  }
  for (int dv = -1; dv <= 1; ++dv)
    for (int du = -1; du <= 1; ++du)
      out.push_back({id.family, id.level + 1, 2 * id.p + du, 2 * id.q + dv});
  return out;
}

std::vector<BasisId> parents(const BasisId& id) {
  check_valid(id);
  std::vector<BasisId> out;
  if (id.level == 1) return out;
  long n = (1L << (id.level - 1)) - 1;
  if (id.family == Family::interval) {
    for (int m = (id.p - 1) / 2; m <= (id.p + 1) / 2; ++m)
      if (m >= 1 && m <= n && std::abs(id.p - 2 * m) <= 1)
        out.push_back({id.family, id.level - 1, m, 0});
    return out;
  }
  for (int nq = (id.q - 1) / 2; nq <= (id.q + 1) / 2; ++nq)
    for (int mp = (id.p - 1) / 2; mp <= (id.p + 1) / 2; ++mp)
      if (mp >= 1 && mp <= n && nq >= 1 && nq <= n && std::abs(id.p - 2 * mp) <= 1 &&
          std::abs(id.q - 2 * nq) <= 1)
        out.push_back({id.family, id.level - 1, mp, nq});
  return out;
}

IndexSet::IndexSet(std::vector<BasisId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end(), IdOrder{});
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

IndexSet IndexSet::levels(Family f, int lo, int hi) {
  std::vector<BasisId> ids;
  for (int k = lo; k <= hi; ++k) {
    long n = (1L << k) - 1;
    if (f == Family::interval)
      for (long p = 1; p <= n; ++p) ids.push_back({f, k, static_cast<std::int32_t>(p), 0});
    else
      for (long q = 1; q <= n; ++q)
        for (long p = 1; p <= n; ++p)
          ids.push_back({f, k, static_cast<std::int32_t>(p), static_cast<std::int32_t>(q)});
  }
  return IndexSet(std::move(ids));
}

bool IndexSet::contains(const BasisId& id) const { return index_of(id) >= 0; }

long IndexSet::index_of(const BasisId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id, IdOrder{});
  if (it == ids_.end() || *it != id) return -1;
  return it - ids_.begin();
}

IndexSet IndexSet::set_union(const IndexSet& o) const {
  std::vector<BasisId> out;
  out.reserve(ids_.size() + o.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out),
                 IdOrder{});
  IndexSet r;
  r.ids_ = std::move(out);
  return r;
}

IndexSet IndexSet::set_minus(const IndexSet& o) const {
  std::vector<BasisId> out;
  std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                      std::back_inserter(out), IdOrder{});
  IndexSet r;
  r.ids_ = std::move(out);
  return r;
}

IndexSet IndexSet::set_intersect(const IndexSet& o) const {
  std::vector<BasisId> out;
  std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                        std::back_inserter(out), IdOrder{});
  IndexSet r;
  r.ids_ = std::move(out);
  return r;
}

IndexSet refine(const IndexSet& s) {
  std::vector<BasisId> ids = s.ids();
  for (const BasisId& id : s.ids()) {
    auto kids = children(id);
    ids.insert(ids.end(), kids.begin(), kids.end());
  }
  return IndexSet(std::move(ids));
}

IndexSet closure(const BasisId& id) {
  std::vector<BasisId> acc{id};
  std::vector<BasisId> frontier{id};
  while (!frontier.empty()) {
    std::vector<BasisId> next;
    for (const BasisId& f : frontier)
      for (const BasisId& par : parents(f)) next.push_back(par);
    acc.insert(acc.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return IndexSet(std::move(acc));
}

IndexSet closure(const IndexSet& s) {
  IndexSet acc = s;
  for (const BasisId& id : s.ids()) acc = acc.set_union(closure(id));
  return acc;
}

void accumulate_expansion_on_grid(const std::vector<BasisId>& ids, const std::vector<double>& coef,
                                  int points_per_side, std::vector<double>& out) {
  if (ids.size() != coef.size()) throw std::invalid_argument("ids/coef length mismatch");
  if (points_per_side < 2) throw std::invalid_argument("need at least 2 grid points");
  int P = points_per_side;
  auto clampi = [&](double t) { return std::clamp(static_cast<int>(t), 0, P - 1); };
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (coef[i] == 0.0) continue;
    const BasisId& id = ids[i];
    auto box = support_box(id);
    if (id.family == Family::interval) {
      // nodes x_j = -1 + 2j/(P-1); endpoints of the range evaluate to 0, so a
      // slightly generous window is harmless
      int jlo = clampi(std::floor((box[0] + 1.0) * 0.5 * (P - 1)));
      int jhi = clampi(std::ceil((box[1] + 1.0) * 0.5 * (P - 1)));
      for (int j = jlo; j <= jhi; ++j)
        out[static_cast<std::size_t>(j)] += coef[i] * eval(id, -1.0 + 2.0 * j / (P - 1));
    } else {
      int xlo = clampi(std::floor(box[0] * (P - 1)));
      int xhi = clampi(std::ceil(box[1] * (P - 1)));
      int ylo = clampi(std::floor(box[2] * (P - 1)));
      int yhi = clampi(std::ceil(box[3] * (P - 1)));
      for (int jy = ylo; jy <= yhi; ++jy)
        for (int jx = xlo; jx <= xhi; ++jx)
          out[static_cast<std::size_t>(jy) * P + jx] +=
              coef[i] * eval(id, double(jx) / (P - 1), double(jy) / (P - 1));
    }
  }
}

} // namespace irbp
