#pragma once
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace irbp {

// Two hierarchical hat-function dictionaries:
//   interval: level-k hats on (-1,1), positions l = 1..2^k-1, scaled so the
//             stiffness diagonal is exactly 1.
//   square:   level-j hats on the three-direction mesh of (0,1)^2, positions
//             (p,q) in [1,2^j-1]^2, same normalization (value 1/2 at the
//             center node).
// Levels start at 1 and all levels are kept together (a generating system,
// not a basis).
enum class Family : std::uint8_t { interval, square };

struct BasisId {
  Family family{Family::interval};
  std::int32_t level{1};
  std::int32_t p{1};
  std::int32_t q{0}; // unused for interval ids

  friend auto operator<=>(const BasisId&, const BasisId&) = default;
};

// Ordering used everywhere an id set is laid out as coefficients:
// level-major, then q, then p.
struct IdOrder {
  bool operator()(const BasisId& a, const BasisId& b) const {
    if (a.family != b.family) return a.family < b.family;
    if (a.level != b.level) return a.level < b.level;
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  }
};

std::string to_string(const BasisId& id);

long level_size(Family f, int level);
// number of ids with level <= `level` (0 for level 0)
long cumulative_size(Family f, int level);
// position of id within the level-major enumeration of its family
long dense_index(const BasisId& id);
BasisId from_dense_index(Family f, long index);

double eval(const BasisId& id, double x, double y = 0.0);
// gradient, zero outside the support (and on mesh lines, where it takes the
// limit from an adjacent cell -- a measure-zero set that never matters here)
std::array<double, 2> eval_grad(const BasisId& id, double x, double y = 0.0);
// bounding box of the open support: {xlo, xhi, ylo, yhi}; ylo/yhi are 0 for
// interval ids
std::array<double, 4> support_box(const BasisId& id);
// exact open-support intersection test (separating-axis on the hexagons for
// the square family)
bool supports_overlap(const BasisId& a, const BasisId& b);

// one level finer: 3 children on the interval, 9 on the square
std::vector<BasisId> children(const BasisId& id);
// one level coarser: ids whose open support contains this support (1-2 on the
// interval, 1-4 on the square; empty at level 1)
std::vector<BasisId> parents(const BasisId& id);

// Sorted duplicate-free id set with the usual set algebra.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<BasisId> ids);
  static IndexSet levels(Family f, int lo, int hi);

  const std::vector<BasisId>& ids() const { return ids_; }
  long size() const { return static_cast<long>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(const BasisId& id) const;
  // position of id in the sorted order, -1 if absent
  long index_of(const BasisId& id) const;
  const BasisId& operator[](long i) const { return ids_[static_cast<std::size_t>(i)]; }

  IndexSet set_union(const IndexSet& o) const;
  IndexSet set_minus(const IndexSet& o) const;
  IndexSet set_intersect(const IndexSet& o) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<BasisId> ids_;
};

// S together with every child of every member
IndexSet refine(const IndexSet& s);
// id with all its ancestors
IndexSet closure(const BasisId& id);
// union of closures
IndexSet closure(const IndexSet& s);

// Adds coef[i] * basis_i to `out` over a uniform grid (points_per_side nodes
// per axis spanning the closed domain); out has points_per_side entries for
// interval ids, points_per_side^2 (x fastest) for square ids. Only nodes
// inside each support are touched.
void accumulate_expansion_on_grid(const std::vector<BasisId>& ids, const std::vector<double>& coef,
                                  int points_per_side, std::vector<double>& out);

} // namespace irbp
