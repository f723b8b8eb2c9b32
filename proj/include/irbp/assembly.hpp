#pragma once
#include <functional>
#include <vector>

#include "irbp/basis.hpp"
#include "irbp/sparse.hpp"

namespace irbp {

// Exact energy inner product of two dictionary functions (integral of
// grad dot grad). Closed form: the common refinement of both supports is
// walked piecewise, where both gradients are constant. Entries can be exactly
// zero even for overlapping supports; those are not stored by the matrix
// builders.
double stiffness_entry(const BasisId& a, const BasisId& b);

// Load entries by adaptive quadrature over the support cells. Breakpoints of
// the integrand (sharp features of the rhs) are forwarded to the interval
// rule.
double load_entry(const BasisId& id, const std::function<double(double)>& rhs,
                  double rel_tol = 1e-10, const std::vector<double>& breakpoints = {});
double load_entry(const BasisId& id, const std::function<double(double, double)>& rhs,
                  double rel_tol = 1e-10);

// Stiffness block for an explicit column order; rows are looked up in `rows`.
SparseMatrix stiffness_matrix(const IndexSet& rows, const std::vector<BasisId>& cols);

// One refinement-step system: rows Rhat, columns [C_prev | Chat] (each block
// in id order, C_prev first), with the load vector over Rhat.
struct BlockSystem {
  std::vector<BasisId> row_ids;
  std::vector<BasisId> col_ids;
  long split = 0; // index of the first Chat column
  SparseMatrix A;
  std::vector<double> b;
};

BlockSystem build_block_system(const IndexSet& rhat, const IndexSet& c_prev, const IndexSet& chat,
                               const std::function<double(const BasisId&)>& load_fn);

} // namespace irbp
