#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Sparse matrix over the rationals. All solver entry points are pure and
/// deterministic: entries iterate in (row, col) order and elimination uses a
/// fixed pivoting rule, so repeated runs produce identical results.
struct SparseMatrix {
  long rows = 0;
  long cols = 0;
  std::map<std::pair<long, long>, Rational> entries;

  SparseMatrix() = default;
  SparseMatrix(long r, long c) : rows(r), cols(c) {}

  void set(long r, long c, const Rational& v);
  void add(long r, long c, const Rational& v);
  Rational at(long r, long c) const;
  SparseMatrix transposed() const;
  /// Copy with the given columns deleted; remaining columns keep their order.
  SparseMatrix withColumnsDeleted(const std::set<long>& cols) const;
};

/// Exact rank over the rationals.
long rank(const SparseMatrix& m);

/// Basis of the nullspace, exactly cols - rank(m) vectors, deterministic.
std::vector<std::vector<Rational>> kernelBasis(const SparseMatrix& m);

/// Dimension of the image of ker(m) under projection onto the keep-columns.
long projectedSolutionDim(const SparseMatrix& m, const std::set<long>& keep);

}  // namespace instanton
