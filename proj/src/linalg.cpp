#include "instanton/linalg.hpp"

#include <algorithm>

#include "instanton/errors.hpp"

namespace instanton {

void SparseMatrix::set(long r, long c, const Rational& v) {
  if (v.isZero()) {
    entries.erase({r, c});
  } else {
    entries[{r, c}] = v;
  }
}

void SparseMatrix::add(long r, long c, const Rational& v) {
  if (v.isZero()) return;
  auto [it, inserted] = entries.emplace(std::pair{r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.isZero()) entries.erase(it);
  }
}

Rational SparseMatrix::at(long r, long c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix out(cols, rows);
  for (const auto& [rc, v] : entries) out.entries[{rc.second, rc.first}] = v;
  return out;
}

SparseMatrix SparseMatrix::withColumnsDeleted(const std::set<long>& del) const {
  std::vector<long> remap(cols, -1);
  long next = 0;
  for (long c = 0; c < cols; ++c) {
    if (!del.count(c)) remap[c] = next++;
  }
  SparseMatrix out(rows, next);
  for (const auto& [rc, v] : entries) {
    if (remap[rc.second] >= 0) out.entries[{rc.first, remap[rc.second]}] = v;
  }
  return out;
}

namespace {

// Sparse row: (col, value) sorted by col, values nonzero.
using Row = std::vector<std::pair<long, Rational>>;

// r -= f * pivot, merging sorted supports.
void axpy(Row& r, const Rational& f, const Row& pivot) {
  Row out;
  out.reserve(r.size() + pivot.size());
  size_t i = 0, k = 0;
  while (i < r.size() || k < pivot.size()) {
    if (k == pivot.size() || (i < r.size() && r[i].first < pivot[k].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || pivot[k].first < r[i].first) {
      out.emplace_back(pivot[k].first, -(f * pivot[k].second));
      ++k;
    } else {
      Rational v = r[i].second - f * pivot[k].second;
      if (!v.isZero()) out.emplace_back(r[i].first, v);
      ++i;
      ++k;
    }
  }
  r = std::move(out);
}

/// Row echelon form built by reducing rows in insertion order against the
/// pivots found so far; pivot columns are leading columns, pivot rows are
/// normalized to a leading 1. Fully deterministic.
class Echelon {
 public:
  // Returns true if the row added a new pivot.
  bool insert(Row row) {
    while (!row.empty()) {
      long lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Rational inv = Rational(1) / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      axpy(row, row.front().second, it->second);
    }
    return false;
  }

  bool reducesToZero(Row row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return false;
      axpy(row, row.front().second, it->second);
    }
    return true;
  }

  long rank() const { return static_cast<long>(pivots_.size()); }
  const std::map<long, Row>& pivots() const { return pivots_; }

 private:
  std::map<long, Row> pivots_;  // leading col -> normalized row
};

std::vector<Row> toRows(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows);
  for (const auto& [rc, v] : m.entries) rows[rc.first].emplace_back(rc.second, v);
  return rows;
}

}  // namespace

long rank(const SparseMatrix& m) {
  Echelon e;
  for (auto& r : toRows(m)) e.insert(std::move(r));
  return e.rank();
}

std::vector<std::vector<Rational>> kernelBasis(const SparseMatrix& m) {
  Echelon e;
  for (auto& r : toRows(m)) e.insert(std::move(r));
  const auto& pivots = e.pivots();
  std::vector<std::vector<Rational>> basis;
  for (long free = 0; free < m.cols; ++free) {
    if (pivots.count(free)) continue;
    std::vector<Rational> x(m.cols, Rational(0));
    x[free] = Rational(1);
    // Back-substitute pivot rows from the highest pivot column down.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& [pc, row] = *it;
      if (pc > free) continue;
      Rational s(0);
      for (const auto& [c, v] : row) {
        if (c != pc) s += v * x[c];
      }
      x[pc] = -s;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

long projectedSolutionDim(const SparseMatrix& m, const std::set<long>& keep) {
  for (long c : keep) {
    if (c < 0 || c >= m.cols) {
      throw Error(ErrorKind::BadConfig, "projection column out of range");
    }
  }
  long nullity = m.cols - rank(m);
  // Solutions vanishing on the kept coordinates = kernel of the matrix with
  // those columns removed.
  SparseMatrix dropped = m.withColumnsDeleted(keep);
  long nullity0 = dropped.cols - rank(dropped);
  return nullity - nullity0;
}

}  // namespace instanton
