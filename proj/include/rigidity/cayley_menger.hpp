#pragma once

#include <map>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/polynomial.hpp"

namespace rigidity {

// Symbolic bordered squared-distance matrix of a graph: entry (0,0) is 0,
// the rest of row/column 0 is 1, the diagonal is 0, and entry (i,j) is the
// pair symbol of {i,j} (parameter c_ij on edges, unknown x_ij otherwise).
class CayleyMengerMatrix {
 public:
  explicit CayleyMengerMatrix(const Graph& g);

  int point_count() const { return n_; }
  const Graph& graph() const { return graph_; }
  const VarTable& vars() const { return table_; }

  // Variable index of entry (i,j) for 1 <= i != j <= n; -1 elsewhere.
  int entry_var(int i, int j) const;
  Polynomial entry(int i, int j) const;

  // D(i1..ik): exact determinant of the submatrix on rows/columns
  // {0, i1..ik}. Requires 2 <= k <= n, distinct indices in 1..n.
  Polynomial minor(std::vector<int> points) const;

  std::vector<int> unknown_indices() const { return table_.unknown_indices(); }

 private:
  int n_;
  Graph graph_;
  VarTable table_;
};

// Substitutes rational values for the parameters of p (keyed by variable
// index in `table`); the result ranges over the unknowns only. Throws if a
// parameter occurring in p has no value.
Polynomial specialize(const Polynomial& p, const VarTable& table,
                      const std::map<int, Rat>& parameter_values);

}  // namespace rigidity
