#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

enum class VarKind { Unknown, Parameter };

// One squared-distance symbol: x_ij for a non-edge, c_ij for an edge.
struct PairVar {
  VarKind kind;
  int i, j;  // i < j
  std::string name() const;
};

// Variable context of one graph: all C(n,2) pair symbols, unknowns first,
// each block sorted by (i, j). Fixes the exponent-vector arity.
class VarTable {
 public:
  static VarTable for_graph(const Graph& g);

  int size() const { return static_cast<int>(vars_.size()); }
  int unknown_count() const { return unknown_count_; }
  const PairVar& var(int idx) const { return vars_.at(idx); }
  int index_of(int i, int j) const;

  std::vector<int> unknown_indices() const;
  std::vector<int> parameter_indices() const;

 private:
  std::vector<PairVar> vars_;
  std::map<std::pair<int, int>, int> index_;
  int unknown_count_ = 0;
};

// Sparse multivariate polynomial over the rationals with fixed arity.
// All arithmetic is exact; zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int arity = 0) : arity_(arity) {}
  static Polynomial constant(int arity, const Rat& c);
  static Polynomial variable(int arity, int index);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rat& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& rhs) const = default;

  Polynomial derivative(int index) const;

  int total_degree() const;
  // Max total degree restricted to the given coordinates.
  int degree_in(const std::vector<int>& coords) const;
  // Indices of variables that actually occur, sorted.
  std::vector<int> support_vars() const;

  Rat eval(const std::vector<Rat>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  // Fixes the listed coordinates; the result ranges over the remaining
  // coordinates in their original relative order.
  Polynomial substitute(const std::map<int, Rat>& values) const;

  // Reindexes onto the listed coordinates; throws if any other variable
  // occurs in the support.
  Polynomial restricted_to(const std::vector<int>& coords) const;

  // Canonical text form "coeff * x_i_j^e * ..." with terms sorted by
  // exponent vector. The table must match the arity (full or unknown-only).
  std::string to_string(const VarTable& table) const;

 private:
  int arity_;
  std::map<Exponents, Rat> terms_;
};

// Exact determinant of a square matrix of polynomials, by cofactor
// expansion along the first row.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

}  // namespace rigidity
