#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rigidity {

// Exact rational scalar used everywhere exactness matters (polynomial
// coefficients, polytope volumes, Jacobian ranks).
using Rat = mpq_class;

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Exact rank of a dense rational matrix via Gaussian elimination.
int rank_exact(std::vector<std::vector<Rat>> m);

// Exact determinant of a square rational matrix.
Rat det_exact(std::vector<std::vector<Rat>> m);

// Solves a square nonsingular system a*x = b. Returns false if singular.
bool solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                 std::vector<Rat>& x);

}  // namespace rigidity
