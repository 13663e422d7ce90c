#include "rigidity/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigidity {

std::string PairVar::name() const {
  std::ostringstream os;
  os << (kind == VarKind::Unknown ? "x_" : "c_") << i << "_" << j;
  return os.str();
}

VarTable VarTable::for_graph(const Graph& g) {
  VarTable t;
  const int n = g.vertex_count();
  for (int pass = 0; pass < 2; ++pass) {
    VarKind want = pass == 0 ? VarKind::Unknown : VarKind::Parameter;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        VarKind kind = g.has_edge(i, j) ? VarKind::Parameter : VarKind::Unknown;
        if (kind != want) continue;
        t.index_[{i, j}] = static_cast<int>(t.vars_.size());
        t.vars_.push_back({kind, i, j});
      }
    if (pass == 0) t.unknown_count_ = static_cast<int>(t.vars_.size());
  }
  return t;
}

int VarTable::index_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = index_.find({i, j});
  if (it == index_.end()) throw std::out_of_range("no variable for pair");
  return it->second;
}

std::vector<int> VarTable::unknown_indices() const {
  std::vector<int> out(unknown_count_);
  for (int i = 0; i < unknown_count_; ++i) out[i] = i;
  return out;
}

std::vector<int> VarTable::parameter_indices() const {
  std::vector<int> out;
  for (int i = unknown_count_; i < size(); ++i) out.push_back(i);
  return out;
}

Polynomial Polynomial::constant(int arity, const Rat& c) {
  Polynomial p(arity);
  if (c != 0) p.terms_[Exponents(arity, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw std::out_of_range("variable index");
  Polynomial p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != arity_)
    throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("arity mismatch");
  Polynomial out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(arity_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
  return out;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= arity_) throw std::out_of_range("variable index");
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    out.terms_[d] = c * e[index];
  }
  return out;
}

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    deg = std::max(deg, s);
  }
  return deg;
}

int Polynomial::degree_in(const std::vector<int>& coords) const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i : coords) s += e.at(i);
    deg = std::max(deg, s);
  }
  return deg;
}

std::vector<int> Polynomial::support_vars() const {
  std::set<int> seen;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < arity_; ++i)
      if (e[i] > 0) seen.insert(i);
  return {seen.begin(), seen.end()};
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("point arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < arity_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::complex<double> Polynomial::eval(
    const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("point arity mismatch");
  std::complex<double> acc(0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t(to_double(c));
    for (int i = 0; i < arity_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::map<int, Rat>& values) const {
  std::vector<int> keep;
  for (int i = 0; i < arity_; ++i)
    if (!values.count(i)) keep.push_back(i);
  Polynomial out(static_cast<int>(keep.size()));
  Exponents e(keep.size());
  for (const auto& [exp, c] : terms_) {
    Rat coeff = c;
    for (const auto& [idx, value] : values)
      for (int k = 0; k < exp[idx]; ++k) coeff *= value;
    for (std::size_t i = 0; i < keep.size(); ++i) e[i] = exp[keep[i]];
    out.add_term(e, coeff);
  }
  return out;
}

Polynomial Polynomial::restricted_to(const std::vector<int>& coords) const {
  std::vector<int> pos(arity_, -1);
  for (std::size_t i = 0; i < coords.size(); ++i) pos[coords.at(i)] = static_cast<int>(i);
  Polynomial out(static_cast<int>(coords.size()));
  Exponents e(coords.size());
  for (const auto& [exp, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < arity_; ++i) {
      if (exp[i] == 0) continue;
      if (pos[i] < 0)
        throw std::invalid_argument("support outside restricted coordinates");
      e[pos[i]] = exp[i];
    }
    out.add_term(e, c);
  }
  return out;
}

std::string Polynomial::to_string(const VarTable& table) const {
  if (terms_.empty()) return "0";
  // Full-arity polynomials name every pair variable; unknown-only
  // polynomials (after specialization) name just the unknown block.
  if (arity_ != table.size() && arity_ != table.unknown_count())
    throw std::invalid_argument("table does not match polynomial arity");
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      os << " * " << table.var(i).name();
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("matrix not square");
  if (k == 1) return m[0][0];
  const int arity = m[0][0].arity();
  Polynomial acc(arity);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace rigidity
