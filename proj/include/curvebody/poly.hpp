#pragma once

#include <vector>

namespace curvebody {

// One monomial: coefficient times prod_i x_i^powers[i].
struct PolyTerm {
  double coeff = 0.0;
  std::vector<int> powers;
};

// Polynomial in a fixed number of real variables, kept in canonical form:
// terms sorted by exponent multi-index, duplicates merged, zero coefficients
// dropped.  Coefficients are plain doubles; the bracket tables we verify with
// this type involve only small integers, so equality checks come out exact.
class PolyFunction {
 public:
  explicit PolyFunction(int nvars);

  static PolyFunction monomial(int nvars, double coeff, std::vector<int> powers);
  static PolyFunction variable(int nvars, int index);
  static PolyFunction constant(int nvars, double value);

  int nvars() const { return nvars_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  double max_abs_coeff() const;
  int degree() const;

  PolyFunction partial(int var) const;
  // Substitutes x_var = 0, i.e. drops every monomial containing that variable.
  PolyFunction substitute_zero(int var) const;
  double evaluate(const std::vector<double>& x) const;

  PolyFunction& operator+=(const PolyFunction& other);
  PolyFunction& operator-=(const PolyFunction& other);
  PolyFunction& operator*=(double scale);

 private:
  void canonicalize();

  int nvars_;
  std::vector<PolyTerm> terms_;
};

PolyFunction operator+(PolyFunction a, const PolyFunction& b);
PolyFunction operator-(PolyFunction a, const PolyFunction& b);
PolyFunction operator*(double scale, PolyFunction p);
PolyFunction operator*(const PolyFunction& a, const PolyFunction& b);

}  // namespace curvebody
