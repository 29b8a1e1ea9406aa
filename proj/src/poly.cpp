#include "curvebody/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvebody {

PolyFunction::PolyFunction(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("polynomial needs nvars >= 0");
}

PolyFunction PolyFunction::monomial(int nvars, double coeff, std::vector<int> powers) {
  if (static_cast<int>(powers.size()) != nvars)
    throw std::invalid_argument("monomial exponent list does not match nvars");
  for (int e : powers)
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  PolyFunction p(nvars);
  p.terms_.push_back({coeff, std::move(powers)});
  p.canonicalize();
  return p;
}

PolyFunction PolyFunction::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> powers(nvars, 0);
  powers[index] = 1;
  return monomial(nvars, 1.0, std::move(powers));
}

PolyFunction PolyFunction::constant(int nvars, double value) {
  return monomial(nvars, value, std::vector<int>(nvars, 0));
}

double PolyFunction::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

int PolyFunction::degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.powers) s += e;
    d = std::max(d, s);
  }
  return d;
}

PolyFunction PolyFunction::partial(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("partial: variable index out of range");
  PolyFunction out(nvars_);
  for (const auto& t : terms_) {
    if (t.powers[var] == 0) continue;
    PolyTerm d = t;
    d.coeff *= d.powers[var];
    d.powers[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  out.canonicalize();
  return out;
}

PolyFunction PolyFunction::substitute_zero(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("substitute_zero: variable index out of range");
  PolyFunction out(nvars_);
  for (const auto& t : terms_)
    if (t.powers[var] == 0) out.terms_.push_back(t);
  out.canonicalize();
  return out;
}

double PolyFunction::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluate: point dimension does not match nvars");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < t.powers[i]; ++e) m *= x[i];
    sum += m;
  }
  return sum;
}

PolyFunction& PolyFunction::operator+=(const PolyFunction& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable counts differ");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PolyFunction& PolyFunction::operator-=(const PolyFunction& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomial variable counts differ");
  for (const auto& t : other.terms_) terms_.push_back({-t.coeff, t.powers});
  canonicalize();
  return *this;
}

PolyFunction& PolyFunction::operator*=(double scale) {
  for (auto& t : terms_) t.coeff *= scale;
  canonicalize();
  return *this;
}

void PolyFunction::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.powers < b.powers; });
  std::vector<PolyTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().powers == t.powers)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PolyTerm& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

PolyFunction operator+(PolyFunction a, const PolyFunction& b) {
  a += b;
  return a;
}

PolyFunction operator-(PolyFunction a, const PolyFunction& b) {
  a -= b;
  return a;
}

PolyFunction operator*(double scale, PolyFunction p) {
  p *= scale;
  return p;
}

PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial variable counts differ");
  PolyFunction out(a.nvars());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      std::vector<int> powers(a.nvars());
      for (int i = 0; i < a.nvars(); ++i) powers[i] = ta.powers[i] + tb.powers[i];
      out += PolyFunction::monomial(a.nvars(), ta.coeff * tb.coeff, std::move(powers));
    }
  return out;
}

}  // namespace curvebody
