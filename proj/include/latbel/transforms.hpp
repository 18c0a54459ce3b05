#ifndef LATBEL_TRANSFORMS_HPP
#define LATBEL_TRANSFORMS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latbel/check.hpp"
#include "latbel/lattice.hpp"

namespace latbel {

/// A real value for every element of a lattice. Plays every role the theory
/// needs: capacity, belief, mass, commonality, necessity, possibility.
class SetFunction {
 public:
  explicit SetFunction(Lattice l) : lattice_(std::move(l)), values_(lattice_.size(), 0.0) {}
  SetFunction(Lattice l, std::vector<double> values)
      : lattice_(std::move(l)), values_(std::move(values)) {
    if (values_.size() != lattice_.size())
      throw Error(ErrorKind::InvalidArgument,
                  "function has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(lattice_.size()) + " elements");
  }

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator[](Element x) const { return values_[x]; }
  double& operator[](Element x) { return values_[x]; }
  double at(std::string_view name) const { return values_[lattice_.at(name)]; }

  double sum() const {
    double s = 0;
    for (double v : values_) s += v;
    return s;
  }

  friend SetFunction operator+(SetFunction a, const SetFunction& b) {
    require_same(a.lattice_, b.lattice_, "summands");
    for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
    return a;
  }
  friend SetFunction operator*(double s, SetFunction a) {
    for (double& v : a.values_) v *= s;
    return a;
  }

 private:
  Lattice lattice_;
  std::vector<double> values_;
};

/// Largest pointwise difference; both functions must share a lattice.
inline double max_abs_diff(const SetFunction& a, const SetFunction& b) {
  require_same(a.lattice(), b.lattice(), "compared functions");
  double d = 0;
  for (Element x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
  return d;
}

/// Two-variable Möbius function of a lattice: mu(x,x) = 1,
/// mu(x,y) = -Σ_{x≤t<y} mu(x,t) for x < y, and 0 when x ≰ y.
class MobiusMatrix {
 public:
  MobiusMatrix(Lattice l, std::vector<std::int64_t> mu) : lattice_(std::move(l)), mu_(std::move(mu)) {}

  const Lattice& lattice() const noexcept { return lattice_; }
  std::int64_t operator()(Element x, Element y) const { return mu_[x * lattice_.size() + y]; }

 private:
  Lattice lattice_;
  std::vector<std::int64_t> mu_;
};

inline MobiusMatrix mobius_function(const Lattice& l) {
  const std::size_t n = l.size();
  const auto& order = l.poset().linear_extension();
  std::vector<std::int64_t> mu(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    std::int64_t* row = &mu[x * n];
    row[x] = 1;
    const Bits& above = l.poset().up_set(x);
    for (Element y : order) {
      if (y == x || !above[y]) continue;
      // Every t in [x, y) precedes y in the linear extension, so row[t] is final.
      const Bits interval = above & l.poset().down_set(y);
      std::int64_t s = 0;
      for (auto t = interval.find_first(); t != Bits::npos; t = interval.find_next(t))
        if (t != y) s += row[t];
      row[y] = -s;
    }
  }
  return MobiusMatrix(l, std::move(mu));
}

/// m(x) = Σ_{y≤x} mu(y,x) f(y), the unique solution of f(x) = Σ_{y≤x} m(y).
inline SetFunction mobius_transform(const SetFunction& f, const MobiusMatrix& mu) {
  require_same(f.lattice(), mu.lattice(), "function and Möbius matrix");
  const Lattice& l = f.lattice();
  SetFunction m(l);
  for (Element x = 0; x < l.size(); ++x) {
    const Bits& below = l.poset().down_set(x);
    double s = 0;
    for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y))
      s += static_cast<double>(mu(static_cast<Element>(y), x)) * f[static_cast<Element>(y)];
    m[x] = s;
  }
  return m;
}

inline SetFunction mobius_transform(const SetFunction& f) {
  return mobius_transform(f, mobius_function(f.lattice()));
}

/// f(x) = Σ_{y≤x} m(y).
inline SetFunction zeta_transform(const SetFunction& m) {
  const Lattice& l = m.lattice();
  SetFunction f(l);
  for (Element x = 0; x < l.size(); ++x) {
    const Bits& below = l.poset().down_set(x);
    double s = 0;
    for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y))
      s += m[static_cast<Element>(y)];
    f[x] = s;
  }
  return f;
}

/// Commonality: q(x) = Σ_{y≥x} m(y), with m a Möbius-side function.
inline SetFunction comobius_transform(const SetFunction& m) {
  const Lattice& l = m.lattice();
  SetFunction q(l);
  for (Element x = 0; x < l.size(); ++x) {
    const Bits& above = l.poset().up_set(x);
    double s = 0;
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y))
      s += m[static_cast<Element>(y)];
    q[x] = s;
  }
  return q;
}

/// Inverse of comobius_transform by Möbius inversion along the dual order:
/// m(x) = Σ_{y≥x} mu(x,y) q(y).
inline SetFunction mass_from_comobius(const SetFunction& q, const MobiusMatrix& mu) {
  require_same(q.lattice(), mu.lattice(), "function and Möbius matrix");
  const Lattice& l = q.lattice();
  SetFunction m(l);
  for (Element x = 0; x < l.size(); ++x) {
    const Bits& above = l.poset().up_set(x);
    double s = 0;
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y))
      s += static_cast<double>(mu(x, static_cast<Element>(y))) * q[static_cast<Element>(y)];
    m[x] = s;
  }
  return m;
}

inline SetFunction mass_from_comobius(const SetFunction& q) {
  return mass_from_comobius(q, mobius_function(q.lattice()));
}

}  // namespace latbel

#endif  // LATBEL_TRANSFORMS_HPP
