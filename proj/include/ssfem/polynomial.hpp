#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ssfem/bernstein.hpp"
#include "ssfem/dofs.hpp"
#include "ssfem/linalg.hpp"

namespace ssfem {

// Polynomial in Bernstein-Bezier form on an n-simplex:
//   p = sum_alpha c_alpha * k!/alpha! * lambda^alpha.
// Coefficients are stored sparsely; absent entries are zero and zeros are
// never stored.
class Polynomial {
 public:
  Polynomial(int dim, int degree);

  static Polynomial constant(int dim, int degree, const Rational& value);
  static Polynomial bernstein_basis(const BernsteinIndex& alpha);
  // Coefficients listed in enumerate_indices order.
  static Polynomial from_dense(int dim, int degree, std::span<const Rational> coefficients);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<BernsteinIndex, Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(const BernsteinIndex& alpha) const;
  void add(const BernsteinIndex& alpha, const Rational& value);
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scale);
  bool operator==(const Polynomial&) const = default;

 private:
  int dim_;
  int degree_;
  std::map<BernsteinIndex, Rational> coeffs_;
};

/// Exact value at a barycentric point.
Rational eval(const Polynomial& p, const BaryPoint& x);

/// All degree-`degree` Bernstein basis values at x, in enumerate_indices order.
std::vector<Rational> bernstein_values(int dim, int degree, const BaryPoint& x);

/// Derivative along a barycentric direction (entries summing to zero).
/// Degree drops by one; the derivative of a degree-0 polynomial is the zero
/// polynomial of degree 0. Throws InvalidArgument("invalid direction") when
/// the entries do not sum to zero.
Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> dir);

// Iterated directional derivative evaluated at a point; the generic form of
// a nodal functional, usable on any simplex once directions and point are
// written in that simplex's barycentric frame.
struct PointDerivative {
  std::vector<std::vector<Rational>> directions;
  BaryPoint point;
};

PointDerivative as_point_derivative(const DofFunctional& f);

Rational apply_functional(const PointDerivative& f, const Polynomial& p);
Rational apply_functional(const DofFunctional& f, const Polynomial& p);

/// The functional's values on every degree-k Bernstein basis function, in
/// enumerate_indices order. Computed by pushing the point's Bernstein values
/// through the transposed derivative maps.
std::vector<Rational> functional_row(const PointDerivative& f, int dim, int degree);

/// Entry (i, j) = functional i applied to the j-th Bernstein basis function.
/// Throws SizeError beyond `cap` functionals.
RationalMatrix vandermonde(const ElementSpec& element, std::size_t cap = kDefaultCap);
RationalMatrix vandermonde(int dim, int degree, std::span<const PointDerivative> functionals,
                           std::size_t cap = kDefaultCap);

}  // namespace ssfem
