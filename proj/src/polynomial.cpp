#include "ssfem/polynomial.hpp"

#include "ssfem/errors.hpp"

namespace ssfem {

namespace {

std::vector<Integer> factorials(int up_to) {
  std::vector<Integer> f(up_to + 1);
  f[0] = 1;
  for (int i = 1; i <= up_to; ++i) f[i] = f[i - 1] * i;
  return f;
}

Integer multinomial(std::span<const int> alpha, const std::vector<Integer>& fact) {
  int k = 0;
  for (int a : alpha) k += a;
  Integer m = fact[k];
  for (int a : alpha) m /= fact[a];
  return m;
}

// powers[i][e] = x_i^e for e = 0..degree.
std::vector<std::vector<Rational>> power_table(const BaryPoint& x, int degree) {
  std::vector<std::vector<Rational>> powers(x.coords.size(), std::vector<Rational>(degree + 1));
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    powers[i][0] = 1;
    for (int e = 1; e <= degree; ++e) powers[i][e] = powers[i][e - 1] * x.coords[i];
  }
  return powers;
}

void check_point(int dim, const BaryPoint& x) {
  if (x.ambient_dim() != dim) throw InvalidArgument("point and polynomial dimensions differ");
}

void check_direction(int dim, std::span<const Rational> dir) {
  if (static_cast<int>(dir.size()) != dim + 1) {
    throw InvalidArgument("invalid direction: expected " + std::to_string(dim + 1) +
                          " barycentric entries");
  }
  Rational sum = 0;
  for (const auto& v : dir) sum += v;
  if (sum != 0) throw InvalidArgument("invalid direction: entries sum to " + sum.get_str());
}

}  // namespace

Polynomial::Polynomial(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || degree < 0) throw InvalidArgument("polynomial needs dim >= 1 and degree >= 0");
}

Polynomial Polynomial::constant(int dim, int degree, const Rational& value) {
  Polynomial p(dim, degree);
  if (value == 0) return p;
  for_each_index(dim, degree, [&](std::span<const int> a) {
    p.coeffs_.emplace(BernsteinIndex(std::vector<int>(a.begin(), a.end())), value);
  });
  return p;
}

Polynomial Polynomial::bernstein_basis(const BernsteinIndex& alpha) {
  Polynomial p(alpha.dim(), alpha.degree());
  p.coeffs_.emplace(alpha, Rational(1));
  return p;
}

Polynomial Polynomial::from_dense(int dim, int degree, std::span<const Rational> coefficients) {
  Polynomial p(dim, degree);
  if (Count(static_cast<unsigned long>(coefficients.size())) != poly_dim(dim, degree)) {
    throw InvalidArgument("from_dense: coefficient count does not match the space dimension");
  }
  std::size_t i = 0;
  for_each_index(dim, degree, [&](std::span<const int> a) {
    const Rational& c = coefficients[i++];
    if (c != 0) p.coeffs_.emplace(BernsteinIndex(std::vector<int>(a.begin(), a.end())), c);
  });
  return p;
}

Rational Polynomial::coefficient(const BernsteinIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Polynomial::add(const BernsteinIndex& alpha, const Rational& value) {
  if (alpha.dim() != dim_ || alpha.degree() != degree_) {
    throw InvalidArgument("index " + alpha.to_string() + " does not belong to this polynomial space");
  }
  if (value == 0) return;
  auto [it, inserted] = coeffs_.emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_ || other.degree_ != degree_) {
    throw InvalidArgument("adding polynomials from different spaces");
  }
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [alpha, c] : coeffs_) c *= scale;
  return *this;
}

Rational eval(const Polynomial& p, const BaryPoint& x) {
  check_point(p.dim(), x);
  const auto fact = factorials(p.degree());
  const auto powers = power_table(x, p.degree());
  Rational sum = 0;
  for (const auto& [alpha, c] : p.coefficients()) {
    Rational term(multinomial(alpha.entries(), fact));
    for (int i = 0; i <= p.dim(); ++i) term *= powers[i][alpha[i]];
    sum += c * term;
  }
  return sum;
}

std::vector<Rational> bernstein_values(int dim, int degree, const BaryPoint& x) {
  check_point(dim, x);
  const auto fact = factorials(degree);
  const auto powers = power_table(x, degree);
  std::vector<Rational> values;
  for_each_index(dim, degree, [&](std::span<const int> a) {
    Rational v(multinomial(a, fact));
    for (int i = 0; i <= dim; ++i) v *= powers[i][a[i]];
    values.push_back(std::move(v));
  });
  return values;
}

Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> dir) {
  check_direction(p.dim(), dir);
  if (p.degree() == 0) return Polynomial(p.dim(), 0);
  // D_u sum c_a B_a = k * sum_{|b|=k-1} (sum_i u_i c_{b+e_i}) B_b
  Polynomial out(p.dim(), p.degree() - 1);
  const Rational k(p.degree());
  for (const auto& [alpha, c] : p.coefficients()) {
    std::vector<int> lowered(alpha.entries().begin(), alpha.entries().end());
    for (int i = 0; i <= p.dim(); ++i) {
      if (alpha[i] == 0 || dir[i] == 0) continue;
      --lowered[i];
      out.add(BernsteinIndex(lowered), k * dir[i] * c);
      ++lowered[i];
    }
  }
  return out;
}

PointDerivative as_point_derivative(const DofFunctional& f) {
  PointDerivative out{{}, f.point};
  if (f.owner.is_full()) return out;
  const int n = f.owner.ambient_dim();
  const auto dirs = normal_directions(f.owner, n);
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    for (int rep = 0; rep < f.direction_multiorder[j]; ++rep) {
      out.directions.push_back(dirs[j].barycentric(n));
    }
  }
  return out;
}

Rational apply_functional(const PointDerivative& f, const Polynomial& p) {
  if (static_cast<int>(f.directions.size()) > p.degree()) return Rational(0);
  Polynomial q = p;
  for (const auto& dir : f.directions) q = directional_derivative(q, dir);
  return eval(q, f.point);
}

Rational apply_functional(const DofFunctional& f, const Polynomial& p) {
  return apply_functional(as_point_derivative(f), p);
}

std::vector<Rational> functional_row(const PointDerivative& f, int dim, int degree) {
  const int t = static_cast<int>(f.directions.size());
  if (t > degree) {
    return std::vector<Rational>(poly_dim(dim, degree).get_ui(), Rational(0));
  }
  for (const auto& dir : f.directions) check_direction(dim, dir);
  // w holds the functional on the degree-m Bernstein basis; start from the
  // point values at degree k - t and apply D_u^T: (D_u^T w)_a = m * sum_i u_i w_{a - e_i}.
  std::vector<Rational> w = bernstein_values(dim, degree - t, f.point);
  for (int step = 0; step < t; ++step) {
    const auto& u = f.directions[step];
    const int m = degree - t + step + 1;
    std::vector<Rational> next;
    next.reserve(poly_dim(dim, m).get_ui());
    for_each_index(dim, m, [&](std::span<const int> a) {
      Rational acc = 0;
      std::vector<int> lowered(a.begin(), a.end());
      for (int i = 0; i <= dim; ++i) {
        if (a[i] == 0 || u[i] == 0) continue;
        --lowered[i];
        acc += u[i] * w[lex_rank(lowered)];
        ++lowered[i];
      }
      next.push_back(acc * m);
    });
    w = std::move(next);
  }
  return w;
}

RationalMatrix vandermonde(int dim, int degree, std::span<const PointDerivative> functionals,
                           std::size_t cap) {
  const std::size_t size = poly_dim(dim, degree).get_ui();
  if (size > cap || functionals.size() > cap) {
    throw SizeError("Vandermonde of size " + std::to_string(size) + " exceeds the cap of " +
                    std::to_string(cap));
  }
  RationalMatrix m(functionals.size(), size);
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    auto row = functional_row(functionals[i], dim, degree);
    for (std::size_t j = 0; j < size; ++j) m(i, j) = std::move(row[j]);
  }
  return m;
}

RationalMatrix vandermonde(const ElementSpec& element, std::size_t cap) {
  const int n = element.profile.ambient_dim();
  const int k = element.profile.degree();
  const Count size = poly_dim(n, k);
  if (size > Count(static_cast<unsigned long>(cap))) {
    throw SizeError("Vandermonde of size " + size.get_str() + " exceeds the cap of " +
                    std::to_string(cap));
  }
  std::vector<PointDerivative> fs;
  fs.reserve(element.functionals.size());
  for (const auto& f : element.functionals) fs.push_back(as_point_derivative(f));
  return vandermonde(n, k, fs, cap);
}

}  // namespace ssfem
