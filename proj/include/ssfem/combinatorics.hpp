#pragma once

#include <optional>

#include "ssfem/numeric.hpp"

namespace ssfem {

/// C(m, n) = m! / ((m-n)! n!). Throws InvalidArgument unless 0 <= n <= m.
Count binomial(int m, int n);

/// Dimension of the degree-k polynomials in n variables, C(k+n, n).
Count poly_dim(int n, int k);

/// Sum_{i=0}^{k} C(n+i, i), which collapses to C(n+k+1, k).
Count hockey_stick_a(int n, int k);

/// Sum_{i=0}^{k} C(n+i, n), which collapses to C(n+k+1, n+1).
Count hockey_stick_b(int n, int k);

/// dim P_degree on a face_dim-simplex minus (face_dim+1) corner blocks of
/// dim P_corner_degree. With no corner degree nothing is chopped.
/// Throws InvalidConfiguration when the corners outweigh the whole block.
Count chopped_count(int face_dim, int degree, std::optional<int> corner_degree);

}  // namespace ssfem
