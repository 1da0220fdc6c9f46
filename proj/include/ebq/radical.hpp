#pragma once

#include <utility>
#include <vector>

#include "ebq/algebra.hpp"

namespace ebq {

/// Jacobson radical of a finite-dimensional algebra over GF(p^e).
///
/// Characteristic-p descending kernel chain: with L the left regular
/// representation and c_m(z) the coefficient of t^(dim-m) in the
/// characteristic polynomial of L_z, set I_0 = A and
///
///   I_{i+1} = {x in I_i : c_{p^i}(L_{x y}) = 0 for all y in I_i}.
///
/// On I_i x I_i the functional is p^i-semilinear in x, so each step is
/// a kernel computation after twisting coordinates by the inverse
/// Frobenius. The chain stabilizes to the radical once p^i exceeds the
/// dimension. The plain trace form (stage 0 alone) is degenerate in
/// characteristic p, which is what the higher stages repair.
///
/// The returned subspace is checked to be a two-sided ideal here;
/// nilpotency is certified by nilpotency_degree wherever a lift needs
/// it, and semisimplicity of the quotient downstream by the Wedderburn
/// machinery.
inline Subspace jacobson_radical(const Algebra& A, int dim_cap = 400) {
  int n = A.dim();
  require(n <= dim_cap, "jacobson_radical: dimension cap exceeded");
  const Field& F = A.field();
  int p = F.p();

  Mat cur = Mat::identity(F, n); // rows span I_i
  long m = 1;
  int stage = 0;
  while (m <= n && cur.rows() > 0) {
    int k = cur.rows();
    Mat cond(F, k, k);
    for (int j = 0; j < k; ++j) {
      for (int y = 0; y < k; ++y) {
        Vec z = A.mul(cur.row(j), cur.row(y));
        Vec cp = A.left_mult(z).char_poly();
        cond.at(y, j) = cp[static_cast<size_t>(n - m)];
      }
    }
    Mat mu = cond.kernel();
    std::vector<Vec> next_rows;
    for (int r = 0; r < mu.rows(); ++r) {
      Vec combo(n, 0);
      for (int j = 0; j < k; ++j) {
        ffe lam = F.frob_inv(mu.at(r, j), stage % F.e());
        if (lam)
          axpy(F, combo, lam, cur.row(j));
      }
      next_rows.push_back(std::move(combo));
    }
    cur = Subspace::span(F, next_rows, n).basis();
    m *= p;
    ++stage;
  }

  Subspace J = Subspace::span(cur);

  // two-sided ideal check
  for (int i = 0; i < J.dim(); ++i)
    for (int b = 0; b < n; ++b) {
      require(J.contains(A.mul(A.basis_vec(b), J.basis().row(i))),
              "jacobson_radical: result is not a left ideal");
      require(J.contains(A.mul(J.basis().row(i), A.basis_vec(b))),
              "jacobson_radical: result is not a right ideal");
    }
  return J;
}

/// Subspace product span{a*b : a in U, b in W}.
inline Subspace subspace_product(const Algebra& A, const Subspace& U,
                                 const Subspace& W) {
  std::vector<Vec> rows;
  for (int i = 0; i < U.dim(); ++i)
    for (int j = 0; j < W.dim(); ++j)
      rows.push_back(A.mul(U.basis().row(i), W.basis().row(j)));
  return Subspace::span(A.field(), rows, A.dim());
}

/// Least d >= 1 with J^d = 0; throws if J is not nilpotent.
inline int nilpotency_degree(const Algebra& A, const Subspace& J) {
  if (J.dim() == 0)
    return 1;
  Subspace power = J;
  int d = 1;
  while (power.dim() > 0) {
    ++d;
    require(d <= A.dim() + 1, "nilpotency_degree: ideal is not nilpotent");
    power = subspace_product(A, power, J);
  }
  return d;
}

} // namespace ebq
