#include <catch2/catch_amalgamated.hpp>

#include "ebq/radical.hpp"

using namespace ebq;

namespace {

Algebra product_field_algebra(const Field& F, int copies) {
  // k x k x ... x k
  std::vector<ffe> sc(static_cast<size_t>(copies) * copies * copies, 0);
  for (int i = 0; i < copies; ++i)
    sc[(static_cast<size_t>(i) * copies + i) * copies + i] = 1;
  return Algebra(F, copies, std::move(sc), Vec(copies, 1));
}

Algebra cyclic_group_algebra(int n, const Field& F) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = (i + 1) % n;
  auto C = FiniteGroup::generate({Perm(img)});
  return group_algebra(C->full_subgroup(), F);
}

} // namespace

TEST_CASE("radical of semisimple algebras is zero") {
  REQUIRE(jacobson_radical(product_field_algebra(Field(2, 1), 2)).dim() == 0);
  REQUIRE(jacobson_radical(product_field_algebra(Field(3, 2), 4)).dim() == 0);
  // kC2 over GF(3): semisimple (2 invertible)
  REQUIRE(jacobson_radical(cyclic_group_algebra(2, Field(3, 1))).dim() == 0);
  // kC3 over GF(4): splitting field, semisimple
  REQUIRE(jacobson_radical(cyclic_group_algebra(3, Field(2, 2))).dim() == 0);
}

TEST_CASE("radical of modular group algebras") {
  // kC2 over GF(2): J = span{1 + g}
  Algebra A = cyclic_group_algebra(2, Field(2, 1));
  Subspace J = jacobson_radical(A);
  REQUIRE(J.dim() == 1);
  REQUIRE(J.contains(Vec{1, 1}));
  REQUIRE(nilpotency_degree(A, J) == 2);

  // kC_p over GF(p): local, J = augmentation ideal of dim p-1
  for (int p : {2, 3, 5}) {
    Algebra B = cyclic_group_algebra(p, Field(p, 1));
    Subspace JB = jacobson_radical(B);
    REQUIRE(JB.dim() == p - 1);
    // every element of J is nilpotent
    for (int i = 0; i < JB.dim(); ++i) {
      Vec x = JB.basis().row(i);
      Vec pw = x;
      for (int k = 0; k < p; ++k)
        pw = B.mul(pw, x);
      REQUIRE(is_zero(pw));
    }
  }

  // kS3 over GF(3): J has dimension 4 (two 1-dim simples survive)
  auto S3 = FiniteGroup::generate({Perm({1, 0, 2}), Perm({1, 2, 0})});
  Algebra kS3 = group_algebra(S3->full_subgroup(), Field(3, 1));
  Subspace J3 = jacobson_radical(kS3);
  REQUIRE(J3.dim() == 4);

  // kS3 over GF(4): semisimple part is k x M_2(k), so dim J = 6 - 5 = 1
  Algebra kS3b = group_algebra(S3->full_subgroup(), Field(2, 2));
  REQUIRE(jacobson_radical(kS3b).dim() == 1);
}

TEST_CASE("radical certificates") {
  for (auto mk : {std::function<Algebra()>(
                      [] { return cyclic_group_algebra(6, Field(3, 1)); }),
                  std::function<Algebra()>([] {
                    auto S3 = FiniteGroup::generate(
                        {Perm({1, 0, 2}), Perm({1, 2, 0})});
                    return group_algebra(S3->full_subgroup(), Field(2, 2));
                  })}) {
    Algebra A = mk();
    auto Aptr = std::make_shared<Algebra>(A);
    Subspace J = jacobson_radical(A);
    int d = nilpotency_degree(A, J);
    REQUIRE(d >= 1);
    // the quotient has zero radical
    QuotientAlgebra Q = quotient_by_ideal(Aptr, J);
    REQUIRE(jacobson_radical(Q.alg).dim() == 0);
  }

  // kC6 over GF(3) = kC3 (x) kC2: J = J(kC3) tensor kC2, dim 4
  Algebra A6 = cyclic_group_algebra(6, Field(3, 1));
  REQUIRE(jacobson_radical(A6).dim() == 4);
}
