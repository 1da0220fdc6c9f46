#include <catch2/catch_amalgamated.hpp>

#include "ebq/algebra.hpp"

using namespace ebq;

namespace {

GroupPtr s3() { return FiniteGroup::generate({Perm({1, 0, 2}), Perm({1, 2, 0})}); }

} // namespace

TEST_CASE("group algebra basics") {
  auto C2 = FiniteGroup::generate({Perm({1, 0})});
  Algebra A = group_algebra(C2->full_subgroup(), Field(2, 1));
  REQUIRE(A.dim() == 2);
  // commutative
  Vec g = A.basis_vec(1);
  REQUIRE(A.mul(g, g) == A.basis_vec(0));
  REQUIRE(A.associativity_holds());

  auto G = s3();
  Algebra kS3 = group_algebra(G->full_subgroup(), Field(2, 1));
  REQUIRE(kS3.dim() == 6);
  REQUIRE(kS3.associativity_holds());
  // unit * x = x for every basis x
  for (int i = 0; i < 6; ++i)
    REQUIRE(kS3.mul(kS3.unit(), kS3.basis_vec(i)) == kS3.basis_vec(i));
  // center has dimension 3 = number of conjugacy classes
  REQUIRE(center_subspace(kS3).dim() == 3);
}

TEST_CASE("splitting degrees") {
  auto C2 = FiniteGroup::generate({Perm({1, 0})});
  REQUIRE(splitting_degree(*C2, 2) == 1);

  auto G = s3();
  REQUIRE(splitting_degree(*G, 3) == 1); // 3 = 1 mod 2
  REQUIRE(splitting_degree(*G, 2) == 2); // order of 2 mod 3

  auto A5 = FiniteGroup::generate({Perm({1, 2, 3, 4, 0}), Perm({1, 2, 0, 3, 4})});
  REQUIRE(A5->order() == 60);
  REQUIRE(splitting_degree(*A5, 2) == 4); // order of 2 mod 15
  REQUIRE(splitting_degree(*A5, 3) == 4); // order of 3 mod 10
  REQUIRE(splitting_degree(*A5, 5) == 2); // order of 5 mod 6
}

TEST_CASE("subalgebra and quotient machinery") {
  Field F(3, 1);
  auto G = s3();
  auto A = std::make_shared<Algebra>(group_algebra(G->full_subgroup(), F));

  SubAlgebra Z = center_subalgebra(A);
  REQUIRE(Z.alg.dim() == 3);
  REQUIRE(Z.alg.associativity_holds());
  // center round-trips through coordinates
  for (int i = 0; i < Z.alg.dim(); ++i) {
    Vec amb = Z.to_ambient(Z.alg.basis_vec(i));
    REQUIRE(Z.to_sub(amb) == Z.alg.basis_vec(i));
  }
  // closure failure is detected
  Mat bad(F, 1, 6);
  bad.at(0, 1) = 1; // single transposition does not span a subalgebra
  REQUIRE_THROWS_AS(make_subalgebra(A, bad, A->unit()), Error);

  // quotient by the augmentation ideal of kC3 inside kS3? use kC3 directly
  auto C3 = FiniteGroup::generate({Perm({1, 2, 0})});
  auto B = std::make_shared<Algebra>(group_algebra(C3->full_subgroup(), F));
  // augmentation ideal = span{g - 1, g^2 - 1}
  Mat J(F, 2, 3);
  J.at(0, 0) = 2;
  J.at(0, 1) = 1;
  J.at(1, 0) = 2;
  J.at(1, 2) = 1;
  QuotientAlgebra Q = quotient_by_ideal(B, Subspace::span(J));
  REQUIRE(Q.alg.dim() == 1);
  REQUIRE(Q.project(B->basis_vec(1)) == Q.project(B->basis_vec(0)));
  REQUIRE(Q.project(Q.lift(Vec{1})) == Vec{1});
}
