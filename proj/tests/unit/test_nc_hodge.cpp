#include <doctest.h>

#include <set>

#include "hodgekit/errors.hpp"
#include "hodgekit/nc_hodge.hpp"
#include "oracles.hpp"

using namespace hodgekit;
using namespace hodgekit::testing;

TEST_SUITE("nc_hodge") {
  TEST_CASE("restrict_to_torus examples") {
    CHECK(restrict_to_torus(SL2Rep{{{0, 0, 1}}}) == CharacterMultiset{{{0, 0}, 1}});
    CHECK(restrict_to_torus(SL2Rep{{{1, 0, 1}}}) == CharacterMultiset{{{1, 0}, 1}, {{-1, 0}, 1}});
    CHECK(restrict_to_torus(SL2Rep{{{1, 1, 1}}}) ==
          CharacterMultiset{{{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}});
  }

  TEST_CASE("purity_check examples") {
    PurityResult trivial = purity_check({{{0, 0}, 1}});
    CHECK(trivial.pure);
    CHECK(trivial.weight == 0);

    PurityResult standard = purity_check({{{1, 0}, 1}, {{-1, 0}, 1}});
    CHECK_FALSE(standard.pure);
    REQUIRE(standard.witness);
    std::set<int> degrees{standard.witness->first.total(), standard.witness->second.total()};
    CHECK(degrees == std::set<int>{1, -1});

    PurityResult square = purity_check({{{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}});
    CHECK_FALSE(square.pure);
    REQUIRE(square.witness);
    CHECK(square.witness->first.total() != square.witness->second.total());
  }

  TEST_CASE("nc_hodge_check examples") {
    NcHodgeReport trivial = nc_hodge_check(SL2Rep{{{0, 0, 1}}});
    CHECK(trivial.is_nc_hodge);
    CHECK(trivial.weight == 0);
    REQUIRE(trivial.induced);
    CHECK(validate_decomposition(*trivial.induced).valid());
    CHECK_FALSE(nc_hodge_check(SL2Rep{{{1, 0, 1}}}).is_nc_hodge);
    CHECK_FALSE(nc_hodge_check(SL2Rep{{{1, 1, 1}}}).is_nc_hodge);

    NcHodgeReport triple = nc_hodge_check(SL2Rep{{{0, 0, 3}}});
    CHECK(triple.is_nc_hodge);
    REQUIRE(triple.induced);
    CHECK(triple.induced->rank == 3);
  }

  TEST_CASE("text form parses and prints") {
    SL2Rep rep = parse_sl2_rep("Sym(1)*conj(Sym(0))x2, Sym(0)*conj(Sym(0))x1");
    CHECK(rep == SL2Rep{{{1, 0, 2}, {0, 0, 1}}});
    CHECK(parse_sl2_rep(to_string(rep)) == rep);
    CHECK(parse_sl2_rep(" Sym( 3 ) * conj( Sym(2) ) x 4 ") == SL2Rep{{{3, 2, 4}}});
    CHECK_THROWS_AS(parse_sl2_rep("Sym(1)"), SchemaError);
    CHECK_THROWS_AS(parse_sl2_rep("Sym(1)*conj(Sym(0))x0"), SchemaError);
    CHECK_THROWS_AS(parse_sl2_rep(""), SchemaError);
    CHECK_THROWS_AS(parse_sl2_rep("Sym(1)*conj(Sym(0))x1,"), SchemaError);
    CHECK_THROWS_AS(parse_torus_embedding("antidiagonal"), SchemaError);
    CHECK(parse_torus_embedding("diagonal") == TorusEmbedding::Diagonal);
  }

  TEST_CASE("characters agree with monomial enumeration and are symmetric") {
    for (unsigned a = 0; a <= 5; ++a)
      for (unsigned b = 0; b <= 5; ++b)
        for (unsigned m = 1; m <= 2; ++m) {
          SL2Rep rep{{{a, b, m}}};
          CharacterMultiset c = restrict_to_torus(rep);
          CHECK(c == oracle_torus_weights(a, b, m));
          CHECK(total_multiplicity(c) == rep.dimension());
          CHECK(rep.dimension() == std::size_t{m} * (a + 1) * (b + 1));
          for (const auto& [key, mult] : c) {
            CHECK(c.at({-key.p, -key.q}) == mult);
            if (a == b) CHECK(c.at(key.conjugate()) == mult);
          }
          CHECK(purity_check(c).pure == oracle_is_pure(c));
          CHECK(nc_hodge_check(rep).is_nc_hodge == (a == 0 && b == 0));
        }
  }

  TEST_CASE("nc_hodge_check is deterministic") {
    SL2Rep rep = parse_sl2_rep("Sym(2)*conj(Sym(1))x1, Sym(0)*conj(Sym(0))x2");
    NcHodgeReport a = nc_hodge_check(rep), b = nc_hodge_check(rep);
    CHECK(a.is_nc_hodge == b.is_nc_hodge);
    CHECK(a.characters == b.characters);
    CHECK(a.witness == b.witness);
  }
}
