#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prack/projective.hpp"

using namespace prack;

TEST_CASE("additive family worked values") {
  MapFamily f{MapFamilyTag::additive1, Rat(2), Rat(1)};
  auto r = eval_map(f, Rat(1), Rat(1));  // b = 1, a = 1
  REQUIRE(r.has_value());
  CHECK(r->first == Rat(1, 2));   // sigma = a - (z1-z2)/(a+b) = 1 - 1/2
  CHECK(r->second == Rat(3, 2));  // tau   = b + 1/2
  // equal parameters give the coupling-free map
  MapFamily beq{MapFamilyTag::additive1, Rat(3), Rat(3)};
  auto req = eval_map(beq, Rat(5, 7), Rat(2));
  REQUIRE(req.has_value());
  CHECK(req->first == Rat(2));
  CHECK(req->second == Rat(5, 7));
  // a + b = 0 is a pole
  CHECK_FALSE(eval_map(f, Rat(-2), Rat(2)).has_value());
}

TEST_CASE("multiplicative families at equal parameters") {
  for (MapFamilyTag tag :
       {MapFamilyTag::mult2, MapFamilyTag::mult3, MapFamilyTag::mult4}) {
    MapFamily f{tag, Rat(2), Rat(2)};
    auto r = eval_map(f, Rat(3, 5), Rat(7, 2));
    REQUIRE(r.has_value());
    CHECK(r->first == Rat(7, 2));
    CHECK(r->second == Rat(3, 5));
  }
}

TEST_CASE("closed-form inverse of the additive family") {
  MapFamily f{MapFamilyTag::additive1, Rat(2), Rat(1)};
  // a = b is the pole of the inverse
  CHECK_FALSE(sigma_inverse_closed_form(f, Rat(1), Rat(1)).has_value());
  auto inv = sigma_inverse_closed_form(f, Rat(1), Rat(0));
  REQUIRE(inv.has_value());
  CHECK(*inv == Rat(0));  // -1 + (2-1)/(1-0)
  auto round = eval_map(f, *inv, Rat(1));
  REQUIRE(round.has_value());
  CHECK(round->first == Rat(0));
}

TEST_CASE("sampled Yang-Baxter checks pass for all four families") {
  struct Pick {
    MapFamilyTag tag;
    long long z1, z2, z3;
  };
  // the fourth family is degenerate at parameter value 1 (its coupling
  // collapses to a constant there), so it gets parameters away from 0 and 1
  for (Pick p : {Pick{MapFamilyTag::additive1, 2, 1, 3},
                 Pick{MapFamilyTag::mult2, 1, 2, 3},
                 Pick{MapFamilyTag::mult3, 2, 1, 3},
                 Pick{MapFamilyTag::mult4, 2, 5, 3}}) {
    SampledReport rep = ybe_check_sampled(p.tag, Rat(p.z1), Rat(p.z2),
                                          Rat(p.z3), 200, 11);
    CHECK(rep.samples == 200);
    CHECK(rep.pass());
  }
}

TEST_CASE("sampled reversibility passes for all four families") {
  for (MapFamilyTag tag : {MapFamilyTag::additive1, MapFamilyTag::mult2,
                           MapFamilyTag::mult3}) {
    SampledReport rep = reversibility_check(tag, Rat(2), Rat(1), 200, 13);
    CHECK(rep.pass());
  }
  SampledReport rep4 =
      reversibility_check(MapFamilyTag::mult4, Rat(2), Rat(5), 200, 13);
  CHECK(rep4.pass());
}

TEST_CASE("degenerate parameters abort instead of spinning") {
  SampledReport rep =
      reversibility_check(MapFamilyTag::mult4, Rat(2), Rat(1), 10, 13);
  CHECK(rep.aborted);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("bullet checks pass for all four families") {
  for (MapFamilyTag tag : {MapFamilyTag::additive1, MapFamilyTag::mult2,
                           MapFamilyTag::mult3}) {
    SampledReport rep = bullet_check(tag, Rat(2), Rat(1), 100, 17);
    CHECK(rep.pass());
  }
  SampledReport rep4 =
      bullet_check(MapFamilyTag::mult4, Rat(2), Rat(5), 100, 17);
  CHECK(rep4.pass());
}

TEST_CASE("flipping the additive coupling breaks the equation exactly") {
  // sigma' = a + P instead of a - P; check the equation fails at some sample
  Rat z1(2), z2(1), z3(3);
  auto apply = [&](const Rat& zi, const Rat& zj, Rat& x, Rat& y) -> bool {
    Rat den = y + x;
    if (den.is_zero()) return false;
    Rat p = (zi - zj) / den;
    Rat s = y + p;  // flipped sign
    Rat t = x + p;
    x = s;
    y = t;
    return true;
  };
  bool failed = false;
  for (long long c = 1; c < 5 && !failed; ++c)
    for (long long b = 1; b < 5 && !failed; ++b)
      for (long long a = 1; a < 5; ++a) {
        Rat l0(c), l1(b), l2(a), r0(c), r1(b), r2(a);
        bool ok = apply(z2, z3, l1, l2) && apply(z1, z3, l0, l2) &&
                  apply(z1, z2, l0, l1) && apply(z1, z2, r0, r1) &&
                  apply(z1, z3, r0, r2) && apply(z2, z3, r1, r2);
        if (!ok) continue;
        if (!(l0 == r0 && l1 == r1 && l2 == r2)) {
          failed = true;
          break;
        }
      }
  CHECK(failed);
}

TEST_CASE("poles are skipped and counted, never failed") {
  // z values that force frequent poles in family 2: z1*a*b + 1 = 0 whenever
  // a*b = -1; the checker must resample past them
  SampledReport rep =
      ybe_check_sampled(MapFamilyTag::mult2, Rat(1), Rat(-1), Rat(2), 50, 3);
  CHECK(rep.samples == 50);
  CHECK(rep.pass());
}
