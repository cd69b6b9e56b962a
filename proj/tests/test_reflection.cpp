#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prack/reflection.hpp"

#include <random>

using namespace prack;

namespace {

struct CoreSetup {
  SkewBrace brace = trivial_brace(cyclic_group(4));
  ParamSet y;
  PShelf rack;
  ReflectionFamily family;

  CoreSetup()
      : y(param_set_circle_inverse(brace.mul, {0, 2})),
        rack(core_p_rack(brace, y)),
        family(reflection_family(rack.carrier, y, make_kappa())) {}

  std::vector<elem> make_kappa() const {
    std::vector<elem> kp(2 * 4);
    for (int i = 0; i < 2; ++i)
      for (elem a = 0; a < 4; ++a)
        kp[i * 4 + a] = ((a - 2 * y.z(i) + 2) % 4 + 4) % 4;
    return kp;
  }
};

AlphaFamily translation_alpha(const ParamSet& y, int n) {
  const int m = y.count();
  std::vector<elem> maps((long long)m * m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (elem a = 0; a < n; ++a)
        maps[((long long)i * m + j) * n + a] =
            ((a + y.z(i) - y.z(j)) % n + n) % n;
  return alpha_family(m, n, maps);
}

}  // namespace

TEST_CASE("identity reflection against the identity solution") {
  ParamSet y = param_set_identity(Carrier(3), {0, 1});
  ParamSolution s = identity_solution(Carrier(3), y);
  ReflectionFamily k = identity_reflection(Carrier(3), y);
  CHECK(reflection_verify_direct(k, s).pass());
  CHECK(reflection_conditions_general(k, s).pass());
}

TEST_CASE("core family reflection passes every checker") {
  CoreSetup c;
  ParamSolution s = p_shelf_solution(c.rack);
  CHECK(c.family.bijective);
  CHECK(reflection_verify_direct(c.family, s).pass());
  CHECK(reflection_conditions_shelf(c.family, c.rack).pass());
  CHECK(reflection_conditions_shelf_bijective(c.family, c.rack).pass());
  CHECK(reflection_conditions_rack(c.family, c.rack).pass());
  CHECK(reflection_conditions_general(c.family, s).pass());
}

TEST_CASE("all checkers agree on bijective mutations") {
  CoreSetup c;
  ParamSolution s = p_shelf_solution(c.rack);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> pos(0, 3);
  int fails = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<elem> kp = c.family.kappa;
    int i = trial % 2, a = pos(rng), b = pos(rng);
    std::swap(kp[i * 4 + a], kp[i * 4 + b]);
    ReflectionFamily k = reflection_family(c.rack.carrier, c.y, kp);
    bool direct = reflection_verify_direct(k, s).pass();
    CHECK(reflection_conditions_shelf(k, c.rack).pass() == direct);
    CHECK(reflection_conditions_shelf_bijective(k, c.rack).pass() == direct);
    CHECK(reflection_conditions_rack(k, c.rack).pass() == direct);
    CHECK(reflection_conditions_general(k, s).pass() == direct);
    if (!direct) ++fails;
  }
  CHECK(fails > 0);
}

TEST_CASE("mutating one kappa entry yields a witness") {
  CoreSetup c;
  ParamSolution s = p_shelf_solution(c.rack);
  std::vector<elem> kp = c.family.kappa;
  kp[2] = (kp[2] + 1) % 4;
  ReflectionFamily k = reflection_family(c.rack.carrier, c.y, kp);
  Report r = reflection_verify_direct(k, s);
  if (!r.pass()) CHECK(r.first_failure()->witness.size() == 4);
}

TEST_CASE("nonabelian conjugate reflection via the zeta shift") {
  SkewBrace b = fixtures::s3z2();
  ParamSet y = fixtures::s3z2_params(b);
  PShelf conj = conjugate_p_rack(b, y);
  ParamSolution s = p_shelf_solution(conj);
  // zeta = (e,1), additively central; m = 1
  ReflectionFamily k = brace_reflection(b, y, 1, 1);
  CHECK(k.bijective);
  CHECK(reflection_verify_direct(k, s).pass());
  CHECK(reflection_conditions_rack(k, conj).pass());
  CHECK(reflection_conditions_general(k, s).pass());
}

TEST_CASE("non-bijective families are rejected by the rack checker") {
  CoreSetup c;
  std::vector<elem> kp(2 * 4, 0);
  ReflectionFamily k = reflection_family(c.rack.carrier, c.y, kp);
  CHECK_FALSE(k.bijective);
  CHECK_THROWS_AS(reflection_conditions_rack(k, c.rack), validation_error);
  CHECK_THROWS_AS(reflection_conditions_shelf_bijective(k, c.rack),
                  validation_error);
}

TEST_CASE("constructing the core family from per-parameter shifts") {
  CoreSetup c;
  Shelf cq = core_quandle(cyclic_group(4));
  AlphaFamily alpha = translation_alpha(c.y, 4);
  std::vector<elem> t(2 * 4);
  for (int i = 0; i < 2; ++i)
    for (elem a = 0; a < 4; ++a) t[i * 4 + a] = (a + 2) % 4;
  ReflectionFamily k = construct_from_t_alpha(cq, alpha, c.y, t);
  CHECK(k.table_equal(c.family));
  PShelf deformed = from_alpha(cq, alpha, c.y);
  CHECK(reflection_verify_direct(k, p_shelf_solution(deformed)).pass());
}

TEST_CASE("identity data constructs the identity reflection") {
  Shelf cq = core_quandle(cyclic_group(4));
  ParamSet y = param_set_identity(Carrier(4), {0});
  AlphaFamily alpha = alpha_identity(1, 4);
  std::vector<elem> t = identity_permutation(4);
  ReflectionFamily k = construct_from_t_alpha(cq, alpha, y, t);
  for (elem a = 0; a < 4; ++a) CHECK(k.k(0, a) == a);
}

TEST_CASE("brace reflection arises from shifts over the trivial quandle") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  Shelf triv = conjugation_quandle(b.add);  // abelian addition: trivial quandle
  const int m = 4, n = 4;
  std::vector<elem> amaps((long long)m * m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (elem a = 0; a < n; ++a)
        amaps[((long long)i * m + j) * n + a] =
            b.circ(b.circ(a, y.z(i)), b.circ_inv(y.z(j)));
  AlphaFamily alpha = alpha_family(m, n, amaps);
  elem zeta = 2;  // residue 5
  std::vector<elem> t((long long)m * n);
  for (int i = 0; i < m; ++i)
    for (elem a = 0; a < n; ++a) t[(long long)i * n + a] = b.plus(a, zeta);
  ReflectionFamily k = construct_from_t_alpha(triv, alpha, y, t);
  CHECK(k.table_equal(brace_reflection(b, y, zeta, 1)));
}

TEST_CASE("transporting a base reflection through the composition law") {
  CoreSetup c;
  Shelf cq = core_quandle(cyclic_group(4));
  AlphaFamily alpha = translation_alpha(c.y, 4);
  std::vector<elem> base(4);
  for (elem a = 0; a < 4; ++a) base[a] = (a + 2) % 4;
  CHECK(base_shelf_reflection_check(cq, base).pass());
  ReflectionFamily k = transport_from_base_reflection(cq, alpha, c.y, base);
  CHECK(k.table_equal(c.family));
  CHECK(reflection_verify_direct(k, p_shelf_solution(c.rack)).pass());

  // identity base reflection transports to the alpha diagonal
  ReflectionFamily kid =
      transport_from_base_reflection(cq, alpha, c.y, identity_permutation(4));
  for (int i = 0; i < 2; ++i)
    for (elem a = 0; a < 4; ++a)
      CHECK(kid.k(i, a) == (elem)(((a - 2 * c.y.z(i)) % 4 + 4) % 4));
}

TEST_CASE("non-commuting base reflection is refused") {
  GroupTable z4 = cyclic_group(4);
  Shelf cq = core_quandle(z4);
  ParamSet y = param_set_explicit(z4.carrier, {0, 1}, {0, 1});
  AlphaFamily alpha = translation_alpha(y, 4);
  std::vector<elem> base{2, 1, 0, 3};  // swaps 0 and 2
  REQUIRE(base_shelf_reflection_check(cq, base).pass());
  try {
    transport_from_base_reflection(cq, alpha, y, base);
    FAIL("expected commutation failure");
  } catch (const validation_error& e) {
    CHECK(e.code == "CommutationFails");
  }
}

TEST_CASE("base reflection failures are caught") {
  GroupTable z4 = cyclic_group(4);
  Shelf cq = core_quandle(z4);
  ParamSet y = param_set_circle_inverse(trivial_brace(z4).mul, {0, 2});
  AlphaFamily alpha = translation_alpha(y, 4);
  std::vector<elem> base(4);
  for (elem a = 0; a < 4; ++a) base[a] = (a + 1) % 4;  // odd shift
  CHECK_FALSE(base_shelf_reflection_check(cq, base).pass());
  CHECK_THROWS_AS(transport_from_base_reflection(cq, alpha, y, base),
                  validation_error);
}

TEST_CASE("brace reflection worked values") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  ReflectionFamily k0 = brace_reflection(b, y, 2, 0);  // m = 0 drops zeta
  for (int i = 0; i < 4; ++i) {
    elem ziv = b.circ_inv(y.z(i));
    for (elem a = 0; a < 4; ++a)
      CHECK(k0.k(i, a) == b.circ(b.circ(a, ziv), ziv));
  }
  ReflectionFamily k1 = brace_reflection(b, y, 2, 1);
  // z = 3 squares to 1 mod 8, so kappa at that parameter is a plain shift
  for (elem a = 0; a < 4; ++a) CHECK(k1.k(1, a) == b.plus(a, 2));
  // at the brace zero the parameter factors drop entirely
  for (elem a = 0; a < 4; ++a) CHECK(k1.k(0, a) == b.plus(a, 2));
}

TEST_CASE("affine reflection needs the xi compatibility") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  elem xi = 1;  // residue 3
  // residues with xi∘(mζ) = xi + mζ: (3ζ = ζ+2 mod 8) forces ζ in {1,5}
  ReflectionFamily good = brace_reflection(b, y, 2, 1, xi);
  PShelf aff = affine_p_rack(b, y, xi);
  ParamSolution s = p_shelf_solution(aff);
  CHECK(reflection_verify_direct(good, s).pass());
  CHECK(reflection_conditions_rack(good, aff).pass());
  CHECK_THROWS_AS(brace_reflection(b, y, 1, 1, xi), validation_error);
}

TEST_CASE("exchange relation gates the transport to the twisted solution") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  SigmaFamily sig = brace_sigma(b, y);
  PShelf triv = trivial_p_shelf(b.add.carrier, y);
  ParamSolution twisted = twisted_solution(triv, sig);

  CHECK(find_cond0_elements(b, y) == std::vector<elem>{0, 2});

  ReflectionFamily good = brace_reflection(b, y, 2, 1);  // m*zeta = residue 5
  CHECK(twist_transport_check(good, sig).pass());
  CHECK(reflection_verify_direct(good, p_shelf_solution(triv)).pass());
  CHECK(reflection_verify_direct(good, twisted).pass());
  Report full = twist_transport_check(good, sig, triv);
  CHECK(full.pass());

  ReflectionFamily bad = brace_reflection(b, y, 1, 1);  // m*zeta = residue 3
  CHECK(reflection_verify_direct(bad, p_shelf_solution(triv)).pass());
  CHECK_FALSE(twist_transport_check(bad, sig).pass());
  Report direct = reflection_verify_direct(bad, twisted);
  CHECK_FALSE(direct.pass());
  CHECK(direct.first_failure()->witness.size() == 4);
}

TEST_CASE("exchange relation over the nonabelian brace") {
  SkewBrace b = fixtures::s3z2();
  ParamSet y = fixtures::s3z2_params(b);
  SigmaFamily sig = brace_sigma(b, y, SigmaMode::skew);
  PShelf conj = conjugate_p_rack(b, y);
  std::vector<elem> cond0 = find_cond0_elements(b, y);
  // (e,1) satisfies a + w = a∘w and w∘z = w + z on this product brace
  CHECK(contains(cond0, 1));
  ReflectionFamily k = brace_reflection(b, y, 1, 1);
  Report full = twist_transport_check(k, sig, conj);
  CHECK(full.pass());
  CHECK(reflection_verify_direct(k, twisted_solution(conj, sig)).pass());
}

TEST_CASE("distributor-shifted reflection for the brace solution") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  std::vector<elem> zetas = find_zeta_in_y(b, y);
  CHECK(zetas == std::vector<elem>{0, 2});
  SigmaFamily sig = brace_sigma(b, y);
  ParamSolution r = twisted_solution(trivial_p_shelf(b.add.carrier, y), sig);
  for (elem zeta : zetas) {
    ReflectionFamily k = distributor_reflection(b, y, zeta);
    CHECK(reflection_verify_direct(k, r).pass());
    CHECK(reflection_conditions_general(k, r).pass());
  }
  CHECK_THROWS_AS(distributor_reflection(b, y, 4), validation_error);
}
