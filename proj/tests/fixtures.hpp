#pragma once
// Shared test instances: the mod-8 brace with its full parameter set, and a
// nonabelian skew brace on S3 x Z2 whose additive center is {e} x Z2.

#include "prack/brace.hpp"
#include "prack/paramset.hpp"
#include "prack/pshelf.hpp"
#include "prack/twist.hpp"

namespace fixtures {

inline prack::SkewBrace mod8() { return prack::modular_brace(3); }

inline prack::ParamSet mod8_all_params(const prack::SkewBrace& b) {
  return prack::param_set_circle_inverse(b.mul, {0, 1, 2, 3});
}

inline prack::SkewBrace s3z2() {
  prack::GroupTable s3 = prack::symmetric_group_s3();
  prack::GroupTable z2 = prack::cyclic_group(2);
  prack::GroupTable add = prack::direct_product(s3, z2);
  prack::GroupTable mul =
      prack::direct_product(prack::opposite_group(s3), z2);
  return prack::skew_brace_new(add, mul);
}

// (e,0) and (e,1): the additive center of S3 x Z2
inline prack::ParamSet s3z2_params(const prack::SkewBrace& b) {
  return prack::param_set_circle_inverse(b.mul, {0, 1});
}

}  // namespace fixtures
