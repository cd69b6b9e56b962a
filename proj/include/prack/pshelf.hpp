#pragma once
// Parametric shelves and racks: one binary operation per ordered parameter
// pair, tied together by the generalized left self-distributivity law, and
// the constructions that produce them (alpha/beta deformations and the
// conjugate / affine / core families over a skew brace).

#include "prack/brace.hpp"
#include "prack/paramset.hpp"
#include "prack/shelf.hpp"

namespace prack {

struct PShelf {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> table;  // table[((i*m+j)*n+a)*n+b] = a ▷_{z_i z_j} b
  bool rack = false;

  int size() const { return carrier.size; }
  int pcount() const { return params.count(); }
  elem op(int i, int j, elem a, elem b) const {
    return table[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }

  bool table_equal(const PShelf& o) const { return table == o.table; }
};

// Exhaustive check of a ▷_{ik} (b ▷_{jk} c) = (a ▷_{ij} b) ▷_{jk} (a ▷_{ik} c)
// over all parameter/element triples; witness order (i,j,k,a,b,c).
Report p_shelf_check(const Carrier& carrier, const ParamSet& params,
                     const std::vector<elem>& table);
PShelf p_shelf_verify(Carrier carrier, ParamSet params,
                      std::vector<elem> table);  // throws on failure
bool p_shelf_rack_flag(const Carrier& carrier, const ParamSet& params,
                       const std::vector<elem>& table);

PShelf trivial_p_shelf(Carrier carrier, ParamSet params);  // a ▷_{ij} b = b

// a ▷_{ij} b := α_{ij}(a) ▷ b, admissible when
// α_{ih}(a) ▷ α_{jh}(b) = α_{jh}(α_{ij}(a) ▷ b) for all i, j, h.
Report alpha_compatibility_check(const Shelf& shelf, const AlphaFamily& alpha);
PShelf from_alpha(const Shelf& shelf, const AlphaFamily& alpha,
                  const ParamSet& params);

// Reports whether each α_{ij} is a shelf endomorphism, whether the
// composition law α_{ij} = α_{hj} α_{ih} holds, and that those two together
// imply the compatibility condition on this instance.
Report alpha_endomorphism_check(const Shelf& shelf, const AlphaFamily& alpha);

// a ▷_{ij} b := β_{ij}(b), admissible iff β_{ik} β_{jk} = β_{jk} β_{ik}.
Report beta_commutation_check(int m, int n, const std::vector<elem>& beta);
PShelf from_beta(const std::vector<elem>& beta, const ParamSet& params);

// Brace-based families; parameters must commute in (X,∘) and sit inside the
// right distributor (conjugate and affine additionally inside the additive
// center).  Every construction re-verifies its output exhaustively.
PShelf conjugate_p_rack(const SkewBrace& b, const ParamSet& y);
PShelf affine_p_rack(const SkewBrace& b, const ParamSet& y, elem xi);
PShelf core_p_rack(const SkewBrace& b, const ParamSet& y);

}  // namespace prack
