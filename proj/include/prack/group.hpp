#pragma once
// Finite groups as Cayley tables with eagerly verified axioms.

#include "prack/core.hpp"

namespace prack {

struct GroupTable {
  Carrier carrier;
  std::vector<elem> table;  // row-major, table[a*n+b] = a*b
  elem identity = 0;
  std::vector<elem> inverse;

  int size() const { return carrier.size; }
  elem op(elem a, elem b) const { return table[(long long)a * size() + b]; }
  elem inv(elem a) const { return inverse[a]; }

  bool operator==(const GroupTable& o) const {
    return carrier == o.carrier && table == o.table;
  }
};

// Validates associativity, identity, inverses and the Latin-square property;
// throws NotAssociative / NoIdentity / NoInverse / NotBijectiveRow.
GroupTable group_from_table(Carrier carrier, std::vector<elem> table);

GroupTable cyclic_group(int n);
GroupTable symmetric_group_s3();
GroupTable opposite_group(const GroupTable& g);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

bool is_abelian(const GroupTable& g);
bool commutes(const GroupTable& g, elem a, elem b);

}  // namespace prack
