#pragma once
// Ordinary shelves, racks and quandles, plus the alpha families that deform
// them into parametric ones.

#include "prack/group.hpp"
#include "prack/paramset.hpp"

namespace prack {

struct Shelf {
  Carrier carrier;
  std::vector<elem> table;  // table[a*n+b] = a ▷ b
  bool rack = false;
  bool quandle = false;

  int size() const { return carrier.size; }
  elem op(elem a, elem b) const { return table[(long long)a * size() + b]; }

  bool operator==(const Shelf& o) const {
    return carrier == o.carrier && table == o.table;
  }
};

Report shelf_check(const Carrier& carrier, const std::vector<elem>& table);
Shelf shelf_from_table(Carrier carrier, std::vector<elem> table);  // throws

Shelf trivial_shelf(Carrier carrier);                 // a ▷ b = b
Shelf core_quandle(const GroupTable& g);              // a ▷ b = a - b + a
Shelf conjugation_quandle(const GroupTable& g);       // a ▷ b = -a + b + a

// Maps α_{ij}: X → X indexed by ordered parameter pairs.
struct AlphaFamily {
  int m = 0, n = 0;
  std::vector<elem> maps;  // maps[((i*m)+j)*n + a] = α_{ij}(a)

  elem at(int i, int j, elem a) const {
    return maps[((long long)i * m + j) * n + a];
  }
  bool all_bijective() const;
};

AlphaFamily alpha_family(int m, int n, std::vector<elem> maps);
AlphaFamily alpha_identity(int m, int n);

}  // namespace prack
