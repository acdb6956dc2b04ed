// Type A highest-weight crystals modeled on semistandard Young tableaux with
// the signature rule on the reading word (rows top to bottom, each row right
// to left; word order equals tensor order).  Other types enter the library
// only through JSON import.

#pragma once

#include <string>
#include <vector>

#include "demkit/crystal.hpp"

namespace demkit {

struct Tableau {
    std::vector<std::vector<int>> rows;

    std::string str() const;          // "[[1,1],[2]]"
    Weight weight(int rank) const;    // content differences in weight coords
    bool operator<(const Tableau& o) const { return rows < o.rows; }
    bool operator==(const Tableau& o) const = default;
};

// row lengths of the shape with <alpha_j^vee, lam> columns of height j
std::vector<int> shape_from_weight(const Weight& lam);

struct TypeACrystal {
    CrystalPtr graph;
    std::vector<Tableau> tableaux;  // indexed like graph elements
};

// B(lam) for dominant lam in type A_n; deterministic element order
TypeACrystal build_typeA_labeled(const CartanPtr& c, const Weight& lam);
CrystalPtr build_typeA(const CartanPtr& c, const Weight& lam);

// Weyl dimension formula, exact; throws std::overflow_error instead of wrapping
long long dimension_oracle(const CartanPtr& c, const Weight& lam);

}  // namespace demkit
