#pragma once

// Finite bounded double complexes over Q: row / column / Bott-Chern / Aeppli
// / total cohomology, column truncation, and E_1-isomorphism checking.

#include <map>
#include <string>

#include "gysin/graded.hpp"

namespace gysin {

// Components keyed by (p,q); d1 has bidegree (1,0), d2 has (0,1). Blocks are
// stored at their source bidegree; absent blocks are zero. Degrees may be
// negative.
struct DoubleComplex {
    std::map<Degree, int> components;
    std::map<Degree, SparseMatrix> d1;
    std::map<Degree, SparseMatrix> d2;

    int dim(Degree d) const;
    SparseMatrix block1(Degree d) const;  // dim(p+1,q) x dim(p,q)
    SparseMatrix block2(Degree d) const;  // dim(p,q+1) x dim(p,q)
    void set_d1(Degree d, SparseMatrix m);
    void set_d2(Degree d, SparseMatrix m);

    // d1^2 = 0, d2^2 = 0, d1 d2 + d2 d1 = 0, block shapes consistent.
    CheckReport validate() const;
};

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);

struct DCMorphism {
    DoubleComplex source;
    DoubleComplex target;
    std::map<Degree, SparseMatrix> blocks;  // per (p,q), dim_target x dim_source

    SparseMatrix block(Degree d) const;
    CheckReport validate() const;  // commutes with d1 and d2
};

using DimsTable = std::map<Degree, int>;

DimsTable row_cohomology(const DoubleComplex& k);     // with respect to d1
DimsTable column_cohomology(const DoubleComplex& k);  // with respect to d2
DimsTable bott_chern(const DoubleComplex& k);
DimsTable aeppli(const DoubleComplex& k);

// Cohomology of the simple complex, differential d = d1 + (-1)^p d2 on column p.
std::map<int, int> total_cohomology(const DoubleComplex& k);

// Keep columns s <= p <= t; other components and the d1 blocks leaving the
// window vanish. s > t yields the zero complex.
DoubleComplex truncate_columns(const DoubleComplex& k, int s, int t);

bool is_E1_isomorphism(const DCMorphism& f);

// Requires is_E1_isomorphism(f); verifies that Bott-Chern and Aeppli
// dimensions agree and that the induced maps on both are isomorphisms.
CheckReport stelzig_check(const DCMorphism& f);

}  // namespace gysin
