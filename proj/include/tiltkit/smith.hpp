// Smith normal form and column Hermite form over the integers.
#pragma once

#include "tiltkit/matrix.hpp"

namespace tiltkit {

struct SmithResult {
    ZMat u;  // unimodular, rows x rows
    ZMat d;  // diagonal, rows x cols, d1 | d2 | ..., entries >= 0
    ZMat v;  // unimodular, cols x cols
};

// U m V = D with the divisibility chain on the diagonal.
SmithResult smith_normal_form(const ZMat& m);

// Canonical column Hermite form of the column lattice of m: column-echelon,
// pivots positive, entries left of a pivot in its row reduced into [0, pivot).
// Zero columns are dropped; equal lattices yield identical forms.
ZMat hnf_columns(const ZMat& m);

// Membership of x (length m.rows()) in the column lattice given by an hnf_columns result.
bool lattice_contains(const ZMat& hnf, const std::vector<Int>& x);

// Solve h y = x over the integers for h in column Hermite form; false if unsolvable.
bool lattice_solve(const ZMat& hnf, const std::vector<Int>& x, std::vector<Int>& y);

Int det_int(const ZMat& m);

}  // namespace tiltkit
