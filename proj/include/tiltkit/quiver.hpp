// Quivers and their path algebras. Paths compose left-to-right: p.q means
// "first p, then q". Left modules are covariant representations, so the stored
// structure constants use b_i * b_j = concat(b_j, b_i); with that convention
// action maps are algebra homomorphisms and A e_v is spanned by the paths
// whose source is v.
#pragma once

#include "tiltkit/algebra.hpp"

namespace tiltkit {

struct Arrow {
    int src = 0, tgt = 0;  // 0-based vertex indices
    std::string name;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;
};

// A path as a composable arrow-index sequence; empty means the trivial path
// at `vertex`.
struct QPath {
    std::vector<int> arrows;
    int vertex = -1;  // used only when arrows is empty
};

struct RelationTerm {
    std::vector<int> arrows;  // nonempty, left-to-right
    Scalar coeff;
};
// A linear combination of parallel paths of positive length.
using Relation = std::vector<RelationTerm>;

struct PathAlgebra {
    AlgebraPtr alg;
    Quiver quiver;
    FieldTag field;
    // Per basis index: the reduced path (trivial paths first, then by
    // (length, lexicographic arrow indices)), and its endpoints.
    std::vector<QPath> basis_paths;
    std::vector<int> basis_src, basis_tgt;

    int vertex_unit(int v) const;  // basis index of e_v
    // Basis index of an arrow, or -1 when the relations kill it.
    int arrow_basis(int a) const;
    // Coordinates of an arbitrary path (possibly not reduced); zero vector if
    // it dies in the quotient.
    Coords path_coords(const std::vector<int>& arrows) const;

    std::vector<int> arrow_to_basis;   // arrow index -> basis index or -1
    std::vector<Coords> arrow_coords;  // reduction of each arrow onto the basis
    std::vector<Relation> relations;   // the defining relations, for validation
};

// Builds the quotient of the path algebra by the two-sided ideal the relations
// generate. Rejects inputs whose basis enumeration does not terminate under
// the path-length cap.
PathAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, FieldTag field,
                               int length_cap = 64);

}  // namespace tiltkit
