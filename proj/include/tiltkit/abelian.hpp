// Finitely generated abelian groups in invariant-factor coordinates, with
// kernels, cokernels, subgroup lattices, and hom groups computed by Smith form.
#pragma once

#include <optional>

#include "tiltkit/smith.hpp"

namespace tiltkit {

// Invariant factors d_1 | d_2 | ... | d_k followed by zeros (free ranks);
// no factor equals 1. Elements are coordinate vectors reduced mod d_i.
struct AbGroup {
    std::vector<Int> inv;

    int dim() const { return static_cast<int>(inv.size()); }
    bool is_zero() const { return inv.empty(); }
    bool is_finite() const {
        for (const auto& d : inv)
            if (d == 0) return false;
        return true;
    }
    Int order() const;
    std::string str() const;
    friend bool operator==(const AbGroup&, const AbGroup&) = default;

    std::vector<Int> reduce(std::vector<Int> x) const;
    // Relation lattice diag(inv) with zero columns dropped.
    ZMat relation_columns() const;
    // All elements of a finite group, lexicographic; throws if infinite or large.
    std::vector<std::vector<Int>> elements(std::int64_t cap = 1 << 20) const;
};

// Homomorphism in canonical coordinates; m is (tgt.dim x src.dim).
struct AbMap {
    AbGroup src, tgt;
    ZMat m;

    std::vector<Int> apply(const std::vector<Int>& x) const;
    bool is_zero() const;
    void validate() const;  // throws unless m respects the relation lattices
};

AbMap ab_identity(const AbGroup& g);
AbMap ab_zero_map(const AbGroup& src, const AbGroup& tgt);
AbMap compose(const AbMap& g, const AbMap& f);  // g after f
AbMap ab_add(const AbMap& f, const AbMap& g);
AbMap ab_negate(const AbMap& f);

// Z^gens modulo the columns of rels, with coordinate translation both ways.
struct PresentedGroup {
    AbGroup grp;
    ZMat to_coords;    // grp.dim x gens
    ZMat from_coords;  // gens x grp.dim, a section of to_coords
};
PresentedGroup present(int gens, const ZMat& rels);

struct SubquotientPart {
    AbGroup grp;
    AbMap map;  // kernel: grp -> src; cokernel: tgt -> grp
};

SubquotientPart kernel(const AbMap& f);
SubquotientPart cokernel(const AbMap& f);

// Canonical lattice of the image of f inside Z^{tgt.dim}, relations included.
ZMat image_lattice(const AbMap& f);
// Canonical lattice of the kernel of f inside Z^{src.dim}, relations included.
ZMat kernel_lattice(const AbMap& f);

bool is_iso(const AbMap& f);
// Exactness of src -f-> mid -g-> tgt at mid.
bool exact_at(const AbMap& f, const AbMap& g);

struct AbSum {
    AbGroup total;
    std::vector<AbMap> in;   // component -> total
    std::vector<AbMap> out;  // total -> component
};
AbSum direct_sum(const std::vector<AbGroup>& parts);

// Hom(A, B) as a list of cyclic factors with explicit generator matrices.
struct HomGroup {
    AbGroup src, tgt;
    std::vector<Int> factor_inv;  // order of each cyclic factor (0 = Z)
    std::vector<ZMat> gens;       // generator map per factor
    AbGroup group() const;        // canonical form of the factor list
    AbMap element(const std::vector<Int>& coords) const;
};
HomGroup hom_group(const AbGroup& a, const AbGroup& b);

}  // namespace tiltkit
