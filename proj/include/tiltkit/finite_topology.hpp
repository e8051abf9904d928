// The finite topology on endomorphism rings: constant chains for finitely
// presented modules, adic chains for torsion colimit modules, and the checks
// tying a module's additive closure to free contramodules over its
// endomorphism chain.
#pragma once

#include "tiltkit/contramodule.hpp"
#include "tiltkit/module.hpp"

namespace tiltkit {

// Endomorphism algebra of a nonzero finite-dimensional module, with
// multiplication in composition order (the product of f and g applies g
// first). Requires the semisimple quotient to be split basic, i.e. the module
// must be multiplicity-free with endomorphism quotients equal to the ground
// field; anything else cannot carry a verified idempotent list.
struct EndoAlgebra {
    AlgebraPtr alg;
    Module mod;
    std::vector<SMat> basis;  // endomorphism matrix per algebra basis element
    // Coordinates of an endomorphism matrix in the basis, if it is one.
    std::optional<Coords> express(const SMat& endo) const;
};
EndoAlgebra endo_algebra(const Module& m);

// For a finitely presented module every annihilator of a finitely generated
// submodule contains the vanishing annihilator of the whole module, so the
// topology is discrete: a constant chain on the endomorphism algebra.
ProRingPtr endo_topology_fp(const Module& m);

// Torsion colimit module: the union of the stages (1/s^n)Z/Z, in `copies`
// parallel columns. Stage n is (Z/s^n)^copies and the inclusion into stage
// n+1 is multiplication by s in coordinates.
struct ColimitModule {
    Int s;
    int copies = 1;
    AbGroup level(int n) const;
    AbMap inclusion(int n) const;  // stage n -> stage n+1
};
ColimitModule matlis_module(Int s, int copies = 1);

// Certifies that the adic chain computes Hom(M_n, m) with restriction
// transitions: the canonical evaluation maps are isomorphisms at every level,
// they turn chain products into composition, and they intertwine the chain
// transitions with restriction along the stage inclusions.
struct ColimTopologyReport {
    int levels = 0;
    bool level_isos = false;
    bool transitions_match = false;
    bool multiplicative = false;
    std::string note;
    bool ok() const { return level_isos && transitions_match && multiplicative; }
};
ColimTopologyReport colim_topology_report(const ColimitModule& m, int precision);

// The endomorphism chain of a colimit module: level n is Hom(M_n, m) with
// restriction transitions, realized as the s-adic chain (one copy) or the
// matrix chain over it. Verified against the hom oracle before returning.
ProRingPtr endo_topology_colim(const ColimitModule& m, int verify_levels = 4);

// Checks the additive-closure equivalence data for a module and a finite
// index set: (a) Hom(m, m^(X)) equals the free contramodule over the
// endomorphism chain level by level, via explicit canonical isomorphisms;
// (b) the contratensor of each stage with the free contramodule returns the
// corresponding power of the stage.
struct AddEquivReport {
    bool hom_matches = false;
    bool tensor_matches = false;
    int levels_checked = 0;
    std::string note;
    bool ok() const { return hom_matches && tensor_matches; }
};
AddEquivReport add_equiv_check(const ColimitModule& m, const IndexSet& x, int precision);
AddEquivReport add_equiv_check(const Module& m, const IndexSet& x);

// An infinite family of endomorphisms of a one-column torsion module,
// indexed by naturals: explicit scalars first, then a tail whose component
// at offset j is s^(tail_valuation + j * tail_step), or zero.
struct EndoFamily {
    ColimitModule mod;
    std::vector<Int> prefix;
    int tail_valuation = 0;
    int tail_step = 0;
    bool tail_zero = false;
};

// Decides whether the family assembles to a single morphism into the direct
// sum: it does exactly when each stage is killed by all but finitely many
// components. The verdict comes from the valuation rule; every sampled
// component is cross-checked against the rule by evaluating the actual
// group map on the stage.
struct AssemblyReport {
    bool assembles = false;
    int failing_level = 0;  // least stage with infinitely many survivors
    bool evaluation_agrees = false;
    std::string note;
};
AssemblyReport family_assembly_check(const EndoFamily& f, int precision);

// Seeded property checks: annihilator stages are closed under right
// multiplication, and random families assemble exactly when their tails
// vanish on every stage. Returns "" or a description of the first failure.
std::string finite_topology_fuzz(const Int& s, std::uint64_t seed, int trials,
                                 int precision = 6);

}  // namespace tiltkit
