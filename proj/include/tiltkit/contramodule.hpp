// Finitely presented contramodules over a chain of quotient rings: level
// realizations, discrete modules, the contratensor product with its hom
// adjunction, completion towers, and matrix-ring transport.
#pragma once

#include <optional>

#include "tiltkit/proring.hpp"
#include "tiltkit/zmodule.hpp"

namespace tiltkit {

// One preimage of y under f, i.e. some x with f(x) == y in the target;
// nullopt when y is not in the image.
std::optional<std::vector<Int>> ab_preimage(const AbMap& f, const std::vector<Int>& y);

// The level-n realization of a presented contramodule: the quotient by the
// part carried by the level-n kernel ideal, a finitely presented module over
// R_n. Group generators are (generator of X) x (coordinate of R_n).
struct ContraLevel {
    ProRingPtr ring;
    IndexSet gens = IndexSet::finite({});
    int level = 1;
    int ring_dim = 0;     // group coordinates of R_n per generator
    PresentedGroup pres;  // quotient of Z^(gens * ring_dim) by the relations

    AbGroup group() const { return pres.grp; }
    // Generator coordinates of a snapshot, before the quotient.
    std::vector<Int> raw_coords(const Snapshot& s) const;
    // Canonical class coordinates of a snapshot.
    std::vector<Int> coords(const Snapshot& s) const;
    // A snapshot representing the given class.
    Snapshot lift(const std::vector<Int>& c) const;
    // Left multiplication by a level-`level` ring element, on class coordinates.
    ZMat action(const RingElem& r) const;
};

// A finitely presented contramodule: the cokernel of a map of free
// contramodules R[[Y]] -> R[[X]] with finite X and Y, the map recorded by
// the images of the Y-generators. An empty relation list is a free
// contramodule. Level machinery needs Z-presentable level rings.
class Contramodule {
  public:
    static Contramodule free_on(ProRingPtr ring, std::vector<std::string> gens);
    static Contramodule presented(ProRingPtr ring, std::vector<std::string> gens,
                                  std::vector<FreeContraElement> relations);

    const ProRingPtr& ring() const { return ring_; }
    const IndexSet& generators() const { return gens_; }
    int relation_count() const { return static_cast<int>(rels_.size()); }
    const FreeContraElement& relation(int j) const { return rels_[j]; }
    bool is_free() const { return rels_.empty(); }

    // The quotient by the level-n ideal part, as a presented R_n-module.
    ContraLevel level_module(int n) const;
    // Canonical coordinates of the class of a representative at one level.
    std::vector<Int> class_coords(const FreeContraElement& rep, int n) const;
    // Whether the representative's class dies in the level-n quotient, i.e.
    // the element lies in the level-n ideal part of the module.
    bool in_level_kernel(const FreeContraElement& rep, int n) const;
    // Class equality of representatives at all levels up to the precision.
    bool equal_classes(const FreeContraElement& a, const FreeContraElement& b,
                       int precision) const;

  private:
    Contramodule() = default;

    ProRingPtr ring_;
    IndexSet gens_ = IndexSet::finite({});
    std::vector<FreeContraElement> rels_;
};

enum class ModuleSide { Left, Right };

// A discrete module over the chain: a finite abelian group carried at one
// level, ring elements acting through their level residues. Restricted to
// residue chains (s-adic or constant Z/m), where every level ring is a
// quotient of Z and the action is scalar multiplication.
struct DiscreteModule {
    ProRingPtr ring;
    ModuleSide side = ModuleSide::Right;
    int level = 1;
    AbGroup grp;

    bool is_zero() const { return grp.is_zero(); }
};

// Validates the chain kind, finiteness, and that the group exponent divides
// the level modulus (so the level ring genuinely acts).
DiscreteModule discrete_module(ProRingPtr ring, AbGroup grp, int level,
                               ModuleSide side = ModuleSide::Right);
// The same module regarded at a higher level; the action is unchanged.
DiscreteModule push_level(const DiscreteModule& l, int level);

// Hom_Z(l, v) as a contramodule: a family of ring coefficients acts on a
// family of maps by (sum_x s_x f_x)(m) = sum_x f_x(m s_x), which collapses
// to a finite sum because l is killed by the level modulus.
struct HomContraResult {
    Contramodule contra;  // one generator per Hom factor, relations kill orders
    HomGroup maps;        // the explicit Z-linear maps, factor i <-> generator i
};
HomContraResult hom_contramodule(const DiscreteModule& l, const AbGroup& v);

// The contratensor product l (.) c, computed from the presentation by right
// exactness: l (.) R[[X]] is the finite power l^(X), and the relations of c
// induce the map whose cokernel is the product.
struct ContratensorResult {
    AbSum power;    // l^(X) with the per-generator inclusions and projections
    AbMap induced;  // l^(Y) -> power.total, induced by the relations of c
    AbMap onto;     // power.total -> grp, the quotient map
    AbGroup grp;
};
ContratensorResult contratensor(const DiscreteModule& l, const Contramodule& c);

// Morphisms of contramodules c -> d, described by the tuples of generator
// images in the stabilized level module of d; defined when d's level tower
// stabilizes within the precision (towers of constant chains always do).
struct ContraHomGroup {
    AbGroup grp;           // canonical invariants of Hom(c, d)
    SubquotientPart ker;   // ker.map: grp -> (stabilized d)-class tuple coords
    AbSum tuples;          // the power of d's level module the tuples live in
    int level = 1;         // the level where d's tower has stabilized
    ContraLevel target;    // d's stabilized level module
};
ContraHomGroup contra_hom(const Contramodule& c, const Contramodule& d, int precision);

// Verifies the adjunction between contratensor and hom: the canonical map
// Hom_Z(l (.) c, v) -> Hom(c, Hom_Z(l, v)) is built explicitly on
// generators and checked to be a group isomorphism.
struct AdjunctionReport {
    AbGroup lhs;
    AbGroup rhs;
    bool iso = false;
    std::string note;  // distinguishing data when the check fails
};
AdjunctionReport adjunction_check(const DiscreteModule& l, const Contramodule& c,
                                  const AbGroup& v, int precision);

// A tower of level modules T_1 <- T_2 <- ... with downward structure maps.
struct Tower {
    std::vector<AbGroup> levels;  // levels[k] carries level k+1
    std::vector<AbMap> down;      // down[k]: levels[k+1] -> levels[k]

    void validate() const;  // throws "incompatible tower" on shape mismatch
};

// The tower of level quotients of c up to the precision, with the induced
// transition maps.
Tower ct_tower(const Contramodule& c, int precision);

// The limit of a tower as a pro-object, evaluated up to its height: level n
// is replaced by the image of the top level, with the restricted maps. The
// result is one level shorter; towers with zero transitions collapse to zero.
Tower pl_limit(const Tower& t);

// Report on the completion map from c to the limit of its level quotients.
struct CompletionReport {
    Tower tower;
    bool transitions_surjective = false;
    // Smallest level from which on every transition is an isomorphism; 0 when
    // the tower keeps growing through the tested range.
    int stabilizes_at = 0;
    bool complete_and_separated = false;
    int separated_up_to = 0;  // injectivity is only decidable up to the precision
    std::string note;
};
CompletionReport completion_map_check(const Contramodule& c, int precision);

// Transport to the matrix chain on y rows: the module of y-tuples, presented
// over matrix_ring(ring, y) by the same generators with corner-embedded
// relations. Matrices act on tuples as on column vectors.
Contramodule morita_transport(const Contramodule& c, int y);
// The element of the transported module representing a column tuple of
// representatives of the source module.
FreeContraElement morita_tuple(const Contramodule& transported,
                               const std::vector<FreeContraElement>& parts);

// Seeded small random presentation over the chain, for property tests.
Contramodule random_contramodule(const ProRingPtr& ring, std::uint64_t seed);

// Property fuzz for the contramodule structure on presented quotients: the
// unit law, additivity, associativity of collapsing, and well-definedness of
// the action across relation shifts, all compared on class coordinates at
// levels 1..precision. Empty result on success, else a failure report.
std::string contramodule_axiom_fuzz(const ProRingPtr& ring, std::uint64_t seed, int trials,
                                    int precision = 8);

}  // namespace tiltkit
