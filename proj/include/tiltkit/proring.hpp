// Topological rings as chains of quotient rings R_1 <- R_2 <- ..., elements
// of their completions as coherent level producers, and the free-contramodule
// monad of zero-convergent formal combinations, evaluated level-wise.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "tiltkit/abelian.hpp"
#include "tiltkit/algebra.hpp"

namespace tiltkit {

class ProRing;
using ProRingPtr = std::shared_ptr<const ProRing>;

// An element of one level ring R_n of a chain. Exactly one lane is active,
// matching the owning ring's kind; the others stay empty. Residues are kept
// reduced into [0, modulus), so operator== is exact on reduced elements.
struct RingElem {
    Int residue = 0;                // Z/m lane (m = 0 means Z itself)
    Coords coords;                  // finite-dimensional algebra lane
    std::vector<RingElem> entries;  // square matrix lane, row-major

    friend bool operator==(const RingElem&, const RingElem&) = default;
};

// A chain of quotient rings R_1 <- R_2 <- ... with surjective transition
// maps q_n: R_{n+1} -> R_n. Levels are 1-based. The open ideals are the
// kernels U_n = ker(R -> R_n), identified by level index only; for every
// kind built here they are two-sided, so the chain defines a ring topology.
class ProRing {
  public:
    enum class Kind { SAdic, Discrete, Matrix };

    // Chain Z/s <- Z/s^2 <- ... with reduction maps; requires s >= 2.
    static ProRingPtr s_completion(const Int& s);
    // Constant chain on Z/m (m = 0 gives Z itself); every U_n = 0.
    static ProRingPtr discrete_ring(const Int& modulus);
    // Constant chain on a finite-dimensional algebra; every U_n = 0.
    static ProRingPtr discrete_ring(AlgebraPtr algebra);
    // Level n = size x size matrices over the base's level n; transitions
    // apply the base transition entrywise.
    static ProRingPtr matrix_ring(ProRingPtr base, int size);

    Kind kind() const { return kind_; }
    // True when every U_n = 0, i.e. the chain is constant.
    bool discrete_topology() const;
    // The modulus of R_n; defined for the Z/m lanes only.
    Int modulus(int level) const;
    const ProRingPtr& base() const;  // matrix chains
    int matrix_size() const;         // matrix chains
    // The wrapped algebra of a constant algebra chain; null for other kinds.
    const AlgebraPtr& algebra() const { return alg_; }
    std::string describe() const;

    // Arithmetic in R_n; inputs must already be reduced level-n elements.
    RingElem zero(int level) const;
    RingElem one(int level) const;
    RingElem add(const RingElem& a, const RingElem& b, int level) const;
    RingElem neg(const RingElem& a, int level) const;
    RingElem mul(const RingElem& a, const RingElem& b, int level) const;
    RingElem from_int(const Int& k, int level) const;  // k * 1 in R_n
    bool is_zero(const RingElem& a) const;
    std::string str(const RingElem& a) const;

    // q_n: R_{level+1} -> R_{level}.
    RingElem transition(const RingElem& a, int level) const;

    // R_n as an abelian group with coordinates; defined whenever the level
    // rings are Z-presentable (everything except constant algebra chains).
    AbGroup level_group(int level) const;
    std::vector<Int> group_coords(const RingElem& a, int level) const;
    RingElem from_group_coords(const std::vector<Int>& c, int level) const;

  private:
    ProRing() = default;

    Kind kind_ = Kind::SAdic;
    Int s_ = 0;        // s-adic chains
    Int modulus_ = 0;  // constant Z/m chains
    AlgebraPtr alg_;   // constant algebra chains
    ProRingPtr base_;  // matrix chains
    int size_ = 0;     // matrix chains
};

// Structural equality of chains: same kind and same defining data.
bool same_ring(const ProRingPtr& a, const ProRingPtr& b);

// An element of the completed ring: a deterministic producer of its image in
// each level ring, coherent under the transition maps.
class ProElement {
  public:
    ProElement(ProRingPtr ring, std::function<RingElem(int)> at);

    const ProRingPtr& ring() const { return ring_; }
    RingElem at(int level) const;

  private:
    ProRingPtr ring_;
    std::function<RingElem(int)> at_;
};

ProElement pro_int(ProRingPtr ring, const Int& k);  // image of an integer
ProElement pro_add(const ProElement& a, const ProElement& b);
ProElement pro_neg(const ProElement& a);
ProElement pro_mul(const ProElement& a, const ProElement& b);
// The pro-element with level-`level` image a; transitions push a down, and
// the reduced representation of a is unchanged at higher levels (true for
// every chain kind built here).
ProElement lift_element(ProRingPtr ring, const RingElem& a, int level);
// Truncation equality: images agree at all levels <= precision.
bool pro_eq(const ProElement& a, const ProElement& b, int precision = 8);

// The index set X of a free contramodule R[[X]]: a finite list of distinct
// names, or the countable symbolic family stem0, stem1, stem2, ...
class IndexSet {
  public:
    static IndexSet finite(std::vector<std::string> names);
    static IndexSet symbolic(std::string stem);

    bool is_finite() const { return finite_; }
    int size() const;  // finite sets only
    std::string name(int i) const;
    bool contains(const std::string& x) const;
    const std::vector<std::string>& names() const;  // finite sets only

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

  private:
    IndexSet() = default;

    bool finite_ = true;
    std::vector<std::string> names_;
    std::string stem_;
};

// A level snapshot of an element of R[[X]]: the finitely supported
// coefficient map X -> R_n with zero coefficients dropped.
using Snapshot = std::map<std::string, RingElem>;

// An element of the free contramodule R[[X]]: a formal combination of the
// indices whose coefficients converge to zero, stored as a deterministic
// producer of level snapshots, coherent under the transition maps.
class FreeContraElement {
  public:
    FreeContraElement(ProRingPtr ring, IndexSet x, std::function<Snapshot(int)> level);

    const ProRingPtr& ring() const { return ring_; }
    const IndexSet& index_set() const { return x_; }

    // The level-n snapshot: zero coefficients dropped, keys checked against X.
    Snapshot snapshot(int level) const;
    // The coefficient at one index, as an element of the completed ring.
    ProElement coefficient(const std::string& at) const;
    // Union of snapshot supports over levels 1..precision; this is the exact
    // global support for elements built from finitely many terms.
    std::vector<std::string> support(int precision = 8) const;

  private:
    ProRingPtr ring_;
    IndexSet x_;
    std::function<Snapshot(int)> level_;
};

FreeContraElement contra_zero(ProRingPtr ring, IndexSet x);
FreeContraElement contra_add(const FreeContraElement& a, const FreeContraElement& b);
FreeContraElement contra_neg(const FreeContraElement& a);
// Finite combination sum_i coeff_i * x_i with pro-ring coefficients;
// repeated names accumulate.
FreeContraElement contra_combination(ProRingPtr ring, IndexSet x,
                                     const std::vector<std::pair<std::string, ProElement>>& terms);
// Finite combination with constant integer coefficients.
FreeContraElement contra_combination(ProRingPtr ring, IndexSet x,
                                     const std::vector<std::pair<std::string, Int>>& terms);
// The element whose level-`level` snapshot is `snap`, lifted constantly.
FreeContraElement lift_snapshot(ProRingPtr ring, IndexSet x, const Snapshot& snap, int level);

// The monad unit at one index: coefficient 1 there, 0 elsewhere, every level.
FreeContraElement monad_unit(ProRingPtr ring, IndexSet x, const std::string& at);

// One term r * t of a finite formal combination in R[[ R[[X]] ]].
struct OuterTerm {
    ProElement coeff;
    FreeContraElement inner;
};

// The monad multiplication: collapses a finite combination sum_k r_k * t_k
// to the element of R[[X]] whose level-n coefficient at x is
// sum_k r_k * (level-n coefficient of t_k at x).
FreeContraElement monad_mult(ProRingPtr ring, IndexSet x, const std::vector<OuterTerm>& outer);

// The level-n snapshot of x, i.e. its image in R[[X]] modulo the elements
// supported in the level-n kernel ideal; same as x.snapshot(level).
Snapshot level_quotient(const FreeContraElement& x, int level);

// Truncation equality at all levels <= precision.
bool contra_eq(const FreeContraElement& a, const FreeContraElement& b, int precision = 8);

// Coherence checks: transitions applied to level-(n+1) data reproduce the
// level-n data for all n < precision. Empty result on success, else a report.
std::string check_pro_coherence(const ProElement& a, int precision = 8);
std::string check_contra_coherence(const FreeContraElement& a, int precision = 8);
// Chain sanity on seeded samples: transitions preserve 1 and are ring maps.
std::string check_chain(const ProRingPtr& ring, std::uint64_t seed, int precision = 8);

// Seeded deterministic sampling, built as digit expansions along the chain.
ProElement random_pro_element(ProRingPtr ring, std::uint64_t seed);
FreeContraElement random_contra_element(ProRingPtr ring, IndexSet x, std::uint64_t seed,
                                        int max_support = 4);

// Property fuzz for the monad laws: both unit laws and associativity of
// collapsing nested combinations, compared on snapshots at levels
// 1..precision for `trials` seeded instances. Empty result on success.
std::string monad_law_fuzz(ProRingPtr ring, IndexSet x, std::uint64_t seed, int trials,
                           int precision = 8);

}  // namespace tiltkit
