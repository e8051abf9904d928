// Finite-dimensional associative unital algebra with a fixed basis, given by
// structure constants, a complete orthogonal idempotent list, and a verified
// radical. Immutable after construction.
#pragma once

#include <memory>
#include <optional>

#include "tiltkit/matrix.hpp"

namespace tiltkit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

using Coords = std::vector<Scalar>;

class Algebra {
  public:
    struct Spec {
        FieldTag field;
        // mult[i][j] = coordinates of b_i * b_j.
        std::vector<std::vector<Coords>> mult;
        Coords unit;
        // Orthogonal idempotents summing to the unit; one per simple block.
        std::vector<Coords> idempotents;
        std::vector<std::string> names;
        // Columns spanning the radical; verified. Computed via the trace form
        // when absent (characteristic 0 only).
        std::optional<SMat> radical_span;
    };

    // Verifies associativity, unit laws, idempotent axioms, the radical
    // (ideal, nilpotent, split-basic quotient), and links the opposite algebra.
    static AlgebraPtr create(Spec s);

    int dim() const { return dim_; }
    FieldTag field() const { return field_; }
    const Coords& unit() const { return unit_; }
    int blocks() const { return static_cast<int>(idempotents_.size()); }
    const Coords& idempotent(int i) const { return idempotents_.at(i); }
    const std::string& basis_name(int i) const { return names_.at(i); }

    const Coords& basis_mul(int i, int j) const { return mult_[i][j]; }
    Coords mul(const Coords& x, const Coords& y) const;
    // Matrix of y -> x y.
    SMat left_mult(const Coords& x) const;
    // Matrix of y -> y x.
    SMat right_mult(const Coords& x) const;

    // Columns form a basis of the radical.
    const SMat& radical() const { return radical_; }

    // Same underlying space, reversed multiplication; involutive by pointer.
    AlgebraPtr opposite() const { return AlgebraPtr(owner_.lock(), opp_); }

    Coords zero_coords() const { return Coords(dim_, Scalar::zero(field_)); }

    friend bool algebra_iso_on_basis(const Algebra& a, const Algebra& b,
                                     const std::vector<Coords>& images);

  private:
    Algebra() = default;
    struct Pair;  // one allocation holding an algebra and its opposite
    void fill(Spec s);
    void verify() const;

    FieldTag field_;
    int dim_ = 0;
    std::vector<std::vector<Coords>> mult_;
    Coords unit_;
    std::vector<Coords> idempotents_;
    std::vector<std::string> names_;
    SMat radical_;
    // An algebra and its opposite live in one allocation; opposite() returns
    // an aliasing pointer, so neither can outlive the other.
    std::weak_ptr<void> owner_;
    const Algebra* opp_ = nullptr;
};

// Does sending basis element i of a to images[i] extend to an algebra
// isomorphism a -> b? Checks linear bijectivity, the unit, and all products.
bool algebra_iso_on_basis(const Algebra& a, const Algebra& b, const std::vector<Coords>& images);

}  // namespace tiltkit
