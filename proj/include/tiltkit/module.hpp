// Finite-dimensional left modules over a fixed algebra: hom spaces, kernels
// and cokernels, projective covers and minimal resolutions, ext and tor,
// duals, and split-summand tests. Everything is exact and deterministic.
#pragma once

#include <optional>

#include "tiltkit/quiver.hpp"

namespace tiltkit {

// act[i] is the matrix of the i-th algebra basis element; the action map is
// an algebra homomorphism into endomorphisms.
struct Module {
    AlgebraPtr alg;
    int dim = 0;
    std::vector<SMat> act;

    FieldTag field() const { return alg->field(); }
    // Matrix of the element with the given coordinates.
    SMat action(const Coords& x) const;
};

struct ModuleMap {
    Module src, tgt;
    SMat m;
};

// A module together with a structure map: the inclusion of a kernel or image,
// or the projection onto a cokernel.
struct SubObject {
    Module mod;
    ModuleMap map;
};

struct SumDecomp {
    Module total;
    std::vector<ModuleMap> in, out;  // in[t] . out[t] summing to the identity
};

struct Cover {
    Module proj;
    ModuleMap onto;
    std::vector<int> mult;  // projective block multiplicities = top of the module
};

struct Envelope {
    Module env;
    ModuleMap into;
};

// proj[0] <- proj[1] <- ... with diff[k] : proj[k+1] -> proj[k] and the
// augmentation proj[0] -> target; complete when the last kernel vanished.
struct Resolution {
    Module target;
    std::vector<Module> proj;
    std::vector<ModuleMap> diff;
    ModuleMap aug;
    bool complete = false;
};

struct SummandWitness {
    bool is_summand = false;
    int copies = 0;              // the power of the candidate summand used
    ModuleMap section, retract;  // retract . section = identity when it is one
};

Module make_module(AlgebraPtr alg, std::vector<SMat> act);
Module zero_module(AlgebraPtr alg);
Module regular_module(AlgebraPtr alg);
bool same_module(const Module& a, const Module& b);

// A module over a path algebra from per-vertex dimensions and one matrix per
// arrow (shape dim[tgt] x dim[src]); checks the defining relations.
Module module_from_arrows(const PathAlgebra& pa, const std::vector<int>& dims,
                          const std::vector<SMat>& arrow_mats);
std::vector<int> dim_vector(const PathAlgebra& pa, const Module& m);

ModuleMap make_map(Module src, Module tgt, SMat m);
ModuleMap identity_map(const Module& m);
ModuleMap zero_map(Module src, Module tgt);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(const Scalar& c, const ModuleMap& f);

// Basis of the space of module maps, deterministic across runs.
std::vector<SMat> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);

SubObject kernel(const ModuleMap& f);
SubObject image(const ModuleMap& f);     // map: image -> target
SubObject cokernel(const ModuleMap& f);  // map: target -> cokernel
// Smallest submodule containing the given column vectors.
SubObject generated_submodule(const Module& m, const SMat& cols);
SubObject radical_submodule(const Module& m);
int min_generators(const Module& m);

SumDecomp direct_sum(AlgebraPtr alg, const std::vector<Module>& parts);
// Map into a sum from components with a common source, and out of a sum from
// components with a common target.
ModuleMap into_sum(const SumDecomp& sum, const std::vector<ModuleMap>& components);
ModuleMap from_sum(const SumDecomp& sum, const std::vector<ModuleMap>& components);

// Vector-space dual, a module over the opposite algebra; dualizing twice is
// the identity on the nose, so dual_map can be used in both directions.
Module dual_module(const Module& m);
ModuleMap dual_map(const ModuleMap& f);

// The indecomposable projective at an idempotent block, inside the regular
// module, and the corresponding simple quotient.
SubObject projective_block(AlgebraPtr alg, int block);
Module simple_module(AlgebraPtr alg, int block);

Cover projective_cover(const Module& m);
Resolution projective_resolution(const Module& m, int length);
bool is_projective(const Module& m);
Envelope injective_envelope(const Module& m);

int ext_dim(const Module& m, const Module& n, int i);
// tor over the algebra: the first argument is a module over the opposite
// algebra of the second argument's.
int tor_dim(const Module& mop, const Module& n, int i);

// Is m a direct summand of some finite power of n? Witnessed by an explicit
// section and retraction through n^copies.
SummandWitness summand_test(const Module& m, const Module& n);

std::optional<ModuleMap> find_iso(const Module& m, const Module& n);

}  // namespace tiltkit
