#include "tiltkit/module.hpp"

#include "tiltkit/rng.hpp"

namespace tiltkit {

namespace {

// Complement of a full-rank column span inside the ambient space: embed maps
// a complement basis in, project kills the span and restricts to coordinates
// on the complement (project . embed = identity).
struct Complement {
    SMat embed, project;
};

Complement complement_of(const SMat& span_cols) {
    int d = span_cols.rows();
    int r = span_cols.cols();
    SMat full = column_space_basis(hcat(span_cols, SMat::identity(d, span_cols.field())));
    if (full.cols() != d) throw std::logic_error("span columns were not independent");
    SMat inv = inverse(full);
    SMat embed(d, d - r, span_cols.field());
    SMat project(d - r, d, span_cols.field());
    for (int j = 0; j < d - r; ++j)
        for (int i = 0; i < d; ++i) {
            embed.at(i, j) = full.at(i, r + j);
            project.at(j, i) = inv.at(r + j, i);
        }
    return {embed, project};
}

SMat kron(const SMat& a, const SMat& b) {
    SMat r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

SMat vectorize(const SMat& m) {
    SMat v(m.rows() * m.cols(), 1, m.field());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
    return v;
}

SMat unvectorize(const SMat& v, int col, int rows, int cols, FieldTag f) {
    SMat m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, col);
    return m;
}

void check_same_algebra(const Module& a, const Module& b) {
    if (a.alg.get() != b.alg.get()) throw std::invalid_argument("modules over different algebras");
}

// The quotient space p (x) n of the plain tensor product by the balancing
// relations, for p over the opposite algebra of n's.
struct TensorSpace {
    int dim = 0;
    SMat embed, project;
};

TensorSpace tensor_space(const Module& p, const Module& n) {
    FieldTag f = n.field();
    int dp = p.dim, dn = n.dim;
    SMat rels(dp * dn, 0, f);
    for (int i = 0; i < n.alg->dim(); ++i) {
        SMat r = kron(p.act[i], SMat::identity(dn, f)) - kron(SMat::identity(dp, f), n.act[i]);
        rels = rels.cols() ? hcat(rels, r) : r;
    }
    SMat span = column_space_basis(rels.cols() ? rels : SMat(dp * dn, 0, f));
    Complement c = complement_of(span);
    return {dp * dn - span.cols(), c.embed, c.project};
}

}  // namespace

SMat Module::action(const Coords& x) const {
    if (static_cast<int>(x.size()) != alg->dim()) throw std::invalid_argument("coordinate length");
    SMat r(dim, dim, field());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                if (!act[i].at(a, b).is_zero()) r.at(a, b) += x[i] * act[i].at(a, b);
    }
    return r;
}

Module make_module(AlgebraPtr alg, std::vector<SMat> act) {
    Module m;
    m.alg = std::move(alg);
    if (static_cast<int>(act.size()) != m.alg->dim())
        throw std::invalid_argument("one action matrix per algebra basis element required");
    m.dim = act.empty() ? 0 : act[0].rows();
    for (const auto& a : act)
        if (a.rows() != m.dim || a.cols() != m.dim || !(a.field() == m.alg->field()))
            throw std::invalid_argument("action matrix shape or field mismatch");
    m.act = std::move(act);
    if (!(m.action(m.alg->unit()) == SMat::identity(m.dim, m.field())))
        throw std::invalid_argument("unit does not act as the identity");
    for (int i = 0; i < m.alg->dim(); ++i)
        for (int j = 0; j < m.alg->dim(); ++j)
            if (!(m.act[i] * m.act[j] == m.action(m.alg->basis_mul(i, j))))
                throw std::invalid_argument("action is not an algebra homomorphism");
    return m;
}

Module zero_module(AlgebraPtr alg) {
    std::vector<SMat> act(alg->dim(), SMat(0, 0, alg->field()));
    Module m;
    m.alg = std::move(alg);
    m.dim = 0;
    m.act = std::move(act);
    return m;
}

Module regular_module(AlgebraPtr alg) {
    std::vector<SMat> act;
    for (int i = 0; i < alg->dim(); ++i) {
        Coords e(alg->dim(), Scalar::zero(alg->field()));
        e[i] = Scalar::one(alg->field());
        act.push_back(alg->left_mult(e));
    }
    return make_module(std::move(alg), std::move(act));
}

bool same_module(const Module& a, const Module& b) {
    if (a.alg.get() != b.alg.get() || a.dim != b.dim) return false;
    for (int i = 0; i < a.alg->dim(); ++i)
        if (!(a.act[i] == b.act[i])) return false;
    return true;
}

Module module_from_arrows(const PathAlgebra& pa, const std::vector<int>& dims,
                          const std::vector<SMat>& arrow_mats) {
    const Quiver& q = pa.quiver;
    if (static_cast<int>(dims.size()) != q.vertices)
        throw std::invalid_argument("one dimension per vertex required");
    if (arrow_mats.size() != q.arrows.size())
        throw std::invalid_argument("one matrix per arrow required");
    FieldTag f = pa.field;
    std::vector<int> off(q.vertices + 1, 0);
    for (int v = 0; v < q.vertices; ++v) {
        if (dims[v] < 0) throw std::invalid_argument("negative vertex dimension");
        off[v + 1] = off[v] + dims[v];
    }
    int total = off[q.vertices];

    // Global matrix of one arrow: its block sits at (target, source).
    auto global = [&](int a) {
        const Arrow& ar = q.arrows[a];
        const SMat& blk = arrow_mats[a];
        if (blk.rows() != dims[ar.tgt] || blk.cols() != dims[ar.src] || !(blk.field() == f))
            throw std::invalid_argument("arrow matrix shape or field mismatch for " + ar.name);
        SMat g(total, total, f);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) g.at(off[ar.tgt] + i, off[ar.src] + j) = blk.at(i, j);
        return g;
    };
    std::vector<SMat> garrow;
    for (size_t a = 0; a < q.arrows.size(); ++a) garrow.push_back(global(static_cast<int>(a)));

    auto eval_path = [&](const std::vector<int>& arrows) {
        SMat m = garrow[arrows[0]];
        for (size_t k = 1; k < arrows.size(); ++k) m = garrow[arrows[k]] * m;  // first arrow acts first
        return m;
    };
    for (const auto& rel : pa.relations) {
        SMat sum(total, total, f);
        for (const auto& term : rel) {
            SMat val = eval_path(term.arrows);
            for (int i = 0; i < total; ++i)
                for (int j = 0; j < total; ++j) sum.at(i, j) += term.coeff * val.at(i, j);
        }
        if (!sum.is_zero()) throw std::invalid_argument("arrow matrices violate a defining relation");
    }

    std::vector<SMat> act;
    for (int b = 0; b < pa.alg->dim(); ++b) {
        const QPath& path = pa.basis_paths[b];
        if (path.arrows.empty()) {
            SMat g(total, total, f);
            for (int i = 0; i < dims[path.vertex]; ++i)
                g.at(off[path.vertex] + i, off[path.vertex] + i) = Scalar::one(f);
            act.push_back(g);
        } else {
            act.push_back(eval_path(path.arrows));
        }
    }
    return make_module(pa.alg, std::move(act));
}

std::vector<int> dim_vector(const PathAlgebra& pa, const Module& m) {
    if (m.alg.get() != pa.alg.get()) throw std::invalid_argument("module over a different algebra");
    std::vector<int> d;
    for (int v = 0; v < pa.quiver.vertices; ++v) {
        Coords e = pa.alg->zero_coords();
        e[pa.vertex_unit(v)] = Scalar::one(pa.field);
        d.push_back(rank(m.action(e)));
    }
    return d;
}

ModuleMap make_map(Module src, Module tgt, SMat m) {
    check_same_algebra(src, tgt);
    if (m.rows() != tgt.dim || m.cols() != src.dim)
        throw std::invalid_argument("map shape mismatch");
    for (int i = 0; i < src.alg->dim(); ++i)
        if (!(m * src.act[i] == tgt.act[i] * m))
            throw std::invalid_argument("matrix does not commute with the action");
    return {std::move(src), std::move(tgt), std::move(m)};
}

ModuleMap identity_map(const Module& m) { return {m, m, SMat::identity(m.dim, m.field())}; }

ModuleMap zero_map(Module src, Module tgt) {
    check_same_algebra(src, tgt);
    SMat m(tgt.dim, src.dim, src.field());
    return {std::move(src), std::move(tgt), std::move(m)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (!same_module(g.src, f.tgt)) throw std::invalid_argument("composition endpoint mismatch");
    return {f.src, g.tgt, g.m * f.m};
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
    if (!same_module(f.src, g.src) || !same_module(f.tgt, g.tgt))
        throw std::invalid_argument("sum endpoint mismatch");
    return {f.src, f.tgt, f.m + g.m};
}

ModuleMap map_scale(const Scalar& c, const ModuleMap& f) {
    SMat m = f.m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
    return {f.src, f.tgt, std::move(m)};
}

std::vector<SMat> hom_basis(const Module& m, const Module& n) {
    check_same_algebra(m, n);
    FieldTag f = m.field();
    int vars = n.dim * m.dim;  // X with n.dim rows, m.dim cols, row-major
    SMat sys(m.alg->dim() * vars, vars, f);
    int row = 0;
    for (int b = 0; b < m.alg->dim(); ++b) {
        // n.act[b] X - X m.act[b] = 0, entry (i, j).
        for (int i = 0; i < n.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                for (int k = 0; k < n.dim; ++k) sys.at(row, k * m.dim + j) += n.act[b].at(i, k);
                for (int l = 0; l < m.dim; ++l) sys.at(row, i * m.dim + l) -= m.act[b].at(l, j);
                ++row;
            }
    }
    SMat ker = kernel_basis(sys);
    std::vector<SMat> basis;
    for (int c = 0; c < ker.cols(); ++c) basis.push_back(unvectorize(ker, c, n.dim, m.dim, f));
    return basis;
}

int hom_dim(const Module& m, const Module& n) { return static_cast<int>(hom_basis(m, n).size()); }

SubObject kernel(const ModuleMap& f) {
    SMat basis = kernel_basis(f.m);
    std::vector<SMat> act;
    for (int i = 0; i < f.src.alg->dim(); ++i) {
        SMat x;
        if (!solve(basis, f.src.act[i] * basis, x)) throw std::logic_error("kernel is not stable");
        act.push_back(x);
    }
    Module k = make_module(f.src.alg, std::move(act));
    return {k, make_map(k, f.src, basis)};
}

SubObject image(const ModuleMap& f) {
    SMat basis = column_space_basis(f.m);
    std::vector<SMat> act;
    for (int i = 0; i < f.tgt.alg->dim(); ++i) {
        SMat x;
        if (!solve(basis, f.tgt.act[i] * basis, x)) throw std::logic_error("image is not stable");
        act.push_back(x);
    }
    Module im = make_module(f.tgt.alg, std::move(act));
    return {im, make_map(im, f.tgt, basis)};
}

SubObject cokernel(const ModuleMap& f) {
    SMat span = column_space_basis(f.m);
    Complement c = complement_of(span);
    std::vector<SMat> act;
    for (int i = 0; i < f.tgt.alg->dim(); ++i) act.push_back(c.project * f.tgt.act[i] * c.embed);
    Module q = make_module(f.tgt.alg, std::move(act));
    return {q, make_map(f.tgt, q, c.project)};
}

SubObject generated_submodule(const Module& m, const SMat& cols) {
    if (cols.rows() != m.dim) throw std::invalid_argument("generator shape mismatch");
    SMat span = column_space_basis(cols);
    for (;;) {
        SMat grown = span;
        for (int i = 0; i < m.alg->dim(); ++i) grown = hcat(grown, m.act[i] * span);
        grown = column_space_basis(grown);
        if (grown.cols() == span.cols()) break;
        span = grown;
    }
    std::vector<SMat> act;
    for (int i = 0; i < m.alg->dim(); ++i) {
        SMat x;
        if (!solve(span, m.act[i] * span, x)) throw std::logic_error("closure is not stable");
        act.push_back(x);
    }
    Module s = make_module(m.alg, std::move(act));
    return {s, make_map(s, m, span)};
}

SubObject radical_submodule(const Module& m) {
    const SMat& rad = m.alg->radical();
    SMat gens(m.dim, 0, m.field());
    for (int c = 0; c < rad.cols(); ++c) {
        Coords x(m.alg->dim(), Scalar::zero(m.field()));
        for (int i = 0; i < m.alg->dim(); ++i) x[i] = rad.at(i, c);
        SMat a = m.action(x);
        gens = gens.cols() ? hcat(gens, a) : a;
    }
    if (!gens.cols()) gens = SMat(m.dim, 0, m.field());
    return generated_submodule(m, gens);
}

int min_generators(const Module& m) { return cokernel(radical_submodule(m).map).mod.dim; }

SumDecomp direct_sum(AlgebraPtr alg, const std::vector<Module>& parts) {
    int total = 0;
    for (const auto& p : parts) {
        if (p.alg.get() != alg.get()) throw std::invalid_argument("summand over a different algebra");
        total += p.dim;
    }
    FieldTag f = alg->field();
    std::vector<SMat> act;
    for (int i = 0; i < alg->dim(); ++i) {
        SMat a(total, total, f);
        int off = 0;
        for (const auto& p : parts) {
            for (int r = 0; r < p.dim; ++r)
                for (int c = 0; c < p.dim; ++c) a.at(off + r, off + c) = p.act[i].at(r, c);
            off += p.dim;
        }
        act.push_back(a);
    }
    SumDecomp s;
    s.total = make_module(alg, std::move(act));
    int off = 0;
    for (const auto& p : parts) {
        SMat in(total, p.dim, f), out(p.dim, total, f);
        for (int r = 0; r < p.dim; ++r) {
            in.at(off + r, r) = Scalar::one(f);
            out.at(r, off + r) = Scalar::one(f);
        }
        s.in.push_back(make_map(p, s.total, in));
        s.out.push_back(make_map(s.total, p, out));
        off += p.dim;
    }
    return s;
}

ModuleMap into_sum(const SumDecomp& sum, const std::vector<ModuleMap>& components) {
    if (components.size() != sum.in.size()) throw std::invalid_argument("component count mismatch");
    ModuleMap r = zero_map(components.empty() ? sum.total : components[0].src, sum.total);
    for (size_t t = 0; t < components.size(); ++t)
        r = map_add(r, compose(sum.in[t], components[t]));
    return r;
}

ModuleMap from_sum(const SumDecomp& sum, const std::vector<ModuleMap>& components) {
    if (components.size() != sum.out.size()) throw std::invalid_argument("component count mismatch");
    ModuleMap r = zero_map(sum.total, components.empty() ? sum.total : components[0].tgt);
    for (size_t t = 0; t < components.size(); ++t)
        r = map_add(r, compose(components[t], sum.out[t]));
    return r;
}

Module dual_module(const Module& m) {
    std::vector<SMat> act;
    for (int i = 0; i < m.alg->dim(); ++i) act.push_back(m.act[i].transpose());
    return make_module(m.alg->opposite(), std::move(act));
}

ModuleMap dual_map(const ModuleMap& f) {
    return make_map(dual_module(f.tgt), dual_module(f.src), f.m.transpose());
}

SubObject projective_block(AlgebraPtr alg, int block) {
    Module reg = regular_module(alg);
    ModuleMap pick = make_map(reg, reg, alg->right_mult(alg->idempotent(block)));
    return image(pick);
}

Module simple_module(AlgebraPtr alg, int block) {
    SubObject p = projective_block(std::move(alg), block);
    Module s = cokernel(radical_submodule(p.mod).map).mod;
    if (s.dim != 1) throw std::logic_error("simple module of a split basic algebra must be a line");
    return s;
}

Cover projective_cover(const Module& m) {
    AlgebraPtr alg = m.alg;
    SubObject top = cokernel(radical_submodule(m).map);
    const ModuleMap& to_top = top.map;

    std::vector<Module> blocks;
    std::vector<ModuleMap> maps;
    std::vector<int> mult(alg->blocks(), 0);
    Module reg = regular_module(alg);
    for (int b = 0; b < alg->blocks(); ++b) {
        SubObject pb = projective_block(alg, b);
        // Basis of the idempotent slice of the top, lifted to generators of m.
        SMat slice = column_space_basis(top.mod.action(alg->idempotent(b)));
        mult[b] = slice.cols();
        for (int c = 0; c < slice.cols(); ++c) {
            SMat t(top.mod.dim, 1, m.field());
            for (int i = 0; i < top.mod.dim; ++i) t.at(i, 0) = slice.at(i, c);
            SMat pre;
            if (!solve(to_top.m, t, pre)) throw std::logic_error("top projection is not onto");
            SMat gen = m.action(alg->idempotent(b)) * pre;
            // x -> x . gen on the regular module, restricted to the block.
            SMat phi(m.dim, alg->dim(), m.field());
            for (int j = 0; j < alg->dim(); ++j) {
                Coords e = alg->zero_coords();
                e[j] = Scalar::one(m.field());
                SMat col = m.action(e) * gen;
                for (int i = 0; i < m.dim; ++i) phi.at(i, j) = col.at(i, 0);
            }
            blocks.push_back(pb.mod);
            maps.push_back(make_map(pb.mod, m, phi * pb.map.m));
        }
    }
    SumDecomp sum = direct_sum(alg, blocks);
    ModuleMap onto = from_sum(sum, maps);
    if (rank(onto.m) != m.dim) throw std::logic_error("projective cover is not surjective");
    return {sum.total, onto, mult};
}

Resolution projective_resolution(const Module& m, int length) {
    if (length < 0) throw std::invalid_argument("negative resolution length");
    Resolution r;
    r.target = m;
    Cover c = projective_cover(m);
    r.proj.push_back(c.proj);
    r.aug = c.onto;
    ModuleMap into_prev = r.aug;
    for (int k = 1; k <= length; ++k) {
        SubObject ker = kernel(into_prev);
        if (ker.mod.dim == 0) {
            r.complete = true;
            return r;
        }
        Cover next = projective_cover(ker.mod);
        r.proj.push_back(next.proj);
        r.diff.push_back(compose(ker.map, next.onto));
        into_prev = r.diff.back();
    }
    r.complete = kernel(into_prev).mod.dim == 0;
    return r;
}

bool is_projective(const Module& m) { return projective_cover(m).proj.dim == m.dim; }

Envelope injective_envelope(const Module& m) {
    Cover c = projective_cover(dual_module(m));
    // Dualizing the cover of the dual gives the envelope; the double dual is
    // the identity, so the transpose lands on m itself.
    Module env = dual_module(c.proj);
    ModuleMap into = make_map(m, env, c.onto.m.transpose());
    return {env, into};
}

int ext_dim(const Module& m, const Module& n, int i) {
    check_same_algebra(m, n);
    if (i < 0) throw std::invalid_argument("negative ext degree");
    Resolution res = projective_resolution(m, i + 1);
    auto hom_at = [&](int k) -> std::vector<SMat> {
        if (k >= static_cast<int>(res.proj.size())) return {};
        return hom_basis(res.proj[k], n);
    };
    std::vector<SMat> hk = hom_at(i), hnext = hom_at(i + 1), hprev = i ? hom_at(i - 1) : std::vector<SMat>{};
    FieldTag f = m.field();
    // Matrix of precomposition with diff[k-1] : hom(P_{k-1}, n) -> hom(P_k, n)
    // in the chosen hom bases.
    auto delta = [&](const std::vector<SMat>& from, const std::vector<SMat>& to, int dk) {
        SMat d(to.empty() ? 0 : to[0].rows() * to[0].cols(), static_cast<int>(to.size()), f);
        for (size_t t = 0; t < to.size(); ++t) {
            SMat v = vectorize(to[t]);
            for (int r = 0; r < v.rows(); ++r) d.at(r, static_cast<int>(t)) = v.at(r, 0);
        }
        SMat img(d.rows(), static_cast<int>(from.size()), f);
        for (size_t s = 0; s < from.size(); ++s) {
            if (dk >= static_cast<int>(res.diff.size())) continue;  // next projective is zero
            SMat comp = vectorize(from[s] * res.diff[dk].m);
            for (int r = 0; r < img.rows(); ++r) img.at(r, static_cast<int>(s)) = comp.at(r, 0);
        }
        SMat coords;
        if (!solve(d, img, coords)) throw std::logic_error("composite escaped the hom space");
        return coords;
    };
    int nullity;
    if (hnext.empty() || i >= static_cast<int>(res.diff.size())) {
        nullity = static_cast<int>(hk.size());  // the outgoing differential is zero
    } else {
        SMat out = delta(hk, hnext, i);
        nullity = static_cast<int>(hk.size()) - rank(out);
    }
    int boundary = 0;
    if (i > 0 && !hk.empty() && !hprev.empty() && i - 1 < static_cast<int>(res.diff.size())) {
        SMat in = delta(hprev, hk, i - 1);
        boundary = rank(in);
    }
    return nullity - boundary;
}

int tor_dim(const Module& mop, const Module& n, int i) {
    if (mop.alg.get() != n.alg->opposite().get())
        throw std::invalid_argument("tor needs a module over the opposite algebra");
    if (i < 0) throw std::invalid_argument("negative tor degree");
    Resolution res = projective_resolution(mop, i + 1);
    auto space_at = [&](int k) -> TensorSpace {
        if (k >= static_cast<int>(res.proj.size())) return {0, SMat(), SMat()};
        return tensor_space(res.proj[k], n);
    };
    TensorSpace tk = space_at(i), tnext = space_at(i + 1), tprev;
    if (i > 0) tprev = space_at(i - 1);
    FieldTag f = n.field();
    auto induced = [&](const TensorSpace& from, const TensorSpace& to, int dk) {
        return to.project * kron(res.diff[dk].m, SMat::identity(n.dim, f)) * from.embed;
    };
    int nullity;
    if (tk.dim == 0) {
        nullity = 0;
    } else if (i == 0) {
        nullity = tk.dim;  // the augmentation is not part of the tensored complex
    } else {
        nullity = tk.dim - rank(induced(tk, tprev, i - 1));
    }
    int boundary = 0;
    if (tnext.dim > 0 && i < static_cast<int>(res.diff.size())) boundary = rank(induced(tnext, tk, i));
    return nullity - boundary;
}

SummandWitness summand_test(const Module& m, const Module& n) {
    check_same_algebra(m, n);
    FieldTag f = m.field();
    SummandWitness w;
    if (m.dim == 0) {
        w.is_summand = true;
        w.copies = 0;
        SumDecomp empty = direct_sum(m.alg, {});
        w.section = make_map(m, empty.total, SMat(0, 0, f));
        w.retract = make_map(empty.total, m, SMat(0, 0, f));
        return w;
    }
    std::vector<SMat> to_n = hom_basis(m, n), from_n = hom_basis(n, m);
    // m splits off a power of n exactly when the identity is a sum of
    // composites through n.
    std::vector<std::pair<int, int>> pairs;
    SMat prods(m.dim * m.dim, static_cast<int>(to_n.size() * from_n.size()), f);
    int col = 0;
    for (size_t a = 0; a < to_n.size(); ++a)
        for (size_t b = 0; b < from_n.size(); ++b) {
            SMat v = vectorize(from_n[b] * to_n[a]);
            for (int r = 0; r < v.rows(); ++r) prods.at(r, col) = v.at(r, 0);
            pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
            ++col;
        }
    SMat coeff;
    if (!solve(prods, vectorize(SMat::identity(m.dim, f)), coeff)) return w;

    std::vector<ModuleMap> secs, rets;
    std::vector<Module> copies;
    for (size_t t = 0; t < pairs.size(); ++t) {
        if (coeff.at(static_cast<int>(t), 0).is_zero()) continue;
        copies.push_back(n);
        secs.push_back(make_map(m, n, to_n[pairs[t].first]));
        rets.push_back(map_scale(coeff.at(static_cast<int>(t), 0),
                                 make_map(n, m, from_n[pairs[t].second])));
    }
    SumDecomp sum = direct_sum(m.alg, copies);
    w.is_summand = true;
    w.copies = static_cast<int>(copies.size());
    w.section = into_sum(sum, secs);
    w.retract = from_sum(sum, rets);
    if (!(compose(w.retract, w.section).m == SMat::identity(m.dim, f)))
        throw std::logic_error("witness retraction failed");
    return w;
}

std::optional<ModuleMap> find_iso(const Module& m, const Module& n) {
    check_same_algebra(m, n);
    if (m.dim != n.dim) return std::nullopt;
    if (m.dim == 0) return make_map(m, n, SMat(0, 0, m.field()));
    std::vector<SMat> basis = hom_basis(m, n);
    for (const auto& b : basis)
        if (invertible(b)) return make_map(m, n, b);
    CounterRng rng(0x7fa1, 17);
    std::int64_t p = m.field().p;
    for (int tries = 0; tries < 200; ++tries) {
        SMat cand(n.dim, m.dim, m.field());
        for (const auto& b : basis) {
            std::int64_t c = p ? static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p)))
                               : rng.range(-3, 3);
            if (!c) continue;
            Scalar s(Rat(c), m.field());
            for (int i = 0; i < n.dim; ++i)
                for (int j = 0; j < m.dim; ++j) cand.at(i, j) += s * b.at(i, j);
        }
        if (invertible(cand)) return make_map(m, n, cand);
    }
    return std::nullopt;
}

}  // namespace tiltkit
