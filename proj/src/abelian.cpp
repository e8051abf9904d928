#include "tiltkit/abelian.hpp"

#include <algorithm>

namespace tiltkit {

Int AbGroup::order() const {
    Int n = 1;
    for (const auto& d : inv) {
        if (d == 0) throw std::domain_error("order of infinite group");
        n *= d;
    }
    return n;
}

std::string AbGroup::str() const {
    if (inv.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < inv.size(); ++i) {
        if (i) s += " + ";
        s += inv[i] == 0 ? "Z" : "Z/" + inv[i].get_str();
    }
    return s;
}

std::vector<Int> AbGroup::reduce(std::vector<Int> x) const {
    if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("coordinate length");
    for (size_t i = 0; i < x.size(); ++i)
        if (inv[i] > 0) x[i] = mod_floor(x[i], inv[i]);
    return x;
}

ZMat AbGroup::relation_columns() const {
    int k = 0;
    for (const auto& d : inv)
        if (d > 0) ++k;
    ZMat r(dim(), k);
    int j = 0;
    for (int i = 0; i < dim(); ++i)
        if (inv[i] > 0) r.at(i, j++) = inv[i];
    return r;
}

std::vector<std::vector<Int>> AbGroup::elements(std::int64_t cap) const {
    if (!is_finite()) throw std::domain_error("enumeration of infinite group");
    if (order() > cap) throw std::domain_error("group too large to enumerate");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(dim(), 0);
    while (true) {
        out.push_back(cur);
        int i = dim() - 1;
        while (i >= 0) {
            if (++cur[i] < inv[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    if (dim() == 0) out = {{}};
    return out;
}

std::vector<Int> AbMap::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != src.dim()) throw std::invalid_argument("coordinate length");
    std::vector<Int> y(tgt.dim(), 0);
    for (int i = 0; i < tgt.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j) y[i] += m.at(i, j) * x[j];
    return tgt.reduce(y);
}

bool AbMap::is_zero() const {
    for (int j = 0; j < src.dim(); ++j) {
        std::vector<Int> e(src.dim(), 0);
        e[j] = 1;
        for (const auto& v : apply(e))
            if (v != 0) return false;
    }
    return true;
}

void AbMap::validate() const {
    if (m.rows() != tgt.dim() || m.cols() != src.dim())
        throw std::invalid_argument("map shape mismatch");
    for (int j = 0; j < src.dim(); ++j) {
        if (src.inv[j] == 0) continue;
        for (int i = 0; i < tgt.dim(); ++i) {
            Int v = m.at(i, j) * src.inv[j];
            if (tgt.inv[i] == 0 ? v != 0 : mod_floor(v, tgt.inv[i]) != 0)
                throw std::invalid_argument("map does not respect relations");
        }
    }
}

AbMap ab_identity(const AbGroup& g) { return {g, g, ZMat::identity(g.dim())}; }
AbMap ab_zero_map(const AbGroup& src, const AbGroup& tgt) {
    return {src, tgt, ZMat(tgt.dim(), src.dim())};
}

AbMap compose(const AbMap& g, const AbMap& f) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("composition target mismatch");
    AbMap r{f.src, g.tgt, g.m * f.m};
    for (int i = 0; i < r.m.rows(); ++i)
        for (int j = 0; j < r.m.cols(); ++j)
            if (r.tgt.inv[i] > 0) r.m.at(i, j) = mod_floor(r.m.at(i, j), r.tgt.inv[i]);
    return r;
}

AbMap ab_add(const AbMap& f, const AbMap& g) {
    if (!(f.src == g.src) || !(f.tgt == g.tgt)) throw std::invalid_argument("sum shape mismatch");
    return {f.src, f.tgt, f.m + g.m};
}

AbMap ab_negate(const AbMap& f) { return {f.src, f.tgt, ZMat(f.tgt.dim(), f.src.dim()) - f.m}; }

namespace {

// Integer kernel basis of a, as columns.
ZMat z_kernel(const ZMat& a) {
    SmithResult s = smith_normal_form(a);
    int n = std::min(a.rows(), a.cols());
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (j >= n || s.d.at(j, j) == 0) free_cols.push_back(j);
    ZMat k(a.cols(), static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j)
        for (int i = 0; i < a.cols(); ++i) k.at(i, static_cast<int>(j)) = s.v.at(i, free_cols[j]);
    return k;
}

// Unimodular inverse via exact rational solve.
ZMat unimodular_inverse(const ZMat& u) {
    int n = u.rows();
    SMat a(n, n, FieldTag{0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Scalar(Rat(u.at(i, j)));
    SMat x = inverse(a);
    ZMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!x.at(i, j).value().is_integer()) throw std::logic_error("non-unimodular matrix");
            r.at(i, j) = x.at(i, j).value().num();
        }
    return r;
}

// Lattice {x : f x lies in the relation lattice of tgt}, expressed on src coordinates;
// contains the src relation lattice whenever f respects relations.
ZMat constraint_lattice(const ZMat& f, const AbGroup& tgt, const AbGroup& src) {
    ZMat d = tgt.relation_columns();
    ZMat k = z_kernel(hcat(f, d));
    ZMat x(f.cols(), k.cols());
    for (int j = 0; j < k.cols(); ++j)
        for (int i = 0; i < f.cols(); ++i) x.at(i, j) = k.at(i, j);
    return hnf_columns(hcat(x, src.relation_columns()));
}

}  // namespace

PresentedGroup present(int gens, const ZMat& rels) {
    if (rels.rows() != gens) throw std::invalid_argument("presentation shape mismatch");
    SmithResult s = smith_normal_form(rels);
    int n = std::min(rels.rows(), rels.cols());
    std::vector<Int> all(gens, 0);
    for (int i = 0; i < n; ++i) all[i] = s.d.at(i, i);
    std::vector<int> kept;
    for (int i = 0; i < gens; ++i)
        if (all[i] != 1) kept.push_back(i);
    // Torsion factors first (SNF order), free factors last.
    std::stable_sort(kept.begin(), kept.end(), [&](int a, int b) {
        bool fa = all[a] == 0, fb = all[b] == 0;
        if (fa != fb) return !fa;
        return false;
    });
    PresentedGroup out;
    for (int i : kept) out.grp.inv.push_back(all[i]);
    out.to_coords = ZMat(static_cast<int>(kept.size()), gens);
    for (size_t r = 0; r < kept.size(); ++r)
        for (int j = 0; j < gens; ++j) out.to_coords.at(static_cast<int>(r), j) = s.u.at(kept[r], j);
    ZMat uinv = unimodular_inverse(s.u);
    out.from_coords = ZMat(gens, static_cast<int>(kept.size()));
    for (int i = 0; i < gens; ++i)
        for (size_t c = 0; c < kept.size(); ++c)
            out.from_coords.at(i, static_cast<int>(c)) = uinv.at(i, kept[c]);
    return out;
}

SubquotientPart kernel(const AbMap& f) {
    ZMat x = constraint_lattice(f.m, f.tgt, f.src);  // generators of the kernel, src coords
    // Relations among those generators: combinations landing in the src relation lattice.
    ZMat rels = constraint_lattice(x, f.src, AbGroup{std::vector<Int>(x.cols(), 0)});
    PresentedGroup p = present(x.cols(), rels);
    AbMap incl{p.grp, f.src, x * p.from_coords};
    for (int i = 0; i < incl.m.rows(); ++i)
        for (int j = 0; j < incl.m.cols(); ++j)
            if (f.src.inv[i] > 0) incl.m.at(i, j) = mod_floor(incl.m.at(i, j), f.src.inv[i]);
    incl.validate();
    return {p.grp, incl};
}

SubquotientPart cokernel(const AbMap& f) {
    PresentedGroup p = present(f.tgt.dim(), hcat(f.m, f.tgt.relation_columns()));
    AbMap proj{f.tgt, p.grp, p.to_coords};
    for (int i = 0; i < proj.m.rows(); ++i)
        for (int j = 0; j < proj.m.cols(); ++j)
            if (p.grp.inv[i] > 0) proj.m.at(i, j) = mod_floor(proj.m.at(i, j), p.grp.inv[i]);
    proj.validate();
    return {p.grp, proj};
}

ZMat image_lattice(const AbMap& f) { return hnf_columns(hcat(f.m, f.tgt.relation_columns())); }

ZMat kernel_lattice(const AbMap& f) { return constraint_lattice(f.m, f.tgt, f.src); }

bool is_iso(const AbMap& f) {
    if (!kernel(f).grp.is_zero()) return false;
    return cokernel(f).grp.is_zero();
}

bool exact_at(const AbMap& f, const AbMap& g) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("exactness chain mismatch");
    if (!compose(g, f).is_zero()) return false;
    return image_lattice(f) == kernel_lattice(g);
}

AbSum direct_sum(const std::vector<AbGroup>& parts) {
    AbSum s;
    std::vector<Int> inv;
    for (const auto& p : parts) inv.insert(inv.end(), p.inv.begin(), p.inv.end());
    // Canonicalize to invariant-factor order via a presentation.
    AbGroup raw{inv};
    PresentedGroup pg = present(raw.dim(), raw.relation_columns());
    s.total = pg.grp;
    int off = 0;
    for (const auto& p : parts) {
        ZMat in(raw.dim(), p.dim());
        for (int j = 0; j < p.dim(); ++j) in.at(off + j, j) = 1;
        AbMap fi{p, s.total, pg.to_coords * in};
        ZMat out(p.dim(), raw.dim());
        for (int j = 0; j < p.dim(); ++j) out.at(j, off + j) = 1;
        AbMap fo{s.total, p, out * pg.from_coords};
        for (int i = 0; i < fi.m.rows(); ++i)
            for (int j = 0; j < fi.m.cols(); ++j)
                if (s.total.inv[i] > 0) fi.m.at(i, j) = mod_floor(fi.m.at(i, j), s.total.inv[i]);
        for (int i = 0; i < fo.m.rows(); ++i)
            for (int j = 0; j < fo.m.cols(); ++j)
                if (p.inv[i] > 0) fo.m.at(i, j) = mod_floor(fo.m.at(i, j), p.inv[i]);
        fi.validate();
        fo.validate();
        s.in.push_back(fi);
        s.out.push_back(fo);
        off += p.dim();
    }
    return s;
}

AbGroup HomGroup::group() const {
    AbGroup raw{factor_inv};
    return present(raw.dim(), raw.relation_columns()).grp;
}

AbMap HomGroup::element(const std::vector<Int>& coords) const {
    if (coords.size() != factor_inv.size()) throw std::invalid_argument("coordinate length");
    ZMat m(tgt.dim(), src.dim());
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) += coords[k] * gens[k].at(i, j);
    }
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (tgt.inv[i] > 0) m.at(i, j) = mod_floor(m.at(i, j), tgt.inv[i]);
    AbMap f{src, tgt, m};
    f.validate();
    return f;
}

HomGroup hom_group(const AbGroup& a, const AbGroup& b) {
    HomGroup h;
    h.src = a;
    h.tgt = b;
    for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < b.dim(); ++i) {
            const Int& ai = a.inv[j];
            const Int& bi = b.inv[i];
            Int factor, coeff;
            if (ai == 0) {
                factor = bi;  // Hom(Z, Z/b) = Z/b, Hom(Z, Z) = Z
                coeff = 1;
            } else if (bi == 0) {
                continue;  // Hom(Z/a, Z) = 0
            } else {
                Int g = gcd_int(ai, bi);
                if (g == 1) continue;
                factor = g;
                coeff = bi / g;
            }
            ZMat m(b.dim(), a.dim());
            m.at(i, j) = coeff;
            h.factor_inv.push_back(factor);
            h.gens.push_back(m);
        }
    return h;
}

}  // namespace tiltkit
