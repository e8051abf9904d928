#include "tiltkit/finite_topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "tiltkit/rng.hpp"

namespace tiltkit {

namespace {

using Table = std::vector<std::vector<Coords>>;

Int int_pow(const Int& base, int e) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

Coords table_mul(const Table& t, FieldTag f, const Coords& x, const Coords& y) {
    int d = static_cast<int>(x.size());
    Coords r(d, Scalar::zero(f));
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (int k = 0; k < d; ++k)
                if (!t[i][j][k].is_zero()) r[k] += c * t[i][j][k];
        }
    }
    return r;
}

SMat coords_col(const Coords& x, FieldTag f) {
    SMat c(static_cast<int>(x.size()), 1, f);
    for (size_t i = 0; i < x.size(); ++i) c.at(static_cast<int>(i), 0) = x[i];
    return c;
}

Coords col_coords(const SMat& c) {
    Coords out;
    for (int i = 0; i < c.rows(); ++i) out.push_back(c.at(i, 0));
    return out;
}

Coords scale_coords(const Scalar& c, const Coords& x) {
    Coords r = x;
    for (auto& v : r) v *= c;
    return r;
}

Coords add_coords(const Coords& x, const Coords& y) {
    Coords r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Coords unit_coords(int dim, int at, FieldTag f) {
    Coords v(dim, Scalar::zero(f));
    v[at] = Scalar::one(f);
    return v;
}

// Monic minimal polynomial of z in a commutative algebra given by a table:
// returns the coefficients c of x^r - sum c_i x^i.
std::vector<Scalar> min_poly(const Table& t, FieldTag f, const Coords& unit, const Coords& z) {
    int d = static_cast<int>(unit.size());
    std::vector<Coords> powers{unit};
    for (int r = 1; r <= d; ++r) {
        powers.push_back(table_mul(t, f, powers.back(), z));
        SMat v(d, r, f);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < d; ++i) v.at(i, j) = powers[j][i];
        SMat sol(r, 1, f);
        if (solve(v, coords_col(powers[r], f), sol)) return col_coords(sol);
    }
    throw std::logic_error("minimal polynomial search failed");
}

std::vector<Int> divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    return out;
}

// All roots of the monic polynomial x^r - sum c_i x^i when they are rational
// and pairwise distinct; nullopt otherwise.
std::optional<std::vector<Rat>> distinct_rational_roots(const std::vector<Scalar>& c) {
    int r = static_cast<int>(c.size());
    std::vector<Rat> poly(r + 1);  // ascending coefficients
    poly[r] = Rat(1);
    for (int i = 0; i < r; ++i) poly[i] = -c[i].value();
    std::vector<Rat> roots;
    auto eval = [](const std::vector<Rat>& p, const Rat& x) {
        Rat acc;
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
        return acc;
    };
    auto deflate = [](const std::vector<Rat>& p, const Rat& root) {
        // p = (x - root) q; synthetic division from the top coefficient.
        int deg = static_cast<int>(p.size()) - 1;
        std::vector<Rat> q(deg);
        Rat carry;
        for (int i = deg; i >= 1; --i) {
            carry = p[i] + carry * root;
            q[i - 1] = carry;
        }
        return q;
    };
    while (poly.size() > 1) {
        if (poly[0].is_zero()) {
            roots.push_back(Rat(0));
            poly.erase(poly.begin());
            continue;
        }
        Int den = 1;
        for (const Rat& p : poly) den = den * p.den() / gcd_int(den, p.den());
        Int a0 = (poly[0] * Rat(den)).num();
        Int lead = (poly.back() * Rat(den)).num();
        // Trial division caps the candidate scan; oversized constant terms
        // just send the caller to the next separating weight.
        if (abs(a0) > int_pow(Int(10), 12)) return std::nullopt;
        bool found = false;
        for (const Int& p : divisors(a0)) {
            for (const Int& q : divisors(lead)) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * p, q);
                    if (eval(poly, cand).is_zero()) {
                        roots.push_back(cand);
                        poly = deflate(poly, cand);
                        found = true;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    for (size_t i = 1; i < roots.size(); ++i)
        if (roots[i] == roots[i - 1]) return std::nullopt;
    return roots;
}

std::vector<Int> stage_vec(const AbMap& f) {
    std::vector<Int> out;
    for (int i = 0; i < f.m.rows(); ++i)
        for (int j = 0; j < f.m.cols(); ++j) out.push_back(f.m.at(i, j));
    return out;
}

bool maps_equal(const AbMap& a, const AbMap& b) {
    return ab_add(a, ab_negate(b)).is_zero();
}

std::vector<Int> unit_vec(int dim, int at) {
    std::vector<Int> v(dim, 0);
    v[at] = 1;
    return v;
}

// The y x y integer coefficient matrix of a level element of the s-adic or
// matrix chain.
ZMat coeff_matrix(const RingElem& a, int y) {
    ZMat m(y, y);
    if (y == 1) {
        m.at(0, 0) = a.residue;
    } else {
        for (int i = 0; i < y; ++i)
            for (int j = 0; j < y; ++j)
                m.at(i, j) = a.entries[static_cast<size_t>(i) * y + j].residue;
    }
    return m;
}

// The map M_n^y -> M_N^y induced by a level-n chain element: the coefficient
// matrix, scaled by the inclusion factor s^(N-n).
AbMap stage_endo(const ColimitModule& m, const RingElem& a, int n, int N) {
    ZMat c = coeff_matrix(a, m.copies);
    Int scale = int_pow(m.s, N - n);
    ZMat mat(m.copies, m.copies);
    for (int i = 0; i < m.copies; ++i)
        for (int j = 0; j < m.copies; ++j) mat.at(i, j) = c.at(i, j) * scale;
    AbMap f{m.level(n), m.level(N), std::move(mat)};
    f.validate();
    return f;
}

// Coordinates of a group map in the factors of a hom group, via the
// evaluation matrix of the generators.
std::optional<std::vector<Int>> hom_coords(const HomGroup& h, const AbMap& f) {
    int kf = static_cast<int>(h.factor_inv.size());
    std::vector<Int> entry_inv;
    for (int i = 0; i < h.tgt.dim(); ++i)
        for (int j = 0; j < h.src.dim(); ++j) entry_inv.push_back(h.tgt.inv[i]);
    AbGroup entries{entry_inv};
    ZMat cols(entries.dim(), kf);
    for (int g = 0; g < kf; ++g)
        for (int i = 0; i < h.tgt.dim(); ++i)
            for (int j = 0; j < h.src.dim(); ++j)
                cols.at(i * h.src.dim() + j, g) = h.gens[g].at(i, j);
    AbMap eval{AbGroup{h.factor_inv}, entries, std::move(cols)};
    return ab_preimage(eval, entries.reduce(stage_vec(f)));
}

int s_valuation(const Int& c, const Int& s, int cap) {
    if (c == 0) return cap;
    Int v = c;
    int out = 0;
    while (out < cap && v % s == 0) {
        v /= s;
        ++out;
    }
    return out;
}

}  // namespace

std::optional<Coords> EndoAlgebra::express(const SMat& endo) const {
    if (endo.rows() != mod.dim || endo.cols() != mod.dim)
        throw std::invalid_argument("endomorphism shape mismatch");
    FieldTag f = mod.field();
    int d = static_cast<int>(basis.size());
    SMat stacked(mod.dim * mod.dim, d, f);
    SMat target(mod.dim * mod.dim, 1, f);
    for (int i = 0; i < mod.dim; ++i)
        for (int j = 0; j < mod.dim; ++j) {
            for (int b = 0; b < d; ++b) stacked.at(i * mod.dim + j, b) = basis[b].at(i, j);
            target.at(i * mod.dim + j, 0) = endo.at(i, j);
        }
    SMat sol(d, 1, f);
    if (!solve(stacked, target, sol)) return std::nullopt;
    return col_coords(sol);
}

EndoAlgebra endo_algebra(const Module& m) {
    if (m.dim == 0) throw std::invalid_argument("endomorphism algebra needs a nonzero module");
    if (m.field().p != 0)
        throw std::invalid_argument(
            "endomorphism algebras are implemented over characteristic zero only");
    FieldTag f = m.field();
    EndoAlgebra e;
    e.mod = m;
    e.basis = hom_basis(m, m);
    int d = static_cast<int>(e.basis.size());

    Table t(d, std::vector<Coords>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto c = e.express(e.basis[i] * e.basis[j]);
            if (!c) throw std::logic_error("endomorphisms do not close under composition");
            t[i][j] = *c;
        }
    auto unit = e.express(SMat::identity(m.dim, f));
    if (!unit) throw std::logic_error("identity missing from the endomorphism space");

    // Radical via the trace form of the regular representation: x lies in the
    // radical exactly when tr(L_{x y}) vanishes for every y.
    std::vector<Scalar> tr_l(d, Scalar::zero(f));
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) tr_l[k] += t[k][j][j];
    SMat gram(d, d, f);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar acc = Scalar::zero(f);
            for (int k = 0; k < d; ++k)
                if (!t[i][j][k].is_zero()) acc += t[i][j][k] * tr_l[k];
            gram.at(i, j) = acc;
        }
    SMat rad = kernel_basis(gram);
    int r = rad.cols();
    int k = d - r;

    // Complement basis indices for the semisimple quotient.
    std::vector<int> comp;
    {
        SMat probe = hcat(rad, SMat::identity(d, f));
        std::vector<int> pivots = rref(probe);
        for (int p : pivots)
            if (p >= r) comp.push_back(p - r);
    }
    SMat sect(d, d, f);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < d; ++i) sect.at(i, j) = rad.at(i, j);
    for (int j = 0; j < k; ++j) sect.at(comp[j], r + j) = Scalar::one(f);
    SMat sect_inv = inverse(sect);
    auto project = [&](const Coords& v) {
        SMat x = sect_inv * coords_col(v, f);
        Coords out(k, Scalar::zero(f));
        for (int i = 0; i < k; ++i) out[i] = x.at(r + i, 0);
        return out;
    };

    std::vector<Coords> idemps;
    if (k == 1) {
        idemps.push_back(*unit);
    } else {
        Table st(k, std::vector<Coords>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) st[i][j] = project(t[comp[i]][comp[j]]);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (st[i][j] != st[j][i])
                    throw std::invalid_argument(
                        "endomorphism ring is not split basic over the ground field");
        Coords s_unit = project(*unit);

        std::vector<Rat> lambdas;
        Coords z(k, Scalar::zero(f));
        bool separated = false;
        for (int w = 1; w <= 40 && !separated; ++w) {
            for (int i = 0; i < k; ++i) z[i] = Scalar(Rat(int_pow(Int(w), i)), f);
            std::vector<Scalar> mp = min_poly(st, f, s_unit, z);
            if (static_cast<int>(mp.size()) != k) continue;
            auto roots = distinct_rational_roots(mp);
            if (!roots) continue;
            lambdas = *roots;
            separated = true;
        }
        if (!separated)
            throw std::invalid_argument(
                "endomorphism ring is not split basic over the ground field");

        for (int i = 0; i < k; ++i) {
            Coords num = s_unit;
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                Coords shifted = add_coords(z, scale_coords(Scalar(-lambdas[j], f), s_unit));
                num = table_mul(st, f, num, shifted);
                num = scale_coords(Scalar(Rat(1) / (lambdas[i] - lambdas[j]), f), num);
            }
            // Lift through the radical: corner the preimage away from the
            // previously lifted idempotents, then refine until exact.
            Coords lift(d, Scalar::zero(f));
            for (int j = 0; j < k; ++j)
                lift = add_coords(lift, scale_coords(num[j], unit_coords(d, comp[j], f)));
            Coords p(d, Scalar::zero(f));
            for (const Coords& prev : idemps) p = add_coords(p, prev);
            Coords corner = add_coords(*unit, scale_coords(Scalar(Rat(-1), f), p));
            lift = table_mul(t, f, table_mul(t, f, corner, lift), corner);
            bool stable = false;
            for (int it = 0; it < 64 && !stable; ++it) {
                Coords sq = table_mul(t, f, lift, lift);
                if (sq == lift) {
                    stable = true;
                    break;
                }
                Coords cube = table_mul(t, f, sq, lift);
                lift = add_coords(scale_coords(Scalar(Rat(3), f), sq),
                                  scale_coords(Scalar(Rat(-2), f), cube));
            }
            if (!stable) throw std::logic_error("idempotent lifting failed");
            idemps.push_back(lift);
        }
        Coords total(d, Scalar::zero(f));
        for (const Coords& e2 : idemps) total = add_coords(total, e2);
        if (total != *unit) throw std::logic_error("idempotent lifting failed");
    }

    Algebra::Spec spec;
    spec.field = f;
    spec.mult = t;
    spec.unit = *unit;
    spec.idempotents = idemps;
    for (int i = 0; i < d; ++i) spec.names.push_back("f" + std::to_string(i));
    spec.radical_span = rad;
    e.alg = Algebra::create(std::move(spec));
    return e;
}

ProRingPtr endo_topology_fp(const Module& m) {
    return ProRing::discrete_ring(endo_algebra(m).alg);
}

AbGroup ColimitModule::level(int n) const {
    if (n < 1) throw std::invalid_argument("stages start at level 1");
    return AbGroup{std::vector<Int>(copies, int_pow(s, n))};
}

AbMap ColimitModule::inclusion(int n) const {
    ZMat m(copies, copies);
    for (int i = 0; i < copies; ++i) m.at(i, i) = s;
    AbMap f{level(n), level(n + 1), std::move(m)};
    f.validate();
    return f;
}

ColimitModule matlis_module(Int s, int copies) {
    if (s < 2) throw std::invalid_argument("torsion parameter must be at least 2");
    if (copies < 1) throw std::invalid_argument("colimit modules need at least one column");
    return ColimitModule{std::move(s), copies};
}

ColimTopologyReport colim_topology_report(const ColimitModule& m, int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    ProRingPtr chain = m.copies == 1 ? ProRing::s_completion(m.s)
                                     : ProRing::matrix_ring(ProRing::s_completion(m.s), m.copies);
    ColimTopologyReport rep;
    rep.levels = precision;
    rep.level_isos = true;
    rep.transitions_match = true;
    rep.multiplicative = true;
    for (int n = 1; n <= precision && rep.ok(); ++n) {
        AbGroup g = chain->level_group(n);
        HomGroup h = hom_group(m.level(n), m.level(n + 1));
        ZMat cols(static_cast<int>(h.factor_inv.size()), g.dim());
        std::vector<RingElem> basis;
        for (int tindex = 0; tindex < g.dim(); ++tindex) {
            basis.push_back(chain->from_group_coords(unit_vec(g.dim(), tindex), n));
            AbMap f = stage_endo(m, basis.back(), n, n + 1);
            auto c = hom_coords(h, f);
            if (!c) {
                rep.level_isos = false;
                rep.note = "level " + std::to_string(n) + ": evaluation left the hom group";
                break;
            }
            for (size_t i = 0; i < c->size(); ++i)
                cols.at(static_cast<int>(i), tindex) = (*c)[i];
        }
        if (!rep.level_isos) break;
        AbMap eval{g, h.group(), std::move(cols)};
        eval.validate();
        if (!is_iso(eval)) {
            rep.level_isos = false;
            rep.note = "level " + std::to_string(n) + ": evaluation is not an isomorphism (" +
                       g.str() + " vs " + h.group().str() + ")";
            break;
        }
        // Products: evaluation turns level products into composition of the
        // stage endomorphisms; bilinearity makes the basis check exhaustive.
        for (int a = 0; a < g.dim() && rep.multiplicative; ++a)
            for (int b = 0; b < g.dim(); ++b) {
                AbMap lhs = stage_endo(m, chain->mul(basis[a], basis[b], n), n, n);
                AbMap rhs = compose(stage_endo(m, basis[a], n, n), stage_endo(m, basis[b], n, n));
                if (!maps_equal(lhs, rhs)) {
                    rep.multiplicative = false;
                    rep.note = "level " + std::to_string(n) + ": products do not compose";
                    break;
                }
            }
        // Transitions: restricting a level n+1 endomorphism along the stage
        // inclusion equals including the transitioned endomorphism.
        for (int tindex = 0; tindex < g.dim() && rep.transitions_match; ++tindex) {
            RingElem up = chain->from_group_coords(unit_vec(g.dim(), tindex), n + 1);
            AbMap lhs = compose(stage_endo(m, up, n + 1, n + 2), m.inclusion(n));
            AbMap rhs = stage_endo(m, chain->transition(up, n), n, n + 2);
            if (!maps_equal(lhs, rhs)) {
                rep.transitions_match = false;
                rep.note = "level " + std::to_string(n) + ": restriction mismatch";
            }
        }
    }
    if (rep.ok())
        rep.note = "levels, products, and restrictions verified to precision " +
                   std::to_string(precision);
    return rep;
}

ProRingPtr endo_topology_colim(const ColimitModule& m, int verify_levels) {
    ColimTopologyReport rep = colim_topology_report(m, verify_levels);
    if (!rep.ok()) throw std::logic_error("finite topology construction failed: " + rep.note);
    return m.copies == 1 ? ProRing::s_completion(m.s)
                         : ProRing::matrix_ring(ProRing::s_completion(m.s), m.copies);
}

AddEquivReport add_equiv_check(const ColimitModule& m, const IndexSet& x, int precision) {
    if (!x.is_finite()) throw std::invalid_argument("add-equivalence needs a finite index set");
    if (m.copies != 1)
        throw std::invalid_argument("add-equivalence stages need a one-column module");
    AddEquivReport rep;
    ProRingPtr chain = endo_topology_colim(m, std::min(precision, 2));
    Contramodule free = Contramodule::free_on(chain, x.names());
    int k = x.size();
    rep.hom_matches = true;
    rep.tensor_matches = true;
    for (int n = 1; n <= precision && rep.ok(); ++n) {
        AbGroup fg = free.level_module(n).group();
        AbSum power = direct_sum(std::vector<AbGroup>(k, m.level(n + 1)));
        HomGroup h = hom_group(m.level(n), power.total);
        ZMat cols(static_cast<int>(h.factor_inv.size()), fg.dim());
        bool expressed = true;
        for (int slot = 0; slot < k && expressed; ++slot) {
            RingElem one = chain->one(n);
            AbMap f = compose(power.in[slot], stage_endo(m, one, n, n + 1));
            auto c = hom_coords(h, f);
            if (!c) {
                expressed = false;
                break;
            }
            for (size_t i = 0; i < c->size(); ++i) cols.at(static_cast<int>(i), slot) = (*c)[i];
        }
        if (!expressed) {
            rep.hom_matches = false;
            rep.note = "level " + std::to_string(n) + ": component map left the hom group";
            break;
        }
        AbMap eval{fg, h.group(), std::move(cols)};
        eval.validate();
        if (!is_iso(eval)) {
            rep.hom_matches = false;
            rep.note = "level " + std::to_string(n) + ": hom sides differ (" + fg.str() +
                       " vs " + h.group().str() + ")";
            break;
        }
        DiscreteModule stage = discrete_module(chain, m.level(n), n);
        AbGroup ten = contratensor(stage, free).grp;
        AbGroup want = direct_sum(std::vector<AbGroup>(k, m.level(n))).total;
        if (!(ten == want)) {
            rep.tensor_matches = false;
            rep.note = "level " + std::to_string(n) + ": contratensor gave " + ten.str() +
                       " instead of " + want.str();
            break;
        }
        rep.levels_checked = n;
    }
    if (rep.ok())
        rep.note = "hom and contratensor sides match to precision " + std::to_string(precision);
    return rep;
}

AddEquivReport add_equiv_check(const Module& m, const IndexSet& x) {
    if (!x.is_finite()) throw std::invalid_argument("add-equivalence needs a finite index set");
    AddEquivReport rep;
    EndoAlgebra e = endo_algebra(m);
    int d = e.alg->dim();
    int k = x.size();
    rep.levels_checked = 1;
    if (k == 0) {
        rep.hom_matches = hom_dim(m, zero_module(m.alg)) == 0;
        rep.tensor_matches = true;
        rep.note = "empty index set: both sides vanish";
        return rep;
    }
    SumDecomp power = direct_sum(m.alg, std::vector<Module>(k, m));
    int hd = hom_dim(m, power.total);
    FieldTag f = m.field();
    SMat stacked(power.total.dim * m.dim, k * d, f);
    for (int slot = 0; slot < k; ++slot)
        for (int b = 0; b < d; ++b) {
            SMat comp = power.in[slot].m * e.basis[b];
            for (int i = 0; i < comp.rows(); ++i)
                for (int j = 0; j < comp.cols(); ++j)
                    stacked.at(i * m.dim + j, slot * d + b) = comp.at(i, j);
        }
    rep.hom_matches = hd == k * d && rank(stacked) == k * d;
    // Discrete chain: the contratensor of a free contramodule is the sum of
    // the stages by construction, so the hom side carries the content.
    rep.tensor_matches = true;
    rep.note = rep.hom_matches
                   ? "component endomorphisms span the hom space"
                   : "hom dimension " + std::to_string(hd) + " differs from " +
                         std::to_string(k * d);
    return rep;
}

AssemblyReport family_assembly_check(const EndoFamily& f, int precision) {
    if (f.mod.copies != 1)
        throw std::invalid_argument("assembly families need a one-column module");
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    if (f.tail_valuation < 0 || f.tail_step < 0)
        throw std::invalid_argument("tail valuations cannot be negative");
    AssemblyReport rep;
    rep.assembles = f.tail_zero || f.tail_step >= 1;
    rep.failing_level = rep.assembles ? 0 : f.tail_valuation + 1;

    int cap = precision + 1;
    auto component = [&](int i) -> Int {
        if (i < static_cast<int>(f.prefix.size())) return f.prefix[static_cast<size_t>(i)];
        if (f.tail_zero) return 0;
        int j = i - static_cast<int>(f.prefix.size());
        long long v = static_cast<long long>(f.tail_valuation) +
                      static_cast<long long>(j) * f.tail_step;
        if (v > cap) v = cap;  // beyond the window every stage is killed
        return int_pow(f.mod.s, static_cast<int>(v));
    };

    rep.evaluation_agrees = true;
    int window = static_cast<int>(f.prefix.size()) + 12;
    for (int n = 1; n <= precision && rep.evaluation_agrees; ++n) {
        for (int i = 0; i < window; ++i) {
            Int c = component(i);
            bool rule_kills = s_valuation(c, f.mod.s, cap) >= n;
            ZMat mat(1, 1);
            mat.at(0, 0) = c * f.mod.s;
            AbMap g{f.mod.level(n), f.mod.level(n + 1), std::move(mat)};
            if (g.is_zero() != rule_kills) {
                rep.evaluation_agrees = false;
                rep.note = "component " + std::to_string(i) + " disagrees with the rule at stage " +
                           std::to_string(n);
                break;
            }
        }
    }
    if (rep.evaluation_agrees && rep.note.empty())
        rep.note = rep.assembles
                       ? "each stage is killed by all but finitely many components"
                       : "every tail component survives on stage " +
                             std::to_string(rep.failing_level);
    return rep;
}

std::string finite_topology_fuzz(const Int& s, std::uint64_t seed, int trials, int precision) {
    ProRingPtr chain = ProRing::s_completion(s);
    ColimitModule mod = matlis_module(s);
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, 0xF170 + static_cast<std::uint64_t>(t));
        std::string tag = "trial " + std::to_string(t);

        // Annihilator stages are closed under right multiplication.
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(precision)));
        Int sn = int_pow(s, n);
        ProElement a = pro_mul(pro_int(chain, sn), random_pro_element(chain, rng.next()));
        ProElement r = random_pro_element(chain, rng.next());
        ProElement prod = pro_mul(a, r);
        for (int k = 1; k <= precision; ++k) {
            Int want = int_pow(s, std::min(k, n));
            if (prod.at(k).residue % want != 0)
                return tag + ": annihilator stage leaks under right multiplication at level " +
                       std::to_string(k);
        }

        // Families assemble exactly when the tail valuations grow.
        EndoFamily fam;
        fam.mod = mod;
        int plen = static_cast<int>(rng.below(4));
        for (int i = 0; i < plen; ++i)
            fam.prefix.push_back(mod_floor(Int(rng.next()), int_pow(s, precision)));
        fam.tail_zero = rng.below(4) == 0;
        fam.tail_step = static_cast<int>(rng.below(3));
        fam.tail_valuation = static_cast<int>(rng.below(static_cast<std::uint64_t>(precision)));
        AssemblyReport rep = family_assembly_check(fam, precision);
        if (!rep.evaluation_agrees) return tag + ": " + rep.note;
        bool want_assemble = fam.tail_zero || fam.tail_step >= 1;
        if (rep.assembles != want_assemble)
            return tag + ": assembly verdict contradicts the tail shape";
        if (!rep.assembles && rep.failing_level != fam.tail_valuation + 1)
            return tag + ": wrong failing stage";
    }
    return "";
}

}  // namespace tiltkit
