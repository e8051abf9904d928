#include "tiltkit/contramodule.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "tiltkit/rng.hpp"

namespace tiltkit {

namespace {

int index_of(const IndexSet& x, const std::string& key) {
    for (int i = 0; i < x.size(); ++i)
        if (x.name(i) == key) return i;
    throw std::invalid_argument("coefficient at an index outside X");
}

ZMat columns_matrix(int rows, const std::vector<std::vector<Int>>& cols) {
    ZMat m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    return m;
}

std::vector<Int> unit_vector(int dim, int at) {
    std::vector<Int> v(dim, 0);
    v[at] = 1;
    return v;
}

std::vector<Int> apply_matrix(const ZMat& m, const std::vector<Int>& x) {
    std::vector<Int> out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

std::string coord_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

bool residue_chain(const ProRingPtr& ring) {
    if (ring->kind() == ProRing::Kind::SAdic) return true;
    return ring->kind() == ProRing::Kind::Discrete && !ring->algebra();
}

}  // namespace

std::optional<std::vector<Int>> ab_preimage(const AbMap& f, const std::vector<Int>& y) {
    if (static_cast<int>(y.size()) != f.tgt.dim())
        throw std::invalid_argument("preimage target size mismatch");
    ZMat a = hcat(f.m, f.tgt.relation_columns());
    SmithResult s = smith_normal_form(a);
    int rows = a.rows(), cols = a.cols();
    std::vector<Int> w(rows, 0);
    for (int i = 0; i < rows; ++i) {
        Int acc = 0;
        for (int j = 0; j < rows; ++j) acc += s.u.at(i, j) * y[j];
        w[i] = acc;
    }
    std::vector<Int> q(cols, 0);
    for (int i = 0; i < rows; ++i) {
        Int d = i < cols ? s.d.at(i, i) : Int(0);
        if (d == 0) {
            if (w[i] != 0) return std::nullopt;
        } else {
            if (w[i] % d != 0) return std::nullopt;
            q[i] = w[i] / d;
        }
    }
    std::vector<Int> x(f.src.dim(), 0);
    for (int i = 0; i < f.src.dim(); ++i) {
        Int acc = 0;
        for (int j = 0; j < cols; ++j) acc += s.v.at(i, j) * q[j];
        x[i] = acc;
    }
    return f.src.reduce(std::move(x));
}

std::vector<Int> ContraLevel::raw_coords(const Snapshot& s) const {
    std::vector<Int> out(static_cast<size_t>(gens.size()) * ring_dim, 0);
    for (const auto& [key, val] : s) {
        int slot = index_of(gens, key);
        std::vector<Int> c = ring->group_coords(val, level);
        for (int i = 0; i < ring_dim; ++i) out[static_cast<size_t>(slot) * ring_dim + i] = c[i];
    }
    return out;
}

std::vector<Int> ContraLevel::coords(const Snapshot& s) const {
    std::vector<Int> raw = raw_coords(s);
    return pres.grp.reduce(apply_matrix(pres.to_coords, raw));
}

Snapshot ContraLevel::lift(const std::vector<Int>& c) const {
    std::vector<Int> raw = apply_matrix(pres.from_coords, c);
    Snapshot snap;
    for (int x = 0; x < gens.size(); ++x) {
        std::vector<Int> block(raw.begin() + static_cast<size_t>(x) * ring_dim,
                               raw.begin() + static_cast<size_t>(x + 1) * ring_dim);
        RingElem e = ring->from_group_coords(block, level);
        if (!ring->is_zero(e)) snap[gens.name(x)] = e;
    }
    return snap;
}

ZMat ContraLevel::action(const RingElem& r) const {
    int g = gens.size() * ring_dim;
    ZMat raw(g, g);
    for (int x = 0; x < gens.size(); ++x)
        for (int i = 0; i < ring_dim; ++i) {
            RingElem e = ring->from_group_coords(unit_vector(ring_dim, i), level);
            std::vector<Int> c = ring->group_coords(ring->mul(r, e, level), level);
            for (int k = 0; k < ring_dim; ++k)
                raw.at(x * ring_dim + k, x * ring_dim + i) = c[k];
        }
    return pres.to_coords * raw * pres.from_coords;
}

Contramodule Contramodule::free_on(ProRingPtr ring, std::vector<std::string> gens) {
    return presented(std::move(ring), std::move(gens), {});
}

Contramodule Contramodule::presented(ProRingPtr ring, std::vector<std::string> gens,
                                     std::vector<FreeContraElement> relations) {
    if (!ring) throw std::invalid_argument("null chain");
    Contramodule c;
    c.ring_ = std::move(ring);
    c.gens_ = IndexSet::finite(std::move(gens));
    for (const auto& rel : relations) {
        if (!same_ring(rel.ring(), c.ring_))
            throw std::invalid_argument("elements of different chains");
        if (!(rel.index_set() == c.gens_))
            throw std::invalid_argument("relation over a different index set");
    }
    c.rels_ = std::move(relations);
    return c;
}

ContraLevel Contramodule::level_module(int n) const {
    ContraLevel lvl;
    lvl.ring = ring_;
    lvl.gens = gens_;
    lvl.level = n;
    AbGroup rg = ring_->level_group(n);
    lvl.ring_dim = rg.dim();
    int g = gens_.size() * lvl.ring_dim;
    std::vector<std::vector<Int>> cols;
    ZMat ringrel = rg.relation_columns();
    for (int x = 0; x < gens_.size(); ++x)
        for (int j = 0; j < ringrel.cols(); ++j) {
            std::vector<Int> col(g, 0);
            for (int i = 0; i < lvl.ring_dim; ++i)
                col[static_cast<size_t>(x) * lvl.ring_dim + i] = ringrel.at(i, j);
            cols.push_back(std::move(col));
        }
    // The relation submodule is the ring span of the relation elements; over
    // each level ring that span is generated, as a group, by the products
    // with a group basis of R_n.
    for (const auto& rel : rels_) {
        Snapshot snap = rel.snapshot(n);
        if (snap.empty()) continue;
        for (int i = 0; i < lvl.ring_dim; ++i) {
            RingElem r = ring_->from_group_coords(unit_vector(lvl.ring_dim, i), n);
            Snapshot scaled;
            for (const auto& [key, val] : snap) {
                RingElem p = ring_->mul(r, val, n);
                if (!ring_->is_zero(p)) scaled[key] = p;
            }
            cols.push_back(lvl.raw_coords(scaled));
        }
    }
    lvl.pres = present(g, columns_matrix(g, cols));
    return lvl;
}

std::vector<Int> Contramodule::class_coords(const FreeContraElement& rep, int n) const {
    if (!same_ring(rep.ring(), ring_)) throw std::invalid_argument("elements of different chains");
    if (!(rep.index_set() == gens_))
        throw std::invalid_argument("element over a different index set");
    return level_module(n).coords(rep.snapshot(n));
}

bool Contramodule::in_level_kernel(const FreeContraElement& rep, int n) const {
    for (const Int& c : class_coords(rep, n))
        if (c != 0) return false;
    return true;
}

bool Contramodule::equal_classes(const FreeContraElement& a, const FreeContraElement& b,
                                 int precision) const {
    for (int n = 1; n <= precision; ++n) {
        ContraLevel lvl = level_module(n);
        if (lvl.coords(a.snapshot(n)) != lvl.coords(b.snapshot(n))) return false;
    }
    return true;
}

DiscreteModule discrete_module(ProRingPtr ring, AbGroup grp, int level, ModuleSide side) {
    if (!ring) throw std::invalid_argument("null chain");
    if (!residue_chain(ring))
        throw std::invalid_argument("discrete modules need a residue chain");
    if (!grp.is_finite()) throw std::invalid_argument("discrete modules must be finite");
    Int m = ring->modulus(level);
    if (m != 0 && !grp.inv.empty() && m % grp.inv.back() != 0)
        throw std::invalid_argument("module exponent does not divide the level modulus");
    return DiscreteModule{std::move(ring), side, level, std::move(grp)};
}

DiscreteModule push_level(const DiscreteModule& l, int level) {
    if (level < l.level)
        throw std::invalid_argument("cannot push a discrete module to a lower level");
    return discrete_module(l.ring, l.grp, level, l.side);
}

HomContraResult hom_contramodule(const DiscreteModule& l, const AbGroup& v) {
    if (l.side != ModuleSide::Right)
        throw std::invalid_argument("hom_contramodule needs a right discrete module");
    if (!v.is_finite()) throw std::invalid_argument("hom_contramodule needs finite inputs");
    HomGroup hg = hom_group(l.grp, v);
    std::vector<std::string> names;
    for (size_t i = 0; i < hg.factor_inv.size(); ++i) names.push_back("f" + std::to_string(i));
    IndexSet x = IndexSet::finite(names);
    std::vector<FreeContraElement> rels;
    for (size_t i = 0; i < hg.factor_inv.size(); ++i)
        rels.push_back(contra_combination(
            l.ring, x, std::vector<std::pair<std::string, Int>>{{names[i], hg.factor_inv[i]}}));
    return HomContraResult{Contramodule::presented(l.ring, names, std::move(rels)),
                           std::move(hg)};
}

ContratensorResult contratensor(const DiscreteModule& l, const Contramodule& c) {
    if (l.side != ModuleSide::Right)
        throw std::invalid_argument("contratensor needs a right discrete module");
    if (!same_ring(l.ring, c.ring()))
        throw std::invalid_argument("modules over different chains");
    int gx = c.generators().size();
    int ry = c.relation_count();
    AbSum power = direct_sum(std::vector<AbGroup>(gx, l.grp));
    AbSum source = direct_sum(std::vector<AbGroup>(ry, l.grp));
    ZMat m(power.total.dim(), source.total.dim());
    for (int j = 0; j < ry; ++j) {
        Snapshot snap = c.relation(j).snapshot(l.level);
        for (const auto& [key, val] : snap) {
            int slot = index_of(c.generators(), key);
            ZMat scale = ZMat::identity(l.grp.dim());
            for (int i = 0; i < l.grp.dim(); ++i) scale.at(i, i) = val.residue;
            m = m + power.in[slot].m * scale * source.out[j].m;
        }
    }
    AbMap f{source.total, power.total, std::move(m)};
    SubquotientPart ck = cokernel(f);
    return ContratensorResult{std::move(power), std::move(f), std::move(ck.map),
                              std::move(ck.grp)};
}

ContraHomGroup contra_hom(const Contramodule& c, const Contramodule& d, int precision) {
    if (!same_ring(c.ring(), d.ring()))
        throw std::invalid_argument("modules over different chains");
    Tower t = ct_tower(d, precision);
    int stab = d.ring()->discrete_topology() ? 1 : 0;
    for (int k = precision - 1; k >= 1; --k) {
        if (is_iso(t.down[k - 1]))
            stab = k;
        else
            break;
    }
    if (stab == 0)
        throw std::invalid_argument("hom target does not stabilize within the precision");
    ContraHomGroup out;
    out.level = stab;
    out.target = d.level_module(stab);
    const AbGroup& g = out.target.pres.grp;
    int gx = c.generators().size();
    int ry = c.relation_count();
    out.tuples = direct_sum(std::vector<AbGroup>(gx, g));
    AbSum image = direct_sum(std::vector<AbGroup>(ry, g));
    // A tuple of generator images extends to a morphism exactly when every
    // relation evaluates to zero in the target.
    ZMat m(image.total.dim(), out.tuples.total.dim());
    for (int j = 0; j < ry; ++j) {
        Snapshot snap = c.relation(j).snapshot(stab);
        for (const auto& [key, val] : snap) {
            int slot = index_of(c.generators(), key);
            m = m + image.in[j].m * out.target.action(val) * out.tuples.out[slot].m;
        }
    }
    AbMap phi{out.tuples.total, image.total, std::move(m)};
    out.ker = kernel(phi);
    out.grp = out.ker.grp;
    return out;
}

AdjunctionReport adjunction_check(const DiscreteModule& l, const Contramodule& c,
                                  const AbGroup& v, int precision) {
    if (!v.is_finite()) throw std::invalid_argument("hom_contramodule needs finite inputs");
    AdjunctionReport rep;
    ContratensorResult ten = contratensor(l, c);
    HomGroup lhs = hom_group(ten.grp, v);
    rep.lhs = lhs.group();
    HomContraResult hv = hom_contramodule(l, v);
    ContraHomGroup rhs = contra_hom(c, hv.contra, std::max(precision, l.level + 1));
    rep.rhs = rhs.grp;

    int kf = static_cast<int>(lhs.factor_inv.size());
    AbGroup lhs_raw{lhs.factor_inv};
    int gx = c.generators().size();
    // Target of the map-coordinate solve: one copy of v per matrix entry of a
    // map l.grp -> v, laid out row-major.
    std::vector<Int> entry_inv;
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < l.grp.dim(); ++j) entry_inv.push_back(v.inv[i]);
    AbGroup entries{entry_inv};
    int hf = static_cast<int>(hv.maps.factor_inv.size());
    ZMat hom_cols(entries.dim(), hf);
    for (int j = 0; j < hf; ++j)
        for (int i = 0; i < v.dim(); ++i)
            for (int k = 0; k < l.grp.dim(); ++k)
                hom_cols.at(i * l.grp.dim() + k, j) = hv.maps.gens[j].at(i, k);
    AbMap factor_map{AbGroup{hv.maps.factor_inv}, entries, std::move(hom_cols)};

    ZMat phi(rep.rhs.dim(), kf);
    for (int i = 0; i < kf; ++i) {
        AbMap psi = lhs.element(unit_vector(kf, i));
        std::vector<Int> tuple(rhs.tuples.total.dim(), 0);
        for (int x = 0; x < gx; ++x) {
            AbMap h = compose(psi, compose(ten.onto, ten.power.in[x]));
            std::vector<Int> flat;
            for (int r = 0; r < v.dim(); ++r)
                for (int s = 0; s < l.grp.dim(); ++s) flat.push_back(h.m.at(r, s));
            auto fc = ab_preimage(factor_map, flat);
            if (!fc) {
                rep.note = "generator image is not expressible in the hom factors";
                return rep;
            }
            // Factor coordinates describe the class sum fc_j * generator_j of
            // the hom contramodule; convert to canonical level coordinates.
            Snapshot snap;
            for (int j = 0; j < hf; ++j) {
                RingElem e = hv.contra.ring()->from_int((*fc)[j], rhs.level);
                if (!hv.contra.ring()->is_zero(e)) snap["f" + std::to_string(j)] = e;
            }
            std::vector<Int> cls = rhs.target.coords(snap);
            std::vector<Int> placed = apply_matrix(rhs.tuples.in[x].m, cls);
            for (int k = 0; k < rhs.tuples.total.dim(); ++k) tuple[k] += placed[k];
        }
        auto pre = ab_preimage(rhs.ker.map, rhs.tuples.total.reduce(tuple));
        if (!pre) {
            rep.note = "generator images violate the relations of the source";
            return rep;
        }
        for (int k = 0; k < rep.rhs.dim(); ++k) phi.at(k, i) = (*pre)[k];
    }
    AbMap canonical{lhs_raw, rep.rhs, std::move(phi)};
    canonical.validate();
    rep.iso = is_iso(canonical);
    if (!rep.iso) {
        SubquotientPart k = kernel(canonical);
        if (!k.grp.is_zero())
            rep.note = "kernel witness " + coord_str(k.map.apply(unit_vector(k.grp.dim(), 0)));
        else
            rep.note = "map is not surjective onto " + rep.rhs.str();
    }
    return rep;
}

void Tower::validate() const {
    if (levels.empty() ? !down.empty() : down.size() + 1 != levels.size())
        throw std::invalid_argument("incompatible tower");
    for (size_t k = 0; k < down.size(); ++k) {
        if (!(down[k].src == levels[k + 1]) || !(down[k].tgt == levels[k]))
            throw std::invalid_argument("incompatible tower");
        try {
            down[k].validate();
        } catch (const std::exception&) {
            throw std::invalid_argument("incompatible tower");
        }
    }
}

Tower ct_tower(const Contramodule& c, int precision) {
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    Tower t;
    std::vector<ContraLevel> lvls;
    for (int n = 1; n <= precision; ++n) {
        lvls.push_back(c.level_module(n));
        t.levels.push_back(lvls.back().pres.grp);
    }
    const ProRingPtr& ring = c.ring();
    for (int n = 1; n < precision; ++n) {
        const ContraLevel& hi = lvls[n];
        const ContraLevel& lo = lvls[n - 1];
        int ghi = hi.gens.size() * hi.ring_dim;
        int glo = lo.gens.size() * lo.ring_dim;
        ZMat raw(glo, ghi);
        for (int x = 0; x < hi.gens.size(); ++x)
            for (int i = 0; i < hi.ring_dim; ++i) {
                RingElem e = ring->from_group_coords(unit_vector(hi.ring_dim, i), n + 1);
                std::vector<Int> cc = ring->group_coords(ring->transition(e, n), n);
                for (int k = 0; k < lo.ring_dim; ++k)
                    raw.at(x * lo.ring_dim + k, x * hi.ring_dim + i) = cc[k];
            }
        AbMap q{hi.pres.grp, lo.pres.grp, lo.pres.to_coords * raw * hi.pres.from_coords};
        q.validate();
        t.down.push_back(std::move(q));
    }
    return t;
}

Tower pl_limit(const Tower& t) {
    t.validate();
    int p = static_cast<int>(t.levels.size());
    Tower out;
    if (p <= 1) return out;
    // Quotients of the top level by the kernels of the composites; these are
    // the images of the top level in each stage, with the restricted maps.
    std::vector<SubquotientPart> q(p - 1);
    AbMap acc = ab_identity(t.levels[p - 1]);
    for (int n = p - 1; n >= 1; --n) {
        acc = compose(t.down[n - 1], acc);
        q[n - 1] = cokernel(kernel(acc).map);
    }
    out.levels.resize(p - 1);
    for (int n = 1; n <= p - 1; ++n) out.levels[n - 1] = q[n - 1].grp;
    for (int n = 1; n <= p - 2; ++n) {
        ZMat m(out.levels[n - 1].dim(), out.levels[n].dim());
        for (int i = 0; i < out.levels[n].dim(); ++i) {
            auto w = ab_preimage(q[n].map, unit_vector(out.levels[n].dim(), i));
            if (!w) throw std::logic_error("pro-limit projection failed");
            std::vector<Int> col = q[n - 1].map.apply(*w);
            for (int k = 0; k < out.levels[n - 1].dim(); ++k) m.at(k, i) = col[k];
        }
        AbMap step{out.levels[n], out.levels[n - 1], std::move(m)};
        step.validate();
        out.down.push_back(std::move(step));
    }
    return out;
}

CompletionReport completion_map_check(const Contramodule& c, int precision) {
    CompletionReport rep;
    rep.tower = ct_tower(c, precision);
    rep.transitions_surjective = true;
    for (const AbMap& q : rep.tower.down)
        if (!cokernel(q).grp.is_zero()) rep.transitions_surjective = false;
    int stab = c.ring()->discrete_topology() ? 1 : 0;
    for (int k = precision - 1; k >= 1; --k) {
        if (is_iso(rep.tower.down[k - 1]))
            stab = k;
        else
            break;
    }
    rep.stabilizes_at = stab;
    rep.separated_up_to = precision;
    if (c.is_free()) {
        rep.complete_and_separated = true;
        rep.note = "free module over the chain: the completion map is an isomorphism at "
                   "every level";
    } else if (stab > 0) {
        rep.complete_and_separated = true;
        rep.note = "tower stabilizes at level " + std::to_string(stab);
    } else {
        rep.note = "tower still growing at the tested precision";
    }
    return rep;
}

Contramodule morita_transport(const Contramodule& c, int y) {
    ProRingPtr s = ProRing::matrix_ring(c.ring(), y);
    ProRingPtr base = c.ring();
    std::vector<std::string> names = c.generators().names();
    IndexSet xs = IndexSet::finite(names);
    std::vector<FreeContraElement> rels;
    for (int j = 0; j < c.relation_count(); ++j) {
        FreeContraElement r = c.relation(j);
        rels.push_back(FreeContraElement(s, xs, [base, r, y](int n) {
            Snapshot out;
            for (const auto& [key, val] : r.snapshot(n)) {
                RingElem m;
                m.entries.assign(static_cast<size_t>(y) * y, base->zero(n));
                m.entries[0] = val;
                out[key] = std::move(m);
            }
            return out;
        }));
    }
    if (y > 1) {
        // Tuples live in the corner: kill everything outside the first column.
        for (const std::string& name : names)
            rels.push_back(FreeContraElement(s, xs, [s, base, name](int n) {
                RingElem corner = s->one(n);
                corner.entries[0] = base->zero(n);
                Snapshot out;
                out[name] = std::move(corner);
                return out;
            }));
    }
    return Contramodule::presented(std::move(s), std::move(names), std::move(rels));
}

FreeContraElement morita_tuple(const Contramodule& transported,
                               const std::vector<FreeContraElement>& parts) {
    const ProRingPtr& s = transported.ring();
    if (s->kind() != ProRing::Kind::Matrix)
        throw std::invalid_argument("tuples need a matrix chain");
    int y = s->matrix_size();
    if (static_cast<int>(parts.size()) != y)
        throw std::invalid_argument("tuple size mismatch");
    ProRingPtr base = s->base();
    for (const auto& part : parts) {
        if (!same_ring(part.ring(), base))
            throw std::invalid_argument("elements of different chains");
        if (!(part.index_set() == transported.generators()))
            throw std::invalid_argument("element over a different index set");
    }
    return FreeContraElement(s, transported.generators(), [s, base, parts, y](int n) {
        Snapshot out;
        for (int i = 0; i < y; ++i)
            for (const auto& [key, val] : parts[i].snapshot(n)) {
                auto it = out.find(key);
                if (it == out.end()) {
                    RingElem z;
                    z.entries.assign(static_cast<size_t>(y) * y, base->zero(n));
                    it = out.emplace(key, std::move(z)).first;
                }
                it->second.entries[static_cast<size_t>(i) * y] = val;
            }
        return out;
    });
}

Contramodule random_contramodule(const ProRingPtr& ring, std::uint64_t seed) {
    CounterRng rng(seed, 0xC0A7);
    int gx = 1 + static_cast<int>(rng.below(3));
    std::vector<std::string> names;
    for (int i = 0; i < gx; ++i) names.push_back("g" + std::to_string(i));
    IndexSet xs = IndexSet::finite(names);
    int ry = static_cast<int>(rng.below(3));
    std::vector<FreeContraElement> rels;
    for (int j = 0; j < ry; ++j) rels.push_back(random_contra_element(ring, xs, rng.next(), 3));
    return Contramodule::presented(ring, std::move(names), std::move(rels));
}

std::string contramodule_axiom_fuzz(const ProRingPtr& ring, std::uint64_t seed, int trials,
                                    int precision) {
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, 0xAC710 + static_cast<std::uint64_t>(t));
        Contramodule c = random_contramodule(ring, rng.next());
        const IndexSet& xs = c.generators();
        FreeContraElement t1 = random_contra_element(ring, xs, rng.next(), 3);
        FreeContraElement t2 = random_contra_element(ring, xs, rng.next(), 3);
        ProElement r = random_pro_element(ring, rng.next());
        ProElement r1 = random_pro_element(ring, rng.next());
        ProElement r2 = random_pro_element(ring, rng.next());
        std::vector<OuterTerm> shift_terms;
        for (int j = 0; j < c.relation_count(); ++j)
            shift_terms.push_back({random_pro_element(ring, rng.next()), c.relation(j)});
        FreeContraElement shift =
            shift_terms.empty() ? contra_zero(ring, xs) : monad_mult(ring, xs, shift_terms);
        std::string tag = "trial " + std::to_string(t) + " over " + ring->describe();

        FreeContraElement unit = monad_mult(ring, xs, {{pro_int(ring, 1), t1}});
        if (!c.equal_classes(unit, t1, precision)) return tag + ": unit law failed";

        FreeContraElement shifted = monad_mult(ring, xs, {{r, contra_add(t1, shift)}});
        FreeContraElement plain = monad_mult(ring, xs, {{r, t1}});
        if (!c.equal_classes(shifted, plain, precision))
            return tag + ": action not constant across relation shifts";

        FreeContraElement both = monad_mult(ring, xs, {{r, contra_add(t1, t2)}});
        FreeContraElement split =
            contra_add(monad_mult(ring, xs, {{r, t1}}), monad_mult(ring, xs, {{r, t2}}));
        if (!c.equal_classes(both, split, precision)) return tag + ": additivity failed";

        FreeContraElement inner = monad_mult(ring, xs, {{r1, t1}, {r2, t2}});
        FreeContraElement nested = monad_mult(ring, xs, {{r, inner}});
        FreeContraElement merged =
            monad_mult(ring, xs, {{pro_mul(r, r1), t1}, {pro_mul(r, r2), t2}});
        if (!c.equal_classes(nested, merged, precision))
            return tag + ": associativity through the collapse failed";
    }
    return "";
}

}  // namespace tiltkit
