#include "tiltkit/quiver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace tiltkit {

namespace {

constexpr std::size_t kPathCountGuard = 200000;

int path_src(const QPath& p, const Quiver& q) {
    return p.arrows.empty() ? p.vertex : q.arrows[p.arrows[0]].src;
}
int path_tgt(const QPath& p, const Quiver& q) {
    return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.back()].tgt;
}
int path_len(const QPath& p) { return static_cast<int>(p.arrows.size()); }

// Left-to-right concatenation "first a, then b"; nullopt when not composable.
std::optional<QPath> concat(const QPath& a, const QPath& b, const Quiver& q) {
    if (path_tgt(a, q) != path_src(b, q)) return std::nullopt;
    QPath r;
    if (a.arrows.empty() && b.arrows.empty()) {
        r.vertex = a.vertex;
        return r;
    }
    r.arrows = a.arrows;
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
}

// The degree-truncated quotient data: all paths of length <= work_len, the
// row-reduced span of the relation ideal's products that fit, and which path
// coordinates that span eliminates.
struct Truncation {
    int work_len = 0;
    std::vector<QPath> paths;  // trivial first, then by (length, lex)
    std::map<std::vector<int>, int> by_arrows;
    std::vector<int> first_of_length;  // start index per length, plus sentinel
    std::vector<int> order, pos_of;    // elimination order: longest first
    SMat ideal;                        // row-reduced, columns in `order`
    std::vector<int> pivot_row;        // by position, -1 if not a pivot
    std::vector<bool> is_pivot;        // by position

    int id_of(const QPath& p) const {
        if (p.arrows.empty()) return p.vertex;
        auto it = by_arrows.find(p.arrows);
        return it == by_arrows.end() ? -1 : it->second;
    }
    bool eliminated(int id) const { return is_pivot[pos_of[id]]; }
};

Truncation truncate_ideal(const Quiver& q, const std::vector<Relation>& rels, FieldTag field,
                          int work_len) {
    Truncation t;
    t.work_len = work_len;
    t.first_of_length.push_back(0);
    for (int v = 0; v < q.vertices; ++v) {
        QPath p;
        p.vertex = v;
        t.paths.push_back(p);
    }
    int begin = 0, end = static_cast<int>(t.paths.size());
    for (int len = 1; len <= work_len; ++len) {
        t.first_of_length.push_back(end);
        for (int i = begin; i < end; ++i) {
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                if (path_tgt(t.paths[i], q) != q.arrows[a].src) continue;
                QPath ext = t.paths[i];
                ext.arrows.push_back(a);
                ext.vertex = -1;
                t.by_arrows[ext.arrows] = static_cast<int>(t.paths.size());
                t.paths.push_back(std::move(ext));
                if (t.paths.size() > kPathCountGuard)
                    throw std::invalid_argument(
                        "path enumeration exceeded the count guard; the algebra is not "
                        "finite-dimensional under the length cap");
            }
        }
        begin = end;
        end = static_cast<int>(t.paths.size());
    }
    t.first_of_length.push_back(end);

    int npaths = static_cast<int>(t.paths.size());
    t.order.resize(npaths);
    for (int i = 0; i < npaths; ++i) t.order[i] = i;
    // Longest paths first so the surviving coordinates are the shortest
    // representatives; lexicographic within a length for determinism.
    std::sort(t.order.begin(), t.order.end(), [&](int a, int b) {
        int la = path_len(t.paths[a]), lb = path_len(t.paths[b]);
        if (la != lb) return la > lb;
        if (la == 0) return t.paths[a].vertex < t.paths[b].vertex;
        return t.paths[a].arrows < t.paths[b].arrows;
    });
    t.pos_of.resize(npaths);
    for (int i = 0; i < npaths; ++i) t.pos_of[t.order[i]] = i;

    // Ideal rows: every product pre . relation . post that fits the window.
    std::vector<std::vector<Scalar>> gen_rows;
    for (const auto& r : rels) {
        int rs = q.arrows[r.front().arrows.front()].src;
        int rt = q.arrows[r.front().arrows.back()].tgt;
        int rlen = 0;
        for (const auto& term : r) rlen = std::max(rlen, path_len(QPath{term.arrows, -1}));
        for (const auto& pre : t.paths) {
            if (path_tgt(pre, q) != rs) continue;
            for (const auto& post : t.paths) {
                if (path_src(post, q) != rt) continue;
                if (path_len(pre) + rlen + path_len(post) > work_len) continue;
                std::vector<Scalar> row(npaths, Scalar::zero(field));
                for (const auto& term : r) {
                    QPath mid{term.arrows, -1};
                    auto left = concat(pre, mid, q);
                    auto full = left ? concat(*left, post, q) : std::nullopt;
                    if (!full) throw std::logic_error("relation term lost composability");
                    int id = t.id_of(*full);
                    if (id < 0) throw std::logic_error("relation product missing from the table");
                    row[t.pos_of[id]] += term.coeff;
                }
                gen_rows.push_back(std::move(row));
            }
        }
    }
    t.ideal = gen_rows.empty() ? SMat(0, npaths, field) : SMat::from_rows(gen_rows, field);
    std::vector<int> pivots = rref(t.ideal);
    t.is_pivot.assign(npaths, false);
    t.pivot_row.assign(npaths, -1);
    for (size_t r = 0; r < pivots.size(); ++r) {
        t.is_pivot[pivots[r]] = true;
        t.pivot_row[pivots[r]] = static_cast<int>(r);
    }
    return t;
}

// Every path of length exactly `len` reduces onto shorter paths.
bool spans_length(const Truncation& t, int len) {
    int lo = t.first_of_length[len];
    int hi = t.first_of_length[len + 1];
    for (int id = lo; id < hi; ++id)
        if (!t.eliminated(id)) return false;
    return true;
}

std::set<std::vector<int>> survivor_set(const Truncation& t) {
    std::set<std::vector<int>> s;
    for (size_t id = 0; id < t.paths.size(); ++id)
        if (!t.eliminated(static_cast<int>(id)) && !t.paths[id].arrows.empty())
            s.insert(t.paths[id].arrows);
    return s;
}

}  // namespace

int PathAlgebra::vertex_unit(int v) const {
    if (v < 0 || v >= quiver.vertices) throw std::invalid_argument("vertex out of range");
    return v;  // trivial paths head the basis in vertex order
}

int PathAlgebra::arrow_basis(int a) const { return arrow_to_basis.at(a); }

Coords PathAlgebra::path_coords(const std::vector<int>& arrows) const {
    if (arrows.empty()) throw std::invalid_argument("use vertex_unit for trivial paths");
    Coords c = arrow_coords.at(arrows[0]);
    for (size_t k = 1; k < arrows.size(); ++k) {
        int a = arrows[k];
        if (quiver.arrows.at(arrows[k - 1]).tgt != quiver.arrows.at(a).src)
            throw std::invalid_argument("path is not composable");
        c = alg->mul(arrow_coords.at(a), c);  // first c, then arrow a
    }
    return c;
}

PathAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, FieldTag field,
                               int length_cap) {
    if (q.vertices <= 0) throw std::invalid_argument("quiver needs at least one vertex");
    if (length_cap < 1 || length_cap > 64)
        throw std::invalid_argument("length cap must lie in [1, 64]");
    for (const auto& a : q.arrows)
        if (a.src < 0 || a.src >= q.vertices || a.tgt < 0 || a.tgt >= q.vertices)
            throw std::invalid_argument("arrow endpoint out of range");
    int maxrel = 1;
    for (const auto& r : rels) {
        if (r.empty()) throw std::invalid_argument("empty relation");
        int s = -1, t = -1;
        for (const auto& term : r) {
            if (term.arrows.empty())
                throw std::invalid_argument("relations must not contain trivial paths");
            for (size_t i = 0; i < term.arrows.size(); ++i) {
                int a = term.arrows[i];
                if (a < 0 || a >= static_cast<int>(q.arrows.size()))
                    throw std::invalid_argument("relation references an unknown arrow");
                if (i > 0 && q.arrows[term.arrows[i - 1]].tgt != q.arrows[a].src)
                    throw std::invalid_argument("relation term is not a composable path");
            }
            int ts = q.arrows[term.arrows.front()].src;
            int tt = q.arrows[term.arrows.back()].tgt;
            if (s == -1) {
                s = ts;
                t = tt;
            }
            if (ts != s || tt != t)
                throw std::invalid_argument("relation terms are not parallel paths");
            if (!(term.coeff.field() == field))
                throw std::invalid_argument("relation coefficient field mismatch");
            maxrel = std::max(maxrel, static_cast<int>(term.arrows.size()));
        }
    }

    for (int bound = 1; bound <= length_cap; ++bound) {
        Truncation probe = truncate_ideal(q, rels, field, std::min(2 * bound, length_cap));
        if (!spans_length(probe, bound)) continue;
        if (2 * (bound - 1) > probe.work_len)
            throw std::invalid_argument("length cap too small to close multiplication");

        // Recompute in a wider window: with non-monomial relations, longer
        // products can eliminate paths the narrow window kept. A stable
        // survivor set across the widening is required; completing unstable
        // relation systems is out of scope.
        Truncation t = probe;
        int wide = std::min(2 * bound + maxrel, length_cap);
        if (wide > probe.work_len) {
            t = truncate_ideal(q, rels, field, wide);
            if (!spans_length(t, bound) || survivor_set(t) != survivor_set(probe))
                throw std::invalid_argument(
                    "relation span is unstable under window widening; the relations need "
                    "completion the builder does not perform");
        }

        int npaths = static_cast<int>(t.paths.size());
        std::vector<int> basis_ids;
        for (int id = 0; id < npaths; ++id)
            if (!t.eliminated(id)) basis_ids.push_back(id);
        std::sort(basis_ids.begin(), basis_ids.end(), [&](int a, int b) {
            int la = path_len(t.paths[a]), lb = path_len(t.paths[b]);
            if (la != lb) return la < lb;
            if (la == 0) return t.paths[a].vertex < t.paths[b].vertex;
            return t.paths[a].arrows < t.paths[b].arrows;
        });
        for (int id : basis_ids)
            if (path_len(t.paths[id]) >= bound)
                throw std::invalid_argument(
                    "relation span is unstable under window widening; the relations need "
                    "completion the builder does not perform");

        int dim = static_cast<int>(basis_ids.size());
        std::vector<int> basis_pos(npaths, -1);
        for (int k = 0; k < dim; ++k) basis_pos[basis_ids[k]] = k;

        // Reduction of any enumerated path onto the surviving basis.
        auto reduce_id = [&](int id) {
            Coords c(dim, Scalar::zero(field));
            int p = t.pos_of[id];
            if (!t.is_pivot[p]) {
                c[basis_pos[id]] = Scalar::one(field);
                return c;
            }
            int row = t.pivot_row[p];
            for (int j = 0; j < npaths; ++j) {
                if (j == p || t.ideal.at(row, j).is_zero()) continue;
                int bp = basis_pos[t.order[j]];
                if (bp < 0) throw std::logic_error("reduction hit a non-basis pivot");
                c[bp] -= t.ideal.at(row, j);
            }
            return c;
        };

        Algebra::Spec spec;
        spec.field = field;
        spec.unit = Coords(dim, Scalar::zero(field));
        spec.mult.assign(dim, std::vector<Coords>(dim));
        std::vector<int> rad_cols;
        for (int i = 0; i < dim; ++i) {
            const QPath& pi = t.paths[basis_ids[i]];
            if (path_len(pi) == 0) {
                spec.idempotents.push_back(Coords(dim, Scalar::zero(field)));
                spec.idempotents.back()[i] = Scalar::one(field);
                spec.unit[i] = Scalar::one(field);
                spec.names.push_back("e" + std::to_string(pi.vertex + 1));
            } else {
                rad_cols.push_back(i);
                std::string nm;
                for (size_t k = 0; k < pi.arrows.size(); ++k)
                    nm += (k ? "*" : "") + q.arrows[pi.arrows[k]].name;
                spec.names.push_back(nm);
            }
        }
        SMat rad(dim, static_cast<int>(rad_cols.size()), field);
        for (size_t j = 0; j < rad_cols.size(); ++j)
            rad.at(rad_cols[j], static_cast<int>(j)) = Scalar::one(field);
        spec.radical_span = rad;

        // b_i * b_j acts as "first b_j, then b_i" on covariant representations.
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                auto prod = concat(t.paths[basis_ids[j]], t.paths[basis_ids[i]], q);
                if (!prod) {
                    spec.mult[i][j] = Coords(dim, Scalar::zero(field));
                    continue;
                }
                int id = t.id_of(*prod);
                if (id < 0) throw std::logic_error("product path missing from the table");
                spec.mult[i][j] = reduce_id(id);
            }

        PathAlgebra out;
        out.quiver = q;
        out.field = field;
        for (int id : basis_ids) {
            out.basis_paths.push_back(t.paths[id]);
            out.basis_src.push_back(path_src(t.paths[id], q));
            out.basis_tgt.push_back(path_tgt(t.paths[id], q));
        }
        out.arrow_to_basis.assign(q.arrows.size(), -1);
        for (int k = 0; k < dim; ++k)
            if (path_len(out.basis_paths[k]) == 1)
                out.arrow_to_basis[out.basis_paths[k].arrows[0]] = k;
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
            QPath single;
            single.arrows = {a};
            out.arrow_coords.push_back(reduce_id(t.id_of(single)));
        }
        out.relations = rels;
        out.alg = Algebra::create(std::move(spec));
        return out;
    }
    throw std::invalid_argument("basis enumeration did not terminate under the length cap");
}

}  // namespace tiltkit
