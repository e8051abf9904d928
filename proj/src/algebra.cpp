#include "tiltkit/algebra.hpp"

namespace tiltkit {

struct Algebra::Pair {
    Algebra items[2];
};

namespace {

SMat coords_as_column(const Coords& x, FieldTag f) {
    SMat c(static_cast<int>(x.size()), 1, f);
    for (size_t i = 0; i < x.size(); ++i) c.at(static_cast<int>(i), 0) = x[i];
    return c;
}

}  // namespace

Coords Algebra::mul(const Coords& x, const Coords& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("coordinate length");
    Coords r = zero_coords();
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Coords& m = mult_[i][j];
            for (int k = 0; k < dim_; ++k)
                if (!m[k].is_zero()) r[k] += c * m[k];
        }
    }
    return r;
}

SMat Algebra::left_mult(const Coords& x) const {
    SMat m(dim_, dim_, field_);
    for (int j = 0; j < dim_; ++j) {
        Coords e = zero_coords();
        e[j] = Scalar::one(field_);
        Coords col = mul(x, e);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

SMat Algebra::right_mult(const Coords& x) const {
    SMat m(dim_, dim_, field_);
    for (int j = 0; j < dim_; ++j) {
        Coords e = zero_coords();
        e[j] = Scalar::one(field_);
        Coords col = mul(e, x);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

void Algebra::fill(Spec s) {
    field_ = s.field;
    dim_ = static_cast<int>(s.unit.size());
    mult_ = std::move(s.mult);
    unit_ = std::move(s.unit);
    idempotents_ = std::move(s.idempotents);
    names_ = std::move(s.names);
    if (static_cast<int>(mult_.size()) != dim_) throw std::invalid_argument("mult table shape");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("mult table shape");
        for (const auto& entry : row)
            if (static_cast<int>(entry.size()) != dim_)
                throw std::invalid_argument("mult table shape");
    }
    if (names_.empty()) {
        for (int i = 0; i < dim_; ++i) names_.push_back("b" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != dim_) throw std::invalid_argument("basis name count");

    if (s.radical_span) {
        radical_ = *s.radical_span;
        if (radical_.rows() != dim_) throw std::invalid_argument("radical span shape");
    } else {
        if (field_.p != 0)
            throw std::invalid_argument(
                "radical needs a structural description in positive characteristic");
        // Characteristic 0: radical = kernel of the trace form (x, y) -> tr(L_x L_y).
        std::vector<SMat> lm;
        for (int i = 0; i < dim_; ++i) {
            Coords e = zero_coords();
            e[i] = Scalar::one(field_);
            lm.push_back(left_mult(e));
        }
        SMat form(dim_, dim_, field_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                SMat prod = lm[i] * lm[j];
                Scalar tr = Scalar::zero(field_);
                for (int k = 0; k < dim_; ++k) tr += prod.at(k, k);
                form.at(i, j) = tr;
            }
        radical_ = kernel_basis(form);
    }
}

void Algebra::verify() const {
    Scalar one = Scalar::one(field_);
    auto basis_vec = [&](int i) {
        Coords e = zero_coords();
        e[i] = one;
        return e;
    };

    // Associativity on basis triples and unit laws.
    for (int i = 0; i < dim_; ++i) {
        if (mul(unit_, basis_vec(i)) != basis_vec(i) || mul(basis_vec(i), unit_) != basis_vec(i))
            throw std::invalid_argument("unit law fails on basis element " + names_[i]);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                Coords lhs = mul(mult_[i][j], basis_vec(k));
                Coords rhs = mul(basis_vec(i), mult_[j][k]);
                if (lhs != rhs)
                    throw std::invalid_argument("multiplication table is not associative at (" +
                                                names_[i] + ", " + names_[j] + ", " + names_[k] +
                                                ")");
            }
    }

    // Idempotents: orthogonal, idempotent, complete.
    if (idempotents_.empty()) throw std::invalid_argument("no idempotent decomposition");
    Coords total = zero_coords();
    for (size_t a = 0; a < idempotents_.size(); ++a) {
        for (size_t b = 0; b < idempotents_.size(); ++b) {
            Coords prod = mul(idempotents_[a], idempotents_[b]);
            if (a == b ? prod != idempotents_[a] : prod != zero_coords())
                throw std::invalid_argument("idempotent axioms fail");
        }
        for (int i = 0; i < dim_; ++i) total[i] += idempotents_[a][i];
    }
    if (total != unit_) throw std::invalid_argument("idempotents do not sum to the unit");

    // Radical: two-sided ideal, nilpotent, and the quotient is split basic:
    // e_i (A/rad) e_j is k for i == j and 0 otherwise.
    SMat rad = radical_;
    int r = rad.cols();
    // Ideal closure: b * rad and rad * b stay in the span.
    for (int i = 0; i < dim_; ++i) {
        Coords e = basis_vec(i);
        SMat lm = left_mult(e), rm = right_mult(e);
        SMat lprod = lm * rad, rprod = rm * rad;
        SMat x;
        if (!solve(rad, hcat(lprod, rprod), x))
            throw std::invalid_argument("radical span is not a two-sided ideal");
    }
    // Nilpotency: powers of the span shrink to zero.
    SMat cur = rad;
    for (int step = 0; step <= dim_ && cur.cols() > 0; ++step) {
        if (step == dim_) throw std::invalid_argument("radical span is not nilpotent");
        // span(cur * rad): all products of a current column with a radical column.
        SMat next(dim_, 0, field_);
        for (int a = 0; a < cur.cols(); ++a) {
            Coords xa(dim_, Scalar::zero(field_));
            for (int i = 0; i < dim_; ++i) xa[i] = cur.at(i, a);
            SMat prods = left_mult(xa) * rad;
            next = next.cols() ? hcat(next, prods) : prods;
        }
        cur = column_space_basis(next);
    }
    // Split-basic quotient via dimension count: dim A = r + #blocks forces
    // e_i (A/rad) e_j = delta_ij k given the diagonal contains each e_i.
    if (dim_ != r + blocks())
        throw std::invalid_argument("quotient by the radical is not split basic");
    for (const auto& e : idempotents_) {
        SMat x;
        if (solve(rad, coords_as_column(e, field_), x))
            throw std::invalid_argument("an idempotent lies in the radical");
    }
}

AlgebraPtr Algebra::create(Spec s) {
    Spec op;
    op.field = s.field;
    int d = static_cast<int>(s.unit.size());
    op.mult.assign(d, std::vector<Coords>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) op.mult[i][j] = s.mult.at(j).at(i);
    op.unit = s.unit;
    op.idempotents = s.idempotents;
    op.names = s.names;
    op.radical_span = s.radical_span;  // the radical is the same subspace on both sides

    auto pair = std::make_shared<Pair>();
    Algebra& fwd = pair->items[0];
    Algebra& rev = pair->items[1];
    fwd.fill(std::move(s));
    rev.fill(std::move(op));
    fwd.owner_ = pair;
    rev.owner_ = pair;
    fwd.opp_ = &rev;
    rev.opp_ = &fwd;
    // The trace-form radical of the opposite equals the primal one; copy to
    // keep the two in sync even when it was computed rather than supplied.
    rev.radical_ = fwd.radical_;
    fwd.verify();
    rev.verify();
    return AlgebraPtr(pair, &fwd);
}

bool algebra_iso_on_basis(const Algebra& a, const Algebra& b, const std::vector<Coords>& images) {
    if (a.dim_ != b.dim_ || static_cast<int>(images.size()) != a.dim_) return false;
    if (!(a.field_ == b.field_)) return false;
    SMat m(b.dim_, a.dim_, a.field_);
    for (int j = 0; j < a.dim_; ++j) {
        if (static_cast<int>(images[j].size()) != b.dim_) return false;
        for (int i = 0; i < b.dim_; ++i) m.at(i, j) = images[j][i];
    }
    if (!invertible(m)) return false;
    auto apply = [&](const Coords& x) {
        SMat col = m * coords_as_column(x, a.field_);
        Coords out = b.zero_coords();
        for (int i = 0; i < b.dim_; ++i) out[i] = col.at(i, 0);
        return out;
    };
    if (apply(a.unit_) != b.unit_) return false;
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j)
            if (b.mul(images[i], images[j]) != apply(a.basis_mul(i, j))) return false;
    return true;
}

}  // namespace tiltkit
