#include "tiltkit/proring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tiltkit/rng.hpp"
#include "tiltkit/zmodule.hpp"

namespace tiltkit {

namespace {

void check_level(int level) {
    if (level < 1) throw std::invalid_argument("chain levels are 1-based");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return CounterRng(seed, salt).next();
}

}  // namespace

ProRingPtr ProRing::s_completion(const Int& s) {
    if (s < 2) throw std::invalid_argument("s-adic chain needs s >= 2");
    auto r = std::shared_ptr<ProRing>(new ProRing());
    r->kind_ = Kind::SAdic;
    r->s_ = s;
    return r;
}

ProRingPtr ProRing::discrete_ring(const Int& modulus) {
    if (modulus < 0) throw std::invalid_argument("ring modulus must be nonnegative");
    auto r = std::shared_ptr<ProRing>(new ProRing());
    r->kind_ = Kind::Discrete;
    r->modulus_ = modulus;
    return r;
}

ProRingPtr ProRing::discrete_ring(AlgebraPtr algebra) {
    if (!algebra) throw std::invalid_argument("constant algebra chain needs an algebra");
    auto r = std::shared_ptr<ProRing>(new ProRing());
    r->kind_ = Kind::Discrete;
    r->alg_ = std::move(algebra);
    return r;
}

ProRingPtr ProRing::matrix_ring(ProRingPtr base, int size) {
    if (!base) throw std::invalid_argument("matrix chain needs a base chain");
    if (size < 1) throw std::invalid_argument("matrix chain needs a nonempty index set");
    auto r = std::shared_ptr<ProRing>(new ProRing());
    r->kind_ = Kind::Matrix;
    r->base_ = std::move(base);
    r->size_ = size;
    return r;
}

bool ProRing::discrete_topology() const {
    if (kind_ == Kind::SAdic) return false;
    if (kind_ == Kind::Matrix) return base_->discrete_topology();
    return true;
}

Int ProRing::modulus(int level) const {
    check_level(level);
    if (kind_ == Kind::SAdic) return pow_int(s_, static_cast<unsigned long>(level));
    if (kind_ == Kind::Discrete && !alg_) return modulus_;
    throw std::logic_error("level ring is not of the form Z/m");
}

const ProRingPtr& ProRing::base() const {
    if (kind_ != Kind::Matrix) throw std::logic_error("not a matrix chain");
    return base_;
}

int ProRing::matrix_size() const {
    if (kind_ != Kind::Matrix) throw std::logic_error("not a matrix chain");
    return size_;
}

std::string ProRing::describe() const {
    switch (kind_) {
        case Kind::SAdic:
            return s_.get_str() + "-adic chain";
        case Kind::Discrete:
            if (alg_) return "constant algebra chain (dim " + std::to_string(alg_->dim()) + ")";
            if (modulus_ == 0) return "constant ring Z";
            return "constant ring Z/" + modulus_.get_str();
        case Kind::Matrix:
            return std::to_string(size_) + "x" + std::to_string(size_) + " matrices over " +
                   base_->describe();
    }
    return {};
}

RingElem ProRing::zero(int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            break;
        case Kind::Discrete:
            if (alg_) e.coords = alg_->zero_coords();
            break;
        case Kind::Matrix:
            e.entries.assign(static_cast<std::size_t>(size_) * size_, base_->zero(level));
            break;
    }
    return e;
}

RingElem ProRing::one(int level) const {
    return from_int(1, level);
}

RingElem ProRing::add(const RingElem& a, const RingElem& b, int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            e.residue = mod_floor(a.residue + b.residue, modulus(level));
            break;
        case Kind::Discrete:
            if (alg_) {
                e.coords = alg_->zero_coords();
                for (int i = 0; i < alg_->dim(); ++i) e.coords[i] = a.coords.at(i) + b.coords.at(i);
            } else {
                e.residue = modulus_ == 0 ? Int(a.residue + b.residue)
                                          : mod_floor(a.residue + b.residue, modulus_);
            }
            break;
        case Kind::Matrix: {
            std::size_t n = static_cast<std::size_t>(size_) * size_;
            if (a.entries.size() != n || b.entries.size() != n)
                throw std::invalid_argument("matrix element of the wrong shape");
            e.entries.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                e.entries.push_back(base_->add(a.entries[i], b.entries[i], level));
            break;
        }
    }
    return e;
}

RingElem ProRing::neg(const RingElem& a, int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            e.residue = mod_floor(-a.residue, modulus(level));
            break;
        case Kind::Discrete:
            if (alg_) {
                e.coords = alg_->zero_coords();
                for (int i = 0; i < alg_->dim(); ++i) e.coords[i] = -a.coords.at(i);
            } else {
                e.residue = modulus_ == 0 ? Int(-a.residue) : mod_floor(-a.residue, modulus_);
            }
            break;
        case Kind::Matrix:
            e.entries.reserve(a.entries.size());
            for (const RingElem& x : a.entries) e.entries.push_back(base_->neg(x, level));
            break;
    }
    return e;
}

RingElem ProRing::mul(const RingElem& a, const RingElem& b, int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            e.residue = mod_floor(a.residue * b.residue, modulus(level));
            break;
        case Kind::Discrete:
            if (alg_) {
                e.coords = alg_->mul(a.coords, b.coords);
            } else {
                e.residue = modulus_ == 0 ? Int(a.residue * b.residue)
                                          : mod_floor(a.residue * b.residue, modulus_);
            }
            break;
        case Kind::Matrix: {
            std::size_t n = static_cast<std::size_t>(size_) * size_;
            if (a.entries.size() != n || b.entries.size() != n)
                throw std::invalid_argument("matrix element of the wrong shape");
            e.entries.assign(n, base_->zero(level));
            for (int i = 0; i < size_; ++i)
                for (int k = 0; k < size_; ++k)
                    for (int j = 0; j < size_; ++j) {
                        RingElem t = base_->mul(a.entries[i * size_ + k],
                                                b.entries[k * size_ + j], level);
                        e.entries[i * size_ + j] =
                            base_->add(e.entries[i * size_ + j], t, level);
                    }
            break;
        }
    }
    return e;
}

RingElem ProRing::from_int(const Int& k, int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            e.residue = mod_floor(k, modulus(level));
            break;
        case Kind::Discrete:
            if (alg_) {
                e.coords = alg_->zero_coords();
                Scalar c(Rat(k), alg_->field());
                for (int i = 0; i < alg_->dim(); ++i) e.coords[i] = c * alg_->unit().at(i);
            } else {
                e.residue = modulus_ == 0 ? k : mod_floor(k, modulus_);
            }
            break;
        case Kind::Matrix:
            e.entries.assign(static_cast<std::size_t>(size_) * size_, base_->zero(level));
            for (int i = 0; i < size_; ++i) e.entries[i * size_ + i] = base_->from_int(k, level);
            break;
    }
    return e;
}

bool ProRing::is_zero(const RingElem& a) const {
    switch (kind_) {
        case Kind::SAdic:
            return a.residue == 0;
        case Kind::Discrete:
            if (alg_) {
                for (const Scalar& c : a.coords)
                    if (!c.is_zero()) return false;
                return true;
            }
            return a.residue == 0;
        case Kind::Matrix:
            for (const RingElem& x : a.entries)
                if (!base_->is_zero(x)) return false;
            return true;
    }
    return true;
}

std::string ProRing::str(const RingElem& a) const {
    switch (kind_) {
        case Kind::SAdic:
            return a.residue.get_str();
        case Kind::Discrete: {
            if (!alg_) return a.residue.get_str();
            std::ostringstream out;
            out << "(";
            for (std::size_t i = 0; i < a.coords.size(); ++i)
                out << (i ? "," : "") << a.coords[i].str();
            out << ")";
            return out.str();
        }
        case Kind::Matrix: {
            std::ostringstream out;
            out << "[";
            for (int i = 0; i < size_; ++i) {
                out << (i ? ",[" : "[");
                for (int j = 0; j < size_; ++j)
                    out << (j ? "," : "") << base_->str(a.entries[i * size_ + j]);
                out << "]";
            }
            out << "]";
            return out.str();
        }
    }
    return {};
}

RingElem ProRing::transition(const RingElem& a, int level) const {
    check_level(level);
    RingElem e;
    switch (kind_) {
        case Kind::SAdic:
            e.residue = mod_floor(a.residue, modulus(level));
            break;
        case Kind::Discrete:
            e = a;
            break;
        case Kind::Matrix:
            e.entries.reserve(a.entries.size());
            for (const RingElem& x : a.entries) e.entries.push_back(base_->transition(x, level));
            break;
    }
    return e;
}

AbGroup ProRing::level_group(int level) const {
    check_level(level);
    switch (kind_) {
        case Kind::SAdic:
            return AbGroup{{modulus(level)}};
        case Kind::Discrete:
            if (alg_) throw std::logic_error("constant algebra chain has no Z-presentation");
            if (modulus_ == 1) return AbGroup{};
            return AbGroup{{modulus_}};
        case Kind::Matrix:
            return power_group(base_->level_group(level), size_ * size_);
    }
    return {};
}

std::vector<Int> ProRing::group_coords(const RingElem& a, int level) const {
    check_level(level);
    switch (kind_) {
        case Kind::SAdic:
            return {a.residue};
        case Kind::Discrete:
            if (alg_) throw std::logic_error("constant algebra chain has no Z-presentation");
            if (modulus_ == 1) return {};
            return {a.residue};
        case Kind::Matrix: {
            std::vector<Int> out;
            for (const RingElem& x : a.entries) {
                std::vector<Int> part = base_->group_coords(x, level);
                out.insert(out.end(), part.begin(), part.end());
            }
            return out;
        }
    }
    return {};
}

RingElem ProRing::from_group_coords(const std::vector<Int>& c, int level) const {
    check_level(level);
    switch (kind_) {
        case Kind::SAdic: {
            if (c.size() != 1) throw std::invalid_argument("coordinate count mismatch");
            RingElem e;
            e.residue = mod_floor(c[0], modulus(level));
            return e;
        }
        case Kind::Discrete: {
            if (alg_) throw std::logic_error("constant algebra chain has no Z-presentation");
            if (modulus_ == 1) {
                if (!c.empty()) throw std::invalid_argument("coordinate count mismatch");
                return zero(level);
            }
            if (c.size() != 1) throw std::invalid_argument("coordinate count mismatch");
            RingElem e;
            e.residue = modulus_ == 0 ? c[0] : mod_floor(c[0], modulus_);
            return e;
        }
        case Kind::Matrix: {
            int per = base_->level_group(level).dim();
            std::size_t n = static_cast<std::size_t>(size_) * size_;
            if (c.size() != n * static_cast<std::size_t>(per))
                throw std::invalid_argument("coordinate count mismatch");
            RingElem e;
            e.entries.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Int> part(c.begin() + static_cast<long>(i) * per,
                                      c.begin() + static_cast<long>(i + 1) * per);
                e.entries.push_back(base_->from_group_coords(part, level));
            }
            return e;
        }
    }
    return {};
}

bool same_ring(const ProRingPtr& a, const ProRingPtr& b) {
    if (!a || !b) return a == b;
    if (a == b) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case ProRing::Kind::SAdic:
            return a->modulus(1) == b->modulus(1);
        case ProRing::Kind::Discrete:
            if (a->algebra() || b->algebra()) return a->algebra() == b->algebra();
            return a->modulus(1) == b->modulus(1);
        case ProRing::Kind::Matrix:
            return a->matrix_size() == b->matrix_size() && same_ring(a->base(), b->base());
    }
    return false;
}

ProElement::ProElement(ProRingPtr ring, std::function<RingElem(int)> at)
    : ring_(std::move(ring)), at_(std::move(at)) {
    if (!ring_ || !at_) throw std::invalid_argument("pro-element needs a ring and a producer");
}

RingElem ProElement::at(int level) const {
    check_level(level);
    return at_(level);
}

ProElement pro_int(ProRingPtr ring, const Int& k) {
    if (!ring) throw std::invalid_argument("pro-element needs a ring");
    return ProElement(ring, [ring, k](int n) { return ring->from_int(k, n); });
}

namespace {

void check_same_ring(const ProRingPtr& a, const ProRingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("elements of different chains");
}

}  // namespace

ProElement pro_add(const ProElement& a, const ProElement& b) {
    check_same_ring(a.ring(), b.ring());
    return ProElement(a.ring(), [a, b](int n) { return a.ring()->add(a.at(n), b.at(n), n); });
}

ProElement pro_neg(const ProElement& a) {
    return ProElement(a.ring(), [a](int n) { return a.ring()->neg(a.at(n), n); });
}

ProElement pro_mul(const ProElement& a, const ProElement& b) {
    check_same_ring(a.ring(), b.ring());
    return ProElement(a.ring(), [a, b](int n) { return a.ring()->mul(a.at(n), b.at(n), n); });
}

ProElement lift_element(ProRingPtr ring, const RingElem& a, int level) {
    if (!ring) throw std::invalid_argument("pro-element needs a ring");
    check_level(level);
    return ProElement(ring, [ring, a, level](int n) {
        RingElem cur = a;
        for (int l = level; l > n; --l) cur = ring->transition(cur, l - 1);
        return cur;
    });
}

bool pro_eq(const ProElement& a, const ProElement& b, int precision) {
    check_same_ring(a.ring(), b.ring());
    for (int n = 1; n <= precision; ++n)
        if (!(a.at(n) == b.at(n))) return false;
    return true;
}

IndexSet IndexSet::finite(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const std::string& n : names) {
        if (n.empty()) throw std::invalid_argument("empty index name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate index name: " + n);
    }
    IndexSet x;
    x.finite_ = true;
    x.names_ = std::move(names);
    return x;
}

IndexSet IndexSet::symbolic(std::string stem) {
    if (stem.empty()) throw std::invalid_argument("empty index stem");
    IndexSet x;
    x.finite_ = false;
    x.stem_ = std::move(stem);
    return x;
}

int IndexSet::size() const {
    if (!finite_) throw std::logic_error("symbolic index set has no finite size");
    return static_cast<int>(names_.size());
}

std::string IndexSet::name(int i) const {
    if (i < 0) throw std::invalid_argument("negative index");
    if (finite_) return names_.at(static_cast<std::size_t>(i));
    return stem_ + std::to_string(i);
}

bool IndexSet::contains(const std::string& x) const {
    if (finite_) return std::find(names_.begin(), names_.end(), x) != names_.end();
    if (x.size() <= stem_.size() || x.compare(0, stem_.size(), stem_) != 0) return false;
    std::string tail = x.substr(stem_.size());
    if (tail.size() > 1 && tail[0] == '0') return false;
    return std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; });
}

const std::vector<std::string>& IndexSet::names() const {
    if (!finite_) throw std::logic_error("symbolic index set has no name list");
    return names_;
}

FreeContraElement::FreeContraElement(ProRingPtr ring, IndexSet x,
                                     std::function<Snapshot(int)> level)
    : ring_(std::move(ring)), x_(std::move(x)), level_(std::move(level)) {
    if (!ring_ || !level_)
        throw std::invalid_argument("free-contramodule element needs a ring and a producer");
}

Snapshot FreeContraElement::snapshot(int level) const {
    check_level(level);
    Snapshot raw = level_(level);
    Snapshot out;
    for (const auto& [key, value] : raw) {
        if (!x_.contains(key)) throw std::logic_error("coefficient at an index outside X: " + key);
        if (!ring_->is_zero(value)) out.emplace(key, value);
    }
    return out;
}

ProElement FreeContraElement::coefficient(const std::string& at) const {
    if (!x_.contains(at)) throw std::invalid_argument("index outside X: " + at);
    FreeContraElement self = *this;
    return ProElement(ring_, [self, at](int n) {
        Snapshot s = self.snapshot(n);
        auto it = s.find(at);
        return it == s.end() ? self.ring()->zero(n) : it->second;
    });
}

std::vector<std::string> FreeContraElement::support(int precision) const {
    std::set<std::string> keys;
    for (int n = 1; n <= precision; ++n)
        for (const auto& [key, value] : snapshot(n)) keys.insert(key);
    return {keys.begin(), keys.end()};
}

FreeContraElement contra_zero(ProRingPtr ring, IndexSet x) {
    return FreeContraElement(std::move(ring), std::move(x), [](int) { return Snapshot{}; });
}

FreeContraElement contra_add(const FreeContraElement& a, const FreeContraElement& b) {
    check_same_ring(a.ring(), b.ring());
    if (!(a.index_set() == b.index_set()))
        throw std::invalid_argument("elements over different index sets");
    return FreeContraElement(a.ring(), a.index_set(), [a, b](int n) {
        Snapshot out = a.snapshot(n);
        for (const auto& [key, value] : b.snapshot(n)) {
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, value);
            else
                it->second = a.ring()->add(it->second, value, n);
        }
        return out;
    });
}

FreeContraElement contra_neg(const FreeContraElement& a) {
    return FreeContraElement(a.ring(), a.index_set(), [a](int n) {
        Snapshot out;
        for (const auto& [key, value] : a.snapshot(n)) out.emplace(key, a.ring()->neg(value, n));
        return out;
    });
}

FreeContraElement contra_combination(ProRingPtr ring, IndexSet x,
                                     const std::vector<std::pair<std::string, ProElement>>& terms) {
    for (const auto& [name, coeff] : terms) {
        if (!x.contains(name)) throw std::invalid_argument("index outside X: " + name);
        check_same_ring(ring, coeff.ring());
    }
    return FreeContraElement(ring, std::move(x), [ring, terms](int n) {
        Snapshot out;
        for (const auto& [name, coeff] : terms) {
            RingElem v = coeff.at(n);
            auto it = out.find(name);
            if (it == out.end())
                out.emplace(name, v);
            else
                it->second = ring->add(it->second, v, n);
        }
        return out;
    });
}

FreeContraElement contra_combination(ProRingPtr ring, IndexSet x,
                                     const std::vector<std::pair<std::string, Int>>& terms) {
    std::vector<std::pair<std::string, ProElement>> lifted;
    lifted.reserve(terms.size());
    for (const auto& [name, k] : terms) lifted.emplace_back(name, pro_int(ring, k));
    return contra_combination(std::move(ring), std::move(x), lifted);
}

FreeContraElement lift_snapshot(ProRingPtr ring, IndexSet x, const Snapshot& snap, int level) {
    std::vector<std::pair<std::string, ProElement>> terms;
    terms.reserve(snap.size());
    for (const auto& [name, value] : snap) terms.emplace_back(name, lift_element(ring, value, level));
    return contra_combination(std::move(ring), std::move(x), terms);
}

FreeContraElement monad_unit(ProRingPtr ring, IndexSet x, const std::string& at) {
    if (!x.contains(at)) throw std::invalid_argument("index outside X: " + at);
    return FreeContraElement(ring, std::move(x),
                             [ring, at](int n) { return Snapshot{{at, ring->one(n)}}; });
}

FreeContraElement monad_mult(ProRingPtr ring, IndexSet x, const std::vector<OuterTerm>& outer) {
    for (const OuterTerm& term : outer) {
        check_same_ring(ring, term.coeff.ring());
        check_same_ring(ring, term.inner.ring());
        if (!(term.inner.index_set() == x))
            throw std::invalid_argument("inner element over a different index set");
    }
    return FreeContraElement(ring, std::move(x), [ring, outer](int n) {
        Snapshot out;
        for (const OuterTerm& term : outer) {
            RingElem r = term.coeff.at(n);
            if (ring->is_zero(r)) continue;
            for (const auto& [key, value] : term.inner.snapshot(n)) {
                RingElem v = ring->mul(r, value, n);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, v);
                else
                    it->second = ring->add(it->second, v, n);
            }
        }
        return out;
    });
}

Snapshot level_quotient(const FreeContraElement& x, int level) {
    return x.snapshot(level);
}

bool contra_eq(const FreeContraElement& a, const FreeContraElement& b, int precision) {
    check_same_ring(a.ring(), b.ring());
    if (!(a.index_set() == b.index_set())) return false;
    for (int n = 1; n <= precision; ++n)
        if (!(a.snapshot(n) == b.snapshot(n))) return false;
    return true;
}

std::string check_pro_coherence(const ProElement& a, int precision) {
    for (int n = 1; n < precision; ++n) {
        RingElem pushed = a.ring()->transition(a.at(n + 1), n);
        if (!(pushed == a.at(n)))
            return "coherence fails at level " + std::to_string(n) + ": transition gives " +
                   a.ring()->str(pushed) + ", stored value is " + a.ring()->str(a.at(n));
    }
    return {};
}

std::string check_contra_coherence(const FreeContraElement& a, int precision) {
    for (int n = 1; n < precision; ++n) {
        Snapshot pushed;
        for (const auto& [key, value] : a.snapshot(n + 1)) {
            RingElem v = a.ring()->transition(value, n);
            if (!a.ring()->is_zero(v)) pushed.emplace(key, v);
        }
        if (!(pushed == a.snapshot(n)))
            return "snapshot coherence fails between levels " + std::to_string(n + 1) + " and " +
                   std::to_string(n);
    }
    return {};
}

std::string check_chain(const ProRingPtr& ring, std::uint64_t seed, int precision) {
    if (!ring) throw std::invalid_argument("no chain given");
    for (int n = 1; n < precision; ++n)
        if (!(ring->transition(ring->one(n + 1), n) == ring->one(n)))
            return "transition drops the unit at level " + std::to_string(n);
    for (int t = 0; t < 20; ++t) {
        ProElement a = random_pro_element(ring, derive_seed(seed, 2 * t));
        ProElement b = random_pro_element(ring, derive_seed(seed, 2 * t + 1));
        std::string c = check_pro_coherence(a, precision);
        if (!c.empty()) return "sample " + std::to_string(t) + ": " + c;
        for (int n = 1; n < precision; ++n) {
            RingElem ah = a.at(n + 1), bh = b.at(n + 1);
            RingElem al = ring->transition(ah, n), bl = ring->transition(bh, n);
            if (!(ring->transition(ring->add(ah, bh, n + 1), n) == ring->add(al, bl, n)))
                return "transition is not additive at level " + std::to_string(n);
            if (!(ring->transition(ring->mul(ah, bh, n + 1), n) == ring->mul(al, bl, n)))
                return "transition is not multiplicative at level " + std::to_string(n);
        }
    }
    return {};
}

ProElement random_pro_element(ProRingPtr ring, std::uint64_t seed) {
    if (!ring) throw std::invalid_argument("no chain given");
    switch (ring->kind()) {
        case ProRing::Kind::SAdic: {
            Int s = ring->modulus(1);
            // Digit expansion: value at level n is sum_{k<n} d_k s^k, which is
            // coherent under reduction by construction.
            return ProElement(ring, [s, seed](int n) {
                Int v = 0, p = 1;
                for (int k = 0; k < n; ++k) {
                    Int digit = mod_floor(Int(CounterRng(seed, static_cast<std::uint64_t>(k)).next()), s);
                    v += digit * p;
                    p *= s;
                }
                RingElem e;
                e.residue = v;
                return e;
            });
        }
        case ProRing::Kind::Discrete: {
            CounterRng rng(seed, 0);
            if (const AlgebraPtr& alg = ring->algebra()) {
                Coords c = alg->zero_coords();
                for (int i = 0; i < alg->dim(); ++i) {
                    std::int64_t v = alg->field().p > 0
                                         ? static_cast<std::int64_t>(rng.below(
                                               static_cast<std::uint64_t>(alg->field().p)))
                                         : rng.range(-3, 3);
                    c[i] = Scalar(Rat(v), alg->field());
                }
                RingElem e;
                e.coords = std::move(c);
                return ProElement(ring, [e](int) { return e; });
            }
            Int m = ring->modulus(1);
            Int v = m == 0 ? Int(rng.range(-9, 9)) : mod_floor(Int(rng.next()), m);
            RingElem e;
            e.residue = v;
            return ProElement(ring, [e](int) { return e; });
        }
        case ProRing::Kind::Matrix: {
            int size = ring->matrix_size();
            std::vector<ProElement> parts;
            parts.reserve(static_cast<std::size_t>(size) * size);
            for (int i = 0; i < size * size; ++i)
                parts.push_back(random_pro_element(ring->base(),
                                                   derive_seed(seed, 100 + static_cast<std::uint64_t>(i))));
            return ProElement(ring, [parts](int n) {
                RingElem e;
                e.entries.reserve(parts.size());
                for (const ProElement& p : parts) e.entries.push_back(p.at(n));
                return e;
            });
        }
    }
    throw std::logic_error("unreachable chain kind");
}

FreeContraElement random_contra_element(ProRingPtr ring, IndexSet x, std::uint64_t seed,
                                        int max_support) {
    if (max_support < 0) throw std::invalid_argument("negative support bound");
    CounterRng rng(seed, 7);
    int pool = x.is_finite() ? x.size() : std::max(max_support * 2, 8);
    int cap = std::min(max_support, pool);
    int want = cap == 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
    std::set<int> picked;
    for (int tries = 0; static_cast<int>(picked.size()) < want && tries < 8 * want; ++tries)
        picked.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(pool))));
    std::vector<std::pair<std::string, ProElement>> terms;
    for (int i : picked)
        terms.emplace_back(x.name(i), random_pro_element(ring, rng.next()));
    return contra_combination(std::move(ring), std::move(x), terms);
}

std::string monad_law_fuzz(ProRingPtr ring, IndexSet x, std::uint64_t seed, int trials,
                           int precision) {
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, 0xF022 + static_cast<std::uint64_t>(t));
        FreeContraElement sample = random_contra_element(ring, x, rng.next());
        std::string tag = "trial " + std::to_string(t);

        FreeContraElement left_unit = monad_mult(ring, x, {{pro_int(ring, 1), sample}});
        if (!contra_eq(left_unit, sample, precision)) return tag + ": mu(1*t) differs from t";

        std::vector<OuterTerm> expanded;
        for (const std::string& name : sample.support(precision))
            expanded.push_back({sample.coefficient(name), monad_unit(ring, x, name)});
        if (!contra_eq(monad_mult(ring, x, expanded), sample, precision))
            return tag + ": mu over unit expansion differs from t";

        // Two collapse orders of a doubly nested combination: inner mu first
        // versus merging the outer two layers first.
        std::vector<OuterTerm> inner_first, merged;
        int outer_terms = 1 + static_cast<int>(rng.below(2));
        for (int j = 0; j < outer_terms; ++j) {
            ProElement r = random_pro_element(ring, rng.next());
            std::vector<OuterTerm> inner;
            int inner_terms = 1 + static_cast<int>(rng.below(2));
            for (int k = 0; k < inner_terms; ++k) {
                ProElement s = random_pro_element(ring, rng.next());
                FreeContraElement u = random_contra_element(ring, x, rng.next());
                inner.push_back({s, u});
                merged.push_back({pro_mul(r, s), u});
            }
            inner_first.push_back({r, monad_mult(ring, x, inner)});
        }
        if (!contra_eq(monad_mult(ring, x, inner_first), monad_mult(ring, x, merged), precision))
            return tag + ": the two collapse orders disagree";
    }
    return {};
}

}  // namespace tiltkit
