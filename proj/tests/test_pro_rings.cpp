#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tiltkit/proring.hpp"
#include "tiltkit/rng.hpp"
#include "tiltkit/quiver.hpp"
#include "tiltkit/zmodule.hpp"

using namespace tiltkit;

namespace {

const FieldTag kQ{0};

RingElem res(long v) {
    RingElem e;
    e.residue = v;
    return e;
}

RingElem mat2(const ProRingPtr& m2, std::vector<long> v, int level) {
    RingElem e;
    for (long x : v) e.entries.push_back(m2->base()->from_int(x, level));
    return e;
}

AlgebraPtr line_algebra() {
    Quiver q;
    q.vertices = 2;
    q.arrows = {{0, 1, "a"}};
    return build_path_algebra(q, {}, kQ).alg;
}

Coords basis_vec(const AlgebraPtr& alg, int i) {
    Coords c = alg->zero_coords();
    c[i] = Scalar::one(alg->field());
    return c;
}

}  // namespace

TEST_CASE("s-adic chain arithmetic and transitions") {
    ProRingPtr ring = ProRing::s_completion(2);
    CHECK(ring->kind() == ProRing::Kind::SAdic);
    CHECK_FALSE(ring->discrete_topology());
    CHECK(ring->modulus(1) == 2);
    CHECK(ring->modulus(3) == 8);
    CHECK(ring->describe() == "2-adic chain");

    RingElem five = ring->from_int(5, 3);
    RingElem six = ring->from_int(6, 3);
    CHECK(ring->add(five, six, 3) == res(3));
    CHECK(ring->mul(five, six, 3) == res(6));
    CHECK(ring->neg(five, 3) == res(3));
    CHECK(ring->from_int(-1, 3) == res(7));
    CHECK(ring->transition(five, 2) == res(1));
    CHECK(ring->one(1) == res(1));
    CHECK(ring->is_zero(ring->from_int(8, 3)));

    CHECK(ring->level_group(3) == AbGroup{{Int(8)}});
    CHECK(ring->group_coords(five, 3) == std::vector<Int>{Int(5)});
    CHECK(ring->from_group_coords({Int(11)}, 3) == res(3));

    CHECK(check_chain(ring, 42).empty());
    CHECK_THROWS_WITH(ProRing::s_completion(1), doctest::Contains("s >= 2"));
    CHECK_THROWS_WITH(ring->modulus(0), doctest::Contains("1-based"));
}

TEST_CASE("integer images and a zero-convergent family over the 2-adic chain") {
    ProRingPtr ring = ProRing::s_completion(2);
    ProElement one = pro_int(ring, 1);
    for (int n = 1; n <= 8; ++n) CHECK(one.at(n) == res(1));
    CHECK(check_pro_coherence(one).empty());
    CHECK(pro_eq(pro_add(one, pro_int(ring, 3)), pro_int(ring, 4)));
    CHECK(pro_eq(pro_mul(pro_int(ring, 3), pro_int(ring, 5)), pro_int(ring, 15)));
    CHECK(pro_eq(pro_neg(one), pro_int(ring, -1)));

    // The family with coefficient 2^k at x_k: every coefficient eventually
    // vanishes in each level ring, so each snapshot is finitely supported
    // even though the global support is infinite.
    IndexSet x = IndexSet::symbolic("x");
    FreeContraElement family(ring, x, [](int level) {
        Snapshot s;
        Int p = 1;
        for (int k = 0; k < level; ++k) {
            s.emplace("x" + std::to_string(k), res(0));
            s["x" + std::to_string(k)].residue = p;
            p *= 2;
        }
        return s;
    });
    CHECK(family.snapshot(1).size() == 1);
    CHECK(family.snapshot(4).size() == 4);
    CHECK(family.support(6).size() == 6);
    CHECK(check_contra_coherence(family).empty());
    ProElement c2 = family.coefficient("x2");
    CHECK(c2.at(2) == res(0));
    CHECK(c2.at(3) == res(4));
    CHECK(c2.at(5) == res(4));
    CHECK(check_pro_coherence(c2).empty());
}

TEST_CASE("discrete chain collapses to finite combinations") {
    ProRingPtr ring = ProRing::discrete_ring(6);
    CHECK(ring->discrete_topology());
    CHECK(ring->describe() == "constant ring Z/6");
    CHECK(ring->modulus(5) == 6);
    RingElem four = ring->from_int(4, 1);
    CHECK(ring->transition(four, 3) == four);

    IndexSet x = IndexSet::finite({"a", "b"});
    FreeContraElement inner1 =
        contra_combination(ring, x, {{std::string("a"), Int(1)}, {std::string("b"), Int(3)}});
    FreeContraElement inner2 = contra_combination(ring, x, {{std::string("b"), Int(4)}});
    FreeContraElement collapsed = monad_mult(
        ring, x, {{pro_int(ring, 2), inner1}, {pro_int(ring, 5), inner2}});
    // Finite-combination arithmetic in Z/6: 2*1 = 2 at a, 2*3 + 5*4 = 26 = 2 at b.
    Snapshot expected{{"a", res(2)}, {"b", res(2)}};
    for (int n = 1; n <= 8; ++n) CHECK(collapsed.snapshot(n) == expected);
    CHECK(collapsed.support() == std::vector<std::string>{"a", "b"});

    // Over a constant chain, snapshots of sampled elements never depend on
    // the level: the zero-convergent families are the finitely supported ones.
    for (int t = 0; t < 10; ++t) {
        FreeContraElement e = random_contra_element(ring, x, 900 + t);
        for (int n = 2; n <= 8; ++n) CHECK(e.snapshot(n) == e.snapshot(1));
    }

    ProRingPtr ints = ProRing::discrete_ring(Int(0));
    CHECK(ints->describe() == "constant ring Z");
    CHECK(ints->level_group(2) == AbGroup{{Int(0)}});
    CHECK(ints->from_int(-7, 1).residue == -7);
    CHECK(check_chain(ints, 3).empty());
}

TEST_CASE("constant algebra chain multiplies through the algebra") {
    AlgebraPtr alg = line_algebra();
    ProRingPtr ring = ProRing::discrete_ring(alg);
    CHECK(ring->algebra() == alg);
    CHECK(ring->discrete_topology());
    CHECK(ring->describe() == "constant algebra chain (dim 3)");
    CHECK_THROWS_WITH(ring->level_group(1), doctest::Contains("no Z-presentation"));

    RingElem arrow;
    arrow.coords = basis_vec(alg, 2);
    RingElem e1;
    e1.coords = basis_vec(alg, 0);
    CHECK(ring->mul(arrow, e1, 1).coords == alg->mul(basis_vec(alg, 2), basis_vec(alg, 0)));
    CHECK(ring->from_int(2, 1).coords == alg->mul(alg->unit(), ring->from_int(2, 1).coords));

    // The monad over a constant algebra chain is the plain module monad: the
    // collapsed coefficient is the algebra product, outer factor on the left.
    IndexSet x = IndexSet::finite({"x"});
    FreeContraElement unit_e1 =
        contra_combination(ring, x, {{std::string("x"), lift_element(ring, e1, 1)}});
    FreeContraElement prod =
        monad_mult(ring, x, {{lift_element(ring, arrow, 1), unit_e1}});
    CHECK(prod.snapshot(4) == Snapshot{{"x", arrow}});  // a * e1 = a
    FreeContraElement unit_arrow =
        contra_combination(ring, x, {{std::string("x"), lift_element(ring, arrow, 1)}});
    FreeContraElement zero =
        monad_mult(ring, x, {{lift_element(ring, e1, 1), unit_arrow}});
    CHECK(zero.snapshot(4).empty());  // e1 * a = 0

    CHECK(check_chain(ring, 11).empty());
    CHECK(monad_law_fuzz(ring, x, 0xA15EB, 25).empty());
}

TEST_CASE("matrix chain arithmetic over the 2-adic base") {
    ProRingPtr base = ProRing::s_completion(2);
    ProRingPtr m2 = ProRing::matrix_ring(base, 2);
    CHECK(m2->matrix_size() == 2);
    CHECK(same_ring(m2->base(), base));
    CHECK_FALSE(m2->discrete_topology());
    CHECK(m2->describe() == "2x2 matrices over 2-adic chain");

    // Level 2 is M2(Z/4): [[1,2],[0,1]] * [[1,0],[2,1]] = [[1,2],[2,1]].
    RingElem left = mat2(m2, {1, 2, 0, 1}, 2);
    RingElem right = mat2(m2, {1, 0, 2, 1}, 2);
    CHECK(m2->mul(left, right, 2) == mat2(m2, {1, 2, 2, 1}, 2));
    CHECK(m2->one(2) == mat2(m2, {1, 0, 0, 1}, 2));
    CHECK(m2->add(left, right, 2) == mat2(m2, {2, 2, 2, 2}, 2));
    CHECK(m2->transition(mat2(m2, {3, 2, 1, 0}, 2), 1) == mat2(m2, {1, 0, 1, 0}, 1));
    CHECK(m2->level_group(2).inv == std::vector<Int>{Int(4), Int(4), Int(4), Int(4)});
    RingElem back = m2->from_group_coords(m2->group_coords(left, 2), 2);
    CHECK(back == left);

    ProRingPtr m1 = ProRing::matrix_ring(base, 1);
    RingElem p = m1->mul(mat2(m1, {3}, 3), mat2(m1, {7}, 3), 3);
    CHECK(p.entries.at(0) == res(5));

    CHECK(check_chain(m2, 17).empty());
    CHECK_THROWS_WITH(ProRing::matrix_ring(base, 0), doctest::Contains("nonempty"));

    // The outer coefficient of the monad multiplies from the left:
    // E12 * E21 = E11, while E21 * E12 = E22.
    IndexSet x = IndexSet::finite({"x"});
    ProElement e12 = lift_element(m2, mat2(m2, {0, 1, 0, 0}, 1), 1);
    ProElement e21 = lift_element(m2, mat2(m2, {0, 0, 1, 0}, 1), 1);
    FreeContraElement inner = contra_combination(m2, x, {{std::string("x"), e21}});
    FreeContraElement out = monad_mult(m2, x, {{e12, inner}});
    CHECK(out.snapshot(3) == Snapshot{{"x", mat2(m2, {1, 0, 0, 0}, 3)}});
}

TEST_CASE("monad unit and level quotients") {
    ProRingPtr ring = ProRing::s_completion(2);
    IndexSet x = IndexSet::finite({"a", "b"});

    FreeContraElement eps = monad_unit(ring, x, "a");
    for (int n = 1; n <= 8; ++n) CHECK(eps.snapshot(n) == Snapshot{{"a", res(1)}});
    CHECK(eps.support() == std::vector<std::string>{"a"});
    CHECK_THROWS_WITH(monad_unit(ring, x, "c"), doctest::Contains("outside X"));

    // Coefficients (1, 2) on {a, b}: the 2 vanishes modulo 2.
    FreeContraElement e12 =
        contra_combination(ring, x, {{std::string("a"), Int(1)}, {std::string("b"), Int(2)}});
    CHECK(level_quotient(e12, 1) == Snapshot{{"a", res(1)}});
    CHECK(level_quotient(e12, 2) == Snapshot{{"a", res(1)}, {"b", res(2)}});

    // mu(2*(1*a) + 1*(2*a)) = 4*a.
    FreeContraElement four_a = monad_mult(
        ring, x,
        {{pro_int(ring, 2), contra_combination(ring, x, {{std::string("a"), Int(1)}})},
         {pro_int(ring, 1), contra_combination(ring, x, {{std::string("a"), Int(2)}})}});
    CHECK(contra_eq(four_a, contra_combination(ring, x, {{std::string("a"), Int(4)}})));
    CHECK(level_quotient(four_a, 2).empty());
    CHECK(level_quotient(four_a, 3) == Snapshot{{"a", res(4)}});

    // Snapshots are additive: the level map respects addition pointwise.
    for (int t = 0; t < 10; ++t) {
        FreeContraElement u = random_contra_element(ring, x, 100 + t);
        FreeContraElement v = random_contra_element(ring, x, 200 + t);
        FreeContraElement sum = contra_add(u, v);
        for (int n = 1; n <= 4; ++n) {
            Snapshot merged = u.snapshot(n);
            for (const auto& [key, value] : v.snapshot(n)) {
                auto it = merged.find(key);
                if (it == merged.end())
                    merged.emplace(key, value);
                else
                    it->second = ring->add(it->second, value, n);
            }
            Snapshot cleaned;
            for (const auto& [key, value] : merged)
                if (!ring->is_zero(value)) cleaned.emplace(key, value);
            CHECK(sum.snapshot(n) == cleaned);
        }
    }

    FreeContraElement z = contra_add(e12, contra_neg(e12));
    CHECK(contra_eq(z, contra_zero(ring, x)));
}

TEST_CASE("monad laws hold on 100 seeded instances over each test chain") {
    IndexSet x = IndexSet::finite({"a", "b"});
    CHECK(monad_law_fuzz(ProRing::s_completion(2), x, 0xC0FFEE, 100).empty());
    CHECK(monad_law_fuzz(ProRing::discrete_ring(6), x, 0xBEEF, 100).empty());
    CHECK(monad_law_fuzz(ProRing::matrix_ring(ProRing::s_completion(2), 2), x, 0xFACE, 100).empty());
    CHECK(monad_law_fuzz(ProRing::discrete_ring(Int(0)), x, 0xDAD, 20).empty());
    IndexSet big = IndexSet::symbolic("y");
    CHECK(monad_law_fuzz(ProRing::s_completion(2), big, 0x5EED, 25).empty());
}

TEST_CASE("constructed elements stay coherent along the chain") {
    std::vector<ProRingPtr> rings = {ProRing::s_completion(2), ProRing::s_completion(6),
                                     ProRing::discrete_ring(6),
                                     ProRing::matrix_ring(ProRing::s_completion(2), 2)};
    IndexSet x = IndexSet::finite({"a", "b", "c"});
    for (const ProRingPtr& ring : rings) {
        CAPTURE(ring->describe());
        for (int t = 0; t < 20; ++t) {
            ProElement p = random_pro_element(ring, 5000 + t);
            CHECK(check_pro_coherence(p).empty());
            FreeContraElement e = random_contra_element(ring, x, 6000 + t);
            CHECK(check_contra_coherence(e).empty());
        }
    }
}

TEST_CASE("chains compare structurally and reject mixing") {
    CHECK(same_ring(ProRing::s_completion(2), ProRing::s_completion(2)));
    CHECK_FALSE(same_ring(ProRing::s_completion(2), ProRing::s_completion(4)));
    CHECK_FALSE(same_ring(ProRing::s_completion(2), ProRing::discrete_ring(2)));
    CHECK(same_ring(ProRing::discrete_ring(6), ProRing::discrete_ring(6)));
    CHECK(same_ring(ProRing::matrix_ring(ProRing::s_completion(2), 2),
                    ProRing::matrix_ring(ProRing::s_completion(2), 2)));
    CHECK_FALSE(same_ring(ProRing::matrix_ring(ProRing::s_completion(2), 2),
                          ProRing::matrix_ring(ProRing::s_completion(2), 3)));
    AlgebraPtr alg = line_algebra();
    CHECK(same_ring(ProRing::discrete_ring(alg), ProRing::discrete_ring(alg)));
    CHECK_FALSE(same_ring(ProRing::discrete_ring(alg), ProRing::discrete_ring(6)));

    ProRingPtr two = ProRing::s_completion(2);
    ProRingPtr six = ProRing::discrete_ring(6);
    IndexSet x = IndexSet::finite({"a"});
    IndexSet y = IndexSet::finite({"b"});
    CHECK_THROWS_WITH(pro_add(pro_int(two, 1), pro_int(six, 1)),
                      doctest::Contains("different chains"));
    CHECK_THROWS_WITH(contra_add(monad_unit(two, x, "a"), monad_unit(two, y, "b")),
                      doctest::Contains("different index sets"));
    CHECK_THROWS_WITH(
        monad_mult(two, x, {{pro_int(two, 1), monad_unit(two, y, "b")}}),
        doctest::Contains("different index set"));
    CHECK_THROWS_WITH(contra_combination(two, x, {{std::string("zz"), Int(1)}}),
                      doctest::Contains("outside X"));
    CHECK_THROWS_WITH(IndexSet::finite({"a", "a"}), doctest::Contains("duplicate"));

    IndexSet sym = IndexSet::symbolic("x");
    CHECK(sym.contains("x0"));
    CHECK(sym.contains("x17"));
    CHECK_FALSE(sym.contains("x03"));
    CHECK_FALSE(sym.contains("x"));
    CHECK_FALSE(sym.contains("y2"));
    CHECK(sym.name(3) == "x3");
}

TEST_CASE("level snapshots present the free module over each level ring") {
    ProRingPtr ring = ProRing::s_completion(2);
    for (int size : {1, 2, 5}) {
        std::vector<std::string> names;
        for (int i = 0; i < size; ++i) names.push_back("g" + std::to_string(i));
        IndexSet x = IndexSet::finite(names);
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(size);
            CAPTURE(n);
            // The snapshot target assembled from level-ring coordinates equals
            // the module presented by generators X with relations 2^n * g_i.
            AbGroup from_snapshots = power_group(ring->level_group(n), size);
            ZMat rels(size, size);
            for (int i = 0; i < size; ++i) rels.at(i, i) = ring->modulus(n);
            CHECK(from_snapshots == present(size, rels).grp);

            // Every level-n coefficient vector lifts to an actual element.
            CounterRng rng(77, static_cast<std::uint64_t>(10 * size + n));
            Snapshot snap;
            for (int i = 0; i < size; ++i) {
                RingElem v = ring->from_group_coords({Int(rng.next())}, n);
                if (!ring->is_zero(v)) snap.emplace(names[static_cast<std::size_t>(i)], v);
            }
            FreeContraElement lifted = lift_snapshot(ring, x, snap, n);
            CHECK(lifted.snapshot(n) == snap);
            CHECK(check_contra_coherence(lifted).empty());

            // Combinations with coefficients from the level-n kernel ideal
            // vanish in the snapshot: they are the quotient's denominator.
            ProElement u = pro_mul(pro_int(ring, ring->modulus(n)), random_pro_element(ring, 31 * n));
            FreeContraElement killed =
                monad_mult(ring, x, {{u, random_contra_element(ring, x, 400 + n)}});
            for (int m = 1; m <= n; ++m) CHECK(killed.snapshot(m).empty());
        }
    }
}
