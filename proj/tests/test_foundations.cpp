#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tiltkit/abelian.hpp"
#include "tiltkit/rng.hpp"
#include "tiltkit/smith.hpp"

using namespace tiltkit;

namespace {

std::vector<std::vector<std::int64_t>> to_rows(const ZMat& m) {
    std::vector<std::vector<std::int64_t>> r(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i][j] = to_i64(m.at(i, j));
    return r;
}

void check_smith(const ZMat& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(det_int(s.u)) == 1);
    CHECK(abs(det_int(s.v)) == 1);
    int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int i = 0; i + 1 < n; ++i) {
        CHECK(s.d.at(i, i) >= 0);
        if (s.d.at(i + 1, i + 1) != 0) {
            REQUIRE(s.d.at(i, i) != 0);
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
        }
    }
    // Diagonal agrees with the gcd-of-minors invariants.
    auto div = oracles::elementary_divisors(to_rows(m));
    for (int i = 0; i < n; ++i) CHECK(s.d.at(i, i) == div[i]);
}

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(Rat(n, d)); }

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
    CHECK(Rat(7, 3) / Rat(7, 3) == Rat(1));
    CHECK((Rat(1, 2) - Rat(1, 2)).is_zero());
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat(1) / Rat(0));
    // No word-size ceiling: (2^80)^2 stays exact.
    Int big = pow_int(2, 80);
    CHECK(Rat(big) * Rat(big) == Rat(pow_int(2, 160)));
}

TEST_CASE("prime field arithmetic") {
    FieldTag f2{2}, f3{3};
    CHECK(Scalar(Rat(5), f2) == Scalar(Rat(1), f2));
    CHECK(Scalar(Rat(-1), f3) == Scalar(Rat(2), f3));
    CHECK(Scalar(Rat(2), f3).inverse() == Scalar(Rat(2), f3));
    CHECK(Scalar(Rat(1, 2), f3) == Scalar(Rat(2), f3));  // 1/2 = 2 mod 3
    CHECK_THROWS(Scalar(Rat(1), f2) + Scalar(Rat(1), f3));
    CHECK_THROWS(Scalar(Rat(1, 2), f2));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));
}

TEST_CASE("rref, rank, kernel, solve over the rationals") {
    FieldTag f0{0};
    SMat m = SMat::from_rows({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}}, f0);
    CHECK(rank(m) == 2);
    SMat k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    SMat b(3, 1, f0);
    b.at(0, 0) = q(6);
    b.at(1, 0) = q(12);
    b.at(2, 0) = q(2);
    SMat x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);

    b.at(1, 0) = q(13);  // incompatible with the duplicated row
    CHECK_FALSE(solve(m, b, x));

    SMat inv2 = SMat::from_rows({{q(2), q(1)}, {q(1), q(1)}}, f0);
    REQUIRE(invertible(inv2));
    CHECK(inverse(inv2) * inv2 == SMat::identity(2, f0));
}

TEST_CASE("rank over F_p can drop") {
    FieldTag f2{2};
    SMat m = SMat::from_rows({{Scalar(Rat(1), f2), Scalar(Rat(1), f2)},
                              {Scalar(Rat(1), f2), Scalar(Rat(1), f2)}},
                             f2);
    CHECK(rank(m) == 1);
    SMat k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
}

TEST_CASE("random matrices: rank agrees with fraction-free elimination") {
    CounterRng rng(17, 1);
    for (int t = 0; t < 60; ++t) {
        int r = 1 + static_cast<int>(rng.below(5));
        int c = 1 + static_cast<int>(rng.below(5));
        std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
        SMat m(r, c, FieldTag{0});
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                rows[i][j] = rng.range(-9, 9);
                m.at(i, j) = q(rows[i][j]);
            }
        CHECK(rank(m) == oracles::rational_rank(rows));
        SMat k = kernel_basis(m);
        CHECK(k.cols() == c - rank(m));
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("smith form on pinned examples") {
    check_smith(ZMat::from_rows({{2, 4}, {6, 8}}));
    SmithResult s = smith_normal_form(ZMat::from_rows({{2, 4}, {6, 8}}));
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);

    check_smith(ZMat::identity(3));
    check_smith(ZMat::from_rows({{0}}));
    check_smith(ZMat::from_rows({{0, 0}, {0, 0}}));
    check_smith(ZMat::from_rows({{6}}));
    check_smith(ZMat::from_rows({{2, 0}, {0, 3}}));  // gcd mixing: diag(1, 6)
    SmithResult t = smith_normal_form(ZMat::from_rows({{2, 0}, {0, 3}}));
    CHECK(t.d.at(0, 0) == 1);
    CHECK(t.d.at(1, 1) == 6);
    check_smith(ZMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
    check_smith(ZMat::from_rows({{3, 0}, {0, 0}, {0, 5}}));
}

TEST_CASE("smith form on random matrices") {
    CounterRng rng(99, 2);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng.below(6));
        int c = 1 + static_cast<int>(rng.below(6));
        ZMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rng.range(-20, 20);
        check_smith(m);
    }
}

TEST_CASE("column hermite form is canonical per lattice") {
    // Same lattice, shuffled and recombined generators.
    ZMat a = ZMat::from_rows({{2, 1, 0}, {0, 3, 0}, {4, 0, 5}});
    ZMat b = ZMat::from_rows({{1, 2, 3}, {3, 0, 3}, {0, 4, 9}});  // columns permuted + added
    CHECK(hnf_columns(a) == hnf_columns(b));

    ZMat h = hnf_columns(a);
    CHECK(lattice_contains(h, {2, 0, 4}));
    CHECK(lattice_contains(h, {3, 3, 4}));  // col0 + col1
    CHECK_FALSE(lattice_contains(h, {1, 0, 0}));

    std::vector<Int> y;
    REQUIRE(lattice_solve(h, {2, 0, 4}, y));
    std::vector<Int> back(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < h.cols(); ++j) back[i] += h.at(i, j) * y[j];
    CHECK(back == std::vector<Int>{2, 0, 4});

    // Zero columns are dropped; the zero lattice is a 0-column matrix.
    CHECK(hnf_columns(ZMat(3, 2)).cols() == 0);
}

TEST_CASE("random lattices: hermite form is generator-independent") {
    CounterRng rng(7, 3);
    for (int t = 0; t < 50; ++t) {
        int r = 1 + static_cast<int>(rng.below(4));
        int c = 1 + static_cast<int>(rng.below(4));
        ZMat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = rng.range(-8, 8);
        // Recombine columns with an invertible transformation: swap, add, negate.
        ZMat b = a;
        for (int step = 0; step < 6; ++step) {
            int j1 = static_cast<int>(rng.below(c)), j2 = static_cast<int>(rng.below(c));
            if (j1 == j2) {
                for (int i = 0; i < r; ++i) b.at(i, j1) = -b.at(i, j1);
            } else {
                Int k = rng.range(-3, 3);
                for (int i = 0; i < r; ++i) b.at(i, j1) += k * b.at(i, j2);
            }
        }
        CHECK(hnf_columns(a) == hnf_columns(b));
    }
}

TEST_CASE("presentations reduce to invariant factors") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6 canonically.
    PresentedGroup p = present(2, ZMat::from_rows({{2, 0}, {0, 3}}));
    CHECK(p.grp.inv == std::vector<Int>{6});
    // Coordinate translation round-trips.
    ZMat round = p.to_coords * p.from_coords;
    CHECK(round == ZMat::identity(p.grp.dim()));

    // Z^2 / <(2,4),(6,8)> = Z/2 + Z/4.
    PresentedGroup p2 = present(2, ZMat::from_rows({{2, 6}, {4, 8}}));
    CHECK(p2.grp.inv == std::vector<Int>{2, 4});

    // Torsion listed before free ranks.
    PresentedGroup p3 = present(3, ZMat::from_rows({{0, 0}, {2, 0}, {0, 0}}));
    CHECK(p3.grp.inv == std::vector<Int>{2, 0, 0});
}

TEST_CASE("kernels and cokernels of abelian maps") {
    AbGroup z{{0}}, z2{{2}}, z4{{4}};

    // x -> 2x : Z -> Z has kernel 0, cokernel Z/2.
    AbMap dbl{z, z, ZMat::from_rows({{2}})};
    CHECK(kernel(dbl).grp.is_zero());
    CHECK(cokernel(dbl).grp.inv == std::vector<Int>{2});

    // Z/4 -> Z/2 reduction: kernel Z/2, cokernel 0.
    AbMap red{z4, z2, ZMat::from_rows({{1}})};
    SubquotientPart k = kernel(red);
    CHECK(k.grp.inv == std::vector<Int>{2});
    // The kernel generator lands in {0, 2} inside Z/4.
    auto img = k.map.apply({1});
    CHECK(img == std::vector<Int>{2});
    CHECK(cokernel(red).grp.is_zero());

    // Z/2 -> Z/4 multiplication by 2: injective, cokernel Z/2.
    AbMap incl{z2, z4, ZMat::from_rows({{2}})};
    CHECK(kernel(incl).grp.is_zero());
    CHECK(cokernel(incl).grp.inv == std::vector<Int>{2});

    // Projection Z^2 -> Z: kernel Z, embedded as the complementary axis.
    AbGroup zz{{0, 0}};
    AbMap proj{zz, z, ZMat::from_rows({{1, 0}})};
    SubquotientPart k2 = kernel(proj);
    CHECK(k2.grp.inv == std::vector<Int>{0});
    auto gen = k2.map.apply({1});
    CHECK(gen[0] == 0);
    CHECK(abs(gen[1]) == 1);
}

TEST_CASE("exactness detection") {
    AbGroup z{{0}}, z2{{2}};
    AbMap dbl{z, z, ZMat::from_rows({{2}})};
    AbMap red{z, z2, ZMat::from_rows({{1}})};
    // 0 -> Z -2-> Z -> Z/2 -> 0
    CHECK(exact_at(dbl, red));
    CHECK(kernel(dbl).grp.is_zero());
    CHECK(cokernel(red).grp.is_zero());

    // Not exact: image 4Z inside kernel 2Z, proper.
    AbMap quad{z, z, ZMat::from_rows({{4}})};
    CHECK_FALSE(exact_at(quad, red));

    // Composite nonzero is also rejected.
    AbMap idz{z, z, ZMat::from_rows({{1}})};
    CHECK_FALSE(exact_at(idz, idz));
}

TEST_CASE("direct sums carry injections and projections") {
    AbGroup z2{{2}}, z3{{3}}, z{{0}};
    AbSum s = direct_sum({z2, z3, z});
    CHECK(s.total.inv == std::vector<Int>{6, 0});
    for (size_t i = 0; i < 3; ++i) {
        // out_i . in_i = id, out_j . in_i = 0.
        CHECK(compose(s.out[i], s.in[i]).m == ZMat::identity(s.in[i].src.dim()));
        for (size_t j = 0; j < 3; ++j)
            if (j != i) CHECK(compose(s.out[j], s.in[i]).is_zero());
    }
    // Sum of in_i . out_i is the identity on the total group.
    AbMap acc = ab_zero_map(s.total, s.total);
    for (size_t i = 0; i < 3; ++i) acc = ab_add(acc, compose(s.in[i], s.out[i]));
    AbMap diff{s.total, s.total, acc.m - ZMat::identity(s.total.dim())};
    CHECK(diff.is_zero());
}

TEST_CASE("hom groups match brute-force counts") {
    struct Pair {
        std::vector<std::int64_t> a, b;
    };
    std::vector<Pair> cases = {
        {{2}, {4}}, {{4}, {2}}, {{2, 4}, {2}}, {{6}, {4}}, {{2}, {3}}, {{12}, {18}}, {{2, 2}, {2, 4}},
    };
    for (const auto& c : cases) {
        AbGroup a, b;
        for (auto v : c.a) a.inv.push_back(v);
        for (auto v : c.b) b.inv.push_back(v);
        HomGroup h = hom_group(a, b);
        AbGroup hg = h.group();
        CHECK(hg.order() == oracles::count_hom_maps(c.a, c.b));
        // Every generator is a valid map of the right order.
        for (size_t k = 0; k < h.gens.size(); ++k) {
            std::vector<Int> coords(h.factor_inv.size(), 0);
            coords[k] = 1;
            AbMap f = h.element(coords);
            f.validate();
            CHECK_FALSE(f.is_zero());
            coords[k] = h.factor_inv[k];
            CHECK(h.element(coords).is_zero());
        }
    }
    // Hom(Z/2, Z/4) = Z/2 generated by x -> 2x.
    HomGroup h = hom_group(AbGroup{{2}}, AbGroup{{4}});
    CHECK(h.group().inv == std::vector<Int>{2});
    CHECK(h.element({1}).m == ZMat::from_rows({{2}}));
    // Hom(Z/2, Z) = 0, Hom(Z, Z/2) = Z/2, Hom(Z, Z) = Z.
    CHECK(hom_group(AbGroup{{2}}, AbGroup{{0}}).group().is_zero());
    CHECK(hom_group(AbGroup{{0}}, AbGroup{{2}}).group().inv == std::vector<Int>{2});
    CHECK(hom_group(AbGroup{{0}}, AbGroup{{0}}).group().inv == std::vector<Int>{0});
}

TEST_CASE("counter rng replays exactly and separates streams") {
    CounterRng a(42, 0), b(42, 0), c(42, 1);
    std::uint64_t a1 = a.next(), a2 = a.next();
    CHECK(a1 == b.next());
    CHECK(a2 == b.next());
    CHECK(a1 != c.next());
    for (int i = 0; i < 100; ++i) {
        std::int64_t v = a.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
