#include <doctest.h>

#include <random>

#include "pair.hpp"

using namespace qpair;

namespace {

Pair pair1(std::vector<std::vector<Quaternion>> rows, long k) { return Pair(k, rows); }

const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();

}  // namespace

TEST_CASE("pair validation and normalization") {
    Pair p = pair1({{Quaternion(1)}}, 1);
    CHECK(p.dim() == 1);
    CHECK_THROWS_AS(pair1({{Quaternion(1)}, {Quaternion(2)}}, 1), domain_error);
    Pair p2 = pair1({{Quaternion(1), Quaternion(0)}, {Quaternion(0), qj}}, 2);
    CHECK(p2.dim() == 2);
    // normalization is idempotent: rebuilding from the stored basis is a no-op
    Pair renorm(p2.k(), p2.basis());
    CHECK(renorm == p2);
    CHECK_THROWS_AS(pair1({{Quaternion(1), Quaternion(0)}}, 3), domain_error);
}

TEST_CASE("dual is the orthogonal complement") {
    Pair ru = pair1({{Quaternion(1)}}, 1);
    Pair d = dual(ru);
    CHECK(d.dim() == 3);
    MatrixQ expected(3, 4);
    expected(0, 1) = Rational(1);
    expected(1, 2) = Rational(1);
    expected(2, 3) = Rational(1);
    CHECK(subspaces_equal(d.basis(), expected));

    Pair zero2(2, MatrixQ(0, 8));
    CHECK(dual(zero2).dim() == 8);

    Pair g = gen_U(1);
    CHECK(dual(dual(g)) == g);
    CHECK(dual(g).dim() == 4 * g.k() - g.dim());
}

TEST_CASE("products concatenate and straighten the second factor") {
    Pair ru = pair1({{Quaternion(1)}}, 1);
    Pair zero(1, MatrixQ(0, 4));
    Pair p = product(ru, zero);
    CHECK(p.k() == 2);
    CHECK(p.dim() == 1);
    CHECK(p.basis()(0, 0) == Rational(1));

    Pair big = product(gen_U(1), gen_W(1, SpherePoint(qj)));
    CHECK(big.dim() == 3 + 2);
    CHECK(big.k() == 3);

    // rotation g = (1+i+j+k)/2 multiplies the second block by g^-1 on the left
    Quaternion g(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
    Pair rotated = product(ru, ru, Rotation(g));
    MatrixQ expected(2, 8);
    expected(0, 0) = Rational(1);
    auto coords = g.inverse().coords();
    for (int t = 0; t < 4; ++t) expected(1, 4 + t) = coords[t];
    CHECK(subspaces_equal(rotated.basis(), expected));
}

TEST_CASE("automorphism action") {
    Pair ru = pair1({{Quaternion(1)}}, 1);
    Automorphism id(Quaternion(1), Matrix<Quaternion>::identity(1));
    CHECK(act(id, ru) == ru);

    Automorphism ai(qi, Matrix<Quaternion>::identity(1));
    Pair moved = act(ai, ru);
    MatrixQ expected(1, 4);
    expected(0, 1) = Rational(1);
    CHECK(subspaces_equal(moved.basis(), expected));

    Pair v1 = gen_V(1);
    Automorphism phi = random_automorphism(v1.k(), 3);
    CHECK(act(phi, v1).dim() == v1.dim());

    Matrix<Quaternion> singular(1, 1);  // zero matrix
    CHECK_THROWS_AS(Automorphism(Quaternion(1), singular), domain_error);
}

TEST_CASE("sphere point chart") {
    CHECK(sphere_point_from_zeta(GaussianRational(0)).u == qi);
    CHECK(sphere_point_from_zeta(zeta_infinity()).u == -qi);
    CHECK(sphere_point_from_zeta(GaussianRational(1)).u == qj);
    CHECK(sphere_point_from_zeta(GaussianRational(Rational(0), Rational(1))).u == qk);
    // antipode law: u(-1/conj(zeta)) = -u(zeta)
    for (const Zeta& z : {Zeta(GaussianRational(Rational(2), Rational(-3))),
                          Zeta(GaussianRational(Rational(1, 2))), Zeta(GaussianRational(0))}) {
        SpherePoint u = sphere_point_from_zeta(z);
        SpherePoint anti = sphere_point_from_zeta(zeta_antipode(z));
        CHECK(anti.u == -u.u);
        CHECK(zeta_equal(zeta_from_sphere_point(u), z));
    }
    CHECK_THROWS_AS(SpherePoint(Quaternion(1, 0, 0, 0)), domain_error);
    CHECK_THROWS_AS(SpherePoint(Quaternion(0, 2, 0, 0)), domain_error);
}

TEST_CASE("gen_U models") {
    Pair u0 = gen_U(0);
    CHECK(u0.k() == 1);
    CHECK(u0.dim() == 1);

    Pair u1 = gen_U(1);
    CHECK(u1.k() == 2);
    CHECK(u1.dim() == 3);
    // contains (1,0), (0,1) and e_1 = (q_1, q_2) = (i, j) for the defaults
    MatrixQ e1(1, 8);
    e1(0, 1) = Rational(1);
    e1(0, 6) = Rational(1);
    CHECK(subspace_contains(u1.basis(), e1.row(0)));

    CHECK(gen_U(2).dim() == 5);
    CHECK(gen_U(3).dim() == 7);

    std::vector<Zeta> bad = {Zeta(GaussianRational(0)), Zeta(GaussianRational(0))};
    CHECK_THROWS_AS(gen_U(1, &bad), domain_error);
    std::vector<Zeta> antip = {Zeta(GaussianRational(0)), zeta_infinity()};
    CHECK_THROWS_AS(gen_U(1, &antip), domain_error);
}

TEST_CASE("gen_V models") {
    Pair v0 = gen_V(0);
    CHECK(v0.k() == 1);
    CHECK(v0.dim() == 0);

    Pair v1 = gen_V(1);
    CHECK(v1.k() == 3);
    CHECK(v1.dim() == 4);
    // z1 = 1 gives (1, 1, 0); z2 = 1 gives (0, j, -j)
    std::vector<Quaternion> a = {Quaternion(1), Quaternion(1), Quaternion(0)};
    std::vector<Quaternion> b = {Quaternion(0), qj, -qj};
    CHECK(subspace_contains(v1.basis(), quaternions_to_row(a)));
    CHECK(subspace_contains(v1.basis(), quaternions_to_row(b)));

    CHECK(gen_V(2).dim() == 8);
    CHECK(gen_V(2).k() == 5);
}

TEST_CASE("gen_W models") {
    Pair w1j = gen_W(1, SpherePoint(qj));
    CHECK(w1j.dim() == 2);
    CHECK(subspace_contains(w1j.basis(), quaternions_to_row({Quaternion(1)})));
    CHECK(subspace_contains(w1j.basis(), quaternions_to_row({qj})));

    Pair w1i = gen_W(1, SpherePoint(qi));
    CHECK(subspace_contains(w1i.basis(), quaternions_to_row({qi})));

    // k = 2: substituting unit parameter values in the defining span
    Pair w2 = gen_W(2, SpherePoint(qj));
    CHECK(w2.dim() == 4);
    for (const auto& v : std::vector<std::vector<Quaternion>>{
             {Quaternion(1), Quaternion(0)},
             {qj, Quaternion(0)},
             {qi, qj},
             {Quaternion(0), Quaternion(1)}})
        CHECK(subspace_contains(w2.basis(), quaternions_to_row(v)));
    CHECK_THROWS_AS(gen_W(0, SpherePoint(qj)), domain_error);
}

TEST_CASE("intersection dimension") {
    Pair w1j = gen_W(1, SpherePoint(qj));
    CHECK(intersection_dim(w1j, SpherePoint(qj)) == 2);
    CHECK(intersection_dim(w1j, SpherePoint(qi)) == 0);
    Pair hh = dual(gen_V(0));
    for (const auto& z : {Zeta(GaussianRational(0)), Zeta(GaussianRational(5))})
        CHECK(intersection_dim(hh, sphere_point_from_zeta(z)) == 4);

    SUBCASE("even and equivariant under the scalar action") {
        Pair p = gen_W(2, SpherePoint(qk));
        std::vector<Zeta> samples = {Zeta(GaussianRational(0)), Zeta(GaussianRational(1)),
                                     Zeta(GaussianRational(Rational(0), Rational(1))),
                                     Zeta(GaussianRational(Rational(1, 3)))};
        Quaternion a(Rational(3, 5), Rational(4, 5), Rational(0), Rational(0));
        Automorphism phi(a, Matrix<Quaternion>::identity(p.k()));
        Pair moved = act(phi, p);
        for (const Zeta& z : samples) {
            SpherePoint u = sphere_point_from_zeta(z);
            long d = intersection_dim(p, u);
            CHECK(d % 2 == 0);
            SpherePoint rotated(a * u.u * a.inverse());
            CHECK(intersection_dim(moved, rotated) == d);
        }
    }
}

TEST_CASE("complex decomposition") {
    // U = C^1 in C^1
    MatrixQ full(2, 2);
    full(0, 0) = Rational(1);
    full(1, 1) = Rational(1);
    ComplexDecomposition d1 = complex_decompose(ComplexPair(1, full));
    CHECK(d1.m == 1);
    CHECK(d1.l == 0);
    CHECK(d1.z == 0);

    MatrixQ line(1, 2);
    line(0, 0) = Rational(1);
    ComplexDecomposition d2 = complex_decompose(ComplexPair(1, line));
    CHECK(d2.m == 0);
    CHECK(d2.l == 1);
    CHECK(d2.z == 0);

    // span{1, I} + span{e2} in C^2
    MatrixQ mixed(3, 4);
    mixed(0, 0) = Rational(1);
    mixed(1, 1) = Rational(1);
    mixed(2, 2) = Rational(1);
    ComplexDecomposition d3 = complex_decompose(ComplexPair(2, mixed));
    CHECK(d3.m == 1);
    CHECK(d3.l == 1);
    CHECK(d3.z == 0);

    SUBCASE("invariant under invertible complex-linear maps") {
        std::mt19937_64 eng(9);
        for (int t = 0; t < 10; ++t) {
            long n = 2 + long(eng() % 2);
            long dim = long(eng() % (2 * n + 1));
            MatrixQ rows(dim, 2 * n);
            for (long r = 0; r < dim; ++r)
                for (long c = 0; c < 2 * n; ++c)
                    rows(r, c) = Rational(long(eng() % 7) - 3, 1 + long(eng() % 2));
            if (dim && rank(rows) != std::size_t(dim)) { --t; continue; }
            ComplexPair cp(n, rows);
            ComplexDecomposition base = complex_decompose(cp);
            // a complex-linear map acts on (re, im) coordinates by 2x2 blocks
            MatrixQ real_rep(2 * n, 2 * n);
            for (long rr = 0; rr < n; ++rr)
                for (long cc = 0; cc < n; ++cc) {
                    long re = long(eng() % 5) - 2, im = long(eng() % 5) - 2;
                    if (rr == cc && re == 0) re = 1;
                    real_rep(2 * rr, 2 * cc) = Rational(re);
                    real_rep(2 * rr + 1, 2 * cc + 1) = Rational(re);
                    real_rep(2 * rr, 2 * cc + 1) = Rational(-im);
                    real_rep(2 * rr + 1, 2 * cc) = Rational(im);
                }
            if (rank(real_rep) != std::size_t(2 * n)) { --t; continue; }
            ComplexPair moved(n, rows * real_rep.transpose());
            ComplexDecomposition after = complex_decompose(moved);
            CHECK(after.m == base.m);
            CHECK(after.l == base.l);
            CHECK(after.z == base.z);
        }
    }
}

TEST_CASE("random automorphisms are deterministic in the seed") {
    Automorphism a1 = random_automorphism(2, 0);
    Automorphism a2 = random_automorphism(2, 0);
    CHECK(a1.a == a2.a);
    CHECK(a1.matrix == a2.matrix);
    Pair p = gen_U(1);
    CHECK(act(a1, p) == act(a2, p));
    CHECK(rank(right_action_matrix(a1.matrix)) == 8);
    // golden value for the scalar part at seed 0
    Automorphism g = random_automorphism(1, 0);
    CHECK(g.a.norm2() == Rational(1));
    CHECK(g.a == random_automorphism(1, 0).a);
}

TEST_CASE("unit quaternion and rotation tables") {
    const auto& table = unit_quaternion_table();
    CHECK(table.size() >= 40);
    for (std::size_t t = 0; t < 20; ++t) CHECK(table[t].norm2() == Rational(1));
    const auto& rots = rotation_attempt_list();
    CHECK(rots.size() >= 33);  // enough distinct moves of infinity for k <= 16
    CHECK(rots[0].is_identity());
    // pairwise distinct images of the point at infinity
    std::vector<Quaternion> images;
    for (const auto& g : rots) {
        Quaternion img = g.g * (-Quaternion::unit_i()) * g.g.inverse();
        for (const auto& o : images) CHECK(!(o == img));
        images.push_back(img);
    }
}

TEST_CASE("max dimension cap from the environment") {
    CHECK(max_quaternionic_dimension() >= 1);
    CHECK_THROWS_AS(Pair(max_quaternionic_dimension() + 1,
                         MatrixQ(0, 4 * (max_quaternionic_dimension() + 1))),
                    domain_error);
}
