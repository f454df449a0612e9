#include <doctest.h>

#include "pencil.hpp"

using namespace qpair;

namespace {

const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();

std::vector<Zeta> twelve_sample_zetas() {
    std::vector<Zeta> zs;
    for (long t = -2; t <= 3; ++t) zs.push_back(GaussianRational(Rational(t)));
    zs.push_back(GaussianRational(Rational(1, 2)));
    zs.push_back(GaussianRational(Rational(1, 2), Rational(1, 2)));
    zs.push_back(GaussianRational(Rational(0), Rational(1)));
    zs.push_back(GaussianRational(Rational(-2, 3), Rational(5)));
    zs.push_back(GaussianRational(Rational(7), Rational(-1, 4)));
    zs.push_back(zeta_infinity());
    return zs;
}

}  // namespace

TEST_CASE("eigensections satisfy the defining eigenvalue property") {
    for (long k : {1L, 2L, 3L})
        for (const Zeta& z : twelve_sample_zetas()) CHECK_NOTHROW(eigensection_check(k, z));

    SUBCASE("evaluated sections at zeta = 0 span the expected eigenspace") {
        auto [v, w] = eigensections(1);
        // columns at [1:0] are the v-parts: (1, I, 0, 0) and (0, 0, 1, I)
        CHECK(v(0, 0).is_one());
        CHECK(v(1, 0) == GaussianRational::i_unit());
        CHECK(v(2, 1).is_one());
        CHECK(v(3, 1) == GaussianRational::i_unit());
    }
    SUBCASE("a corrupted section fails the check") {
        auto [v, w] = eigensections(1);
        MatrixG bad = v;
        bad(1, 0) = -bad(1, 0);
        CHECK_THROWS_AS(eigensection_check_with(1, GaussianRational(0), bad, w), internal_error);
    }
}

TEST_CASE("pencil construction") {
    SUBCASE("(0, H): the quotient is the identity") {
        Pair zero(1, MatrixQ(0, 4));
        Pencil p = build_pencil(zero);
        CHECK(p.m == 4);
        auto [v, w] = eigensections(1);
        CHECK(p.a == v);
        CHECK(p.b == w);
    }
    SUBCASE("(H, H): empty pencil") {
        Pair hh = dual(Pair(1, MatrixQ(0, 4)));
        Pencil p = build_pencil(hh);
        CHECK(p.m == 0);
    }
    SUBCASE("(R, H): rank 2 at the base point, no kernel") {
        Pair ru(1, [&] {
            MatrixQ m(1, 4);
            m(0, 0) = Rational(1);
            return m;
        }());
        Pencil p = build_pencil(ru);
        CHECK(p.m == 3);
        CP1Point base(GaussianRational(1), GaussianRational(0));
        CHECK(rank(evaluate(p, base)) == 2);
        CHECK(fiber_kernel_dim(p, base) == 0);
    }
}

TEST_CASE("evaluate endpoints and scaling invariance") {
    Pencil p = build_pencil(gen_W(1, SpherePoint(qj)));
    CHECK(evaluate(p, CP1Point(GaussianRational(1), GaussianRational(0))) == p.a);
    CHECK(evaluate(p, CP1Point(GaussianRational(0), GaussianRational(1))) == p.b);
    CP1Point x(GaussianRational(2), GaussianRational(Rational(1), Rational(3)));
    CP1Point x2(x.z0 * GaussianRational(Rational(5)), x.z1 * GaussianRational(Rational(5)));
    CHECK(rank(evaluate(p, x)) == rank(evaluate(p, x2)));
    CHECK_THROWS_AS(CP1Point(GaussianRational(0), GaussianRational(0)), domain_error);
}

TEST_CASE("reality structure") {
    for (long k : {1L, 2L, 3L}) {
        MatrixG c = reality_twist(k);
        CHECK(c * conj(c) == -MatrixG::identity(2 * k));
    }
    for (const Pair& p : {gen_U(1), gen_V(1), gen_W(2, SpherePoint(qj)), dual(gen_U(0))}) {
        Pencil pen = build_pencil(p);
        CHECK_NOTHROW(reality_check(pen));
        // rank drops come in antipodal pairs
        for (const Zeta& z : twelve_sample_zetas()) {
            CP1Point x = CP1Point::from_zeta(z);
            CHECK(rank(evaluate(pen, x)) == rank(evaluate(pen, x.antipode())));
        }
    }
}

TEST_CASE("fiber kernel dimensions") {
    Pencil w = build_pencil(gen_W(1, SpherePoint(qj)));
    CHECK(fiber_kernel_dim(w, CP1Point::from_zeta(GaussianRational(1))) == 1);
    CHECK(fiber_kernel_dim(w, CP1Point::from_zeta(GaussianRational(0))) == 0);
    Pencil hh = build_pencil(dual(Pair(1, MatrixQ(0, 4))));
    for (const Zeta& z : twelve_sample_zetas())
        CHECK(fiber_kernel_dim(hh, CP1Point::from_zeta(z)) == 2);

    SUBCASE("two independent computations of the fiber kernel agree") {
        for (const Pair& p :
             {gen_U(1), gen_V(1), gen_W(1, SpherePoint(qi)), gen_W(2, SpherePoint(qj)),
              dual(gen_U(1)), product(gen_U(0), gen_W(1, SpherePoint(qj)))}) {
            Pencil pen = build_pencil(p);
            for (const Zeta& z : twelve_sample_zetas())
                CHECK(2 * fiber_kernel_dim(pen, CP1Point::from_zeta(z)) ==
                      intersection_dim(p, sphere_point_from_zeta(z)));
        }
    }
}

TEST_CASE("generic rank and rank drops") {
    Pair ru(1, [&] {
        MatrixQ m(1, 4);
        m(0, 0) = Rational(1);
        return m;
    }());
    CHECK(generic_rank(build_pencil(ru)) == 2);
    Pencil w = build_pencil(gen_W(1, SpherePoint(qj)));
    CHECK(generic_rank(w) == 2);
    // drops exactly at zeta = 1 and zeta = -1 (the points of +-j)
    for (long t = -3; t <= 3; ++t) {
        long r = static_cast<long>(rank(evaluate(w, CP1Point::from_zeta(GaussianRational(Rational(t))))));
        CHECK(r == ((t == 1 || t == -1) ? 1 : 2));
    }
    CHECK(generic_rank(build_pencil(dual(Pair(1, MatrixQ(0, 4))))) == 0);
}

TEST_CASE("rotate_generic") {
    Pencil already = build_pencil(gen_W(1, SpherePoint(qj)));
    auto [same, rot] = rotate_generic(already);
    CHECK(rot.is_identity());

    // support {0, inf}: infinity must move
    Pencil at_inf = build_pencil(gen_W(1, SpherePoint(qi)));
    CP1Point inf(GaussianRational(0), GaussianRational(1));
    CHECK(rank(evaluate(at_inf, inf)) < generic_rank(at_inf));
    auto [moved, rot2] = rotate_generic(at_inf);
    CHECK(!rot2.is_identity());
    CHECK(static_cast<long>(rank(evaluate(moved, inf))) == generic_rank(at_inf));
    CHECK(generic_rank(moved) == generic_rank(at_inf));
}

TEST_CASE("moebius matrix matches the conjugation action pointwise") {
    const auto& rots = rotation_attempt_list();
    std::vector<Rotation> sample = {rots[1], rots[2], Rotation(Quaternion(
        Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)))};
    for (const Rotation& g : sample) {
        MatrixG m = moebius_matrix(g);
        for (const Zeta& z : twelve_sample_zetas()) {
            SpherePoint u = sphere_point_from_zeta(z);
            SpherePoint moved(g.g * u.u * g.g.inverse());
            CP1Point image = CP1Point::from_zeta(zeta_from_sphere_point(moved));
            CP1Point src = CP1Point::from_zeta(z);
            CP1Point mapped(m(0, 0) * src.z0 + m(0, 1) * src.z1,
                            m(1, 0) * src.z0 + m(1, 1) * src.z1);
            CHECK(mapped.proportional_to(image));
        }
    }
}

TEST_CASE("pencil golden values for (R, H)") {
    // hand-derived: the canonical quotient keeps the (i, j, k) coordinates, so
    //   A = [[I,0],[0,1],[0,I]]   B = [[0,-1],[I,0],[1,0]]
    Pair ru(1, [&] {
        MatrixQ m(1, 4);
        m(0, 0) = Rational(1);
        return m;
    }());
    Pencil p = build_pencil(ru);
    const GaussianRational one(1), eye = GaussianRational::i_unit();
    MatrixG a(3, 2), b(3, 2);
    a(0, 0) = eye;
    a(1, 1) = one;
    a(2, 1) = eye;
    b(0, 1) = -one;
    b(1, 0) = eye;
    b(2, 0) = one;
    CHECK(p.a == a);
    CHECK(p.b == b);
}

TEST_CASE("rank profiles are equivariant under the scalar action") {
    Pair p = product(gen_W(1, SpherePoint(qj)), gen_U(0));
    Quaternion a(Rational(3, 5), Rational(0), Rational(4, 5), Rational(0));
    Automorphism phi(a, Matrix<Quaternion>::identity(p.k()));
    Pair moved = act(phi, p);
    Pencil pen = build_pencil(p), pen2 = build_pencil(moved);
    for (const Zeta& z : twelve_sample_zetas()) {
        SpherePoint u = sphere_point_from_zeta(z);
        SpherePoint rotated(a * u.u * a.inverse());
        CHECK(rank(evaluate(pen, CP1Point::from_zeta(z))) ==
              rank(evaluate(pen2, CP1Point::from_zeta(zeta_from_sphere_point(rotated)))));
    }
}
