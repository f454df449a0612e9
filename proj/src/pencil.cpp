#include "pencil.hpp"

namespace qpair {

CP1Point::CP1Point(GaussianRational a, GaussianRational b) : z0(std::move(a)), z1(std::move(b)) {
    if (z0.is_zero() && z1.is_zero()) throw domain_error("[0:0] is not a projective point");
}

CP1Point CP1Point::from_zeta(const Zeta& z) {
    if (!z.has_value()) return CP1Point(GaussianRational(0), GaussianRational(1));
    return CP1Point(GaussianRational(1), *z);
}

Zeta CP1Point::zeta() const {
    if (z0.is_zero()) return zeta_infinity();
    return z1 / z0;
}

std::pair<MatrixG, MatrixG> eigensections(long k) {
    const GaussianRational one(1), eye = GaussianRational::i_unit();
    MatrixG v(4 * k, 2 * k), w(4 * k, 2 * k);
    for (long s = 0; s < k; ++s) {
        long r = 4 * s, c = 2 * s;
        v(r + 0, c) = one;
        v(r + 1, c) = eye;
        v(r + 2, c + 1) = one;
        v(r + 3, c + 1) = eye;
        w(r + 2, c) = eye;
        w(r + 3, c) = one;
        w(r + 0, c + 1) = -eye;
        w(r + 1, c + 1) = -one;
    }
    return {v, w};
}

void eigensection_check_with(long k, const Zeta& z, const MatrixG& v, const MatrixG& w) {
    CP1Point x = CP1Point::from_zeta(z);
    MatrixG eval = v.scaled(x.z0) + w.scaled(x.z1);
    SpherePoint u = sphere_point_from_zeta(z);
    MatrixG lu = complexify(block_left_mult(u.u, k));
    MatrixG residual = lu * eval + eval.scaled(GaussianRational::i_unit());
    if (!residual.is_zero())
        throw internal_error("eigensection check failed: sections do not span the -I eigenspace");
    if (rank(eval) != static_cast<std::size_t>(2 * k))
        throw internal_error("eigensection check failed: evaluated sections are dependent");
}

void eigensection_check(long k, const Zeta& z) {
    auto [v, w] = eigensections(k);
    eigensection_check_with(k, z, v, w);
}

namespace {

/// Quotient map with kernel exactly U: identity on the non-pivot coordinates
/// after subtracting the pivot-row reductions.
MatrixQ echelon_complement_quotient(const Pair& p) {
    const MatrixQ& b = p.basis();
    long n = 4 * p.k();
    std::vector<long> pivot_of_row(b.rows(), -1);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (long c = 0; c < n; ++c)
            if (!b(r, c).is_zero()) {
                pivot_of_row[r] = c;
                is_pivot[c] = true;
                break;
            }
    long m = n - static_cast<long>(b.rows());
    MatrixQ q(m, n);
    long row = 0;
    for (long f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        q(row, f) = Rational(1);
        for (std::size_t r = 0; r < b.rows(); ++r) q(row, pivot_of_row[r]) = -b(r, f);
        ++row;
    }
    return q;
}

}  // namespace

Pencil build_pencil_with_quotient(const Pair& p, const MatrixQ& quotient_rows) {
    long m = 4 * p.k() - p.dim();
    if (quotient_rows.rows() != static_cast<std::size_t>(m) ||
        (m > 0 && quotient_rows.cols() != static_cast<std::size_t>(4 * p.k())))
        throw domain_error("quotient map has wrong shape");
    if (rank(quotient_rows) != static_cast<std::size_t>(m))
        throw domain_error("quotient map is not surjective");
    if (p.dim() > 0) {
        MatrixQ image = p.basis() * quotient_rows.transpose();
        if (!image.is_zero()) throw domain_error("quotient map does not annihilate the subspace");
    }
    auto [v, w] = eigensections(p.k());
    MatrixG qc = complexify(quotient_rows);
    Pencil out{p.k(), m, qc * v, qc * w, p};
    return out;
}

Pencil build_pencil(const Pair& p) {
    return build_pencil_with_quotient(p, echelon_complement_quotient(p));
}

MatrixG evaluate(const Pencil& p, const CP1Point& x) {
    return p.a.scaled(x.z0) + p.b.scaled(x.z1);
}

MatrixG reality_twist(long k) {
    const GaussianRational eye = GaussianRational::i_unit();
    MatrixG c(2 * k, 2 * k);
    for (long s = 0; s < k; ++s) {
        c(2 * s, 2 * s + 1) = eye;
        c(2 * s + 1, 2 * s) = -eye;
    }
    return c;
}

void reality_check(const Pencil& p) {
    MatrixG c = reality_twist(p.k);
    MatrixG cc = c * conj(c);
    MatrixG minus_id = -MatrixG::identity(2 * p.k);
    if (!(cc == minus_id))
        throw internal_error("reality check failed: twist is not of quaternionic type");
    // conj(P(-conj z1, conj z0)) = P(z0, z1) C, coefficientwise:
    //   conj(B) = A C   and   -conj(A) = B C
    if (!(conj(p.b) == p.a * c) || !(conj(p.a).scaled(GaussianRational(-1)) == p.b * c))
        throw internal_error("reality check failed: pencil does not cover the antipodal map");
}

long fiber_kernel_dim(const Pencil& p, const CP1Point& x) {
    return 2 * p.k - static_cast<long>(rank(evaluate(p, x)));
}

long generic_rank(const Pencil& p) {
    long best = 0;
    for (long t = 0; t <= 2 * p.k; ++t) {
        CP1Point x(GaussianRational(1), GaussianRational(Rational(t)));
        long r = static_cast<long>(rank(evaluate(p, x)));
        if (r > best) best = r;
    }
    return best;
}

std::pair<Pencil, Rotation> rotate_generic(const Pencil& p) {
    long target = generic_rank(p);
    CP1Point inf(GaussianRational(0), GaussianRational(1));
    for (const Rotation& g : rotation_attempt_list()) {
        Pencil cand = g.is_identity()
                          ? p
                          : build_pencil(act(Automorphism(g.g, Matrix<Quaternion>::identity(p.k)),
                                             p.source));
        if (static_cast<long>(rank(evaluate(cand, inf))) == target) return {cand, g};
    }
    throw internal_error("no rotation in the attempt list makes infinity generic");
}

MatrixG moebius_matrix(const Rotation& g) {
    auto image_point = [&](const Zeta& z) {
        SpherePoint u = sphere_point_from_zeta(z);
        SpherePoint moved(g.g * u.u * g.g.inverse());
        return CP1Point::from_zeta(zeta_from_sphere_point(moved));
    };
    CP1Point t0 = image_point(GaussianRational(0));
    CP1Point t1 = image_point(GaussianRational(1));
    CP1Point ti = image_point(zeta_infinity());
    // alpha t0 + beta ti = t1 fixes the projective scaling of the columns
    GaussianRational det = t0.z0 * ti.z1 - t0.z1 * ti.z0;
    if (det.is_zero()) throw internal_error("degenerate triple in Moebius construction");
    GaussianRational alpha = (t1.z0 * ti.z1 - t1.z1 * ti.z0) / det;
    GaussianRational beta = (t0.z0 * t1.z1 - t0.z1 * t1.z0) / det;
    MatrixG m(2, 2);
    m(0, 0) = alpha * t0.z0;
    m(1, 0) = alpha * t0.z1;
    m(0, 1) = beta * ti.z0;
    m(1, 1) = beta * ti.z1;
    return m;
}

}  // namespace qpair
