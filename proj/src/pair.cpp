#include "pair.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

namespace qpair {

Zeta zeta_antipode(const Zeta& z) {
    if (!z.has_value()) return GaussianRational(0);
    if (z->is_zero()) return zeta_infinity();
    return -(z->conj().inverse());
}

bool zeta_equal(const Zeta& a, const Zeta& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a.has_value() || *a == *b;
}

std::string zeta_to_string(const Zeta& z) {
    if (!z.has_value()) return "inf";
    if (z->im.is_zero()) return z->re.to_string();
    return z->re.to_string() + "," + z->im.to_string();
}

Zeta zeta_from_string(const std::string& s) {
    if (s == "inf" || s == "oo") return zeta_infinity();
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) return GaussianRational(Rational::from_string(s));
    return GaussianRational(Rational::from_string(s.substr(0, comma)),
                            Rational::from_string(s.substr(comma + 1)));
}

SpherePoint::SpherePoint(Quaternion q) : u(std::move(q)) {
    if (!u.r.is_zero()) throw domain_error("sphere point must be purely imaginary");
    if (u.norm2() != Rational(1)) throw domain_error("sphere point must have unit norm");
}

SpherePoint sphere_point_from_zeta(const Zeta& z) {
    if (!z.has_value()) return SpherePoint(-Quaternion::unit_i());
    const Rational& x = z->re;
    const Rational& y = z->im;
    Rational n = x * x + y * y;
    Rational d = (Rational(1) + n).inverse();
    return SpherePoint(Quaternion(Rational(0), (Rational(1) - n) * d, Rational(2) * x * d,
                                  Rational(2) * y * d));
}

Zeta zeta_from_sphere_point(const SpherePoint& p) {
    Rational d = Rational(1) + p.u.i;
    if (d.is_zero()) return zeta_infinity();
    return GaussianRational(p.u.j / d, p.u.k / d);
}

Rotation::Rotation(Quaternion q) : g(std::move(q)) {
    if (g.norm2() != Rational(1)) throw domain_error("rotation quaternion must have unit norm");
}

Automorphism::Automorphism(Quaternion a_, Matrix<Quaternion> m)
    : a(std::move(a_)), matrix(std::move(m)) {
    if (a.norm2() != Rational(1)) throw domain_error("automorphism scalar must have unit norm");
    if (matrix.rows() != matrix.cols()) throw domain_error("automorphism matrix must be square");
    if (rank(right_action_matrix(matrix)) != 4 * matrix.rows())
        throw domain_error("automorphism matrix not invertible");
}

long max_quaternionic_dimension() {
    if (const char* env = std::getenv("QPAIR_MAX_K")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 16;
}

namespace {

MatrixQ quaternion_rows_to_matrix(long k, const std::vector<std::vector<Quaternion>>& basis) {
    MatrixQ m(basis.size(), 4 * k);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (basis[r].size() != static_cast<std::size_t>(k))
            throw domain_error("basis vector length does not match quaternionic dimension");
        m.set_row(r, quaternions_to_row(basis[r]));
    }
    return m;
}

}  // namespace

Pair::Pair(long k, const std::vector<std::vector<Quaternion>>& basis)
    : Pair(k, quaternion_rows_to_matrix(k, basis)) {}

Pair::Pair(long k, const MatrixQ& basis_rows) : k_(k) {
    if (k < 0) throw domain_error("negative quaternionic dimension");
    if (k > max_quaternionic_dimension())
        throw domain_error("quaternionic dimension exceeds QPAIR_MAX_K cap");
    if (basis_rows.rows() > 0 && basis_rows.cols() != static_cast<std::size_t>(4 * k))
        throw domain_error("basis width does not match quaternionic dimension");
    MatrixQ w = basis_rows.rows() ? basis_rows : MatrixQ(0, 4 * k);
    std::size_t in_rows = w.rows();
    basis_ = row_space_basis(w);
    if (basis_.rows() != in_rows) throw domain_error("dependent subspace basis");
}

Pair dual(const Pair& p) {
    auto ker = kernel_basis(p.basis());
    MatrixQ rows(ker.size(), 4 * p.k());
    for (std::size_t r = 0; r < ker.size(); ++r) rows.set_row(r, ker[r]);
    return Pair(p.k(), rows);
}

Pair product(const Pair& p, const Pair& q, const Rotation& t) {
    long k = p.k() + q.k();
    MatrixQ rows(p.dim() + q.dim(), 4 * k);
    for (long r = 0; r < p.dim(); ++r)
        for (long c = 0; c < 4 * p.k(); ++c) rows(r, c) = p.basis()(r, c);
    // straighten the second factor: left-multiply by g^-1 slotwise
    MatrixQ qb = q.basis();
    if (!t.is_identity()) {
        MatrixQ l = block_left_mult(t.g.inverse(), q.k());
        qb = qb * l.transpose();
    }
    for (long r = 0; r < q.dim(); ++r)
        for (long c = 0; c < 4 * q.k(); ++c) rows(p.dim() + r, 4 * p.k() + c) = qb(r, c);
    return Pair(k, rows);
}

Pair act(const Automorphism& phi, const Pair& p) {
    if (phi.matrix.rows() != static_cast<std::size_t>(p.k()))
        throw domain_error("automorphism dimension mismatch");
    MatrixQ m = p.basis() * right_action_matrix(phi.matrix).transpose();
    m = m * block_left_mult(phi.a, p.k()).transpose();
    return Pair(p.k(), m);
}

Pair gen_U(long k, const std::vector<Zeta>* zetas) {
    if (k < 0) throw domain_error("gen_U requires k >= 0");
    std::vector<Zeta> zs;
    if (zetas) {
        zs = *zetas;
        if (zs.size() != static_cast<std::size_t>(k + 1))
            throw domain_error("gen_U requires k+1 parameters");
    } else {
        for (long t = 0; t <= k; ++t) zs.push_back(GaussianRational(Rational(t)));
    }
    for (std::size_t a = 0; a < zs.size(); ++a)
        for (std::size_t b = a + 1; b < zs.size(); ++b) {
            if (zeta_equal(zs[a], zs[b])) throw domain_error("gen_U parameters must be distinct");
            if (zeta_equal(zeta_antipode(zs[a]), zs[b]))
                throw domain_error("gen_U parameters must be pairwise non-antipodal");
        }
    std::vector<Quaternion> pts;
    for (const auto& z : zs) pts.push_back(sphere_point_from_zeta(z).u);
    std::vector<std::vector<Quaternion>> rows;
    for (long s = 0; s <= k; ++s) {
        std::vector<Quaternion> v(k + 1);
        v[s] = Quaternion(1);
        rows.push_back(v);
    }
    for (long e = 0; e < k; ++e) {
        std::vector<Quaternion> v(k + 1);
        v[e] = pts[e];
        v[e + 1] = pts[e + 1];
        rows.push_back(v);
    }
    return Pair(k + 1, rows);
}

Pair gen_V(long k) {
    if (k < 0) throw domain_error("gen_V requires k >= 0");
    long slots = 2 * k + 1;
    std::vector<std::vector<Quaternion>> rows;
    // parameters z_1..z_2k; basis vectors are the images of z_m in {1, i}
    for (long m = 1; m <= 2 * k; ++m) {
        for (int which = 0; which < 2; ++which) {
            // val = 1 or i; as a complex number val = (x, y)
            Rational x = which == 0 ? Rational(1) : Rational(0);
            Rational y = which == 0 ? Rational(0) : Rational(1);
            Quaternion val(x, y, Rational(0), Rational(0));
            Quaternion conj_val(x, -y, Rational(0), Rational(0));
            Quaternion val_j(Rational(0), Rational(0), x, y);        // val * j
            Quaternion conj_val_j(Rational(0), Rational(0), x, -y);  // conj(val) * j
            std::vector<Quaternion> v(slots);
            if (m == 1) v[0] = v[0] + val;
            for (long s = 2; s <= 2 * k; ++s) {
                if (s % 2 == 0) {
                    if (m == s - 1) v[s - 1] = v[s - 1] + conj_val;
                    if (m == s) v[s - 1] = v[s - 1] + val_j;
                } else {
                    if (m == s) v[s - 1] = v[s - 1] + val;
                    if (m == s - 1) v[s - 1] = v[s - 1] - conj_val_j;
                }
            }
            if (m == 2 * k) v[slots - 1] = v[slots - 1] - conj_val_j;
            rows.push_back(v);
        }
    }
    return Pair(slots, rows);
}

Pair gen_W(long k, const SpherePoint& q) {
    if (k < 1) throw domain_error("gen_W requires k >= 1");
    Quaternion aux = Quaternion::unit_i();
    if (q.u == aux || q.u == -aux) aux = Quaternion::unit_j();
    std::vector<std::vector<Quaternion>> rows;
    for (long s = 1; s <= k; ++s) {  // a_s
        std::vector<Quaternion> v(k);
        v[s - 1] = Quaternion(1);
        rows.push_back(v);
    }
    for (long s = 1; s <= k; ++s) {  // b_s
        std::vector<Quaternion> v(k);
        v[s - 1] = q.u;
        if (s >= 2) v[s - 2] = aux;
        rows.push_back(v);
    }
    return Pair(k, rows);
}

long intersection_dim(const Pair& p, const SpherePoint& j) {
    const MatrixQ& b = p.basis();
    if (b.rows() == 0) return 0;
    MatrixQ jb = b * block_left_mult(j.u, p.k()).transpose();
    long dim_sum = static_cast<long>(rank(MatrixQ::vstack(b, jb)));
    return 2 * p.dim() - dim_sum;
}

ComplexPair::ComplexPair(long n, const MatrixQ& basis_rows) : n_(n) {
    if (n < 0) throw domain_error("negative complex dimension");
    if (basis_rows.rows() > 0 && basis_rows.cols() != static_cast<std::size_t>(2 * n))
        throw domain_error("complex pair basis width mismatch");
    MatrixQ w = basis_rows.rows() ? basis_rows : MatrixQ(0, 2 * n);
    std::size_t in_rows = w.rows();
    basis_ = row_space_basis(w);
    if (basis_.rows() != in_rows) throw domain_error("dependent subspace basis");
}

ComplexDecomposition complex_decompose(const ComplexPair& cp) {
    long n = cp.n();
    const MatrixQ& b = cp.basis();
    ComplexDecomposition out;
    if (b.rows() == 0) {
        out.z = n;
        return out;
    }
    MatrixQ jmat(2 * n, 2 * n);
    for (long s = 0; s < n; ++s) {
        jmat(2 * s, 2 * s + 1) = Rational(-1);
        jmat(2 * s + 1, 2 * s) = Rational(1);
    }
    MatrixQ jb = b * jmat.transpose();
    long dim_sum = static_cast<long>(rank(MatrixQ::vstack(b, jb)));
    long m2 = 2 * cp.dim() - dim_sum;
    out.m = m2 / 2;
    out.l = cp.dim() - m2;
    out.z = n - out.m - out.l;
    return out;
}

ComplexPair complex_pair_of(const Pair& p, const SpherePoint& j) {
    long k = p.k();
    MatrixQ jmat = block_left_mult(j.u, k);
    // greedy basis adapted to j: columns (w, Jw) pairwise
    MatrixQ cols(4 * k, 4 * k);
    MatrixQ span(0, 4 * k);
    std::size_t filled = 0;
    for (long e = 0; e < 4 * k && filled < static_cast<std::size_t>(4 * k); ++e) {
        std::vector<Rational> v(4 * k);
        v[e] = Rational(1);
        if (subspace_contains(span, v)) continue;
        std::vector<Rational> jv = jmat.apply(v);
        for (long r = 0; r < 4 * k; ++r) {
            cols(r, filled) = v[r];
            cols(r, filled + 1) = jv[r];
        }
        MatrixQ two(2, 4 * k);
        two.set_row(0, v);
        two.set_row(1, jv);
        span = subspace_sum(span, two);
        filled += 2;
    }
    if (filled != static_cast<std::size_t>(4 * k))
        throw internal_error("failed to build structure-adapted basis");
    MatrixQ inv_cols = inverse(cols);
    MatrixQ new_basis = p.basis() * inv_cols.transpose();
    return ComplexPair(2 * k, new_basis);
}

const std::vector<Quaternion>& unit_quaternion_table() {
    static const std::vector<Quaternion> table = [] {
        std::vector<Quaternion> out;
        for (long m = 1; m <= 11; ++m) {
            long mm = m * m;
            for (long a = 0; a <= m; ++a)
                for (long b = -m; b <= m; ++b)
                    for (long c = -m; c <= m; ++c)
                        for (long d = -m; d <= m; ++d) {
                            if (a * a + b * b + c * c + d * d != mm) continue;
                            long g = std::gcd(std::gcd(std::labs(a), std::labs(b)),
                                              std::gcd(std::labs(c), std::labs(d)));
                            g = std::gcd(g, m);
                            if (g != 1) continue;
                            out.emplace_back(Rational(a, m), Rational(b, m), Rational(c, m),
                                             Rational(d, m));
                        }
        }
        return out;
    }();
    return table;
}

const std::vector<Rotation>& rotation_attempt_list() {
    static const std::vector<Rotation> list = [] {
        std::vector<Rotation> out;
        out.emplace_back();  // identity
        std::vector<Quaternion> images;
        Quaternion minus_i = -Quaternion::unit_i();
        images.push_back(minus_i);
        for (const Quaternion& g : unit_quaternion_table()) {
            Quaternion img = g * minus_i * g.inverse();
            bool seen = false;
            for (const auto& o : images)
                if (o == img) { seen = true; break; }
            if (seen) continue;
            images.push_back(img);
            out.push_back(Rotation(g));
            if (out.size() >= 64) break;
        }
        return out;
    }();
    return list;
}

Automorphism random_automorphism(long k, std::uint64_t seed) {
    if (k < 0) throw domain_error("negative quaternionic dimension");
    std::mt19937_64 eng(seed);
    const auto& table = unit_quaternion_table();
    std::size_t a_pool = std::min<std::size_t>(table.size(), 24);
    Quaternion a = table[eng() % a_pool];
    static const std::array<Rational, 7> values = {Rational(1),     Rational(-1), Rational(1, 2),
                                                   Rational(-1, 2), Rational(2),  Rational(-2),
                                                   Rational(1, 3)};
    if (k == 0) return Automorphism(a, Matrix<Quaternion>(0, 0));
    const std::uint64_t uk = static_cast<std::uint64_t>(k);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<Quaternion> m(k, k);
        for (long t = 0; t < k; ++t) m(t, t) = Quaternion(1);
        std::uint64_t n_perturb = uk + eng() % (uk + 1);
        for (std::uint64_t t = 0; t < n_perturb; ++t) {
            std::size_t r = eng() % uk, c = eng() % uk;
            std::size_t comp = eng() % 4;
            Rational val = values[eng() % values.size()];
            Quaternion delta;
            switch (comp) {
                case 0: delta = Quaternion(val, 0, 0, 0); break;
                case 1: delta = Quaternion(0, val, 0, 0); break;
                case 2: delta = Quaternion(0, 0, val, 0); break;
                default: delta = Quaternion(0, 0, 0, val); break;
            }
            m(r, c) = m(r, c) + delta;
        }
        if (rank(right_action_matrix(m)) == static_cast<std::size_t>(4 * k))
            return Automorphism(a, m);
    }
    throw internal_error("random automorphism generation failed to find an invertible matrix");
}

}  // namespace qpair
