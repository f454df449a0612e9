#include "classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qpair {

const char* factor_type_name(FactorType t) {
    switch (t) {
        case FactorType::U: return "U";
        case FactorType::Ustar: return "U*";
        case FactorType::V: return "V";
        case FactorType::Vstar: return "V*";
        case FactorType::W: return "W";
    }
    return "?";
}

std::pair<long, long> Factor::dims() const {
    switch (type) {
        case FactorType::U: return {k + 1, 2 * k + 1};
        case FactorType::Ustar: return {k + 1, 2 * k + 3};
        case FactorType::V: return {2 * k + 1, 4 * k};
        case FactorType::Vstar: return {2 * k + 1, 4 * k + 4};
        case FactorType::W: return {k, 2 * k};
    }
    return {0, 0};
}

namespace {

int type_rank(FactorType t) { return static_cast<int>(t); }

bool factor_before(const Factor& a, const Factor& b) {
    if (a.type != b.type) return type_rank(a.type) < type_rank(b.type);
    if (a.k != b.k) return a.k < b.k;
    bool as = a.support.has_value(), bs = b.support.has_value();
    if (as != bs) return !as;
    if (as && !(a.support->normalized() == b.support->normalized()))
        return *a.support < *b.support;
    return false;
}

bool factor_same_slot(const Factor& a, const Factor& b) {
    if (a.type != b.type || a.k != b.k) return false;
    if (a.support.has_value() != b.support.has_value()) return false;
    if (a.support && !a.support->equal_up_to_scalar(*b.support)) return false;
    return true;
}

}  // namespace

FactorSignature make_factor_signature(std::vector<Factor> factors) {
    std::vector<Factor> kept;
    for (auto& f : factors) {
        if (f.mult == 0) continue;
        if (f.mult < 0) throw internal_error("negative factor multiplicity");
        if (f.support) f.support = f.support->normalized();
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end(), factor_before);
    FactorSignature out;
    for (auto& f : kept) {
        if (!out.factors.empty() && factor_same_slot(out.factors.back(), f))
            out.factors.back().mult += f.mult;
        else
            out.factors.push_back(std::move(f));
    }
    return out;
}

bool FactorSignature::has(FactorType t, long kk) const {
    for (const auto& f : factors)
        if (f.type == t && f.k == kk) return true;
    return false;
}

std::pair<long, long> FactorSignature::total_dims() const {
    long k = 0, u = 0;
    for (const auto& f : factors) {
        auto [dk, du] = f.dims();
        k += dk * f.mult;
        u += du * f.mult;
    }
    return {k, u};
}

FactorSignature factor_signature(const SheafSignature& s) {
    std::vector<Factor> out;
    std::map<long, long> counts;
    for (long d : s.cokernel_degrees) counts[d]++;
    for (auto [deg, count] : counts) {
        if (deg <= 0) throw internal_error("invalid cokernel degree in signature");
        if (deg % 2 == 0) {
            out.push_back({FactorType::U, deg / 2 - 1, count, std::nullopt});
        } else {
            if (count % 2 != 0)
                throw internal_error("odd cokernel degree with odd multiplicity");
            out.push_back({FactorType::V, (deg - 1) / 2, count / 2, std::nullopt});
        }
    }
    counts.clear();
    for (long d : s.kernel_degrees) counts[-d]++;
    for (auto [deg, count] : counts) {
        if (deg <= 0) throw internal_error("invalid kernel degree in signature");
        if (deg % 2 == 0) {
            out.push_back({FactorType::Ustar, deg / 2 - 1, count, std::nullopt});
        } else {
            if (count % 2 != 0)
                throw internal_error("odd kernel degree with odd multiplicity");
            out.push_back({FactorType::Vstar, (deg - 1) / 2, count / 2, std::nullopt});
        }
    }
    for (const auto& orbit : s.torsion) {
        long pairs = orbit.pair_count();
        for (long entry : orbit.partition)
            out.push_back({FactorType::W, entry, pairs, orbit.support_form});
    }
    return make_factor_signature(std::move(out));
}

namespace {

const std::vector<Zeta>& startup_check_zetas() {
    static const std::vector<Zeta> zs = {
        Zeta(GaussianRational(0)),
        Zeta(GaussianRational(1)),
        Zeta(GaussianRational(Rational(-1))),
        Zeta(GaussianRational(2)),
        Zeta(GaussianRational(Rational(1, 2))),
        Zeta(GaussianRational(Rational(1, 2), Rational(1, 2))),
        Zeta(GaussianRational(Rational(0), Rational(2))),
        zeta_infinity(),
    };
    return zs;
}

}  // namespace

Classification classify(const Pair& p) {
    for (const Zeta& z : startup_check_zetas()) eigensection_check(p.k(), z);
    Pencil pencil = build_pencil(p);
    reality_check(pencil);
    Classification cls;
    cls.sheaf = sheaf_signature(pencil);
    cls.factors = factor_signature(cls.sheaf);
    auto [tk, tu] = cls.factors.total_dims();
    if (tk != p.k() || tu != p.dim())
        throw internal_error("factor dimension reconstruction failed");
    return cls;
}

FactorSignature dual_signature(const FactorSignature& f) {
    std::vector<Factor> out;
    for (const auto& fac : f.factors) {
        Factor g = fac;
        switch (fac.type) {
            case FactorType::U: g.type = FactorType::Ustar; break;
            case FactorType::Ustar: g.type = FactorType::U; break;
            case FactorType::V: g.type = FactorType::Vstar; break;
            case FactorType::Vstar: g.type = FactorType::V; break;
            case FactorType::W: break;  // same support either way
        }
        out.push_back(std::move(g));
    }
    return make_factor_signature(std::move(out));
}

bool is_augmented(const FactorSignature& f) { return !f.has(FactorType::Vstar, 0); }
bool is_strengthened(const FactorSignature& f) { return !f.has(FactorType::V, 0); }

namespace {

/// Antipodal-pair representatives of a support form with fully rational
/// support; throws domain_error when any point is irrational.
std::vector<Zeta> rational_pair_reps(const BinaryForm& form) {
    std::vector<Zeta> reps;
    auto dec = form.decompose();
    if (dec.z0_mult != dec.z1_mult)
        throw internal_error("support form not antipodally balanced at infinity");
    for (std::size_t t = 0; t < dec.z1_mult; ++t) reps.push_back(GaussianRational(0));
    std::vector<GaussianRational> roots = rational_interior_roots(form);
    std::vector<GaussianRational> seen;
    for (const auto& z : roots) {
        bool done = false;
        for (const auto& s : seen)
            if (s == z) { done = true; break; }
        if (done) continue;
        GaussianRational anti = -(z.conj().inverse());
        seen.push_back(z);
        seen.push_back(anti);
        reps.push_back(z < anti ? z : anti);
    }
    if (2 * reps.size() != form.degree())
        throw domain_error("torsion support is not rational; model cannot be built exactly");
    return reps;
}

}  // namespace

Pair model_from_signature(const FactorSignature& f) {
    std::vector<Pair> parts;
    for (const auto& fac : f.factors) {
        if (fac.type == FactorType::W) {
            if (!fac.support) throw domain_error("W factor without support data");
            std::vector<Zeta> reps = rational_pair_reps(*fac.support);
            long pairs = static_cast<long>(reps.size());
            if (fac.mult % pairs != 0)
                throw internal_error("W multiplicity not divisible by pair count");
            long per_pair = fac.mult / pairs;
            for (const Zeta& rep : reps)
                for (long t = 0; t < per_pair; ++t)
                    parts.push_back(gen_W(fac.k, sphere_point_from_zeta(rep)));
            continue;
        }
        for (long t = 0; t < fac.mult; ++t) {
            switch (fac.type) {
                case FactorType::U: parts.push_back(gen_U(fac.k)); break;
                case FactorType::Ustar: parts.push_back(dual(gen_U(fac.k))); break;
                case FactorType::V: parts.push_back(gen_V(fac.k)); break;
                case FactorType::Vstar: parts.push_back(dual(gen_V(fac.k))); break;
                case FactorType::W: break;
            }
        }
    }
    if (parts.empty()) return Pair(0, MatrixQ(0, 0));
    Pair acc = parts.front();
    for (std::size_t t = 1; t < parts.size(); ++t) acc = product(acc, parts[t]);
    return acc;
}

std::vector<TorsionOrbit> torsion_of_factors(const FactorSignature& f) {
    // group W factors by support form
    std::vector<std::pair<BinaryForm, std::vector<long>>> groups;
    for (const auto& fac : f.factors) {
        if (fac.type != FactorType::W) continue;
        if (!fac.support) throw internal_error("W factor without support data");
        BinaryForm form = fac.support->normalized();
        long pairs = static_cast<long>(form.degree()) / 2;
        if (pairs == 0 || fac.mult % pairs != 0)
            throw internal_error("W multiplicity inconsistent with support degree");
        long per_pair = fac.mult / pairs;
        bool found = false;
        for (auto& [g, part] : groups)
            if (g == form) {
                for (long t = 0; t < per_pair; ++t) part.push_back(fac.k);
                found = true;
                break;
            }
        if (!found) {
            std::vector<long> part;
            for (long t = 0; t < per_pair; ++t) part.push_back(fac.k);
            groups.emplace_back(form, std::move(part));
        }
    }
    std::vector<TorsionOrbit> out;
    for (auto& [g, part] : groups) {
        std::sort(part.begin(), part.end(), std::greater<long>());
        TorsionOrbit orbit;
        orbit.support_form = g;
        orbit.partition = std::move(part);
        out.push_back(std::move(orbit));
    }
    return out;
}

namespace {

std::vector<std::tuple<int, long, long>> non_w_multiset(const FactorSignature& f) {
    std::vector<std::tuple<int, long, long>> out;
    for (const auto& fac : f.factors)
        if (fac.type != FactorType::W)
            out.emplace_back(type_rank(fac.type), fac.k, fac.mult);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool factors_equal(const FactorSignature& a, const FactorSignature& b) {
    if (non_w_multiset(a) != non_w_multiset(b)) return false;
    return torsion_locally_equal(torsion_of_factors(a), torsion_of_factors(b));
}

bool factors_profile_equal(const FactorSignature& a, const FactorSignature& b) {
    if (non_w_multiset(a) != non_w_multiset(b)) return false;
    return torsion_profile_equal(torsion_of_factors(a), torsion_of_factors(b));
}

FiltrationDims predicted_filtration_dims(const FactorSignature& f) {
    FiltrationDims d;
    long kt = 0;
    for (const auto& fac : f.factors) {
        if (fac.type == FactorType::Ustar) {
            d.e_minus_k += (fac.k + 1) * fac.mult;
            d.u_minus_dim += (2 * fac.k + 3) * fac.mult;
        } else if (fac.type == FactorType::Vstar) {
            d.e_minus_k += (2 * fac.k + 1) * fac.mult;
            d.u_minus_dim += (4 * fac.k + 4) * fac.mult;
        } else if (fac.type == FactorType::W) {
            kt += fac.k * fac.mult;
        }
    }
    d.e_mid_k = d.e_minus_k + kt;
    d.u_mid_dim = d.u_minus_dim + 2 * kt;
    return d;
}

MatrixQ quaternionic_span(const MatrixQ& rows, long k) {
    if (rows.rows() == 0) return MatrixQ(0, 4 * k);
    MatrixQ acc = rows;
    for (const Quaternion& u : {Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()})
        acc = MatrixQ::vstack(acc, rows * block_left_mult(u, k).transpose());
    return row_space_basis(acc);
}

bool is_quaternionic(const MatrixQ& rows, long k) {
    MatrixQ span = row_space_basis(rows);
    return quaternionic_span(rows, k).rows() == span.rows();
}

namespace {

/// H-linear projection onto a coordinate complement of a quaternionic
/// subspace, with the coordinate section as a right inverse.
struct QuaternionicQuotient {
    long k_sub = 0, k_quot = 0;
    MatrixQ proj;  // 4 k_quot x 4k
    MatrixQ lift;  // 4k x 4 k_quot
};

QuaternionicQuotient quaternionic_quotient(const MatrixQ& submodule_rows, long k) {
    QuaternionicQuotient out;
    // left echelon basis of the submodule over the quaternions
    std::vector<std::vector<Quaternion>> ech;
    std::vector<long> pivot_slot;
    for (std::size_t r = 0; r < submodule_rows.rows(); ++r) {
        std::vector<Quaternion> v = row_to_quaternions(submodule_rows.row(r));
        for (std::size_t e = 0; e < ech.size(); ++e) {
            const Quaternion& c = v[pivot_slot[e]];
            if (c.is_zero()) continue;
            Quaternion f = c;
            for (long s = 0; s < k; ++s) v[s] = v[s] - f * ech[e][s];
        }
        long lead = -1;
        for (long s = 0; s < k; ++s)
            if (!v[s].is_zero()) { lead = s; break; }
        if (lead < 0) continue;
        Quaternion inv = v[lead].inverse();
        for (long s = 0; s < k; ++s) v[s] = inv * v[s];
        for (std::size_t e = 0; e < ech.size(); ++e) {
            const Quaternion& c = ech[e][lead];
            if (c.is_zero()) continue;
            Quaternion f = c;
            for (long s = 0; s < k; ++s) ech[e][s] = ech[e][s] - f * v[s];
        }
        ech.push_back(std::move(v));
        pivot_slot.push_back(lead);
    }
    if (4 * ech.size() != row_space_basis(submodule_rows).rows())
        throw internal_error("quotient base is not a quaternionic subspace");
    out.k_sub = static_cast<long>(ech.size());
    out.k_quot = k - out.k_sub;
    std::vector<bool> is_pivot(k, false);
    for (long p : pivot_slot) is_pivot[p] = true;
    std::vector<long> complement;
    for (long s = 0; s < k; ++s)
        if (!is_pivot[s]) complement.push_back(s);
    out.proj = MatrixQ(4 * out.k_quot, 4 * k);
    for (long t = 0; t < 4 * k; ++t) {
        std::vector<Rational> unit(4 * k);
        unit[t] = Rational(1);
        std::vector<Quaternion> v = row_to_quaternions(unit);
        for (std::size_t e = 0; e < ech.size(); ++e) {
            const Quaternion& c = v[pivot_slot[e]];
            if (c.is_zero()) continue;
            Quaternion f = c;
            for (long s = 0; s < k; ++s) v[s] = v[s] - f * ech[e][s];
        }
        for (std::size_t ci = 0; ci < complement.size(); ++ci) {
            auto coords = v[complement[ci]].coords();
            for (std::size_t cc = 0; cc < 4; ++cc) out.proj(4 * ci + cc, t) = coords[cc];
        }
    }
    out.lift = MatrixQ(4 * k, 4 * out.k_quot);
    for (std::size_t ci = 0; ci < complement.size(); ++ci)
        for (std::size_t cc = 0; cc < 4; ++cc)
            out.lift(4 * complement[ci] + cc, 4 * ci + cc) = Rational(1);
    return out;
}

/// Reduce a polynomial-entries vector mod h and expand into complex rows,
/// one per coefficient of t.
void expand_coefficients(const std::vector<Poly>& vec, long deg_h, long width,
                         std::vector<std::vector<GaussianRational>>& out) {
    for (long e = 0; e < deg_h; ++e) {
        std::vector<GaussianRational> row(width);
        bool nonzero = false;
        for (long c = 0; c < width; ++c) {
            row[c] = vec[c].coeff(e);
            nonzero = nonzero || !row[c].is_zero();
        }
        if (nonzero) out.push_back(std::move(row));
    }
}

/// Kernel of (A + t B) over Q(i)[t]/(h).  Pivots must be invertible mod h;
/// a column with nonzero but non-invertible candidates throws not_invertible.
std::vector<std::vector<Poly>> kernel_basis_mod(const MatrixG& a, const MatrixG& b,
                                                const Poly& h) {
    std::size_t rows = a.rows(), cols = a.cols();
    auto reduce = [&](const Poly& p) { return p.divmod(h).second; };
    auto inverse_mod = [&](const Poly& p) {
        auto egcd = poly_egcd(p, h);
        if (std::get<0>(egcd).degree() != 0)
            throw not_invertible("non-invertible pivot in quotient ring");
        return reduce(std::get<1>(egcd));  // gcd is monic, already a unit
    };
    std::vector<std::vector<Poly>> m(rows, std::vector<Poly>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m[r][c] = reduce(Poly({a(r, c), b(r, c)}));
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t chosen = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            if (std::get<0>(poly_egcd(m[r][c], h)).degree() == 0) { chosen = r; break; }
        }
        if (chosen == rows) {
            bool any_nonzero = false;
            for (std::size_t r = lead; r < rows; ++r) any_nonzero |= !m[r][c].is_zero();
            if (any_nonzero) throw not_invertible("column has no invertible pivot mod h");
            continue;
        }
        std::swap(m[lead], m[chosen]);
        Poly inv = inverse_mod(m[lead][c]);
        for (std::size_t cc = c; cc < cols; ++cc) m[lead][cc] = reduce(m[lead][cc] * inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][c].is_zero()) continue;
            Poly f = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = reduce(m[r][cc] - f * m[lead][cc]);
        }
        pivots.push_back(c);
        ++lead;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Poly>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Poly> v(cols);
        v[f] = Poly::one();
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Real span of the summed fiber kernels at all points of the orbit form,
/// computed inside the ambient of the given pair.
MatrixQ torsion_fiber_mod(const Pair& p, const BinaryForm& orbit_form) {
    Pencil pen = build_pencil(p);
    Poly h = orbit_form.dehomogenize().monic();
    auto dec = orbit_form.decompose();
    if (dec.z0_mult != 0 || dec.z1_mult != 0)
        throw internal_error("quotient-ring path requires support away from zero and infinity");
    auto kernel = kernel_basis_mod(pen.a, pen.b, h);
    auto [v, w] = eigensections(p.k());
    long deg_h = h.degree();
    std::vector<std::vector<GaussianRational>> complex_rows;
    for (const auto& kv : kernel) {
        std::vector<Poly> amb(4 * p.k());
        for (long r = 0; r < 4 * p.k(); ++r) {
            Poly acc;
            for (long c = 0; c < 2 * p.k(); ++c) {
                if (kv[c].is_zero()) continue;
                acc = acc + Poly({v(r, c), w(r, c)}) * kv[c];
            }
            amb[r] = acc.divmod(h).second;
        }
        expand_coefficients(amb, deg_h, 4 * p.k(), complex_rows);
    }
    MatrixG cm(complex_rows.size(), 4 * p.k());
    for (std::size_t r = 0; r < complex_rows.size(); ++r) cm.set_row(r, complex_rows[r]);
    MatrixG cspan = row_space_basis(cm);
    if (!subspace_contains_all(cspan, conj(cspan)))
        throw internal_error("orbit fiber span not antipodally closed");
    MatrixQ real = row_space_basis(realify_rows(cspan));
    if (real.rows() != cspan.rows())
        throw internal_error("real form of orbit fiber span has wrong dimension");
    return real;
}

/// U intersect (left multiplication by the point) U, as real rows.
MatrixQ torsion_fiber_at_point(const Pair& p, const SpherePoint& q) {
    const MatrixQ& b = p.basis();
    if (b.rows() == 0) return MatrixQ(0, 4 * p.k());
    MatrixQ jb = b * block_left_mult(q.u, p.k()).transpose();
    return subspace_intersection(b, jb);
}

struct TorsionSupportData {
    std::vector<SpherePoint> rational_points;
    std::vector<BinaryForm> irrational_orbits;
};

TorsionSupportData torsion_support_data(const std::vector<TorsionOrbit>& torsion) {
    TorsionSupportData out;
    for (const auto& orbit : torsion) {
        auto dec = orbit.support_form.decompose();
        std::vector<GaussianRational> roots = rational_interior_roots(orbit.support_form);
        std::size_t found = dec.z0_mult + dec.z1_mult + roots.size();
        if (found == orbit.support_form.degree()) {
            if (dec.z1_mult > 0) out.rational_points.push_back(sphere_point_from_zeta(GaussianRational(0)));
            if (dec.z0_mult > 0) out.rational_points.push_back(sphere_point_from_zeta(zeta_infinity()));
            for (const auto& z : roots)
                out.rational_points.push_back(sphere_point_from_zeta(Zeta(z)));
        } else if (!roots.empty() || dec.z0_mult > 0 || dec.z1_mult > 0) {
            // mixed rational/irrational support inside one orbit cannot occur:
            // rational points split off as their own orbits
            throw internal_error("orbit with mixed rational and irrational support");
        } else {
            out.irrational_orbits.push_back(orbit.support_form);
        }
    }
    return out;
}

}  // namespace

Filtration canonical_filtration(const Pair& p, const Classification& cls) {
    Filtration out;
    FiltrationDims pred = predicted_filtration_dims(cls.factors);
    out.dims = pred;
    long k = p.k();

    // negative part: span of fiber kernels at generic points
    Pencil pen = build_pencil(p);
    long gr = generic_rank(pen);
    long kernel_rank = 2 * k - gr;
    MatrixG cspan(0, 4 * k);
    if (kernel_rank > 0) {
        auto [v, w] = eigensections(k);
        long found = 0;
        std::vector<std::vector<GaussianRational>> rows;
        for (long t = 0; found < 2 * k + 1 && t <= 4 * k + 2; ++t) {
            CP1Point x(GaussianRational(1), GaussianRational(Rational(t)));
            MatrixG ev = evaluate(pen, x);
            if (static_cast<long>(rank(ev)) != gr) continue;
            ++found;
            MatrixG eig = v.scaled(x.z0) + w.scaled(x.z1);
            for (const auto& kv : kernel_basis(ev)) {
                std::vector<GaussianRational> amb(4 * k);
                for (long r = 0; r < 4 * k; ++r)
                    for (long c = 0; c < 2 * k; ++c)
                        if (!kv[c].is_zero() && !eig(r, c).is_zero()) amb[r] += eig(r, c) * kv[c];
                rows.push_back(std::move(amb));
            }
        }
        if (found < 2 * k + 1)
            throw internal_error("not enough generic points for the negative part");
        MatrixG collected(rows.size(), 4 * k);
        for (std::size_t r = 0; r < rows.size(); ++r) collected.set_row(r, rows[r]);
        cspan = row_space_basis(collected);
        if (!subspace_contains_all(cspan, conj(cspan)))
            throw internal_error("negative-part span not antipodally closed");
    }
    MatrixQ u_minus = row_space_basis(realify_rows(cspan));
    if (static_cast<long>(u_minus.rows()) != static_cast<long>(cspan.rows()))
        throw internal_error("negative-part real form has wrong dimension");
    if (static_cast<long>(u_minus.rows()) != pred.u_minus_dim)
        throw internal_error("negative-part dimension does not match the signature");
    if (!subspace_contains_all(p.basis(), u_minus))
        throw internal_error("negative part is not contained in the subspace");
    MatrixQ e_minus = quaternionic_span(u_minus, k);
    if (static_cast<long>(e_minus.rows()) != 4 * pred.e_minus_k)
        throw internal_error("negative-part quaternionic span has wrong dimension");
    if (!subspaces_equal(subspace_intersection(p.basis(), e_minus), u_minus))
        throw internal_error("negative part does not cut the subspace correctly");

    out.e_minus = e_minus;
    out.u_minus = u_minus;

    // torsion part, computed in the quotient by the negative part
    QuaternionicQuotient quot = quaternionic_quotient(e_minus, k);
    MatrixQ u_prime = row_space_basis(p.basis() * quot.proj.transpose());
    if (static_cast<long>(u_prime.rows()) != p.dim() - pred.u_minus_dim)
        throw internal_error("quotient subspace has wrong dimension");

    TorsionSupportData support = torsion_support_data(cls.sheaf.torsion);
    long kq = quot.k_quot;
    MatrixQ et(0, 4 * kq);
    bool dims_only = false;
    std::string note;
    try {
        for (long iter = 0;; ++iter) {
            if (iter > 4 * k + 4)
                throw internal_error("torsion saturation did not converge");
            QuaternionicQuotient q2 = quaternionic_quotient(et, kq);
            MatrixQ u2 = row_space_basis(u_prime * q2.proj.transpose());
            Pair p2(q2.k_quot, u2);
            MatrixQ fresh(0, 4 * q2.k_quot);
            for (const auto& pt : support.rational_points)
                fresh = subspace_sum(fresh, torsion_fiber_at_point(p2, pt));
            for (const auto& orbit : support.irrational_orbits)
                fresh = subspace_sum(fresh, torsion_fiber_mod(p2, orbit));
            if (fresh.rows() == 0) break;
            MatrixQ lifted = fresh * q2.lift.transpose();
            et = quaternionic_span(MatrixQ::vstack(et, lifted), kq);
        }
    } catch (const not_invertible& e) {
        dims_only = true;
        note = std::string("torsion support is irrational and the quotient ring splits: ") +
               e.what() + "; middle layer reported as dims only";
    }

    if (!dims_only) {
        if (static_cast<long>(et.rows()) != 4 * (pred.e_mid_k - pred.e_minus_k))
            throw internal_error("torsion part dimension does not match the signature");
        MatrixQ ut = subspace_intersection(u_prime, et);
        if (static_cast<long>(ut.rows()) != pred.u_mid_dim - pred.u_minus_dim)
            throw internal_error("torsion subspace dimension does not match the signature");
        MatrixQ e_mid = row_space_basis(MatrixQ::vstack(e_minus, et * quot.lift.transpose()));
        e_mid = quaternionic_span(e_mid, k);
        if (static_cast<long>(e_mid.rows()) != 4 * pred.e_mid_k)
            throw internal_error("middle layer has wrong dimension");
        if (!is_quaternionic(e_mid, k))
            throw internal_error("middle layer is not quaternionic");
        MatrixQ u_mid = subspace_intersection(p.basis(), e_mid);
        if (static_cast<long>(u_mid.rows()) != pred.u_mid_dim)
            throw internal_error("middle subspace has wrong dimension");
        if (!subspace_contains_all(u_mid, u_minus) ||
            !subspace_contains_all(e_mid, e_minus))
            throw internal_error("filtration containment violated");
        out.e_mid = e_mid;
        out.u_mid = u_mid;
        out.bases_complete = true;
    } else {
        out.note = note;
    }
    return out;
}

}  // namespace qpair
