#include "sheaf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

#include "poly_matrix.hpp"

namespace qpair {

namespace {
std::atomic<long> g_verified_count{0};
}

long signatures_verified_count() { return g_verified_count.load(); }

namespace {

/// Coefficient matrix of multiplication by z0 A + z1 B from degree-(d-1)
/// coefficient vectors (n columns of the pencil) to degree-d targets.
MatrixG graded_map(const MatrixG& a, const MatrixG& b, long d) {
    std::size_t m = a.rows(), n = a.cols();
    MatrixG big(m * (d + 1), n * d);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const GaussianRational& av = a(r, s);
            const GaussianRational& bv = b(r, s);
            for (long t = 0; t < d; ++t) {
                std::size_t col = s * d + t;
                if (!av.is_zero()) big(r * (d + 1) + t, col) += av;
                if (!bv.is_zero()) big(r * (d + 1) + t + 1, col) += bv;
            }
        }
    return big;
}

long graded_nullity_of(const MatrixG& a, const MatrixG& b, long d) {
    if (d <= 0) return 0;
    long cols = static_cast<long>(a.cols()) * d;
    if (cols == 0) return 0;
    if (a.rows() == 0) return cols;
    MatrixG m = graded_map(a, b, d);
    return cols - static_cast<long>(rank(m));
}

/// Recover splitting degrees {-a_i} from the nullity profile: the first
/// difference at d counts summands with a <= d.  Stops as soon as all
/// kernel_rank summands are accounted for.
std::vector<long> splitting_from_profile(const MatrixG& a, const MatrixG& b, long kernel_rank,
                                         long degree_budget) {
    std::vector<long> degrees;
    if (kernel_rank == 0) return degrees;
    long prev_n = 0, prev_delta = 0;
    for (long d = 1; d <= degree_budget + 1; ++d) {
        long nd = graded_nullity_of(a, b, d);
        long delta = nd - prev_n;
        long mult = delta - prev_delta;
        if (mult < 0 || delta > kernel_rank)
            throw internal_error("inconsistent graded nullity profile");
        for (long t = 0; t < mult; ++t) degrees.push_back(-d);
        prev_n = nd;
        prev_delta = delta;
        if (delta == kernel_rank) {
            long total = 0;
            for (long deg : degrees) total -= deg;
            if (total > degree_budget)
                throw internal_error("kernel degree bound violated");
            std::sort(degrees.begin(), degrees.end());
            return degrees;
        }
    }
    throw internal_error("graded nullity scan did not converge within the degree budget");
}

}  // namespace

long graded_nullity(const Pencil& p, long d) {
    if (d < 0) throw domain_error("graded nullity requires d >= 0");
    return graded_nullity_of(p.a, p.b, d);
}

std::vector<long> kernel_splitting(const Pencil& p) {
    long kernel_rank = 2 * p.k - generic_rank(p);
    return splitting_from_profile(p.a, p.b, kernel_rank, 2 * p.k);
}

std::vector<long> cokernel_free_splitting(const Pencil& p) {
    MatrixG at = p.a.transpose(), bt = p.b.transpose();
    long kernel_rank = p.m - generic_rank(p);
    std::vector<long> tr = splitting_from_profile(at, bt, kernel_rank, 2 * p.k + p.m);
    std::vector<long> out;
    for (long deg : tr) {
        long eta = -deg - 1;
        if (eta == 0)
            throw internal_error("trivial cokernel summand detected");
        out.push_back(eta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::array<double, 3>> numeric_support_of(const BinaryForm& form) {
    std::vector<std::array<double, 3>> pts;
    auto dec = form.decompose();
    for (std::size_t t = 0; t < dec.z1_mult; ++t) pts.push_back({1.0, 0.0, 0.0});
    for (std::size_t t = 0; t < dec.z0_mult; ++t) pts.push_back({-1.0, 0.0, 0.0});
    const Poly interior = dec.interior;
    double scale = 0;
    for (const auto& c : interior.coeffs()) scale = std::max(scale, std::abs(c.to_complex()));
    for (const auto& z : numeric_interior_roots(form)) {
        // reporting is optional: only roots with a validated residual appear
        double bound = scale * std::pow(1.0 + std::abs(z), double(interior.degree()));
        if (std::abs(interior.eval(z)) > 1e-10 * std::max(bound, 1.0)) continue;
        double x = z.real(), y = z.imag();
        double n = 1.0 + x * x + y * y;
        pts.push_back({(1.0 - (x * x + y * y)) / n, 2.0 * x / n, 2.0 * y / n});
    }
    return pts;
}

}  // namespace

std::vector<TorsionOrbit> torsion_invariants(const Pencil& p) {
    std::vector<TorsionOrbit> out;
    if (p.m == 0 || p.k == 0) return out;
    auto [rp, rot] = rotate_generic(p);

    PolyMatrix pm(rp.m, 2 * rp.k);
    for (long r = 0; r < rp.m; ++r)
        for (long c = 0; c < 2 * rp.k; ++c)
            pm.at(r, c) = Poly({rp.a(r, c), rp.b(r, c)});
    std::vector<Poly> factors = smith_form(pm);

    std::vector<BinaryForm> nonconstant;  // ascending divisibility order kept
    long total_length = 0;
    for (const Poly& f : factors)
        if (f.degree() >= 1) {
            nonconstant.push_back(BinaryForm::homogenize(f, f.degree()));
            total_length += f.degree();
        }
    if (nonconstant.empty()) return out;

    std::vector<BinaryForm> basis = coprime_basis(nonconstant);

    // group basis elements into antipodal orbits
    std::vector<BinaryForm> orbit_forms;
    std::vector<bool> used(basis.size(), false);
    for (std::size_t e = 0; e < basis.size(); ++e) {
        if (used[e]) continue;
        used[e] = true;
        if (basis[e].sigma_invariant()) {
            orbit_forms.push_back(basis[e]);
            continue;
        }
        BinaryForm partner = basis[e].sigma_twist().normalized();
        bool found = false;
        for (std::size_t o = e + 1; o < basis.size(); ++o) {
            if (used[o] || !(basis[o] == partner)) continue;
            used[o] = true;
            orbit_forms.push_back((basis[e] * basis[o]).normalized());
            found = true;
            break;
        }
        if (!found)
            throw internal_error("torsion support not closed under the antipodal map");
    }

    for (const BinaryForm& g : orbit_forms) {
        // multiplicity profile, read from the largest invariant factor down
        std::vector<long> partition;
        for (std::size_t i = nonconstant.size(); i-- > 0;) {
            long mult = static_cast<long>(form_multiplicity(g, nonconstant[i]));
            if (mult == 0) break;
            if (!partition.empty() && partition.back() < mult)
                throw internal_error("invariant factor multiplicities not nonincreasing");
            partition.push_back(mult);
        }
        if (partition.empty())
            throw internal_error("coprime basis element missing from all invariant factors");

        auto dec = g.decompose();
        if (dec.z0_mult != 0 || dec.z1_mult != 0)
            throw internal_error("torsion support at infinity after generic rotation");

        // split off antipodal pairs with exact rational support
        std::vector<BinaryForm> pieces;
        std::vector<GaussianRational> roots = rational_interior_roots(g);
        std::vector<GaussianRational> reps;
        std::vector<GaussianRational> seen;
        for (const auto& z : roots) {
            bool done = false;
            for (const auto& s : seen)
                if (s == z) { done = true; break; }
            if (done) continue;
            if (z.is_zero())
                throw internal_error("torsion root at zero pairs with infinity");
            GaussianRational anti = -(z.conj().inverse());
            if (!g.dehomogenize().eval(anti).is_zero() && !(anti == z))
                throw internal_error("rational torsion root without its antipode");
            seen.push_back(z);
            seen.push_back(anti);
            reps.push_back(z < anti ? z : anti);
        }
        BinaryForm rest = g;
        for (const auto& rep : reps) {
            BinaryForm h = antipodal_pair_form(rep);
            rest = form_exact_div(rest, h).normalized();
            pieces.push_back(h);
        }
        if (rest.degree() >= 2) {
            if (!rest.sigma_invariant())
                throw internal_error("unsplit torsion remainder lost antipodal symmetry");
            pieces.push_back(rest.normalized());
        } else if (rest.degree() == 1) {
            throw internal_error("odd-degree torsion remainder");
        }

        for (const BinaryForm& piece : pieces) {
            TorsionOrbit orbit;
            orbit.support_form = piece;
            orbit.partition = partition;
            out.push_back(std::move(orbit));
        }
    }

    // map support back through the rotation used
    if (!rot.is_identity()) {
        MatrixG mo = moebius_matrix(rot);
        for (auto& orbit : out) {
            orbit.support_form = orbit.support_form.compose(mo).normalized();
            if (!orbit.support_form.sigma_invariant())
                throw internal_error("support form lost antipodal symmetry after unrotation");
        }
    }

    long check = 0;
    for (const auto& orbit : out) check += orbit.length();
    if (check != total_length)
        throw internal_error("torsion length bookkeeping mismatch");

    for (auto& orbit : out) orbit.numeric_support = numeric_support_of(orbit.support_form);

    std::sort(out.begin(), out.end(), [](const TorsionOrbit& a, const TorsionOrbit& b) {
        if (!(a.support_form == b.support_form)) return a.support_form < b.support_form;
        return a.partition > b.partition;
    });
    return out;
}

SheafSignature sheaf_signature(const Pencil& p) {
    SheafSignature s;
    s.k = p.k;
    s.dim_u = p.source.dim();
    s.kernel_degrees = kernel_splitting(p);
    s.cokernel_degrees = cokernel_free_splitting(p);
    s.torsion = torsion_invariants(p);

    long rank_lhs = static_cast<long>(s.cokernel_degrees.size()) -
                    static_cast<long>(s.kernel_degrees.size());
    if (rank_lhs != 2 * s.k - s.dim_u)
        throw internal_error("signature rank identity violated");
    long degree_sum = s.torsion_length();
    for (long d : s.cokernel_degrees) degree_sum += d;
    for (long d : s.kernel_degrees) degree_sum -= d;
    if (degree_sum != 2 * s.k)
        throw internal_error("signature degree identity violated");
    std::map<long, long> odd_counts;
    for (long d : s.kernel_degrees) {
        if (d >= 0) throw internal_error("kernel degree must be negative");
        if (d % 2 != 0) odd_counts[d]++;
    }
    for (auto [d, c] : odd_counts)
        if (c % 2 != 0) throw internal_error("odd kernel degree with odd multiplicity");
    odd_counts.clear();
    for (long d : s.cokernel_degrees) {
        if (d <= 0) throw internal_error("cokernel degree must be positive");
        if (d % 2 != 0) odd_counts[d]++;
    }
    for (auto [d, c] : odd_counts)
        if (c % 2 != 0) throw internal_error("odd cokernel degree with odd multiplicity");
    for (const auto& orbit : s.torsion) {
        if (orbit.support_form.degree() < 2 || orbit.support_form.degree() % 2 != 0)
            throw internal_error("torsion orbit of odd or trivial degree");
        if (!orbit.support_form.sigma_invariant())
            throw internal_error("torsion orbit not antipodally symmetric");
        for (std::size_t t = 0; t < orbit.partition.size(); ++t) {
            if (orbit.partition[t] <= 0) throw internal_error("nonpositive torsion partition entry");
            if (t > 0 && orbit.partition[t] > orbit.partition[t - 1])
                throw internal_error("torsion partition not nonincreasing");
        }
    }
    g_verified_count.fetch_add(1);
    return s;
}

namespace {

/// Per basis element of the joint refinement, the partitions contributed by
/// each side.  Multiple orbits on one side sharing a refined element merge
/// by concatenation (sorted), mirroring a product of torsion summands.
std::map<std::string, std::vector<long>> local_data(const std::vector<TorsionOrbit>& orbits,
                                                    const std::vector<BinaryForm>& basis) {
    std::map<std::string, std::vector<long>> data;
    for (const auto& orbit : orbits) {
        for (const auto& b : basis) {
            if (!form_divides(b, orbit.support_form)) continue;
            auto& slot = data[b.normalized().to_string()];
            slot.insert(slot.end(), orbit.partition.begin(), orbit.partition.end());
        }
    }
    for (auto& [key, part] : data) std::sort(part.begin(), part.end(), std::greater<long>());
    return data;
}

}  // namespace

bool torsion_locally_equal(const std::vector<TorsionOrbit>& a,
                           const std::vector<TorsionOrbit>& b) {
    if (a.empty() && b.empty()) return true;
    std::vector<BinaryForm> forms;
    for (const auto& o : a) forms.push_back(o.support_form);
    for (const auto& o : b) forms.push_back(o.support_form);
    std::vector<BinaryForm> basis = coprime_basis(forms);
    return local_data(a, basis) == local_data(b, basis);
}

bool torsion_profile_equal(const std::vector<TorsionOrbit>& a,
                           const std::vector<TorsionOrbit>& b) {
    auto profile = [](const std::vector<TorsionOrbit>& orbits) {
        std::vector<std::vector<long>> parts;
        for (const auto& o : orbits)
            for (long t = 0; t < o.pair_count(); ++t) parts.push_back(o.partition);
        std::sort(parts.begin(), parts.end());
        return parts;
    };
    return profile(a) == profile(b);
}

bool signature_equal(const SheafSignature& a, const SheafSignature& b) {
    return a.k == b.k && a.dim_u == b.dim_u && a.kernel_degrees == b.kernel_degrees &&
           a.cokernel_degrees == b.cokernel_degrees && torsion_locally_equal(a.torsion, b.torsion);
}

}  // namespace qpair
