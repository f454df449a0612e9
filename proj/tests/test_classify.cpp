#include <doctest.h>

#include <random>

#include "check.hpp"

using namespace qpair;

namespace {

const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();

SheafSignature make_sig(long k, long dim_u, std::vector<long> kernel, std::vector<long> cok,
                        std::vector<TorsionOrbit> torsion = {}) {
    SheafSignature s;
    s.k = k;
    s.dim_u = dim_u;
    s.kernel_degrees = std::move(kernel);
    s.cokernel_degrees = std::move(cok);
    s.torsion = std::move(torsion);
    return s;
}

}  // namespace

TEST_CASE("factor signature mapping table") {
    FactorSignature f1 = factor_signature(make_sig(1, 3, {}, {4}));
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].type == FactorType::U);
    CHECK(f1.factors[0].k == 1);

    FactorSignature f2 = factor_signature(make_sig(1, 4, {-1, -1}, {}));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].type == FactorType::Vstar);
    CHECK(f2.factors[0].k == 0);

    TorsionOrbit orbit{antipodal_pair_form(GaussianRational(1)), {1}, {}};
    FactorSignature f3 = factor_signature(make_sig(3, 3, {}, {1, 1, 2}, {orbit}));
    REQUIRE(f3.factors.size() == 3);
    CHECK(f3.has(FactorType::U, 0));
    CHECK(f3.has(FactorType::V, 0));
    CHECK(f3.has(FactorType::W, 1));

    // torsion orbit covering two pairs multiplies the W count
    TorsionOrbit joint{(antipodal_pair_form(GaussianRational(1)) *
                        antipodal_pair_form(GaussianRational(2)))
                           .normalized(),
                       {1},
                       {}};
    FactorSignature f4 = factor_signature(make_sig(2, 4, {}, {}, {joint}));
    REQUIRE(f4.factors.size() == 1);
    CHECK(f4.factors[0].type == FactorType::W);
    CHECK(f4.factors[0].mult == 2);
}

TEST_CASE("classification of generators and duals") {
    Classification cu = classify(gen_U(3));
    REQUIRE(cu.factors.factors.size() == 1);
    CHECK(cu.factors.has(FactorType::U, 3));

    Classification cv = classify(dual(gen_V(1)));
    REQUIRE(cv.factors.factors.size() == 1);
    CHECK(cv.factors.has(FactorType::Vstar, 1));
    CHECK(cv.sheaf.kernel_degrees == std::vector<long>{-3, -3});

    SUBCASE("every 3-plane in H is U*(0)") {
        std::mt19937_64 eng(31);
        for (int t = 0; t < 10; ++t) {
            MatrixQ rows(3, 4);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 4; ++c)
                    rows(r, c) = Rational(long(eng() % 9) - 4, 1 + long(eng() % 3));
            if (rank(rows) != 3) { --t; continue; }
            Classification c3 = classify(Pair(1, rows));
            REQUIRE(c3.factors.factors.size() == 1);
            CHECK(c3.factors.has(FactorType::Ustar, 0));
        }
    }
}

TEST_CASE("dual signature map and functoriality") {
    FactorSignature u2 = make_factor_signature({{FactorType::U, 2, 1, std::nullopt}});
    CHECK(dual_signature(u2).has(FactorType::Ustar, 2));
    FactorSignature vs0 = make_factor_signature({{FactorType::Vstar, 0, 1, std::nullopt}});
    CHECK(dual_signature(vs0).has(FactorType::V, 0));

    SUBCASE("dual of a torsion pair keeps its support") {
        Pair w = gen_W(1, SpherePoint(qj));
        Classification cw = classify(w);
        Classification cdw = classify(dual(w));
        CHECK(factors_equal(cdw.factors, dual_signature(cw.factors)));
        CHECK(factors_equal(cdw.factors, cw.factors));  // W factors are self-dual
    }
    SUBCASE("functoriality on generators and products") {
        std::vector<Pair> pairs = {gen_U(1), gen_V(1), dual(gen_U(0)),
                                   product(gen_U(0), gen_W(1, SpherePoint(qj))),
                                   product(gen_V(0), dual(gen_U(1)))};
        for (const Pair& p : pairs) {
            Classification c = classify(p);
            Classification cd = classify(dual(p));
            CHECK(factors_equal(cd.factors, dual_signature(c.factors)));
        }
    }
    SUBCASE("dual of W(k, q) keeps support for k <= 3 over sample points") {
        std::vector<Zeta> points = {Zeta(GaussianRational(0)), Zeta(GaussianRational(1)),
                                    Zeta(GaussianRational(2)),
                                    Zeta(GaussianRational(Rational(1, 2), Rational(1, 2))),
                                    Zeta(GaussianRational(Rational(0), Rational(1)))};
        for (long k = 1; k <= 3; ++k)
            for (const Zeta& z : points) {
                Pair w = gen_W(k, sphere_point_from_zeta(z));
                CHECK(factors_equal(classify(dual(w)).factors, classify(w).factors));
            }
    }
}

TEST_CASE("product additivity with the identity rotation") {
    std::vector<Pair> pairs = {gen_U(1), gen_W(1, SpherePoint(qj)), dual(gen_V(0)), gen_V(1)};
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            Classification ca = classify(pairs[a]);
            Classification cb = classify(pairs[b]);
            Classification cp = classify(product(pairs[a], pairs[b]));
            std::vector<Factor> merged = ca.factors.factors;
            merged.insert(merged.end(), cb.factors.factors.begin(), cb.factors.factors.end());
            CHECK(factors_equal(cp.factors, make_factor_signature(merged)));
        }
}

TEST_CASE("rotation independence with a torsion-free second factor") {
    Pair torsion = gen_W(1, SpherePoint(qj));
    Pair free_pair = gen_U(1);
    const auto& rots = rotation_attempt_list();
    Classification base = classify(product(torsion, free_pair, rots[0]));
    for (int t = 1; t <= 2; ++t) {
        Classification c = classify(product(torsion, free_pair, rots[t]));
        CHECK(signature_equal(c.sheaf, base.sheaf));
        CHECK(factors_equal(c.factors, base.factors));
    }
    // when the rotated factor has torsion, the profile is still invariant
    Classification rb = classify(product(free_pair, torsion, rots[0]));
    for (int t = 1; t <= 2; ++t) {
        Classification c = classify(product(free_pair, torsion, rots[t]));
        CHECK(factors_profile_equal(c.factors, rb.factors));
    }
}

TEST_CASE("gen_U classification does not depend on the parameter choice") {
    Classification base = classify(gen_U(1));
    std::vector<Zeta> alt1 = {Zeta(GaussianRational(2)), Zeta(GaussianRational(5))};
    std::vector<Zeta> alt2 = {Zeta(GaussianRational(Rational(1, 2))),
                              Zeta(GaussianRational(Rational(3), Rational(1)))};
    CHECK(signature_equal(classify(gen_U(1, &alt1)).sheaf, base.sheaf));
    CHECK(signature_equal(classify(gen_U(1, &alt2)).sheaf, base.sheaf));
}

TEST_CASE("augmented and strengthened predicates") {
    FactorSignature mixed = make_factor_signature(
        {{FactorType::U, 1, 1, std::nullopt},
         {FactorType::W, 2, 1, antipodal_pair_form(GaussianRational(1))}});
    CHECK(is_augmented(mixed));
    CHECK(is_strengthened(mixed));
    CHECK(!is_augmented(make_factor_signature({{FactorType::Vstar, 0, 1, std::nullopt}})));
    CHECK(!is_strengthened(make_factor_signature({{FactorType::V, 0, 1, std::nullopt}})));
}

TEST_CASE("canonical filtration") {
    SUBCASE("all-positive pairs have the trivial filtration") {
        for (long k = 0; k <= 2; ++k) {
            Pair p = gen_U(k);
            Classification c = classify(p);
            Filtration f = canonical_filtration(p, c);
            CHECK(f.bases_complete);
            CHECK(f.dims.e_minus_k == 0);
            CHECK(f.dims.u_minus_dim == 0);
            CHECK(f.dims.e_mid_k == 0);
        }
    }
    SUBCASE("(H, H) is purely negative") {
        Pair hh = dual(gen_V(0));
        Classification c = classify(hh);
        Filtration f = canonical_filtration(hh, c);
        CHECK(f.bases_complete);
        CHECK(f.dims.e_minus_k == 1);
        CHECK(f.dims.u_minus_dim == 4);
    }
    SUBCASE("block product filtration is the partial block sum") {
        Pair p = product(product(dual(gen_U(1)), gen_W(1, SpherePoint(qj))), gen_V(1));
        Classification c = classify(p);
        Filtration f = canonical_filtration(p, c);
        REQUIRE(f.bases_complete);
        CHECK(f.dims.e_minus_k == 2);
        CHECK(f.dims.u_minus_dim == 5);
        CHECK(f.dims.e_mid_k == 3);
        CHECK(f.dims.u_mid_dim == 7);
        // the negative block is the first H^2 factor
        MatrixQ first_block(8, 4 * p.k());
        for (int t = 0; t < 8; ++t) first_block(t, t) = Rational(1);
        CHECK(subspaces_equal(*f.e_minus, first_block));
        // containment and quaternionic closure
        CHECK(subspace_contains_all(*f.e_mid, *f.e_minus));
        CHECK(subspace_contains_all(*f.u_mid, *f.u_minus));
        CHECK(subspace_contains_all(p.basis(), *f.u_mid));
        CHECK(is_quaternionic(*f.e_minus, p.k()));
        CHECK(is_quaternionic(*f.e_mid, p.k()));
    }
    SUBCASE("irrational torsion support still certifies dims") {
        MatrixQ rows(2, 4);
        long vals[2][4] = {{1, 2, 0, 1}, {0, 1, 3, -1}};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 4; ++c) rows(r, c) = Rational(vals[r][c]);
        Pair plane(1, rows);
        Classification c = classify(plane);
        Filtration f = canonical_filtration(plane, c);
        CHECK(f.dims == predicted_filtration_dims(c.factors));
        CHECK((f.bases_complete || !f.note.empty()));
    }
}

TEST_CASE("model construction round trip") {
    SUBCASE("simple models") {
        FactorSignature two_u0 = make_factor_signature({{FactorType::U, 0, 2, std::nullopt}});
        Pair m = model_from_signature(two_u0);
        CHECK(m.k() == 2);
        CHECK(m.dim() == 2);
        CHECK(factors_equal(classify(m).factors, two_u0));
    }
    SUBCASE("mixed model with torsion") {
        FactorSignature f = make_factor_signature(
            {{FactorType::W, 1, 1, antipodal_pair_form(GaussianRational(1))},
             {FactorType::V, 1, 1, std::nullopt}});
        Pair m = model_from_signature(f);
        CHECK(factors_equal(classify(m).factors, f));
    }
    SUBCASE("irrational support is rejected") {
        BinaryForm irr(2, {GaussianRational(1), GaussianRational(1), GaussianRational(-1)});
        FactorSignature f = make_factor_signature({{FactorType::W, 1, 1, irr}});
        CHECK_THROWS_AS(model_from_signature(f), domain_error);
    }
    SUBCASE("random round trips") {
        for (int t = 0; t < 12; ++t) {
            // reuse the acceptance sampler shapes via small seeds
            std::mt19937_64 eng(600 + t);
            std::vector<Factor> fs;
            long used_k = 0;
            for (int draw = 0; draw < 4; ++draw) {
                long d = long(eng() % 2);
                switch (eng() % 5) {
                    case 0: fs.push_back({FactorType::U, d, 1, std::nullopt}); used_k += d + 1; break;
                    case 1: fs.push_back({FactorType::Ustar, d, 1, std::nullopt}); used_k += d + 1; break;
                    case 2: fs.push_back({FactorType::V, d, 1, std::nullopt}); used_k += 2 * d + 1; break;
                    case 3: fs.push_back({FactorType::Vstar, d, 1, std::nullopt}); used_k += 2 * d + 1; break;
                    default: {
                        long kk = 1 + long(eng() % 2);
                        long pick = long(eng() % 3);
                        GaussianRational z = pick == 0 ? GaussianRational(1)
                                            : pick == 1 ? GaussianRational(2)
                                                        : GaussianRational(Rational(1, 2), Rational(1, 2));
                        fs.push_back({FactorType::W, kk, 1, antipodal_pair_form(z)});
                        used_k += kk;
                        break;
                    }
                }
                if (used_k >= 5) break;
            }
            FactorSignature f = make_factor_signature(fs);
            Pair m = model_from_signature(f);
            CHECK(factors_equal(classify(m).factors, f));
        }
    }
}

TEST_CASE("zero-dimensional pair is the empty product") {
    Pair empty(0, MatrixQ(0, 0));
    Classification c = classify(empty);
    CHECK(c.factors.factors.empty());
    CHECK(c.sheaf.kernel_degrees.empty());
    CHECK(c.sheaf.cokernel_degrees.empty());
    Filtration f = canonical_filtration(empty, c);
    CHECK(f.bases_complete);
    CHECK(f.dims.e_mid_k == 0);
}

TEST_CASE("dual functoriality on random products") {
    std::mt19937_64 eng(1234);
    for (int t = 0; t < 10; ++t) {
        std::vector<Pair> parts;
        long used_k = 0;
        for (int draw = 0; draw < 4 && used_k < 5; ++draw) {
            long d = long(eng() % 2);
            switch (eng() % 5) {
                case 0: parts.push_back(gen_U(d)); used_k += d + 1; break;
                case 1: parts.push_back(dual(gen_U(d))); used_k += d + 1; break;
                case 2: parts.push_back(gen_V(d)); used_k += 2 * d + 1; break;
                case 3: parts.push_back(dual(gen_V(d))); used_k += 2 * d + 1; break;
                default: {
                    long kk = 1 + long(eng() % 2);
                    GaussianRational z(Rational(long(eng() % 3)), Rational(long(eng() % 2)));
                    parts.push_back(gen_W(kk, sphere_point_from_zeta(Zeta(z))));
                    used_k += kk;
                    break;
                }
            }
        }
        Pair p = parts.front();
        for (std::size_t s = 1; s < parts.size(); ++s) p = product(p, parts[s]);
        Classification c = classify(p);
        Classification cd = classify(dual(p));
        CHECK(factors_equal(cd.factors, dual_signature(c.factors)));
    }
}

TEST_CASE("check_pair runs the whole invariant suite") {
    CheckReport r = check_pair(product(gen_U(0), gen_W(1, SpherePoint(qj))));
    CHECK(r.all_pass());
    CHECK(r.torsion_length == 2);
    json j = check_report_to_json(r);
    CHECK(j["pass"].get<bool>());
}

TEST_CASE("verify_report accepts faithful reports and rejects corrupted ones") {
    Pair p = gen_W(1, SpherePoint(qj));
    Classification cls = classify(p);
    json report = report_to_json(p, cls, nullptr);
    CHECK(verify_report(report).all_pass());

    json bad = report;
    bad["sheaf"]["cokernel_degrees"] = json::array({2});
    CHECK(!verify_report(bad).all_pass());

    json bad2 = report;
    bad2["factors"][0]["k"] = 3;
    CHECK(!verify_report(bad2).all_pass());
}

TEST_CASE("classification reports are byte-stable") {
    Pair p = product(gen_W(1, SpherePoint(qj)), gen_U(0));
    Classification c1 = classify(p);
    Classification c2 = classify(p);
    Filtration f1 = canonical_filtration(p, c1);
    Filtration f2 = canonical_filtration(p, c2);
    CHECK(dump_canonical(report_to_json(p, c1, &f1), false) ==
          dump_canonical(report_to_json(p, c2, &f2), false));
}

TEST_CASE("pair JSON round trip") {
    Pair p = gen_W(2, sphere_point_from_zeta(GaussianRational(Rational(1, 2), Rational(1, 2))));
    json j = pair_to_json(p);
    Pair q = pair_from_json(j);
    CHECK(p == q);
    CHECK(pair_to_json(q).dump() == j.dump());

    json bad = j;
    bad["subspace_basis"][0][0]["r"] = "1/0";
    CHECK_THROWS_AS(pair_from_json(bad), domain_error);
    json bad2 = j;
    bad2["format_version"] = 99;
    CHECK_THROWS_AS(pair_from_json(bad2), domain_error);
}
