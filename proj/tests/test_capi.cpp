#include <doctest.h>

#include <json.hpp>

#include <string>

#include "qpair/qpair.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { qpair_string_free(p); }
    std::string get() const { return p ? p : ""; }
};

struct PairHandle {
    qpair_pair* p = nullptr;
    ~PairHandle() { qpair_pair_free(p); }
};

using njson = nlohmann::json;

}  // namespace

TEST_CASE("generate, serialize and reparse through the C API") {
    PairHandle w;
    Str err;
    REQUIRE(qpair_generate("W", 1, "1", &w.p, &err.p) == QPAIR_OK);
    Str text;
    REQUIRE(qpair_pair_to_json(w.p, &text.p, &err.p) == QPAIR_OK);
    njson j = njson::parse(text.get());
    CHECK(j["quaternionic_dimension"] == 1);
    CHECK(j["subspace_basis"].size() == 2);
    CHECK(j["format_version"] == 1);

    PairHandle again;
    REQUIRE(qpair_pair_from_json(text.get().c_str(), &again.p, &err.p) == QPAIR_OK);
    Str text2;
    REQUIRE(qpair_pair_to_json(again.p, &text2.p, &err.p) == QPAIR_OK);
    CHECK(text.get() == text2.get());
}

TEST_CASE("classification report through the C API") {
    PairHandle u1;
    Str err;
    REQUIRE(qpair_generate("U", 1, nullptr, &u1.p, &err.p) == QPAIR_OK);
    Str report;
    REQUIRE(qpair_classify(u1.p, 1, 0, &report.p, &err.p) == QPAIR_OK);
    njson j = njson::parse(report.get());
    CHECK(j["factors"].size() == 1);
    CHECK(j["factors"][0]["type"] == "U");
    CHECK(j["factors"][0]["k"] == 1);
    CHECK(j["sheaf"]["cokernel_degrees"] == njson::array({4}));
    CHECK(j["augmented"] == true);
    CHECK(j["orientation_anchor"] == "O(2) for (R,H)");
    CHECK(j.contains("filtration"));
    CHECK(j["filtration"]["dims"]["e_minus_k"] == 0);

    Str verify_out;
    REQUIRE(qpair_verify_report(report.get().c_str(), 0, &verify_out.p, &err.p) == QPAIR_OK);
}

TEST_CASE("dual, product and transform through the C API") {
    PairHandle u0, w1;
    Str err;
    REQUIRE(qpair_generate("U", 0, nullptr, &u0.p, &err.p) == QPAIR_OK);
    REQUIRE(qpair_generate("W", 1, "1", &w1.p, &err.p) == QPAIR_OK);

    PairHandle d;
    REQUIRE(qpair_dual(u0.p, &d.p, &err.p) == QPAIR_OK);
    Str dreport;
    REQUIRE(qpair_classify(d.p, 0, 0, &dreport.p, &err.p) == QPAIR_OK);
    CHECK(njson::parse(dreport.get())["factors"][0]["type"] == "U*");

    PairHandle prod;
    REQUIRE(qpair_product(u0.p, w1.p, "1/2,1/2,1/2,1/2", &prod.p, &err.p) == QPAIR_OK);
    Str preport;
    REQUIRE(qpair_classify(prod.p, 0, 0, &preport.p, &err.p) == QPAIR_OK);
    CHECK(njson::parse(preport.get())["factors"].size() == 2);

    PairHandle t1, t2;
    REQUIRE(qpair_transform(w1.p, 7, &t1.p, &err.p) == QPAIR_OK);
    REQUIRE(qpair_transform(w1.p, 7, &t2.p, &err.p) == QPAIR_OK);
    Str s1, s2;
    REQUIRE(qpair_pair_to_json(t1.p, &s1.p, &err.p) == QPAIR_OK);
    REQUIRE(qpair_pair_to_json(t2.p, &s2.p, &err.p) == QPAIR_OK);
    CHECK(s1.get() == s2.get());
}

TEST_CASE("error codes") {
    PairHandle out;
    SUBCASE("malformed JSON is a domain error") {
        Str err;
        CHECK(qpair_pair_from_json("{not json", &out.p, &err.p) == QPAIR_ERROR_DOMAIN);
        CHECK(njson::parse(err.get()).contains("error"));
    }
    SUBCASE("zero denominator is a domain error") {
        Str err;
        std::string bad = R"({"quaternionic_dimension":1,"subspace_basis":[[{"r":"1/0","i":"0","j":"0","k":"0"}]]})";
        CHECK(qpair_pair_from_json(bad.c_str(), &out.p, &err.p) == QPAIR_ERROR_DOMAIN);
    }
    SUBCASE("dependent basis is a domain error") {
        Str err;
        std::string bad = R"({"quaternionic_dimension":1,"subspace_basis":[)"
                          R"([{"r":"1","i":"0","j":"0","k":"0"}],)"
                          R"([{"r":"2","i":"0","j":"0","k":"0"}]]})";
        CHECK(qpair_pair_from_json(bad.c_str(), &out.p, &err.p) == QPAIR_ERROR_DOMAIN);
    }
    SUBCASE("W without support is a domain error") {
        Str err;
        CHECK(qpair_generate("W", 1, nullptr, &out.p, &err.p) == QPAIR_ERROR_DOMAIN);
    }
    SUBCASE("non-unit rotation is rejected") {
        PairHandle a, b;
        Str err;
        REQUIRE(qpair_generate("U", 0, nullptr, &a.p, &err.p) == QPAIR_OK);
        REQUIRE(qpair_generate("U", 0, nullptr, &b.p, &err.p) == QPAIR_OK);
        Str err2;
        CHECK(qpair_product(a.p, b.p, "1,1,0,0", &out.p, &err2.p) == QPAIR_ERROR_DOMAIN);
    }
    SUBCASE("corrupted report is an internal-consistency failure") {
        PairHandle u0;
        Str err;
        REQUIRE(qpair_generate("U", 0, nullptr, &u0.p, &err.p) == QPAIR_OK);
        Str report;
        REQUIRE(qpair_classify(u0.p, 0, 0, &report.p, &err.p) == QPAIR_OK);
        njson j = njson::parse(report.get());
        j["sheaf"]["cokernel_degrees"] = njson::array({4});
        Str out2, err2;
        CHECK(qpair_verify_report(j.dump().c_str(), 0, &out2.p, &err2.p) ==
              QPAIR_ERROR_INTERNAL);
    }
}

TEST_CASE("check through the C API") {
    PairHandle w;
    Str err;
    REQUIRE(qpair_generate("W", 3, "0", &w.p, &err.p) == QPAIR_OK);  // zeta = 0 is the point i
    Str report;
    REQUIRE(qpair_check(w.p, 0, &report.p, &err.p) == QPAIR_OK);
    njson j = njson::parse(report.get());
    CHECK(j["pass"] == true);
    CHECK(j["torsion_length"] == 6);
}

TEST_CASE("version string") {
    CHECK(std::string(qpair_version()).size() >= 5);
}
