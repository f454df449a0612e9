#include "qpair/qpair.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "check.hpp"

struct qpair_pair {
    qpair::Pair value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** err, const std::string& message) {
    if (!err) return;
    qpair::json j;
    j["error"] = message;
    *err = dup_string(j.dump());
}

template <class Fn>
qpair_status guarded(char** err, Fn&& fn) {
    try {
        fn();
        return QPAIR_OK;
    } catch (const qpair::domain_error& e) {
        set_error(err, e.what());
        return QPAIR_ERROR_DOMAIN;
    } catch (const qpair::internal_error& e) {
        set_error(err, e.what());
        return QPAIR_ERROR_INTERNAL;
    } catch (const std::bad_alloc&) {
        set_error(err, "out of memory");
        return QPAIR_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(err, e.what());
        return QPAIR_ERROR_INTERNAL;
    }
}

qpair::Rotation parse_rotation(const char* spec) {
    if (!spec || !*spec) return qpair::Rotation();
    std::string s(spec);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (parts.size() != 4)
        throw qpair::domain_error("rotation must be four comma-separated rationals \"r,i,j,k\"");
    qpair::Quaternion g(qpair::Rational::from_string(parts[0]),
                        qpair::Rational::from_string(parts[1]),
                        qpair::Rational::from_string(parts[2]),
                        qpair::Rational::from_string(parts[3]));
    return qpair::Rotation(g);  // validates exact unit norm
}

}  // namespace

extern "C" {

const char* qpair_version(void) { return "1.0.0"; }

qpair_status qpair_pair_from_json(const char* json_text, qpair_pair** out, char** err) {
    return guarded(err, [&] {
        if (!json_text || !out) throw qpair::domain_error("null argument");
        qpair::json j = qpair::parse_json(json_text);
        *out = new qpair_pair{qpair::pair_from_json(j)};
    });
}

qpair_status qpair_pair_to_json(const qpair_pair* p, char** out, char** err) {
    return guarded(err, [&] {
        if (!p || !out) throw qpair::domain_error("null argument");
        *out = dup_string(qpair::dump_canonical(qpair::pair_to_json(p->value), false));
    });
}

qpair_status qpair_generate(const char* type, long k, const char* support, qpair_pair** out,
                            char** err) {
    return guarded(err, [&] {
        if (!type || !out) throw qpair::domain_error("null argument");
        std::string t(type);
        if (t == "U") {
            *out = new qpair_pair{qpair::gen_U(k)};
        } else if (t == "Ustar" || t == "U*") {
            *out = new qpair_pair{qpair::dual(qpair::gen_U(k))};
        } else if (t == "V") {
            *out = new qpair_pair{qpair::gen_V(k)};
        } else if (t == "Vstar" || t == "V*") {
            *out = new qpair_pair{qpair::dual(qpair::gen_V(k))};
        } else if (t == "W") {
            if (!support || !*support)
                throw qpair::domain_error("generator W requires a support parameter");
            qpair::Zeta z = qpair::zeta_from_string(support);
            *out = new qpair_pair{qpair::gen_W(k, qpair::sphere_point_from_zeta(z))};
        } else {
            throw qpair::domain_error("unknown generator type \"" + t + "\"");
        }
    });
}

qpair_status qpair_dual(const qpair_pair* p, qpair_pair** out, char** err) {
    return guarded(err, [&] {
        if (!p || !out) throw qpair::domain_error("null argument");
        *out = new qpair_pair{qpair::dual(p->value)};
    });
}

qpair_status qpair_product(const qpair_pair* a, const qpair_pair* b, const char* rotation,
                           qpair_pair** out, char** err) {
    return guarded(err, [&] {
        if (!a || !b || !out) throw qpair::domain_error("null argument");
        *out = new qpair_pair{qpair::product(a->value, b->value, parse_rotation(rotation))};
    });
}

qpair_status qpair_transform(const qpair_pair* p, uint64_t seed, qpair_pair** out, char** err) {
    return guarded(err, [&] {
        if (!p || !out) throw qpair::domain_error("null argument");
        qpair::Automorphism phi = qpair::random_automorphism(p->value.k(), seed);
        *out = new qpair_pair{qpair::act(phi, p->value)};
    });
}

qpair_status qpair_classify(const qpair_pair* p, int with_filtration, int pretty, char** report,
                            char** err) {
    return guarded(err, [&] {
        if (!p || !report) throw qpair::domain_error("null argument");
        qpair::Classification cls = qpair::classify(p->value);
        if (with_filtration) {
            qpair::Filtration f = qpair::canonical_filtration(p->value, cls);
            *report = dup_string(
                qpair::dump_canonical(qpair::report_to_json(p->value, cls, &f), pretty != 0));
        } else {
            *report = dup_string(
                qpair::dump_canonical(qpair::report_to_json(p->value, cls, nullptr), pretty != 0));
        }
    });
}

qpair_status qpair_check(const qpair_pair* p, int pretty, char** report, char** err) {
    qpair_status st = guarded(err, [&] {
        if (!p || !report) throw qpair::domain_error("null argument");
        qpair::CheckReport r = qpair::check_pair(p->value);
        *report =
            dup_string(qpair::dump_canonical(qpair::check_report_to_json(r), pretty != 0));
        if (!r.all_pass()) throw qpair::internal_error("one or more invariant checks failed");
    });
    return st;
}

qpair_status qpair_verify_report(const char* report_json, int pretty, char** report, char** err) {
    return guarded(err, [&] {
        if (!report_json || !report) throw qpair::domain_error("null argument");
        qpair::json j = qpair::parse_json(report_json);
        qpair::CheckReport r = qpair::verify_report(j);
        *report =
            dup_string(qpair::dump_canonical(qpair::check_report_to_json(r), pretty != 0));
        if (!r.all_pass()) throw qpair::internal_error("report verification failed");
    });
}

qpair_status qpair_selftest(int pretty, char** report, char** err) {
    return guarded(err, [&] {
        if (!report) throw qpair::domain_error("null argument");
        auto results = qpair::run_acceptance_criteria();
        qpair::json j = qpair::criteria_to_json(results);
        *report = dup_string(qpair::dump_canonical(j, pretty != 0));
        if (!j["pass"].get<bool>()) throw qpair::internal_error("acceptance criteria failed");
    });
}

void qpair_pair_free(qpair_pair* p) { delete p; }

void qpair_string_free(char* s) { std::free(s); }

}  // extern "C"
