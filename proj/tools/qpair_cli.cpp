// Command-line interface for the qpair shared library.  All computation goes
// through the public C API; this binary only handles files, flags and exit
// codes (0 success, 1 bad input, 2 internal consistency failure).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "qpair/qpair.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { qpair_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct PairDeleter {
    void operator()(qpair_pair* p) const { qpair_pair_free(p); }
};
using ApiPair = std::unique_ptr<qpair_pair, PairDeleter>;

[[noreturn]] void fail(qpair_status status, const ApiString& err) {
    if (err)
        std::cerr << err.get() << "\n";
    else
        std::cerr << "{\"error\": \"unknown failure\"}\n";
    std::exit(status == QPAIR_OK ? 2 : static_cast<int>(status));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "{\"error\": \"cannot open file: " << path << "\"}\n";
        std::exit(1);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "{\"error\": \"cannot write file: " << out_path << "\"}\n";
        std::exit(1);
    }
    out << text << "\n";
}

ApiPair load_pair(const std::string& path) {
    std::string text = read_file(path);
    qpair_pair* raw = nullptr;
    char* err = nullptr;
    qpair_status st = qpair_pair_from_json(text.c_str(), &raw, &err);
    if (st != QPAIR_OK) fail(st, ApiString(err));
    return ApiPair(raw);
}

std::string pair_json(const ApiPair& p) {
    char* out = nullptr;
    char* err = nullptr;
    qpair_status st = qpair_pair_to_json(p.get(), &out, &err);
    if (st != QPAIR_OK) fail(st, ApiString(err));
    ApiString holder(out);
    return holder.get();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qpair: exact classification of real subspaces of quaternionic vector spaces"};
    app.require_subcommand(1);

    // classify
    std::string classify_file, classify_out;
    bool classify_filtration = false, classify_pretty = false, classify_json = true;
    auto* classify_cmd = app.add_subcommand("classify", "classify a pair file");
    classify_cmd->add_option("file", classify_file, "pair file (JSON)")->required();
    classify_cmd->add_flag("--filtration", classify_filtration,
                           "include the canonical filtration in the report");
    classify_cmd->add_flag("--pretty", classify_pretty, "indent the JSON output");
    classify_cmd->add_flag("--json", classify_json, "emit JSON (the default and only format)");
    classify_cmd->add_option("--out", classify_out, "write the report to a file");

    // generate
    std::string gen_type, gen_support, gen_out;
    long gen_k = -1;
    auto* gen_cmd = app.add_subcommand("generate", "write a canonical model pair file");
    gen_cmd->add_option("--type", gen_type, "U | Ustar | V | Vstar | W")->required();
    gen_cmd->add_option("--k", gen_k, "model index k")->required();
    gen_cmd->add_option("--support", gen_support,
                        "W support: \"inf\", \"<re>\" or \"<re>,<im>\" (exact rationals)");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

    // dual
    std::string dual_file, dual_out;
    auto* dual_cmd = app.add_subcommand("dual", "annihilator pair under the standard pairing");
    dual_cmd->add_option("file", dual_file, "pair file")->required();
    dual_cmd->add_option("--out", dual_out, "output file");

    // product
    std::vector<std::string> product_files;
    std::string product_rotation, product_out;
    auto* product_cmd = app.add_subcommand("product", "product of pairs, optionally rotated");
    product_cmd->add_option("files", product_files, "two or more pair files")
        ->required()
        ->expected(-2);
    product_cmd->add_option("--rotation", product_rotation,
                            "unit quaternion \"r,i,j,k\" straightening the second factor");
    product_cmd->add_option("--out", product_out, "output file");

    // transform
    std::string transform_file, transform_out;
    std::uint64_t transform_seed = 0;
    auto* transform_cmd = app.add_subcommand("transform", "apply a seeded random automorphism");
    transform_cmd->add_option("file", transform_file, "pair file")->required();
    transform_cmd->add_option("--seed", transform_seed, "random seed")->required();
    transform_cmd->add_option("--out", transform_out, "output file");

    // check
    std::string check_file;
    bool check_pretty = false;
    auto* check_cmd =
        app.add_subcommand("check", "run the invariant suite on a pair or verify a report");
    check_cmd->add_option("file", check_file, "pair file or classification report")->required();
    check_cmd->add_flag("--pretty", check_pretty, "indent the JSON output");

    // selftest
    bool selftest_json = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_cmd->add_flag("--json", selftest_json, "emit the full JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }

    if (classify_cmd->parsed()) {
        ApiPair p = load_pair(classify_file);
        char* report = nullptr;
        char* err = nullptr;
        qpair_status st = qpair_classify(p.get(), classify_filtration ? 1 : 0,
                                         classify_pretty ? 1 : 0, &report, &err);
        if (st != QPAIR_OK) fail(st, ApiString(err));
        ApiString holder(report);
        write_output(holder.get(), classify_out);
        return 0;
    }

    if (gen_cmd->parsed()) {
        qpair_pair* raw = nullptr;
        char* err = nullptr;
        qpair_status st = qpair_generate(gen_type.c_str(), gen_k,
                                         gen_support.empty() ? nullptr : gen_support.c_str(),
                                         &raw, &err);
        if (st != QPAIR_OK) fail(st, ApiString(err));
        ApiPair p(raw);
        write_output(pair_json(p), gen_out);
        return 0;
    }

    if (dual_cmd->parsed()) {
        ApiPair p = load_pair(dual_file);
        qpair_pair* raw = nullptr;
        char* err = nullptr;
        qpair_status st = qpair_dual(p.get(), &raw, &err);
        if (st != QPAIR_OK) fail(st, ApiString(err));
        ApiPair d(raw);
        write_output(pair_json(d), dual_out);
        return 0;
    }

    if (product_cmd->parsed()) {
        ApiPair acc = load_pair(product_files[0]);
        for (std::size_t t = 1; t < product_files.size(); ++t) {
            ApiPair next = load_pair(product_files[t]);
            qpair_pair* raw = nullptr;
            char* err = nullptr;
            qpair_status st =
                qpair_product(acc.get(), next.get(),
                              product_rotation.empty() ? nullptr : product_rotation.c_str(),
                              &raw, &err);
            if (st != QPAIR_OK) fail(st, ApiString(err));
            acc.reset(raw);
        }
        write_output(pair_json(acc), product_out);
        return 0;
    }

    if (transform_cmd->parsed()) {
        ApiPair p = load_pair(transform_file);
        qpair_pair* raw = nullptr;
        char* err = nullptr;
        qpair_status st = qpair_transform(p.get(), transform_seed, &raw, &err);
        if (st != QPAIR_OK) fail(st, ApiString(err));
        ApiPair t(raw);
        write_output(pair_json(t), transform_out);
        return 0;
    }

    if (check_cmd->parsed()) {
        std::string text = read_file(check_file);
        auto parsed = nlohmann::json::parse(text, nullptr, false);
        if (parsed.is_discarded()) {
            std::cerr << "{\"error\": \"malformed JSON input\"}\n";
            return 1;
        }
        char* report = nullptr;
        char* err = nullptr;
        qpair_status st;
        if (parsed.is_object() && parsed.contains("input") && parsed.contains("sheaf")) {
            st = qpair_verify_report(text.c_str(), check_pretty ? 1 : 0, &report, &err);
        } else {
            ApiPair p = load_pair(check_file);
            st = qpair_check(p.get(), check_pretty ? 1 : 0, &report, &err);
        }
        ApiString holder(report);
        if (holder) std::cout << holder.get() << "\n";
        if (st != QPAIR_OK) {
            ApiString eh(err);
            if (eh) std::cerr << eh.get() << "\n";
            return static_cast<int>(st);
        }
        return 0;
    }

    if (selftest_cmd->parsed()) {
        char* report = nullptr;
        char* err = nullptr;
        qpair_status st = qpair_selftest(0, &report, &err);
        ApiString holder(report);
        if (holder) {
            auto parsed = nlohmann::json::parse(holder.get(), nullptr, false);
            if (selftest_json || parsed.is_discarded()) {
                std::cout << holder.get() << "\n";
            } else {
                for (const auto& c : parsed["criteria"])
                    std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " criterion "
                              << c["index"].get<int>() << ": " << c["name"].get<std::string>()
                              << " (" << c["seconds"].get<double>() << " s)"
                              << (c.contains("detail")
                                      ? " - " + c["detail"].get<std::string>()
                                      : "")
                              << "\n";
            }
        }
        if (st != QPAIR_OK) {
            ApiString eh(err);
            if (eh) std::cerr << eh.get() << "\n";
            return static_cast<int>(st);
        }
        return 0;
    }

    return 0;
}
