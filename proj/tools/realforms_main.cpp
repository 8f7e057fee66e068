// Command-line front end: classification of Picard-Vessiot isomorphism
// classes for simple real differential Galois groups, cocycle construction
// and inspection, form tools, exact group-element sampling, and the
// invariant verification suites. All output is deterministic JSON (or its
// lossless text rendering); identical invocations are byte-identical.

#include "CLI11.hpp"

#include "realforms/classify.hpp"
#include "realforms/cohomology.hpp"
#include "realforms/forms.hpp"
#include "realforms/json_codec.hpp"
#include "realforms/quatlin.hpp"
#include "realforms/sampling.hpp"
#include "realforms/verify_suites.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using realforms::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string g_output_mode = "json";

void emit(const Json& payload) {
    if (g_output_mode == "text")
        std::cout << realforms::render_text(payload);
    else
        std::cout << payload.dump(2) << "\n";
}

int emit_error(int code, const std::string& message, const std::string& field = "") {
    Json err{{"code", code}, {"message", message}};
    if (!field.empty()) err["field"] = field;
    emit(Json{{"type", "error"}, {"error", err}});
    return code;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("REALFORMS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("REALFORMS_SEED must be an integer");
        }
    }
    return 0;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

realforms::GroupDescriptor descriptor_from_flags(const std::string& family, int n,
                                                 int p, const std::string& form) {
    using namespace realforms;
    std::string f = family;
    // friendly aliases on top of the canonical variant names
    if (f == "sl") f = "sl_k";
    if (f == "sl-h") f = "sl_h";
    if (f == "sp") f = "sp_k";
    if (f == "su-h") f = "su_h_hermitian";
    if (f == "su-h-anti") f = "su_h_antihermitian";
    if (f == "so") f = n % 2 == 1 ? "so_odd" : "so_even";
    auto fam = family_from_name(f);
    if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
    GroupDescriptor g{*fam, n, p, 0};
    if (*fam == GroupFamily::g2) {
        if (form == "compact")
            g.form = kG2Compact;
        else if (form == "split")
            g.form = kG2Split;
        else
            throw std::invalid_argument("g2 form must be 'compact' or 'split'");
    } else if (*fam == GroupFamily::f4 || *fam == GroupFamily::e8) {
        if (form != "0" && form != "1" && form != "2")
            throw std::invalid_argument("form tag must be 0, 1 or 2");
        g.form = form[0] - '0';
    }
    validate(g);
    return g;
}

int cmd_classify(const std::string& family, int n, int p, const std::string& form) {
    auto g = descriptor_from_flags(family, n, p, form);
    Json out = realforms::classification_to_json(realforms::classify(g));
    out["type"] = "classification";
    emit(out);
    return kExitOk;
}

int cmd_cocycle(const std::string& family, int n, int p, int q,
                const std::string& input_file, std::optional<int> index_p) {
    using namespace realforms;
    Cocycle x = [&] {
        if (!input_file.empty()) return cocycle_from_json(load_json_file(input_file));
        if (family == "su") return rep_cocycle(RepFamily::special_unitary, n, p, q);
        if (family == "so") return rep_cocycle(RepFamily::special_orthogonal, n, p, q);
        if (family == "quat")
            return rep_cocycle(RepFamily::quaternion_hermitian, n, p, q);
        throw std::invalid_argument("cocycle family must be su, so or quat");
    }();
    bool ok = verify_cocycle(x);
    Json out = cocycle_to_json(x);
    out["type"] = "cocycle";
    out["verified"] = ok;
    if (ok) {
        std::optional<int> pp = index_p;
        if (!pp && input_file.empty()) pp = p;
        if (!pp && x.action.tag == ConjActionTag::unitary_twist) pp = x.action.p;
        if (pp) out["index"] = cocycle_index(x, *pp);
    }
    emit(out);
    return kExitOk;
}

int cmd_forms(const std::string& input_file, const std::string& pfister) {
    using namespace realforms;
    if (!pfister.empty()) {
        auto first = pfister.find(',');
        auto second = pfister.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos)
            throw std::invalid_argument("--pfister expects 'a,b,c'");
        Pfister3 pf(Rational::parse(pfister.substr(0, first)),
                    Rational::parse(pfister.substr(first + 1, second - first - 1)),
                    Rational::parse(pfister.substr(second + 1)));
        auto expansion = pfister3_expand(pf);
        Json out{{"type", "pfister"},
                 {"a", pf.a.str()},
                 {"b", pf.b.str()},
                 {"c", pf.c.str()},
                 {"expansion", matrix_to_json(expansion.gram)},
                 {"class", pfister3_class(pf) == PfisterClass::definite ? "definite"
                                                                        : "split"}};
        emit(out);
        return kExitOk;
    }
    if (input_file.empty())
        throw std::invalid_argument("forms needs --input-file or --pfister");
    FormSpec f = form_from_json(load_json_file(input_file));
    Json out{{"type", "form_report"},
             {"kind", form_kind_name(kind_of(f))},
             {"size", form_size(f)}};
    switch (kind_of(f)) {
        case FormKind::quadratic: {
            auto d = congruence_diagonalize(std::get<QuadraticForm>(f).gram);
            out["rank"] = d.rank;
            if (d.rank == static_cast<int>(form_size(f))) out["index"] = d.positives;
            break;
        }
        case FormKind::hermitian: {
            auto d = congruence_diagonalize(std::get<HermitianForm>(f).gram);
            out["rank"] = d.rank;
            if (d.rank == static_cast<int>(form_size(f))) out["index"] = d.positives;
            break;
        }
        case FormKind::quat_hermitian: {
            auto c = canonicalize_quat_hermitian(std::get<QuatHermitianForm>(f));
            out["rank"] = c.rank;
            out["index"] = c.index;
            break;
        }
        case FormKind::quat_antihermitian: {
            auto c = canonicalize_quat_antihermitian(std::get<QuatAntiHermitianForm>(f));
            out["rank"] = c.rank;
            break;
        }
    }
    emit(out);
    return kExitOk;
}

int cmd_sample(const std::string& family, int n, int p, std::uint64_t seed) {
    using namespace realforms;
    Json out{{"type", "sample"}, {"family", family}, {"n", n}, {"seed", seed}};
    if (family == "so") {
        auto s = signature_matrix<Rational>(n, p);
        auto m = cayley_sample(QuadraticForm(s), seed);
        out["p"] = p;
        out["matrix"] = matrix_to_json(m);
        out["det"] = exact_det(m).str();
        out["verified"] = m.transposed() * s * m == s;
    } else if (family == "su") {
        auto s = signature_matrix_gauss(n, p);
        auto m = cayley_sample(HermitianForm(s), seed);
        out["p"] = p;
        out["matrix"] = matrix_to_json(m);
        out["det"] = exact_det(m).str();
        out["verified"] = star(m) * s * m == s;
    } else if (family == "sp") {
        auto a = symplectic_unit_matrix<Rational>(2 * n);
        auto s = (-a) * signature_matrix<Rational>(2 * n, 2 * p);
        auto m = cayley_sample_bilinear(s, seed);
        out["p"] = p;
        out["matrix"] = matrix_to_json(m);
        out["det"] = exact_det(m).str();
        out["verified"] = m.transposed() * s * m == s;
    } else if (family == "quat-h") {
        auto s = signature_matrix<Quaternion>(n, p);
        auto m = cayley_sample(QuatHermitianForm(s), seed);
        out["p"] = p;
        out["matrix"] = matrix_to_json(m);
        out["verified"] = sigma_star(m) * s * m == s;
    } else if (family == "quat-anti") {
        ExactMatrix<Quaternion> s(n, n, Quaternion());
        for (int i = 0; i < n; ++i) s(i, i) = Quaternion::unit_i();
        auto m = cayley_sample(QuatAntiHermitianForm(s), seed);
        out["matrix"] = matrix_to_json(m);
        out["verified"] = sigma_star(m) * s * m == s;
    } else {
        throw std::invalid_argument(
            "sample family must be so, su, sp, quat-h or quat-anti");
    }
    if (!out["verified"].get<bool>()) {
        emit(out);
        return kExitVerifyFailure;
    }
    emit(out);
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, int max_n,
               int samples) {
    using namespace realforms;
    if (max_n < 1 || max_n > 16)
        throw std::invalid_argument("--max-n must lie in [1, 16]");
    if (samples < 1 || samples > 1000)
        throw std::invalid_argument("--samples must lie in [1, 1000]");
    VerifyOptions opts{seed, max_n, samples};
    auto results = run_suites(suites, opts);
    Json list = Json::array();
    bool passed = true;
    for (const auto& r : results) {
        Json entry{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
        if (!r.passed()) {
            entry["first_counterexample"] = r.first_counterexample;
            passed = false;
        }
        list.push_back(entry);
    }
    emit(Json{{"type", "verify_report"},
              {"seed", seed},
              {"max_n", max_n},
              {"samples", samples},
              {"suites", list},
              {"passed", passed}});
    return passed ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of Picard-Vessiot classes and their "
                 "real differential Galois groups"};
    app.require_subcommand(1);

    std::string family, form, input_file, pfister;
    int n = 0, p = 0, q = 0;
    int max_n = 8, samples = 50;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> index_p;
    std::vector<std::string> suites;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", g_output_mode, "json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    auto* c_classify = app.add_subcommand("classify", "count Picard-Vessiot classes "
                                                      "and their Galois groups");
    c_classify->add_option("--family", family, "group family")->required();
    c_classify->add_option("--n", n, "dimension parameter");
    c_classify->add_option("--p", p, "form index");
    c_classify->add_option("--form", form, "exceptional form tag");
    add_output(c_classify);

    auto* c_cocycle = app.add_subcommand("cocycle", "build or inspect a 1-cocycle");
    c_cocycle->add_option("--family", family, "su, so or quat");
    c_cocycle->add_option("--n", n, "matrix (or quaternionic) size");
    c_cocycle->add_option("--p", p, "base form index");
    c_cocycle->add_option("--q", q, "representative label");
    c_cocycle->add_option("--input-file", input_file, "cocycle JSON to inspect");
    c_cocycle->add_option("--index-p", index_p, "index context for plain actions");
    add_output(c_cocycle);

    auto* c_forms = app.add_subcommand("forms", "classify a form or expand a "
                                                "3-Pfister form");
    c_forms->add_option("--input-file", input_file, "form JSON file");
    c_forms->add_option("--pfister", pfister, "a,b,c slots");
    add_output(c_forms);

    auto* c_sample = app.add_subcommand("sample", "exact Cayley sample of a "
                                                  "form-preserving group element");
    c_sample->add_option("--family", family, "so, su, sp, quat-h or quat-anti")
        ->required();
    c_sample->add_option("--n", n, "size parameter")->required();
    c_sample->add_option("--p", p, "form index");
    c_sample->add_option("--seed", seed_flag, "sampler seed");
    add_output(c_sample);

    auto* c_verify = app.add_subcommand("verify", "run invariant suites");
    c_verify->add_option("--suite", suites, "suite name (repeatable; all if omitted)");
    c_verify->add_option("--seed", seed_flag, "base seed");
    c_verify->add_option("--max-n", max_n, "size bound for matrix suites")
        ->capture_default_str();
    c_verify->add_option("--samples", samples, "randomized sample count")
        ->capture_default_str();
    add_output(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error(kExitUsage, e.what());
    }

    try {
        std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
        if (c_classify->parsed()) return cmd_classify(family, n, p, form);
        if (c_cocycle->parsed())
            return cmd_cocycle(family, n, p, q, input_file, index_p);
        if (c_forms->parsed()) return cmd_forms(input_file, pfister);
        if (c_sample->parsed()) return cmd_sample(family, n, p, seed);
        if (c_verify->parsed()) return cmd_verify(suites, seed, max_n, samples);
    } catch (const std::invalid_argument& e) {
        return emit_error(kExitUsage, e.what());
    } catch (const std::domain_error& e) {
        return emit_error(kExitUsage, e.what());
    } catch (const std::exception& e) {
        return emit_error(kExitVerifyFailure, e.what());
    }
    return emit_error(kExitUsage, "no subcommand given");
}
