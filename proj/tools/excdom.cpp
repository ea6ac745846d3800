#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "excdom/io.hpp"
#include "excdom/verify.hpp"

namespace {

using namespace excdom;

struct CommonOpts {
    std::uint64_t seed = 0;
    bool seed_set = false;
    int n = 100;
    std::string system = "V";
    double tol_alg = default_tolerances.alg;
    double tol_cls = default_tolerances.cls;
    double target_norm = -1.0;
    std::string in_path;
    std::string out_path;
};

std::uint64_t resolve_seed(const CommonOpts& o) {
    if (o.seed_set) return o.seed;
    if (const char* env = std::getenv("EXCDOM_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return o.seed;
}

Tolerances tolerances(const CommonOpts& o) { return Tolerances{o.tol_alg, o.tol_cls}; }

std::vector<Json> read_elements(const CommonOpts& o) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!o.in_path.empty()) {
        file.open(o.in_path);
        if (!file) throw std::runtime_error("cannot open input file: " + o.in_path);
        in = &file;
    }
    std::vector<Json> docs;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        docs.push_back(Json::parse(line));
    }
    return docs;
}

class Output {
  public:
    explicit Output(const CommonOpts& o) {
        if (!o.out_path.empty()) {
            file_.open(o.out_path);
            if (!file_) throw std::runtime_error("cannot open output file: " + o.out_path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "RNG seed (EXCDOM_SEED as fallback)")
        ->each([&o](const std::string&) { o.seed_set = true; });
    cmd->add_option("--n", o.n, "sample count");
    cmd->add_option("--system", o.system, "triple system: V (dim 27) or W (dim 16)")
        ->check(CLI::IsMember({"V", "W"}));
    cmd->add_option("--tol-alg", o.tol_alg, "identity-residual tolerance");
    cmd->add_option("--tol-cls", o.tol_cls, "classification tolerance");
    cmd->add_option("--target-norm", o.target_norm, "rescale samples to this spectral norm");
    cmd->add_option("--in", o.in_path, "input file (default stdin)");
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
}

int cmd_gen(const CommonOpts& o) {
    Sampler rng(resolve_seed(o));
    Output out(o);
    for (int i = 0; i < o.n; ++i) {
        if (o.system == "V") {
            AlbertElement x = rng.albert();
            if (o.target_norm > 0.0) x = rescale_to_spectral_norm(x, o.target_norm);
            out.stream() << to_json(x).dump() << "\n";
        } else {
            WElement x = rng.w_element();
            if (o.target_norm > 0.0) x = rescale_to_spectral_norm(x, o.target_norm);
            out.stream() << to_json(x).dump() << "\n";
        }
    }
    return 0;
}

Json eval_v(const AlbertElement& x, const Tolerances& tol) {
    const MinimalPolynomial m = minimal_polynomial(x, x);
    const auto roots = roots_monic_cubic(m.monic_cubic());
    Json jroots = Json::array();
    for (const auto& r : roots) jroots.push_back(to_json(r));
    return Json{{"adjoint", to_json(adjoint(x))},
                {"det", to_json(determinant(x))},
                {"minpoly", {{"degree", 3},
                             {"herm", to_json(m.herm)},
                             {"herm_sharp", to_json(m.herm_sharp)},
                             {"det_term", to_json(m.det_term)}}},
                {"roots", jroots},
                {"rank", rank(x, tol)}};
}

Json eval_w(const WElement& x, const Tolerances& tol) {
    const MinimalPolynomial m = minimal_polynomial_w(x, x);
    const double s1 = m.herm.real(), s2 = m.herm_sharp.real();
    const double disc = std::max(s1 * s1 - 4.0 * s2, 0.0);
    const double sq = std::sqrt(disc);
    const auto cert = classify_tripotent_w(x, tol);
    int rk = 0;
    for (double r : {(s1 + sq) / 2.0, (s1 - sq) / 2.0}) {
        if (r > tol.cls) ++rk;
    }
    Json j{{"sharp", to_json(sharp_w(x))},
           {"minpoly", {{"degree", 2},
                        {"herm", to_json(m.herm)},
                        {"herm_sharp", to_json(m.herm_sharp)}}},
           {"roots", {(s1 + sq) / 2.0, (s1 - sq) / 2.0}},
           {"rank", rk}};
    j["tripotent_rank"] = cert ? Json(cert->rank) : Json(nullptr);
    return j;
}

int cmd_eval(const CommonOpts& o) {
    Output out(o);
    for (const auto& doc : read_elements(o)) {
        if (o.system == "V") {
            out.stream() << eval_v(albert_from_json(doc), tolerances(o)).dump() << "\n";
        } else {
            out.stream() << eval_w(w_from_json(doc), tolerances(o)).dump() << "\n";
        }
    }
    return 0;
}

int cmd_classify(const CommonOpts& o) {
    Output out(o);
    int code = 0;
    for (const auto& doc : read_elements(o)) {
        DomainVerdict v;
        if (o.system == "V") {
            v = classify_v(albert_from_json(doc), tolerances(o));
        } else {
            v = classify_w(w_from_json(doc), tolerances(o));
        }
        out.stream() << to_json(v).dump() << "\n";
        const int c = v.location == Location::Interior ? 0
                      : v.location == Location::Boundary ? 1
                                                         : 2;
        code = std::max(code, c);
    }
    return code;
}

int cmd_peirce(const CommonOpts& o) {
    Output out(o);
    for (const auto& doc : read_elements(o)) {
        Json j;
        if (o.system == "V") {
            const AlbertElement x = albert_from_json(doc);
            const auto cert = classify_tripotent(x, tolerances(o));
            if (!cert) throw std::runtime_error("element is not a tripotent");
            const PeirceDecomposition p = peirce(*cert);
            const auto split = q_involution_split(*cert, tolerances(o));
            j = Json{{"rank", cert->rank},
                     {"invariants", cert->invariants},
                     {"dims", {p.d0, p.d1, p.d2}},
                     {"projector_residual", p.projector_residual},
                     {"q_split", {split.first, split.second}}};
            if (cert->rank > 0) j["boundary"] = to_json(boundary_report(*cert, tolerances(o)));
        } else {
            const WElement x = w_from_json(doc);
            const auto cert = classify_tripotent_w(x, tolerances(o));
            if (!cert) throw std::runtime_error("element is not a tripotent");
            const PeirceDecomposition p = peirce_w(*cert);
            const auto split = q_involution_split_w(*cert, tolerances(o));
            j = Json{{"rank", cert->rank},
                     {"invariants", cert->invariants},
                     {"dims", {p.d0, p.d1, p.d2}},
                     {"projector_residual", p.projector_residual},
                     {"q_split", {split.first, split.second}}};
            if (cert->rank > 0) j["boundary"] = to_json(boundary_report_w(*cert, tolerances(o)));
        }
        out.stream() << j.dump() << "\n";
    }
    return 0;
}

int cmd_embed(const CommonOpts& o) {
    Output out(o);
    for (const auto& doc : read_elements(o)) {
        if (o.system == "V") {
            const FreudenthalPoint p = embed_v(albert_from_json(doc));
            const MembershipResiduals r = membership_residuals(p);
            Json j = to_json(p);
            j["residuals"] = {r.adjoint_y, r.adjoint_x, r.pairing};
            out.stream() << j.dump() << "\n";
        } else {
            const WElement x = w_from_json(doc);
            const RankOnePoint z = embed_w(x);
            const ConeMembership m = p_membership(z.z, tolerances(o));
            Json j{{"z", to_json(z.z)},
                   {"cone_residual", m.cone_residual},
                   {"in_chart", m.in_chart}};
            out.stream() << j.dump() << "\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonOpts& o, bool inject, bool full_counts) {
    VerifyOptions vo;
    vo.seed = resolve_seed(o);
    vo.counts = full_counts ? SuiteCounts{} : SuiteCounts::uniform(o.n);
    vo.tol = tolerances(o);
    vo.inject_perturbation = inject;
    const auto results = run_verification(vo);

    Output out(o);
    bool all_pass = true;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::ostringstream line;
        line << (r.pass ? "PASS  " : "FAIL  ") << r.name;
        line << std::string(width + 2 - r.name.size(), ' ');
        line << "max_residual=" << std::scientific << r.max_residual
             << "  tol=" << r.tolerance << "  trials=" << r.trials;
        out.stream() << line.str() << "\n";
    }
    out.stream() << (all_pass ? "VERIFY OK" : "VERIFY FAILED") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional symmetric domains toolkit: the 27-dimensional "
                 "Hermitian triple system of 3x3 octonion matrices and its "
                 "16-dimensional subsystem"};
    app.require_subcommand(1);

    CommonOpts gen_o, eval_o, cls_o, peirce_o, embed_o, verify_o;
    bool inject = false;
    bool full_counts = false;

    add_common(app.add_subcommand("gen", "sample random elements as JSON lines"), gen_o);
    add_common(app.add_subcommand("eval", "adjoint, determinant, minimal polynomial, rank"),
               eval_o);
    add_common(app.add_subcommand("classify", "domain membership and boundary stratum"), cls_o);
    add_common(app.add_subcommand("peirce", "Peirce decomposition of a tripotent"), peirce_o);
    add_common(app.add_subcommand("embed", "projective compactification coordinates"), embed_o);
    auto* verify_cmd =
        app.add_subcommand("verify", "run every identity suite and report max residuals");
    add_common(verify_cmd, verify_o);
    verify_cmd->add_flag("--inject-perturbation", inject,
                         "negative control: perturb one identity to force a failure");
    verify_cmd->add_flag("--full", full_counts, "use full acceptance-level sample counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("gen")) return cmd_gen(gen_o);
        if (app.got_subcommand("eval")) return cmd_eval(eval_o);
        if (app.got_subcommand("classify")) return cmd_classify(cls_o);
        if (app.got_subcommand("peirce")) return cmd_peirce(peirce_o);
        if (app.got_subcommand("embed")) return cmd_embed(embed_o);
        if (app.got_subcommand("verify")) return cmd_verify(verify_o, inject, full_counts);
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
