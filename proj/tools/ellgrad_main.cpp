#include "ellgrad/reports.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

namespace {

using namespace ellgrad;

struct CommonArgs {
    int n = 0;
    std::string lambda_text;
    std::string format = "table";
};

void add_common(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--n", args.n, "ambient dimension (>= 3)")->required();
    cmd->add_option("--lambda", args.lambda_text,
                    "highest weight, comma-separated rationals, e.g. 3/2,1/2")
        ->required();
    cmd->add_option("--format", args.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
}

IndexSet parse_index_arg(const TargetDecomposition& t, const std::string& text)
{
    IndexSet out;
    std::stringstream ss(text);
    std::string tok;
    std::vector<std::string> toks;
    bool weight_form = false;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        weight_form = weight_form || tok.find('e') != std::string::npos || tok == "0";
        toks.push_back(tok);
    }
    for (const auto& piece : toks)
        out.push_back(weight_form ? t.index_of(parse_weight_name(piece)) : std::stoi(piece));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void print_targets_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>()
              << "  (" << j["integrality"].get<std::string>() << ")  N = " << j["N"].get<int>()
              << ", ell = " << j["ell"].get<int>() << "\n";
    std::cout << std::left << std::setw(7) << "index" << std::setw(9) << "epsilon" << std::setw(10)
              << "wtilde" << std::setw(8) << "merged" << "target_dim\n";
    for (const auto& row : j["summands"]) {
        std::cout << std::left << std::setw(7) << row["index"].get<int>() << std::setw(9)
                  << row["epsilon"].get<std::string>() << std::setw(10)
                  << row["wtilde"].get<std::string>() << std::setw(8)
                  << (row["merged"].get<bool>() ? "yes" : "no") << row["target_dim"].get<long long>()
                  << "\n";
    }
    std::cout << "boxes: pairs";
    for (const auto& p : j["boxes"]["pairs"])
        std::cout << " {" << p[0].get<std::string>() << "," << p[1].get<std::string>() << "}";
    std::cout << "  singletons";
    for (const auto& s : j["boxes"]["singletons"]) std::cout << " {" << s.get<std::string>() << "}";
    std::cout << "\n";
}

std::string set_line(const json& row)
{
    std::string out = "{";
    const auto& idx = row["indices"];
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k].get<int>());
    out += "} = {";
    const auto& ws = row["weights"];
    for (std::size_t k = 0; k < ws.size(); ++k) out += (k ? "," : "") + ws[k].get<std::string>();
    return out + "}";
}

void print_classify_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>()
              << (j["exceptional_case"].get<bool>() ? "  [exceptional case]" : "") << "\n";
    std::cout << "minimal elliptic:\n";
    for (const auto& row : j["minimal_elliptic"])
        std::cout << "  " << set_line(row)
                  << (row["strongly_elliptic"].get<bool>() ? "  (strongly elliptic)" : "") << "\n";
    std::cout << "maximal non-elliptic:\n";
    for (const auto& row : j["maximal_non_elliptic"]) std::cout << "  " << set_line(row) << "\n";
}

void print_kato_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>() << "  I = {";
    const auto& idx = j["I"];
    for (std::size_t k = 0; k < idx.size(); ++k) std::cout << (k ? "," : "") << idx[k].get<int>();
    std::cout << "}\n";
    std::cout << "c^2 = " << j["c2"].get<std::string>()
              << "  elliptic_by_bound = " << (j["elliptic_by_bound"].get<bool>() ? "yes" : "no")
              << "  optimal = " << (j["optimal"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "extremizing J:";
    for (const auto& J : j["argmax"]) {
        std::cout << " {";
        for (std::size_t k = 0; k < J.size(); ++k) std::cout << (k ? "," : "") << J[k].get<int>();
        std::cout << "}";
    }
    std::cout << "\n";
}

void print_vertices_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>()
              << "  N = " << j["N"].get<int>() << ", ell = " << j["ell"].get<int>() << "\n";
    std::cout << "vertices of the feasibility polytope:\n";
    for (const auto& v : j["vertices"]) {
        std::cout << "  Q = (";
        const auto& q = v["Q"];
        for (std::size_t k = 0; k < q.size(); ++k) std::cout << (k ? ", " : "") << q[k].get<std::string>();
        std::cout << ")  active = {";
        const auto& act = v["active"];
        for (std::size_t k = 0; k < act.size(); ++k) std::cout << (k ? "," : "") << act[k].get<int>();
        std::cout << "}\n";
    }
    std::cout << "inclusion in {Q^J : J in NE}: " << (j["inclusion"].get<bool>() ? "yes" : "NO")
              << "   equality: " << (j["equality"].get<bool>() ? "yes" : "no") << "\n";
}

void print_certify_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>() << "\n";
    for (const auto& c : j["certificates"]) {
        std::cout << "  J = {";
        const auto& ws = c["J"];
        for (std::size_t k = 0; k < ws.size(); ++k) std::cout << (k ? "," : "") << ws[k].get<std::string>();
        std::cout << "}";
        if (c.contains("refused"))
            std::cout << "  refused: " << c["refused"].get<std::string>() << "\n";
        else
            std::cout << "  gamma = (" << c["gamma"].get<std::string>() << ")  verified = "
                      << (c["verified"].get<bool>() ? "yes" : "NO") << "\n";
    }
}

void print_verify_table(const json& j)
{
    std::cout << "so(" << j["n"].get<int>() << ")  lambda = " << j["lambda"].get<std::string>() << "\n";
    for (const auto& c : j["checks"]) {
        std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] "
                  << c["name"].get<std::string>();
        if (c.contains("detail")) std::cout << "  (" << c["detail"].get<std::string>() << ")";
        std::cout << "\n";
    }
    if (j.contains("zero_weight_three_way")) {
        const auto& tw = j["zero_weight_three_way"];
        std::cout << "  zero-weight summand: bound c^2 = " << tw["bound_c2"].get<std::string>()
                  << ", theorem = " << tw["theorem"].get<std::string>();
        if (tw.contains("oracle"))
            std::cout << ", oracle = " << tw["oracle"].get<std::string>() << " (rank "
                      << tw["oracle_rank"].get<int>() << "/" << tw["dim"].get<int>() << ")";
        std::cout << "\n";
    }
    std::cout << (j["ok"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

void print_sweep_table(const json& j)
{
    std::cout << "sweep: " << j["lambdas"].get<int>() << " weights, " << j["checks"].get<int>()
              << " checks, " << (j["ok"].get<bool>() ? "all passed" : "FAILURES:") << "\n";
    for (const auto& f : j["failures"]) {
        std::cout << "  FAIL " << f["name"].get<std::string>();
        if (f.contains("detail")) std::cout << "  (" << f["detail"].get<std::string>() << ")";
        std::cout << "\n";
    }
}

void emit(const json& j, const std::string& format, void (*table)(const json&))
{
    if (format == "json")
        std::cout << dump_report(j);
    else
        table(j);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact ellipticity classification and Kato constants for sums of generalized "
                 "gradients on so(n)-bundles"};
    app.require_subcommand(1);

    CommonArgs targets_args;
    auto* cmd_targets = app.add_subcommand(
        "targets", "relevant weights, translated conformal weights, indices, and boxes");
    add_common(cmd_targets, targets_args);

    CommonArgs classify_args;
    auto* cmd_classify =
        app.add_subcommand("classify", "minimal elliptic and maximal non-elliptic sets");
    add_common(cmd_classify, classify_args);

    CommonArgs kato_args;
    std::string kato_I;
    auto* cmd_kato = app.add_subcommand("kato", "closed-form Kato constant bound for P_I");
    add_common(cmd_kato, kato_args);
    cmd_kato->add_option("--I", kato_I, "summand indices (2,3) or weight names (-e1,+e2,0)")
        ->required();

    CommonArgs vertices_args;
    int vertex_cap = 6;
    auto* cmd_vertices = app.add_subcommand("vertices", "enumerate the Kato polytope's vertices");
    add_common(cmd_vertices, vertices_args);
    cmd_vertices->add_option("--vertex-cap", vertex_cap, "max polytope dimension ell-1")
        ->capture_default_str();

    CommonArgs certify_args;
    std::string certify_J;
    auto* cmd_certify =
        app.add_subcommand("certify", "branching-rule non-ellipticity certificates");
    add_common(cmd_certify, certify_args);
    cmd_certify->add_option("--J", certify_J, "one NE member as weight names, e.g. -e1,+e2 "
                                              "(default: all NE members)");

    CommonArgs verify_args;
    std::string sweep_spec, oracle_flag = "off";
    bool all_subsets = false;
    int dim_cap = 2000, verify_vertex_cap = 6;
    auto* cmd_verify =
        app.add_subcommand("verify", "cross-module verification for one weight or a sweep");
    cmd_verify->add_option("--n", verify_args.n, "ambient dimension");
    cmd_verify->add_option("--lambda", verify_args.lambda_text, "highest weight");
    cmd_verify->add_option("--format", verify_args.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd_verify->add_option("--sweep", sweep_spec, "sweep spec, e.g. n<=7,l1<=3");
    cmd_verify
        ->add_option("--oracle", oracle_flag, "on: cross-check with explicit matrix representations")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd_verify->add_flag("--all-subsets", all_subsets, "oracle-check every nonempty I");
    cmd_verify->add_option("--dim-cap", dim_cap, "largest representation the oracle may build")
        ->capture_default_str();
    cmd_verify->add_option("--vertex-cap", verify_vertex_cap, "max polytope dimension ell-1")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_targets->parsed()) {
            const TargetDecomposition t(
                DominantWeight::parse(targets_args.n, targets_args.lambda_text));
            emit(targets_report(t), targets_args.format, print_targets_table);
        } else if (cmd_classify->parsed()) {
            const TargetDecomposition t(
                DominantWeight::parse(classify_args.n, classify_args.lambda_text));
            emit(classify_report(t), classify_args.format, print_classify_table);
        } else if (cmd_kato->parsed()) {
            const TargetDecomposition t(DominantWeight::parse(kato_args.n, kato_args.lambda_text));
            emit(kato_report(t, parse_index_arg(t, kato_I)), kato_args.format, print_kato_table);
        } else if (cmd_vertices->parsed()) {
            const TargetDecomposition t(
                DominantWeight::parse(vertices_args.n, vertices_args.lambda_text));
            emit(vertices_report(t, vertex_cap), vertices_args.format, print_vertices_table);
        } else if (cmd_certify->parsed()) {
            const TargetDecomposition t(
                DominantWeight::parse(certify_args.n, certify_args.lambda_text));
            std::optional<std::vector<RelevantWeight>> J;
            if (!certify_J.empty()) {
                std::vector<RelevantWeight> weights;
                std::stringstream ss(certify_J);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) weights.push_back(parse_weight_name(tok));
                J = std::move(weights);
            }
            emit(certify_report(t, J), certify_args.format, print_certify_table);
        } else if (cmd_verify->parsed()) {
            VerifyOptions opts;
            opts.oracle = oracle_flag == "on";
            opts.all_subsets = all_subsets;
            opts.dim_cap = dim_cap;
            opts.vertex_cap = verify_vertex_cap;
            if (!sweep_spec.empty()) {
                const SweepConfig cfg = parse_sweep_spec(sweep_spec);
                const auto summary = verify_sweep(cfg, opts);
                emit(sweep_report(summary, cfg), verify_args.format, print_sweep_table);
                return summary.ok ? 0 : 1;
            }
            if (verify_args.n == 0 || verify_args.lambda_text.empty())
                throw std::invalid_argument("verify needs either --sweep or --n/--lambda");
            const auto v =
                verify_lambda(DominantWeight::parse(verify_args.n, verify_args.lambda_text), opts);
            emit(verification_report(v), verify_args.format, print_verify_table);
            return v.ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
