#include "qsh/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "qsh/json_io.hpp"
#include "qsh/rep.hpp"

namespace qsh::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct QuiverSource {
    std::string file;
    std::string builtin;  // e.g. "linearA 5"

    Quiver load() const {
        if (!builtin.empty()) {
            std::istringstream in(builtin);
            std::string name;
            int parameter = 0;
            if (!(in >> name >> parameter))
                throw parse_error("builtin spec must look like 'kronecker 3'", 0);
            return builtin_quiver(name, parameter);
        }
        if (file.empty()) throw parse_error("no quiver given: use --quiver or --builtin", 0);
        return quiver_from_json(load_json_file(file));
    }
};

void emit(const Json& j, const std::string& text, bool json_format, const std::string& output_file,
          std::ostream& out) {
    if (!output_file.empty()) {
        save_json_file(output_file, j);
        return;
    }
    if (json_format)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
}

struct Options {
    std::string format = "text";
    std::string spec_file;
    std::string output_file;
    QuiverSource quiver;
    std::string left_file, right_file;
    std::string isotypic_file;
    std::string expr, expr2;
    int max_len = 0;
    int bound = 0;
    bool decompose = false;

    bool json() const { return format == "json"; }
};

// Signals a spec that parsed but failed mathematical validation.
struct spec_invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BialgebraSpec load_spec(const Options& opt, bool require_valid = true) {
    if (opt.spec_file.empty()) throw parse_error("missing --spec FILE", 0);
    BialgebraSpec spec = spec_from_json(load_json_file(opt.spec_file));
    if (require_valid) {
        ValidationReport report = validate_spec(spec);
        if (!report.ok()) throw spec_invalid("spec failed validation:\n" + report.str());
    }
    return spec;
}

// Commands return the exit code; input problems are thrown.

int cmd_validate(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt, /*require_valid=*/false);
    ValidationReport report = validate_spec(spec);
    emit(validation_to_json(report), report.str(), opt.json(), opt.output_file, out);
    return report.ok() ? kOk : kMathFailure;
}

int cmd_construct(const Options& opt, const std::string& identity, const std::string& zero,
                  std::ostream& out) {
    Quiver q = opt.quiver.load();
    ValidationReport quiver_report = q.validate();
    if (!quiver_report.ok()) {
        out << quiver_report.str() << "\n";
        return kMathFailure;
    }
    auto e = q.find_vertex(identity);
    if (!e) throw parse_error("unknown identity vertex '" + identity + "'", 0);
    std::optional<Vertex> z;
    if (!zero.empty()) {
        auto zv = q.find_vertex(zero);
        if (!zv) throw parse_error("unknown zero vertex '" + zero + "'", 0);
        z = *zv;
    }
    BialgebraSpec spec = trivial_bialgebra(q, *e, z);
    Json j = spec_to_json(spec);
    emit(j, j.dump(2), opt.json(), opt.output_file, out);
    return kOk;
}

int cmd_multiply(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt);
    Path alpha = parse_path_expr(spec.quiver, opt.expr);
    Path beta = parse_path_expr(spec.quiver, opt.expr2);
    PathVector product = shuffle_product(spec, alpha, beta);
    emit(path_vector_to_json(spec.quiver, product), path_vector_str(spec.quiver, product),
         opt.json(), opt.output_file, out);
    return kOk;
}

int cmd_delta(const Options& opt, std::ostream& out) {
    Quiver q = opt.spec_file.empty() ? opt.quiver.load() : load_spec(opt).quiver;
    Path p = parse_path_expr(q, opt.expr);
    TensorVector2 d = delta(q, p);
    emit(tensor2_to_json(q, d), tensor2_str(q, d), opt.json(), opt.output_file, out);
    return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt);
    VerifyReport report = verify_bialgebra(spec, opt.max_len);
    emit(verify_report_to_json(report), report.str(), opt.json(), opt.output_file, out);
    return report.all_pass() ? kOk : kMathFailure;
}

int cmd_tensor(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt);
    if (opt.left_file.empty() || opt.right_file.empty())
        throw parse_error("tensor needs --left FILE and --right FILE", 0);
    Representation left = rep_from_json(load_json_file(opt.left_file), spec.quiver);
    Representation right = rep_from_json(load_json_file(opt.right_file), spec.quiver);
    for (const Representation* rep : {&left, &right}) {
        ValidationReport report = validate_representation(*rep);
        if (!report.ok()) {
            out << report.str() << "\n";
            return kMathFailure;
        }
    }
    Representation product = tensor_representations(spec, left, right);
    if (opt.decompose) {
        IntervalMultiset decomposition = barcode_decompose(product);
        emit(decomposition_to_json(decomposition), decomposition.str(), opt.json(), opt.output_file,
             out);
    } else {
        Json j = rep_to_json(product);
        emit(j, j.dump(2), opt.json(), opt.output_file, out);
    }
    return kOk;
}

int cmd_cg_table(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt);
    if (opt.bound <= 0) throw parse_error("cg-table needs --bound B with B >= 1", 0);
    std::vector<CgEntry> table = cg_table(spec, opt.bound);
    emit(cg_table_to_json(table), cg_table_str(table), opt.json(), opt.output_file, out);
    return kOk;
}

int cmd_rep_ring(const Options& opt, std::ostream& out) {
    BialgebraSpec spec = load_spec(opt);
    if (opt.bound <= 0) throw parse_error("rep-ring needs --bound B with B >= 1", 0);
    VerifyReport report = rep_ring_check(spec, opt.bound);
    emit(verify_report_to_json(report), report.str(), opt.json(), opt.output_file, out);
    return report.all_pass() ? kOk : kMathFailure;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    Quiver q = opt.quiver.load();
    ValidationReport report = q.validate();
    if (!report.ok()) {
        out << report.str() << "\n";
        return kMathFailure;
    }
    Classification c = classify_finite_type(q);
    emit(classification_to_json(c, q), c.str(q), opt.json(), opt.output_file, out);
    return kOk;
}

int cmd_attach(const Options& opt, std::ostream& out) {
    if (opt.isotypic_file.empty()) throw parse_error("attach needs --isotypic FILE", 0);
    IsotypicMatrix iso = isotypic_from_json(load_json_file(opt.isotypic_file));
    Quiver q = attach_quiver(iso);
    Json j = quiver_to_json(q);
    emit(j, j.dump(2), opt.json(), opt.output_file, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact bialgebra structures on path coalgebras of quivers"};
    app.require_subcommand(1);

    Options opt;
    std::string identity, zero;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output,-o", opt.output_file, "write JSON result to a file");
    };
    auto add_quiver_source = [&](CLI::App* cmd) {
        cmd->add_option("--quiver", opt.quiver.file, "quiver JSON document");
        cmd->add_option("--builtin", opt.quiver.builtin,
                        "builtin quiver, e.g. 'kronecker 3' or 'ainfinity 12'");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate a bialgebra spec");
    validate->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    add_format(validate);

    CLI::App* construct =
        app.add_subcommand("construct", "emit the trivial bialgebra spec on a quiver");
    add_quiver_source(construct);
    construct->add_option("--identity", identity, "identity vertex")->required();
    construct->add_option("--zero", zero, "absorbing vertex (required unless single-vertex)");
    add_format(construct);

    CLI::App* multiply = app.add_subcommand("multiply", "quantum shuffle product of two paths");
    multiply->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    multiply->add_option("alpha", opt.expr, "first path expression")->required();
    multiply->add_option("beta", opt.expr2, "second path expression")->required();
    add_format(multiply);

    CLI::App* delta_cmd = app.add_subcommand("delta", "comultiplication of a path");
    delta_cmd->add_option("--spec", opt.spec_file, "bialgebra spec JSON");
    add_quiver_source(delta_cmd);
    delta_cmd->add_option("path", opt.expr, "path expression")->required();
    add_format(delta_cmd);

    CLI::App* verify = app.add_subcommand("verify", "verify the bialgebra axioms up to a degree");
    verify->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    verify->add_option("--max-len", opt.max_len, "total path length bound")->required();
    add_format(verify);

    CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two representations");
    tensor->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    tensor->add_option("--left", opt.left_file, "left representation JSON")->required();
    tensor->add_option("--right", opt.right_file, "right representation JSON")->required();
    tensor->add_flag("--decompose", opt.decompose, "emit the interval decomposition instead");
    add_format(tensor);

    CLI::App* cgtable = app.add_subcommand("cg-table", "Clebsch-Gordan table of interval modules");
    cgtable->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    cgtable->add_option("--bound", opt.bound, "endpoint bound")->required();
    add_format(cgtable);

    CLI::App* repring = app.add_subcommand("rep-ring", "representation-ring checks (A-infinity)");
    repring->add_option("--spec", opt.spec_file, "bialgebra spec JSON")->required();
    repring->add_option("--bound", opt.bound, "endpoint bound")->required();
    add_format(repring);

    CLI::App* classify = app.add_subcommand("classify", "Dynkin / finite-type classification");
    add_quiver_source(classify);
    add_format(classify);

    CLI::App* attach = app.add_subcommand("attach", "attach the quiver of an isotypic matrix");
    attach->add_option("--isotypic", opt.isotypic_file, "isotypic matrix JSON")->required();
    add_format(attach);

    std::vector<const char*> argv;
    argv.push_back("qshuffle");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt, out);
        if (construct->parsed()) return cmd_construct(opt, identity, zero, out);
        if (multiply->parsed()) return cmd_multiply(opt, out);
        if (delta_cmd->parsed()) return cmd_delta(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (tensor->parsed()) return cmd_tensor(opt, out);
        if (cgtable->parsed()) return cmd_cg_table(opt, out);
        if (repring->parsed()) return cmd_rep_ring(opt, out);
        if (classify->parsed()) return cmd_classify(opt, out);
        if (attach->parsed()) return cmd_attach(opt, out);
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    err << "error: no command\n";
    return kInputError;
}

}  // namespace qsh::cli
