#include "rieszlab/cli.hpp"

#include "rieszlab/csv_io.hpp"
#include "rieszlab/diagnostics.hpp"
#include "rieszlab/duals.hpp"
#include "rieszlab/generators.hpp"
#include "rieszlab/report.hpp"
#include "rieszlab/scaling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

namespace rieszlab::cli {

namespace {

namespace fs = std::filesystem;

std::string matrix_text(const CMatrix& m) {
    std::ostringstream s;
    write_matrix_csv(s, m);
    return s.str();
}

/// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file_atomic(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const std::map<std::string, GeneratorId> kFamilyGenerators{
    {"orthonormal", GeneratorId::Orthonormal},
    {"weighted", GeneratorId::WeightedPair},
    {"alternating", GeneratorId::AlternatingWeightedPair},
    {"young", GeneratorId::YoungExample},
    {"youngGeneral", GeneratorId::YoungGeneral},
    {"riesz", GeneratorId::RieszSeeded},
    {"punctured", GeneratorId::GaborPunctured},
    {"als", GeneratorId::GaborALS},
    {"lattice", GeneratorId::GaborFullLattice},
};

struct AnalyzeArgs {
    std::string in;
    std::string out;
};

struct DualArgs {
    std::string in;
    std::string out;
    std::string report;
};

struct ExampleArgs {
    std::string name;
    std::size_t n = 4;
    std::uint64_t seed = 1;
    std::size_t dim_k = 0;
    std::size_t complement = 2;
    std::string prefix;
};

struct FamilyArgs {
    std::string gen;
    std::vector<std::size_t> sizes;
    FamilyParameters params;
    std::string out;
};

struct GaborArgs {
    std::string set;
    int max_index = 2;
    int nmax = 1;
    std::string points;
    double a = 1.0;
    double b = 1.0;
    double half_width = 6.0;
    int samples = 16;
    std::vector<int> refine;
    std::string dump;
    std::string out;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const VectorSequence f(read_matrix_csv(fs::path(a.in)));
    const json report = analysis_report(f, json{{"command", "analyze"}, {"source", a.in}});
    emit(a.out, dump(report), out);
    return kOk;
}

int cmd_dual(const DualArgs& a, std::ostream& out) {
    const VectorSequence f(read_matrix_csv(fs::path(a.in)));
    const VectorSequence g = minimal_dual(f);
    write_file_atomic(a.out, matrix_text(g.columns()));

    json report;
    report["schemaVersion"] = kSchemaVersion;
    report["input"] = {{"command", "dual"}, {"source", a.in}, {"output", a.out}};
    report["dim"] = f.dim();
    report["count"] = f.count();
    const RieszBounds b = riesz_bounds(f);
    report["bounds"] = {{"rieszLower", number_or_null(b.lower)}, {"besselUpper", number_or_null(b.upper)}};
    report["defect"] = completeness_defect(f);
    report["dualBesselUpper"] = number_or_null(bessel_bound(g));
    report["residuals"] = {{"biorthogonality", number_or_null(biorthogonality_residual(f, g))},
                           {"dualityIdentity", number_or_null(duality_identity_residual(f, g))}};
    report["tolerances"] = tolerances_json();
    emit(a.report, dump(report), out);
    return kOk;
}

int cmd_example(const ExampleArgs& a, std::ostream& out) {
    GeneratedPair pair{orthonormal(1), std::nullopt};
    if (a.name == "orthonormal")
        pair = {orthonormal(a.n), std::nullopt};
    else if (a.name == "weighted")
        pair = weighted_pair(a.n);
    else if (a.name == "alternating")
        pair = alternating_weighted_pair(a.n);
    else if (a.name == "young")
        pair = young_example(a.n);
    else if (a.name == "youngGeneral")
        pair = young_general(a.dim_k == 0 ? a.n : a.dim_k, a.complement, a.n);
    else if (a.name == "riesz")
        pair = {random_riesz(a.n, a.seed), std::nullopt};

    const std::string prefix = a.prefix.empty() ? a.name : a.prefix;
    const std::string f_path = prefix + "_F.csv";
    write_file_atomic(f_path, matrix_text(pair.f.columns()));
    out << f_path << '\n';
    if (pair.g) {
        const std::string g_path = prefix + "_G.csv";
        write_file_atomic(g_path, matrix_text(pair.g->columns()));
        out << g_path << '\n';
    }
    return kOk;
}

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    FamilySpec spec;
    spec.generator = kFamilyGenerators.at(a.gen);
    spec.params = a.params;
    spec.sizes = a.sizes;
    const ScalingReport report = run_family(spec);

    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["input"] = {{"command", "family"},
                  {"generator", std::string(to_string(spec.generator))},
                  {"sizes", spec.sizes},
                  {"seed", spec.params.seed},
                  {"complementDim", spec.params.complement_dim},
                  {"latticeA", spec.params.lattice_a},
                  {"latticeB", spec.params.lattice_b},
                  {"halfWidth", spec.params.half_width},
                  {"samplesPerUnit", spec.params.samples_per_unit},
                  {"probeIndex", spec.params.probe_index}};
    j.update(scaling_report_json(report));
    j["tolerances"] = tolerances_json();

    if (a.out.empty()) {
        out << dump(j);
    } else {
        write_file_atomic(a.out + ".json", dump(j));
        write_file_atomic(a.out + ".csv", scaling_report_csv(report));
        out << a.out << ".json\n" << a.out << ".csv\n";
    }
    return kOk;
}

int cmd_gabor(const GaborArgs& a, std::ostream& out) {
    std::optional<PointSet2D> points;
    if (a.set == "lattice")
        points = lattice_points(a.a, a.b, a.max_index);
    else if (a.set == "punctured")
        points = punctured_lattice(a.max_index);
    else if (a.set == "als")
        points = als_point_set(a.nmax);
    else {
        if (a.points.empty())
            throw CLI::ValidationError("--points", "required when --set file");
        points = read_point_set_csv(fs::path(a.points));
    }

    const GaborDiscretization disc(a.half_width, a.samples);
    const VectorSequence f = gaussian_gabor(*points, disc);
    json j = analysis_report(f, json{{"command", "gabor"},
                                     {"set", a.set},
                                     {"nodes", points->size()},
                                     {"separation", number_or_null(points->separation())},
                                     {"halfWidth", a.half_width},
                                     {"samplesPerUnit", a.samples}});
    if (!a.refine.empty()) {
        std::vector<GaborDiscretization> discs;
        for (int s : a.refine)
            discs.emplace_back(a.half_width, s);
        j["refinement"] = scaling_report_json(gabor_refinement_study(*points, discs));
    }
    if (!a.dump.empty())
        write_file_atomic(a.dump, matrix_text(f.columns()));
    emit(a.out, dump(j), out);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riesz-basis diagnostics for finite vector systems", "rieszlab"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Bounds, defect and verdict of a system");
    analyze_cmd->add_option("--in", analyze.in, "Matrix CSV (columns are sequence members)")->required();
    analyze_cmd->add_option("--out", analyze.out, "Report JSON path (default: stdout)");

    DualArgs dual;
    auto* dual_cmd = app.add_subcommand("dual", "Minimal biorthogonal dual of a system");
    dual_cmd->add_option("--in", dual.in, "Matrix CSV")->required();
    dual_cmd->add_option("--out", dual.out, "Dual matrix CSV path")->required();
    dual_cmd->add_option("--report", dual.report, "Report JSON path (default: stdout)");

    ExampleArgs example;
    auto* example_cmd = app.add_subcommand("example", "Write a named system (and its partner) as CSV");
    example_cmd->add_option("name", example.name, "System name")
        ->required()
        ->check(CLI::IsMember({"orthonormal", "weighted", "alternating", "young", "youngGeneral", "riesz"}));
    example_cmd->add_option("--n", example.n, "Dimension / number of vectors")->check(CLI::PositiveNumber);
    example_cmd->add_option("--seed", example.seed, "Seed for riesz (default 1)");
    example_cmd->add_option("--dim-k", example.dim_k, "youngGeneral: dimension of K (default n)");
    example_cmd->add_option("--complement", example.complement, "youngGeneral: complement dimension")
        ->check(CLI::PositiveNumber);
    example_cmd->add_option("--prefix", example.prefix, "Output prefix (default: the name)");

    FamilyArgs family;
    auto* family_cmd = app.add_subcommand("family", "Truncation-size scaling study");
    std::vector<std::string> generator_names;
    for (const auto& [name, id] : kFamilyGenerators)
        generator_names.push_back(name);
    family_cmd->add_option("--gen", family.gen, "Generator")->required()->check(CLI::IsMember(generator_names));
    family_cmd->add_option("--sizes", family.sizes, "Comma-separated sizes")->required()->delimiter(',');
    family_cmd->add_option("--seed", family.params.seed, "Seed for riesz (default 1)");
    family_cmd->add_option("--complement", family.params.complement_dim, "youngGeneral complement dimension");
    family_cmd->add_option("--a", family.params.lattice_a, "lattice time spacing");
    family_cmd->add_option("--b", family.params.lattice_b, "lattice frequency spacing");
    family_cmd->add_option("--half-width", family.params.half_width, "Gabor grid half-width");
    family_cmd->add_option("--samples", family.params.samples_per_unit, "Gabor samples per unit");
    family_cmd->add_option("--probe-index", family.params.probe_index, "Defect-distance probe coordinate");
    family_cmd->add_option("--out", family.out, "Output prefix for <prefix>.json and <prefix>.csv");

    GaborArgs gabor;
    auto* gabor_cmd = app.add_subcommand("gabor", "Gaussian Gabor system on a point set");
    gabor_cmd->add_option("--set", gabor.set, "Point set")
        ->required()
        ->check(CLI::IsMember({"lattice", "punctured", "als", "file"}));
    gabor_cmd->add_option("--max-index", gabor.max_index, "lattice / punctured extent")->check(CLI::PositiveNumber);
    gabor_cmd->add_option("--nmax", gabor.nmax, "als extent")->check(CLI::PositiveNumber);
    gabor_cmd->add_option("--points", gabor.points, "Point-set CSV for --set file");
    gabor_cmd->add_option("--a", gabor.a, "lattice time spacing");
    gabor_cmd->add_option("--b", gabor.b, "lattice frequency spacing");
    gabor_cmd->add_option("--half-width", gabor.half_width, "Grid half-width X");
    gabor_cmd->add_option("--samples", gabor.samples, "Samples per unit s")->check(CLI::PositiveNumber);
    gabor_cmd->add_option("--refine", gabor.refine, "Comma-separated samples per unit for a refinement study")
        ->delimiter(',');
    gabor_cmd->add_option("--dump", gabor.dump, "Write the system matrix CSV here");
    gabor_cmd->add_option("--out", gabor.out, "Report JSON path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        try {
            if (analyze_cmd->parsed())
                return cmd_analyze(analyze, out);
            if (dual_cmd->parsed())
                return cmd_dual(dual, out);
            if (example_cmd->parsed())
                return cmd_example(example, out);
            if (family_cmd->parsed())
                return cmd_family(family, out);
            if (gabor_cmd->parsed())
                return cmd_gabor(gabor, out);
        } catch (const FamilyRunError& e) {
            // surface the generator's own failure class
            err << e.what() << '\n';
            std::rethrow_if_nested(e);
            return kNumeric;
        }
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const FamilySpecError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NoBiorthogonalSequenceError&) {
        err << "no biorthogonal sequence exists (minimality fails)\n";
        return kNoDual;
    } catch (const TruncationError& e) {
        err << "truncation error: node (" << format_real(e.tau()) << ", " << format_real(e.mu()) << "): " << e.what()
            << '\n';
        return kTruncation;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
    err << "usage error: no command\n";
    return kUsage;
}

} // namespace rieszlab::cli
