#include "paramhom/cli.hpp"

#include "paramhom/bottleneck.hpp"
#include "paramhom/cohomology.hpp"
#include "paramhom/extended.hpp"
#include "paramhom/io.hpp"
#include "paramhom/levelset.hpp"
#include "paramhom/measures.hpp"
#include "paramhom/properties.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <ostream>

namespace paramhom
{

namespace
{

/// Bad command-line values that CLI11 cannot see (rectangle order, ...).
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string fixed9(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

Rectangle parse_rectangle(std::vector<std::string> const& corners)
{
    if (corners.size() != 4)
        throw UsageError("--rect takes four values a b c d");
    Rectangle r{};
    try {
        r = {parse_value(corners[0]), parse_value(corners[1]), parse_value(corners[2]),
             parse_value(corners[3])};
    } catch (ParseError const& e) {
        throw UsageError(std::string("--rect: ") + e.what());
    }
    if (!r.valid())
        throw UsageError("--rect needs a < b < c < d with b and c finite, got " +
                         describe_rectangle(r));
    return r;
}

Behavior parse_type(std::string const& code)
{
    try {
        return behavior_from_code(code);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

/// Options shared by subcommands that read a space.
struct SpaceArgs
{
    std::string input;
    int dim = -1;
};

InputDocument load_space(std::string const& path)
{
    return parse_input(read_file(path));
}

int dims_or_default(InputDocument const& doc, int dim)
{
    return dim >= 0 ? dim : doc.max_dim;
}

void emit(std::string const& text, std::string const& path, std::ostream& out)
{
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parametrized homology of constructible R-spaces", "paramhom"};
    app.require_subcommand(1);

    // diagram
    SpaceArgs dg;
    bool dg_cohomology = false, dg_measures = false;
    std::string dg_out;
    auto* diagram = app.add_subcommand("diagram", "Compute the four decorated diagrams");
    diagram->add_option("input", dg.input, "Input space (JSON)")->required();
    diagram->add_option("--dim", dg.dim, "Only this homology degree");
    diagram->add_flag("--cohomology", dg_cohomology, "Use the dual (cohomology) zigzag");
    diagram->add_flag("--via-measures", dg_measures,
                      "Recover the diagrams from rectangle measures instead");
    diagram->add_option("--out", dg_out, "Output file (default: standard output)");

    // measure
    SpaceArgs ms;
    std::string ms_type;
    std::vector<std::string> ms_rect;
    auto* measure = app.add_subcommand("measure", "Evaluate one rectangle measure");
    measure->add_option("input", ms.input, "Input space (JSON)")->required();
    measure->add_option("--type", ms_type, "oo, co, oc or cc")->required();
    measure->add_option("--dim", ms.dim, "Homology degree")->required();
    measure->add_option("--rect", ms_rect, "Rectangle corners a b c d")->expected(4)->allow_extra_args(false)->required();

    // bottleneck
    std::string bn_a, bn_b, bn_type;
    int bn_dim = 0;
    auto* bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance of two diagrams");
    bottleneck->add_option("first", bn_a, "Diagram file")->required();
    bottleneck->add_option("second", bn_b, "Diagram file")->required();
    bottleneck->add_option("--dim", bn_dim, "Homology degree")->required();
    bottleneck->add_option("--type", bn_type, "oo, co, oc or cc")->required();

    // stability
    SpaceArgs st;
    std::vector<std::string> st_values;
    auto* stability = app.add_subcommand("stability", "Compare with perturbed critical values");
    stability->add_option("input", st.input, "Input space (JSON)")->required();
    stability->add_option("--values", st_values, "Perturbed critical values")->required();
    stability->add_option("--dim", st.dim, "Highest homology degree");

    // extended
    SpaceArgs ex;
    std::string ex_type;
    std::vector<std::string> ex_rect;
    auto* extended = app.add_subcommand("extended", "Extended persistence diagrams");
    extended->add_option("input", ex.input, "Input space (JSON)")->required();
    extended->add_option("--dim", ex.dim, "Highest degree (with --rect: the degree)");
    extended->add_option("--type", ex_type, "ord, rel, ext+ or ext- (with --rect)");
    extended->add_option("--rect", ex_rect, "Evaluate one extended measure")
        ->expected(4)
        ->allow_extra_args(false);

    // validate
    SpaceArgs va;
    ValidateOptions va_opts;
    auto* validate_cmd = app.add_subcommand("validate", "Run the property suites on a space");
    validate_cmd->add_option("input", va.input, "Input space (JSON)")->required();
    validate_cmd->add_option("--dim", va.dim, "Highest homology degree");
    validate_cmd->add_option("--rectangles", va_opts.rectangles, "Rectangles per suite");
    validate_cmd->add_option("--seed", va_opts.seed, "Random seed");
    validate_cmd->add_flag("--inject-fault", va_opts.inject_fault,
                           "Zero one arrow of every rectangle zigzag (negative control)");

    // plot
    std::string pl_in, pl_out;
    auto* plot = app.add_subcommand("plot", "Render a diagram file as SVG");
    plot->add_option("diagram", pl_in, "Diagram file")->required();
    plot->add_option("--out", pl_out, "SVG file (default: standard output)");

    std::vector<char const*> argv{"paramhom"};
    for (auto const& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (diagram->parsed()) {
            auto const doc = load_space(dg.input);
            PrimeField const field(doc.characteristic);
            int const top = dims_or_default(doc, dg.dim);
            std::vector<DiagramSet> sets;
            if (dg_cohomology) {
                try {
                    sets = parametrized_cohomology(doc.space, top, field);
                } catch (ContractError const& e) {
                    err << "error: " << e.what() << "\n";
                    return exit_property_failure;
                }
            } else if (dg_measures) {
                MeasureEngine engine(doc.space, field);
                for (int k = 0; k <= top; ++k)
                    sets.push_back(engine.extract(k));
            } else {
                sets = parametrized_homology(doc.space, top, field);
            }
            if (dg.dim >= 0) {
                auto one = sets.back();
                sets = {one};
            }
            emit(serialize(make_document(sets)), dg_out, out);
            return exit_ok;
        }

        if (measure->parsed()) {
            auto const type = parse_type(ms_type);
            auto const rect = parse_rectangle(ms_rect);
            if (ms.dim < 0)
                throw UsageError("--dim must be nonnegative");
            auto const doc = load_space(ms.input);
            PrimeField const field(doc.characteristic);
            auto const direct = measure_direct(doc.space, ms.dim, type, rect, field);
            auto const sets = parametrized_homology(doc.space, ms.dim, field);
            auto const counted = sets[ms.dim][type].count_in(rect);
            out << direct << "\n";
            out << "# diagram count " << counted << (counted == direct ? " (agrees)" : " (DISAGREES)")
                << "\n";
            if (counted != direct) {
                err << "error: direct measure and diagram count disagree\n";
                return exit_property_failure;
            }
            return exit_ok;
        }

        if (bottleneck->parsed()) {
            auto const type = parse_type(bn_type);
            auto const a = parse_diagram_document(read_file(bn_a));
            auto const b = parse_diagram_document(read_file(bn_b));
            double const d = bottleneck_distance(undecorate(select(a, bn_dim, type)),
                                                 undecorate(select(b, bn_dim, type)));
            out << fixed9(d) << "\n";
            return exit_ok;
        }

        if (stability->parsed()) {
            std::vector<double> values;
            for (auto const& v : st_values) {
                try {
                    values.push_back(parse_value(v));
                } catch (ParseError const& e) {
                    throw UsageError(std::string("--values: ") + e.what());
                }
            }
            auto const doc = load_space(st.input);
            int const top = dims_or_default(doc, st.dim);
            std::vector<StabilityRecord> report;
            try {
                report = stability_report(doc.space, values, top, PrimeField(doc.characteristic));
            } catch (ContractError const& e) {
                throw UsageError(e.what());
            }
            bool ok = true;
            out << "# dim type bottleneck delta result\n";
            for (auto const& r : report) {
                out << r.dim << ' ' << behavior_code(r.type) << ' ' << fixed9(r.distance) << ' '
                    << fixed9(r.delta) << ' ' << (r.pass ? "pass" : "FAIL") << "\n";
                ok = ok && r.pass;
            }
            return ok ? exit_ok : exit_property_failure;
        }

        if (extended->parsed()) {
            auto const doc = load_space(ex.input);
            PrimeField const field(doc.characteristic);
            if (!ex_rect.empty()) {
                auto const rect = parse_rectangle(ex_rect);
                if (ex_type.empty() || ex.dim < 0)
                    throw UsageError("--rect needs --type and --dim");
                ExtendedType t;
                try {
                    t = extended_from_code(ex_type);
                } catch (std::invalid_argument const& e) {
                    throw UsageError(e.what());
                }
                out << extended_direct(doc.space, ex.dim, t, rect, field) << "\n";
                return exit_ok;
            }
            int const top = dims_or_default(doc, ex.dim);
            auto const all = extended_from_parametrized(parametrized_homology(doc.space, top, field));
            out << "# dim type birth death multiplicity\n";
            for (auto const& row : all)
                for (auto const& d : row)
                    for (auto const& [pt, m] : d.points)
                        out << d.dim << ' ' << extended_code(d.type) << ' '
                            << format_value(pt.first) << ' ' << format_value(pt.second) << ' '
                            << m << "\n";
            return exit_ok;
        }

        if (validate_cmd->parsed()) {
            auto const doc = load_space(va.input);
            int const top = dims_or_default(doc, va.dim);
            auto const results =
                validate_properties(doc.space, top, PrimeField(doc.characteristic), va_opts);
            bool ok = true;
            for (auto const& r : results) {
                if (r.passed)
                    out << "PASS " << r.name << " (" << r.checks << " checks)\n";
                else
                    out << "FAIL " << r.name << ": " << r.detail << "\n";
                ok = ok && r.passed;
            }
            return ok ? exit_ok : exit_property_failure;
        }

        if (plot->parsed()) {
            auto const doc = parse_diagram_document(read_file(pl_in));
            emit(render_svg(doc), pl_out, out);
            return exit_ok;
        }
    } catch (UsageError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (ParseError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (ContractError const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (std::runtime_error const& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace paramhom
