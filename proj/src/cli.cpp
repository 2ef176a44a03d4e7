#include "homolocal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

#include "homolocal/basis.hpp"
#include "homolocal/io.hpp"
#include "homolocal/oracle.hpp"

namespace homolocal::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings
{
    std::string input;
    int dim = 1;
    std::string mode = "improved";
    std::string rank = "auto";
    std::uint64_t seed = 0;
    int trials = 20;
    unsigned threads = 0;
    bool onedim_modified = false;
    bool require_classes = false;
    std::string out;
    std::string overlay;
    std::string dump_complex;
};

MeasureOptions measure_options(const Settings& s)
{
    MeasureOptions o;
    o.mode = s.mode == "naive" ? BminMode::Naive : BminMode::Improved;
    o.rank_method = s.rank == "exact" ? RankMethod::Exact
                    : s.rank == "randomized" ? RankMethod::Randomized
                                             : RankMethod::Auto;
    o.seed = s.seed;
    o.trials = s.trials;
    o.threads = s.threads;
    o.onedim_modified = s.onedim_modified;
    return o;
}

Json cycle_json(const SimplicialComplex& k, const Chain& z)
{
    Json simplices = Json::array();
    for (Index i : z.simplices)
        simplices.push_back(k.labels_of(z.dim, i));
    return simplices;
}

Json diagnostics_json(const Diagnostics& d)
{
    return Json{{"carriage_tests", d.carriage_tests},   {"randomized_ranks", d.randomized_ranks},
                {"exact_ranks", d.exact_ranks},         {"rank_rechecks", d.rank_rechecks},
                {"rank_escalations", d.rank_escalations}, {"rank_unresolved", d.rank_unresolved}};
}

Json result_json(const SimplicialComplex& k, const BasisResult& r)
{
    Json classes = Json::array();
    for (const auto& m : r.classes)
        classes.push_back(Json{{"size", m.size}, {"center", k.label(m.center)}, {"cycle", cycle_json(k, m.cycle)}});
    Json seals = Json::array();
    for (const auto& s : r.seal_log)
        seals.push_back(Json{{"vertex", r.sealed.label(s.vertex)}, {"added", s.added}});
    return Json{{"dim", r.dim},
                {"betti", r.betti},
                {"classes", std::move(classes)},
                {"seal_log", std::move(seals)},
                {"diagnostics", diagnostics_json(r.diagnostics)}};
}

void write_overlay(std::ostream& out, const LoadedComplex& input, const BasisResult& r)
{
    const auto& k = input.complex;
    if (input.coordinates)
    {
        std::vector<VertexLabel> used;
        for (const auto& m : r.classes)
            for (VertexId v : k.support_vertices(m.cycle))
                used.push_back(k.label(v));
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (VertexLabel l : used)
        {
            const auto& p = (*input.coordinates)[static_cast<std::size_t>(l)];
            out << "vertex " << l << ' ' << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
        }
    }
    for (std::size_t c = 0; c < r.classes.size(); ++c)
    {
        const auto& m = r.classes[c];
        out << "cycle " << c << " dim " << m.cycle.dim << " size " << m.size << " simplices "
            << m.cycle.simplices.size() << '\n';
        for (Index i : m.cycle.simplices)
        {
            const auto labels = k.labels_of(m.cycle.dim, i);
            for (std::size_t j = 0; j < labels.size(); ++j)
                out << (j ? " " : "") << labels[j];
            out << '\n';
        }
    }
}

void emit(const Settings& s, const Json& j, std::ostream& out)
{
    if (s.out.empty())
    {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(s.out);
    if (!file)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + s.out);
    file << j.dump(2) << '\n';
}

void write_file(const std::string& path, auto&& writer)
{
    std::ofstream file(path);
    if (!file)
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    writer(file);
}

int measure_command(const Settings& s, bool whole_basis, std::ostream& out)
{
    const LoadedComplex input = load_complex(s.input);
    const auto& k = input.complex;
    if (!s.dump_complex.empty())
        write_file(s.dump_complex, [&](std::ostream& f) { write_cplx(f, k); });

    BasisResult r;
    const auto options = measure_options(s);
    if (whole_basis)
        r = measure_all(k, s.dim, options);
    else
    {
        r.dim = s.dim;
        r.betti = betti_number(k, s.dim);
        r.sealed = k;
        if (r.betti > 0)
            r.classes.push_back(measure_smallest(k, s.dim, options, &r.diagnostics));
    }
    if (!s.overlay.empty())
        write_file(s.overlay, [&](std::ostream& f) { write_overlay(f, input, r); });
    emit(s, result_json(k, r), out);
    return r.classes.empty() && s.require_classes ? kNoClass : kOk;
}

int oracle_command(const Settings& s, std::ostream& out)
{
    const LoadedComplex input = load_complex(s.input);
    const auto& k = input.complex;
    const auto expected = oracle::brute_optimal_basis(k, s.dim);
    const auto r = measure_all(k, s.dim, measure_options(s));
    std::vector<std::uint32_t> measured;
    for (const auto& m : r.classes)
        measured.push_back(m.size);
    std::sort(measured.begin(), measured.end());
    const bool agree = measured == expected;
    emit(s, Json{{"dim", s.dim}, {"betti", r.betti}, {"oracle_sizes", expected}, {"measured_sizes", measured},
                 {"agree", agree}},
         out);
    return agree ? kOk : kFailure;
}

int rankcheck_command(const Settings& s, std::size_t count, std::size_t max_size, std::ostream& out)
{
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<std::size_t> side(1, std::max<std::size_t>(max_size, 1));
    std::uniform_real_distribution<double> density(0.05, 0.5);
    std::size_t agree = 0, over = 0, under = 0;
    for (std::size_t t = 0; t < count; ++t)
    {
        const std::size_t rows = side(rng), cols = side(rng);
        std::bernoulli_distribution one(density(rng));
        SparseZ2Matrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
        {
            SparseZ2Matrix::Column c;
            for (Index i = 0; i < rows; ++i)
                if (one(rng))
                    c.push_back(i);
            m.set_column(j, std::move(c));
        }
        const std::size_t exact = rank_dense(m);
        const std::size_t estimate = rank_randomized(m, derive_seed(s.seed, t), s.trials);
        (estimate == exact ? agree : estimate > exact ? over : under)++;
    }
    emit(s, Json{{"matrices", count}, {"agree", agree}, {"overestimates", over}, {"underestimates", under}}, out);
    return over == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Measure and localize Z2 homology classes of simplicial complexes"};
    app.require_subcommand(1);
    Settings s;
    std::size_t count = 1000, max_size = 64;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", s.seed, "Master random seed")->envname("HOMOLOCAL_SEED");
        sub->add_option("--trials", s.trials, "Sketches per randomized rank probe")->check(CLI::PositiveNumber);
        sub->add_option("--out", s.out, "Write JSON here instead of stdout");
    };
    auto measuring = [&](CLI::App* sub) {
        common(sub);
        sub->add_option("input", s.input, "Complex file (.cplx or OFF)")->required();
        sub->add_option("--dim", s.dim, "Homology dimension")->check(CLI::PositiveNumber);
        sub->add_option("--mode", s.mode, "Ball search")->check(CLI::IsMember({"naive", "improved"}));
        sub->add_option("--rank", s.rank, "Rank method for carriage tests")
            ->check(CLI::IsMember({"auto", "randomized", "exact"}));
        sub->add_option("--threads", s.threads, "Worker threads, 0 for all cores");
        sub->add_flag("--onedim-modified", s.onedim_modified, "Filter-sorted reduction for 1-cycles");
    };

    auto* smallest = app.add_subcommand("smallest", "Size and cycle of the smallest class");
    measuring(smallest);
    auto* basis = app.add_subcommand("basis", "Optimal homology basis");
    measuring(basis);
    for (auto* sub : {smallest, basis})
    {
        sub->add_option("--overlay", s.overlay, "Write cycles in overlay text format");
        sub->add_flag("--require-classes", s.require_classes, "Exit 3 when no class exists");
        sub->add_option("--dump-complex", s.dump_complex, "Write the parsed complex as .cplx");
    }
    auto* oracle_cmd = app.add_subcommand("oracle", "Compare the basis with brute force");
    measuring(oracle_cmd);
    auto* rankcheck = app.add_subcommand("rankcheck", "Randomized rank self-test");
    common(rankcheck);
    rankcheck->add_option("--count", count, "Number of random matrices");
    rankcheck->add_option("--size", max_size, "Largest side length");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return kOk;
    }
    catch (const CLI::ParseError& e)
    {
        err << "homolocal: " << e.what() << '\n';
        return kInputError;
    }

    try
    {
        if (*smallest)
            return measure_command(s, false, out);
        if (*basis)
            return measure_command(s, true, out);
        if (*oracle_cmd)
            return oracle_command(s, out);
        return rankcheck_command(s, count, max_size, out);
    }
    catch (const Error& e)
    {
        err << "homolocal: " << to_string(e.kind()) << ": " << e.what() << '\n';
        switch (e.kind())
        {
            case ErrorKind::EmptyInput:
            case ErrorKind::ParseError:
            case ErrorKind::InvalidArgument:
            case ErrorKind::TooLarge: return kInputError;
            case ErrorKind::NoNontrivialClass: return s.require_classes ? kNoClass : kFailure;
            default: return kFailure;
        }
    }
    catch (const std::exception& e)
    {
        err << "homolocal: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace homolocal::cli
