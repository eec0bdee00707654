#include "discseq/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "discseq/analysis.hpp"
#include "discseq/error.hpp"
#include "discseq/io.hpp"
#include "discseq/kernels.hpp"
#include "discseq/sequences.hpp"

namespace discseq::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << bytes;
    if (!f) throw std::runtime_error("failed writing output file: " + path);
}

Point point_from(const std::vector<double>& re_im) {
    return Point{Complex{re_im[0], re_im[1]}};
}

struct ConstructOpts {
    std::string domain;
    std::string kind; // inferred from domain when empty
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    double delta = std::numeric_limits<double>::quiet_NaN();
    std::size_t count = 0;
    std::string out = "-";
    // pack walk
    double c = 1.0;
    std::vector<double> origin;
    std::vector<double> direction;
    double initial_step = 0.1;
    double max_step = 1.0;
};

struct VerifyOpts {
    std::string in;
    double delta = std::numeric_limits<double>::quiet_NaN();
};

struct PartitionOpts {
    std::string in;
    double delta = std::numeric_limits<double>::quiet_NaN();
    std::string out = "-";
};

struct SumOpts {
    std::string in;
    std::string terms_path;
    std::string kind;
    double s = 2.0;
    double p = std::numeric_limits<double>::quiet_NaN(); // default: set by kind
    int n = 0;                                           // default: domain dimension
    std::string csv = "-";
};

struct TransportOpts {
    std::string in;
    std::vector<double> map; // 8 reals: a,b,c,d as re/im pairs
    std::string out = "-";
};

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"uniformly discrete sequences in model complex domains"};
    app.require_subcommand(1);

    std::string backend = "auto";
    app.add_option("--backend", backend, "kernel backend: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    int rc = 0;

    auto construct_opts = std::make_shared<ConstructOpts>();
    auto* construct = app.add_subcommand("construct", "build a sequence and write it as JSON");
    construct->fallthrough();
    construct->add_option("--domain", construct_opts->domain, "halfplane or disc")
        ->required()
        ->check(CLI::IsMember({"halfplane", "disc"}));
    construct->add_option("--kind", construct_opts->kind, "line, horocycle, or pack (default matches the domain)")
        ->check(CLI::IsMember({"line", "horocycle", "pack"}));
    construct->add_option("--epsilon", construct_opts->epsilon, "boundary distance of the line/horocycle");
    construct->add_option("--delta", construct_opts->delta, "pairwise separation");
    construct->add_option("--count", construct_opts->count, "number of points")->required();
    construct->add_option("--out", construct_opts->out, "output path, - for stdout");
    construct->add_option("--c", construct_opts->c, "boundary-distance floor for pack");
    construct->add_option("--origin", construct_opts->origin, "walk origin for pack: re im")->expected(2);
    construct->add_option("--direction", construct_opts->direction, "walk direction for pack: re im (unit norm)")
        ->expected(2);
    construct->add_option("--initial-step", construct_opts->initial_step, "first step of the pack walk");
    construct->add_option("--max-step", construct_opts->max_step, "step cap of the pack walk");
    construct->callback([construct_opts, &backend]() {
        kernels::select(backend.c_str());
        const ConstructOpts& o = *construct_opts;
        std::string kind = o.kind;
        if (kind.empty()) kind = o.domain == "halfplane" ? "line" : "horocycle";

        PointSequence seq = [&]() {
            if (kind == "pack") {
                if (o.origin.empty() || o.direction.empty())
                    throw CLI::ValidationError("construct", "--kind pack needs --origin and --direction");
                PackerConfig cfg;
                cfg.c = o.c;
                cfg.delta = std::isnan(o.delta) ? 1.0 : o.delta;
                cfg.count = o.count;
                cfg.walk.origin = point_from(o.origin);
                cfg.walk.direction = point_from(o.direction);
                cfg.walk.initial_step = o.initial_step;
                cfg.walk.max_step = o.max_step;
                const Domain dom = o.domain == "disc" ? Domain::unit_disc() : Domain::right_half_plane();
                return greedy_pack(dom, cfg);
            }
            if (std::isnan(o.epsilon) || std::isnan(o.delta))
                throw CLI::ValidationError("construct", "--kind " + kind + " needs --epsilon and --delta");
            if (kind == "line") {
                if (o.domain != "halfplane")
                    throw CLI::ValidationError("construct", "--kind line lives on --domain halfplane");
                return construct_halfplane_line_sequence(o.epsilon, o.delta, o.count);
            }
            if (o.domain != "disc")
                throw CLI::ValidationError("construct", "--kind horocycle lives on --domain disc");
            return construct_disc_horocycle_sequence(o.epsilon, o.delta, o.count);
        }();
        write_output(o.out, io::encode_sequence(seq));
    });

    auto verify_opts = std::make_shared<VerifyOpts>();
    auto* verify = app.add_subcommand("verify", "check uniform discreteness of a sequence file");
    verify->fallthrough();
    verify->add_option("--in", verify_opts->in, "sequence file")->required();
    verify->add_option("--delta", verify_opts->delta, "required separation")->required();
    verify->callback([verify_opts, &backend, &rc]() {
        kernels::select(backend.c_str());
        const PointSequence seq = io::decode_sequence(read_file(verify_opts->in));
        if (seq.points.size() >= 2) {
            const SeparationReport rep = separation_constant(seq);
            std::ostringstream line;
            line.precision(17);
            line << "min separation " << rep.min_distance << " attained at pair (" << rep.argmin_i << ", "
                 << rep.argmin_j << ") over " << rep.count << " points\n";
            std::cout << line.str();
        } else {
            std::cout << "fewer than two points; separation is vacuous\n";
        }
        const bool ok = is_uniformly_discrete(seq, verify_opts->delta);
        std::cout << "uniformly discrete at delta " << verify_opts->delta << ": " << (ok ? "yes" : "no") << "\n";
        if (!ok) rc = 1;
    });

    auto partition_opts = std::make_shared<PartitionOpts>();
    auto* partition = app.add_subcommand("partition", "split a sequence into delta-separated classes");
    partition->fallthrough();
    partition->add_option("--in", partition_opts->in, "sequence file")->required();
    partition->add_option("--delta", partition_opts->delta, "required separation within a class")->required();
    partition->add_option("--out", partition_opts->out, "output path, - for stdout");
    partition->callback([partition_opts, &backend]() {
        kernels::select(backend.c_str());
        const PointSequence seq = io::decode_sequence(read_file(partition_opts->in));
        const Partition part = partition_into_discrete(seq, partition_opts->delta);
        write_output(partition_opts->out, io::encode_partition(part));
        std::cerr << "classes: " << part.classes.size() << "\n";
    });

    auto sum_opts = std::make_shared<SumOpts>();
    auto* sum = app.add_subcommand("sum", "evaluate a boundary series and write a CSV report");
    sum->fallthrough();
    sum->add_option("--in", sum_opts->in, "sequence file");
    sum->add_option("--terms", sum_opts->terms_path, "raw term table, one value per line");
    sum->add_option("--kind", sum_opts->kind, "carleson, theorem1, theorem2, or divergence")
        ->check(CLI::IsMember({"carleson", "theorem1", "theorem2", "divergence"}));
    sum->add_option("--s", sum_opts->s, "weight exponent of x^s (default 2)");
    sum->add_option("--p", sum_opts->p, "boundary-distance exponent override");
    sum->add_option("--n", sum_opts->n, "dimension exponent for carleson (default: domain dimension)");
    sum->add_option("--csv", sum_opts->csv, "report path, - for stdout");
    sum->callback([sum_opts, sum, &backend]() {
        kernels::select(backend.c_str());
        const SumOpts& o = *sum_opts;
        const bool n_given = sum->count("--n") > 0;
        if (o.in.empty() == o.terms_path.empty())
            throw CLI::ValidationError("sum", "exactly one of --in and --terms is required");

        SumReport rep = [&]() {
            if (!o.terms_path.empty()) {
                if (!o.kind.empty())
                    throw CLI::ValidationError("sum", "--kind does not apply to a raw --terms table");
                std::vector<double> terms;
                std::istringstream in(read_file(o.terms_path));
                std::string line;
                std::size_t ln = 0;
                while (std::getline(in, line)) {
                    ++ln;
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty()) continue;
                    char* end = nullptr;
                    const double v = std::strtod(line.c_str(), &end);
                    if (end != line.c_str() + line.size())
                        raise(ErrorCode::SchemaError,
                              "terms line " + std::to_string(ln) + ": expected one number, got '" + line + "'");
                    terms.push_back(v);
                }
                return sum_terms(std::move(terms));
            }
            if (o.kind.empty()) throw CLI::ValidationError("sum", "--kind is required with --in");
            const PointSequence seq = io::decode_sequence(read_file(o.in));
            const int dim = seq.domain.dimension();
            if (o.kind == "carleson") return carleson_mass(seq, n_given ? o.n : dim);
            if (o.kind == "divergence") return divergence_sum(seq, WeightFunction::power(o.s));
            const double p = !std::isnan(o.p) ? o.p : (o.kind == "theorem1" ? dim : 2.0 * dim);
            return theorem_sum(seq, p, WeightFunction::power(o.s));
        }();

        const std::string csv = io::emit_report_csv(rep);
        io::read_report_csv(csv); // self-check: schema + nondecreasing partial sums
        write_output(o.csv, csv);
        std::cerr << "verdict: " << verdict_name(rep.verdict) << " (heuristic)\n";
    });

    auto transport_opts = std::make_shared<TransportOpts>();
    auto* transport = app.add_subcommand("transport", "push a sequence file through a Moebius map");
    transport->fallthrough();
    transport->add_option("--in", transport_opts->in, "sequence file")->required();
    transport->add_option("--map", transport_opts->map,
                          "coefficients a b c d as re im pairs (default: the Cayley map)")
        ->expected(8);
    transport->add_option("--out", transport_opts->out, "output path, - for stdout");
    transport->callback([transport_opts, &backend]() {
        kernels::select(backend.c_str());
        const TransportOpts& o = *transport_opts;
        const MoebiusMap map = o.map.empty()
                                   ? MoebiusMap::cayley()
                                   : MoebiusMap::make(Complex{o.map[0], o.map[1]}, Complex{o.map[2], o.map[3]},
                                                      Complex{o.map[4], o.map[5]}, Complex{o.map[6], o.map[7]});
        const PointSequence seq = io::decode_sequence(read_file(o.in));
        write_output(o.out, io::encode_sequence(transport_sequence(seq, map)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("discseq");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace discseq::cli
