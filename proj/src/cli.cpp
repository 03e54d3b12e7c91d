#include "degcut/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "degcut/connectivity.hpp"
#include "degcut/constructions.hpp"
#include "degcut/cut_search.hpp"
#include "degcut/degeneracy.hpp"
#include "degcut/enumerate.hpp"
#include "degcut/errors.hpp"
#include "degcut/graph6.hpp"
#include "degcut/parallel.hpp"
#include "degcut/verify.hpp"

namespace degcut {

namespace {

using json = nlohmann::ordered_json;

json members(const VertexSet& s) { return s.members(); }

json certificate_json(const CutCertificate& c) {
    json parts = json::array();
    for (const auto& p : c.components)
        parts.push_back(members(p));
    return {{"cut", members(c.cut)},           {"components", parts},
            {"cut_degeneracy", c.cut_degeneracy}, {"independent", c.independent},
            {"forest", c.forest},               {"bipartite", c.bipartite}};
}

std::string_view outcome_name(SearchOutcome o) {
    switch (o) {
    case SearchOutcome::found:
        return "found";
    case SearchOutcome::none:
        return "none";
    case SearchOutcome::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

struct Options {
    std::string input;
    bool quiet = false;
    int jobs = 1;

    int k = 2;
    int n = 0;
    int s = 3;
    std::uint64_t perm_seed = 0;
    bool minimum = false;
    std::uint64_t budget = default_subset_budget;

    std::string theorem;
    bool exhaustive = false;
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;

    int min_degree = -1;
    int min_edges = 0;
    int max_edges = -1;
    bool connected = false;
    bool iso = false;
};

class Session {
public:
    Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

    // Visits each input graph with its graph6 text.
    template <class Fn>
    void each_input(Fn&& fn) {
        std::unique_ptr<std::ifstream> file;
        std::istream* src = &in_;
        if (!opt_.input.empty()) {
            file = std::make_unique<std::ifstream>(opt_.input);
            if (!*file)
                throw std::ios_base::failure("cannot open " + opt_.input);
            src = file.get();
        }
        Graph6Reader reader(*src);
        while (auto g = reader.next())
            fn(*g);
    }

    int analyze() {
        each_input([&](const Graph& g) {
            json row{{"graph6", to_graph6(g)}, {"n", g.order()},   {"m", g.size()},
                     {"min_degree", g.min_degree()}, {"degeneracy", degeneracy(g)}};
            row["kappa"] = g.order() >= 2 ? json(vertex_connectivity(g)) : json(nullptr);
            out_ << row.dump() << '\n';
        });
        return exit_ok;
    }

    int find_cut() {
        int code = exit_ok;
        each_input([&](const Graph& g) {
            CutSearchResult r;
            try {
                r = opt_.minimum ? find_min_degenerate_cut(g, opt_.k) : find_degenerate_cut(g, opt_.k, opt_.budget);
            } catch (const no_cuts_exist&) {
                r.outcome = SearchOutcome::none;
            }
            if (r.outcome == SearchOutcome::none)
                code = std::max<int>(code, exit_negative);
            if (r.outcome == SearchOutcome::budget_exceeded && code == exit_ok)
                code = exit_undecided;
            if (opt_.quiet) {
                out_ << outcome_name(r.outcome) << '\n';
                return;
            }
            json row{{"graph6", to_graph6(g)}, {"k", opt_.k}, {"outcome", outcome_name(r.outcome)}};
            row["cut"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
            out_ << row.dump() << '\n';
        });
        return code;
    }

    int min_cuts() {
        int code = exit_ok;
        each_input([&](const Graph& g) {
            json row{{"graph6", to_graph6(g)}};
            if (g.is_complete()) {
                row["kappa"] = g.order() >= 2 ? json(g.order() - 1) : json(nullptr);
                row["cuts"] = nullptr;
                row["error"] = "no cuts exist";
                code = exit_negative;
            } else {
                row["kappa"] = vertex_connectivity(g);
                json cuts = json::array();
                for (const auto& c : minimum_cuts(g))
                    cuts.push_back(certificate_json(c));
                row["cuts"] = cuts;
            }
            out_ << row.dump() << '\n';
        });
        return code;
    }

    int construct_ring() {
        RingSpec spec = opt_.perm_seed != 0 ? random_ring_spec(opt_.k, opt_.s, opt_.perm_seed) : RingSpec{opt_.k, opt_.s, {}};
        out_ << to_graph6(ring_of_cliques(spec)) << '\n';
        return exit_ok;
    }

    int construct_join() {
        out_ << to_graph6(join_extremal(opt_.k, opt_.n)) << '\n';
        return exit_ok;
    }

    EnumerationSpec enumeration() const {
        EnumerationSpec spec;
        spec.n = opt_.n;
        spec.min_edges = opt_.min_edges;
        if (opt_.max_edges >= 0)
            spec.max_edges = opt_.max_edges;
        if (opt_.min_degree >= 0)
            spec.min_degree = opt_.min_degree;
        spec.connected_only = opt_.connected;
        spec.iso_reject = opt_.iso;
        return spec;
    }

    int enumerate() {
        auto spec = enumeration();
        int prefix = 0;
        if (opt_.jobs > 1)
            while ((1 << prefix) < 16 * opt_.jobs && prefix < spec.pair_count())
                ++prefix;
        auto parts = split_enumeration(spec, prefix);
        std::vector<std::string> chunks(parts.size());
        parallel_for(parts.size(), opt_.jobs, [&](std::size_t i) {
            std::string buf;
            for_each_labeled(
                spec, [&](const Graph& g) { buf += to_graph6(g) + '\n'; }, parts[i]);
            chunks[i] = std::move(buf);
        });
        for (const auto& c : chunks)
            out_ << c;
        return exit_ok;
    }

    int verify() {
        auto statement = parse_statement(opt_.theorem);
        if (!statement)
            throw invalid_input("unknown theorem " + opt_.theorem);

        VerificationReport report;
        if (opt_.exhaustive) {
            report = verify_enumeration(*statement, opt_.k, enumeration(), opt_.jobs);
        } else if (opt_.sample > 0) {
            std::mt19937_64 rng(opt_.seed);
            std::uniform_real_distribution<double> density(0.0, 1.0);
            std::uint64_t left = opt_.sample;
            report = verify_stream(*statement, opt_.k, [&]() -> std::optional<Graph> {
                if (left == 0)
                    return std::nullopt;
                --left;
                double p = density(rng);
                return random_graph(opt_.n, p, rng);
            });
        } else {
            std::vector<Graph> graphs;
            each_input([&](const Graph& g) { graphs.push_back(g); });
            std::size_t i = 0;
            report = verify_stream(*statement, opt_.k, [&]() -> std::optional<Graph> {
                if (i == graphs.size())
                    return std::nullopt;
                return graphs[i++];
            });
        }
        if (opt_.quiet)
            out_ << (report.passed() ? "PASS" : "FAIL") << '\n';
        else
            out_ << report.to_json().dump() << '\n';
        if (!report.passed())
            return exit_negative;
        return report.undecided > 0 ? exit_undecided : exit_ok;
    }

private:
    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Degenerate vertex cut analysis, constructions and exhaustive verification", "degcut"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.add_flag("--quiet", opt.quiet, "Print only the verdict / outcome");
    app.add_option("--jobs", opt.jobs, "Worker threads for verify and enumerate")->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "Order, size, minimum degree, degeneracy and connectivity");
    analyze->add_option("--input", opt.input, "graph6 file (default: stdin)");

    auto* find_cut = app.add_subcommand("find-cut", "Find a k-degenerate cut");
    find_cut->add_option("--k", opt.k, "Degeneracy threshold")->required()->check(CLI::NonNegativeNumber);
    find_cut->add_flag("--minimum", opt.minimum, "Restrict to minimum cuts");
    find_cut->add_option("--budget", opt.budget, "Subset budget for the exhaustive search");
    find_cut->add_option("--input", opt.input, "graph6 file (default: stdin)");

    auto* min_cuts = app.add_subcommand("min-cuts", "List every minimum vertex cut");
    min_cuts->add_option("--input", opt.input, "graph6 file (default: stdin)");

    auto* construct = app.add_subcommand("construct", "Emit an extremal construction as graph6");
    construct->require_subcommand(1);
    auto* ring = construct->add_subcommand("ring", "Ring of (k+2)-cliques with an apex");
    ring->add_option("--k", opt.k)->required();
    ring->add_option("--s", opt.s)->required();
    ring->add_option("--perm-seed", opt.perm_seed, "Random interface matchings (0 = identity)");
    auto* joinc = construct->add_subcommand("join", "K_{k+2} joined with an independent set");
    joinc->add_option("--k", opt.k)->required();
    joinc->add_option("--n", opt.n)->required();

    auto* verify = app.add_subcommand("verify", "Check a statement over a graph stream");
    verify->add_option("theorem", opt.theorem, "thm1 | thm2 | thm3 | mindeg")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "mindeg"}));
    verify->add_option("--k", opt.k, "Parameter k (ignored by thm2)");
    auto* v_n = verify->add_option("--n", opt.n, "Order of enumerated or sampled graphs");
    auto* v_ex = verify->add_flag("--exhaustive", opt.exhaustive, "All labeled graphs of order n");
    auto* v_in = verify->add_option("--input", opt.input, "graph6 corpus (default: stdin)");
    auto* v_sample = verify->add_option("--sample", opt.sample, "Number of random graphs");
    verify->add_option("--seed", opt.seed, "Seed for --sample");
    verify->add_option("--min-deg", opt.min_degree, "Prune enumeration to minimum degree >= D");
    verify->add_option("--min-edges", opt.min_edges);
    verify->add_option("--max-edges", opt.max_edges);
    verify->add_flag("--connected", opt.connected, "Enumerate connected graphs only");
    v_ex->needs(v_n)->excludes(v_in)->excludes(v_sample);
    v_sample->needs(v_n)->excludes(v_in);

    auto* enumerate = app.add_subcommand("enumerate", "Emit labeled graphs as graph6");
    enumerate->add_option("--n", opt.n)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--min-deg", opt.min_degree);
    enumerate->add_option("--min-edges", opt.min_edges);
    enumerate->add_option("--max-edges", opt.max_edges);
    enumerate->add_flag("--connected", opt.connected);
    enumerate->add_flag("--iso", opt.iso, "One graph per isomorphism class (n <= 8)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    Session session(opt, in, out);
    try {
        if (*analyze)
            return session.analyze();
        if (*find_cut)
            return session.find_cut();
        if (*min_cuts)
            return session.min_cuts();
        if (*ring)
            return session.construct_ring();
        if (*joinc)
            return session.construct_join();
        if (*verify)
            return session.verify();
        if (*enumerate)
            return session.enumerate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << app.help();
    return exit_usage;
}

} // namespace degcut
