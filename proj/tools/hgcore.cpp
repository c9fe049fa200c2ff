// hgcore: neighborhood-core decomposition and related analyses on .hg files.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgcore/hgcore.hpp"

namespace {

using hgcore::BuildResult;
using hgcore::Hypergraph;
using hgcore::NodeId;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw hgcore::InputError("cannot open '" + path + "' for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct InputOptions {
    std::string path;
    bool drop_singletons = false;

    BuildResult load() const {
        return hgcore::load_hg(path, drop_singletons ? hgcore::SingletonPolicy::Drop
                                                     : hgcore::SingletonPolicy::Reject);
    }
};

void add_input(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, ".hg file (one hyperedge per line)")->required();
    cmd->add_flag("--drop-singletons", in.drop_singletons,
                  "Drop edges with fewer than two distinct members instead of failing");
}

/// Per-label value in first-seen input order; labels without edges get 0.
template <typename Fn>
void for_each_label(const BuildResult& built, Fn&& fn) {
    for (const auto& label : built.report.all_labels) fn(label, built.graph.find(label));
}

// ---------------------------------------------------------------- decompose

struct DecomposeOptions {
    InputOptions in;
    std::string algorithm = "peel";
    std::string out;
    std::string stats;
    unsigned threads = 1;
    bool no_opt2 = false, no_opt3 = false, no_opt4 = false;
};

int run_decompose(const DecomposeOptions& o) {
    const auto built = o.in.load();
    const Hypergraph& h = built.graph;
    std::vector<std::uint32_t> core;
    json stats = {{"algorithm", o.algorithm}, {"n", h.num_nodes()}, {"m", h.num_edges()}};

    if (o.algorithm == "peel" || o.algorithm == "epeel") {
        auto r = o.algorithm == "peel" ? hgcore::peel(h) : hgcore::e_peel(h);
        stats["neighborhood_recomputations"] = r.neighborhood_recomputations;
        stats["cell_updates"] = r.cell_updates;
        core = std::move(r.core);
    } else if (o.algorithm == "local") {
        hgcore::LocalCoreOptions opts;
        opts.threads = o.threads;
        opts.use_opt2 = !o.no_opt2;
        opts.use_opt3 = !o.no_opt3;
        opts.use_opt4 = !o.no_opt4;
        auto r = hgcore::local_core(h, opts);
        stats["threads"] = o.threads;
        stats["opt2"] = opts.use_opt2;
        stats["opt3"] = opts.use_opt3;
        stats["opt4"] = opts.use_opt4;
        stats["rounds"] = r.stats.rounds;
        stats["corrected_per_round"] = r.stats.corrected_per_round;
        stats["h_evaluations"] = r.stats.h_evaluations;
        stats["correction_iterations"] = r.stats.correction_iterations;
        stats["lccsat_edge_scans"] = r.stats.lccsat_edge_scans;
        stats["frozen_skips"] = r.stats.frozen_skips;
        core = std::move(r.cores.core);
    } else if (o.algorithm == "naive-h") {
        std::uint32_t rounds = 0;
        core = hgcore::naive_graph_h_index(h, &rounds).core;
        stats["rounds"] = rounds;
    } else if (o.algorithm == "degree") {
        core = hgcore::degree_core(h).core;
    } else {
        auto r = hgcore::clique_graph_core(h);
        stats["cell_updates"] = r.cell_updates;
        core = std::move(r.core);
    }
    stats["max_core"] = core.empty() ? 0u : *std::max_element(core.begin(), core.end());

    Sink sink(o.out);
    auto& os = sink.stream();
    for_each_label(built, [&](const std::string& label, std::optional<NodeId> v) {
        os << label << '\t' << (v ? core[*v] : 0u) << '\n';
    });
    if (!o.stats.empty()) {
        Sink side(o.stats);
        side.stream() << stats.dump(2) << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------- kdcore

struct KdOptions {
    InputOptions in;
    std::string out;
    unsigned threads = 1;
    bool expand = false;
};

int run_kdcore(const KdOptions& o) {
    const auto built = o.in.load();
    hgcore::LocalCoreOptions opts;
    opts.threads = o.threads;
    const auto kd = hgcore::kd_decompose(built.graph, opts);
    Sink sink(o.out);
    auto& os = sink.stream();
    if (o.expand) {
        // One line per non-empty (k,d)-core: k, d, members in id order.
        for (std::uint32_t k = 1; k <= kd.kmax; ++k)
            for (std::uint32_t d = 1; d <= kd.dmax(k); ++d) {
                os << k << '\t' << d << '\t';
                const auto members = kd.members(k, d);
                for (std::size_t i = 0; i < members.size(); ++i)
                    os << (i ? " " : "") << built.graph.label(members[i]);
                os << '\n';
            }
        return kExitOk;
    }
    for_each_label(built, [&](const std::string& label, std::optional<NodeId> v) {
        if (!v) return;
        for (std::uint32_t k = 1; k <= kd.kmax; ++k) {
            const std::uint32_t d = kd.value(k, *v);
            if (d == 0) break;
            os << label << '\t' << k << '\t' << d << '\n';
        }
    });
    return kExitOk;
}

// ------------------------------------------------------------------ densest

struct DensestOptions {
    InputOptions in;
    std::string method = "greedy";
    std::string out;
};

int run_densest(const DensestOptions& o) {
    const auto built = o.in.load();
    const Hypergraph& h = built.graph;
    hgcore::DensestResult r;
    if (o.method == "greedy")
        r = hgcore::greedy_densest(h);
    else if (o.method == "exact")
        r = hgcore::exact_densest(h);
    else
        r = hgcore::brute_force_densest(h);

    json members = json::array();
    for (NodeId v : r.nodes) members.push_back(std::string(h.label(v)));
    json doc = {{"method", hgcore::to_string(r.method)},
                {"density", hgcore::to_fraction_string(r.density)},
                {"density_float", hgcore::to_double(r.density)},
                {"size", r.nodes.size()},
                {"members", members},
                {"factor", hgcore::to_fraction_string(r.factor)}};
    Sink sink(o.out);
    sink.stream() << doc.dump(2) << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------- sir

struct SirOptions {
    InputOptions in;
    std::vector<std::string> seed_nodes;
    std::string beta = "0.1";
    std::uint64_t runs = 100;
    std::uint64_t rng_seed = 1;
    std::uint32_t max_steps = 100;
    std::size_t delete_top_k = 0;
    std::string rank_by = "core";
    unsigned threads = 1;
    std::string out;
    std::string aggregate;
};

int run_sir(const SirOptions& o) {
    const auto built = o.in.load();
    const Hypergraph& original = built.graph;
    const double beta = hgcore::to_double(hgcore::parse_rational(o.beta));
    if (!(beta >= 0.0 && beta <= 1.0)) throw hgcore::InputError("--beta must lie in [0, 1]");

    hgcore::LocalCoreOptions lopts;
    lopts.threads = o.threads;
    const auto core = hgcore::local_core(original, lopts).cores.core;

    // Intervention: drop the highest-core nodes (ties by input order) first.
    std::optional<BuildResult> reduced;
    if (o.delete_top_k > 0) {
        std::vector<NodeId> ranked(original.num_nodes());
        std::iota(ranked.begin(), ranked.end(), NodeId{0});
        std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) { return core[a] > core[b]; });
        reduced = hgcore::intervention_delete(original, ranked, o.delete_top_k);
    }
    const Hypergraph& h = reduced ? reduced->graph : original;

    std::vector<std::string> seeds = o.seed_nodes;
    if (seeds.empty())
        for (const auto& label : built.report.all_labels)
            if (h.find(label)) seeds.push_back(label);

    Sink sink(o.out);
    auto& os = sink.stream();
    struct Bucket {
        std::uint64_t seeds = 0, runs = 0, spread = 0;
    };
    std::map<std::uint32_t, Bucket> buckets;
    for (const auto& label : seeds) {
        const auto seed = h.find(label);
        if (!seed) {
            const auto& all = built.report.all_labels;
            if (std::find(all.begin(), all.end(), label) == all.end())
                throw hgcore::InputError("unknown seed node '" + label + "'");
            throw hgcore::InputError("seed node '" + label + "' has no hyperedges");
        }
        const std::uint32_t seed_core = core[*original.find(label)];
        Bucket& bucket = buckets[seed_core];
        ++bucket.seeds;
        for (std::uint64_t r = 0; r < o.runs; ++r) {
            const auto outcome = hgcore::sir_run(h, *seed, beta, o.max_steps, hgcore::run_seed(o.rng_seed, r));
            os << label << '\t' << seed_core << '\t' << r << '\t' << outcome.spread << '\n';
            ++bucket.runs;
            bucket.spread += outcome.spread;
        }
    }
    if (!o.aggregate.empty()) {
        Sink agg(o.aggregate);
        auto& as = agg.stream();
        as << "core,seeds,runs,mean_spread\n";
        for (const auto& [c, b] : buckets) {
            const double mean = b.runs ? static_cast<double>(b.spread) / static_cast<double>(b.runs) : 0.0;
            as << c << ',' << b.seeds << ',' << b.runs << ',' << mean << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- gen

struct GenOptions {
    std::size_t n = 100, m = 200, card_min = 2, card_max = 4;
    std::uint64_t rng_seed = 1;
    std::string out;
};

int run_gen(const GenOptions& o) {
    const auto h = hgcore::random_hypergraph(o.n, o.m, o.card_min, o.card_max, o.rng_seed);
    Sink sink(o.out);
    hgcore::write_hg(sink.stream(), h);
    return kExitOk;
}

// -------------------------------------------------------------------- stats

json summary(const std::vector<double>& xs) {
    if (xs.empty()) return {{"mean", 0.0}, {"sd", 0.0}};
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double sq = 0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    return {{"mean", mean}, {"sd", std::sqrt(sq / static_cast<double>(xs.size()))}};
}

int run_stats(const InputOptions& in, const std::string& out) {
    const auto built = in.load();
    const Hypergraph& h = built.graph;
    std::vector<double> degree, card, nbrs;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
        degree.push_back(static_cast<double>(h.degree(v)));
        nbrs.push_back(static_cast<double>(h.neighbor_count(v)));
    }
    for (hgcore::EdgeId e = 0; e < h.num_edges(); ++e) card.push_back(static_cast<double>(h.edge_size(e)));
    json doc = {{"n", h.num_nodes()},
                {"m", h.num_edges()},
                {"isolated_nodes", built.report.isolated_nodes.size()},
                {"duplicate_edges", built.report.duplicate_edges.size()},
                {"degree", summary(degree)},
                {"cardinality", summary(card)},
                {"neighbors", summary(nbrs)}};
    Sink sink(out);
    sink.stream() << doc.dump(2) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neighborhood-based hypergraph core decomposition"};
    app.require_subcommand(1);

    DecomposeOptions dec;
    auto* decompose = app.add_subcommand("decompose", "Core number per node as TSV node<TAB>core");
    add_input(decompose, dec.in);
    decompose->add_option("--algorithm,-a", dec.algorithm)
        ->check(CLI::IsMember({"peel", "epeel", "local", "naive-h", "degree", "clique"}))
        ->capture_default_str();
    decompose->add_option("--out,-o", dec.out, "Output file (default stdout)");
    decompose->add_option("--stats", dec.stats, "Write counters as JSON to this file");
    decompose->add_option("--threads,-t", dec.threads, "Worker threads for --algorithm local")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    decompose->add_flag("--no-opt2", dec.no_opt2, "Disable the edge-minimum index in core-correction");
    decompose->add_flag("--no-opt3", dec.no_opt3, "Double-buffer estimates instead of in-place updates");
    decompose->add_flag("--no-opt4", dec.no_opt4, "Do not skip nodes already at their lower bound");

    KdOptions kd;
    auto* kdcore = app.add_subcommand("kdcore", "(k,d)-core lattice as TSV node<TAB>k<TAB>d (largest d per k)");
    add_input(kdcore, kd.in);
    kdcore->add_option("--out,-o", kd.out, "Output file (default stdout)");
    kdcore->add_option("--threads,-t", kd.threads)->check(CLI::PositiveNumber)->capture_default_str();
    kdcore->add_flag("--expand", kd.expand, "Print each (k,d)-core as k<TAB>d<TAB>members instead");

    DensestOptions den;
    auto* densest = app.add_subcommand("densest", "Volume-densest subhypergraph as JSON");
    add_input(densest, den.in);
    densest->add_option("--method,-m", den.method)
        ->check(CLI::IsMember({"greedy", "exact", "brute"}))
        ->capture_default_str();
    densest->add_option("--out,-o", den.out, "Output file (default stdout)");

    SirOptions sir;
    auto* sircmd = app.add_subcommand("sir", "SIR spread per seed: TSV seed<TAB>core<TAB>run<TAB>spread");
    add_input(sircmd, sir.in);
    sircmd->add_option("--seed-node", sir.seed_nodes, "Seed label (repeatable; default every node)");
    sircmd->add_option("--beta", sir.beta, "Infection probability, decimal or p/q")->capture_default_str();
    sircmd->add_option("--runs", sir.runs)->capture_default_str();
    sircmd->add_option("--rng-seed", sir.rng_seed)->capture_default_str();
    sircmd->add_option("--max-steps", sir.max_steps)->capture_default_str();
    sircmd->add_option("--delete-top-k", sir.delete_top_k, "Remove the k highest-ranked nodes first")
        ->capture_default_str();
    sircmd->add_option("--rank-by", sir.rank_by)->check(CLI::IsMember({"core"}))->capture_default_str();
    sircmd->add_option("--threads,-t", sir.threads, "Threads for the core computation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sircmd->add_option("--out,-o", sir.out, "Per-run TSV file (default stdout)");
    sircmd->add_option("--aggregate", sir.aggregate, "Write core,seeds,runs,mean_spread CSV here");

    GenOptions gen;
    auto* gencmd = app.add_subcommand("gen", "Random hypergraph in .hg format");
    gencmd->add_option("--n", gen.n, "Number of candidate nodes")->capture_default_str();
    gencmd->add_option("--m", gen.m, "Number of distinct hyperedges")->capture_default_str();
    gencmd->add_option("--card-min", gen.card_min)->capture_default_str();
    gencmd->add_option("--card-max", gen.card_max)->capture_default_str();
    gencmd->add_option("--rng-seed", gen.rng_seed)->capture_default_str();
    gencmd->add_option("--out,-o", gen.out, "Output file (default stdout)");

    InputOptions st;
    std::string stats_out;
    auto* stats = app.add_subcommand("stats", "Size and degree/cardinality/neighbor summaries as JSON");
    add_input(stats, st);
    stats->add_option("--out,-o", stats_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*decompose) return run_decompose(dec);
        if (*kdcore) return run_kdcore(kd);
        if (*densest) return run_densest(den);
        if (*sircmd) return run_sir(sir);
        if (*gencmd) return run_gen(gen);
        if (*stats) return run_stats(st, stats_out);
    } catch (const hgcore::GuardError& e) {
        std::cerr << "hgcore: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "hgcore: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
