// udg: generate instances, run the SSSP and separation algorithms, render SVG.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "CLI11.hpp"
#include "udg/compact.hpp"
#include "udg/datagen.hpp"
#include "udg/io.hpp"
#include "udg/oracle.hpp"
#include "udg/render.hpp"
#include "udg/separation.hpp"
#include "udg/sssp.hpp"

namespace {

using namespace udg;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kRootStream = 3;
constexpr std::size_t kVerifySsspMax = 2000;
constexpr std::size_t kVerifyOracleMax = 14;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string instance_name(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

void emit_csv(const std::string& path, const BenchRecord& rec) {
    if (path.empty()) {
        std::cout << bench_csv_header() << '\n' << to_csv_row(rec) << '\n';
        return;
    }
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (fresh) out << bench_csv_header() << '\n';
    out << to_csv_row(rec) << '\n';
}

// Distinct roots from their own stream, so root choice does not depend on
// how the instance was generated.
std::vector<index_type> sample_roots(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<index_type> all(n);
    std::iota(all.begin(), all.end(), index_type{0});
    count = std::min(count, n);
    Rng rng(mix_seed(seed, kRootStream));
    for (std::size_t k = 0; k < count; ++k) {
        std::swap(all[k], all[k + rng.below(n - k)]);
    }
    all.resize(count);
    return all;
}

// ---- generate

struct GenerateArgs {
    std::string style = "none";
    double width = 4.0;
    double height = 1.0;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    double hole_width = 0.0;
    double hole_height = 0.0;
    std::size_t clutter = 0;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    const auto style = parse_hole_style(a.style);
    if (!style) throw Error(ErrorCode::InvalidDimensions, "unknown style " + a.style);
    std::optional<HoleSize> hole;
    if (a.hole_width > 0.0 || a.hole_height > 0.0) hole = HoleSize{a.hole_width, a.hole_height};
    GeneratedInstance gen = generate(make_domain(*style, a.width, a.height, hole), a.n, a.seed);
    if (a.clutter > 0) add_strip_clutter(gen, a.clutter, a.seed);
    Instance inst = to_instance(gen);
    if (a.clutter > 0) inst.comments.insert(inst.comments.begin() + 1, "clutter=" + std::to_string(a.clutter));
    if (gen.terminal_covered) std::cerr << "warning: a disk covers s or t\n";
    if (a.out.empty()) {
        write_instance(std::cout, inst);
    } else {
        save_instance(a.out, inst);
    }
    return 0;
}

// ---- sssp

struct SsspArgs {
    std::string instance;
    std::string algorithm = "delaunay";
    std::size_t roots = 50;
    std::vector<index_type> root_list;
    std::uint64_t root_seed = 0;
    bool no_hints = false;
    bool verify = false;
    std::string dump;
    std::string csv;
    unsigned threads = 1;
};

int cmd_sssp(const SsspArgs& a) {
    const Instance inst = load_instance(a.instance);
    const std::span<const Point> pts = inst.points;
    const std::size_t n = pts.size();

    std::vector<index_type> roots = a.root_list;
    for (const index_type r : roots) check_index(r, n);
    if (roots.empty()) roots = sample_roots(n, a.roots, a.root_seed);

    auto start = Clock::now();
    Triangulation dt;
    ExplicitGraph graph;
    if (a.algorithm == "delaunay") {
        dt = build_delaunay(pts);
    } else if (a.algorithm == "bfs") {
        graph = build_explicit_graph(pts);
    } else if (a.algorithm != "grid") {
        throw std::invalid_argument("unknown algorithm " + a.algorithm);
    }
    const double preprocess = seconds_since(start);

    const DelaunaySsspOptions options{!a.no_hints};
    auto run = [&](index_type r) {
        if (a.algorithm == "delaunay") return sssp_delaunay(pts, dt, r, options);
        if (a.algorithm == "bfs") return bfs(graph, r);
        return sssp_grid(pts, r);
    };

    std::vector<ShortestPathResult> results(roots.size());
    start = Clock::now();
    const unsigned threads = std::max(1u, std::min<unsigned>(a.threads, static_cast<unsigned>(roots.size())));
    if (threads <= 1) {
        for (std::size_t k = 0; k < roots.size(); ++k) results[k] = run(roots[k]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < roots.size(); k += threads) results[k] = run(roots[k]);
            });
        }
        for (auto& th : pool) th.join();
    }
    const double total = seconds_since(start);

    std::uint64_t digest = 0;
    for (const auto& res : results) digest += digest_distances(res);

    if (a.verify) {
        if (n > kVerifySsspMax) {
            std::cerr << "verify: skipped, n > " << kVerifySsspMax << '\n';
        } else {
            for (const auto& res : results) {
                if (auto why = tree_violation(pts, res)) {
                    throw VerifyFailure("root " + std::to_string(res.root) + ": " + *why);
                }
                if (oracle_sssp(pts, res.root).dist != res.dist) {
                    throw VerifyFailure("root " + std::to_string(res.root) + ": distances differ from the oracle");
                }
            }
            std::cerr << "verify: " << results.size() << " roots agree with the oracle\n";
        }
    }

    if (!a.dump.empty() && !results.empty()) {
        std::ofstream out(a.dump);
        if (!out) throw std::runtime_error("cannot write " + a.dump);
        ResultFile rf;
        rf.kind = ResultFile::Kind::sssp;
        rf.tree = results.front();
        write_result(out, rf);
    }

    BenchRecord rec;
    rec.algorithm = a.algorithm == "delaunay" && a.no_hints ? "delaunay-nohints" : a.algorithm;
    rec.instance = instance_name(a.instance);
    rec.n = n;
    rec.preprocess_seconds = preprocess;
    rec.per_root_seconds = roots.empty() ? 0.0 : total / static_cast<double>(roots.size());
    rec.roots = roots.size();
    rec.answer_digest = digest;
    emit_csv(a.csv, rec);
    return 0;
}

// ---- separate

struct SeparateArgs {
    std::string instance;
    std::string algorithm = "compact";
    bool no_early_exit = false;
    bool verify = false;
    std::string out;
    std::string csv;
};

SeparationAnswer run_separation(const std::string& algorithm, const NormalizedInstance& inst,
                                bool early_exit) {
    if (algorithm == "generic") return separation_generic(inst);
    if (algorithm == "compact") return separation_compact(inst, {early_exit});
    throw std::invalid_argument("unknown algorithm " + algorithm);
}

std::string size_text(const SeparationAnswer& ans) {
    return ans.size ? std::to_string(*ans.size) : "INFEASIBLE";
}

int cmd_separate(const SeparateArgs& a) {
    const Instance raw = load_instance(a.instance);
    const NormalizedInstance inst = normalize(raw.points, raw.s, raw.t);

    const auto start = Clock::now();
    const SeparationAnswer ans = run_separation(a.algorithm, inst, !a.no_early_exit);
    const double total = seconds_since(start);

    std::vector<index_type> cycle;
    if (ans.witness) {
        cycle = witness_cycle(inst.points, build_delaunay(inst.points), *ans.witness);
    }

    std::cout << "size " << size_text(ans) << '\n';
    if (ans.witness) {
        std::cout << "witness root " << ans.witness->root << " edge " << ans.witness->p << ' '
                  << ans.witness->q << '\n';
        std::cout << "cycle";
        for (const index_type v : cycle) std::cout << ' ' << v;
        std::cout << '\n';
    }
    std::cout << "seconds " << format_double(total) << '\n';

    if (a.verify) {
        if (ans.size && cycle.size() != *ans.size) {
            throw VerifyFailure("witness cycle has " + std::to_string(cycle.size()) + " vertices");
        }
        if (ans.size) {
            int cr = 0;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                const Point p = inst.points[cycle[k]];
                const Point q = inst.points[cycle[(k + 1) % cycle.size()]];
                if (!within_unit(p, q)) throw VerifyFailure("witness cycle uses a non-edge");
                cr ^= crosses_terminal(p, q, inst.tau) ? 1 : 0;
            }
            if (cr != 1) throw VerifyFailure("witness cycle crosses st an even number of times");
        }
        const std::string other = a.algorithm == "generic" ? "compact" : "generic";
        const SeparationAnswer check = run_separation(other, inst, true);
        if (check.size != ans.size) {
            throw VerifyFailure(other + " returned " + size_text(check));
        }
        std::string msg = "verify: " + other + " agrees";
        if (inst.points.size() <= kVerifyOracleMax) {
            const SeparationAnswer brute = oracle_separation(inst.points, inst.tau);
            if (brute.size != ans.size) throw VerifyFailure("oracle returned " + size_text(brute));
            msg += ", oracle agrees";
        }
        std::cerr << msg << '\n';
    }

    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        ResultFile rf;
        rf.kind = ResultFile::Kind::separation;
        rf.separation = ans;
        rf.cycle = cycle;
        write_result(out, rf);
    }
    if (!a.csv.empty()) {
        BenchRecord rec;
        rec.algorithm = a.algorithm;
        rec.instance = instance_name(a.instance);
        rec.n = inst.points.size();
        rec.per_root_seconds = inst.points.empty() ? 0.0 : total / static_cast<double>(inst.points.size());
        rec.roots = inst.points.size();
        rec.answer_digest = digest_separation(ans);
        emit_csv(a.csv, rec);
    }
    return 0;
}

// ---- render

struct RenderArgs {
    std::string instance;
    std::string result;
    std::string out;
    bool disks = false;
};

int cmd_render(const RenderArgs& a) {
    const Instance inst = load_instance(a.instance);
    std::optional<ResultFile> rf;
    if (!a.result.empty()) {
        std::ifstream in(a.result);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + a.result);
        rf = read_result(in);
    }
    const std::string svg = render_svg(inst, rf ? &*rf : nullptr, {a.disks});
    if (a.out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        out << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit disk graph shortest paths and minimum separation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a random instance");
    g->add_option("--style", gen.style, "none|small1|large1|small4|large4")->capture_default_str();
    g->add_option("--width", gen.width)->capture_default_str();
    g->add_option("--height", gen.height)->capture_default_str();
    g->add_option("--n", gen.n, "number of points")->capture_default_str();
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--hole-width", gen.hole_width, "override the hole width");
    g->add_option("--hole-height", gen.hole_height, "override the hole height");
    g->add_option("--clutter", gen.clutter, "extra points in the unit-width strip around s");
    g->add_option("--out", gen.out, "output file (default stdout)");

    SsspArgs sp;
    auto* s = app.add_subcommand("sssp", "Shortest-path trees from sampled or given roots");
    s->add_option("instance", sp.instance)->required();
    s->add_option("--algorithm", sp.algorithm)
        ->check(CLI::IsMember({"delaunay", "bfs", "grid"}))
        ->capture_default_str();
    auto* count = s->add_option("--roots", sp.roots, "number of random roots")->capture_default_str();
    s->add_option("--root", sp.root_list, "explicit root (repeatable)")->excludes(count);
    s->add_option("--root-seed", sp.root_seed)->capture_default_str();
    s->add_flag("--no-hints", sp.no_hints, "disable nearest-neighbour hints");
    s->add_flag("--verify", sp.verify, "compare with the brute-force oracle (n <= 2000)");
    s->add_option("--dump", sp.dump, "write the first root's tree as a result file");
    s->add_option("--csv", sp.csv, "append the CSV row here instead of stdout");
    s->add_option("--parallel-roots", sp.threads, "worker threads")->capture_default_str();

    SeparateArgs sep;
    auto* p = app.add_subcommand("separate", "Minimum number of disks separating s and t");
    p->add_option("instance", sep.instance)->required();
    p->add_option("--algorithm", sep.algorithm)
        ->check(CLI::IsMember({"generic", "compact"}))
        ->capture_default_str();
    p->add_flag("--no-early-exit", sep.no_early_exit, "compact: probe every level and family");
    p->add_flag("--verify", sep.verify, "cross-check with the other algorithm (and the oracle for n <= 14)");
    p->add_option("--out", sep.out, "write a result file with the witness cycle");
    p->add_option("--csv", sep.csv, "append a CSV timing row");

    RenderArgs ren;
    auto* r = app.add_subcommand("render", "Draw an instance and optional result as SVG");
    r->add_option("instance", ren.instance)->required();
    r->add_option("--result", ren.result, "sssp or separation result file");
    r->add_option("--out", ren.out, "output file (default stdout)");
    r->add_flag("--disks", ren.disks, "draw the radius-1/2 disks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*g) return cmd_generate(gen);
        if (*s) return cmd_sssp(sp);
        if (*p) return cmd_separate(sep);
        if (*r) return cmd_render(ren);
    } catch (const VerifyFailure& e) {
        std::cerr << "verify failed: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
