#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "jacring/certify.hpp"
#include "jacring/errors.hpp"
#include "jacring/logforms.hpp"
#include "jacring/oracles.hpp"
#include "jacring/report.hpp"

using namespace jacring;
using nlohmann::json;

namespace {

struct Common {
    std::string instance_path;
    std::string out_path;
    uint64_t seed = 1;
    int primes = 2;
    int degree_cap = 0;
    int codim = 0;
    bool sweep = false;
    long long budget_cells = 0;
};

void add_common(CLI::App* cmd, Common& c, bool needs_instance = true) {
    if (needs_instance)
        cmd->add_option("--instance", c.instance_path, "instance JSON file")->required();
    cmd->add_option("--out", c.out_path, "write reports here instead of stdout");
    cmd->add_option("--seed", c.seed, "seed for randomized checks");
    cmd->add_option("--primes", c.primes, "primes for multi-modular rank");
    cmd->add_option("--degree-cap", c.degree_cap, "degree cap for the transversality certifier");
    cmd->add_option("--codim", c.codim, "codimension of the random subspace V");
    cmd->add_flag("--sweep", c.sweep, "run the full parameter sweep");
    cmd->add_option("--budget-cells", c.budget_cells, "matrix cell budget override");
}

RankOptions rank_options(const Common& c) {
    RankOptions opt;
    opt.primes = c.primes;
    opt.seed = c.seed ^ 0x9e3779b97f4a7c15ull;
    if (c.budget_cells > 0) opt.max_cells = c.budget_cells;
    return opt;
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

CheckReport base_report(const std::string& digest, const std::string& name, const Common& c) {
    CheckReport r;
    r.instance_digest = digest;
    r.check_name = name;
    r.seed = c.seed;
    return r;
}

void run_dims(const Ring& ring, const std::string& digest, const Common& c, int q, int l,
              ReportSink& sink) {
    const Instance& inst = ring.instance();
    auto opt = rank_options(c);
    std::vector<BiDegree> grid;
    if (c.sweep) {
        int lmax = std::max(inst.d_total() + inst.e_total() - inst.n - 1 + 2, 2);
        for (int qq = 0; qq <= inst.m() + 1; ++qq)
            for (int ll = 0; ll <= lmax; ++ll) grid.push_back({qq, ll});
    } else {
        grid.push_back({q, l});
    }
    for (BiDegree bd : grid) {
        CheckReport r = base_report(digest, "dims", c);
        r.parameters = {{"q", bd.q}, {"l", bd.l}};
        Timer t;
        try {
            long long da = ring.dim_piece(bd);
            long long db = ring.dim_B(bd, opt);
            r.observed = {{"dim_A", da}, {"dim_B", db}};
            r.verdict = Verdict::Observed;
        } catch (const DimensionOverflow& ex) {
            r.observed = {{"error", ex.what()}};
            r.verdict = Verdict::Unknown;
        }
        r.timing_ms = t.ms();
        sink.emit(r);
    }
}

void run_hodge(const Ring& ring, const std::string& digest, const Common& c, int l,
               ReportSink& sink) {
    auto opt = rank_options(c);
    Timer t;
    for (const auto& hp : hodge_check(ring, l, opt)) {
        CheckReport r = base_report(digest, "hodge", c);
        r.parameters = {{"q", hp.q}, {"l", hp.l}};
        r.observed = hp.predicted_dim;
        if (hp.oracle_dim)
            r.expected = *hp.oracle_dim;
        r.parameters["oracle"] = hp.source;
        r.verdict = hp.verdict;
        r.timing_ms = t.ms();
        sink.emit(r);
    }
}

void run_duality(const Ring& ring, const std::string& digest, const Common& c,
                 ReportSink& sink) {
    const Instance& inst = ring.instance();
    auto opt = rank_options(c);
    int lmax = inst.s() ? inst.e_max() : 0;
    for (int p = 0; p <= inst.m(); ++p) {
        for (int l = 0; l <= lmax; ++l) {
            CheckReport r = base_report(digest, "duality", c);
            r.parameters = {{"p", p}, {"l", l}};
            Timer t;
            try {
                DualityReport d = duality_check(ring, p, l, opt);
                r.parameters["condition"] = d.condition.str();
                r.observed = {{"left_dim", d.left_dim},
                              {"right_dim", d.right_dim},
                              {"rank", d.rank}};
                r.verdict = d.verdict;
            } catch (const TraceUndefined& ex) {
                r.observed = {{"error", ex.what()}};
                r.verdict = Verdict::Unknown;
            }
            r.timing_ms = t.ms();
            sink.emit(r);
        }
    }
    if (inst.m() >= 1) {
        CheckReport r = base_report(digest, "eta_kernel", c);
        Timer t;
        try {
            EtaKernelReport e = eta_kernel(ring, opt);
            r.observed = {{"kernel_dim", e.kernel_dim}, {"surjective", e.surjective}};
            r.expected = e.expected;
            r.verdict = e.verdict;
        } catch (const TraceUndefined& ex) {
            r.observed = {{"error", ex.what()}};
            r.verdict = Verdict::Unknown;
        }
        r.timing_ms = t.ms();
        sink.emit(r);
    }
}

void run_koszul(const Ring& ring, const std::string& digest, const Common& c,
                ReportSink& sink) {
    const Instance& inst = ring.instance();
    auto opt = rank_options(c);
    Subspace v = random_subspace(ring, c.codim, c.seed);
    long long kdim = (long long)v.basis.size();
    long long cell_cap = c.budget_cells > 0 ? c.budget_cells : 4'000'000;
    int qmax = inst.n <= 2 ? 2 : 1;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= qmax; ++q)
            for (int l = 0; l <= 3; ++l) {
                CheckReport r = base_report(digest, "koszul", c);
                r.parameters = {{"p", p}, {"q", q}, {"l", l}, {"codim", c.codim}};
                Timer t;
                try {
                    long long d0 = ring.dim_B({p, l}, opt) * binomial(kdim, q + 1);
                    long long d1 = ring.dim_B({p + 1, l}, opt) * binomial(kdim, q);
                    long long d2 = ring.dim_B({p + 2, l}, opt) * binomial(kdim, q - 1);
                    if (d0 * d1 > cell_cap || d1 * d2 > cell_cap) {
                        r.observed = {{"skipped", "differential exceeds cell budget"}};
                        r.verdict = Verdict::Unknown;
                        r.timing_ms = t.ms();
                        sink.emit(r);
                        continue;
                    }
                    KoszulReport k = koszul_exactness_check(ring, v, p, q, l, opt);
                    r.parameters["condition"] = k.condition.str();
                    r.observed = {{"middle_homology", k.middle_homology},
                                  {"rank_first", k.rank_first},
                                  {"kernel_second", k.kernel_second}};
                    r.verdict = k.verdict;
                } catch (const DimensionOverflow& ex) {
                    r.observed = {{"error", ex.what()}};
                    r.verdict = Verdict::Unknown;
                }
                r.timing_ms = t.ms();
                sink.emit(r);
            }
    for (int q = 0; q <= inst.m(); ++q) {
        CheckReport r = base_report(digest, "multiplication_kernel", c);
        r.parameters = {{"q", q}, {"codim", c.codim}};
        Timer t;
        try {
            MultKernelReport k = multiplication_kernel(ring, v, q, opt);
            r.observed = k.kernel_dim;
            if (k.expected) r.expected = *k.expected;
            r.verdict = k.verdict;
        } catch (const DimensionOverflow& ex) {
            r.observed = {{"error", ex.what()}};
            r.verdict = Verdict::Unknown;
        }
        r.timing_ms = t.ms();
        sink.emit(r);
    }
}

void run_residue(const Instance& inst, const std::string& digest, const Common& c,
                 ReportSink& sink) {
    Timer t;
    CheckReport r = base_report(digest, "residue", c);
    auto rep = residue_matrix_check(inst);
    r.parameters = {{"m", inst.m()}, {"s", inst.s()}};
    r.observed = {{"J_size", rep.j_size}, {"identity", rep.identity}};
    r.verdict = rep.verdict;
    r.timing_ms = t.ms();
    sink.emit(r);
    for (int q = 0; q < inst.s(); ++q) {
        CheckReport w = base_report(digest, "wedge_space_dim", c);
        w.parameters = {{"q", q}};
        Timer t2;
        long long dim = wedge_space_dim(inst.e, q);
        w.observed = dim;
        w.expected = binomial(inst.s() - 1, q);
        w.verdict = dim == binomial(inst.s() - 1, q) ? Verdict::Pass : Verdict::Fail;
        w.timing_ms = t2.ms();
        sink.emit(w);
    }
}

void run_certify(const Instance& inst, const std::string& digest, const Common& c,
                 ReportSink& sink) {
    Timer t;
    CheckReport r = base_report(digest, "certify", c);
    auto rep = certify_transversality(inst, c.degree_cap);
    r.parameters = {{"degree_cap", rep.degree_cap_used}};
    r.observed = {{"status", rep.status_str()},
                  {"subsets_checked", rep.checked_subsets.size()}};
    if (rep.witness) {
        r.observed["witness_prime"] = rep.witness_prime;
        r.observed["witness"] = *rep.witness;
    }
    r.verdict = rep.status == TransversalityReport::Status::Certified ? Verdict::Pass
                : rep.status == TransversalityReport::Status::FailedWitness ? Verdict::Fail
                                                                            : Verdict::Unknown;
    r.timing_ms = t.ms();
    sink.emit(r);
}

struct OutStreams {
    std::unique_ptr<std::ofstream> file;
    std::ostream* out = &std::cout;
};

OutStreams open_out(const Common& c) {
    OutStreams s;
    if (!c.out_path.empty()) {
        s.file = std::make_unique<std::ofstream>(c.out_path);
        if (!*s.file) throw std::runtime_error("cannot open " + c.out_path);
        s.out = s.file.get();
    }
    return s;
}

int finish(ReportSink& sink, bool print_summary = true) {
    if (print_summary) std::cerr << sink.summary().dump() << "\n";
    return sink.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Jacobian ring construction and theorem checks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    int gen_n = 2;
    std::vector<int> gen_d, gen_e;
    std::string gen_field = "Q";
    bool gen_certify = false;
    int gen_retries = 32;
    Common gc;
    gen->add_option("--n", gen_n, "ambient projective dimension")->required();
    gen->add_option("--d", gen_d, "degrees of the F_i")->required();
    gen->add_option("--e", gen_e, "degrees of the G_j");
    gen->add_option("--field", gen_field, "Q or a prime p");
    gen->add_flag("--certify", gen_certify, "retry until transversality certifies");
    gen->add_option("--retries", gen_retries, "certification retry budget");
    add_common(gen, gc, false);

    Common c_dims, c_hodge, c_dual, c_koszul, c_res, c_cert, c_suite;
    int dims_q = 0, dims_l = 0, hodge_l = 0;
    auto* dims = app.add_subcommand("dims", "dim A_q(l) and dim B_q(l)");
    dims->add_option("--q", dims_q, "weight");
    dims->add_option("--l", dims_l, "twist");
    add_common(dims, c_dims);
    auto* hodge = app.add_subcommand("hodge", "Hodge-number predictions vs oracles");
    hodge->add_option("--l", hodge_l, "twist");
    add_common(hodge, c_hodge);
    auto* dual = app.add_subcommand("duality", "trace pairing nondegeneracy sweep");
    add_common(dual, c_dual);
    auto* koszul = app.add_subcommand("koszul", "Koszul exactness and multiplication kernels");
    add_common(koszul, c_koszul);
    auto* residue = app.add_subcommand("residue", "dlog residue-matrix identity");
    add_common(residue, c_res);
    auto* certify = app.add_subcommand("certify", "transversality certification");
    add_common(certify, c_cert);
    auto* suite = app.add_subcommand("suite", "all checkers on one instance");
    bool gen_grid = false;
    suite->add_option("--instance", c_suite.instance_path, "instance JSON file");
    suite->add_flag("--gen-grid", gen_grid, "run the punctured-curve instance grid instead");
    suite->add_option("--out", c_suite.out_path, "write reports here instead of stdout");
    suite->add_option("--seed", c_suite.seed, "seed");
    suite->add_option("--primes", c_suite.primes, "primes for multi-modular rank");
    suite->add_option("--degree-cap", c_suite.degree_cap, "certifier degree cap");
    suite->add_option("--codim", c_suite.codim, "codimension of V");
    suite->add_option("--budget-cells", c_suite.budget_cells, "matrix cell budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            FieldSpec field = gen_field == "Q"
                                  ? FieldSpec::rationals()
                                  : FieldSpec::prime_field(std::stoull(gen_field));
            Instance inst =
                gen_certify
                    ? random_certified_instance(gen_n, gen_d, gen_e, field, gc.seed,
                                                gen_retries, gc.degree_cap)
                    : random_instance(gen_n, gen_d, gen_e, field, gc.seed);
            if (gc.out_path.empty())
                std::cout << instance_to_json(inst) << "\n";
            else
                save_instance(inst, gc.out_path);
            return 0;
        }

        auto run_for = [&](const Common& c, auto&& fn) {
            Instance inst = load_instance(c.instance_path);
            std::string digest = instance_digest(inst);
            auto streams = open_out(c);
            ReportSink sink(*streams.out);
            fn(inst, digest, sink);
            return finish(sink);
        };

        if (dims->parsed())
            return run_for(c_dims, [&](const Instance& inst, const std::string& dg,
                                       ReportSink& sink) {
                Ring ring(inst);
                run_dims(ring, dg, c_dims, dims_q, dims_l, sink);
            });
        if (hodge->parsed())
            return run_for(c_hodge, [&](const Instance& inst, const std::string& dg,
                                        ReportSink& sink) {
                Ring ring(inst);
                run_hodge(ring, dg, c_hodge, hodge_l, sink);
            });
        if (dual->parsed())
            return run_for(c_dual, [&](const Instance& inst, const std::string& dg,
                                       ReportSink& sink) {
                Ring ring(inst);
                run_duality(ring, dg, c_dual, sink);
            });
        if (koszul->parsed())
            return run_for(c_koszul, [&](const Instance& inst, const std::string& dg,
                                         ReportSink& sink) {
                Ring ring(inst);
                run_koszul(ring, dg, c_koszul, sink);
            });
        if (residue->parsed())
            return run_for(c_res, [&](const Instance& inst, const std::string& dg,
                                      ReportSink& sink) { run_residue(inst, dg, c_res, sink); });
        if (certify->parsed())
            return run_for(c_cert, [&](const Instance& inst, const std::string& dg,
                                       ReportSink& sink) { run_certify(inst, dg, c_cert, sink); });

        if (suite->parsed()) {
            auto streams = open_out(c_suite);
            ReportSink sink(*streams.out);
            auto full = [&](const Instance& inst) {
                std::string dg = instance_digest(inst);
                Ring ring(inst);
                run_certify(inst, dg, c_suite, sink);
                c_suite.sweep = true;
                run_dims(ring, dg, c_suite, 0, 0, sink);
                run_hodge(ring, dg, c_suite, 0, sink);
                run_duality(ring, dg, c_suite, sink);
                run_koszul(ring, dg, c_suite, sink);
                run_residue(inst, dg, c_suite, sink);
            };
            if (gen_grid) {
                for (int d = 3; d <= 5; ++d)
                    for (const auto& e : std::vector<std::vector<int>>{
                             {1}, {2}, {3}, {1, 1}, {1, 2}, {1, 1, 1}}) {
                        Instance inst = random_certified_instance(
                            2, {d}, e, FieldSpec::rationals(), c_suite.seed + d);
                        full(inst);
                    }
            } else {
                if (c_suite.instance_path.empty())
                    throw std::runtime_error("suite needs --instance or --gen-grid");
                full(load_instance(c_suite.instance_path));
            }
            std::cerr << sink.summary_csv();
            return finish(sink);
        }
    } catch (const SchemaError& ex) {
        std::cerr << "schema error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
