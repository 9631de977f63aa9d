#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ehc/canonical.hpp"
#include "ehc/embedding.hpp"
#include "ehc/epsilon.hpp"
#include "ehc/families.hpp"
#include "ehc/mutants.hpp"
#include "ehc/scan.hpp"
#include "ehc/smooth.hpp"
#include "ehc/transitive.hpp"

using namespace ehc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

Tournament load_trn(const std::string& path) { return Tournament::from_text(slurp(path)); }

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::string join_csv(const std::vector<int>& v, int offset = 0) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i] + offset);
    }
    return s;
}

int jobs_or_env(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("EHC_LAB_JOBS")) return std::atoi(env);
    return 0;
}

BetaKind beta_kind_from_target(const std::string& target) {
    if (target == "left-beta1") return {BetaSide::Left, 1};
    if (target == "left-beta2") return {BetaSide::Left, 2};
    if (target == "right-beta1") return {BetaSide::Right, 1};
    if (target == "right-beta2") return {BetaSide::Right, 2};
    throw CLI::ValidationError("--target", "unknown target " + target);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tournament combinatorics workbench: family builders, exact searches, "
                 "mutant machinery and desk-scale probes of the Erdos-Hajnal property"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Build a tournament family instance and write TRN");
    std::string gen_what, gen_spec_path, gen_out;
    std::string gen_side = "right";
    int gen_n = 5, gen_r = 2, gen_m = 1;
    std::string gen_x1, gen_x2;
    gen->add_option("family", gen_what,
                    "asteroid | left-beta1 | left-beta2 | right-beta1 | right-beta2 | star | "
                    "spider | galaxy | asterism | galaxy_with_spiders | clutter | merged")
        ->required();
    gen->add_option("--spec", gen_spec_path, "FamilySpec JSON file (for spec-driven families)");
    gen->add_option("-o,--out", gen_out, "output TRN path")->required();
    gen->add_option("--side", gen_side, "star/spider side");
    gen->add_option("--n", gen_n, "star/spider size");
    gen->add_option("--r", gen_r, "middle star center position (1-based)");
    gen->add_option("--m", gen_m, "middle spider left leg count");
    gen->add_option("--x1", gen_x1, "left/right spider legs attached to the far center (csv)");
    gen->add_option("--x2", gen_x2, "left/right spider legs attached to the near center (csv)");
    gen->callback([&] {
        Tournament t;
        if (gen_what == "asteroid") {
            t = build_asteroid().first;
        } else if (gen_what.find("beta") != std::string::npos) {
            t = build_beta_asteroid(beta_kind_from_target(gen_what)).first;
        } else if (gen_what == "star") {
            StarSide side = gen_side == "left" ? StarSide::Left
                           : gen_side == "right" ? StarSide::Right : StarSide::Middle;
            t = build_star({side, gen_n, gen_r}).first;
        } else if (gen_what == "spider") {
            SpiderSide side = gen_side == "left" ? SpiderSide::Left
                             : gen_side == "right" ? SpiderSide::Right : SpiderSide::Middle;
            t = build_spider({side, gen_n, gen_m, parse_csv_ints(gen_x1), parse_csv_ints(gen_x2)}).t;
        } else {
            if (gen_spec_path.empty())
                throw CLI::ValidationError("--spec", "spec-driven family requires --spec");
            FamilySpec spec = FamilySpec::from_json(slurp(gen_spec_path));
            if (family_name(spec.family) != gen_what)
                throw CLI::ValidationError("family", "spec family tag does not match");
            t = build_family(spec).t;
        }
        spit(gen_out, t.to_text());
    });

    // ---- tr ----------------------------------------------------------------
    auto* trcmd = app.add_subcommand("tr", "Largest transitive subtournament");
    std::string tr_in;
    trcmd->add_option("input", tr_in, "TRN file")->required();
    trcmd->callback([&] {
        TrResult r = tr(load_trn(tr_in));
        std::cout << r.size << "\n";
        std::cout << "witness: " << join_csv(r.witness, 1) << "\n";
    });

    // ---- contains ------------------------------------------------------------
    auto* ccmd = app.add_subcommand("contains", "Induced containment of H in T");
    std::string c_host, c_pat;
    ccmd->add_option("T", c_host, "host TRN")->required();
    ccmd->add_option("H", c_pat, "pattern TRN")->required();
    ccmd->callback([&] {
        auto emb = find_induced_copy(load_trn(c_host), load_trn(c_pat));
        if (!emb) {
            std::cout << "absent\n";
            exit_code = kExitPropertyFails;
            return;
        }
        std::cout << "embedding: " << join_csv(emb->map, 1) << "\n";
    });

    // ---- recognize ------------------------------------------------------------
    auto* rcmd = app.add_subcommand("recognize", "Search for a family certificate");
    std::string r_family, r_in;
    rcmd->add_option("--family", r_family, "galaxy | asterism | galaxy_with_spiders | clutter | merged")
        ->required();
    rcmd->add_option("input", r_in, "TRN file")->required();
    rcmd->callback([&] {
        auto res = recognize(load_trn(r_in), family_from_name(r_family));
        if (!res) {
            std::cout << "not a " << r_family << "\n";
            exit_code = kExitPropertyFails;
            return;
        }
        std::cout << "ordering: " << join_csv(res->first, 1) << "\n";
        std::cout << res->second.to_json() << "\n";
    });

    // ---- mutant ----------------------------------------------------------------
    auto* mcmd = app.add_subcommand("mutant", "Build a mutant digraph and write DGR");
    std::string m_target, m_spider, m_clutter, m_asterism, m_out;
    mcmd->add_option("--target", m_target, "left-beta1 | left-beta2 | right-beta1 | right-beta2");
    mcmd->add_option("--spider-spec", m_spider, "FamilySpec JSON holding one spider component");
    mcmd->add_option("--clutter-spec", m_clutter, "clutter FamilySpec JSON");
    mcmd->add_option("--asterism-spec", m_asterism, "asterism FamilySpec JSON (corresponding digraph)");
    mcmd->add_option("-o,--out", m_out, "output DGR path")->required();
    mcmd->callback([&] {
        Digraph d;
        if (!m_target.empty()) {
            d = mutant_beta_asteroid(beta_kind_from_target(m_target)).d;
        } else if (!m_spider.empty()) {
            FamilySpec spec = FamilySpec::from_json(slurp(m_spider));
            if (spec.components.size() != 1 || spec.components[0].kind != Component::Kind::Spider)
                throw CLI::ValidationError("--spider-spec", "exactly one spider component expected");
            d = mutant_spider(spec.components[0].spider).d;
        } else if (!m_clutter.empty()) {
            d = mutant_clutter(build_family(FamilySpec::from_json(slurp(m_clutter))));
        } else if (!m_asterism.empty()) {
            d = corresponding_digraph(FamilySpec::from_json(slurp(m_asterism))).d;
        } else {
            throw CLI::ValidationError("mutant", "one of --target / --spider-spec / --clutter-spec / "
                                                 "--asterism-spec is required");
        }
        spit(m_out, d.to_text());
    });

    // ---- ops ------------------------------------------------------------------
    auto* ops = app.add_subcommand("ops", "Block reorderings");
    auto* ops_apply = ops->add_subcommand("apply", "Apply operation 1, 2 or alpha to an ordering");
    std::string op_name, op_ordering;
    ops_apply->add_option("--op", op_name, "1 | 2 | alpha")->required();
    ops_apply->add_option("--ordering", op_ordering, "comma-separated labels")->required();
    ops_apply->callback([&] {
        auto seg = parse_csv_ints(op_ordering);
        auto img = apply_operation(op_from_name(op_name), seg);
        std::cout << join_csv(img) << "\n";
    });

    // ---- smooth ------------------------------------------------------------------
    auto* smooth = app.add_subcommand("smooth", "Smooth structure verification and search");
    auto* sverify = smooth->add_subcommand("verify", "Check a structure against a host");
    std::string sv_host, sv_struct;
    sverify->add_option("--host", sv_host, "TRN file")->required();
    sverify->add_option("--structure", sv_struct, "structure JSON")->required();
    sverify->callback([&] {
        ValidationReport rep = verify_smooth(load_trn(sv_host), SmoothStructure::from_json(slurp(sv_struct)));
        if (rep.ok) {
            std::cout << "smooth\n";
        } else {
            for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
            exit_code = kExitPropertyFails;
        }
    });
    auto* ssearch = smooth->add_subcommand("search", "Brute-force search for a structure");
    std::string ss_host, ss_c = "1/2", ss_lambda = "1/4", ss_w = "0", ss_out;
    int ss_div = 0;
    ssearch->add_option("--host", ss_host, "TRN file")->required();
    ssearch->add_option("--c", ss_c, "c as p/q");
    ssearch->add_option("--lambda", ss_lambda, "lambda as p/q");
    ssearch->add_option("--w", ss_w, "flag vector, e.g. 0,0,1");
    ssearch->add_option("--divisor", ss_div, "require every |S_i| divisible by this");
    ssearch->add_option("--out", ss_out, "write the found structure JSON here");
    ssearch->callback([&] {
        auto res = search_smooth_structure(load_trn(ss_host), Rational::parse(ss_c),
                                           Rational::parse(ss_lambda), parse_csv_ints(ss_w), ss_div);
        if (!res.structure) {
            std::cout << "absent (" << res.candidates << " candidates tried)\n";
            exit_code = kExitPropertyFails;
            return;
        }
        std::cout << "found\n";
        if (!ss_out.empty()) spit(ss_out, res.structure->to_json());
        else std::cout << res.structure->to_json() << "\n";
    });

    // ---- embed ------------------------------------------------------------------
    auto* ecmd = app.add_subcommand("embed", "Well-contained copy of a digraph pattern");
    std::string e_digraph, e_host, e_struct;
    std::uint64_t e_budget = 50'000'000;
    ecmd->add_option("digraph", e_digraph, "DGR pattern")->required();
    ecmd->add_option("--host", e_host, "TRN host")->required();
    ecmd->add_option("--structure", e_struct, "structure JSON")->required();
    ecmd->add_option("--budget", e_budget, "node budget");
    ecmd->callback([&] {
        Tournament host = load_trn(e_host);
        Digraph pat = Digraph::from_text(slurp(e_digraph));
        XiLabeling xi = xi_labels(host, SmoothStructure::from_json(slurp(e_struct)));
        EmbedResult res = find_embedding(pat, host, xi, {}, e_budget);
        if (res.embedding) {
            std::cout << "embedding: " << join_csv(*res.embedding, 1) << "\n";
        } else {
            std::cout << (res.exhausted ? "absent (proved)\n" : "absent (budget)\n");
            exit_code = kExitPropertyFails;
        }
    });

    // ---- extract ------------------------------------------------------------------
    auto* xcmd = app.add_subcommand("extract", "Embed a mutant pattern and extract the family copy");
    std::string x_host, x_asterism, x_clutter, x_struct;
    std::uint64_t x_budget = 50'000'000;
    xcmd->add_option("--host", x_host, "TRN host")->required();
    xcmd->add_option("--asterism", x_asterism, "asterism FamilySpec JSON");
    xcmd->add_option("--clutter", x_clutter, "clutter FamilySpec JSON");
    xcmd->add_option("--structure", x_struct, "structure JSON")->required();
    xcmd->add_option("--budget", x_budget, "node budget");
    xcmd->callback([&] {
        Tournament host = load_trn(x_host);
        SmoothStructure chi = SmoothStructure::from_json(slurp(x_struct));
        XiLabeling xi = xi_labels(host, chi);
        if (!x_asterism.empty()) {
            FamilySpec spec = FamilySpec::from_json(slurp(x_asterism));
            CorrespondingDigraph cd = corresponding_digraph(spec);
            EmbedResult res = find_embedding(cd.d, host, xi, cd.leaf, x_budget);
            if (!res.embedding) {
                std::cout << (res.exhausted ? "absent (proved)\n" : "absent (budget)\n");
                exit_code = kExitPropertyFails;
                return;
            }
            AsterismExtraction ex = extract_asterism(host, spec, cd, *res.embedding);
            std::cout << (ex.verified ? "extracted\n" : "extraction failed verification\n");
            std::cout << "copy: " << join_csv(ex.h_embedding, 1) << "\n";
            if (!ex.verified) exit_code = kExitPropertyFails;
        } else if (!x_clutter.empty()) {
            FamilySpec spec = FamilySpec::from_json(slurp(x_clutter));
            FamilyInstance inst = build_family(spec);
            Digraph mc = mutant_clutter(inst);
            EmbedResult res = find_embedding(mc, host, xi, {}, x_budget);
            if (!res.embedding) {
                std::cout << (res.exhausted ? "absent (proved)\n" : "absent (budget)\n");
                exit_code = kExitPropertyFails;
                return;
            }
            bool all_ok = true;
            for (const auto& c : spec.components) {
                if (c.kind != Component::Kind::Spider) continue;
                std::vector<int> gamma;
                for (int p : c.positions) gamma.push_back((*res.embedding)[p]);
                SpiderExtraction ex = extract_spider_or_triangle(host, c.spider, gamma);
                std::cout << "spider at " << join_csv(c.positions, 1) << ": tag " << ex.tag
                          << " vertices " << join_csv(ex.vertices, 1) << "\n";
                all_ok = all_ok && ex.verified;
            }
            if (!all_ok) exit_code = kExitPropertyFails;
        } else {
            throw CLI::ValidationError("extract", "--asterism or --clutter required");
        }
    });

    // ---- ehc scan ------------------------------------------------------------------
    auto* ehccmd = app.add_subcommand("ehc", "Empirical probes");
    auto* scan = ehccmd->add_subcommand("scan", "Pattern-free minimum-tr table and epsilon estimate");
    std::string scan_h, scan_mode = "exhaustive", scan_out, scan_csv;
    int scan_nmax = 5, scan_jobs = 0;
    std::uint64_t scan_samples = 10000, scan_seed = 0;
    bool scan_seed_set = false;
    scan->set_help_flag("--help", "print help"); // frees -h for the pattern option
    scan->add_option("--h", scan_h, "pattern TRN")->required();
    scan->add_option("--n-max", scan_nmax, "largest n");
    scan->add_option("--mode", scan_mode, "exhaustive | sample");
    scan->add_option("--samples", scan_samples, "samples per n (sample mode)");
    scan->add_option("--seed", scan_seed, "sampling seed (required in sample mode)")
        ->each([&](const std::string&) { scan_seed_set = true; });
    scan->add_option("--out", scan_out, "write report JSON here");
    scan->add_option("--csv", scan_csv, "write report CSV here");
    scan->add_option("--jobs", scan_jobs, "worker count (0 = default)");
    scan->callback([&] {
        if (scan_mode == "sample" && !scan_seed_set)
            throw CLI::ValidationError("--seed", "sample mode requires an explicit --seed");
        ScanReport rep = epsilon_estimate(load_trn(scan_h), scan_nmax, scan_mode, scan_samples,
                                          scan_seed, jobs_or_env(scan_jobs));
        std::cout << rep.to_csv();
        if (rep.epsilon_estimate >= 0)
            std::cout << "epsilon_estimate: " << rep.epsilon_estimate << "\n";
        if (!scan_out.empty()) emit_report(rep, "json", scan_out);
        if (!scan_csv.empty()) emit_report(rep, "csv", scan_csv);
    });

    // ---- sweep ------------------------------------------------------------------
    auto* swcmd = app.add_subcommand("sweep", "Exhaustive orientation sweeps over mutant completions");
    std::string sw_target;
    swcmd->add_option("--target", sw_target,
                      "left-beta1 | left-beta2 | right-beta1 | right-beta2 | all-beta | spiders")
        ->required();
    swcmd->callback([&] {
        SweepReport rep;
        if (sw_target == "all-beta") rep = sweep_all_beta_asteroids();
        else if (sw_target == "spiders") rep = sweep_small_spiders();
        else rep = sweep_beta_asteroid(beta_kind_from_target(sw_target));
        std::cout << (rep.tried - rep.failures) << "/" << rep.tried << " pass\n";
        for (const auto& m : rep.messages) std::cout << "failure: " << m << "\n";
        if (rep.failures) exit_code = kExitPropertyFails;
    });

    // ---- lemma ------------------------------------------------------------------
    auto* lcmd = app.add_subcommand("lemma", "Deterministic checks and witness searches");
    auto* lcheck = lcmd->add_subcommand("check", "Run a named check");
    std::string lc_id, lc_mode = "exhaustive";
    int lc_k = 3, lc_n = 30, lc_jobs = 0;
    std::uint64_t lc_samples = 100000, lc_trials = 1000, lc_seed = 0;
    bool lc_seed_set = false;
    lcheck->add_option("--id", lc_id, "h | b | g")->required();
    lcheck->add_option("--k", lc_k, "size parameter for id h");
    lcheck->add_option("--mode", lc_mode, "exhaustive | sample (id h)");
    lcheck->add_option("--samples", lc_samples, "sample count (id h)");
    lcheck->add_option("--trials", lc_trials, "randomized trials (ids b, g)");
    lcheck->add_option("--n", lc_n, "host size bound (ids b, g)");
    lcheck->add_option("--seed", lc_seed, "seed")->each([&](const std::string&) { lc_seed_set = true; });
    lcheck->add_option("--jobs", lc_jobs, "worker count");
    lcheck->callback([&] {
        if (lc_id == "h") {
            bool exhaustive = lc_mode == "exhaustive";
            if (!exhaustive && !lc_seed_set)
                throw CLI::ValidationError("--seed", "sample mode requires an explicit --seed");
            SizeGuaranteeReport rep = verify_lemma_h(lc_k, exhaustive, lc_samples, lc_seed,
                                                     jobs_or_env(lc_jobs));
            std::cout << "checked " << rep.checked << ", counterexamples " << rep.counterexamples
                      << ", min tr " << rep.min_tr_seen << "\n";
            if (rep.counterexamples) exit_code = kExitPropertyFails;
        } else if (lc_id == "b" || lc_id == "g") {
            if (!lc_seed_set) throw CLI::ValidationError("--seed", "ids b and g require an explicit --seed");
            FuzzReport rep = lc_id == "b" ? fuzz_subset_density_bound(lc_trials, lc_n, lc_seed)
                                          : fuzz_common_restriction(lc_trials, lc_n, lc_seed);
            std::cout << "trials " << rep.trials << ", violations " << rep.violations << "\n";
            if (rep.violations) {
                std::cout << rep.first_violation << "\n";
                exit_code = kExitPropertyFails;
            }
        } else {
            throw CLI::ValidationError("--id", "unknown check id " + lc_id);
        }
    });
    auto* lwit = lcmd->add_subcommand("witness", "Search for an existential pattern witness");
    std::string lw_id, lw_host, lw_sets;
    int lw_variant = 1, lw_k = -1;
    lwit->add_option("--id", lw_id, "matching | noncomplete | quad | fan")->required();
    lwit->add_option("--host", lw_host, "TRN file")->required();
    lwit->add_option("--sets", lw_sets, "semicolon-separated vertex lists (1-based)")->required();
    lwit->add_option("--variant", lw_variant, "pattern variant");
    lwit->add_option("--k", lw_k, "pair count for matching");
    lwit->callback([&] {
        Tournament t = load_trn(lw_host);
        std::vector<std::vector<int>> sets;
        std::stringstream ss(lw_sets);
        std::string part;
        while (std::getline(ss, part, ';')) {
            auto v = parse_csv_ints(part);
            for (int& x : v) --x;
            sets.push_back(v);
        }
        auto need = [&](size_t k) {
            if (sets.size() != k)
                throw CLI::ValidationError("--sets", "expected " + std::to_string(k) + " sets");
        };
        if (lw_id == "matching") {
            need(2);
            auto pairs = backward_pair_matching(t, sets[0], sets[1], lw_k);
            std::cout << pairs.size() << " pairs\n";
            for (auto [x, y] : pairs) std::cout << x + 1 << " <- " << y + 1 << "\n";
            if (lw_k >= 0 && (int)pairs.size() < lw_k) exit_code = kExitPropertyFails;
        } else if (lw_id == "noncomplete") {
            need(2);
            NotCompleteWitness w = not_complete_witness(t, sets[0], sets[1]);
            std::cout << "not complete from: "
                      << (w.a_to_g ? std::to_string(w.a_to_g->first + 1) + "->" +
                                         std::to_string(w.a_to_g->second + 1)
                                   : std::string("absent"))
                      << "\n";
            std::cout << "not complete to: "
                      << (w.g_to_a ? std::to_string(w.g_to_a->first + 1) + "->" +
                                         std::to_string(w.g_to_a->second + 1)
                                   : std::string("absent"))
                      << "\n";
            if (!w.a_to_g || !w.g_to_a) exit_code = kExitPropertyFails;
        } else if (lw_id == "quad") {
            need(4);
            auto res = cross_pair_witness(t, sets[0], sets[1], sets[2], sets[3], lw_variant);
            if (res) std::cout << "witness: " << join_csv(*res, 1) << "\n";
            else { std::cout << "absent\n"; exit_code = kExitPropertyFails; }
        } else if (lw_id == "fan") {
            if (sets.size() < 2) throw CLI::ValidationError("--sets", "need the S sets plus A last");
            std::vector<int> A = sets.back();
            sets.pop_back();
            auto res = fan_witness(t, sets, A, lw_variant);
            if (res) std::cout << "witness: " << join_csv(*res, 1) << "\n";
            else { std::cout << "absent\n"; exit_code = kExitPropertyFails; }
        } else {
            throw CLI::ValidationError("--id", "unknown witness id " + lw_id);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
