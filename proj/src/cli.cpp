#include "satpart/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "satpart/cw_families.hpp"
#include "satpart/cw_solver.hpp"
#include "satpart/errors.hpp"
#include "satpart/families.hpp"
#include "satpart/io.hpp"
#include "satpart/nd_solver.hpp"
#include "satpart/oracle.hpp"

namespace satpart {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int resolve_brute_cap(int requested) {
    if (requested >= 0) return requested;
    if (const char* env = std::getenv("SATPART_BRUTE_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("SATPART_BRUTE_CAP is not an integer");
        }
    }
    return kDefaultBruteForceCap;
}

void emit_report(std::ostream& out, OutputFormat format, const nlohmann::json& report) {
    if (format == OutputFormat::Json) {
        out << report.dump(2) << "\n";
        return;
    }
    out << report["answer"].get<std::string>() << "\n";
    if (report.contains("witness")) {
        auto dump_side = [&](const char* key) {
            out << key << ":";
            for (const auto& v : report["witness"][key]) out << " " << v.get<int>();
            out << "\n";
        };
        dump_side("one");
        dump_side("two");
    }
}

}  // namespace

int run_solve(const SolveRequest& request, std::ostream& out) {
    nlohmann::json report;
    report["schema"] = 1;
    report["balanced"] = request.balanced;
    const auto start = std::chrono::steady_clock::now();

    std::optional<Partition> witness;
    bool verified = false;
    switch (request.engine) {
        case Engine::Brute: {
            report["engine"] = "brute";
            const int cap = resolve_brute_cap(request.brute_cap);
            FscInstance inst = parse_instance(read_file(request.instance_path));
            witness = brute_force(inst, request.balanced, cap);
            report["stats"] = {{"n", inst.graph.n()}, {"cap", cap}};
            if (witness && request.verify) {
                internal_check(is_valid_fsc_solution(inst, *witness) &&
                                   (!request.balanced || witness->is_balanced()),
                               "reported witness failed verification");
                verified = true;
            }
            break;
        }
        case Engine::Nd: {
            report["engine"] = "nd";
            FscInstance inst = parse_instance(read_file(request.instance_path));
            if (!inst.is_plain())
                throw InputError("the nd engine solves plain SP/BSP; instance has constraints");
            NdStats stats;
            witness = solve_nd(inst.graph, request.balanced, &stats);
            report["stats"] = {{"k", stats.k}, {"guesses_tried", stats.guesses_tried}};
            if (witness && request.verify) {
                internal_check(is_satisfactory(inst.graph, *witness, true) &&
                                   (!request.balanced || witness->is_balanced()),
                               "reported witness failed verification");
                verified = true;
            }
            break;
        }
        case Engine::Cw: {
            report["engine"] = "cw";
            CExpr expr = parse_cexpr(read_file(request.expr_path));
            CwStats stats;
            witness = solve_cw(expr, request.balanced, &stats);
            report["stats"] = {{"expr_nodes", stats.expr_nodes},
                               {"max_table_keys", stats.max_table_keys},
                               {"total_keys", stats.total_keys}};
            if (witness && request.verify) {
                internal_check(is_satisfactory(eval_cexpr(expr).graph, *witness, true) &&
                                   (!request.balanced || witness->is_balanced()),
                               "reported witness failed verification");
                verified = true;
            }
            break;
        }
    }

    report["answer"] = witness ? "YES" : "NO";
    if (witness) {
        report["witness"] = {{"one", witness->vertices_on(Side::One)},
                             {"two", witness->vertices_on(Side::Two)}};
        report["verified"] = verified;
    }
    report["time_ms"] = elapsed_ms(start);
    emit_report(out, request.format, report);
    return witness ? kExitYes : kExitNo;
}

namespace {

int run_generate(const std::string& family, const std::string& cexpr_kind,
                 const std::vector<int>& params, const std::string& out_path,
                 std::ostream& out) {
    std::string text;
    if (!family.empty()) {
        auto fam = family_from_name(family);
        if (!fam) throw InputError("unknown family: " + family);
        text = serialize_instance(FscInstance(generate_family(*fam, params)));
    } else {
        if (params.empty()) throw InputError("empty parameter list");
        if (cexpr_kind == "path") text = cexpr_path(params.at(0)).to_string() + "\n";
        else if (cexpr_kind == "cycle") text = cexpr_cycle(params.at(0)).to_string() + "\n";
        else if (cexpr_kind == "clique") text = cexpr_clique(params.at(0)).to_string() + "\n";
        else if (cexpr_kind == "biclique") {
            if (params.size() != 2) throw InputError("biclique takes two sizes");
            text = cexpr_complete_bipartite(params[0], params[1]).to_string() + "\n";
        } else {
            throw InputError("unknown expression kind: " + cexpr_kind);
        }
    }
    if (out_path.empty()) out << text;
    else write_file(out_path, text);
    return kExitYes;
}

void bench_one(std::ostream& out, const std::string& name, const FscInstance& inst,
               const CExpr* expr) {
    struct Row {
        const char* engine;
        std::optional<bool> answer;
        double ms = 0;
    };
    std::vector<Row> rows;
    auto timed = [&](const char* engine, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        std::optional<Partition> w = fn();
        rows.push_back({engine, w.has_value(), elapsed_ms(start)});
    };
    timed("brute", [&] { return brute_force(inst, false); });
    timed("nd", [&] { return solve_nd(inst.graph, false); });
    if (expr) timed("cw", [&] { return solve_cw(*expr, false); });
    for (const Row& r : rows) {
        std::ostringstream line;
        line << name << "  " << r.engine << "  " << (*r.answer ? "YES" : "NO ") << "  ";
        line.precision(3);
        line << std::fixed << r.ms << " ms";
        out << line.str() << "\n";
    }
}

int run_bench(const std::string& suite, std::ostream& out) {
    if (suite != "families") throw InputError("unknown bench suite: " + suite);
    out << "instance  engine  answer  time\n";
    {
        FscInstance inst(generate_family(Family::Complete, {6}));
        CExpr e = cexpr_clique(6);
        bench_one(out, "K6", inst, &e);
    }
    {
        FscInstance inst(generate_family(Family::Cycle, {8}));
        CExpr e = cexpr_cycle(8);
        bench_one(out, "C8", inst, &e);
    }
    {
        FscInstance inst(generate_family(Family::Path, {8}));
        CExpr e = cexpr_path(8);
        bench_one(out, "P8", inst, &e);
    }
    {
        FscInstance inst(generate_family(Family::CompleteBipartite, {4, 4}));
        CExpr e = cexpr_complete_bipartite(4, 4);
        bench_one(out, "K4,4", inst, &e);
    }
    {
        FscInstance inst(generate_family(Family::CompleteMultipartite, {2, 2, 2}));
        bench_one(out, "K2,2,2", inst, nullptr);
    }
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solvers and reductions for the satisfactory partition problem"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Decide SP/BSP (and FS/FSC via brute force)");
    SolveRequest req;
    std::string engine_name;
    solve->add_option("instance", req.instance_path, "instance file (brute/nd engines)");
    solve->add_option("--engine", engine_name, "brute | nd | cw")->required();
    solve->add_option("--expr", req.expr_path, "c-expression file (cw engine)");
    solve->add_flag("--balanced", req.balanced, "require |V1| = |V2|");
    bool no_verify = false;
    solve->add_flag("--no-verify", no_verify, "skip witness re-checking");
    solve->add_option("--cap", req.brute_cap, "brute-force vertex cap (default 26)");
    std::string format = "json";
    solve->add_option("--output", format, "json | plain");

    // check
    auto* check = app.add_subcommand("check", "Validate orientations and witnesses");
    auto* check_orient = check->add_subcommand("orientation", "orientation vs MMO bound");
    std::string mmo_path, orientation_path;
    check_orient->add_option("--mmo", mmo_path, "MMO instance file")->required();
    check_orient->add_option("--orientation", orientation_path, "orientation file")->required();
    auto* check_part = check->add_subcommand("partition", "witness vs instance");
    std::string instance_path, witness_path;
    bool check_balanced = false;
    check_part->add_option("--instance", instance_path)->required();
    check_part->add_option("--witness", witness_path, "witness JSON file")->required();
    check_part->add_flag("--balanced", check_balanced);
    check->require_subcommand(1);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Gadget reductions");
    auto* red_mmo = reduce->add_subcommand("mmo-to-fsc", "MMO -> SP-FSC");
    std::string red_in, red_out, red_map_out;
    red_mmo->add_option("--mmo", red_in)->required();
    red_mmo->add_option("--out", red_out)->required();
    red_mmo->add_option("--map", red_map_out, "name-table sidecar (JSON)");
    auto* red_fs = reduce->add_subcommand("fsc-to-fs", "SP-FSC -> SP-FS");
    std::string fs_in, fs_out, fs_map_out;
    red_fs->add_option("--instance", fs_in)->required();
    red_fs->add_option("--out", fs_out)->required();
    red_fs->add_option("--map", fs_map_out, "name-table sidecar (JSON)");
    reduce->require_subcommand(1);

    // map
    auto* mapcmd = app.add_subcommand("map", "Translate solutions across reductions");
    auto* map_sol = mapcmd->add_subcommand("solution", "orientation<->partition, fs<->fsc");
    std::string ms_mmo, ms_map, ms_orientation, ms_witness, ms_instance, ms_fs_witness,
        ms_fsc_witness, ms_out;
    map_sol->add_option("--mmo", ms_mmo, "MMO instance (orientation<->partition modes)");
    map_sol->add_option("--map", ms_map, "name-table sidecar")->required();
    map_sol->add_option("--orientation", ms_orientation, "orientation -> reduced-instance witness");
    map_sol->add_option("--witness", ms_witness, "reduced-instance witness -> orientation");
    map_sol->add_option("--instance", ms_instance, "FSC instance (fs<->fsc modes)");
    map_sol->add_option("--fs-witness", ms_fs_witness, "FS witness -> FSC witness");
    map_sol->add_option("--fsc-witness", ms_fsc_witness, "FSC witness -> FS witness");
    map_sol->add_option("--out", ms_out, "output file (default stdout)");
    mapcmd->require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Built-in graph families and expressions");
    std::string gen_family, gen_cexpr, gen_out;
    std::vector<int> gen_params;
    gen->add_option("--family", gen_family, "complete|star|cycle|path|complete-bipartite|complete-multipartite");
    gen->add_option("--cexpr", gen_cexpr, "path|cycle|clique|biclique");
    gen->add_option("--params", gen_params, "size parameters")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Timing harness");
    std::string suite = "families";
    bench->add_option("--suite", suite, "families");

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("satpart");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream so, se;
        const int code = app.exit(e, so, se);
        out << so.str();
        err << se.str();
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (solve->parsed()) {
            req.verify = !no_verify;
            if (format == "json") req.format = OutputFormat::Json;
            else if (format == "plain") req.format = OutputFormat::Plain;
            else throw InputError("unknown output format: " + format);
            if (engine_name == "brute") req.engine = Engine::Brute;
            else if (engine_name == "nd") req.engine = Engine::Nd;
            else if (engine_name == "cw") req.engine = Engine::Cw;
            else throw InputError("unknown engine: " + engine_name);
            if (req.engine == Engine::Cw) {
                if (req.expr_path.empty())
                    throw InputError("the cw engine needs --expr EXPRESSION_FILE");
            } else if (req.instance_path.empty()) {
                throw InputError("missing instance file");
            }
            return run_solve(req, out);
        }
        if (check_orient->parsed()) {
            MmoInstance m = parse_mmo(read_file(mmo_path));
            Orientation o = parse_orientation(read_file(orientation_path), m);
            const bool ok = check_orientation(m, o);
            out << (ok ? "VALID" : "INVALID") << "\n";
            return ok ? kExitYes : kExitNo;
        }
        if (check_part->parsed()) {
            FscInstance inst = parse_instance(read_file(instance_path));
            Partition p = partition_from_json(read_file(witness_path), inst.graph.n());
            const bool ok =
                is_valid_fsc_solution(inst, p) && (!check_balanced || p.is_balanced());
            out << (ok ? "VALID" : "INVALID") << "\n";
            return ok ? kExitYes : kExitNo;
        }
        if (red_mmo->parsed()) {
            MmoInstance m = parse_mmo(read_file(red_in));
            auto [inst, map] = reduce_mmo_to_fsc(m);
            write_file(red_out, serialize_instance(inst));
            if (!red_map_out.empty()) write_file(red_map_out, reduction_map_to_json(map));
            return kExitYes;
        }
        if (red_fs->parsed()) {
            FscInstance inst = parse_instance(read_file(fs_in));
            auto [fs, map] = reduce_fsc_to_fs(inst);
            write_file(fs_out, serialize_instance(fs));
            if (!fs_map_out.empty()) write_file(fs_map_out, reduction_map_to_json(map));
            return kExitYes;
        }
        if (map_sol->parsed()) {
            const int modes = !ms_orientation.empty() + !ms_witness.empty() +
                              !ms_fs_witness.empty() + !ms_fsc_witness.empty();
            if (modes != 1)
                throw InputError(
                    "pick exactly one of --orientation/--witness/--fs-witness/--fsc-witness");
            ReductionMap map = reduction_map_from_json(read_file(ms_map));
            std::string result;
            if (!ms_orientation.empty() || !ms_witness.empty()) {
                if (ms_mmo.empty()) throw InputError("this mode needs --mmo");
                MmoInstance m = parse_mmo(read_file(ms_mmo));
                if (!ms_orientation.empty()) {
                    Orientation o = parse_orientation(read_file(ms_orientation), m);
                    result = partition_to_json(orientation_to_partition(m, o, map)) + "\n";
                } else {
                    Partition p = partition_from_json(read_file(ms_witness), map.total_count());
                    result = serialize_orientation(m, partition_to_orientation(m, map, p));
                }
            } else {
                if (ms_instance.empty()) throw InputError("this mode needs --instance");
                FscInstance inst = parse_instance(read_file(ms_instance));
                if (!ms_fs_witness.empty()) {
                    Partition p = partition_from_json(read_file(ms_fs_witness), map.total_count());
                    result = partition_to_json(lift_fs_solution(inst, map, p)) + "\n";
                } else {
                    Partition p =
                        partition_from_json(read_file(ms_fsc_witness), inst.graph.n());
                    result = partition_to_json(project_fsc_solution(inst, map, p)) + "\n";
                }
            }
            if (ms_out.empty()) out << result;
            else write_file(ms_out, result);
            return kExitYes;
        }
        if (gen->parsed()) {
            if (gen_family.empty() == gen_cexpr.empty())
                throw InputError("pick exactly one of --family / --cexpr");
            return run_generate(gen_family, gen_cexpr, gen_params, gen_out, out);
        }
        if (bench->parsed()) return run_bench(suite, out);
        throw InputError("no subcommand given");
    } catch (const CapacityError& e) {
        err << "{\"error\":\"capacity\",\"message\":" << nlohmann::json(e.what()).dump() << "}\n";
        return kExitError;
    } catch (const InputError& e) {
        err << "{\"error\":\"input\",\"message\":" << nlohmann::json(e.what()).dump() << "}\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "{\"error\":\"internal\",\"message\":" << nlohmann::json(e.what()).dump() << "}\n";
        return kExitError;
    }
}

}  // namespace satpart
