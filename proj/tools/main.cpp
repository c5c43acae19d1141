// Copyright 2026 prismbishop contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prismbishop/constructions.hpp"
#include "prismbishop/diagonals.hpp"
#include "prismbishop/formulas.hpp"
#include "prismbishop/render.hpp"
#include "prismbishop/solver.hpp"
#include "prismbishop/sweep.hpp"

namespace {

using namespace prismbishop;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw Error("cannot open output file: " + out_path);
    out << text;
}

int cmd_board_info(int n, int m) {
    const Board board(n, m);
    const BoardSpec& s = board.spec();
    std::cout << "board " << s.n << "x" << s.n << "x" << s.m << " (k=" << s.k << ", r=" << s.r
              << ")\n";
    std::cout << "squares " << board.square_count() << '\n';
    std::cout << "vertices " << board.vertex_count() << '\n';
    std::cout << "edges " << board.edge_count() << '\n';
    int trivalent = 0;
    for (VertexId v = 0; v < board.vertex_count(); ++v)
        if (board.is_cuboid_vertex(v))
            ++trivalent;
    std::cout << "cuboid_vertices " << trivalent << '\n';
    std::cout << "euler "
              << board.vertex_count() - board.edge_count() + board.square_count() << '\n';
    std::cout << "case " << describe(case_tag(s)) << '\n';
    return 0;
}

int cmd_diagonals(int n, int m, bool list) {
    const Board board(n, m);
    const DiagonalAtlas atlas = enumerate_diagonals(board);
    std::cout << "diagonals " << atlas.total() << " (open " << atlas.open_count << ", closed "
              << atlas.closed_count << ")\n";
    std::cout << "formula " << diagonal_count_formula(board.spec()) << '\n';
    std::cout << "upper_bound " << upper_bound_from_atlas(atlas) << '\n';
    if (list)
        std::cout << format_atlas_listing(atlas);
    return 0;
}

int cmd_formula(int n, int m) {
    const BoardSpec s = BoardSpec::make(n, m);
    std::cout << "case " << describe(case_tag(s)) << '\n';
    std::cout << "theorem " << theorem_value(s) << '\n';
    std::cout << "lemma3_bound " << lemma3_bound(s) << '\n';
    std::cout << "diagonal_count " << diagonal_count_formula(s) << '\n';
    return 0;
}

int cmd_solve(int n, int m, bool oracle, const std::string& out_path) {
    const Board board(n, m);
    const DiagonalAtlas atlas = enumerate_diagonals(board);
    if (oracle) {
        std::cout << "oracle " << brute_force_oracle(board, atlas) << '\n';
        return 0;
    }
    const SolveResult result = independence_number(board, atlas);
    std::cout << "independence " << result.value << '\n';
    if (result.oracle_fallback)
        std::cout << "note matching reduction unavailable, oracle fallback used\n";
    std::cout << "theorem " << theorem_value(board.spec()) << '\n';
    if (!out_path.empty())
        emit(write_placement(max_placement(board, atlas)), out_path);
    return 0;
}

int cmd_construct(int n, int m, const std::string& format, const std::string& out_path) {
    const Board board(n, m);
    const DiagonalAtlas atlas = enumerate_diagonals(board);
    const Placement placement = construct_placement(board, atlas);
    if (format == "text")
        emit(render_net_text(board, placement), out_path);
    else if (format == "svg")
        emit(render_net_svg(board, placement), out_path);
    else if (format == "file")
        emit(write_placement(placement), out_path);
    else
        throw CLI::ValidationError("--emit must be text, svg or file");
    return 0;
}

int cmd_verify(const SweepOptions& options) {
    const SweepReport report = run_verification_sweep(options);
    std::cout << format_report(report);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bishop independence on the surface of an n x n x m square prism"};
    app.require_subcommand(1);

    int n = 6;
    int m = 8;

    auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "cross-section side length")->required();
        cmd->add_option("--m", m, "prism length (m >= n)")->required();
    };

    auto* board_cmd = app.add_subcommand("board", "surface model queries");
    auto* board_info = board_cmd->add_subcommand("info", "dimensions and structural counts");
    add_dims(board_info);

    auto* diagonals_cmd = app.add_subcommand("diagonals", "maximal diagonal census");
    add_dims(diagonals_cmd);
    bool list_flag = false;
    diagonals_cmd->add_flag("--list", list_flag, "one line per diagonal");

    auto* formula_cmd = app.add_subcommand("formula", "closed-form values");
    add_dims(formula_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "exact independence number");
    add_dims(solve_cmd);
    bool oracle_flag = false;
    std::string solve_out;
    solve_cmd->add_flag("--oracle", oracle_flag, "use the brute-force oracle (small boards)");
    solve_cmd->add_option("--out", solve_out, "write a witness placement file here");

    auto* construct_cmd = app.add_subcommand("construct", "closed-form placement");
    add_dims(construct_cmd);
    std::string emit_format = "file";
    std::string construct_out;
    construct_cmd->add_option("--emit", emit_format, "text, svg or file")
        ->check(CLI::IsMember({"text", "svg", "file"}));
    construct_cmd->add_option("--out", construct_out, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "full verification sweep");
    SweepOptions options;
    verify_cmd->add_option("--n-min", options.n_min, "smallest n")->capture_default_str();
    verify_cmd->add_option("--n-max", options.n_max, "largest n")->capture_default_str();
    verify_cmd->add_option("--m-max", options.m_max, "largest m")->capture_default_str();
    verify_cmd->add_option("--jobs", options.jobs, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (board_info->parsed())
            return cmd_board_info(n, m);
        if (diagonals_cmd->parsed())
            return cmd_diagonals(n, m, list_flag);
        if (formula_cmd->parsed())
            return cmd_formula(n, m);
        if (solve_cmd->parsed())
            return cmd_solve(n, m, oracle_flag, solve_out);
        if (construct_cmd->parsed())
            return cmd_construct(n, m, emit_format, construct_out);
        if (verify_cmd->parsed())
            return cmd_verify(options);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const prismbishop::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
