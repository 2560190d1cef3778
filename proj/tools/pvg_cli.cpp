#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvg/example_g6.hpp"
#include "pvg/four_colour.hpp"
#include "pvg/io.hpp"
#include "pvg/sat_reduction.hpp"
#include "pvg/svg.hpp"
#include "pvg/three_colour.hpp"

using namespace pvg;

static PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_point_set(in);
}

static void write_meta(const std::string& path, const std::vector<std::string>& line,
                       const std::vector<std::string>& role, const std::vector<int>& rank) {
    nlohmann::json meta = nlohmann::json::array();
    for (size_t i = 0; i < role.size(); ++i)
        meta.push_back({{"index", i}, {"line", line[i]}, {"role", role[i]}, {"rank", rank[i]}});
    std::ofstream out(path);
    out << meta.dump(2) << "\n";
}

int main(int argc, char** argv) {
    CLI::App app{"point visibility graph toolkit"};
    app.require_subcommand(1);

    std::string points_path, colouring_path, out_path, meta_path, cnf_path;
    int k = 4, max_n = 25;
    bool do_verify = false;

    auto* cmd_pvg = app.add_subcommand("pvg", "print the visibility graph of a point set");
    cmd_pvg->add_option("points", points_path)->required();

    auto* cmd_colour = app.add_subcommand("colour", "decide k-colourability (k = 2, 3 or 4)");
    cmd_colour->add_option("points", points_path)->required();
    cmd_colour->add_option("--k", k)->check(CLI::IsMember({2, 3, 4}))->required();
    cmd_colour->add_option("--out", out_path);

    auto* cmd_chrom = app.add_subcommand("chromatic", "brute-force chromatic and clique numbers");
    cmd_chrom->add_option("points", points_path)->required();
    cmd_chrom->add_option("--max-n", max_n);

    auto* cmd_sat = app.add_subcommand("reduce-sat", "compile a 3-CNF into its embedding");
    cmd_sat->add_option("cnf", cnf_path)->required();
    cmd_sat->add_option("--out-points", out_path)->required();
    cmd_sat->add_option("--out-meta", meta_path)->required();
    cmd_sat->add_flag("--verify", do_verify);

    auto* cmd_g6 = app.add_subcommand("example-g6", "build the clique-4 chromatic-6 embedding");
    cmd_g6->add_option("--out-points", out_path)->required();
    cmd_g6->add_option("--out-meta", meta_path)->required();
    cmd_g6->add_flag("--verify", do_verify);

    auto* cmd_verify = app.add_subcommand("verify", "check a colouring against a point set");
    cmd_verify->add_option("points", points_path)->required();
    cmd_verify->add_option("colouring", colouring_path)->required();

    auto* cmd_svg = app.add_subcommand("svg", "render a point set as SVG");
    cmd_svg->add_option("points", points_path)->required();
    cmd_svg->add_option("--colouring", colouring_path);
    cmd_svg->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_pvg->parsed()) {
            write_graph(std::cout, build_pvg(read_points_file(points_path)));
            return 0;
        }
        if (cmd_colour->parsed()) {
            auto ps = read_points_file(points_path);
            std::optional<Colouring> c;
            if (k == 2) c = two_colourable(ps);
            else if (k == 3) c = three_colourable(ps);
            else c = decide_four_colouring(ps);
            if (!c) {
                std::cout << "NO\n";
                return 1;
            }
            if (out_path.empty()) {
                write_colouring(std::cout, *c);
            } else {
                std::ofstream out(out_path);
                write_colouring(out, *c);
            }
            return 0;
        }
        if (cmd_chrom->parsed()) {
            auto ps = read_points_file(points_path);
            if (ps.size() > max_n)
                throw Error("point set larger than --max-n (" + std::to_string(max_n) + ")");
            auto g = build_pvg(ps);
            std::cout << "chromatic " << chromatic_number(g) << "\n"
                      << "clique " << clique_number(g) << "\n";
            return 0;
        }
        if (cmd_sat->parsed()) {
            std::ifstream in(cnf_path);
            if (!in) throw ParseError("cannot open " + cnf_path);
            std::stringstream buf;
            buf << in.rdbuf();
            auto f = parse_dimacs(buf.str());
            auto z = build_zeta(f);
            {
                std::ofstream out(out_path);
                write_point_set(out, z.points);
            }
            std::vector<std::string> line, role;
            std::vector<int> rank;
            for (const auto& r : z.roles) {
                line.push_back(r.line);
                role.push_back(r.role);
                rank.push_back(r.rank);
            }
            write_meta(meta_path, line, role, rank);
            if (do_verify) {
                auto rep = verify_reduction(f, z);
                std::cout << "satisfiable " << rep.satisfiable << "\n"
                          << "l1l3_3colourable " << rep.sub3col << "\n"
                          << "cross_edges_match " << rep.cross_edges_match << "\n"
                          << "l2_complete " << rep.l2_complete << "\n"
                          << "l2_path " << rep.l2_path << "\n"
                          << "five_colouring_valid " << rep.five_col_valid << "\n"
                          << "equivalent " << rep.equivalent << "\n";
                if (!rep.equivalent) return 1;
            }
            return 0;
        }
        if (cmd_g6->parsed()) {
            auto e = build_g6();
            {
                std::ofstream out(out_path);
                write_point_set(out, e.points);
            }
            write_meta(meta_path, e.line, e.role, e.rank);
            if (do_verify) {
                auto rep = verify_g6(e);
                std::cout << "cross_match " << rep.cross_match << "\n"
                          << "triangle_free_l1l3 " << rep.triangle_free_sub << "\n"
                          << "chi_l1l3 " << rep.chi_sub << "\n"
                          << "clique_number " << rep.omega_full << "\n"
                          << "chromatic_number " << rep.chi_full << "\n";
                if (!(rep.omega_full == 4 && rep.chi_full == 6 && rep.six_valid)) return 1;
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto ps = read_points_file(points_path);
            std::ifstream in(colouring_path);
            if (!in) throw ParseError("cannot open " + colouring_path);
            auto c = read_colouring(in, ps.size());
            return is_valid_colouring(build_pvg(ps), c) ? 0 : 1;
        }
        if (cmd_svg->parsed()) {
            auto ps = read_points_file(points_path);
            auto g = build_pvg(ps);
            std::optional<Colouring> c;
            if (!colouring_path.empty()) {
                std::ifstream in(colouring_path);
                if (!in) throw ParseError("cannot open " + colouring_path);
                c = read_colouring(in, ps.size());
            }
            std::ofstream out(out_path);
            write_svg(out, ps, &g, c ? &*c : nullptr);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
