#include "torusband/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "torusband/gentle.hpp"
#include "torusband/json_io.hpp"
#include "torusband/sequences.hpp"
#include "torusband/twists.hpp"
#include "torusband/verify.hpp"

namespace tb {

namespace {

using nlohmann::json;

json read_json(const std::string& source) {
    if (source.empty() || source == "-") return json::parse(std::cin);
    std::ifstream in(source);
    if (!in) throw CLI::ValidationError("input", "cannot open file: " + source);
    return json::parse(in);
}

std::vector<std::int64_t> parse_degrees(const std::string& csv) {
    std::vector<std::int64_t> d;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) d.push_back(std::stoll(tok));
    if (d.empty()) throw CLI::ValidationError("degrees", "expected comma-separated integers");
    return d;
}

loop_matrix matrix_input(const json& j) {
    if (json_is_walk(j)) return matrix_from_walk(walk_from_json(j));
    return matrix_from_json(j);
}

cyclic_walk walk_input(const json& j) {
    if (json_is_walk(j)) return walk_from_json(j);
    return walk_from_matrix(matrix_from_json(j));
}

t_range_mode parse_t_range(const std::string& s) {
    return s == "all" ? t_range_mode::all : t_range_mode::column;
}

cond2_mode parse_cond2(const std::string& s) {
    return s == "literal" ? cond2_mode::literal : cond2_mode::column;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial model of the derived category of a cycle of projective lines"};
    app.require_subcommand(1);

    std::int64_t field_prime = field::prime();
    if (const char* env = std::getenv("CCC_FIELD_PRIME")) field_prime = std::stoll(env);
    app.add_option("--field-prime", field_prime, "prime p for the coefficient field F_p");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit JSON output (JSON is always the structured format)");
    std::string t_range_s = "column", cond2_s = "column";
    app.add_option("--t-range", t_range_s, "shift range for the pattern condition")
        ->check(CLI::IsMember({"column", "all"}));
    app.add_option("--cond2", cond2_s, "reading of the per-column gap condition")
        ->check(CLI::IsMember({"column", "literal"}));

    // seq r d0,...,d(n-1)
    auto* seq = app.add_subcommand("seq", "canonical cyclic sequence m(r, d)");
    int seq_r = 1;
    std::string seq_d;
    seq->add_option("r", seq_r, "rank")->required();
    seq->add_option("d", seq_d, "comma-separated multidegree")->required();

    // check-simple [input]
    auto* chk = app.add_subcommand("check-simple", "the three simplicity conditions");
    std::string chk_in = "-";
    chk->add_option("input", chk_in, "matrix JSON file or - for stdin");

    auto* inter = app.add_subcommand("intersect", "intersection number of two loops");
    std::string inter_a = "-", inter_b = "-";
    inter->add_option("a", inter_a, "first loop (walk or matrix JSON)")->required();
    inter->add_option("b", inter_b, "second loop (walk or matrix JSON)")->required();

    auto* selfi = app.add_subcommand("self-intersect", "self-intersection number");
    std::string selfi_in = "-";
    selfi->add_option("input", selfi_in, "loop JSON file or - for stdin");

    auto* hom = app.add_subcommand("hom", "graded hom dimensions in the homotopy category");
    std::string hom_a = "-", hom_b = "-";
    std::int64_t hom_la = 1, hom_lb = 1;
    hom->add_option("a", hom_a, "first loop (walk or matrix JSON)")->required();
    hom->add_option("b", hom_b, "second loop (walk or matrix JSON)")->required();
    hom->add_option("--lambda", hom_la, "local scalar of the first band");
    hom->add_option("--lambda2", hom_lb, "local scalar of the second band");

    auto* conec = app.add_subcommand("cone", "extension-peel mapping cone");
    std::string cone_in = "-";
    std::int64_t cone_lambda = 1;
    conec->add_option("input", cone_in, "matrix JSON (rank >= 2)");
    conec->add_option("--lambda", cone_lambda, "local scalar");

    auto* build = app.add_subcommand("build", "band complex of a loop");
    std::string build_in = "-";
    std::int64_t build_lambda = 1;
    build->add_option("input", build_in, "loop JSON file or - for stdin");
    build->add_option("--lambda", build_lambda, "local scalar");

    auto* twist = app.add_subcommand("twist", "Dehn twist along a generator");
    std::string twist_in = "-", twist_gen = "pic";
    std::int64_t twist_pow = 1;
    twist->add_option("input", twist_in, "loop JSON file or - for stdin");
    twist->add_option("--gen", twist_gen, "generator: pic or vert:i");
    twist->add_option("--pow", twist_pow, "twist power");

    auto* norm = app.add_subcommand("normalize", "twist word carrying a spherical loop to gamma_Pic");
    std::string norm_in = "-";
    norm->add_option("input", norm_in, "loop JSON file or - for stdin");

    auto* peel = app.add_subcommand("peel", "iterated extension peeling");
    std::string peel_in = "-";
    peel->add_option("input", peel_in, "matrix JSON file or - for stdin");

    auto* render = app.add_subcommand("render", "SVG of the straight-line representative");
    int render_r = 1;
    std::string render_d, svg_path;
    render->add_option("r", render_r, "rank")->required();
    render->add_option("d", render_d, "comma-separated multidegree")->required();
    render->add_option("--svg", svg_path, "output SVG path (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "cross-verification sweeps");
    verify_config vcfg;
    verify->add_option("--n", vcfg.n_max, "max number of punctures");
    verify->add_option("--r", vcfg.r_max, "max rank");
    verify->add_option("--bound", vcfg.entry_bound, "entry bound for random loops");
    verify->add_option("--samples", vcfg.sample_count, "samples per check");
    verify->add_option("--seed", vcfg.seed, "random seed");
    bool verify_serial = false;
    verify->add_flag("--serial", verify_serial, "disable parallel sweeps");

    auto* diml = app.add_subcommand("dim-lambda", "dimension of the gentle algebra");
    int diml_n = 1;
    diml->add_option("--n", diml_n, "number of columns")->required();

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        field::set_prime(field_prime);
        const t_range_mode t_range = parse_t_range(t_range_s);
        const cond2_mode cond2 = parse_cond2(cond2_s);

        if (*seq) {
            emit(out, to_json(canonical_sequence(seq_r, parse_degrees(seq_d))));
        } else if (*chk) {
            const loop_matrix m = matrix_input(read_json(chk_in));
            emit(out, to_json(bdg_check(m, t_range, cond2)));
        } else if (*inter) {
            const json ja = read_json(inter_a), jb = read_json(inter_b);
            if (!json_is_walk(ja) && !json_is_walk(jb)) {
                emit(out, to_json(intersections_cvb(matrix_from_json(ja), matrix_from_json(jb))));
            } else {
                emit(out, to_json(intersections_general(walk_input(ja), walk_input(jb))));
            }
        } else if (*selfi) {
            const json j = read_json(selfi_in);
            if (!json_is_walk(j)) {
                emit(out, to_json(self_intersections(matrix_from_json(j))));
            } else {
                json r;
                r["count"] = self_intersections_general(walk_from_json(j));
                emit(out, r);
            }
        } else if (*hom) {
            const projective_complex X = build_band_complex(matrix_input(read_json(hom_a)), hom_la);
            const projective_complex Y = build_band_complex(matrix_input(read_json(hom_b)), hom_lb);
            json by_shift = json::object();
            std::int64_t total = 0;
            const int lo = X.summands.empty() || Y.summands.empty() ? 0 : Y.min_deg() - X.max_deg();
            const int hi = X.summands.empty() || Y.summands.empty() ? -1 : Y.max_deg() - X.min_deg();
            for (int s = lo; s <= hi; ++s) {
                const std::int64_t d = hom_dim(X, Y, s);
                if (d) by_shift[std::to_string(s)] = d;
                total += d;
            }
            emit(out, json{{"total", total}, {"by_shift", by_shift}});
        } else if (*conec) {
            const extension_cone_result r = extension_cone(matrix_input(read_json(cone_in)), cone_lambda);
            json j;
            j["line_degree"] = r.line_degree;
            j["reduced"] = to_json(r.reduced);
            j["matched_lambda"] = r.matched_lambda;
            j["cone"] = to_json(r.cone_complex);
            emit(out, j);
        } else if (*build) {
            emit(out, to_json(build_band_complex(matrix_input(read_json(build_in)), build_lambda)));
        } else if (*twist) {
            const cyclic_walk w = walk_input(read_json(twist_in));
            twist_step step;
            if (twist_gen == "pic") {
                step = {twist_step::generator::pic, 0, twist_pow};
            } else if (twist_gen.rfind("vert:", 0) == 0) {
                step = {twist_step::generator::vert, std::stoi(twist_gen.substr(5)), twist_pow};
            } else {
                err << "unknown generator: " << twist_gen << "\n";
                return 2;
            }
            emit(out, to_json(apply_twist_step(w, step)));
        } else if (*norm) {
            const cyclic_walk w = walk_input(read_json(norm_in));
            const twist_word word = normalize_to_pic(w);
            json j;
            j["word"] = to_json(word);
            j["result"] = to_json(apply_twist_word(w, word));
            emit(out, j);
        } else if (*peel) {
            const loop_matrix m = matrix_input(read_json(peel_in));
            json j;
            j["tower"] = peel_tower(m);
            emit(out, j);
        } else if (*render) {
            const planar_representative rep =
                geometric_representative(render_r, parse_degrees(render_d));
            const std::string svg = render_svg(rep);
            if (svg_path.empty()) {
                out << svg;
            } else {
                std::ofstream f(svg_path);
                if (!f) {
                    err << "cannot write file: " << svg_path << "\n";
                    return 2;
                }
                f << svg;
                emit(out, json{{"svg", svg_path}, {"crossings", count_planar_crossings(rep)}});
            }
        } else if (*verify) {
            vcfg.t_range = t_range;
            vcfg.cond2 = cond2;
            vcfg.policy = verify_serial ? exec_policy::serial : exec_policy::parallel;
            const verify_report rep = verify_suite(vcfg);
            emit(out, to_json(rep));
            return rep.mismatches() == 0 ? 0 : 1;
        } else if (*diml) {
            emit(out, json{{"n", diml_n}, {"dim", dim_algebra(diml_n)}});
        }
        return 0;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "bad input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "bad input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tb
