// ecdlab: generate digraphs, build products, search for efficient closed
// dominating sets, recognize factor families, run theorem deciders, and
// cross-validate them against the exact-cover oracle.
//
// Exit codes: 0 success, 1 negative decision, 2 input error, 3 bound exceeded.
// All diagnostics go to stderr with the prefix "error:".

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecdlab/digraph.hpp"
#include "ecdlab/edgelist.hpp"
#include "ecdlab/families.hpp"
#include "ecdlab/generators.hpp"
#include "ecdlab/harness.hpp"
#include "ecdlab/products.hpp"
#include "ecdlab/solver.hpp"
#include "ecdlab/theorems.hpp"
#include "ecdlab/vertex_set.hpp"

namespace {

using namespace ecdlab;

Digraph read_digraph(const std::string& path) {
    if (path.empty() || path == "-") return parse_edgelist(std::cin);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return parse_edgelist(f);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

int parse_int(const std::string& text) {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_int(part));
    return out;
}

// "0|1,2" -> blocks split by '|', members by ','
std::vector<std::vector<int>> parse_partition(const std::string& text) {
    std::vector<std::vector<int>> out;
    if (text.empty()) return out;
    for (const std::string& block : split(text, '|')) out.push_back(parse_int_list(block));
    return out;
}

// "0:3,1:4" -> arcs tail:head separated by commas
std::vector<Arc> parse_arc_list(const std::string& text) {
    std::vector<Arc> out;
    if (text.empty()) return out;
    for (const std::string& part : split(text, ',')) {
        std::vector<std::string> ends = split(part, ':');
        if (ends.size() != 2)
            throw std::invalid_argument("arc '" + part + "' is not of the form tail:head");
        out.push_back({parse_int(ends[0]), parse_int(ends[1])});
    }
    return out;
}

VertexSet parse_vertex_set(const std::string& text, int universe) {
    VertexSet out(universe);
    for (int v : parse_int_list(text)) {
        if (v < 0 || v >= universe)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is out of range");
        out.add(v);
    }
    return out;
}

// Construction header echoed with every decision report so external tools
// can re-verify the certificate against the same flat product labeling.
std::string construction_json(const std::string& kind, const std::vector<int>& factor_counts) {
    std::string out = "{\"kind\": \"" + kind + "\", \"factor_counts\": [";
    for (size_t i = 0; i < factor_counts.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(factor_counts[i]);
    }
    out += "], \"labeling\": \"row-major: flat = left * right_count + right, folded left "
           "to right\"}";
    return out;
}

int emit_decision(const DecisionReport& rep, const std::string& kind,
                  const std::vector<int>& factor_counts) {
    std::cout << "{\"construction\": " << construction_json(kind, factor_counts)
              << ", \"report\": " << rep.to_json() << "}\n";
    return rep.decision ? 0 : 1;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
    CLI::App app{"efficient closed domination in digraph products"};
    app.require_subcommand(1);

    int opt_enum = 0, opt_search = 0, opt_family = 0;
    app.add_option("--enum-bound", opt_enum, "max vertices for enumeration and gamma search");
    app.add_option("--search-bound", opt_search, "max vertices for single-solution search");
    app.add_option("--family-bound", opt_family, "max vertices for family recognition");

    std::function<int(const SearchLimits&)> action;

    // ---- gen ----
    CLI::App* gen = app.add_subcommand("gen", "generate a digraph as an edge list");
    gen->require_subcommand(1);
    std::string gen_out;
    gen->add_option("--out", gen_out, "output file (default stdout)")->capture_default_str();

    {
        CLI::App* c = gen->add_subcommand("cycle", "oriented cycle from a turn word");
        auto word = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        c->add_option("--word", *word, "orientation word over cw/ccw, e.g. cwcwccw");
        c->add_option("--k", *k, "length for the uniformly oriented (sink-free) cycle");
        c->callback([&, word, k]() {
            action = [&, word, k](const SearchLimits&) {
                CyclePattern p = word->empty() ? uniform_cycle(*k) : parse_cycle_word(*word);
                write_text(gen_out, serialize_edgelist(gen_cycle(p)));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand("path", "oriented path from a step word");
        auto word = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        c->add_option("--word", *word, "orientation word over fwd/bwd (empty for one vertex)");
        c->add_option("--n", *n, "vertex count for the all-forward path");
        c->callback([&, word, n]() {
            action = [&, word, n](const SearchLimits&) {
                PathPattern p;
                if (*n > 0) {
                    for (int i = 1; i < *n; ++i) p.word.push_back(Step::fwd);
                } else {
                    p = parse_path_word(*word);
                }
                write_text(gen_out, serialize_edgelist(gen_path(p)));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand("star", "oriented star, center labeled 0");
        auto t = std::make_shared<int>(1);
        auto mode = std::make_shared<std::string>("center-source");
        auto t1 = std::make_shared<int>(0);
        c->add_option("--t", *t, "leaf count")->required();
        c->add_option("--mode", *mode, "center-source | center-sink | mixed");
        c->add_option("--t1", *t1, "mixed mode: leaves 1..t1 point at the center");
        c->callback([&, t, mode, t1]() {
            action = [&, t, mode, t1](const SearchLimits&) {
                StarOrientation o{parse_star_mode(*mode), *t, *t1};
                write_text(gen_out, serialize_edgelist(gen_star(o)));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand(
            "d1", "first-family member from a seed digraph and two partitions");
        auto in = std::make_shared<std::string>("-");
        auto pi1 = std::make_shared<std::string>();
        auto pi2 = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--in", *in, "seed digraph edge list ('-' = stdin)");
        c->add_option("--pi1", *pi1, "first partition, blocks '|'-separated: 0|1,2")->required();
        c->add_option("--pi2", *pi2, "second partition")->required();
        c->add_option("--b", *b, "extra arcs tail:head,... from seed vertices to new labels");
        c->callback([&, in, pi1, pi2, b]() {
            action = [&, in, pi1, pi2, b](const SearchLimits&) {
                ConstructedMember m = construct_d1(read_digraph(*in), parse_partition(*pi1),
                                                   parse_partition(*pi2), parse_arc_list(*b));
                write_text(gen_out, serialize_edgelist(m.graph));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand(
            "d2", "second-family member from block sizes and dominator maps");
        auto sizes = std::make_shared<std::string>();
        auto d1m = std::make_shared<std::string>();
        auto d2m = std::make_shared<std::string>();
        auto d3m = std::make_shared<std::string>();
        c->add_option("--sizes", *sizes, "three block sizes: n1,n2,n3")->required();
        c->add_option("--dom1", *d1m, "dominator in block 1 of each block-2 vertex")->required();
        c->add_option("--dom2", *d2m, "dominator in block 2 of each block-3 vertex")->required();
        c->add_option("--dom3", *d3m, "dominator in block 3 of each block-1 vertex")->required();
        c->callback([&, sizes, d1m, d2m, d3m]() {
            action = [&, sizes, d1m, d2m, d3m](const SearchLimits&) {
                std::vector<int> s = parse_int_list(*sizes);
                if (s.size() != 3)
                    throw std::invalid_argument("--sizes needs exactly three values");
                ConstructedMember m =
                    construct_d2(s[0], s[1], s[2], parse_int_list(*d1m), parse_int_list(*d2m),
                                 parse_int_list(*d3m));
                write_text(gen_out, serialize_edgelist(m.graph));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand(
            "dpr", "two-stage star-factor construction over a seed digraph");
        auto in = std::make_shared<std::string>("-");
        auto w = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto z = std::make_shared<std::string>();
        auto bp = std::make_shared<std::string>();
        c->add_option("--in", *in, "seed digraph edge list ('-' = stdin)");
        c->add_option("--w", *w, "stage-1 partition of the seed vertices")->required();
        c->add_option("--b", *b, "stage-1 extra arcs tail:head,...");
        c->add_option("--z", *z, "stage-2 partition of the stage-1 vertex set")->required();
        c->add_option("--bp", *bp, "stage-2 extra arcs from seed vertices to new labels");
        c->callback([&, in, w, b, z, bp]() {
            action = [&, in, w, b, z, bp](const SearchLimits&) {
                ConstructedMember m =
                    construct_dpr(read_digraph(*in), parse_partition(*w), parse_arc_list(*b),
                                  parse_partition(*z), parse_arc_list(*bp));
                write_text(gen_out, serialize_edgelist(m.graph));
                return 0;
            };
        });
    }
    {
        CLI::App* c = gen->add_subcommand(
            "orient", "orient a symmetric digraph around an independent dominating set");
        auto in = std::make_shared<std::string>("-");
        auto s = std::make_shared<std::string>();
        c->add_option("--in", *in, "symmetric digraph edge list ('-' = stdin)");
        c->add_option("--s", *s, "independent dominating set, e.g. 0,2,4")->required();
        c->callback([&, in, s]() {
            action = [&, in, s](const SearchLimits&) {
                Digraph g = read_digraph(*in);
                write_text(gen_out, serialize_edgelist(orient_from_independent_set(
                                        g, parse_vertex_set(*s, g.vertex_count()))));
                return 0;
            };
        });
    }

    // ---- product ----
    {
        CLI::App* c = app.add_subcommand("product", "product of two digraphs as an edge list");
        auto kind = std::make_shared<std::string>();
        auto d = std::make_shared<std::string>("-");
        auto f = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("--kind", *kind, "cartesian | direct | strong | lex")->required();
        c->add_option("--d", *d, "left factor edge list ('-' = stdin)");
        c->add_option("--f", *f, "right factor edge list")->required();
        c->add_option("--out", *out, "output file (default stdout)");
        c->callback([&, kind, d, f, out]() {
            action = [&, kind, d, f, out](const SearchLimits&) {
                Digraph left = read_digraph(*d);
                Digraph right = read_digraph(*f);
                write_text(*out,
                           serialize_edgelist(product(parse_product_kind(*kind), left, right)));
                return 0;
            };
        });
    }

    // ---- ecd ----
    CLI::App* ecd = app.add_subcommand("ecd", "efficient closed domination solver");
    ecd->require_subcommand(1);
    auto ecd_in = std::make_shared<std::string>("-");
    ecd->add_option("--in", *ecd_in, "digraph edge list ('-' = stdin)");
    {
        CLI::App* c = ecd->add_subcommand("find", "first set in deterministic search order");
        c->callback([&]() {
            action = [&](const SearchLimits& limits) {
                std::optional<EcdCertificate> cert = find_ecd_set(read_digraph(*ecd_in), limits);
                if (!cert) {
                    std::cerr << "no efficient closed dominating set\n";
                    return 1;
                }
                std::cout << cert->to_json() << "\n";
                return 0;
            };
        });
    }
    {
        CLI::App* c = ecd->add_subcommand("enumerate", "all sets, lexicographically sorted");
        c->callback([&]() {
            action = [&](const SearchLimits& limits) {
                Digraph d = read_digraph(*ecd_in);
                std::vector<VertexSet> sets = enumerate_ecd_sets(d, limits);
                std::cout << "[";
                for (size_t i = 0; i < sets.size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << certify_ecd_set(d, sets[i])->to_json();
                }
                std::cout << "]\n";
                return 0;
            };
        });
    }
    {
        CLI::App* c = ecd->add_subcommand("check", "verify a candidate set");
        auto s = std::make_shared<std::string>();
        c->add_option("--s", *s, "candidate set, e.g. 0,2,4")->required();
        c->callback([&, s]() {
            action = [&, s](const SearchLimits&) {
                Digraph d = read_digraph(*ecd_in);
                std::optional<EcdCertificate> cert =
                    certify_ecd_set(d, parse_vertex_set(*s, d.vertex_count()));
                if (!cert) {
                    std::cerr << "the set is not an efficient closed dominating set\n";
                    return 1;
                }
                std::cout << cert->to_json() << "\n";
                return 0;
            };
        });
    }
    {
        CLI::App* c = ecd->add_subcommand(
            "eca", "efficient closed absorption (in-neighborhood analogue)");
        c->callback([&]() {
            action = [&](const SearchLimits& limits) {
                std::optional<EcdCertificate> cert = find_eca_set(read_digraph(*ecd_in), limits);
                if (!cert) {
                    std::cerr << "no efficient closed absorbing set\n";
                    return 1;
                }
                std::cout << cert->to_json() << "\n";
                return 0;
            };
        });
    }

    // ---- gamma ----
    {
        CLI::App* c = app.add_subcommand("gamma", "domination number and absorbing counterpart");
        auto in = std::make_shared<std::string>("-");
        c->add_option("--in", *in, "digraph edge list ('-' = stdin)");
        c->callback([&, in]() {
            action = [&, in](const SearchLimits& limits) {
                DominationNumbers g = domination_number(read_digraph(*in), limits);
                std::cout << "{\"gamma\": " << g.gamma << ", \"gamma_a\": " << g.gamma_a << "}\n";
                return 0;
            };
        });
    }

    // ---- family ----
    {
        CLI::App* c = app.add_subcommand("family", "recognize factor-family membership");
        auto name = std::make_shared<std::string>();
        auto in = std::make_shared<std::string>("-");
        c->add_option("--family", *name, "d1 | d2 | d3 | d0")->required();
        c->add_option("--in", *in, "digraph edge list ('-' = stdin)");
        c->callback([&, name, in]() {
            action = [&, name, in](const SearchLimits& limits) {
                std::optional<FamilyWitness> w =
                    recognize(parse_family(*name), read_digraph(*in), limits);
                if (!w) {
                    std::cerr << "not a member of family " << *name << "\n";
                    return 1;
                }
                std::cout << w->to_json() << "\n";
                return 0;
            };
        });
    }

    // ---- decide ----
    CLI::App* decide = app.add_subcommand("decide", "theorem deciders for product families");
    decide->require_subcommand(1);
    {
        CLI::App* c = decide->add_subcommand("strong", "strong product of two digraphs");
        auto d = std::make_shared<std::string>("-");
        auto f = std::make_shared<std::string>();
        c->add_option("--d", *d, "left factor edge list ('-' = stdin)");
        c->add_option("--f", *f, "right factor edge list")->required();
        c->callback([&, d, f]() {
            action = [&, d, f](const SearchLimits& limits) {
                Digraph left = read_digraph(*d);
                Digraph right = read_digraph(*f);
                return emit_decision(decide_strong(left, right, limits), "strong",
                                     {left.vertex_count(), right.vertex_count()});
            };
        });
    }
    {
        CLI::App* c = decide->add_subcommand("lex", "lexicographic product of two digraphs");
        auto d = std::make_shared<std::string>("-");
        auto f = std::make_shared<std::string>();
        c->add_option("--d", *d, "left factor edge list ('-' = stdin)");
        c->add_option("--f", *f, "right factor edge list")->required();
        c->callback([&, d, f]() {
            action = [&, d, f](const SearchLimits& limits) {
                Digraph left = read_digraph(*d);
                Digraph right = read_digraph(*f);
                return emit_decision(decide_lex(left, right, limits), "lexicographic",
                                     {left.vertex_count(), right.vertex_count()});
            };
        });
    }
    {
        CLI::App* c = decide->add_subcommand(
            "cartesian-cycle", "cartesian product with a sink-free cycle");
        auto in = std::make_shared<std::string>("-");
        auto k = std::make_shared<int>(0);
        c->add_option("--in", *in, "left factor edge list ('-' = stdin)");
        c->add_option("--k", *k, "cycle length")->required();
        c->callback([&, in, k]() {
            action = [&, in, k](const SearchLimits& limits) {
                Digraph d = read_digraph(*in);
                return emit_decision(decide_cartesian_cycle(d, uniform_cycle(*k), limits),
                                     "cartesian", {d.vertex_count(), *k});
            };
        });
    }
    {
        CLI::App* c = decide->add_subcommand(
            "cartesian-star", "cartesian product with an oriented star");
        auto in = std::make_shared<std::string>("-");
        auto t = std::make_shared<int>(1);
        auto mode = std::make_shared<std::string>("center-source");
        auto t1 = std::make_shared<int>(0);
        c->add_option("--in", *in, "digraph factor edge list ('-' = stdin)");
        c->add_option("--t", *t, "leaf count")->required();
        c->add_option("--mode", *mode, "center-source | center-sink | mixed");
        c->add_option("--t1", *t1, "mixed mode: leaves 1..t1 point at the center");
        c->callback([&, in, t, mode, t1]() {
            action = [&, in, t, mode, t1](const SearchLimits& limits) {
                Digraph f = read_digraph(*in);
                StarOrientation o{parse_star_mode(*mode), *t, *t1};
                return emit_decision(decide_cartesian_star(f, o, limits), "cartesian",
                                     {f.vertex_count(), *t + 1});
            };
        });
    }
    {
        CLI::App* c = decide->add_subcommand(
            "direct-cycles", "direct product of oriented cycles");
        auto words = std::make_shared<std::vector<std::string>>();
        c->add_option("--word", *words, "orientation word (repeat per factor)")->required();
        c->callback([&, words]() {
            action = [&, words](const SearchLimits& limits) {
                std::vector<CyclePattern> ps;
                std::vector<int> counts;
                for (const std::string& w : *words) {
                    ps.push_back(parse_cycle_word(w));
                    counts.push_back(ps.back().k());
                }
                return emit_decision(decide_direct_cycles(ps, limits), "direct", counts);
            };
        });
    }
    {
        CLI::App* c = decide->add_subcommand("direct-paths", "direct product of oriented paths");
        auto words = std::make_shared<std::vector<std::string>>();
        c->add_option("--word", *words, "orientation word, 'p1' for a single vertex (repeat per factor)")
            ->required();
        c->callback([&, words]() {
            action = [&, words](const SearchLimits&) {
                std::vector<PathPattern> ps;
                std::vector<int> counts;
                for (const std::string& w : *words) {
                    ps.push_back(w == "p1" ? PathPattern{} : parse_path_word(w));
                    counts.push_back(ps.back().k());
                }
                return emit_decision(decide_direct_paths(ps), "direct", counts);
            };
        });
    }

    // ---- validate ----
    {
        CLI::App* c = app.add_subcommand(
            "validate", "cross-validate a theorem suite against the exact-cover oracle");
        auto suite = std::make_shared<std::string>();
        auto spec = std::make_shared<CorpusSpec>();
        auto out = std::make_shared<std::string>();
        auto ts = std::make_shared<std::string>();
        c->add_option("--suite", *suite,
                      "strong | lex | cartesian-cycle | cartesian-star | direct-cycles | "
                      "direct-paths | orientation | mixed-star | structure")
            ->required();
        c->add_option("--max-n", spec->max_n, "factor vertex bound (0 = suite default)");
        c->add_option("--k-min", spec->k_min, "smallest cycle length (0 = suite default)");
        c->add_option("--k-max", spec->k_max, "largest cycle length (0 = suite default)");
        c->add_option("--ts", *ts, "star leaf counts, e.g. 1,2,3");
        c->add_option("--samples", spec->samples, "random-sample count (0 = suite default)");
        c->add_option("--seed", spec->seed, "corpus seed");
        c->add_option("--workers", spec->workers, "worker threads");
        c->add_flag("--timing", spec->timing, "fill the wall-time column");
        c->add_option("--out", *out, "write the TSV report here (default stdout)");
        c->callback([&, suite, spec, out, ts]() {
            action = [&, suite, spec, out, ts](const SearchLimits& limits) {
                spec->suite = parse_suite(*suite);
                spec->limits = limits;
                if (!ts->empty()) spec->ts = parse_int_list(*ts);
                ValidationReport report = cross_validate(*spec);
                std::string text = "# ecdlab validate suite=" + std::string(suite_name(spec->suite)) +
                                   " max_n=" + std::to_string(spec->max_n) +
                                   " k_min=" + std::to_string(spec->k_min) +
                                   " k_max=" + std::to_string(spec->k_max) +
                                   " samples=" + std::to_string(spec->samples) +
                                   " seed=" + std::to_string(spec->seed) + "\n" +
                                   report.to_tsv();
                write_text(*out, text);
                std::cerr << report.summary() << "\n";
                return report.mismatches() == 0 && report.cert_failures() == 0 ? 0 : 1;
            };
        });
    }

    // Let options owned by a parent command (gen --out, ecd --in, the global
    // bounds) be written after the subcommand name as well.
    std::function<void(CLI::App*)> allow_trailing_parent_options = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            allow_trailing_parent_options(sub);
        }
    };
    allow_trailing_parent_options(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    SearchLimits limits = SearchLimits::from_env();
    if (opt_enum > 0) limits.enum_bound = opt_enum;
    if (opt_search > 0) limits.search_bound = opt_search;
    if (opt_family > 0) limits.family_bound = opt_family;
    return action ? action(limits) : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ecdlab::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
