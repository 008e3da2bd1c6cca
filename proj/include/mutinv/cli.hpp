#pragma once

#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mutinv/dio.hpp"
#include "mutinv/exmat.hpp"
#include "mutinv/fixtures.hpp"
#include "mutinv/io.hpp"
#include "mutinv/seed.hpp"

namespace mutinv::cli {

// All numeric output is decimal strings; identical invocations produce
// byte-identical output. Exit codes: 0 success, 1 domain errors, 2 usage
// errors.

namespace detail {

inline Int parse_int_arg(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw parse_error("argument " + what + ": '" + text + "' is not an integer");
    }
}

inline std::vector<int> parse_word_arg(const std::string& text, const ExchangeMatrix& b) {
    std::vector<int> word;
    if (text.empty()) return word;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Int k = parse_int_arg(item, "--word");
        if (k < 1 || k > b.size()) throw parse_error("word index out of range: " + item);
        word.push_back(k.convert_to<int>() - 1);
    }
    return word;
}

inline std::string word_to_string(std::span<const int> word) {
    if (word.empty()) return "(empty)";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(word[i] + 1);
    }
    return out;
}

inline void print_invariance(std::ostream& out, const InvarianceReport& report) {
    for (auto [k, pass] : report.results)
        out << "mu_" << (k + 1) << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!report.note.empty()) out << "note: " << report.note << "\n";
    out << (report.all_pass ? "invariance verified" : "INVARIANCE VIOLATION") << "\n";
}

inline void print_audit(std::ostream& out, const Seed& seed, const AuditReport& report) {
    out << "history " << word_to_string(seed.history()) << "\n";
    for (const auto& e : report.entries) {
        out << "x" << (e.index + 1) << (e.frozen ? " (frozen)" : "") << ": ";
        if (e.homogeneous)
            out << "degree " << e.degree;
        else
            out << "NOT HOMOGENEOUS";
        out << " : " << to_string(seed.vars()[static_cast<size_t>(e.index)]) << "\n";
    }
}

inline void print_search_report(std::ostream& out, const SearchReport& r) {
    out << "bound " << to_string(r.bound) << "\n";
    out << "note: " << r.note << "\n";
    out << "oracle solutions (e=1, entries <= bound): " << r.oracle_set.size() << "\n";
    out << "reachable (closure total " << r.reachable_total << ", e=1 slice "
        << r.reachable_set.size() << ")\n";
    out << "unreachable exact tuples: " << r.unreachable_set.size() << "\n";
    for (const auto& v : r.unreachable_set) out << "  " << tuple_to_string(v) << "\n";
    out << "multiset view: oracle " << r.oracle_multisets.size() << ", reachable "
        << r.reachable_multisets.size() << ", unreachable " << r.unreachable_multisets.size()
        << "\n";
    for (const auto& v : r.unreachable_multisets) out << "  {" << tuple_to_string(v) << "}\n";
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact cluster mutation, mutation invariants and Vieta-jumping solvers",
                 "mutinv"};
    app.require_subcommand(1);

    // ---- mutate -----------------------------------------------------------
    auto* cmd_mutate = app.add_subcommand("mutate", "mutate an exchange matrix at index k");
    std::string mutate_source, mutate_format = "human";
    int mutate_k = 0;
    cmd_mutate->add_option("--source", mutate_source, "named fixture or matrix file")->required();
    cmd_mutate->add_option("--k", mutate_k, "1-based mutation index")->required();
    cmd_mutate->add_option("--format", mutate_format)
        ->check(CLI::IsMember({"human", "json"}));

    // ---- class ------------------------------------------------------------
    auto* cmd_class = app.add_subcommand("class", "mutation class of an exchange matrix");
    std::string class_source;
    size_t class_limit = 64;
    cmd_class->add_option("--source", class_source)->required();
    cmd_class->add_option("--limit", class_limit, "isomorphism-class cap");

    // ---- grading ----------------------------------------------------------
    auto* cmd_grading = app.add_subcommand("grading", "integer basis of v with v^T B = 0");
    std::string grading_source;
    cmd_grading->add_option("--source", grading_source)->required();

    // ---- invariant --------------------------------------------------------
    auto* cmd_invariant =
        app.add_subcommand("invariant", "print the invariant T, optionally evaluated");
    std::string invariant_system, invariant_eval;
    cmd_invariant->add_option("--system", invariant_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant", "variant-tau", "rank4"}));
    cmd_invariant->add_option("--eval", invariant_eval, "tuple a,b,c[,d,e]");

    // ---- verify-invariance -------------------------------------------------
    auto* cmd_verify =
        app.add_subcommand("verify-invariance", "symbolic check that T is mutation invariant");
    std::string verify_system;
    cmd_verify->add_option("--system", verify_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant", "rank4"}));

    // ---- audit ------------------------------------------------------------
    auto* cmd_audit =
        app.add_subcommand("audit", "Laurent and homogeneity audit of mutated seeds");
    std::string audit_system, audit_word;
    int audit_random = 0, audit_maxlen = 8;
    unsigned audit_rng_seed = 20240915u;
    std::string audit_format = "human";
    cmd_audit->add_option("--system", audit_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant", "rank4", "a3-hexagon"}));
    auto* audit_word_opt = cmd_audit->add_option("--word", audit_word, "mutation word k1,k2,...");
    auto* audit_rand_opt =
        cmd_audit->add_option("--random-words", audit_random, "number of random words");
    cmd_audit->add_option("--max-len", audit_maxlen, "maximum random word length");
    cmd_audit->add_option("--seed", audit_rng_seed, "random generator seed");
    cmd_audit->add_option("--format", audit_format)->check(CLI::IsMember({"human", "json"}));
    audit_word_opt->excludes(audit_rand_opt);

    // ---- descend ----------------------------------------------------------
    auto* cmd_descend = app.add_subcommand("descend", "descent certificate word for a solution");
    std::string descend_system, descend_tuple;
    cmd_descend->add_option("--system", descend_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant"}));
    cmd_descend->add_option("--tuple", descend_tuple, "solution a,b,c")->required();

    // ---- tree -------------------------------------------------------------
    auto* cmd_tree = app.add_subcommand("tree", "BFS solution tree from the fundamental solution");
    std::string tree_system, tree_bound, tree_format = "human";
    int tree_depth = 0;
    cmd_tree->add_option("--system", tree_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant", "variant-tau", "rank4"}));
    cmd_tree->add_option("--depth", tree_depth)->required();
    cmd_tree->add_option("--bound", tree_bound, "prune tuples with an entry beyond this");
    cmd_tree->add_option("--format", tree_format)
        ->check(CLI::IsMember({"human", "json", "dot"}));

    // ---- oracle -----------------------------------------------------------
    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive solutions with entries <= bound");
    std::string oracle_system, oracle_bound, oracle_format = "human";
    cmd_oracle->add_option("--system", oracle_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant", "rank4"}));
    cmd_oracle->add_option("--bound", oracle_bound)->required();
    cmd_oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"human", "json"}));

    // ---- uniqueness -------------------------------------------------------
    auto* cmd_uniq = app.add_subcommand(
        "uniqueness", "scan sorted solutions for repeated maxima (uniqueness conjecture)");
    std::string uniq_system, uniq_bound;
    cmd_uniq->add_option("--system", uniq_system)
        ->required()
        ->check(CLI::IsMember({"markov", "variant"}));
    cmd_uniq->add_option("--bound", uniq_bound)->required();

    // ---- reach ------------------------------------------------------------
    auto* cmd_reach =
        app.add_subcommand("reach", "rank-4 reachability: mutation orbit vs oracle");
    std::string reach_bound, reach_format = "human";
    bool reach_group = false;
    cmd_reach->add_option("--bound", reach_bound)->required();
    cmd_reach->add_flag("--use-group", reach_group,
                        "use the twist/Vieta generator group with primitive rescaling");
    cmd_reach->add_option("--format", reach_format)->check(CLI::IsMember({"human", "json"}));

    // ---- relations --------------------------------------------------------
    auto* cmd_relations =
        app.add_subcommand("relations", "verify the twist/Vieta generator relations");
    int relations_trials = 100;
    cmd_relations->add_option("--trials", relations_trials, "random rational sample points");

    // ---- exchange-graph ---------------------------------------------------
    auto* cmd_graph = app.add_subcommand("exchange-graph",
                                         "enumerate clusters by BFS over symbolic seeds");
    std::string graph_source;
    size_t graph_max = 1000;
    cmd_graph->add_option("--source", graph_source)->required();
    cmd_graph->add_option("--max", graph_max, "cluster cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_mutate) {
            ExchangeMatrix b = parse_matrix_source(mutate_source);
            ExchangeMatrix m = mutate_matrix(b, mutate_k - 1);
            if (mutate_format == "json")
                out << matrix_to_json(m).dump(2) << "\n";
            else
                out << matrix_to_text(m);
        } else if (*cmd_class) {
            ExchangeMatrix b = parse_matrix_source(class_source);
            MutationClass mc = mutation_class(b, class_limit);
            out << "raw class size " << mc.raw_class.size() << "\n";
            out << "isomorphism classes " << mc.iso_classes.size() << "\n";
            out << "finite " << (mc.finite ? "yes" : "no (truncated at limit)") << "\n";
            for (size_t i = 0; i < mc.iso_classes.size(); ++i)
                out << "representative " << (i + 1) << ":\n"
                    << matrix_to_text(mc.iso_classes[i]);
        } else if (*cmd_grading) {
            ExchangeMatrix b = parse_matrix_source(grading_source);
            auto basis = grading_vectors(b);
            out << "basis size " << basis.size() << "\n";
            for (const auto& v : basis) out << tuple_to_string(v) << "\n";
        } else if (*cmd_invariant) {
            System sys = parse_system(invariant_system);
            if (invariant_eval.empty()) {
                out << "T = " << to_string(build_invariant(sys)) << "\n";
            } else {
                SolutionTuple t(sys, parse_tuple_values(invariant_eval));
                out << "T" << tuple_to_string(t) << " = " << to_string(eval_invariant(t)) << "\n";
            }
        } else if (*cmd_verify) {
            detail::print_invariance(out, verify_invariance(parse_system(verify_system)));
        } else if (*cmd_audit) {
            ExchangeMatrix b = fixture_matrix(audit_system);
            auto basis = grading_vectors(b);
            if (basis.empty()) throw validation_error("audit: matrix admits no grading vector");
            const std::vector<Int>& v = basis.front();
            Seed initial = Seed::initial(b);
            if (*audit_rand_opt) {
                std::mt19937 rng(audit_rng_seed);
                std::vector<int> mut = b.mutable_indices();
                std::uniform_int_distribution<size_t> pick(0, mut.size() - 1);
                std::uniform_int_distribution<int> len(0, audit_maxlen);
                size_t violations = 0;
                std::set<Int> degrees;
                bool all_homogeneous = true;
                for (int i = 0; i < audit_random; ++i) {
                    std::vector<int> word;
                    int l = len(rng);
                    for (int j = 0; j < l; ++j) word.push_back(mut[pick(rng)]);
                    try {
                        Seed s = apply_word(initial, word);
                        AuditReport r = audit_seed(s, v);
                        all_homogeneous = all_homogeneous && r.all_homogeneous;
                        for (const auto& e : r.entries)
                            if (e.homogeneous) degrees.insert(e.degree);
                    } catch (const laurent_violation&) {
                        ++violations;
                    }
                }
                out << "words " << audit_random << " (length <= " << audit_maxlen << ", seed "
                    << audit_rng_seed << ")\n";
                out << "laurent violations " << violations << "\n";
                out << "all homogeneous " << (all_homogeneous ? "yes" : "NO") << "\n";
                out << "degrees seen:";
                for (const Int& d : degrees) out << " " << d;
                out << "\n";
            } else {
                std::vector<int> word = detail::parse_word_arg(audit_word, b);
                Seed s = apply_word(initial, word);
                AuditReport r = audit_seed(s, v);
                if (audit_format == "json") {
                    json doc = seed_to_json(s);
                    json degrees = json::array();
                    for (const auto& e : r.entries)
                        degrees.push_back(e.homogeneous ? json(to_string(e.degree)) : json(nullptr));
                    doc["degrees"] = std::move(degrees);
                    doc["grading"] = tuple_to_string(v);
                    out << doc.dump(2) << "\n";
                } else {
                    out << "grading " << tuple_to_string(v) << "\n";
                    detail::print_audit(out, s, r);
                }
            }
        } else if (*cmd_descend) {
            System sys = parse_system(descend_system);
            SolutionTuple t(sys, parse_tuple_values(descend_tuple));
            std::vector<int> word = descend(t);
            SolutionTuple replay = apply_numeric_word(fundamental_solution(sys), word);
            if (!(replay == t)) throw internal_error("descend: replay mismatch");
            out << "word " << detail::word_to_string(word) << "\n";
            out << "replay " << tuple_to_string(replay) << " ok\n";
        } else if (*cmd_tree) {
            System sys = parse_system(tree_system);
            std::optional<Int> bound;
            if (!tree_bound.empty()) bound = detail::parse_int_arg(tree_bound, "--bound");
            SolutionTree tree =
                enumerate_solutions(sys, fundamental_solution(sys), tree_depth, bound);
            if (tree_format == "json")
                out << tree_to_json(tree).dump(2) << "\n";
            else if (tree_format == "dot")
                out << tree_to_dot(tree);
            else
                out << tree_to_text(tree);
        } else if (*cmd_oracle) {
            System sys = parse_system(oracle_system);
            Int bound = detail::parse_int_arg(oracle_bound, "--bound");
            auto sols = oracle_solutions(sys, bound);
            if (oracle_format == "json") {
                json arr = json::array();
                for (const auto& t : sols) arr.push_back(tuple_to_string(t));
                json doc;
                doc["system"] = system_name(sys);
                doc["bound"] = to_string(bound);
                doc["count"] = sols.size();
                doc["solutions"] = std::move(arr);
                out << doc.dump(2) << "\n";
            } else {
                out << "solutions " << sols.size() << "\n";
                for (const auto& t : sols) out << tuple_to_string(t) << "\n";
            }
        } else if (*cmd_uniq) {
            System sys = parse_system(uniq_system);
            Int bound = detail::parse_int_arg(uniq_bound, "--bound");
            UniquenessReport r = uniqueness_scan(sys, bound);
            out << "sorted solutions with max entry <= " << to_string(bound) << ": "
                << r.sorted_solution_count << (r.oracle_included ? " (closure + oracle)" : " (closure)")
                << "\n";
            if (r.collisions.empty()) {
                out << "no collisions\n";
            } else {
                for (const auto& g : r.collisions) {
                    out << "collision max=" << to_string(g.max) << ":";
                    for (const auto& [b2, c2] : g.pairs)
                        out << " (" << to_string(b2) << "," << to_string(c2) << ")";
                    out << "\n";
                }
            }
        } else if (*cmd_reach) {
            Int bound = detail::parse_int_arg(reach_bound, "--bound");
            SearchReport r = reach_group ? g_orbit_reachability(bound) : rank4_reachability(bound);
            if (reach_format == "json")
                out << search_report_to_json(r).dump(2) << "\n";
            else
                detail::print_search_report(out, r);
        } else if (*cmd_relations) {
            RelationReport r = verify_group_relations(relations_trials);
            for (const auto& c : r.checks)
                out << c.name << ": symbolic " << (c.symbolic_pass ? "PASS" : "FAIL")
                    << ", numeric " << (c.numeric_pass ? "PASS" : "FAIL") << "\n";
            out << "trials " << r.trials << "\n";
            out << (r.all_pass ? "all relations hold" : "RELATION VIOLATION") << "\n";
        } else if (*cmd_graph) {
            ExchangeMatrix b = parse_matrix_source(graph_source);
            ExchangeGraph g = enumerate_exchange_graph(Seed::initial(b), graph_max);
            out << "clusters " << g.clusters.size() << "\n";
            out << "cluster variables " << g.variables.size() << "\n";
            out << "complete " << (g.complete ? "yes" : "no (truncated)") << "\n";
            if (g.variables.size() <= 20) {
                for (const auto& v : g.variables) out << to_string(v) << "\n";
            }
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace mutinv::cli
