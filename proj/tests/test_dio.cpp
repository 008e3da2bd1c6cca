#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mutinv/dio.hpp"

using namespace mutinv;

namespace {

SolutionTuple tup(System sys, std::vector<long> v) {
    return SolutionTuple(sys, std::vector<Int>(v.begin(), v.end()));
}

// independent brute-force oracle: plain nested loops over every tuple
std::set<std::vector<Int>> loop_oracle(System sys, long bound) {
    std::set<std::vector<Int>> out;
    if (sys == System::rank4) {
        for (long a = 1; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b)
                for (long c = 1; c <= bound; ++c)
                    for (long d = 1; d <= bound; ++d) {
                        SolutionTuple t = tup(sys, {a, b, c, d, 1});
                        if (is_solution(t)) out.insert(t.values);
                    }
    } else {
        for (long a = 1; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b)
                for (long c = 1; c <= bound; ++c) {
                    SolutionTuple t = tup(sys, {a, b, c});
                    if (is_solution(t)) out.insert(t.values);
                }
    }
    return out;
}

std::set<std::vector<Int>> as_set(const std::vector<SolutionTuple>& ts) {
    std::set<std::vector<Int>> out;
    for (const auto& t : ts) out.insert(t.values);
    return out;
}

}  // namespace

TEST_CASE("eval_invariant examples") {
    CHECK(eval_invariant(tup(System::markov, {1, 1, 1})) == 3);
    CHECK(eval_invariant(tup(System::variant, {1, 1, 1})) == 7);
    CHECK(eval_invariant(tup(System::variant_tau, {1, 1, 1})) == 7);
    CHECK(eval_invariant(tup(System::rank4, {1, 1, 1, 1, 1})) == 9);
    CHECK(eval_invariant(tup(System::markov, {1, 1, 3})) == Rat(11, 3));
}

TEST_CASE("numeric_mutate examples") {
    CHECK(numeric_mutate(tup(System::markov, {2, 1, 1}), 1).values ==
          std::vector<Int>{2, 5, 1});
    CHECK(numeric_mutate(tup(System::variant, {2, 3, 1}), 0).values ==
          std::vector<Int>{41, 3, 1});
    CHECK(numeric_mutate(tup(System::rank4, {2, 1, 1, 1, 1}), 2).values ==
          std::vector<Int>{1, 2, 1, 3, 1});

    CHECK_THROWS_AS(numeric_mutate(tup(System::markov, {1, 1, 3}), 2), non_integral_result);
    CHECK_THROWS_AS(numeric_mutate(tup(System::markov, {1, 1, 1}), 3), index_error);
}

TEST_CASE("tau_mutate examples") {
    CHECK(tau_mutate(tup(System::variant_tau, {1, 1, 1}), 1).values ==
          std::vector<Int>{1, 4, 1});
    CHECK(tau_mutate(tup(System::variant_tau, {41, 9, 1}), 0).values ==
          std::vector<Int>{2, 9, 1});
    CHECK(tau_mutate(tup(System::variant_tau, {2, 1, 1}), 0).values ==
          std::vector<Int>{1, 1, 1});
    CHECK_THROWS_AS(tau_mutate(tup(System::variant, {1, 1, 1}), 0), param_error);
}

TEST_CASE("mutation maps preserve the level set and invert correctly") {
    std::mt19937 rng(5);
    for (System sys : {System::markov, System::variant, System::variant_tau, System::rank4}) {
        SolutionTuple t = fundamental_solution(sys);
        std::uniform_int_distribution<int> pick(0, system_map_count(sys) - 1);
        for (int step = 0; step < 40; ++step) {
            int k = pick(rng);
            SolutionTuple next = numeric_mutate(t, k);
            CHECK(eval_invariant(next) == system_constant(sys));
            SolutionTuple back = numeric_mutate(next, inverse_map_index(sys, k));
            CHECK(back == t);
            if (next.max_entry() < 100000) t = next;
        }
    }
}

TEST_CASE("markov_descend examples") {
    CHECK(markov_descend(tup(System::markov, {1, 1, 1})).empty());
    CHECK(markov_descend(tup(System::markov, {13, 5, 1})) == std::vector<int>{0, 1, 0});

    std::vector<int> w = markov_descend(tup(System::markov, {2, 29, 5}));
    CHECK(w.size() == 3);
    CHECK(apply_numeric_word(fundamental_solution(System::markov), w) ==
          tup(System::markov, {2, 29, 5}));

    CHECK_THROWS_AS(markov_descend(tup(System::markov, {1, 2, 3})), not_a_solution);
}

TEST_CASE("variant_descend examples") {
    CHECK(variant_descend(tup(System::variant, {41, 3, 1})) == std::vector<int>{0, 1, 0});
    CHECK(variant_descend(tup(System::variant, {17, 2, 1})) == std::vector<int>{1, 0});
    CHECK(variant_descend(tup(System::variant, {41, 14, 1})) == std::vector<int>{0, 1, 0, 1});

    // every intermediate tau tuple lies in N x square^2
    std::vector<SolutionTuple> trace;
    variant_descend(tup(System::variant, {41, 14, 1}), &trace);
    CHECK(trace.size() == 5);
    for (const auto& t : trace) {
        CHECK(is_perfect_square(t.values[1]));
        CHECK(is_perfect_square(t.values[2]));
        CHECK(eval_invariant(t) == 7);
    }

    CHECK_THROWS_AS(variant_descend(tup(System::variant, {2, 2, 2})), not_a_solution);
}

TEST_CASE("tau/mu square bridge") {
    // tau_k(a, b^2, c^2) = (a', b'^2, c'^2) for mu_k(a,b,c) = (a',b',c')
    for (const auto& v : solution_closure(System::variant, 500)) {
        SolutionTuple t(System::variant, v);
        SolutionTuple tau(System::variant_tau, {v[0], v[1] * v[1], v[2] * v[2]});
        for (int k = 0; k < 3; ++k) {
            SolutionTuple mu_img = numeric_mutate(t, k);
            SolutionTuple tau_img = tau_mutate(tau, k);
            CHECK(tau_img.values[0] == mu_img.values[0]);
            CHECK(tau_img.values[1] == mu_img.values[1] * mu_img.values[1]);
            CHECK(tau_img.values[2] == mu_img.values[2] * mu_img.values[2]);
        }
    }
}

TEST_CASE("enumerate_solutions structure") {
    SolutionTree t1 = enumerate_solutions(System::markov, fundamental_solution(System::markov), 1);
    CHECK(t1.nodes.size() == 4);
    CHECK(t1.edges.size() == 3);

    SolutionTree t3 = enumerate_solutions(System::markov, fundamental_solution(System::markov), 3);
    CHECK(t3.nodes.size() == 22);
    CHECK(t3.edges.size() == 21);

    SolutionTree v3 =
        enumerate_solutions(System::variant, fundamental_solution(System::variant), 3);
    CHECK(v3.nodes.size() == 22);

    SolutionTree r2 = enumerate_solutions(System::rank4, fundamental_solution(System::rank4), 2);
    CHECK(r2.nodes.size() == 17);
    for (std::vector<long> v : {std::vector<long>{5, 2, 1, 1, 1}, {1, 2, 1, 3, 1},
                                {1, 1, 3, 2, 1}, {1, 3, 2, 1, 1}, {3, 1, 2, 1, 1},
                                {1, 2, 3, 1, 1}}) {
        SolutionTuple want = tup(System::rank4, v);
        CHECK(std::find(r2.nodes.begin(), r2.nodes.end(), want) != r2.nodes.end());
    }

    // every edge realizes numeric_mutate(parent, label) = child
    for (const SolutionTree* tree : {&t3, &v3, &r2}) {
        for (const auto& e : tree->edges)
            CHECK(numeric_mutate(tree->nodes[e.parent], e.label) == tree->nodes[e.child]);
    }

    // value bound prunes
    SolutionTree b = enumerate_solutions(System::markov, fundamental_solution(System::markov), 3,
                                         Int(5));
    for (const auto& n : b.nodes) CHECK(n.max_entry() <= 5);

    CHECK_THROWS_AS(
        enumerate_solutions(System::markov, tup(System::markov, {1, 2, 3}), 2),
        not_a_solution);
}

TEST_CASE("oracle_solutions examples and independent loop oracle") {
    auto markov = oracle_solutions(System::markov, 30);
    CHECK(markov.size() == 22);
    CHECK(as_set(markov) == loop_oracle(System::markov, 30));
    std::set<std::vector<Int>> sorted_triples;
    for (const auto& t : markov) {
        std::vector<Int> s = t.values;
        std::sort(s.begin(), s.end(), std::greater<Int>());
        sorted_triples.insert(s);
    }
    std::set<std::vector<Int>> expect{{1, 1, 1}, {2, 1, 1}, {5, 2, 1}, {13, 5, 1}, {29, 5, 2}};
    CHECK(sorted_triples == expect);

    auto variant = oracle_solutions(System::variant, 20);
    CHECK(variant.size() == 16);
    CHECK(as_set(variant) == loop_oracle(System::variant, 20));
    for (std::vector<long> v : {std::vector<long>{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {17, 2, 1},
                                {2, 3, 1}, {1, 2, 5}, {2, 11, 3}}) {
        CHECK(as_set(variant).contains(tup(System::variant, v).values));
    }

    auto rank4 = oracle_solutions(System::rank4, 7);
    CHECK(rank4.size() == 57);
    CHECK(as_set(rank4) == loop_oracle(System::rank4, 7));
    for (std::vector<long> v : {std::vector<long>{1, 1, 1, 1, 1}, {2, 1, 1, 1, 1},
                                {5, 2, 1, 1, 1}, {1, 5, 2, 7, 1}, {2, 1, 7, 5, 1}}) {
        CHECK(as_set(rank4).contains(tup(System::rank4, v).values));
    }
}

TEST_CASE("oracle equals closure at moderate bounds") {
    for (System sys : {System::markov, System::variant}) {
        auto closure = solution_closure(sys, 100);
        CHECK(closure == as_set(oracle_solutions(sys, 100)));
    }
}

TEST_CASE("descent certificates for all oracle solutions up to 200") {
    for (System sys : {System::markov, System::variant}) {
        for (const auto& t : oracle_solutions(sys, 200)) {
            std::vector<int> w = descend(t);
            CHECK(apply_numeric_word(fundamental_solution(sys), w) == t);
        }
    }
}

TEST_CASE("uniqueness_scan examples") {
    UniquenessReport v50 = uniqueness_scan(System::variant, 50);
    REQUIRE(v50.collisions.size() == 2);
    CHECK(v50.collisions[0].max == 17);
    CHECK(v50.collisions[0].pairs ==
          std::vector<std::pair<Int, Int>>{{2, 1}, {9, 1}});
    CHECK(v50.collisions[1].max == 41);
    CHECK(v50.collisions[1].pairs ==
          std::vector<std::pair<Int, Int>>{{3, 1}, {11, 2}, {14, 1}});

    CHECK(uniqueness_scan(System::markov, 1000).collisions.empty());
    CHECK(uniqueness_scan(System::markov, 1).collisions.empty());
    CHECK(uniqueness_scan(System::variant, 1).collisions.empty());
}

TEST_CASE("rank4_reachability examples") {
    SearchReport r1 = rank4_reachability(1);
    CHECK(r1.oracle_set == std::vector<std::vector<Int>>{{1, 1, 1, 1, 1}});
    CHECK(r1.reachable_set == r1.oracle_set);
    CHECK(r1.unreachable_set.empty());

    SearchReport r7 = rank4_reachability(7);
    CHECK(r7.oracle_set.size() == 57);
    CHECK(r7.reachable_set.size() == 41);
    CHECK(r7.unreachable_set.size() == 16);
    CHECK(r7.unreachable_multisets.size() == 1);

    // containment at every bound
    for (long bound : {1L, 5L, 10L, 20L}) {
        SearchReport r = rank4_reachability(bound);
        std::set<std::vector<Int>> oracle(r.oracle_set.begin(), r.oracle_set.end());
        for (const auto& v : r.reachable_set) CHECK(oracle.contains(v));
        CHECK(r.oracle_set.size() == r.reachable_set.size() + r.unreachable_set.size());
    }
}

TEST_CASE("generator examples") {
    std::vector<Rat> ones(5, Rat(1));
    auto v1 = apply_generator(Gen::v1, ones);
    CHECK(v1 == std::vector<Rat>{2, 1, 1, 1, 1});

    auto t1_twice = apply_generator(Gen::t1, apply_generator(Gen::t1, v1));
    CHECK(t1_twice == v1);

    std::vector<Rat> half{Rat(3, 2), 1, 1, 1, 1};
    CHECK(g_rescale(half) == std::vector<Int>{3, 2, 2, 2, 2});

    // t2 t1 mu3 = mu4 t1 t2 at (2,1,1,1,1)
    std::vector<Rat> p{2, 1, 1, 1, 1};
    auto lhs = apply_generator(Gen::t2, apply_generator(Gen::t1, apply_generator(Gen::mu3, p)));
    auto rhs = apply_generator(Gen::mu4, apply_generator(Gen::t1, apply_generator(Gen::t2, p)));
    CHECK(lhs == rhs);
    CHECK(lhs == std::vector<Rat>{2, 1, 3, 1, 1});
}

TEST_CASE("generators preserve T and T is degree-0 homogeneous") {
    std::mt19937 rng(1717);
    std::uniform_int_distribution<int> small(1, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rat> p;
        for (int i = 0; i < 5; ++i) p.emplace_back(small(rng), small(rng));
        Rat t = invariant_value(System::rank4, p);
        for (Gen g : {Gen::v1, Gen::v2, Gen::v3, Gen::v4, Gen::t1, Gen::t2, Gen::mu1, Gen::mu2,
                      Gen::mu3, Gen::mu4}) {
            CHECK(invariant_value(System::rank4, apply_generator(g, p)) == t);
        }
        Rat lambda(small(rng), small(rng));
        std::vector<Rat> scaled = p;
        for (auto& x : scaled) x *= lambda;
        CHECK(invariant_value(System::rank4, scaled) == t);
    }
}

TEST_CASE("verify_group_relations passes") {
    RelationReport r = verify_group_relations(5);
    CHECK(r.all_pass);
    CHECK(r.checks.size() == 9);
    for (const auto& c : r.checks) {
        CHECK(c.symbolic_pass);
        CHECK(c.numeric_pass);
    }
}

TEST_CASE("group orbit harness") {
    SearchReport r = g_orbit_reachability(5);
    CHECK(r.used_group);
    CHECK_FALSE(r.note.empty());
    // every orbit point with e = 1 is an oracle solution
    std::set<std::vector<Int>> oracle(r.oracle_set.begin(), r.oracle_set.end());
    for (const auto& v : r.reachable_set) CHECK(oracle.contains(v));
    // the plain mutation orbit is contained in the group orbit
    SearchReport mu = rank4_reachability(5);
    std::set<std::vector<Int>> group_reach(r.reachable_set.begin(), r.reachable_set.end());
    for (const auto& v : mu.reachable_set) CHECK(group_reach.contains(v));
}
