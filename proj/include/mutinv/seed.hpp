#pragma once

#include <optional>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "mutinv/exmat.hpp"
#include "mutinv/laurent.hpp"
#include "mutinv/systems.hpp"

namespace mutinv {

// ---------------------------------------------------------------------------
// A seed: exchange matrix plus one cluster variable per index, every variable
// expressed as a Laurent polynomial in the initial cluster. Frozen indices
// keep their initial variables untouched. The history records the mutation
// word that produced the seed from the initial one.
class Seed {
  public:
    static Seed initial(ExchangeMatrix m) {
        std::vector<LaurentPoly> vars;
        vars.reserve(static_cast<size_t>(m.size()));
        for (int i = 0; i < m.size(); ++i) vars.push_back(LaurentPoly::variable(m.size(), i));
        return Seed(std::move(m), std::move(vars), {});
    }

    const ExchangeMatrix& matrix() const { return matrix_; }
    const std::vector<LaurentPoly>& vars() const { return vars_; }
    const std::vector<int>& history() const { return history_; }
    int size() const { return matrix_.size(); }

    friend Seed mutate_seed(const Seed& s, int k);

  private:
    Seed(ExchangeMatrix m, std::vector<LaurentPoly> vars, std::vector<int> history)
        : matrix_(std::move(m)), vars_(std::move(vars)), history_(std::move(history)) {}

    ExchangeMatrix matrix_;
    std::vector<LaurentPoly> vars_;
    std::vector<int> history_;
};

// The binomial prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik} in
// the seed's current variables; empty products are 1.
inline LaurentPoly exchange_binomial(const Seed& s, int k) {
    check_mutable_index(s.matrix(), k);
    int n = s.size();
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        const Int& bik = s.matrix().at(i, k);
        if (bik > 0) pos = pos * s.vars()[static_cast<size_t>(i)].pow(bik.convert_to<unsigned>());
        if (bik < 0) neg = neg * s.vars()[static_cast<size_t>(i)].pow((-bik).convert_to<unsigned>());
    }
    return pos + neg;
}

// Seed mutation via the exchange relation x_k * x_k' = exchange binomial.
// The quotient is computed by exact division; the Laurent phenomenon
// guarantees it exists, so a failure signals a bug and throws.
inline Seed mutate_seed(const Seed& s, int k) {
    LaurentPoly binom = exchange_binomial(s, k);
    auto quotient = exact_div(binom, s.vars()[static_cast<size_t>(k)]);
    if (!quotient)
        throw laurent_violation("mutate_seed: exchange quotient is not a Laurent polynomial");
    std::vector<LaurentPoly> vars = s.vars();
    vars[static_cast<size_t>(k)] = std::move(*quotient);
    std::vector<int> history = s.history();
    history.push_back(k);
    return Seed(mutate_matrix(s.matrix(), k), std::move(vars), std::move(history));
}

inline Seed apply_word(const Seed& s, std::span<const int> word) {
    Seed cur = s;
    for (int k : word) cur = mutate_seed(cur, k);
    return cur;
}

// ---------------------------------------------------------------------------
// BFS over seeds, deduplicating by unordered cluster (the sorted vector of
// variables, compared exactly). complete is true iff the closure fits within
// max_seeds clusters.
struct ExchangeGraph {
    std::vector<std::vector<LaurentPoly>> clusters;  // each sorted; list sorted
    std::vector<LaurentPoly> variables;              // distinct, sorted
    bool complete = true;
};

inline ExchangeGraph enumerate_exchange_graph(const Seed& start, size_t max_seeds) {
    if (max_seeds == 0) throw param_error("enumerate_exchange_graph: max_seeds must be positive");
    auto cluster_key = [](const Seed& s) {
        std::vector<LaurentPoly> key = s.vars();
        std::sort(key.begin(), key.end());
        return key;
    };

    std::set<std::vector<LaurentPoly>> clusters;
    std::set<LaurentPoly> variables;
    std::queue<Seed> work;
    ExchangeGraph out;

    clusters.insert(cluster_key(start));
    for (const auto& v : start.vars()) variables.insert(v);
    work.push(start);

    while (!work.empty() && out.complete) {
        Seed cur = std::move(work.front());
        work.pop();
        for (int k : cur.matrix().mutable_indices()) {
            Seed next = mutate_seed(cur, k);
            auto key = cluster_key(next);
            if (clusters.contains(key)) continue;
            if (clusters.size() == max_seeds) {
                out.complete = false;
                break;
            }
            clusters.insert(std::move(key));
            for (const auto& v : next.vars()) variables.insert(v);
            work.push(std::move(next));
        }
    }

    out.clusters.assign(clusters.begin(), clusters.end());
    out.variables.assign(variables.begin(), variables.end());
    return out;
}

// ---------------------------------------------------------------------------
// The invariant rational function of each system in the initial variables.
inline RationalFn build_invariant(System sys) {
    int n = system_arity(sys);
    auto x = [&](int i) { return LaurentPoly::variable(n, i); };
    switch (sys) {
        case System::markov: {
            LaurentPoly num = x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
            return RationalFn(std::move(num), x(0) * x(1) * x(2));
        }
        case System::variant: {
            LaurentPoly two = LaurentPoly::constant(n, 2);
            LaurentPoly num = x(0) * x(0) + x(1).pow(4) + x(2).pow(4) +
                              two * x(0) * x(1) * x(1) + two * x(0) * x(2) * x(2);
            return RationalFn(std::move(num), x(0) * x(1).pow(2) * x(2).pow(2));
        }
        case System::variant_tau: {
            LaurentPoly two = LaurentPoly::constant(n, 2);
            LaurentPoly num = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) + two * x(0) * x(1) +
                              two * x(0) * x(2);
            return RationalFn(std::move(num), x(0) * x(1) * x(2));
        }
        case System::rank4: {
            auto u = x;
            LaurentPoly num = u(0) * u(1) * u(4).pow(2) + u(0).pow(2) * u(3) * u(4) +
                              u(2) * u(3).pow(2) * u(4) + u(1).pow(2) * u(2) * u(4) +
                              u(0) * u(1) * u(3).pow(2) + u(1).pow(2) * u(3) * u(4) +
                              u(0) * u(1) * u(2).pow(2) + u(0).pow(2) * u(2) * u(4) +
                              u(2).pow(2) * u(3) * u(4);
            return RationalFn(std::move(num), u(0) * u(1) * u(2) * u(3));
        }
    }
    throw internal_error("build_invariant: bad system");
}

// The closed-form mutation maps as tuples of rational functions in the
// initial variables.
inline std::vector<std::vector<RationalFn>> mutation_map_images(System sys) {
    int n = system_arity(sys);
    std::vector<RationalFn> identity;
    for (int i = 0; i < n; ++i) identity.push_back(RationalFn::variable(n, i));
    std::vector<std::vector<RationalFn>> out;
    for (int k = 0; k < system_map_count(sys); ++k)
        out.push_back(apply_system_map(sys, k, identity));
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic verification that T is invariant under each mutation map:
// T o mu_i == T as a cross-multiplied polynomial identity.
struct InvarianceReport {
    System sys;
    std::vector<std::pair<int, bool>> results;  // (map index 0-based, pass)
    bool all_pass = true;
    std::string note;
};

inline InvarianceReport verify_invariance(System sys) {
    InvarianceReport report;
    report.sys = sys;
    RationalFn t = build_invariant(sys);
    auto maps = mutation_map_images(sys);
    for (int k = 0; k < static_cast<int>(maps.size()); ++k) {
        RationalFn composed = substitute(t, maps[static_cast<size_t>(k)]);
        bool pass = fraction_equal(composed, t);
        report.results.emplace_back(k, pass);
        report.all_pass = report.all_pass && pass;
    }
    if (sys == System::rank4) {
        report.note =
            "four composite maps are defined; invariance is checked for i in {1,2,3,4}";
    }
    return report;
}

// ---------------------------------------------------------------------------
// Per-variable audit of a seed against a grading vector: every variable is a
// stored Laurent polynomial by construction; the audit reports whether each
// one is v-homogeneous and of which degree.
struct AuditEntry {
    int index = 0;  // 0-based
    bool frozen = false;
    bool homogeneous = false;
    Int degree;  // meaningful when homogeneous
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_homogeneous = true;
};

inline AuditReport audit_seed(const Seed& s, std::span<const Int> grading) {
    AuditReport report;
    for (int i = 0; i < s.size(); ++i) {
        AuditEntry e;
        e.index = i;
        e.frozen = !s.matrix().is_mutable(i);
        auto deg = weighted_degree(s.vars()[static_cast<size_t>(i)], grading);
        e.homogeneous = deg.has_value();
        if (deg) e.degree = *deg;
        report.all_homogeneous = report.all_homogeneous && e.homogeneous;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace mutinv
