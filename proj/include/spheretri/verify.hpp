#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spheretri/census.hpp"
#include "spheretri/generate.hpp"

namespace spheretri {

/// Per-n aggregates attached to a VerificationReport. g_value and
/// minimizer_count are -1 where the claim has no extremal content.
struct PerNStats {
    int n = 0;
    std::int64_t catalog_size = 0;
    std::int64_t g_value = -1;
    std::int64_t minimizer_count = -1;
};

/// Outcome of one claim checker. pass is true exactly when counterexamples
/// is empty. When a cardinality claim fails because nothing matched, the
/// inspected candidate pool is attached as the evidence and `note` says so.
struct VerificationReport {
    std::string claim_id;
    int n_lo = 0;
    int n_hi = 0;
    bool pass = false;
    std::vector<CanonicalCode> counterexamples;
    std::vector<PerNStats> statistics;
    std::string note;
};

/// Minimum c4 over all n-vertex classes, with every minimizer's code.
/// Throws LimitExceeded if n is outside the catalog range.
ExtremalRecord min_c4(const Catalog& catalog, int n);

/// Checks min_c4(n) against the established minima
///   n: 4  5  6   7   8   9   10  11  12  13  14
///   g: 3  9  15  20  23  24  26  29  30  34  36
/// for every 4 <= n <= max_n (max_n at most 14).
VerificationReport verify_theorem1(const Catalog& catalog, int max_n);

/// which = 1: every class (n >= 4) with a vertex of degree n-1 has a vertex
///            of degree 3.
/// which = 2: every class (n >= 6) with a vertex v of degree n-2 whose
///            neighborhood cycle has a chord has a vertex of degree 3.
/// which = 3: in every class (n >= 7), distinct degree-4 vertices have
///            different neighborhoods as vertex sets.
VerificationReport verify_lemma(const Catalog& catalog, int which, int max_n);

/// Degree-profile identities over classes with min degree >= 4:
///   n = 9  (max degree <= 6): n6 = n4 - 3, and n4 >= 3
///   n = 10 (max degree <= 6): n6 = n4 - 2, and n4 >= 2
///   n = 11 (max degree <= 7): n6 + 2*n7 = n4 - 1, and n7 > 0 implies n4 >= 3
VerificationReport verify_degree_identities(const Catalog& catalog, int n);

/// The six structural claims, one report each (ids structural.a .. f):
///   (a) exactly one n=7 class has min degree 4
///   (b) exactly one n=8 class has min degree >= 4 and a degree-5 vertex
///       whose two outside-the-closed-neighborhood vertices are adjacent;
///       that class has c4 = 23
///   (c) no n=11 class has degree multiset {4 once, 5 ten times}
///   (d) the smallest n with a min-degree-5 class is 12
///   (e) for 5 <= n <= 14, a 5-connected class exists iff n is 12 or 14
///   (f) in every n=13 class, every separating triangle with a component of
///       >= 2 vertices on one side yields a separating 4-cycle through two
///       triangle vertices, a vertex of that component, and the third
///       triangle vertex
/// Claims whose n range lies beyond max_n are omitted from the result.
std::vector<VerificationReport> verify_structural_claims(const Catalog& catalog,
                                                         int max_n);

/// Cross-generator check: for every 4 <= n <= max_n the canonical-code set
/// of the catalog equals flip_closure(stacked_triangulation(n)).
VerificationReport verify_generation_oracle(const Catalog& catalog, int max_n,
                                            const GenLimits& limits = {});

/// Counting cross-check: count_4cycles == count_cycles_brute(.,4) on every
/// class with n <= exhaustive_max and on samples_per_n pseudo-random classes
/// (fixed seed, deterministic) for each larger n up to max_n.
VerificationReport verify_counting_oracle(const Catalog& catalog, int max_n,
                                          int exhaustive_max = 9,
                                          int samples_per_n = 1000,
                                          std::uint64_t seed = 0x5eed5eedu);

/// Recursion consistency for 7 <= n <= max_n: for every class G with a
/// degree-3 vertex v, c4(G) = c4(G - v) + (4-cycles through v), and hence
/// c4(G) >= g(n-1) + 6.
VerificationReport verify_deletion_bound(const Catalog& catalog, int max_n);

/// Removes a degree-3 vertex and validates the result (the inverse of the
/// vertex split that created it). Indices above v shift down by one.
/// Throws InvalidSplit unless deg(v) = 3.
Triangulation delete_degree3_vertex(const Triangulation& t, int v);

/// Conjunctive class filter. min_degree is a floor, max_degree a ceiling,
/// connectivity is exact, degree_count entries demand exactly m vertices of
/// degree k, and c4 bounds are inclusive.
struct Predicate {
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::vector<std::pair<int, int>> degree_count; // (k, m)
    std::optional<int> connectivity;
    std::optional<std::int64_t> c4_min;
    std::optional<std::int64_t> c4_max;

    /// Comma-separated clauses: min_degree=D, max_degree=D,
    /// degree_count(K)=M, connectivity=K, c4>=X, c4<=X, c4=X.
    /// Throws UnknownPredicateField on anything else.
    static Predicate parse(const std::string& text);

    bool matches(const Triangulation& t) const;
};

/// Codes of all n-vertex classes matching the predicate, in code order.
std::vector<CanonicalCode> filter_triangulations(const Catalog& catalog, int n,
                                                 const Predicate& predicate);

} // namespace spheretri
