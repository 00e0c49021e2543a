#pragma once

#include <vector>

#include "gs2/curve.hpp"
#include "gs2/laurent.hpp"

namespace gs2 {

enum class AsClass { Split, Inert, Ramified };

struct AsReduction {
    AsClass cls;
    LaurentSeries reduced; // pole part stripped of Artin-Schreier-trivial terms
    LaurentSeries shift;   // y = shift + (root of the reduced equation)
};

// Artin-Schreier reduction of y^2 + y = f at a place with local parameter t:
// while the pole order is negative and even, subtract h^2 + h for
// h = sqrt(lead) t^(v/2). Terminates with an odd-order pole (ramified, one
// place above, e doubled) or a regular value whose constant-term trace
// decides split (two places) versus inert (residue degree 2, no degree-one
// place over this field). Throws InsufficientPrecision when the window is
// too short to classify.
AsReduction as_reduce(LaurentSeries f);

// Both roots of y^2 + y = f for regular reduced f (empty when inert).
// Solved by forward substitution: the truncated map is triangular,
// a_j = c_j + [j even] a_{j/2}^2.
std::vector<LaurentSeries> solve_as_series(const LaurentSeries& f);

struct PlaceBranch {
    std::vector<LaurentSeries> coords; // expansion of each tower coordinate
    int ram_index = 1;                 // e, a power of 2
    std::vector<AsClass> layer_tags;   // classification accumulated per layer
};

struct SeedSummary {
    std::vector<int> place_e;                        // e of each surviving place
    std::vector<std::pair<int, int>> inert_e_layer;  // (e, layer) of pruned subtrees
};

struct BadLocusResult {
    int count = 0;                        // degree-one places found
    std::vector<PlaceBranch> places;      // surviving branches
    std::vector<std::pair<int, int>> ram; // (e, count), ascending e
    std::vector<SeedSummary> seeds;       // one per seed, for degree accounting
};

// Degree-one places of the smooth model lying over the base locus
// x1 in {0, 1, infinity} (just the infinite place for a bare rational line).
// Adaptive precision: starts at 8*layers + 16 and doubles on
// InsufficientPrecision, up to 6 retries.
// prec_start = 0 uses the adaptive default (8 * layers + 16).
BadLocusResult resolve_bad_full(const CurveSpec& curve, const Field& F,
                                int prec_start = 0);
int resolve_bad(const CurveSpec& curve, const Field& F, int prec_start = 0);

// Ramification profile (e, count) over the bad base locus.
std::vector<std::pair<int, int>> ram_profile(const CurveSpec& curve, const Field& F);

// Places above an interior escape node: a concrete partial solution
// (values for variables 0..j) whose next rhs evaluation hit a pole. The
// remaining layers are resolved by local expansion seeded at that point.
int resolve_escape(const CurveSpec& curve, const Field& F,
                   std::span<const FieldElement> partial);

} // namespace gs2
