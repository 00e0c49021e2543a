#pragma once

#include <map>
#include <string>
#include <vector>

#include "gs2/cache.hpp"
#include "gs2/formulas.hpp"
#include "gs2/zeta.hpp"

namespace gs2 {

// One Klein-four covering identity: L(top) * L(base)^2 = product of the
// three quotient L-polynomials. Tower relations carry the same L in the two
// u-slots; peel relations have three distinct quotients. Quotient slots that
// are too large to count are expanded by child relations.
struct RelationTree {
    std::string top;
    std::string base;
    std::array<std::string, 3> quotients;
    bool squared_quotient = false;       // quotients[1] and [2] share one L
    std::vector<std::string> leaves;     // slots of this node counted directly
    std::vector<RelationTree> children;  // sub-relations for expanded slots

    // Degree of L for every slot, from the structure formulas.
    static std::int64_t expected_degree(const std::string& curve_id);
};

RelationTree build_tree(int n, int g_max_leaf);

using SlotMap = std::map<std::string, LPoly>;

// Solve a single relation for its one unknown slot (the top, or one
// quotient) by exact division; verifies the degree ledger first and
// re-multiplies after. Throws RelationFalsified with an operand dump if the
// division is not exact.
LPoly solve_relation(const RelationTree& r, const SlotMap& known);

// True iff candidate divides value exactly.
bool divisibility_check(const ZPoly& value, const ZPoly& candidate);

struct TemplateEntry {
    std::string source; // X1, X21, Y3, Y4, ...
    int exponent;
    std::int64_t degree; // of one copy
};

// Expected block structure of the level-n L-polynomial: X1^(2n-3),
// X21^(2n-6), Y_j^(2(n-1-j)) for j = 3..n-2, positive exponents only.
// Total degree equals 2 * genus_formula(n).
std::vector<TemplateEntry> corollary_template(int n);

struct PicOrder {
    mpz_class value;
    std::vector<std::pair<mpz_class, int>> factors; // primes up to 10^6
    mpz_class cofactor;                             // unfactored remainder
};

PicOrder pic_order(const LPoly& L);

enum class RefMatch { Exact, Mismatch, NotPrinted };

struct FactorReport {
    int level = 0;
    LPoly L;
    std::vector<std::pair<ZPoly, int>> factors; // product equals L exactly
    ZPoly new_factor;            // structural block first seen at this level
    std::int64_t new_factor_degree = 0;
    PicOrder pic;
    bool divisible_by_previous = false;
    bool ordinary = false;
    bool degree_ok = false;
    bool template_ok = false;   // block product reproduces L (levels >= 5)
    RefMatch ref_match = RefMatch::NotPrinted;
    std::string ref_diff;
};

struct RelationCheckRecord {
    std::string description;
    bool exact = false;
};

struct TowerOptions {
    CountOptions count;
    int g_max_leaf = 12;
    int excess_rows = 2;
    int max_k = 0; // cap on counted extension degrees; 0 = genus + excess
    QuotientVariant variant = QuotientVariant::u0;
    CountCache* cache = nullptr;
    // verify solved slots against direct counts up to this projected cost
    std::int64_t crosscheck_cost = 4'000'000;
};

struct TowerResult {
    std::vector<FactorReport> reports; // levels 2..n_max
    SlotMap lpolys;                    // every curve counted or solved
    std::vector<RelationCheckRecord> checks;
    std::map<std::string, ZPoly> blocks; // X1, X21, Y3, ...
};

// Count a curve of known genus and certify its L-polynomial, with up to
// opts.excess_rows over-determination rows when the budget allows.
LPoly lpoly_for_curve(const CurveSpec& curve, int genus, const TowerOptions& opts);

// The recursion: levels 2..n_max bottom-up, counting quotient leaves
// directly when their genus is within g_max_leaf and peeling them through
// child relations otherwise.
TowerResult compute_tower(int n_max, const TowerOptions& opts = {});

} // namespace gs2
