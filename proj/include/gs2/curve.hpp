#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gs2/gf2m.hpp"

namespace gs2 {

// Expression tree over tower variables and the F_4 constants {0, 1, g, g+1}.
// Constants are symbolic; they resolve to field elements per FieldSpec at
// evaluation time (gamma differs bitwise across fields).
struct Expr {
    enum class Kind : std::uint8_t { Var, Const, Add, Mul, Inv, Square };
    enum class Sym : std::uint8_t { Zero, One, Gamma, GammaSq };

    struct Node {
        Kind kind;
        int a = -1, b = -1; // child indices
        int var = -1;       // Kind::Var
        Sym sym = Sym::Zero; // Kind::Const
    };

    std::vector<Node> nodes;
    int root = -1;

    int add_node(Node n) {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }
};

// Builder helpers returning node ids in e.
int ex_var(Expr& e, int v);
int ex_const(Expr& e, Expr::Sym s);
int ex_add(Expr& e, int a, int b);
int ex_mul(Expr& e, int a, int b);
int ex_inv(Expr& e, int a);
int ex_sq(Expr& e, int a);

// Evaluate over a field; nullopt marks division by zero (a pole), which is a
// distinguished outcome rather than a failure.
std::optional<FieldElement> eval_expr(const Expr& e, const FieldSpec& F,
                                      std::span<const FieldElement> vars);

FieldElement const_value(Expr::Sym s, const FieldSpec& F);

// An Artin-Schreier tower over a rational base variable: layer j adjoins
// new_var with new_var^2 + new_var = rhs(previous variables).
struct CurveSpec {
    struct Layer {
        std::string var;
        Expr rhs; // references variable indices 0..layer_index
    };
    std::string id;
    std::string base_var;
    std::vector<Layer> layers;

    int num_vars() const { return static_cast<int>(layers.size()) + 1; }
};

// T_n: base x1, layers x2..xn with rhs x^2/(x+1) (the reduced form of
// x^3/(x^2+x); same function field, poles only at x = 1 and infinity).
CurveSpec tower_level(int n);

enum class QuotientVariant { u0, u1 };

// The two index-2 quotients of C_n below T_{n-2}: base x1, layers
// x2..x_{n-2}, final layer u with
//   u0: (x^2/(x+1)) * (x^2/(1 + g^2 x^2)),          x = x_{n-2}
//   u1: (x^2/(x+1)) * (x^2/(1 + g^2 x^2 + x^2))
CurveSpec quotient_curve(int n, QuotientVariant variant);

// Shifted quotient: drop base variables x_1..x_j and replace u by u + 1/x_j;
// the final layer rhs gains 1/(x_{j+1}^2 + x_{j+1}) over the surviving
// variables. shifts must be empty (plain quotient) or a single index j with
// 1 <= j <= n-3; anything else cannot be expressed over the retained
// variables and is rejected as malformed.
CurveSpec shifted_quotient(int n, const std::vector<int>& shifts);

std::string curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(const std::string& json_text);

// Parse canonical ids: T<n>, Q<n>u0, Q<n>u1, F<m>1shift.
CurveSpec curve_by_id(const std::string& id);

// Spot-check of the degree-4 minimal polynomial of x3 over F_4(x1) on random
// on-curve points of T_3 over F_16 and F_64. Deterministically seeded.
bool verify_minpoly(int samples);

} // namespace gs2
