#include "gs2/curve.hpp"

#include <random>
#include <sstream>

#include "json.hpp"

#include "gs2/errors.hpp"

namespace gs2 {

int ex_var(Expr& e, int v) { return e.add_node({Expr::Kind::Var, -1, -1, v, Expr::Sym::Zero}); }
int ex_const(Expr& e, Expr::Sym s) { return e.add_node({Expr::Kind::Const, -1, -1, -1, s}); }
int ex_add(Expr& e, int a, int b) { return e.add_node({Expr::Kind::Add, a, b, -1, Expr::Sym::Zero}); }
int ex_mul(Expr& e, int a, int b) { return e.add_node({Expr::Kind::Mul, a, b, -1, Expr::Sym::Zero}); }
int ex_inv(Expr& e, int a) { return e.add_node({Expr::Kind::Inv, a, -1, -1, Expr::Sym::Zero}); }
int ex_sq(Expr& e, int a) { return e.add_node({Expr::Kind::Square, a, -1, -1, Expr::Sym::Zero}); }

FieldElement const_value(Expr::Sym s, const FieldSpec& F) {
    switch (s) {
        case Expr::Sym::Zero: return 0;
        case Expr::Sym::One: return 1;
        case Expr::Sym::Gamma: return F.gamma();
        case Expr::Sym::GammaSq: return F.square(F.gamma());
    }
    return 0;
}

std::optional<FieldElement> eval_expr(const Expr& e, const FieldSpec& F,
                                      std::span<const FieldElement> vars) {
    std::vector<FieldElement> val(e.nodes.size());
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& n = e.nodes[i];
        switch (n.kind) {
            case Expr::Kind::Var: val[i] = vars[static_cast<std::size_t>(n.var)]; break;
            case Expr::Kind::Const: val[i] = const_value(n.sym, F); break;
            case Expr::Kind::Add: val[i] = val[n.a] ^ val[n.b]; break;
            case Expr::Kind::Mul: val[i] = F.mul(val[n.a], val[n.b]); break;
            case Expr::Kind::Square: val[i] = F.square(val[n.a]); break;
            case Expr::Kind::Inv:
                if (val[n.a] == 0) return std::nullopt;
                val[i] = F.invert(val[n.a]);
                break;
        }
    }
    return val[e.root];
}

namespace {

// x^2/(x+1)
Expr tower_rhs(int var) {
    Expr e;
    int x = ex_var(e, var);
    int num = ex_sq(e, x);
    int den = ex_add(e, x, ex_const(e, Expr::Sym::One));
    e.root = ex_mul(e, num, ex_inv(e, den));
    return e;
}

// (x^2/(x+1)) * (x^2/(1 + g^2 x^2 [+ x^2]))
int quotient_rhs(Expr& e, int var, QuotientVariant variant) {
    int x = ex_var(e, var);
    int x2 = ex_sq(e, x);
    int one = ex_const(e, Expr::Sym::One);
    int den1 = ex_add(e, x, one);
    int g2x2 = ex_mul(e, ex_const(e, Expr::Sym::GammaSq), x2);
    int den2 = ex_add(e, one, g2x2);
    if (variant == QuotientVariant::u1) den2 = ex_add(e, den2, x2);
    int num = ex_mul(e, x2, x2);
    return ex_mul(e, num, ex_inv(e, ex_mul(e, den1, den2)));
}

std::string xname(int i) { return "x" + std::to_string(i); }

} // namespace

CurveSpec tower_level(int n) {
    if (n < 1) throw DomainError("tower_level: n >= 1");
    CurveSpec c;
    c.id = "T" + std::to_string(n);
    c.base_var = xname(1);
    for (int j = 2; j <= n; ++j) {
        CurveSpec::Layer L;
        L.var = xname(j);
        L.rhs = tower_rhs(j - 2);
        c.layers.push_back(std::move(L));
    }
    return c;
}

CurveSpec quotient_curve(int n, QuotientVariant variant) {
    if (n < 3) throw DomainError("quotient_curve: n >= 3");
    CurveSpec c;
    c.id = "Q" + std::to_string(n) + (variant == QuotientVariant::u0 ? "u0" : "u1");
    c.base_var = xname(1);
    for (int j = 2; j <= n - 2; ++j) {
        CurveSpec::Layer L;
        L.var = xname(j);
        L.rhs = tower_rhs(j - 2);
        c.layers.push_back(std::move(L));
    }
    CurveSpec::Layer U;
    U.var = "u";
    U.rhs.root = quotient_rhs(U.rhs, n - 3, variant);
    c.layers.push_back(std::move(U));
    return c;
}

CurveSpec shifted_quotient(int n, const std::vector<int>& shifts) {
    if (n < 3) throw DomainError("shifted_quotient: n >= 3");
    if (shifts.empty()) return quotient_curve(n, QuotientVariant::u0);
    if (shifts.size() != 1 || shifts[0] < 1 || shifts[0] > n - 3)
        throw DomainError("shifted_quotient: malformed shift list");
    int j = shifts[0];
    // Variables x_{j+1}..x_{n-2}, then u + 1/x_j; the shift contributes
    // 1/(x_{j+1}^2 + x_{j+1}).
    CurveSpec c;
    int m = n - 1 - j; // the curve is F_{m,1} up to relabeling
    c.id = "F" + std::to_string(m) + "1shift";
    c.base_var = xname(j + 1);
    int nvars = n - 2 - j; // count of x variables kept
    for (int t = 1; t < nvars; ++t) {
        CurveSpec::Layer L;
        L.var = xname(j + 1 + t);
        L.rhs = tower_rhs(t - 1);
        c.layers.push_back(std::move(L));
    }
    CurveSpec::Layer U;
    U.var = "u";
    int quot = quotient_rhs(U.rhs, nvars - 1, QuotientVariant::u0);
    int v1 = ex_var(U.rhs, 0);
    int s = ex_add(U.rhs, ex_sq(U.rhs, v1), v1);
    U.rhs.root = ex_add(U.rhs, quot, ex_inv(U.rhs, s));
    c.layers.push_back(std::move(U));
    return c;
}

namespace {

void tokens_of(const Expr& e, int node, nlohmann::json& out) {
    const auto& n = e.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
        case Expr::Kind::Var: out.push_back("v" + std::to_string(n.var)); break;
        case Expr::Kind::Const:
            out.push_back(n.sym == Expr::Sym::Zero  ? "0"
                          : n.sym == Expr::Sym::One ? "1"
                          : n.sym == Expr::Sym::Gamma ? "g" : "g2");
            break;
        case Expr::Kind::Add:
            out.push_back("add");
            tokens_of(e, n.a, out);
            tokens_of(e, n.b, out);
            break;
        case Expr::Kind::Mul:
            out.push_back("mul");
            tokens_of(e, n.a, out);
            tokens_of(e, n.b, out);
            break;
        case Expr::Kind::Inv:
            out.push_back("inv");
            tokens_of(e, n.a, out);
            break;
        case Expr::Kind::Square:
            out.push_back("sq");
            tokens_of(e, n.a, out);
            break;
    }
}

int parse_tokens(Expr& e, const nlohmann::json& toks, std::size_t& pos) {
    if (pos >= toks.size()) throw DomainError("curve json: truncated expression");
    std::string t = toks[pos++].get<std::string>();
    if (t == "add" || t == "mul") {
        int a = parse_tokens(e, toks, pos);
        int b = parse_tokens(e, toks, pos);
        return t == "add" ? ex_add(e, a, b) : ex_mul(e, a, b);
    }
    if (t == "inv") return ex_inv(e, parse_tokens(e, toks, pos));
    if (t == "sq") return ex_sq(e, parse_tokens(e, toks, pos));
    if (t == "0") return ex_const(e, Expr::Sym::Zero);
    if (t == "1") return ex_const(e, Expr::Sym::One);
    if (t == "g") return ex_const(e, Expr::Sym::Gamma);
    if (t == "g2") return ex_const(e, Expr::Sym::GammaSq);
    if (t.size() >= 2 && t[0] == 'v') return ex_var(e, std::stoi(t.substr(1)));
    throw DomainError("curve json: bad token '" + t + "'");
}

} // namespace

std::string curve_to_json(const CurveSpec& c) {
    nlohmann::json j;
    j["id"] = c.id;
    j["base_var"] = c.base_var;
    j["layers"] = nlohmann::json::array();
    for (const auto& L : c.layers) {
        nlohmann::json layer;
        layer["var"] = L.var;
        nlohmann::json toks = nlohmann::json::array();
        tokens_of(L.rhs, L.rhs.root, toks);
        layer["rhs"] = toks;
        j["layers"].push_back(layer);
    }
    return j.dump();
}

CurveSpec curve_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CurveSpec c;
    c.id = j.at("id").get<std::string>();
    c.base_var = j.at("base_var").get<std::string>();
    for (const auto& layer : j.at("layers")) {
        CurveSpec::Layer L;
        L.var = layer.at("var").get<std::string>();
        std::size_t pos = 0;
        L.rhs.root = parse_tokens(L.rhs, layer.at("rhs"), pos);
        c.layers.push_back(std::move(L));
    }
    return c;
}

CurveSpec curve_by_id(const std::string& id) {
    try {
        if (id.size() >= 2 && id[0] == 'T') return tower_level(std::stoi(id.substr(1)));
        if (id.size() >= 4 && id[0] == 'Q') {
            auto upos = id.find('u');
            if (upos != std::string::npos) {
                int n = std::stoi(id.substr(1, upos - 1));
                if (id.substr(upos) == "u0") return quotient_curve(n, QuotientVariant::u0);
                if (id.substr(upos) == "u1") return quotient_curve(n, QuotientVariant::u1);
            }
        }
        if (id.size() > 7 && id[0] == 'F' && id.substr(id.size() - 6) == "1shift") {
            int m = std::stoi(id.substr(1, id.size() - 7));
            // F_{m,1} = shifted_quotient(m + 2, {1})
            return shifted_quotient(m + 2, {1});
        }
    } catch (const std::logic_error&) {
        // fall through: unparsable number
    }
    throw UsageError("unknown curve id '" + id + "'");
}

bool verify_minpoly(int samples) {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int k : {2, 3}) {
        auto F = FieldSpec::make_field(k);
        std::uint64_t N = F->order();
        CurveSpec t3 = tower_level(3);
        auto quartic = [&](FieldElement x1, FieldElement t) {
            // T^4 + (1/x1^2 + 1/x1) T^2 + (1/x1^2 + 1/x1 + 1) T + x1^2/(x1+1),
            // i.e. (T^2+T)^2 + (1 + 1/c)(T^2+T) + c with c = x1^2/(x1+1),
            // eliminating x2 from the two layer equations.
            FieldElement ix = F->invert(x1);
            FieldElement a = F->square(ix) ^ ix;
            FieldElement cc = F->mul(F->square(x1), F->invert(x1 ^ 1));
            return F->square(F->square(t)) ^ F->mul(a, F->square(t)) ^
                   F->mul(a ^ 1, t) ^ cc;
        };
        int done = 0, off_zero = 0, off_total = 0;
        while (done < samples) {
            FieldElement x1 = rng() % N;
            if (x1 == 0 || x1 == 1) continue;
            std::vector<FieldElement> vars{x1};
            bool dead = false;
            for (const auto& L : t3.layers) {
                auto rhs = eval_expr(L.rhs, *F, vars);
                if (!rhs) { dead = true; break; }
                auto y = F->solve_as(*rhs);
                if (!y) { dead = true; break; }
                vars.push_back((rng() & 1) ? *y : (*y ^ 1));
            }
            if (dead) continue;
            if (quartic(x1, vars[2]) != 0) return false;
            // Soundness probe: the quartic has at most 4 roots in the fiber,
            // so random T values hit zero only rarely.
            ++off_total;
            if (quartic(x1, rng() % N) == 0) ++off_zero;
            ++done;
        }
        if (off_total > 8 && off_zero * 2 > off_total) return false;
    }
    return true;
}

} // namespace gs2
