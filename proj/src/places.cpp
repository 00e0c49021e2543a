#include "gs2/places.hpp"

#include <map>

#include "gs2/errors.hpp"

namespace gs2 {

namespace {

// Evaluate an expression over Laurent series. Division by a window-empty
// series raises InsufficientPrecision (a genuinely zero denominator would
// keep raising it through every retry and surface as an internal error).
LaurentSeries eval_expr_series(const Expr& e, const Field& F,
                               std::span<const LaurentSeries> vars, int prec) {
    std::vector<LaurentSeries> val(e.nodes.size());
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& n = e.nodes[i];
        switch (n.kind) {
            case Expr::Kind::Var: val[i] = vars[static_cast<std::size_t>(n.var)]; break;
            case Expr::Kind::Const:
                val[i] = LaurentSeries::constant(F, const_value(n.sym, *F), prec);
                break;
            case Expr::Kind::Add: val[i] = val[n.a].add(val[n.b]); break;
            case Expr::Kind::Mul: val[i] = val[n.a].mul(val[n.b]); break;
            case Expr::Kind::Square: val[i] = val[n.a].square(); break;
            case Expr::Kind::Inv: val[i] = val[n.a].invert(); break;
        }
    }
    return val[e.root];
}

} // namespace

AsReduction as_reduce(LaurentSeries f) {
    const Field& F = f.field();
    LaurentSeries shift = LaurentSeries::zero();
    int guard = 0;
    for (;;) {
        if (++guard > 512) throw InsufficientPrecision("as_reduce: no progress");
        if (f.exact_zero()) return {AsClass::Split, f, shift};
        if (f.known_terms() == 0) {
            // all known coefficients are zero; classifiable only if the
            // window reaches past the constant term
            if (f.valuation_floor() <= 0)
                throw InsufficientPrecision("as_reduce: window exhausted");
            return {AsClass::Split, f, shift};
        }
        auto [v, lc] = f.lead();
        if (v >= 0) {
            AsClass cls = F->abs_trace(f.coeff(0)) == 0 ? AsClass::Split : AsClass::Inert;
            return {cls, f, shift};
        }
        if (v % 2 != 0) return {AsClass::Ramified, f, shift};
        LaurentSeries h =
            LaurentSeries::monomial(F, F->sqrt(lc), v / 2, f.known_terms() + 8);
        shift = shift.add(h);
        f = f.add(h.square()).add(h);
    }
}

std::vector<LaurentSeries> solve_as_series(const LaurentSeries& f) {
    const Field& F = f.field();
    if (!F) throw InternalError("solve_as_series: series without a field");
    if (f.exact_zero() || f.known_terms() == 0) {
        // y^2 + y = 0 + O(t^end): roots 0 and 1 to the same window
        int end = f.exact_zero() ? 64 : f.prec_end();
        std::vector<LaurentSeries> out;
        out.push_back(LaurentSeries(F, end, {}));
        std::vector<FieldElement> one(static_cast<std::size_t>(end > 0 ? end : 1), 0);
        one[0] = 1;
        out.push_back(LaurentSeries(F, 0, std::move(one)));
        return out;
    }
    if (!f.known_at(0)) throw InsufficientPrecision("solve_as_series: constant unknown");
    FieldElement c0 = f.coeff(0);
    auto y0 = F->solve_as(c0);
    if (!y0) return {};
    int end = f.prec_end();
    std::vector<LaurentSeries> out;
    for (FieldElement a0 : {*y0, static_cast<FieldElement>(*y0 ^ 1)}) {
        std::vector<FieldElement> a(static_cast<std::size_t>(end), 0);
        a[0] = a0;
        for (int j = 1; j < end; ++j) {
            FieldElement s = f.coeff(j);
            if (j % 2 == 0) s ^= F->square(a[static_cast<std::size_t>(j / 2)]);
            a[static_cast<std::size_t>(j)] = s;
        }
        out.emplace_back(F, 0, std::move(a));
    }
    return out;
}

namespace {

// Ramified layer lift: y^2 + y = f with odd pole order m = 2r+1. In the
// degree-2 extension the uniformizer is s = t^{r+1} y; substituting
// y = s / t^{r+1} gives  s^2 + s t^{r+1} = t^{2r+2} f(t) =: g(t), with
// val(g) = 1 exactly. t(s) comes out of a Newton iteration on
// E(t) = g(t) + s^2 + s t^{r+1}; E'(t) = c1 (1 + O(s)) is a unit, so the
// correct order doubles each round. Returns t(s); y(s) = s / t(s)^{r+1}.
LaurentSeries ramified_parameter(const LaurentSeries& fred, int r) {
    const Field& F = fred.field();
    int prec = fred.known_terms();
    LaurentSeries g =
        fred.mul(LaurentSeries::monomial(F, 1, 2 * r + 2, prec + 4));
    auto [vg, c1] = g.lead();
    if (vg != 1) throw InternalError("ramified lift: expected valuation 1");
    int target = std::max(2 * prec + 6, 8);
    LaurentSeries sigma1 = LaurentSeries::monomial(F, 1, 1, target);
    LaurentSeries sigma2 = LaurentSeries::monomial(F, 1, 2, target);
    // formal derivative: only the odd-exponent terms of g survive
    std::vector<FieldElement> dg(static_cast<std::size_t>(g.known_terms()), 0);
    for (int e = 1; e < g.prec_end(); e += 2)
        dg[static_cast<std::size_t>(e - 1)] = g.coeff(e);
    LaurentSeries gprime(F, 0, std::move(dg));
    LaurentSeries t = sigma2.scale(F->invert(c1));
    bool converged = false;
    for (int it = 0; it < 40 && !converged; ++it) {
        LaurentSeries st = sigma1.mul(t.pow_int(r + 1));
        LaurentSeries resid = g.substitute(t).add(sigma2).add(st);
        // an empty window proves zero only up to its knowledge boundary
        if (resid.valuation_floor() > target) {
            converged = true;
            break;
        }
        if (resid.known_terms() == 0)
            throw InsufficientPrecision("ramified lift: residual window too short");
        LaurentSeries deriv = gprime.substitute(t);
        if ((r + 1) % 2 == 1) deriv = deriv.add(sigma1.mul(t.pow_int(r)));
        LaurentSeries delta = resid.mul(deriv.invert());
        t = t.add(delta).truncate(target);
        if (delta.valuation_floor() > target) converged = true;
    }
    if (!converged)
        throw InsufficientPrecision("ramified lift: Newton iteration did not settle");
    return t;
}

struct Resolver {
    const CurveSpec& curve;
    Field F;
    int prec;
    bool keep_places;
    std::vector<PlaceBranch> found;
    SeedSummary summary;
    int count = 0;

    void recurse(std::vector<LaurentSeries>& vars, std::size_t layer, int e,
                 std::vector<AsClass>& tags) {
        if (layer == curve.layers.size()) {
            ++count;
            summary.place_e.push_back(e);
            if (keep_places) {
                PlaceBranch b;
                b.coords = vars;
                b.ram_index = e;
                b.layer_tags = tags;
                found.push_back(std::move(b));
            }
            return;
        }
        LaurentSeries f = eval_expr_series(curve.layers[layer].rhs, F, vars, prec);
        AsReduction red = as_reduce(std::move(f));
        tags.push_back(red.cls);
        switch (red.cls) {
            case AsClass::Inert:
                // residue degree 2: no degree-one place over this field
                summary.inert_e_layer.emplace_back(e, static_cast<int>(layer));
                break;
            case AsClass::Split: {
                for (auto& y : solve_as_series(red.reduced)) {
                    vars.push_back(y.add(red.shift));
                    recurse(vars, layer + 1, e, tags);
                    vars.pop_back();
                }
                break;
            }
            case AsClass::Ramified: {
                auto [v, lc] = red.reduced.lead();
                (void)lc;
                int r = (-v - 1) / 2;
                LaurentSeries t_of_s = ramified_parameter(red.reduced, r);
                LaurentSeries y = LaurentSeries::monomial(F, 1, 1, t_of_s.known_terms())
                                      .mul(t_of_s.pow_int(-(r + 1)));
                std::vector<LaurentSeries> nv;
                nv.reserve(vars.size() + 1);
                for (const auto& g : vars) nv.push_back(g.substitute(t_of_s));
                nv.push_back(y.add(red.shift.substitute(t_of_s)));
                recurse(nv, layer + 1, 2 * e, tags);
                break;
            }
        }
        tags.pop_back();
    }
};

BadLocusResult resolve_seeds(const CurveSpec& curve, const Field& F,
                             bool keep_places, int prec_start) {
    int layers = static_cast<int>(curve.layers.size());
    int prec0 = prec_start > 0 ? prec_start : 8 * std::max(layers, 1) + 16;
    for (int attempt = 0;; ++attempt) {
        int prec = prec0 << attempt;
        try {
            BadLocusResult result;
            std::map<int, int> ram;
            // Seeds: t^{-1} always (the infinite place); 0+t and 1+t only for
            // layered curves (a bare rational line counts those affinely).
            std::vector<LaurentSeries> seeds;
            seeds.push_back(LaurentSeries::monomial(F, 1, -1, prec));
            if (layers > 0) {
                seeds.push_back(LaurentSeries::monomial(F, 1, 1, prec));
                std::vector<FieldElement> c(static_cast<std::size_t>(prec), 0);
                c[0] = 1;
                c[1] = 1;
                seeds.push_back(LaurentSeries(F, 0, std::move(c)));
            }
            for (auto& seed : seeds) {
                Resolver r{curve, F, prec, keep_places, {}, {}, 0};
                std::vector<LaurentSeries> vars{seed};
                std::vector<AsClass> tags;
                r.recurse(vars, 0, 1, tags);
                result.count += r.count;
                for (int e : r.summary.place_e) ++ram[e];
                result.seeds.push_back(std::move(r.summary));
                for (auto& b : r.found) result.places.push_back(std::move(b));
            }
            for (auto [e, c] : ram) result.ram.emplace_back(e, c);
            return result;
        } catch (const InsufficientPrecision&) {
            if (attempt >= 6)
                throw InternalError("resolve_bad: precision exhausted after retries");
        }
    }
}

} // namespace

BadLocusResult resolve_bad_full(const CurveSpec& curve, const Field& F,
                                int prec_start) {
    return resolve_seeds(curve, F, true, prec_start);
}

int resolve_bad(const CurveSpec& curve, const Field& F, int prec_start) {
    return resolve_seeds(curve, F, false, prec_start).count;
}

std::vector<std::pair<int, int>> ram_profile(const CurveSpec& curve, const Field& F) {
    return resolve_seeds(curve, F, false, 0).ram;
}

int resolve_escape(const CurveSpec& curve, const Field& F,
                   std::span<const FieldElement> partial) {
    if (partial.empty() || partial[0] == 0 || partial[0] == 1)
        throw InternalError("resolve_escape: seed overlaps the bad base locus");
    int layers = static_cast<int>(curve.layers.size());
    int prec0 = 8 * std::max(layers, 1) + 16;
    for (int attempt = 0;; ++attempt) {
        int prec = prec0 << attempt;
        try {
            // x1 = a1 + t, deeper known coordinates re-expanded around their
            // concrete values; the branch is unramified below the escape.
            std::vector<FieldElement> c(static_cast<std::size_t>(prec), 0);
            c[0] = partial[0];
            c[1] = 1;
            std::vector<LaurentSeries> vars;
            vars.emplace_back(F, 0, std::move(c));
            for (std::size_t j = 1; j < partial.size(); ++j) {
                LaurentSeries f =
                    eval_expr_series(curve.layers[j - 1].rhs, F, vars, prec);
                AsReduction red = as_reduce(std::move(f));
                if (red.cls != AsClass::Split)
                    throw InternalError("resolve_escape: prefix not split");
                bool picked = false;
                for (auto& y : solve_as_series(red.reduced)) {
                    LaurentSeries yy = y.add(red.shift);
                    if (yy.known_at(0) && yy.coeff(0) == partial[j]) {
                        vars.push_back(std::move(yy));
                        picked = true;
                        break;
                    }
                }
                if (!picked) throw InternalError("resolve_escape: prefix mismatch");
            }
            Resolver r{curve, F, prec, false, {}, {}, 0};
            std::vector<AsClass> tags;
            r.recurse(vars, partial.size() - 1, 1, tags);
            return r.count;
        } catch (const InsufficientPrecision&) {
            if (attempt >= 6)
                throw InternalError("resolve_escape: precision exhausted after retries");
        }
    }
}

} // namespace gs2
