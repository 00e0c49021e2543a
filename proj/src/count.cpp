#include "gs2/count.hpp"

#include <atomic>
#include <limits>
#include <thread>

#include "gs2/errors.hpp"
#include "gs2/places.hpp"

namespace gs2 {

namespace {

constexpr std::size_t kChunk = 1024;

// One live branch node inside a chunk scan. Expressions in this artifact
// reference at most the base variable and the immediately previous one; the
// parent links recover full prefixes for the rare escape nodes.
struct Node {
    FieldElement cur;
    FieldElement base;
    std::uint32_t parent;
};

struct ScanResult {
    std::int64_t affine = 0;
    std::int64_t escape_bad = 0;
};

class ChunkScanner {
public:
    ChunkScanner(const CurveSpec& curve, Field F)
        : curve_(curve), F_(std::move(F)) {
        levels_.resize(curve.layers.size() + 1);
    }

    // Scans base values in [lo, hi); x1 in {0,1} are skipped for layered curves.
    ScanResult scan(std::uint64_t lo, std::uint64_t hi) {
        ScanResult out;
        std::size_t L = curve_.layers.size();
        if (L == 0) {
            out.affine = static_cast<std::int64_t>(hi - lo);
            return out;
        }
        for (std::uint64_t start = lo; start < hi; start += kChunk) {
            std::uint64_t end = std::min<std::uint64_t>(start + kChunk, hi);
            auto& base = levels_[0];
            base.clear();
            for (std::uint64_t v = start; v < end; ++v) {
                if (v == 0 || v == 1) continue;
                base.push_back({v, v, 0});
            }
            for (std::size_t j = 0; j < L; ++j) step(j, j + 1 == L, out);
        }
        return out;
    }

private:
    void step(std::size_t j, bool last, ScanResult& out) {
        const auto& nodes = levels_[j];
        auto& next = levels_[j + 1];
        next.clear();
        if (nodes.empty()) return;
        evaluate_layer(j, nodes);
        const FieldSpec& F = *F_;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (pole_[i]) {
                out.escape_bad += resolve_escape_node(j, static_cast<std::uint32_t>(i));
                continue;
            }
            if (F.abs_trace(value_[i])) continue;
            if (last) {
                out.affine += 2; // both roots complete the tuple, never materialized
            } else {
                FieldElement y = F.solve_raw(value_[i]);
                next.push_back({y, nodes[i].base, static_cast<std::uint32_t>(i)});
                next.push_back({y ^ 1, nodes[i].base, static_cast<std::uint32_t>(i)});
            }
        }
    }

    // Evaluate layer j's rhs for every node, op-by-op over the whole node
    // array; inversions go through the Montgomery batch with pole marking.
    void evaluate_layer(std::size_t j, const std::vector<Node>& nodes) {
        const Expr& e = curve_.layers[j].rhs;
        const FieldSpec& F = *F_;
        std::size_t n = nodes.size();
        slots_.resize(e.nodes.size());
        pole_.assign(n, 0);
        for (std::size_t ni = 0; ni < e.nodes.size(); ++ni) {
            const auto& nd = e.nodes[ni];
            auto& dst = slots_[ni];
            dst.resize(n);
            switch (nd.kind) {
                case Expr::Kind::Var:
                    if (nd.var == 0)
                        for (std::size_t i = 0; i < n; ++i) dst[i] = nodes[i].base;
                    else if (nd.var == static_cast<int>(j))
                        for (std::size_t i = 0; i < n; ++i) dst[i] = nodes[i].cur;
                    else
                        for (std::size_t i = 0; i < n; ++i)
                            dst[i] = var_by_walk(j, static_cast<std::uint32_t>(i), nd.var);
                    break;
                case Expr::Kind::Const: {
                    FieldElement c = const_value(nd.sym, F);
                    for (std::size_t i = 0; i < n; ++i) dst[i] = c;
                    break;
                }
                case Expr::Kind::Add: {
                    const auto& a = slots_[static_cast<std::size_t>(nd.a)];
                    const auto& b = slots_[static_cast<std::size_t>(nd.b)];
                    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
                    break;
                }
                case Expr::Kind::Mul: {
                    const auto& a = slots_[static_cast<std::size_t>(nd.a)];
                    const auto& b = slots_[static_cast<std::size_t>(nd.b)];
                    for (std::size_t i = 0; i < n; ++i) dst[i] = F.mul(a[i], b[i]);
                    break;
                }
                case Expr::Kind::Square: {
                    const auto& a = slots_[static_cast<std::size_t>(nd.a)];
                    for (std::size_t i = 0; i < n; ++i) dst[i] = F.square(a[i]);
                    break;
                }
                case Expr::Kind::Inv: {
                    const auto& a = slots_[static_cast<std::size_t>(nd.a)];
                    F.batch_invert(a, dst, pole_scratch_);
                    for (std::uint32_t p : pole_scratch_) pole_[p] = 1;
                    break;
                }
            }
        }
        value_ = slots_[static_cast<std::size_t>(e.root)];
    }

    FieldElement var_by_walk(std::size_t level, std::uint32_t index, int var) const {
        std::size_t cur = level;
        std::uint32_t idx = index;
        while (static_cast<int>(cur) > var) {
            idx = levels_[cur][idx].parent;
            --cur;
        }
        return levels_[cur][idx].cur;
    }

    std::int64_t resolve_escape_node(std::size_t level, std::uint32_t index) {
        std::vector<FieldElement> partial(level + 1);
        std::size_t cur = level;
        std::uint32_t idx = index;
        for (;;) {
            partial[cur] = levels_[cur][idx].cur;
            if (cur == 0) break;
            idx = levels_[cur][idx].parent;
            --cur;
        }
        return resolve_escape(curve_, F_, partial);
    }

    const CurveSpec& curve_;
    Field F_;
    std::vector<std::vector<Node>> levels_;
    std::vector<std::vector<FieldElement>> slots_;
    std::vector<FieldElement> value_;
    std::vector<std::uint8_t> pole_;
    std::vector<std::uint32_t> pole_scratch_;
};

ScanResult scan_parallel(const CurveSpec& curve, int k, const CountOptions& opts) {
    Field F = FieldSpec::make_field(k);
    std::uint64_t n = F->order();
    int threads = opts.threads > 0
                      ? opts.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::uint64_t block = 1 << 16;
    if (n <= block || threads == 1) {
        ChunkScanner s(curve, F);
        return s.scan(0, n);
    }
    std::atomic<std::uint64_t> cursor{0};
    std::vector<ScanResult> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            ChunkScanner s(curve, F);
            ScanResult acc;
            for (;;) {
                std::uint64_t lo = cursor.fetch_add(block);
                if (lo >= n) break;
                ScanResult r = s.scan(lo, std::min(lo + block, n));
                acc.affine += r.affine;
                acc.escape_bad += r.escape_bad;
            }
            partial[static_cast<std::size_t>(t)] = acc;
        });
    }
    for (auto& th : pool) th.join();
    ScanResult total;
    for (const auto& r : partial) {
        total.affine += r.affine;
        total.escape_bad += r.escape_bad;
    }
    return total;
}

} // namespace

std::int64_t projected_cost(const CurveSpec& curve, int k) {
    if (k >= 31) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(1ull << (2 * k))
           << std::min<std::size_t>(curve.layers.size(), 20);
}

std::int64_t affine_count(const CurveSpec& curve, int k, const CountOptions& opts) {
    return scan_parallel(curve, k, opts).affine;
}

CountRow count_places(const CurveSpec& curve, int k, const CountOptions& opts) {
    ScanResult s = scan_parallel(curve, k, opts);
    Field F = FieldSpec::make_field(k);
    std::int64_t bad = resolve_bad(curve, F) + s.escape_bad;
    return {k, s.affine, bad, s.affine + bad};
}

CountTable count_range(const CurveSpec& curve, int k_max, const CountOptions& opts) {
    CountTable table;
    table.curve_id = curve.id;
    for (int k = 1; k <= k_max; ++k) {
        if (projected_cost(curve, k) > opts.budget) break;
        table.rows.push_back(count_places(curve, k, opts));
    }
    return table;
}

} // namespace gs2
