#include "multireduce/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "multireduce/errors.hpp"
#include "multireduce/parallel.hpp"
#include "multireduce/rng.hpp"

namespace multireduce::halfspace {

double raw_score(const Halfspace& h, const std::vector<double>& x) {
    if (x.size() + 1 != h.weights.size())
        throw std::invalid_argument("predict: point dimension does not match halfspace");
    double s = h.weights.back();
    for (std::size_t i = 0; i < x.size(); ++i) s += h.weights[i] * x[i];
    return s;
}

int predict(const Halfspace& h, const std::vector<double>& x) { return raw_score(h, x) >= 0 ? 1 : -1; }

double empirical_error(const Halfspace& h, const BinarySample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("empirical_error: empty sample");
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) wrong += (predict(h, sample.xs[i]) != sample.ys[i]);
    return static_cast<double>(wrong) / static_cast<double>(sample.size());
}

Halfspace train_realizable(const BinarySample& sample, std::int64_t budget) {
    if (sample.size() == 0) throw std::invalid_argument("train_realizable: empty sample");
    const int d = sample.dim();
    Halfspace h;
    h.weights.assign(d + 1, 0.0);
    std::int64_t updates = 0;
    while (true) {
        bool clean = true;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            if (predict(h, sample.xs[i]) == sample.ys[i]) continue;
            clean = false;
            const double y = sample.ys[i];
            for (int c = 0; c < d; ++c) h.weights[c] += y * sample.xs[i][c];
            h.weights[d] += y;
            if (++updates >= budget)
                throw not_realizable_error("train_realizable: update budget exhausted");
        }
        if (clean) return h;
    }
}

Halfspace train_erm_approx(const BinarySample& sample, const LearnerConfig& cfg, std::uint64_t seed) {
    if (sample.size() == 0) throw std::invalid_argument("train_erm_approx: empty sample");
    const int d = sample.dim();
    const std::size_t n = sample.size();

    Halfspace best;
    best.weights.assign(d + 1, 0.0);
    best.weights[d] = 1.0;  // constant +1
    double best_err = empirical_error(best, sample);
    {
        Halfspace neg;
        neg.weights.assign(d + 1, 0.0);
        neg.weights[d] = -1.0;
        double e = empirical_error(neg, sample);
        if (e < best_err) {
            best_err = e;
            best = neg;
        }
    }

    for (int r = 0; r < cfg.restarts && best_err > 0.0; ++r) {
        Rng rng = make_rng(seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        Halfspace h;
        h.weights.resize(d + 1);
        for (auto& w : h.weights) w = gaussian(rng);
        std::int64_t t = 0;
        for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
            auto order = random_permutation(static_cast<int>(n), rng);
            for (int idx : order) {
                ++t;
                const double y = sample.ys[idx];
                if (y * raw_score(h, sample.xs[idx]) < 1.0) {
                    const double eta = cfg.step0 / std::sqrt(static_cast<double>(t));
                    for (int c = 0; c < d; ++c) h.weights[c] += eta * y * sample.xs[idx][c];
                    h.weights[d] += eta * y;
                }
            }
            double e = empirical_error(h, sample);
            if (e < best_err) {
                best_err = e;
                best = h;
                if (best_err == 0.0) break;
            }
        }
    }
    return best;
}

namespace {

struct WeightedPoints {
    // coalesced distinct locations with positive/negative label mass
    std::vector<std::vector<double>> xs;
    std::vector<double> wpos, wneg;
    double total_pos = 0.0, total_neg = 0.0;
};

WeightedPoints coalesce(const BinarySample& sample) {
    WeightedPoints out;
    std::map<std::vector<double>, std::pair<double, double>> acc;
    const double w = 1.0 / static_cast<double>(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        auto& slot = acc[sample.xs[i]];
        if (sample.ys[i] > 0)
            slot.first += w;
        else
            slot.second += w;
    }
    for (auto& [x, masses] : acc) {
        out.xs.push_back(x);
        out.wpos.push_back(masses.first);
        out.wneg.push_back(masses.second);
        out.total_pos += masses.first;
        out.total_neg += masses.second;
    }
    return out;
}

OracleResult oracle_1d(const WeightedPoints& pts) {
    const std::size_t n = pts.xs.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts.xs[a][0] < pts.xs[b][0]; });
    std::vector<double> v(n), pp(n + 1, 0.0), pn(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = pts.xs[order[i]][0];
        pp[i + 1] = pp[i] + pts.wpos[order[i]];
        pn[i + 1] = pn[i] + pts.wneg[order[i]];
    }
    const double Wp = pts.total_pos, Wn = pts.total_neg;

    double best = std::numeric_limits<double>::infinity();
    int best_cut = 0, best_orient = 1;
    // right-positive: plus set = suffix starting at cut c (c = n means empty)
    for (std::size_t c = 0; c <= n; ++c) {
        double err_right = pp[c] + (Wn - pn[c]);
        if (err_right < best) {
            best = err_right;
            best_cut = static_cast<int>(c);
            best_orient = 1;
        }
        double err_left = (Wp - pp[c]) + pn[c];  // plus set = prefix before cut c
        if (err_left < best) {
            best = err_left;
            best_cut = static_cast<int>(c);
            best_orient = -1;
        }
    }
    double t;
    if (best_orient > 0) {
        // plus iff x >= t, t in (v[cut-1], v[cut]]
        if (best_cut == 0)
            t = v.front() - 1.0;
        else if (best_cut == static_cast<int>(n))
            t = v.back() + 1.0;
        else
            t = 0.5 * (v[best_cut - 1] + v[best_cut]);
        return {best, Halfspace{{1.0, -t}}};
    }
    // plus iff x <= t, t in [v[cut-1], v[cut])
    if (best_cut == 0)
        t = v.front() - 1.0;
    else if (best_cut == static_cast<int>(n))
        t = v.back() + 1.0;
    else
        t = 0.5 * (v[best_cut - 1] + v[best_cut]);
    return {best, Halfspace{{-1.0, t}}};
}

struct Candidate2D {
    double nx, ny, c;  // plus side: nx*x + ny*y - c >= 0
};

OracleResult oracle_2d(const WeightedPoints& pts) {
    const std::size_t n = pts.xs.size();
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = pts.xs[i][0];
        py[i] = pts.xs[i][1];
    }
    const double Wp = pts.total_pos, Wn = pts.total_neg;

    double cx = 0, cy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        cx += px[i];
        cy += py[i];
    }
    cx /= static_cast<double>(n);
    cy /= static_cast<double>(n);
    double rad = 0;
    for (std::size_t i = 0; i < n; ++i)
        rad = std::max(rad, std::hypot(px[i] - cx, py[i] - cy));
    const double eps = 1e-9 * std::max(2.0 * rad, 1e-300);
    const double theta = 1e-9;
    const double ct = std::cos(theta), st = std::sin(theta);

    struct Best {
        double err = std::numeric_limits<double>::infinity();
        std::int64_t idx = -1;
        Halfspace h;
    };
    // constants first (candidate indices -2, -1 keep the reduction total order)
    Best global;
    global.err = Wn;
    global.idx = -2;
    global.h = Halfspace{{0.0, 0.0, 1.0}};
    if (Wp < global.err) {
        global.err = Wp;
        global.idx = -1;
        global.h = Halfspace{{0.0, 0.0, -1.0}};
    }

    const std::int64_t npairs = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
    const int chunks = std::max(1, thread_budget() * 8);
    const std::int64_t chunk_size = (npairs + chunks - 1) / std::max<std::int64_t>(chunks, 1);
    std::vector<Best> partial(static_cast<std::size_t>(chunks));

    parallel_for(chunks, [&](std::int64_t ci) {
        Best local;
        std::int64_t lo = ci * chunk_size;
        std::int64_t hi = std::min(npairs, lo + chunk_size);
        if (lo >= hi) {
            partial[static_cast<std::size_t>(ci)] = local;
            return;
        }
        // map linear pair index -> (a,b), a<b
        std::size_t a = 0;
        std::int64_t before = 0;  // pairs with first index < a
        while (before + static_cast<std::int64_t>(n - a - 1) <= lo) {
            before += static_cast<std::int64_t>(n - a - 1);
            ++a;
        }
        std::size_t b = a + 1 + static_cast<std::size_t>(lo - before);
        Candidate2D cands[7];
        for (std::int64_t p = lo; p < hi; ++p) {
            const double dx = px[b] - px[a], dy = py[b] - py[a];
            double nx = -dy, ny = dx;
            const double nn = std::hypot(nx, ny);
            if (nn > 0) {
                nx /= nn;
                ny /= nn;
                const double c0 = nx * px[a] + ny * py[a];
                cands[0] = {nx, ny, c0};
                cands[1] = {nx, ny, c0 + eps};
                cands[2] = {nx, ny, c0 - eps};
                const double rxp = nx * ct - ny * st, ryp = nx * st + ny * ct;
                const double rxm = nx * ct + ny * st, rym = -nx * st + ny * ct;
                cands[3] = {rxp, ryp, rxp * px[a] + ryp * py[a]};
                cands[4] = {rxm, rym, rxm * px[a] + rym * py[a]};
                cands[5] = {rxp, ryp, rxp * px[b] + ryp * py[b]};
                cands[6] = {rxm, rym, rxm * px[b] + rym * py[b]};
                for (int v = 0; v < 7; ++v) {
                    const Candidate2D& cd = cands[v];
                    double wp_ge = 0.0, wn_ge = 0.0, wp_eq = 0.0, wn_eq = 0.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        const double s = cd.nx * px[i] + cd.ny * py[i] - cd.c;
                        if (s >= 0) {
                            wp_ge += pts.wpos[i];
                            wn_ge += pts.wneg[i];
                            if (s == 0) {
                                wp_eq += pts.wpos[i];
                                wn_eq += pts.wneg[i];
                            }
                        }
                    }
                    const double err_plus = (Wp - wp_ge) + wn_ge;
                    // flipped orientation: plus side is s <= 0
                    const double wp_le = Wp - wp_ge + wp_eq;
                    const double wn_le = Wn - wn_ge + wn_eq;
                    const double err_minus = (Wp - wp_le) + wn_le;
                    const std::int64_t base_idx = (p * 7 + v) * 2;
                    if (err_plus < local.err) {
                        local.err = err_plus;
                        local.idx = base_idx;
                        local.h = Halfspace{{cd.nx, cd.ny, -cd.c}};
                    }
                    if (err_minus < local.err) {
                        local.err = err_minus;
                        local.idx = base_idx + 1;
                        local.h = Halfspace{{-cd.nx, -cd.ny, cd.c}};
                    }
                }
            }
            if (++b == n) {
                ++a;
                b = a + 1;
            }
        }
        partial[static_cast<std::size_t>(ci)] = local;
    });

    for (const auto& loc : partial) {
        if (loc.err < global.err || (loc.err == global.err && loc.idx < global.idx)) {
            global.err = loc.err;
            global.idx = loc.idx;
            global.h = loc.h;
        }
    }
    return {global.err, global.h};
}

}  // namespace

OracleResult exact_best_error(const BinarySample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("exact_best_error: empty sample");
    const int d = sample.dim();
    if (d != 1 && d != 2) throw std::invalid_argument("exact_best_error: only d=1 and d=2 supported");
    WeightedPoints pts = coalesce(sample);
    if (d == 2 && pts.xs.size() > 4096)
        throw budget_exceeded_error("exact_best_error: more than 4096 distinct points in d=2");
    return d == 1 ? oracle_1d(pts) : oracle_2d(pts);
}

}  // namespace multireduce::halfspace
