#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nakalg/extnat.hpp"
#include "nakalg/kupisch.hpp"

namespace nakalg {

// Kernel of the projective cover P(top M) ->> M; empty when M is projective.
inline std::optional<Interval> syzygy(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    const long d = m.start + m.len;
    const long fc = A.f(m.start);
    if (fc == d) return std::nullopt;
    Interval s{d, fc - d};
    A.require_module(s);
    return s;
}

// Cokernel of the injective envelope M >-> I(soc M); empty when M is injective.
inline std::optional<Interval> cosyzygy(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    const long a = m.start + m.len - 1;
    const long b = m.start - 1;
    const long ga = A.g(a);
    if (ga == b) return std::nullopt;
    if (ga > b) throw TheoremViolation("socle does not embed for " + A.str());
    Interval s{ga + 1, b - ga};
    A.require_module(s);
    return s;
}

inline std::optional<Interval> syzygy_power(const Nakayama& A, Interval m, long k) {
    std::optional<Interval> cur = m;
    for (long i = 0; i < k && cur; ++i) cur = syzygy(A, *cur);
    return cur;
}

inline std::optional<Interval> cosyzygy_power(const Nakayama& A, Interval m, long k) {
    std::optional<Interval> cur = m;
    for (long i = 0; i < k && cur; ++i) cur = cosyzygy(A, *cur);
    return cur;
}

namespace detail {

// Computes inf({2t : x_{t+1} = y_t} ∪ {2t+1 : x_{t+1} = y_{t+1}}) for the
// orbits of `step`.  With step = f on (start, start+len) this is the
// projective dimension; with step = g on (soc, start-1) the injective one.
//
// Linear algebras always finish within 2n+4 iterations.  In the cyclic case
// `step` depends only on the residue mod n, so once the residue pair (x, y)
// recurs the tail is exactly periodic up to a constant drift per period; the
// drift decides between a genuinely infinite orbit and a finishing step that
// can be predicted and then confirmed by direct iteration.
template <class F>
ExtNat homdim_scan(const Nakayama& A, F step, long x0, long y0) {
    const int n = A.n();
    if (!A.cyclic()) {
        long x = x0, y = y0;
        const long cap = 2L * n + 4;
        for (long t = 0; t <= cap; ++t) {
            const long xn = step(x);
            if (xn == y) return ExtNat(2 * t);
            const long yn = step(y);
            if (xn == yn) return ExtNat(2 * t + 1);
            x = xn;
            y = yn;
        }
        throw TheoremViolation("resolution scan exceeded bound for " + A.str());
    }
    const auto res = [n](long v) { return ((v % n) + n) % n; };
    std::vector<long> xs{x0}, ys{y0};
    std::map<std::pair<long, long>, long> seen;
    long limit = -1;
    for (long t = 0;; ++t) {
        const long x = xs.back(), y = ys.back();
        if (limit < 0) {
            const auto key = std::make_pair(res(x), res(y));
            const auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(key, t);
            } else {
                const long i = it->second, period = t - i;
                const long delta = (y - ys[static_cast<size_t>(i)]) - (x - xs[static_cast<size_t>(i)]);
                if (delta == 0) return ExtNat::infinity();
                long best = -1;
                const auto consider = [&](long q, long at) {
                    // q shifts by delta per period; q + k*period*delta = 0
                    // pins the finishing step
                    if (q == 0 || (q > 0) == (delta > 0) || q % delta != 0) return;
                    const long s = at + (-q / delta) * period;
                    if (best < 0 || s < best) best = s;
                };
                for (long u = i; u < t; ++u) {
                    consider(ys[static_cast<size_t>(u)] - xs[static_cast<size_t>(u + 1)], u);
                    consider(ys[static_cast<size_t>(u + 1)] - xs[static_cast<size_t>(u + 1)], u);
                }
                if (best < 0) {
                    // a drift that pushes the gap toward zero must produce a
                    // finishing step: the gap cannot change sign
                    const bool shrinking = (delta > 0) != (ys[static_cast<size_t>(i)] - xs[static_cast<size_t>(i)] > 0);
                    if (shrinking) throw TheoremViolation("drift analysis inconsistent for " + A.str());
                    return ExtNat::infinity();
                }
                limit = best + period + 2;
            }
        } else if (t > limit) {
            throw TheoremViolation("predicted resolution end missed for " + A.str());
        }
        const long xn = step(x);
        if (xn == y) return ExtNat(2 * t);
        const long yn = step(y);
        if (xn == yn) return ExtNat(2 * t + 1);
        xs.push_back(xn);
        ys.push_back(yn);
    }
}

}  // namespace detail

inline ExtNat pdim(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    return detail::homdim_scan(A, [&](long j) { return A.f_ext(j); }, m.start, m.start + m.len);
}

inline ExtNat idim(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    return detail::homdim_scan(A, [&](long j) { return A.g_ext(j); }, m.start + m.len - 1, m.start - 1);
}

inline ExtNat pdim_simple(const Nakayama& A, int i) { return pdim(A, Interval{i, 1}); }
inline ExtNat idim_simple(const Nakayama& A, int i) { return idim(A, Interval{i, 1}); }

// Minimal projective resolution ... -> terms[1] -> terms[0] -> M -> 0.
// When the syzygy orbit cycles the resolution is infinite and
// Ω^{period_start + period_length} = Ω^{period_start}.
struct Resolution {
    std::vector<Interval> terms;
    bool finite = true;
    long period_start = -1;
    long period_length = 0;

    ExtNat length() const {
        return finite ? ExtNat(static_cast<long>(terms.size()) - 1) : ExtNat::infinity();
    }
};

inline Resolution min_proj_resolution(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    Resolution r;
    std::map<std::pair<long, long>, long> seen;
    std::optional<Interval> cur = m;
    for (long k = 0;; ++k) {
        const auto key = std::make_pair(static_cast<long>(A.vertex(A.top_vertex(*cur))), cur->len);
        const auto it = seen.find(key);
        if (it != seen.end()) {
            r.finite = false;
            r.period_start = it->second;
            r.period_length = k - it->second;
            return r;
        }
        seen.emplace(key, k);
        r.terms.push_back(A.projective(static_cast<int>(A.top_vertex(*cur))));
        cur = syzygy(A, *cur);
        if (!cur) return r;
    }
}

// Minimal injective coresolution 0 -> M -> terms[0] -> terms[1] -> ...
inline Resolution min_inj_coresolution(const Nakayama& A, const Interval& m) {
    A.require_module(m);
    Resolution r;
    std::map<std::pair<long, long>, long> seen;
    std::optional<Interval> cur = m;
    for (long k = 0;; ++k) {
        const auto key = std::make_pair(static_cast<long>(A.vertex(A.soc_vertex(*cur))), cur->len);
        const auto it = seen.find(key);
        if (it != seen.end()) {
            r.finite = false;
            r.period_start = it->second;
            r.period_length = k - it->second;
            return r;
        }
        seen.emplace(key, k);
        r.terms.push_back(A.injective(static_cast<int>(A.soc_vertex(*cur))));
        cur = cosyzygy(A, *cur);
        if (!cur) return r;
    }
}

}  // namespace nakalg
