#include "rootpoly/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <unordered_map>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

// inverse mod n (n need not be prime), gcd(a, n) = 1
u64 inv_mod(u64 a, u64 n) {
    if (n == 1) return 0;
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(n), nr = static_cast<long long>(a % n);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw Error("inv_mod: arguments are not coprime");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(n) : t);
}

u64 saturating_pow(u64 base, u64 exp) {
    u64 r = 1;
    while (exp--) {
        if (base != 0 && r > std::numeric_limits<u64>::max() / base)
            return std::numeric_limits<u64>::max();
        r *= base;
    }
    return r;
}

u64 ceil_div(u64 a, u64 b) { return a ? (a - 1) / b + 1 : 0; }

char digit_char(u64 c) {
    return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + (c - 10));
}

u64 digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<u64>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<u64>(c - 'a' + 10);
    throw ParseError("witness: invalid branch digit");
}

// degree of the interpolant through (nodes[j], v[j]) without building it:
// n minus the first i with sum_j v_j nodes[j]^i nonzero
std::size_t degree_from_values(const TaskGeometry& geo, const std::vector<u64>& v) {
    const u64 p = geo.p;
    std::vector<u64> npow(geo.n, 1);
    for (u64 i = 1; i <= geo.n; ++i) {
        u64 s = 0;
        for (u64 j = 0; j < geo.n; ++j) {
            npow[j] = modarith::mul(npow[j], geo.nodes[j], p);
            s = modarith::add(s, modarith::mul(v[j], npow[j], p), p);
        }
        if (s != 0) return static_cast<std::size_t>(geo.n - i);
    }
    throw Error("degree_from_values: zero interpolant");
}

std::size_t maintained_sums(const TaskGeometry& geo, const DegreeBound& bound) {
    u64 floor = std::min<u64>(bound.value, geo.n);
    return static_cast<std::size_t>(std::min<u64>(geo.n, geo.n - floor + 2));
}

struct SliceBest {
    std::size_t degree = std::numeric_limits<std::size_t>::max();
    std::string witness;
};

void keep_better(SliceBest& best, std::size_t deg, const std::vector<char>& wit) {
    if (deg > best.degree) return;
    if (deg < best.degree) {
        best.degree = deg;
        best.witness.assign(wit.begin(), wit.end());
        return;
    }
    if (std::lexicographical_compare(wit.begin(), wit.end(), best.witness.begin(),
                                     best.witness.end()))
        best.witness.assign(wit.begin(), wit.end());
}

// sign-vector slice walk (tau = 2): assignment bits in Gray order, bit k is
// the sign of node k + 1, node 0 pinned '+' by the negation symmetry
SliceBest gray_slice(const TaskGeometry& geo, std::size_t L,
                     const std::vector<std::vector<u64>>& M,
                     const std::vector<std::vector<u64>>& twoM, u64 lo, u64 hi) {
    const u64 p = geo.p;
    const u64 n = geo.n;
    std::vector<char> sign(n, '+');
    const u64 code = lo ^ (lo >> 1);
    for (u64 k = 0; k + 1 < n; ++k)
        if ((code >> k) & 1) sign[k + 1] = '-';

    std::vector<u64> S(L, 0);
    for (std::size_t i = 0; i < L; ++i)
        for (u64 j = 0; j < n; ++j)
            S[i] = sign[j] == '+' ? modarith::add(S[i], M[j][i], p)
                                  : modarith::sub(S[i], M[j][i], p);

    SliceBest best;
    auto consider = [&]() {
        for (std::size_t i = 0; i < L; ++i)
            if (S[i] != 0) {
                keep_better(best, static_cast<std::size_t>(n) - (i + 1), sign);
                return;
            }
        // all maintained sums vanished: fall back to the direct scan
        std::vector<u64> v(n);
        for (u64 j = 0; j < n; ++j) v[j] = sign[j] == '+' ? geo.bases[j] : p - geo.bases[j];
        keep_better(best, degree_from_values(geo, v), sign);
    };

    consider();
    for (u64 a = lo + 1; a < hi; ++a) {
        const u64 j = static_cast<u64>(std::countr_zero(a)) + 1;
        if (sign[j] == '+') {
            sign[j] = '-';
            for (std::size_t i = 0; i < L; ++i) S[i] = modarith::sub(S[i], twoM[j][i], p);
        } else {
            sign[j] = '+';
            for (std::size_t i = 0; i < L; ++i) S[i] = modarith::add(S[i], twoM[j][i], p);
        }
        consider();
    }
    return best;
}

// branch-digit slice walk (tau >= 3): base-tau counter over nodes 1..n-1,
// rightmost digit least significant, so counter order is witness lex order
SliceBest odometer_slice(const TaskGeometry& geo, std::size_t L,
                         const std::vector<std::vector<u64>>& val,
                         const std::vector<std::vector<u64>>& pw, u64 lo, u64 hi) {
    const u64 p = geo.p;
    const u64 n = geo.n;
    const u64 tau = geo.tau;
    std::vector<u64> digit(n, 0);
    std::vector<char> wit(n, '0');
    u64 rest = lo;
    for (u64 j = n; j-- > 1 && rest;) {
        digit[j] = rest % tau;
        wit[j] = digit_char(digit[j]);
        rest /= tau;
    }

    std::vector<u64> S(L, 0);
    for (std::size_t i = 0; i < L; ++i)
        for (u64 j = 0; j < n; ++j)
            S[i] = modarith::add(S[i], modarith::mul(val[j][digit[j]], pw[j][i], p), p);

    SliceBest best;
    auto consider = [&]() {
        for (std::size_t i = 0; i < L; ++i)
            if (S[i] != 0) {
                keep_better(best, static_cast<std::size_t>(n) - (i + 1), wit);
                return;
            }
        std::vector<u64> v(n);
        for (u64 j = 0; j < n; ++j) v[j] = val[j][digit[j]];
        keep_better(best, degree_from_values(geo, v), wit);
    };

    auto bump = [&](u64 j) { // digit[j] += 1 mod tau, sums updated; true on wrap
        const u64 c = digit[j];
        const u64 next = c + 1 == tau ? 0 : c + 1;
        const u64 delta = modarith::sub(val[j][next], val[j][c], p);
        for (std::size_t i = 0; i < L; ++i)
            S[i] = modarith::add(S[i], modarith::mul(delta, pw[j][i], p), p);
        digit[j] = next;
        wit[j] = digit_char(next);
        return next == 0;
    };

    consider();
    for (u64 a = lo + 1; a < hi; ++a) {
        u64 j = n - 1;
        while (bump(j) && j > 1) --j;
        consider();
    }
    return best;
}

template <class SliceFn>
SliceBest run_slices(u64 space, unsigned threads, SliceFn&& slice) {
    threads = std::max(1u, threads);
    const u64 chunk = std::max<u64>(1, ceil_div(space, threads));
    std::vector<SliceBest> parts;
    std::vector<std::pair<u64, u64>> ranges;
    for (u64 lo = 0; lo < space; lo += chunk) ranges.emplace_back(lo, std::min(space, lo + chunk));
    parts.resize(ranges.size());
    if (ranges.size() == 1) {
        parts[0] = slice(ranges[0].first, ranges[0].second);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t r = 0; r < ranges.size(); ++r)
            pool.emplace_back([&, r] { parts[r] = slice(ranges[r].first, ranges[r].second); });
        for (auto& th : pool) th.join();
    }
    SliceBest best;
    for (const auto& part : parts)
        if (part.degree < best.degree ||
            (part.degree == best.degree && part.witness < best.witness))
            best = part;
    return best;
}

} // namespace

TaskGeometry TaskGeometry::build(u64 p, unsigned t) {
    RootTask task(p, t); // validates the prime and t >= 2
    FieldContext F(p);
    TaskGeometry geo;
    geo.p = p;
    geo.t = t;
    geo.tau = task.tau();
    geo.n = task.size();
    geo.g = F.generator();
    geo.zeta = modarith::pow(geo.g, geo.n, p);
    if (geo.n > (u64{1} << 26))
        throw SearchSpaceTooLarge("node set of size " + std::to_string(geo.n) +
                                  " is too large to materialize");
    const u64 tprime = t / geo.tau;
    const u64 step_exp = inv_mod(tprime % geo.n == 0 ? 1 : tprime % geo.n, geo.n);
    const u64 gtau = modarith::pow(geo.g, geo.tau, p);
    const u64 gstep = modarith::pow(geo.g, step_exp, p);
    const u64 zeta_inv = modarith::pow(geo.zeta, p - 2, p);
    geo.nodes.resize(geo.n);
    geo.bases.resize(geo.n);
    u64 node = 1, base = 1, exp = 0;
    for (u64 j = 0; j < geo.n; ++j) {
        geo.nodes[j] = node;
        geo.bases[j] = base;
        node = modarith::mul(node, gtau, p);
        base = modarith::mul(base, gstep, p);
        exp += step_exp;
        if (exp >= geo.n) { // exponent wrapped past n: cancel the stray g^n
            exp -= geo.n;
            base = modarith::mul(base, zeta_inv, p);
        }
    }
    return geo;
}

DegreeBound degree_bound(u64 p, unsigned t, unsigned e) {
    RootTask task(p, t);
    const u64 n = task.size();
    const u64 kept = n > e ? n - e : 0;
    DegreeBound trivial{kept > 1 ? ceil_div(kept, t) : 0, "trivial", false};

    if (t == 2) {
        if (p % 4 == 3 && p >= 7) {
            if (e == 0) return DegreeBound{(p + 1) / 4, "(p+1)/4", true};
            return DegreeBound{kept > 1 ? ceil_div(p - 1 - 2 * u64{e}, 4) : 0,
                               "(p-1)/4 - e/2", false};
        }
        if (p % 4 == 1 && p >= 13) {
            const u64 third_raw = ceil_div(p - 1, 3);
            const u64 third = third_raw > e ? third_raw - e : 0;
            const u64 quarter = kept > 1 ? ceil_div(p - 1 - 2 * u64{e}, 4) : 0;
            if (third >= quarter)
                return DegreeBound{third, e ? "(p-1)/3 - e" : "(p-1)/3", false};
            return DegreeBound{quarter, "(p-1)/4 - e/2", false};
        }
        return trivial;
    }

    if (p % t == 1) {
        const u128 t2 = static_cast<u128>(t) * t;
        const bool special = (p % t2) == (t2 + 1 - t) % t2 ||
                             (2 * static_cast<u128>(p)) % t2 == (t2 + 2 - t) % t2;
        if (special) return DegreeBound{trivial.value, "((p-1)/t - e)/t", false};
        if (p > static_cast<u64>(t) * (t + 1)) {
            const u64 lam_raw = ceil_div(2 * p, static_cast<u64>(t) * (t + 1));
            const u64 lam = lam_raw > e ? lam_raw - e : 0;
            if (lam > trivial.value) return DegreeBound{lam, "2p/(t(t+1)) - e", false};
        }
    }
    return trivial;
}

SearchReport min_degree_exhaustive(u64 p, unsigned t, unsigned threads, const SearchLimits& limits) {
    const auto t0 = clock_type::now();
    const TaskGeometry geo = TaskGeometry::build(p, t);
    threads = std::max(1u, threads);

    SearchReport rep;
    rep.p = p;
    rep.t = t;
    rep.e = 0;
    rep.threads = threads;
    rep.bound = degree_bound(p, t, 0);
    rep.vectors = saturating_pow(geo.tau, geo.n);
    if (rep.vectors == std::numeric_limits<u64>::max())
        throw SearchSpaceTooLarge("assignment space overflows the counter");
    if (rep.vectors > limits.max_assignments)
        throw SearchSpaceTooLarge("assignment space " + std::to_string(rep.vectors) +
                                  " exceeds the cap " + std::to_string(limits.max_assignments));

    const std::size_t L = maintained_sums(geo, rep.bound);
    if (geo.tau == 1) {
        rep.min_degree = degree_from_values(geo, geo.bases);
        rep.witness.assign(geo.n, '0');
    } else if (geo.tau == 2) {
        // M[j][i-1] = bases_j nodes_j^i; a sign flip moves S_i by 2 M
        std::vector<std::vector<u64>> M(geo.n, std::vector<u64>(L));
        std::vector<std::vector<u64>> twoM(geo.n, std::vector<u64>(L));
        for (u64 j = 0; j < geo.n; ++j) {
            u64 acc = geo.bases[j];
            for (std::size_t i = 0; i < L; ++i) {
                acc = modarith::mul(acc, geo.nodes[j], p);
                M[j][i] = acc;
                twoM[j][i] = modarith::add(acc, acc, p);
            }
        }
        const u64 space = u64{1} << (geo.n - 1);
        SliceBest best = run_slices(space, threads, [&](u64 lo, u64 hi) {
            return gray_slice(geo, L, M, twoM, lo, hi);
        });
        rep.min_degree = best.degree;
        rep.witness = best.witness;
    } else {
        if (geo.tau > 36) throw Error("branch alphabet supports tau <= 36");
        std::vector<std::vector<u64>> val(geo.n, std::vector<u64>(geo.tau));
        std::vector<std::vector<u64>> pw(geo.n, std::vector<u64>(L));
        for (u64 j = 0; j < geo.n; ++j) {
            u64 v = geo.bases[j];
            for (u64 c = 0; c < geo.tau; ++c) {
                val[j][c] = v;
                v = modarith::mul(v, geo.zeta, p);
            }
            u64 acc = 1;
            for (std::size_t i = 0; i < L; ++i) {
                acc = modarith::mul(acc, geo.nodes[j], p);
                pw[j][i] = acc;
            }
        }
        const u64 space = saturating_pow(geo.tau, geo.n - 1);
        SliceBest best = run_slices(space, threads, [&](u64 lo, u64 hi) {
            return odometer_slice(geo, L, val, pw, lo, hi);
        });
        rep.min_degree = best.degree;
        rep.witness = best.witness;
    }

    rep.bound_ok = rep.min_degree >= rep.bound.value &&
                   (!rep.bound.equality || rep.min_degree == rep.bound.value);
    rep.ms = elapsed_ms(t0);
    return rep;
}

namespace {

struct RobustKey {
    std::size_t degree = std::numeric_limits<std::size_t>::max();
    std::size_t k = 0;
    std::vector<std::size_t> dropped;
    std::string witness;

    bool better_than(const RobustKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (k != o.k) return k < o.k;
        if (dropped != o.dropped) return dropped < o.dropped;
        return witness < o.witness;
    }
};

// best interpolant over every sign choice on the kept nodes
RobustKey robust_subset(const TaskGeometry& geo, const std::vector<std::size_t>& dropped) {
    const u64 p = geo.p;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < geo.n; ++j)
        if (!std::binary_search(dropped.begin(), dropped.end(), j)) kept.push_back(j);

    RobustKey best;
    const std::size_t free_signs = kept.size() - 1; // first kept node pinned '+'
    std::vector<std::pair<FieldElement, FieldElement>> pts(kept.size());
    for (u64 mask = 0; mask < (u64{1} << free_signs); ++mask) {
        for (std::size_t idx = 0; idx < kept.size(); ++idx) {
            const std::size_t j = kept[idx];
            const bool minus = idx > 0 && (mask >> (free_signs - idx)) & 1;
            pts[idx] = {FieldElement(geo.nodes[j], p),
                        FieldElement(minus ? p - geo.bases[j] : geo.bases[j], p)};
        }
        const std::size_t deg = interpolate(pts).degree().value_or(0);
        if (deg > best.degree) continue;
        std::string wit(geo.n, '.');
        for (std::size_t idx = 0; idx < kept.size(); ++idx)
            wit[kept[idx]] = idx > 0 && (mask >> (free_signs - idx)) & 1 ? '-' : '+';
        RobustKey cand{deg, dropped.size(), dropped, std::move(wit)};
        if (cand.better_than(best)) best = std::move(cand);
    }
    return best;
}

} // namespace

SearchReport min_degree_robust(u64 p, unsigned e, unsigned threads, const SearchLimits& limits) {
    const auto t0 = clock_type::now();
    if (e == 0) {
        SearchReport rep = min_degree_exhaustive(p, 2, threads, limits);
        rep.ms = elapsed_ms(t0);
        return rep;
    }
    const TaskGeometry geo = TaskGeometry::build(p, 2);
    const std::size_t m = geo.n;
    if (e >= m) throw HypothesisViolated("exception budget must leave at least one node");
    if (m > 63)
        throw SearchSpaceTooLarge("assignment space overflows the counter");
    threads = std::max(1u, threads);

    // every subset of size 0..e, lexicographic within each size
    std::vector<std::vector<std::size_t>> subsets;
    u128 vectors = 0;
    for (std::size_t k = 0; k <= e; ++k) {
        std::vector<std::size_t> u(k);
        for (std::size_t i = 0; i < k; ++i) u[i] = i;
        while (true) {
            subsets.push_back(u);
            vectors += u128{1} << (m - k);
            if (k == 0) break;
            std::size_t i = k;
            while (i-- > 0 && u[i] == m - k + i) {}
            if (i == std::numeric_limits<std::size_t>::max()) break;
            ++u[i];
            for (std::size_t j = i + 1; j < k; ++j) u[j] = u[j - 1] + 1;
        }
    }
    if (vectors > limits.max_assignments)
        throw SearchSpaceTooLarge("assignment space exceeds the cap " +
                                  std::to_string(limits.max_assignments));

    std::vector<RobustKey> results(subsets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < subsets.size();)
            results[i] = robust_subset(geo, subsets[i]);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RobustKey best;
    for (const auto& r : results)
        if (r.better_than(best)) best = r;

    SearchReport rep;
    rep.p = p;
    rep.t = 2;
    rep.e = e;
    rep.threads = threads;
    rep.min_degree = best.degree;
    rep.witness = best.witness;
    rep.dropped = best.dropped;
    rep.vectors = static_cast<u64>(vectors);
    rep.bound = degree_bound(p, 2, e);
    rep.bound_ok = rep.min_degree >= rep.bound.value;
    rep.ms = elapsed_ms(t0);
    return rep;
}

DensePoly witness_interpolant(u64 p, unsigned t, const std::string& witness) {
    const TaskGeometry geo = TaskGeometry::build(p, t);
    if (witness.size() != geo.n)
        throw ParseError("witness length " + std::to_string(witness.size()) +
                         " does not match the node count " + std::to_string(geo.n));
    std::vector<std::pair<FieldElement, FieldElement>> pts;
    for (std::size_t j = 0; j < geo.n; ++j) {
        const char c = witness[j];
        if (c == '.') continue;
        u64 v;
        if (geo.tau == 2) {
            if (c != '+' && c != '-') throw ParseError("witness: expected '+', '-' or '.'");
            v = c == '+' ? geo.bases[j] : p - geo.bases[j];
        } else {
            const u64 d = digit_value(c);
            if (d >= geo.tau) throw ParseError("witness: branch digit out of range");
            v = modarith::mul(geo.bases[j], modarith::pow(geo.zeta, d, p), p);
        }
        pts.emplace_back(FieldElement(geo.nodes[j], p), FieldElement(v, p));
    }
    if (pts.empty()) throw EmptyInput("witness drops every node");
    return interpolate(pts);
}

u64 leading_coefficient(u64 p, const std::string& signs, u64 i) {
    FieldContext F(p);
    const u64 m = (p - 1) / 2;
    if (signs.size() != m) throw ParseError("sign vector must have (p-1)/2 entries");
    if (i < 1 || i > m) throw InvalidOrder("coefficient index must lie in [1, (p-1)/2]");
    const u64 step = modarith::pow(F.generator(), 2 * i + 1, p);
    u64 term = 1, s = 0;
    for (u64 j = 0; j < m; ++j) {
        if (signs[j] == '+') s = modarith::add(s, term, p);
        else if (signs[j] == '-') s = modarith::sub(s, term, p);
        else throw ParseError("sign vector: expected '+' or '-'");
        term = modarith::mul(term, step, p);
    }
    return (FieldElement(s, p) / FieldElement(m, p)).value;
}

namespace {

struct KernelTables {
    TaskGeometry geo;
    std::vector<std::vector<u64>> row;    // row[i][j] = bases_j nodes_j^(i+1)
    std::vector<std::vector<u64>> tworow; // doubled, for sign flips
};

KernelTables kernel_tables(u64 p, unsigned depth) {
    KernelTables kt{TaskGeometry::build(p, 2), {}, {}};
    const u64 m = kt.geo.n;
    if (depth == 0 || depth >= m)
        throw HypothesisViolated("depth must lie in [1, node count)");
    kt.row.assign(depth, std::vector<u64>(m));
    kt.tworow.assign(depth, std::vector<u64>(m));
    for (u64 j = 0; j < m; ++j) {
        u64 acc = kt.geo.bases[j];
        for (unsigned i = 0; i < depth; ++i) {
            acc = modarith::mul(acc, kt.geo.nodes[j], p);
            kt.row[i][j] = acc;
            kt.tworow[i][j] = modarith::add(acc, acc, p);
        }
    }
    return kt;
}

void finalize_kernel_hit(const KernelTables& kt, const std::vector<char>& sign,
                         KernelReport& rep) {
    const u64 p = kt.geo.p;
    const u64 m = kt.geo.n;
    std::vector<u64> v(m);
    std::vector<std::pair<FieldElement, FieldElement>> pts(m);
    for (u64 j = 0; j < m; ++j) {
        v[j] = sign[j] == '+' ? kt.geo.bases[j] : p - kt.geo.bases[j];
        pts[j] = {FieldElement(kt.geo.nodes[j], p), FieldElement(v[j], p)};
    }
    rep.found = true;
    rep.witness.assign(sign.begin(), sign.end());
    rep.degree = degree_from_values(kt.geo, v);
    rep.errors = verify_root_poly(interpolate(pts), RootTask(p, 2));
}

void kernel_exhaustive(const KernelTables& kt, u64 cap, KernelReport& rep) {
    const u64 p = kt.geo.p;
    const u64 m = kt.geo.n;
    const unsigned depth = rep.depth;
    const u64 space = m - 1 < 63 ? u64{1} << (m - 1) : std::numeric_limits<u64>::max();
    if (space > cap)
        throw SearchSpaceTooLarge("sign space " + std::to_string(space) +
                                  " exceeds the cap " + std::to_string(cap));

    // bit b of the counter holds node m-1-b, so counter order is witness
    // lex order and the first hit is the lex-least witness
    std::vector<char> sign(m, '+');
    std::vector<u64> S(depth, 0);
    for (unsigned i = 0; i < depth; ++i)
        for (u64 j = 0; j < m; ++j) S[i] = modarith::add(S[i], kt.row[i][j], p);

    for (u64 a = 0;; ++a) {
        rep.examined = a + 1;
        bool zero = true;
        for (unsigned i = 0; i < depth && zero; ++i) zero = S[i] == 0;
        if (zero) {
            finalize_kernel_hit(kt, sign, rep);
            return;
        }
        if (a + 1 == space) return;
        const u64 flip = a ^ (a + 1); // low block of changed bits
        for (u64 b = 0; (flip >> b) & 1; ++b) {
            const u64 j = m - 1 - b;
            if (sign[j] == '+') {
                sign[j] = '-';
                for (unsigned i = 0; i < depth; ++i)
                    S[i] = modarith::sub(S[i], kt.tworow[i][j], p);
            } else {
                sign[j] = '+';
                for (unsigned i = 0; i < depth; ++i)
                    S[i] = modarith::add(S[i], kt.tworow[i][j], p);
            }
        }
    }
}

void kernel_meet_in_middle(const KernelTables& kt, u64 cap, KernelReport& rep) {
    if (rep.depth != 1) throw HypothesisViolated("meet_in_middle supports depth 1 only");
    const u64 p = kt.geo.p;
    const u64 m = kt.geo.n;
    const u64 h = m - (m - 1) / 2; // left nodes [0, h), right nodes [h, m)
    const u64 right_bits = m - h, left_bits = h - 1;
    if (right_bits >= 63 || left_bits >= 63 ||
        (u64{1} << right_bits) + (u64{1} << left_bits) > cap)
        throw SearchSpaceTooLarge("half spaces exceed the cap " + std::to_string(cap));

    const std::vector<u64>& row = kt.row[0];
    const std::vector<u64>& tworow = kt.tworow[0];

    // right half: partial sum -> least assignment index (lex-least string)
    std::unordered_map<u64, u64> table;
    table.reserve(static_cast<std::size_t>(u64{1} << right_bits));
    {
        u64 sum = 0;
        for (u64 j = h; j < m; ++j) sum = modarith::add(sum, row[j], p);
        std::vector<char> sign(m, '+');
        for (u64 r = 0;; ++r) {
            table.emplace(sum, r);
            ++rep.examined;
            if (r + 1 == u64{1} << right_bits) break;
            const u64 flip = r ^ (r + 1);
            for (u64 b = 0; (flip >> b) & 1; ++b) {
                const u64 j = m - 1 - b;
                if (sign[j] == '+') {
                    sign[j] = '-';
                    sum = modarith::sub(sum, tworow[j], p);
                } else {
                    sign[j] = '+';
                    sum = modarith::add(sum, tworow[j], p);
                }
            }
        }
    }

    // left half in lex order; the first match is the global lex-least hit
    u64 sum = 0;
    for (u64 j = 0; j < h; ++j) sum = modarith::add(sum, row[j], p);
    std::vector<char> sign(m, '+');
    for (u64 l = 0;; ++l) {
        ++rep.examined;
        const auto it = table.find(sum == 0 ? 0 : p - sum);
        if (it != table.end()) {
            u64 r = it->second;
            for (u64 b = 0; b < right_bits; ++b)
                sign[m - 1 - b] = (r >> b) & 1 ? '-' : '+';
            finalize_kernel_hit(kt, sign, rep);
            return;
        }
        if (l + 1 == u64{1} << left_bits) return;
        const u64 flip = l ^ (l + 1);
        for (u64 b = 0; (flip >> b) & 1; ++b) {
            const u64 j = h - 1 - b;
            if (sign[j] == '+') {
                sign[j] = '-';
                sum = modarith::sub(sum, tworow[j], p);
            } else {
                sign[j] = '+';
                sum = modarith::add(sum, tworow[j], p);
            }
        }
    }
}

void kernel_random_flip(const KernelTables& kt, u64 budget, u64 seed, KernelReport& rep) {
    const u64 p = kt.geo.p;
    const u64 m = kt.geo.n;
    const unsigned depth = rep.depth;
    constexpr int kCandidates = 32;
    const u64 stall_limit = 64 * m;
    std::mt19937_64 rng(seed);

    std::vector<char> sign(m, '+');
    std::vector<u64> S(depth, 0);
    auto restart = [&] {
        sign.assign(m, '+');
        for (u64 j = 1; j < m; ++j)
            if (rng() & 1) sign[j] = '-';
        for (unsigned i = 0; i < depth; ++i) {
            S[i] = 0;
            for (u64 j = 0; j < m; ++j)
                S[i] = sign[j] == '+' ? modarith::add(S[i], kt.row[i][j], p)
                                      : modarith::sub(S[i], kt.row[i][j], p);
        }
    };
    auto residual_of = [&](const std::vector<u64>& sums) {
        unsigned r = 0;
        for (unsigned i = 0; i < depth; ++i) r += sums[i] != 0;
        return r;
    };

    restart();
    unsigned residual = residual_of(S);
    u64 stall = 0;
    std::vector<u64> cand(depth);
    while (residual != 0 && rep.examined < budget) {
        u64 best_j = 0;
        unsigned best_res = std::numeric_limits<unsigned>::max();
        for (int c = 0; c < kCandidates; ++c) {
            const u64 j = 1 + rng() % (m - 1);
            for (unsigned i = 0; i < depth; ++i)
                cand[i] = sign[j] == '+' ? modarith::sub(S[i], kt.tworow[i][j], p)
                                         : modarith::add(S[i], kt.tworow[i][j], p);
            const unsigned res = residual_of(cand);
            if (res < best_res) {
                best_res = res;
                best_j = j;
            }
        }
        rep.examined += kCandidates;
        if (best_res <= residual) { // plateau steps keep the walk moving
            const u64 j = best_j;
            for (unsigned i = 0; i < depth; ++i)
                S[i] = sign[j] == '+' ? modarith::sub(S[i], kt.tworow[i][j], p)
                                      : modarith::add(S[i], kt.tworow[i][j], p);
            sign[j] = sign[j] == '+' ? '-' : '+';
            stall = best_res < residual ? 0 : stall + 1;
            residual = best_res;
        } else {
            ++stall;
        }
        if (stall > stall_limit) {
            restart();
            residual = residual_of(S);
            stall = 0;
        }
    }

    if (residual == 0) {
        // paranoia: the incremental sums must match a from-scratch recount
        std::vector<u64> fresh(depth, 0);
        for (unsigned i = 0; i < depth; ++i)
            for (u64 j = 0; j < m; ++j)
                fresh[i] = sign[j] == '+' ? modarith::add(fresh[i], kt.row[i][j], p)
                                          : modarith::sub(fresh[i], kt.row[i][j], p);
        if (fresh != S) throw TheoremViolation("incremental kernel sums diverged");
        finalize_kernel_hit(kt, sign, rep);
    }
}

} // namespace

KernelReport kernel_sign_search(u64 p, unsigned depth, KernelStrategy strategy, u64 budget,
                                u64 seed) {
    const auto t0 = clock_type::now();
    const KernelTables kt = kernel_tables(p, depth);
    KernelReport rep;
    rep.p = p;
    rep.depth = depth;
    rep.strategy = strategy;
    rep.seed = seed;
    switch (strategy) {
    case KernelStrategy::exhaustive:
        kernel_exhaustive(kt, budget ? budget : SearchLimits{}.max_assignments, rep);
        break;
    case KernelStrategy::meet_in_middle:
        kernel_meet_in_middle(kt, budget ? budget : SearchLimits{}.max_assignments, rep);
        break;
    case KernelStrategy::random_flip:
        kernel_random_flip(kt, budget ? budget : u64{1} << 22, seed, rep);
        break;
    }
    rep.ms = elapsed_ms(t0);
    return rep;
}

EquidistReport equidist_stats(u64 p, const std::vector<int>& signs, unsigned k) {
    FieldContext F(p);
    if (signs.empty()) throw EmptyInput("equidist needs at least one sign");
    for (int s : signs)
        if (s != 1 && s != -1) throw HypothesisViolated("signs must be +1 or -1");
    if (k == 0) throw InvalidOrder("bucket count must be positive");

    EquidistReport rep;
    rep.p = p;
    rep.k = k;
    rep.counts.assign(k, 0);
    const u64 m = (p - 1) / 2;
    std::vector<u64> y(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) y[i] = signs[i] == 1 ? 1 : p - 1;

    const u64 g = F.generator();
    u64 x = 1;
    for (u64 j = 0; j < m; ++j) {
        const u64 x2 = modarith::mul(x, x, p);
        u64 acc = 0;
        for (std::size_t i = y.size(); i-- > 0;)
            acc = modarith::add(modarith::mul(acc, x2, p), y[i], p);
        const u64 val = modarith::mul(acc, x, p);
        rep.counts[static_cast<std::size_t>(static_cast<u128>(val) * k / p)]++;
        x = modarith::mul(x, g, p);
    }

    const double target = 1.0 / k;
    for (u64 c : rep.counts)
        rep.max_dev = std::max(rep.max_dev, std::abs(static_cast<double>(c) / m - target));
    const double lnp = std::log(static_cast<double>(p));
    rep.bound = 4.0 * static_cast<double>(signs.size()) * lnp * lnp / std::sqrt(static_cast<double>(p));
    rep.ok = rep.max_dev <= rep.bound;
    return rep;
}

} // namespace rootpoly
