#include "gw/virasoro.hpp"

#include <stdexcept>

#include "gw/series.hpp"

namespace gw {

namespace {

Rat parity(long m) { return m % 2 == 0 ? Rat(1) : Rat(-1); }

long sum_ma(const std::vector<Insertion>& ins) {
    long s = 0;
    for (const auto& i : ins) s += i.m + i.a;
    return s;
}

// Constant part of the slot relation: slot index = (r+1)e + kc - b.
long kc_of(const Context& ctx) { return (ctx.r - 3) * (1 - ctx.g) + ctx.n() - ctx.S(); }

// Smallest e giving a nonnegative slot index for class b.
long e_start(const Context& ctx, ClassIndex b) {
    long num = b - kc_of(ctx);
    if (num <= 0) return -((-num) / (ctx.r + 1));
    return (num + ctx.r) / (ctx.r + 1);
}

} // namespace

AffineForm virasoro_coefficient(Engine& eng, const Context& ctx, long d, long N, bool symmetrized) {
    const int r = ctx.r, g = ctx.g;
    if (g < 1) throw std::invalid_argument("virasoro_coefficient: genus must be >= 1");
    const long k = k_of_d(ctx, d);
    if (k < 1) throw std::invalid_argument("virasoro_coefficient: level k(d) must be >= 1");
    const long kc = kc_of(ctx);
    const Rat half = rat(1, 2);
    AffineForm form(N);

    // Genus-reducing quadratic term: both new insertions land on one genus
    // g-1 correlator carrying the full tail.
    for (long p = 0; p <= k + 1; ++p) {
        const Rat rp = rat_pow(Rat(r + 1), p);
        for (ClassIndex a = 0; a + p <= r; ++a) {
            for (long m = p - k; m <= -1; ++m) {
                Rat br = bracket(Rat(a + m) + rat(1 - r, 2), k, p);
                if (br == 0) continue;
                InvKey key{r, g - 1, d, ctx.tail};
                key.ins.push_back({-m - 1, static_cast<ClassIndex>(r - a)});
                key.ins.push_back({k + m - p, static_cast<ClassIndex>(a + p)});
                Rat val = eng.invariant(std::move(key));
                if (val == 0) continue;
                form.constant += half * parity(m) * br * rp * val;
            }
        }
    }

    // Genus-splitting quadratic term over known factor pairs. The descendant
    // index of the first factor is fixed by the dimension condition; the two
    // ends carrying the genus-g full-tail factor are handled below. Degree-0
    // genus-0 factors realize the convention-absorbed linear terms.
    for (int h = 0; h <= g; ++h) {
        for_each_split(ctx.tail, [&](const std::vector<Insertion>& T1, const std::vector<Insertion>& T2, const Rat& mult) {
            if (h == g && T2.empty()) return;
            if (h == 0 && T1.empty()) return;
            const long s1 = sum_ma(T1);
            const long n1 = static_cast<long>(T1.size());
            for (long d1 = 0; d1 <= d; ++d1) {
                for (ClassIndex a = 0; a <= r; ++a) {
                    const long m1 = (r + 1) * d1 + (r - 3) * (1 - h) + (1 + n1) - (r - a) - s1;
                    const long m = -m1 - 1;
                    InvKey k1{r, h, d1, T1};
                    k1.ins.push_back({m1, static_cast<ClassIndex>(r - a)});
                    Rat f1 = eng.invariant(std::move(k1));
                    if (f1 == 0) continue;
                    for (long p = 0; p <= k + 1 && a + p <= r; ++p) {
                        Rat br = bracket(Rat(a + m) + rat(1 - r, 2), k, p);
                        if (br == 0) continue;
                        InvKey k2{r, g - h, d - d1, T2};
                        k2.ins.push_back({k + m - p, static_cast<ClassIndex>(a + p)});
                        Rat f2 = eng.invariant(std::move(k2));
                        if (f2 == 0) continue;
                        form.constant += mult * half * parity(m) * br * rat_pow(Rat(r + 1), p) * f1 * f2;
                    }
                }
            }
        });
    }

    // Unknown-bearing end: genus-0 one-point (or convention) factor against
    // the genus-g full-tail factor, which is a family slot. The two h-ends
    // are equal term by term; the symmetrized form keeps one at weight 1.
    const Rat uw = symmetrized ? Rat(1) : half;
    for (long p = 0; p <= k + 1; ++p) {
        const Rat rp = rat_pow(Rat(r + 1), p);
        for (ClassIndex a = 0; a + p <= r; ++a) {
            const ClassIndex b = static_cast<ClassIndex>(a + p);
            for (long e = e_start(ctx, b); e <= d; ++e) {
                const long mslot = (r + 1) * e + kc - b;
                const long m1 = (r + 1) * (d - e) + a - 2;
                const long mu = -m1 - 1;
                Rat br = bracket(Rat(a + mu) + rat(1 - r, 2), k, p);
                if (br == 0) continue;
                InvKey opk{r, 0, d - e, {}};
                opk.ins.push_back({m1, static_cast<ClassIndex>(r - a)});
                Rat op = eng.invariant(std::move(opk));
                if (op == 0) continue;
                AffineForm term = lookup_unknown(eng, ctx, b, e, mslot, N);
                form += (uw * parity(mu) * br * rp * op) * term;
            }
        }
    }
    if (!symmetrized) {
        for (long p = 0; p <= k + 1; ++p) {
            const Rat rp = rat_pow(Rat(r + 1), p);
            for (ClassIndex a = 0; a + p <= r; ++a) {
                const ClassIndex b1 = static_cast<ClassIndex>(r - a);
                for (long d1 = e_start(ctx, b1); d1 <= d; ++d1) {
                    const long mu = (r + 1) * d1 + kc - b1;
                    const long m = -mu - 1;
                    Rat br = bracket(Rat(a + m) + rat(1 - r, 2), k, p);
                    if (br == 0) continue;
                    InvKey opk{r, 0, d - d1, {}};
                    opk.ins.push_back({k + m - p, static_cast<ClassIndex>(a + p)});
                    Rat op = eng.invariant(std::move(opk));
                    if (op == 0) continue;
                    AffineForm term = lookup_unknown(eng, ctx, b1, d1, mu, N);
                    form += (half * parity(m) * br * rp * op) * term;
                }
            }
        }
    }
    return form;
}

AffineForm lookup_unknown(Engine& eng, const Context& ctx, ClassIndex b, long e, long m, long N) {
    AffineForm form(N);
    if (m < 0) return form;
    auto [bm, em] = solve_unknown_slot(ctx, m);
    if (bm != b || em != e) throw std::logic_error("lookup_unknown: slot data inconsistent with index");
    if (m < N) {
        form.linear[static_cast<size_t>(m)] = 1;
        return form;
    }

    const int r = ctx.r;
    const long mp = m - N;

    // TRR substitution: the full-tail terms of the recursion are exactly the
    // family slots (their dimension condition pins (class, degree, index)).
    for (long j = 0; j < N; ++j) {
        auto [bj, ej] = solve_unknown_slot(ctx, j);
        form.linear[static_cast<size_t>(j)] +=
            eng.aux({r, N - 1 - j, {mp, bm}, static_cast<ClassIndex>(r - bj), em - ej, {}});
    }

    // Known part: terms whose genus-g factor carries a proper subset of the
    // tail; those recurse into strictly smaller families.
    for_each_split(ctx.tail, [&](const std::vector<Insertion>& T1, const std::vector<Insertion>& T2, const Rat& mult) {
        if (T1.empty()) return;
        for (long j = 0; j < N; ++j) {
            for (ClassIndex c = 0; c <= r; ++c) {
                for (long e2 = 0; e2 <= em; ++e2) {
                    InvKey gk{r, ctx.g, e2, T2};
                    gk.ins.push_back({j, static_cast<ClassIndex>(r - c)});
                    Rat gv = eng.invariant(std::move(gk));
                    if (gv == 0) continue;
                    form.constant += mult * eng.aux({r, N - 1 - j, {mp, bm}, c, em - e2, T1}) * gv;
                }
            }
        }
    });
    return form;
}

Rat v_entry(Engine& eng, const Context& ctx, long N, long d, long j) {
    const int r = ctx.r;
    const long k = k_of_d(ctx, d);
    auto [bj, ej] = solve_unknown_slot(ctx, j);
    const long i = N - 1 - j;
    Rat sum(0);
    for (long p = 0; p <= k + 1; ++p) {
        const Rat rp = rat_pow(Rat(r + 1), p);
        for (ClassIndex a = 0; a + p <= r; ++a) {
            const ClassIndex b = static_cast<ClassIndex>(a + p);
            for (long e = ej; e <= d; ++e) {
                const long de = d - e;
                Rat br = bracket(rat(3 - r, 2) - Rat(de * (r + 1)), k, p);
                if (br == 0) continue;
                InvKey opk{r, 0, de, {}};
                opk.ins.push_back({(r + 1) * de + a - 2, static_cast<ClassIndex>(r - a)});
                Rat op = eng.invariant(std::move(opk));
                if (op == 0) continue;
                const long s = (r + 1) * (e - ej) - 1 - i - b + bj;
                Rat av = eng.aux({r, i, {s, b}, static_cast<ClassIndex>(r - bj), e - ej, {}});
                if (av == 0) continue;
                sum += parity(1 - a - de * (r + 1)) * br * rp * op * av;
            }
        }
    }
    return sum;
}

std::vector<Rat> solve_family(Engine& eng, const Context& ctx, const std::vector<long>* rows) {
    if (ctx.g < 1) throw std::invalid_argument("solve_family: genus must be >= 1");
    const long N = 3L * ctx.g - 1;

    std::vector<long> ds;
    if (rows) {
        ds = *rows;
        if (static_cast<long>(ds.size()) != N) throw std::invalid_argument("solve_family: need exactly N rows");
        for (long d : ds)
            if (k_of_d(ctx, d) < 1) throw std::invalid_argument("solve_family: row degree below the level threshold");
    } else {
        const long d0 = delta(ctx);
        for (long t = 0; t < N; ++t) ds.push_back(d0 + t);
    }

    const bool canonical = rows == nullptr;
    if (canonical && eng.family_solved(ctx)) {
        std::vector<Rat> x(static_cast<size_t>(N), Rat(0));
        for (long j = 0; j < N; ++j) {
            auto [bj, ej] = solve_unknown_slot(ctx, j);
            if (ej < 0) continue;
            InvKey key{ctx.r, ctx.g, ej, ctx.tail};
            key.ins.push_back({j, bj});
            key.canonicalize();
            auto hit = eng.cache().find_inv(key);
            if (!hit) throw std::logic_error("solve_family: solved family is missing a slot value");
            x[static_cast<size_t>(j)] = *hit;
        }
        return x;
    }

    Matrix a(N, N);
    std::vector<Rat> rhs(static_cast<size_t>(N));
    for (long i = 0; i < N; ++i) {
        AffineForm row = virasoro_coefficient(eng, ctx, ds[static_cast<size_t>(i)], N);
        if (eng.verify()) {
            for (long j = 0; j < N; ++j)
                if (row.linear[static_cast<size_t>(j)] != v_entry(eng, ctx, N, ds[static_cast<size_t>(i)], j))
                    throw std::logic_error("solve_family: assembled row disagrees with the direct matrix entry");
            if (!(row == virasoro_coefficient(eng, ctx, ds[static_cast<size_t>(i)], N, false)))
                throw std::logic_error("solve_family: symmetrized and half-weight assemblies disagree");
        }
        for (long j = 0; j < N; ++j) a.at(i, j) = row.linear[static_cast<size_t>(j)];
        rhs[static_cast<size_t>(i)] = -row.constant;
    }

    std::vector<Rat> x = solve({a, rhs});
    ++eng.stats().family_solves;

    for (long j = 0; j < N; ++j) {
        auto [bj, ej] = solve_unknown_slot(ctx, j);
        if (ej < 0) {
            if (x[static_cast<size_t>(j)] != 0)
                throw std::logic_error("solve_family: formal slot with negative degree must vanish");
            continue;
        }
        InvKey key{ctx.r, ctx.g, ej, ctx.tail};
        key.ins.push_back({j, bj});
        key.canonicalize();
        eng.cache().insert_inv(key, x[static_cast<size_t>(j)]);
    }
    if (canonical) eng.mark_family_solved(ctx);
    return x;
}

Rat evaluate_unknown(Engine& eng, const Context& ctx, long m) {
    const long N = 3L * ctx.g - 1;
    if (m < N) throw std::invalid_argument("evaluate_unknown: index is determined by the family solve");
    auto [b, e] = solve_unknown_slot(ctx, m);
    std::vector<Rat> x = solve_family(eng, ctx);
    AffineForm form = lookup_unknown(eng, ctx, b, e, m, N);
    Rat v = form.constant;
    for (long j = 0; j < N; ++j) v += form.linear[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    return v;
}

} // namespace gw
