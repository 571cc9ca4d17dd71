#pragma once

// Test-case generator: all abelian groups of order <= N together with all
// ordered pairs of commuting involutive automorphisms.  Enumeration works
// prime component by prime component (automorphisms respect the primary
// decomposition) and pairs are assembled block-diagonally.
//
// Within one component three regimes apply, in this order:
//   * elementary abelian 2-groups of rank 5..6: involutions are enumerated
//     by conjugation-orbit closure from the rank-classified representatives
//     I + N_r, and pairs are deduplicated up to conjugacy (s1 is pinned to a
//     representative; s2 is split into orbits under a subgroup of the
//     centralizer).  Full pair listing is astronomically large here.
//   * small involution sets: plain double loop over all ordered pairs.
//   * anything else: s1 is deduplicated by orbit closure under a subgroup of
//     the automorphism group (unit scalings, transvections, swaps), s2 scans
//     the full involution list.
// Deduplication by a subgroup can only split conjugacy classes, never merge
// them, so every class keeps at least one representative: verification
// coverage is unaffected, only the module count is.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "biquad90/errors.hpp"
#include "biquad90/module_lab.hpp"

namespace biquad90 {

struct EnumOptions {
    std::size_t full_pair_limit = 2'000'000;   // |T|^2 above this switches to dedup
    std::size_t dfs_leaf_limit = 100'000'000;  // involution-search budget per component
    int strategy = 0;                          // 0 auto, 1 force full pairs, 2 force dedup
};

namespace detail {

// ---- packed GF(2) matrices: row i occupies bits [i*k, i*k+k) --------------

inline std::uint64_t f2_row(std::uint64_t m, int i, int k) {
    return (m >> (i * k)) & ((std::uint64_t(1) << k) - 1);
}

inline std::uint64_t f2_identity(int k) {
    std::uint64_t m = 0;
    for (int i = 0; i < k; ++i) m |= std::uint64_t(1) << (i * k + i);
    return m;
}

inline std::uint64_t f2_mul(std::uint64_t a, std::uint64_t b, int k) {
    std::uint64_t c = 0;
    for (int i = 0; i < k; ++i) {
        std::uint64_t row = 0;
        std::uint64_t sel = f2_row(a, i, k);
        while (sel) {
            const int l = __builtin_ctzll(sel);
            sel &= sel - 1;
            row ^= f2_row(b, l, k);
        }
        c |= row << (i * k);
    }
    return c;
}

inline bool f2_invert(std::uint64_t m, int k, std::uint64_t& inv) {
    std::vector<std::uint64_t> rows(k), id(k);
    for (int i = 0; i < k; ++i) {
        rows[i] = f2_row(m, i, k);
        id[i] = std::uint64_t(1) << i;
    }
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (rows[r] >> col & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(rows[col], rows[pivot]);
        std::swap(id[col], id[pivot]);
        for (int r = 0; r < k; ++r)
            if (r != col && (rows[r] >> col & 1)) {
                rows[r] ^= rows[col];
                id[r] ^= id[col];
            }
    }
    inv = 0;
    for (int i = 0; i < k; ++i) inv |= id[i] << (i * k);
    return true;
}

// Conjugation-orbit closure of `seeds` under the given group elements.
inline std::unordered_set<std::uint64_t> f2_orbit_closure(
    const std::vector<std::uint64_t>& seeds,
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& gens, int k) {
    std::unordered_set<std::uint64_t> seen(seeds.begin(), seeds.end());
    std::vector<std::uint64_t> queue(seeds);
    while (!queue.empty()) {
        const std::uint64_t x = queue.back();
        queue.pop_back();
        for (const auto& [g, ginv] : gens) {
            const std::uint64_t y = f2_mul(f2_mul(ginv, x, k), g, k);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen;
}

// Basis of {X : AX = XA} over GF(2), as packed matrices.
inline std::vector<std::uint64_t> f2_commutant_basis(std::uint64_t a, int k) {
    const int vars = k * k;
    // One equation per matrix position of AX + XA; rows are bitmasks over X's
    // entries (entry (l, j) is variable l*k + j).
    std::vector<std::uint64_t> eqs;
    eqs.reserve(vars);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::uint64_t eq = 0;
            for (int l = 0; l < k; ++l) {
                if (f2_row(a, i, k) >> l & 1) eq ^= std::uint64_t(1) << (l * k + j);  // A_il X_lj
                if (f2_row(a, l, k) >> j & 1) eq ^= std::uint64_t(1) << (i * k + l);  // X_il A_lj
            }
            if (eq) eqs.push_back(eq);
        }
    // Gaussian elimination to reduced row echelon form.
    std::vector<std::uint64_t> reduced;
    std::vector<int> pivots;
    for (std::uint64_t eq : eqs) {
        for (std::size_t r = 0; r < reduced.size(); ++r)
            if (eq >> pivots[r] & 1) eq ^= reduced[r];
        if (!eq) continue;
        const int p = 63 - __builtin_clzll(eq);
        for (std::size_t r = 0; r < reduced.size(); ++r)
            if (reduced[r] >> p & 1) reduced[r] ^= eq;
        reduced.push_back(eq);
        pivots.push_back(p);
    }
    // Nullspace: free variables get unit value, pivot variables follow.
    std::vector<bool> is_pivot(vars, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::uint64_t> basis;
    for (int v = 0; v < vars; ++v) {
        if (is_pivot[v]) continue;
        std::uint64_t x = std::uint64_t(1) << v;
        for (std::size_t r = 0; r < reduced.size(); ++r)
            if (reduced[r] >> v & 1) x ^= std::uint64_t(1) << pivots[r];
        basis.push_back(x);
    }
    return basis;
}

// Conjugacy class representatives of the non-identity involutions in
// GL(k, 2): I + N_r where N_r has r Jordan blocks of size two, r = rank.
inline std::vector<std::uint64_t> f2_rank_reps(int k) {
    const std::uint64_t id = f2_identity(k);
    std::vector<std::uint64_t> reps;
    for (int r = 1; 2 * r <= k; ++r) {
        std::uint64_t n = 0;
        for (int t = 0; t < r; ++t) n |= std::uint64_t(1) << ((2 * t) * k + (2 * t + 1));
        reps.push_back(id ^ n);
    }
    return reps;
}

// Every involutive element of GL(k, 2), identity included, sorted: the
// conjugation-orbit closure of the rank representatives under generators of
// the full group.
inline std::vector<std::uint64_t> f2_all_involutions(int k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> gens;
    const std::uint64_t id = f2_identity(k);
    std::uint64_t swap01 = id ^ (std::uint64_t(1) << 0) ^ (std::uint64_t(1) << 1) ^
                           (std::uint64_t(1) << (k + 0)) ^ (std::uint64_t(1) << (k + 1));
    std::uint64_t cycle = 0;
    for (int i = 0; i < k; ++i)
        cycle |= std::uint64_t(1) << (i * k + ((i + k - 1) % k));
    std::uint64_t transvection = id | (std::uint64_t(1) << 1);
    for (std::uint64_t g : {swap01, cycle, transvection}) {
        std::uint64_t ginv = 0;
        if (!f2_invert(g, k, ginv)) throw std::logic_error("singular generator");
        gens.emplace_back(g, ginv);
    }
    const std::unordered_set<std::uint64_t> closure =
        f2_orbit_closure(f2_rank_reps(k), gens, k);
    std::vector<std::uint64_t> out(closure.begin(), closure.end());
    out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- general matrices over mixed cyclic moduli ----------------------------

struct VecHash {
    std::size_t operator()(const std::vector<long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::vector<long> flatten(const ModMatrix& m) {
    std::vector<long> out;
    out.reserve(m.size() * m.size());
    for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
    return out;
}

inline ModMatrix unflatten(const std::vector<long>& v, std::size_t k) {
    ModMatrix m(k, std::vector<long>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = v[i * k + j];
    return m;
}

inline long inverse_mod(long a, long n) {
    long t = 0, newt = 1, r = n, newr = mod_reduce(a, n);
    while (newr != 0) {
        const long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::logic_error("inverse_mod: not a unit");
    return mod_reduce(t, n);
}

// Generators (with inverses) of a subgroup of Aut(sum Z/n_i): unit scalings,
// transvections e_j -> e_j + c e_i, and equal-order swaps.
inline std::vector<std::pair<ModMatrix, ModMatrix>> aut_subgroup_gens(
    const std::vector<long>& orders) {
    const std::size_t k = orders.size();
    std::vector<std::pair<ModMatrix, ModMatrix>> gens;
    auto ident = [&] { return mat_identity(k); };

    for (std::size_t i = 0; i < k; ++i) {
        const long n = orders[i];
        std::vector<long> units;
        if (n % 2 == 1 || n == 2) {
            // Cyclic unit group: one generator suffices (found by search).
            long best = 0;
            long phi = 0;
            for (long u = 1; u < n; ++u)
                if (std::gcd(u, n) == 1) ++phi;
            for (long u = 2; u < n && !best; ++u) {
                if (std::gcd(u, n) != 1) continue;
                long x = u % n, ord = 1;
                while (x != 1) {
                    x = x * u % n;
                    ++ord;
                }
                if (ord == phi) best = u;
            }
            if (best) units.push_back(best);
        } else if (n == 4) {
            units.push_back(3);
        } else if (n >= 8) {
            units.push_back(n - 1);
            units.push_back(5);
        }
        for (long u : units) {
            ModMatrix g = ident(), ginv = ident();
            g[i][i] = u;
            ginv[i][i] = inverse_mod(u, n);
            gens.emplace_back(std::move(g), std::move(ginv));
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const long c = orders[i] / std::gcd(orders[i], orders[j]);
            if (c == orders[i]) continue;  // only the zero map is allowed
            ModMatrix g = ident(), ginv = ident();
            g[i][j] = c;
            ginv[i][j] = mod_reduce(-c, orders[i]);
            gens.emplace_back(std::move(g), std::move(ginv));
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (orders[i] != orders[j]) continue;
            ModMatrix g = ident();
            g[i][i] = g[j][j] = 0;
            g[i][j] = g[j][i] = 1;
            gens.emplace_back(g, g);
        }
    return gens;
}

// ---- involution enumeration within one primary component ------------------

inline std::vector<ModElement> all_elements(const std::vector<long>& orders) {
    std::size_t total = 1;
    for (long n : orders) total *= std::size_t(n);
    std::vector<ModElement> out;
    out.reserve(total);
    ModElement e(orders.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        out.push_back(e);
        for (std::size_t j = 0; j < orders.size(); ++j) {
            if (++e[j] < orders[j]) break;
            e[j] = 0;
        }
    }
    return out;
}

inline long element_order(const std::vector<long>& orders, const ModElement& e) {
    long ord = 1;
    for (std::size_t i = 0; i < orders.size(); ++i)
        ord = std::lcm(ord, orders[i] / std::gcd(orders[i], e[i]));
    return ord;
}

// All involutive automorphisms of sum Z/n_j, by column DFS over generator
// images of exact order n_j with S^2 = I checked as soon as each column's
// support is complete.
inline std::vector<std::vector<long>> involutions_dfs(const std::vector<long>& orders,
                                                      std::size_t leaf_limit) {
    const std::size_t k = orders.size();
    const std::vector<ModElement> elems = all_elements(orders);
    std::vector<std::vector<ModElement>> cand(k);
    for (std::size_t j = 0; j < k; ++j)
        for (const ModElement& v : elems)
            if (element_order(orders, v) == orders[j]) cand[j].push_back(v);

    double estimate = 1;
    for (std::size_t j = 0; j < k; ++j) estimate *= double(cand[j].size());
    if (estimate > double(leaf_limit))
        throw Error(ErrorKind::TooLarge,
                    "involution search space too large for this component");

    std::vector<std::vector<long>> out;
    std::vector<const ModElement*> cols(k, nullptr);
    std::vector<int> trigger(k, 0);  // depth at which column i becomes checkable

    auto maxsup = [&](const ModElement& v) {
        int s = 0;
        for (std::size_t l = 0; l < k; ++l)
            if (v[l] != 0) s = int(l);
        return s;
    };
    auto check_column = [&](std::size_t i) {
        // S(S e_i) must be e_i: sum over l of (col_i)_l * col_l.
        const ModElement& ci = *cols[i];
        for (std::size_t row = 0; row < k; ++row) {
            long acc = 0;
            for (std::size_t l = 0; l < k; ++l)
                if (ci[l] != 0) acc = mod_reduce(acc + ci[l] * (*cols[l])[row], orders[row]);
            if (acc != (row == i ? 1 % orders[row] : 0)) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> place = [&](std::size_t d) {
        if (d == k) {
            std::vector<long> flat(k * k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = (*cols[j])[i];
            out.push_back(std::move(flat));
            return;
        }
        for (const ModElement& v : cand[d]) {
            cols[d] = &v;
            trigger[d] = std::max<int>(int(d), maxsup(v));
            bool ok = true;
            for (std::size_t i = 0; i <= d && ok; ++i)
                if (std::size_t(trigger[i]) == d) ok = check_column(i);
            if (ok) place(d + 1);
        }
    };
    place(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool flat_commute(const std::vector<long>& a, const std::vector<long>& b,
                         const std::vector<long>& orders) {
    const std::size_t k = orders.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long ab = 0, ba = 0;
            for (std::size_t l = 0; l < k; ++l) {
                ab += a[i * k + l] * b[l * k + j];
                ba += b[i * k + l] * a[l * k + j];
            }
            if (mod_reduce(ab - ba, orders[i]) != 0) return false;
        }
    return true;
}

inline std::vector<long> flat_conjugate(const std::vector<long>& x, const ModMatrix& g,
                                        const ModMatrix& ginv,
                                        const std::vector<long>& orders) {
    const std::size_t k = orders.size();
    return flatten(mat_mul_mod(orders, mat_mul_mod(orders, ginv, unflatten(x, k)), g));
}

// Splits `all` into orbits under conjugation by the generated subgroup and
// returns one representative per orbit (the least element, deterministically).
inline std::vector<std::vector<long>> orbit_representatives(
    const std::vector<std::vector<long>>& all,
    const std::vector<std::pair<ModMatrix, ModMatrix>>& gens,
    const std::vector<long>& orders) {
    std::unordered_set<std::vector<long>, VecHash> remaining(all.begin(), all.end());
    std::vector<std::vector<long>> reps;
    for (const auto& x : all) {
        if (!remaining.count(x)) continue;
        reps.push_back(x);
        std::vector<std::vector<long>> queue{x};
        remaining.erase(x);
        while (!queue.empty()) {
            const std::vector<long> cur = std::move(queue.back());
            queue.pop_back();
            for (const auto& [g, ginv] : gens) {
                std::vector<long> y = flat_conjugate(cur, g, ginv, orders);
                if (remaining.erase(y)) queue.push_back(std::move(y));
            }
        }
    }
    return reps;
}

// Ordered pairs of commuting involutive automorphisms of one primary
// component, covering every conjugacy class of pairs.
inline std::vector<std::pair<ModMatrix, ModMatrix>> component_pairs(
    const std::vector<long>& orders, const EnumOptions& opt) {
    const std::size_t k = orders.size();
    std::vector<std::pair<ModMatrix, ModMatrix>> out;

    const bool elementary2 = std::all_of(orders.begin(), orders.end(),
                                         [](long n) { return n == 2; });
    if (elementary2 && k >= 5 && opt.strategy != 1) {
        // GF(2) fast path: representatives I + N_r by rank, full involution
        // set by orbit closure, s2 deduplicated under centralizer elements.
        if (k > 6)
            throw Error(ErrorKind::TooLarge, "elementary 2-group rank above 6");
        const int ki = int(k);
        const std::uint64_t id = f2_identity(ki);
        const std::vector<std::uint64_t> reps = f2_rank_reps(ki);
        const std::vector<std::uint64_t> invs = f2_all_involutions(ki);

        auto to_mat = [&](std::uint64_t m) {
            ModMatrix s(k, std::vector<long>(k, 0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    s[i][j] = long(m >> (i * k + j) & 1);
            return s;
        };

        out.emplace_back(to_mat(id), to_mat(id));
        for (std::uint64_t r : reps) out.emplace_back(to_mat(id), to_mat(r));
        for (std::uint64_t r : reps) {
            std::vector<std::uint64_t> commuting;
            for (std::uint64_t x : invs)
                if (f2_mul(r, x, ki) == f2_mul(x, r, ki)) commuting.push_back(x);
            // Conjugation by invertible commutant elements fixes r and
            // permutes `commuting`; its orbits refine the true classes.
            std::vector<std::pair<std::uint64_t, std::uint64_t>> st_gens;
            for (std::uint64_t mbasis : f2_commutant_basis(r, ki)) {
                for (std::uint64_t g : {mbasis, mbasis ^ id}) {
                    std::uint64_t ginv = 0;
                    if (g && f2_invert(g, ki, ginv)) st_gens.emplace_back(g, ginv);
                }
            }
            std::unordered_set<std::uint64_t> remaining(commuting.begin(), commuting.end());
            for (std::uint64_t x : commuting) {
                if (!remaining.count(x)) continue;
                out.emplace_back(to_mat(r), to_mat(x));
                std::vector<std::uint64_t> queue{x};
                remaining.erase(x);
                while (!queue.empty()) {
                    const std::uint64_t cur = queue.back();
                    queue.pop_back();
                    for (const auto& [g, ginv] : st_gens) {
                        const std::uint64_t y = f2_mul(f2_mul(ginv, cur, ki), g, ki);
                        if (remaining.erase(y)) queue.push_back(y);
                    }
                }
            }
        }
        return out;
    }

    const std::vector<std::vector<long>> invs = involutions_dfs(orders, opt.dfs_leaf_limit);
    const bool full = opt.strategy == 1 ||
                      (opt.strategy == 0 && invs.size() * invs.size() <= opt.full_pair_limit);
    if (full) {
        for (const auto& a : invs)
            for (const auto& b : invs)
                if (flat_commute(a, b, orders))
                    out.emplace_back(unflatten(a, k), unflatten(b, k));
        return out;
    }
    const auto gens = aut_subgroup_gens(orders);
    for (const auto& rep : orbit_representatives(invs, gens, orders)) {
        const ModMatrix a = unflatten(rep, k);
        for (const auto& b : invs)
            if (flat_commute(rep, b, orders)) out.emplace_back(a, unflatten(b, k));
    }
    return out;
}

inline std::vector<std::vector<long>> partitions_desc(long e) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(left, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(e, e);
    return out;
}

}  // namespace detail

// Shapes (primary-decomposition order lists) of all abelian groups of order
// <= max_order: primes ascending, exponents descending within a prime.
inline std::vector<std::vector<long>> group_shapes(long max_order) {
    if (max_order < 1) throw Error(ErrorKind::InvalidArgument, "max_order must be >= 1");
    std::vector<std::vector<long>> shapes;
    for (long n = 1; n <= max_order; ++n) {
        std::vector<std::pair<long, long>> factors;  // (prime, exponent)
        long rem = n;
        for (long p = 2; p * p <= rem; ++p)
            if (rem % p == 0) {
                long e = 0;
                while (rem % p == 0) rem /= p, ++e;
                factors.emplace_back(p, e);
            }
        if (rem > 1) factors.emplace_back(rem, 1);

        std::vector<std::vector<long>> partial{{}};
        for (const auto& [p, e] : factors) {
            std::vector<std::vector<long>> next;
            for (const auto& lambda : detail::partitions_desc(e))
                for (const auto& head : partial) {
                    std::vector<long> shape = head;
                    for (long part : lambda) {
                        long q = 1;
                        for (long t = 0; t < part; ++t) q *= p;
                        shape.push_back(q);
                    }
                    next.push_back(std::move(shape));
                }
            partial = std::move(next);
        }
        shapes.insert(shapes.end(), partial.begin(), partial.end());
    }
    return shapes;
}

// All modules on the given group (orders = primary decomposition, grouped by
// prime): every conjugacy class of commuting involution pairs is covered.
inline void enumerate_group_modules(const std::vector<long>& orders,
                                    const std::function<void(const FiniteKleinModule&)>& sink,
                                    const EnumOptions& opt = {}) {
    // Split into primary components (maximal runs sharing one prime).
    std::vector<std::pair<std::size_t, std::vector<long>>> components;  // (offset, orders)
    for (std::size_t i = 0; i < orders.size();) {
        long p = orders[i];
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                p = q;
                break;
            }
        std::size_t j = i;
        std::vector<long> comp;
        while (j < orders.size() && orders[j] % p == 0 &&
               [&] {
                   long v = orders[j];
                   while (v % p == 0) v /= p;
                   return v == 1;
               }())
            comp.push_back(orders[j++]);
        components.emplace_back(i, std::move(comp));
        i = j;
    }

    std::vector<std::vector<std::pair<ModMatrix, ModMatrix>>> per_comp;
    for (const auto& [off, comp] : components)
        per_comp.push_back(detail::component_pairs(comp, opt));

    const std::size_t k = orders.size();
    std::vector<std::size_t> pick(per_comp.size(), 0);
    for (;;) {
        ModMatrix s1(k, std::vector<long>(k, 0)), s2(k, std::vector<long>(k, 0));
        for (std::size_t c = 0; c < per_comp.size(); ++c) {
            const auto& [off, comp] = components[c];
            const auto& [a, b] = per_comp[c][pick[c]];
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = 0; j < comp.size(); ++j) {
                    s1[off + i][off + j] = a[i][j];
                    s2[off + i][off + j] = b[i][j];
                }
        }
        sink(FiniteKleinModule(orders, std::move(s1), std::move(s2)));

        std::size_t c = 0;
        for (; c < per_comp.size(); ++c) {
            if (++pick[c] < per_comp[c].size()) break;
            pick[c] = 0;
        }
        if (c == per_comp.size()) break;
    }
}

inline void enumerate_modules(long max_order,
                              const std::function<void(const FiniteKleinModule&)>& sink,
                              const EnumOptions& opt = {}) {
    for (const auto& shape : group_shapes(max_order))
        enumerate_group_modules(shape, sink, opt);
}

}  // namespace biquad90
