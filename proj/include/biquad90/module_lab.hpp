#pragma once

// Finite Z[G]-modules for the Klein four-group, written additively inside:
// the group is a direct sum of cyclic factors Z/n_j, elements are exponent
// vectors, and the two commuting involutions act as integer matrices taken
// modulo the row's cyclic order.  The checks below brute-force the three
// statements whose equivalence (under QH90) is the theorem being verified:
//   QH90:       ker(1 + s_i)  inside  im(1 - s_i),
//   kernel eq:  ker((1-s1)(1-s2)) = ker(1-s1) + ker(1-s2),
//   implication: every compatible pair (m1, m2) has a common witness n.

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "biquad90/errors.hpp"

namespace biquad90 {

using ModElement = std::vector<long>;
using ModMatrix = std::vector<std::vector<long>>;

namespace detail {

inline long mod_reduce(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

// (A*B)_ij mod row modulus.
inline ModMatrix mat_mul_mod(const std::vector<long>& orders, const ModMatrix& a,
                             const ModMatrix& b) {
    const std::size_t k = orders.size();
    ModMatrix c(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long acc = 0;
            for (std::size_t l = 0; l < k; ++l)
                acc = mod_reduce(acc + a[i][l] * b[l][j], orders[i]);
            c[i][j] = acc;
        }
    return c;
}

inline ModMatrix mat_identity(std::size_t k) {
    ModMatrix m(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

}  // namespace detail

class FiniteKleinModule {
public:
    FiniteKleinModule(std::vector<long> orders, ModMatrix s1, ModMatrix s2)
        : orders_(std::move(orders)), s1_(std::move(s1)), s2_(std::move(s2)) {
        const std::size_t k = orders_.size();
        for (long n : orders_)
            if (n < 1) throw Error(ErrorKind::InvalidModule, "cyclic orders must be positive");
        validate_shape(s1_, k, "s1");
        validate_shape(s2_, k, "s2");
        normalize(s1_);
        normalize(s2_);
        validate_action(s1_, "s1");
        validate_action(s2_, "s2");
        if (detail::mat_mul_mod(orders_, s1_, s2_) != detail::mat_mul_mod(orders_, s2_, s1_))
            throw Error(ErrorKind::InvalidModule, "s1 and s2 do not commute");
    }

    const std::vector<long>& orders() const { return orders_; }
    const ModMatrix& s1() const { return s1_; }
    const ModMatrix& s2() const { return s2_; }

    std::size_t size() const {
        std::size_t total = 1;
        for (long n : orders_) {
            if (total > (std::size_t(1) << 40) / std::size_t(n))
                throw Error(ErrorKind::TooLarge, "module order exceeds the representable range");
            total *= std::size_t(n);
        }
        return total;
    }

    ModElement element_at(std::size_t index) const {
        ModElement e(orders_.size());
        for (std::size_t j = 0; j < orders_.size(); ++j) {
            e[j] = long(index % std::size_t(orders_[j]));
            index /= std::size_t(orders_[j]);
        }
        return e;
    }

    std::size_t index_of(const ModElement& e) const {
        std::size_t index = 0;
        for (std::size_t j = orders_.size(); j-- > 0;)
            index = index * std::size_t(orders_[j]) + std::size_t(e[j]);
        return index;
    }

    ModElement apply(const ModMatrix& s, const ModElement& e) const {
        const std::size_t k = orders_.size();
        ModElement out(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            long acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                acc = detail::mod_reduce(acc + s[i][j] * e[j], orders_[i]);
            out[i] = acc;
        }
        return out;
    }

    ModElement add(const ModElement& a, const ModElement& b) const {
        ModElement out(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            out[i] = detail::mod_reduce(a[i] + b[i], orders_[i]);
        return out;
    }

    ModElement sub(const ModElement& a, const ModElement& b) const {
        ModElement out(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            out[i] = detail::mod_reduce(a[i] - b[i], orders_[i]);
        return out;
    }

    bool is_zero(const ModElement& e) const {
        for (long v : e)
            if (v != 0) return false;
        return true;
    }

private:
    void validate_shape(const ModMatrix& s, std::size_t k, const char* name) const {
        if (s.size() != k)
            throw Error(ErrorKind::InvalidModule, std::string(name) + ": wrong number of rows");
        for (const auto& row : s)
            if (row.size() != k)
                throw Error(ErrorKind::InvalidModule, std::string(name) + ": wrong row length");
    }

    void normalize(ModMatrix& s) const {
        for (std::size_t i = 0; i < orders_.size(); ++i)
            for (std::size_t j = 0; j < orders_.size(); ++j)
                s[i][j] = detail::mod_reduce(s[i][j], orders_[i]);
    }

    void validate_action(const ModMatrix& s, const char* name) const {
        const std::size_t k = orders_.size();
        // Well-definedness: the image of a generator of order n_j must be
        // killed by n_j, i.e. n_i | s_ij * n_j.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if ((s[i][j] * orders_[j]) % orders_[i] != 0)
                    throw Error(ErrorKind::InvalidModule,
                                std::string(name) + ": entry does not give a well-defined map");
        if (detail::mat_mul_mod(orders_, s, s) != detail::mat_identity(k))
            throw Error(ErrorKind::InvalidModule, std::string(name) + ": not an involution");
    }

    std::vector<long> orders_;
    ModMatrix s1_, s2_;
};

struct CheckOptions {
    std::size_t max_elements = 4096;
};

namespace detail {

inline void require_enumerable(const FiniteKleinModule& m, const CheckOptions& opt) {
    if (m.size() > opt.max_elements)
        throw Error(ErrorKind::TooLarge, "module has " + std::to_string(m.size()) +
                                             " elements, bound is " +
                                             std::to_string(opt.max_elements));
}

// Characteristic vector over element indices of {f(x) : x in M}.
inline std::vector<bool> image_set(const FiniteKleinModule& m, const ModMatrix& s, bool minus) {
    const std::size_t n = m.size();
    std::vector<bool> image(n, false);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ModElement x = m.element_at(idx);
        const ModElement sx = m.apply(s, x);
        image[m.index_of(minus ? m.sub(x, sx) : m.add(x, sx))] = true;
    }
    return image;
}

}  // namespace detail

// For each generator: ker(1 + s_i) inside im(1 - s_i), exhaustively.
inline std::pair<bool, bool> check_qh90(const FiniteKleinModule& m,
                                        const CheckOptions& opt = {}) {
    detail::require_enumerable(m, opt);
    const std::size_t n = m.size();
    bool holds[2] = {true, true};
    for (int gen = 0; gen < 2; ++gen) {
        const ModMatrix& s = gen == 0 ? m.s1() : m.s2();
        const std::vector<bool> image = detail::image_set(m, s, true);
        for (std::size_t idx = 0; idx < n && holds[gen]; ++idx) {
            const ModElement x = m.element_at(idx);
            if (m.is_zero(m.add(x, m.apply(s, x))) && !image[idx]) holds[gen] = false;
        }
    }
    return {holds[0], holds[1]};
}

namespace detail {

inline std::vector<bool> kernel_eq_lhs(const FiniteKleinModule& m) {
    const std::size_t n = m.size();
    std::vector<bool> lhs(n, false);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ModElement x = m.element_at(idx);
        const ModElement y = m.sub(x, m.apply(m.s2(), x));
        if (m.is_zero(m.sub(y, m.apply(m.s1(), y)))) lhs[idx] = true;
    }
    return lhs;
}

inline std::vector<std::size_t> kernel_of_one_minus(const FiniteKleinModule& m,
                                                    const ModMatrix& s) {
    std::vector<std::size_t> out;
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
        const ModElement x = m.element_at(idx);
        if (m.is_zero(m.sub(x, m.apply(s, x)))) out.push_back(idx);
    }
    return out;
}

inline std::vector<bool> kernel_eq_rhs(const FiniteKleinModule& m) {
    const std::vector<std::size_t> k1 = kernel_of_one_minus(m, m.s1());
    const std::vector<std::size_t> k2 = kernel_of_one_minus(m, m.s2());
    std::vector<bool> rhs(m.size(), false);
    for (std::size_t i : k1) {
        const ModElement a = m.element_at(i);
        for (std::size_t j : k2) rhs[m.index_of(m.add(a, m.element_at(j)))] = true;
    }
    return rhs;
}

}  // namespace detail

// ker((1-s1)(1-s2)) == ker(1-s1) + ker(1-s2), as sets.
inline bool check_kernel_equality(const FiniteKleinModule& m, const CheckOptions& opt = {}) {
    detail::require_enumerable(m, opt);
    return detail::kernel_eq_lhs(m) == detail::kernel_eq_rhs(m);
}

struct ImplicationResult {
    bool holds;
    // A compatible pair (m1, m2) with no common witness n, when !holds.
    std::optional<std::pair<ModElement, ModElement>> counterexample;
};

// For every pair with (1+s1)m1 = 0 = (1+s2)m2 and m1 + s1(m2) = m2 + s2(m1),
// a common n with m_i = (1-s_i)n must exist.
inline ImplicationResult check_implication_detail(const FiniteKleinModule& m,
                                                  const CheckOptions& opt = {}) {
    detail::require_enumerable(m, opt);
    const std::size_t n = m.size();

    // All pairs ((1-s1)n, (1-s2)n) reachable from one witness.
    std::unordered_set<std::uint64_t> reachable;
    reachable.reserve(n * 2);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ModElement x = m.element_at(idx);
        const std::uint64_t a = m.index_of(m.sub(x, m.apply(m.s1(), x)));
        const std::uint64_t b = m.index_of(m.sub(x, m.apply(m.s2(), x)));
        reachable.insert(a * n + b);
    }

    std::vector<std::size_t> ker1, ker2;
    for (std::size_t idx = 0; idx < n; ++idx) {
        const ModElement x = m.element_at(idx);
        if (m.is_zero(m.add(x, m.apply(m.s1(), x)))) ker1.push_back(idx);
        if (m.is_zero(m.add(x, m.apply(m.s2(), x)))) ker2.push_back(idx);
    }

    for (std::size_t i : ker1) {
        const ModElement m1 = m.element_at(i);
        const ModElement s2m1 = m.apply(m.s2(), m1);
        for (std::size_t j : ker2) {
            const ModElement m2 = m.element_at(j);
            // Compatibility: m1 + s1(m2) == m2 + s2(m1).
            if (m.add(m1, m.apply(m.s1(), m2)) != m.add(m2, s2m1)) continue;
            if (!reachable.count(std::uint64_t(i) * n + j))
                return {false, std::make_pair(m1, m2)};
        }
    }
    return {true, std::nullopt};
}

inline bool check_implication(const FiniteKleinModule& m, const CheckOptions& opt = {}) {
    return check_implication_detail(m, opt).holds;
}

enum class Theorem3Verdict { Pass, Fail, Skipped };

inline const char* to_string(Theorem3Verdict v) {
    switch (v) {
        case Theorem3Verdict::Pass: return "PASS";
        case Theorem3Verdict::Fail: return "FAIL";
        case Theorem3Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

struct Theorem3Report {
    bool qh90_1 = false, qh90_2 = false;
    bool kernel_equality = false;
    bool implication = false;
    // ker(1-s1) + ker(1-s2) inside ker((1-s1)(1-s2)): holds unconditionally.
    bool unconditional_inclusion = false;
    Theorem3Verdict verdict = Theorem3Verdict::Skipped;
    // On FAIL: the offending pair (m1, m2), or the kernel element witnessing
    // the failed set equality.
    std::optional<std::vector<ModElement>> certificate;
};

inline Theorem3Report verify_theorem3(const FiniteKleinModule& m, const CheckOptions& opt = {}) {
    detail::require_enumerable(m, opt);
    Theorem3Report report;
    std::tie(report.qh90_1, report.qh90_2) = check_qh90(m, opt);

    const std::vector<bool> lhs = detail::kernel_eq_lhs(m);
    const std::vector<bool> rhs = detail::kernel_eq_rhs(m);
    report.kernel_equality = lhs == rhs;
    report.unconditional_inclusion = true;
    for (std::size_t idx = 0; idx < m.size(); ++idx)
        if (rhs[idx] && !lhs[idx]) report.unconditional_inclusion = false;

    const ImplicationResult impl = check_implication_detail(m, opt);
    report.implication = impl.holds;

    if (!report.unconditional_inclusion) {
        // Cannot happen: (1-s1) kills ker(1-s1) and commutes past (1-s2).
        report.verdict = Theorem3Verdict::Fail;
        for (std::size_t idx = 0; idx < m.size(); ++idx)
            if (rhs[idx] && !lhs[idx]) {
                report.certificate = {m.element_at(idx)};
                break;
            }
        return report;
    }
    if (!(report.qh90_1 && report.qh90_2)) {
        report.verdict = Theorem3Verdict::Skipped;
        return report;
    }
    if (report.kernel_equality == report.implication) {
        report.verdict = Theorem3Verdict::Pass;
        return report;
    }
    report.verdict = Theorem3Verdict::Fail;
    if (impl.counterexample) {
        report.certificate = {impl.counterexample->first, impl.counterexample->second};
    } else {
        // Kernel equality failed while the implication holds: exhibit a
        // kernel element outside the product set.
        for (std::size_t idx = 0; idx < m.size(); ++idx)
            if (lhs[idx] && !rhs[idx]) {
                report.certificate = {m.element_at(idx)};
                break;
            }
    }
    return report;
}

}  // namespace biquad90
