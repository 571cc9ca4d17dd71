#pragma once

#include <cstdint>
#include <limits>
#include <utility>

#include "json.hpp"

#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/hilbert90.hpp"
#include "biquad90/module_lab.hpp"
#include "biquad90/rational.hpp"

namespace biquad90 {

using json = nlohmann::ordered_json;

// Canonical rendering: a plain JSON number for integers that fit int64,
// the exact "p/q" string otherwise. Keeps output byte-stable and lossless.
inline json rational_json(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) {
        const Int& num = numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return json(static_cast<std::int64_t>(num));
    }
    return json(to_string(r));
}

inline json int_json(const Int& n) { return rational_json(Rational(n)); }

inline json element_json(const ExtElement& e) {
    return json{{"f0", rational_json(e.f0())},
                {"f1", rational_json(e.f1())},
                {"f2", rational_json(e.f2())},
                {"f3", rational_json(e.f3())}};
}

inline json error_json(const Error& err) {
    json body{{"kind", to_string(err.kind())}, {"message", err.what()}};
    if (err.kind() == ErrorKind::ParseError && err.detail())
        body["position"] = *err.detail();
    return json{{"error", std::move(body)}};
}

inline json kernel_report_json(const KernelReport& r) {
    json out{{"in_K1", r.in_K1},
             {"in_K2", r.in_K2},
             {"in_K3", r.in_K3},
             {"in_K4", r.in_K4},
             {"in_K5", r.in_K5}};
    if (r.decomposition)
        out["decomposition"] = json{{"k1", element_json(r.decomposition->first)},
                                    {"k2", element_json(r.decomposition->second)}};
    if (r.norm_witness)
        out["norm_witness"] = json{{"gamma1", element_json(r.norm_witness->first)},
                                   {"gamma2", element_json(r.norm_witness->second)}};
    return out;
}

inline json matrix_json(const ModMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

inline json module_record_json(const FiniteKleinModule& m, const Theorem3Report& r) {
    json out{{"group", m.orders()},
             {"s1", matrix_json(m.s1())},
             {"s2", matrix_json(m.s2())},
             {"qh90", json::array({r.qh90_1, r.qh90_2})},
             {"kernel_eq", r.kernel_equality},
             {"implication", r.implication},
             {"verdict", to_string(r.verdict)}};
    if (r.verdict == Theorem3Verdict::Fail && r.certificate) {
        json cert = json::array();
        for (const auto& el : *r.certificate) cert.push_back(el);
        out["certificate"] = std::move(cert);
    }
    return out;
}

}  // namespace biquad90
