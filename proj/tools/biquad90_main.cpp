// biquad90: exact arithmetic in Q(sqrt(a1), sqrt(a2)) from the command line.
// Every subcommand prints one JSON document (or --output text lines) on
// stdout. Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "biquad90/enumerate.hpp"
#include "biquad90/errors.hpp"
#include "biquad90/field.hpp"
#include "biquad90/group_ring.hpp"
#include "biquad90/hilbert90.hpp"
#include "biquad90/json_io.hpp"
#include "biquad90/module_lab.hpp"
#include "biquad90/parse.hpp"
#include "biquad90/qform.hpp"
#include "biquad90/rational.hpp"

namespace {

using namespace biquad90;

struct CommonArgs {
    std::string a1, a2;        // field parameters (eval, h90-witness, coboundary, kernel)
    std::string a, b;          // qform parameters
    std::string x, y;          // qform / coboundary operands
    std::string expr;          // main element expression
    std::string op;            // optional group-ring expression (eval)
    std::string m, n;          // pythagorean inputs
    int index = 0;             // subextension index (h90-witness)
    long max_order = 64;       // module-check bound
    std::string output = "json";
};

bool text_mode(const CommonArgs& args) { return args.output == "text"; }

Int parse_integer(const std::string& src) {
    const std::size_t pos = src.empty() || src[0] != '-' ? 0 : 1;
    if (pos == src.size())
        throw Error(ErrorKind::ParseError, "expected integer", 0);
    for (std::size_t i = pos; i < src.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(src[i])))
            throw Error(ErrorKind::ParseError, "expected integer", static_cast<long>(i));
    const Int mag = biquad90::detail::int_from_decimal_digits(std::string_view(src).substr(pos));
    return pos == 1 ? Int(-mag) : mag;
}

BiquadConfig field_of(const CommonArgs& args) {
    return make_field(parse_rational(args.a1), parse_rational(args.a2));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_text(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}

int cmd_eval(const CommonArgs& args) {
    const BiquadConfig cfg = field_of(args);
    const ExtElement e = parse_element(args.expr, cfg);
    const SubfieldFlags sub = subfield_membership(e);
    std::optional<GroupRingElement> op;
    std::optional<ExtElement> acted;
    if (!args.op.empty()) {
        op = parse_group_ring(args.op);
        acted = act(*op, e);
    }
    if (!text_mode(args)) {
        json out{{"a1", rational_json(cfg.a1())},
                 {"a2", rational_json(cfg.a2())},
                 {"element", element_json(e)},
                 {"text", render_element(e)},
                 {"norm_F", rational_json(norm_E_to_F(e))},
                 {"subfields", json{{"F", sub.in_F},
                                    {"E1", sub.in_E1},
                                    {"E2", sub.in_E2},
                                    {"E3", sub.in_E3}}}};
        if (!e.is_zero()) out["inverse"] = element_json(inv(e));
        if (acted)
            out["action"] = json{{"operator", render_group_ring(*op)},
                                 {"result", element_json(*acted)}};
        emit(out);
        return 0;
    }
    emit_text("element", render_element(e));
    emit_text("norm_F", to_string(norm_E_to_F(e)));
    const std::pair<const char*, bool> flags[] = {
        {"F", sub.in_F}, {"E1", sub.in_E1}, {"E2", sub.in_E2}, {"E3", sub.in_E3}};
    std::string subs;
    for (const auto& [name, flag] : flags)
        if (flag) subs += subs.empty() ? std::string(name) : (std::string(",") + name);
    emit_text("subfields", subs.empty() ? "none" : subs);
    if (!e.is_zero()) emit_text("inverse", render_element(inv(e)));
    if (acted) emit_text("action", render_element(*acted));
    return 0;
}

int cmd_h90_witness(const CommonArgs& args) {
    const BiquadConfig cfg = field_of(args);
    const ExtElement t = parse_element(args.expr, cfg);
    const ExtElement ell = qh90_witness(args.index, t);
    if (text_mode(args)) {
        emit_text("ell", render_element(ell));
        return 0;
    }
    emit(json{{"i", args.index}, {"t", element_json(t)}, {"ell", element_json(ell)}});
    return 0;
}

int cmd_coboundary(const CommonArgs& args) {
    const BiquadConfig cfg = field_of(args);
    const ExtElement alpha1 = parse_element(args.x, cfg);
    const ExtElement alpha2 = parse_element(args.y, cfg);
    const ExtElement beta = coboundary_witness(CrossedHom(alpha1, alpha2));
    if (text_mode(args)) {
        emit_text("beta", render_element(beta));
        return 0;
    }
    emit(json{{"alpha1", element_json(alpha1)},
              {"alpha2", element_json(alpha2)},
              {"beta", element_json(beta)}});
    return 0;
}

int cmd_kernel(const CommonArgs& args) {
    const BiquadConfig cfg = field_of(args);
    const ExtElement e = parse_element(args.expr, cfg);
    const KernelReport report = kernel_membership(e);
    if (text_mode(args)) {
        emit_text("in_K1", report.in_K1 ? "true" : "false");
        emit_text("in_K2", report.in_K2 ? "true" : "false");
        emit_text("in_K3", report.in_K3 ? "true" : "false");
        emit_text("in_K4", report.in_K4 ? "true" : "false");
        emit_text("in_K5", report.in_K5 ? "true" : "false");
        if (report.decomposition) {
            emit_text("k1", render_element(report.decomposition->first));
            emit_text("k2", render_element(report.decomposition->second));
        }
        if (report.norm_witness) {
            emit_text("gamma1", render_element(report.norm_witness->first));
            emit_text("gamma2", render_element(report.norm_witness->second));
        }
        return 0;
    }
    emit(kernel_report_json(report));
    return 0;
}

int cmd_qform(const CommonArgs& args) {
    const Rational a = parse_rational(args.a);
    const Rational b = parse_rational(args.b);
    const QuadExtElement x = parse_quad_element(args.x, b);
    const QuadExtElement y = parse_quad_element(args.y, b);
    const QformDecomposition d = qform_decompose(a, b, x, y);
    if (text_mode(args)) {
        emit_text("x1", to_string(d.x1));
        emit_text("y1", to_string(d.y1));
        emit_text("x2", to_string(d.x2));
        emit_text("y2", to_string(d.y2));
        emit_text("value", to_string(d.value));
        return 0;
    }
    emit(json{{"x1", rational_json(d.x1)},
              {"y1", rational_json(d.y1)},
              {"x2", rational_json(d.x2)},
              {"y2", rational_json(d.y2)},
              {"value", rational_json(d.value)}});
    return 0;
}

int cmd_pythagorean(const CommonArgs& args) {
    const auto triple = pythagorean_triple(parse_integer(args.m), parse_integer(args.n));
    if (text_mode(args)) {
        emit_text("triple", triple[0].str() + " " + triple[1].str() + " " + triple[2].str());
        return 0;
    }
    emit(json{{"triple", json::array({int_json(triple[0]), int_json(triple[1]),
                                      int_json(triple[2])})}});
    return 0;
}

int cmd_module_check(const CommonArgs& args) {
    CheckOptions check_opt;
    if (static_cast<std::size_t>(args.max_order) > check_opt.max_elements)
        check_opt.max_elements = static_cast<std::size_t>(args.max_order);
    std::size_t modules = 0, passes = 0, fails = 0, skips = 0;
    for (const std::vector<long>& shape : group_shapes(args.max_order)) {
        try {
            enumerate_group_modules(shape, [&](const FiniteKleinModule& m) {
                const Theorem3Report r = verify_theorem3(m, check_opt);
                ++modules;
                if (r.verdict == Theorem3Verdict::Pass) ++passes;
                else if (r.verdict == Theorem3Verdict::Fail) ++fails;
                else ++skips;
                if (text_mode(args)) {
                    std::cout << to_string(r.verdict) << "\tgroup=" << json(m.orders()).dump()
                              << "\tqh90=" << r.qh90_1 << r.qh90_2
                              << "\tkernel_eq=" << r.kernel_equality
                              << "\timplication=" << r.implication << "\n";
                } else {
                    emit(module_record_json(m, r));
                }
            });
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::TooLarge) throw;
            // Record the skipped group and keep sweeping.
            if (text_mode(args))
                std::cout << "TOO_LARGE\tgroup=" << json(shape).dump() << "\n";
            else
                emit(json{{"group", shape}, {"error", error_json(err)["error"]}});
        }
    }
    if (text_mode(args))
        std::cout << "modules=" << modules << " pass=" << passes << " skipped=" << skips
                  << " fail=" << fails << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CommonArgs args;
    CLI::App app{"exact arithmetic for biquadratic extensions of Q"};
    app.require_subcommand(1);
    app.add_option("--output", args.output, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    CLI::App* eval = app.add_subcommand("eval", "parse and evaluate a field element");
    eval->fallthrough();
    eval->add_option("--a1", args.a1, "first square root parameter")->required();
    eval->add_option("--a2", args.a2, "second square root parameter")->required();
    eval->add_option("expr", args.expr, "element expression")->required();
    eval->add_option("op", args.op, "group-ring operator to apply");

    CLI::App* h90 = app.add_subcommand("h90-witness", "solve ell/sigma_i(ell) = t");
    h90->fallthrough();
    h90->add_option("--a1", args.a1)->required();
    h90->add_option("--a2", args.a2)->required();
    h90->add_option("i", args.index, "subextension index")->required()->check(CLI::Range(1, 3));
    h90->add_option("t", args.expr, "norm-one element expression")->required();

    CLI::App* cob = app.add_subcommand("coboundary", "split a crossed homomorphism");
    cob->fallthrough();
    cob->add_option("--a1", args.a1)->required();
    cob->add_option("--a2", args.a2)->required();
    cob->add_option("alpha1", args.x, "value at sigma_1")->required();
    cob->add_option("alpha2", args.y, "value at sigma_2")->required();

    CLI::App* kernel = app.add_subcommand("kernel", "five-way kernel membership report");
    kernel->fallthrough();
    kernel->add_option("--a1", args.a1)->required();
    kernel->add_option("--a2", args.a2)->required();
    kernel->add_option("expr", args.expr, "element expression")->required();

    CLI::App* qform = app.add_subcommand("qform-decompose",
                                         "factor x^2 - a*y^2 over Q(sqrt(b))");
    qform->fallthrough();
    qform->add_option("--a", args.a)->required();
    qform->add_option("--b", args.b)->required();
    qform->add_option("--x", args.x, "element of Q(sqrt(b))")->required();
    qform->add_option("--y", args.y, "element of Q(sqrt(b))")->required();

    CLI::App* pyth = app.add_subcommand("pythagorean", "triple from a norm factorization");
    pyth->fallthrough();
    pyth->add_option("m", args.m)->required();
    pyth->add_option("n", args.n)->required();

    CLI::App* modcheck = app.add_subcommand("module-check",
                                            "sweep finite modules, one JSON line each");
    modcheck->fallthrough();
    modcheck->add_option("--max-order", args.max_order, "largest module order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << biquad90::json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(args);
        if (h90->parsed()) return cmd_h90_witness(args);
        if (cob->parsed()) return cmd_coboundary(args);
        if (kernel->parsed()) return cmd_kernel(args);
        if (qform->parsed()) return cmd_qform(args);
        if (pyth->parsed()) return cmd_pythagorean(args);
        if (modcheck->parsed()) return cmd_module_check(args);
    } catch (const biquad90::Error& err) {
        if (text_mode(args))
            std::cout << "error: " << biquad90::to_string(err.kind()) << ": " << err.what()
                      << "\n";
        else
            emit(biquad90::error_json(err));
        return err.kind() == biquad90::ErrorKind::ParseError ? 2 : 1;
    } catch (const std::exception& err) {
        std::cout << biquad90::json{{"error", {{"kind", "Internal"}, {"message", err.what()}}}}.dump()
                  << "\n";
        return 70;
    }
    return 2;
}
