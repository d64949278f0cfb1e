#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "nodalis/json_report.hpp"
#include "nodalis/parse.hpp"
#include "nodalis/selftest.hpp"

// Command drivers shared by the nodalis binary and the tests. Each driver
// returns the rendered report plus an exit code:
//   0  success
//   1  parse or configuration problem (bad grammar, bad field spec, precision)
//   2  a mathematical precondition of the command does not hold
//   3  internal error

namespace nodalis::cli {

struct RunResult {
    int exit_code = 0;
    std::string text;
    Json json;
};

struct Options {
    std::string field = "q";
    std::size_t precision = 0; // 0 = pick automatically
    std::string point = "0,0";
    std::string direction = "0,1";
    bool json = false;
};

/// Applies fn to the context described by "q", "fp:<p>" or "q-adjoin:<d>".
template <class Fn>
RunResult with_field(const std::string& spec, Fn&& fn) {
    if (spec == "q") return fn(Rational::Ctx{});
    if (spec.rfind("fp:", 0) == 0) {
        long long p = 0;
        try {
            p = std::stoll(spec.substr(3));
        } catch (const std::exception&) {
            throw ConfigError("bad prime in field spec '" + spec + "'");
        }
        return fn(Fp::Ctx(p));
    }
    if (spec.rfind("q-adjoin:", 0) == 0) {
        Rational::Ctx q;
        Rational d = parse_scalar<Rational>(spec.substr(9), q);
        return fn(adjoin_sqrt<Rational>(q, d));
    }
    throw ConfigError("unknown field spec '" + spec + "' (expected q, fp:<p> or q-adjoin:<d>)");
}

namespace detail {

template <class Ctx>
AffinePoint<typename Ctx::Element> parse_point(const std::string& text, const Ctx& ctx) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ConfigError("point must be of the form x,y");
    using K = typename Ctx::Element;
    return {parse_scalar<K>(text.substr(0, comma), ctx),
            parse_scalar<K>(text.substr(comma + 1), ctx)};
}

template <class Ctx>
std::pair<typename Ctx::Element, typename Ctx::Element> parse_direction(const std::string& text,
                                                                        const Ctx& ctx) {
    auto p = parse_point(text, ctx);
    return {p.x, p.y};
}

inline std::string render_multiplicity(const std::optional<std::size_t>& m) {
    return m ? std::to_string(*m) : std::string("infinite");
}

template <class Fn>
RunResult guarded(Fn&& fn) {
    auto fail = [](int code, const std::string& what) {
        RunResult r;
        r.exit_code = code;
        r.text = "error: " + what + "\n";
        r.json = Json{{"error", what}};
        return r;
    };
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(1, e.what());
    } catch (const ConfigError& e) {
        return fail(1, e.what());
    } catch (const InsufficientPrecision& e) {
        return fail(1, std::string(e.what()) + "; raise --precision");
    } catch (const PreconditionError& e) {
        return fail(2, e.what());
    } catch (const Error& e) {
        return fail(2, e.what());
    } catch (const std::exception& e) {
        return fail(3, std::string("internal error: ") + e.what());
    }
}

template <class Ctx>
std::size_t auto_precision(const BivariatePoly<typename Ctx::Element>& f, std::size_t requested,
                           std::size_t least) {
    if (requested == 0) {
        auto d = static_cast<std::size_t>(std::max(f.degree(), 2));
        return std::max(d * d + 2, least);
    }
    if (requested < least)
        throw ConfigError("precision must be at least " + std::to_string(least) +
                          " for this command");
    return requested;
}

} // namespace detail

template <class Ctx>
RunResult analyze(const Ctx& ctx, const Options& opt, const std::string& poly_text) {
    using K = typename Ctx::Element;
    auto f = parse_polynomial<K>(poly_text, ctx);
    auto p = detail::parse_point(opt.point, ctx);
    auto report = classify_point(f, p);
    if (report.classification == PointClass::ordinary_double_point) {
        auto sample = default_line_sample(ctx, report.tangent_cone);
        std::vector<std::pair<LinearForm<K>, std::optional<std::size_t>>> survey;
        for (const auto& l : sample) survey.emplace_back(l, line_multiplicity(f, p, l));
        report.line_survey = std::move(survey);
    }
    RunResult out;
    out.json = Json{{"command", "analyze"},
                    {"field", field_json(ctx)},
                    {"input", Json{{"curve", f.to_string()}, {"point", point_json(p)}}},
                    {"report", node_report_json(report)}};
    std::ostringstream t;
    t << "field:          " << ctx.name() << "\n";
    t << "curve:          " << f.to_string() << "\n";
    t << "point:          (" << to_string(p.x) << ", " << to_string(p.y) << ")\n";
    t << "classification: " << to_string(report.classification) << "\n";
    if (report.tangent_cone)
        t << "tangent cone:   " << report.tangent_cone->first.to_string() << ",  "
          << report.tangent_cone->second.to_string() << "\n";
    if (report.extension_needed)
        t << "needs sqrt of:  " << to_string(*report.extension_needed)
          << "  (rerun with --field=q-adjoin:" << to_string(*report.extension_needed) << ")\n";
    if (report.line_survey) {
        t << "line survey:\n";
        for (const auto& [l, m] : *report.line_survey)
            t << "  " << l.to_string() << ": " << detail::render_multiplicity(m) << "\n";
    }
    out.text = t.str();
    return out;
}

template <class Ctx>
RunResult branches(const Ctx& ctx, const Options& opt, const std::string& poly_text) {
    using K = typename Ctx::Element;
    auto f = parse_polynomial<K>(poly_text, ctx);
    auto p = detail::parse_point(opt.point, ctx);
    auto local = f.translate_to_origin(p);
    std::size_t n = detail::auto_precision<Ctx>(local, opt.precision, 2);
    auto factored = factor_node_branches(local, n);
    RunResult out;
    if (auto* need = std::get_if<NeedsExtension<K>>(&factored)) {
        out.exit_code = 2;
        std::string d = to_string(need->d);
        out.json = Json{{"command", "branches"},
                        {"field", field_json(ctx)},
                        {"error", "tangent cone splits only over an extension"},
                        {"extension_needed", d}};
        out.text = "tangent cone splits only over an extension; rerun with --field=q-adjoin:" +
                   d + "\n";
        return out;
    }
    const auto& b = std::get<BranchPair<K>>(factored);
    out.json = Json{{"command", "branches"},
                    {"field", field_json(ctx)},
                    {"input", Json{{"curve", f.to_string()}, {"point", point_json(p)}}},
                    {"precision", n},
                    {"report", branch_pair_json(b)}};
    std::ostringstream t;
    t << "field:     " << ctx.name() << "\n";
    t << "curve:     " << f.to_string() << "  at (" << to_string(p.x) << ", " << to_string(p.y)
      << ")\n";
    t << "eta1:      " << b.eta1.to_string() << "\n";
    t << "eta2:      " << b.eta2.to_string() << "\n";
    auto tangents = branch_tangents(b);
    t << "tangents:  " << tangents.first.to_string() << ",  " << tangents.second.to_string()
      << "\n";
    out.text = t.str();
    return out;
}

namespace detail {

/// Both intersection curves sheared together so the node's tangent cone
/// avoids the Y-axis; intersection numbers are invariant under a common
/// linear change.
template <FieldElement K>
std::pair<BivariatePoly<K>, BivariatePoly<K>> shear_off_y_axis(const BivariatePoly<K>& f,
                                                               const BivariatePoly<K>& h,
                                                               bool& sheared) {
    sheared = false;
    if (!f.coeff(0, 2).is_zero()) return {f, h};
    const auto& ctx = f.ctx();
    auto cone = f.homogeneous_part(2);
    for (long long a = 1; a <= 24; ++a) {
        for (K m12 : {ctx.from_int(a), ctx.from_int(-a)}) {
            if (cone.evaluate(m12, ctx.one()).is_zero()) continue;
            sheared = true;
            return {f.linear_change(ctx.one(), m12, ctx.zero(), ctx.one()),
                    h.linear_change(ctx.one(), m12, ctx.zero(), ctx.one())};
        }
    }
    throw PreconditionError("could not shear the tangent cone off the Y-axis");
}

} // namespace detail

template <class Ctx>
RunResult intersect(const Ctx& ctx, const Options& opt, const std::string& poly_f,
                    const std::string& poly_h) {
    using K = typename Ctx::Element;
    auto f = parse_polynomial<K>(poly_f, ctx);
    auto h = parse_polynomial<K>(poly_h, ctx);
    auto p = detail::parse_point(opt.point, ctx);
    auto f0 = f.translate_to_origin(p);
    auto h0 = h.translate_to_origin(p);
    bool sheared = false;
    std::tie(f0, h0) = detail::shear_off_y_axis(f0, h0, sheared);
    std::size_t n = detail::auto_precision<Ctx>(f0, opt.precision, 2);
    auto factored = factor_node_branches(f0, n);
    if (auto* need = std::get_if<NeedsExtension<K>>(&factored))
        throw PreconditionError("tangent cone splits only over an extension; rerun with "
                                "--field=q-adjoin:" + to_string(need->d));
    const auto& b = std::get<BranchPair<K>>(factored);
    auto report = intersect_at_node(f0, h0, b, /*with_oracle=*/true);
    RunResult out;
    out.json = Json{{"command", "intersect"},
                    {"field", field_json(ctx)},
                    {"input", Json{{"curve", f.to_string()},
                                   {"second_curve", h.to_string()},
                                   {"point", point_json(p)},
                                   {"sheared", sheared}}},
                    {"report", intersection_report_json(report)}};
    std::ostringstream t;
    t << "field:       " << ctx.name() << "\n";
    t << "curves:      " << f.to_string() << "   |   " << h.to_string() << "\n";
    t << "point:       (" << to_string(p.x) << ", " << to_string(p.y) << ")"
      << (sheared ? "  [sheared internally]" : "") << "\n";
    t << "per-branch:  " << detail::render_multiplicity(report.per_branch[0]) << ", "
      << detail::render_multiplicity(report.per_branch[1]) << "\n";
    t << "total:       " << detail::render_multiplicity(report.total) << "\n";
    t << "containment: " << (report.containment ? "yes" : "no") << "\n";
    if (report.oracle_total) t << "oracle:      " << *report.oracle_total << "\n";
    if (report.contact) t << "contact:     " << to_string(*report.contact) << "\n";
    out.text = t.str();
    return out;
}

template <class Ctx>
RunResult translate(const Ctx& ctx, const Options& opt, const std::string& poly_text) {
    using K = typename Ctx::Element;
    auto f = parse_polynomial<K>(poly_text, ctx);
    auto p = detail::parse_point(opt.point, ctx);
    auto [u, v] = detail::parse_direction(opt.direction, ctx);
    auto local = f.translate_to_origin(p);
    auto rep = classify_point(local, AffinePoint<K>{ctx.zero(), ctx.zero()});
    if (rep.classification == PointClass::needs_extension)
        throw PreconditionError("tangent cone splits only over an extension; rerun with "
                                "--field=q-adjoin:" + to_string(*rep.extension_needed));
    if (rep.classification != PointClass::ordinary_double_point)
        throw PreconditionError("the marked point is not an ordinary double point (found: " +
                                to_string(rep.classification) + ")");
    std::size_t n = opt.precision;
    if (n == 0) n = 10;
    if (n < 3) throw ConfigError("precision must be at least 3 for this command");
    auto report = translation_intersections(local, *rep.tangent_cone, u, v, n);
    RunResult out;
    out.json = Json{{"command", "translate"},
                    {"field", field_json(ctx)},
                    {"input", Json{{"curve", f.to_string()},
                                   {"point", point_json(p)},
                                   {"direction", Json::array({to_string(u), to_string(v)})}}},
                    {"report", translation_report_json(report)}};
    std::ostringstream t;
    t << "field:          " << ctx.name() << "\n";
    t << "curve:          " << f.to_string() << "  at (" << to_string(p.x) << ", "
      << to_string(p.y) << ")\n";
    t << "direction:      (" << to_string(u) << ", " << to_string(v) << ")\n";
    t << "c1:             " << report.c1.to_string("t") << "\n";
    t << "c2:             " << report.c2.to_string("t") << "\n";
    t << "on C:           residual orders "
      << ord_json(report.on_curve_residual[0], report.precision).dump() << ", "
      << ord_json(report.on_curve_residual[1], report.precision).dump() << "\n";
    t << "on C_t:         residual orders "
      << ord_json(report.on_translate_residual[0], report.precision).dump() << ", "
      << ord_json(report.on_translate_residual[1], report.precision).dump() << "\n";
    t << "distinctness:   ord_t(c1 - c2) = " << report.distinctness_ord << "\n";
    t << "transversality: orders (" << report.transversality_ord[0] << ", "
      << report.transversality_ord[1] << ")\n";
    out.text = t.str();
    return out;
}

inline RunResult selftest() {
    auto results = nodalis::selftest::run_all();
    RunResult out;
    Json rows = Json::array();
    std::ostringstream t;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        t << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << "\n";
    }
    t << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    out.json = Json{{"command", "selftest"}, {"passed", all}, {"criteria", rows}};
    out.text = t.str();
    out.exit_code = all ? 0 : 1;
    return out;
}

// argcless entry points used by the binary; exceptions become exit codes
inline RunResult run_analyze(const Options& opt, const std::string& poly) {
    return detail::guarded(
        [&] { return with_field(opt.field, [&](const auto& ctx) { return analyze(ctx, opt, poly); }); });
}
inline RunResult run_branches(const Options& opt, const std::string& poly) {
    return detail::guarded(
        [&] { return with_field(opt.field, [&](const auto& ctx) { return branches(ctx, opt, poly); }); });
}
inline RunResult run_intersect(const Options& opt, const std::string& poly_f,
                               const std::string& poly_h) {
    return detail::guarded([&] {
        return with_field(opt.field,
                          [&](const auto& ctx) { return intersect(ctx, opt, poly_f, poly_h); });
    });
}
inline RunResult run_translate(const Options& opt, const std::string& poly) {
    return detail::guarded(
        [&] { return with_field(opt.field, [&](const auto& ctx) { return translate(ctx, opt, poly); }); });
}
inline RunResult run_selftest() { return detail::guarded([] { return selftest(); }); }

} // namespace nodalis::cli
