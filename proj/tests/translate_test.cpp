#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include "nodalis/parse.hpp"
#include "nodalis/rational.hpp"
#include "nodalis/translate.hpp"

using namespace nodalis;

namespace {
Rational::Ctx q;

BivariatePoly<Rational> P(const std::string& s) { return parse_polynomial<Rational>(s, q); }

Rational ratio(long long n, long long d) { return q.from_ratio(BigInt(n), BigInt(d)); }

BranchPair<Rational> branches_of(const BivariatePoly<Rational>& f, std::size_t n = 10) {
    return std::get<BranchPair<Rational>>(factor_node_branches(f, n));
}
} // namespace

TEST_CASE("direction admissibility") {
    auto b = branches_of(P("Y^2 - X^2 - X^3"));
    REQUIRE(check_direction(P("Y^2 - X^2 - X^3"), b, q.zero(), q.one()));
    REQUIRE_FALSE(check_direction(P("Y^2 - X^2 - X^3"), b, q.one(), q.one()));
    REQUIRE_FALSE(check_direction(P("Y^2 - X^2 - X^3"), b, q.one(), -q.one()));
    auto bl = branches_of(P("Y^2 - X^2"));
    REQUIRE(check_direction(P("Y^2 - X^2"), bl, q.one(), q.zero()));
    REQUIRE_THROWS_AS(check_direction(P("Y^2 - X^2"), bl, q.zero(), q.zero()), Error);
}

TEST_CASE("the branch gap is a unit times X") {
    SECTION("nodal cubic: 2 sqrt(1+X)") {
        auto u = branch_gap_unit(branches_of(P("Y^2 - X^2 - X^3")));
        REQUIRE(u.coeff(0) == q.from_int(2));
        REQUIRE(u.coeff(1) == q.one());
        REQUIRE(u.coeff(2) == ratio(-1, 4));
        REQUIRE(u.coeff(3) == ratio(1, 8));
    }
    SECTION("two lines: the constant 2") {
        auto u = branch_gap_unit(branches_of(P("Y^2 - X^2")));
        REQUIRE(u.coeff(0) == q.from_int(2));
        for (std::size_t i = 1; i < u.precision(); ++i) REQUIRE(u.coeff(i).is_zero());
    }
    SECTION("slope difference sets the constant term") {
        // branch 1 carries the canonical root, so its slope is the larger of
        // {1, 2} and the gap unit starts at +1
        auto u = branch_gap_unit(branches_of(P("(Y - X)*(Y - 2*X) + X^3")));
        REQUIRE(u.coeff(0) == q.one());
    }
}

TEST_CASE("translation of the nodal cubic along the Y-axis") {
    auto f = P("Y^2 - X^2 - X^3");
    auto r = translation_intersections(f, branches_of(f, 8), q.zero(), q.one(), 8);

    REQUIRE(r.c1.coeff(1) == ratio(1, 2));
    REQUIRE(r.c1.coeff(2) == ratio(-1, 8));
    REQUIRE(r.c1.coeff(3) == ratio(5, 64));
    REQUIRE(r.c1.coeff(4) == ratio(-1, 16));

    REQUIRE_FALSE(r.on_curve_residual[0]);
    REQUIRE_FALSE(r.on_curve_residual[1]);
    REQUIRE_FALSE(r.on_translate_residual[0]);
    REQUIRE_FALSE(r.on_translate_residual[1]);
    REQUIRE(r.distinctness_ord == 1);
    REQUIRE(r.transversality_ord[0] == 0);
    REQUIRE(r.transversality_ord[1] == 0);

    // leading coefficient of c1 - c2 is 2/U(0) = 1
    REQUIRE((r.c1 - r.c2).coeff(1) == q.one());

    // identity coordinates: q1 = (c1, eta1(c1))
    REQUIRE(r.q1[0].agrees_with(r.c1));
}

TEST_CASE("split lines translate exactly") {
    auto f = P("Y^2 - X^2");
    auto r = translation_intersections(f, branches_of(f, 6), q.zero(), q.one(), 6);
    // q1 = (t/2, t/2), q2 = (-t/2, t/2)
    REQUIRE(r.q1[0].coeff(1) == ratio(1, 2));
    REQUIRE(r.q1[1].coeff(1) == ratio(1, 2));
    REQUIRE(r.q2[0].coeff(1) == ratio(-1, 2));
    REQUIRE(r.q2[1].coeff(1) == ratio(1, 2));
    for (std::size_t i = 2; i < 6; ++i) {
        REQUIRE(r.q1[0].coeff(i).is_zero());
        REQUIRE(r.q1[1].coeff(i).is_zero());
    }
    // exact polynomial identities, no truncation involved
    auto as_poly = [&](const TruncatedSeries<Rational>& s) {
        return UnivariatePoly<Rational>(q, s.coeffs());
    };
    auto t = UnivariatePoly<Rational>::monomial(q, q.one(), 1);
    REQUIRE(f.evaluate_univariate(as_poly(r.q1[0]), as_poly(r.q1[1])).is_zero());
    REQUIRE(f.evaluate_univariate(as_poly(r.q1[0]), as_poly(r.q1[1]) - t).is_zero());
    REQUIRE(f.evaluate_univariate(as_poly(r.q2[0]), as_poly(r.q2[1])).is_zero());
    REQUIRE(f.evaluate_univariate(as_poly(r.q2[0]), as_poly(r.q2[1]) - t).is_zero());
}

TEST_CASE("branch attribution: q1 sits on branch 1 of C and branch 2 of the translate") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f, 9);
    auto r = translation_intersections(f, b, q.zero(), q.one(), 9);
    auto t = TruncatedSeries<Rational>::identity(q, 9);
    // y-coordinate of q1 shifted down by t lies on branch 2
    auto shifted = r.q1[1] - t;
    REQUIRE(shifted.agrees_with(b.eta2.compose(r.c1)));
    auto shifted2 = r.q2[1] - t;
    REQUIRE(shifted2.agrees_with(b.eta1.compose(r.c2)));
}

TEST_CASE("gradients along the two points approach the two slopes") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f, 9);
    auto r = translation_intersections(f, b, q.zero(), q.one(), 9);
    auto [fx, fy] = f.partials();
    auto grad0 = [&](const TruncatedSeries<Rational>& x, const TruncatedSeries<Rational>& y) {
        auto a = fx.evaluate_series(x, y);
        auto den = fy.evaluate_series(x, y);
        auto k = *den.ord();
        return ((-a.div_xk(k)) * den.div_xk(k).inverse()).coeff(0);
    };
    auto t = TruncatedSeries<Rational>::identity(q, 9);
    REQUIRE(grad0(r.q1[0], r.q1[1]) == q.one());        // slope of branch 1
    REQUIRE(grad0(r.q1[0], r.q1[1] - t) == -q.one());   // the translate carries branch 2
    REQUIRE(grad0(r.q2[0], r.q2[1]) == -q.one());
    REQUIRE(grad0(r.q2[0], r.q2[1] - t) == q.one());
}

TEST_CASE("directions that need a genuine coordinate change") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f, 8);
    for (auto [u, v] : std::vector<std::pair<long long, long long>>{{1, 0}, {1, 2}, {2, 1}, {0, 1}}) {
        auto r = translation_intersections(f, b, q.from_int(u), q.from_int(v), 8);
        REQUIRE_FALSE(r.on_curve_residual[0]);
        REQUIRE_FALSE(r.on_curve_residual[1]);
        REQUIRE_FALSE(r.on_translate_residual[0]);
        REQUIRE_FALSE(r.on_translate_residual[1]);
        REQUIRE(r.distinctness_ord == 1);
        REQUIRE(r.transversality_ord == std::array<std::size_t, 2>{0, 0});
    }
    REQUIRE_THROWS_AS(translation_intersections(f, b, q.one(), q.one(), 8), PreconditionError);
}

TEST_CASE("standalone transversality recomputation") {
    auto f = P("Y^2 - X^2 - X^3");
    auto b = branches_of(f, 8);
    auto r = translation_intersections(f, b, q.from_int(1), q.from_int(3), 8);
    auto orders = transversality(f, r);
    REQUIRE(orders == std::array<std::size_t, 2>{0, 0});
}

TEST_CASE("numeric spot check at t0 = 1/100") {
    // Evaluating the truncated q1 at a small rational leaves a residual no
    // bigger than the truncation tail; this is a sanity bound, not a proof.
    auto f = P("Y^2 - X^2 - X^3");
    const std::size_t n = 8;
    auto r = translation_intersections(f, branches_of(f, n), q.zero(), q.one(), n);
    Rational t0 = ratio(1, 100);
    auto eval_series = [&](const TruncatedSeries<Rational>& s) {
        Rational acc = q.zero();
        Rational p = q.one();
        for (std::size_t i = 0; i < s.precision(); ++i) {
            acc = acc + s.coeff(i) * p;
            p = p * t0;
        }
        return acc;
    };
    Rational xq = eval_series(r.q1[0]), yq = eval_series(r.q1[1]);
    Rational on_curve = f.evaluate(xq, yq);
    Rational on_translate = f.evaluate(xq, yq - t0);
    Rational bound = pow_int(t0, n - 2);
    auto abs = [&](const Rational& v) { return v.is_negative() ? -v : v; };
    REQUIRE(abs(on_curve).less_than(bound));
    REQUIRE(abs(on_translate).less_than(bound));
    REQUIRE_FALSE(on_curve.is_zero()); // truncation really does leave a tail
}
