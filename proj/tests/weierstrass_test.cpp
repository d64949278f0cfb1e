#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodalis/parse.hpp"
#include "nodalis/prime_field.hpp"
#include "nodalis/rational.hpp"
#include "nodalis/weierstrass.hpp"

using namespace nodalis;

namespace {
Rational::Ctx q;

BivariatePoly<Rational> P(const std::string& s) { return parse_polynomial<Rational>(s, q); }

Rational ratio(long long n, long long d) { return q.from_ratio(BigInt(n), BigInt(d)); }

std::mt19937_64 rng(0x77);

BivariatePoly<Rational> rand_poly(int maxdeg, int mindeg = 0) {
    std::uniform_int_distribution<int> val(-5, 5), keep(0, 1);
    for (;;) {
        BivariatePoly<Rational> p(q);
        for (int i = 0; i <= maxdeg; ++i)
            for (int j = 0; i + j <= maxdeg; ++j)
                if (i + j >= mindeg && keep(rng)) p.set_coeff(i, j, q.from_int(val(rng)));
        if (!p.is_zero()) return p;
    }
}

BivariatePoly<Rational> rand_nodal() {
    std::uniform_int_distribution<int> val(-4, 4);
    Rational a = q.from_int(val(rng)), b = q.from_int(val(rng));
    while (a == b) b = q.from_int(val(rng));
    auto x = BivariatePoly<Rational>::variable_x(q);
    auto y = BivariatePoly<Rational>::variable_y(q);
    return (y - x.scale(a)) * (y - x.scale(b)) + rand_poly(5, 3);
}
} // namespace

TEST_CASE("preparation of simple shapes") {
    SECTION("already a Weierstrass quadratic") {
        auto w = weierstrass_prepare(P("Y^2 - X^2 - X^3"), 8);
        REQUIRE(w.d == 2);
        REQUIRE(w.unit == P("1"));
        REQUIRE_FALSE(w.c[0].ord()); // c1 = 0
        TruncatedSeries<Rational> c2(q, 8);
        c2.set_coeff(2, -q.one());
        c2.set_coeff(3, -q.one());
        REQUIRE(w.c[1] == c2);
    }
    SECTION("a unit times a quadratic") {
        auto w = weierstrass_prepare(P("Y^2 + Y^3 - X^2 - X^2*Y"), 8);
        REQUIRE(w.d == 2);
        REQUIRE(w.unit == P("1 + Y"));
        REQUIRE_FALSE(w.c[0].ord());
        TruncatedSeries<Rational> c2(q, 8);
        c2.set_coeff(2, -q.one());
        REQUIRE(w.c[1] == c2);
    }
    SECTION("degree one") {
        auto w = weierstrass_prepare(P("Y - X^2"), 6);
        REQUIRE(w.d == 1);
        REQUIRE(w.unit == P("1"));
        TruncatedSeries<Rational> c1(q, 6);
        c1.set_coeff(2, -q.one());
        REQUIRE(w.c[0] == c1);
    }
    SECTION("unit at the origin gives d = 0") {
        auto w = weierstrass_prepare(P("1 + X + Y"), 5);
        REQUIRE(w.d == 0);
        REQUIRE(w.unit == P("1 + X + Y"));
    }
    SECTION("a curve containing the Y-axis is rejected") {
        REQUIRE_THROWS_AS(weierstrass_prepare(P("X*Y + X^2"), 5), PreconditionError);
    }
}

TEST_CASE("reconstruction and uniqueness on random curves") {
    for (int i = 0; i < 40; ++i) {
        BivariatePoly<Rational> f(q);
        do {
            f = rand_poly(6);
        } while (f.coeff_of_x(0).is_zero());
        auto w = weierstrass_prepare(f, 12);
        auto recon = (w.unit * weierstrass_polynomial(w, q)).truncate_x(12);
        REQUIRE(recon == f.truncate_x(12));
        auto w6 = weierstrass_prepare(f, 6);
        REQUIRE(w6.unit == w.unit.truncate_x(6));
        for (std::size_t c = 0; c < w.d; ++c) REQUIRE(w6.c[c].agrees_with(w.c[c]));
    }
}

TEST_CASE("discriminant case analysis") {
    SECTION("square discriminant with canonical root") {
        auto da = analyze_discriminant(weierstrass_prepare(P("Y^2 - X^2 - X^3"), 8));
        REQUIRE(da.verdict == DiscVerdict::square);
        REQUIRE(da.root);
        REQUIRE(da.root->coeff(1) == q.from_int(2));
        REQUIRE(da.root->coeff(2) == q.one());
        REQUIRE(da.root->coeff(3) == ratio(-1, 4));
        REQUIRE((*da.root * *da.root).agrees_with(da.discriminant));
    }
    SECTION("odd order: a cusp") {
        auto da = analyze_discriminant(weierstrass_prepare(P("Y^2 - X^3"), 8));
        REQUIRE(da.verdict == DiscVerdict::odd_order);
    }
    SECTION("non-square unit part") {
        auto da = analyze_discriminant(weierstrass_prepare(P("Y^2 - 1/2*X^2"), 8));
        REQUIRE(da.verdict == DiscVerdict::nonsquare_unit);
        REQUIRE(da.nonsquare_value);
        REQUIRE(*da.nonsquare_value == q.from_int(2));
    }
    SECTION("identically vanishing discriminant cannot be classified") {
        REQUIRE_THROWS_AS(analyze_discriminant(weierstrass_prepare(P("Y^2"), 6)),
                          InsufficientPrecision);
    }
    SECTION("wrong degree is rejected") {
        REQUIRE_THROWS_AS(analyze_discriminant(weierstrass_prepare(P("Y - X^2"), 6)), Error);
    }
}

TEST_CASE("branch factorization at a node") {
    SECTION("split pair of lines: exact finite series") {
        auto b = std::get<BranchPair<Rational>>(factor_node_branches(P("Y^2 - X^2"), 6));
        REQUIRE(b.eta1.agrees_with(TruncatedSeries<Rational>::identity(q, 6)));
        REQUIRE(b.eta2.agrees_with(-TruncatedSeries<Rational>::identity(q, 6)));
        REQUIRE(b.slopes.first == q.one());
        REQUIRE(b.slopes.second == -q.one());
    }
    SECTION("the nodal cubic") {
        auto b = std::get<BranchPair<Rational>>(factor_node_branches(P("Y^2 - X^2 - X^3"), 7));
        REQUIRE(b.eta1.coeff(1) == q.one());
        REQUIRE(b.eta1.coeff(2) == ratio(1, 2));
        REQUIRE(b.eta1.coeff(3) == ratio(-1, 8));
        REQUIRE(b.eta1.coeff(4) == ratio(1, 16));
        REQUIRE(b.eta1.coeff(5) == ratio(-5, 128));
        REQUIRE(b.eta1.coeff(6) == ratio(7, 256));
        REQUIRE(b.eta2.agrees_with(-b.eta1));
    }
    SECTION("unit factor does not disturb the branches") {
        auto b = std::get<BranchPair<Rational>>(
            factor_node_branches(P("Y^2 + Y^3 - X^2 - X^2*Y"), 6));
        REQUIRE(b.eta1.agrees_with(TruncatedSeries<Rational>::identity(q, 6)));
        REQUIRE(b.eta2.agrees_with(-TruncatedSeries<Rational>::identity(q, 6)));
    }
    SECTION("derivative of the cubic's branch") {
        auto b = std::get<BranchPair<Rational>>(factor_node_branches(P("Y^2 - X^2 - X^3"), 7));
        auto d = b.eta1.derivative();
        REQUIRE(d.coeff(0) == q.one());
        REQUIRE(d.coeff(1) == q.one());
        REQUIRE(d.coeff(2) == ratio(-3, 8));
        REQUIRE(d.coeff(3) == ratio(1, 4));
    }
    SECTION("preconditions") {
        REQUIRE_THROWS_AS(factor_node_branches(P("Y^2 - X^3"), 6), PreconditionError);
        REQUIRE_THROWS_AS(factor_node_branches(P("Y - X^2"), 6), PreconditionError);
        // X*Y has a node whose tangent cone contains the Y-axis
        REQUIRE_THROWS_AS(factor_node_branches(P("X*Y + X^3"), 6), PreconditionError);
    }
    SECTION("irrational tangent cone reports its square class") {
        auto r = factor_node_branches(P("X^2 + Y^2 + X^3"), 6);
        auto* need = std::get_if<NeedsExtension<Rational>>(&r);
        REQUIRE(need);
        REQUIRE(need->d == q.from_int(-1));
    }
}

TEST_CASE("branch identities on random nodes") {
    for (int i = 0; i < 30; ++i) {
        auto f = rand_nodal();
        const std::size_t n = 10;
        auto b = std::get<BranchPair<Rational>>(factor_node_branches(f, n));
        auto t = TruncatedSeries<Rational>::identity(q, n);
        REQUIRE_FALSE(f.evaluate_series(t, b.eta1).ord());
        REQUIRE_FALSE(f.evaluate_series(t, b.eta2).ord());

        auto w = weierstrass_prepare(f, n + 1);
        REQUIRE((b.eta1 + b.eta2).agrees_with(-w.c[0]));
        REQUIRE((b.eta1 * b.eta2).agrees_with(w.c[1]));

        // slopes match the tangent cone's factors
        auto split = std::get<QuadraticSplit<Rational>>(
            split_binary_quadratic(f.homogeneous_part(2)));
        std::pair<Rational, Rational> cone{split.l1.slope(), split.l2.slope()};
        bool match = (cone.first == b.slopes.first && cone.second == b.slopes.second) ||
                     (cone.first == b.slopes.second && cone.second == b.slopes.first);
        REQUIRE(match);
    }
}

TEST_CASE("lifting oracle agrees with completing the square") {
    auto same = [](const BranchPair<Rational>& a, const BranchPair<Rational>& b) {
        return (a.eta1.agrees_with(b.eta1) && a.eta2.agrees_with(b.eta2)) ||
               (a.eta1.agrees_with(b.eta2) && a.eta2.agrees_with(b.eta1));
    };
    auto cases = {P("Y^2 - X^2 - X^3"), P("Y^2 - X^2"), P("(Y - X)*(Y - 2*X) + X^3")};
    for (const auto& f : cases) {
        auto a = std::get<BranchPair<Rational>>(factor_node_branches(f, 8));
        auto h = std::get<BranchPair<Rational>>(hensel_branch_oracle(f, 8));
        REQUIRE(same(a, h));
    }
    for (int i = 0; i < 25; ++i) {
        auto f = rand_nodal();
        auto a = std::get<BranchPair<Rational>>(factor_node_branches(f, 9));
        auto h = std::get<BranchPair<Rational>>(hensel_branch_oracle(f, 9));
        REQUIRE(same(a, h));
    }
}

TEST_CASE("branch tangents") {
    auto b = std::get<BranchPair<Rational>>(factor_node_branches(P("Y^2 - X^2 - X^3"), 6));
    auto [t1, t2] = branch_tangents(b);
    REQUIRE(t1 == LinearForm<Rational>::with_slope(q, q.one()));
    REQUIRE(t2 == LinearForm<Rational>::with_slope(q, -q.one()));

    auto c = std::get<BranchPair<Rational>>(
        factor_node_branches(P("(Y - X)*(Y - 2*X) + X^3"), 6));
    auto [u1, u2] = branch_tangents(c);
    std::vector<LinearForm<Rational>> got{u1, u2};
    REQUIRE(std::count(got.begin(), got.end(), LinearForm<Rational>::with_slope(q, q.one())) == 1);
    REQUIRE(std::count(got.begin(), got.end(),
                       LinearForm<Rational>::with_slope(q, q.from_int(2))) == 1);
}

TEST_CASE("prime-field preparation") {
    Fp::Ctx f7(7);
    auto f = parse_polynomial<Fp>("Y^2 + Y^3 - X^2 - X^2*Y", f7);
    auto w = weierstrass_prepare(f, 10);
    REQUIRE(w.d == 2);
    auto recon = (w.unit * weierstrass_polynomial(w, f7)).truncate_x(10);
    REQUIRE(recon == f.truncate_x(10));
    auto b = std::get<BranchPair<Fp>>(factor_node_branches(f, 8));
    auto t = TruncatedSeries<Fp>::identity(f7, 8);
    REQUIRE_FALSE(f.evaluate_series(t, b.eta1).ord());
}
