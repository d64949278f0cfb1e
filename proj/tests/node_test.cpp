#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nodalis/node.hpp"
#include "nodalis/parse.hpp"
#include "nodalis/prime_field.hpp"
#include "nodalis/quad_ext.hpp"
#include "nodalis/rational.hpp"

using namespace nodalis;

namespace {
Rational::Ctx q;
const AffinePoint<Rational> origin{Rational(), Rational()};

BivariatePoly<Rational> P(const std::string& s) { return parse_polynomial<Rational>(s, q); }
} // namespace

TEST_CASE("classification of marked points") {
    SECTION("ordinary double point with its tangent cone") {
        auto r = classify_point(P("Y^2 - X^2 - X^3"), origin);
        REQUIRE(r.classification == PointClass::ordinary_double_point);
        REQUIRE(r.tangent_cone);
        REQUIRE(r.tangent_cone->first == LinearForm<Rational>::with_slope(q, q.one()));
        REQUIRE(r.tangent_cone->second == LinearForm<Rational>::with_slope(q, -q.one()));
    }
    SECTION("cusp: repeated tangent") {
        auto r = classify_point(P("Y^2 - X^3"), origin);
        REQUIRE(r.classification == PointClass::other_singular);
        REQUIRE_FALSE(r.tangent_cone);
    }
    SECTION("smooth point") {
        REQUIRE(classify_point(P("Y - X^2"), origin).classification == PointClass::smooth);
    }
    SECTION("off the curve") {
        REQUIRE(classify_point(P("Y - X^2 + 1"), origin).classification ==
                PointClass::not_on_curve);
    }
    SECTION("triple point") {
        REQUIRE(classify_point(P("X*Y*(X + Y) + X^4"), origin).classification ==
                PointClass::other_singular);
    }
    SECTION("at a shifted point") {
        auto f = P("(Y - 1)^2 - (X - 2)^2 - (X - 2)^3");
        auto r = classify_point(f, AffinePoint<Rational>{q.from_int(2), q.one()});
        REQUIRE(r.classification == PointClass::ordinary_double_point);
    }
    SECTION("irrational cone surfaces the extension") {
        auto r = classify_point(P("X^2 + Y^2 + X^3"), origin);
        REQUIRE(r.classification == PointClass::needs_extension);
        REQUIRE(r.extension_needed);
        REQUIRE(*r.extension_needed == q.from_int(-1));

        auto ext = adjoin_sqrt<Rational>(q, *r.extension_needed);
        auto lifted = parse_polynomial<QuadExt<Rational>>("X^2 + Y^2 + X^3", ext);
        auto r2 = classify_point(lifted,
                                 AffinePoint<QuadExt<Rational>>{ext.zero(), ext.zero()});
        REQUIRE(r2.classification == PointClass::ordinary_double_point);
    }
    SECTION("the same flow over a prime field") {
        Fp::Ctx f7(7); // -4 = 3 is a non-residue mod 7
        auto f = parse_polynomial<Fp>("X^2 + Y^2 + X^3", f7);
        auto r = classify_point(f, AffinePoint<Fp>{f7.zero(), f7.zero()});
        REQUIRE(r.classification == PointClass::needs_extension);
        REQUIRE(*r.extension_needed == f7.from_int(3));
        auto ext = adjoin_sqrt<Fp>(f7, *r.extension_needed);
        auto lifted = parse_polynomial<QuadExt<Fp>>("X^2 + Y^2 + X^3", ext);
        auto r2 = classify_point(lifted, AffinePoint<QuadExt<Fp>>{ext.zero(), ext.zero()});
        REQUIRE(r2.classification == PointClass::ordinary_double_point);
    }
    SECTION("batch helper") {
        auto rs = classify_points(P("Y^2 - X^2 - X^3"),
                                  {origin, AffinePoint<Rational>{q.one(), q.one()}});
        REQUIRE(rs.size() == 2);
        REQUIRE(rs[0].classification == PointClass::ordinary_double_point);
    }
}

TEST_CASE("line multiplicities at the node") {
    auto f = P("Y^2 - X^2 - X^3");
    auto mult = [&](const LinearForm<Rational>& l) { return line_multiplicity(f, origin, l); };
    REQUIRE(*mult(LinearForm<Rational>::with_slope(q, q.from_int(2))) == 2);
    REQUIRE(*mult(LinearForm<Rational>::with_slope(q, q.one())) == 3);
    REQUIRE(*mult(LinearForm<Rational>::with_slope(q, -q.one())) == 3);
    REQUIRE(*mult(LinearForm<Rational>::with_slope(q, q.zero())) == 2);
    REQUIRE(*mult(LinearForm<Rational>::vertical(q)) == 2);

    // a line that is a component has infinite contact
    auto g = P("Y^2 - X^2");
    REQUIRE_FALSE(line_multiplicity(g, origin, LinearForm<Rational>::with_slope(q, q.one())));
}

TEST_CASE("finite-sample node verification") {
    auto sample = default_line_sample<Rational>(
        q, std::make_pair(LinearForm<Rational>::with_slope(q, q.one()),
                          LinearForm<Rational>::with_slope(q, -q.one())));
    SECTION("the nodal cubic passes") {
        REQUIRE(verify_odp_by_lines(P("Y^2 - X^2 - X^3"), origin, sample));
    }
    SECTION("a split pair of lines passes (components count as deep contact)") {
        REQUIRE(verify_odp_by_lines(P("Y^2 - X^2"), origin, sample));
    }
    SECTION("the cusp fails: only one deep line") {
        auto s = default_line_sample<Rational>(q, std::nullopt);
        REQUIRE_FALSE(verify_odp_by_lines(P("Y^2 - X^3"), origin, s));
    }
    SECTION("smooth points fail") {
        auto s = default_line_sample<Rational>(q, std::nullopt);
        REQUIRE_FALSE(verify_odp_by_lines(P("Y - X^2"), origin, s));
    }
    SECTION("degenerate samples are rejected") {
        std::vector<LinearForm<Rational>> tiny(4, LinearForm<Rational>::with_slope(q, q.one()));
        REQUIRE_THROWS_AS(verify_odp_by_lines(P("Y^2 - X^2"), origin, tiny), Error);
    }
}

TEST_CASE("non-tangent lines meet a node with multiplicity exactly 2") {
    std::mt19937_64 rng(0x4E);
    std::uniform_int_distribution<long long> val(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        Rational a = q.from_int(val(rng)), b = q.from_int(val(rng));
        while (a == b) b = q.from_int(val(rng));
        auto x = BivariatePoly<Rational>::variable_x(q);
        auto y = BivariatePoly<Rational>::variable_y(q);
        auto f = (y - x.scale(a)) * (y - x.scale(b)) +
                 BivariatePoly<Rational>::monomial(q, q.from_int(val(rng)), 3, 1) +
                 BivariatePoly<Rational>::monomial(q, q.one(), 4, 0);
        int sampled = 0;
        for (long long s = -6; s <= 6 && sampled < 10; ++s) {
            Rational slope = q.from_int(s);
            if (slope == a || slope == b) continue;
            ++sampled;
            auto m = line_multiplicity(f, origin, LinearForm<Rational>::with_slope(q, slope));
            REQUIRE(*m == 2);
        }
        for (const Rational& t : {a, b}) {
            auto m = line_multiplicity(f, origin, LinearForm<Rational>::with_slope(q, t));
            REQUIRE((!m || *m > 2));
        }
    }
}

TEST_CASE("default sample is deterministic and deduplicated") {
    auto cone = std::make_pair(LinearForm<Rational>::with_slope(q, q.one()),
                               LinearForm<Rational>::with_slope(q, q.from_int(2)));
    auto sample = default_line_sample<Rational>(q, cone);
    // slopes 1 and 2 collide with the cone; 0, -1, 3 remain
    REQUIRE(sample.size() == 5);
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j) REQUIRE(sample[i] != sample[j]);
}
