#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinlab/braid.hpp"
#include "skeinlab/coeffs.hpp"
#include "skeinlab/conway.hpp"
#include "skeinlab/corpus.hpp"
#include "skeinlab/hecke.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/threebraid.hpp"

#include <sstream>

using namespace skeinlab;

namespace {

LaurentPoly zpoly(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p("z");
    for (const auto& [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

}  // namespace

TEST_CASE("three-strand closed forms equal the engine") {
    SUBCASE("figure-eight spot check") {
        const BraidWord b = parse_braid("1 -2 1 -2");
        const InvariantSet iv = invariants(b);
        const StdFormDecomp closed = p3_closed(b, iv.nabla);
        CHECK(closed.p == iv.decomp.p);
        CHECK(closed.h == iv.decomp.h);
        CHECK(p3_lemma1(b) == iv.P);
        CHECK(jones3(b, iv.alex) == iv.jones);
    }
    SUBCASE("exhaustive over short canonical words") {
        for (const BraidWord& b : canonical_three_words(5)) {
            CAPTURE(render_braid(b));
            const InvariantSet iv = invariants(b);
            CHECK(p3_closed(b, iv.nabla).p == iv.decomp.p);
            CHECK(p3_lemma1(b) == iv.P);
            CHECK(jones3(b, iv.alex) == iv.jones);
        }
    }
    SUBCASE("three-strand preconditions") {
        const BraidWord two = parse_braid("1 1");
        CHECK_THROWS_AS(p3_closed(two, LaurentPoly("z")), std::invalid_argument);
        CHECK_THROWS_AS(p3_lemma1(two), std::invalid_argument);
        CHECK_THROWS_AS(jones3(two, LaurentPoly("s")), std::invalid_argument);
    }
}

TEST_CASE("equal-P prediction clauses") {
    const LaurentPoly one = LaurentPoly::one("z");
    const LaurentPoly trefoil = zpoly({{0, 1}, {2, 1}});

    SUBCASE("same writhe, same Conway") {
        const auto d = equal_p_predict(3, trefoil, 3, trefoil);
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::same_writhe);
    }
    SUBCASE("writhe gap of two with the torus Conway value") {
        auto d = equal_p_predict(2, one, 0, one);  // C_1 = 1
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::writhe_gap);
        d = equal_p_predict(0, one, 2, one);  // argument order is immaterial
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::writhe_gap);
    }
    SUBCASE("opposite writhes +-2 with Conway one") {
        const auto d = equal_p_predict(2, one, -2, one);
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::opposite_two);
    }
    SUBCASE("negative cases") {
        auto d = equal_p_predict(3, trefoil, 1, one);  // Conway differs
        CHECK_FALSE(d.equal);
        CHECK(d.which == EqualPCase::none);
        d = equal_p_predict(4, zpoly({{1, 2}, {3, 1}}), 2, zpoly({{1, 2}, {3, 1}}));
        CHECK_FALSE(d.equal);  // gap 2 but nabla != C_3
        d = equal_p_predict(4, one, -4, one);  // gap too wide for the +-2 clause
        CHECK_FALSE(d.equal);
    }
}

TEST_CASE("equal-P decision on words") {
    SUBCASE("identical closures") {
        const auto d = equal_p_decision(parse_braid("B3: 1 1 1"), parse_braid("B3: 2 2 2"));
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::same_writhe);
        CHECK(homflypt(parse_braid("B3: 1 1 1")) == homflypt(parse_braid("B3: 2 2 2")));
    }
    SUBCASE("unknot closures of opposite writhe") {
        const auto d = equal_p_decision(parse_braid("B3: 1 2"), parse_braid("B3: -1 -2"));
        CHECK(d.equal);
        CHECK(d.which == EqualPCase::opposite_two);
        CHECK(homflypt(parse_braid("B3: 1 2")) == homflypt(parse_braid("B3: -1 -2")));
    }
    SUBCASE("prediction matches reality on all short canonical pairs") {
        const auto words = canonical_three_words(4);
        std::vector<BiLaurent> P(words.size());
        std::vector<LaurentPoly> nabla(words.size());
        std::vector<long> w(words.size());
        for (size_t i = 0; i < words.size(); ++i) {
            P[i] = homflypt(words[i]);
            nabla[i] = P[i].at_v_one();
            w[i] = writhe(words[i]);
        }
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i + 1; j < words.size(); ++j) {
                const auto d = equal_p_predict(w[i], nabla[i], w[j], nabla[j]);
                CAPTURE(render_braid(words[i]));
                CAPTURE(render_braid(words[j]));
                CHECK(d.equal == (P[i] == P[j]));
            }
    }
    SUBCASE("strand-count precondition") {
        CHECK_THROWS_AS(equal_p_decision(parse_braid("1 1"), parse_braid("B3: 1")),
                        std::invalid_argument);
    }
}

TEST_CASE("degree landscape") {
    SUBCASE("holds across short canonical words") {
        for (const BraidWord& b : canonical_three_words(5)) {
            CAPTURE(render_braid(b));
            CHECK(landscape_check(invariants(b).decomp));
        }
    }
    SUBCASE("zero coefficient polynomials sit below everything") {
        // Closure of sigma_1 in B_3: p = (z, -z, 0).
        const auto d = invariants(parse_braid("B3: 1")).decomp;
        REQUIRE(d.p.size() == 3);
        CHECK(d.p[2].is_zero());
        CHECK(landscape_check(d));
    }
    SUBCASE("a real strict valley is reported, not smoothed over") {
        // Shortest words whose middle coefficient drops strictly below both
        // ends; the check must return false for them.
        const auto d = invariants(parse_braid("B3: -2 1 2^2 1^2 2^2 1")).decomp;
        REQUIRE(d.p.size() == 3);
        CHECK(d.p[0].max_exp() == 7);
        CHECK(d.p[1].max_exp() == 1);
        CHECK(d.p[2].max_exp() == 3);
        CHECK_FALSE(landscape_check(d));
        CHECK_FALSE(
            landscape_check(invariants(parse_braid("B3: -2^2 -1^2 -2^2 -1 2 -1")).decomp));
    }
    SUBCASE("synthetic failure and edge shapes") {
        StdFormDecomp d;
        d.n = 3;
        d.p = {zpoly({{2, 1}}), zpoly({{1, 1}}), zpoly({{2, 1}})};
        CHECK_FALSE(landscape_check(d));  // both ends above the middle
        d.p = {LaurentPoly("z"), LaurentPoly("z"), zpoly({{3, 1}})};
        CHECK(landscape_check(d));  // zero p_0 counts as -infinity
        d.n = 2;
        CHECK_THROWS_AS(landscape_check(d), std::invalid_argument);
    }
}

TEST_CASE("omega family representatives") {
    CHECK(omega_rep({0, 1, 1, 1, {}}).letters == std::vector<int>{2, 1, 2, 1, 2, 1});
    CHECK(omega_rep({0, -1, 1, 1, {}}).letters ==
          std::vector<int>{-1, -2, -1, -2, -1, -2});
    CHECK(omega_rep({1, 0, 1, 1, {}}).letters == std::vector<int>{2, 1});
    CHECK(omega_rep({2, 0, 1, 1, {}}).letters == std::vector<int>{2, 1, 2, 1});
    CHECK(omega_rep({3, 0, 1, 1, {}}).letters == std::vector<int>{2, 1, 2});
    CHECK(omega_rep({4, 0, 3, 1, {}}).letters == std::vector<int>{-2, -2, -2});
    CHECK(omega_rep({5, 1, 1, 2, {}}).letters ==
          std::vector<int>{2, 1, 2, 1, 2, 1, 1, 1});
    CHECK(omega_rep({6, 0, 1, 1, {{1, 2}, {2, 1}}}).letters ==
          std::vector<int>{-2, 1, 1, -2, -2, 1});

    CHECK_THROWS_AS(omega_rep({7, 0, 1, 1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(omega_rep({4, 0, 0, 1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(omega_rep({5, 0, 1, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(omega_rep({6, 0, 1, 1, {}}), std::invalid_argument);
    CHECK_THROWS_AS(omega_rep({6, 0, 1, 1, {{0, 1}}}), std::invalid_argument);
}

TEST_CASE("omega closed-form Alexander values") {
    SUBCASE("pinned small members") {
        CHECK(omega_alexander({0, 0, 1, 1, {}}).is_zero());  // three-component unlink
        CHECK(omega_alexander({1, 0, 1, 1, {}}).str() == "1");  // unknot
        CHECK(omega_alexander({2, 0, 1, 1, {}}).str() == "s^-2 - 1 + s^2");  // trefoil
        CHECK(omega_alexander({3, 0, 1, 1, {}}).str() == "-s^-1 + s");       // Hopf link
        CHECK(omega_alexander({4, 0, 1, 1, {}}).is_zero());  // split closure
    }
    SUBCASE("unit-equal to both oracles across a grid") {
        std::vector<OmegaClass> grid;
        for (int idx = 0; idx <= 3; ++idx)
            for (long d = -2; d <= 2; ++d) grid.push_back({idx, d, 1, 1, {}});
        for (long d = -1; d <= 1; ++d)
            for (long x = 1; x <= 3; ++x) {
                grid.push_back({4, d, x, 1, {}});
                grid.push_back({5, d, 1, x, {}});
            }
        const std::vector<std::vector<std::pair<long, long>>> etas = {
            {{1, 1}}, {{2, 1}}, {{1, 2}, {2, 2}}, {{3, 3}}};
        for (long d = -1; d <= 1; ++d)
            for (const auto& eta : etas) grid.push_back({6, d, 1, 1, eta});

        for (const OmegaClass& c : grid) {
            const BraidWord rep = omega_rep(c);
            CAPTURE(render_braid(rep));
            const LaurentPoly closed = omega_alexander(c);
            CHECK(unit_equal(closed, alexander_burau(rep)));
            CHECK(unit_equal(closed, specialize(homflypt(rep), Specialization::alexander)));
            CHECK(alexander_symmetric(closed, component_count(rep)));
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(omega_alexander({9, 0, 1, 1, {}}), std::invalid_argument);
        CHECK_THROWS_AS(omega_alexander({4, 0, 0, 1, {}}), std::invalid_argument);
        CHECK_THROWS_AS(omega_alexander({5, 0, 1, -1, {}}), std::invalid_argument);
        CHECK_THROWS_AS(omega_alexander({6, 0, 1, 1, {}}), std::invalid_argument);
    }
}

TEST_CASE("full-twist augmentation identities") {
    for (const char* text : {"B3:", "B3: 1", "B3: 1 1 1", "B3: 1 -2 1 -2",
                             "B3: -2 -2 1", "B3: 2 1 2 1 1"}) {
        for (long a = 1; a <= 3; ++a) {
            CAPTURE(text);
            CAPTURE(a);
            CHECK(augmented_identities(a, parse_braid(text)));
        }
    }
    CHECK_THROWS_AS(augmented_identities(0, parse_braid("B3: 1")), std::invalid_argument);
    CHECK_THROWS_AS(augmented_identities(-1, parse_braid("B3: 1")), std::invalid_argument);
    CHECK_THROWS_AS(augmented_identities(1, parse_braid("1 1")), std::invalid_argument);
}

TEST_CASE("alternating-product factorization") {
    using Blocks = std::vector<std::pair<long, long>>;
    CHECK(eta_factorization(parse_braid("B3: -2 1")) == Blocks{{1, 1}});
    CHECK(eta_factorization(parse_braid("B3: -2 -2 1 1 1 -2 1")) ==
          Blocks{{2, 3}, {1, 1}});
    // Free reduction happens first.
    CHECK(eta_factorization(parse_braid("B3: -2 2 -2 1")) == Blocks{{1, 1}});

    CHECK(eta_factorization(parse_braid("B3: 1 -2")) == std::nullopt);
    CHECK(eta_factorization(parse_braid("B3: -2 1 -2")) == std::nullopt);
    CHECK(eta_factorization(parse_braid("B3: -2 1 2 1")) == std::nullopt);
    CHECK(eta_factorization(parse_braid("B3: 2 1")) == std::nullopt);
    CHECK(eta_factorization(parse_braid("B3:")) == std::nullopt);
    CHECK(eta_factorization(parse_braid("1 1")) == std::nullopt);  // two strands
}

TEST_CASE("alternating-product closure checks") {
    SUBCASE("single small block: nothing applicable, nothing failing") {
        const EtaChecks c = eta_product_checks({{1, 1}});
        CHECK_FALSE(c.leading_applicable);
        CHECK_FALSE(c.product_applicable);
        CHECK(c.all());
    }
    SUBCASE("leading coefficients") {
        for (const auto& blocks : std::vector<std::vector<std::pair<long, long>>>{
                 {{2, 2}}, {{3, 2}}, {{2, 3}}, {{1, 2}, {3, 1}}, {{2, 2}, {2, 2}}}) {
            const EtaChecks c = eta_product_checks(blocks);
            CHECK(c.leading_applicable);
            CHECK(c.all());
        }
    }
    SUBCASE("two-block exact product form") {
        for (const auto& blocks : std::vector<std::vector<std::pair<long, long>>>{
                 {{1, 1}, {1, 1}}, {{2, 1}, {1, 3}}, {{3, 2}, {2, 2}}}) {
            const EtaChecks c = eta_product_checks(blocks);
            CHECK(c.product_applicable);
            CHECK(c.all());
        }
    }
    SUBCASE("three blocks: product clause not applicable") {
        const EtaChecks c = eta_product_checks({{2, 2}, {2, 2}, {2, 2}});
        CHECK_FALSE(c.product_applicable);
        CHECK(c.leading_applicable);
        CHECK(c.all());
    }
}

TEST_CASE("equal-Conway distinct-P witness family") {
    for (const auto& [x, y] : std::vector<std::pair<long, long>>{{3, 1}, {4, 2}}) {
        const auto [beta, gamma] = example1_instance(x, y);
        CAPTURE(x);
        CAPTURE(y);
        CHECK(beta.letters.size() == static_cast<size_t>(6 * x + 3 * x + 3 * y + 2));
        CHECK(writhe(beta) == 3 * x - 3 * y);
        CHECK(writhe(gamma) == 3 * y - 3 * x);
        const BiLaurent pb = homflypt(beta);
        const BiLaurent pc = homflypt(gamma);
        CHECK(pb.at_v_one() == pc.at_v_one());
        CHECK_FALSE(pb.at_v_one().is_zero());
        CHECK(pb != pc);
    }
    CHECK_THROWS_AS(example1_instance(2, 1), std::invalid_argument);  // parity
    CHECK_THROWS_AS(example1_instance(1, 1), std::invalid_argument);  // x > y
    CHECK_THROWS_AS(example1_instance(3, 0), std::invalid_argument);  // y > 0
}

TEST_CASE("predicted Alexander pairs for equal-V closures") {
    SUBCASE("degenerate knot case") {
        const auto [hi, lo] = lemma2_predicted_deltas(2, 0, 2, -2, 1);
        CHECK(hi.str() == "1");
        CHECK(lo.str() == "1");
    }
    SUBCASE("first genuine knot case") {
        const auto [hi, lo] = lemma2_predicted_deltas(2, 1, 10, 6, 1);
        CHECK(hi.str() == "s^-8 - s^-6 + s^-2 - 1 + s^2 - s^6 + s^8");
        CHECK(lo.str() == "s^-6 - s^-2 + 1 - s^2 + s^6");
    }
    SUBCASE("returned pairs carry Alexander symmetry") {
        for (long p = 0; p <= 2; ++p) {
            const long a1 = 2 * (4 * p + 1);
            const auto [h1, l1] = lemma2_predicted_deltas(2, p, a1, a1 - 4, 1);
            CHECK(alexander_symmetric(h1, 1));
            CHECK(alexander_symmetric(l1, 1));
            for (long k = 3; k <= 5; k += 2) {
                const long a2 = k * (4 * p + 3);
                const auto [h2, l2] = lemma2_predicted_deltas(k, p, a2, a2 - 2 * k, 2);
                CHECK(alexander_symmetric(h2, 2));
                CHECK(alexander_symmetric(l2, 2));
            }
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(lemma2_predicted_deltas(2, 0, 2, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(2, -1, 2, -2, 1), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(3, 0, 6, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(2, 1, 12, 8, 1), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(2, 0, 6, 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(1, 0, 3, 1, 2), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(3, 0, 8, 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(lemma2_predicted_deltas(2, 0, 2, -2, 3), std::invalid_argument);
    }
}

TEST_CASE("equal-V survey") {
    const SurveyReport rep = survey_equal_v(4);
    CHECK(rep.max_len == 4);
    CHECK(rep.rows.size() == 109);
    CHECK(rep.buckets == 17);
    CHECK(rep.violations == 0);
    CHECK(rep.cross_writhe_pairs == 6);
    CHECK(rep.screen_failures == 0);
    CHECK(rep.notes.empty());
    for (const auto& row : rep.rows) {
        CHECK(row.bucket < rep.buckets);
        CHECK(row.mu >= 1);
        CHECK(row.mu <= 3);
    }
    // Rows follow the canonical enumeration order.
    const auto words = canonical_three_words(4);
    REQUIRE(words.size() == rep.rows.size());
    for (size_t i = 0; i < words.size(); ++i) {
        CHECK(rep.rows[i].word == render_braid(words[i]));
        CHECK(rep.rows[i].w == writhe(words[i]));
    }
}

TEST_CASE("survey CSV rendering") {
    const SurveyReport rep = survey_equal_v(2);
    const std::string plain = survey_csv(rep, false);
    const std::string full = survey_csv(rep, true);

    std::istringstream ps(plain);
    std::string header;
    std::getline(ps, header);
    CHECK(header == "word,w,mu,v_hash,p_hash,bucket");
    size_t lines = 0;
    for (std::string line; std::getline(ps, line);) ++lines;
    CHECK(lines == rep.rows.size());

    std::istringstream fs(full);
    std::getline(fs, header);
    CHECK(header == "word,w,mu,v_hash,p_hash,bucket,jones,homfly");
    // Hashes render as 16 lowercase hex digits.
    std::string first;
    std::getline(fs, first);
    const auto fields = [&] {
        std::vector<std::string> out;
        std::string cur;
        std::istringstream ls(first);
        while (std::getline(ls, cur, ',')) out.push_back(cur);
        return out;
    }();
    REQUIRE(fields.size() >= 6);
    CHECK(fields[3].size() == 16);
    CHECK(fields[4].size() == 16);
    CHECK(fields[3].find_first_not_of("0123456789abcdef") == std::string::npos);
}
