#include "skeinlab/threebraid.hpp"

#include "skeinlab/conway.hpp"
#include "skeinlab/hecke.hpp"
#include "skeinlab/oracle.hpp"

#include <map>
#include <sstream>

namespace skeinlab {

namespace {

void require_three(const BraidWord& b, const char* where) {
    if (b.n != 3)
        throw std::invalid_argument(std::string(where) + ": need a three-strand word");
}

// (sigma_2 sigma_1)^m, with inverse letters for negative m.
BraidWord alpha_power(long m) {
    BraidWord b;
    b.n = 3;
    b.letters.reserve(static_cast<std::size_t>(2 * std::abs(m)));
    if (m >= 0)
        for (long k = 0; k < m; ++k) {
            b.letters.push_back(2);
            b.letters.push_back(1);
        }
    else
        for (long k = 0; k < -m; ++k) {
            b.letters.push_back(-1);
            b.letters.push_back(-2);
        }
    return b;
}

void append_run(BraidWord& b, int letter, long count) {
    for (long k = 0; k < count; ++k) b.letters.push_back(letter);
}

// G = t^2 + t + 1 in s.
LaurentPoly big_g() {
    LaurentPoly g("s");
    g.add_term(0, 1);
    g.add_term(2, 1);
    g.add_term(4, 1);
    return g;
}

Int sign_of_parity(long j) { return (j % 2 == 0) ? Int(1) : Int(-1); }

BraidWord eta_word(const std::vector<std::pair<long, long>>& blocks) {
    BraidWord g;
    g.n = 3;
    for (const auto& [e, E] : blocks) {
        append_run(g, -2, e);
        append_run(g, 1, E);
    }
    return g;
}

std::string hex16(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

} // namespace

StdFormDecomp p3_closed(const BraidWord& b, const LaurentPoly& conway) {
    require_three(b, "p3_closed");
    const long w = writhe(b);
    StdFormDecomp d;
    d.n = 3;
    d.w = w;
    LaurentPoly p0 = conway_torus(w + 1) - conway;
    LaurentPoly p2 = conway_torus(w - 1) - conway;
    LaurentPoly p1 = conway.shifted(2) - p0 - p2;
    d.p = {p0, p1, p2};
    d.h = {p0.shifted(-2), p1.shifted(-2), p2.shifted(-2)};
    return d;
}

BiLaurent p3_lemma1(const BraidWord& b) {
    require_three(b, "p3_lemma1");
    const long w = writhe(b);
    const LaurentPoly nabla = homflypt(b).at_v_one();
    const BiLaurent delta = split_factor();
    const BiLaurent correction = delta * delta - BiLaurent::one();
    return torus_homflypt_closed(w) * delta -
           BiLaurent::from_z(nabla).shifted(w, 0) * correction;
}

LaurentPoly jones3(const BraidWord& b, const LaurentPoly& alexander) {
    require_three(b, "jones3");
    const long w = writhe(b);
    const LaurentPoly g = big_g();
    LaurentPoly head = LaurentPoly::monomial(1, 3 * w, "s");
    LaurentPoly eps_part = g.shifted(w - 2);
    head = (w % 2 == 0) ? head + eps_part : head - eps_part;
    return head - g.shifted(2 * w - 2) * alexander;
}

EqualPDecision equal_p_predict(long wb, const LaurentPoly& nb,
                               long wc, const LaurentPoly& nc) {
    const LaurentPoly* hi = &nb;
    if (wb < wc) {
        std::swap(wb, wc);
        hi = &nc;
    }
    EqualPDecision out;
    if (nb != nc) return out;
    if (wb == wc) {
        out.equal = true;
        out.which = EqualPCase::same_writhe;
    } else if (wb == wc + 2 && *hi == conway_torus(wb - 1)) {
        out.equal = true;
        out.which = EqualPCase::writhe_gap;
    } else if (wb == 2 && wc == -2 && *hi == LaurentPoly::one("z")) {
        out.equal = true;
        out.which = EqualPCase::opposite_two;
    }
    return out;
}

EqualPDecision equal_p_decision(const BraidWord& b, const BraidWord& c) {
    require_three(b, "equal_p_decision");
    require_three(c, "equal_p_decision");
    return equal_p_predict(writhe(b), homflypt(b).at_v_one(),
                           writhe(c), homflypt(c).at_v_one());
}

bool landscape_check(const StdFormDecomp& d) {
    if (d.n != 3)
        throw std::invalid_argument("landscape_check: need a three-strand decomposition");
    auto below = [](const std::optional<long>& x, const std::optional<long>& y) {
        if (!x) return true;   // zero polynomial sits below everything
        if (!y) return false;
        return *x <= *y;
    };
    const auto d0 = d.p[0].max_exp();
    const auto d1 = d.p[1].max_exp();
    const auto d2 = d.p[2].max_exp();
    return below(d0, d1) || below(d2, d1);
}

BraidWord omega_rep(const OmegaClass& c) {
    switch (c.index) {
    case 0: return alpha_power(3 * c.d);
    case 1: return alpha_power(3 * c.d + 1);
    case 2: return alpha_power(3 * c.d + 2);
    case 3: {
        BraidWord b = alpha_power(3 * c.d + 1);
        b.letters.push_back(2);
        return b;
    }
    case 4: {
        if (c.e < 1) throw std::invalid_argument("omega_rep: e must be positive");
        BraidWord b = alpha_power(3 * c.d);
        append_run(b, -2, c.e);
        return b;
    }
    case 5: {
        if (c.E < 1) throw std::invalid_argument("omega_rep: E must be positive");
        BraidWord b = alpha_power(3 * c.d);
        append_run(b, 1, c.E);
        return b;
    }
    case 6: {
        if (c.eta.empty())
            throw std::invalid_argument("omega_rep: family 6 needs at least one block");
        for (const auto& [e, E] : c.eta)
            if (e < 1 || E < 1)
                throw std::invalid_argument("omega_rep: block exponents must be positive");
        BraidWord b = alpha_power(3 * c.d);
        const BraidWord tail = eta_word(c.eta);
        b.letters.insert(b.letters.end(), tail.letters.begin(), tail.letters.end());
        return b;
    }
    default:
        throw std::invalid_argument("omega_rep: family index must be 0..6");
    }
}

LaurentPoly omega_alexander(const OmegaClass& c) {
    const LaurentPoly g = big_g();
    auto twist_factor = [&](long d, long tail_writhe) {
        // t (t^{3d} - 1)(t^{3d + tail} - eps_tail) / (G t^{3d} t^{tail/2});
        // the epsilon subscript is the tail exponent alone, not 3d + tail.
        LaurentPoly lead("s");
        lead.add_term(6 * d, 1);
        lead.add_term(0, -1);
        LaurentPoly trail("s");
        trail.add_term(6 * d + 2 * tail_writhe, 1);
        trail.add_term(0, -sign_of_parity(tail_writhe));
        return exact_div(lead * trail, g).shifted(2 - 6 * d - tail_writhe);
    };
    switch (c.index) {
    case 0: {
        LaurentPoly lead("s");
        lead.add_term(6 * c.d, 1);
        lead.add_term(0, -1);
        return exact_div(lead * lead, g).shifted(2 - 6 * c.d);
    }
    case 1: {
        LaurentPoly num("s");
        num.add_term(12 * c.d + 4, 1);
        num.add_term(6 * c.d + 2, 1);
        num.add_term(0, 1);
        return exact_div(num, g).shifted(2 - (6 * c.d + 2));
    }
    case 2: {
        LaurentPoly num("s");
        num.add_term(12 * c.d + 8, 1);
        num.add_term(6 * c.d + 4, 1);
        num.add_term(0, 1);
        return exact_div(num, g).shifted(2 - (6 * c.d + 4));
    }
    case 3: {
        LaurentPoly num("s");
        num.add_term(12 * c.d + 6, 1);
        num.add_term(0, -1);
        return exact_div(num, g).shifted(2 - (6 * c.d + 3));
    }
    case 4:
        if (c.e < 1) throw std::invalid_argument("omega_alexander: e must be positive");
        return twist_factor(c.d, -c.e);
    case 5:
        if (c.E < 1) throw std::invalid_argument("omega_alexander: E must be positive");
        return twist_factor(c.d, c.E);
    case 6: {
        if (c.eta.empty())
            throw std::invalid_argument("omega_alexander: family 6 needs at least one block");
        long tail_writhe = 0;
        for (const auto& [e, E] : c.eta) tail_writhe += E - e;
        const LaurentPoly delta_eta =
            specialize(homflypt(eta_word(c.eta)), Specialization::alexander);
        return delta_eta + twist_factor(c.d, tail_writhe);
    }
    default:
        throw std::invalid_argument("omega_alexander: family index must be 0..6");
    }
}

bool augmented_identities(long a, const BraidWord& g) {
    if (a <= 0) throw std::invalid_argument("augmented_identities: a must be positive");
    require_three(g, "augmented_identities");
    const long w = writhe(g);
    const BiLaurent pg = homflypt(g);
    const LaurentPoly ng = pg.at_v_one();

    auto prefixed = [&](long m) {
        BraidWord word = alpha_power(m);
        word.letters.insert(word.letters.end(), g.letters.begin(), g.letters.end());
        return homflypt(word);
    };

    // Single full twist, Conway and P forms.
    const BiLaurent p_one = prefixed(3);
    bool ok = p_one.at_v_one() == ng + conway_torus(w + 5) - conway_torus(w + 1);
    ok = ok && p_one == pg.shifted(6, 0) + torus_homflypt_closed(w + 5) -
                            torus_homflypt_closed(w + 1).shifted(6, 0);

    // a positive full twists.
    {
        const BiLaurent lhs = prefixed(3 * a);
        LaurentPoly cw = ng;
        BiLaurent pw = pg.shifted(6 * a, 0);
        for (long j = 1; j <= a; ++j) {
            cw = cw + conway_torus(w + 6 * j - 1) - conway_torus(w + 6 * j - 5);
            pw = pw + torus_homflypt_closed(w + 6 * j - 1).shifted(6 * a - 6 * j, 0) -
                 torus_homflypt_closed(w + 6 * j - 5).shifted(6 + 6 * a - 6 * j, 0);
        }
        ok = ok && lhs.at_v_one() == cw && lhs == pw;
    }

    // a negative full twists.
    {
        const BiLaurent lhs = prefixed(-3 * a);
        LaurentPoly cw = ng;
        BiLaurent pw = pg.shifted(-6 * a, 0);
        for (long j = 1; j <= a; ++j) {
            cw = cw + conway_torus(w - 6 * j + 1) - conway_torus(w - 6 * j + 5);
            pw = pw + torus_homflypt_closed(w - 6 * j + 1).shifted(6 * j - 6 * a, 0) -
                 torus_homflypt_closed(w - 6 * j + 5).shifted(6 * j - 6 * a - 6, 0);
        }
        ok = ok && lhs.at_v_one() == cw && lhs == pw;
    }
    return ok;
}

std::optional<std::vector<std::pair<long, long>>>
eta_factorization(const BraidWord& g) {
    if (g.n != 3) return std::nullopt;
    const auto syl = syllables(g);
    if (syl.empty() || syl.size() % 2 != 0) return std::nullopt;
    std::vector<std::pair<long, long>> out;
    for (std::size_t k = 0; k < syl.size(); k += 2) {
        if (syl[k].index != 2 || syl[k].exponent >= 0) return std::nullopt;
        if (syl[k + 1].index != 1 || syl[k + 1].exponent <= 0) return std::nullopt;
        out.emplace_back(-syl[k].exponent, syl[k + 1].exponent);
    }
    return out;
}

EtaChecks eta_product_checks(const std::vector<std::pair<long, long>>& blocks) {
    EtaChecks out;
    if (blocks.empty()) return out;
    const long r = static_cast<long>(blocks.size());
    long e2 = 0, e1 = 0;
    for (const auto& [e, E] : blocks) {
        e2 += e;
        e1 += E;
    }
    const long esum = e1 + e2;
    const Int sign = sign_of_parity(e2 + 1);

    const BiLaurent p = homflypt(eta_word(blocks));
    const LaurentPoly nabla = p.at_v_one();

    out.leading_applicable = (e1 > 1 && e2 > 1);
    if (out.leading_applicable) {
        const LaurentPoly delta = specialize(p, Specialization::alexander);
        out.leading_ok = nabla.max_exp() && *nabla.max_exp() == esum - 2 &&
                         nabla.coeff(esum - 2) == sign &&
                         nabla.coeff(esum - 4) == sign * Int(esum - 3 - r);
        out.alexander_ok = delta.max_exp() && *delta.max_exp() == esum - 2 &&
                           delta.coeff(esum - 2) == sign &&
                           delta.coeff(esum - 4) == -sign * Int(r + 1);
    }

    out.product_applicable = (r == 2);
    if (out.product_applicable) {
        LaurentPoly expected =
            conway_torus(e2) * conway_torus(e1) -
            conway_torus(blocks[0].first) * conway_torus(blocks[0].second) *
                conway_torus(blocks[1].first) * conway_torus(blocks[1].second);
        out.product_ok = nabla == expected.scaled(sign);
    }
    return out;
}

std::pair<BraidWord, BraidWord> example1_instance(long x, long y) {
    if (!(x > y && y > 0 && (x - y) % 2 == 0))
        throw std::invalid_argument(
            "example1_instance: need x > y > 0 with x = y (mod 2)");
    auto build = [&](long twists) {
        BraidWord b = alpha_power(3 * twists);
        append_run(b, -2, 3 * x + 3 * y + 1);
        b.letters.push_back(1);
        return b;
    };
    return {build(x), build(y)};
}

std::pair<LaurentPoly, LaurentPoly>
lemma2_predicted_deltas(long k, long p, long a, long b, int mu) {
    if (p < 0 || b != a - 2 * k)
        throw std::invalid_argument("lemma2_predicted_deltas: inconsistent writhes");
    // 1 - t + t^3 in s.
    LaurentPoly knot_block("s");
    knot_block.add_term(0, 1);
    knot_block.add_term(2, -1);
    knot_block.add_term(6, 1);

    if (mu == 1) {
        if (k != 2 || a != 2 * (4 * p + 1))
            throw std::invalid_argument("lemma2_predicted_deltas: knot case needs k = 2, a = 2(4p+1)");
        if (p == 0) return {LaurentPoly::one("s"), LaurentPoly::one("s")};
        LaurentPoly hi("s");
        for (long j = 0; j <= 2 * p - 1; ++j)
            hi += knot_block.shifted(8 * j).scaled(sign_of_parity(j));
        hi.add_term(16 * p, 1);
        LaurentPoly lo("s");
        lo.add_term(0, 1);
        lo.add_term(4, -1);
        LaurentPoly tail("s");
        for (long j = 0; j <= 2 * p - 2; ++j)
            tail += knot_block.shifted(8 * j).scaled(sign_of_parity(j));
        lo += tail.shifted(6);
        return {hi.shifted(-(a - 2)), lo.shifted(-b)};
    }
    if (mu == 2) {
        if (k <= 1 || k % 2 == 0 || a != k * (4 * p + 3))
            throw std::invalid_argument(
                "lemma2_predicted_deltas: two-component case needs odd k > 1, a = k(4p+3)");
        // sum_x t^{3x} (t - 1) for x in [0, k)
        LaurentPoly comb("s");
        for (long x = 0; x < k; ++x) {
            comb.add_term(6 * x + 2, 1);
            comb.add_term(6 * x, -1);
        }
        // bracket = comb + t^{3k-1}(t^k - 1)
        LaurentPoly bracket = comb;
        bracket.add_term(6 * k - 2 + 2 * k, 1);
        bracket.add_term(6 * k - 2, -1);
        LaurentPoly hi("s");
        for (long j = 0; j <= p - 1; ++j) hi += bracket.shifted(8 * k * j);
        hi += comb.shifted(8 * k * p);
        LaurentPoly lo("s");
        lo.add_term(2 * k, 1);
        lo.add_term(0, -1);
        LaurentPoly tail("s");
        for (long j = 0; j <= p - 1; ++j) tail += bracket.shifted(8 * k * j);
        lo += tail.shifted(2 * k + 2);
        return {hi.shifted(-(a - 2)), lo.shifted(-b)};
    }
    throw std::invalid_argument("lemma2_predicted_deltas: mu must be 1 or 2");
}

namespace {

// Lemma-2 shape check for one same-bucket pair of distinct writhes a > b.
bool screen_pair(long a, long b, int mu, const LaurentPoly& nabla,
                 const LaurentPoly& delta_hi, const LaurentPoly& delta_lo,
                 std::string& why) {
    if (mu >= 3) {
        why = "equal V with mu >= 3";
        return false;
    }
    if ((a - b) % 2 != 0) {
        why = "writhe gap is odd";
        return false;
    }
    const long k = (a - b) / 2;
    if (k == 1) {
        if (nabla != conway_torus(a - 1)) {
            why = "k = 1 but nabla != C_{a-1}";
            return false;
        }
        return true;
    }
    if (mu == 1) {
        if (k != 2 || a < 2 || (a - 2) % 8 != 0) {
            why = "knot case writhes outside k = 2, a = 2(4p+1)";
            return false;
        }
        if (a == 2) {
            if (nabla != LaurentPoly::one("z")) {
                why = "a = 2 knot pair with nabla != 1";
                return false;
            }
            return true;
        }
        const long p = (a - 2) / 8;
        auto [dh, dl] = lemma2_predicted_deltas(2, p, a, b, 1);
        if (!unit_equal(dh, delta_hi) || !unit_equal(dl, delta_lo)) {
            why = "knot case Alexander pair mismatch";
            return false;
        }
        return true;
    }
    if (mu == 2) {
        if (k % 2 == 0 || a % k != 0 || (a / k - 3) % 4 != 0 || a / k < 3) {
            why = "two-component case writhes outside odd k, a = k(4p+3)";
            return false;
        }
        const long p = (a / k - 3) / 4;
        auto [dh, dl] = lemma2_predicted_deltas(k, p, a, b, 2);
        if (!unit_equal(dh, delta_hi) || !unit_equal(dl, delta_lo)) {
            why = "two-component case Alexander pair mismatch";
            return false;
        }
        return true;
    }
    why = "unexpected component count";
    return false;
}

} // namespace

SurveyReport survey_equal_v(int max_len) {
    SurveyReport rep;
    rep.max_len = max_len;
    const auto words = canonical_three_words(max_len);
    rep.rows.resize(words.size());
    std::vector<std::string> vkeys(words.size()), pkeys(words.size());
    std::vector<LaurentPoly> nablas(words.size()), alexs(words.size());

    parallel_for(words.size(), [&](std::size_t i) {
        const BraidWord& b = words[i];
        const BiLaurent p = homflypt(b);
        const LaurentPoly v = specialize(p, Specialization::jones);
        nablas[i] = p.at_v_one();
        alexs[i] = specialize(p, Specialization::alexander);
        vkeys[i] = v.canonical();
        pkeys[i] = p.canonical();
        SurveyRow& row = rep.rows[i];
        row.word = render_braid(b);
        row.w = writhe(b);
        row.mu = component_count(b);
        row.v_hash = fnv1a64(vkeys[i]);
        row.p_hash = fnv1a64(pkeys[i]);
        row.jones = v.str();
        row.homfly = p.str();
    });

    std::map<std::string, std::size_t> bucket_of;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto [it, fresh] = bucket_of.try_emplace(vkeys[i], members.size());
        if (fresh) members.emplace_back();
        members[it->second].push_back(i);
        rep.rows[i].bucket = it->second;
    }
    rep.buckets = members.size();

    for (std::size_t bk = 0; bk < members.size(); ++bk) {
        const auto& idx = members[bk];
        // Prop-13 content: one P per V.
        std::map<std::string, std::size_t> first_p;
        for (std::size_t i : idx) {
            auto [it, fresh] = first_p.try_emplace(pkeys[i], i);
            if (!fresh && pkeys[it->second] != pkeys[i]) continue;
        }
        if (first_p.size() > 1) {
            ++rep.violations;
            std::string note = "equal V, distinct P:";
            for (const auto& [key, i] : first_p) note += " " + rep.rows[i].word + ";";
            rep.notes.push_back(note);
        }
        // Distinct writhes inside the bucket get the classification screen.
        std::map<long, std::size_t> by_writhe;
        for (std::size_t i : idx) by_writhe.try_emplace(rep.rows[i].w, i);
        if (by_writhe.size() < 2) continue;
        for (auto hi = by_writhe.rbegin(); hi != by_writhe.rend(); ++hi)
            for (auto lo = std::next(hi); lo != by_writhe.rend(); ++lo) {
                const long a = hi->first, b = lo->first;
                if (!(a > std::max(b, -1L))) continue;  // mirror bucket covers it
                ++rep.cross_writhe_pairs;
                const std::size_t ia = hi->second, ib = lo->second;
                std::string why;
                const int mu = rep.rows[ia].mu;
                bool ok = (mu == rep.rows[ib].mu);
                if (!ok) why = "component counts differ";
                ok = ok && nablas[ia] == nablas[ib];
                if (ok) {
                    ok = screen_pair(a, b, mu, nablas[ia], alexs[ia], alexs[ib], why);
                } else if (why.empty()) {
                    why = "Conway polynomials differ";
                }
                if (!ok) {
                    ++rep.screen_failures;
                    rep.notes.push_back("screen failure (" + why + "): " +
                                        rep.rows[ia].word + " vs " + rep.rows[ib].word);
                }
            }
    }
    return rep;
}

std::string survey_csv(const SurveyReport& report, bool full) {
    std::ostringstream os;
    os << "word,w,mu,v_hash,p_hash,bucket";
    if (full) os << ",jones,homfly";
    os << "\n";
    for (const auto& row : report.rows) {
        os << row.word << "," << row.w << "," << row.mu << "," << hex16(row.v_hash)
           << "," << hex16(row.p_hash) << "," << row.bucket;
        if (full) os << "," << row.jones << "," << row.homfly;
        os << "\n";
    }
    return os.str();
}

} // namespace skeinlab
