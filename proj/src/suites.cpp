#include "skeinlab/suites.hpp"

#include "skeinlab/braid.hpp"
#include "skeinlab/coeffs.hpp"
#include "skeinlab/conway.hpp"
#include "skeinlab/corpus.hpp"
#include "skeinlab/hecke.hpp"
#include "skeinlab/oracle.hpp"
#include "skeinlab/threebraid.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace skeinlab {

namespace {

constexpr std::size_t kDetailCap = 12;

/// Sequential tally of check outcomes with capped counterexample storage.
struct Recorder {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> detail;

    void check(bool ok, const std::string& msg) {
        ++checks;
        if (!ok) fail(msg);
    }
    void fail(const std::string& msg) {
        ++failures;
        if (detail.size() < kDetailCap) detail.push_back(msg);
    }
    SuiteResult finish() && {
        if (failures > detail.size()) {
            detail.push_back("... and " + std::to_string(failures - detail.size()) +
                             " more failures");
        }
        SuiteResult r;
        r.checks = checks;
        r.failures = failures;
        r.counterexamples = std::move(detail);
        return r;
    }
};

/// Per-item output of a parallel pass; merged sequentially afterwards so
/// counts and counterexample order never depend on the thread count.
struct JobOut {
    std::size_t checks = 0;
    std::vector<std::string> fails;
};

SuiteResult merge(std::vector<JobOut>&& outs, Recorder&& rec) {
    for (auto& o : outs) {
        rec.checks += o.checks;
        for (auto& f : o.fails) rec.fail(std::move(f));
    }
    return std::move(rec).finish();
}

void job_check(JobOut& o, bool ok, const std::string& msg) {
    ++o.checks;
    if (!ok) o.fails.push_back(msg);
}

LaurentPoly random_weight(std::mt19937_64& rng) {
    LaurentPoly a{"z"};
    for (long e = 0; e <= 3; ++e) {
        const long c = static_cast<long>(rng() % 7) - 3;
        if (c != 0) a.add_term(e, c);
    }
    return a;
}

// ---------------------------------------------------------------- torus --

SuiteResult suite_torus(const SuiteOptions&) {
    Recorder rec;
    for (long p = -12; p <= 12; ++p) {
        const bool ok = homflypt(generator_power(1, p, 2)) == torus_homflypt_closed(p);
        rec.check(ok, "torus closed form differs from engine at p=" + std::to_string(p));
    }
    return std::move(rec).finish();
}

// --------------------------------------------------------------- coeffs --

std::vector<BraidWord> mixed_corpus(const SuiteOptions& opt, int default_len,
                                    int default_samples, int rand_n, int rand_len) {
    std::vector<BraidWord> words =
        canonical_three_words(opt.max_len > 0 ? opt.max_len : default_len);
    const int samples = opt.samples > 0 ? opt.samples : default_samples;
    std::mt19937_64 rng(opt.seed);
    words.reserve(words.size() + static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) words.push_back(random_word(rng, rand_n, rand_len));
    return words;
}

SuiteResult suite_coeffs(const SuiteOptions& opt) {
    const auto words = mixed_corpus(opt, 10, 500, 6, 14);
    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        job_check(outs[k], low_coeff_forms_check(words[k]),
                  "low-coefficient closed forms fail for " + render_braid(words[k]));
    });
    return merge(std::move(outs), Recorder{});
}

// ----------------------------------------------------------------- sums --

SuiteResult suite_sums(const SuiteOptions& opt) {
    const auto words = mixed_corpus(opt, 10, 500, 6, 14);
    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        job_check(outs[k], weighted_sum_check(words[k], opt.kappa_lo, opt.kappa_hi),
                  "weighted-sum family fails for " + render_braid(words[k]));
    });
    Recorder rec;

    // Two-weight combinations on their own seeded corpus.
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    for (int k = 0; k < 50; ++k) {
        LaurentPoly a0 = random_weight(rng);
        LaurentPoly a1 = random_weight(rng);
        while (a0.is_zero() && a1.is_zero()) {
            a0 = random_weight(rng);
            a1 = random_weight(rng);
        }
        const BraidWord b = random_word(rng, 5, 10);
        rec.check(two_weight_family_check(a0, a1, b),
                  "two-weight family fails for " + render_braid(b) + " with A0=" +
                      a0.str() + ", A1=" + a1.str());
    }
    return merge(std::move(outs), std::move(rec));
}

// -------------------------------------------------------------- oracles --

SuiteResult suite_oracles(const SuiteOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 200;
    std::mt19937_64 rng(opt.seed);
    std::vector<BraidWord> words;
    words.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        words.push_back(random_word(rng, 5, opt.max_len > 0 ? opt.max_len : 12));

    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        const BraidWord& b = words[k];
        const std::string tag = render_braid(b);
        const BiLaurent P = homflypt(b);
        const LaurentPoly vj = specialize(P, Specialization::jones);
        const LaurentPoly da = specialize(P, Specialization::alexander);
        const int mu = component_count(b);
        job_check(outs[k], jones_kauffman(b) == vj,
                  "state-sum Jones differs from engine for " + tag);
        job_check(outs[k], unit_equal(alexander_burau(b), da),
                  "determinant Alexander differs from engine for " + tag);
        job_check(outs[k], alexander_symmetric(da, mu),
                  "Alexander symmetry fails for " + tag);
        Int v1target(1);
        for (int i = 1; i < mu; ++i) v1target *= -2;
        job_check(outs[k], vj.eval(1) == v1target,
                  "V(1) != (-2)^(mu-1) for " + tag);
    });
    return merge(std::move(outs), Recorder{});
}

// --------------------------------------------------------------- survey --

SuiteResult suite_survey(const SuiteOptions& opt) {
    const SurveyReport rep = survey_equal_v(opt.max_len > 0 ? opt.max_len : 8);
    Recorder rec;
    rec.checks = rep.rows.size() + rep.cross_writhe_pairs;
    for (std::size_t i = 0; i < rep.violations + rep.screen_failures; ++i) {
        rec.fail(i < rep.notes.size() ? rep.notes[i] : "survey failure (see report)");
    }
    return std::move(rec).finish();
}

// --------------------------------------------------------------- equalp --

SuiteResult suite_equalp(const SuiteOptions& opt) {
    Recorder rec;

    // The equal-Conway / distinct-P witnesses.
    for (const auto& [x, y] : std::vector<std::pair<long, long>>{{3, 1}, {4, 2}}) {
        const auto [b, c] = example1_instance(x, y);
        const std::string tag = "(x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")";
        const BiLaurent pb = homflypt(b);
        const BiLaurent pc = homflypt(c);
        const LaurentPoly nb = specialize(pb, Specialization::conway);
        const LaurentPoly nc = specialize(pc, Specialization::conway);
        rec.check(nb == nc, "witness pair " + tag + ": Conway polynomials differ");
        rec.check(!nb.is_zero(), "witness pair " + tag + ": Conway polynomial is zero");
        rec.check(pb != pc, "witness pair " + tag + ": P unexpectedly equal");
    }

    // Prediction from (writhe, Conway) alone must match direct comparison
    // on every pair of canonical words.
    const auto words = canonical_three_words(opt.max_len > 0 ? opt.max_len : 6);
    const std::size_t m = words.size();
    std::vector<long> w(m);
    std::vector<LaurentPoly> nabla(m);
    std::vector<std::string> pkey(m);
    parallel_for(m, [&](std::size_t k) {
        const BiLaurent P = homflypt(words[k]);
        w[k] = writhe(words[k]);
        nabla[k] = specialize(P, Specialization::conway);
        pkey[k] = P.canonical();
    });
    std::vector<JobOut> outs(m);
    parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool predicted = equal_p_predict(w[i], nabla[i], w[j], nabla[j]).equal;
            const bool actual = pkey[i] == pkey[j];
            job_check(outs[i], predicted == actual,
                      "equal-P prediction wrong for " + render_braid(words[i]) + " vs " +
                          render_braid(words[j]) + (actual ? " (equal P)" : " (distinct P)"));
        }
    });
    return merge(std::move(outs), std::move(rec));
}

// ------------------------------------------------------------ landscape --

SuiteResult suite_landscape(const SuiteOptions& opt) {
    const auto words = canonical_three_words(opt.max_len > 0 ? opt.max_len : 10);
    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        const BraidWord& b = words[k];
        const StdFormDecomp d = decompose(homflypt(b), b.n, writhe(b));
        job_check(outs[k], landscape_check(d),
                  "degree landscape fails for " + render_braid(b));
    });
    return merge(std::move(outs), Recorder{});
}

// ---------------------------------------------------------------- omega --

std::string omega_tag(const OmegaClass& c) {
    std::ostringstream os;
    os << "omega class " << c.index << " d=" << c.d;
    if (c.index == 4) os << " e=" << c.e;
    if (c.index == 5) os << " E=" << c.E;
    if (c.index == 6) {
        os << " eta=";
        for (const auto& [e, E] : c.eta) os << "(" << e << "," << E << ")";
    }
    return os.str();
}

std::vector<OmegaClass> omega_grid(long dmax, long emax, long block_max) {
    std::vector<OmegaClass> grid;
    for (int idx = 0; idx <= 3; ++idx)
        for (long d = -dmax; d <= dmax; ++d) grid.push_back({idx, d, 1, 1, {}});
    for (long d = -dmax; d <= dmax; ++d)
        for (long e = 1; e <= emax; ++e) grid.push_back({4, d, e, 1, {}});
    for (long d = -dmax; d <= dmax; ++d)
        for (long E = 1; E <= emax; ++E) grid.push_back({5, d, 1, E, {}});
    for (long d = -dmax; d <= dmax; ++d) {
        for (long e1 = 1; e1 <= block_max; ++e1)
            for (long E1 = 1; E1 <= block_max; ++E1) {
                grid.push_back({6, d, 1, 1, {{e1, E1}}});
                for (long e2 = 1; e2 <= block_max; ++e2)
                    for (long E2 = 1; E2 <= block_max; ++E2)
                        grid.push_back({6, d, 1, 1, {{e1, E1}, {e2, E2}}});
            }
    }
    return grid;
}

SuiteResult suite_omega(const SuiteOptions&) {
    const auto grid = omega_grid(3, 4, 3);
    std::vector<JobOut> outs(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        const OmegaClass& c = grid[k];
        const std::string tag = omega_tag(c);
        const BraidWord rep = omega_rep(c);
        const LaurentPoly engine = specialize(homflypt(rep), Specialization::alexander);
        LaurentPoly closed{"s"};
        bool divided = true;
        try {
            closed = omega_alexander(c);
        } catch (const InexactDivision&) {
            divided = false;
        }
        // Division failures are reported as failures, never skipped.
        job_check(outs[k], divided && unit_equal(closed, engine),
                  divided ? tag + ": closed-form Alexander differs from engine"
                          : tag + ": exact division failed in the closed form");
        if (c.index != 6) {
            const long claim = writhe(rep) - 2;  // (w-2)/2 in t = w-2 in s
            const auto actual = closed.max_exp();
            std::ostringstream os;
            os << tag << ": max-degree claim " << claim << " (in s) but actual ";
            if (actual) os << *actual; else os << "none (zero polynomial)";
            job_check(outs[k], divided && actual && *actual == claim, os.str());
        }
    });
    return merge(std::move(outs), Recorder{});
}

// ----------------------------------------------------------- threebraid --

SuiteResult suite_threebraid(const SuiteOptions& opt) {
    const auto words = canonical_three_words(opt.max_len > 0 ? opt.max_len : 7);
    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        const BraidWord& b = words[k];
        const std::string tag = render_braid(b);
        const InvariantSet inv = invariants(b);
        const StdFormDecomp closed = p3_closed(b, inv.nabla);
        job_check(outs[k], closed.p == inv.decomp.p,
                  "three-strand coefficient closed forms fail for " + tag);
        job_check(outs[k], p3_lemma1(b) == inv.P,
                  "three-strand P closed form fails for " + tag);
        job_check(outs[k], jones3(b, inv.alex) == inv.jones,
                  "three-strand Jones closed form fails for " + tag);
    });
    return merge(std::move(outs), Recorder{});
}

// ----------------------------------------------------------- invariance --

SuiteResult suite_invariance(const SuiteOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 200;
    std::mt19937_64 rng(opt.seed);
    std::vector<BraidWord> words;
    words.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        words.push_back(random_word(rng, 5, opt.max_len > 0 ? opt.max_len : 12));

    std::vector<JobOut> outs(words.size());
    parallel_for(words.size(), [&](std::size_t k) {
        const BraidWord& b = words[k];
        const std::string tag = render_braid(b);
        const BiLaurent P = homflypt(b);
        for (std::size_t s = 1; s < b.letters.size(); ++s) {
            job_check(outs[k], homflypt(cyclic_shift(b, static_cast<long>(s))) == P,
                      "conjugation changes P for " + tag + " at shift " + std::to_string(s));
        }
        job_check(outs[k], homflypt(stabilize(b, +1)) == P,
                  "positive stabilization changes P for " + tag);
        job_check(outs[k], homflypt(stabilize(b, -1)) == P,
                  "negative stabilization changes P for " + tag);
        job_check(outs[k], mirror_stabilization_check(b),
                  "mirror/stabilization coefficient relations fail for " + tag);
    });
    return merge(std::move(outs), Recorder{});
}

// --------------------------------------------------------------- conway --

SuiteResult suite_conway(const SuiteOptions&) {
    Recorder rec;
    for (long p = -64; p <= 64; ++p) {
        rec.check(conway_torus(p) == conway_torus_closed_form(p),
                  "closed form differs from recursion at p=" + std::to_string(p));
    }
    for (long p = 1; p <= 20; ++p) {
        rec.check(conway_torus(p).eval(1) == fibonacci_value(p),
                  "C_p(1) is not the Fibonacci value at p=" + std::to_string(p));
    }
    for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y)
            rec.check(check_sum_rel(x, y), "index-sum expansion fails at x=" +
                                               std::to_string(x) + ", y=" + std::to_string(y));
    for (long x = -8; x <= 8; ++x)
        for (long k = 1; k <= 6; ++k)
            rec.check(check_prod_expansion(x, k),
                      "product expansion fails at x=" + std::to_string(x) +
                          ", k=" + std::to_string(k));
    for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y)
            for (long p = -5; p <= 5; ++p)
                for (long kappa = -3; kappa <= 3; ++kappa) {
                    const long q = x + y - p;
                    rec.check(check_diff_prod(x, y, p, q, kappa),
                              "difference-product shift fails at (" + std::to_string(x) +
                                  "," + std::to_string(y) + "," + std::to_string(p) + "," +
                                  std::to_string(q) + "), kappa=" + std::to_string(kappa));
                }
    for (long m = 0; m <= 6; ++m)
        for (long p = -10; p <= 10; ++p)
            rec.check(check_power_expansion(m, p),
                      "z^m expansion fails at m=" + std::to_string(m) +
                          ", p=" + std::to_string(p));
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 && b == 0) continue;
            rec.check(check_gcd_props(a, b), "gcd/divisibility fails at a=" +
                                                 std::to_string(a) + ", b=" + std::to_string(b));
        }
    return std::move(rec).finish();
}

// ------------------------------------------------------------ augmented --

SuiteResult suite_augmented(const SuiteOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 50;
    std::mt19937_64 rng(opt.seed);
    std::vector<BraidWord> gammas;
    gammas.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        gammas.push_back(random_word_n(rng, 3, opt.max_len > 0 ? opt.max_len : 8));

    std::vector<JobOut> outs(gammas.size());
    parallel_for(gammas.size(), [&](std::size_t k) {
        for (long a = 1; a <= 2; ++a) {
            job_check(outs[k], augmented_identities(a, gammas[k]),
                      "full-twist augmentation fails for " + render_braid(gammas[k]) +
                          " at a=" + std::to_string(a));
        }
    });
    Recorder rec;

    // Alternating-product checks: full grids for one and two blocks, a
    // seeded sample of three-block products.
    std::vector<std::vector<std::pair<long, long>>> block_sets;
    for (long e1 = 1; e1 <= 3; ++e1)
        for (long E1 = 1; E1 <= 3; ++E1) {
            block_sets.push_back({{e1, E1}});
            for (long e2 = 1; e2 <= 3; ++e2)
                for (long E2 = 1; E2 <= 3; ++E2) block_sets.push_back({{e1, E1}, {e2, E2}});
        }
    std::mt19937_64 rng2(opt.seed ^ 0xda942042e4dd58b5ull);
    for (int i = 0; i < 20; ++i) {
        std::vector<std::pair<long, long>> blocks;
        for (int r = 0; r < 3; ++r)
            blocks.emplace_back(1 + static_cast<long>(rng2() % 3),
                                1 + static_cast<long>(rng2() % 3));
        block_sets.push_back(std::move(blocks));
    }
    std::vector<JobOut> eta_outs(block_sets.size());
    parallel_for(block_sets.size(), [&](std::size_t k) {
        std::ostringstream os;
        os << "alternating-product checks fail for blocks ";
        for (const auto& [e, E] : block_sets[k]) os << "(" << e << "," << E << ")";
        job_check(eta_outs[k], eta_product_checks(block_sets[k]).all(), os.str());
    });
    for (auto& o : eta_outs) outs.push_back(std::move(o));
    return merge(std::move(outs), std::move(rec));
}

// ---------------------------------------------------------------- skein --

SuiteResult suite_skein(const SuiteOptions& opt) {
    const int samples = opt.samples > 0 ? opt.samples : 100;
    std::mt19937_64 rng(opt.seed);
    std::vector<BraidWord> words;
    words.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
        words.push_back(random_word(rng, 5, opt.max_len > 0 ? opt.max_len : 10));
    struct Reduction {
        BraidWord b;
        int i;
        long e;
    };
    std::vector<Reduction> reductions;
    for (int k = 0; k < 50; ++k) {
        BraidWord b = random_word(rng, 5, 8);
        const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.n - 1));
        const long e = static_cast<long>(rng() % 9) - 4;
        reductions.push_back({std::move(b), i, e});
    }

    std::vector<JobOut> outs(words.size() + reductions.size());
    parallel_for(outs.size(), [&](std::size_t k) {
        if (k < words.size()) {
            const BraidWord& b = words[k];
            for (std::size_t pos = 0; pos < b.letters.size(); ++pos) {
                job_check(outs[k], check_skein_triple(b, pos),
                          "skein relation fails for " + render_braid(b) + " at position " +
                              std::to_string(pos));
            }
        } else {
            const Reduction& r = reductions[k - words.size()];
            job_check(outs[k], check_reduction_formulas(r.b, r.i, r.e).all(),
                      "generator-power reduction fails for " + render_braid(r.b) +
                          " with i=" + std::to_string(r.i) + ", e=" + std::to_string(r.e));
        }
    });
    return merge(std::move(outs), Recorder{});
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"torus", suite_torus},           {"coeffs", suite_coeffs},
        {"sums", suite_sums},             {"oracles", suite_oracles},
        {"survey", suite_survey},         {"equalp", suite_equalp},
        {"landscape", suite_landscape},   {"omega", suite_omega},
        {"threebraid", suite_threebraid}, {"invariance", suite_invariance},
        {"conway", suite_conway},         {"augmented", suite_augmented},
        {"skein", suite_skein},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const auto& [key, fn] : suite_table()) {
        if (key == name) {
            const auto t0 = std::chrono::steady_clock::now();
            SuiteResult r = fn(opt);
            const auto t1 = std::chrono::steady_clock::now();
            r.name = name;
            r.seconds = std::chrono::duration<double>(t1 - t0).count();
            return r;
        }
    }
    throw UnknownSuite(name);
}

std::string summary_line(const SuiteResult& r) {
    std::ostringstream os;
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name;
    for (std::size_t i = r.name.size(); i < 11; ++i) os << ' ';
    os << "checks=" << r.checks << " failures=" << r.failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    os << buf;
    return os.str();
}

}  // namespace skeinlab
