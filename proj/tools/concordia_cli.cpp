// concordia: algebraic concordance invariants of knots from Seifert matrices.
//
// Inputs are corpus names (see `concordia corpus`) or files: matrices as
// JSON {"label", "matrix"} or plain text rows; certificate inputs as the
// JSON shapes documented in the README.
//
// Exit codes: 0 success, 2 parse error, 3 singular sample, 4 precondition
// failure, 5 internal oracle mismatch, 1 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "concordia/corpus.hpp"
#include "concordia/jsonio.hpp"
#include "concordia/random_knots.hpp"

namespace {

using namespace concordia;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
            return 2;
        case ErrorKind::SingularAtRoot:
        case ErrorKind::SingularAtSample:
            return 3;
        case ErrorKind::PreconditionFailed:
        case ErrorKind::TooLarge:
        case ErrorKind::NotPrimePower:
        case ErrorKind::NotElementaryAbelian:
        case ErrorKind::NotInvertibleModP:
        case ErrorKind::OddRank:
        case ErrorKind::NotSeifert:
        case ErrorKind::InvalidBlock:
        case ErrorKind::EquivarianceViolated:
        case ErrorKind::ChainMismatch:
        case ErrorKind::BadFamily:
        case ErrorKind::NotSymmetric:
        case ErrorKind::NotInImage:
            return 4;
        case ErrorKind::OracleMismatch:
            return 5;
        default:
            return 1;
    }
}

SeifertMatrix load_knot(const std::string& input) {
    if (const KnotRecord* rec = corpus_find(input)) return rec->seifert;
    return parse_seifert(read_file(input), input);
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) fail(ErrorKind::Parse, "expected a fraction a/b, got \"" + text + "\"");
    try {
        std::int64_t a = std::stoll(text.substr(0, slash));
        std::int64_t b = std::stoll(text.substr(slash + 1));
        if (b <= 0) fail(ErrorKind::Parse, "fraction denominator must be positive");
        return {a, b};
    } catch (const std::logic_error&) {
        fail(ErrorKind::Parse, "bad fraction \"" + text + "\"");
    }
}

struct Options {
    bool json = false;
    unsigned precision = 0;
    size_t samples = 50;
};

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_selftest(std::uint64_t seed, size_t samples) {
    KnotRng rng(seed);
    size_t failures = 0;
    auto report = [&](const std::string& name, size_t bad, size_t total) {
        std::cout << (bad == 0 ? "[ok] " : "[FAIL] ") << name << ": " << (total - bad) << "/" << total << "\n";
        failures += bad;
    };

    size_t bad = 0;
    for (size_t i = 0; i < samples; ++i) {  // ring laws on random Laurent triples
        auto rnd_poly = [&]() {
            LaurentPoly p;
            for (int k = 0; k < 4; ++k) p.add_term(rng.uniform(-6, 6), Rational(rng.uniform(-9, 9)));
            return p;
        };
        LaurentPoly p = rnd_poly(), q = rnd_poly(), r = rnd_poly();
        if ((p * q) * r != p * (q * r) || p * (q + r) != p * q + p * r) ++bad;
        if ((p * q).involute() != p.involute() * q.involute()) ++bad;
    }
    report("laurent ring laws + involution", bad, samples);

    bad = 0;
    for (size_t i = 0; i < samples; ++i) {
        CrossingTriple t = rng.triple(2, 2);
        if (!skein_verify(t)) ++bad;
    }
    report("skein relation", bad, samples);

    bad = 0;
    for (size_t i = 0; i < samples; ++i) {
        SeifertMatrix a = rng.seifert(2, 2);
        if (!s_equivalence_invariance(a, rng.column(a.size(), 2), Integer(rng.uniform(-2, 2)))) ++bad;
    }
    report("S-equivalence invariance", bad, samples);

    bad = 0;
    for (size_t i = 0; i < samples; ++i) {
        SeifertMatrix v = rng.seifert(2, 2);
        if (!murasugi_check(v, 1, 2) || !murasugi_check(v, 1, 3)) ++bad;
    }
    report("Murasugi sign law", bad, samples);

    bad = 0;
    for (size_t i = 0; i < samples; ++i) {
        SeifertMatrix v = rng.seifert(2, 2), w = rng.seifert(2, 2);
        if (tristram_levine(connected_sum(v, w), 1, 2).value !=
            tristram_levine(v, 1, 2).value + tristram_levine(w, 1, 2).value)
            ++bad;
        if (tristram_levine(mirror(v), 1, 3).value != -tristram_levine(v, 1, 3).value) ++bad;
    }
    report("signature additivity + mirror antisymmetry", bad, samples);

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic concordance invariants of knots from Seifert matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_option("--precision", opt.precision, "starting working precision level (each level doubles bits)");
    app.add_option("--samples", opt.samples, "signature samples used by certificates")->capture_default_str();

    std::string input, at, profile_cap, eps_text;
    std::int64_t q = 3, n = 1;
    std::int64_t p = 0;
    bool csv = false;
    std::uint64_t seed = 1;

    auto* cmd_alexander = app.add_subcommand("alexander", "normalized Alexander polynomial");
    cmd_alexander->add_option("input", input)->required();

    auto* cmd_conway = app.add_subcommand("conway", "Conway polynomial");
    cmd_conway->add_option("input", input)->required();

    auto* cmd_signature = app.add_subcommand("signature", "Tristram-Levine signatures");
    cmd_signature->add_option("input", input)->required();
    auto* at_opt = cmd_signature->add_option("--at", at, "single sample a/b");
    auto* profile_opt = cmd_signature->add_option("--profile", profile_cap, "all samples with denominator <= cap");
    cmd_signature->add_flag("--csv", csv, "CSV output for --profile");
    at_opt->excludes(profile_opt);

    auto* cmd_cover = app.add_subcommand("cover", "branched cyclic cover homology");
    cmd_cover->add_option("input", input)->required();
    cmd_cover->add_option("--q", q, "cover degree")->required();
    cmd_cover->add_option("--p", p, "odd prime for the deck action");

    auto* cmd_witt_diff = app.add_subcommand("witt-diff", "crossing-change Witt difference certificate");
    cmd_witt_diff->add_option("input", input, "triple file {A, a, b}")->required();

    auto* cmd_mutate = app.add_subcommand("mutate-genus2", "genus-2 mutation invariance report");
    cmd_mutate->add_option("input", input, "pair file {A, C, b}")->required();

    auto* cmd_amphi = app.add_subcommand("amphicheiral", "square factorization + sliceness certificate");
    cmd_amphi->add_option("input", input, "data file {A, T, a, b, epsilon}")->required();

    auto* cmd_gap = app.add_subcommand("genus-gap", "genus-gap certificate");
    cmd_gap->add_option("input", input, "companion knot J")->required();
    cmd_gap->add_option("--n", n, "target bound")->required();

    auto* cmd_growth = app.add_subcommand("growth-bound", "stable-genus growth report");
    cmd_growth->add_option("input", input, "companion knot J")->required();
    cmd_growth->add_option("--epsilon", eps_text, "rational in (0,1), e.g. 1/2")->required();
    cmd_growth->add_option("--n", n, "summand count for the report");

    auto* cmd_corpus = app.add_subcommand("corpus", "list embedded knots");

    auto* cmd_selftest = app.add_subcommand("selftest", "run randomized property checks");
    cmd_selftest->add_option("--seed", seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (opt.precision > 0) set_default_seed_bits(precision_to_bits(opt.precision));

        if (cmd_alexander->parsed()) {
            SeifertMatrix s = load_knot(input);
            LaurentPoly d = alexander(s);
            emit(json{{"input", s.label()}, {"alexander", d.to_string()}}, d.to_string() + "\n", opt.json);
        } else if (cmd_conway->parsed()) {
            SeifertMatrix s = load_knot(input);
            ConwayPoly c = conway(s);
            emit(json{{"input", s.label()}, {"conway", c.to_string()}}, c.to_string() + "\n", opt.json);
        } else if (cmd_signature->parsed()) {
            SeifertMatrix s = load_knot(input);
            if (!at.empty()) {
                auto [a, b] = parse_fraction(at);
                SignatureSample sample = tristram_levine(s, a, b);
                emit(json{{"a", sample.a}, {"b", sample.b}, {"value", sample.value}},
                     std::to_string(sample.value) + "\n", opt.json);
            } else if (!profile_cap.empty()) {
                auto samples = signature_function(s, std::stoll(profile_cap));
                if (csv)
                    std::cout << signature_samples_csv(samples);
                else if (opt.json)
                    std::cout << signature_samples_json(samples).dump(2) << "\n";
                else
                    for (const auto& smp : samples)
                        std::cout << smp.a << "/" << smp.b << "\t" << smp.value << "\n";
            } else {
                fail(ErrorKind::Parse, "signature requires --at or --profile");
            }
        } else if (cmd_cover->parsed()) {
            SeifertMatrix s = load_knot(input);
            CoverHomology c = cover_homology(s, q);
            std::optional<DeckAction> deck;
            std::optional<size_t> met_count;
            if (p > 0) {
                deck = deck_action(s, q, p);
                if (q == 2) {
                    // the double-cover deck action is -1, so equivariance is
                    // vacuous and the plain count is reported
                    LinkingFormZp f = linking_form_2fold(s, p);
                    if (f.dim % 2 == 0) met_count = enumerate_metabolizers(f, std::nullopt, false).size();
                }
            }
            json j = cover_report_json(c, deck, met_count);
            std::string text = "order " + (c.finite ? c.order.str() : std::string("INFINITE")) + ", snf (";
            for (size_t i = 0; i < c.snf.size(); ++i) text += (i ? "," : "") + c.snf[i].str();
            text += ")";
            if (deck) {
                text += ", deck eigenvalues {";
                for (size_t i = 0; i < deck->eigenspaces.size(); ++i)
                    text += (i ? "," : "") + std::to_string(deck->eigenspaces[i].first);
                text += "} mod " + std::to_string(p);
            }
            if (met_count) text += ", metabolizers " + std::to_string(*met_count);
            emit(j, text + "\n", opt.json);
        } else if (cmd_witt_diff->parsed()) {
            CrossingTriple t = parse_triple(read_file(input), input);
            CrossingDifferenceCertificate cert = crossing_difference(t, opt.samples);
            std::string text = std::string("verdict: ") + cert_verdict_name(cert.verdict) + "\nclaimed class diag(" +
                               cert.claimed_class.entry(0, 0).to_string() + ", -1)\n";
            emit(crossing_certificate_json(cert), text, opt.json);
            if (cert.verdict != CertVerdict::Verified) return 1;
        } else if (cmd_mutate->parsed()) {
            Genus2MutationPair pair = parse_genus2_pair(read_file(input), input);
            Genus2MutationReport rep = mutation_invariance_genus2(pair, opt.samples);
            emit(mutation_report_json(rep), std::string("verdict: ") + cert_verdict_name(rep.verdict) + "\n",
                 opt.json);
            if (rep.verdict != CertVerdict::Verified) return 1;
        } else if (cmd_amphi->parsed()) {
            AmphicheiralData d = parse_amphicheiral(read_file(input), input);
            HKCertificate hk = hk_factorize(d);
            LongCertificate lc = long_certificate(hk, opt.samples);
            json j{{"factorization", hk_certificate_json(hk)}, {"sliceness", long_certificate_json(lc)}};
            std::string text = "factorization verified; sliceness certificate " +
                               std::string(lc.verified ? "verified" : "FAILED") + "\n";
            emit(j, text, opt.json);
            if (!lc.verified) return 1;
        } else if (cmd_gap->parsed()) {
            SeifertMatrix s = load_knot(input);
            GenusGapCertificate cert = genus_gap_certify(n, s);
            std::string text = "s7 = " + std::to_string(cert.s7_value) + ", concluded " +
                               (cert.concluded ? "yes" : "no") + "\n";
            emit(genus_gap_json(cert), text, opt.json);
        } else if (cmd_growth->parsed()) {
            auto [en, ed] = parse_fraction(eps_text);
            SeifertMatrix s = load_knot(input);
            GrowthBoundReport rep = growth_bound_check(make_rational(Integer(en), Integer(ed)), s, n);
            std::string text;
            for (const auto& line : rep.chain) text += line + "\n";
            emit(growth_bound_json(rep), text, opt.json);
        } else if (cmd_corpus->parsed()) {
            for (const auto& rec : corpus()) {
                std::cout << rec.name << " (" << rec.seifert.size() << "x" << rec.seifert.size() << ")";
                for (const auto& tag : rec.tags) std::cout << " [" << tag << "]";
                std::cout << "\n";
            }
        } else if (cmd_selftest->parsed()) {
            return run_selftest(seed, opt.samples);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
