#include "plateau/cli.hpp"

#include "plateau/census.hpp"
#include "plateau/errors.hpp"
#include "plateau/factorization.hpp"
#include "plateau/oracle.hpp"
#include "plateau/rmcode.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace plateau {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    std::uint32_t p = 0;
    std::uint64_t n = 0;
    std::string family;
    bool json = false;
    std::uint64_t budget = 0;
    unsigned workers = 0;
};

void add_common(CLI::App* sub, Common& c, bool family_required) {
    sub->add_option("-p,--prime", c.p, "characteristic (defaults to 2 for C1/C2)");
    sub->add_option("-n", c.n, "extension degree")->required();
    auto* fam = sub->add_option("--family", c.family, "C1, C2 or D");
    if (family_required) fam->required();
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--budget", c.budget, "enumeration budget (overrides PLATEAU_BUDGET)");
    sub->add_option("--workers", c.workers, "enumeration threads (0: all cores)");
}

std::uint64_t budget_of(const Common& c) {
    return c.budget != 0 ? c.budget : enumeration_budget_from_env();
}

FamilyId family_of(const Common& c) {
    const Family tag = parse_family(c.family);
    std::uint32_t p = c.p;
    if (p == 0) {
        if (tag == Family::D) throw UsageError("family D needs an odd prime: pass -p");
        p = 2;
    }
    if (c.n == 0) throw UsageError("n must be positive");
    FamilyId f{tag, p, c.n};
    f.validate();
    return f;
}

unsigned p_adic_valuation(std::uint64_t n, std::uint32_t p) {
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Json poly_json(const FpPoly& f) {
    Json a = Json::array();
    for (auto c : f.coeffs()) a.push_back(c);
    return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- factor ----

int cmd_factor(const Common& c, std::ostream& out) {
    if (c.p == 0) throw UsageError("factor needs -p");
    const PrimeModulus p(c.p);
    if (c.n == 0) throw UsageError("n must be positive");
    const auto factors = factor_cyclic(c.n, p);
    const auto sr = group_self_reciprocal(factors);

    if (c.json) {
        Json j;
        j["p"] = c.p;
        j["n"] = c.n;
        j["v"] = sr.v;
        j["m"] = sr.m;
        Json fs = Json::array();
        for (const auto& f : factors)
            fs.push_back({{"poly", poly_json(f.poly)}, {"degree", f.poly.degree()}, {"multiplicity", f.multiplicity}});
        j["factors"] = fs;
        Json prs = Json::array();
        for (const auto& r : sr.sr_primes)
            prs.push_back({{"poly", poly_json(r.poly)}, {"degree", r.degree}, {"irreducible", r.irreducible}});
        j["self_reciprocal"] = {{"x_minus_1", sr.multiplicity},
                                {"x_plus_1", sr.has_x_plus_1 ? sr.multiplicity : 0},
                                {"primes", prs},
                                {"multiplicity", sr.multiplicity}};
        emit(out, j);
        return kExitOk;
    }
    out << "x^" << c.n << " - 1 over F_" << c.p << ": v = " << sr.v << ", m = " << sr.m << '\n';
    out << "irreducible factors:\n";
    for (const auto& f : factors)
        out << "  (" << f.poly.to_string() << ")^" << f.multiplicity << "   coset " << f.coset_rep << '\n';
    out << "prime self-reciprocal factors (each to the power " << sr.multiplicity << "):\n";
    out << "  x - 1" << (sr.has_x_plus_1 ? ", x + 1" : "") << '\n';
    for (const auto& r : sr.sr_primes)
        out << "  " << r.poly.to_string() << "   degree " << r.degree << (r.irreducible ? "" : ", g*g^*") << '\n';
    return kExitOk;
}

// ---- genpoly ----

int cmd_genpoly(const Common& c, std::optional<std::uint64_t> coeff, const std::string& method, std::ostream& out) {
    const FamilyId f = family_of(c);
    ZPoly g;
    if (method == "theorem") g = gen_poly(f);
    else if (method == "propositions") g = gen_poly_via_propositions(f);
    else throw UsageError("--method must be 'theorem' or 'propositions'");

    if (coeff) {
        if (*coeff > f.n) throw UsageError("--coeff must lie in 0.." + std::to_string(f.n));
        const BigInt v = g.coeff(static_cast<std::size_t>(*coeff));
        if (c.json) {
            Json j;
            j["p"] = f.p;
            j["n"] = f.n;
            j["family"] = family_name(f.tag);
            j["power"] = *coeff;
            j["coefficient"] = to_decimal(v);
            emit(out, j);
        } else {
            out << to_decimal(v) << '\n';
        }
        return kExitOk;
    }
    if (c.json) {
        Json j;
        j["p"] = f.p;
        j["n"] = f.n;
        j["family"] = family_name(f.tag);
        Json cs = Json::array();
        for (std::ptrdiff_t t = 0; t <= g.degree(); ++t) cs.push_back(to_decimal(g.coeff(t)));
        j["coefficients"] = cs;
        emit(out, j);
    } else {
        out << g.to_string() << '\n';
    }
    return kExitOk;
}

// ---- counts ----

int cmd_counts(const Common& c, const std::vector<unsigned>& s_values, bool all, std::ostream& out) {
    const FamilyId f = family_of(c);
    const SpecialCounts sc = special_counts(f);
    const auto dist = PlateauDistribution::from_gen_poly(f, gen_poly(f));
    for (unsigned s : s_values)
        if (s > f.n) throw UsageError("--s must lie in 0.." + std::to_string(f.n));

    if (c.json) {
        Json j;
        j["p"] = f.p;
        j["n"] = f.n;
        j["family"] = family_name(f.tag);
        j["size"] = to_decimal(f.size());
        j["bent"] = to_decimal(sc.bent);
        j["semibent"] = to_decimal(sc.semibent);
        j["semibent_s"] = sc.semibent_s;
        if (!s_values.empty()) {
            Json js = Json::object();
            for (unsigned s : s_values) js[std::to_string(s)] = to_decimal(dist.at(s));
            j["plateaued"] = js;
        }
        if (all) {
            Json jd = Json::object();
            for (const auto& [s, cnt] : dist.counts) jd[std::to_string(s)] = to_decimal(cnt);
            j["distribution"] = jd;
        }
        Json pc = Json::array();
        for (const auto& pr : sc.printed)
            pc.push_back({{"quantity", pr.quantity}, {"value", to_decimal(pr.value)}, {"consistent", pr.consistent}, {"label", pr.label}});
        j["printed_corollaries"] = pc;
        emit(out, j);
        return kExitOk;
    }
    out << f.to_string() << ", " << to_decimal(f.size()) << " functions\n";
    out << "bent: " << to_decimal(sc.bent) << '\n';
    out << "semibent (s=" << sc.semibent_s << "): " << to_decimal(sc.semibent) << '\n';
    for (unsigned s : s_values) out << s << "-plateaued: " << to_decimal(dist.at(s)) << '\n';
    if (all)
        for (const auto& [s, cnt] : dist.counts) out << "  s=" << s << ": " << to_decimal(cnt) << '\n';
    for (const auto& pr : sc.printed)
        out << pr.label << ' ' << pr.quantity << ": " << to_decimal(pr.value) << '\n';
    return kExitOk;
}

// ---- weights ----

int cmd_weights(const Common& c, bool csv, std::ostream& out) {
    const Family code = c.family.empty() ? Family::C1 : parse_family(c.family);
    if (c.p != 0 && c.p != 2) throw UsageError("weight enumerators are defined for p = 2 only");
    const auto we = weight_enumerator(code, c.n);
    // closed form for C1 with odd n, otherwise read off the table
    const CodeParams cp = code == Family::C1 && c.n % 2 == 1 ? code_params(code, c.n) : code_params_from_enumerator(we);
    const std::optional<CodeParams> params = cp;

    if (c.json) {
        Json j;
        j["p"] = 2;
        j["n"] = c.n;
        j["family"] = family_name(code);
        Json rows = Json::array();
        for (const auto& r : we.rows) rows.push_back({{"weight", to_decimal(r.weight)}, {"multiplicity", to_decimal(r.multiplicity)}});
        j["rows"] = rows;
        j["total"] = to_decimal(we.total());
        if (params)
            j["params"] = {{"length", to_decimal(params->length)},
                           {"dimension", params->dimension},
                           {"min_distance", to_decimal(params->min_distance)}};
        emit(out, j);
        return kExitOk;
    }
    const char* sep = csv ? "," : "  ";
    out << "weight" << sep << "multiplicity\n";
    for (const auto& r : we.rows) out << to_decimal(r.weight) << sep << to_decimal(r.multiplicity) << '\n';
    if (!csv) {
        out << "total " << to_decimal(we.total()) << '\n';
        if (params)
            out << "[" << to_decimal(params->length) << ", " << params->dimension << ", "
                << to_decimal(params->min_distance) << "]\n";
    }
    return kExitOk;
}

// ---- verify ----

struct Mismatch {
    FamilyId family;
    unsigned s;
    std::string what;
};

std::optional<Mismatch> verify_instance(const FamilyId& f, const EnumerationOptions& eo, bool walsh) {
    const ZPoly g = gen_poly(f);
    const ZPoly gp = gen_poly_via_propositions(f);
    const auto theorem = PlateauDistribution::from_gen_poly(f, g);
    const auto props = PlateauDistribution::from_gen_poly(f, gp);
    const auto brute = enumerate_distribution(f, eo);

    for (unsigned s = 0; s <= f.n; ++s) {
        if (theorem.at(s) != brute.at(s))
            return Mismatch{f, s, "theorem " + to_decimal(theorem.at(s)) + " vs enumeration " + to_decimal(brute.at(s))};
        if (props.at(s) != brute.at(s))
            return Mismatch{f, s, "propositions " + to_decimal(props.at(s)) + " vs enumeration " + to_decimal(brute.at(s))};
    }
    if (g.evaluate(1) != f.size()) return Mismatch{f, static_cast<unsigned>(f.n), "G(1) differs from the family size"};
    if (auto bad = theorem.check_invariants(p_adic_valuation(f.n, f.p))) return Mismatch{f, 0, *bad};

    if (walsh) {
        const QuadraticEvaluator ev(f);
        const std::uint64_t total = static_cast<std::uint64_t>(f.size());
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto q = family_member(f, i);
            const unsigned s = plateau_s(q);
            const auto r = ev.walsh(q.coeffs);
            if (r.s_from_spectrum != s || !r.magnitudes_ok || !r.parseval_ok ||
                BigInt(r.support_size) != ipow(f.p, f.n - s))
                return Mismatch{f, s, "Walsh spectrum of member " + std::to_string(i) + " disagrees (spectrum s = " +
                                          std::to_string(r.s_from_spectrum) + ")"};
        }
    }
    return std::nullopt;
}

int cmd_verify(const Common& c, std::uint64_t max_n, bool walsh, std::ostream& out, std::ostream& err) {
    std::vector<FamilyId> sweep;
    std::vector<Family> tags;
    if (!c.family.empty()) tags.push_back(parse_family(c.family));
    else if (c.p > 2) tags.push_back(Family::D);
    else tags = {Family::C1, Family::C2};
    if (max_n == 0) max_n = c.n;
    if (max_n == 0) throw UsageError("verify needs --max-n or -n");

    for (Family t : tags) {
        std::uint32_t p = c.p;
        if (p == 0) {
            if (t == Family::D) throw UsageError("family D needs an odd prime: pass -p");
            p = 2;
        }
        const std::uint64_t lo = c.n != 0 && c.n <= max_n ? c.n : 1;
        for (std::uint64_t n = lo; n <= max_n; ++n) {
            if (t == Family::C2 && n % 2 != 0) continue;
            FamilyId f{t, p, n};
            f.validate();
            sweep.push_back(f);
        }
    }

    const EnumerationOptions eo{budget_of(c), c.workers};
    Json checked = Json::array();
    std::optional<Mismatch> bad;
    for (const auto& f : sweep) {
        bad = verify_instance(f, eo, walsh);
        checked.push_back({{"family", family_name(f.tag)}, {"p", f.p}, {"n", f.n}, {"ok", !bad}});
        if (!c.json) out << (bad ? "MISMATCH " : "ok ") << f.to_string() << '\n';
        if (bad) break;
    }
    if (c.json) {
        Json j;
        j["walsh"] = walsh;
        j["checked"] = checked;
        j["ok"] = !bad;
        if (bad)
            j["mismatch"] = {{"family", family_name(bad->family.tag)}, {"p", bad->family.p}, {"n", bad->family.n},
                             {"s", bad->s}, {"detail", bad->what}};
        emit(out, j);
    }
    if (bad) {
        err << "mismatch at (" << family_name(bad->family.tag) << ", p=" << bad->family.p << ", n=" << bad->family.n
            << ", s=" << bad->s << "): " << bad->what << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plateau counts of idempotent and p-potent quadratic functions"};
    app.name("plateau");
    app.require_subcommand(1);

    Common c;
    auto* factor = app.add_subcommand("factor", "factor x^n - 1 over F_p into prime self-reciprocal parts");
    add_common(factor, c, false);

    std::optional<std::uint64_t> coeff;
    std::string method = "theorem";
    auto* genpoly = app.add_subcommand("genpoly", "generating polynomial of a family");
    add_common(genpoly, c, true);
    genpoly->add_option("--coeff", coeff, "print only the coefficient of z^k");
    genpoly->add_option("--method", method, "theorem (default) or propositions");

    std::vector<unsigned> s_values;
    bool all = false;
    auto* counts = app.add_subcommand("counts", "bent, semi-bent and s-plateaued counts");
    add_common(counts, c, true);
    counts->add_option("--s", s_values, "also report the number of s-plateaued functions");
    counts->add_flag("--all", all, "print the whole distribution");

    bool csv = false;
    auto* weights = app.add_subcommand("weights", "weight enumerator of the C1/C2 Reed-Muller subcode");
    add_common(weights, c, false);
    weights->add_flag("--csv", csv, "comma-separated rows");

    std::uint64_t max_n = 0;
    bool walsh = false;
    auto* verify = app.add_subcommand("verify", "compare theorems against exhaustive enumeration");
    verify->add_option("-p,--prime", c.p, "characteristic");
    verify->add_option("-n", c.n, "first n of the sweep (or the only one without --max-n)");
    verify->add_option("--family", c.family, "C1, C2 or D (default: C1 and C2, or D for odd p)");
    verify->add_flag("--json", c.json, "machine-readable output");
    verify->add_option("--budget", c.budget, "enumeration budget (overrides PLATEAU_BUDGET)");
    verify->add_option("--workers", c.workers, "enumeration threads (0: all cores)");
    verify->add_option("--max-n", max_n, "sweep n up to this bound");
    verify->add_flag("--walsh", walsh, "also check every Walsh spectrum");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*factor) return cmd_factor(c, out);
        if (*genpoly) return cmd_genpoly(c, coeff, method, out);
        if (*counts) return cmd_counts(c, s_values, all, out);
        if (*weights) return cmd_weights(c, csv, out);
        if (*verify) return cmd_verify(c, max_n, walsh, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace plateau
