#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "sylvdet/algebra.hpp"
#include "sylvdet/errors.hpp"
#include "sylvdet/sampling.hpp"

namespace sylvdet::cli {

namespace {

struct Options {
    std::string family = "all";
    std::optional<unsigned> dim;
    std::string dims;
    std::optional<unsigned> max_dim;
    std::vector<std::string> params;
    unsigned samples = 1;
    std::uint64_t seed = 0;
    unsigned trials = 20;
    unsigned max_n = 8;
    std::string format = "text";
    bool trace = false;
    bool all_literal = false;
    std::vector<std::string> variants;
    std::string out_path;
};

struct DimRange {
    unsigned lo = 0;
    unsigned hi = 0;
};

/// One case ready for both renderings.
struct Case {
    Json json;
    std::string text;
    bool passed = false;
};

std::string params_text(const FamilyParams& params, unsigned dim) {
    std::string out;
    for (const auto& [name, value] : param_fields(params)) out += (out.empty() ? "" : ", ") + name + "=" + value.str();
    for (const auto& [name, value] : derived_fields(params, dim)) out += ", " + name + "=" + value.str() + " (derived)";
    return out.empty() ? "(none)" : out;
}

std::vector<FamilyId> select_families(const std::string& name) {
    if (name == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
    const auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return {*f};
}

FamilyId single_family(const std::string& name) {
    if (name == "all") throw UsageError("this command needs a single --family");
    return select_families(name).front();
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw UsageError("bad " + what + " '" + s + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
}

std::optional<DimRange> resolve_dims(const Options& o) {
    const int given = int(o.dim.has_value()) + int(!o.dims.empty()) + int(o.max_dim.has_value());
    if (given > 1) throw UsageError("use only one of --dim, --dims, --max-dim");
    DimRange r;
    if (o.dim) {
        r = {*o.dim, *o.dim};
    } else if (!o.dims.empty()) {
        const auto sep = o.dims.find("..");
        if (sep == std::string::npos) throw UsageError("--dims expects A..B");
        r = {parse_unsigned(o.dims.substr(0, sep), "--dims"), parse_unsigned(o.dims.substr(sep + 2), "--dims")};
    } else if (o.max_dim) {
        r = {1, *o.max_dim};
    } else {
        return std::nullopt;
    }
    if (r.lo < 1 || r.lo > r.hi) throw UsageError("dimension range must satisfy 1 <= A <= B");
    return r;
}

DimRange require_dims(const Options& o) {
    const auto r = resolve_dims(o);
    if (!r) throw UsageError("one of --dim, --dims, --max-dim is required");
    return *r;
}

std::map<std::string, Rational> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> fields;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=rational, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (fields.count(name)) throw UsageError("parameter '" + name + "' given twice");
        fields.emplace(name, Rational::parse(item.substr(eq + 1)));
    }
    return fields;
}

Readings resolve_readings(const Options& o) {
    Readings r = o.all_literal ? Readings::all_literal() : Readings{};
    for (const auto& name : o.variants) {
        const auto extra = parse_reading(name);
        if (!extra) throw UsageError("unknown variant '" + name + "'");
        r.dual_hahn_closed_form |= extra->dual_hahn_closed_form;
        r.racah_lambda |= extra->racah_lambda;
        r.qracah_lambda |= extra->qracah_lambda;
        r.qracah_upper_factor |= extra->qracah_upper_factor;
    }
    return r;
}

bool takes_params(FamilyId f) { return !param_fields(sample_params(f, 1, 0)).empty(); }

/// Parameter sets for one (family, dim): the explicit one, or `samples` seeded draws.
std::vector<FamilyParams> params_for(FamilyId f, unsigned dim, const Options& o) {
    if (!o.params.empty()) {
        const FamilyParams p = params_from_fields(f, parse_params(o.params));
        const auto problems = validate_params(f, dim, p);
        if (!problems.empty()) throw DegenerateParams(std::string(family_name(f)) + " dim " + std::to_string(dim) + ": " + problems.front());
        return {p};
    }
    if (!takes_params(f)) return {NoParams{}};
    std::vector<FamilyParams> out;
    for (unsigned s = 0; s < o.samples; ++s) out.push_back(sample_params(f, dim, combine_seed({o.seed, s})));
    return out;
}

Json config_json(const std::string& command, const Options& o, const std::optional<DimRange>& dims) {
    Json c{{"command", command}};
    if (command != "identity") {
        c["family"] = o.family;
        if (dims) c["dims"] = Json::array({dims->lo, dims->hi});
        if (o.params.empty()) {
            c["samples"] = o.samples;
        } else {
            c["params"] = o.params;
        }
        c["paper_literal"] = o.all_literal;
    } else {
        c["max_n"] = o.max_n;
        c["trials"] = o.trials;
    }
    c["seed"] = o.seed;
    c["variants"] = o.variants;
    if (command == "reduce") c["trace"] = o.trace;
    return c;
}

int emit(const std::string& command, const Json& config, const std::vector<Case>& cases, const Options& o,
         std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& c : cases) passed += c.passed;
    const std::size_t failed = cases.size() - passed;

    std::ostringstream body;
    if (o.format == "json") {
        Json doc{{"command", command}, {"config", config}, {"cases", Json::array()}};
        for (const auto& c : cases) doc["cases"].push_back(c.json);
        doc["summary"] = Json{{"total", cases.size()}, {"passed", passed}, {"failed", failed}};
        body << doc.dump(2) << '\n';
    } else {
        for (const auto& c : cases) body << c.text;
        if (command != "table") body << "summary: total " << cases.size() << ", passed " << passed << ", failed " << failed << '\n';
    }

    if (o.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + o.out_path + "' for writing");
        file << body.str();
    }
    return failed == 0 ? kExitPass : kExitFail;
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string closed_form_text(const VerifyReport& r) {
    return r.variable == 't' ? factored_form(r.spectrum) : r.closed_form.str(r.variable);
}

Case eval_case(const VerifyReport& r) {
    Case c;
    c.passed = r.passed();
    c.json = verify_json(r);
    c.json["factored"] = closed_form_text(r);
    const std::string note = lambda_note(r.family, r.readings);
    if (!note.empty()) c.json["note"] = note;

    std::ostringstream t;
    const std::string in_var = r.variable == 't' ? "" : std::string(" (in ") + r.variable + ")";
    t << "family: " << family_name(r.family) << '\n'
      << "dim: " << r.dim << '\n'
      << "params: " << params_text(r.params, r.dim) << '\n';
    if (r.readings.any()) {
        t << "readings:";
        for (const auto& n : reading_names(r.readings)) t << ' ' << n;
        t << '\n';
    }
    t << "charpoly" << in_var << ": " << r.charpoly.str(r.variable) << '\n'
      << "coefficients" << in_var << ": " << coefficient_list(r.charpoly) << '\n'
      << "closed form" << in_var << ": " << closed_form_text(r) << '\n';
    if (!note.empty()) t << "note: " << note << '\n';
    t << "oracle: " << (r.oracle_match ? "true" : "false") << '\n' << "match: " << (r.passed() ? "true" : "false") << '\n';
    if (r.witness) t << "witness: " << *r.witness << '\n';
    t << '\n';
    c.text = t.str();
    return c;
}

Case verify_case(const VerifyReport& r) {
    Case c{verify_json(r), {}, r.passed()};
    std::ostringstream t;
    t << mark(c.passed) << " closed-form " << family_name(r.family) << " dim=" << r.dim << " "
      << params_text(r.params, r.dim);
    if (r.witness) t << " | " << *r.witness;
    t << '\n';
    c.text = t.str();
    return c;
}

Case induction_case(const InductionReport& r) {
    Case c{induction_json(r), {}, r.passed};
    std::ostringstream t;
    t << mark(c.passed) << " induction " << family_name(r.family) << " dim=" << r.dim << " "
      << params_text(r.params, r.dim) << " -> child dim=" << r.shift.child_dim << " scale=" << r.shift.scale
      << " offset=" << r.shift.offset << '\n';
    c.text = t.str();
    return c;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const FamilyId f = single_family(o.family);
    const DimRange dims = require_dims(o);
    const Readings readings = resolve_readings(o);
    std::vector<Case> cases;
    for (unsigned dim = dims.lo; dim <= dims.hi; ++dim) {
        for (const auto& p : params_for(f, dim, o)) cases.push_back(eval_case(verify_family(f, dim, p, readings)));
    }
    return emit("eval", config_json("eval", o, dims), cases, o, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto families = select_families(o.family);
    if (!o.params.empty() && families.size() != 1) throw UsageError("--param needs a single --family");
    const DimRange dims = resolve_dims(o).value_or(DimRange{1, 10});
    const Readings readings = resolve_readings(o);

    std::vector<Case> cases;
    for (FamilyId f : families) {
        for (unsigned dim = dims.lo; dim <= dims.hi; ++dim) {
            const auto param_sets = params_for(f, dim, o);
            for (std::size_t s = 0; s < param_sets.size(); ++s) {
                const auto& p = param_sets[s];
                cases.push_back(verify_case(verify_family(f, dim, p, readings)));
                const unsigned min_induction = f == FamilyId::SylvesterD ? 3 : 2;
                if (f != FamilyId::SylvesterA && dim >= min_induction) {
                    cases.push_back(induction_case(induction_report(f, dim, p, readings)));
                }
                if (f == FamilyId::SylvesterB) {
                    RationalSampler rng(combine_seed({o.seed, dim, s, 0xb}));
                    const Rational x0 = rng.draw(kSampleBound);
                    const bool ok = b_leading_coefficient_check(dim, x0);
                    Case c{Json{{"kind", "b-leading-coefficient"}, {"family", family_name(f)}, {"dim", dim},
                                {"x0", x0.str()}, {"passed", ok}},
                           {}, ok};
                    c.text = std::string(mark(ok)) + " b-leading-coefficient dim=" + std::to_string(dim) + " x0=" + x0.str() + '\n';
                    cases.push_back(std::move(c));
                }
            }
            if (f == FamilyId::SylvesterA) {
                const bool ok = a_family_check(dim);
                Case c{Json{{"kind", "a-family"}, {"family", family_name(f)}, {"dim", dim}, {"passed", ok}}, {}, ok};
                c.text = std::string(mark(ok)) + " a-family dim=" + std::to_string(dim) + '\n';
                cases.push_back(std::move(c));
            }
        }
    }
    return emit("verify", config_json("verify", o, dims), cases, o, out);
}

void print_witness(std::ostream& t, const Witness& w) {
    t << "  witness: " << w.check << " at (" << w.row << ", " << w.col << "): expected " << w.expected << ", actual "
      << w.actual << '\n';
}

Case reduction_case(const ReductionReport& r, bool trace) {
    Case c{reduction_json(r, trace), {}, r.passed()};
    std::ostringstream t;
    t << mark(c.passed) << " reduction " << family_name(r.family) << " dim=" << r.dim << " "
      << params_text(r.params, r.dim) << '\n';
    t << "  zero block (" << r.zero_block << "): " << (r.zero_block_ok ? "ok" : "FAILED") << '\n';
    t << "  leading eigenvalues:";
    for (const auto& e : r.leading_eigs) t << ' ' << e;
    t << " " << (r.leading_eigs_ok ? "ok" : "FAILED") << '\n';
    if (r.family == FamilyId::QRacah) t << "  tridiagonal form: " << (r.trailing_tridiagonal_ok ? "ok" : "FAILED") << '\n';
    t << "  trailing similarity: " << (r.trailing_match_ok ? "ok" : "FAILED") << '\n';
    t << "  sigma=" << r.shift.scale << " kappa=" << r.shift.offset << " child dim=" << r.shift.child_dim << " "
      << params_text(r.shift.child_params, r.shift.child_dim) << '\n';
    if (r.witness) print_witness(t, *r.witness);
    if (trace) {
        for (const auto& step : r.trace) {
            t << "  [" << step.label << "]\n";
            std::istringstream rows(step.matrix.str());
            for (std::string line; std::getline(rows, line);) t << "    " << line << '\n';
        }
    }
    c.text = t.str();
    return c;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    std::vector<FamilyId> families;
    if (o.family == "all") {
        for (FamilyId f : kAllFamilies) {
            if (has_reduction(f)) families.push_back(f);
        }
    } else {
        const FamilyId f = single_family(o.family);
        if (!has_reduction(f)) throw Unsupported("no reduction available for family " + std::string(family_name(f)));
        families.push_back(f);
    }
    if (!o.params.empty() && families.size() != 1) throw UsageError("--param needs a single --family");
    const DimRange dims = require_dims(o);
    const Readings readings = resolve_readings(o);

    std::vector<Case> cases;
    for (FamilyId f : families) {
        const unsigned min_dim = f == FamilyId::SylvesterD ? 3 : 2;
        for (unsigned dim = dims.lo; dim <= dims.hi; ++dim) {
            if (dim < min_dim) {
                if (families.size() == 1) {
                    throw BadDimension(std::string(family_name(f)) + " reduction needs dim >= " + std::to_string(min_dim));
                }
                continue;
            }
            for (const auto& p : params_for(f, dim, o)) cases.push_back(reduction_case(reduce_step(f, dim, p, readings), o.trace));
        }
    }
    return emit("reduce", config_json("reduce", o, dims), cases, o, out);
}

int cmd_identity(const Options& o, std::ostream& out, std::ostream& err) {
    IdentityReading reading = IdentityReading::LowerShift;
    for (const auto& v : o.variants) {
        if (v == "cN1") {
            reading = IdentityReading::CapitalN;
        } else if (v != "cn1") {
            throw UsageError("unknown identity variant '" + v + "' (expected cn1 or cN1)");
        }
    }
    if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
    if (o.trials == 0) err << "warning: 0 trials, the identity check is vacuous\n";

    const unsigned dim = o.max_n + 1;
    std::vector<Case> cases;
    for (unsigned n = 0; n < o.max_n; ++n) {
        const auto r = qracah_scalar_identity(n, dim, o.trials, o.seed, reading);
        Case c{identity_json(r, reading), {}, r.passed};
        std::ostringstream t;
        t << mark(r.passed) << " identity n=" << n << " N=" << o.max_n << " trials=" << r.passed_trials << "/" << r.trials;
        if (r.vacuous) t << " (vacuous)";
        if (r.counterexample) t << " counterexample " << params_text(*r.counterexample, dim);
        t << '\n';
        c.text = t.str();
        cases.push_back(std::move(c));
    }
    return emit("identity", config_json("identity", o, std::nullopt), cases, o, out);
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    const auto families = select_families(o.family);
    if (!o.params.empty() && families.size() != 1) throw UsageError("--param needs a single --family");
    const DimRange dims = require_dims(o);
    const Readings readings = resolve_readings(o);
    Options single = o;
    single.samples = 1;

    std::vector<Case> cases;
    for (FamilyId f : families) {
        for (unsigned dim = dims.lo; dim <= dims.hi; ++dim) {
            const auto r = verify_family(f, dim, params_for(f, dim, single).front(), readings);
            const std::string factored = closed_form_text(r);
            Case c;
            c.passed = r.passed();
            c.json = Json{{"kind", "table-row"},
                          {"family", family_name(f)},
                          {"dim", dim},
                          {"params", params_json(r.params)},
                          {"factored", factored},
                          {"coefficients", rationals_json(r.charpoly.coefficients())},
                          {"passed", c.passed}};
            c.text = std::string(family_name(f)) + '\t' + std::to_string(dim) + '\t' + factored + '\t' +
                     coefficient_list(r.charpoly) + '\n';
            if (!c.passed) err << "mismatch: " << family_name(f) << " dim " << dim << ": " << r.witness.value_or("") << '\n';
            cases.push_back(std::move(c));
        }
    }
    return emit("table", config_json("table", o, dims), cases, o, out);
}

void add_family(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family, "family name or 'all'");
}

void add_dims(CLI::App* sub, Options& o) {
    sub->add_option("--dim", o.dim, "single dimension");
    sub->add_option("--dims", o.dims, "dimension range A..B");
    sub->add_option("--max-dim", o.max_dim, "dimensions 1..K");
}

void add_params(CLI::App* sub, Options& o) {
    sub->add_option("--param", o.params, "name=rational, repeatable");
    sub->add_option("--samples", o.samples, "seeded parameter draws per dimension")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "write the report to this path");
    sub->add_option("--variant", o.variants, "alternative reading, repeatable");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact checks for tridiagonal matrix families with product-form determinants", "sylvdet"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "characteristic polynomial and closed form of one family");
    auto* verify = app.add_subcommand("verify", "closed-form, induction and auxiliary checks over a sweep");
    auto* reduce = app.add_subcommand("reduce", "replay the block-triangularization");
    auto* identity = app.add_subcommand("identity", "randomized exact check of the q-Racah diagonal identity");
    auto* table = app.add_subcommand("table", "closed forms and coefficients, one row per dimension");

    for (auto* sub : {eval, verify, reduce, table}) {
        add_family(sub, o);
        add_dims(sub, o);
        add_params(sub, o);
        sub->add_flag("--paper-literal", o.all_literal, "use every literal printed reading");
    }
    for (auto* sub : {eval, verify, reduce, identity, table}) add_common(sub, o);
    reduce->add_flag("--trace", o.trace, "print every intermediate matrix");
    identity->add_option("--max-n", o.max_n, "N; checks n = 0..N-1");
    identity->add_option("--trials", o.trials, "random points per n");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        if (identity->parsed()) return cmd_identity(o, out, err);
        return cmd_table(o, out, err);
    } catch (const Singular& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace sylvdet::cli
