#include "lyap/cli.hpp"

#include "lyap/bounds.hpp"
#include "lyap/errors.hpp"
#include "lyap/parse.hpp"
#include "lyap/quadratic.hpp"
#include "lyap/selfcheck.hpp"
#include "lyap/spectra.hpp"
#include "lyap/weierstrass.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lyap {
namespace cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json json_ints(const std::vector<int>& v) { return ordered_json(v); }

ordered_json json_rationals(const std::vector<Rational>& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& r : v) arr.push_back(r.str());
    return arr;
}

std::string mode_to_string(BoundMode m) { return bound_mode_name(m); }

BoundMode mode_from_string(const std::string& mode) {
    if (mode == "generic") return BoundMode::generic;
    if (mode == "non-hyp") return BoundMode::non_hyperelliptic;
    if (mode == "hyp-exact") return BoundMode::hyperelliptic_exact;
    throw Error(ErrorKind::UsageError, "unknown mode '" + mode + "'");
}

ordered_json bound_report_json(const BoundReport& report) {
    ordered_json j;
    j["stratum"] = json_ints(report.stratum.signature);
    j["genus"] = report.stratum.genus;
    j["mode"] = mode_to_string(report.mode);
    j["w_upper"] = json_rationals(report.w_upper);
    j["sum_upper"] = report.sum_upper.str();
    j["theorem_cap"] = report.theorem_cap.str();
    j["effective_sum"] = report.effective_sum.str();
    j["kappa_lower"] = report.kappa_lower.str();
    j["equality_case"] = equality_case_name(report.equality_case);
    j["H_used"] = json_ints(report.H_used);
    j["assumption_required"] = report.assumption_required;
    return j;
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os.str();
}

void emit_bound_text(const BoundReport& report, std::ostream& out) {
    out << "stratum        " << report.stratum.str() << "\n";
    if (report.stratum.component != Component::unspecified)
        out << "component      " << component_name(report.stratum.component) << "\n";
    out << "genus          " << report.stratum.genus << "\n";
    out << "mode           " << mode_to_string(report.mode) << "\n";
    out << "w_upper        " << join_rationals(report.w_upper) << "\n";
    out << "H_used         " << join_ints(report.H_used) << "\n";
    out << "sum_upper      " << report.sum_upper.str() << "\n";
    out << "theorem_cap    " << report.theorem_cap.str() << "\n";
    out << "effective_sum  " << report.effective_sum.str() << "\n";
    out << "kappa_lower    " << report.kappa_lower.str() << "\n";
    out << "equality_case  " << equality_case_name(report.equality_case) << "\n";
}

struct ResolvedBound {
    AbelianStratum stratum;
    ModeSpec mode;
};

ResolvedBound resolve_bound_inputs(const std::vector<int>& zeros, Component component,
                                   const std::string& mode_name,
                                   const std::vector<int>& quadratic) {
    BoundMode mode = mode_from_string(mode_name);
    if (mode == BoundMode::hyperelliptic_exact) {
        if (quadratic.empty())
            throw Error(ErrorKind::UsageError, "--mode hyp-exact requires --quadratic");
        HyperellipticLocus locus = hyperelliptic_locus(make_quadratic(quadratic));
        AbelianStratum stratum =
            zeros.empty() ? locus.induced : make_abelian_stratum(zeros, component);
        return {stratum, ModeSpec::hyp_exact(std::move(locus))};
    }
    if (zeros.empty())
        throw Error(ErrorKind::UsageError, "--zeros is required");
    ModeSpec spec = mode == BoundMode::generic ? ModeSpec::generic() : ModeSpec::non_hyp();
    return {make_abelian_stratum(zeros, component), spec};
}

int run_bound(const BoundCmd& cmd, Format format, std::ostream& out) {
    ResolvedBound in = resolve_bound_inputs(cmd.zeros, cmd.component, cmd.mode, cmd.quadratic);
    BoundReport report = sum_upper_bound(in.stratum, in.mode);
    if (format == Format::json)
        out << bound_report_json(report).dump(2) << "\n";
    else
        emit_bound_text(report, out);
    return 0;
}

int run_hyp(const HypCmd& cmd, Format format, std::ostream& out) {
    HyperellipticLocus locus = hyperelliptic_locus(make_quadratic(cmd.quadratic));
    RationalSpectrum spectrum = hyperelliptic_w(locus);
    Rational sum = hyperelliptic_sum(locus);
    bool max_sum = is_max_sum_locus(locus.quadratic);
    EqualityCase eq = classify_equality(locus.induced, locus);

    if (format == Format::json) {
        ordered_json j;
        j["quadratic"] = json_ints(locus.quadratic.orders);
        j["stratum"] = json_ints(locus.induced.signature);
        j["genus"] = locus.cover_genus;
        j["w"] = json_rationals(spectrum.values);
        j["sum"] = sum.str();
        j["max_sum_locus"] = max_sum;
        j["equality_case"] = equality_case_name(eq);
        out << j.dump(2) << "\n";
    } else {
        out << "quadratic      " << locus.quadratic.str() << "\n";
        out << "stratum        " << locus.induced.str() << "\n";
        out << "genus          " << locus.cover_genus << "\n";
        out << "w              " << spectrum.str() << "\n";
        out << "sum            " << sum.str() << "\n";
        out << "max_sum_locus  " << (max_sum ? "yes" : "no") << "\n";
        out << "equality_case  " << equality_case_name(eq) << "\n";
    }
    return 0;
}

int run_cover(const CoverCmd& cmd, Format format, std::ostream& out) {
    QuadraticSignature q = make_quadratic(cmd.quadratic);
    InducedCover cover = induced_abelian(q);

    if (format == Format::json) {
        ordered_json j;
        j["quadratic"] = json_ints(q.orders);
        j["base_genus"] = q.base_genus;
        j["stratum"] = json_ints(cover.stratum.signature);
        j["cover_genus"] = cover.cover_genus;
        ordered_json zeros = ordered_json::array();
        for (std::size_t i = 0; i < cover.stratum.signature.size(); ++i) {
            ordered_json z;
            z["order"] = cover.stratum.signature[i];
            z["kind"] = cover.zero_sources[i].kind == ZeroSource::Kind::single ? "single" : "pair";
            z["singularity"] = cover.zero_sources[i].singularity_index;
            zeros.push_back(z);
        }
        j["zeros"] = zeros;
        out << j.dump(2) << "\n";
    } else {
        out << "quadratic    " << q.str() << "\n";
        out << "base_genus   " << q.base_genus << "\n";
        out << "stratum      " << cover.stratum.str() << "\n";
        out << "cover_genus  " << cover.cover_genus << "\n";
        for (std::size_t i = 0; i < cover.stratum.signature.size(); ++i)
            out << "zero         order " << cover.stratum.signature[i] << " ("
                << (cover.zero_sources[i].kind == ZeroSource::Kind::single ? "single" : "pair")
                << ", singularity " << cover.zero_sources[i].singularity_index << ")\n";
    }
    return 0;
}

int run_cyclic(const CyclicCmd& cmd, Format format, std::ostream& out) {
    int genus = cyclic_cover_genus(cmd.n, cmd.powers);
    bool mn_family = cmd.n >= 4 && cmd.n % 2 == 0 &&
                     cmd.powers == std::array<int, 4>{cmd.n - 1, 1, cmd.n - 1, 1};

    std::vector<int> origin;
    RationalSpectrum spectrum;
    if (mn_family) {
        spectrum = mn_spectrum(cmd.n);
        origin = {cmd.n - 2, cmd.n - 2};
        origin.insert(origin.end(), 2 * cmd.n, -1);
    }

    if (format == Format::json) {
        ordered_json j;
        j["n"] = cmd.n;
        j["powers"] = ordered_json(std::vector<int>(cmd.powers.begin(), cmd.powers.end()));
        j["genus"] = genus;
        if (mn_family) {
            j["spectrum"] = json_rationals(spectrum.values);
            j["sum"] = spectrum.sum().str();
            j["quadratic_origin"] = json_ints(origin);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "n        " << cmd.n << "\n";
        out << "powers   (" << cmd.powers[0] << ',' << cmd.powers[1] << ',' << cmd.powers[2] << ','
            << cmd.powers[3] << ")\n";
        out << "genus    " << genus << "\n";
        if (mn_family) {
            out << "spectrum " << spectrum.str() << "\n";
            out << "sum      " << spectrum.sum().str() << "\n";
            out << "origin   " << render_quadratic_signature(origin) << "\n";
        }
    }
    return 0;
}

int run_table(const TableCmd& cmd, Format format, std::ostream& out) {
    std::vector<TableRow> rows = nonvarying_table(cmd.genus);

    if (format == Format::json) {
        ordered_json j;
        j["genus"] = cmd.genus;
        ordered_json arr = ordered_json::array();
        for (const TableRow& row : rows) {
            ordered_json r;
            r["zeros"] = json_ints(row.signature);
            r["component"] = row.component == Component::unspecified
                                 ? ""
                                 : component_name(row.component);
            r["w"] = json_rationals(row.w);
            r["sum"] = row.sum.str();
            r["sum_is_bound"] = row.sum_is_upper_bound_only;
            if (row.quadratic)
                r["quadratic"] = json_ints(*row.quadratic);
            arr.push_back(r);
        }
        j["rows"] = arr;
        out << j.dump(2) << "\n";
        return 0;
    }

    int g = cmd.genus;
    out << "genus " << g << "\n";
    out << std::left << std::setw(12) << "zeros" << std::setw(10) << "component";
    for (int i = 2; i <= g; ++i) out << std::setw(6) << ("w_" + std::to_string(i));
    out << std::setw(8) << "sum" << "quadratic" << "\n";
    for (const TableRow& row : rows) {
        AbelianStratum s = make_abelian_stratum(row.signature);
        out << std::setw(12) << s.str();
        out << std::setw(10)
            << (row.component == Component::unspecified ? "" : component_name(row.component));
        for (int i = 0; i < g - 1; ++i)
            out << std::setw(6)
                << (i < static_cast<int>(row.w.size()) ? row.w[i].str() : std::string());
        out << std::setw(8)
            << (row.sum_is_upper_bound_only ? "<= " + row.sum.str() : row.sum.str());
        if (row.quadratic)
            out << render_quadratic_signature(*row.quadratic);
        out << "\n";
    }
    return 0;
}

int run_partial(const PartialCmd& cmd, Format format, std::ostream& out) {
    ResolvedBound in = resolve_bound_inputs(cmd.zeros, cmd.component, cmd.mode, cmd.quadratic);
    Rational value = partial_sum_bound(in.stratum, in.mode, cmd.k);
    std::vector<Rational> w = w_upper_bounds(in.stratum, in.mode);
    w.resize(cmd.k);

    if (format == Format::json) {
        ordered_json j;
        j["stratum"] = json_ints(in.stratum.signature);
        j["genus"] = in.stratum.genus;
        j["mode"] = cmd.mode;
        j["k"] = cmd.k;
        j["partial_sum_upper"] = value.str();
        j["w_upper_prefix"] = json_rationals(w);
        out << j.dump(2) << "\n";
    } else {
        out << "stratum           " << in.stratum.str() << "\n";
        out << "genus             " << in.stratum.genus << "\n";
        out << "mode              " << cmd.mode << "\n";
        out << "k                 " << cmd.k << "\n";
        out << "partial_sum_upper " << value.str() << "\n";
        out << "w_upper_prefix    " << join_rationals(w) << "\n";
    }
    return 0;
}

std::vector<Command> roundtrip_samples() {
    std::vector<Command> samples;
    for (Format f : {Format::text, Format::json}) {
        samples.push_back({BoundCmd{{2, 2, 1, 1}, Component::unspecified, "non-hyp", {}}, f});
        samples.push_back({BoundCmd{{4}, Component::odd, "generic", {}}, f});
        samples.push_back({BoundCmd{{2, 2}, Component::hyp, "hyp-exact", {4, -1, -1, -1, -1, -1, -1, -1, -1}}, f});
        samples.push_back({BoundCmd{{}, Component::unspecified, "hyp-exact", {3, -1, -1, -1, -1, -1, -1, -1}}, f});
        samples.push_back({HypCmd{{8, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}}, f});
        samples.push_back({CoverCmd{{4, 4, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}}, f});
        samples.push_back({CyclicCmd{6, {5, 1, 5, 1}}, f});
        samples.push_back({TableCmd{4}, f});
        samples.push_back({PartialCmd{{2, 2, 2, 2}, Component::unspecified, "generic", {}, 2}, f});
        samples.push_back({CheckCmd{}, f});
    }
    return samples;
}

std::optional<std::string> check_cli_roundtrip() {
    for (const Command& cmd : roundtrip_samples()) {
        std::vector<std::string> argv = render_args(cmd);
        Command reparsed = parse_args(argv);
        if (!(reparsed == cmd)) {
            std::string joined;
            for (const auto& a : argv) joined += a + " ";
            return "render/parse mismatch for: " + joined;
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_json_stability() {
    Command cmd{BoundCmd{{2, 2, 1, 1}, Component::unspecified, "non-hyp", {}}, Format::json};
    std::ostringstream first, second;
    run_bound(std::get<BoundCmd>(cmd.payload), Format::json, first);
    run_bound(std::get<BoundCmd>(cmd.payload), Format::json, second);
    if (first.str() != second.str())
        return "two emissions of the same report differ";
    if (first.str().find("\"sum_upper\": \"13/6\"") == std::string::npos)
        return "expected \"sum_upper\": \"13/6\" in the (2,2,1,1) non-hyp report";
    return std::nullopt;
}

int run_check(std::ostream& out) {
    std::vector<CheckResult> results = run_library_checks();

    auto append = [&](const char* name, std::optional<std::string> fail) {
        CheckResult r;
        r.name = name;
        r.pass = !fail;
        r.detail = fail.value_or("");
        results.push_back(std::move(r));
    };
    append("cli command round-trip", check_cli_roundtrip());
    append("json output stability", check_json_stability());

    bool all_pass = true;
    for (const CheckResult& r : results) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
        if (!r.pass) {
            out << "\n      first counterexample: " << r.detail;
            all_pass = false;
        }
        out << "\n";
    }
    out << (all_pass ? "all checks passed" : "some checks FAILED") << " (" << results.size()
        << " checks)\n";
    return all_pass ? 0 : 1;
}

std::string ints_csv(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace

Command parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"exact bounds and spectra for Lyapunov exponents of Teichmueller curves"};
    app.require_subcommand(1);

    Command cmd;
    std::string format = "text";
    std::string zeros_text, quadratic_text, mode = "generic", powers_text;
    int genus = 0, k = 1, n = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* bound = app.add_subcommand("bound", "upper bounds for the exponent sum of a stratum");
    bound->add_option("--zeros", zeros_text, "zero orders, e.g. 2,2,1,1 (optional ':odd' suffix)");
    bound->add_option("--mode", mode, "generic | non-hyp | hyp-exact")
        ->check(CLI::IsMember({"generic", "non-hyp", "hyp-exact"}));
    bound->add_option("--quadratic", quadratic_text, "quadratic signature for hyp-exact, e.g. 4,-1x8");
    add_format(bound);

    CLI::App* hyp = app.add_subcommand("hyp", "exact spectrum of a hyperelliptic locus");
    hyp->add_option("--quadratic", quadratic_text, "genus-0 quadratic signature, e.g. 3,-1x7")
        ->required();
    add_format(hyp);

    CLI::App* cover = app.add_subcommand("cover", "double cover induced by a quadratic signature");
    cover->add_option("--quadratic", quadratic_text, "quadratic signature")->required();
    add_format(cover);

    CLI::App* cyclic = app.add_subcommand("cyclic", "genus (and spectrum) of a cyclic cover family");
    cyclic->add_option("--n", n, "degree N of the cover")->required();
    cyclic->add_option("--powers", powers_text, "four branch powers, e.g. 5,1,5,1")->required();
    add_format(cyclic);

    CLI::App* table = app.add_subcommand("table", "non-varying table for genus 3, 4 or 5");
    table->add_option("genus", genus, "genus (3, 4 or 5)")->required();
    add_format(table);

    CLI::App* partial = app.add_subcommand("partial", "bound for the k leading exponents");
    partial->add_option("--zeros", zeros_text, "zero orders");
    partial->add_option("--mode", mode, "generic | non-hyp | hyp-exact")
        ->check(CLI::IsMember({"generic", "non-hyp", "hyp-exact"}));
    partial->add_option("--quadratic", quadratic_text, "quadratic signature for hyp-exact");
    partial->add_option("--k", k, "number of leading exponents")->required();
    add_format(partial);

    CLI::App* check = app.add_subcommand("check", "run the full self-check suite");
    add_format(check);

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorKind::UsageError, e.what());
    }

    cmd.format = format == "json" ? Format::json : Format::text;

    auto parse_zeros = [&]() -> std::pair<std::vector<int>, Component> {
        if (zeros_text.empty())
            return {{}, Component::unspecified};
        return parse_abelian_signature(zeros_text);
    };
    auto parse_quad = [&]() -> std::vector<int> {
        if (quadratic_text.empty())
            return {};
        return parse_quadratic_signature(quadratic_text);
    };

    if (bound->parsed()) {
        auto [zeros, component] = parse_zeros();
        cmd.payload = BoundCmd{zeros, component, mode, parse_quad()};
    } else if (hyp->parsed()) {
        cmd.payload = HypCmd{parse_quad()};
    } else if (cover->parsed()) {
        cmd.payload = CoverCmd{parse_quad()};
    } else if (cyclic->parsed()) {
        std::vector<int> powers = parse_quadratic_signature(powers_text);
        if (powers.size() != 4)
            throw Error(ErrorKind::UsageError, "--powers needs exactly four integers");
        cmd.payload = CyclicCmd{n, {powers[0], powers[1], powers[2], powers[3]}};
    } else if (table->parsed()) {
        cmd.payload = TableCmd{genus};
    } else if (partial->parsed()) {
        auto [zeros, component] = parse_zeros();
        cmd.payload = PartialCmd{zeros, component, mode, parse_quad(), k};
    } else if (check->parsed()) {
        cmd.payload = CheckCmd{};
    }
    return cmd;
}

std::vector<std::string> render_args(const Command& cmd) {
    std::vector<std::string> argv;
    auto add_format = [&]() {
        if (cmd.format == Format::json) {
            argv.push_back("--format");
            argv.push_back("json");
        }
    };

    if (const auto* b = std::get_if<BoundCmd>(&cmd.payload)) {
        argv.push_back("bound");
        if (!b->zeros.empty()) {
            argv.push_back("--zeros");
            argv.push_back(render_abelian_signature(b->zeros, b->component));
        }
        argv.push_back("--mode");
        argv.push_back(b->mode);
        if (!b->quadratic.empty()) {
            argv.push_back("--quadratic");
            argv.push_back(ints_csv(b->quadratic));
        }
    } else if (const auto* h = std::get_if<HypCmd>(&cmd.payload)) {
        argv.push_back("hyp");
        argv.push_back("--quadratic");
        argv.push_back(ints_csv(h->quadratic));
    } else if (const auto* c = std::get_if<CoverCmd>(&cmd.payload)) {
        argv.push_back("cover");
        argv.push_back("--quadratic");
        argv.push_back(ints_csv(c->quadratic));
    } else if (const auto* cy = std::get_if<CyclicCmd>(&cmd.payload)) {
        argv.push_back("cyclic");
        argv.push_back("--n");
        argv.push_back(std::to_string(cy->n));
        argv.push_back("--powers");
        argv.push_back(std::to_string(cy->powers[0]) + "," + std::to_string(cy->powers[1]) + "," +
                       std::to_string(cy->powers[2]) + "," + std::to_string(cy->powers[3]));
    } else if (const auto* t = std::get_if<TableCmd>(&cmd.payload)) {
        argv.push_back("table");
        argv.push_back(std::to_string(t->genus));
    } else if (const auto* p = std::get_if<PartialCmd>(&cmd.payload)) {
        argv.push_back("partial");
        if (!p->zeros.empty()) {
            argv.push_back("--zeros");
            argv.push_back(render_abelian_signature(p->zeros, p->component));
        }
        argv.push_back("--mode");
        argv.push_back(p->mode);
        if (!p->quadratic.empty()) {
            argv.push_back("--quadratic");
            argv.push_back(ints_csv(p->quadratic));
        }
        argv.push_back("--k");
        argv.push_back(std::to_string(p->k));
    } else {
        argv.push_back("check");
    }
    add_format();
    return argv;
}

int run(const Command& cmd, std::ostream& out) {
    return std::visit(
        [&](const auto& payload) -> int {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, BoundCmd>)
                return run_bound(payload, cmd.format, out);
            else if constexpr (std::is_same_v<T, HypCmd>)
                return run_hyp(payload, cmd.format, out);
            else if constexpr (std::is_same_v<T, CoverCmd>)
                return run_cover(payload, cmd.format, out);
            else if constexpr (std::is_same_v<T, CyclicCmd>)
                return run_cyclic(payload, cmd.format, out);
            else if constexpr (std::is_same_v<T, TableCmd>)
                return run_table(payload, cmd.format, out);
            else if constexpr (std::is_same_v<T, PartialCmd>)
                return run_partial(payload, cmd.format, out);
            else
                return run_check(out);
        },
        cmd.payload);
}

} // namespace cli
} // namespace lyap
