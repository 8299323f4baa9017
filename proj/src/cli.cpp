#include "tcs/cli.hpp"

#include "tcs/contfrac.hpp"
#include "tcs/errors.hpp"
#include "tcs/farey.hpp"
#include "tcs/gluing.hpp"
#include "tcs/obstruction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace tcs::cli {

using nlohmann::json;

namespace {

// Machine integers stay JSON numbers; anything wider becomes a decimal string.
json int_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

json int_list_json(std::span<const BigInt> values) {
    json arr = json::array();
    for (const auto& v : values) {
        arr.push_back(int_json(v));
    }
    return arr;
}

json closed_json(const ClosedSeifert& m) {
    return {{"e0", int_json(m.e0)}, {"r", {m.r[0].str(), m.r[1].str(), m.r[2].str()}}};
}

Fraction parse_fraction_flag(const std::string& flag, const std::string& text) {
    try {
        return Fraction::parse(text);
    } catch (const InputError& e) {
        throw InputError(flag + ": " + e.what());
    }
}

Slope parse_slope_flag(const std::string& flag, const std::string& text) {
    try {
        return Slope::parse(text);
    } catch (const InputError& e) {
        throw InputError(flag + ": " + e.what());
    }
}

BigInt parse_integer_flag(const std::string& flag, const std::string& text) {
    const Fraction f = parse_fraction_flag(flag, text);
    if (!f.is_integer()) {
        throw InputError(flag + ": expected an integer, got '" + text + "'");
    }
    return f.num();
}

std::string json_scalar_text(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    const json& v = j.at(key);
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return v.dump();
    }
    throw InputError(std::string("field '") + key + "' must be a string or an integer");
}

std::string count_text(const CountResult& r) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, count::Exact>) {
                return v.value.str();
            } else if constexpr (std::is_same_v<T, count::InfiniteFamilyPlusFinite>) {
                return "family indexed by " + v.index_set + " plus " + v.extra.str();
            } else if constexpr (std::is_same_v<T, count::ReducesTo>) {
                return "same as on " + v.target.str();
            } else {
                return "uncovered (" + v.reason + ")";
            }
        },
        r.value);
}

json labels_json(const HalfHalfLabels& labels) {
    json out;
    if (labels.holonomy_family) {
        out["holonomy_family"] = "Z";
    }
    json arr = json::array();
    for (const auto& l : labels.explicit_labels) {
        arr.push_back(l.str());
    }
    out["explicit"] = std::move(arr);
    return out;
}

bool is_half_half_case(CaseKind k) {
    return k == CaseKind::HalfHalfInfSlopeTorsion0 || k == CaseKind::HalfHalfTorsionPositive;
}

bool has_reduction_target(CaseKind k) {
    return k == CaseKind::C1a || k == CaseKind::C1b || k == CaseKind::C2 || k == CaseKind::C3 ||
           k == CaseKind::C4;
}

void print_count_text(const BoundedSeifert& q, std::ostream& out) {
    const CaseTag tag = classify_case(q);
    const CountResult r = count_tcs(q);
    out << "case: " << case_name(tag.kind) << "\n";
    if (tag.kind == CaseKind::Uncovered) {
        out << "reason: " << tag.reason << "\n";
    }
    out << "count: " << count_text(r) << "\n";
    if (has_reduction_target(tag.kind)) {
        out << "reduction_target: " << reduction_target(q).str() << "\n";
    }
    if (is_half_half_case(tag.kind)) {
        const auto labels = half_half_labels(q.torsion, q.slope);
        out << "labels:";
        if (labels.holonomy_family) {
            out << " holonomy(k) for k in Z,";
        }
        for (std::size_t i = 0; i < labels.explicit_labels.size(); ++i) {
            out << (i ? ", " : " ") << labels.explicit_labels[i].str();
        }
        out << "\n";
    }
    for (const auto& w : r.warnings) {
        out << "warning: " << w << "\n";
    }
}

Fraction random_fraction(std::mt19937_64& rng, std::int64_t max_den, const Fraction& lo, const Fraction& hi) {
    // Uniform over numerators for a uniform denominator, rejecting outside [lo, hi).
    std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
    for (;;) {
        const std::int64_t d = den_dist(rng);
        const BigInt nlo = (lo * Fraction(d)).ceil();
        const BigInt nhi = (hi * Fraction(d)).ceil() - 1;
        if (nhi < nlo) {
            continue;
        }
        std::uniform_int_distribution<std::int64_t> num_dist(static_cast<std::int64_t>(nlo),
                                                             static_cast<std::int64_t>(nhi));
        Fraction f(num_dist(rng), d);
        if (f >= lo && f < hi) {
            return f;
        }
    }
}

struct VerifyOptions {
    std::int64_t max_den = 60;
    std::int64_t samples = 200;
    std::uint64_t seed = 1;
};

int run_verify(const VerifyOptions& opt, bool as_json, std::ostream& out) {
    json report;
    bool all_ok = true;

    // Vector identity for phi_from_cf over all fractional parts b/a.
    {
        std::int64_t checked = 0, normalized = 0;
        bool ok = true;
        std::string failure;
        try {
            for (std::int64_t a = 1; a <= opt.max_den; ++a) {
                for (std::int64_t b = 0; b < a; ++b) {
                    if (std::gcd(a, b) != 1) {
                        continue;
                    }
                    for (int n = -5; n <= 5; ++n) {
                        const auto rep = verify_phi_identity(Fraction(b, a), n);
                        ++checked;
                        normalized += rep.normalized ? 1 : 0;
                    }
                }
            }
        } catch (const InternalError& e) {
            ok = false;
            failure = e.what();
        }
        report["phi_identity"] = {{"checked", checked}, {"normalized", normalized}, {"passed", ok}};
        if (!ok) {
            report["phi_identity"]["failure"] = failure;
        }
        all_ok = all_ok && ok;
    }

    // Farey path lengths against the continued-fraction block totals.
    {
        std::int64_t checked = 0;
        bool ok = true;
        for (std::int64_t a = 1; a <= opt.max_den && ok; ++a) {
            for (std::int64_t b = 0; b < a && ok; ++b) {
                if (std::gcd(a, b) != 1) {
                    continue;
                }
                const PosCF cf = pos_cf_complement(b, a);
                const BigInt outer = block_profile_case(ProfileKind::OuterInfinity, cf).total();
                const BigInt inner = block_profile_case(ProfileKind::IntegerFloor, cf).total();
                for (int fl = -3; fl <= 5; ++fl) {
                    const Fraction s = Fraction(fl) + Fraction(b, a);
                    const FareyPath p = farey_shortest_path(Slope::infinity(), s);
                    ok = ok && is_valid_farey_path(p) && BigInt(p.edges()) == outer;
                    if (fl >= 2) {
                        const FareyPath q = farey_shortest_path(Fraction(fl - 2), s - Fraction(2));
                        ok = ok && is_valid_farey_path(q) && BigInt(q.edges()) == inner;
                    }
                    ++checked;
                }
            }
        }
        report["farey"] = {{"checked", checked}, {"passed", ok}};
        all_ok = all_ok && ok;
    }

    // No obstruction witness for sampled Case 3 data.
    {
        std::mt19937_64 rng(opt.seed);
        std::int64_t checked = 0;
        bool ok = true;
        for (std::int64_t i = 0; i < opt.samples; ++i) {
            const Fraction r1 = random_fraction(rng, opt.max_den, Fraction(1, opt.max_den), Fraction(1, 2));
            const Fraction r2 = random_fraction(rng, opt.max_den, Fraction(1, opt.max_den), Fraction(1, 2));
            const Fraction s = random_fraction(rng, opt.max_den, Fraction(1), Fraction(2));
            if (!case3_no_transverse(r1, r2, s)) {
                ok = false;
                report["parity"]["counterexample"] = {r1.str(), r2.str(), s.str()};
                break;
            }
            ++checked;
        }
        report["parity"]["checked"] = checked;
        report["parity"]["passed"] = ok;
        all_ok = all_ok && ok;
    }

    report["passed"] = all_ok;
    if (as_json) {
        out << report.dump() << "\n";
    } else {
        for (const char* key : {"phi_identity", "farey", "parity"}) {
            out << key << ": " << (report[key]["passed"].get<bool>() ? "ok" : "FAILED")
                << " (" << report[key]["checked"].get<std::int64_t>() << " checked)\n";
        }
    }
    return all_ok ? kExitOk : kExitInternal;
}

std::string process_batch_line(const std::string& line, std::size_t line_no) {
    try {
        const json j = json::parse(line);
        return count_to_json(query_from_json(j)).dump();
    } catch (const json::exception& e) {
        return json{{"line", line_no}, {"error", std::string("malformed JSON: ") + e.what()}}.dump();
    } catch (const InputError& e) {
        return json{{"line", line_no}, {"error", e.what()}}.dump();
    }
}

} // namespace

json count_to_json(const BoundedSeifert& q) {
    const CaseTag tag = classify_case(q);
    const CountResult r = count_tcs(q);

    json count = std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, count::Exact>) {
                return {{"kind", "exact"}, {"value", v.value.str()}};
            } else if constexpr (std::is_same_v<T, count::InfiniteFamilyPlusFinite>) {
                return {{"kind", "infinite_family"}, {"index_set", v.index_set}, {"extra", int_json(v.extra)}};
            } else if constexpr (std::is_same_v<T, count::ReducesTo>) {
                return {{"kind", "reduces_to"}, {"target", closed_json(v.target)}};
            } else {
                return {{"kind", "uncovered"}, {"reason", v.reason}};
            }
        },
        r.value);

    json out = {{"case", case_name(tag.kind)}, {"count", std::move(count)}};
    out["reduction_target"] = has_reduction_target(tag.kind) ? closed_json(reduction_target(q)) : json(nullptr);
    if (!r.warnings.empty()) {
        out["warnings"] = r.warnings;
    }
    if (is_half_half_case(tag.kind)) {
        out["labels"] = labels_json(half_half_labels(q.torsion, q.slope));
    }
    return out;
}

BoundedSeifert query_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("query must be a JSON object");
    }
    const Fraction r1 = parse_fraction_flag("r1", json_scalar_text(j, "r1"));
    const Fraction r2 = parse_fraction_flag("r2", json_scalar_text(j, "r2"));
    const Slope slope = parse_slope_flag("slope", json_scalar_text(j, "slope"));
    const BigInt torsion = j.contains("torsion") ? parse_integer_flag("torsion", json_scalar_text(j, "torsion"))
                                                 : BigInt(0);
    return BoundedSeifert(r1, r2, slope, torsion);
}

void run_batch(std::istream& in, std::ostream& out, unsigned threads) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            lines.emplace_back(no, std::move(line));
        }
    }

    std::vector<std::string> results(lines.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, lines.size() / 32 + 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
            try {
                results[i] = process_batch_line(lines[i].second, lines[i].first);
            } catch (const std::exception& e) {
                results[i] = json{{"line", lines[i].first}, {"error", std::string("internal: ") + e.what()}}.dump();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    for (const auto& r : results) {
        out << r << "\n";
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts tight contact structures on M(D^2; r1, r2) with minimal convex boundary", "tcs"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    bool as_json = false;
    std::string batch_path;
    app.add_flag("--json", as_json, "Emit one JSON object per query");
    app.add_option("--batch", batch_path, "JSONL file of {r1, r2, slope, torsion} queries");

    std::string r1_text, r2_text, slope_text, torsion_text = "0";
    auto* count_cmd = app.add_subcommand("count", "Classify a query and count tight contact structures");
    count_cmd->add_option("--r1", r1_text, "First singular fibre invariant in (0, 1)")->required();
    count_cmd->add_option("--r2", r2_text, "Second singular fibre invariant in (0, 1)")->required();
    count_cmd->add_option("--slope", slope_text, "Boundary slope p/q or inf")->required();
    count_cmd->add_option("--torsion", torsion_text, "Giroux torsion along the boundary");

    std::string cf_value, cf_convention = "neg";
    auto* cf_cmd = app.add_subcommand("cf", "Continued-fraction coefficients");
    cf_cmd->add_option("--value", cf_value, "r in (0,1) for neg; a slope s for pos")->required();
    cf_cmd->add_option("--convention", cf_convention, "neg or pos")
        ->check(CLI::IsMember({"neg", "pos"}));

    std::string r3_slope;
    auto* r3_cmd = app.add_subcommand("r3", "Third invariant attached to a boundary slope");
    r3_cmd->add_option("--slope", r3_slope, "Finite boundary slope")->required();

    std::string phi_r, phi_convention = "boundary";
    auto* phi_cmd = app.add_subcommand("phi", "Gluing matrix for a ratio q/p");
    phi_cmd->add_option("--r", phi_r, "Ratio q/p with p >= 2")->required();
    phi_cmd->add_option("--convention", phi_convention, "boundary or negative")
        ->check(CLI::IsMember({"boundary", "negative"}));

    std::string path_from, path_to;
    auto* path_cmd = app.add_subcommand("farey-path", "Shortest Farey path along the increasing arc");
    path_cmd->add_option("--from", path_from, "Start slope")->required();
    path_cmd->add_option("--to", path_to, "End slope")->required();

    std::string ob_c1, ob_c2, ob_c3, ob_r1, ob_r2, ob_slope;
    auto* ob_cmd = app.add_subcommand("obstruction", "Search for transverse-structure obstruction data");
    auto* c1_opt = ob_cmd->add_option("--c1", ob_c1, "Strict upper bound for h1/k");
    auto* c2_opt = ob_cmd->add_option("--c2", ob_c2, "Strict upper bound for h2/k");
    auto* c3_opt = ob_cmd->add_option("--c3", ob_c3, "Strict upper bound for h3/k (negative)");
    auto* or1_opt = ob_cmd->add_option("--r1", ob_r1, "Case 3 invariant in (0, 1/2)");
    auto* or2_opt = ob_cmd->add_option("--r2", ob_r2, "Case 3 invariant in (0, 1/2)");
    auto* os_opt = ob_cmd->add_option("--slope", ob_slope, "Case 3 slope in [1, 2)");
    c1_opt->needs(c2_opt, c3_opt)->excludes(or1_opt, or2_opt, os_opt);
    or1_opt->needs(or2_opt, os_opt);

    std::string rt_r1, rt_r2, rt_slope;
    auto* rt_cmd = app.add_subcommand("reduce-target", "Closed Seifert manifold M(-1-[s]; r1, r2, r3)");
    rt_cmd->add_option("--r1", rt_r1)->required();
    rt_cmd->add_option("--r2", rt_r2)->required();
    rt_cmd->add_option("--slope", rt_slope)->required();

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "Run the built-in identity self-checks");
    verify_cmd->add_option("--max-den", vopt.max_den, "Denominator bound")->check(CLI::Range(2, 1000));
    verify_cmd->add_option("--samples", vopt.samples, "Random Case 3 samples")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", vopt.seed, "Sampling seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (!batch_path.empty()) {
            if (!app.get_subcommands().empty()) {
                throw InputError("--batch cannot be combined with a subcommand");
            }
            std::ifstream in(batch_path);
            if (!in) {
                throw InputError("--batch: cannot read '" + batch_path + "'");
            }
            run_batch(in, out);
            return kExitOk;
        }

        if (count_cmd->parsed()) {
            const BoundedSeifert q(parse_fraction_flag("--r1", r1_text), parse_fraction_flag("--r2", r2_text),
                                   parse_slope_flag("--slope", slope_text),
                                   parse_integer_flag("--torsion", torsion_text));
            if (as_json) {
                out << count_to_json(q).dump() << "\n";
            } else {
                print_count_text(q, out);
            }
        } else if (cf_cmd->parsed()) {
            json coeffs;
            if (cf_convention == "neg") {
                const Fraction r = parse_fraction_flag("--value", cf_value);
                coeffs = int_list_json(neg_cf(r).coefficients());
            } else {
                const Fraction s = parse_fraction_flag("--value", cf_value);
                coeffs = int_list_json(slope_coefficients(s).coefficients());
            }
            if (as_json) {
                out << json{{"convention", cf_convention}, {"value", cf_value}, {"coefficients", coeffs}}.dump()
                    << "\n";
            } else {
                out << coeffs.dump() << "\n";
            }
        } else if (r3_cmd->parsed()) {
            const Fraction s = parse_fraction_flag("--slope", r3_slope);
            const Fraction r3 = r3_from_slope(s);
            if (as_json) {
                out << json{{"slope", s.str()}, {"r3", r3.str()}}.dump() << "\n";
            } else {
                out << r3.str() << "\n";
            }
        } else if (phi_cmd->parsed()) {
            const Fraction r = parse_fraction_flag("--r", phi_r);
            const GluingMatrix m = phi_convention == "boundary" ? build_phi(r) : build_phi_neg(r);
            const json matrix = {{int_json(m.m11()), int_json(m.m12())}, {int_json(m.m21()), int_json(m.m22())}};
            if (as_json) {
                out << json{{"convention", phi_convention}, {"r", r.str()}, {"matrix", matrix}}.dump() << "\n";
            } else {
                out << matrix.dump() << "\n";
            }
        } else if (path_cmd->parsed()) {
            const FareyPath p =
                farey_shortest_path(parse_slope_flag("--from", path_from), parse_slope_flag("--to", path_to));
            json verts = json::array();
            for (const auto& v : p.vertices) {
                verts.push_back(v.str());
            }
            if (as_json) {
                out << json{{"vertices", verts}, {"edges", p.edges()}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                    out << (i ? " " : "") << p.vertices[i].str();
                }
                out << "\n";
            }
        } else if (ob_cmd->parsed()) {
            ObstructionQuery q;
            if (c1_opt->count() > 0) {
                q = {parse_fraction_flag("--c1", ob_c1), parse_fraction_flag("--c2", ob_c2),
                     parse_fraction_flag("--c3", ob_c3)};
            } else if (or1_opt->count() > 0) {
                q = case3_query(parse_fraction_flag("--r1", ob_r1), parse_fraction_flag("--r2", ob_r2),
                                parse_fraction_flag("--slope", ob_slope));
            } else {
                throw InputError("obstruction: give either --c1/--c2/--c3 or --r1/--r2/--slope");
            }
            const SearchOutcome res = search_witness(q);
            const char* status = res.status == SearchStatus::Witness ? "witness"
                                 : res.status == SearchStatus::None  ? "none"
                                                                     : "undetermined";
            if (as_json) {
                json j = {{"status", status}, {"n", int_json(res.n)}, {"bound_holds", res.bound_holds}};
                if (res.witness) {
                    j["k"] = int_json(res.witness->k);
                    j["h"] = int_list_json(res.witness->h);
                }
                out << j.dump() << "\n";
            } else if (res.witness) {
                const auto& w = *res.witness;
                out << "witness k=" << w.k << " h=(" << w.h[0] << "," << w.h[1] << "," << w.h[2] << ")\n";
            } else {
                out << status << "\n";
            }
        } else if (rt_cmd->parsed()) {
            const BoundedSeifert q(parse_fraction_flag("--r1", rt_r1), parse_fraction_flag("--r2", rt_r2),
                                   parse_slope_flag("--slope", rt_slope));
            const ClosedSeifert m = reduction_target(q);
            if (as_json) {
                out << closed_json(m).dump() << "\n";
            } else {
                out << m.str() << "\n";
            }
        } else if (verify_cmd->parsed()) {
            return run_verify(vopt, as_json, out);
        } else {
            err << app.help();
            return kExitInput;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace tcs::cli
