#include "toricq/cli.hpp"

#include "toricq/configs.hpp"
#include "toricq/cox.hpp"
#include "toricq/errors.hpp"
#include "toricq/io.hpp"
#include "toricq/polysys.hpp"
#include "toricq/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toricq {

using io::Json;

FanReport analyze_fan(const Fan& fan) {
    FanReport r;
    auto v = validate_fan(fan);
    r.valid = v.valid();
    for (const auto& e : v.violations) r.violations.push_back(e.message);
    r.smooth = is_smooth(fan);
    auto c = completeness_report(fan);
    r.complete = c.complete;
    r.complete_diagnostic = c.diagnostic;
    r.spans_lattice = spans_lattice(fan.rays(), fan.dim());
    if (fan.num_rays() <= 16) r.positive_relation = find_positive_relation(fan.rays(), fan.dim());
    auto k = underlying_complex(fan);
    r.min_non_faces = k.min_non_faces();
    if (!k.min_non_faces().empty()) r.r_min = toricq::r_min(k);
    try {
        r.group_rank = group_rank(fan.rays(), fan.dim());
    } catch (const NotSpanning&) {
    }
    return r;
}

std::string format_homology(const GradedRanks& h) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first_entry = true;
    for (const auto& e : h.entries()) {
        if (!first_entry) os << ", ";
        first_entry = false;
        os << 'H' << e.degree << " = ";
        bool first = true;
        if (e.rank > 0) {
            os << 'Z';
            if (e.rank > 1) os << '^' << e.rank;
            first = false;
        }
        for (const auto& t : e.torsion) {
            if (!first) os << " + ";
            os << "Z/" << t;
            first = false;
        }
    }
    return os.str();
}

namespace {

struct Output {
    Json report = Json::object();
    std::string text_table;  // appended to text output
    std::string csv_table;   // replaces the key/value csv when present
    int code = 0;
};

void flatten(const std::string& prefix, const Json& j, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, rows);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render(const Output& o, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << o.report.dump(2) << '\n';
        return os.str();
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", o.report, rows);
    if (format == "csv") {
        if (!o.csv_table.empty()) return o.csv_table;
        os << "key,value\n";
        for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
        return os.str();
    }
    for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
    os << o.text_table;
    return os.str();
}

Json sets_json(const std::vector<IndexSet>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(s);
    return a;
}

Json homology_json(const GradedRanks& h) { return format_homology(h); }

Fan load_fan(const std::string& path, Json* note = nullptr) {
    auto loaded = io::fan_from_json(io::read_json_file(path));
    if (note && loaded.rays_rescaled) (*note)["rays_rescaled"] = true;
    return loaded.fan;
}

StabilityParams params_for(const Fan& fan, const std::vector<int>& degrees, int n, const std::string& field) {
    StabilityParams p;
    p.degrees = degrees;
    p.n = n;
    p.field = io::field_from_string(field);
    if (degrees.size() != fan.num_rays())
        throw ShapeError("degree vector has " + std::to_string(degrees.size()) + " entries but the fan has " +
                         std::to_string(fan.num_rays()) + " rays");
    p.r_min = r_min(underlying_complex(fan));
    p.validate();
    return p;
}

Output cmd_analyze(const std::string& fan_path) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto r = analyze_fan(fan);
    auto& j = o.report;
    j["rays"] = fan.num_rays();
    j["dim"] = fan.dim();
    j["valid"] = r.valid;
    if (!r.valid) j["violations"] = r.violations;
    j["smooth"] = r.smooth;
    j["complete"] = r.complete;
    if (!r.complete) j["complete_diagnostic"] = r.complete_diagnostic;
    j["spans_lattice"] = r.spans_lattice;
    j["positive_relation"] = r.positive_relation ? Json(*r.positive_relation) : Json(nullptr);
    j["min_non_faces"] = sets_json(r.min_non_faces);
    j["r_min"] = r.r_min ? Json(*r.r_min) : Json(nullptr);
    j["group_rank"] = r.group_rank ? Json(*r.group_rank) : Json(nullptr);
    return o;
}

Output cmd_member(const std::string& fan_path, const std::string& sys_path) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto sys = io::system_from_json(io::read_json_file(sys_path));
    const auto k = underlying_complex(fan);
    const auto q = check_member_Q(sys, k);
    const auto p = check_member_Poly(sys, k);
    auto& j = o.report;
    j["field"] = field_name(sys.field);
    j["n"] = sys.n;
    j["degrees"] = sys.degrees();
    j["member_Q"] = q.member;
    if (!q.member) {
        j["witness_Q"] = q.witness;
        const auto& iv = *q.location;
        if (iv.exact()) j["root_Q"] = format_rational(iv.lo);
        else j["root_interval_Q"] = Json::array({format_rational(iv.lo), format_rational(iv.hi)});
    }
    j["member_Poly"] = p.member;
    if (!p.member) j["witness_Poly"] = p.witness;
    o.code = q.member ? 0 : 1;
    return o;
}

Output cmd_dims(const std::string& fan_path, const std::vector<int>& degrees, int n, const std::string& field) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto p = params_for(fan, degrees, n, field);
    auto& j = o.report;
    j["field"] = field_name(p.field);
    j["n"] = p.n;
    j["degrees"] = p.degrees;
    j["r_min"] = p.r_min;
    j["d_min"] = p.d_min();
    j["d_prime"] = p.d_prime();
    const auto sd = stability_dimension(p);
    const auto dp = dpoly_dimension(p);
    j["stability_dimension"] = sd.value;
    j["stability_degenerate"] = sd.degenerate;
    j["d_poly"] = dp.value;
    j["d_poly_degenerate"] = dp.degenerate;
    j["connectivity"] = connectivity_bound(p).describe();
    const auto flags = conditions_flags(p);
    j["condition_star"] = flags.star;
    j["condition_dagger"] = flags.dagger;
    if (p.d_prime() >= 1) {
        const auto fr = stable_frontier_oracle(p);
        j["frontier_oracle"] = fr.value;
        j["frontier_agrees"] = fr.value == sd.value;
        const auto co = connectivity_oracle(p);
        j["connectivity_oracle"] = co.m0;
        j["connectivity_closed_form"] = connectivity_closed_form(p);
        j["connectivity_agrees"] = co.m0 == connectivity_closed_form(p);
    } else {
        j["frontier_oracle"] = "n/a";
    }
    return o;
}

Output cmd_spectral(const std::string& fan_path, const std::vector<int>& degrees, int n, const std::string& field,
                    int max_s) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto p = params_for(fan, degrees, n, field);
    const auto g = build_grid(p, static_cast<int>(fan.num_rays()), max_s);
    auto& j = o.report;
    j["field"] = field_name(p.field);
    j["n"] = p.n;
    j["degrees"] = p.degrees;
    j["r"] = g.r;
    j["r_min"] = p.r_min;
    j["max_k"] = g.max_k;
    j["max_s"] = g.max_s;
    Json rows = Json::array();
    for (int k = 0; k <= g.max_k; ++k) {
        std::string row;
        for (int s = 0; s <= g.max_s; ++s) {
            const bool z = g.cells[k][s] == Cell::Zero;
            row += z ? '.' : (k == 0 && s == 0 ? 'Z' : '*');
        }
        rows.push_back(row);
    }
    if (max_s < 0) {
        // dimension counts for the rows that carry them
        Json aux = Json::array();
        for (int k = 1; k <= p.d_prime(); ++k) {
            const auto a = aux_dimensions(p, g.r, k);
            aux.push_back(Json{{"k", k}, {"N", a.big_n}, {"dimL", a.dim_l}, {"dimC", a.dim_c}, {"rank_l", a.rank_l}});
        }
        j["aux"] = aux;
    }
    j["grid"] = rows;
    o.text_table = g.render_text();
    o.csv_table = g.render_csv();
    return o;
}

Output cmd_homology(const std::string& fan_path, int n, int ball) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto k = underlying_complex(fan);
    if (ball == 0) ball = 2 * n;
    auto& j = o.report;
    j["vertices"] = k.num_vertices();
    j["n"] = n;
    j["ball_dim"] = ball;
    j["complex"] = homology_json(reduced_homology(k));
    const auto kn = complex_power(k, n);
    j["power_min_non_faces"] = sets_json(kn.min_non_faces());
    j["power_r_min"] = r_min(kn);
    j["moment_angle"] = homology_json(moment_angle_homology(k, n, ball));
    return o;
}

Output cmd_sample(const std::string& fan_path, const std::vector<int>& degrees, int n, const std::string& field,
                  std::size_t count, int box, std::uint64_t seed, unsigned workers) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    SampleConfig cfg;
    cfg.degrees = degrees;
    cfg.n = n;
    cfg.field = io::field_from_string(field);
    cfg.count = count;
    cfg.box_bound = box;
    cfg.seed = seed;
    cfg.workers = workers;
    const auto st = sample_systems(cfg, underlying_complex(fan));
    auto& j = o.report;
    j["field"] = field_name(cfg.field);
    j["n"] = n;
    j["degrees"] = degrees;
    j["seed"] = seed;
    j["count"] = st.count;
    j["q_members"] = st.q_members;
    j["poly_members"] = st.poly_members;
    j["discriminant_hits"] = st.discriminant_hits;
    return o;
}

Output cmd_stabilize(const std::string& div_path, const std::vector<int>& a, const std::string& fan_path) {
    Output o;
    const auto sys = io::divisor_system_from_json(io::read_json_file(div_path));
    const auto out = stabilize(sys, a);
    auto& j = o.report;
    j["degrees_before"] = sys.degrees();
    j["degrees_after"] = out.degrees();
    if (!fan_path.empty()) {
        const auto k = underlying_complex(load_fan(fan_path, &o.report));
        const bool before = divisor_membership(sys, k);
        const bool after = divisor_membership(out, k);
        j["member_before"] = before;
        j["member_after"] = after;
        if (before && !after) o.code = 1;
    }
    j["system"] = io::divisor_system_to_json(out);
    return o;
}

Output cmd_cox(const std::string& fan_path, const std::vector<long long>& degrees) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    std::vector<std::int64_t> d(degrees.begin(), degrees.end());
    auto& j = o.report;
    if (d.empty()) {
        auto rel = find_positive_relation(fan.rays(), fan.dim());
        if (!rel) throw InvalidInput("no degree vector given and the rays admit no positive relation");
        d = *rel;
        j["degrees_source"] = "positive_relation";
    }
    const auto v = cox_criterion(fan.rays(), d);
    j["degrees"] = d;
    j["symbolic"] = v.symbolic;
    j["sampled"] = v.sampled;
    j["agree"] = v.symbolic == v.sampled;
    j["group_rank"] = group_rank(fan.rays(), fan.dim());
    o.code = v.symbolic == v.sampled ? 0 : 1;
    return o;
}

Output cmd_eval(const std::string& fan_path, const std::string& sys_path, const std::string& from,
                const std::string& to, int points) {
    Output o;
    const Fan fan = load_fan(fan_path, &o.report);
    const auto sys = io::system_from_json(io::read_json_file(sys_path));
    const auto k = underlying_complex(fan);
    if (points < 1) throw InvalidInput("--points must be >= 1");
    const Rational lo = parse_rational(from), hi = parse_rational(to);
    if (hi < lo) throw InvalidInput("--to must not be below --from");
    const bool member = is_member_Q(sys, k);
    std::size_t inside = 0;
    Json outside = Json::array();
    for (int i = 0; i < points; ++i) {
        const Rational x = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
        if (in_complement(evaluate_system(sys, x), k)) ++inside;
        else outside.push_back(format_rational(x));
    }
    auto& j = o.report;
    j["member_Q"] = member;
    j["points"] = points;
    j["in_complement"] = inside;
    j["outside_at"] = outside;
    j["consistent"] = !member || outside.empty();
    o.code = outside.empty() ? 0 : 1;
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toric and polynomial-system toolkit", "toricq"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string format = "text";
    std::string output;
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--workers", workers, "worker threads for sampling")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", output, "write the report to a file");

    std::string fan_path, sys_path, div_path;
    std::vector<int> degrees, a;
    std::vector<long long> cox_degrees;
    int n = 1, ball = 0, max_s = -1, box = 3, points = 201;
    std::string field = "C", from = "-5", to = "5";
    std::size_t count = 100;

    auto* analyze = app.add_subcommand("analyze", "fan invariants");
    analyze->add_option("fan", fan_path)->required();

    auto* member = app.add_subcommand("member", "membership of a polynomial system");
    member->add_option("fan", fan_path)->required();
    member->add_option("system", sys_path)->required();

    auto add_params = [&](CLI::App* sc) {
        sc->add_option("fan", fan_path)->required();
        sc->add_option("--degrees,-D", degrees, "degree vector")->delimiter(',')->required();
        sc->add_option("--n", n, "multiplicity bound");
        sc->add_option("--field", field, "R or C");
    };
    auto* dims = app.add_subcommand("dims", "stability dimensions and oracle cross-checks");
    add_params(dims);
    auto* spectral = app.add_subcommand("spectral", "truncated E1 vanishing grid");
    add_params(spectral);
    spectral->add_option("--max-s", max_s, "last s column");

    auto* homology = app.add_subcommand("homology", "homology of K, K(n) and the moment-angle complex");
    homology->add_option("fan", fan_path)->required();
    homology->add_option("--n", n);
    homology->add_option("--ball", ball, "ball dimension (n or 2n, default 2n)");

    auto* sample = app.add_subcommand("sample", "random systems and membership counts");
    add_params(sample);
    sample->add_option("--count", count);
    sample->add_option("--box", box, "coefficient bound");

    auto* stab = app.add_subcommand("stabilize", "stabilize a divisor system");
    stab->add_option("divisors", div_path)->required();
    stab->add_option("--a", a, "degree increments")->delimiter(',')->required();
    stab->add_option("--fan", fan_path, "check membership before and after");

    auto* cox = app.add_subcommand("cox-check", "degree criterion for the Cox group");
    cox->add_option("fan", fan_path)->required();
    cox->add_option("--degrees,-D", cox_degrees)->delimiter(',');

    auto* eval = app.add_subcommand("eval-check", "evaluate a system on a rational grid");
    eval->add_option("fan", fan_path)->required();
    eval->add_option("system", sys_path)->required();
    eval->add_option("--from", from);
    eval->add_option("--to", to);
    eval->add_option("--points", points);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        Output o;
        if (*analyze) o = cmd_analyze(fan_path);
        else if (*member) o = cmd_member(fan_path, sys_path);
        else if (*dims) o = cmd_dims(fan_path, degrees, n, field);
        else if (*spectral) o = cmd_spectral(fan_path, degrees, n, field, max_s);
        else if (*homology) o = cmd_homology(fan_path, n, ball);
        else if (*sample) o = cmd_sample(fan_path, degrees, n, field, count, box, seed, workers);
        else if (*stab) o = cmd_stabilize(div_path, a, fan_path);
        else if (*cox) o = cmd_cox(fan_path, cox_degrees);
        else o = cmd_eval(fan_path, sys_path, from, to, points);

        const std::string text = render(o, format);
        if (output.empty()) {
            out << text;
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw InvalidInput(output + ": cannot open for writing");
            f << text;
        }
        return o.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace toricq
