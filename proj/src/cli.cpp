#include "qstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstab/ar_structure.hpp"
#include "qstab/oracle.hpp"
#include "qstab/root_system.hpp"
#include "qstab/slope_set.hpp"
#include "qstab/stability.hpp"

namespace qstab {

namespace {

using json = nlohmann::ordered_json;

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::MalformedInput, "cannot open quiver file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Quiver::parse(buf.str());
}

std::vector<long long> parse_csv(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(Errc::MalformedInput, "bad " + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw Error(Errc::MalformedInput, what + " must be nonempty");
    return out;
}

json slopes_json(const std::vector<Rational>& slopes) {
    json arr = json::array();
    for (const auto& s : slopes) arr.push_back(s.str());
    return arr;
}

json report_json(const SlopeSetReport& r) {
    json j;
    j["mu_delta"] = r.mu_delta.str();
    j["case"] = mu_delta_tag_name(r.mdc.tag);
    switch (r.verdict) {
        case SlopeSetReport::Verdict::Finite: j["verdict"] = "finite"; break;
        case SlopeSetReport::Verdict::Infinite: j["verdict"] = "infinite"; break;
        case SlopeSetReport::Verdict::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    if (r.verdict == SlopeSetReport::Verdict::Infinite) {
        j["family_base"] = r.family_base;
        j["family_slopes"] = slopes_json(r.family_slopes);
    } else {
        j["slopes"] = slopes_json(r.slopes);
        json w = json::object();
        for (const auto& [s, d] : r.witnesses) w[s.str()] = d;
        j["witnesses"] = w;
    }
    if (r.verdict == SlopeSetReport::Verdict::Inconclusive) j["bound"] = r.bound;
    j["certificates"] = r.certificates;
    return j;
}

void report_text(std::ostream& out, const SlopeSetReport& r) {
    out << "mu(delta) = " << r.mu_delta.str() << "\n";
    out << "case: " << mu_delta_tag_name(r.mdc.tag) << "\n";
    if (r.verdict == SlopeSetReport::Verdict::Infinite) {
        out << "verdict: infinite\n";
        out << "family base: " << dim_to_string(r.family_base) << "\n";
        out << "family slopes:";
        for (const auto& s : r.family_slopes) out << " " << s.str();
        out << " ...\n";
    } else {
        out << (r.verdict == SlopeSetReport::Verdict::Finite
                    ? "verdict: finite\n"
                    : "verdict: inconclusive (bound " + std::to_string(r.bound) + ")\n");
        out << "slopes:";
        for (const auto& s : r.slopes) out << " " << s.str();
        out << "\n";
        for (const auto& [s, d] : r.witnesses)
            out << "  witness " << s.str() << ": " << dim_to_string(d) << "\n";
    }
    for (const auto& c : r.certificates) out << "# " << c << "\n";
}

json verdict_json(const StabilityVerdict& v) {
    json j;
    j["status"] = stability_name(v.status);
    j["slope"] = v.slope.str();
    if (v.violator) j["violator"] = *v.violator;
    if (v.equal_slope_witness) j["equal_slope_witness"] = *v.equal_slope_witness;
    return j;
}

struct Options {
    std::string quiver_path;
    std::string weight_csv;
    std::string dim_csv;
    long long bound = 50;
    std::string format = "text";
    std::uint64_t seed = 1;
    int prime = 3;
};

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out) {
    Quiver q = load_quiver(opt.quiver_path);
    bool as_json = opt.format == "json";

    if (cmd == "info") {
        json j;
        j["vertices"] = q.vertex_names();
        json arrows = json::array();
        for (auto [s, t] : q.arrows())
            arrows.push_back({q.vertex_names()[s], q.vertex_names()[t]});
        j["arrows"] = arrows;
        j["type"] = q.type().str();
        if (q.type().is_euclidean()) j["delta"] = q.delta();
        if (as_json) {
            out << j.dump() << "\n";
        } else {
            out << "vertices: " << q.size() << ", arrows: " << q.arrows().size() << "\n";
            out << "type: " << q.type().str() << "\n";
            if (q.type().is_euclidean()) out << "delta: " << dim_to_string(q.delta()) << "\n";
        }
        return 0;
    }

    if (cmd == "roots") {
        BaseRoots br = base_roots(q);
        if (as_json) {
            json j;
            j["preprojective"] = br.preprojective;
            j["regular"] = br.regular;
            j["preinjective"] = br.preinjective;
            out << j.dump() << "\n";
        } else {
            auto list = [&](const char* name, const std::vector<DimVector>& v) {
                out << name << ":";
                for (const auto& d : v) out << " " << dim_to_string(d);
                out << "\n";
            };
            list("preprojective", br.preprojective);
            list("regular", br.regular);
            list("preinjective", br.preinjective);
        }
        return 0;
    }

    if (cmd == "tubes") {
        TubeSystem ts = tube_system(q);
        if (as_json) {
            json arr = json::array();
            for (const auto& t : ts.tubes)
                arr.push_back({{"rank", t.rank}, {"quasi_simples", t.quasi_simples}});
            out << json{{"tubes", arr}}.dump() << "\n";
        } else {
            for (const auto& t : ts.tubes) {
                out << "tube rank " << t.rank << ":";
                for (const auto& d : t.quasi_simples) out << " " << dim_to_string(d);
                out << "\n";
            }
        }
        return 0;
    }

    Weight theta = parse_csv(opt.weight_csv, "weight");

    if (cmd == "semistable") {
        DimVector d = parse_csv(opt.dim_csv, "dim");
        StabilityVerdict v = is_semistable_dim(q, theta, d);
        if (as_json) {
            out << verdict_json(v).dump() << "\n";
        } else {
            out << stability_name(v.status) << " at slope " << v.slope.str();
            if (v.violator) out << " with violator " << dim_to_string(*v.violator);
            out << "\n";
        }
        return 0;
    }

    if (cmd == "classify") {
        MuDeltaCase c = classify_mu_delta(q, theta, opt.bound);
        const char* xcard = c.tag == MuDeltaTag::RegularCategory ? "infinite"
                            : c.tag == MuDeltaTag::Inconclusive  ? "inconclusive"
                                                                 : "finite";
        if (as_json)
            out << json{{"mu_delta", slope(theta, q.delta()).str()},
                        {"case", mu_delta_tag_name(c.tag)},
                        {"x_theta", xcard}}
                       .dump()
                << "\n";
        else
            out << mu_delta_tag_name(c.tag) << "; X_theta " << xcard << "\n";
        return c.tag == MuDeltaTag::Inconclusive ? 3 : 0;
    }

    if (cmd == "slopes") {
        SlopeSetReport r = compute_slope_set(q, theta, opt.bound);
        if (as_json)
            out << report_json(r).dump() << "\n";
        else
            report_text(out, r);
        return r.verdict == SlopeSetReport::Verdict::Inconclusive ? 3 : 0;
    }

    if (cmd == "oracle") {
        DimVector d = parse_csv(opt.dim_csv, "dim");
        oracle::ExplicitRep rep = oracle::verify_generic(q, d, opt.prime, 20, opt.seed);
        auto subdims = oracle::subdims_bruteforce(rep);
        StabilityVerdict v = oracle::semistable_bruteforce(rep, theta);
        if (as_json) {
            json j;
            j["dim"] = d;
            j["p"] = opt.prime;
            j["seed"] = opt.seed;
            j["subdims"] = subdims;
            j["verdict"] = verdict_json(v);
            out << j.dump() << "\n";
        } else {
            out << "generic rep of " << dim_to_string(d) << " over F_" << opt.prime << "\n";
            out << "subdims:";
            for (const auto& e : subdims) out << " " << dim_to_string(e);
            out << "\n";
            out << stability_name(v.status) << " at slope " << v.slope.str();
            if (v.violator) out << " with violator " << dim_to_string(*v.violator);
            out << "\n";
        }
        return 0;
    }

    throw Error(Errc::MalformedInput, "unknown subcommand " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact slope-stability computations for tame quivers"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool weight, bool dim) {
        sub->add_option("-q,--quiver", opt.quiver_path, "quiver JSON file")->required();
        sub->add_option("--format", opt.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        if (weight)
            sub->add_option("-w,--weight", opt.weight_csv, "comma-separated integer weight")
                ->required();
        if (dim)
            sub->add_option("-d,--dim", opt.dim_csv, "comma-separated dimension vector")
                ->required();
    };

    add_common(app.add_subcommand("info", "quiver type and basic data"), false, false);
    add_common(app.add_subcommand("roots", "real roots below delta by class"), false, false);
    add_common(app.add_subcommand("tubes", "non-homogeneous tube system"), false, false);
    add_common(app.add_subcommand("semistable", "semistability of a dimension vector"), true,
               true);
    auto* classify = app.add_subcommand("classify", "structure at slope mu(delta)");
    add_common(classify, true, false);
    classify->add_option("--bound", opt.bound, "ladder search bound");
    auto* slopes = app.add_subcommand("slopes", "the slope set X_theta");
    add_common(slopes, true, false);
    slopes->add_option("--bound", opt.bound, "ladder search bound");
    auto* orc = app.add_subcommand("oracle", "finite-field brute-force checks");
    add_common(orc, true, true);
    orc->add_option("--seed", opt.seed, "random seed");
    orc->add_option("--prime", opt.prime, "field size")->check(CLI::IsMember({2, 3}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        if (e.code() == Errc::ResourceLimit) {
            out << json{{"verdict", "inconclusive"}, {"error", e.what()}}.dump() << "\n";
            return 3;
        }
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace qstab
