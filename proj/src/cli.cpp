#include "keller/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "keller/fuzz.hpp"
#include "keller/inversion.hpp"
#include "keller/io.hpp"
#include "keller/report.hpp"

namespace keller {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedMap {
    PolyMap map;
    std::string content;
};

LoadedMap load_map(const std::string& path, nlohmann::json& report) {
    std::string content = read_file(path);
    PmapDocument doc = parse_pmap(content);
    report_add_input(report, path, content);
    return {doc.as_map(), std::move(content)};
}

std::string complex_str(const std::complex<double>& z) {
    std::ostringstream ss;
    ss << std::setprecision(12) << z.real();
    if (z.imag() >= 0)
        ss << "+" << std::setprecision(12) << z.imag() << "i";
    else
        ss << "-" << std::setprecision(12) << -z.imag() << "i";
    return ss.str();
}

std::string point_str(const std::vector<GaussianRational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
    return s + ")";
}

nlohmann::json exact_points_json(const std::vector<std::vector<GaussianRational>>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json point = nlohmann::json::array();
        for (const auto& c : p) point.push_back(c.str());
        arr.push_back(std::move(point));
    }
    return arr;
}

struct Invocation {
    nlohmann::json report;
    std::string json_path;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Invocation(const std::string& command) : report(make_report(command)) {}

    void finish(std::ostream& err) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        finalize_report(report, elapsed);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw std::invalid_argument("cannot write report to " + json_path);
            out << report.dump(2) << "\n";
            if (!out) {
                err << "error: failed writing " << json_path << "\n";
            }
        }
    }
};

int cmd_check_keller(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    KellerResult kc = is_keller(in.map);
    inv.report["verdicts"]["keller"] = kc.keller;
    if (kc.keller) {
        inv.report["verdicts"]["constant"] = kc.constant.str();
        out << "keller: yes (jacobian determinant = " << kc.constant.str() << ")\n";
        return 0;
    }
    inv.report["verdicts"]["witness"] = to_string(kc.witness);
    out << "keller: no (jacobian determinant = " << to_string(kc.witness) << ")\n";
    return 1;
}

int cmd_check_nilpotent(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    NilpotencyResult nr = is_nilpotent(in.map);
    inv.report["verdicts"]["nilpotent"] = nr.nilpotent;
    if (nr.nilpotent) {
        out << "nilpotent: yes (traces of (JN)^k vanish for k = 1.." << in.map.dimension() << ")\n";
        return 0;
    }
    inv.report["verdicts"]["witness_power"] = nr.first_nonzero_power;
    inv.report["verdicts"]["witness_trace"] = to_string(nr.witness_trace);
    out << "nilpotent: no (trace of (JN)^" << nr.first_nonzero_power << " = "
        << to_string(nr.witness_trace) << ")\n";
    return 1;
}

int cmd_bridge(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    PolyMap b = bridge(in.map);
    out << print_pmap(PmapDocument::of_map(b));
    KellerResult kc = is_keller(b);
    const bool unit = kc.keller && kc.constant.is_one();
    inv.report["verdicts"]["bridge_map"] = to_json(b);
    inv.report["verdicts"]["determinant_is_one"] = unit;
    if (unit) {
        out << "# jacobian determinant of the bridge = 1; the input map is nilpotent\n";
        return 0;
    }
    std::string det = kc.keller ? kc.constant.str() : to_string(kc.witness);
    inv.report["verdicts"]["determinant"] = det;
    out << "# jacobian determinant of the bridge = " << det << "; the input map is NOT nilpotent\n";
    return 1;
}

int cmd_blowup(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    PolyMap bu = blow_up(in.map);
    out << print_pmap(PmapDocument::of_map(bu));
    inv.report["verdicts"]["blow_up"] = to_json(bu);

    // det J(F_t)(X,t) = det JF(t*X): cheap enough to certify on every run.
    Poly det_bu = determinant(jacobian(bu));
    Poly det_f = determinant(jacobian(in.map));
    const Ring& big = bu.ring();
    std::vector<Poly> scaled;
    Poly t = Poly::variable(big, big.size() - 1, GaussianRational(1));
    for (std::size_t v = 0; v + 1 < big.size(); ++v)
        scaled.push_back(t * Poly::variable(big, v, GaussianRational(1)));
    if (det_bu != substitute(det_f, scaled))
        throw internal_error("blow-up jacobian identity failed");
    out << "# jacobian identity det J(F_t)(X,t) = det JF(t*X) verified\n";
    inv.report["verdicts"]["jacobian_identity"] = true;
    return 0;
}

int cmd_reduce(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    KellerResult kc = is_keller(in.map);
    inv.report["verdicts"]["keller"] = kc.keller;
    if (!kc.keller) {
        out << "not a Keller map (jacobian determinant = " << to_string(kc.witness)
            << "); nothing to reduce\n";
        return 1;
    }
    ReductionReport rep = to_nilpotent_form(in.map);
    out << print_pmap(PmapDocument::of_map(rep.nilpotent_part));
    out << "# nilpotent part N with F stably equivalent to Id - N\n";
    out << "# dimensions added: " << rep.dimensions_added << "\n";
    out << "# elimination measures:";
    for (auto m : rep.measures) out << " " << m;
    out << "\n# witness chain: " << rep.chain.size() << " links, all replay-verified\n";
    out << "# note: " << rep.note << "\n";

    inv.report["verdicts"]["nilpotent_part"] = to_json(rep.nilpotent_part);
    inv.report["verdicts"]["dimensions_added"] = rep.dimensions_added;
    inv.report["verdicts"]["measures"] = rep.measures;
    inv.report["verdicts"]["note"] = rep.note;
    for (const auto& link : rep.chain) inv.report["witnesses"].push_back(to_json(link));
    return 0;
}

int cmd_invert(const std::string& path, std::optional<std::uint64_t> cap, Invocation& inv,
               std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    KellerResult kc = is_keller(in.map);
    if (!kc.keller || !kc.constant.is_one()) {
        std::string det = kc.keller ? kc.constant.str() : to_string(kc.witness);
        inv.report["verdicts"]["rejected"] = "jacobian determinant is " + det + ", not 1";
        out << "rejected: jacobian determinant = " << det
            << " (formal inversion requires det JF = 1)\n";
        return 1;
    }
    InverseResult res = formal_inverse(in.map, cap);
    inv.report["verdicts"]["cap"] = res.cap;
    inv.report["verdicts"]["iterations"] = res.iterations;
    inv.report["verdicts"]["inverted"] = res.ok;
    if (!res.ok) {
        out << "diverged at degree cap " << res.cap << " (no inverse found below the cap)\n";
        return 1;
    }
    out << print_pmap(PmapDocument::of_map(res.inverse));
    const bool verified = verify_inverse(in.map, res.inverse);
    if (!verified) throw internal_error("formal_inverse returned an unverified inverse");
    out << "# inverse verified exactly: F o G = G o F = Id\n";
    inv.report["verdicts"]["inverse"] = to_json(res.inverse);
    inv.report["verdicts"]["verified"] = true;
    return 0;
}

int cmd_fixed_points(const std::string& path, const SearchOptions& opts, Invocation& inv,
                     std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    inv.report["seed"] = opts.rng_seed;
    FixedPointSearch res = fixed_point_search(in.map, opts);
    out << "clusters found: " << res.clusters.size() << "\n";
    for (const auto& c : res.clusters) {
        out << "  approx (";
        for (std::size_t i = 0; i < c.point.size(); ++i)
            out << (i ? ", " : "") << complex_str(c.point[i]);
        out << ")  residual " << std::setprecision(3) << c.residual << "  hits " << c.hits << "\n";
    }
    out << "exact verified fixed points: " << res.exact_points.size() << "\n";
    for (const auto& p : res.exact_points) out << "  " << point_str(p) << "\n";

    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : res.clusters) {
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& z : c.point) pt.push_back(complex_str(z));
        clusters.push_back({{"point", pt}, {"residual", c.residual}, {"hits", c.hits}});
    }
    inv.report["verdicts"]["clusters"] = std::move(clusters);
    inv.report["verdicts"]["exact_points"] = exact_points_json(res.exact_points);
    inv.report["verdicts"]["conjecture_violation"] = res.conjecture_violation;
    if (res.conjecture_violation) {
        out << "CONJECTURE VIOLATION: nilpotent map with " << res.exact_points.size()
            << " verified-distinct fixed points\n";
        return 1;
    }
    return 0;
}

int cmd_euler(const std::string& path, std::uint64_t k, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    ComponentCheck ec = euler_identity_check(in.map, k);
    inv.report["verdicts"]["pass"] = ec.pass;
    if (ec.pass) {
        out << "euler identity JN(X) * X^T = " << k << " * N(X): pass\n";
        return 0;
    }
    inv.report["verdicts"]["failing_component"] = ec.failing_component + 1;
    out << "euler identity: FAIL at component " << (ec.failing_component + 1) << "\n";
    return 1;
}

int cmd_euler2(const std::string& path1, const std::string& path2, std::uint64_t k1, std::uint64_t k2,
               Invocation& inv, std::ostream& out) {
    LoadedMap in1 = load_map(path1, inv.report);
    LoadedMap in2 = load_map(path2, inv.report);
    TwoFormReport tf = two_form_identity_check(in1.map, in2.map, k1, k2);
    inv.report["verdicts"]["pass"] = tf.pass;
    inv.report["verdicts"]["eigenvalue"] = tf.eigenvalue.str();
    if (tf.pass) {
        out << "two-form radial identity: pass\n";
        out << "eigenvalue k1*L^(k1-1) = " << tf.eigenvalue.str() << "\n";
        return 0;
    }
    inv.report["verdicts"]["failing_component"] = tf.failing_component + 1;
    out << "two-form radial identity: FAIL at component " << (tf.failing_component + 1) << "\n";
    return 1;
}

int cmd_rank(const std::string& path, std::uint64_t seed, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    RankResult rr = jacobian_rank(in.map, seed);
    NilpotencyResult nr = is_nilpotent(in.map);
    inv.report["verdicts"]["rank"] = rr.rank;
    inv.report["verdicts"]["exact"] = rr.exact;
    inv.report["verdicts"]["nilpotent"] = nr.nilpotent;
    out << "generic rank of JN: " << rr.rank << (rr.exact ? " (exact)" : " (certified lower bound)")
        << "\n";
    if (nr.nilpotent && rr.rank == 1 && rr.exact)
        out << "# rank-1 nilpotent map: the unique-fixed-point property is known to hold\n";
    return 0;
}

int cmd_signs(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    SignReport sr = sign_classify(in.map);
    inv.report["verdicts"]["classification"] = to_string(sr.classification);
    inv.report["verdicts"]["keller"] = sr.keller;
    inv.report["verdicts"]["invertibility_implied"] = sr.invertibility_implied;
    out << "sign classification: " << to_string(sr.classification) << "\n";
    if (sr.classification == SignClass::positive) {
        inv.report["verdicts"]["complement_nilpotent"] = sr.complement_nilpotent;
        out << "# F = Id + N with N " << (sr.complement_nilpotent ? "nilpotent" : "not nilpotent")
            << "\n";
    }
    if (sr.invertibility_implied)
        out << "# invertibility follows from the sign-pattern results for this class\n";
    return 0;
}

int cmd_realify(const std::string& path, Invocation& inv, std::ostream& out) {
    LoadedMap in = load_map(path, inv.report);
    PolyMap rf = realify(in.map);
    out << print_pmap(PmapDocument::of_map(rf));
    inv.report["verdicts"]["realified"] = to_json(rf);

    // det JF~ = (Re P)^2 + (Im P)^2 where P = det JF under x = u + i*v.
    Poly det_c = determinant(jacobian(in.map));
    const Ring& rr = rf.ring();
    std::vector<Poly> images;
    for (std::size_t j = 0; j < in.map.dimension(); ++j) {
        Poly img = Poly::variable(rr, 2 * j, GaussianRational(1));
        img += Poly::variable(rr, 2 * j + 1, GaussianRational::imaginary_unit());
        images.push_back(std::move(img));
    }
    Poly p = substitute(det_c, images);
    Poly re = map_coefficients<GaussianRational>(p, [](const GaussianRational& c) {
        return GaussianRational(c.real());
    });
    Poly im = map_coefficients<GaussianRational>(p, [](const GaussianRational& c) {
        return GaussianRational(c.imag());
    });
    if (determinant(jacobian(rf)) != re * re + im * im)
        throw internal_error("realification determinant identity failed");
    out << "# determinant identity det JF~ = |det JF|^2 verified\n";
    inv.report["verdicts"]["determinant_identity"] = true;
    return 0;
}

int cmd_fuzz(FuzzFamily family, std::size_t n, std::uint32_t deg, std::size_t count,
             std::uint64_t seed, const SearchOptions& search, Invocation& inv, std::ostream& out) {
    FuzzOutcome res = fuzz_jn(family, n, deg, count, seed, search);
    inv.report["seed"] = seed;
    inv.report["verdicts"]["family"] = to_string(family);
    inv.report["verdicts"]["count"] = res.count;
    inv.report["verdicts"]["violations"] = res.violations;
    inv.report["verdicts"]["maps_with_exact_point"] = res.maps_with_exact_point;
    inv.report["verdicts"]["triangular_checked"] = res.triangular_checked;
    inv.report["verdicts"]["triangular_mismatches"] = res.triangular_mismatches;

    out << "family " << to_string(family) << ": " << res.count << " nilpotent maps searched (n=" << n
        << ", deg<=" << deg << ", seed=" << seed << ")\n";
    out << "maps with an exactly verified fixed point: " << res.maps_with_exact_point << "\n";
    if (family == FuzzFamily::strict_triangular)
        out << "exact-solver cross-checks: " << res.triangular_checked << " run, "
            << res.triangular_mismatches << " mismatches\n";

    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : res.violation_records) {
        violations.push_back({{"map", to_json(v.map)}, {"points", exact_points_json(v.points)}});
        out << "CONJECTURE VIOLATION:\n" << print_pmap(PmapDocument::of_map(v.map));
        for (const auto& p : v.points) out << "  fixed point " << point_str(p) << "\n";
    }
    inv.report["verdicts"]["violation_records"] = std::move(violations);
    out << "conjecture violations: " << res.violations << "\n";
    return res.violations > 0 ? 1 : 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for polynomial endomorphisms, nilpotent maps and Keller maps"};
    app.name("keller");
    app.require_subcommand(1);

    std::string json_path;
    app.add_option("--json", json_path, "write a JSON run report to this path")->capture_default_str();

    // check keller|nilpotent
    auto* check = app.add_subcommand("check", "verdict checks on a map");
    check->require_subcommand(1);
    std::string check_keller_file, check_nilpotent_file;
    auto* ck = check->add_subcommand("keller", "is det JF a nonzero constant?");
    ck->add_option("file", check_keller_file, ".pmap input")->required();
    auto* cn = check->add_subcommand("nilpotent", "is JN nilpotent over the polynomial ring?");
    cn->add_option("file", check_nilpotent_file, ".pmap input")->required();

    std::string bridge_file;
    auto* br = app.add_subcommand("bridge", "extend N to (Id - t*N) x Id and test its determinant");
    br->add_option("file", bridge_file, ".pmap input")->required();

    std::string blowup_file;
    auto* bu = app.add_subcommand("blowup", "T-weight the homogeneous layers of F (requires F(0)=0)");
    bu->add_option("file", blowup_file, ".pmap input")->required();

    std::string reduce_file;
    auto* rd = app.add_subcommand("reduce", "reduce a Keller map to Id - N with a witness chain");
    rd->add_option("file", reduce_file, ".pmap input")->required();

    std::string invert_file;
    std::uint64_t invert_cap = 0;
    auto* iv = app.add_subcommand("invert", "formal power-series inverse of Id - H");
    iv->add_option("file", invert_file, ".pmap input")->required();
    auto* cap_opt = iv->add_option("--cap", invert_cap, "degree cap (default: deg^(n-1)+1)");

    std::string fp_file;
    SearchOptions fp_opts;
    auto* fp = app.add_subcommand("fixed-points", "multistart Newton search for fixed points");
    fp->add_option("file", fp_file, ".pmap input")->required();
    fp->add_option("--seeds", fp_opts.seeds, "number of Newton starts");
    fp->add_option("--tol", fp_opts.tol, "residual tolerance");
    fp->add_option("--dedup", fp_opts.dedup_radius, "cluster dedup radius");
    fp->add_option("--seed", fp_opts.rng_seed, "RNG seed");

    std::string euler_file;
    std::uint64_t euler_k = 0;
    auto* eu = app.add_subcommand("euler", "radial identity JN * X^T = k*N for homogeneous N");
    eu->add_option("file", euler_file, ".pmap input")->required();
    eu->add_option("--k", euler_k, "homogeneity degree")->required();

    std::string euler2_file1, euler2_file2;
    std::uint64_t euler2_k1 = 0, euler2_k2 = 0;
    auto* eu2 = app.add_subcommand("euler2", "two-form radial identity over the extension ring");
    eu2->add_option("file1", euler2_file1, ".pmap input (degree k1 part)")->required();
    eu2->add_option("file2", euler2_file2, ".pmap input (degree k2 part)")->required();
    eu2->add_option("--k1", euler2_k1, "lower degree")->required();
    eu2->add_option("--k2", euler2_k2, "higher degree")->required();

    std::string rank_file;
    std::uint64_t rank_seed = 2024;
    auto* rk = app.add_subcommand("rank", "generic rank of the Jacobian over the function field");
    rk->add_option("file", rank_file, ".pmap input")->required();
    rk->add_option("--seed", rank_seed, "sampling seed for large maps");

    std::string signs_file;
    auto* sg = app.add_subcommand("signs", "sign classification of Id + higher-order real maps");
    sg->add_option("file", signs_file, ".pmap input")->required();

    std::string realify_file;
    auto* rf = app.add_subcommand("realify", "split complex coordinates into real and imaginary parts");
    rf->add_option("file", realify_file, ".pmap input")->required();

    std::string fuzz_family_name = "strict-triangular";
    std::size_t fuzz_n = 2, fuzz_count = 10;
    std::uint32_t fuzz_deg = 2;
    std::uint64_t fuzz_seed = 1;
    SearchOptions fuzz_search;
    auto* fz = app.add_subcommand("fuzz", "seeded fixed-point fuzzing over nilpotent families");
    fz->add_option("--family", fuzz_family_name,
                   "strict-triangular | conjugated-triangular | homogeneous | two-form")
        ->required();
    fz->add_option("--n", fuzz_n, "dimension")->required();
    fz->add_option("--deg", fuzz_deg, "degree bound")->required();
    fz->add_option("--count", fuzz_count, "number of maps")->required();
    fz->add_option("--seed", fuzz_seed, "RNG seed")->required();
    fz->add_option("--newton-seeds", fuzz_search.seeds, "Newton starts per map");
    fz->add_option("--tol", fuzz_search.tol, "residual tolerance");

    // CLI11's vector overload expects the arguments reversed.
    std::vector<std::string> argv_copy(args.rbegin(), args.rend());
    try {
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::string command = app.get_subcommands().front()->get_name();
        Invocation inv(command);
        inv.json_path = json_path;
        int code = 0;
        if (ck->parsed())
            code = cmd_check_keller(check_keller_file, inv, out);
        else if (cn->parsed())
            code = cmd_check_nilpotent(check_nilpotent_file, inv, out);
        else if (br->parsed())
            code = cmd_bridge(bridge_file, inv, out);
        else if (bu->parsed())
            code = cmd_blowup(blowup_file, inv, out);
        else if (rd->parsed())
            code = cmd_reduce(reduce_file, inv, out);
        else if (iv->parsed())
            code = cmd_invert(invert_file,
                              cap_opt->count() ? std::optional<std::uint64_t>(invert_cap) : std::nullopt,
                              inv, out);
        else if (fp->parsed())
            code = cmd_fixed_points(fp_file, fp_opts, inv, out);
        else if (eu->parsed())
            code = cmd_euler(euler_file, euler_k, inv, out);
        else if (eu2->parsed())
            code = cmd_euler2(euler2_file1, euler2_file2, euler2_k1, euler2_k2, inv, out);
        else if (rk->parsed())
            code = cmd_rank(rank_file, rank_seed, inv, out);
        else if (sg->parsed())
            code = cmd_signs(signs_file, inv, out);
        else if (rf->parsed())
            code = cmd_realify(realify_file, inv, out);
        else if (fz->parsed()) {
            auto family = fuzz_family_from_string(fuzz_family_name);
            if (!family) {
                err << "usage error: unknown family '" << fuzz_family_name << "'\n";
                return 2;
            }
            code = cmd_fuzz(*family, fuzz_n, fuzz_deg, fuzz_count, fuzz_seed, fuzz_search, inv, out);
        }
        inv.finish(err);
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error (this is a bug): " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error (this is a bug): " << e.what() << "\n";
        return 3;
    }
}

}  // namespace keller
