#include "crmoser/cli.hpp"

#include "crmoser/census.hpp"
#include "crmoser/json_io.hpp"
#include "crmoser/parser.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace crmoser {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

namespace {

/// Non-zero exit with a message, raised from inside a command.
struct CommandFailure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandFailure{kExitParse, "cannot read " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw CommandFailure{kExitParse, what + ": " + e.what()};
    }
}

class Session {
public:
    Json load(const std::string& path) {
        std::string text = read_file(path);
        inputs_ += text;
        return parse_json(text, path);
    }
    void note_input(const std::string& text) { inputs_ += text; }

    Json report(const std::string& command) const {
        return Json{{"schema", kReportSchema}, {"command", command}, {"version", kVersion}, {"input_sha256", sha256_hex(inputs_)}};
    }

private:
    std::string inputs_;
};

Hypersurface with_weight(const Hypersurface& s, unsigned max_weight) {
    if (max_weight == 0) return s;
    return Hypersurface(s.form(), s.F(), max_weight);
}

Json basis_to_json(const StabilizerAlgebra& alg) {
    Json out = Json::array();
    for (const auto& b : alg.basis) out.push_back(Json{{"X", matrix_to_json(b.X.matrix())}, {"rho", to_json(b.rho)}});
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stability groups of CR hypersurfaces in normal form, in exact arithmetic", "crmoser"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string surface_path, output_path;
    unsigned max_weight = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 200;

    auto add_common = [&](CLI::App* cmd, bool needs_surface) {
        auto* opt = cmd->add_option("--surface", surface_path, "surface JSON file");
        if (needs_surface) opt->required();
        cmd->add_option("--max-weight", max_weight, "truncation weight");
        cmd->add_option("--output", output_path, "write the report here instead of stdout");
    };

    auto* check = app.add_subcommand("check", "normal-form trace conditions");
    add_common(check, true);

    auto* stabdim = app.add_subcommand("stabdim", "dimension of the stability algebra");
    add_common(stabdim, true);
    bool with_basis = false;
    stabdim->add_flag("--basis", with_basis, "include an exact basis");

    auto* classify_cmd = app.add_subcommand("classify", "case label and gap check");
    add_common(classify_cmd, true);

    auto* verify = app.add_subcommand("verify", "check a candidate automorphism");
    add_common(verify, true);
    std::string map_path, quadric_path, linear_path, scaled_path;
    auto* g = verify->add_option_group("candidate")->require_option(1);
    g->add_option("--map", map_path, "truncated map JSON {D, f, g}");
    g->add_option("--quadric", quadric_path, "parameters (U, a, lambda, sigma, r, D) of a hyperquadric automorphism");
    g->add_option("--linear", linear_path, "linear map JSON {U, lambda, sigma}");
    g->add_option("--scaled", scaled_path, "scaled S element JSON {s, element}");

    auto* model = app.add_subcommand("model", "build a model surface");
    std::string descriptor_path, descriptor_inline;
    auto* mg = model->add_option_group("descriptor")->require_option(1);
    mg->add_option("--descriptor", descriptor_path, "model descriptor JSON file");
    mg->add_option("--spec", descriptor_inline, "model descriptor as inline JSON");
    model->add_option("--output", output_path, "write the report here instead of stdout");

    auto* census = app.add_subcommand("census", "random normal-form surfaces against the dimension gap");
    CensusConfig cfg;
    census->add_option("--n", cfg.n, "dimension")->check(CLI::Range(2, int(kMaxDim)));
    census->add_option("--m", cfg.m, "negative index of the form");
    census->add_option("--samples", samples, "number of surfaces");
    census->add_option("--seed", seed, "random seed");
    census->add_option("--max-weight", max_weight, "maximal weight of F (default 8)");
    census->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 256));
    std::string pool_text;
    census->add_option("--pool", pool_text, "comma-separated coefficient pool, e.g. -1,1/2,2");
    bool with_surfaces = false;
    census->add_flag("--surfaces", with_surfaces, "include every F in the report");
    census->add_option("--output", output_path, "write the report here instead of stdout");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    Session session;
    Json report;
    int code = kExitOk;
    try {
        auto load_surface = [&] { return with_weight(surface_from_json(session.load(surface_path)), max_weight); };

        if (check->parsed()) {
            Hypersurface s = load_surface();
            NormalFormReport r = check_normal_form(s);
            report = session.report("check");
            report.update(normal_form_report_to_json(r));
            if (r.passed()) {
                report["umbilic_origin"] = is_umbilic_origin(s);
                report["function_of_form_and_u"] = is_function_of_form_and_u(s);
            } else {
                code = kExitMath;
            }
        } else if (stabdim->parsed()) {
            Hypersurface s = load_surface();
            StabilizerAlgebra alg = stabilizer_algebra(s);
            report = session.report("stabdim");
            report["dim"] = alg.dim;
            report["spherical"] = alg.spherical;
            if (with_basis) report["basis"] = basis_to_json(alg);
        } else if (classify_cmd->parsed()) {
            Hypersurface s = load_surface();
            Classification c = classify(s);
            report = session.report("classify");
            report.update(classification_to_json(c));
            if (!c.gap_ok) code = kExitMath;
        } else if (verify->parsed()) {
            Json surface_json = session.load(surface_path);
            Hypersurface s = with_weight(surface_from_json(surface_json), max_weight);
            report = session.report("verify");
            bool ok = false;
            if (!map_path.empty()) {
                JetMap jet = jet_from_json(session.load(map_path));
                unsigned w = max_weight ? max_weight : (jet.degree() > 0 ? jet.degree() - 1 : 0);
                ok = verify_automorphism(s, jet, w);
                report["mode"] = "map";
                report["weight"] = w;
            } else if (!quadric_path.empty()) {
                Json pj = session.load(quadric_path);
                AutoParams p = params_from_json(pj, s.n());
                p.validate(s.form());
                unsigned degree = pj.contains("D") ? pj.at("D").get<unsigned>() : 10;
                JetMap jet = quadric_automorphism(p, s.form(), degree);
                unsigned w = max_weight ? max_weight : degree - 1;
                ok = verify_automorphism(s, jet, w);
                report["mode"] = "quadric";
                report["weight"] = w;
            } else if (!linear_path.empty()) {
                AutoParams p = params_from_json(session.load(linear_path), s.n());
                auto sigma = is_pseudounitary(p.U, s.form());
                if (!sigma || *sigma != p.sigma) throw std::domain_error("U is not pseudounitary with sigma = " + std::to_string(p.sigma));
                ok = is_linear_automorphism(s, p.U, p.lambda, p.sigma);
                report["mode"] = "linear";
            } else {
                if (!surface_json.contains("family"))
                    throw CommandFailure{kExitParse, "--scaled needs a theorem2 or corollary2 model descriptor as --surface"};
                Theorem2Model m = build_theorem2(model_from_json(surface_json));
                Json sj = session.load(scaled_path);
                if (!sj.contains("s") || !sj.contains("element")) throw InputError("scaled automorphism needs \"s\" and \"element\"");
                ScaledSAuto sa{rational_from_json(sj.at("s")), s_element_from_json(sj.at("element"))};
                ok = verify_scaled_automorphism(m, sa);
                report["mode"] = "scaled";
                report["scale_base"] = to_json(sa.scale_base());
                report["scale_exponent"] = to_json(sa.scale_exponent());
                if (auto l = sa.rational_scale()) report["lambda"] = to_json(*l);
            }
            report["verified"] = ok;
            if (!ok) code = kExitMath;
        } else if (model->parsed()) {
            Json dj;
            if (!descriptor_path.empty()) {
                dj = session.load(descriptor_path);
            } else {
                session.note_input(descriptor_inline);
                dj = parse_json(descriptor_inline, "--spec");
            }
            ModelDescriptor d = model_from_json(dj);
            Hypersurface s = build_model(d);
            report = session.report("model");
            report["model"] = model_to_json(d);
            report["surface"] = surface_to_json(s);
        } else if (census->parsed()) {
            cfg.samples = samples;
            cfg.seed = seed;
            if (max_weight) cfg.max_weight = max_weight;
            if (!pool_text.empty()) {
                cfg.pool.clear();
                std::stringstream ss(pool_text);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.pool.push_back(parse_rational(item));
            }
            CensusResult r = run_census(cfg);
            Json body = census_to_json(r, with_surfaces);
            Json config_key = Json{{"n", cfg.n}, {"m", cfg.m}, {"samples", cfg.samples}, {"seed", cfg.seed},
                                   {"max_weight", cfg.max_weight}, {"pool", body["pool"]}};
            session.note_input(config_key.dump());
            report = session.report("census");
            report.update(body);
            if (r.gap_violations > 0) code = kExitMath;
        }
    } catch (const CommandFailure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        err << "mathematical failure: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        err << "mathematical failure: " << e.what() << "\n";
        return kExitMath;
    }

    std::string text = report.dump(2) + "\n";
    if (!output_path.empty()) {
        std::ofstream f(output_path);
        if (!f) {
            err << "cannot write " << output_path << "\n";
            return kExitUsage;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace crmoser
