#include "cli.hpp"

#include "fixloc/character.hpp"
#include "fixloc/components.hpp"
#include "fixloc/dataset_io.hpp"
#include "fixloc/error.hpp"
#include "fixloc/toric.hpp"
#include "fixloc/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace fixloc::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntVector parse_vector_flag(const std::string& flag, const std::string& text) {
    auto v = parse_csv(text);
    if (!v || v->empty())
        throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
    return *v;
}

std::string dataset_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

const FixedPointSet& require_points(const Dataset& d, const std::string& command) {
    if (const auto* fps = std::get_if<FixedPointSet>(&d))
        return *fps;
    throw ModeMismatch(command + " needs a fixed-point dataset (kind \"points\")");
}

// {"eps": {"p": [1, -1], ...}}
SignAssignment load_epsilon(const FixedPointSet& fps, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("eps") || !doc["eps"].is_object())
        throw SchemaError(path + ": expected an object with an \"eps\" table");
    std::vector<std::pair<std::string, std::vector<int>>> table;
    for (const auto& [name, signs] : doc["eps"].items()) {
        if (!signs.is_array())
            throw SchemaError(path + ": eps." + name + ": expected an array of signs");
        std::vector<int> row;
        for (const auto& s : signs) {
            if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
                throw SchemaError(path + ": eps." + name + ": signs must be 1 or -1");
            row.push_back(s.get<int>());
        }
        table.emplace_back(name, std::move(row));
    }
    return make_sign_assignment(fps, table);
}

CountMode select_mode(const FixedPointSet& fps, const std::string& polarize, const std::string& epsilon) {
    if (!polarize.empty() && !epsilon.empty())
        throw UsageError("--polarize and --epsilon are mutually exclusive");
    if (!epsilon.empty())
        return EpsMode{load_epsilon(fps, epsilon)};
    if (!polarize.empty()) {
        IntVector u = parse_vector_flag("--polarize", polarize);
        make_polarizing(fps, u);
        return PolarizedMode{std::move(u)};
    }
    if (fps.rank() == 1)
        return CircleMode{};
    return PolarizedMode{default_polarizing(fps)};
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + output + "'");
    file << text;
}

Json polynomial_terms(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [rho, c] : p.terms())
        terms.push_back(Json{{"exponent", vector_to_json(rho)}, {"coefficient", integer_to_json(c)}});
    return terms;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& file, std::ostream& out) {
    Dataset d = load_dataset(file);
    if (const auto* fps = std::get_if<FixedPointSet>(&d))
        out << "valid points dataset: rank " << fps->rank() << ", half_dim " << fps->half_dim() << ", "
            << fps->size() << " fixed points\n";
    else {
        const auto& cs = std::get<ComponentSet>(d);
        out << "valid components dataset: rank " << cs.rank() << ", half_dim " << cs.half_dim() << ", "
            << cs.components().size() << " components\n";
    }
    return kSuccess;
}

int cmd_character(const std::string& file, const std::string& convention_name, const std::string& polarize,
                  bool json, const std::string& output, std::ostream& out) {
    Convention convention;
    if (convention_name == "paper")
        convention = Convention::Paper;
    else if (convention_name == "negated")
        convention = Convention::Negated;
    else
        throw UsageError("--convention must be paper or negated");
    const Dataset d = load_dataset(file);
    const auto& fps = require_points(d, "character");
    std::optional<IntVector> u;
    if (!polarize.empty())
        u = parse_vector_flag("--polarize", polarize);
    LaurentPolynomial chi = u ? character_polarized(fps, *u, convention) : character_exact(fps, convention);
    if (json) {
        Json j;
        j["dataset"] = dataset_id(file);
        j["convention"] = to_string(convention);
        j["polarize"] = u ? vector_to_json(*u) : Json(nullptr);
        j["character"] = chi.to_string();
        j["terms"] = polynomial_terms(chi);
        emit(pretty_json(j) + "\n", output, out);
    } else {
        emit(chi.to_string() + "\n", output, out);
    }
    return kSuccess;
}

std::string slots_text(const std::vector<std::size_t>& slots) {
    std::string s = "{";
    for (std::size_t k = 0; k < slots.size(); ++k)
        s += (k ? ", " : "") + std::to_string(slots[k] + 1);
    return s + "}";
}

Json slots_json(const std::vector<std::size_t>& slots) {
    Json j = Json::array();
    for (auto s : slots)
        j.push_back(s + 1);
    return j;
}

int cmd_partition(const std::string& file, const std::string& polarize, const std::string& epsilon,
                  const std::string& at, bool json, const std::string& output, std::ostream& out) {
    const Dataset d = load_dataset(file);
    const auto& fps = require_points(d, "partition");
    const CountMode mode = select_mode(fps, polarize, epsilon);

    std::vector<PointSplit> splits;
    std::vector<std::size_t> q_plus, q_minus;
    Json header;
    std::string header_text;
    if (const auto* e = std::get_if<EpsMode>(&mode)) {
        splits = e->eps.points();
        q_plus = e->eps.q_plus();
        q_minus = e->eps.q_minus();
        header["mode"] = "eps";
        header["interior"] = vector_to_json(e->eps.ranking());
        header_text = "mode eps, interior direction " + to_string(e->eps.ranking());
    } else {
        IntVector u = std::holds_alternative<CircleMode>(mode) ? IntVector{Integer(1)}
                                                                 : std::get<PolarizedMode>(mode).u;
        auto part = fixloc::polarize(fps, u);
        splits = part.points;
        q_plus = part.q_plus;
        q_minus = part.q_minus;
        header["mode"] = std::holds_alternative<CircleMode>(mode) ? "circle" : "polarized";
        header["u"] = vector_to_json(u);
        header_text = "mode " + header["mode"].get<std::string>() + ", u = " + to_string(u);
    }

    std::optional<Target> target;
    if (!at.empty()) {
        auto v = parse_vector_flag("--at", at);
        if (std::holds_alternative<EpsMode>(mode))
            target = Target{v};
        else if (v.size() == 1)
            target = Target{v[0]};
        else
            throw UsageError("--at takes a single integer outside eps mode");
    }

    Json points = Json::array();
    std::ostringstream os;
    os << header_text << "\n";
    os << "point\tA\tB\tsigma";
    if (target)
        os << "\tN";
    os << "\n";
    for (std::size_t i = 0; i < fps.size(); ++i) {
        const auto& s = splits[i];
        Json p;
        p["name"] = fps.point(i).name;
        p["A"] = slots_json(s.positive);
        p["B"] = slots_json(s.negative);
        p["sigma"] = s.sigma;
        os << fps.point(i).name << "\t" << slots_text(s.positive) << "\t" << slots_text(s.negative) << "\t"
           << (s.sigma > 0 ? "+1" : "-1");
        if (target) {
            Integer n = count_Np(fps, i, *target, mode);
            p["N"] = integer_to_json(n);
            os << "\t" << n;
        }
        os << "\n";
        points.push_back(std::move(p));
    }
    auto names = [&](const std::vector<std::size_t>& cls) {
        Json j = Json::array();
        std::string t = "{";
        for (std::size_t k = 0; k < cls.size(); ++k) {
            j.push_back(fps.point(cls[k]).name);
            t += (k ? ", " : "") + fps.point(cls[k]).name;
        }
        return std::make_pair(j, t + "}");
    };
    auto [plus_json, plus_text] = names(q_plus);
    auto [minus_json, minus_text] = names(q_minus);
    os << "Q+ = " << plus_text << "\nQ- = " << minus_text << "\n";

    if (json) {
        Json j = header;
        j["dataset"] = dataset_id(file);
        if (target)
            j["at"] = std::holds_alternative<Integer>(*target) ? integer_to_json(std::get<Integer>(*target))
                                                               : vector_to_json(std::get<IntVector>(*target));
        j["points"] = std::move(points);
        j["q_plus"] = plus_json;
        j["q_minus"] = minus_json;
        emit(pretty_json(j) + "\n", output, out);
    } else {
        emit(os.str(), output, out);
    }
    return kSuccess;
}

int exit_code(const std::vector<VerificationReport>& reports) {
    bool refuted = false, inapplicable = false;
    for (const auto& r : reports) {
        refuted |= r.verdict == Verdict::Refuted;
        inapplicable |= r.verdict == Verdict::Inapplicable;
    }
    if (refuted)
        return kRefuted;
    if (inapplicable)
        return kInapplicable;
    return kSuccess;
}

VerificationReport inapplicable(const std::string& theorem, const std::string& dataset, const Error& e) {
    VerificationReport rep;
    rep.theorem = theorem;
    rep.dataset = dataset;
    rep.verdict = Verdict::Inapplicable;
    rep.witnesses = Json{{"error", e.kind()}, {"message", e.what()}};
    rep.summary = e.kind() + ": " + e.what();
    return rep;
}

bool is_precondition(const Error& e) {
    for (const char* k : {"EmptyClass", "ShapeMismatch", "NotPolarizing", "ModeMismatch", "NotGeneric",
                          "InfeasibleAssignment", "RankMismatch"})
        if (e.kind() == k)
            return true;
    return false;
}

struct VerifyArgs {
    std::string theorem;
    std::string file;
    std::string polarize;
    std::string epsilon;
    long long window = 40;
    unsigned range = 50;
    bool json = false;
    bool timing = false;
    bool parallel = false;
    std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    Dataset d = load_dataset(a.file);
    VerifyOptions opt;
    opt.dataset = dataset_id(a.file);
    opt.window = a.window;
    opt.range = a.range;
    opt.timing = a.timing;
    opt.parallel = a.parallel;

    std::vector<VerificationReport> reports;
    if (a.theorem == "all") {
        if (!a.polarize.empty() || !a.epsilon.empty())
            throw UsageError("verify all chooses its own modes; drop --polarize/--epsilon");
        reports = verify_all(d, opt);
    } else {
        try {
            if (a.theorem == "prop42") {
                if (const auto* cs = std::get_if<ComponentSet>(&d))
                    reports.push_back(verify_prop42(*cs, opt));
                else
                    throw ShapeMismatch("prop42 needs a components dataset");
            } else {
                const auto& fps = require_points(d, "verify " + a.theorem);
                if (a.theorem == "halfspace") {
                    reports.push_back(verify_halfspace(fps, opt));
                } else {
                    const CountMode mode = select_mode(fps, a.polarize, a.epsilon);
                    reports.push_back(a.theorem == "cancellation" ? verify_cancellation(fps, mode, opt)
                                                                  : verify_lattice(fps, mode, opt));
                }
            }
        } catch (const Error& e) {
            if (!is_precondition(e))
                throw;
            reports.push_back(inapplicable(a.theorem, opt.dataset, e));
        }
    }

    std::string text;
    if (a.json) {
        Json j;
        if (a.theorem == "all") {
            j = Json::array();
            for (const auto& r : reports)
                j.push_back(to_json(r));
        } else {
            j = to_json(reports.front());
        }
        text = pretty_json(j) + "\n";
    } else {
        for (const auto& r : reports)
            text += to_text(r);
    }
    emit(text, a.output, out);
    return exit_code(reports);
}

DelzantPolytope factor_polytope(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    unsigned k = 1;
    if (colon != std::string::npos) {
        auto v = parse_integer(text.substr(colon + 1));
        if (!v || *v < 1)
            throw UsageError("--factor " + text + ": dilation must be a positive integer");
        k = static_cast<unsigned>(to_ll(*v));
    }
    if (kind == "simplex")
        return simplex_polytope(k);
    if (kind == "segment")
        return segment_polytope(k);
    throw UsageError("--factor " + text + ": expected simplex[:k] or segment[:k]");
}

int cmd_toric(const std::string& kind, unsigned dilation, std::size_t dim, const std::vector<std::string>& factors,
              const std::string& restrict_to, const std::string& output, std::ostream& out) {
    if (dilation < 1)
        throw UsageError("--dilation must be positive");
    DelzantPolytope poly;
    if (kind == "simplex") {
        if (dim < 1)
            throw UsageError("--dim must be positive");
        poly = simplex_polytope(dilation, dim);
    } else if (kind == "segment") {
        poly = segment_polytope(dilation);
    } else {
        if (factors.size() < 2)
            throw UsageError("toric product needs at least two --factor options");
        poly = factor_polytope(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            poly = product_polytope(poly, factor_polytope(factors[i]));
    }
    FixedPointSet fps = generate_toric(poly);
    if (!restrict_to.empty())
        fps = restrict_to_circle(fps, parse_vector_flag("--restrict", restrict_to));
    emit(serialize(Dataset{fps}, 2) + "\n", output, out);
    return kSuccess;
}

int cmd_section4(const std::string& file, const std::optional<long long>& k, const std::optional<long long>& from,
                 const std::optional<long long>& to, const std::string& polarize, bool json,
                 const std::string& output, std::ostream& out) {
    Dataset d = load_dataset(file);
    ComponentSet cs = std::holds_alternative<ComponentSet>(d) ? std::get<ComponentSet>(d)
                                                              : as_components(std::get<FixedPointSet>(d));
    IntVector u;
    if (!polarize.empty())
        u = parse_vector_flag("--polarize", polarize);
    else if (cs.rank() == 1)
        u = {Integer(1)};
    else
        throw UsageError("section4 coeff needs --polarize for rank " + std::to_string(cs.rank()) + " data");

    long long lo, hi;
    if (k) {
        if (from || to)
            throw UsageError("--k excludes --from/--to");
        lo = hi = *k;
    } else if (from && to) {
        lo = *from;
        hi = *to;
        if (lo > hi)
            throw UsageError("--from must not exceed --to");
    } else {
        throw UsageError("section4 coeff needs --k or both --from and --to");
    }

    Json rows = Json::array();
    std::ostringstream os;
    os << "k\tcoefficient\n";
    for (long long x = lo; x <= hi; ++x) {
        Rational c = component_coefficient(cs, u, Integer(x));
        rows.push_back(Json{{"k", x}, {"coefficient", rational_to_json(c)}});
        os << x << "\t" << to_fraction_string(c) << "\n";
    }
    if (json) {
        Json j;
        j["dataset"] = dataset_id(file);
        j["u"] = vector_to_json(u);
        j["coefficients"] = std::move(rows);
        emit(pretty_json(j) + "\n", output, out);
    } else {
        emit(os.str(), output, out);
    }
    return kSuccess;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fixed-point localization toolkit: characters, partition counts and theorem checks"};
    app.name("fixloc");
    app.require_subcommand(1);

    std::string file, convention = "paper", polarize, epsilon, at, output;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "Parse and validate a dataset");
    validate->add_option("file", file, "Dataset JSON")->required();

    auto* character = app.add_subcommand("character", "Exact character by localization");
    character->add_option("file", file, "Dataset JSON")->required();
    character->add_option("--convention", convention, "paper or negated")->check(CLI::IsMember({"paper", "negated"}));
    character->add_option("--polarize", polarize, "Specialize along u1,...,ur");
    character->add_flag("--json", json, "JSON output");
    character->add_option("-o,--output", output, "Write to FILE");

    auto* partition = app.add_subcommand("partition", "Slot splits, classes and counts N_p");
    partition->add_option("file", file, "Dataset JSON")->required();
    partition->add_option("--polarize", polarize, "Polarizing vector u1,...,ur");
    partition->add_option("--epsilon", epsilon, "Sign assignment JSON file");
    partition->add_option("--at", at, "Evaluate N_p at L (integer, or l1,...,lr in eps mode)");
    partition->add_flag("--json", json, "JSON output");
    partition->add_option("-o,--output", output, "Write to FILE");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Machine-check a theorem on a dataset");
    verify->add_option("theorem", va.theorem, "cancellation | lattice | halfspace | prop42 | all")
        ->required()
        ->check(CLI::IsMember({"cancellation", "lattice", "halfspace", "prop42", "all"}));
    verify->add_option("file", va.file, "Dataset JSON")->required();
    verify->add_option("--polarize", va.polarize, "Polarizing vector u1,...,ur");
    verify->add_option("--epsilon", va.epsilon, "Sign assignment JSON file");
    verify->add_option("--window", va.window, "Width of the checked window")->check(CLI::PositiveNumber);
    verify->add_option("--range", va.range, "n0 range for prop42")->check(CLI::PositiveNumber);
    verify->add_flag("--json", va.json, "JSON report");
    verify->add_flag("--timing", va.timing, "Record elapsed_ms");
    verify->add_flag("--parallel", va.parallel, "Evaluate window entries on several threads");
    verify->add_option("-o,--output", va.output, "Write to FILE");

    std::string toric_kind;
    unsigned dilation = 1;
    std::size_t dim = 2;
    std::vector<std::string> factors;
    std::string restrict_to;
    auto* toric = app.add_subcommand("toric", "Generate toric fixed-point data");
    toric->add_option("kind", toric_kind, "simplex | segment | product")
        ->required()
        ->check(CLI::IsMember({"simplex", "segment", "product"}));
    toric->add_option("--dilation", dilation, "Dilation factor k");
    toric->add_option("--dim", dim, "Simplex dimension");
    toric->add_option("--factor", factors, "Product factor simplex[:k] or segment[:k] (repeatable)");
    toric->add_option("--restrict", restrict_to, "Restrict to the circle generated by X1,...,Xr");
    toric->add_option("-o,--output", output, "Write to FILE");

    std::string action;
    std::optional<long long> k, from, to;
    auto* section4 = app.add_subcommand("section4", "Component coefficient formula");
    section4->add_option("action", action, "coeff")->required()->check(CLI::IsMember({"coeff"}));
    section4->add_option("file", file, "Dataset JSON")->required();
    section4->add_option("--k", k, "Single degree");
    section4->add_option("--from", from, "First degree");
    section4->add_option("--to", to, "Last degree");
    section4->add_option("--polarize", polarize, "Polarizing vector u1,...,ur");
    section4->add_flag("--json", json, "JSON output");
    section4->add_option("-o,--output", output, "Write to FILE");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(file, out);
        if (character->parsed())
            return cmd_character(file, convention, polarize, json, output, out);
        if (partition->parsed())
            return cmd_partition(file, polarize, epsilon, at, json, output, out);
        if (verify->parsed())
            return cmd_verify(va, out);
        if (toric->parsed())
            return cmd_toric(toric_kind, dilation, dim, factors, restrict_to, output, out);
        if (section4->parsed())
            return cmd_section4(file, k, from, to, polarize, json, output, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << "\n";
        return kInapplicable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace fixloc::cli
