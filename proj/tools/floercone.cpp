#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "floercone/cone.hpp"
#include "floercone/contact.hpp"
#include "floercone/dual_knot.hpp"
#include "floercone/error.hpp"
#include "floercone/json_io.hpp"
#include "floercone/models.hpp"

using namespace floercone;

namespace {

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string read_text(std::string const& path)
{
    if (path == "-")
    {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(std::string const& path)
{
    try
    {
        return Json::parse(read_text(path));
    }
    catch (nlohmann::json::parse_error const& e)
    {
        throw Error(ErrorKind::Parse, e.what());
    }
}

void write_text(std::string const& path, std::string const& text)
{
    if (path.empty() || path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path);
    out << text;
}

// "minus-en:5", "staircase", "box", "unknot", optionally prefixed "mirror:".
FilteredComplex named_model(std::string spec)
{
    bool mirrored = false;
    if (spec.rfind("mirror:", 0) == 0)
    {
        mirrored = true;
        spec = spec.substr(7);
    }
    FilteredComplex c;
    if (spec.rfind("minus-en:", 0) == 0)
        c = build_minus_En(std::stoi(spec.substr(9)));
    else if (spec == "staircase")
        c = staircase();
    else if (spec == "box")
        c = box();
    else if (spec == "unknot")
        c = unknot();
    else
        throw Error(ErrorKind::UnsupportedModel, "unknown model '" + spec + "'");
    return mirrored ? mirror(c) : c;
}

FilteredComplex load_complex(std::string const& input, std::string const& model)
{
    if (!input.empty())
        return complex_from_json(read_json(input));
    return named_model(model.empty() ? "minus-en:5" : model);
}

std::string expansion_text(DgsExpansion const& x)
{
    std::ostringstream out;
    auto list = [&](std::vector<int> const& v) {
        out << "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? ", " : "") << v[i];
        out << "]";
    };
    out << "r = " << to_string(x.r) << "\n";
    out << "kind: " << (x.kind == ExpansionKind::negative ? "negative" : "positive") << "\n";
    if (x.kind == ExpansionKind::positive)
        out << "e = " << x.e << "\n";
    out << "a = ";
    list(x.a);
    out << "\nstabilizations = ";
    list(x.stabilizations);
    out << "\nsigns = ";
    list(x.surgery_signs);
    out << "\n";
    return out.str();
}

Json expansion_json(DgsExpansion const& x)
{
    Json j;
    j["kind"] = "dgs_expansion";
    j["r"] = to_json(x.r);
    j["expansion"] = x.kind == ExpansionKind::negative ? "negative" : "positive";
    j["e"] = x.e;
    j["a"] = x.a;
    j["stabilizations"] = x.stabilizations;
    j["surgery_signs"] = x.surgery_signs;
    return j;
}

Json pipeline_json(PipelineReport const& rep)
{
    Json j;
    j["kind"] = "pipeline_report";
    j["n"] = rep.n;
    j["r"] = to_json(rep.r);
    j["steps"] = Json::array();
    for (auto const& s : rep.steps)
    {
        Json step;
        step["label"] = s.label;
        step["status"] = s.computed ? "computed" : "trusted";
        step["fact"] = s.fact;
        step["values"] = Json::object();
        for (auto const& [k, v] : s.values)
            step["values"][k] = v;
        j["steps"].push_back(step);
    }
    j["distinct"] = rep.distinct;
    j["route"] = rep.route;
    j["verdict"] = rep.verdict();
    return j;
}

std::string pipeline_text(PipelineReport const& rep)
{
    std::ostringstream out;
    out << "n = " << rep.n << ", r = " << to_string(rep.r) << "\n";
    for (std::size_t i = 0; i < rep.steps.size(); ++i)
    {
        auto const& s = rep.steps[i];
        out << i + 1 << ". [" << (s.computed ? "computed" : "trusted") << "] " << s.label << "\n";
        out << "   " << s.fact << "\n";
        for (auto const& [k, v] : s.values)
            out << "   " << k << " = " << v << "\n";
    }
    out << rep.verdict() << "\n";
    return out.str();
}

Json matrix_json(F2Matrix const& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c) ? 1 : 0);
        rows.push_back(row);
    }
    return rows;
}

// Returns the list of problems; empty means valid.
std::vector<std::string> validate_json(Json const& j)
{
    std::vector<std::string> problems;
    auto check_complex_json = [&](Json const& cj) {
        auto const c = complex_from_json(cj);
        for (auto const& v : check_complex(c))
            problems.push_back(v.message);
        if (dump(to_json(c)) != dump(cj))
            problems.push_back("complex is not in canonical form");
    };
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "top-level value is not an object");
    if (!j.contains("kind"))
    {
        check_complex_json(j);
        return problems;
    }
    std::string const kind = j.at("kind").get<std::string>();
    if (kind == "dual_normal_form")
        check_complex_json(j.at("complex"));
    else if (kind == "surgery_report")
    {
        for (auto const& s : j.at("sectors"))
            if (!s.contains("sector") || !s.contains("homology"))
                problems.push_back("sector entry lacks sector/homology");
    }
    else if (kind == "g_map")
    {
        if (j.at("rank").get<int>() > j.at("domain_dimension").get<int>())
            problems.push_back("rank exceeds domain dimension");
    }
    else if (kind == "dgs_expansion")
        rational_from_json(j.at("r"));
    else if (kind == "pipeline_report")
        rational_from_json(j.at("r"));
    else
        problems.push_back("unknown kind '" + kind + "'");
    return problems;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Knot Floer mapping cones, dual knots and contact surgery bookkeeping"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output;
    app.add_option("-o,--output", output, "output file (default stdout)");

    auto* model_cmd = app.add_subcommand("model", "emit a model complex as JSON");
    int minus_en = 0;
    bool want_staircase = false, want_box = false, want_unknot = false, want_mirror = false;
    auto* en_opt = model_cmd->add_option("--minus-en", minus_en, "CFK of -E_n (n odd)");
    auto* st_opt = model_cmd->add_flag("--staircase", want_staircase);
    auto* bx_opt = model_cmd->add_flag("--box", want_box);
    auto* un_opt = model_cmd->add_flag("--unknot", want_unknot);
    en_opt->excludes(st_opt, bx_opt, un_opt);
    st_opt->excludes(bx_opt, un_opt);
    bx_opt->excludes(un_opt);
    model_cmd->add_flag("--mirror", want_mirror, "emit the mirror");

    auto* surgery_cmd = app.add_subcommand("surgery", "sector homology of a surgery mapping cone");
    std::string input, model_name, flavor = "hat", range = "paper";
    int p = 1, q = 1;
    std::optional<int> sector;
    bool do_truncate = false;
    surgery_cmd->add_option("--input", input, "JSON complex ('-' for stdin)");
    surgery_cmd->add_option("--model", model_name, "minus-en:N | staircase | box | unknot, optional mirror: prefix");
    surgery_cmd->add_option("--p", p)->required();
    surgery_cmd->add_option("--q", q);
    surgery_cmd->add_option("--flavor", flavor)->check(CLI::IsMember({"hat", "infinity"}));
    surgery_cmd->add_option("--range", range)->check(CLI::IsMember({"paper", "full"}));
    surgery_cmd->add_option("--sector", sector);
    surgery_cmd->add_flag("--truncate", do_truncate, "truncate the cone to the paper window first");

    auto* dual_cmd = app.add_subcommand("dualknot", "dual knot complex checks");
    int framing = 1, tb = 0, rot = -1;
    std::optional<int> alexander;
    std::string check = "normalform";
    dual_cmd->add_option("--n", framing, "framing");
    dual_cmd->add_option("--input", input, "JSON complex");
    dual_cmd->add_option("--model", model_name, "model name (default minus-en:5)");
    dual_cmd->add_option("--check", check)->check(CLI::IsMember({"normalform", "gmap"}));
    dual_cmd->add_option("--alexander", alexander, "Alexander grading for gmap");
    dual_cmd->add_option("--tb", tb, "tb used to pick the LOSS grading");
    dual_cmd->add_option("--rot", rot, "rot used to pick the LOSS grading");

    auto* dgs_cmd = app.add_subcommand("dgs", "DGS continued-fraction expansion");
    std::string r_text;
    bool as_json = false;
    dgs_cmd->add_option("--r", r_text, "contact surgery coefficient")->required();
    dgs_cmd->add_flag("--json", as_json);

    auto* c1_cmd = app.add_subcommand("c1", "first Chern class evaluations");
    std::string formula;
    int order = 1, n_surgery = 1;
    c1_cmd->add_option("--formula", formula)->required()->check(CLI::IsMember({"cobordism", "posint", "plusone"}));
    c1_cmd->add_option("--tb", tb);
    c1_cmd->add_option("--rot", rot);
    c1_cmd->add_option("--p", p);
    c1_cmd->add_option("--q", q);
    c1_cmd->add_option("--n", n_surgery);
    c1_cmd->add_option("--order", order);

    auto* pipeline_cmd = app.add_subcommand("pipeline", "distinctness pipeline for E_n");
    int twist = 5;
    pipeline_cmd->add_option("--n", twist)->required();
    pipeline_cmd->add_option("--r", r_text)->required();
    pipeline_cmd->add_flag("--json", as_json);

    auto* validate_cmd = app.add_subcommand("validate", "check a JSON file emitted by this tool");
    std::string target = "-";
    validate_cmd->add_option("file", target, "file ('-' for stdin)");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (*model_cmd)
        {
            FilteredComplex c;
            if (*en_opt)
                c = build_minus_En(minus_en);
            else if (want_staircase)
                c = staircase();
            else if (want_box)
                c = box();
            else if (want_unknot)
                c = unknot();
            else
                throw Error(ErrorKind::BadParameter, "choose --minus-en, --staircase, --box or --unknot");
            if (want_mirror)
                c = mirror(c);
            write_text(output, dump(to_json(c)));
        }
        else if (*surgery_cmd)
        {
            auto const c = load_complex(input, model_name);
            auto cone = build_cone(c, flip(c), p, q, range == "full" ? ConeRange::full : ConeRange::paper);
            if (flavor == "hat")
                cone = hat(cone);
            if (do_truncate)
                cone = truncate(cone);
            Json j;
            j["kind"] = "surgery_report";
            j["p"] = p;
            j["q"] = q;
            j["flavor"] = flavor;
            j["range"] = range;
            j["genus"] = cone.genus;
            j["sectors"] = Json::array();
            int total = 0;
            for (int i = 0; i < std::abs(p); ++i)
            {
                if (sector && positive_mod(*sector, std::abs(p)) != i)
                    continue;
                auto const h = sector_homology(cone, i);
                total += h.total();
                j["sectors"].push_back({{"sector", i}, {"homology", to_json(h)}});
            }
            j["total_rank"] = total;
            write_text(output, dump(j));
        }
        else if (*dual_cmd)
        {
            auto const c = load_complex(input, model_name);
            auto const nf = normal_form(build_dual_cone(c, flip(c), framing));
            Json j;
            if (check == "normalform")
            {
                int h = 0, v = 0;
                for (auto const& g : nf.complex.generators())
                {
                    h += g.name.rfind("xh_", 0) == 0;
                    v += g.name.rfind("xv_", 0) == 0;
                }
                j["kind"] = "dual_normal_form";
                j["n"] = framing;
                j["summands"] = {{"O", 1}, {"H", h}, {"V", v}};
                j["complex"] = to_json(nf.complex);
            }
            else
            {
                int const s = alexander ? *alexander : loss_grading(tb, rot);
                auto const g = g_map(nf.complex, s);
                j["kind"] = "g_map";
                j["n"] = framing;
                j["alexander"] = s;
                j["domain_dimension"] = g.domain_dimension;
                j["target_dimension"] = g.target_dimension;
                j["rank"] = g.rank;
                j["injective"] = g.injective();
                j["matrix"] = matrix_json(g.matrix);
            }
            write_text(output, dump(j));
        }
        else if (*dgs_cmd)
        {
            Rational const r = parse_rational(r_text);
            auto const x = r < 0 ? negative_expansion(r) : positive_expansion(r);
            write_text(output, as_json ? dump(expansion_json(x)) : expansion_text(x));
        }
        else if (*c1_cmd)
        {
            LegendrianData const l{tb, rot, order, "L"};
            int value = 0;
            if (formula == "cobordism")
                value = c1_surgery_cobordism(l, p, q);
            else if (formula == "posint")
                value = c1_positive_integer_surgery(l, n_surgery);
            else
                value = c1_plus_one_surgery(l);
            write_text(output, std::to_string(value) + "\n");
        }
        else if (*pipeline_cmd)
        {
            auto const rep = distinctness_pipeline(twist, parse_rational(r_text));
            write_text(output, as_json ? dump(pipeline_json(rep)) : pipeline_text(rep));
        }
        else if (*validate_cmd)
        {
            auto const problems = validate_json(read_json(target));
            for (auto const& msg : problems)
                std::cerr << msg << "\n";
            std::cout << (problems.empty() ? "valid" : "invalid") << "\n";
            return problems.empty() ? 0 : 1;
        }
    }
    catch (Error const& e)
    {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? 2 : 1;
    }
    catch (IoError const& e)
    {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (nlohmann::json::exception const& e)
    {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (std::invalid_argument const& e)
    {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
