// gkd: tableau shapes, GK dimensions and scalar-module reducibility for the
// classical types, with exact rational arithmetic throughout.
//
// Verbs: shape, gkdim, reduce, scan, table. JSON output everywhere; tables
// can be emitted as CSV. Exit codes: 0 success, 1 computation-domain error,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "gkd/gkdim.hpp"
#include "gkd/rational.hpp"
#include "gkd/reducibility.hpp"
#include "gkd/rootdata.hpp"
#include "gkd/tableau.hpp"

namespace {

using json = nlohmann::ordered_json;

gkd::LieType parse_type(const std::string& type_text, int rank) {
    if (type_text.size() != 1)
        throw std::invalid_argument("unknown Lie type '" + type_text + "'");
    return gkd::LieType(gkd::kind_from_char(type_text[0]), rank);
}

json sequence_to_json(const gkd::Sequence& seq) {
    json arr = json::array();
    for (const auto& value : seq)
        arr.push_back(gkd::to_string(value));
    return arr;
}

json classes_to_json(const gkd::ClassDecomposition& classes) {
    json obj;
    obj["integral"] = sequence_to_json(classes.integral_class.value_or(gkd::Sequence{}));
    obj["half"] = sequence_to_json(classes.half_class.value_or(gkd::Sequence{}));
    json other = json::array();
    for (const auto& cls : classes.other_classes)
        other.push_back(sequence_to_json(cls));
    obj["other"] = other;
    return obj;
}

json row_to_json(const gkd::PropositionRow& row) {
    json obj;
    obj["type"] = std::string(1, gkd::to_char(row.type.kind()));
    obj["rank"] = row.type.rank();
    obj["p"] = row.p;
    obj["class"] = gkd::to_string(row.congruence_class);
    obj["first_point"] = row.first_point ? json(gkd::to_string(*row.first_point)) : json();
    obj["paper_claim"] = row.paper_claim ? json(gkd::to_string(*row.paper_claim)) : json();
    obj["match"] = row.match ? json(*row.match) : json();
    return obj;
}

std::string rows_to_csv(const std::vector<gkd::PropositionRow>& rows) {
    std::string out = "type,rank,p,class,first_point,paper_claim,match\n";
    for (const auto& row : rows) {
        out += gkd::to_char(row.type.kind());
        out += ',' + std::to_string(row.type.rank());
        out += ',' + std::to_string(row.p);
        out += ',' + gkd::to_string(row.congruence_class);
        out += ',' + (row.first_point ? gkd::to_string(*row.first_point) : std::string());
        out += ',' + (row.paper_claim ? gkd::to_string(*row.paper_claim) : std::string());
        out += ',' + (row.match ? std::string(*row.match ? "true" : "false") : std::string());
        out += '\n';
    }
    return out;
}

std::pair<int, int> parse_rank_range(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw std::invalid_argument("rank range must look like LO:HI, got '" + text + "'");
    try {
        int lo = std::stoi(text.substr(0, colon));
        int hi = std::stoi(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("rank range must look like LO:HI, got '" + text + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"GK dimensions and reducibility of scalar modules for classical Lie algebras"};
    app.require_subcommand(1);

    // shape
    auto* shape_cmd = app.add_subcommand("shape", "Robinson-Schensted shape of a rational sequence");
    std::string seq_text;
    bool oracle = false;
    shape_cmd->add_option("--seq", seq_text, "comma-separated rationals")->required();
    shape_cmd->add_flag("--oracle", oracle, "cross-check against the insertion-free oracle");

    // gkdim
    auto* gkdim_cmd = app.add_subcommand("gkdim", "GK dimension of L(lambda) from lambda+rho");
    std::string g_type;
    int g_rank = 0;
    std::optional<int> g_p;
    std::optional<std::string> g_z;
    std::optional<std::string> g_weight;
    gkdim_cmd->add_option("--type", g_type, "Lie type A|B|C|D")->required();
    gkdim_cmd->add_option("--rank", g_rank, "rank n")->required();
    gkdim_cmd->add_option("--p", g_p, "simple root kept in the Levi");
    gkdim_cmd->add_option("--z", g_z, "scalar parameter (rational)");
    gkdim_cmd->add_option("--weight", g_weight, "lambda+rho coordinates, comma-separated");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "reducibility verdict for the scalar module");
    std::string r_type;
    int r_rank = 0;
    int r_p = 0;
    std::string r_z;
    reduce_cmd->add_option("--type", r_type)->required();
    reduce_cmd->add_option("--rank", r_rank)->required();
    reduce_cmd->add_option("--p", r_p)->required();
    reduce_cmd->add_option("--z", r_z)->required();

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "first reducible point in a congruence class");
    std::string s_type;
    int s_rank = 0;
    int s_p = 0;
    std::string s_class;
    std::string s_from = "-8";
    std::string s_to = "8";
    scan_cmd->add_option("--type", s_type)->required();
    scan_cmd->add_option("--rank", s_rank)->required();
    scan_cmd->add_option("--p", s_p)->required();
    scan_cmd->add_option("--class", s_class, "congruence class in [0,1)")->required();
    scan_cmd->add_option("--from", s_from, "window lower end (default -8)");
    scan_cmd->add_option("--to", s_to, "window upper end (default 8)");

    // table
    auto* table_cmd = app.add_subcommand("table", "first points vs. claimed values over a rank range");
    std::string t_type;
    std::string t_ranks;
    std::string t_classes = "0,1/2";
    std::string t_from = "-8";
    std::string t_to = "8";
    std::string t_format = "json";
    table_cmd->add_option("--type", t_type)->required();
    table_cmd->add_option("--ranks", t_ranks, "rank range LO:HI")->required();
    table_cmd->add_option("--classes", t_classes, "comma-separated congruence classes (default 0,1/2)");
    table_cmd->add_option("--from", t_from, "window lower end (default -8)");
    table_cmd->add_option("--to", t_to, "window upper end (default 8)");
    table_cmd->add_option("--format", t_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*shape_cmd) {
            gkd::Sequence seq = gkd::parse_rational_list(seq_text);
            gkd::Partition shape = gkd::rs_shape(seq);
            if (oracle && shape != gkd::greene_shape(seq))
                throw std::logic_error("insertion shape disagrees with the oracle");
            json out;
            out["shape"] = shape;
            std::cout << out.dump() << "\n";
        } else if (*gkdim_cmd) {
            gkd::LieType type = parse_type(g_type, g_rank);
            gkd::Weight w;
            if (g_weight) {
                if (g_p || g_z)
                    throw std::invalid_argument("--weight excludes --p/--z");
                w = gkd::parse_rational_list(*g_weight);
            } else if (g_p && g_z) {
                w = gkd::scalar_weight_plus_rho(type, *g_p, gkd::parse_rational(*g_z));
            } else {
                throw std::invalid_argument("need either --weight or both --p and --z");
            }
            json out;
            out["gkdim"] = gkd::gk_dimension(type, w);
            out["classes"] = classes_to_json(gkd::decompose(type, w));
            std::cout << out.dump() << "\n";
        } else if (*reduce_cmd) {
            gkd::LieType type = parse_type(r_type, r_rank);
            gkd::ReducibilityReport report =
                gkd::is_reducible(type, r_p, gkd::parse_rational(r_z));
            json out;
            out["type"] = std::string(1, gkd::to_char(type.kind()));
            out["rank"] = type.rank();
            out["p"] = report.p;
            out["z"] = gkd::to_string(report.z);
            out["gkdim"] = report.gkdim;
            out["dim_u"] = report.dim_u;
            out["reducible"] = report.reducible;
            std::cout << out.dump() << "\n";
        } else if (*scan_cmd) {
            gkd::LieType type = parse_type(s_type, s_rank);
            gkd::Window window{gkd::parse_rational(s_from), gkd::parse_rational(s_to)};
            gkd::ScanResult scan =
                gkd::first_reducible_point(type, s_p, gkd::parse_rational(s_class), window);
            json out;
            out["type"] = std::string(1, gkd::to_char(type.kind()));
            out["rank"] = type.rank();
            out["p"] = scan.p;
            out["class"] = gkd::to_string(scan.congruence_class);
            out["window"] = {{"from", gkd::to_string(window.lo)}, {"to", gkd::to_string(window.hi)}};
            out["first_point"] = scan.first_point ? json(gkd::to_string(*scan.first_point)) : json();
            out["monotone"] = scan.monotone;
            std::cout << out.dump() << "\n";
        } else if (*table_cmd) {
            if (t_type.size() != 1)
                throw std::invalid_argument("unknown Lie type '" + t_type + "'");
            gkd::LieKind kind = gkd::kind_from_char(t_type[0]);
            auto [rank_lo, rank_hi] = parse_rank_range(t_ranks);
            std::vector<gkd::Rational> classes = gkd::parse_rational_list(t_classes);
            gkd::Window window{gkd::parse_rational(t_from), gkd::parse_rational(t_to)};
            auto rows = gkd::proposition_table(kind, rank_lo, rank_hi, classes, window);
            if (t_format == "csv") {
                std::cout << rows_to_csv(rows);
            } else {
                json out = json::array();
                for (const auto& row : rows)
                    out.push_back(row_to_json(row));
                std::cout << out.dump() << "\n";
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
