// polycycle: command-line front end. Exit codes: 2 usage, 3 validation or
// catalog errors, 4 I/O errors.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycycle/enumerate.hpp"
#include "polycycle/io.hpp"
#include "polycycle/symmetry.hpp"

namespace fs = std::filesystem;
using namespace polycycle;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_validation = 3;
constexpr int exit_io = 4;

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::sporadic: return "sporadic";
        case FamilyKind::monocycle: return "monocycle";
        case FamilyKind::gon_triple: return "triple";
        case FamilyKind::barrel: return "barrel";
        case FamilyKind::snub_antiprism: return "snub-antiprism";
        case FamilyKind::series: return "series";
    }
    return "sporadic";
}

// Polycycle document plus the catalog fields under "entry".
std::string entry_json(const CatalogEntry& e, int index) {
    auto doc = nlohmann::json::parse(write_json(e.polycycle));
    doc["entry"] = {{"index", index},
                    {"face_count", e.face_count},
                    {"hole_count", e.hole_count},
                    {"aut_p_order", e.aut_p_order},
                    {"aut_g_order", e.aut_g_order},
                    {"extensible", e.extensible},
                    {"family", e.family.to_string()},
                    {"code", e.code.hex()}};
    return doc.dump() + "\n";
}

std::string padded(int i, int width = 4) {
    std::string s = std::to_string(i);
    return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

std::string summary(const std::vector<CatalogEntry>& catalog) {
    std::map<int, std::array<int, 4>> rows;
    for (const auto& e : catalog) {
        auto& r = rows[e.face_count];
        if (e.family.kind == FamilyKind::series) ++r[1];
        else if (e.family.kind == FamilyKind::barrel) ++r[2];
        else if (e.family.kind == FamilyKind::snub_antiprism) ++r[3];
        else ++r[0];
    }
    std::ostringstream o;
    o << "# face_count sporadic series barrel antiprism\n";
    for (const auto& [f, r] : rows) o << f << " " << r[0] << " " << r[1] << " " << r[2] << " " << r[3] << "\n";
    o << "total elementary: " << catalog.size() << "\n";
    return o.str();
}

void print_symmetry(const char* label, const SymmetryInfo& s) {
    std::cout << label << ": order " << s.order << " rotations " << s.op_order << " max_rotation "
              << s.max_rotation << " reflection " << (s.has_reflection ? "yes" : "no") << " mirrors " << s.mirrors
              << " name " << s.name.value_or("-") << "\n";
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic polycycles: validation, enumeration, families, symmetry and rendering"};
    app.require_subcommand(1);

    std::string file, file_b, out, svg_out, catalog_dir, format = "summary", family_filter, kind, pair, r_csv;
    int q = 3, max_faces = 0, threads = 1, edge_a = -1, edge_b = -1, m = 0, n = 0, i_size = 0, j_size = 0, k_size = 0;
    bool totally = false, flip = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a polycycle document");
    validate_cmd->add_option("file", file)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List elementary polycycles");
    enumerate_cmd->add_option("--q", q)->required()->check(CLI::IsMember({3, 4, 5}));
    enumerate_cmd->add_option("--r", r_csv, "gon sizes, comma separated")->required();
    enumerate_cmd->add_option("--max-faces", max_faces, "default 12 for q=3, 20 otherwise");
    enumerate_cmd->add_flag("--totally-elementary", totally);
    enumerate_cmd->add_option("--family", family_filter)
        ->check(CLI::IsMember({"sporadic", "series", "barrel", "snub-antiprism", "monocycle", "triple"}));
    enumerate_cmd->add_option("--out", out);
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "svg", "summary"}));
    enumerate_cmd->add_option("--threads", threads)->envname("POLYCYCLE_THREADS")->check(CLI::PositiveNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "Split into elementary pieces");
    decompose_cmd->add_option("file", file)->required();
    decompose_cmd->add_option("--out", out)->required();

    auto* agglomerate_cmd = app.add_subcommand("agglomerate", "Glue two polycycles along open edges");
    agglomerate_cmd->add_option("file_a", file)->required();
    agglomerate_cmd->add_option("file_b", file_b)->required();
    agglomerate_cmd->add_option("--edge-a", edge_a)->required();
    agglomerate_cmd->add_option("--edge-b", edge_b)->required();
    agglomerate_cmd->add_flag("--flip", flip);
    agglomerate_cmd->add_option("--out", out);

    auto* family_cmd = app.add_subcommand("family", "Build a member of a named family");
    family_cmd->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"barrel", "snub-antiprism", "monocycle", "triple", "series"}));
    family_cmd->add_option("--m", m);
    family_cmd->add_option("--i", i_size);
    family_cmd->add_option("--j", j_size);
    family_cmd->add_option("--k", k_size);
    family_cmd->add_option("--q", q);
    family_cmd->add_option("--pair", pair, "ending pair in letters a b g d e m");
    family_cmd->add_option("--n", n);
    family_cmd->add_option("--out", out);

    auto* classify_cmd = app.add_subcommand("classify", "Find a polycycle in an emitted catalog");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--catalog", catalog_dir)->required();

    auto* symmetry_cmd = app.add_subcommand("symmetry", "Print Aut(P) and Aut(G)");
    symmetry_cmd->add_option("file", file)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw as SVG");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("--svg", svg_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*validate_cmd) {
            const Polycycle p = read_json(read_file(file));
            std::cout << "valid: " << p.map().vertex_count() << " vertices, " << p.map().edge_count() << " edges, "
                      << p.proper_face_count() << " proper faces, " << p.hole_count() << " holes\n";
        } else if (*enumerate_cmd) {
            std::vector<int> sizes;
            std::stringstream ss(r_csv);
            for (std::string tok; std::getline(ss, tok, ',');) {
                try {
                    sizes.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    std::cerr << "bad --r value: " << tok << "\n";
                    return exit_usage;
                }
            }
            if (format != "summary" && out.empty()) {
                std::cerr << "--out is required for --format " << format << "\n";
                return exit_usage;
            }
            EnumerationTask task{PolycycleParams::make(sizes, q), max_faces > 0 ? max_faces : default_max_faces(q),
                                 totally ? EnumerationMode::totally_elementary : EnumerationMode::elementary, threads};
            auto catalog = totally ? enumerate_totally_elementary(task) : enumerate_elementary(task);
            if (!family_filter.empty())
                std::erase_if(catalog, [&](const CatalogEntry& e) {
                    const std::string name = family_kind_name(e.family.kind);
                    return family_filter == "sporadic" ? !is_sporadic(e.family) : name != family_filter;
                });
            if (format == "summary") {
                const std::string text = summary(catalog);
                std::cout << text;
                if (!out.empty()) {
                    fs::create_directories(out);
                    write_file((fs::path(out) / "summary.txt").string(), text);
                }
            } else {
                fs::create_directories(out);
                for (int i = 0; i < static_cast<int>(catalog.size()); ++i) {
                    const auto& e = catalog[i];
                    const std::string stem = padded(i) + "_f" + std::to_string(e.face_count);
                    if (format == "json")
                        write_file((fs::path(out) / (stem + ".json")).string(), entry_json(e, i));
                    else
                        write_file((fs::path(out) / (stem + ".svg")).string(), render_svg(e.polycycle));
                }
                std::cout << "wrote " << catalog.size() << " files to " << out << "\n";
            }
        } else if (*decompose_cmd) {
            const Decomposition d = decompose(read_json(read_file(file)));
            fs::create_directories(out);
            for (std::size_t i = 0; i < d.pieces.size(); ++i)
                write_file((fs::path(out) / ("piece_" + padded(static_cast<int>(i)) + ".json")).string(),
                           write_json(d.pieces[i]));
            std::cout << d.pieces.size() << " pieces, " << d.seams.size() << " seams\n";
        } else if (*agglomerate_cmd) {
            const Polycycle a = read_json(read_file(file));
            const Polycycle b = read_json(read_file(file_b));
            emit(write_json(agglomerate(a, edge_a, b, edge_b, flip)), out);
        } else if (*family_cmd) {
            Polycycle p = [&] {
                if (kind == "barrel") return barrel(m);
                if (kind == "snub-antiprism") return snub_antiprism(m);
                if (kind == "monocycle") return monocycle(i_size);
                if (kind == "triple") return gon_triple(i_size, j_size, k_size);
                return series_member(q, pair, n);
            }();
            emit(write_json(p), out);
        } else if (*classify_cmd) {
            const Polycycle p = read_json(read_file(file));
            std::vector<fs::path> files;
            for (const auto& f : fs::directory_iterator(catalog_dir))
                if (f.path().extension() == ".json") files.push_back(f.path());
            std::sort(files.begin(), files.end());
            std::vector<CatalogEntry> catalog;
            for (const auto& f : files) {
                CatalogEntry e{read_json(read_file(f.string())), {}, 0, 0, 0, 0, false, {}};
                e.code = canonical_code(e.polycycle);
                e.face_count = e.polycycle.proper_face_count();
                e.family = family_of(e.polycycle);
                catalog.push_back(std::move(e));
            }
            const Classification c = classify(p, catalog);
            std::cout << "family: " << c.family.to_string() << "\nentry: " << files[c.index].filename().string()
                      << "\n";
        } else if (*symmetry_cmd) {
            const Polycycle p = read_json(read_file(file));
            print_symmetry("Aut(P)", symmetry_of_polycycle(p));
            print_symmetry("Aut(G)", symmetry_of_graph(p));
        } else if (*render_cmd) {
            write_file(svg_out, render_svg(read_json(read_file(file))));
        }
    } catch (const PolycycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::io_error ? exit_io : exit_validation;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return 0;
}
