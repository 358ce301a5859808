// Command line front end: batch subcommands over an algebra file and an
// optional surface file. See README for the formats.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "gentle/cli.hpp"

using namespace gentle;

int main(int argc, char** argv) {
    CLI::App app{"combinatorial calculus for gentle algebras"};
    app.require_subcommand(1);

    std::string algebra_file, surface_file;
    bool structured = false, from_algebra = false;
    int depth = -1;
    int64_t prime = kDefaultPrime;
    app.add_option("--algebra,-a", algebra_file, "algebra description file");
    app.add_option("--surface", surface_file, "surface description file");
    app.add_flag("--structured", structured, "line-based key=value output");
    app.add_flag("--from-algebra", from_algebra,
                 "derive the surface from the algebra when one is needed");
    app.add_option("--depth", depth, "materialization depth for periodic resolutions");
    app.add_option("--prime", prime, "oracle field characteristic");

    int max_len = 3, max_weight = 5;
    cli::WalkRequest req;
    bool injective = false, from_band = false, to_band = false;
    std::string from_text, to_text, via_text, at_point, dissection_file;
    int heart_len = 3;

    auto add_module_opts = [&](CLI::App* c) {
        c->add_option("--string", req.string_text, "string as a walk, e.g. \"a5 a7^- a6\"");
        c->add_option("--band", req.band_text, "band as a cyclic walk");
        c->add_option("--m", req.multiplicity, "band multiplicity");
        c->add_option("--lambda", req.lambda, "band parameter tag");
    };

    CLI::App* validate = app.add_subcommand("validate", "gentleness report");
    CLI::App* strings = app.add_subcommand("strings", "enumerate canonical strings");
    strings->add_option("--max-len", max_len, "maximal walk length");
    CLI::App* bands = app.add_subcommand("bands", "enumerate canonical bands");
    bands->add_option("--max-len", max_len, "maximal walk length");
    CLI::App* resolve = app.add_subcommand("resolve", "minimal projective/injective resolution");
    add_module_opts(resolve);
    resolve->add_flag("--injective", injective, "injective side");
    CLI::App* dims = app.add_subcommand("dims", "projective and injective dimension");
    add_module_opts(dims);
    CLI::App* findim = app.add_subcommand("findim", "finitistic dimension with witnesses");
    CLI::App* surface = app.add_subcommand("surface", "emit the polygon complex");
    CLI::App* dot = app.add_subcommand("dot", "quiver in DOT format");
    CLI::App* ext = app.add_subcommand("ext", "extension table with intersection labels");
    ext->add_option("--from", from_text, "source walk")->required();
    ext->add_option("--to", to_text, "target walk")->required();
    ext->add_flag("--from-is-band", from_band, "interpret the source as a band");
    ext->add_flag("--to-is-band", to_band, "interpret the target as a band");
    ext->add_option("--max-weight", max_weight, "largest weight in the table");
    CLI::App* yoneda = app.add_subcommand("yoneda", "extension sequence of an intersection");
    yoneda->add_option("--from", from_text, "source walk")->required();
    yoneda->add_option("--to", to_text, "target walk")->required();
    yoneda->add_option("--at", at_point, "marked point (polygon name)")->required();
    yoneda->add_option("--compose", via_text, "middle walk: compose two extensions");
    CLI::App* heart = app.add_subcommand("heart", "graded dissection report");
    heart->add_option("dissection", dissection_file, "dissection file")->required();
    heart->add_option("--max-len", heart_len, "enumerate indecomposables up to this length");

    CLI::App* oracle = app.add_subcommand("oracle", "recompute via linear algebra and diff");
    oracle->require_subcommand(1);
    CLI::App* o_resolve = oracle->add_subcommand("resolve");
    add_module_opts(o_resolve);
    CLI::App* o_dims = oracle->add_subcommand("dims");
    add_module_opts(o_dims);
    CLI::App* o_findim = oracle->add_subcommand("findim");
    CLI::App* o_ext = oracle->add_subcommand("ext");
    o_ext->add_option("--from", from_text)->required();
    o_ext->add_option("--to", to_text)->required();
    o_ext->add_flag("--from-is-band", from_band);
    o_ext->add_flag("--to-is-band", to_band);
    o_ext->add_option("--max-weight", max_weight);
    CLI::App* o_yoneda = oracle->add_subcommand("yoneda");
    o_yoneda->add_option("--from", from_text)->required();
    o_yoneda->add_option("--to", to_text)->required();
    o_yoneda->add_option("--at", at_point)->required();
    CLI::App* o_heart = oracle->add_subcommand("heart");
    o_heart->add_option("dissection", dissection_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    cli::Session s;
    s.structured = structured;
    s.prime = prime;
    s.depth = depth;
    bool need_surface = ext->parsed() || yoneda->parsed() || heart->parsed() ||
                        (dims->parsed() && (from_algebra || !surface_file.empty())) ||
                        (oracle->parsed() && (o_ext->parsed() || o_yoneda->parsed() ||
                                              o_heart->parsed()));
    if (int rc = cli::load_inputs(s, algebra_file, surface_file, from_algebra, need_surface,
                                  std::cerr))
        return rc;

    std::ostream& out = std::cout;
    std::ostream& err = std::cerr;
    if (validate->parsed()) return cli::cmd_validate(s, out);
    if (strings->parsed()) return cli::cmd_strings(s, max_len, out);
    if (bands->parsed()) return cli::cmd_bands(s, max_len, out);
    if (resolve->parsed()) return cli::cmd_resolve(s, req, injective, out, err);
    if (dims->parsed()) return cli::cmd_dims(s, req, out, err);
    if (findim->parsed()) return cli::cmd_findim(s, out);
    if (surface->parsed()) return cli::cmd_surface(s, out);
    if (dot->parsed()) return cli::cmd_dot(s, out);
    if (ext->parsed())
        return cli::cmd_ext(s, from_text, to_text, from_band, to_band, max_weight, out, err);
    if (yoneda->parsed())
        return cli::cmd_yoneda(s, from_text, via_text, to_text, at_point, 1, out, err);
    if (heart->parsed()) return cli::cmd_heart(s, dissection_file, heart_len, out, err);
    if (oracle->parsed()) {
        if (o_resolve->parsed()) return cli::oracle_resolve(s, req, out, err);
        if (o_dims->parsed()) return cli::oracle_dims(s, req, out, err);
        if (o_findim->parsed()) return cli::oracle_findim(s, out);
        if (o_ext->parsed())
            return cli::oracle_ext(s, from_text, to_text, from_band, to_band, max_weight, out,
                                   err);
        if (o_yoneda->parsed())
            return cli::oracle_yoneda(s, from_text, to_text, at_point, out, err);
        if (o_heart->parsed()) return cli::oracle_heart(s, dissection_file, out, err);
    }
    err << "usage: unknown command\n";
    return 1;
}
