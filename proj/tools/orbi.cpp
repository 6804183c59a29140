// orbi: invariants of labeled complexes from the command line.
//
// Exit codes: 0 ok, 1 input error, 2 an identity check failed, 3 field not equivariant.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <orbi/orbi.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_identity = 2;
constexpr int exit_not_equivariant = 3;

void emit(const orbi::Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_chi(const std::string& path)
{
    const auto r = orbi::invariant_report(orbi::load_orbifold(path));
    emit(orbi::to_json(r));
    return r.all_hold() ? exit_ok : exit_identity;
}

int cmd_sectors(const std::string& path)
{
    const auto l = orbi::load_orbifold(path);
    emit(orbi::sectors_to_json(l, orbi::decompose(l)));
    return exit_ok;
}

int cmd_betti(const std::string& path)
{
    const auto l = orbi::load_orbifold(path);
    orbi::Json j{{"name", l.name}, {"betti", orbi::betti_numbers(l.complex)}};
    if (l.shift_data)
        j["orbifold_betti"] = orbi::betti_table_to_json(orbi::orbifold_betti_table(l, *l.shift_data));
    emit(j);
    return exit_ok;
}

int cmd_index(const std::string& expr, int order, double radius, int samples)
{
    if (order < 1)
        throw orbi::BadParams("--order must be >= 1");
    const auto field = orbi::parse_field(expr);
    const auto chart = orbi::rotation_chart(order);
    orbi::Json j{{"field", expr}, {"order", order}, {"radius", radius}};
    const bool equivariant = orbi::equivariance_check(field, chart);
    j["equivariant"] = equivariant;
    if (!equivariant)
    {
        emit(j);
        std::cerr << "error: field '" << expr << "' is not equivariant under Z" << order << '\n';
        return exit_not_equivariant;
    }
    j["winding"] = orbi::winding_index(field, radius, samples);
    j["index"] = orbi::to_string(orbi::orbifold_index(field, chart, radius, samples));
    emit(j);
    return exit_ok;
}

int cmd_example(const std::string& name, const orbi::gallery::ExampleParams& params, const std::string& out)
{
    const auto l = orbi::gallery::example(name, params);
    if (out.empty())
        emit(orbi::to_json(l));
    else
        orbi::save_orbifold(l, out);
    return exit_ok;
}

int cmd_validate(const std::string& path)
{
    const auto l = orbi::labeled_from_json_unchecked(orbi::parse_json_text(orbi::read_file(path)));
    const auto problems = orbi::validate(l);
    emit({{"name", l.name}, {"valid", problems.empty()}, {"violations", problems}});
    return problems.empty() ? exit_ok : exit_input;
}

int cmd_selfcheck(std::uint64_t seed, int count)
{
    int failures = 0;
    for (int i = 0; i < count; ++i)
        for (bool with_boundary : {false, true})
        {
            orbi::RandomComplexOptions opt;
            opt.with_boundary = with_boundary;
            const auto l = orbi::random_labeled_complex(seed + static_cast<std::uint64_t>(i), opt);
            const auto r = orbi::invariant_report(l);
            if (!r.all_hold())
            {
                ++failures;
                std::cerr << "identity failure on " << l.name << (with_boundary ? " (boundary)" : "") << '\n';
            }
        }
    emit({{"seed", seed}, {"count", count}, {"failures", failures}});
    return failures == 0 ? exit_ok : exit_identity;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orbifold invariants of labeled complexes"};
    app.require_subcommand(1);

    std::string path;
    auto* chi = app.add_subcommand("chi", "Euler characteristics and identity checks");
    chi->add_option("path", path, "orbifold JSON file")->required();
    auto* sectors = app.add_subcommand("sectors", "twisted sector listing");
    sectors->add_option("path", path, "orbifold JSON file")->required();
    auto* betti = app.add_subcommand("betti", "Betti numbers and orbifold Betti table");
    betti->add_option("path", path, "orbifold JSON file")->required();
    auto* validate = app.add_subcommand("validate", "list labeling violations");
    validate->add_option("path", path, "orbifold JSON file")->required();

    std::string field;
    int order = 1;
    double radius = 1.0;
    int samples = orbi::winding_start_samples;
    auto* index = app.add_subcommand("index", "orbifold index of a planar field at a cone point");
    index->add_option("--field", field, "polynomial in z and conj(z)")->required();
    index->add_option("--order", order, "order k of the rotation group");
    index->add_option("--radius", radius, "sampling radius")->check(CLI::PositiveNumber);
    index->add_option("--samples", samples, "initial number of samples")->check(CLI::PositiveNumber);

    std::string name, out;
    orbi::gallery::ExampleParams params;
    auto* example = app.add_subcommand("example", "write a gallery example");
    example->add_option("name", name, "example name")->required();
    example->add_option("--k", params.k, "first order parameter");
    example->add_option("--l", params.l, "second order parameter");
    example->add_option("--group", params.group, "cyclic:n or dihedral:n");
    example->add_option("--out", out, "output path (default: stdout)");

    std::uint64_t seed = 1;
    int count = 100;
    auto* selfcheck = app.add_subcommand("selfcheck", "identity checks on random labeled complexes");
    selfcheck->add_option("--seed", seed, "first seed");
    selfcheck->add_option("--count", count, "number of seeds")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*chi)
            return cmd_chi(path);
        if (*sectors)
            return cmd_sectors(path);
        if (*betti)
            return cmd_betti(path);
        if (*validate)
            return cmd_validate(path);
        if (*index)
            return cmd_index(field, order, radius, samples);
        if (*example)
            return cmd_example(name, params, out);
        if (*selfcheck)
            return cmd_selfcheck(seed, count);
    }
    catch (const orbi::NotEquivariant& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_not_equivariant;
    }
    catch (const orbi::Error& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const nlohmann::json::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
