#include "gsrs/cutout.hpp"
#include "gsrs/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <thread>

using namespace gsrs;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

QComplex parse_point(const std::string& s) {
    try {
        return parse_complex(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Rational parse_q(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

GaussianInt parse_gaussian(const std::string& s) {
    QComplex z = parse_point(s);
    if (z.re.get_den() != 1 || z.im.get_den() != 1) throw UsageError("expected a Gaussian integer a,b: " + s);
    return {z.re.get_num(), z.im.get_num()};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

const char* verdict_name(Finiteness::Verdict v) {
    switch (v) {
        case Finiteness::Verdict::Finite: return "Finite";
        case Finiteness::Verdict::Infinite: return "Infinite";
        case Finiteness::Verdict::Unknown: return "Unknown";
    }
    return "?";
}

// Runs f(n) for n in [from, to] on `jobs` threads; results in order.
template <class F>
auto parallel_range(long from, long to, unsigned jobs, F f) {
    using R = decltype(f(from));
    std::vector<R> out(static_cast<std::size_t>(to - from + 1));
    std::atomic<long> next{from};
    auto worker = [&] {
        for (long n = next++; n <= to; n = next++) out[static_cast<std::size_t>(n - from)] = f(n);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < std::max(jobs, 1u); ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian shift radix systems: orbits, cutouts, the region G_C and its verification"};
    app.require_subcommand(1);

    std::string r_arg, a_arg, out_path, window_arg = "0,0,1,1", radius_arg = "1/4";
    std::size_t budget = kDefaultOrbitBudget, witness_budget = kDefaultWitnessBudget, tile_budget = 10000;
    int family = 0;
    long n = 1, m = 0, max_n = 30, pikes = 10000, bits = 256, from = 7, to = 30, cut_n = 0;
    bool literal = false;
    std::vector<int> omit;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    int seed = 1;

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a under gamma_r");
    orbit_cmd->add_option("--r", r_arg, "parameter x,y")->required();
    orbit_cmd->add_option("--a", a_arg, "starting point a,b")->required();
    orbit_cmd->add_option("--budget", budget);

    auto* decide_cmd = app.add_subcommand("decide", "finiteness of gamma_r");
    decide_cmd->add_option("--r", r_arg)->required();
    decide_cmd->add_option("--budget", witness_budget);

    auto* wit_cmd = app.add_subcommand("witnesses", "witness set and witness polyhedron of r");
    wit_cmd->add_option("--r", r_arg)->required();
    wit_cmd->add_option("--budget", witness_budget);

    auto* cut_cmd = app.add_subcommand("cutout", "cycle and cutout polygon of a family instance");
    cut_cmd->add_option("--family", family)->required()->check(CLI::Range(0, kFamilyCount - 1));
    cut_cmd->add_option("--n", n)->required();
    cut_cmd->add_option("--m", m);
    cut_cmd->add_flag("--literal", literal, "expand the generators exactly as printed");

    auto* fam_cmd = app.add_subcommand("family-check", "compare every family instance with the catalog");
    fam_cmd->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

    auto* contains_cmd = app.add_subcommand("region-contains", "membership in G_C");
    contains_cmd->add_option("--r", r_arg)->required();

    auto* svg_cmd = app.add_subcommand("boundary-svg", "SVG of the boundary chain");
    svg_cmd->add_option("--pikes", pikes)->check(CLI::Range(7L, 100000L));
    svg_cmd->add_option("--window", window_arg, "x0,y0,x1,y1 (decimal)");
    svg_cmd->add_option("--cutouts", cut_n, "also draw the cutouts of selection(n)");
    svg_cmd->add_option("--out", out_path);

    auto* measure_cmd = app.add_subcommand("measure", "perimeter and area brackets");
    measure_cmd->add_option("--pikes", pikes)->check(CLI::Range(8L, 100000000L));
    measure_cmd->add_option("--bits", bits)->check(CLI::Range(64L, 65536L));

    auto* sector_cmd = app.add_subcommand("verify-sector", "cutout coverage of regular sectors");
    sector_cmd->add_option("--from", from)->check(CLI::Range(7L, 100000L));
    sector_cmd->add_option("--to", to)->check(CLI::Range(7L, 100000L));
    sector_cmd->add_option("--omit", omit, "families left out of the covers");
    sector_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* prefix_cmd = app.add_subcommand("verify-prefix", "cutout coverage of the irregular prefix");

    auto* tiles_cmd = app.add_subcommand("verify-tiles", "witness-tile flood fill of G_C in a disk");
    tiles_cmd->add_option("--radius", radius_arg, "target radius p/q < 1");
    tiles_cmd->add_option("--budget", tile_budget)->check(CLI::PositiveNumber);
    tiles_cmd->add_option("--out", out_path, "write the full tile report here");

    auto* crit_cmd = app.add_subcommand("critical-check", "orbit lemma, step rule and rotation cycles");
    crit_cmd->add_option("--from", from)->check(CLI::Range(2L, 1000L));
    crit_cmd->add_option("--to", to)->check(CLI::Range(2L, 1000L));
    crit_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*orbit_cmd) {
            auto res = orbit(parse_point(r_arg), parse_gaussian(a_arg), budget);
            Json j;
            if (auto* z = std::get_if<ReachesZero>(&res)) {
                j = {{"result", "reaches_zero"}, {"steps", z->steps}};
            } else if (auto* c = std::get_if<EntersCycle>(&res)) {
                j = {{"result", "cycle"}, {"preperiod", c->preperiod}, {"cycle", to_json(c->cycle)}};
            } else {
                j = {{"result", "budget_exceeded"}};
            }
            emit(j);
            return 0;
        }
        if (*decide_cmd) {
            auto d = decide_finiteness(parse_point(r_arg), witness_budget);
            Json j{{"verdict", verdict_name(d.verdict)}, {"witness_count", d.witness_count}};
            j["finite"] = d.verdict == Finiteness::Verdict::Unknown ? Json(nullptr)
                                                                     : Json(d.verdict == Finiteness::Verdict::Finite);
            if (d.witness) j["cycle"] = to_json(*d.witness);
            emit(j);
            return 0;
        }
        if (*wit_cmd) {
            QComplex r = parse_point(r_arg);
            auto g = witness_graph(r, witness_budget);
            if (!g) {
                emit({{"result", "budget_exceeded"}});
                return 1;
            }
            Json v = Json::array();
            for (const auto& z : g->vertices) v.push_back(to_json(z));
            emit({{"count", g->vertices.size()}, {"witnesses", std::move(v)}, {"polyhedron", to_json(witness_polyhedron(*g))}});
            return 0;
        }
        if (*cut_cmd) {
            FamilyInstance inst{family, n, m};
            if (!is_valid(inst)) throw UsageError(to_string(inst) + " is outside the family's range");
            Cycle c = expand_generators(inst, literal);
            Cell p = cycle_polygon(c);
            Json j{{"instance", to_json(inst)}, {"cycle", to_json(c)}, {"polygon", to_json(p)},
                   {"is_cycle", !p.empty()}};
            if (auto e = expected_cutout(inst)) j["catalog_match"] = (*e == p);
            emit(j);
            return 0;
        }
        if (*fam_cmd) {
            std::size_t checked = 0;
            Json bad = Json::array();
            for (int f = 0; f < kFamilyCount; ++f) {
                for (long k = 1; k <= max_n; ++k) {
                    for (const auto& inst : valid_instances(f, k)) {
                        ++checked;
                        auto e = expected_cutout(inst);
                        if (!e || cycle_polygon(expand_generators(inst)) != *e) bad.push_back(to_string(inst));
                    }
                }
            }
            bool ok = bad.empty();
            emit({{"checked", checked}, {"mismatches", std::move(bad)}, {"verdict", ok ? "Pass" : "Failed"}});
            return ok ? 0 : 1;
        }
        if (*contains_cmd) {
            emit({{"contains", region_contains(parse_point(r_arg))}});
            return 0;
        }
        if (*svg_cmd) {
            double w[4];
            {
                std::stringstream ss(window_arg);
                std::string part;
                for (int i = 0; i < 4; ++i) {
                    if (!std::getline(ss, part, ',')) throw UsageError("--window expects x0,y0,x1,y1");
                    w[i] = std::stod(part);
                }
                if (!(w[0] < w[2] && w[1] < w[3])) throw UsageError("--window must satisfy x0 < x1, y0 < y1");
            }
            std::vector<Cell> cells;
            if (cut_n > 0) {
                for (const auto& inst : selection(cut_n)) cells.push_back(cycle_polygon(expand_generators(inst)));
            }
            std::string svg = boundary_svg(pikes, cells, w[0], w[1], w[2], w[3]);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream(out_path) << svg;
            }
            return 0;
        }
        if (*measure_cmd) {
            emit({{"n_pikes", pikes},
                  {"precision_bits", bits},
                  {"perimeter", to_json(perimeter_estimate(pikes, bits))},
                  {"area", to_json(area_estimate(pikes, bits))}});
            return 0;
        }
        if (*sector_cmd) {
            if (from > to) throw UsageError("--from must not exceed --to");
            auto reports = parallel_range(from, to, jobs, [&](long k) { return verify_sector(k, omit); });
            Json arr = Json::array();
            bool ok = true;
            for (const auto& r : reports) {
                ok = ok && r.covered;
                arr.push_back(to_json(r));
            }
            emit({{"sectors", std::move(arr)}, {"verdict", ok ? "Covered" : "Failed"}});
            return ok ? 0 : 1;
        }
        if (*prefix_cmd) {
            auto r = verify_prefix();
            emit(to_json(r));
            return r.covered ? 0 : 1;
        }
        if (*tiles_cmd) {
            Rational radius = parse_q(radius_arg);
            if (radius <= 0 || radius >= 1) throw UsageError("--radius must lie in (0, 1)");
            auto r = flood_fill_tiles(radius, tile_budget);
            Json full = to_json(r);
            if (!out_path.empty()) std::ofstream(out_path) << full.dump(1) << '\n';
            std::size_t finite = std::count_if(r.tiles.begin(), r.tiles.end(), [](const Tile& t) { return t.finite; });
            emit({{"radius", to_json(radius)}, {"tiles", r.tiles.size()}, {"finite_tiles", finite},
                  {"uncovered", r.uncovered.size()}, {"verdict", full["verdict"]}});
            return r.verdict == TileReport::Verdict::Covered ? 0 : 1;
        }
        if (*crit_cmd) {
            if (from < 2 || from > to) throw UsageError("need 2 <= --from <= --to");
            std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
            Json rows = Json::array();
            bool ok = true;
            for (long k = from; k <= to; ++k) {
                // r = (x, y) with 0 < y (k-1) <= x and |r| <= 1
                std::uniform_int_distribution<long> u(1, 1000);
                Rational rx, ry;
                do {
                    rx = make_rational(u(rng), 1001);
                    ry = rx * make_rational(u(rng), 1000) / (k - 1);
                } while (rx * rx + ry * ry > 1);
                QComplex r{rx, ry};
                bool pass = critical_orbit_check(k, r);
                ok = ok && pass;
                rows.push_back({{"n", k}, {"r", to_json(r)}, {"orbit_lemma", pass}});
            }
            std::uniform_int_distribution<long> g(-1000, 1000);
            bool rot = true;
            for (int i = 0; i < 100; ++i) rot = rot && rotation_cycle_check({g(rng), g(rng)});
            ok = ok && rot;
            emit({{"orbit_checks", std::move(rows)}, {"rotation_cycles", rot}, {"verdict", ok ? "Pass" : "Failed"}});
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
