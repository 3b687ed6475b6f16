// Command-line front end: every computation and verification of the library
// as a subcommand with machine-readable JSON output on stdout.  Timing goes
// to stderr so the payload stays byte-deterministic.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "exlie/json_io.hpp"
#include "exlie/lfactors.hpp"
#include "exlie/repspaces.hpp"

using namespace exlie;

namespace {

Coord parse_coord(const std::string& s, size_t want) {
    Coord out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (want && out.size() != want)
        throw CLI::ValidationError("expected " + std::to_string(want) + " comma-separated integers");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_orbits(const std::string& dstr) {
    const auto& g2 = g2_rational();
    if (dstr == "sym") {
        G2Algebra<RatFunc> g2s;
        RatFunc D = RatFunc::var();
        auto reps = orbit_representatives(g2s, D, false);
        json arr = json::array();
        for (const auto& r : reps)
            arr.push_back(json{{"name", r.name},
                               {"stabilizer", r.stabilizer},
                               {"stabilizer_dim", r.stabilizer_dim}});
        emit(json{{"D", "sym"}, {"square", false}, {"representatives", arr}});
        return 0;
    }
    Rat D = parse_rat(dstr);
    if (sgn(D) == 0) throw CLI::ValidationError("D must be nonzero");
    bool square = rat_is_square(D);
    auto reps = orbit_representatives(g2, D, square, square ? *rat_sqrt(D) : Rat(0));
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reps) {
        bool member = omega_membership(r.rep, D).ok;
        ok = ok && member;
        arr.push_back(json{{"name", r.name},
                           {"representative", albert_json(r.rep)},
                           {"stabilizer", r.stabilizer},
                           {"stabilizer_dim", r.stabilizer_dim},
                           {"membership", member},
                           {"rank", albert_rank(r.rep)}});
    }
    emit(json{{"D", rat_str(D)}, {"square", square}, {"representatives", arr}});
    return ok ? 0 : 1;
}

int run_char_match(const std::string& dstr) {
    const auto& g2 = g2_rational();
    if (dstr == "sym") {
        G2Algebra<RatFunc> g2s;
        RatFunc D = RatFunc::var();
        auto f = induced_binary_cubic(g2s, D, false);
        auto disc = discriminant(f);
        bool cls = (disc / D).is_square();
        emit(json{{"D", "sym"},
                  {"form", json::array({f.a.str(), f.b.str(), f.c.str(), f.d.str()})},
                  {"disc", disc.str()},
                  {"class_matches_D", cls}});
        return cls ? 0 : 1;
    }
    Rat D = parse_rat(dstr);
    if (sgn(D) == 0) throw CLI::ValidationError("D must be nonzero");
    bool square = rat_is_square(D);
    Rat d = square ? *rat_sqrt(D) : Rat(0);
    auto f = induced_binary_cubic(g2, D, square, d);
    bool cls = square_class_of_disc(f) == square_class(D);
    json out{{"D", rat_str(D)},
             {"square", square},
             {"form", cubic_json(f)},
             {"disc", rat_str(discriminant(f))},
             {"disc_square_class", rat_str(square_class_of_disc(f))},
             {"class_of_D", rat_str(square_class(D))},
             {"class_matches_D", cls}};
    bool ok = cls;
    if (square) {
        std::array<std::array<Rat, 2>, 2> g{{{-inverse(d), Rat(0)}, {Rat(0), inverse(d)}}};
        bool equiv = gl2_act(g, f) == BinaryCubic<Rat>{Rat(0), Rat(1), Rat(-1), Rat(0)};
        out["gl2_witness"] = json{{"g", json::array({rat_str(g[0][0]), rat_str(g[0][1]),
                                                     rat_str(g[1][0]), rat_str(g[1][1])})},
                                  {"target", json::array({"0", "1", "-1", "0"})},
                                  {"match", equiv}};
        ok = ok && equiv;
    }
    emit(out);
    return ok ? 0 : 1;
}

int run_cubic(const std::string& form) {
    Coord c = parse_coord(form, 4);
    BinaryCubic<Rat> f{Rat(c[0]), Rat(c[1]), Rat(c[2]), Rat(c[3])};
    auto ring = cubic_ring(f);
    json table = json::array();
    for (int x = 0; x < 3; ++x) {
        json row = json::array();
        for (int y = 0; y < 3; ++y)
            row.push_back(json::array({rat_str(ring.table[x][y][0]), rat_str(ring.table[x][y][1]),
                                       rat_str(ring.table[x][y][2])}));
        table.push_back(row);
    }
    Rat disc = discriminant(f);
    emit(json{{"form", cubic_json(f)},
              {"structure_constants", table},
              {"disc", rat_str(disc)},
              {"disc_square_class", rat_str(square_class(disc))},
              {"etale", sgn(disc) != 0}});
    return 0;
}

int run_branch(const std::string& lamstr) {
    Coord lam = parse_coord(lamstr, 3);
    auto u3 = branch_to_u3(lam);
    json types = json::array();
    Int total = 0;
    for (const auto& [hw, mult] : u3) {
        types.push_back(json{{"highest_weight", hw}, {"multiplicity", mult}});
        total += reps::gl3_dim(hw) * mult;
    }
    long triv = sl2cubed_trivial_multiplicity({lam, 0});
    emit(json{{"lambda", lam},
              {"u3_types", types},
              {"dimension", weyl_dimension(c3_system(), lam).get_str()},
              {"u3_mass", total.get_str()},
              {"sl2cubed_trivial_multiplicity", triv}});
    return 0;
}

int run_packets(const std::string& group, const std::string& weight) {
    json out;
    if (group == "sp6") {
        out = json{{"group", group}, {"packet", packet_json(enumerate_packet_sp6(parse_coord(weight, 3)))}};
    } else if (group == "pgsp6") {
        Coord lam = parse_coord(weight, 0);
        Weight w;
        if (lam.size() == 4) {
            w.v = {lam[0], lam[1], lam[2]};
            w.c = lam[3];
        } else if (lam.size() == 3) {
            w.v = lam;
            w.c = 0;
        } else {
            throw CLI::ValidationError("pgsp6 weight takes 3 or 4 coordinates");
        }
        out = json{{"group", group}, {"packet", packet_json(enumerate_packet_pgsp6(w))}};
    } else if (group == "g2") {
        out = json{{"group", group}, {"packet", packet_json(g2_packet(parse_coord(weight, 2)))}};
    } else {
        throw CLI::ValidationError("group must be one of sp6, pgsp6, g2");
    }
    emit(out);
    return 0;
}

int run_theta(long x, long y) {
    auto t = theta_arch_param(x, y);
    Coord lam4 = t.lambda.v;
    lam4.push_back(*t.lambda.c);
    emit(json{{"x", x}, {"y", y}, {"hc_param", t.hc_param}, {"lambda", lam4}});
    return 0;
}

int run_invariants(const std::string& lamstr, long mu, bool has_mu) {
    Coord lam = parse_coord(lamstr, 0);
    if (lam.size() == 4) {
        if (lam[3] != 0) throw CLI::ValidationError("central character must be 0");
        lam.pop_back();
    }
    if (lam.size() != 3) throw CLI::ValidationError("lambda takes 3 or 4 coordinates");
    json out = json::array();
    bool ok = true;
    long lo = has_mu ? mu : lam[2], hi = has_mu ? mu : lam[1];
    for (long m = lo; m <= hi; ++m) {
        auto r = reps::theorem41_check(lam, m);
        ok = ok && r.x0_nonzero && r.vproj_nonzero && r.cartan_nonzero;
        out.push_back(json{{"lambda", r.lambda},
                           {"mu", r.mu},
                           {"x0_nonzero", r.x0_nonzero},
                           {"vproj_nonzero", r.vproj_nonzero},
                           {"cartan_nonzero", r.cartan_nonzero},
                           {"basis_rank", r.basis_rank}});
    }
    auto p = reps::prop46_check(lam);
    ok = ok && p.ok;
    emit(json{{"checks", out},
              {"basis_rank_expected", p.expected},
              {"rank_lambda_prime", p.rank_lambda_prime},
              {"rank_lambda_bar", p.rank_lambda_bar},
              {"pass", ok}});
    return ok ? 0 : 1;
}

int run_lfactor(const std::string& u1s, const std::string& u2s, bool symbolic, long ell) {
    json out;
    bool ok = true;
    if (symbolic) {
        auto stde = std_eigenvalues_symbolic();
        auto spine = spin_eigenvalues_symbolic();
        json se = json::array(), pe = json::array();
        for (const auto& m : stde) se.push_back(m.str());
        for (const auto& m : spine) pe.push_back(m.str());
        ok = factorization_check_symbolic();
        out = json{{"symbolic", true},
                   {"std_eigs", se},
                   {"spin_eigs", pe},
                   {"spin_factor", local_factor_symbolic(spine).str()},
                   {"std_factor", local_factor_symbolic(stde).str()},
                   {"zeta_factor", "1/(1-X)"},
                   {"factorization_ok", ok}};
    } else {
        G2SatakeParam p{Scalar(parse_rat(u1s)), Scalar(parse_rat(u2s))};
        auto stde = std_eigenvalues(p);
        auto spine = spin_eigenvalues(p);
        auto poly = [](const std::vector<Scalar>& coeffs) {
            json arr = json::array();
            for (const auto& c : coeffs) arr.push_back(scalar_json(c));
            return arr;
        };
        json se = json::array(), pe = json::array();
        for (const auto& v : stde) se.push_back(scalar_json(v));
        for (const auto& v : spine) pe.push_back(scalar_json(v));
        ok = factorization_check(p);
        out = json{{"u1", rat_str(p.u1.re)},
                   {"u2", rat_str(p.u2.re)},
                   {"std_eigs", se},
                   {"spin_eigs", pe},
                   {"spin_factor", poly(local_factor(spine))},
                   {"std_factor", poly(local_factor(stde))},
                   {"zeta_factor", "1/(1-X)"},
                   {"factorization_ok", ok}};
        if (ell >= 2) out["hecke_poly"] = poly(hecke_polynomial(ell, p));
    }
    emit(out);
    return ok ? 0 : 1;
}

int run_suite(const SuiteResult& s) {
    emit(suite_json(s));
    return s.pass() ? 0 : 1;
}

int run_verify_all(bool csv) {
    auto t0 = std::chrono::steady_clock::now();
    auto suites = verify_all();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool all = true;
    for (const auto& s : suites) all = all && s.pass();
    if (csv) {
        std::cout << "suite,check,status\n";
        for (const auto& s : suites)
            for (const auto& c : s.checks)
                std::cout << s.name << "," << c.id << "," << (c.pass ? "pass" : "fail") << "\n";
    } else {
        emit(report_json(suites));
    }
    std::cerr << "verify-all completed in " << secs << "s\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational toolkit for split octonions, G2 orbits, "
                 "symplectic branching, and local L-factors"};
    app.require_subcommand(1);

    std::string dstr, form, lamstr, weight, group, u1s = "1", u2s = "1";
    long x = 0, y = 0, mu = 0, ell = 0;
    bool symbolic = false, csv = false;

    app.add_subcommand("octonion-axioms", "verify the octonion algebra axioms");
    app.add_subcommand("g2-build", "build g2 and verify its structure");
    auto* orb = app.add_subcommand("orbits", "rank-one orbit representatives and stabilizers");
    orb->add_option("--D", dstr, "rational p/q or sym")->required();
    auto* cm = app.add_subcommand("char-match", "character comparison through the induced cubic");
    cm->add_option("--D", dstr, "rational p/q or sym")->required();
    auto* cu = app.add_subcommand("cubic", "cubic ring of a binary cubic form");
    cu->add_option("--form", form, "a,b,c,d")->required();
    auto* br = app.add_subcommand("branch", "restriction of a symplectic representation");
    br->add_option("--lambda", lamstr, "l1,l2,l3")->required();
    auto* pk = app.add_subcommand("packets", "discrete series packet data");
    pk->add_option("--group", group, "sp6, pgsp6 or g2")->required();
    pk->add_option("--weight", weight, "weight coordinates")->required();
    auto* th = app.add_subcommand("theta-param", "archimedean theta parameter");
    th->add_option("--x", x)->required();
    th->add_option("--y", y)->required();
    auto* inv = app.add_subcommand("invariants", "invariant-vector nonvanishing checks");
    inv->add_option("--lambda", lamstr, "l1,l2,l3[,c]")->required();
    auto* muopt = inv->add_option("--mu", mu);
    auto* lf = app.add_subcommand("lfactor", "Satake eigenvalues and local factors");
    lf->add_option("--u1", u1s);
    lf->add_option("--u2", u2s);
    lf->add_flag("--symbolic", symbolic);
    lf->add_option("--ell", ell);
    auto* va = app.add_subcommand("verify-all", "run the complete verification report");
    va->add_flag("--csv", csv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("octonion-axioms")) return run_suite(verify_octonion_axioms());
        if (app.got_subcommand("g2-build")) return run_suite(verify_g2_construction());
        if (app.got_subcommand("orbits")) return run_orbits(dstr);
        if (app.got_subcommand("char-match")) return run_char_match(dstr);
        if (app.got_subcommand("cubic")) return run_cubic(form);
        if (app.got_subcommand("branch")) return run_branch(lamstr);
        if (app.got_subcommand("packets")) return run_packets(group, weight);
        if (app.got_subcommand("theta-param")) return run_theta(x, y);
        if (app.got_subcommand("invariants")) return run_invariants(lamstr, mu, muopt->count() > 0);
        if (app.got_subcommand("lfactor")) return run_lfactor(u1s, u2s, symbolic, ell);
        if (app.got_subcommand("verify-all")) return run_verify_all(csv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
