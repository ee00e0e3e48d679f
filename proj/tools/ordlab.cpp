// ordlab: left-orders on finitely generated groups with peripheral Z^2 data.
//
// Subcommands: parse, ball, cone-search, classify-z2, slope, detect, cofinal,
// dynreal, glue, certify-nonorderable.  Reports are JSON (stable key order);
// human summaries go to standard output.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordlab/amalgam.hpp"
#include "ordlab/jobs.hpp"
#include "ordlab/report.hpp"
#include "ordlab/svg.hpp"

using namespace ordlab;

namespace {

// exit codes: 0 analysis complete, 2 parse error, 3 path error,
// 4 resource cap, 5 usage error, 6 unsupported input
struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CliError(3, "cannot open '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::shared_ptr<const GroupBackend> load_group(const std::string& path) {
  try {
    return make_backend(parse_presentation(read_file(path)));
  } catch (const ParseError& e) {
    throw CliError(2, path + ": " + e.what());
  } catch (const UnsupportedPresentation& e) {
    throw CliError(6, path + ": " + e.what());
  } catch (const ResourceLimit& e) {
    throw CliError(4, path + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw CliError(2, path + ": " + e.what());
  }
}

Slope parse_slope_arg(const std::string& text) {
  auto s = parse_slope(text);
  if (!s) {
    throw CliError(5, "cannot parse slope '" + text + "'");
  }
  return *s;
}

// order specs: "lex:++", "lex:+-", ... for lexicographic fixtures;
// "line:<slope>[:side][:tie]" for Z^2 line orders
OrderOracle parse_order_spec(const std::string& spec,
                             std::shared_ptr<const GroupBackend> g) {
  if (spec.rfind("lex:", 0) == 0 && spec.size() == 6) {
    const bool qp = spec[4] == '+';
    const bool kp = spec[5] == '+';
    if ((spec[4] != '+' && spec[4] != '-') || (spec[5] != '+' && spec[5] != '-')) {
      throw CliError(5, "lex spec needs two signs, e.g. lex:+-");
    }
    switch (g->family()) {
      case Family::klein_bottle:
        return klein_lex_order(g, qp, kp);
      case Family::torus_knot:
        return torus_knot_lex_order(g, qp, kp);
      default:
        throw CliError(6, "lex orders are built in only for the Klein-bottle and "
                          "torus-knot families");
    }
  }
  if (spec.rfind("line:", 0) == 0) {
    std::vector<std::string> parts;
    std::string rest = spec.substr(5);
    size_t pos;
    while ((pos = rest.find(':')) != std::string::npos) {
      parts.push_back(rest.substr(0, pos));
      rest = rest.substr(pos + 1);
    }
    parts.push_back(rest);
    const Slope s = parse_slope_arg(parts[0]);
    const int side = parts.size() > 1 && parts[1] == "-" ? -1 : +1;
    const bool tie_minus = parts.size() > 2 && parts[2] == "-";
    auto orders = classify_line_orders(LatticeLine{s, +1}, g);
    if (!s.rational) {
      return orders[side > 0 ? 0 : 1];
    }
    if (side > 0) {
      return orders[tie_minus ? 2 : 0];
    }
    return orders[tie_minus ? 1 : 3];
  }
  throw CliError(5, "unknown order spec '" + spec + "' (want lex:SS or line:SLOPE[:S[:S]])");
}

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw CliError(3, "cannot write '" + out_path + "'");
    }
    out << text;
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw CliError(3, "cannot write '" + path + "'");
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlab: left-orders, positive cones, dynamic realisations and "
               "slope detection on finitely generated groups"};
  app.require_subcommand(1);

  bool no_timestamp = false;
  int jobs = 1;
  std::string out_path;
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from reports");
  app.add_option("--jobs", jobs, "worker count (output is identical for any value)")
      ->check(CLI::Range(1, 64));
  app.add_option("--out", out_path, "write the JSON report to this file");

  // ---- parse ----
  std::string parse_file;
  auto* cmd_parse = app.add_subcommand("parse", "parse a presentation file and echo it");
  cmd_parse->add_option("file", parse_file)->required();

  // ---- ball ----
  std::string ball_file;
  int ball_radius = 2;
  auto* cmd_ball = app.add_subcommand("ball", "enumerate a Cayley ball");
  cmd_ball->add_option("file", ball_file)->required();
  cmd_ball->add_option("--radius", ball_radius)->check(CLI::Range(0, 16));

  // ---- cone-search ----
  std::string cs_file, cs_slope_constraint, cs_cert_path;
  int cs_radius = 3;
  size_t cs_limit = 1 << 20;
  auto* cmd_cs = app.add_subcommand("cone-search",
                                    "enumerate consistent cones on a ball");
  cmd_cs->add_option("file", cs_file)->required();
  cmd_cs->add_option("--radius", cs_radius)->check(CLI::Range(1, 12));
  cmd_cs->add_option("--limit", cs_limit);
  cmd_cs->add_option("--slope-constraint", cs_slope_constraint,
                     "peripheral line constraint TORUS=SLOPE");
  cmd_cs->add_option("--emit-certificate", cs_cert_path,
                     "write an unsatisfiability certificate here");

  // ---- classify-z2 ----
  std::string cz_slope = "0/1";
  int cz_radius = 2;
  auto* cmd_cz = app.add_subcommand("classify-z2",
                                    "the 2 or 4 orders on Z^2 realising a line");
  cmd_cz->add_option("--slope", cz_slope)->required();
  cmd_cz->add_option("--radius", cz_radius)->check(CLI::Range(1, 8));

  // ---- slope ----
  std::string sl_file, sl_order = "lex:++", sl_torus;
  int sl_radius = 4;
  auto* cmd_sl = app.add_subcommand("slope", "detected slope of an order");
  cmd_sl->add_option("file", sl_file)->required();
  cmd_sl->add_option("--order", sl_order);
  cmd_sl->add_option("--torus", sl_torus, "peripheral name (default: first declared)");
  cmd_sl->add_option("--radius", sl_radius)->check(CLI::Range(1, 8));

  // ---- detect ----
  std::string dt_file, dt_order = "lex:++", dt_slope, dt_level = "weak", dt_torus, dt_epi,
      dt_svg;
  int dt_radius = 4, dt_rconj = 3;
  auto* cmd_dt = app.add_subcommand("detect", "weak/regular/strong slope detection");
  cmd_dt->add_option("file", dt_file)->required();
  cmd_dt->add_option("--slope", dt_slope)->required();
  cmd_dt->add_option("--level", dt_level)
      ->check(CLI::IsMember({"weak", "regular", "strong"}));
  cmd_dt->add_option("--order", dt_order);
  cmd_dt->add_option("--torus", dt_torus);
  cmd_dt->add_option("--epi", dt_epi, "epimorphism for strong detection (ab)");
  cmd_dt->add_option("--radius", dt_radius)->check(CLI::Range(1, 8));
  cmd_dt->add_option("--rconj", dt_rconj)->check(CLI::Range(0, 6));
  cmd_dt->add_option("--svg", dt_svg, "write a slope-circle plot here");

  // ---- cofinal ----
  std::string cf_file, cf_order = "lex:++", cf_element, cf_torus;
  int cf_radius = 4, cf_nmax = 0;
  bool cf_boundary = false;
  auto* cmd_cf = app.add_subcommand("cofinal", "cofinality checks");
  cmd_cf->add_option("file", cf_file)->required();
  cmd_cf->add_option("--order", cf_order);
  cmd_cf->add_option("--element", cf_element, "element to test (omit with --boundary)");
  cmd_cf->add_flag("--boundary", cf_boundary, "boundary-cofinality report");
  cmd_cf->add_option("--torus", cf_torus);
  cmd_cf->add_option("--radius", cf_radius)->check(CLI::Range(1, 8));
  cmd_cf->add_option("--nmax", cf_nmax);

  // ---- dynreal ----
  std::string dr_file, dr_order = "lex:++", dr_element, dr_svg;
  int dr_radius = 4;
  bool dr_fixed = false;
  auto* cmd_dr = app.add_subcommand("dynreal", "dynamic realisation on a window");
  cmd_dr->add_option("file", dr_file)->required();
  cmd_dr->add_option("--order", dr_order);
  cmd_dr->add_option("--radius", dr_radius)->check(CLI::Range(2, 6));
  cmd_dr->add_option("--element", dr_element, "element for the fixed-point report");
  cmd_dr->add_flag("--fixed-points", dr_fixed);
  cmd_dr->add_option("--svg", dr_svg, "write generator graphs as SVG");

  // ---- glue ----
  std::string gl_file, gl_assign;
  int gl_radius = 3, gl_rconj = 3;
  bool gl_bg = false;
  auto* cmd_gl = app.add_subcommand("glue", "gluing-graph coherence check");
  cmd_gl->add_option("file", gl_file)->required();
  cmd_gl->add_option("--assign", gl_assign,
                     "comma-separated slopes per vertex torus, declaration order")
      ->required();
  cmd_gl->add_option("--radius", gl_radius)->check(CLI::Range(1, 6));
  cmd_gl->add_option("--rconj", gl_rconj)->check(CLI::Range(0, 6));
  cmd_gl->add_flag("--bludov-glass", gl_bg,
                   "also run the two-family compatibility check on single-edge graphs");

  // ---- certify-nonorderable ----
  std::string cn_file, cn_cert_path;
  int cn_rmax = 4;
  auto* cmd_cn = app.add_subcommand("certify-nonorderable",
                                    "search for a torsion/closure obstruction");
  cmd_cn->add_option("file", cn_file)->required();
  cmd_cn->add_option("--rmax", cn_rmax)->check(CLI::Range(1, 8));
  cmd_cn->add_option("--emit-certificate", cn_cert_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_parse) {
      auto g = load_group(parse_file);
      Json res;
      res["family"] = family_name(g->family());
      res["generators"] = g->gen_names();
      res["relators"] = Json::array();
      for (auto& r : g->presentation().relators) {
        res["relators"].push_back(format_word(r, g->gen_names()));
      }
      res["peripherals"] = Json::array();
      for (auto& p : g->peripherals()) {
        res["peripherals"].push_back({{"name", p.name},
                                      {"mu", format_word(p.mu, g->gen_names())},
                                      {"lambda", format_word(p.lambda, g->gen_names())}});
      }
      res["echo"] = format_presentation(g->presentation());
      emit(report_envelope("parse", {{"file", parse_file}}, Json::object(), res,
                           !no_timestamp),
           out_path);
      std::cerr << "parsed: " << family_name(g->family()) << " with "
                << g->num_gens() << " generators\n";
      return 0;
    }

    if (*cmd_ball) {
      auto g = load_group(ball_file);
      Ball ball(g, ball_radius);
      Json res;
      res["size"] = ball.size();
      Json elems = Json::array();
      for (size_t i = 0; i < ball.size(); ++i) {
        elems.push_back({{"element", format_word(ball.at(i), g->gen_names())},
                         {"distance", ball.distance(i)}});
      }
      res["elements"] = elems;
      emit(report_envelope("ball", {{"file", ball_file}}, {{"radius", ball_radius}}, res,
                           !no_timestamp),
           out_path);
      std::cerr << "|B_" << ball_radius << "| = " << ball.size() << "\n";
      return 0;
    }

    if (*cmd_cs) {
      auto g = load_group(cs_file);
      std::vector<ConeConstraint> constraints;
      Json params{{"radius", cs_radius}, {"limit", cs_limit}};
      if (!cs_slope_constraint.empty()) {
        const auto eq = cs_slope_constraint.find('=');
        if (eq == std::string::npos) {
          throw CliError(5, "--slope-constraint wants TORUS=SLOPE");
        }
        const std::string torus = cs_slope_constraint.substr(0, eq);
        const Slope s = parse_slope_arg(cs_slope_constraint.substr(eq + 1));
        constraints.push_back(ConeConstraint::line(torus, s));
        params["constraint"] = {{"torus", torus}, {"slope", json_of(s)}};
      }
      SearchOptions opts;
      opts.solution_limit = cs_limit;
      auto res = search(g, cs_radius, constraints, opts);
      Json jres;
      jres["complete"] = res.complete;
      jres["unsat"] = res.unsat;
      jres["count"] = res.snapshots.size();
      Json cones = Json::array();
      for (auto& s : res.snapshots) {
        cones.push_back(s.serialise());
      }
      jres["cones"] = cones;
      if (res.unsat && !cs_cert_path.empty()) {
        Ball ball(g, cs_radius);
        write_text(cs_cert_path, render_certificate(*res.certificate, ball));
        jres["certificate_file"] = cs_cert_path;
      }
      emit(report_envelope("cone-search", {{"file", cs_file}}, params, jres, !no_timestamp),
           out_path);
      std::cerr << (res.unsat ? "unsatisfiable" : std::to_string(res.snapshots.size()) +
                                                      " cones")
                << " at radius " << cs_radius << "\n";
      return 0;
    }

    if (*cmd_cz) {
      const Slope s = parse_slope_arg(cz_slope);
      auto z2 = make_z2_backend();
      auto orders = classify_line_orders(LatticeLine{s, +1}, z2);
      Ball ball(z2, cz_radius);
      Json res;
      res["count"] = orders.size();
      Json snaps = Json::array();
      for (auto& o : orders) {
        snaps.push_back({{"order", o.provenance}, {"snapshot", snapshot(o, ball).serialise()}});
      }
      res["orders"] = snaps;
      emit(report_envelope("classify-z2", Json::object(),
                           {{"slope", json_of(s)}, {"radius", cz_radius}}, res, !no_timestamp),
           out_path);
      std::cerr << orders.size() << " orders realise the line of slope " << s.str() << "\n";
      return 0;
    }

    if (*cmd_sl) {
      auto g = load_group(sl_file);
      auto o = parse_order_spec(sl_order, g);
      const auto& P = sl_torus.empty() ? g->peripherals().at(0) : g->peripheral(sl_torus);
      auto est = slope_of_order(o, P, sl_radius);
      Json res;
      res["estimate"] = json_of(est);
      emit(report_envelope("slope", {{"file", sl_file}},
                           {{"order", sl_order}, {"torus", P.name}, {"radius", sl_radius}},
                           res, !no_timestamp),
           out_path);
      std::cerr << "slope of " << o.provenance << " on " << P.name << ": "
                << est.interval.str() << "\n";
      return 0;
    }

    if (*cmd_dt) {
      auto g = load_group(dt_file);
      const Slope s = parse_slope_arg(dt_slope);
      const auto& P = dt_torus.empty() ? g->peripherals().at(0) : g->peripheral(dt_torus);
      Json params{{"slope", json_of(s)}, {"level", dt_level}, {"radius", dt_radius},
                  {"rconj", dt_rconj}};
      Json res;
      DetectionVerdict verdict;
      if (dt_level == "strong") {
        if (dt_epi != "ab") {
          throw CliError(5, "strong detection needs --epi ab");
        }
        auto z = make_z_backend();
        std::optional<OrderOracle> kernel;
        if (g->family() == Family::klein_bottle) {
          kernel = klein_lex_order(g, true, true);
        } else if (g->family() == Family::torus_knot) {
          kernel = TorusKnotKernelOrder(g).as_oracle(true);
        }
        auto w = strong_detect_witness(g, P, s, ab_z_projection(g, z), z_order(z, true),
                                       kernel ? &*kernel : nullptr);
        verdict = w.verdict;
        res["phi_alpha"] = w.phi_alpha;
        if (w.induced && verdict.status == DetectionStatus::certified && dt_rconj > 0) {
          auto reg = regular_detect_check(*w.induced, P, s, dt_rconj, dt_radius);
          res["induced_regular_check"] = json_of(reg);
        }
      } else {
        auto o = parse_order_spec(dt_order, g);
        params["order"] = dt_order;
        verdict = dt_level == "weak"
                      ? weak_detect(o, P, s, dt_radius)
                      : regular_detect_check(o, P, s, dt_rconj, dt_radius, jobs);
      }
      res["verdict"] = json_of(verdict);
      if (!dt_svg.empty()) {
        std::vector<SlopeMark> marks;
        marks.push_back({s,
                         s.str() + " (" + status_name(verdict.status) + ")",
                         verdict.status == DetectionStatus::certified ? "#22aa55"
                                                                      : "#cc3333"});
        write_text(dt_svg, slope_circle_svg(marks));
        res["svg"] = dt_svg;
      }
      emit(report_envelope("detect", {{"file", dt_file}}, params, res, !no_timestamp),
           out_path);
      std::cerr << level_name(verdict.level) << " detection of " << s.str() << ": "
                << status_name(verdict.status) << "\n";
      return 0;
    }

    if (*cmd_cf) {
      auto g = load_group(cf_file);
      auto o = parse_order_spec(cf_order, g);
      const int nmax = cf_nmax > 0 ? cf_nmax : default_n_max(cf_radius);
      Json params{{"order", cf_order}, {"radius", cf_radius}, {"nmax", nmax}};
      Json res;
      if (cf_boundary) {
        const auto& P = cf_torus.empty() ? g->peripherals().at(0) : g->peripheral(cf_torus);
        auto rep = boundary_cofinality_report(o, P, cf_radius, nmax);
        res["report"] = json_of(rep, g->gen_names());
        emit(report_envelope("cofinal", {{"file", cf_file}}, params, res, !no_timestamp),
             out_path);
        std::cerr << "boundary cofinality: " << cofinality_name(rep.verdict) << "\n";
      } else {
        if (cf_element.empty()) {
          throw CliError(5, "--element or --boundary is required");
        }
        const Word w = parse_word(cf_element, g->presentation());
        auto rep = cofinality_check(o, w, cf_radius, nmax);
        res["report"] = json_of(rep, g->gen_names());
        emit(report_envelope("cofinal", {{"file", cf_file}}, params, res, !no_timestamp),
             out_path);
        std::cerr << cf_element << ": " << cofinality_name(rep.verdict) << "\n";
      }
      return 0;
    }

    if (*cmd_dr) {
      auto g = load_group(dr_file);
      auto o = parse_order_spec(dr_order, g);
      PLAction a = build_realisation(o, dr_radius);
      Json res;
      res["window"] = {{"lo", a.window_lo.str()}, {"hi", a.window_hi.str()}};
      res["table_radius"] = a.table_radius;
      Json gens = Json::object();
      for (int gi = 0; gi < g->num_gens(); ++gi) {
        const auto& f = a.gen_pos[static_cast<size_t>(gi)];
        Json pts = Json::array();
        for (size_t k = 0; k < f.breakpoints().size(); ++k) {
          pts.push_back({{"x", f.breakpoints()[k].str()}, {"y", f.values()[k].str()}});
        }
        gens[g->gen_names()[static_cast<size_t>(gi)]] = pts;
      }
      res["generator_tables"] = gens;
      if (dr_fixed || !dr_element.empty()) {
        if (dr_element.empty()) {
          throw CliError(5, "--fixed-points needs --element");
        }
        const Word w = parse_word(dr_element, g->presentation());
        auto rep = fixed_points(a, w);
        Json ivs = Json::array();
        for (auto& [lo, hi] : rep.intervals) {
          ivs.push_back({{"lo", lo.str()}, {"hi", hi.str()}});
        }
        res["fixed_points"] = {{"element", dr_element},
                               {"verdict", verdict_name(rep.verdict)},
                               {"intervals", ivs}};
      }
      if (!dr_svg.empty()) {
        std::vector<Word> gens;
        for (int gi = 0; gi < g->num_gens(); ++gi) {
          Word w;
          w.push_syllable(gi, 1);
          gens.push_back(w);
        }
        write_text(dr_svg, pl_graphs_svg(a, gens));
        res["svg"] = dr_svg;
      }
      emit(report_envelope("dynreal", {{"file", dr_file}},
                           {{"order", dr_order}, {"radius", dr_radius}}, res, !no_timestamp),
           out_path);
      std::cerr << "realisation window [" << a.window_lo.str() << ", " << a.window_hi.str()
                << "]\n";
      return 0;
    }

    if (*cmd_gl) {
      const std::string text = read_file(gl_file);
      // resolve presentation paths relative to the graph file
      const auto dir_end = gl_file.find_last_of('/');
      const std::string dir = dir_end == std::string::npos ? "" : gl_file.substr(0, dir_end + 1);
      GluingGraph graph;
      try {
        graph = parse_gluing_graph(text, [&](const std::string& f) {
          return load_group(f.front() == '/' ? f : dir + f);
        });
      } catch (const ParseError& e) {
        throw CliError(2, gl_file + ": " + e.what());
      }
      // assignment in vertex-torus declaration order
      std::vector<std::pair<std::string, const PeripheralSubgroup*>> tori;
      for (auto& v : graph.vertices) {
        for (auto& P : v.group->peripherals()) {
          tori.emplace_back(v.name + "." + P.name, &P);
        }
      }
      std::vector<Slope> slopes;
      std::stringstream ss(gl_assign);
      std::string item;
      while (std::getline(ss, item, ',')) {
        slopes.push_back(parse_slope_arg(item));
      }
      if (slopes.size() != tori.size()) {
        throw CliError(5, "--assign needs " + std::to_string(tori.size()) +
                              " slopes (vertex-torus declaration order)");
      }
      SlopeAssignment assignment;
      for (size_t i = 0; i < tori.size(); ++i) {
        assignment.emplace(tori[i].first, slopes[i]);
      }
      auto rep = coherence_check(graph, assignment, gl_radius, gl_rconj, jobs);
      Json res;
      res["coherence"] = json_of(rep);
      if (gl_bg && graph.edges.size() == 1) {
        const auto& e = graph.edges[0];
        auto family_of = [&](const std::shared_ptr<const GroupBackend>& vg)
            -> std::optional<NormalFamilyFixture> {
          if (vg->family() == Family::klein_bottle) {
            return klein_four_family(vg);
          }
          if (vg->family() == Family::torus_knot) {
            return torus_knot_ablex_family(vg);
          }
          return std::nullopt;
        };
        auto n1 = family_of(graph.vertices[e.v1].group);
        auto n2 = family_of(graph.vertices[e.v2].group);
        if (n1 && n2) {
          GluingMap f{e.t1, e.t2, e.matrix};
          res["bludov_glass"] = json_of(bludov_glass_check(*n1, *n2, f, gl_radius));
        }
      }
      emit(report_envelope("glue", {{"file", gl_file}},
                           {{"assign", gl_assign}, {"radius", gl_radius}, {"rconj", gl_rconj}},
                           res, !no_timestamp),
           out_path);
      std::cerr << "coherence: " << (rep.passed ? "passes" : "fails") << "\n";
      return 0;
    }

    if (*cmd_cn) {
      auto g = load_group(cn_file);
      auto cert = certify_nonorderable(g, cn_rmax);
      Json res;
      res["certified_nonorderable"] = cert.has_value();
      if (cert) {
        res["radius"] = cert->radius;
        Ball ball(g, cert->radius);
        const std::string rendered = render_certificate(*cert->certificate, ball);
        res["certificate"] = rendered;
        res["replay_ok"] = replay_certificate(*cert->certificate, ball, {});
        if (!cn_cert_path.empty()) {
          write_text(cn_cert_path, rendered);
          res["certificate_file"] = cn_cert_path;
        }
      }
      emit(report_envelope("certify-nonorderable", {{"file", cn_file}},
                           {{"rmax", cn_rmax}}, res, !no_timestamp),
           out_path);
      std::cerr << (cert ? "certificate found at radius " + std::to_string(cert->radius)
                         : "no certificate up to the radius cap")
                << "\n";
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UnsupportedPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 5;
}
