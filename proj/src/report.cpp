#include "padyn/report.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace padyn {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* sphere_class_name(SphereClass c) {
  switch (c) {
    case SphereClass::SiegelInterior: return "siegel_interior";
    case SphereClass::InvariantAnnulus: return "invariant_annulus";
    case SphereClass::CriticalAlpha: return "critical_alpha";
    case SphereClass::CriticalBeta: return "critical_beta";
    case SphereClass::Escaping: return "escaping";
  }
  return "?";
}

const char* terminal_name(OrbitTerminal t) {
  switch (t) {
    case OrbitTerminal::FixedOrCycling: return "fixed_or_cycling";
    case OrbitTerminal::InvariantSphereResident:
      return "invariant_sphere_resident";
    case OrbitTerminal::EscapeCertified: return "escape_certified";
    case OrbitTerminal::SingularHit: return "singular_hit";
    case OrbitTerminal::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

const char* case_name(RadiusMapKind k) {
  switch (k) {
    case RadiusMapKind::PhiCase: return "phi";
    case RadiusMapKind::ZetaCase: return "zeta";
    case RadiusMapKind::EtaCase: return "eta";
  }
  return "?";
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Ergodic: return "ergodic";
    case VerdictKind::NotErgodic: return "not_ergodic";
    case VerdictKind::Undecided: return "undecided";
  }
  return "?";
}

Json valuation_json(const PadicExact& x) {
  Valuation v = x.valuation();
  if (v.is_infinite()) return Json("inf");
  return Json(rat_to_ll(v.finite()));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
  if (!out) throw Error("failed writing output file: " + path);
}

Json report_head(const char* command, const Map31& m) {
  Json j;
  j["command"] = command;
  j["p"] = m.prime().value();
  j["map"] = map_summary_json(m);
  return j;
}

NormExp parse_norm_exp(const BigRat& exp) { return NormExp(exp); }

}  // namespace

MapInput parse_map_config(const std::string& text) {
  MapInput input;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "p") {
      BigRat pv = parse_rational(value);
      if (rat_den(pv) != 1 || pv <= 0)
        throw ParseError("config: p must be a positive integer");
      input.p = rat_num(pv).convert_to<std::uint64_t>();
    } else if (key == "a") {
      input.a = parse_rational(value);
    } else if (key == "b") {
      input.b = parse_rational(value);
    } else if (key == "c") {
      input.c = parse_rational(value);
    } else if (key == "d") {
      input.d = parse_rational(value);
    } else if (key == "e") {
      input.e = parse_rational(value);
    } else {
      throw ParseError("config: unknown key '" + key + "'");
    }
  }
  return input;
}

PreparedMap prepare_map(const MapInput& input) {
  if (input.p == 0) throw ParseError("map requires p");
  Prime prime(input.p);
  if (!input.a || !input.b) throw ParseError("map requires a and b");
  PadicExact a(*input.a, prime), b(*input.b, prime);
  if (!input.is_general()) return {Map31(a, b), std::nullopt, std::nullopt};
  if (!input.c || !input.d || !input.e)
    throw ParseError("general map requires all of c, d, e");
  Map31General general(a, b, PadicExact(*input.c, prime),
                       PadicExact(*input.d, prime),
                       PadicExact(*input.e, prime));
  CanonicalReduction red = reduce_to_canonical(general);
  return {red.map, red.x0, general};
}

std::vector<std::string> reference_warnings(const Map31& m) {
  std::vector<std::string> warnings;
  if (m.prime().value() == 2 && m.a().value() == BigRat(-9, 10) &&
      m.b().value() == BigRat(1, 10)) {
    warnings.push_back(
        "reference-values discrepancy for (p=2, a=-9/10, b=1/10): the "
        "previously reported root norms alpha = beta = 8 with delta = 2 "
        "contradict alpha*beta = |b|_2 = 2; recomputed exactly: alpha = 1 "
        "(exp 0), beta = 2 (exp 1), delta = 2, so r = |b|_2 = 2 = beta is "
        "not an invariant sphere radius");
  }
  return warnings;
}

Json map_summary_json(const Map31& m) {
  Json j;
  j["a"] = format_rational(m.a().value());
  j["b"] = format_rational(m.b().value());
  j["x_hat"] = m.x_hat().to_string();
  j["alpha_exp"] = m.alpha().exp_string();
  j["beta_exp"] = m.beta().exp_string();
  j["delta_exp"] = m.delta().exp_string();
  j["case"] = case_name(radius_map_kind(m));
  j["siegel_radius_exp"] = m.alpha().exp_string();
  InvariantRadiusSet set = invariant_radius_set(m);
  Json inv;
  inv["kind"] = set.kind == InvariantSetKind::EqualRootsCase
                    ? "equal_roots"
                    : "distinct_roots";
  inv["alpha_exp"] = set.alpha.exp_string();
  inv["beta_exp"] = set.beta.exp_string();
  inv["description"] = set.to_string();
  j["invariant_radii"] = inv;
  return j;
}

Json certificate_json(const PeriodicOrbitCert& cert) {
  Json j;
  j["q"] = format_rational(cert.q);
  j["a"] = cert.a.to_string();
  j["b"] = cert.b.to_string();
  j["orbit"] = Json::array({cert.orbit0.to_string(), cert.orbit1.to_string()});
  j["norm_exps"] =
      Json::array({cert.norm0.exp_string(), cert.norm1.exp_string()});
  j["r_in_A"] = cert.r_in_A;
  j["sqrt_disc_exists"] = cert.sqrt_disc_exists;
  j["verified"] = cert.verified;
  j["multiplier_norm_exp"] = cert.multiplier_norm
                                 ? Json(cert.multiplier_norm->exp_string())
                                 : Json(nullptr);
  return j;
}

Json cmd_classify(const RunConfig& config) {
  PreparedMap prepared = prepare_map(config.map);
  Json j = report_head("classify", prepared.map);
  if (prepared.x0) {
    Json red;
    red["x0"] = prepared.x0->to_string();
    red["A"] = prepared.map.a().to_string();
    red["B"] = prepared.map.b().to_string();
    j["reduction"] = red;
  } else {
    j["reduction"] = nullptr;
  }
  Json spheres = Json::array();
  for (const BigRat& e : config.r_exps) {
    NormExp r = parse_norm_exp(e);
    Json row;
    row["r_exp"] = r.exp_string();
    row["class"] = sphere_class_name(classify_sphere(prepared.map, r));
    row["in_A"] = radius_in_A(prepared.map, r);
    spheres.push_back(row);
  }
  j["spheres"] = spheres;
  j["warnings"] = reference_warnings(prepared.map);
  return j;
}

Json cmd_reduce(const RunConfig& config) {
  if (!config.map.is_general())
    throw ParseError("reduce requires a general map (c, d, e)");
  PreparedMap prepared = prepare_map(config.map);
  Json j = report_head("reduce", prepared.map);
  Json red;
  red["x0"] = prepared.x0->to_string();
  red["A"] = prepared.map.a().to_string();
  red["B"] = prepared.map.b().to_string();
  j["reduction"] = red;
  j["warnings"] = reference_warnings(prepared.map);
  return j;
}

Json cmd_orbit(const RunConfig& config) {
  PreparedMap prepared = prepare_map(config.map);
  if (!config.x) throw ParseError("orbit requires a seed point --x");
  PadicExact seed(*config.x, prepared.map.prime());
  OrbitTrace trace = run_orbit(prepared.map, seed, config.steps);

  Json j = report_head("orbit", prepared.map);
  j["seed"] = seed.to_string();
  j["terminal"] = terminal_name(trace.terminal);
  j["at_step"] = trace.at_step;
  j["period"] = trace.terminal == OrbitTerminal::FixedOrCycling
                    ? Json(trace.period)
                    : Json(nullptr);
  Json steps = Json::array();
  for (const OrbitStep& s : trace.steps) {
    Json row;
    row["n"] = s.n;
    row["point"] = s.point.to_string();
    row["val"] = valuation_json(s.point);
    steps.push_back(row);
  }
  j["steps"] = steps;
  j["warnings"] = reference_warnings(prepared.map);
  if (!config.out_path.empty()) write_file(config.out_path, orbit_csv(trace));
  return j;
}

Json cmd_spheres(const RunConfig& config) {
  PreparedMap prepared = prepare_map(config.map);
  const Map31& m = prepared.map;
  Json j = report_head("spheres", m);
  Json rows = Json::array();
  for (const BigRat& e : config.r_exps) {
    NormExp r = parse_norm_exp(e);
    Json row;
    row["r_exp"] = r.exp_string();
    row["class"] = sphere_class_name(classify_sphere(m, r));
    bool in_a = radius_in_A(m, r);
    row["in_A"] = in_a;
    if (in_a) {
      row["rho_exp"] = rho(m, r).exp_string();
      MinimalBallReport report = minimal_invariant_ball(m, r, config.mmax);
      Json balls = Json::array();
      for (const MinimalBallRow& b : report.rows) {
        Json br;
        br["m"] = b.m;
        br["radius_exp"] = b.ball_radius.exp_string();
        br["minimal"] = b.minimal;
        balls.push_back(br);
      }
      row["minimal_ball"] = balls;
    } else {
      row["rho_exp"] = nullptr;
      row["minimal_ball"] = nullptr;
    }
    rows.push_back(row);
  }
  j["spheres"] = rows;
  j["warnings"] = reference_warnings(prepared.map);
  return j;
}

Json cmd_ergodicity(const RunConfig& config) {
  PreparedMap prepared = prepare_map(config.map);
  const Map31& m = prepared.map;
  if (config.r_exps.empty())
    throw ParseError("ergodicity requires a sphere radius --r-exp");
  NormExp r = parse_norm_exp(config.r_exps.front());
  ErgodicityVerdict verdict = ergodicity_verdict(m, r);

  Json j = report_head("ergodicity", m);
  j["sphere_exp"] = verdict.sphere.exp_string();
  j["verdict"] = verdict_name(verdict.kind);
  j["reason"] = verdict.reason;
  if (verdict.memic) {
    Json mj;
    mj["A1"] = verdict.memic->a1;
    mj["A2"] = verdict.memic->a2;
    mj["B1"] = verdict.memic->b1;
    mj["B2"] = verdict.memic->b2;
    mj["case"] = verdict.memic->matched_case ? Json(*verdict.memic->matched_case)
                                             : Json(nullptr);
    mj["interchanged"] = verdict.memic->interchanged;
    j["memic"] = mj;
  } else {
    j["memic"] = nullptr;
  }
  if (verdict.witness) {
    Json wj;
    wj["center"] = verdict.witness->center.to_string();
    wj["radius_exp"] = verdict.witness->radius.exp_string();
    j["witness_ball"] = wj;
  } else {
    j["witness_ball"] = nullptr;
  }

  if (config.iters > 0) {
    PadicExact seed = config.x
                          ? PadicExact(*config.x, m.prime())
                          : PadicExact(rat_pow(BigRat(m.prime().value()),
                                               -rat_to_ll(r.exponent())),
                                       m.prime());
    FrequencyTable table =
        equidistribution_probe(m, r, seed, config.iters, config.depth);
    Json pj;
    pj["seed"] = seed.to_string();
    pj["iterations"] = table.total;
    pj["depth"] = table.depth;
    pj["haar_weight"] = format_rational(table.haar_weight);
    Json cells = Json::array();
    for (const FrequencyCell& c : table.cells) {
      Json cj;
      cj["cell_rep"] = c.rep.to_string();
      cj["count"] = c.count;
      cells.push_back(cj);
    }
    pj["cells"] = cells;
    j["probe"] = pj;
    if (!config.out_path.empty()) write_file(config.out_path, probe_csv(table));
  } else {
    j["probe"] = nullptr;
  }
  j["warnings"] = reference_warnings(m);
  return j;
}

Json cmd_periodic(const RunConfig& config) {
  if (config.map.p == 0) throw ParseError("periodic requires p");
  Prime prime(config.map.p);
  Json j;
  j["command"] = "periodic";
  j["p"] = prime.value();

  std::vector<PeriodicOrbitCert> certs;
  std::vector<std::string> warnings;
  if (config.q) {
    certs.push_back(build_2periodic(*config.q, prime));
    j["q"] = format_rational(*config.q);
  } else if (config.q_num_max) {
    long long scanned = 0;
    for (long long den = 1; den <= config.q_den_max; ++den) {
      for (long long num = 1; num <= *config.q_num_max; ++num) {
        if (std::gcd(num, den) != 1) continue;
        for (int sign : {1, -1}) {
          BigRat q(sign * num, den);
          try {
            PeriodicOrbitCert cert = build_2periodic(q, prime);
            ++scanned;
            // Grid mode keeps the fully admissible certificates: an
            // exact 2-orbit on an invariant sphere with the square
            // root of the discriminant available in Q_p.
            if (cert.verified && cert.r_in_A && cert.sqrt_disc_exists)
              certs.push_back(cert);
          } catch (const ExcludedQ&) {
          }
        }
      }
    }
    Json grid;
    grid["num_max"] = *config.q_num_max;
    grid["den_max"] = config.q_den_max;
    grid["scanned"] = scanned;
    j["grid"] = grid;
  } else {
    throw ParseError("periodic requires --q or grid bounds --qmax");
  }

  Json arr = Json::array();
  for (const PeriodicOrbitCert& cert : certs) {
    arr.push_back(certificate_json(cert));
    for (const std::string& w :
         reference_warnings(Map31(cert.a, cert.b)))
      warnings.push_back(w);
  }
  j["certificates"] = arr;
  j["warnings"] = warnings;
  return j;
}

Json cmd_radii(const RunConfig& config) {
  PreparedMap prepared = prepare_map(config.map);
  std::vector<NormExp> ladder =
      preimage_radius_ladder(prepared.map, config.kmax);
  Json j = report_head("radii", prepared.map);
  Json rows = Json::array();
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    Json row;
    row["k"] = k;
    row["r_exp"] = ladder[k].exp_string();
    rows.push_back(row);
  }
  j["ladder"] = rows;
  j["warnings"] = reference_warnings(prepared.map);
  if (!config.out_path.empty()) write_file(config.out_path, ladder_csv(ladder));
  return j;
}

std::string orbit_csv(const OrbitTrace& trace) {
  std::ostringstream os;
  os << "n,num,den,val\n";
  for (const OrbitStep& s : trace.steps) {
    Valuation v = s.point.valuation();
    os << s.n << "," << rat_num(s.point.value()).str() << ","
       << rat_den(s.point.value()).str() << ","
       << (v.is_infinite() ? std::string("inf")
                           : format_rational(v.finite()))
       << "\n";
  }
  return os.str();
}

std::string ladder_csv(const std::vector<NormExp>& ladder) {
  std::ostringstream os;
  os << "k,exp_num,exp_den\n";
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    const BigRat& e = ladder[k].exponent();
    os << k << "," << rat_num(e).str() << "," << rat_den(e).str() << "\n";
  }
  return os.str();
}

std::string probe_csv(const FrequencyTable& table) {
  std::ostringstream os;
  os << "cell_rep,count,frequency,haar_weight\n";
  for (const FrequencyCell& c : table.cells) {
    BigRat freq = table.total == 0 ? BigRat(0)
                                   : BigRat(c.count) / BigRat(table.total);
    os << c.rep.to_string() << "," << c.count << "," << format_rational(freq)
       << "," << format_rational(table.haar_weight) << "\n";
  }
  return os.str();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  std::string command = report.at("command").get<std::string>();
  if (report.contains("map")) {
    const Json& m = report.at("map");
    os << command << ": p = " << report.at("p").get<std::uint64_t>()
       << ", f(x) = (x^3 + a x^2 + b x)/(a x + b), a = "
       << m.at("a").get<std::string>() << ", b = "
       << m.at("b").get<std::string>() << "\n";
    os << "  case " << m.at("case").get<std::string>() << ", alpha = p^"
       << m.at("alpha_exp").get<std::string>() << ", beta = p^"
       << m.at("beta_exp").get<std::string>() << ", delta = p^"
       << m.at("delta_exp").get<std::string>() << ", x_hat = "
       << m.at("x_hat").get<std::string>() << "\n";
    os << "  Siegel disk U_r(0), r = p^"
       << m.at("siegel_radius_exp").get<std::string>() << "; A = "
       << m.at("invariant_radii").at("description").get<std::string>()
       << "\n";
  } else {
    os << command << ": p = " << report.at("p").get<std::uint64_t>() << "\n";
  }
  if (report.contains("reduction") && !report.at("reduction").is_null()) {
    const Json& r = report.at("reduction");
    os << "  reduced at x0 = " << r.at("x0").get<std::string>() << " to (A, B) = ("
       << r.at("A").get<std::string>() << ", " << r.at("B").get<std::string>()
       << ")\n";
  }
  if (report.contains("spheres")) {
    for (const Json& row : report.at("spheres")) {
      os << "  S_r(0), r = p^" << row.at("r_exp").get<std::string>() << ": "
         << row.at("class").get<std::string>()
         << (row.at("in_A").get<bool>() ? " (invariant)" : "") << "\n";
    }
  }
  if (report.contains("terminal")) {
    os << "  orbit terminal: " << report.at("terminal").get<std::string>()
       << " at step " << report.at("at_step").get<std::size_t>();
    if (!report.at("period").is_null())
      os << " (period " << report.at("period").get<std::size_t>() << ")";
    os << ", " << report.at("steps").size() << " steps recorded\n";
  }
  if (report.contains("verdict")) {
    os << "  S_r(0), r = p^" << report.at("sphere_exp").get<std::string>()
       << ": " << report.at("verdict").get<std::string>() << " ("
       << report.at("reason").get<std::string>() << ")\n";
    if (!report.at("memic").is_null()) {
      const Json& mm = report.at("memic");
      os << "  criterion sums mod 4: A1=" << mm.at("A1").get<int>()
         << " A2=" << mm.at("A2").get<int>() << " B1=" << mm.at("B1").get<int>()
         << " B2=" << mm.at("B2").get<int>();
      if (!mm.at("case").is_null())
        os << ", case " << mm.at("case").get<int>()
           << (mm.at("interchanged").get<bool>() ? " interchanged" : "");
      os << "\n";
    }
    if (!report.at("witness_ball").is_null()) {
      const Json& w = report.at("witness_ball");
      os << "  invariant witness ball: center "
         << w.at("center").get<std::string>() << ", radius p^"
         << w.at("radius_exp").get<std::string>() << "\n";
    }
  }
  if (report.contains("certificates")) {
    for (const Json& c : report.at("certificates")) {
      os << "  q = " << c.at("q").get<std::string>() << ": orbit {"
         << c.at("orbit")[0].get<std::string>() << ", "
         << c.at("orbit")[1].get<std::string>() << "}, verified = "
         << (c.at("verified").get<bool>() ? "true" : "false")
         << ", r_in_A = " << (c.at("r_in_A").get<bool>() ? "true" : "false")
         << ", sqrt_disc = "
         << (c.at("sqrt_disc_exists").get<bool>() ? "true" : "false") << "\n";
    }
  }
  if (report.contains("ladder")) {
    for (const Json& row : report.at("ladder")) {
      os << "  r_" << row.at("k").get<std::size_t>() << " = p^"
         << row.at("r_exp").get<std::string>() << "\n";
    }
  }
  if (report.contains("warnings")) {
    for (const Json& w : report.at("warnings"))
      os << "  warning: " << w.get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace padyn
