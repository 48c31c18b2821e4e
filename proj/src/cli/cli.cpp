#include "torunits/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "torunits/field_spec.hpp"
#include "torunits/kms.hpp"
#include "torunits/quasi_orbits.hpp"
#include "torunits/sim.hpp"

namespace torunits::cli {

using nlohmann::json;

namespace {

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json exact(const Rational& r) { return to_string(r); }

json integer(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return to_string(n);
}

template <class T>
json integers(const T& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer(Integer(x)));
  return a;
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(exact(x));
  return a;
}

json rows_of(const IntegerMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    a.push_back(integers(std::vector<Integer>(r.begin(), r.end())));
  }
  return a;
}

json columns_of(const IntegerMatrix& m) { return rows_of(m.transpose()); }

json word_json(const UnitWord& w) { return {{"torsion", w.torsion_exp}, {"free", w.exponents}}; }

json point_json(const RationalTorusPoint& p) { return rationals(p.coords()); }

json characters_json(const CharacterGroupDescriptor& c) {
  return {{"torsion_invariants", integers(c.torsion_invariants)}, {"torus_rank", c.torus_rank}};
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) throw ValidationError("malformed integer '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError("empty integer list");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ValidationError("empty rational list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) throw ValidationError("malformed number '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

struct Common {
  std::string field;
  std::string ideal;
  std::string output;
  int threads = 0;
};

json manifest(const Common& c, const Workspace* ws, const std::string& subcommand, json parameters,
              const std::string& schema) {
  json m{{"field_spec", c.field},
         {"subcommand", subcommand},
         {"parameters", std::move(parameters)},
         {"tool_version", tool_version},
         {"timestamp", manifest_timestamp()},
         {"schema", schema}};
  if (ws) {
    m["unit_group"] = {{"source", ws->units_computed ? "computed" : "user-supplied"},
                       {"provenance", ws->units.provenance},
                       {"finite_index_caveat", !ws->units.fundamental}};
  }
  return m;
}

const IntegralIdeal& pick_ideal(const Workspace& ws, const std::string& label) {
  return label.empty() ? ws.ideals.front() : ws.ideal(label);
}

std::string order_kind(OrderStatus s) {
  switch (s) {
    case OrderStatus::maximal_certified: return "maximal_certified";
    case OrderStatus::maximal_builtin: return "maximal_builtin";
    case OrderStatus::user_supplied: return "user_supplied";
    case OrderStatus::power_basis_unverified: return "power_basis_unverified";
  }
  return "power_basis_unverified";
}

json field_info(const Common& c) {
  auto ws = load_workspace(c.field);
  const auto& k = *ws.field;
  json basis = json::array();
  for (std::size_t j = 0; j < k.basis().cols(); ++j) basis.push_back(rationals(k.basis().column(j)));
  json ideals = json::array();
  for (const auto& id : ws.ideals)
    ideals.push_back({{"label", id.label}, {"basis", columns_of(id.basis)}, {"norm", integer(ideal_norm(id))}});
  return {{"manifest", manifest(c, &ws, "field info", json::object(), "field_info/v1")},
          {"name", ws.name},
          {"degree", k.degree()},
          {"poly", rationals(k.poly().coeffs())},
          {"signature", {k.signature().r, k.signature().s}},
          {"unit_rank", unit_rank(k)},
          {"discriminant", integer(k.discriminant())},
          {"order_status", {{"kind", order_kind(k.order_status())}, {"note", to_string(k.order_status())}}},
          {"integral_basis", basis},
          {"torsion_order", ws.units.torsion_order},
          {"ideals", ideals}};
}

json units_verify(const Common& c) {
  auto ws = load_workspace(c.field);
  const auto& k = *ws.field;
  json units = json::array();
  for (const auto& u : ws.units.free_gens)
    units.push_back({{"power_coords", rationals(k.power_coords(u))}, {"norm", exact(k.norm(u))}});
  const auto& reg = ws.units.regulator;
  return {{"manifest", manifest(c, &ws, "units verify", json::object(), "units_verify/v1")},
          {"rank", ws.units.rank()},
          {"torsion", {{"generator", rationals(k.power_coords(ws.units.torsion_gen))}, {"order", ws.units.torsion_order}}},
          {"free_units", units},
          {"regulator", {{"lo", exact(reg.lo)}, {"hi", exact(reg.hi)}, {"approx", num(reg.mid().get_d())}}},
          {"provenance", ws.units.provenance},
          {"fundamental", ws.units.fundamental}};
}

json units_quadratic(const Common& c) {
  auto spec = parse_field_spec(c.field);
  std::optional<RationalMatrix> basis;
  if (spec.integral_basis)
    basis = RationalMatrix::from_columns(*spec.integral_basis, static_cast<std::size_t>(spec.poly.degree()));
  auto field = NumberField::create(spec.poly, basis);
  if (field->degree() != 2 || field->signature().r != 2) throw ValidationError(c.field + ": not a real quadratic field");
  auto u = fundamental_unit_real_quadratic(*field);
  auto e = field->embed(u, 1, 64);
  return {{"manifest", manifest(c, nullptr, "units quadratic", json::object(), "units_quadratic/v1")},
          {"unit", rationals(field->power_coords(u))},
          {"norm", exact(field->norm(u))},
          {"approx", num(e.re.get_d())},
          {"provenance", "continued fraction (real quadratic)"}};
}

json cm_json(const CMStatus& cm, const NumberField& k) {
  json j{{"state", to_string(cm.state)}, {"reason", cm.reason}};
  if (cm.cm) {
    j["conjugation"] = rationals(k.power_coords(cm.cm->conjugation));
    j["fixed_field_poly"] = rationals(cm.cm->fixed_field_poly.coeffs());
  }
  return j;
}

json berend_json(const IDVerdict& v, const NumberField& k) {
  json c1 = nullptr;
  if (v.conditions.c1)
    c1 = {{"word", word_json(v.conditions.c1->word)},
          {"exponents", v.conditions.c1->exponents},
          {"minpoly_degrees", v.conditions.c1->minpoly_degrees}};
  json c2 = json::array();
  for (const auto& e : v.conditions.c2) {
    if (!e) {
      c2.push_back(nullptr);
      continue;
    }
    c2.push_back({{"embedding", e->embedding}, {"word", word_json(e->word)}, {"abs_lower", exact(e->abs_lower)}});
  }
  return {{"verdict", to_string(v.verdict)},
          {"rank", v.rank},
          {"cm", cm_json(v.cm, k)},
          {"conditions", {{"c1", c1}, {"c2", c2}, {"c2_complete", v.conditions.c2_complete()}, {"c3", v.conditions.c3}}},
          {"field_route", to_string(v.field_route)},
          {"matrix_route", to_string(v.matrix_route)},
          {"agreement", v.agreement}};
}

json stratum_json(const FiniteOrbit& o, const IsotropySubgroup& h, const CharacterGroupDescriptor& chars, bool points) {
  json j{{"q", o.q},
         {"size", o.size()},
         {"base", point_json(o.base_point())},
         {"isotropy_invariants", integers(h.quotient_invariants)},
         {"characters", characters_json(chars)}};
  if (points) {
    json p = json::array();
    for (std::size_t i = 0; i < o.size(); ++i) p.push_back(point_json(o.point(i)));
    j["points"] = p;
  }
  return j;
}

std::string timestamp_of(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const json& j, const Common& c, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + c.output);
  f << text;
}

std::vector<std::vector<long>> default_frequencies(int d) {
  std::vector<std::vector<long>> ks;
  for (int i = 0; i < d; ++i)
    for (long s : {1L, -1L}) {
      std::vector<long> k(d, 0);
      k[i] = s;
      ks.push_back(k);
    }
  if (d >= 2) {
    std::vector<long> k(d, 0);
    k[0] = k[1] = 1;
    ks.push_back(k);
  }
  return ks;
}

}  // namespace

std::string manifest_timestamp() {
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && end != env) return timestamp_of(static_cast<std::time_t>(v));
  }
  return timestamp_of(std::time(nullptr));
}

int exit_code_for(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const ValidationError&) {
    return exit_validation;
  } catch (const UndeterminedError&) {
    return exit_undetermined;
  } catch (const CLI::ParseError&) {
    return exit_validation;
  } catch (...) {
    return exit_internal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit group actions on ideal duals: orbits, isotropy, Berend certification, KMS catalogs"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--threads", c.threads, "OpenMP threads for parallel kernels")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", c.output, "write JSON here instead of stdout");

  auto add_field = [&](CLI::App* sub) { sub->add_option("field", c.field, "field spec (.toml or .json)")->required(); };
  auto add_ideal = [&](CLI::App* sub) { sub->add_option("--ideal", c.ideal, "ideal label (default: first)"); };

  auto* field = app.add_subcommand("field", "field data")->require_subcommand(1);
  auto* field_info_cmd = field->add_subcommand("info", "field invariants and ideals");
  add_field(field_info_cmd);

  auto* units = app.add_subcommand("units", "unit groups")->require_subcommand(1);
  auto* verify = units->add_subcommand("verify", "verify the unit group of a field file");
  add_field(verify);
  auto* quadratic = units->add_subcommand("quadratic", "continued-fraction unit of a real quadratic field");
  add_field(quadratic);

  int budget = 4;
  bool require_id = false;
  auto* berend = app.add_subcommand("berend", "ID certification")->require_subcommand(1);
  auto* check = berend->add_subcommand("check", "Berend conditions and verdict");
  add_field(check);
  add_ideal(check);
  check->add_option("--budget", budget, "word budget |e|_1")->check(CLI::PositiveNumber);
  check->add_flag("--require-id", require_id, "exit 2 unless the verdict is ID");

  std::int64_t qmax = 1;
  bool with_points = false;
  auto* orbits = app.add_subcommand("orbits", "finite orbits")->require_subcommand(1);
  auto* enumerate = orbits->add_subcommand("enumerate", "orbits of all points with denominator <= qmax");
  add_field(enumerate);
  add_ideal(enumerate);
  enumerate->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--points", with_points, "list every orbit point");

  std::string point_text;
  auto* iso = app.add_subcommand("isotropy", "stabilizer of a rational point");
  add_field(iso);
  add_ideal(iso);
  iso->add_option("--point", point_text, "coordinates, e.g. 1/5,0")->required();

  double beta = 3;
  int angle_grid = 0;
  std::vector<std::string> trace_js;
  auto* kms = app.add_subcommand("kms", "KMS parameter catalog")->require_subcommand(1);
  auto* report = kms->add_subcommand("report", "extremal trace parameters");
  add_field(report);
  report->add_option("--beta", beta)->required();
  report->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);
  report->add_option("--angle-grid", angle_grid, "sample free characters on (1/G)Z^n")->check(CLI::NonNegativeNumber);
  report->add_option("--trace-j", trace_js, "ideal coordinates of j for trace tables (u = identity)");
  report->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* prim = app.add_subcommand("prim", "primitive ideal space strata");
  add_field(prim);
  add_ideal(prim);
  prim->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);
  prim->add_option("--budget", budget)->check(CLI::PositiveNumber);

  std::string start = "random", scheme = "walk", csv;
  std::int64_t steps = 100000;
  std::uint64_t seed = 0;
  int radius = 4;
  std::vector<std::string> freq_texts;
  auto* simulate = app.add_subcommand("simulate", "floating-point orbit simulation")->require_subcommand(1);
  auto* equidist = simulate->add_subcommand("equidist", "Weyl sums of a simulated orbit");
  equidist->add_option("--field", c.field)->required();
  add_ideal(equidist);
  equidist->add_option("--start", start, "random | subtorus | p/q,... | x,... (floats)");
  equidist->add_option("--steps", steps)->check(CLI::PositiveNumber);
  equidist->add_option("--seed", seed);
  equidist->add_option("--scheme", scheme)->check(CLI::IsMember({"walk", "ball"}));
  equidist->add_option("--radius", radius)->check(CLI::PositiveNumber);
  equidist->add_option("--freq", freq_texts, "frequency vector, e.g. 1,0,0 (repeatable)");
  equidist->add_option("--csv", csv, "write samples as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  }

  try {
    if (c.threads > 0) set_threads(c.threads);
    if (field_info_cmd->parsed()) {
      emit(field_info(c), c, out);
    } else if (verify->parsed()) {
      emit(units_verify(c), c, out);
    } else if (quadratic->parsed()) {
      emit(units_quadratic(c), c, out);
    } else if (check->parsed()) {
      auto ws = load_workspace(c.field);
      ToralRep rep(ws.units, pick_ideal(ws, c.ideal));
      auto v = id_verdict(rep, budget);
      json j = berend_json(v, *ws.field);
      j["ideal"] = rep.ideal().label;
      j["manifest"] = manifest(c, &ws, "berend check",
                               {{"budget", budget}, {"require_id", require_id}, {"ideal", rep.ideal().label}},
                               "berend_check/v1");
      emit(j, c, out);
      if (v.verdict == Verdict::undetermined) return exit_undetermined;
      if (require_id && v.verdict != Verdict::id) {
        err << "error: verdict is " << to_string(v.verdict) << ", ID required\n";
        return exit_validation;
      }
    } else if (enumerate->parsed()) {
      auto ws = load_workspace(c.field);
      ToralRep rep(ws.units, pick_ideal(ws, c.ideal));
      json dens = json::array();
      for (std::int64_t q = 1; q <= qmax; ++q) {
        auto group = reduce_group_mod_q(rep, q);
        auto os = partition_denominator(rep, q);
        auto hs = isotropy_all(os, group, rep);
        json arr = json::array();
        std::size_t total = 0;
        for (std::size_t i = 0; i < os.size(); ++i) {
          total += os[i].size();
          arr.push_back(stratum_json(os[i], hs[i], character_group(hs[i]), with_points));
        }
        dens.push_back({{"q", q}, {"group_order", group.size()}, {"point_count", total}, {"orbits", arr}});
      }
      json j{{"manifest", manifest(c, &ws, "orbits enumerate", {{"qmax", qmax}, {"ideal", rep.ideal().label}},
                                   "orbits_enumerate/v1")},
             {"ideal", rep.ideal().label},
             {"qmax", qmax},
             {"denominators", dens}};
      emit(j, c, out);
    } else if (iso->parsed()) {
      auto ws = load_workspace(c.field);
      ToralRep rep(ws.units, pick_ideal(ws, c.ideal));
      auto coords = parse_rationals(point_text);
      if (static_cast<int>(coords.size()) != rep.dim()) throw ValidationError("point has the wrong dimension");
      auto x = make_point(coords);
      if (!x.q.fits_slong_p()) throw ValidationError("denominator too large");
      auto o = orbit_of(x, rep);
      auto h = isotropy(o, reduce_group_mod_q(rep, x.q.get_si()), rep);
      json j{{"manifest", manifest(c, &ws, "isotropy", {{"point", point_text}, {"ideal", rep.ideal().label}},
                                   "isotropy/v1")},
             {"ideal", rep.ideal().label},
             {"point", point_json(x)},
             {"q", integer(x.q)},
             {"orbit_size", o.size()},
             {"lattice_basis", rows_of(h.lattice.basis())},
             {"index", integer(h.index)},
             {"quotient_invariants", integers(h.quotient_invariants)},
             {"torsion_order", integer(h.torsion_order)},
             {"free_rank", h.free_rank},
             {"torsion_exponent_step", h.torsion_exponent_step},
             {"characters", characters_json(character_group(h))}};
      emit(j, c, out);
    } else if (report->parsed()) {
      if (!(beta > 2)) throw ValidationError("the catalog is stated for beta > 2");
      auto ws = load_workspace(c.field);
      std::vector<ToralRep> reps;
      for (const auto& id : ws.ideals) reps.emplace_back(ws.units, id);
      auto verdict = id_verdict(reps.front(), budget);
      auto status = classification_status(verdict);
      auto cat = enumerate_extremal_params(reps, qmax, status, angle_grid);
      std::vector<std::vector<long>> js;
      for (const auto& t : trace_js) js.push_back(parse_longs(t));
      json ideals = json::array();
      for (std::size_t r = 0; r < cat.ideals.size(); ++r) {
        const auto& ic = cat.ideals[r];
        const auto& rep = reps[r];
        json strata = json::array();
        for (const auto& s : ic.strata) {
          json sj = stratum_json(s.orbit, s.isotropy, s.characters, false);
          sj["torsion_characters"] = integer(s.torsion_characters);
          if (angle_grid > 0) {
            json sample = json::array();
            for (const auto& chi : s.sample)
              sample.push_back({{"torsion_index", chi.torsion_index}, {"angles", rationals(chi.angles)}});
            sj["sample"] = sample;
          }
          if (!js.empty()) {
            auto p = orbit_param(rep, s.orbit, s.isotropy, trivial_character(s.isotropy));
            json table = json::array();
            for (const auto& jv : js) {
              if (static_cast<int>(jv.size()) != rep.dim()) throw ValidationError("trace j has the wrong dimension");
              auto t = evaluate_trace(p, rep, std::vector<Integer>(jv.begin(), jv.end()), reps[r].units().identity());
              table.push_back({{"j", jv}, {"value", {num(t.real()), num(t.imag())}}});
            }
            sj["traces"] = table;
          }
          strata.push_back(sj);
        }
        ideals.push_back({{"label", ic.label}, {"haar", ic.haar}, {"strata", strata}});
      }
      json j{{"manifest", manifest(c, &ws, "kms report",
                                   {{"beta", num(beta)}, {"qmax", qmax}, {"angle_grid", angle_grid}, {"budget", budget}},
                                   "kms_report/v1")},
             {"beta", num(beta)},
             {"status", {{"status", to_string(status.status)}, {"notes", status.notes}}},
             {"torus_rank", cat.torus_rank},
             {"discrete_parameters", integer(cat.discrete_parameters)},
             {"ideals", ideals}};
      emit(j, c, out);
    } else if (prim->parsed()) {
      auto ws = load_workspace(c.field);
      ToralRep rep(ws.units, pick_ideal(ws, c.ideal));
      auto verdict = id_verdict(rep, budget);
      auto d = prim_description(rep, qmax, verdict);
      json strata = json::array();
      for (const auto& s : d.strata) strata.push_back(stratum_json(s.orbit, s.isotropy, s.characters, false));
      json j{{"manifest", manifest(c, &ws, "prim", {{"qmax", qmax}, {"ideal", rep.ideal().label}, {"budget", budget}},
                                   "prim/v1")},
             {"ideal", rep.ideal().label},
             {"verdict", to_string(verdict.verdict)},
             {"omega_infinity", d.omega_infinity},
             {"shape", "disjoint union over finite quasi-orbits [x] of {[x]} x dual(G_x), plus the dense point"},
             {"complete", verdict.verdict == Verdict::id},
             {"strata", strata}};
      emit(j, c, out);
      if (verdict.verdict == Verdict::undetermined) return exit_undetermined;
    } else if (equidist->parsed()) {
      auto ws = load_workspace(c.field);
      ToralRep rep(ws.units, pick_ideal(ws, c.ideal));
      const int d = rep.dim();
      std::vector<std::vector<long>> ks;
      for (const auto& t : freq_texts) ks.push_back(parse_longs(t));
      if (ks.empty()) ks = default_frequencies(d);
      for (const auto& k : ks) {
        if (static_cast<int>(k.size()) != d) throw ValidationError("frequency has the wrong dimension");
        bool zero = true;
        for (long v : k) zero = zero && v == 0;
        if (zero) throw ValidationError("frequencies must be nonzero");
      }
      Samples samples;
      std::vector<double> x0;
      if (start == "subtorus") {
        if (scheme != "walk") throw ValidationError("subtorus starts support the walk scheme only");
        auto cm = is_cm(ws.units, budget);
        if (!cm.cm) throw ValidationError("subtorus start needs a CM field (CM test: " + to_string(cm.state) + ")");
        auto sub = real_subtorus(rep, *cm.cm);
        auto t0 = random_start(sub.dim(), seed);
        samples = simulate_subtorus_walk(rep, sub, t0, steps, seed);
        x0.assign(d, 0.0);
        for (int i = 0; i < d; ++i) {
          double s = 0;
          for (int m = 0; m < sub.dim(); ++m) s += sub.basis(i, m).get_d() * t0[m];
          x0[i] = s - std::floor(s);
        }
      } else {
        if (start == "random") {
          x0 = random_start(d, seed);
        } else if (start.find('/') != std::string::npos) {
          for (const auto& r : parse_rationals(start)) x0.push_back(r.get_d());
        } else {
          x0 = parse_doubles(start);
        }
        SimConfig cfg;
        cfg.scheme = scheme == "ball" ? Scheme::ball_enumeration : Scheme::random_walk;
        cfg.radius = radius;
        cfg.steps = steps;
        cfg.seed = seed;
        cfg.start = x0;
        samples = simulate_orbit(rep, cfg);
      }
      auto rep_w = weyl_sums(samples, ks);
      if (!csv.empty()) {
        std::ofstream f(csv, std::ios::binary);
        if (!f) throw ValidationError("cannot write " + csv);
        write_samples_csv(f, samples);
      }
      json mags = json::array();
      for (double m : rep_w.magnitudes) mags.push_back(num(m));
      json start_json = json::array();
      for (double v : x0) start_json.push_back(num(v));
      json j{{"manifest", manifest(c, &ws, "simulate equidist",
                                   {{"start", start},
                                    {"steps", steps},
                                    {"seed", seed},
                                    {"scheme", scheme},
                                    {"radius", radius},
                                    {"ideal", rep.ideal().label}},
                                   "simulate_equidist/v1")},
             {"scheme", scheme == "ball" ? to_string(Scheme::ball_enumeration) : to_string(Scheme::random_walk)},
             {"start", start_json},
             {"samples", rep_w.samples},
             {"frequencies", ks},
             {"magnitudes", mags},
             {"max_magnitude", num(rep_w.max_magnitude())},
             {"heuristic", true}};
      if (!csv.empty()) j["csv"] = csv;
      emit(j, c, out);
    }
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(std::current_exception());
  }
}

}  // namespace torunits::cli
