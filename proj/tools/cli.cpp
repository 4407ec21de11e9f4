#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "genus1/invariants.hpp"
#include "genus1/jacobian.hpp"
#include "genus1/model_io.hpp"
#include "genus1/qseries.hpp"
#include "genus1/reduction.hpp"

namespace genus1::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GenusOneModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_model(text.str());
  } catch (const ParseError& e) {
    throw Error(path + ": " + to_string(e.kind()) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string str(const Rational& r) { return r.to_string(); }

json triple_json(const InvariantTriple& t) {
  return {{"c4", str(t.c4())}, {"c6", str(t.c6())}, {"delta", str(t.delta())}};
}

json invariants_payload(const GenusOneModel& m) {
  json out = triple_json(invariants_of_model(m));
  out["degree"] = model_degree(m);
  if (const auto* w = std::get_if<WeierstrassModel>(&m)) {
    const auto wi = weierstrass_invariants(*w);
    out["b2"] = str(wi.b2);
    out["b4"] = str(wi.b4);
    out["b6"] = str(wi.b6);
  } else if (const auto* q = std::get_if<BinaryQuarticModel>(&m)) {
    const auto h = quartic_part(complete_square(*q));
    const auto ij = quartic_ij(h);
    out["i"] = str(ij.first);
    out["j"] = str(ij.second);
    out["completed_quartic"] = h.to_polynomial().to_string();
  } else if (const auto* t = std::get_if<TernaryCubicModel>(&m)) {
    const auto st = aronhold_ST(*t);
    out["S"] = str(st.first);
    out["T"] = str(st.second);
  } else if (const auto* pair = std::get_if<QuadricPairModel>(&m)) {
    const auto pencil = gram_pencil_quartic(*pair);
    const auto ij = quartic_ij(BinaryQuartic::from_polynomial(pencil));
    out["i"] = str(ij.first);
    out["j"] = str(ij.second);
    out["pencil_quartic"] = pencil.to_string();
  }
  return out;
}

json jacobian_payload(const GenusOneModel& m) {
  const auto w = jacobian_of_model(m);
  json out = triple_json(short_weierstrass_invariants(w));
  out["degree"] = model_degree(m);
  out["g2"] = str(w.g2);
  out["g3"] = str(w.g3);
  out["equation"] = w.to_string();
  return out;
}

json check_payload(const GenusOneModel& m) {
  const auto r = check_invariant_relations(m);
  return {{"degree", r.degree},
          {"alpha", str(r.alpha)},
          {"g2", str(r.jacobian.g2)},
          {"g3", str(r.jacobian.g3)},
          {"c4_model", str(r.model.c4())},
          {"c4_jacobian", str(r.weierstrass.c4())},
          {"c4_expected", str(r.c4_expected)},
          {"c4_ok", r.c4_ok},
          {"c6_model", str(r.model.c6())},
          {"c6_jacobian", str(r.weierstrass.c6())},
          {"c6_expected", str(r.c6_expected)},
          {"c6_ok", r.c6_ok},
          {"delta_model", str(r.model.delta())},
          {"delta_jacobian", str(r.weierstrass.delta())},
          {"delta_expected", str(r.delta_expected)},
          {"delta_ok", r.delta_ok}};
}

json singular_payload(const GenusOneModel& m, std::uint64_t p) {
  const PrimeModulus mod(p);
  json points = json::array();
  json out = {{"degree", model_degree(m)}, {"prime", p}};
  const auto pts = singular_points_mod_p(m, mod);
  for (const auto& pt : pts) points.push_back(pt.to_string());
  out["points"] = points;
  out["count"] = pts.size();
  const auto geometric = geometric_singularity_degree(m, mod);
  out["singular_over_field_degree"] = geometric ? json(*geometric) : json(nullptr);
  out["smooth"] = !geometric.has_value();
  // the discriminant is only defined for p-integral invariants of degree 1..4
  try {
    const auto report = smoothness_report(m, mod);
    out["delta"] = str(report.delta);
    out["delta_vanishes"] = report.delta_vanishes;
    out["consistent"] = report.consistent;
  } catch (const DomainError& e) {
    out["delta_note"] = e.what();
  }
  return out;
}

json pfaffians_payload(const GenusOneModel& m) {
  const auto* pf = std::get_if<PfaffianModel>(&m);
  if (!pf) throw DomainError("pfaffians needs a degree-5 model, got degree " + std::to_string(model_degree(m)));
  json qs = json::array();
  for (const auto& q : pfaffian_quadrics(*pf)) qs.push_back(q.to_string());
  return {{"degree", 5}, {"quadrics", qs}};
}

QSeries form_series(const std::string& form, std::size_t terms) {
  if (form == "D") return discriminant_series(terms);
  if (form == "E4") return eisenstein_series(4, terms);
  if (form == "E6") return eisenstein_series(6, terms);
  const std::string prefix = "E2k:";
  if (form.rfind(prefix, 0) == 0) {
    const std::string w = form.substr(prefix.size());
    if (w.empty() || w.size() > 6 || w.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--form E2k:<w> needs a decimal weight, got '" + form + "'");
    return eisenstein_series(static_cast<unsigned>(std::stoul(w)), terms);
  }
  throw UsageError("--form must be E4, E6, E2k:<w> or D, got '" + form + "'");
}

json qexp_payload(const std::string& form, std::size_t terms, std::optional<std::uint64_t> p) {
  const QSeries s = form_series(form, terms);
  json coeffs = json::array();
  json out = {{"form", form}, {"terms", terms}};
  if (p) {
    const auto reduced = reduce_series(s, PrimeModulus(*p));
    for (const auto& c : reduced) coeffs.push_back(c.to_string());
    out["prime"] = *p;
    out["series"] = series_to_string(reduced);
  } else {
    for (const auto& c : s.coefficients()) coeffs.push_back(str(c));
    out["series"] = s.to_string();
  }
  out["coefficients"] = coeffs;
  return out;
}

std::string plain_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + plain_value(e);
    return "[" + s + "]";
  }
  return v.dump();
}

std::string render_plain(const std::string& command, const json& payload) {
  if (command == "qexp") return payload["series"].get<std::string>() + "\n";
  std::string out;
  for (const auto& [k, v] : payload.items()) out += k + ": " + plain_value(v) + "\n";
  return out;
}

CommandResult failure(int code, const std::string& message, bool plain) {
  CommandResult r;
  r.status = Status::Error;
  r.exit_code = code;
  r.diagnostics.push_back(message);
  r.payload = json::object();
  if (!plain) r.stdout_text = json{{"status", "error"}, {"diagnostics", r.diagnostics}}.dump(2) + "\n";
  return r;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Invariants, Jacobians and reductions of genus one models", "genus1"};
  app.require_subcommand(1);
  bool plain = false;
  std::string file, form;
  std::uint64_t prime = 0;
  std::size_t terms = 0;

  auto add_plain = [&plain](CLI::App* sub) { sub->add_flag("--plain", plain, "Human-readable output"); };
  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Model file (JSON)")->required();
    add_plain(sub);
    return sub;
  };
  auto* invariants = with_file("invariants", "Normalized invariants c4, c6, delta");
  auto* jacobian = with_file("jacobian", "Short Weierstrass form of the Jacobian");
  auto* check = with_file("check", "Compare the model's invariants with its Jacobian's");
  auto* pfaffians = with_file("pfaffians", "The five 4x4 Pfaffians of a degree-5 model");
  auto* singular = with_file("singular", "Singular points of the reduction mod p");
  singular->add_option("--mod", prime, "Prime p")->required();
  auto* qexp = app.add_subcommand("qexp", "q-expansion of E4, E6, E2k or D");
  qexp->add_option("--form", form, "E4 | E6 | E2k:<w> | D")->required();
  qexp->add_option("--terms", terms, "Number of coefficients")->required()->check(CLI::Range(1, 10000));
  auto* qexp_mod = qexp->add_option("--mod", prime, "Reduce modulo a prime");
  add_plain(qexp);
  auto* hasse = app.add_subcommand("hasse", "Check E_{p-1} = 1 mod p");
  hasse->add_option("--prime", prime, "Prime p > 3")->required();
  hasse->add_option("--terms", terms, "Precision")->required()->check(CLI::Range(1, 10000));
  add_plain(hasse);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.stdout_text = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    return failure(2, std::string("usage: ") + e.what(), true);
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    json payload;
    if (sub == invariants) payload = invariants_payload(load_model(file));
    else if (sub == jacobian) payload = jacobian_payload(load_model(file));
    else if (sub == check) payload = check_payload(load_model(file));
    else if (sub == pfaffians) payload = pfaffians_payload(load_model(file));
    else if (sub == singular) payload = singular_payload(load_model(file), prime);
    else if (sub == qexp)
      payload = qexp_payload(form, terms, qexp_mod->count() ? std::optional<std::uint64_t>(prime) : std::nullopt);
    else payload = {{"prime", prime}, {"terms", terms}, {"congruent", hasse_congruence_check(prime, terms)}};

    CommandResult r;
    r.payload = payload;
    r.stdout_text = plain ? render_plain(command, payload) : payload.dump(2) + "\n";
    return r;
  } catch (const UsageError& e) {
    return failure(2, std::string("usage: ") + e.what(), plain);
  } catch (const ReductionError& e) {
    return failure(1, e.what(), plain);
  } catch (const Error& e) {
    return failure(1, e.what(), plain);
  } catch (const std::exception& e) {
    return failure(1, std::string("internal error: ") + e.what(), plain);
  }
}

}  // namespace genus1::cli
